#include "mpx/snf.hpp"

#include <algorithm>
#include <cassert>

namespace mpx {

void SparseIntMatrix::set(int r, int c, mpz_class v) {
  auto& row = row_[static_cast<std::size_t>(r)];
  if (v == 0) {
    if (row.erase(c)) col_rows_[static_cast<std::size_t>(c)].erase(r);
    return;
  }
  if (row.emplace(c, v).second)
    col_rows_[static_cast<std::size_t>(c)].insert(r);
  else
    row[c] = std::move(v);
}

void SparseIntMatrix::add(int r, int c, const mpz_class& v) {
  if (v == 0) return;
  auto& row = row_[static_cast<std::size_t>(r)];
  auto it = row.find(c);
  if (it == row.end()) {
    row.emplace(c, v);
    col_rows_[static_cast<std::size_t>(c)].insert(r);
    return;
  }
  it->second += v;
  if (it->second == 0) {
    row.erase(it);
    col_rows_[static_cast<std::size_t>(c)].erase(r);
  }
}

mpz_class SparseIntMatrix::get(int r, int c) const {
  const auto& row = row_[static_cast<std::size_t>(r)];
  auto it = row.find(c);
  return it == row.end() ? mpz_class(0) : it->second;
}

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : row_) n += r.size();
  return n;
}

std::vector<std::vector<mpz_class>> SparseIntMatrix::dense() const {
  std::vector<std::vector<mpz_class>> d(static_cast<std::size_t>(rows_),
                                        std::vector<mpz_class>(static_cast<std::size_t>(cols_), 0));
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : row_[static_cast<std::size_t>(r)])
      d[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
  return d;
}

std::vector<mpz_class> SmithForm::torsion() const {
  std::vector<mpz_class> t;
  for (const auto& d : invariant_factors)
    if (d > 1) t.push_back(d);
  return t;
}

namespace {

// quotient with |a - q*p| <= |p|/2
mpz_class rounded_div(const mpz_class& a, const mpz_class& p) {
  mpz_class q = a / p;  // truncated
  mpz_class r = a - q * p;
  if (2 * abs(r) > abs(p)) q += (sgn(r) == sgn(p)) ? 1 : -1;
  return q;
}

// Diagonal values to the divisibility chain: diag(a, b) ~ diag(gcd, lcm).
std::vector<mpz_class> smooth_diagonal(std::vector<mpz_class> d) {
  std::sort(d.begin(), d.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        if (d[j] % d[i] == 0) continue;
        mpz_class g = gcd(d[i], d[j]);
        d[j] = d[i] / g * d[j];
        d[i] = g;
        changed = true;
      }
    }
    if (changed) std::sort(d.begin(), d.end());
  }
  return d;
}

}  // namespace

struct SnfWorker {
  SparseIntMatrix m;
  std::vector<mpz_class> diag;

  explicit SnfWorker(SparseIntMatrix mat) : m(std::move(mat)) {}

  bool find_pivot(int& pr, int& pc) {
    bool found = false;
    mpz_class best_abs;
    std::size_t best_cost = 0;
    for (int r = 0; r < m.rows(); ++r) {
      const auto& row = m.row_[static_cast<std::size_t>(r)];
      if (row.empty()) continue;
      std::size_t rl = row.size() - 1;
      for (const auto& [c, v] : row) {
        mpz_class a = abs(v);
        std::size_t cost = rl * (m.col_rows_[static_cast<std::size_t>(c)].size() - 1);
        if (!found || a < best_abs || (a == best_abs && cost < best_cost)) {
          found = true;
          best_abs = a;
          best_cost = cost;
          pr = r;
          pc = c;
          if (best_abs == 1 && best_cost == 0) return true;
        }
      }
    }
    return found;
  }

  // row[r2] -= q * row[r]
  void row_op(int r2, int r, const mpz_class& q) {
    // snapshot to avoid iterating a map that add() mutates
    std::vector<std::pair<int, mpz_class>> src(m.row_[static_cast<std::size_t>(r)].begin(),
                                               m.row_[static_cast<std::size_t>(r)].end());
    for (const auto& [c, v] : src) m.add(r2, c, -q * v);
  }

  // col[c2] -= q * col[pc]
  void col_op(int c2, int pc, const mpz_class& q) {
    std::vector<int> src(m.col_rows_[static_cast<std::size_t>(pc)].begin(),
                         m.col_rows_[static_cast<std::size_t>(pc)].end());
    for (int r : src) m.add(r, c2, -q * m.get(r, pc));
  }

  // Divisibility-first elimination: rounded reductions are applied only to
  // entries the pivot does not divide (moving the pivot onto the smaller
  // remainder), and the final clearing uses exact quotients. Mixing rounded
  // reduction with clearing lets the off-pivot entries explode.
  void eliminate(int pr, int pc) {
  restart:
    mpz_class p = m.get(pr, pc);
    for (int r : m.col_rows_[static_cast<std::size_t>(pc)]) {
      if (r == pr) continue;
      mpz_class a = m.get(r, pc);
      if (a % p != 0) {
        row_op(r, pr, rounded_div(a, p));
        pr = r;  // the remainder is strictly smaller than |p|
        goto restart;
      }
    }
    for (const auto& [c, v] : m.row_[static_cast<std::size_t>(pr)]) {
      if (c == pc) continue;
      if (v % p != 0) {
        col_op(c, pc, rounded_div(v, p));
        pc = c;
        goto restart;
      }
    }
    // every neighbor is an exact multiple: clear the column, then the row
    // (the column is a singleton by then, so each column op is one update)
    for (;;) {
      int r2 = -1;
      for (int r : m.col_rows_[static_cast<std::size_t>(pc)])
        if (r != pr) {
          r2 = r;
          break;
        }
      if (r2 < 0) break;
      row_op(r2, pr, mpz_class(m.get(r2, pc) / p));
    }
    for (;;) {
      int c2 = -1;
      for (const auto& [c, v] : m.row_[static_cast<std::size_t>(pr)])
        if (c != pc) {
          c2 = c;
          break;
        }
      if (c2 < 0) break;
      col_op(c2, pc, mpz_class(m.get(pr, c2) / p));
    }
    diag.push_back(abs(p));
    m.set(pr, pc, 0);
  }

  SmithForm run() {
    int pr, pc;
    while (find_pivot(pr, pc)) eliminate(pr, pc);
    return SmithForm{smooth_diagonal(std::move(diag))};
  }
};

SmithForm smith_normal_form(SparseIntMatrix m) { return SnfWorker(std::move(m)).run(); }

namespace reference {

SmithForm smith_normal_form_dense(std::vector<std::vector<mpz_class>> m) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::vector<mpz_class> diag;
  std::size_t top = 0;
  while (top < rows && top < cols) {
    // minimal-magnitude pivot in the trailing submatrix
    std::size_t pr = top, pc = top;
    bool found = false;
    for (std::size_t r = top; r < rows; ++r)
      for (std::size_t c = top; c < cols; ++c) {
        if (m[r][c] == 0) continue;
        if (!found || abs(m[r][c]) < abs(m[pr][pc])) {
          pr = r;
          pc = c;
          found = true;
        }
      }
    if (!found) break;
    std::swap(m[top], m[pr]);
    for (std::size_t r = 0; r < rows; ++r) std::swap(m[r][top], m[r][pc]);
    // Divisibility-first, as in the sparse path: reduce a non-multiple and
    // promote the remainder to the pivot; clear with exact quotients only.
    bool reduced = true;
    while (reduced) {
      reduced = false;
      for (std::size_t r = top + 1; r < rows && !reduced; ++r) {
        if (m[r][top] % m[top][top] == 0) continue;
        mpz_class q = rounded_div(m[r][top], m[top][top]);
        for (std::size_t c = top; c < cols; ++c) m[r][c] -= q * m[top][c];
        std::swap(m[top], m[r]);
        reduced = true;
      }
      for (std::size_t c = top + 1; c < cols && !reduced; ++c) {
        if (m[top][c] % m[top][top] == 0) continue;
        mpz_class q = rounded_div(m[top][c], m[top][top]);
        for (std::size_t r = top; r < rows; ++r) m[r][c] -= q * m[r][top];
        for (std::size_t r = 0; r < rows; ++r) std::swap(m[r][top], m[r][c]);
        reduced = true;
      }
    }
    for (std::size_t r = top + 1; r < rows; ++r) {
      if (m[r][top] == 0) continue;
      mpz_class q = m[r][top] / m[top][top];
      for (std::size_t c = top; c < cols; ++c) m[r][c] -= q * m[top][c];
    }
    for (std::size_t c = top + 1; c < cols; ++c) {
      if (m[top][c] == 0) continue;
      mpz_class q = m[top][c] / m[top][top];
      for (std::size_t r = top; r < rows; ++r) m[r][c] -= q * m[r][top];
    }
    diag.push_back(abs(m[top][top]));
    ++top;
  }
  return SmithForm{smooth_diagonal(std::move(diag))};
}

int rational_rank(const std::vector<std::vector<mpz_class>>& m_in) {
  std::vector<std::vector<mpq_class>> m;
  m.reserve(m_in.size());
  for (const auto& row : m_in) {
    std::vector<mpq_class> q(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) q[i] = row[i];
    m.push_back(std::move(q));
  }
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  int rank = 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[static_cast<std::size_t>(rank)], m[piv]);
    auto& prow = m[static_cast<std::size_t>(rank)];
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
      mpq_class f = m[r][c] / prow[c];
      for (std::size_t cc = c; cc < cols; ++cc) m[r][cc] -= f * prow[cc];
    }
    ++rank;
  }
  return rank;
}

}  // namespace reference

}  // namespace mpx
