#ifndef MPX_SNF_HPP
#define MPX_SNF_HPP

#include <map>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace mpx {

// Sparse integer matrix, row-major with a column occupancy index.
class SparseIntMatrix {
 public:
  SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_(rows), col_rows_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void set(int r, int c, mpz_class v);
  void add(int r, int c, const mpz_class& v);
  mpz_class get(int r, int c) const;

  const std::map<int, mpz_class>& row(int r) const { return row_[static_cast<std::size_t>(r)]; }
  const std::set<int>& rows_with(int c) const { return col_rows_[static_cast<std::size_t>(c)]; }

  std::size_t nonzeros() const;

  std::vector<std::vector<mpz_class>> dense() const;

 private:
  friend struct SnfWorker;
  int rows_, cols_;
  std::vector<std::map<int, mpz_class>> row_;
  std::vector<std::set<int>> col_rows_;
};

// Invariant factors d_1 | d_2 | ... | d_r, all positive.
struct SmithForm {
  std::vector<mpz_class> invariant_factors;

  int rank() const { return static_cast<int>(invariant_factors.size()); }
  std::vector<mpz_class> torsion() const;  // factors > 1
};

// Fraction-free elimination with minimal-magnitude pivoting; transform
// matrices are not retained.
SmithForm smith_normal_form(SparseIntMatrix m);

namespace reference {

// Serial dense implementation kept as the testing and benchmarking baseline.
SmithForm smith_normal_form_dense(std::vector<std::vector<mpz_class>> m);

// Rank over the rationals by Gaussian elimination; independent of the SNF path.
int rational_rank(const std::vector<std::vector<mpz_class>>& m);

}  // namespace reference

}  // namespace mpx

#endif
