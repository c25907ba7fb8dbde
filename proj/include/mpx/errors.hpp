#ifndef MPX_ERRORS_HPP
#define MPX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mpx {

enum class ErrorKind {
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  UnsupportedParameter,
  IneligibleVertex,
  InvalidEdgeId,
  BudgetExceeded,
  EmptyComplex,
  NotAcyclic,
  NotAFacetPermutation,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace mpx

#endif
