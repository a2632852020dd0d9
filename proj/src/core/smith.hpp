#pragma once

#include <optional>
#include <span>
#include <vector>

#include "matrix.hpp"

namespace coincalc {

/// Smith normal form D = U * A * V with U, V unimodular.
///
/// D is diagonal with nonnegative entries d_0 | d_1 | ... | d_{rank-1} > 0
/// followed by zeros. `u_inverse` is carried along so callers can map
/// reduced coordinates back without a separate inversion.
struct SmithForm {
  Matrix u;
  Matrix u_inverse;
  Matrix d;
  Matrix v;
  std::size_t rank = 0;

  Int diagonal(std::size_t i) const { return i < d.rows() && i < d.cols() ? d(i, i) : 0; }
};

/// Pivoting always picks the nonzero entry of smallest absolute value.
/// Arithmetic is checked; coefficient blow-up surfaces as ErrorKind::Overflow.
SmithForm smith_normal_form(const Matrix& a);

/// Basis (as columns) of the integer kernel {x : A x = 0}.
Matrix integer_nullspace(const Matrix& a);

/// Some integer solution of A x = b, or nullopt when none exists.
std::optional<std::vector<Int>> solve_integer(const Matrix& a, std::span<const Int> b);

}  // namespace coincalc
