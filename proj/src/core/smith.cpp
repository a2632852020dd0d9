#include "smith.hpp"

#include <algorithm>

namespace coincalc {
namespace {

// Keeps D, U, U^{-1} and V consistent under elementary operations.
class SmithWork {
 public:
  explicit SmithWork(const Matrix& a)
      : s_{Matrix::identity(a.rows()), Matrix::identity(a.rows()), a, Matrix::identity(a.cols()), 0} {}

  SmithForm& form() { return s_; }
  Matrix& d() { return s_.d; }

  // row[target] += f * row[source]
  void row_add(std::size_t target, std::size_t source, Int f) {
    s_.d.add_row_multiple(target, source, f);
    s_.u.add_row_multiple(target, source, f);
    s_.u_inverse.add_col_multiple(source, target, checked::neg(f));
  }
  void col_add(std::size_t target, std::size_t source, Int f) {
    s_.d.add_col_multiple(target, source, f);
    s_.v.add_col_multiple(target, source, f);
  }
  void row_swap(std::size_t a, std::size_t b) {
    s_.d.swap_rows(a, b);
    s_.u.swap_rows(a, b);
    s_.u_inverse.swap_cols(a, b);
  }
  void col_swap(std::size_t a, std::size_t b) {
    s_.d.swap_cols(a, b);
    s_.v.swap_cols(a, b);
  }
  void row_negate(std::size_t i) {
    s_.d.negate_row(i);
    s_.u.negate_row(i);
    s_.u_inverse.negate_col(i);
  }

 private:
  SmithForm s_;
};

struct Position {
  std::size_t row;
  std::size_t col;
};

std::optional<Position> smallest_nonzero(const Matrix& d, std::size_t from) {
  std::optional<Position> best;
  Int best_abs = 0;
  for (std::size_t i = from; i < d.rows(); ++i)
    for (std::size_t j = from; j < d.cols(); ++j) {
      Int x = d(i, j);
      if (x == 0) continue;
      Int ax = checked::abs(x);
      if (!best || ax < best_abs) {
        best = Position{i, j};
        best_abs = ax;
      }
    }
  return best;
}

// Smallest nonzero entry in column t below the pivot or row t right of it.
std::optional<Position> smallest_in_cross(const Matrix& d, std::size_t t) {
  std::optional<Position> best;
  Int best_abs = 0;
  auto consider = [&](std::size_t i, std::size_t j) {
    Int x = d(i, j);
    if (x == 0) return;
    Int ax = checked::abs(x);
    if (!best || ax < best_abs) {
      best = Position{i, j};
      best_abs = ax;
    }
  };
  for (std::size_t i = t + 1; i < d.rows(); ++i) consider(i, t);
  for (std::size_t j = t + 1; j < d.cols(); ++j) consider(t, j);
  return best;
}

}  // namespace

SmithForm smith_normal_form(const Matrix& a) {
  SmithWork w(a);
  Matrix& d = w.d();
  const std::size_t limit = std::min(d.rows(), d.cols());
  std::size_t t = 0;
  for (; t < limit; ++t) {
    auto pivot = smallest_nonzero(d, t);
    if (!pivot) break;
    w.row_swap(t, pivot->row);
    w.col_swap(t, pivot->col);

    for (;;) {
      for (std::size_t i = t + 1; i < d.rows(); ++i)
        if (d(i, t) != 0) w.row_add(i, t, checked::neg(checked::nearest_quotient(d(i, t), d(t, t))));
      for (std::size_t j = t + 1; j < d.cols(); ++j)
        if (d(t, j) != 0) w.col_add(j, t, checked::neg(checked::nearest_quotient(d(t, j), d(t, t))));

      if (auto rest = smallest_in_cross(d, t)) {
        // Remainders are strictly smaller than the pivot; promote one.
        if (rest->col == t)
          w.row_swap(t, rest->row);
        else
          w.col_swap(t, rest->col);
        continue;
      }

      bool divisible = true;
      for (std::size_t i = t + 1; i < d.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(i, j) % d(t, t) != 0) {
            w.row_add(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (d(t, t) < 0) w.row_negate(t);
  }
  w.form().rank = t;
  return std::move(w.form());
}

Matrix integer_nullspace(const Matrix& a) {
  SmithForm s = smith_normal_form(a);
  return s.v.column_block(s.rank, a.cols() - s.rank);
}

std::optional<std::vector<Int>> solve_integer(const Matrix& a, std::span<const Int> b) {
  if (b.size() != a.rows()) fail(ErrorKind::InvalidArgument, "right-hand side length mismatch");
  SmithForm s = smith_normal_form(a);
  std::vector<Int> c = s.u * b;
  std::vector<Int> y(a.cols(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < s.rank) {
      Int di = s.d(i, i);
      if (c[i] % di != 0) return std::nullopt;
      y[i] = c[i] / di;
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return s.v * std::span<const Int>(y);
}

}  // namespace coincalc
