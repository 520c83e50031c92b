#pragma once

// Dense linear algebra over a prime field F_p. Entries are kept reduced in
// [0, p); p must stay below 2^31 so products fit in 64 bits.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stab2cy::fp {

using Scalar = std::int64_t;

inline Scalar reduce(Scalar x, Scalar p) noexcept {
  x %= p;
  return x < 0 ? x + p : x;
}
Scalar inverse(Scalar x, Scalar p);
bool is_prime(Scalar p) noexcept;

class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}
  Mat(int rows, int cols, std::vector<Scalar> data);

  static Mat identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  Scalar operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const std::vector<Scalar>& data() const noexcept { return data_; }

  bool is_zero() const noexcept;
  Mat col(int j) const;
  Mat transpose() const;

  friend bool operator==(const Mat&, const Mat&) = default;
  friend auto operator<=>(const Mat&, const Mat&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

std::string to_string(const Mat& a);

Mat mul(const Mat& a, const Mat& b, Scalar p);
Mat add(const Mat& a, const Mat& b, Scalar p);
Mat sub(const Mat& a, const Mat& b, Scalar p);
Mat scale(const Mat& a, Scalar k, Scalar p);
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
/// [[a, b], [c, d]]; blocks must have matching sizes.
Mat block(const Mat& a, const Mat& b, const Mat& c, const Mat& d);
/// Rows [r0, r0 + nr), columns [c0, c0 + nc).
Mat slice(const Mat& a, int r0, int nr, int c0, int nc);
/// Column vector from a flat list.
Mat column(const std::vector<Scalar>& v);

struct Rref {
  Mat r;
  std::vector<int> pivots;
};
Rref rref(Mat a, Scalar p);
int rank(const Mat& a, Scalar p);
/// Columns form a basis of {x : a x = 0}.
Mat nullspace(const Mat& a, Scalar p);
/// A maximal independent subset of the columns of a, in order.
Mat column_basis(const Mat& a, Scalar p);
/// Errc::InvalidInput when a is singular.
Mat inverse(const Mat& a, Scalar p);
/// Some x with a x = b, if one exists.
std::optional<Mat> solve(const Mat& a, const Mat& b, Scalar p);

/// Basis columns of the standard vectors completing the columns of u to a
/// basis of F_p^n (u must have independent columns).
Mat complement(const Mat& u, Scalar p);

/// Row-reduced bases (k x n, k = 0..n) of every subspace of F_p^n, ordered
/// by dimension and then lexicographically by the reduced matrix.
const std::vector<Mat>& all_subspaces(int n, Scalar p);
/// Number of subspaces of F_p^n without building them.
std::int64_t count_subspaces(int n, Scalar p);

/// All invertible n x n matrices, in lexicographic order of their entries.
std::vector<Mat> general_linear(int n, Scalar p);
std::int64_t general_linear_order(int n, Scalar p);

/// Presentation of a subquotient Z / B of F_p^n, where B is contained in Z.
/// Representatives are chosen among the columns of the Z basis.
class Subquotient {
 public:
  Subquotient() = default;
  Subquotient(const Mat& z_basis, const Mat& b_spanning, Scalar p);

  int dim() const noexcept { return reps_.cols(); }
  int ambient() const noexcept { return ambient_; }
  /// Columns are cocycle representatives of a basis of Z / B.
  const Mat& reps() const noexcept { return reps_; }
  /// Coordinates of z (a column in Z) in the rep basis. Errc::InvalidInput
  /// when z is not in Z.
  std::vector<Scalar> coords(const Mat& z) const;
  /// The combination of reps with the given coordinates.
  Mat element(const std::vector<Scalar>& c) const;

 private:
  Scalar p_ = 2;
  int ambient_ = 0;
  Mat b_;     // basis of B
  Mat reps_;  // complement of B inside Z
  Mat left_inverse_;  // of [b_ | reps_], applied to get coordinates
};

}  // namespace stab2cy::fp
