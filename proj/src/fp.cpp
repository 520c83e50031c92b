#include "stab2cy/fp.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "stab2cy/errors.hpp"

namespace stab2cy::fp {

Scalar inverse(Scalar x, Scalar p) {
  x = reduce(x, p);
  if (x == 0) throw Error(Errc::InvalidInput, "inverse of zero in F_" + std::to_string(p));
  Scalar result = 1, base = x, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

bool is_prime(Scalar p) noexcept {
  if (p < 2) return false;
  for (Scalar d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Mat::Mat(int rows, int cols, std::vector<Scalar> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != static_cast<std::size_t>(rows) * cols) {
    throw Error(Errc::InvalidInput, "matrix data size mismatch");
  }
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Mat::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Scalar x) { return x == 0; });
}

Mat Mat::col(int j) const {
  Mat c(rows_, 1);
  for (int i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
  return c;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::string to_string(const Mat& a) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < a.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << a(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

Mat mul(const Mat& a, const Mat& b, Scalar p) {
  if (a.cols() != b.rows()) throw Error(Errc::InvalidInput, "mul: shape mismatch");
  Mat c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Scalar x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) = (c(i, j) + x * b(k, j)) % p;
    }
  }
  return c;
}

Mat add(const Mat& a, const Mat& b, Scalar p) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(Errc::InvalidInput, "add: shape mismatch");
  Mat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = (a(i, j) + b(i, j)) % p;
  return c;
}

Mat sub(const Mat& a, const Mat& b, Scalar p) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(Errc::InvalidInput, "sub: shape mismatch");
  Mat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = reduce(a(i, j) - b(i, j), p);
  return c;
}

Mat scale(const Mat& a, Scalar k, Scalar p) {
  k = reduce(k, p);
  Mat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) * k % p;
  return c;
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw Error(Errc::InvalidInput, "hstack: row mismatch");
  Mat c(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw Error(Errc::InvalidInput, "vstack: column mismatch");
  Mat c(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
  return c;
}

Mat block(const Mat& a, const Mat& b, const Mat& c, const Mat& d) {
  return vstack(hstack(a, b), hstack(c, d));
}

Mat slice(const Mat& a, int r0, int nr, int c0, int nc) {
  Mat s(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) s(i, j) = a(r0 + i, c0 + j);
  return s;
}

Mat column(const std::vector<Scalar>& v) {
  return Mat(static_cast<int>(v.size()), 1, v);
}

Rref rref(Mat a, Scalar p) {
  Rref out;
  int row = 0;
  for (int c = 0; c < a.cols() && row < a.rows(); ++c) {
    int piv = -1;
    for (int i = row; i < a.rows(); ++i) {
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row) {
      for (int j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
    }
    const Scalar inv = inverse(a(row, c), p);
    for (int j = c; j < a.cols(); ++j) a(row, j) = a(row, j) * inv % p;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, c) == 0) continue;
      const Scalar f = a(i, c);
      for (int j = c; j < a.cols(); ++j) a(i, j) = reduce(a(i, j) - f * a(row, j), p);
    }
    out.pivots.push_back(c);
    ++row;
  }
  out.r = std::move(a);
  return out;
}

int rank(const Mat& a, Scalar p) { return static_cast<int>(rref(a, p).pivots.size()); }

Mat nullspace(const Mat& a, Scalar p) {
  const Rref rr = rref(a, p);
  const int n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (int c : rr.pivots) is_pivot[c] = true;
  const int k = n - static_cast<int>(rr.pivots.size());
  Mat basis(n, k);
  int col = 0;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    basis(f, col) = 1;
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
      basis(rr.pivots[r], col) = reduce(-rr.r(static_cast<int>(r), f), p);
    }
    ++col;
  }
  return basis;
}

Mat column_basis(const Mat& a, Scalar p) {
  const Rref rr = rref(a, p);
  Mat out(a.rows(), static_cast<int>(rr.pivots.size()));
  for (std::size_t j = 0; j < rr.pivots.size(); ++j) {
    for (int i = 0; i < a.rows(); ++i) out(i, static_cast<int>(j)) = a(i, rr.pivots[j]);
  }
  return out;
}

Mat inverse(const Mat& a, Scalar p) {
  if (a.rows() != a.cols()) throw Error(Errc::InvalidInput, "inverse of a non-square matrix");
  const int n = a.rows();
  const Rref rr = rref(hstack(a, Mat::identity(n)), p);
  if (static_cast<int>(rr.pivots.size()) < n || (n > 0 && rr.pivots[n - 1] != n - 1)) {
    throw Error(Errc::InvalidInput, "singular matrix");
  }
  return slice(rr.r, 0, n, n, n);
}

std::optional<Mat> solve(const Mat& a, const Mat& b, Scalar p) {
  const Rref rr = rref(hstack(a, b), p);
  const int n = a.cols();
  Mat x(n, b.cols());
  for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
    if (rr.pivots[r] >= n) return std::nullopt;
    for (int j = 0; j < b.cols(); ++j) x(rr.pivots[r], j) = rr.r(static_cast<int>(r), n + j);
  }
  return x;
}

Mat complement(const Mat& u, Scalar p) {
  const int n = u.rows();
  const Rref rr = rref(hstack(u, Mat::identity(n)), p);
  std::vector<int> extra;
  for (int c : rr.pivots) {
    if (c >= u.cols()) extra.push_back(c - u.cols());
  }
  Mat w(n, static_cast<int>(extra.size()));
  for (std::size_t j = 0; j < extra.size(); ++j) w(extra[j], static_cast<int>(j)) = 1;
  return w;
}

namespace {

void subspaces_with_pivots(int n, Scalar p, const std::vector<int>& pivots, std::vector<Mat>& out) {
  const int k = static_cast<int>(pivots.size());
  // Free slots: row r, column c > pivots[r], c not a pivot column.
  std::vector<std::pair<int, int>> free;
  for (int r = 0; r < k; ++r) {
    for (int c = pivots[r] + 1; c < n; ++c) {
      if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
    }
  }
  std::vector<Scalar> digits(free.size(), 0);
  while (true) {
    Mat m(k, n);
    for (int r = 0; r < k; ++r) m(r, pivots[r]) = 1;
    for (std::size_t i = 0; i < free.size(); ++i) m(free[i].first, free[i].second) = digits[i];
    out.push_back(std::move(m));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
    if (i == digits.size()) break;
  }
}

}  // namespace

const std::vector<Mat>& all_subspaces(int n, Scalar p) {
  static std::mutex mu;
  static std::map<std::pair<int, Scalar>, std::vector<Mat>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, p});
  if (it != cache.end()) return it->second;
  std::vector<Mat> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> pivots;
    for (int c = 0; c < n; ++c) {
      if (mask & (1 << c)) pivots.push_back(c);
    }
    subspaces_with_pivots(n, p, pivots, out);
  }
  std::sort(out.begin(), out.end());
  return cache.emplace(std::make_pair(n, p), std::move(out)).first->second;
}

std::int64_t count_subspaces(int n, Scalar p) {
  // Sum of Gaussian binomials [n choose k]_p.
  std::int64_t total = 0;
  for (int k = 0; k <= n; ++k) {
    std::int64_t num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
      std::int64_t a = 1, b = 1;
      for (int e = 0; e < n - i; ++e) a *= p;
      for (int e = 0; e < i + 1; ++e) b *= p;
      num *= a - 1;
      den *= b - 1;
    }
    total += num / den;
  }
  return total;
}

std::vector<Mat> general_linear(int n, Scalar p) {
  std::vector<Mat> out;
  std::vector<Scalar> digits(static_cast<std::size_t>(n) * n, 0);
  while (true) {
    Mat m(n, n, digits);
    if (rank(m, p) == n) out.push_back(std::move(m));
    std::size_t i = digits.size();
    // Increment from the last entry so the output is lexicographic.
    while (i > 0 && ++digits[i - 1] == p) digits[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

std::int64_t general_linear_order(int n, Scalar p) {
  std::int64_t pn = 1;
  for (int i = 0; i < n; ++i) pn *= p;
  std::int64_t order = 1, pi = 1;
  for (int i = 0; i < n; ++i) {
    order *= pn - pi;
    pi *= p;
  }
  return order;
}

Subquotient::Subquotient(const Mat& z_basis, const Mat& b_spanning, Scalar p)
    : p_(p), ambient_(z_basis.rows()) {
  const int n = ambient_;
  b_ = b_spanning.cols() > 0 ? column_basis(b_spanning, p) : Mat(n, 0);
  const Mat both = hstack(b_, z_basis);
  const Rref rr = rref(both, p);
  std::vector<int> picked;
  for (int c : rr.pivots) {
    if (c >= b_.cols()) picked.push_back(c - b_.cols());
  }
  reps_ = Mat(n, static_cast<int>(picked.size()));
  for (std::size_t j = 0; j < picked.size(); ++j) {
    for (int i = 0; i < n; ++i) reps_(i, static_cast<int>(j)) = z_basis(i, picked[j]);
  }
  const Mat full = hstack(b_, reps_);
  const int k = full.cols();
  const Rref inv = rref(hstack(full, Mat::identity(n)), p);
  left_inverse_ = slice(inv.r, 0, k, k, n);
}

std::vector<Scalar> Subquotient::coords(const Mat& z) const {
  if (z.rows() != ambient_ || z.cols() != 1) throw Error(Errc::InvalidInput, "coords: shape mismatch");
  const Mat x = mul(left_inverse_, z, p_);
  if (mul(hstack(b_, reps_), x, p_) != z) {
    throw Error(Errc::InvalidInput, "coords: vector is not a cocycle");
  }
  std::vector<Scalar> c(static_cast<std::size_t>(reps_.cols()));
  for (int j = 0; j < reps_.cols(); ++j) c[j] = x(b_.cols() + j, 0);
  return c;
}

Mat Subquotient::element(const std::vector<Scalar>& c) const {
  Mat z(ambient_, 1);
  for (int j = 0; j < reps_.cols(); ++j) {
    for (int i = 0; i < ambient_; ++i) z(i, 0) = (z(i, 0) + c[j] * reps_(i, j)) % p_;
  }
  return z;
}

}  // namespace stab2cy::fp
