#include "stab2cy/pimod.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include <omp.h>

#include "stab2cy/errors.hpp"

namespace stab2cy {

using fp::add;
using fp::hstack;
using fp::mul;
using fp::rank;
using fp::sub;

const char* to_string(Arrow a) noexcept {
  switch (a) {
    case Arrow::A1: return "A1";
    case Arrow::A2: return "A2";
    case Arrow::B1: return "B1";
    case Arrow::B2: return "B2";
  }
  return "?";
}

PiModule semisimple_module(int d0, int d1, Scalar p) {
  PiModule M;
  M.p = p;
  M.d0 = d0;
  M.d1 = d1;
  for (Arrow a : kArrows) M.arrow(a) = Mat(M.dim(target(a)), M.dim(source(a)));
  return M;
}

PiModule zero_module(Scalar p) { return semisimple_module(0, 0, p); }

PiModule simple_module(int v, Scalar p) {
  if (v != 0 && v != 1) throw Error(Errc::InvalidInput, "vertex must be 0 or 1");
  return v == 0 ? semisimple_module(1, 0, p) : semisimple_module(0, 1, p);
}

PiModule make_module(int d0, int d1, Mat A1, Mat A2, Mat B1, Mat B2, Scalar p) {
  PiModule M;
  M.p = p;
  M.d0 = d0;
  M.d1 = d1;
  M.arrows = {std::move(A1), std::move(A2), std::move(B1), std::move(B2)};
  validate(M);
  return M;
}

bool satisfies_relations(const PiModule& M) {
  const Scalar p = M.p;
  const Mat r1 = add(mul(M.arrow(Arrow::A1), M.arrow(Arrow::B1), p),
                     mul(M.arrow(Arrow::A2), M.arrow(Arrow::B2), p), p);
  const Mat r0 = add(mul(M.arrow(Arrow::B1), M.arrow(Arrow::A1), p),
                     mul(M.arrow(Arrow::B2), M.arrow(Arrow::A2), p), p);
  return r1.is_zero() && r0.is_zero();
}

bool is_nilpotent(const PiModule& M) {
  const Scalar p = M.p;
  Mat U0 = Mat::identity(M.d0), U1 = Mat::identity(M.d1);
  for (int step = 0; step <= M.total_dim(); ++step) {
    if (U0.cols() == 0 && U1.cols() == 0) return true;
    const Mat next1 = fp::column_basis(
        hstack(mul(M.arrow(Arrow::A1), U0, p), mul(M.arrow(Arrow::A2), U0, p)), p);
    const Mat next0 = fp::column_basis(
        hstack(mul(M.arrow(Arrow::B1), U1, p), mul(M.arrow(Arrow::B2), U1, p)), p);
    U0 = next0;
    U1 = next1;
  }
  return U0.cols() == 0 && U1.cols() == 0;
}

void validate(const PiModule& M) {
  if (M.p < 2 || M.p >= (Scalar{1} << 31) || !fp::is_prime(M.p)) {
    throw Error(Errc::InvalidModule, "field order must be a prime below 2^31");
  }
  if (M.d0 < 0 || M.d1 < 0) throw Error(Errc::InvalidModule, "negative dimension");
  for (Arrow a : kArrows) {
    const Mat& m = M.arrow(a);
    if (m.rows() != M.dim(target(a)) || m.cols() != M.dim(source(a))) {
      throw Error(Errc::InvalidModule, std::string("wrong shape for ") + to_string(a));
    }
    for (Scalar x : m.data()) {
      if (x < 0 || x >= M.p) throw Error(Errc::InvalidModule, "entry outside [0, p)");
    }
  }
  if (!satisfies_relations(M)) throw Error(Errc::InvalidModule, "preprojective relations fail");
  if (!is_nilpotent(M)) throw Error(Errc::InvalidModule, "module is not nilpotent");
}

PiModule direct_sum(const PiModule& M, const PiModule& N) {
  if (M.p != N.p) throw Error(Errc::InvalidInput, "direct_sum over different fields");
  PiModule S = semisimple_module(M.d0 + N.d0, M.d1 + N.d1, M.p);
  for (Arrow a : kArrows) {
    const Mat& x = M.arrow(a);
    const Mat& y = N.arrow(a);
    Mat& z = S.arrow(a);
    for (int i = 0; i < x.rows(); ++i)
      for (int j = 0; j < x.cols(); ++j) z(i, j) = x(i, j);
    for (int i = 0; i < y.rows(); ++i)
      for (int j = 0; j < y.cols(); ++j) z(x.rows() + i, x.cols() + j) = y(i, j);
  }
  return S;
}

PiModule direct_power(const PiModule& M, int n) {
  PiModule S = zero_module(M.p);
  for (int i = 0; i < n; ++i) S = direct_sum(S, M);
  return S;
}

PiModule dual(const PiModule& M) {
  PiModule D = semisimple_module(M.d0, M.d1, M.p);
  D.arrow(Arrow::A1) = M.arrow(Arrow::B1).transpose();
  D.arrow(Arrow::A2) = M.arrow(Arrow::B2).transpose();
  D.arrow(Arrow::B1) = M.arrow(Arrow::A1).transpose();
  D.arrow(Arrow::B2) = M.arrow(Arrow::A2).transpose();
  return D;
}

PiModule transform(const PiModule& M, const Mat& g0, const Mat& g1) {
  const Scalar p = M.p;
  const Mat g0i = fp::inverse(g0, p), g1i = fp::inverse(g1, p);
  PiModule T = M;
  for (Arrow a : {Arrow::A1, Arrow::A2}) T.arrow(a) = mul(mul(g1, M.arrow(a), p), g0i, p);
  for (Arrow a : {Arrow::B1, Arrow::B2}) T.arrow(a) = mul(mul(g0, M.arrow(a), p), g1i, p);
  return T;
}

std::vector<Scalar> encoding(const PiModule& M) {
  std::vector<Scalar> code = {M.d0, M.d1};
  for (Arrow a : kArrows) {
    const auto& d = M.arrow(a).data();
    code.insert(code.end(), d.begin(), d.end());
  }
  return code;
}

PiModule decode(const std::vector<Scalar>& code, Scalar p) {
  if (code.size() < 2) throw Error(Errc::InvalidInput, "short module encoding");
  PiModule M = semisimple_module(static_cast<int>(code[0]), static_cast<int>(code[1]), p);
  std::size_t pos = 2;
  for (Arrow a : kArrows) {
    Mat& m = M.arrow(a);
    const std::size_t n = static_cast<std::size_t>(m.rows()) * m.cols();
    if (pos + n > code.size()) throw Error(Errc::InvalidInput, "short module encoding");
    m = Mat(m.rows(), m.cols(), std::vector<Scalar>(code.begin() + pos, code.begin() + pos + n));
    pos += n;
  }
  return M;
}

// ---------------------------------------------------------------------------

namespace {

struct Shape {
  std::vector<std::pair<int, int>> blocks;  // rows, cols per part
  int size() const {
    int s = 0;
    for (auto [r, c] : blocks) s += r * c;
    return s;
  }
};

Shape shape_of(int degree, const PiModule& M, const PiModule& N) {
  Shape s;
  if (degree == 1) {
    for (Arrow a : kArrows) s.blocks.emplace_back(N.dim(target(a)), M.dim(source(a)));
  } else {
    for (int v = 0; v < 2; ++v) s.blocks.emplace_back(N.dim(v), M.dim(v));
  }
  return s;
}

ExtElement d0_apply(const ExtElement& f, const PiModule& M, const PiModule& N) {
  const Scalar p = M.p;
  ExtElement g{1, {}};
  for (Arrow a : kArrows) {
    const int s = source(a), t = target(a);
    g.parts.push_back(sub(mul(f.parts[t], M.arrow(a), p), mul(N.arrow(a), f.parts[s], p), p));
  }
  return g;
}

ExtElement d1_apply(const ExtElement& g, const PiModule& M, const PiModule& N) {
  const Scalar p = M.p;
  auto part = [&](Arrow a) -> const Mat& { return g.parts[static_cast<int>(a)]; };
  Mat v1(N.d1, M.d1), v0(N.d0, M.d0);
  for (auto [A, B] : {std::pair{Arrow::A1, Arrow::B1}, std::pair{Arrow::A2, Arrow::B2}}) {
    v1 = add(v1, mul(N.arrow(A), part(B), p), p);
    v1 = add(v1, mul(part(A), M.arrow(B), p), p);
    v0 = add(v0, mul(N.arrow(B), part(A), p), p);
    v0 = add(v0, mul(part(B), M.arrow(A), p), p);
  }
  return ExtElement{2, {v0, v1}};
}

template <class F>
Mat matrix_of(int in_degree, int out_degree, const PiModule& M, const PiModule& N, F&& f) {
  const int n_in = shape_of(in_degree, M, N).size();
  const int n_out = shape_of(out_degree, M, N).size();
  Mat m(n_out, n_in);
  for (int j = 0; j < n_in; ++j) {
    Mat e(n_in, 1);
    e(j, 0) = 1;
    const Mat img = flatten(f(unflatten(in_degree, M, N, e)));
    for (int i = 0; i < n_out; ++i) m(i, j) = img(i, 0);
  }
  return m;
}

}  // namespace

ExtElement zero_element(int degree, const PiModule& M, const PiModule& N) {
  if (degree < 0 || degree > 2) throw Error(Errc::DegreeOutOfRange, "degree " + std::to_string(degree));
  ExtElement x{degree, {}};
  for (auto [r, c] : shape_of(degree, M, N).blocks) x.parts.emplace_back(r, c);
  return x;
}

ExtElement identity_element(const PiModule& M) {
  return ExtElement{0, {Mat::identity(M.d0), Mat::identity(M.d1)}};
}

Mat flatten(const ExtElement& x) {
  std::vector<Scalar> v;
  for (const Mat& m : x.parts) v.insert(v.end(), m.data().begin(), m.data().end());
  return fp::column(v);
}

ExtElement unflatten(int degree, const PiModule& M, const PiModule& N, const Mat& v) {
  const Shape s = shape_of(degree, M, N);
  if (v.rows() != s.size() || v.cols() != 1) throw Error(Errc::InvalidInput, "unflatten: size mismatch");
  ExtElement x{degree, {}};
  int pos = 0;
  for (auto [r, c] : s.blocks) {
    std::vector<Scalar> d(v.data().begin() + pos, v.data().begin() + pos + r * c);
    x.parts.emplace_back(r, c, std::move(d));
    pos += r * c;
  }
  return x;
}

ExtElement add(const ExtElement& x, const ExtElement& y, Scalar p) {
  if (x.degree != y.degree || x.parts.size() != y.parts.size()) {
    throw Error(Errc::InvalidInput, "adding cochains of different shape");
  }
  ExtElement z{x.degree, {}};
  for (std::size_t i = 0; i < x.parts.size(); ++i) z.parts.push_back(fp::add(x.parts[i], y.parts[i], p));
  return z;
}

ExtElement scale(const ExtElement& x, Scalar k, Scalar p) {
  ExtElement z{x.degree, {}};
  for (const Mat& m : x.parts) z.parts.push_back(fp::scale(m, k, p));
  return z;
}

ExtComplex ext_complex(const PiModule& M, const PiModule& N) {
  if (M.p != N.p) throw Error(Errc::InvalidInput, "modules over different fields");
  ExtComplex c;
  c.n0 = shape_of(0, M, N).size();
  c.n1 = shape_of(1, M, N).size();
  c.n2 = shape_of(2, M, N).size();
  c.d0 = matrix_of(0, 1, M, N, [&](const ExtElement& f) { return d0_apply(f, M, N); });
  c.d1 = matrix_of(1, 2, M, N, [&](const ExtElement& g) { return d1_apply(g, M, N); });
  return c;
}

HomDims ext_dims(const PiModule& M, const PiModule& N) {
  const ExtComplex c = ext_complex(M, N);
  const int r0 = rank(c.d0, M.p), r1 = rank(c.d1, M.p);
  return HomDims{c.n0 - r0, c.n1 - r1 - r0, c.n2 - r1};
}

bool is_cocycle(const ExtElement& x, const PiModule& M, const PiModule& N) {
  switch (x.degree) {
    case 0: {
      const ExtElement g = d0_apply(x, M, N);
      return std::all_of(g.parts.begin(), g.parts.end(), [](const Mat& m) { return m.is_zero(); });
    }
    case 1: {
      const ExtElement g = d1_apply(x, M, N);
      return std::all_of(g.parts.begin(), g.parts.end(), [](const Mat& m) { return m.is_zero(); });
    }
    case 2: return true;
    default: throw Error(Errc::DegreeOutOfRange, "degree " + std::to_string(x.degree));
  }
}

ExtGroup::ExtGroup(const PiModule& M, const PiModule& N, int degree) : M_(M), N_(N), degree_(degree) {
  const ExtComplex c = ext_complex(M, N);
  const Scalar p = M.p;
  switch (degree) {
    case 0: sq_ = fp::Subquotient(fp::nullspace(c.d0, p), Mat(c.n0, 0), p); break;
    case 1: sq_ = fp::Subquotient(fp::nullspace(c.d1, p), c.d0, p); break;
    case 2: sq_ = fp::Subquotient(Mat::identity(c.n2), c.d1, p); break;
    default: throw Error(Errc::DegreeOutOfRange, "degree " + std::to_string(degree));
  }
}

ExtElement ExtGroup::basis(int j) const { return unflatten(degree_, M_, N_, sq_.reps().col(j)); }

std::vector<Scalar> ExtGroup::coords(const ExtElement& x) const {
  if (x.degree != degree_) throw Error(Errc::InvalidInput, "coords: degree mismatch");
  return sq_.coords(flatten(x));
}

ExtElement ExtGroup::element(const std::vector<Scalar>& c) const {
  return unflatten(degree_, M_, N_, sq_.element(c));
}

bool ExtGroup::is_zero_class(const ExtElement& x) const {
  const auto c = coords(x);
  return std::all_of(c.begin(), c.end(), [](Scalar s) { return s == 0; });
}

ExtElement compose(const ExtElement& x, const ExtElement& y, Scalar p) {
  const int deg = x.degree + y.degree;
  if (deg > 2) throw Error(Errc::DegreeOverflow, "Yoneda product lands in degree " + std::to_string(deg));
  ExtElement z{deg, {}};
  if (x.degree == 0 && y.degree == 1) {
    for (Arrow a : kArrows) z.parts.push_back(mul(x.parts[target(a)], y.parts[static_cast<int>(a)], p));
  } else if (x.degree == 1 && y.degree == 0) {
    for (Arrow a : kArrows) z.parts.push_back(mul(x.parts[static_cast<int>(a)], y.parts[source(a)], p));
  } else if (x.degree == 1 && y.degree == 1) {
    auto xa = [&](Arrow a) -> const Mat& { return x.parts[static_cast<int>(a)]; };
    auto ya = [&](Arrow a) -> const Mat& { return y.parts[static_cast<int>(a)]; };
    const Mat v0 = add(mul(xa(Arrow::B1), ya(Arrow::A1), p), mul(xa(Arrow::B2), ya(Arrow::A2), p), p);
    const Mat v1 = add(mul(xa(Arrow::A1), ya(Arrow::B1), p), mul(xa(Arrow::A2), ya(Arrow::B2), p), p);
    z.parts = {v0, v1};
  } else {
    // Vertex-indexed on both sides.
    for (int v = 0; v < 2; ++v) z.parts.push_back(mul(x.parts[v], y.parts[v], p));
  }
  return z;
}

// ---------------------------------------------------------------------------

bool is_invariant(const PiModule& M, const Subobject& U) {
  for (Arrow a : kArrows) {
    const Mat& Us = source(a) == 0 ? U.U0 : U.U1;
    const Mat& Ut = target(a) == 0 ? U.U0 : U.U1;
    const Mat img = mul(M.arrow(a), Us, M.p);
    if (img.is_zero()) continue;
    if (rank(hstack(Ut, img), M.p) != Ut.cols()) return false;
  }
  return true;
}

PiModule restrict_to(const PiModule& M, const Subobject& U) {
  PiModule S = semisimple_module(U.U0.cols(), U.U1.cols(), M.p);
  for (Arrow a : kArrows) {
    const Mat& Us = source(a) == 0 ? U.U0 : U.U1;
    const Mat& Ut = target(a) == 0 ? U.U0 : U.U1;
    const auto x = fp::solve(Ut, mul(M.arrow(a), Us, M.p), M.p);
    if (!x) throw Error(Errc::InvalidInput, "subspace pair is not a submodule");
    S.arrow(a) = *x;
  }
  return S;
}

PiModule quotient(const PiModule& M, const Subobject& U) {
  const Scalar p = M.p;
  std::array<Mat, 2> W, P;
  for (int v = 0; v < 2; ++v) {
    const Mat& Uv = v == 0 ? U.U0 : U.U1;
    W[v] = fp::complement(Uv, p);
    const Mat inv = fp::inverse(hstack(Uv, W[v]), p);
    P[v] = fp::slice(inv, Uv.cols(), W[v].cols(), 0, M.dim(v));
  }
  PiModule Q = semisimple_module(W[0].cols(), W[1].cols(), p);
  for (Arrow a : kArrows) Q.arrow(a) = mul(mul(P[target(a)], M.arrow(a), p), W[source(a)], p);
  return Q;
}

namespace {

void check_enumerable(const PiModule& M, std::int64_t n0, std::int64_t n1) {
  if (M.d0 > 4 || M.d1 > 4 || n0 * n1 > kMaxSubspacePairs) {
    throw Error(Errc::TooLarge, "submodule enumeration at dimension (" + std::to_string(M.d0) +
                                    ", " + std::to_string(M.d1) + ") over F_" + std::to_string(M.p));
  }
}

std::vector<Subobject> collect(const std::vector<Mat>& S0, const std::vector<Mat>& S1,
                               const std::vector<char>& keep) {
  std::vector<Subobject> out;
  const std::size_t n1 = S1.size();
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (keep[k]) out.push_back({S0[k / n1].transpose(), S1[k % n1].transpose()});
  }
  std::stable_sort(out.begin(), out.end(), [](const Subobject& x, const Subobject& y) {
    return x.U0.cols() + x.U1.cols() < y.U0.cols() + y.U1.cols();
  });
  return out;
}

}  // namespace

std::vector<Subobject> list_subobjects(const PiModule& M) {
  check_enumerable(M, fp::count_subspaces(M.d0, M.p), fp::count_subspaces(M.d1, M.p));
  const auto& S0 = fp::all_subspaces(M.d0, M.p);
  const auto& S1 = fp::all_subspaces(M.d1, M.p);
  const std::int64_t total = static_cast<std::int64_t>(S0.size() * S1.size());
  std::vector<char> keep(static_cast<std::size_t>(total), 0);
  const std::int64_t n1 = static_cast<std::int64_t>(S1.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t k = 0; k < total; ++k) {
    const Subobject U{S0[k / n1].transpose(), S1[k % n1].transpose()};
    keep[k] = is_invariant(M, U) ? 1 : 0;
  }
  return collect(S0, S1, keep);
}

std::vector<Subobject> list_subobjects_serial(const PiModule& M) {
  check_enumerable(M, fp::count_subspaces(M.d0, M.p), fp::count_subspaces(M.d1, M.p));
  const auto& S0 = fp::all_subspaces(M.d0, M.p);
  const auto& S1 = fp::all_subspaces(M.d1, M.p);
  std::vector<char> keep(S0.size() * S1.size(), 0);
  for (std::size_t i = 0; i < S0.size(); ++i) {
    for (std::size_t j = 0; j < S1.size(); ++j) {
      keep[i * S1.size() + j] = is_invariant(M, {S0[i].transpose(), S1[j].transpose()}) ? 1 : 0;
    }
  }
  return collect(S0, S1, keep);
}

// ---------------------------------------------------------------------------

bool iso_test(const PiModule& M, const PiModule& N, std::int64_t max_elements) {
  if (M.d0 != N.d0 || M.d1 != N.d1 || M.p != N.p) return false;
  if (M.is_zero()) return true;
  if (M == N) return true;
  if (ext_dims(M, M) != ext_dims(N, N) || ext_dims(M, N).d0 != ext_dims(N, M).d0) return false;
  const ExtGroup H(M, N, 0);
  const int h = H.dim();
  std::int64_t count = 1;
  for (int i = 0; i < h; ++i) {
    count *= M.p;
    if (count > max_elements) {
      throw Error(Errc::TooLarge, "Hom space of dimension " + std::to_string(h) + " too large to search");
    }
  }
  std::vector<ExtElement> basis;
  for (int j = 0; j < h; ++j) basis.push_back(H.basis(j));
  std::vector<Scalar> c(h, 0);
  for (std::int64_t n = 0; n < count; ++n) {
    std::int64_t r = n;
    for (int j = 0; j < h; ++j) {
      c[j] = r % M.p;
      r /= M.p;
    }
    Mat f0(M.d0, M.d0), f1(M.d1, M.d1);
    for (int j = 0; j < h; ++j) {
      if (c[j] == 0) continue;
      f0 = fp::add(f0, fp::scale(basis[j].parts[0], c[j], M.p), M.p);
      f1 = fp::add(f1, fp::scale(basis[j].parts[1], c[j], M.p), M.p);
    }
    if (rank(f0, M.p) == M.d0 && rank(f1, M.p) == M.d1) return true;
  }
  return false;
}

namespace {

constexpr std::int64_t kMaxOrbitSize = 600'000;

// Canonical forms. The first nonzero arrow (in A1, A2, B1, B2 order) is
// brought to rank normal form N_r; the arrows before it are zero. Its
// position and rank are isomorphism invariants, and two modules in this
// shape are isomorphic iff an element of the stabilizer of N_r relates them,
// so the orbit minimum only runs over that stabilizer.
struct StabTable {
  std::vector<Mat> g0, g0inv, g1, g1inv;
};

Mat rank_normal_form(int rows, int cols, int r) {
  Mat m(rows, cols);
  for (int i = 0; i < r; ++i) m(i, i) = 1;
  return m;
}

const StabTable& stab_table(int d0, int d1, bool b_type, int r, Scalar p) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, bool, int, Scalar>, StabTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({d0, d1, b_type, r, p});
  if (it != cache.end()) return it->second;
  const Mat N = b_type ? rank_normal_form(d0, d1, r) : rank_normal_form(d1, d0, r);
  const auto G0 = fp::general_linear(d0, p);
  const auto G1 = fp::general_linear(d1, p);
  StabTable t;
  for (const Mat& g1 : G1) {
    for (const Mat& g0 : G0) {
      const bool fixes = b_type ? mul(g0, N, p) == mul(N, g1, p) : mul(g1, N, p) == mul(N, g0, p);
      if (!fixes) continue;
      t.g0.push_back(g0);
      t.g0inv.push_back(fp::inverse(g0, p));
      t.g1.push_back(g1);
      t.g1inv.push_back(fp::inverse(g1, p));
    }
  }
  return cache.emplace(std::make_tuple(d0, d1, b_type, r, p), std::move(t)).first->second;
}

// (P, Qinv) invertible with P A Qinv^-1 = N_r.
std::pair<Mat, Mat> rank_normalizer(const Mat& A, Scalar p) {
  const int rows = A.rows(), cols = A.cols();
  const fp::Rref rr = fp::rref(hstack(A, Mat::identity(rows)), p);
  const Mat P = fp::slice(rr.r, 0, rows, cols, rows);
  const Mat R = mul(P, A, p);
  const fp::Rref rA = fp::rref(A, p);
  const int r = static_cast<int>(rA.pivots.size());
  // R = N_r Qinv with Qinv = [top rows of R; unit rows at non-pivot columns].
  Mat Qinv(cols, cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < cols; ++j) Qinv(i, j) = R(i, j);
  int row = r;
  for (int j = 0; j < cols; ++j) {
    if (std::find(rA.pivots.begin(), rA.pivots.end(), j) == rA.pivots.end()) Qinv(row++, j) = 1;
  }
  return {P, Qinv};
}

struct Normalized {
  PiModule module;
  const StabTable* table = nullptr;  // null for the semisimple module
};

Normalized normalize(const PiModule& M) {
  for (Arrow a : kArrows) {
    const Mat& X = M.arrow(a);
    if (X.is_zero()) continue;
    const auto [P, Qinv] = rank_normalizer(X, M.p);
    const bool b_type = source(a) == 1;
    const PiModule N = b_type ? transform(M, P, Qinv) : transform(M, Qinv, P);
    return {N, &stab_table(M.d0, M.d1, b_type, fp::rank(X, M.p), M.p)};
  }
  return {M, nullptr};
}

// Orbit minimum of the encoding. Entries are produced in encoding order and
// compared against the best code so far, so most group elements are
// abandoned after a few entries.
std::vector<Scalar> canonical_code(const PiModule& M, const StabTable& t) {
  const Scalar p = M.p;
  std::vector<Scalar> best = encoding(M);
  std::vector<Scalar> code(best.size());
  std::vector<Scalar> tmp;
  code[0] = M.d0;
  code[1] = M.d1;
  for (std::size_t i = 0; i < t.g0.size(); ++i) {
    {
      int state = 0;  // 0: equal to best so far, -1: already smaller
      std::size_t pos = 2;
      bool pruned = false;
      for (Arrow a : kArrows) {
        const Mat& X = M.arrow(a);
        const Mat& L = source(a) == 0 ? t.g1[i] : t.g0[i];
        const Mat& R = source(a) == 0 ? t.g0inv[i] : t.g1inv[i];
        const int rows = X.rows(), cols = X.cols();
        tmp.assign(static_cast<std::size_t>(rows) * cols, 0);
        for (int r = 0; r < rows; ++r)
          for (int k = 0; k < cols; ++k) {
            const Scalar x = X(r, k);
            if (x == 0) continue;
            for (int c = 0; c < cols; ++c) tmp[r * cols + c] = (tmp[r * cols + c] + x * R(k, c)) % p;
          }
        for (int r = 0; r < rows && !pruned; ++r) {
          for (int c = 0; c < cols; ++c) {
            Scalar e = 0;
            for (int k = 0; k < rows; ++k) e = (e + L(r, k) * tmp[k * cols + c]) % p;
            code[pos] = e;
            if (state == 0) {
              if (e > best[pos]) {
                pruned = true;
                break;
              }
              if (e < best[pos]) state = -1;
            }
            ++pos;
          }
        }
        if (pruned) break;
      }
      if (!pruned && state == -1) best = code;
    }
  }
  return best;
}

std::vector<Mat> rank_normal_forms(int rows, int cols) {
  std::vector<Mat> out;
  for (int r = 0; r <= std::min(rows, cols); ++r) {
    Mat m(rows, cols);
    for (int i = 0; i < r; ++i) m(i, i) = 1;
    out.push_back(std::move(m));
  }
  return out;
}

struct CandidateSpace {
  int d0, d1;
  Scalar p;
  std::vector<Mat> a1_forms;
  int free_entries;
  std::int64_t per_form;
  std::int64_t total;
};

CandidateSpace candidate_space(int d0, int d1, Scalar p) {
  CandidateSpace cs{d0, d1, p, rank_normal_forms(d1, d0), 3 * d0 * d1, 1, 0};
  for (int i = 0; i < cs.free_entries; ++i) {
    cs.per_form *= p;
    if (cs.per_form > kMaxCandidates) {
      throw Error(Errc::TooLarge, "module enumeration at (" + std::to_string(d0) + ", " + std::to_string(d1) + ")");
    }
  }
  cs.total = cs.per_form * static_cast<std::int64_t>(cs.a1_forms.size());
  if (cs.total > kMaxCandidates) {
    throw Error(Errc::TooLarge, "module enumeration at (" + std::to_string(d0) + ", " + std::to_string(d1) + ")");
  }
  if (!canonical_form_available(d0, d1, p)) {
    throw Error(Errc::TooLarge, "canonical forms unavailable at (" + std::to_string(d0) + ", " + std::to_string(d1) + ")");
  }
  return cs;
}

// The k-th candidate: A1 fixed to a rank normal form (every orbit meets one),
// the other three matrices read off base-p digits of k.
PiModule candidate(const CandidateSpace& cs, std::int64_t k) {
  PiModule M = semisimple_module(cs.d0, cs.d1, cs.p);
  M.arrow(Arrow::A1) = cs.a1_forms[static_cast<std::size_t>(k / cs.per_form)];
  std::int64_t r = k % cs.per_form;
  for (Arrow a : {Arrow::A2, Arrow::B1, Arrow::B2}) {
    Mat& m = M.arrow(a);
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = 0; j < m.cols(); ++j) {
        m(i, j) = r % cs.p;
        r /= cs.p;
      }
    }
  }
  return M;
}

std::vector<PiModule> decode_all(const std::set<std::vector<Scalar>>& codes, Scalar p) {
  std::vector<PiModule> out;
  out.reserve(codes.size());
  for (const auto& c : codes) out.push_back(decode(c, p));
  return out;
}

}  // namespace

bool canonical_form_available(int d0, int d1, Scalar p) {
  const std::int64_t g0 = fp::general_linear_order(d0, p);
  const std::int64_t g1 = fp::general_linear_order(d1, p);
  return g0 <= kMaxOrbitSize && g1 <= kMaxOrbitSize && g0 * g1 <= kMaxOrbitSize;
}

PiModule canonical_form(const PiModule& M) {
  if (!canonical_form_available(M.d0, M.d1, M.p)) {
    throw Error(Errc::TooLarge, "canonical form at (" + std::to_string(M.d0) + ", " + std::to_string(M.d1) + ")");
  }
  const Normalized n = normalize(M);
  return n.table ? decode(canonical_code(n.module, *n.table), M.p) : M;
}

std::vector<PiModule> enumerate_modules(int d0, int d1, Scalar p) {
  const CandidateSpace cs = candidate_space(d0, d1, p);
  std::set<std::vector<Scalar>> codes;
#pragma omp parallel
  {
    std::set<std::vector<Scalar>> local;
#pragma omp for schedule(dynamic, 4096)
    for (std::int64_t k = 0; k < cs.total; ++k) {
      const PiModule M = candidate(cs, k);
      if (!satisfies_relations(M) || !is_nilpotent(M)) continue;
      local.insert(encoding(canonical_form(M)));
    }
#pragma omp critical
    codes.insert(local.begin(), local.end());
  }
  return decode_all(codes, p);
}

std::vector<PiModule> enumerate_modules_serial(int d0, int d1, Scalar p) {
  const CandidateSpace cs = candidate_space(d0, d1, p);
  std::set<std::vector<Scalar>> codes;
  for (std::int64_t k = 0; k < cs.total; ++k) {
    const PiModule M = candidate(cs, k);
    if (!satisfies_relations(M) || !is_nilpotent(M)) continue;
    codes.insert(encoding(canonical_form(M)));
  }
  return decode_all(codes, p);
}

std::vector<PiModule> enumerate_modules_up_to(int max0, int max1, Scalar p) {
  std::vector<PiModule> out;
  for (int d0 = 0; d0 <= max0; ++d0) {
    for (int d1 = 0; d1 <= max1; ++d1) {
      if (d0 + d1 == 0) continue;
      const auto part = enumerate_modules(d0, d1, p);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  return out;
}

PiModule extension(const PiModule& A, const PiModule& C, const ExtElement& zeta) {
  if (zeta.degree != 1 || !is_cocycle(zeta, C, A)) {
    throw Error(Errc::InvalidModule, "extension datum is not a degree-1 cocycle");
  }
  PiModule X = semisimple_module(A.d0 + C.d0, A.d1 + C.d1, A.p);
  for (Arrow a : kArrows) {
    const Mat zero(C.dim(target(a)), A.dim(source(a)));
    X.arrow(a) = fp::block(A.arrow(a), zeta.parts[static_cast<int>(a)], zero, C.arrow(a));
  }
  return X;
}

namespace {

Scalar draw(std::mt19937_64& rng, Scalar p) { return static_cast<Scalar>(rng() % static_cast<std::uint64_t>(p)); }

Mat random_invertible(int n, std::mt19937_64& rng, Scalar p) {
  while (true) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = draw(rng, p);
    if (rank(m, p) == n) return m;
  }
}

ExtElement random_cocycle(const PiModule& M, const PiModule& N, std::mt19937_64& rng) {
  const ExtComplex c = ext_complex(M, N);
  const Mat Z = fp::nullspace(c.d1, M.p);
  Mat v(c.n1, 1);
  for (int j = 0; j < Z.cols(); ++j) {
    const Scalar k = draw(rng, M.p);
    for (int i = 0; i < c.n1; ++i) v(i, 0) = (v(i, 0) + k * Z(i, j)) % M.p;
  }
  return unflatten(1, M, N, v);
}

}  // namespace

PiModule random_module(int d0, int d1, std::mt19937_64& rng, Scalar p) {
  std::vector<int> order(d0, 0);
  order.insert(order.end(), d1, 1);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
  PiModule M = zero_module(p);
  for (int v : order) {
    const PiModule S = simple_module(v, p);
    if (rng() % 2 == 0) {
      M = extension(M, S, random_cocycle(S, M, rng));
    } else {
      M = extension(S, M, random_cocycle(M, S, rng));
    }
  }
  return transform(M, random_invertible(d0, rng, p), random_invertible(d1, rng, p));
}

// ---------------------------------------------------------------------------

bool TwistCohomology::concentrated() const noexcept {
  return (hm1.is_zero() ? 0 : 1) + (h0.is_zero() ? 0 : 1) + (h1.is_zero() ? 0 : 1) <= 1;
}

TwistCohomology twist_simple(int v, const PiModule& M) {
  const Scalar p = M.p;
  const PiModule S = simple_module(v, p);

  // The image of Hom(S, M) (x) S -> M is the part of M_v killed by every
  // arrow leaving v; the evaluation is injective, so H^-1 = 0.
  Mat out_of_v(0, M.dim(v));
  for (Arrow a : kArrows) {
    if (source(a) == v) out_of_v = fp::vstack(out_of_v, M.arrow(a));
  }
  const Mat K = fp::nullspace(out_of_v, p);
  Subobject U{Mat(M.d0, 0), Mat(M.d1, 0)};
  (v == 0 ? U.U0 : U.U1) = K;
  const PiModule C = quotient(M, U);

  std::array<Mat, 2> W, P;
  for (int w = 0; w < 2; ++w) {
    const Mat& Uw = w == 0 ? U.U0 : U.U1;
    W[w] = fp::complement(Uw, p);
    P[w] = fp::slice(fp::inverse(hstack(Uw, W[w]), p), Uw.cols(), W[w].cols(), 0, M.dim(w));
  }

  const ExtGroup ext1(S, M, 1);
  const int h = ext1.dim();
  const PiModule top = direct_power(S, h);
  ExtElement zeta = zero_element(1, top, C);
  for (Arrow a : kArrows) {
    if (source(a) != v) continue;
    Mat& z = zeta.parts[static_cast<int>(a)];
    for (int j = 0; j < h; ++j) {
      const Mat col = mul(P[target(a)], ext1.basis(j).parts[static_cast<int>(a)], p);
      for (int i = 0; i < z.rows(); ++i) z(i, j) = col(i, 0);
    }
  }

  TwistCohomology out;
  out.hm1 = zero_module(p);
  out.h0 = extension(C, top, zeta);
  out.h1 = direct_power(S, ext_dims(M, S).d0);
  return out;
}

TwistCohomology inverse_twist_simple(int v, const PiModule& M) {
  const TwistCohomology t = twist_simple(v, dual(M));
  return TwistCohomology{dual(t.h1), dual(t.h0), dual(t.hm1)};
}

// ---------------------------------------------------------------------------

std::vector<Subobject> PiCategory::list_subobjects(const PiModule& M) const {
  return parallel_ ? stab2cy::list_subobjects(M) : list_subobjects_serial(M);
}

std::vector<std::int64_t> PiCategory::order_key(const PiModule& X) const {
  std::vector<std::int64_t> key = {X.d0, X.d1};
  if (canonical_form_available(X.d0, X.d1, X.p)) {
    const auto code = encoding(canonical_form(X));
    key.insert(key.end(), code.begin(), code.end());
    return key;
  }
  for (int v = 0; v < 2; ++v) {
    const PiModule S = simple_module(v, X.p);
    key.push_back(ext_dims(S, X).d0);
    key.push_back(ext_dims(X, S).d0);
  }
  key.push_back(ext_dims(X, X).d0);
  const auto code = encoding(X);
  key.insert(key.end(), code.begin(), code.end());
  return key;
}

}  // namespace stab2cy
