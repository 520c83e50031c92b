#include "stab2cy/spectral.hpp"

#include <algorithm>

#include "stab2cy/errors.hpp"

namespace stab2cy {

TwoTermObject make_two_term(PiModule H0, PiModule H1, ExtElement e) {
  validate(H0);
  validate(H1);
  if (H0.p != H1.p) throw Error(Errc::InvalidInput, "cohomology modules over different fields");
  const ExtElement shape = zero_element(2, H1, H0);
  bool ok = e.degree == 2 && e.parts.size() == shape.parts.size();
  for (std::size_t v = 0; ok && v < shape.parts.size(); ++v) {
    const Mat& m = e.parts[v];
    ok = m.rows() == shape.parts[v].rows() && m.cols() == shape.parts[v].cols() &&
         std::all_of(m.data().begin(), m.data().end(), [&](Scalar x) { return x >= 0 && x < H0.p; });
  }
  if (!ok) throw Error(Errc::InvalidInput, "e must be a reduced degree-2 cochain H1 -> H0");
  return TwoTermObject{std::move(H0), std::move(H1), std::move(e)};
}

TwoTermObject module_object(const PiModule& M) {
  const PiModule Z = zero_module(M.p);
  return TwoTermObject{M, Z, zero_element(2, Z, M)};
}

const PiModule& cohomology(const TwoTermObject& E, int i) {
  static thread_local std::map<Scalar, PiModule> zeros;
  if (i == 0) return E.H0;
  if (i == 1) return E.H1;
  auto it = zeros.find(E.H0.p);
  if (it == zeros.end()) it = zeros.emplace(E.H0.p, zero_module(E.H0.p)).first;
  return it->second;
}

namespace {

// e_i(E): H^i E -> H^{i-1} E [2]; only e_1 can be nonzero.
ExtElement e_class(const TwoTermObject& E, int i) {
  if (i == 1) return E.e;
  return zero_element(2, cohomology(E, i), cohomology(E, i - 1));
}

}  // namespace

E2Element e2_zero(const TwoTermObject& E, const TwoTermObject& F, int p, int q) {
  E2Element x{p, q, {}};
  for (int i = 0; i < 2; ++i) x.parts.push_back(zero_element(p, cohomology(E, i), cohomology(F, i + q)));
  return x;
}

E2Element e2_identity(const TwoTermObject& E) {
  return E2Element{0, 0, {identity_element(E.H0), identity_element(E.H1)}};
}

int e2_dim(const TwoTermObject& E, const TwoTermObject& F, int p, int q) {
  int d = 0;
  for (int i = 0; i < 2; ++i) d += static_cast<int>(ext_dims(cohomology(E, i), cohomology(F, i + q)).at(p));
  return d;
}

E2Element d2(const TwoTermObject& E, const TwoTermObject& F, const E2Element& x) {
  const Scalar p = E.H0.p;
  E2Element y{x.p + 2, x.q - 1, {}};
  if (x.p + 2 > 2) return y;
  const Scalar sign = (x.p + x.q) % 2 == 0 ? 1 : p - 1;
  for (int i = 0; i < 2; ++i) {
    ExtElement out = zero_element(x.p + 2, cohomology(E, i), cohomology(F, i + x.q - 1));
    if (i - 1 >= 0) {
      out = add(out, scale(compose(x.parts[i - 1], e_class(E, i), p), sign, p), p);
    }
    const ExtElement second = compose(e_class(F, i + x.q), x.parts[i], p);
    out = add(out, scale(second, p - 1, p), p);
    y.parts.push_back(std::move(out));
  }
  return y;
}

bool e2_is_zero_class(const TwoTermObject& E, const TwoTermObject& F, const E2Element& x) {
  for (std::size_t i = 0; i < x.parts.size(); ++i) {
    const int ii = static_cast<int>(i);
    const ExtGroup G(cohomology(E, ii), cohomology(F, ii + x.q), x.p);
    if (!G.is_zero_class(x.parts[i])) return false;
  }
  return true;
}

Mat d2_matrix(const TwoTermObject& E, const TwoTermObject& F, int q) {
  std::vector<ExtGroup> src, dst;
  int n_src = 0, n_dst = 0;
  for (int i = 0; i < 2; ++i) {
    src.emplace_back(cohomology(E, i), cohomology(F, i + q), 0);
    dst.emplace_back(cohomology(E, i), cohomology(F, i + q - 1), 2);
    n_src += src.back().dim();
    n_dst += dst.back().dim();
  }
  Mat m(n_dst, n_src);
  int col = 0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < src[i].dim(); ++j, ++col) {
      E2Element x = e2_zero(E, F, 0, q);
      x.parts[i] = src[i].basis(j);
      const E2Element y = d2(E, F, x);
      int row = 0;
      for (int k = 0; k < 2; ++k) {
        for (Scalar c : dst[k].coords(y.parts[k])) m(row++, col) = c;
      }
    }
  }
  return m;
}

E3Page e3_page(const TwoTermObject& E, const TwoTermObject& F) {
  const Scalar p = E.H0.p;
  E3Page page;
  // H^i E -> H^{i+q} F is nonzero only for q in {-1, 0, 1}; q = 2 enters as
  // the (zero) source of d_2 into E_2^{2,1}.
  for (int q = -1; q <= 1; ++q) {
    for (int pp = 0; pp <= 2; ++pp) page.e2[{pp, q}] = e2_dim(E, F, pp, q);
  }
  for (int q = -1; q <= 2; ++q) {
    page.d2_rank[q] = q <= 1 ? fp::rank(d2_matrix(E, F, q), p) : 0;
  }
  for (int q = -1; q <= 1; ++q) {
    page.e3[{0, q}] = page.e2[{0, q}] - page.d2_rank[q];
    page.e3[{1, q}] = page.e2[{1, q}];
    page.e3[{2, q}] = page.e2[{2, q}] - page.d2_rank[q + 1];
  }
  for (const auto& [pq, dim] : page.e3) {
    if (dim != 0) page.total[pq.first + pq.second] += dim;
  }
  return page;
}

GradedDims hom_dims_via_E3(const TwoTermObject& E, const TwoTermObject& F) { return e3_page(E, F).total; }

SubquotientReport subquotient_inequality_check(const TwoTermObject& E, const TwoTermObject& F, int q) {
  const E3Page page = e3_page(E, F);
  auto at = [](const auto& m, const auto& k) -> std::int64_t {
    auto it = m.find(k);
    return it == m.end() ? 0 : it->second;
  };
  SubquotientReport r;
  r.q = q;
  r.hom = at(page.total, static_cast<std::int64_t>(1 + q));
  r.kernel = e2_dim(E, F, 0, q + 1) - at(page.d2_rank, q + 1);
  r.cokernel = e2_dim(E, F, 2, q - 1) - at(page.d2_rank, q);
  if (E == F) r.middle = e2_dim(E, F, 1, q);
  return r;
}

bool sphericality_test(const TwoTermObject& E) {
  std::int64_t total = 0;
  for (const auto& [n, dim] : hom_dims_via_E3(E, E)) total += dim;
  return total == 2;
}

}  // namespace stab2cy
