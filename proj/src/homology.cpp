#include "stratikit/homology.hpp"

#include <algorithm>

namespace stratikit {

std::string DimensionReport::to_string() const {
  if (value) return std::to_string(*value);
  return "AboveCutoff(" + std::to_string(cutoff) + ")";
}

template <class K>
ProjResolution<K> min_proj_resolution(const Module<K>& m, std::size_t k) {
  ProjResolution<K> res;
  res.module = m;
  res.syzygies.push_back(m);
  for (std::size_t i = 0; i <= k; ++i) {
    const Module<K>& cur = res.syzygies.back();
    if (cur.dim() == 0) break;
    const auto& pres = cur.presentation();
    res.terms.push_back(pres.p0);
    res.term_vertices.push_back(pres.top_vertices);
    res.covers.push_back(pres.cover);
    res.inclusions.push_back(pres.syzygy.inclusion);
    Module<K> next = pres.syzygy.module;
    res.syzygies.push_back(next);
  }
  res.complete = res.syzygies.back().dim() == 0;
  return res;
}

namespace {

template <class K>
std::size_t projective_hom_dim(const std::vector<std::size_t>& vertices, const Module<K>& n) {
  std::size_t d = 0;
  for (auto v : vertices) d += n.vertex_space(v).dim();
  return d;
}

template <class K>
void require_terms(const ProjResolution<K>& res, std::size_t i) {
  if (res.syzygies.size() <= i && !res.complete)
    throw Error(ErrorKind::InvalidInput, "resolution too short for Ext^" + std::to_string(i));
}

template <class K>
Module<K> syzygy_at(const ProjResolution<K>& res, std::size_t i) {
  if (i < res.syzygies.size()) return res.syzygies[i];
  return zero_module(res.module.algebra_ptr());
}

}  // namespace

template <class K>
std::size_t ext_dim(const ProjResolution<K>& res, const Module<K>& n, std::size_t i) {
  require_terms(res, i);
  if (i == 0) return hom_space(res.module, n).dim();
  if (i >= res.syzygies.size()) return 0;
  const Module<K>& s = res.syzygies[i];
  if (s.dim() == 0) return 0;
  // Hom(syz^i, N) modulo restrictions from P_(i-1); maps P_(i-1) -> N killing
  // syz^i are exactly Hom(syz^(i-1), N).
  const std::size_t h = hom_space(s, n).dim();
  const std::size_t p = projective_hom_dim(res.term_vertices[i - 1], n);
  const std::size_t back = hom_space(res.syzygies[i - 1], n).dim();
  return h + back - p;
}

template <class K>
std::size_t ext_dim(const Module<K>& m, const Module<K>& n, std::size_t i) {
  return ext_dim(min_proj_resolution(m, i), n, i);
}

template <class K>
ExtSpace<K> ext_space(const ProjResolution<K>& res, const Module<K>& n, std::size_t i) {
  require_terms(res, i);
  ExtSpace<K> out;
  out.degree = i;
  out.syzygy = syzygy_at(res, i);
  if (out.syzygy.dim() == 0) return out;
  auto h = hom_space(out.syzygy, n);
  if (i == 0) {
    out.representatives = h.basis();
    out.dim = h.dim();
    return out;
  }
  auto g = hom_space(res.terms[i - 1], n);
  RowSpace<K> liftable(n.field(), h.dim());
  for (const auto& f : g.basis()) {
    auto c = h.coordinates(matmul(res.inclusions[i - 1], f));
    if (!c) throw Error(ErrorKind::InternalInconsistency, "restriction of a morphism is not a morphism");
    liftable.insert(*c);
  }
  for (std::size_t b = 0; b < h.dim(); ++b)
    if (liftable.insert(unit_vec(n.field(), h.dim(), b))) out.representatives.push_back(h[b]);
  out.dim = out.representatives.size();
  return out;
}

template <class K>
ExtSpace<K> ext_space(const Module<K>& m, const Module<K>& n, std::size_t i) {
  return ext_space(min_proj_resolution(m, i), n, i);
}

template <class K>
DimensionReport projective_dimension(const Module<K>& m, std::size_t cutoff) {
  if (m.dim() == 0) return DimensionReport::of(0, cutoff);
  auto res = min_proj_resolution(m, cutoff);
  if (res.complete) return DimensionReport::of(res.length(), cutoff);
  return DimensionReport::above(cutoff);
}

template <class K>
DimensionReport injective_dimension(const Module<K>& m, std::size_t cutoff) {
  return projective_dimension(dual_module(m), cutoff);
}

template <class K>
DimensionReport global_dim(const AlgebraPtr<K>& a, std::size_t cutoff) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < a->num_vertices(); ++i) {
    auto pd = projective_dimension(simple_module(a, i), cutoff);
    if (!pd.finite()) return DimensionReport::above(cutoff);
    best = std::max(best, *pd.value);
  }
  return DimensionReport::of(best, cutoff);
}

template <class K>
std::vector<bool> projective_injective_vertices(const AlgebraPtr<K>& a) {
  std::vector<bool> out;
  for (std::size_t i = 0; i < a->num_vertices(); ++i) out.push_back(is_injective(projective_module(a, i)));
  return out;
}

namespace {

// Leading terms of the minimal projective resolution whose summands all lie in `good`.
template <class K>
DimensionReport leading_good_terms(const Module<K>& m, const std::vector<bool>& good, std::size_t cutoff) {
  Module<K> cur = m;
  for (std::size_t j = 0; j < cutoff; ++j) {
    if (cur.dim() == 0) return DimensionReport::above(cutoff);
    const auto& pres = cur.presentation();
    for (auto v : pres.top_vertices)
      if (!good[v]) return DimensionReport::of(j, cutoff);
    Module<K> next = pres.syzygy.module;
    cur = next;
  }
  return DimensionReport::above(cutoff);
}

}  // namespace

template <class K>
DimensionReport dominant_dim(const Module<K>& m, std::size_t cutoff) {
  // I^j = D(P_j) for the resolution of D M; it is projective iff P_j is injective over the opposite.
  auto dm = dual_module(m);
  return leading_good_terms(dm, projective_injective_vertices(dm.algebra_ptr()), cutoff);
}

template <class K>
DimensionReport codominant_dim(const Module<K>& m, std::size_t cutoff) {
  return leading_good_terms(m, projective_injective_vertices(m.algebra_ptr()), cutoff);
}

template <class K>
DimensionReport dominant_dim(const AlgebraPtr<K>& a, std::size_t cutoff) {
  return dominant_dim(regular_module(a), cutoff);
}

template <class K>
GorensteinReport gorenstein_dim(const AlgebraPtr<K>& a, std::size_t cutoff) {
  auto op = a->opposite();
  auto max_pd = [&](const AlgebraPtr<K>& b) {
    std::size_t best = 0;
    for (std::size_t i = 0; i < b->num_vertices(); ++i) {
      auto pd = projective_dimension(injective_module(b, i), cutoff);
      if (!pd.finite()) return DimensionReport::above(cutoff);
      best = std::max(best, *pd.value);
    }
    return DimensionReport::of(best, cutoff);
  };
  GorensteinReport r;
  // id(A_A) = pd over the opposite of D(A_A), the sum of its injectives.
  r.right = max_pd(op);
  r.left = max_pd(a);
  if (r.right.finite() && r.left.finite()) {
    if (*r.right.value != *r.left.value)
      throw Error(ErrorKind::InternalInconsistency, "left and right injective dimensions of A differ");
    r.dim = r.right;
  } else {
    r.dim = DimensionReport::above(cutoff);
  }
  return r;
}

template <class K>
bool is_gorenstein_projective(const Module<K>& m, std::optional<std::size_t> gdim) {
  if (!gdim) throw Error(ErrorKind::PreconditionUnverified, "Gorenstein dimension not established");
  if (*gdim == 0 || m.dim() == 0) return true;
  auto res = min_proj_resolution(m, *gdim);
  const auto& a = m.algebra_ptr();
  for (std::size_t i = 1; i <= *gdim; ++i)
    for (std::size_t j = 0; j < a->num_vertices(); ++j)
      if (ext_dim(res, projective_module(a, j), i) != 0) return false;
  return true;
}

template <class K>
UniversalExtension<K> universal_extension(const Module<K>& x, const Module<K>& d) {
  const K& k = x.field();
  UniversalExtension<K> out;
  auto res = min_proj_resolution(d, 1);
  auto ext = ext_space(res, x, 1);
  out.t = ext.dim;
  if (out.t == 0) {
    out.module = x;
    out.inclusion = Matrix<K>::identity(k, x.dim());
    out.projection = Matrix<K>(k, x.dim(), 0);
    return out;
  }
  const std::size_t t = out.t;
  const Module<K>& p0 = res.terms[0];
  const Matrix<K>& incl = res.inclusions[0];  // syz -> P_0
  const std::size_t dx = x.dim(), dp = p0.dim();
  std::vector<Module<K>> parts{x};
  for (std::size_t r = 0; r < t; ++r) parts.push_back(p0);
  Module<K> w = direct_sum(x.algebra_ptr(), parts);
  Matrix<K> rel(k, 0, w.dim());
  const Module<K>& syz = ext.syzygy;
  for (std::size_t r = 0; r < t; ++r) {
    const Matrix<K>& f = ext.representatives[r];
    for (std::size_t b = 0; b < syz.dim(); ++b) {
      Vec<K> row(w.dim(), k.zero());
      for (std::size_t c = 0; c < dx; ++c) row[c] = f(b, c);
      for (std::size_t c = 0; c < dp; ++c) row[dx + r * dp + c] = k.neg(incl(b, c));
      rel.append_row(row);
    }
  }
  auto q = quotient_module(w, rel);
  out.module = q.module;
  out.inclusion = Matrix<K>(k, dx, q.module.dim());
  for (std::size_t c = 0; c < dx; ++c) out.inclusion.set_row(c, q.projection.row(c));
  // W -> D^t kills X and maps each P_0 copy through the cover; it factors
  // through E, whose basis vectors are images of ambient unit vectors.
  const std::size_t dd = d.dim();
  out.projection = Matrix<K>(k, q.module.dim(), t * dd);
  const Matrix<K>& cover = res.covers[0];
  for (std::size_t amb = 0; amb < w.dim(); ++amb) {
    Vec<K> pr = q.projection.row(amb);
    std::size_t nz = 0, pos = 0;
    for (std::size_t c = 0; c < pr.size(); ++c)
      if (!k.is_zero(pr[c])) {
        ++nz;
        pos = c;
      }
    if (nz != 1 || !k.is_one(pr[pos])) continue;
    Vec<K> img(t * dd, k.zero());
    if (amb >= dx) {
      std::size_t r = (amb - dx) / dp, c = (amb - dx) % dp;
      for (std::size_t s = 0; s < dd; ++s) img[r * dd + s] = cover(c, s);
    }
    out.projection.set_row(pos, img);
  }
  if (ext_dim(d, d, 1) == 0 && ext_dim(d, out.module, 1) != 0)
    throw Error(ErrorKind::InternalInconsistency, "universal extension did not kill Ext^1");
  return out;
}

#define STRATIKIT_INSTANTIATE_HOMOLOGY(K)                                                              \
  template ProjResolution<K> min_proj_resolution<K>(const Module<K>&, std::size_t);                    \
  template ExtSpace<K> ext_space<K>(const ProjResolution<K>&, const Module<K>&, std::size_t);          \
  template ExtSpace<K> ext_space<K>(const Module<K>&, const Module<K>&, std::size_t);                  \
  template std::size_t ext_dim<K>(const ProjResolution<K>&, const Module<K>&, std::size_t);            \
  template std::size_t ext_dim<K>(const Module<K>&, const Module<K>&, std::size_t);                    \
  template DimensionReport projective_dimension<K>(const Module<K>&, std::size_t);                     \
  template DimensionReport injective_dimension<K>(const Module<K>&, std::size_t);                      \
  template DimensionReport global_dim<K>(const AlgebraPtr<K>&, std::size_t);                           \
  template DimensionReport dominant_dim<K>(const Module<K>&, std::size_t);                             \
  template DimensionReport codominant_dim<K>(const Module<K>&, std::size_t);                           \
  template DimensionReport dominant_dim<K>(const AlgebraPtr<K>&, std::size_t);                         \
  template GorensteinReport gorenstein_dim<K>(const AlgebraPtr<K>&, std::size_t);                      \
  template bool is_gorenstein_projective<K>(const Module<K>&, std::optional<std::size_t>);             \
  template UniversalExtension<K> universal_extension<K>(const Module<K>&, const Module<K>&);           \
  template std::vector<bool> projective_injective_vertices<K>(const AlgebraPtr<K>&);

STRATIKIT_INSTANTIATE_HOMOLOGY(PrimeField)
STRATIKIT_INSTANTIATE_HOMOLOGY(RationalField)

}  // namespace stratikit
