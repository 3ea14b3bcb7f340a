#include "stratikit/hom.hpp"

#include <cmath>

namespace stratikit {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

template <class K>
HomSpace<K>::HomSpace(Module<K> src, Module<K> tgt, std::vector<Matrix<K>> basis, std::vector<std::size_t> offsets,
                      RowSpace<K> params)
    : src_(std::move(src)),
      tgt_(std::move(tgt)),
      basis_(std::move(basis)),
      offsets_(std::move(offsets)),
      params_(std::move(params)) {}

template <class K>
std::optional<Vec<K>> HomSpace<K>::coordinates_from_images(const std::vector<Vec<K>>& images) const {
  const auto& pres = src_.presentation();
  Vec<K> c(params_.ambient(), src_.field().zero());
  for (std::size_t k = 0; k < pres.top_vertices.size(); ++k) {
    auto cc = tgt_.vertex_space(pres.top_vertices[k]).coordinates(images[k]);
    if (!cc) return std::nullopt;
    for (std::size_t j = 0; j < cc->size(); ++j) c[offsets_[k] + j] = (*cc)[j];
  }
  return params_.coordinates(c);
}

template <class K>
std::optional<Vec<K>> HomSpace<K>::coordinates(const Matrix<K>& f) const {
  if (f.rows() != src_.dim() || f.cols() != tgt_.dim()) return std::nullopt;
  const auto& pres = src_.presentation();
  std::vector<Vec<K>> images;
  for (std::size_t k = 0; k < pres.top_vertices.size(); ++k) images.push_back(vec_mat(pres.top_generators.row(k), f));
  auto out = coordinates_from_images(images);
  if (!out) return std::nullopt;
  // The parameters determine a morphism; make sure f is that morphism.
  if (!(combination(*out) == f)) return std::nullopt;
  return out;
}

template <class K>
Matrix<K> HomSpace<K>::combination(const Vec<K>& c) const {
  Matrix<K> f(src_.field(), src_.dim(), tgt_.dim());
  for (std::size_t i = 0; i < basis_.size(); ++i) mat_axpy(f, c[i], basis_[i]);
  return f;
}

template <class K>
HomSpace<K> hom_space(const Module<K>& m, const Module<K>& n) {
  if (!m.algebra().same_as(n.algebra()))
    throw Error(ErrorKind::AlgebraMismatch, "Hom between modules over different algebras");
  const K& k = m.field();
  const auto& a = m.algebra();
  const auto& pres = m.presentation();
  const std::size_t t = pres.top_vertices.size();
  std::vector<std::size_t> off;
  std::size_t unknowns = 0;
  for (auto v : pres.top_vertices) {
    off.push_back(unknowns);
    unknowns += n.vertex_space(v).dim();
  }
  const std::size_t nr = pres.relations.rows();
  Matrix<K> phi(k, unknowns, nr * n.dim());
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t kk = 0; kk < t; ++kk) {
      const auto v = pres.top_vertices[kk];
      const auto& orb = n.vertex_orbit(v);
      for (std::size_t s = 0; s < a.projective_dim(v); ++s) {
        const auto& z = pres.relations(r, pres.offsets[kk] + s);
        if (k.is_zero(z)) continue;
        const auto& o = orb[s];
        for (std::size_t j = 0; j < o.rows(); ++j)
          for (std::size_t c = 0; c < n.dim(); ++c)
            if (!k.is_zero(o(j, c))) {
              auto& x = phi(off[kk] + j, r * n.dim() + c);
              x = k.add(x, k.mul(z, o(j, c)));
            }
      }
    }
  Matrix<K> params = nr > 0 ? left_kernel(phi) : Matrix<K>::identity(k, unknowns);
  RowSpace<K> pspace(k, unknowns);
  std::vector<Matrix<K>> basis;
  // Which top generator and word each chosen cover row comes from.
  std::vector<std::pair<std::size_t, std::size_t>> chosen_src;
  for (auto row : pres.chosen) {
    std::size_t kk = t - 1;
    while (pres.offsets[kk] > row) --kk;
    chosen_src.emplace_back(kk, row - pres.offsets[kk]);
  }
  for (std::size_t p = 0; p < params.rows(); ++p) {
    Vec<K> c = params.row(p);
    pspace.insert(c);
    Matrix<K> g(k, m.dim(), n.dim());
    for (std::size_t r = 0; r < chosen_src.size(); ++r) {
      auto [kk, s] = chosen_src[r];
      const auto& o = n.vertex_orbit(pres.top_vertices[kk])[s];
      Vec<K> row(n.dim(), k.zero());
      for (std::size_t j = 0; j < o.rows(); ++j) {
        const auto& cj = c[off[kk] + j];
        if (k.is_zero(cj)) continue;
        for (std::size_t col = 0; col < n.dim(); ++col)
          if (!k.is_zero(o(j, col))) row[col] = k.add(row[col], k.mul(cj, o(j, col)));
      }
      g.set_row(r, row);
    }
    basis.push_back(m.dim() > 0 ? matmul(pres.section, g) : g);
  }
  return HomSpace<K>(m, n, std::move(basis), std::move(off), std::move(pspace));
}

namespace {

constexpr double kExhaustiveLimit = 1e6;

}  // namespace

template <class K>
IsoResult<K> find_invertible(const std::vector<Matrix<K>>& space, Rng& rng) {
  IsoResult<K> res;
  if (space.empty()) {
    res.verdict = Verdict::No;
    res.reason = "empty space";
    return res;
  }
  const K& k = space[0].field();
  const std::size_t n = space[0].rows();
  if (n != space[0].cols()) {
    res.verdict = Verdict::No;
    res.reason = "non-square";
    return res;
  }
  auto accept = [&](Matrix<K> f, const char* how) {
    res.verdict = Verdict::Yes;
    res.witness = std::move(f);
    res.reason = how;
    return res;
  };
  for (const auto& f : space)
    if (is_invertible(f)) return accept(f, "basis element");
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < space.size() && pairs < 300; ++i)
    for (std::size_t j = i + 1; j < space.size() && pairs < 300; ++j, ++pairs) {
      auto f = mat_add(space[i], space[j]);
      if (is_invertible(f)) return accept(f, "pairwise sum");
    }
  for (int trial = 0; trial < 200; ++trial) {
    Matrix<K> f(k, n, n);
    for (const auto& b : space) mat_axpy(f, k.random(rng), b);
    if (is_invertible(f)) return accept(f, "random combination");
  }
  const std::uint64_t q = k.size();
  if (q > 0 && std::pow(static_cast<double>(q), static_cast<double>(space.size())) <= kExhaustiveLimit) {
    std::vector<std::uint64_t> digits(space.size(), 0);
    while (true) {
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == q) digits[pos++] = 0;
      if (pos == digits.size()) break;
      Matrix<K> f(k, n, n);
      for (std::size_t i = 0; i < space.size(); ++i) mat_axpy(f, k.from_int(static_cast<std::int64_t>(digits[i])), space[i]);
      if (is_invertible(f)) return accept(f, "exhaustive search");
    }
    res.verdict = Verdict::No;
    res.reason = "exhaustive search found no invertible element";
    return res;
  }
  if (q == 0 || q > 2 * n) {
    res.verdict = Verdict::No;
    res.reason = "no invertible element in 200 random trials";
    return res;
  }
  res.verdict = Verdict::Inconclusive;
  res.reason = "field too small for randomized search and too large for enumeration";
  return res;
}

template <class K>
IsoResult<K> is_isomorphic(const Module<K>& m, const Module<K>& n, Rng& rng) {
  IsoResult<K> res;
  if (!m.algebra().same_as(n.algebra()))
    throw Error(ErrorKind::AlgebraMismatch, "isomorphism test across different algebras");
  if (m.dim() != n.dim()) {
    res.verdict = Verdict::No;
    res.reason = "dimension";
    return res;
  }
  if (m.dimension_vector() != n.dimension_vector()) {
    res.verdict = Verdict::No;
    res.reason = "dimension vector";
    return res;
  }
  if (m.dim() == 0) {
    res.verdict = Verdict::Yes;
    res.witness = Matrix<K>(m.field(), 0, 0);
    res.reason = "zero modules";
    return res;
  }
  auto h = hom_space(m, n);
  res = find_invertible(h.basis(), rng);
  if (res.verdict == Verdict::Inconclusive) {
    std::size_t d = h.dim();
    if (hom_space(m, m).dim() != d || hom_space(n, n).dim() != d || hom_space(n, m).dim() != d) {
      res.verdict = Verdict::No;
      res.reason = "hom dimensions differ";
    }
  }
  return res;
}

template <class K>
AlgebraTable<K> endomorphism_table(const HomSpace<K>& end) {
  const K& k = end.source().field();
  const auto& pres = end.source().presentation();
  const std::size_t e = end.dim();
  std::vector<Matrix<K>> top_images;  // top generators pushed through each basis map
  for (const auto& f : end.basis()) top_images.push_back(matmul(pres.top_generators, f));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < e; ++i) labels.push_back("f" + std::to_string(i + 1));
  auto unit = end.coordinates(Matrix<K>::identity(k, end.source().dim()));
  if (!unit) throw Error(ErrorKind::InternalInconsistency, "identity is not an endomorphism");
  return AlgebraTable<K>::from_products(k, labels, *unit, [&](std::size_t x, std::size_t y) {
    // x o y: apply y, then x.
    auto c = end.coordinates(matmul(end[y], end[x]));
    if (!c) throw Error(ErrorKind::InternalInconsistency, "composition left the endomorphism space");
    return *c;
  });
}

template <class K>
std::vector<Summand<K>> decompose(const Module<K>& m, Rng& rng) {
  std::vector<Summand<K>> out;
  if (m.dim() == 0) return out;
  auto end = hom_space(m, m);
  auto table = endomorphism_table(end);
  std::vector<Vec<K>> idem;
  try {
    auto rad = radical_basis(table);
    idem = lift_primitive_idempotents(table, rad, rng);
  } catch (const Error& e) {
    throw Error(ErrorKind::DecompositionFailed, e.what());
  }
  for (const auto& c : idem) {
    Matrix<K> f = end.combination(c);
    auto sub = submodule(m, row_space(f));
    bool placed = false;
    for (auto& s : out) {
      auto iso = is_isomorphic(s.module, sub.module, rng);
      if (iso.verdict == Verdict::Inconclusive)
        throw Error(ErrorKind::DecompositionFailed, "could not decide whether two summands are isomorphic");
      if (iso.verdict == Verdict::Yes) {
        ++s.multiplicity;
        // express the inclusion in the basis of the representative summand
        s.inclusions.push_back(matmul(*iso.witness, sub.inclusion));
        placed = true;
        break;
      }
    }
    if (!placed) out.push_back({sub.module, 1, {sub.inclusion}});
  }
  return out;
}

template <class K>
std::vector<Module<K>> basic_summands(const Module<K>& m, Rng& rng) {
  std::vector<Module<K>> out;
  for (auto& s : decompose(m, rng)) out.push_back(s.module);
  return out;
}

template <class K>
AlgebraPtr<K> endomorphism_algebra(const std::vector<Module<K>>& xs) {
  if (xs.empty()) throw Error(ErrorKind::InvalidInput, "endomorphism algebra of the zero module");
  const K& k = xs[0].field();
  const std::size_t r = xs.size();
  std::vector<std::vector<HomSpace<K>>> hs(r);  // hs[i][j] = Hom(X_j, X_i)
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) hs[i].push_back(hom_space(xs[j], xs[i]));
  struct Ref {
    std::size_t i, j, b;
  };
  std::vector<Ref> refs;
  std::vector<std::vector<std::size_t>> start(r, std::vector<std::size_t>(r, 0));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      start[i][j] = refs.size();
      for (std::size_t b = 0; b < hs[i][j].dim(); ++b) {
        refs.push_back({i, j, b});
        labels.push_back("h" + std::to_string(i + 1) + "." + std::to_string(j + 1) + "." + std::to_string(b + 1));
      }
    }
  const std::size_t d = refs.size();
  std::vector<Vec<K>> idem;
  Vec<K> unit(d, k.zero());
  for (std::size_t i = 0; i < r; ++i) {
    auto c = hs[i][i].coordinates(Matrix<K>::identity(k, xs[i].dim()));
    if (!c) throw Error(ErrorKind::InternalInconsistency, "identity missing from endomorphisms");
    Vec<K> e(d, k.zero());
    for (std::size_t b = 0; b < c->size(); ++b) e[start[i][i] + b] = (*c)[b];
    idem.push_back(e);
    unit = vec_add(k, unit, e);
  }
  // Images of the top generators of the source under each basis morphism.
  std::vector<std::vector<Vec<K>>> tops(d);
  for (std::size_t x = 0; x < d; ++x) {
    const auto& gens = xs[refs[x].j].presentation().top_generators;
    for (std::size_t g = 0; g < gens.rows(); ++g)
      tops[x].push_back(vec_mat(gens.row(g), hs[refs[x].i][refs[x].j][refs[x].b]));
  }
  auto table = AlgebraTable<K>::from_products(k, labels, unit, [&](std::size_t x, std::size_t y) {
    Vec<K> out(d, k.zero());
    const Ref& rx = refs[x];
    const Ref& ry = refs[y];
    if (rx.j != ry.i) return out;
    // x: X_j -> X_i, y: X_l -> X_j, x o y = Y X : X_l -> X_i, fixed by the top generators of X_l.
    std::vector<Vec<K>> images;
    for (const auto& t : tops[y]) images.push_back(vec_mat(t, hs[rx.i][rx.j][rx.b]));
    auto c = hs[rx.i][ry.j].coordinates_from_images(images);
    if (!c) throw Error(ErrorKind::InternalInconsistency, "composition outside the hom space");
    for (std::size_t b = 0; b < c->size(); ++b) out[start[rx.i][ry.j] + b] = (*c)[b];
    return out;
  });
  return AssocAlgebra<K>::create(std::move(table), std::move(idem));
}

template <class K>
Embedded<K> trace_submodule(const Module<K>& x, const Module<K>& m) {
  auto h = hom_space(x, m);
  Matrix<K> rows(m.field(), 0, m.dim());
  for (const auto& f : h.basis())
    for (std::size_t r = 0; r < f.rows(); ++r) rows.append_row(f.row(r));
  return submodule(m, rows);
}

#define STRATIKIT_INSTANTIATE_HOM(K)                                                       \
  template class HomSpace<K>;                                                              \
  template HomSpace<K> hom_space<K>(const Module<K>&, const Module<K>&);                   \
  template IsoResult<K> find_invertible<K>(const std::vector<Matrix<K>>&, Rng&);           \
  template IsoResult<K> is_isomorphic<K>(const Module<K>&, const Module<K>&, Rng&);        \
  template AlgebraTable<K> endomorphism_table<K>(const HomSpace<K>&);                      \
  template std::vector<Summand<K>> decompose<K>(const Module<K>&, Rng&);                   \
  template std::vector<Module<K>> basic_summands<K>(const Module<K>&, Rng&);               \
  template AlgebraPtr<K> endomorphism_algebra<K>(const std::vector<Module<K>>&);           \
  template Embedded<K> trace_submodule<K>(const Module<K>&, const Module<K>&);

STRATIKIT_INSTANTIATE_HOM(PrimeField)
STRATIKIT_INSTANTIATE_HOM(RationalField)

}  // namespace stratikit
