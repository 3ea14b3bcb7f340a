#include "stratikit/module.hpp"

#include <sstream>

namespace stratikit {

template <class K>
Module<K>::Module(AlgebraPtr<K> alg, std::vector<Matrix<K>> gens) : d_(std::make_shared<Data>()) {
  if (!alg) throw Error(ErrorKind::InvalidInput, "module without an algebra");
  if (gens.size() != alg->num_generators())
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(alg->num_generators()) +
                                                  " generator matrices, got " + std::to_string(gens.size()));
  const std::size_t n = gens.empty() ? 0 : gens[0].rows();
  for (const auto& g : gens)
    if (g.rows() != n || g.cols() != n) throw Error(ErrorKind::DimensionMismatch, "generator matrix shape");
  d_->alg = std::move(alg);
  d_->dim = n;
  d_->gens = std::move(gens);
}

template <class K>
std::vector<std::size_t> Module<K>::dimension_vector() const {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < algebra().num_vertices(); ++i) v.push_back(vertex_space(i).dim());
  return v;
}

template <class K>
const RowSpace<K>& Module<K>::vertex_space(std::size_t i) const {
  std::call_once(d_->vertex_once, [&] {
    for (std::size_t v = 0; v < algebra().num_vertices(); ++v)
      d_->vertex.push_back(RowSpace<K>::spanned_by(gen(v)));
  });
  return d_->vertex[i];
}

template <class K>
const std::vector<Matrix<K>>& Module<K>::vertex_orbit(std::size_t i) const {
  std::call_once(d_->orbit_once, [&] {
    const auto& a = algebra();
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
      std::vector<Matrix<K>> orb;
      Matrix<K> base = vertex_space(v).basis();
      if (base.rows() == 0) base = Matrix<K>(field(), 0, dim());
      for (auto w : a.words_at(v)) {
        const Word& wd = a.words()[w];
        if (wd.parent == Word::kNone)
          orb.push_back(base);
        else
          orb.push_back(matmul(orb[a.word_position(wd.parent)], gen(a.arrow_generator(wd.arrow))));
      }
      d_->orbits.push_back(std::move(orb));
    }
  });
  return d_->orbits[i];
}

template <class K>
Matrix<K> Module<K>::orbit(const Vec<K>& m) const {
  const auto& a = algebra();
  Matrix<K> out(field(), a.dim(), dim());
  for (std::size_t w = 0; w < a.dim(); ++w) {
    const Word& wd = a.words()[w];
    Vec<K> v = wd.parent == Word::kNone ? vec_mat(m, gen(wd.start))
                                        : vec_mat(out.row(wd.parent), gen(a.arrow_generator(wd.arrow)));
    out.set_row(w, v);
  }
  return out;
}

template <class K>
Vec<K> Module<K>::act(const Vec<K>& m, const Vec<K>& a) const {
  return vec_mat(algebra().word_coordinates(a), orbit(m));
}

template <class K>
Matrix<K> Module<K>::element_action(const Vec<K>& a) const {
  Vec<K> c = algebra().word_coordinates(a);
  Matrix<K> out(field(), dim(), dim());
  for (std::size_t s = 0; s < dim(); ++s) out.set_row(s, vec_mat(c, orbit(unit_vec(field(), dim(), s))));
  return out;
}

template <class K>
const RowSpace<K>& Module<K>::radical_space() const {
  std::call_once(d_->radical_once, [&] {
    RowSpace<K> r(field(), dim());
    const auto& a = algebra();
    for (std::size_t x = 0; x < a.arrows().size(); ++x) {
      const auto& g = gen(a.arrow_generator(x));
      for (std::size_t s = 0; s < dim(); ++s) r.insert(g.row(s));
    }
    d_->radical = std::move(r);
  });
  return d_->radical;
}

template <class K>
std::pair<std::vector<std::size_t>, Matrix<K>> top_generators(const Module<K>& m) {
  const auto& a = m.algebra();
  std::vector<std::size_t> verts;
  Matrix<K> rows(m.field(), 0, m.dim());
  const Matrix<K> rad = m.radical_space().basis();
  for (std::size_t i = 0; i < a.num_vertices(); ++i) {
    RowSpace<K> s(m.field(), m.dim());
    if (rad.rows() > 0) {
      Matrix<K> re = matmul(rad, m.gen(i));
      for (std::size_t r = 0; r < re.rows(); ++r) s.insert(re.row(r));
    }
    for (const auto& v : m.vertex_space(i).echelon_basis().row_list())
      if (s.insert(v)) {
        verts.push_back(i);
        rows.append_row(v);
      }
  }
  return {verts, rows};
}

template <class K>
const Presentation<K>& Module<K>::presentation() const {
  std::call_once(d_->presentation_once, [&] {
    const auto& a = algebra();
    Presentation<K> p;
    auto [verts, rows] = top_generators(*this);
    p.top_vertices = verts;
    p.top_generators = rows;
    for (auto v : verts) {
      p.offsets.push_back(p.p0_dim);
      p.p0_dim += a.projective_dim(v);
    }
    p.cover = Matrix<K>(field(), p.p0_dim, dim());
    for (std::size_t k = 0; k < verts.size(); ++k) {
      const auto& ws = a.words_at(verts[k]);
      for (std::size_t s = 0; s < ws.size(); ++s) {
        const Word& wd = a.words()[ws[s]];
        Vec<K> v = wd.parent == Word::kNone
                       ? rows.row(k)
                       : vec_mat(p.cover.row(p.offsets[k] + a.word_position(wd.parent)), gen(a.arrow_generator(wd.arrow)));
        p.cover.set_row(p.offsets[k] + s, v);
      }
    }
    RowSpace<K> img(field(), dim());
    Matrix<K> block(field(), 0, dim());
    for (std::size_t r = 0; r < p.p0_dim; ++r)
      if (img.insert(p.cover.row(r))) {
        p.chosen.push_back(r);
        block.append_row(p.cover.row(r));
      }
    if (img.dim() != dim()) throw Error(ErrorKind::InternalInconsistency, "top generators do not generate");
    if (dim() > 0) {
      auto inv = inverse(block);
      if (!inv) throw Error(ErrorKind::InternalInconsistency, "section block singular");
      p.section = std::move(*inv);
    } else {
      p.section = Matrix<K>(field(), 0, 0);
    }
    p.kernel = p.p0_dim > 0 ? left_kernel(p.cover) : Matrix<K>(field(), 0, 0);
    if (p.kernel.rows() == 0) p.kernel = Matrix<K>(field(), 0, p.p0_dim);
    std::vector<Module<K>> parts;
    for (auto v : verts) parts.push_back(projective_module(d_->alg, v));
    p.p0 = direct_sum(d_->alg, parts);
    p.syzygy = submodule(p.p0, p.kernel);
    auto [rv, rr] = top_generators(p.syzygy.module);
    p.relation_vertices = rv;
    p.relations = rr.rows() > 0 ? matmul(rr, p.syzygy.inclusion) : Matrix<K>(field(), 0, p.p0_dim);
    d_->presentation = std::make_shared<Presentation<K>>(std::move(p));
  });
  return *d_->presentation;
}

template <class K>
bool Module<K>::is_valid() const {
  const auto& a = algebra();
  const K& k = field();
  Matrix<K> sum(k, dim(), dim());
  for (std::size_t i = 0; i < a.num_vertices(); ++i) sum = mat_add(sum, gen(i));
  if (!(sum == Matrix<K>::identity(k, dim()))) return false;
  std::vector<Matrix<K>> rw;
  for (std::size_t w = 0; w < a.dim(); ++w) {
    const Word& wd = a.words()[w];
    rw.push_back(wd.parent == Word::kNone ? gen(wd.start) : matmul(rw[wd.parent], gen(a.arrow_generator(wd.arrow))));
  }
  for (std::size_t w = 0; w < a.dim(); ++w)
    for (std::size_t g = 0; g < a.num_generators(); ++g) {
      Matrix<K> expect(k, dim(), dim());
      const auto& ra = a.regular_action(g);
      for (std::size_t l = 0; l < a.dim(); ++l) mat_axpy(expect, ra(w, l), rw[l]);
      if (!(matmul(rw[w], gen(g)) == expect)) return false;
    }
  return true;
}

template <class K>
std::string Module<K>::canonical_text() const {
  std::ostringstream os;
  os << field().name() << ";" << dim();
  for (std::size_t g = 0; g < gens().size(); ++g) {
    os << ";" << algebra().generator_label(g) << ":";
    for (const auto& x : gen(g).raw()) os << field().to_string(x) << ",";
  }
  return os.str();
}

// ---- constructions ----

template <class K>
Module<K> regular_module(const AlgebraPtr<K>& a) {
  std::vector<Matrix<K>> g;
  for (std::size_t i = 0; i < a->num_generators(); ++i) g.push_back(a->regular_action(i));
  return Module<K>(a, std::move(g));
}

template <class K>
Module<K> projective_module(const AlgebraPtr<K>& a, std::size_t i) {
  const auto& ws = a->words_at(i);
  std::vector<Matrix<K>> g;
  for (std::size_t x = 0; x < a->num_generators(); ++x) {
    const auto& ra = a->regular_action(x);
    Matrix<K> m(a->field(), ws.size(), ws.size());
    for (std::size_t p = 0; p < ws.size(); ++p)
      for (std::size_t q = 0; q < ws.size(); ++q) m(p, q) = ra(ws[p], ws[q]);
    g.push_back(std::move(m));
  }
  return Module<K>(a, std::move(g));
}

template <class K>
Module<K> simple_module(const AlgebraPtr<K>& a, std::size_t i) {
  std::vector<Matrix<K>> g;
  for (std::size_t x = 0; x < a->num_generators(); ++x) {
    Matrix<K> m(a->field(), 1, 1);
    if (x == i) m(0, 0) = a->field().one();
    g.push_back(std::move(m));
  }
  return Module<K>(a, std::move(g));
}

template <class K>
Module<K> zero_module(const AlgebraPtr<K>& a) {
  std::vector<Matrix<K>> g(a->num_generators(), Matrix<K>(a->field(), 0, 0));
  return Module<K>(a, std::move(g));
}

template <class K>
Module<K> dual_module(const Module<K>& m) {
  std::vector<Matrix<K>> g;
  for (const auto& x : m.gens()) g.push_back(x.transpose());
  return Module<K>(m.algebra().opposite(), std::move(g));
}

template <class K>
Module<K> injective_module(const AlgebraPtr<K>& a, std::size_t i) {
  return dual_module(projective_module(a->opposite(), i));
}

template <class K>
Embedded<K> submodule(const Module<K>& m, const Matrix<K>& rows) {
  RowSpace<K> s(m.field(), m.dim());
  for (std::size_t r = 0; r < rows.rows(); ++r) s.insert(rows.row(r));
  const Matrix<K> basis = s.accepted().empty() ? Matrix<K>(m.field(), 0, m.dim()) : s.basis();
  std::vector<Matrix<K>> g;
  for (const auto& act : m.gens()) {
    Matrix<K> x(m.field(), s.dim(), s.dim());
    for (std::size_t r = 0; r < s.dim(); ++r) {
      auto c = s.coordinates(vec_mat(basis.row(r), act));
      if (!c) throw Error(ErrorKind::NotASubmodule, "span is not closed under the action");
      x.set_row(r, *c);
    }
    g.push_back(std::move(x));
  }
  return {Module<K>(m.algebra_ptr(), std::move(g)), basis};
}

template <class K>
Embedded<K> generated_submodule(const Module<K>& m, const Matrix<K>& rows) {
  const auto& a = m.algebra();
  RowSpace<K> s(m.field(), m.dim());
  std::vector<Vec<K>> queue;
  for (std::size_t r = 0; r < rows.rows(); ++r)
    for (std::size_t i = 0; i < a.num_vertices(); ++i) {
      auto v = vec_mat(rows.row(r), m.gen(i));
      if (s.insert(v)) queue.push_back(v);
    }
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (std::size_t x = 0; x < a.arrows().size(); ++x) {
      auto v = vec_mat(queue[q], m.gen(a.arrow_generator(x)));
      if (s.insert(v)) queue.push_back(v);
    }
  Matrix<K> basis = s.accepted().empty() ? Matrix<K>(m.field(), 0, m.dim()) : s.basis();
  return submodule(m, basis);
}

template <class K>
Quotiented<K> quotient_module(const Module<K>& m, const Matrix<K>& sub_rows) {
  const K& k = m.field();
  RowSpace<K> s(k, m.dim());
  for (std::size_t r = 0; r < sub_rows.rows(); ++r) s.insert(sub_rows.row(r));
  for (const auto& v : s.accepted())
    for (const auto& act : m.gens())
      if (!s.contains(vec_mat(v, act))) throw Error(ErrorKind::NotASubmodule, "quotient by a non-submodule");
  auto cols = s.non_pivot_columns();
  auto project = [&](const Vec<K>& v) {
    auto r = s.reduce(v);
    Vec<K> out(cols.size(), k.zero());
    for (std::size_t c = 0; c < cols.size(); ++c) out[c] = r[cols[c]];
    return out;
  };
  Matrix<K> proj(k, m.dim(), cols.size());
  for (std::size_t r = 0; r < m.dim(); ++r) proj.set_row(r, project(unit_vec(k, m.dim(), r)));
  std::vector<Matrix<K>> g;
  for (const auto& act : m.gens()) {
    Matrix<K> x(k, cols.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) x.set_row(c, project(act.row(cols[c])));
    g.push_back(std::move(x));
  }
  return {Module<K>(m.algebra_ptr(), std::move(g)), proj};
}

template <class K>
Module<K> direct_sum(const AlgebraPtr<K>& a, const std::vector<Module<K>>& parts) {
  std::vector<Matrix<K>> g;
  for (std::size_t x = 0; x < a->num_generators(); ++x) {
    std::vector<Matrix<K>> blocks;
    for (const auto& p : parts) {
      if (!p.algebra().same_as(*a)) throw Error(ErrorKind::AlgebraMismatch, "summands over different algebras");
      blocks.push_back(p.gen(x));
    }
    g.push_back(block_diag(a->field(), blocks));
  }
  return Module<K>(a, std::move(g));
}

template <class K>
bool is_homomorphism(const Module<K>& m, const Module<K>& n, const Matrix<K>& f) {
  if (f.rows() != m.dim() || f.cols() != n.dim()) return false;
  for (std::size_t g = 0; g < m.gens().size(); ++g)
    if (!(matmul(m.gen(g), f) == matmul(f, n.gen(g)))) return false;
  return true;
}

template <class K>
std::vector<RowSpace<K>> radical_series(const Module<K>& m) {
  std::vector<RowSpace<K>> out;
  RowSpace<K> cur(m.field(), m.dim());
  for (std::size_t s = 0; s < m.dim(); ++s) cur.insert(unit_vec(m.field(), m.dim(), s));
  const auto& a = m.algebra();
  while (cur.dim() > 0) {
    out.push_back(cur);
    RowSpace<K> next(m.field(), m.dim());
    for (const auto& v : cur.accepted())
      for (std::size_t x = 0; x < a.arrows().size(); ++x) next.insert(vec_mat(v, m.gen(a.arrow_generator(x))));
    if (next.dim() == cur.dim()) throw Error(ErrorKind::InternalInconsistency, "radical series does not terminate");
    cur = std::move(next);
  }
  return out;
}

template <class K>
RowSpace<K> socle_space(const Module<K>& m) {
  const auto& a = m.algebra();
  const std::size_t na = a.arrows().size();
  Matrix<K> h(m.field(), m.dim(), m.dim() * na);
  for (std::size_t x = 0; x < na; ++x) {
    const auto& g = m.gen(a.arrow_generator(x));
    for (std::size_t r = 0; r < m.dim(); ++r)
      for (std::size_t c = 0; c < m.dim(); ++c) h(r, x * m.dim() + c) = g(r, c);
  }
  if (na == 0 || m.dim() == 0) {
    RowSpace<K> all(m.field(), m.dim());
    for (std::size_t s = 0; s < m.dim(); ++s) all.insert(unit_vec(m.field(), m.dim(), s));
    return all;
  }
  return RowSpace<K>::spanned_by(left_kernel(h));
}

template <class K>
RadicalTopSocle radical_top_socle(const Module<K>& m) {
  const auto& a = m.algebra();
  RadicalTopSocle r;
  const auto& pres = m.presentation();
  r.top.assign(a.num_vertices(), 0);
  for (auto v : pres.top_vertices) ++r.top[v];
  auto soc = socle_space(m);
  for (std::size_t i = 0; i < a.num_vertices(); ++i) {
    if (soc.dim() == 0) {
      r.socle.push_back(0);
      continue;
    }
    r.socle.push_back(rank(matmul(soc.basis(), m.gen(i))));
  }
  auto series = radical_series(m);
  for (std::size_t i = 0; i < series.size(); ++i)
    r.radical_layers.push_back(series[i].dim() - (i + 1 < series.size() ? series[i + 1].dim() : 0));
  return r;
}

template <class K>
ProjectiveCover<K> projective_cover_and_syzygy(const Module<K>& m) {
  const auto& pres = m.presentation();
  return {pres.p0, pres.top_vertices, pres.cover, pres.syzygy};
}

template <class K>
bool is_projective_indecomposable_shape(const Module<K>& m, std::size_t* vertex) {
  const auto& pres = m.presentation();
  if (pres.top_vertices.size() != 1) return false;
  if (vertex) *vertex = pres.top_vertices[0];
  return m.dim() == m.algebra().projective_dim(pres.top_vertices[0]);
}

template <class K>
bool is_projective(const Module<K>& m) {
  return m.dim() == m.presentation().p0_dim;
}

namespace {
template <class K>
std::size_t injective_dim(const AssocAlgebra<K>& a, std::size_t i) {
  std::size_t s = 0;
  for (const auto& w : a.words())
    if (w.end == i) ++s;
  return s;
}
}  // namespace

template <class K>
bool is_injective_indecomposable_shape(const Module<K>& m, std::size_t* vertex) {
  auto rts = radical_top_socle(m);
  std::size_t total = 0, v = 0;
  for (std::size_t i = 0; i < rts.socle.size(); ++i) {
    total += rts.socle[i];
    if (rts.socle[i]) v = i;
  }
  if (total != 1) return false;
  if (vertex) *vertex = v;
  return m.dim() == injective_dim(m.algebra(), v);
}

template <class K>
bool is_injective(const Module<K>& m) {
  auto soc = socle_space(m);
  std::size_t env = 0;
  for (std::size_t i = 0; i < m.algebra().num_vertices(); ++i) {
    std::size_t mult = soc.dim() == 0 ? 0 : rank(matmul(soc.basis(), m.gen(i)));
    env += mult * injective_dim(m.algebra(), i);
  }
  return env == m.dim();
}

template <class K>
ModuleCatalogue<K> module_catalogue(const AlgebraPtr<K>& a) {
  ModuleCatalogue<K> c;
  for (std::size_t i = 0; i < a->num_vertices(); ++i) {
    c.projectives.push_back(projective_module(a, i));
    c.simples.push_back(simple_module(a, i));
    c.injectives.push_back(injective_module(a, i));
  }
  return c;
}

#define STRATIKIT_INSTANTIATE_MODULE(K)                                                        \
  template class Module<K>;                                                                    \
  template Module<K> regular_module<K>(const AlgebraPtr<K>&);                                  \
  template Module<K> projective_module<K>(const AlgebraPtr<K>&, std::size_t);                  \
  template Module<K> simple_module<K>(const AlgebraPtr<K>&, std::size_t);                      \
  template Module<K> injective_module<K>(const AlgebraPtr<K>&, std::size_t);                   \
  template Module<K> zero_module<K>(const AlgebraPtr<K>&);                                     \
  template Module<K> dual_module<K>(const Module<K>&);                                         \
  template Embedded<K> submodule<K>(const Module<K>&, const Matrix<K>&);                       \
  template Embedded<K> generated_submodule<K>(const Module<K>&, const Matrix<K>&);             \
  template Quotiented<K> quotient_module<K>(const Module<K>&, const Matrix<K>&);               \
  template Module<K> direct_sum<K>(const AlgebraPtr<K>&, const std::vector<Module<K>>&);       \
  template bool is_homomorphism<K>(const Module<K>&, const Module<K>&, const Matrix<K>&);      \
  template std::vector<RowSpace<K>> radical_series<K>(const Module<K>&);                       \
  template RowSpace<K> socle_space<K>(const Module<K>&);                                       \
  template RadicalTopSocle radical_top_socle<K>(const Module<K>&);                             \
  template ProjectiveCover<K> projective_cover_and_syzygy<K>(const Module<K>&);                \
  template bool is_projective_indecomposable_shape<K>(const Module<K>&, std::size_t*);         \
  template bool is_projective<K>(const Module<K>&);                                            \
  template bool is_injective_indecomposable_shape<K>(const Module<K>&, std::size_t*);          \
  template bool is_injective<K>(const Module<K>&);                                             \
  template std::pair<std::vector<std::size_t>, Matrix<K>> top_generators<K>(const Module<K>&); \
  template ModuleCatalogue<K> module_catalogue<K>(const AlgebraPtr<K>&);

STRATIKIT_INSTANTIATE_MODULE(PrimeField)
STRATIKIT_INSTANTIATE_MODULE(RationalField)

}  // namespace stratikit
