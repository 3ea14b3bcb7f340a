#include "stratikit/algebra_table.hpp"

#include <sstream>

#include "stratikit/poly.hpp"
#include "stratikit/util.hpp"

namespace stratikit {

template <class K>
AlgebraTable<K>::AlgebraTable(const K& k, std::vector<std::string> labels, std::vector<Terms> products, Vec<K> unit)
    : k_(k), labels_(std::move(labels)), products_(std::move(products)), unit_(std::move(unit)) {
  const std::size_t d = labels_.size();
  if (products_.size() != d * d || unit_.size() != d)
    throw Error(ErrorKind::DimensionMismatch, "structure constants do not match the basis size");
  for (const auto& t : products_)
    for (const auto& [c, v] : t)
      if (c >= d) throw Error(ErrorKind::DimensionMismatch, "structure constant index out of range");
}

template <class K>
Vec<K> AlgebraTable<K>::mul(const Vec<K>& x, const Vec<K>& y) const {
  const std::size_t d = dim();
  Vec<K> out(d, k_.zero());
  for (std::size_t a = 0; a < d; ++a) {
    if (k_.is_zero(x[a])) continue;
    for (std::size_t b = 0; b < d; ++b) {
      if (k_.is_zero(y[b])) continue;
      const auto& t = products_[a * d + b];
      if (t.empty()) continue;
      const auto xy = k_.mul(x[a], y[b]);
      for (const auto& [c, v] : t) out[c] = k_.add(out[c], k_.mul(xy, v));
    }
  }
  return out;
}

template <class K>
Matrix<K> AlgebraTable<K>::right_mult(const Vec<K>& y) const {
  const std::size_t d = dim();
  Matrix<K> m(k_, d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      if (k_.is_zero(y[b])) continue;
      for (const auto& [c, v] : products_[a * d + b]) m(a, c) = k_.add(m(a, c), k_.mul(y[b], v));
    }
  return m;
}

template <class K>
Matrix<K> AlgebraTable<K>::left_mult(const Vec<K>& x) const {
  const std::size_t d = dim();
  Matrix<K> m(k_, d, d);
  for (std::size_t a = 0; a < d; ++a) {
    if (k_.is_zero(x[a])) continue;
    for (std::size_t b = 0; b < d; ++b)
      for (const auto& [c, v] : products_[a * d + b]) m(b, c) = k_.add(m(b, c), k_.mul(x[a], v));
  }
  return m;
}

template <class K>
AlgebraTable<K> AlgebraTable<K>::opposite() const {
  const std::size_t d = dim();
  std::vector<Terms> p(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) p[a * d + b] = products_[b * d + a];
  return AlgebraTable(k_, labels_, std::move(p), unit_);
}

template <class K>
bool AlgebraTable<K>::is_associative() const {
  const std::size_t d = dim();
  Vec<K> lhs(d, k_.zero()), rhs(d, k_.zero());
  std::vector<std::size_t> touched;
  std::vector<char> mark(d, 0);
  auto accumulate = [&](Vec<K>& out, const Terms& coeffs, std::size_t fixed, bool left) {
    for (const auto& [e, v] : coeffs)
      for (const auto& [g, w] : left ? products_[e * d + fixed] : products_[fixed * d + e]) {
        out[g] = k_.add(out[g], k_.mul(v, w));
        if (!mark[g]) {
          mark[g] = 1;
          touched.push_back(g);
        }
      }
  };
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) {
        accumulate(lhs, products_[a * d + b], c, true);   // (ab)c
        accumulate(rhs, products_[b * d + c], a, false);  // a(bc)
        bool equal = true;
        for (auto g : touched) {
          equal = equal && k_.equal(lhs[g], rhs[g]);
          lhs[g] = k_.zero();
          rhs[g] = k_.zero();
          mark[g] = 0;
        }
        touched.clear();
        if (!equal) return false;
      }
  return true;
}

template <class K>
bool AlgebraTable<K>::has_unit() const {
  for (std::size_t a = 0; a < dim(); ++a) {
    auto e = basis_vector(a);
    if (mul(unit_, e) != e || mul(e, unit_) != e) return false;
  }
  return true;
}

template <class K>
bool AlgebraTable<K>::is_commutative() const {
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = a + 1; b < dim(); ++b)
      if (product(a, b) != product(b, a)) return false;
  return true;
}

template <class K>
std::string AlgebraTable<K>::canonical_text() const {
  std::ostringstream os;
  os << k_.name() << ";" << dim() << ";";
  for (const auto& l : labels_) os << l << ",";
  os << ";";
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = 0; b < dim(); ++b)
      for (const auto& [c, v] : product(a, b)) os << a << "." << b << "." << c << "=" << k_.to_string(v) << ";";
  os << "u:";
  for (const auto& x : unit_) os << k_.to_string(x) << ",";
  return os.str();
}

template <class K>
std::uint64_t AlgebraTable<K>::fingerprint() const {
  return fnv1a(canonical_text());
}

namespace {

template <class K>
Vec<K> trace_vector(const AlgebraTable<K>& a) {
  const K& k = a.field();
  Vec<K> t(a.dim(), k.zero());
  for (std::size_t j = 0; j < a.dim(); ++j)
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (const auto& [c, v] : a.product(i, j))
        if (c == i) t[j] = k.add(t[j], v);
  return t;
}

// Kernel of the trace form x, y -> Tr R(xy).
template <class K>
RowSpace<K> trace_form_kernel(const AlgebraTable<K>& a) {
  const K& k = a.field();
  const std::size_t d = a.dim();
  auto t = trace_vector(a);
  Matrix<K> g(k, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [c, v] : a.product(i, j)) g(i, j) = k.add(g(i, j), k.mul(v, t[c]));
  return RowSpace<K>::spanned_by(left_kernel(g));
}

using IntMat = std::vector<std::uint64_t>;

IntMat int_matmul(const IntMat& x, const IntMat& y, std::size_t d, std::uint64_t m) {
  IntMat z(d * d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t l = 0; l < d; ++l) {
      const auto v = x[i * d + l];
      if (v == 0) continue;
      for (std::size_t j = 0; j < d; ++j) z[i * d + j] = (z[i * d + j] + v * y[l * d + j]) % m;
    }
  return z;
}

// (Tr(lift(R)^(p^i)) mod p^(i+1)) / p^i
std::uint32_t power_trace(const Matrix<PrimeField>& r, std::uint64_t p, unsigned i) {
  const std::size_t d = r.rows();
  std::uint64_t pi = 1;
  for (unsigned s = 0; s < i; ++s) pi *= p;
  const std::uint64_t m = pi * p;
  IntMat base(d * d), acc(d * d, 0);
  for (std::size_t a = 0; a < d * d; ++a) base[a] = r.raw()[a];
  for (std::size_t a = 0; a < d; ++a) acc[a * d + a] = 1;
  std::uint64_t e = pi;
  while (e) {
    if (e & 1) acc = int_matmul(acc, base, d, m);
    e >>= 1;
    if (e) base = int_matmul(base, base, d, m);
  }
  std::uint64_t tr = 0;
  for (std::size_t a = 0; a < d; ++a) tr = (tr + acc[a * d + a]) % m;
  if (tr % pi != 0) throw Error(ErrorKind::InternalInconsistency, "p-power trace not divisible as expected");
  return static_cast<std::uint32_t>((tr / pi) % p);
}

RowSpace<PrimeField> small_char_radical(const AlgebraTable<PrimeField>& a) {
  const PrimeField& k = a.field();
  const std::size_t d = a.dim();
  const std::uint64_t p = k.characteristic();
  RowSpace<PrimeField> current = trace_form_kernel(a);
  std::uint64_t pi = p;
  for (unsigned i = 1; pi <= d && current.dim() > 0; ++i, pi *= p) {
    const auto& ys = current.accepted();
    std::vector<std::uint32_t> gamma;
    for (const auto& y : ys) gamma.push_back(power_trace(a.right_mult(y), p, i));
    Matrix<PrimeField> cond(k, ys.size(), d);
    for (std::size_t s = 0; s < ys.size(); ++s)
      for (std::size_t j = 0; j < d; ++j) {
        auto c = current.coordinates(a.mul(ys[s], a.basis_vector(j)));
        if (!c) throw Error(ErrorKind::InternalInconsistency, "radical approximation is not a right ideal");
        std::uint32_t v = 0;
        for (std::size_t t = 0; t < c->size(); ++t) v = k.add(v, k.mul((*c)[t], gamma[t]));
        cond(s, j) = v;
      }
    auto lk = left_kernel(cond);
    RowSpace<PrimeField> next(k, d);
    for (std::size_t r = 0; r < lk.rows(); ++r) {
      Vec<PrimeField> v(d, 0);
      for (std::size_t s = 0; s < ys.size(); ++s) axpy(k, v, lk(r, s), ys[s]);
      next.insert(v);
    }
    current = std::move(next);
  }
  return current;
}

template <class K>
void verify_radical(const AlgebraTable<K>& a, const RowSpace<K>& j) {
  for (const auto& x : j.accepted())
    for (std::size_t b = 0; b < a.dim(); ++b) {
      auto e = a.basis_vector(b);
      if (!j.contains(a.mul(x, e)) || !j.contains(a.mul(e, x)))
        throw Error(ErrorKind::InternalInconsistency, "computed radical is not a two-sided ideal");
    }
  ideal_powers(a, j);  // throws unless nilpotent
}

}  // namespace

template <class K>
std::vector<RowSpace<K>> ideal_powers(const AlgebraTable<K>& a, const RowSpace<K>& j) {
  std::vector<RowSpace<K>> out;
  if (j.dim() == 0) return out;
  out.push_back(j);
  while (out.size() <= a.dim()) {
    RowSpace<K> next(a.field(), a.dim());
    for (const auto& u : out.back().accepted())
      for (const auto& v : j.accepted()) next.insert(a.mul(u, v));
    if (next.dim() == 0) break;
    if (next.dim() == out.back().dim())
      throw Error(ErrorKind::InternalInconsistency, "ideal is not nilpotent");
    out.push_back(std::move(next));
  }
  return out;
}

template <class K>
RowSpace<K> radical_basis(const AlgebraTable<K>& a) {
  RowSpace<K> j;
  if constexpr (std::is_same_v<K, PrimeField>) {
    if (a.field().characteristic() > a.dim())
      j = trace_form_kernel(a);
    else
      j = small_char_radical(a);
  } else {
    j = trace_form_kernel(a);
  }
  verify_radical(a, j);
  return j;
}

template <class K>
std::vector<typename K::Elem> element_minimal_polynomial(const AlgebraTable<K>& a, const Vec<K>& x,
                                                         const Vec<K>& unit) {
  const K& k = a.field();
  RowSpace<K> krylov(k, a.dim());
  Vec<K> v = unit;
  for (std::size_t deg = 0; deg <= a.dim(); ++deg) {
    if (auto c = krylov.coordinates(v)) {
      std::vector<typename K::Elem> mu(deg + 1, k.zero());
      for (std::size_t i = 0; i < deg; ++i) mu[i] = k.neg((*c)[i]);
      mu[deg] = k.one();
      return mu;
    }
    krylov.insert(v);
    v = a.mul(v, x);
  }
  throw Error(ErrorKind::InternalInconsistency, "minimal polynomial degree exceeds dimension");
}

template <class K>
std::size_t corner_residue_dim(const AlgebraTable<K>& a, const RowSpace<K>& radical, const Vec<K>& f) {
  RowSpace<K> corner(a.field(), a.dim()), rad(a.field(), a.dim());
  for (std::size_t b = 0; b < a.dim(); ++b) corner.insert(a.mul(a.mul(f, a.basis_vector(b)), f));
  for (const auto& j : radical.accepted()) rad.insert(a.mul(a.mul(f, j), f));
  return corner.dim() - rad.dim();
}

namespace {

template <class K>
Vec<K> eval_in_corner(const AlgebraTable<K>& a, const std::vector<typename K::Elem>& u, const Vec<K>& x,
                      const Vec<K>& f) {
  const K& k = a.field();
  Vec<K> r(a.dim(), k.zero());
  for (std::size_t i = u.size(); i-- > 0;) {
    r = a.mul(r, x);
    axpy(k, r, u[i], f);
  }
  return r;
}

template <class K>
std::optional<std::pair<Vec<K>, Vec<K>>> try_split(const AlgebraTable<K>& a, const Vec<K>& x, const Vec<K>& f,
                                                   Rng& rng) {
  const K& k = a.field();
  auto mu = element_minimal_polynomial(a, x, f);
  for (const auto& lambda : poly_roots(k, mu, rng)) {
    auto u = splitting_polynomial(k, mu, lambda);
    if (!u) continue;
    Vec<K> e1 = eval_in_corner(a, *u, x, f);
    Vec<K> e2 = vec_sub(k, f, e1);
    if (a.mul(e1, e1) != e1 || is_zero_vec(k, e1) || is_zero_vec(k, e2))
      throw Error(ErrorKind::InternalInconsistency, "polynomial idempotent failed verification");
    return std::make_pair(e1, e2);
  }
  return std::nullopt;
}

}  // namespace

template <class K>
std::vector<Vec<K>> lift_primitive_idempotents(const AlgebraTable<K>& a, const RowSpace<K>& radical, Rng& rng) {
  const K& k = a.field();
  std::vector<Vec<K>> done;
  std::vector<Vec<K>> stack{a.unit()};
  while (!stack.empty()) {
    Vec<K> f = std::move(stack.back());
    stack.pop_back();
    if (corner_residue_dim(a, radical, f) == 1) {
      done.push_back(std::move(f));
      continue;
    }
    RowSpace<K> corner(k, a.dim());
    for (std::size_t b = 0; b < a.dim(); ++b) corner.insert(a.mul(a.mul(f, a.basis_vector(b)), f));
    const auto& cb = corner.accepted();
    std::vector<Vec<K>> candidates(cb.begin(), cb.end());
    for (std::size_t i = 0; i < cb.size() && candidates.size() < 400; ++i)
      for (std::size_t j = i + 1; j < cb.size() && candidates.size() < 400; ++j)
        candidates.push_back(vec_add(k, cb[i], cb[j]));
    std::optional<std::pair<Vec<K>, Vec<K>>> split;
    for (const auto& x : candidates)
      if ((split = try_split(a, x, f, rng))) break;
    for (int t = 0; t < 200 && !split; ++t) {
      Vec<K> x(a.dim(), k.zero());
      for (const auto& b : cb) axpy(k, x, k.random(rng), b);
      split = try_split(a, x, f, rng);
    }
    if (!split)
      throw Error(ErrorKind::LiftingFailed, "no splitting element found in a corner of residue dimension " +
                                                std::to_string(corner_residue_dim(a, radical, f)));
    // Push in reverse so the first factor is processed first.
    stack.push_back(std::move(split->second));
    stack.push_back(std::move(split->first));
  }
  return done;
}

#define STRATIKIT_INSTANTIATE_TABLE(K)                                                                       \
  template class AlgebraTable<K>;                                                                            \
  template RowSpace<K> radical_basis<K>(const AlgebraTable<K>&);                                             \
  template std::vector<RowSpace<K>> ideal_powers<K>(const AlgebraTable<K>&, const RowSpace<K>&);             \
  template std::vector<K::Elem> element_minimal_polynomial<K>(const AlgebraTable<K>&, const Vec<K>&,         \
                                                              const Vec<K>&);                                \
  template std::vector<Vec<K>> lift_primitive_idempotents<K>(const AlgebraTable<K>&, const RowSpace<K>&, Rng&); \
  template std::size_t corner_residue_dim<K>(const AlgebraTable<K>&, const RowSpace<K>&, const Vec<K>&);

STRATIKIT_INSTANTIATE_TABLE(PrimeField)
STRATIKIT_INSTANTIATE_TABLE(RationalField)

}  // namespace stratikit
