#include "stratikit/poly.hpp"

#include <algorithm>
#include <tuple>

namespace stratikit {

template <class K>
Poly<K> poly_trim(const K& k, Poly<K> f) {
  while (!f.empty() && k.is_zero(f.back())) f.pop_back();
  return f;
}

template <class K>
Poly<K> poly_add(const K& k, const Poly<K>& a, const Poly<K>& b) {
  Poly<K> c(std::max(a.size(), b.size()), k.zero());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = k.add(c[i], b[i]);
  return poly_trim(k, std::move(c));
}

template <class K>
Poly<K> poly_sub(const K& k, const Poly<K>& a, const Poly<K>& b) {
  Poly<K> c(std::max(a.size(), b.size()), k.zero());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = k.sub(c[i], b[i]);
  return poly_trim(k, std::move(c));
}

template <class K>
Poly<K> poly_mul(const K& k, const Poly<K>& a, const Poly<K>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<K> c(a.size() + b.size() - 1, k.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (k.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = k.add(c[i + j], k.mul(a[i], b[j]));
  }
  return poly_trim(k, std::move(c));
}

template <class K>
std::pair<Poly<K>, Poly<K>> poly_divmod(const K& k, const Poly<K>& a, const Poly<K>& b) {
  Poly<K> bt = poly_trim(k, b);
  if (bt.empty()) throw Error(ErrorKind::InternalInconsistency, "polynomial division by zero");
  Poly<K> r = poly_trim(k, a);
  if (r.size() < bt.size()) return {{}, r};
  Poly<K> q(r.size() - bt.size() + 1, k.zero());
  const auto lead_inv = k.inv(bt.back());
  for (std::size_t i = r.size(); i-- > bt.size() - 1;) {
    const auto c = k.mul(r[i], lead_inv);
    q[i - bt.size() + 1] = c;
    if (k.is_zero(c)) continue;
    for (std::size_t j = 0; j < bt.size(); ++j) {
      auto& x = r[i - bt.size() + 1 + j];
      x = k.sub(x, k.mul(c, bt[j]));
    }
  }
  r.resize(bt.size() - 1);
  return {poly_trim(k, std::move(q)), poly_trim(k, std::move(r))};
}

template <class K>
Poly<K> poly_monic(const K& k, const Poly<K>& f) {
  if (f.empty()) return f;
  return scaled(k, k.inv(f.back()), f);
}

template <class K>
Poly<K> poly_gcd(const K& k, Poly<K> a, Poly<K> b) {
  a = poly_trim(k, std::move(a));
  b = poly_trim(k, std::move(b));
  while (!b.empty()) {
    auto r = poly_divmod(k, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(k, a);
}

template <class K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> poly_ext_gcd(const K& k, const Poly<K>& a, const Poly<K>& b) {
  Poly<K> r0 = poly_trim(k, a), r1 = poly_trim(k, b);
  Poly<K> s0{k.one()}, s1{}, t0{}, t1{k.one()};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(k, r0, r1);
    auto s2 = poly_sub(k, s0, poly_mul(k, q, s1));
    auto t2 = poly_sub(k, t0, poly_mul(k, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  const auto c = k.inv(r0.back());
  return {scaled(k, c, r0), scaled(k, c, s0), scaled(k, c, t0)};
}

template <class K>
Poly<K> poly_derivative(const K& k, const Poly<K>& f) {
  if (f.size() <= 1) return {};
  Poly<K> d(f.size() - 1, k.zero());
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = k.mul(k.from_int(static_cast<std::int64_t>(i)), f[i]);
  return poly_trim(k, std::move(d));
}

template <class K>
typename K::Elem poly_eval(const K& k, const Poly<K>& f, const typename K::Elem& x) {
  typename K::Elem r = k.zero();
  for (std::size_t i = f.size(); i-- > 0;) r = k.add(k.mul(r, x), f[i]);
  return r;
}

namespace {

Poly<PrimeField> poly_powmod(const PrimeField& k, Poly<PrimeField> base, std::uint64_t e,
                             const Poly<PrimeField>& mod) {
  Poly<PrimeField> r{1};
  base = poly_divmod(k, base, mod).second;
  while (e) {
    if (e & 1) r = poly_divmod(k, poly_mul(k, r, base), mod).second;
    base = poly_divmod(k, poly_mul(k, base, base), mod).second;
    e >>= 1;
  }
  return r;
}

// g is a product of distinct linear factors over F_p, p odd.
void split_linear(const PrimeField& k, const Poly<PrimeField>& g, Rng& rng,
                  std::vector<std::uint32_t>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back(k.neg(k.div(g[0], g[1])));
    return;
  }
  const std::uint64_t p = k.characteristic();
  for (int attempt = 0; attempt < 200; ++attempt) {
    Poly<PrimeField> shift{k.random(rng), 1};
    auto h = poly_powmod(k, shift, (p - 1) / 2, g);
    h = poly_sub(k, h, Poly<PrimeField>{1});
    auto d = poly_gcd(k, g, h);
    if (d.size() > 1 && d.size() < g.size()) {
      split_linear(k, d, rng, out);
      split_linear(k, poly_divmod(k, g, d).first, rng, out);
      return;
    }
  }
  throw Error(ErrorKind::InternalInconsistency, "root splitting did not converge");
}

std::vector<std::uint32_t> roots_mod_p(const PrimeField& k, const Poly<PrimeField>& f0, Rng& rng) {
  auto f = poly_trim(k, f0);
  std::vector<std::uint32_t> out;
  if (f.size() <= 1) return out;
  const std::uint32_t p = k.characteristic();
  if (p <= 4096) {
    for (std::uint32_t x = 0; x < p; ++x)
      if (poly_eval(k, f, x) == 0) out.push_back(x);
    return out;
  }
  f = poly_monic(k, f);
  auto xp = poly_powmod(k, Poly<PrimeField>{0, 1}, p, f);
  auto g = poly_gcd(k, f, poly_sub(k, xp, Poly<PrimeField>{0, 1}));
  split_linear(k, g, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

// Largest primes below 2^31, used for modular root finding over Q.
std::vector<std::uint32_t> large_primes() {
  std::vector<std::uint32_t> ps;
  for (std::uint32_t n = 2147483647u; ps.size() < 8; n -= 2)
    if (is_prime_u32(n)) ps.push_back(n);
  return ps;
}

std::optional<mpq_class> rational_reconstruct(const mpz_class& a, const mpz_class& m) {
  mpz_class bound;
  mpz_sqrt(bound.get_mpz_t(), mpz_class(m / 2).get_mpz_t());
  mpz_class r0 = m, r1 = a, t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  mpq_class q(r1, t1);
  q.canonicalize();
  return q;
}

mpz_class eval_mod(const std::vector<mpz_class>& f, const mpz_class& x, const mpz_class& m) {
  mpz_class r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = (r * x + f[i]) % m;
  if (r < 0) r += m;
  return r;
}

std::vector<mpq_class> rational_roots(const RationalField& k, const Poly<RationalField>& f0, Rng& rng) {
  auto f = poly_trim(k, f0);
  std::vector<mpq_class> out;
  if (f.size() <= 1) return out;
  auto g = poly_gcd(k, f, poly_derivative(k, f));
  auto sq = poly_divmod(k, f, g).first;  // squarefree part
  mpz_class den = 1;
  for (const auto& c : sq) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& c : sq) z.push_back(mpz_class(c * den));
  std::vector<mpz_class> dz;
  for (std::size_t i = 1; i < z.size(); ++i) dz.push_back(z[i] * static_cast<unsigned long>(i));

  for (std::uint32_t q : large_primes()) {
    if (mpz_class(z.back() % q) == 0) continue;
    PrimeField fq(q);
    Poly<PrimeField> zq;
    for (const auto& c : z) zq.push_back(fq.from_rational(mpq_class(c)));
    zq = poly_trim(fq, zq);
    if (poly_gcd(fq, zq, poly_derivative(fq, zq)).size() != 1) continue;
    for (std::uint32_t r : roots_mod_p(fq, zq, rng)) {
      mpz_class m = q, x = r;
      for (int step = 0; step < 7; ++step) {
        if (auto cand = rational_reconstruct(x, m)) {
          if (poly_eval(k, f, *cand) == 0) {
            out.push_back(*cand);
            break;
          }
        }
        // Newton step modulo m^2.
        mpz_class m2 = m * m;
        mpz_class fx = eval_mod(z, x, m2);
        mpz_class dfx = eval_mod(dz, x, m2);
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), dfx.get_mpz_t(), m2.get_mpz_t()) == 0) break;
        x = (x - fx * inv) % m2;
        if (x < 0) x += m2;
        m = m2;
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  throw Error(ErrorKind::InternalInconsistency, "no suitable prime for rational root finding");
}

}  // namespace

template <>
std::vector<std::uint32_t> poly_roots<PrimeField>(const PrimeField& k, const Poly<PrimeField>& f, Rng& rng) {
  return roots_mod_p(k, f, rng);
}

template <>
std::vector<mpq_class> poly_roots<RationalField>(const RationalField& k, const Poly<RationalField>& f,
                                                 Rng& rng) {
  return rational_roots(k, f, rng);
}

template <class K>
std::size_t root_multiplicity(const K& k, const Poly<K>& f, const typename K::Elem& lambda) {
  Poly<K> lin{k.neg(lambda), k.one()};
  Poly<K> g = poly_trim(k, f);
  std::size_t m = 0;
  while (g.size() > 1) {
    auto [q, r] = poly_divmod(k, g, lin);
    if (!r.empty()) break;
    g = std::move(q);
    ++m;
  }
  return m;
}

template <class K>
std::optional<Poly<K>> splitting_polynomial(const K& k, const Poly<K>& f, const typename K::Elem& lambda) {
  const std::size_t a = root_multiplicity(k, f, lambda);
  if (a == 0) return std::nullopt;
  Poly<K> pa{k.one()};
  Poly<K> lin{k.neg(lambda), k.one()};
  for (std::size_t i = 0; i < a; ++i) pa = poly_mul(k, pa, lin);
  auto q = poly_divmod(k, f, pa).first;
  if (q.size() <= 1) return std::nullopt;
  // s pa + t q = 1, so u = t q is 1 mod pa and 0 mod q.
  auto [g, s, t] = poly_ext_gcd(k, pa, q);
  if (g.size() != 1) throw Error(ErrorKind::InternalInconsistency, "coprime factors with nontrivial gcd");
  return poly_mul(k, t, q);
}

#define STRATIKIT_INSTANTIATE_POLY(K)                                                                  \
  template Poly<K> poly_trim<K>(const K&, Poly<K>);                                                    \
  template Poly<K> poly_add<K>(const K&, const Poly<K>&, const Poly<K>&);                              \
  template Poly<K> poly_sub<K>(const K&, const Poly<K>&, const Poly<K>&);                              \
  template Poly<K> poly_mul<K>(const K&, const Poly<K>&, const Poly<K>&);                              \
  template std::pair<Poly<K>, Poly<K>> poly_divmod<K>(const K&, const Poly<K>&, const Poly<K>&);       \
  template Poly<K> poly_monic<K>(const K&, const Poly<K>&);                                            \
  template Poly<K> poly_gcd<K>(const K&, Poly<K>, Poly<K>);                                            \
  template std::tuple<Poly<K>, Poly<K>, Poly<K>> poly_ext_gcd<K>(const K&, const Poly<K>&,             \
                                                                 const Poly<K>&);                      \
  template Poly<K> poly_derivative<K>(const K&, const Poly<K>&);                                       \
  template K::Elem poly_eval<K>(const K&, const Poly<K>&, const K::Elem&);                             \
  template std::size_t root_multiplicity<K>(const K&, const Poly<K>&, const K::Elem&);                 \
  template std::optional<Poly<K>> splitting_polynomial<K>(const K&, const Poly<K>&, const K::Elem&);

STRATIKIT_INSTANTIATE_POLY(PrimeField)
STRATIKIT_INSTANTIATE_POLY(RationalField)

}  // namespace stratikit
