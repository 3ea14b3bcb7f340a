#pragma once

#include <cstddef>
#include <optional>
#include <tuple>
#include <vector>

#include "stratikit/matrix.hpp"

namespace stratikit {

/// Univariate polynomial, coefficients from degree 0 upwards, no trailing zeros.
template <class K>
using Poly = std::vector<typename K::Elem>;

template <class K>
Poly<K> poly_trim(const K& k, Poly<K> f);
template <class K>
long poly_degree(const Poly<K>& f) {
  return static_cast<long>(f.size()) - 1;
}
template <class K>
Poly<K> poly_add(const K& k, const Poly<K>& a, const Poly<K>& b);
template <class K>
Poly<K> poly_sub(const K& k, const Poly<K>& a, const Poly<K>& b);
template <class K>
Poly<K> poly_mul(const K& k, const Poly<K>& a, const Poly<K>& b);
/// Quotient and remainder; b must be nonzero.
template <class K>
std::pair<Poly<K>, Poly<K>> poly_divmod(const K& k, const Poly<K>& a, const Poly<K>& b);
template <class K>
Poly<K> poly_monic(const K& k, const Poly<K>& f);
/// Monic gcd.
template <class K>
Poly<K> poly_gcd(const K& k, Poly<K> a, Poly<K> b);
/// Returns (g, s, t) with s a + t b = g, g monic.
template <class K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> poly_ext_gcd(const K& k, const Poly<K>& a, const Poly<K>& b);
template <class K>
Poly<K> poly_derivative(const K& k, const Poly<K>& f);
template <class K>
typename K::Elem poly_eval(const K& k, const Poly<K>& f, const typename K::Elem& x);

/// Distinct roots lying in the field, sorted canonically.
template <class K>
std::vector<typename K::Elem> poly_roots(const K& k, const Poly<K>& f, Rng& rng);
template <>
std::vector<std::uint32_t> poly_roots<PrimeField>(const PrimeField& k, const Poly<PrimeField>& f, Rng& rng);
template <>
std::vector<mpq_class> poly_roots<RationalField>(const RationalField& k, const Poly<RationalField>& f,
                                                 Rng& rng);

/// Multiplicity of x - lambda in f.
template <class K>
std::size_t root_multiplicity(const K& k, const Poly<K>& f, const typename K::Elem& lambda);

/// For f = (t - lambda)^a q with q(lambda) != 0 and deg q > 0, returns u with
/// u = 1 mod (t - lambda)^a and u = 0 mod q. nullopt when q is constant.
template <class K>
std::optional<Poly<K>> splitting_polynomial(const K& k, const Poly<K>& f, const typename K::Elem& lambda);

}  // namespace stratikit
