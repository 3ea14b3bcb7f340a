#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "stratikit/error.hpp"

namespace stratikit {

using Rng = std::mt19937_64;

bool is_prime_u32(std::uint32_t n);

/// Prime field F_p, p < 2^31. Elements are canonical residues.
class PrimeField {
 public:
  using Elem = std::uint32_t;

  PrimeField() : p_(32003) {}
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  /// Number of elements (0 would mean infinite).
  std::uint64_t size() const { return p_; }
  std::string name() const { return "F_" + std::to_string(p_); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem from_rational(const mpq_class& q) const;

  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool equal(Elem a, Elem b) const { return a == b; }

  Elem random(Rng& rng) const { return static_cast<Elem>(rng() % p_); }

  std::string to_string(Elem a) const { return std::to_string(a); }
  Elem parse(std::string_view s) const;

  /// Integer representative used for reductions into other prime fields.
  mpq_class lift(Elem a) const { return mpq_class(a); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

/// The rationals with exact GMP arithmetic.
class RationalField {
 public:
  using Elem = mpq_class;

  std::uint32_t characteristic() const { return 0; }
  std::uint64_t size() const { return 0; }
  std::string name() const { return "Q"; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(std::int64_t v) const { return Elem(static_cast<long>(v)); }
  Elem from_rational(const mpq_class& q) const { return q; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return a * inv(b); }
  Elem pow(const Elem& a, std::uint64_t e) const;

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  /// Small random integers; enough for generic-position arguments.
  Elem random(Rng& rng) const {
    return Elem(static_cast<long>(rng() % 2001) - 1000);
  }

  std::string to_string(const Elem& a) const { return a.get_str(); }
  Elem parse(std::string_view s) const;

  mpq_class lift(const Elem& a) const { return a; }

  bool operator==(const RationalField&) const { return true; }
};

template <class K>
concept ExactField = requires(const K& k, typename K::Elem a) {
  { k.add(a, a) } -> std::convertible_to<typename K::Elem>;
  { k.mul(a, a) } -> std::convertible_to<typename K::Elem>;
  { k.is_zero(a) } -> std::convertible_to<bool>;
  { k.characteristic() } -> std::convertible_to<std::uint32_t>;
};

}  // namespace stratikit
