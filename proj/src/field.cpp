#include "stratikit/field.hpp"

#include <cctype>

namespace stratikit {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime_u32(p))
    throw Error(ErrorKind::InvalidInput, "field characteristic must be a prime below 2^31, got " +
                                             std::to_string(p));
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::InternalInconsistency, "division by zero in " + name());
  std::int64_t t = 0, nt = 1, r = p_, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return from_int(t);
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

PrimeField::Elem PrimeField::from_rational(const mpq_class& q) const {
  mpz_class n = q.get_num() % p_;
  mpz_class d = q.get_den() % p_;
  if (d == 0) throw Error(ErrorKind::InvalidInput, "denominator vanishes in " + name());
  if (n < 0) n += p_;
  return div(static_cast<Elem>(n.get_ui()), static_cast<Elem>(d.get_ui()));
}

namespace {
mpq_class parse_rational(std::string_view s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw Error(ErrorKind::InvalidInput, "empty scalar");
  for (std::size_t i = 0; i < t.size(); ++i) {
    char c = t[i];
    bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
              ((c == '-' || c == '+') && (i == 0 || t[i - 1] == '/'));
    if (!ok) throw Error(ErrorKind::InvalidInput, "malformed scalar '" + t + "'");
  }
  if (t[0] == '+') t.erase(0, 1);
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw Error(ErrorKind::InvalidInput, "malformed scalar '" + t + "'");
  if (q.get_den() == 0) throw Error(ErrorKind::InvalidInput, "zero denominator in '" + t + "'");
  q.canonicalize();
  return q;
}
}  // namespace

PrimeField::Elem PrimeField::parse(std::string_view s) const { return from_rational(parse_rational(s)); }

RationalField::Elem RationalField::inv(const Elem& a) const {
  if (sgn(a) == 0) throw Error(ErrorKind::InternalInconsistency, "division by zero in Q");
  return Elem(1) / a;
}

RationalField::Elem RationalField::pow(const Elem& a, std::uint64_t e) const {
  Elem r = 1, b = a;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

RationalField::Elem RationalField::parse(std::string_view s) const { return parse_rational(s); }

}  // namespace stratikit
