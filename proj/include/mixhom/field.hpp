#ifndef MIXHOM_FIELD_HPP
#define MIXHOM_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace mixhom {

// Library-wide error type. Thrown for precondition violations (shape
// mismatches, singular elements, invalid input data).
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Exact rational scalar with arbitrary-precision numerator/denominator.
using Rational = mpq_class;

// Prime-field element, stored as the canonical representative in [0, p).
// The modulus is carried by the Field context object, not per element.
using FpElem = std::int64_t;

template <class K>
struct Field;

// Field of rationals. Stateless; all instances compare equal.
template <>
struct Field<Rational> {
  using elem = Rational;
  static constexpr bool is_prime_field = false;

  long characteristic() const { return 0; }

  elem zero() const { return Rational(0); }
  elem one() const { return Rational(1); }
  elem from_long(long v) const { return Rational(v); }

  elem add(const elem& a, const elem& b) const { return a + b; }
  elem sub(const elem& a, const elem& b) const { return a - b; }
  elem mul(const elem& a, const elem& b) const { return a * b; }
  elem neg(const elem& a) const { return -a; }

  elem inv(const elem& a) const {
    if (a == 0) throw error("division by zero in Q");
    return Rational(1) / a;
  }
  elem div(const elem& a, const elem& b) const { return mul(a, inv(b)); }

  bool is_zero(const elem& a) const { return a == 0; }
  bool eq(const elem& a, const elem& b) const { return a == b; }

  // Accepts "7", "-3/4" and similar; normalizes sign and reduces.
  elem parse(const std::string& s) const {
    try {
      Rational r(s);
      r.canonicalize();
      if (r.get_den() == 0) throw error("zero denominator: " + s);
      return r;
    } catch (const std::invalid_argument&) {
      throw error("not a rational literal: " + s);
    }
  }

  std::string str(const elem& a) const { return a.get_str(); }

  bool operator==(const Field&) const { return true; }
};

namespace detail {

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace detail

// Prime field F_p. Elements are plain integers reduced mod p; every
// operation goes through this context so the modulus is applied uniformly.
template <>
struct Field<FpElem> {
  using elem = FpElem;
  static constexpr bool is_prime_field = true;

  std::int64_t p;

  explicit Field(std::int64_t modulus) : p(modulus) {
    if (!detail::is_prime(p)) throw error("modulus " + std::to_string(p) + " is not prime");
  }

  long characteristic() const { return static_cast<long>(p); }

  elem zero() const { return 0; }
  elem one() const { return 1 % p; }
  elem from_long(long v) const {
    elem r = static_cast<elem>(v % p);
    return r < 0 ? r + p : r;
  }

  elem add(elem a, elem b) const { return (a + b) % p; }
  elem sub(elem a, elem b) const { return ((a - b) % p + p) % p; }
  elem mul(elem a, elem b) const { return (a * b) % p; }
  elem neg(elem a) const { return (p - a) % p; }

  elem inv(elem a) const {
    if (a % p == 0) throw error("division by zero in F_" + std::to_string(p));
    // Fermat: a^(p-2) mod p.
    elem base = from_long(a), acc = one();
    std::int64_t e = p - 2;
    while (e > 0) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }
  elem div(elem a, elem b) const { return mul(a, inv(b)); }

  bool is_zero(elem a) const { return a % p == 0; }
  bool eq(elem a, elem b) const { return from_long(a) == from_long(b); }

  elem parse(const std::string& s) const {
    std::size_t pos = 0;
    long long v;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      throw error("not an integer literal: " + s);
    }
    if (pos != s.size()) throw error("not an integer literal: " + s);
    return from_long(static_cast<long>(v));
  }

  std::string str(elem a) const { return std::to_string(from_long(a)); }

  bool operator==(const Field& other) const { return p == other.p; }
};

using RationalField = Field<Rational>;
using PrimeField = Field<FpElem>;

}  // namespace mixhom

#endif  // MIXHOM_FIELD_HPP
