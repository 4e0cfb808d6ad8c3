#ifndef RINGLAB_FIELD_HPP
#define RINGLAB_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ringlab {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Prime field GF(p). Elements are canonical representatives in [0, p).
/// Multiplication uses a precomputed Barrett constant; p must fit in 31 bits
/// so that products fit comfortably in 64 bits.
class GfField {
 public:
  using Elem = std::uint64_t;

  explicit GfField(std::uint64_t p) : p_(p) {
    if (p < 2 || p > (std::uint64_t(1) << 31))
      throw std::invalid_argument("GfField: prime out of range");
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("GfField: p is not prime");
    barrett_ = ~std::uint64_t(0) / p;
  }

  std::uint64_t prime() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  bool is_zero(Elem a) const { return a == 0; }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }

  Elem mul(Elem a, Elem b) const { return reduce(a * b); }

  /// Reduce any x < 2^62 into [0, p).
  Elem reduce(std::uint64_t x) const {
    std::uint64_t q = static_cast<std::uint64_t>(
        (__uint128_t(x) * barrett_) >> 64);
    std::uint64_t r = x - q * p_;
    while (r >= p_) r -= p_;
    return r;
  }

  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("GfField: inverse of zero");
    // extended Euclid
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_),
                 new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t; new_t = tmp;
      tmp = r - q * new_r;
      r = new_r; new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<Elem>(t);
  }

  Elem from_int(long long v) const {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += static_cast<long long>(p_);
    return static_cast<Elem>(m);
  }

  Elem from_rational(const Rational& q) const {
    BigInt num = boost::multiprecision::numerator(q) % p_;
    BigInt den = boost::multiprecision::denominator(q) % p_;
    if (num < 0) num += p_;
    Elem d = static_cast<Elem>(den);
    if (d == 0) throw std::domain_error("GfField: denominator divisible by p");
    return mul(static_cast<Elem>(num), inv(d));
  }

  std::string to_string(Elem a) const { return std::to_string(a); }

  /// Canonical serialization token (used by the cache hash).
  std::string describe() const { return "GF(" + std::to_string(p_) + ")"; }

  bool operator==(const GfField& o) const { return p_ == o.p_; }

 private:
  std::uint64_t p_;
  std::uint64_t barrett_;
};

/// The rationals behind the same interface. Intended for small instances;
/// everything stays exact.
class QqField {
 public:
  using Elem = Rational;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return a == 0; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("QqField: inverse of zero");
    return Elem(1) / a;
  }
  Elem from_int(long long v) const { return Elem(v); }
  Elem from_rational(const Rational& q) const { return q; }

  std::string to_string(const Elem& a) const { return a.str(); }
  std::string describe() const { return "QQ"; }

  bool operator==(const QqField&) const { return true; }
};

inline Rational to_rational(const GfField&, GfField::Elem e) {
  return Rational(e);
}
inline Rational to_rational(const QqField&, const QqField::Elem& e) { return e; }

inline std::uint64_t characteristic(const GfField& k) { return k.prime(); }
inline std::uint64_t characteristic(const QqField&) { return 0; }

}  // namespace ringlab

#endif
