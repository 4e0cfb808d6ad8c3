#ifndef RINGLAB_POLY_HPP
#define RINGLAB_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringlab/field.hpp"

namespace ringlab {

/// Exponent vector in a fixed number of variables.
struct Monomial {
  std::vector<unsigned> e;

  explicit Monomial(std::size_t nvars = 0) : e(nvars, 0) {}
  static Monomial var(std::size_t nvars, std::size_t i, unsigned pow = 1) {
    Monomial m(nvars);
    m.e[i] = pow;
    return m;
  }

  unsigned degree() const { return std::accumulate(e.begin(), e.end(), 0u); }

  Monomial operator*(const Monomial& o) const {
    Monomial r(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }

  /// Is `o` a divisor of this monomial?
  bool divisible_by(const Monomial& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (o.e[i] > e[i]) return false;
    return true;
  }
  Monomial operator/(const Monomial& o) const {
    Monomial r(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] - o.e[i];
    return r;
  }

  bool operator==(const Monomial& o) const { return e == o.e; }
};

/// Global monomial order: degree first, degrevlex within a degree (ties broken
/// toward earlier variables). This "less" is ascending: 1 < x < y < x² < xy...
inline bool monomial_less(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // within a degree, list in degrevlex order (x before y, x^2 < xy < y^2):
  // the earlier monomial has less of the last differing variable
  for (std::size_t i = a.e.size(); i-- > 0;)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  return false;
}

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return monomial_less(a, b);
  }
};

/// Sparse polynomial with exact rational coefficients; field-independent until
/// an algebra is built over a concrete field.
class Poly {
 public:
  std::map<Monomial, Rational, MonomialLess> terms;

  Poly() = default;
  static Poly constant(std::size_t nvars, const Rational& c) {
    Poly p;
    if (c != 0) p.terms[Monomial(nvars)] = c;
    return p;
  }
  static Poly monomial(Monomial m, const Rational& c = 1) {
    Poly p;
    if (c != 0) p.terms[std::move(m)] = c;
    return p;
  }

  bool is_zero() const { return terms.empty(); }
  unsigned degree() const {
    unsigned d = 0;
    for (auto& [m, c] : terms) d = std::max(d, m.degree());
    return d;
  }
  /// Smallest total degree of a term (order of the polynomial at the origin).
  unsigned valuation() const {
    unsigned d = ~0u;
    for (auto& [m, c] : terms) d = std::min(d, m.degree());
    return d;
  }

  Poly& operator+=(const Poly& o) {
    for (auto& [m, c] : o.terms) {
      auto it = terms.find(m);
      if (it == terms.end()) terms.emplace(m, c);
      else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
      }
    }
    return *this;
  }
  Poly operator+(const Poly& o) const { Poly r = *this; r += o; return r; }
  Poly operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms) c = -c;
    return r;
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    Poly r;
    for (auto& [m1, c1] : terms)
      for (auto& [m2, c2] : o.terms) {
        auto m = m1 * m2;
        auto it = r.terms.find(m);
        if (it == r.terms.end()) r.terms.emplace(std::move(m), c1 * c2);
        else {
          it->second += c1 * c2;
          if (it->second == 0) r.terms.erase(it);
        }
      }
    return r;
  }
  Poly operator*(const Rational& c) const {
    if (c == 0) return Poly();
    Poly r = *this;
    for (auto& [m, v] : r.terms) v *= c;
    return r;
  }

  std::string str(const std::vector<std::string>& vars) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest-order terms first, the conventional direction
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      auto& [m, c] = *it;
      Rational a = c;
      if (!first) os << (a < 0 ? " - " : " + ");
      else if (a < 0) os << "-";
      first = false;
      if (a < 0) a = -a;
      bool unit_coeff = (a == 1) && m.degree() > 0;
      if (!unit_coeff) os << a.str();
      bool any = !unit_coeff;
      for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (any) os << "*";
        any = true;
        os << vars[i];
        if (m.e[i] > 1) os << "^" << m.e[i];
      }
    }
    return os.str();
  }
};

/// A quotient presentation k[x_1..x_n]/I with exact rational coefficients.
/// The field is attached when the algebra is built.
struct Presentation {
  std::vector<std::string> vars;
  std::vector<Poly> relations;
};

}  // namespace ringlab

#endif
