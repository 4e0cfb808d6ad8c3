#ifndef RINGLAB_INVERSE_SYSTEM_HPP
#define RINGLAB_INVERSE_SYSTEM_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringlab/algebra.hpp"

namespace ringlab {

/// Contraction action of a monomial on a dual polynomial: x^a acts on X^b as
/// X^{b-a} when b >= a and kills it otherwise (divided-power convention, no
/// factorials; this is why the characteristic must exceed deg F).
inline Poly contract(const Monomial& u, const Poly& f) {
  Poly out;
  for (auto& [m, c] : f.terms)
    if (m.divisible_by(u)) out += Poly::monomial(m / u, c);
  return out;
}

/// The apolar algebra k[x_1..x_n]/Ann(F) of a dual socle polynomial F.
/// Gorenstein Artinian with Loewy length deg F.
template <class F>
LocalAlgebra<F> from_inverse_system(const F& k,
                                    const std::vector<std::string>& vars,
                                    const Poly& dual) {
  if (dual.is_zero())
    throw std::invalid_argument("inverse_system: zero dual polynomial");
  unsigned s = dual.degree();
  if (characteristic(k) != 0 && characteristic(k) <= s)
    throw std::invalid_argument(
        "inverse_system: characteristic must exceed the dual degree");
  std::size_t n = vars.size();

  Presentation pres;
  pres.vars = vars;
  // Ann(F) is spanned in degrees <= s+1 up to higher-order terms, so the
  // kernel of the contraction matrix over all monomials of degree 1..s+1
  // generates it. One simultaneous kernel, since an inhomogeneous dual has
  // mixed-degree annihilators (e.g. x^4 - y^2 against X^4 + Y^2).
  std::vector<Monomial> cols;
  for (auto& u : monomials_below_degree(n, s + 2))
    if (u.degree() >= 1) cols.push_back(u);
  std::vector<Poly> g;
  std::map<Monomial, std::size_t, MonomialLess> rowidx;
  for (auto& u : cols) {
    g.push_back(contract(u, dual));
    for (auto& [m, c] : g.back().terms) rowidx.emplace(m, 0);
  }
  std::size_t r = 0;
  for (auto& [m, i] : rowidx) i = r++;
  DenseMatrix<F> mat(std::max<std::size_t>(rowidx.size(), 1), cols.size(),
                     k.zero());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (auto& [m, c] : g[j].terms) mat.at(rowidx[m], j) = k.from_rational(c);
  for (auto& v : kernel_basis(k, mat)) {
    Poly rel;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (!k.is_zero(v[j])) rel += Poly::monomial(cols[j], to_rational(k, v[j]));
    pres.relations.push_back(rel);
  }

  return LocalAlgebra<F>::build(k, pres);
}

}  // namespace ringlab

#endif
