#pragma once

#include <string>
#include <vector>

#include "ringlab/algebra.hpp"

namespace ringlab {

// Recover a polynomial presentation k[z_1..z_n]/I from the multiplication
// table: evaluate all monomials in a minimal generating set of m through
// degree lo+1 and take a minimal generating set of the kernel ideal, chosen
// greedily by degree.
template <class F>
Presentation recover_presentation(const LocalAlgebra<F>& A,
                                  const std::vector<std::string>& names = {}) {
  const F& k = A.field();
  auto gens = A.min_gens(A.power(1));
  std::size_t n = gens.size();
  Presentation out;
  for (std::size_t i = 0; i < n; ++i)
    out.vars.push_back(i < names.size() ? names[i]
                                        : "z" + std::to_string(i + 1));
  if (n == 0) return out;

  unsigned cap = A.loewy_length() + 2;  // relations live in degrees <= lo+1
  auto mons = monomials_below_degree(n, cap);

  // evaluation matrix: one column per monomial, rows over the algebra basis
  DenseMatrix<F> ev(A.dim(), mons.size(), k.zero());
  for (std::size_t j = 0; j < mons.size(); ++j) {
    auto v = A.one();
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned e = 0; e < mons[j].e[i]; ++e) v = A.mul(v, gens[i]);
    for (std::size_t r = 0; r < A.dim(); ++r) ev.at(r, j) = v[r];
  }
  auto ker = kernel_basis(k, ev);  // coords over the monomial list

  // greedy minimal generators: skip kernel elements already inside the span
  // of monomial multiples of the relations chosen so far
  DenseMatrix<F> multiples(0, mons.size());
  auto index_of = [&](const Monomial& m) -> std::size_t {
    for (std::size_t i = 0; i < mons.size(); ++i)
      if (mons[i] == m) return i;
    return mons.size();
  };
  Subspace<F> covered;
  auto add_multiples = [&](const std::vector<typename F::Elem>& rel) {
    for (auto& mult : mons) {
      std::vector<typename F::Elem> row(mons.size(), k.zero());
      bool in_range = true;
      for (std::size_t j = 0; j < mons.size(); ++j) {
        if (k.is_zero(rel[j])) continue;
        std::size_t idx = index_of(mons[j] * mult);
        if (idx == mons.size()) {
          in_range = false;
          break;
        }
        row[idx] = rel[j];
      }
      if (in_range) multiples.append_row(row);
    }
    covered = Subspace<F>::span(k, multiples);
  };

  // kernel vectors sorted by top degree so generators come out low-degree first
  std::vector<std::size_t> order(ker.size());
  for (std::size_t i = 0; i < ker.size(); ++i) order[i] = i;
  auto top_degree = [&](std::size_t i) {
    unsigned d = 0;
    for (std::size_t j = 0; j < mons.size(); ++j)
      if (!k.is_zero(ker[i][j])) d = std::max(d, mons[j].degree());
    return d;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return top_degree(a) < top_degree(b);
                   });

  for (std::size_t i : order) {
    if (covered.contains(k, ker[i])) continue;
    Poly p;
    auto ch = characteristic(k);
    for (std::size_t j = 0; j < mons.size(); ++j)
      if (!k.is_zero(ker[i][j])) {
        Rational c = to_rational(k, ker[i][j]);
        if (ch != 0 && c > Rational(ch) / 2) c -= ch;  // symmetric lift
        p += Poly::monomial(mons[j], c);
      }
    out.relations.push_back(std::move(p));
    add_multiples(ker[i]);
  }
  return out;
}

}  // namespace ringlab
