#ifndef RINGLAB_PRODUCTS_HPP
#define RINGLAB_PRODUCTS_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringlab/algebra.hpp"

namespace ringlab {

/// R x_k S with its two coordinate embeddings: basis {1} u m_R-basis u
/// m_S-basis, cross products zero.
template <class F>
struct FibreProductWitness {
  LocalAlgebra<F> T;
  // T-coordinate of R basis element i (i >= 1) and S basis element j (j >= 1)
  std::vector<std::size_t> r_coord, s_coord;

  typename LocalAlgebra<F>::Vec embed_r(const LocalAlgebra<F>& R,
                                        const typename LocalAlgebra<F>::Vec& v) const {
    auto out = T.zero();
    out[0] = v[0];
    for (std::size_t i = 1; i < R.dim(); ++i) out[r_coord[i]] = v[i];
    return out;
  }
  typename LocalAlgebra<F>::Vec embed_s(const LocalAlgebra<F>& S,
                                        const typename LocalAlgebra<F>::Vec& v) const {
    auto out = T.zero();
    out[0] = v[0];
    for (std::size_t j = 1; j < S.dim(); ++j) out[s_coord[j]] = v[j];
    return out;
  }
};

template <class F>
FibreProductWitness<F> fibre_product(const LocalAlgebra<F>& R,
                                     const LocalAlgebra<F>& S) {
  const F& k = R.field();
  if (!(k == S.field()))
    throw std::invalid_argument("fibre_product: field mismatch");
  using Vec = typename LocalAlgebra<F>::Vec;
  std::size_t dR = R.dim(), dS = S.dim();
  std::size_t D = dR + dS - 1;

  FibreProductWitness<F> w;
  w.r_coord.assign(dR, 0);
  w.s_coord.assign(dS, 0);
  for (std::size_t i = 1; i < dR; ++i) w.r_coord[i] = i;
  for (std::size_t j = 1; j < dS; ++j) w.s_coord[j] = dR - 1 + j;

  auto lift_r = [&](const Vec& v) {
    Vec out(D, k.zero());
    out[0] = v[0];
    for (std::size_t i = 1; i < dR; ++i) out[w.r_coord[i]] = v[i];
    return out;
  };
  auto lift_s = [&](const Vec& v) {
    Vec out(D, k.zero());
    out[0] = v[0];
    for (std::size_t j = 1; j < dS; ++j) out[w.s_coord[j]] = v[j];
    return out;
  };

  std::vector<Vec> table(D * D, Vec(D, k.zero()));
  auto unit = [&](std::size_t i) {
    Vec v(D, k.zero());
    v[i] = k.one();
    return v;
  };
  for (std::size_t i = 0; i < D; ++i) {
    table[i] = unit(i);
    table[i * D] = unit(i);
  }
  for (std::size_t i = 1; i < dR; ++i)
    for (std::size_t j = 1; j < dR; ++j)
      table[w.r_coord[i] * D + w.r_coord[j]] = lift_r(R.basis_product(i, j));
  for (std::size_t i = 1; i < dS; ++i)
    for (std::size_t j = 1; j < dS; ++j)
      table[w.s_coord[i] * D + w.s_coord[j]] = lift_s(S.basis_product(i, j));
  // cross products already zero

  std::vector<std::string> names{"1"};
  std::vector<std::string> gen_names;
  std::vector<Vec> gens;
  for (std::size_t i = 1; i < dR; ++i) names.push_back(R.basis_name(i) + "|0");
  for (std::size_t j = 1; j < dS; ++j) names.push_back("0|" + S.basis_name(j));
  for (std::size_t i = 0; i < R.ngens(); ++i) {
    gen_names.push_back(R.gen_names()[i]);
    gens.push_back(lift_r(R.gen(i)));
  }
  for (std::size_t j = 0; j < S.ngens(); ++j) {
    std::string nm = S.gen_names()[j];
    while (std::find(gen_names.begin(), gen_names.end(), nm) != gen_names.end())
      nm += "'";
    gen_names.push_back(nm);
    gens.push_back(lift_s(S.gen(j)));
  }
  w.T = LocalAlgebra<F>::from_table(k, std::move(names), std::move(table),
                                    std::move(gen_names), std::move(gens));
  return w;
}

/// R # S = (R x_k S)/<(delta_R, -delta_S)> for Gorenstein R, S; the socle
/// generators are the pivot-canonical basis vectors of the two socle lines.
template <class F>
struct ConnectedSumWitness {
  LocalAlgebra<F> Q;
  FibreProductWitness<F> fibre;
  typename LocalAlgebra<F>::Vec delta_r, delta_s;  // in R and S coordinates
  Subspace<F> identified;  // the line <(delta_R, -delta_S)> inside the fibre
  // coordinates of Q's basis inside the fibre product
  std::vector<std::size_t> coords;
};

template <class F>
ConnectedSumWitness<F> connected_sum(const LocalAlgebra<F>& R,
                                     const LocalAlgebra<F>& S) {
  const F& k = R.field();
  if (!R.is_gorenstein() || !S.is_gorenstein())
    throw std::invalid_argument("connected_sum: inputs must be Gorenstein");
  if (R.dim() < 2 || S.dim() < 2)
    throw std::invalid_argument("connected_sum: inputs must have dimension >= 2");

  ConnectedSumWitness<F> w;
  w.fibre = fibre_product(R, S);
  w.delta_r = R.socle().basis().row_vec(0);
  w.delta_s = S.socle().basis().row_vec(0);
  auto d = w.fibre.T.sub(w.fibre.embed_r(R, w.delta_r),
                         w.fibre.embed_s(S, w.delta_s));
  DenseMatrix<F> line(0, w.fibre.T.dim());
  line.append_row(d);
  w.identified = Subspace<F>::span(k, line);
  // the line is an ideal: delta . m vanishes on both sides
  w.coords = w.fibre.T.quotient_coords(w.identified);
  w.Q = w.fibre.T.quotient(w.identified);
  return w;
}

}  // namespace ringlab

#endif
