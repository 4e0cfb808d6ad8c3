#ifndef RINGLAB_DECOMPOSITION_HPP
#define RINGLAB_DECOMPOSITION_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringlab/algebra.hpp"
#include "ringlab/products.hpp"

namespace ringlab {

namespace detail {

/// Lift an element of A/J back to A along the complement-coordinate section.
template <class F>
typename LocalAlgebra<F>::Vec lift_quotient(const LocalAlgebra<F>& A,
                                            const std::vector<std::size_t>& keep,
                                            const typename LocalAlgebra<F>::Vec& v) {
  auto out = A.zero();
  for (std::size_t i = 0; i < keep.size(); ++i) out[keep[i]] = v[i];
  return out;
}

template <class F>
Subspace<F> project_subspace(const LocalAlgebra<F>& A, const Subspace<F>& J,
                             const std::vector<std::size_t>& keep,
                             const Subspace<F>& V) {
  const F& k = A.field();
  DenseMatrix<F> rows(0, keep.size());
  for (std::size_t i = 0; i < V.dim(); ++i) {
    auto red = J.reduce(k, V.basis().row_vec(i));
    std::vector<typename F::Elem> v(keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c) v[c] = red[keep[c]];
    rows.append_row(v);
  }
  return Subspace<F>::span(k, rows);
}

}  // namespace detail

/// Find y in I \ mI with I^2 = yI, assuming mu(xI) <= 1 for the finitely
/// many candidates the construction touches. Recursive: first reduce modulo
/// m I^2 (the general case follows by Nakayama), then split on whether some
/// generator has a nonvanishing square.
template <class F>
typename LocalAlgebra<F>::Vec principal_multiple_generator(
    const LocalAlgebra<F>& A, const Subspace<F>& I) {
  const F& k = A.field();
  using Vec = typename LocalAlgebra<F>::Vec;

  auto gens = A.min_gens(I);
  std::size_t n = gens.size();
  if (n == 0) return A.zero();
  if (n == 1) return gens[0];

  auto I2 = A.ideal_product(I, I);
  if (I2.dim() == 0) return gens[0];

  auto verify = [&](const Vec& y) {
    auto yI = A.ideal_product(Subspace<F>::span(k, [&] {
                                DenseMatrix<F> r(0, A.dim());
                                r.append_row(y);
                                return r;
                              }()),
                              I);
    if (!(yI == I2))
      throw std::logic_error(
          "principal_multiple_generator: yI != I^2 after construction");
    return y;
  };

  auto mI2 = A.ideal_product(A.power(1), I2);
  if (mI2.dim() > 0) {
    // pass to A/mI^2, solve there, lift, and conclude by Nakayama
    auto keep = A.quotient_coords(mI2);
    auto Q = A.quotient(mI2);
    auto Ibar = detail::project_subspace(A, mI2, keep, I);
    auto ybar = principal_multiple_generator(Q, Ibar);
    return verify(detail::lift_quotient(A, keep, ybar));
  }

  // now m I^2 = 0: I^2 is a k-space spanned by pairwise generator products
  auto xI_dim = [&](const Vec& x) {
    DenseMatrix<F> rows(0, A.dim());
    for (auto& g : gens) rows.append_row(A.mul(x, g));
    return Subspace<F>::span(k, rows);
  };
  for (std::size_t i = 0; i < n; ++i)
    if (xI_dim(gens[i]).dim() > 1)
      throw std::invalid_argument(
          "principal_multiple_generator: mu(xI) > 1 at generator " +
          std::to_string(i));

  // coefficient of w in the line spanned by nonzero u (valid since mI^2 = 0)
  auto line_coeff = [&](const Vec& u, const Vec& w) {
    DenseMatrix<F> m(A.dim(), 1);
    for (std::size_t c = 0; c < A.dim(); ++c) m.at(c, 0) = u[c];
    auto x = solve(k, m, w);
    if (!x)
      throw std::logic_error("principal_multiple_generator: not on the line");
    return (*x)[0];
  };

  std::optional<std::size_t> sq;
  for (std::size_t i = 0; i < n; ++i)
    if (!A.is_zero_vec(A.mul(gens[i], gens[i]))) {
      sq = i;
      break;
    }

  std::vector<Vec> jgens;
  Vec x1;
  if (sq) {
    // Case 2: x1^2 != 0, so x1 I = (x1^2); J kills x1
    x1 = gens[*sq];
    Vec x1sq = A.mul(x1, x1);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == *sq) continue;
      auto lam = line_coeff(x1sq, A.mul(x1, gens[i]));
      jgens.push_back(A.sub(gens[i], A.scale(lam, x1)));
    }
  } else {
    // Case 1: all squares vanish; pick a nonvanishing product x1 x2
    std::size_t a = 0, b = 0;
    bool found = false;
    for (std::size_t i = 0; i < n && !found; ++i)
      for (std::size_t j = i + 1; j < n && !found; ++j)
        if (!A.is_zero_vec(A.mul(gens[i], gens[j]))) {
          a = i;
          b = j;
          found = true;
        }
    if (!found)
      throw std::logic_error("principal_multiple_generator: I^2 != 0 but all "
                             "generator products vanish");
    x1 = gens[a];
    Vec x2 = gens[b];
    Vec p = A.mul(x1, x2);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == a || i == b) continue;
      auto lam = line_coeff(p, A.mul(x1, gens[i]));
      auto lamp = line_coeff(p, A.mul(x2, gens[i]));
      jgens.push_back(
          A.sub(gens[i], A.add(A.scale(lam, x2), A.scale(lamp, x1))));
    }
  }

  auto J = A.ideal_span(jgens);
  auto yp = principal_multiple_generator(A, J);
  return verify(A.add(x1, yp));
}

/// Find x in m \ m^2 with m^2 = xm (requires mu(m^2) <= 2); when lo >= 3
/// additionally x^2 is outside m^3.
template <class F>
typename LocalAlgebra<F>::Vec principal_reduction_of_m2(const LocalAlgebra<F>& A) {
  const F& k = A.field();
  using Vec = typename LocalAlgebra<F>::Vec;
  auto m2 = A.power(2);
  std::size_t mu2 = A.mu(m2);
  if (mu2 >= 3)
    throw std::invalid_argument("principal_reduction_of_m2: mu(m^2) = " +
                                std::to_string(mu2) + " > 2");

  auto mgens = A.min_gens(A.power(1));
  auto verify = [&](const Vec& x) {
    DenseMatrix<F> r(0, A.dim());
    r.append_row(x);
    auto xm = A.ideal_product(Subspace<F>::span(k, r), A.power(1));
    if (!(xm == m2))
      throw std::logic_error("principal_reduction_of_m2: xm != m^2");
    if (A.loewy_length() >= 3 && A.power(3).contains(k, A.mul(x, x)))
      throw std::logic_error("principal_reduction_of_m2: x^2 fell into m^3");
    return x;
  };
  if (m2.dim() == 0) return verify(mgens.at(0));

  // search modulo m^3, then conclude by Nakayama; candidate combinations are
  // enumerated deterministically
  auto m3 = A.power(3);
  auto dim_xm_mod = [&](const Vec& x) {
    DenseMatrix<F> rows(0, A.dim());
    for (auto& g : mgens) rows.append_row(A.mul(x, g));
    for (std::size_t i = 0; i < m3.dim(); ++i)
      rows.append_row(m3.basis().row_vec(i));
    return Subspace<F>::span(k, rows).dim() - m3.dim();
  };
  std::size_t target = m2.dim() - m3.dim();  // = mu(m^2)
  for (auto& g : mgens)
    if (dim_xm_mod(g) == target) return verify(g);
  std::uint64_t climit = characteristic(k) == 0 ? 64 : characteristic(k) - 1;
  for (std::size_t i = 0; i < mgens.size(); ++i)
    for (std::size_t j = i + 1; j < mgens.size(); ++j)
      for (std::uint64_t c = 1; c <= climit; ++c) {
        Vec x = A.add(mgens[i], A.scale(k.from_int((long long)c), mgens[j]));
        if (dim_xm_mod(x) == target) return verify(x);
      }
  for (std::size_t i = 0; i < mgens.size(); ++i)
    for (std::size_t j = i + 1; j < mgens.size(); ++j)
      for (std::size_t l = j + 1; l < mgens.size(); ++l)
        for (std::uint64_t c = 1; c <= std::min<std::uint64_t>(climit, 8); ++c)
          for (std::uint64_t d = 1; d <= std::min<std::uint64_t>(climit, 8); ++d) {
            Vec x = A.add(mgens[i],
                          A.add(A.scale(k.from_int((long long)c), mgens[j]),
                                A.scale(k.from_int((long long)d), mgens[l])));
            if (dim_xm_mod(x) == target) return verify(x);
          }
  throw std::logic_error(
      "principal_reduction_of_m2: no principal reduction found in the "
      "candidate set");
}

template <class F>
struct GeneratorNormalForm {
  std::vector<typename LocalAlgebra<F>::Vec> gens;  // x_1..x_n
  std::size_t split;                                // m: x_1..x_m vs the rest
};

/// Adjust a minimal generating set so that (1) m^2 = (x1^2, x1x2, .., x1xm),
/// (2) the two halves annihilate each other, (3) the square of the second
/// half is the socle. Follows the constructive proof: kill x1*x_j by linear
/// substitution, then correct x_j by its pairing partner in (0:x1) n m^2.
template <class F>
GeneratorNormalForm<F> normalize_split_generators(
    const LocalAlgebra<F>& A, const typename LocalAlgebra<F>::Vec& x1) {
  const F& k = A.field();
  using Vec = typename LocalAlgebra<F>::Vec;
  if (!A.is_gorenstein())
    throw std::invalid_argument("normalize_split_generators: not Gorenstein");
  if (A.loewy_length() < 3)
    throw std::invalid_argument("normalize_split_generators: lo >= 3 required");
  std::size_t n = A.edim();
  std::size_t m = A.power(2).dim() - A.power(3).dim();
  if (m >= n)
    throw std::invalid_argument(
        "normalize_split_generators: dim m^2/m^3 must be below edim");
  {
    DenseMatrix<F> r(0, A.dim());
    r.append_row(x1);
    auto x1m = A.ideal_product(Subspace<F>::span(k, r), A.power(1));
    if (!(x1m == A.power(2)))
      throw std::invalid_argument("normalize_split_generators: m^2 != x1*m");
  }

  // minimal generating set extending x1
  std::vector<Vec> gens{x1};
  {
    auto m2 = A.power(2);
    auto span_with = [&](const std::vector<Vec>& v) {
      DenseMatrix<F> rows(0, A.dim());
      for (std::size_t i = 0; i < m2.dim(); ++i)
        rows.append_row(m2.basis().row_vec(i));
      for (auto& g : v) rows.append_row(g);
      return Subspace<F>::span(k, rows);
    };
    auto cur = span_with(gens);
    for (auto& g : A.min_gens(A.power(1))) {
      if (cur.contains(k, g)) continue;
      gens.push_back(g);
      cur = span_with(gens);
      if (gens.size() == n) break;
    }
    if (gens.size() != n)
      throw std::logic_error("normalize_split_generators: could not extend x1");
  }

  // (a) reorder so that {x1^2, x1x2, ..., x1xm} spans m^2 mod m^3
  {
    auto m3 = A.power(3);
    DenseMatrix<F> rows(0, A.dim());
    for (std::size_t i = 0; i < m3.dim(); ++i)
      rows.append_row(m3.basis().row_vec(i));
    rows.append_row(A.mul(x1, x1));
    auto cur = Subspace<F>::span(k, rows);
    std::vector<Vec> chosen{x1}, rest;
    for (std::size_t i = 1; i < n; ++i) {
      Vec p = A.mul(x1, gens[i]);
      if (chosen.size() < m && !cur.contains(k, p)) {
        chosen.push_back(gens[i]);
        DenseMatrix<F> r2(0, A.dim());
        for (std::size_t t = 0; t < cur.dim(); ++t)
          r2.append_row(cur.basis().row_vec(t));
        r2.append_row(p);
        cur = Subspace<F>::span(k, r2);
      } else {
        rest.push_back(gens[i]);
      }
    }
    if (chosen.size() != m)
      throw std::logic_error(
          "normalize_split_generators: m^2 not reached by x1-products");
    gens = chosen;
    gens.insert(gens.end(), rest.begin(), rest.end());
  }

  // (b) substitute x_j -> x_j - sum alpha_i x_i (alpha in A) to get x1 x_j = 0
  {
    // columns: b * x_i for i < m+1 (as elements x1*(b*x_i) ... we solve
    // x1*x_j = sum_i alpha_i * (x1 x_i) with alpha_i in A
    std::vector<Vec> prods;  // x1 * x_i, i = 0..m-1 (i.e. x1^2, x1x2, ...)
    for (std::size_t i = 0; i < m; ++i) prods.push_back(A.mul(x1, gens[i]));
    DenseMatrix<F> mat(A.dim(), m * A.dim());
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t b = 0; b < A.dim(); ++b) {
        Vec col = A.mul_basis(prods[i], b);
        for (std::size_t c = 0; c < A.dim(); ++c)
          mat.at(c, i * A.dim() + b) = col[c];
      }
    for (std::size_t j = m; j < n; ++j) {
      auto sol = solve(k, mat, A.mul(x1, gens[j]));
      if (!sol)
        throw std::logic_error(
            "normalize_split_generators: x1*x_j outside (x1^2,..,x1xm)");
      Vec corr = A.zero();
      for (std::size_t i = 0; i < m; ++i) {
        Vec alpha((*sol).begin() + i * A.dim(),
                  (*sol).begin() + (i + 1) * A.dim());
        corr = A.add(corr, A.mul(alpha, gens[i]));
      }
      gens[j] = A.sub(gens[j], corr);
      if (!A.is_zero_vec(A.mul(x1, gens[j])))
        throw std::logic_error("normalize_split_generators: x1*x_j != 0");
    }
  }

  // (c) correct x_j by its partner in (0:x1) n m^2 so the halves annihilate
  if (m >= 2) {
    DenseMatrix<F> r(0, A.dim());
    r.append_row(x1);
    auto annx1 = A.annihilator_of(Subspace<F>::span(k, r));
    auto W = annx1.intersect(k, A.power(2));
    for (std::size_t j = m; j < n; ++j) {
      // solve xhat in W with xhat*x_i = x_j*x_i for i = 2..m
      DenseMatrix<F> mat((m - 1) * A.dim(), W.dim());
      std::vector<typename F::Elem> rhs((m - 1) * A.dim());
      for (std::size_t w = 0; w < W.dim(); ++w) {
        Vec base = W.basis().row_vec(w);
        for (std::size_t i = 1; i < m; ++i) {
          Vec p = A.mul(base, gens[i]);
          for (std::size_t c = 0; c < A.dim(); ++c)
            mat.at((i - 1) * A.dim() + c, w) = p[c];
        }
      }
      for (std::size_t i = 1; i < m; ++i) {
        Vec p = A.mul(gens[j], gens[i]);
        for (std::size_t c = 0; c < A.dim(); ++c)
          rhs[(i - 1) * A.dim() + c] = p[c];
      }
      auto sol = solve(k, mat, rhs);
      if (!sol)
        throw std::logic_error(
            "normalize_split_generators: pairing partner not found");
      Vec xhat = A.zero();
      for (std::size_t w = 0; w < W.dim(); ++w)
        xhat = A.add(xhat, A.scale((*sol)[w], W.basis().row_vec(w)));
      gens[j] = A.sub(gens[j], xhat);
    }
  }

  // verify properties (1)-(3) as exact subspace identities
  GeneratorNormalForm<F> out{gens, m};
  {
    std::vector<Vec> first(gens.begin(), gens.begin() + m);
    std::vector<Vec> second(gens.begin() + m, gens.end());
    std::vector<Vec> x1prods;
    for (auto& g : first) x1prods.push_back(A.mul(x1, g));
    if (!(A.ideal_span(x1prods) == A.power(2)))
      throw std::logic_error("normalize_split_generators: property (1) fails");
    for (auto& a : first)
      for (auto& b : second)
        if (!A.is_zero_vec(A.mul(a, b)))
          throw std::logic_error("normalize_split_generators: property (2) fails");
    auto K = A.ideal_span(second);
    if (!(A.ideal_product(K, K) == A.socle()))
      throw std::logic_error("normalize_split_generators: property (3) fails");
  }
  return out;
}

/// The splitting criterion: (0 : m^2) is not inside m^2.
template <class F>
bool socle_split_test(const LocalAlgebra<F>& A) {
  if (!A.is_gorenstein())
    throw std::invalid_argument("socle_split_test: not Gorenstein");
  if (A.loewy_length() < 3)
    throw std::invalid_argument("socle_split_test: lo >= 3 required");
  return !A.power(2).contains(A.field(), A.annihilator_of(A.power(2)));
}

/// Witness for R = S # T: the two unital subalgebras, the shared socle line,
/// and the verified multiplicative map off the fibre product.
template <class F>
struct DecompositionCertificate {
  LocalAlgebra<F> S, T;                 // k + (0:I) and k + I
  Subspace<F> K, I;                     // their maximal-ideal subspaces in A
  typename LocalAlgebra<F>::Vec delta;  // socle generator of A
  // phi on the fibre product basis: column i is the image in A of basis i
  DenseMatrix<F> phi;
  FibreProductWitness<F> fibre;
};

template <class F>
DecompositionCertificate<F> split_connected_sum(const LocalAlgebra<F>& A) {
  const F& k = A.field();
  using Vec = typename LocalAlgebra<F>::Vec;
  if (!socle_split_test(A))
    throw std::invalid_argument("split_connected_sum: criterion fails");

  auto m2 = A.power(2);
  auto ann = A.annihilator_of(m2);
  auto C = m2.intersect(k, ann);

  // y_1..y_n: pivot-canonical complement of m^2 n (0:m^2) inside (0:m^2)
  std::vector<Vec> ys;
  {
    auto have = C;
    for (std::size_t i = 0; i < ann.dim(); ++i) {
      Vec v = ann.basis().row_vec(i);
      if (have.contains(k, v)) continue;
      ys.push_back(v);
      DenseMatrix<F> rows(0, A.dim());
      for (std::size_t t = 0; t < have.dim(); ++t)
        rows.append_row(have.basis().row_vec(t));
      rows.append_row(v);
      have = Subspace<F>::span(k, rows);
    }
  }

  DecompositionCertificate<F> cert;
  cert.I = A.ideal_span(ys);
  cert.K = A.annihilator_of(cert.I);
  auto soc = A.socle();
  if (!(cert.I.intersect(k, cert.K) == soc))
    throw std::logic_error("split_connected_sum: I n (0:I) != soc");
  if (!(cert.I.sum(k, cert.K) == A.power(1)))
    throw std::logic_error("split_connected_sum: I + (0:I) != m");
  if (cert.I.dim() + cert.K.dim() != A.dim())
    throw std::logic_error("split_connected_sum: length identity fails");
  cert.delta = soc.basis().row_vec(0);

  cert.S = A.unital_subalgebra(cert.K);
  cert.T = A.unital_subalgebra(cert.I);
  if (!cert.S.is_gorenstein() || !cert.T.is_gorenstein())
    throw std::logic_error("split_connected_sum: factor not Gorenstein");
  if (cert.S.loewy_length() != A.loewy_length())
    throw std::logic_error("split_connected_sum: lo(S) != lo(R)");
  if (cert.T.loewy_length() != 2)
    throw std::logic_error("split_connected_sum: lo(T) != 2");

  // phi : S x_k T -> A, (lambda + p, lambda + q) |-> lambda + p + q
  cert.fibre = fibre_product(cert.S, cert.T);
  const auto& W = cert.fibre.T;
  cert.phi = DenseMatrix<F>(A.dim(), W.dim(), k.zero());
  auto set_col = [&](std::size_t c, const Vec& v) {
    for (std::size_t r = 0; r < A.dim(); ++r) cert.phi.at(r, c) = v[r];
  };
  set_col(0, A.one());
  for (std::size_t i = 1; i < cert.S.dim(); ++i)
    set_col(cert.fibre.r_coord[i], cert.K.basis().row_vec(i - 1));
  for (std::size_t j = 1; j < cert.T.dim(); ++j)
    set_col(cert.fibre.s_coord[j], cert.I.basis().row_vec(j - 1));

  auto apply_phi = [&](const Vec& w) {
    Vec out = A.zero();
    for (std::size_t c = 0; c < W.dim(); ++c) {
      if (k.is_zero(w[c])) continue;
      for (std::size_t r = 0; r < A.dim(); ++r)
        out[r] = k.add(out[r], k.mul(w[c], cert.phi.at(r, c)));
    }
    return out;
  };
  // multiplicative on every basis pair (this is where K.I = 0 enters)
  for (std::size_t i = 0; i < W.dim(); ++i)
    for (std::size_t j = 0; j < W.dim(); ++j) {
      Vec lhs = apply_phi(W.basis_product(i, j));
      Vec rhs = A.mul(apply_phi(W.e(i)), apply_phi(W.e(j)));
      if (!(lhs == rhs))
        throw std::logic_error("split_connected_sum: phi not multiplicative");
    }
  // kernel is exactly the identified socle line
  {
    auto ker = kernel_basis(k, cert.phi);
    if (ker.size() != 1)
      throw std::logic_error("split_connected_sum: ker(phi) not a line");
    auto ds = cert.S.socle().basis().row_vec(0);
    auto dt = cert.T.socle().basis().row_vec(0);
    auto line = W.sub(cert.fibre.embed_r(cert.S, ds),
                      cert.fibre.embed_s(cert.T, dt));
    DenseMatrix<F> r(0, W.dim());
    r.append_row(ker[0]);
    if (!Subspace<F>::span(k, r).contains(k, line))
      throw std::logic_error(
          "split_connected_sum: ker(phi) is not the socle line");
  }
  return cert;
}

enum class TerminalFlag { edim_le_4, lo_le_2, criterion_indecomposable };

template <class F>
struct Factorization {
  std::vector<LocalAlgebra<F>> factors;  // split-off lo-2 pieces, in order
  LocalAlgebra<F> terminal;              // the remaining lo(R) piece
  std::vector<TerminalFlag> flags;
  std::vector<DecompositionCertificate<F>> certificates;
};

/// Iterate the splitting: peel off a lo-2 factor while the criterion holds.
template <class F>
Factorization<F> factorize(const LocalAlgebra<F>& A) {
  Factorization<F> out;
  out.terminal = A;
  while (out.terminal.loewy_length() >= 3 && out.terminal.edim() >= 2 &&
         socle_split_test(out.terminal)) {
    auto cert = split_connected_sum(out.terminal);
    out.factors.push_back(cert.T);
    out.terminal = cert.S;
    out.certificates.push_back(std::move(cert));
  }
  if (out.terminal.loewy_length() <= 2) out.flags.push_back(TerminalFlag::lo_le_2);
  if (out.terminal.edim() <= 4) out.flags.push_back(TerminalFlag::edim_le_4);
  if (out.terminal.loewy_length() >= 3 &&
      (out.terminal.edim() < 2 || !socle_split_test(out.terminal)))
    out.flags.push_back(TerminalFlag::criterion_indecomposable);
  return out;
}

template <class F>
struct Multiplicity11Certificate {
  enum class Kind { edim_le_4, lo_le_2, split } kind;
  std::vector<LocalAlgebra<F>> lo2_factors;  // for the split branch
  LocalAlgebra<F> core;                      // the edim <= 4 (or lo <= 2) piece
};

/// The certificate pipeline for Gorenstein rings of length at most 11: one of
/// edim <= 4, lo <= 2, or a split into such pieces must apply.
template <class F>
Multiplicity11Certificate<F> multiplicity11_certificate(const LocalAlgebra<F>& A) {
  if (!A.is_gorenstein())
    throw std::invalid_argument("multiplicity11: not Gorenstein");
  if (A.dim() > 11)
    throw std::invalid_argument("multiplicity11: out of theorem's range");
  Multiplicity11Certificate<F> out;
  out.core = A;
  if (A.edim() <= 4) {
    out.kind = Multiplicity11Certificate<F>::Kind::edim_le_4;
    return out;
  }
  if (A.loewy_length() <= 2) {
    out.kind = Multiplicity11Certificate<F>::Kind::lo_le_2;
    return out;
  }
  out.kind = Multiplicity11Certificate<F>::Kind::split;
  while (out.core.edim() > 4 && out.core.loewy_length() >= 3) {
    if (!socle_split_test(out.core))
      throw std::logic_error(
          "multiplicity11: split criterion fails on an edim >= 5 member; this "
          "contradicts the bound and indicates a bug");
    auto cert = split_connected_sum(out.core);
    out.lo2_factors.push_back(cert.T);
    out.core = cert.S;
  }
  return out;
}

}  // namespace ringlab

#endif
