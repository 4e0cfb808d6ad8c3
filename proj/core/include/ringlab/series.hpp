#pragma once

#include <stdexcept>
#include <vector>

#include "ringlab/products.hpp"
#include "ringlab/resolution.hpp"

namespace ringlab {

// power series with exact rational coefficients, truncated at degree N
struct TruncatedSeries {
  std::size_t N = 0;
  std::vector<Rational> c;  // size N + 1

  TruncatedSeries() : c(1, Rational(0)) {}
  explicit TruncatedSeries(std::size_t n) : N(n), c(n + 1, Rational(0)) {}
  static TruncatedSeries from(std::vector<Rational> coeffs) {
    TruncatedSeries s(coeffs.size() - 1);
    s.c = std::move(coeffs);
    return s;
  }
  static TruncatedSeries one(std::size_t n) {
    TruncatedSeries s(n);
    s.c[0] = 1;
    return s;
  }
  const Rational& coeff(std::size_t i) const { return c[i]; }

  TruncatedSeries truncated(std::size_t n) const {
    TruncatedSeries s(n);
    for (std::size_t i = 0; i <= n && i <= N; ++i) s.c[i] = c[i];
    return s;
  }
};

inline std::size_t common_n(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.N < b.N ? a.N : b.N;
}

inline TruncatedSeries operator+(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  TruncatedSeries s(common_n(a, b));
  for (std::size_t i = 0; i <= s.N; ++i) s.c[i] = a.c[i] + b.c[i];
  return s;
}

inline TruncatedSeries operator-(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  TruncatedSeries s(common_n(a, b));
  for (std::size_t i = 0; i <= s.N; ++i) s.c[i] = a.c[i] - b.c[i];
  return s;
}

inline TruncatedSeries operator*(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  TruncatedSeries s(common_n(a, b));
  for (std::size_t i = 0; i <= s.N; ++i)
    for (std::size_t j = 0; j + i <= s.N; ++j) s.c[i + j] += a.c[i] * b.c[j];
  return s;
}

inline TruncatedSeries operator*(const Rational& r, const TruncatedSeries& a) {
  TruncatedSeries s = a;
  for (auto& x : s.c) x *= r;
  return s;
}

inline TruncatedSeries reciprocal(const TruncatedSeries& a) {
  if (a.c[0] == 0)
    throw std::invalid_argument("reciprocal: zero constant term");
  TruncatedSeries s(a.N);
  Rational inv0 = Rational(1) / a.c[0];
  s.c[0] = inv0;
  for (std::size_t i = 1; i <= a.N; ++i) {
    Rational acc(0);
    for (std::size_t j = 1; j <= i; ++j) acc += a.c[j] * s.c[i - j];
    s.c[i] = -inv0 * acc;
  }
  return s;
}

inline bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::size_t n = common_n(a, b);
  for (std::size_t i = 0; i <= n; ++i)
    if (a.c[i] != b.c[i]) return false;
  return true;
}

// numerator / denominator with den(0) = 1
struct RationalFn {
  std::vector<Rational> num{Rational(1)};
  std::vector<Rational> den{Rational(1)};

  RationalFn() = default;
  RationalFn(std::vector<Rational> n, std::vector<Rational> d)
      : num(std::move(n)), den(std::move(d)) {
    if (den.empty() || den[0] == 0)
      throw std::invalid_argument("RationalFn: denominator constant term is 0");
    Rational d0 = den[0];
    if (d0 != 1) {
      for (auto& x : num) x /= d0;
      for (auto& x : den) x /= d0;
    }
  }
  static RationalFn polynomial(std::vector<Rational> p) {
    return RationalFn(std::move(p), {Rational(1)});
  }

  TruncatedSeries expand(std::size_t N) const {
    TruncatedSeries n(N), d(N);
    for (std::size_t i = 0; i < num.size() && i <= N; ++i) n.c[i] = num[i];
    for (std::size_t i = 0; i < den.size() && i <= N; ++i) d.c[i] = den[i];
    return n * reciprocal(d);
  }

  std::size_t num_degree() const {
    std::size_t d = 0;
    for (std::size_t i = 0; i < num.size(); ++i)
      if (num[i] != 0) d = i;
    return d;
  }
  std::size_t den_degree() const {
    std::size_t d = 0;
    for (std::size_t i = 0; i < den.size(); ++i)
      if (den[i] != 0) d = i;
    return d;
  }
};

inline std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                                      const std::vector<Rational>& b) {
  std::vector<Rational> c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// exact polynomial division; nullopt when the remainder is nonzero
inline std::optional<std::vector<Rational>> poly_divide(
    std::vector<Rational> a, const std::vector<Rational>& b) {
  std::size_t db = 0;
  bool bz = true;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] != 0) {
      db = i;
      bz = false;
    }
  if (bz) return std::nullopt;
  while (!a.empty() && a.back() == 0) a.pop_back();
  if (a.empty()) return std::vector<Rational>{Rational(0)};
  if (a.size() - 1 < db) return std::nullopt;
  std::vector<Rational> q(a.size() - db, Rational(0));
  for (std::size_t i = a.size(); i-- > db;) {
    Rational f = a[i] / b[db];
    q[i - db] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= f * b[j];
  }
  for (auto& x : a)
    if (x != 0) return std::nullopt;
  return q;
}

// ---- Poincare series from resolutions ----

template <class F>
TruncatedSeries poincare_series(const LocalAlgebra<F>& A,
                                const PresentedModule<F>& M, std::size_t N,
                                ResolveOptions opt = {}) {
  auto b = betti_sequence(A, M, N, opt);
  TruncatedSeries s(N);
  for (std::size_t i = 0; i <= N; ++i) s.c[i] = Rational(b[i]);
  return s;
}

template <class F>
TruncatedSeries poincare_k(const LocalAlgebra<F>& A, std::size_t N,
                           ResolveOptions opt = {}) {
  return poincare_series(A, PresentedModule<F>::residue_field(A), N, opt);
}

struct CheckReport {
  bool ok = true;
  std::vector<std::size_t> bad;  // indices of disagreeing coefficients
  TruncatedSeries lhs, rhs;
};

inline CheckReport compare_series(const TruncatedSeries& l,
                                  const TruncatedSeries& r) {
  CheckReport rep;
  rep.lhs = l;
  rep.rhs = r;
  for (std::size_t i = 0; i <= common_n(l, r); ++i)
    if (l.c[i] != r.c[i]) {
      rep.ok = false;
      rep.bad.push_back(i);
    }
  return rep;
}

// re-present a module over R as a module over the fibre product R x_k S
// (the other maximal ideal acts by zero)
template <class F>
PresentedModule<F> pull_back_module(const FibreProductWitness<F>& w,
                                    const LocalAlgebra<F>& R,
                                    const LocalAlgebra<F>& S,
                                    const PresentedModule<F>& M) {
  PresentedModule<F> out;
  out.rank = M.rank;
  for (auto& rel : M.relations) {
    std::vector<typename LocalAlgebra<F>::Vec> lifted;
    for (auto& e : rel) lifted.push_back(w.embed_r(R, e));
    out.relations.push_back(std::move(lifted));
  }
  auto sgens = S.min_gens(S.power(1));
  for (std::size_t g = 0; g < M.rank; ++g)
    for (auto& y : sgens) {
      std::vector<typename LocalAlgebra<F>::Vec> rel(M.rank, w.T.zero());
      rel[g] = w.embed_s(S, y);
      out.relations.push_back(std::move(rel));
    }
  return out;
}

template <class F>
struct DressReport {
  CheckReport ring;
  std::optional<CheckReport> module;
  FibreProductWitness<F> witness;
};

template <class F>
DressReport<F> check_dress(const LocalAlgebra<F>& R, const LocalAlgebra<F>& S,
                           const std::optional<PresentedModule<F>>& M,
                           std::size_t N, ResolveOptions opt = {}) {
  DressReport<F> rep{.ring = {}, .module = {}, .witness = fibre_product(R, S)};
  auto PR = poincare_k(R, N, opt);
  auto PS = poincare_k(S, N, opt);
  auto PT = poincare_k(rep.witness.T, N, opt);
  auto one = TruncatedSeries::one(N);
  rep.ring = compare_series(reciprocal(PT),
                            reciprocal(PR) + reciprocal(PS) - one);
  if (M) {
    auto PM_R = poincare_series(R, *M, N, opt);
    auto MT = pull_back_module(rep.witness, R, S, *M);
    auto PM_T = poincare_series(rep.witness.T, MT, N, opt);
    auto rhs = (PR * reciprocal(PM_R)) *
               (reciprocal(PR) + reciprocal(PS) - one);
    rep.module = compare_series(reciprocal(PM_T), rhs);
  }
  return rep;
}

template <class F>
CheckReport check_levin_socle(const LocalAlgebra<F>& R, std::size_t N,
                              ResolveOptions opt = {}) {
  if (!R.is_gorenstein())
    throw std::invalid_argument("check_levin_socle: not Gorenstein");
  if (R.edim() < 2)
    throw std::invalid_argument("check_levin_socle: edim < 2");
  auto P = poincare_k(R, N, opt);
  auto Rbar = R.quotient(R.socle());
  auto Pbar = poincare_k(Rbar, N, opt);
  // t^2 * P
  TruncatedSeries t2P(N);
  for (std::size_t i = 2; i <= N; ++i) t2P.c[i] = P.c[i - 2];
  return compare_series(Pbar, P * reciprocal(TruncatedSeries::one(N) - t2P));
}

enum class GolodVerdict { numerically_golod, not_golod, inconclusive };

template <class F>
GolodVerdict golod_certificate(const LocalAlgebra<F>& A, std::size_t N,
                               ResolveOptions opt = {}) {
  auto P = poincare_k(A, N, opt);
  auto kappa = koszul_homology(A).kappa;
  std::size_t n = kappa.size() - 1;
  // bound: (1+t)^n / (1 - t (kappa(t) - 1))
  TruncatedSeries numer = TruncatedSeries::one(N);
  {
    TruncatedSeries onet(N);
    onet.c[0] = 1;
    if (N >= 1) onet.c[1] = 1;
    for (std::size_t i = 0; i < n; ++i) numer = numer * onet;
  }
  TruncatedSeries den = TruncatedSeries::one(N);
  for (std::size_t i = 1; i < kappa.size(); ++i)
    if (i + 1 <= N) den.c[i + 1] -= Rational(kappa[i]);
  auto bound = numer * reciprocal(den);
  bool equal = true, below = false, above = false;
  for (std::size_t i = 0; i <= N; ++i) {
    if (P.c[i] < bound.c[i]) below = true;
    if (P.c[i] > bound.c[i]) above = true;
    if (P.c[i] != bound.c[i]) equal = false;
  }
  if (above) return GolodVerdict::inconclusive;  // bound violated: bad data
  if (equal) return GolodVerdict::numerically_golod;
  return below ? GolodVerdict::not_golod : GolodVerdict::inconclusive;
}

template <class F>
RationalFn backelin_roos_denominator(const LocalAlgebra<F>& A) {
  if (!A.is_gorenstein())
    throw std::invalid_argument("backelin_roos_denominator: not Gorenstein");
  if (A.edim() < 2)
    throw std::invalid_argument("backelin_roos_denominator: edim < 2");
  auto kappa = koszul_homology(A).kappa;
  std::size_t n = kappa.size() - 1;
  // d_R(t) = 1 - t (P^Q_R(t) - 1) + t^{n+1} (1 + t)
  std::vector<Rational> d(n + 3, Rational(0));
  d[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) d[i + 1] -= Rational(kappa[i]);
  d[n + 1] += 1;
  d[n + 2] += 1;
  return RationalFn::polynomial(std::move(d));
}

struct DenominatorReport {
  bool ok = true;
  std::vector<std::size_t> bad;       // nonzero coefficients in the window
  std::vector<Rational> poly_part;    // coefficients below window_start
};

template <class F>
DenominatorReport check_denominator(const LocalAlgebra<F>& A,
                                    const PresentedModule<F>& M,
                                    const RationalFn& d, std::size_t N,
                                    std::size_t window_start,
                                    ResolveOptions opt = {}) {
  auto P = poincare_series(A, M, N, opt);
  auto prod = d.expand(N) * P;
  DenominatorReport rep;
  for (std::size_t i = 0; i < window_start && i <= N; ++i)
    rep.poly_part.push_back(prod.c[i]);
  for (std::size_t i = window_start; i <= N; ++i)
    if (prod.c[i] != 0) {
      rep.ok = false;
      rep.bad.push_back(i);
    }
  return rep;
}

// default window: the paper gives no numerator degree bound for general M
template <class F>
std::size_t default_window_start(const LocalAlgebra<F>& A,
                                 const RationalFn& d) {
  return d.num_degree() + A.dim();
}

template <class F>
struct StretchedPrediction {
  RationalFn fn;
  bool verified = false;
  TruncatedSeries predicted, computed;
};

// closed Poincare forms for the classes the paper covers; anything else is
// rejected with "no prediction from the paper"
template <class F>
StretchedPrediction<F> stretched_poincare(const LocalAlgebra<F>& A,
                                          std::size_t verify_N = 8,
                                          ResolveOptions opt = {}) {
  std::size_t n = A.edim();
  std::size_t mu2 = A.mu(A.power(2));
  StretchedPrediction<F> out;
  if (A.is_gorenstein() && mu2 <= 2) {
    if (n == 0)
      out.fn = RationalFn::polynomial({Rational(1)});
    else if (n == 1)
      out.fn = RationalFn({Rational(1)}, {Rational(1), Rational(-1)});
    else
      out.fn = RationalFn({Rational(1)},
                          {Rational(1), Rational(-(long long)n), Rational(1)});
  } else if (mu2 <= 1) {
    // stretched Artinian: fibre decomposition into a stretched Gorenstein
    // piece and a square-zero piece; type r = n means Golod
    std::size_t r = A.socle().dim();
    if (r == n)
      out.fn = RationalFn({Rational(1)},
                          {Rational(1), Rational(-(long long)n)});
    else
      out.fn = RationalFn({Rational(1)},
                          {Rational(1), Rational(-(long long)n), Rational(1)});
  } else {
    throw std::invalid_argument("no prediction from the paper");
  }
  out.predicted = out.fn.expand(verify_N);
  out.computed = poincare_k(A, verify_N, opt);
  out.verified = out.predicted == out.computed;
  return out;
}

inline TruncatedSeries derive_connected_sum_poincare(const TruncatedSeries& PR,
                                                     const TruncatedSeries& PS) {
  std::size_t N = common_n(PR, PS);
  for (auto* p : {&PR, &PS}) {
    if (p->c[0] != 1 || N < 1 || p->c[1] < 2)
      throw std::invalid_argument(
          "derive_connected_sum_poincare: input is not P_k of a Gorenstein "
          "ring with edim >= 2");
  }
  auto one = TruncatedSeries::one(N);
  auto levin = [&](const TruncatedSeries& P) {
    TruncatedSeries t2P(N);
    for (std::size_t i = 2; i <= N; ++i) t2P.c[i] = P.c[i - 2];
    return P * reciprocal(one - t2P);  // P of the socle quotient
  };
  auto br = levin(PR.truncated(N)), bs = levin(PS.truncated(N));
  auto inv_sharp_bar = reciprocal(br) + reciprocal(bs) - one;
  auto sharp_bar = reciprocal(inv_sharp_bar);
  // invert the Levin identity
  TruncatedSeries t2B(N);
  for (std::size_t i = 2; i <= N; ++i) t2B.c[i] = sharp_bar.c[i - 2];
  return sharp_bar * reciprocal(one + t2B);
}

struct DeviationVector {
  std::vector<long long> e;  // e[i] for i = 1..N (index 0 unused)
};

inline DeviationVector deviations(const TruncatedSeries& P, std::size_t N) {
  if (P.c[0] != 1)
    throw std::invalid_argument("deviations: constant term is not 1");
  DeviationVector dv;
  dv.e.assign(N + 1, 0);
  TruncatedSeries rem = P.truncated(N);
  for (std::size_t i = 1; i <= N; ++i) {
    Rational a = rem.c[i];
    if (boost::multiprecision::denominator(a) != 1 || a < 0)
      throw std::invalid_argument(
          "series is not a Poincare series of a local ring to this degree");
    long long ei = static_cast<long long>(
        boost::multiprecision::numerator(a).convert_to<long long>());
    dv.e[i] = ei;
    if (ei == 0) continue;
    // divide out (1 + t^i)^{e_i} (i odd) or multiply by (1 - t^i)^{e_i}
    TruncatedSeries fac = TruncatedSeries::one(N);
    fac.c[i] = i % 2 == 1 ? 1 : -1;
    for (long long r = 0; r < ei; ++r)
      rem = i % 2 == 1 ? rem * reciprocal(fac) : rem * fac;
  }
  return dv;
}

inline TruncatedSeries deviation_product(const DeviationVector& dv,
                                         std::size_t N) {
  TruncatedSeries p = TruncatedSeries::one(N);
  for (std::size_t i = 1; i < dv.e.size() && i <= N; ++i) {
    TruncatedSeries fac = TruncatedSeries::one(N);
    fac.c[i] = i % 2 == 1 ? 1 : -1;
    for (long long r = 0; r < dv.e[i]; ++r)
      p = i % 2 == 1 ? p * fac : p * reciprocal(fac);
  }
  return p;
}

struct Prl95Report {
  bool hypothesis_ok = false;  // d * P is polynomial through the window
  bool divides = false;
  std::vector<Rational> poly_part;
  std::vector<Rational> exterior_product;  // prod (1+t^{2i+1})^{e_{2i+1}}
};

template <class F>
Prl95Report check_prl9_5_divisibility(const LocalAlgebra<F>& A,
                                      const RationalFn& d, std::size_t level,
                                      std::size_t N, ResolveOptions opt = {}) {
  auto P = poincare_k(A, N, opt);
  auto prod = d.expand(N) * P;
  Prl95Report rep;
  std::size_t window = default_window_start(A, d);
  rep.hypothesis_ok = true;
  for (std::size_t i = window; i <= N; ++i)
    if (prod.c[i] != 0) rep.hypothesis_ok = false;
  for (std::size_t i = 0; i < window && i <= N; ++i)
    rep.poly_part.push_back(prod.c[i]);
  while (!rep.poly_part.empty() && rep.poly_part.back() == 0)
    rep.poly_part.pop_back();
  if (!rep.hypothesis_ok) return rep;
  auto dv = deviations(P, N);
  std::vector<Rational> ext{Rational(1)};
  for (std::size_t deg = 1; deg <= level; deg += 2) {
    long long e = deg < dv.e.size() ? dv.e[deg] : 0;
    std::vector<Rational> fac(deg + 1, Rational(0));
    fac[0] = 1;
    fac[deg] = 1;
    for (long long r = 0; r < e; ++r) ext = poly_mul(ext, fac);
  }
  rep.exterior_product = ext;
  if (rep.poly_part.empty()) return rep;
  rep.divides = poly_divide(ext, rep.poly_part).has_value();
  return rep;
}

}  // namespace ringlab
