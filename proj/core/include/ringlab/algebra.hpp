#ifndef RINGLAB_ALGEBRA_HPP
#define RINGLAB_ALGEBRA_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringlab/field.hpp"
#include "ringlab/matrix.hpp"
#include "ringlab/poly.hpp"

namespace ringlab {

inline std::vector<Monomial> monomials_below_degree(std::size_t nvars, unsigned N) {
  std::vector<Monomial> out;
  Monomial cur(nvars);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == nvars) {
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur.e[i] = e;
      rec(i + 1, left - e);
    }
    cur.e[i] = 0;
  };
  rec(0, N == 0 ? 0 : N - 1);
  if (N == 0) out.clear();
  std::sort(out.begin(), out.end(), monomial_less);
  return out;
}

/// A finite-dimensional commutative local k-algebra given by a basis and a
/// multiplication table. basis[0] is the identity; every other basis element
/// lies in the maximal ideal m.
template <class F>
class LocalAlgebra {
 public:
  using Elem = typename F::Elem;
  using Vec = std::vector<Elem>;

  enum class StretchClass { stretched, almost_stretched, neither };

  /// Build k[x_1..x_n]/I by truncation: the image of I in k[x]/(x)^N is
  /// spanned by monomial multiples of the relations; row-reduce and take the
  /// standard (non-pivot) monomials as a basis. Certified once the quotient
  /// dimension is the same at two consecutive truncation degrees.
  static LocalAlgebra build(const F& k, const Presentation& pres,
                            unsigned cap = 64) {
    std::size_t n = pres.vars.size();
    if (n == 0) throw std::invalid_argument("build_algebra: no variables");
    for (auto& f : pres.relations)
      if (f.is_zero())
        throw std::invalid_argument("build_algebra: zero relation");

    unsigned N = 2;
    for (auto& f : pres.relations) N = std::max(N, f.degree() + 1);

    TruncData prev = truncate(k, pres, N);
    for (;; ++N) {
      if (N + 1 > cap)
        throw std::runtime_error(
            "build_algebra: ideal not m-primary (or exceeds truncation cap)");
      TruncData cur = truncate(k, pres, N + 1);
      unsigned maxdeg = 0;
      for (auto& m : cur.std_mons) maxdeg = std::max(maxdeg, m.degree());
      if (cur.std_mons.size() == prev.std_mons.size() && maxdeg < N)
        return finalize(k, pres, cur, N);
      prev = std::move(cur);
    }
  }

  /// Assemble an algebra directly from a multiplication table (used for
  /// quotients, subalgebras and products). Verifies the axioms.
  static LocalAlgebra from_table(const F& k, std::vector<std::string> basis_names,
                                 std::vector<Vec> table,
                                 std::vector<std::string> gen_names,
                                 std::vector<Vec> gen_images) {
    LocalAlgebra A;
    A.k_ = k;
    A.dim_ = basis_names.size();
    A.basis_names_ = std::move(basis_names);
    A.table_ = std::move(table);
    A.gen_names_ = std::move(gen_names);
    A.gens_ = std::move(gen_images);
    A.finish_and_verify();
    return A;
  }

  const F& field() const { return k_; }
  std::size_t dim() const { return dim_; }
  unsigned loewy_length() const { return loewy_; }
  bool graded() const { return graded_; }
  const std::vector<std::string>& gen_names() const { return gen_names_; }
  const std::string& basis_name(std::size_t i) const { return basis_names_[i]; }

  Vec zero() const { return Vec(dim_, k_.zero()); }
  Vec one() const {
    Vec v = zero();
    v[0] = k_.one();
    return v;
  }
  Vec e(std::size_t i) const {
    Vec v = zero();
    v[i] = k_.one();
    return v;
  }
  /// Image of presentation generator i.
  const Vec& gen(std::size_t i) const { return gens_[i]; }
  std::size_t ngens() const { return gens_.size(); }

  const Vec& basis_product(std::size_t i, std::size_t j) const {
    return table_[i * dim_ + j];
  }

  bool is_zero_vec(const Vec& v) const {
    for (auto& c : v)
      if (!k_.is_zero(c)) return false;
    return true;
  }
  Vec add(const Vec& a, const Vec& b) const {
    Vec r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) r[i] = k_.add(a[i], b[i]);
    return r;
  }
  Vec sub(const Vec& a, const Vec& b) const {
    Vec r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) r[i] = k_.sub(a[i], b[i]);
    return r;
  }
  Vec scale(const Elem& c, const Vec& a) const {
    Vec r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) r[i] = k_.mul(c, a[i]);
    return r;
  }
  Vec mul(const Vec& a, const Vec& b) const {
    Vec r = zero();
    for (std::size_t i = 0; i < dim_; ++i) {
      if (k_.is_zero(a[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (k_.is_zero(b[j])) continue;
        auto c = k_.mul(a[i], b[j]);
        const Vec& t = basis_product(i, j);
        for (std::size_t l = 0; l < dim_; ++l)
          r[l] = k_.add(r[l], k_.mul(c, t[l]));
      }
    }
    return r;
  }
  /// Multiply by a single basis element (cheaper than general mul).
  Vec mul_basis(const Vec& a, std::size_t j) const {
    Vec r = zero();
    for (std::size_t i = 0; i < dim_; ++i) {
      if (k_.is_zero(a[i])) continue;
      const Vec& t = basis_product(i, j);
      for (std::size_t l = 0; l < dim_; ++l)
        r[l] = k_.add(r[l], k_.mul(a[i], t[l]));
    }
    return r;
  }

  /// Evaluate a polynomial in the presentation generators.
  Vec eval(const Poly& f) const {
    Vec r = zero();
    for (auto& [m, c] : f.terms) {
      Vec t = one();
      for (std::size_t i = 0; i < m.e.size(); ++i)
        for (unsigned p = 0; p < m.e[i]; ++p) t = mul(t, gens_[i]);
      r = add(r, scale(k_.from_rational(c), t));
    }
    return r;
  }

  /// m^i as a subspace (clamped: i > loewy gives 0).
  const Subspace<F>& power(unsigned i) const {
    return powers_[std::min<std::size_t>(i, powers_.size() - 1)];
  }
  unsigned basis_order(std::size_t i) const { return order_[i]; }
  /// m-adic order of an element: largest i with v in m^i (loewy+1 for 0).
  unsigned order(const Vec& v) const {
    if (is_zero_vec(v)) return loewy_ + 1;
    unsigned o = 0;
    while (o + 1 < powers_.size() && powers_[o + 1].contains(k_, v)) ++o;
    return o;
  }

  std::vector<unsigned> hilbert_function() const {
    std::vector<unsigned> h;
    for (unsigned i = 0; i <= loewy_; ++i)
      h.push_back(static_cast<unsigned>(power(i).dim() - power(i + 1).dim()));
    return h;
  }

  /// The ideal generated by a set of elements, as a subspace.
  Subspace<F> ideal_span(const std::vector<Vec>& gens) const {
    DenseMatrix<F> rows(0, dim_);
    for (auto& g : gens)
      for (std::size_t j = 0; j < dim_; ++j) rows.append_row(mul_basis(g, j));
    return Subspace<F>::span(k_, rows);
  }

  /// Product ideal I·J from spanning sets.
  Subspace<F> ideal_product(const Subspace<F>& I, const Subspace<F>& J) const {
    DenseMatrix<F> rows(0, dim_);
    for (std::size_t a = 0; a < I.dim(); ++a)
      for (std::size_t b = 0; b < J.dim(); ++b)
        rows.append_row(mul(I.basis().row_vec(a), J.basis().row_vec(b)));
    return Subspace<F>::span(k_, rows);
  }

  /// (0 : J) = {a : aJ = 0}, an ideal.
  Subspace<F> annihilator_of(const Subspace<F>& J) const {
    if (J.dim() == 0) {
      DenseMatrix<F> all(0, dim_);
      for (std::size_t i = 0; i < dim_; ++i) all.append_row(e(i));
      return Subspace<F>::span(k_, all);
    }
    DenseMatrix<F> m(J.dim() * dim_, dim_);
    for (std::size_t t = 0; t < J.dim(); ++t) {
      Vec v = J.basis().row_vec(t);
      for (std::size_t j = 0; j < dim_; ++j) {
        Vec col = mul_basis(v, j);  // v * e_j = column j of the constraint
        for (std::size_t c = 0; c < dim_; ++c) m.at(t * dim_ + c, j) = col[c];
      }
    }
    auto ker = kernel_basis(k_, m);
    DenseMatrix<F> rows(0, dim_);
    for (auto& v : ker) rows.append_row(v);
    return Subspace<F>::span(k_, rows);
  }

  Subspace<F> socle() const { return annihilator_of(power(1)); }

  /// Minimal generators of an ideal: pivot-canonical lift of a basis of J/mJ.
  std::vector<Vec> min_gens(const Subspace<F>& J) const {
    Subspace<F> mJ = ideal_product(power(1), J);
    std::vector<Vec> gens;
    Subspace<F> have = mJ;
    for (std::size_t i = 0; i < J.dim(); ++i) {
      Vec v = J.basis().row_vec(i);
      if (!have.contains(k_, v)) {
        gens.push_back(v);
        DenseMatrix<F> rows(0, dim_);
        for (std::size_t r = 0; r < have.dim(); ++r)
          rows.append_row(have.basis().row_vec(r));
        rows.append_row(v);
        have = Subspace<F>::span(k_, rows);
      }
    }
    return gens;
  }
  std::size_t mu(const Subspace<F>& J) const { return min_gens(J).size(); }

  std::size_t edim() const { return power(1).dim() - power(2).dim(); }
  /// For Artinian local rings multiplicity equals length.
  std::size_t multiplicity() const { return dim_; }

  bool is_gorenstein() const {
    if (dim_ == 1) return true;  // convention: soc(k) = k, dimension 1
    return socle().dim() == 1;
  }

  StretchClass classify() const {
    std::size_t m2 = mu(power(2));
    if (m2 <= 1) return StretchClass::stretched;
    if (m2 == 2) return StretchClass::almost_stretched;
    return StretchClass::neither;
  }

  /// Quotient A/J on the complement basis of J's pivot coordinates.
  LocalAlgebra quotient(const Subspace<F>& J) const {
    if (J.dim() == dim_) throw std::invalid_argument("quotient: J is the unit ideal");
    std::vector<std::size_t> keep;
    {
      std::vector<bool> pivot(dim_, false);
      for (auto c : J.pivots()) pivot[c] = true;
      for (std::size_t i = 0; i < dim_; ++i)
        if (!pivot[i]) keep.push_back(i);
    }
    if (keep.empty() || keep[0] != 0)
      throw std::invalid_argument("quotient: J contains a unit");
    std::size_t d = keep.size();
    auto project = [&](const Vec& v) {
      Vec red = J.reduce(k_, v);
      Vec out(d);
      for (std::size_t i = 0; i < d; ++i) out[i] = red[keep[i]];
      return out;
    };
    std::vector<Vec> table(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        table[i * d + j] = project(basis_product(keep[i], keep[j]));
    std::vector<std::string> names;
    for (auto i : keep) names.push_back(basis_names_[i]);
    std::vector<Vec> gens;
    for (auto& g : gens_) gens.push_back(project(g));
    return from_table(k_, std::move(names), std::move(table), gen_names_,
                      std::move(gens));
  }
  /// Coordinates of the quotient basis inside this algebra (parallel to the
  /// basis of quotient(J)).
  std::vector<std::size_t> quotient_coords(const Subspace<F>& J) const {
    std::vector<bool> pivot(dim_, false);
    for (auto c : J.pivots()) pivot[c] = true;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < dim_; ++i)
      if (!pivot[i]) keep.push_back(i);
    return keep;
  }

  /// The local algebra k·1 ⊕ V for a multiplicatively closed V ⊆ m.
  /// Basis 0 is the identity; basis i+1 is row i of V's canonical basis.
  LocalAlgebra unital_subalgebra(const Subspace<F>& V) const {
    if (!power(1).contains(k_, V))
      throw std::invalid_argument("unital_subalgebra: V not inside m");
    std::size_t d = V.dim() + 1;
    // coordinates of an element of V in its rref basis: read off pivot coords
    auto coords = [&](const Vec& v) {
      Vec out(d, k_.zero());
      for (std::size_t i = 0; i < V.dim(); ++i) out[i + 1] = v[V.pivots()[i]];
      return out;
    };
    std::vector<Vec> table(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        if (i == 0 || j == 0) {
          table[i * d + j] = Vec(d, k_.zero());
          table[i * d + j][i == 0 ? j : i] = k_.one();
          continue;
        }
        Vec p = mul(V.basis().row_vec(i - 1), V.basis().row_vec(j - 1));
        if (!V.contains(k_, p))
          throw std::invalid_argument(
              "unital_subalgebra: V not multiplicatively closed at basis pair (" +
              std::to_string(i - 1) + "," + std::to_string(j - 1) + ")");
        table[i * d + j] = coords(p);
      }
    std::vector<std::string> names{"1"};
    std::vector<Vec> embed;  // rows of V's basis, recorded for callers via gens
    for (std::size_t i = 0; i < V.dim(); ++i)
      names.push_back("v" + std::to_string(i + 1));
    // generator data: minimal generators of the subalgebra's maximal ideal
    LocalAlgebra S = from_table(k_, std::move(names), std::move(table), {}, {});
    auto mg = S.min_gens(S.power(1));
    S.gens_ = mg;
    for (std::size_t i = 0; i < mg.size(); ++i)
      S.gen_names_.push_back("g" + std::to_string(i + 1));
    return S;
  }
  /// Lift an element of unital_subalgebra(V) back into this algebra.
  Vec lift_from_subalgebra(const Subspace<F>& V, const Vec& s) const {
    Vec out = zero();
    out[0] = s[0];
    for (std::size_t i = 0; i < V.dim(); ++i) {
      if (k_.is_zero(s[i + 1])) continue;
      Vec row = V.basis().row_vec(i);
      for (std::size_t j = 0; j < dim_; ++j)
        out[j] = k_.add(out[j], k_.mul(s[i + 1], row[j]));
    }
    return out;
  }

 private:
  struct TruncData {
    std::vector<Monomial> std_mons;   // non-pivot columns
    std::vector<Monomial> cols;       // all columns, ascending
    RrefResult<F> pivot_rows;         // reduced span of the ideal's image
  };

  static TruncData truncate(const F& k, const Presentation& pres, unsigned N) {
    std::size_t n = pres.vars.size();
    auto cols = monomials_below_degree(n, N);
    if (cols.size() > 20000)
      throw std::runtime_error("build_algebra: truncation too large");
    std::map<Monomial, std::size_t, MonomialLess> colidx;
    for (std::size_t i = 0; i < cols.size(); ++i) colidx.emplace(cols[i], i);

    DenseMatrix<F> rows(0, cols.size());
    for (auto& f : pres.relations) {
      unsigned val = f.valuation();
      for (auto& u : monomials_below_degree(n, N - std::min(N - 1, val))) {
        std::vector<Elem> row(cols.size(), k.zero());
        bool nonzero = false;
        for (auto& [m, c] : f.terms) {
          Monomial w = u * m;
          if (w.degree() >= N) continue;
          auto it = colidx.find(w);
          row[it->second] = k.add(row[it->second], k.from_rational(c));
          nonzero = true;
        }
        if (nonzero) rows.append_row(row);
      }
    }
    auto rr = rref(k, rows);
    TruncData out;
    std::vector<bool> pivot(cols.size(), false);
    for (auto c : rr.pivot_columns) pivot[c] = true;
    for (std::size_t i = 0; i < cols.size(); ++i)
      if (!pivot[i]) out.std_mons.push_back(cols[i]);
    out.pivot_rows = std::move(rr);
    out.cols = std::move(cols);
    return out;
  }

  static LocalAlgebra finalize(const F& k, const Presentation& pres,
                               const TruncData& td, unsigned N) {
    const auto& mons = td.std_mons;
    std::size_t D = mons.size();
    if (D == 0)
      throw std::invalid_argument("build_algebra: quotient is the zero ring");
    if (!(mons[0] == Monomial(pres.vars.size())))
      throw std::invalid_argument("build_algebra: relations contain a unit");
    std::map<Monomial, std::size_t, MonomialLess> idx;
    for (std::size_t i = 0; i < D; ++i) idx.emplace(mons[i], i);
    std::map<Monomial, std::size_t, MonomialLess> pividx;
    for (std::size_t i = 0; i < td.pivot_rows.pivot_columns.size(); ++i)
      pividx.emplace(td.cols[td.pivot_rows.pivot_columns[i]], i);

    auto nf_of = [&](const Monomial& w) {
      Vec v(D, k.zero());
      if (w.degree() >= N + 1) return v;  // certified inside (x)^N . I
      auto it = idx.find(w);
      if (it != idx.end()) {
        v[it->second] = k.one();
        return v;
      }
      auto ip = pividx.find(w);
      if (ip == pividx.end()) return v;  // degree N monomial beyond columns
      std::size_t r = ip->second;
      for (std::size_t c = 0; c < td.cols.size(); ++c) {
        auto& coef = td.pivot_rows.R.at(r, c);
        if (k.is_zero(coef)) continue;
        auto is = idx.find(td.cols[c]);
        if (is != idx.end()) v[is->second] = k.neg(coef);
      }
      return v;
    };

    LocalAlgebra A;
    A.k_ = k;
    A.dim_ = D;
    for (auto& m : mons) {
      Poly p = Poly::monomial(m);
      A.basis_names_.push_back(p.str(pres.vars));
    }
    A.table_.assign(D * D, Vec());
    for (std::size_t i = 0; i < D; ++i)
      for (std::size_t j = i; j < D; ++j) {
        Vec v = nf_of(mons[i] * mons[j]);
        A.table_[i * D + j] = v;
        A.table_[j * D + i] = v;
      }
    A.gen_names_ = pres.vars;
    for (std::size_t i = 0; i < pres.vars.size(); ++i)
      A.gens_.push_back(nf_of(Monomial::var(pres.vars.size(), i)));
    A.finish_and_verify();
    return A;
  }

  void finish_and_verify() {
    // m-adic filtration
    powers_.clear();
    DenseMatrix<F> full(0, dim_);
    for (std::size_t i = 0; i < dim_; ++i) full.append_row(e(i));
    powers_.push_back(Subspace<F>::span(k_, full));
    DenseMatrix<F> mrows(0, dim_);
    for (std::size_t i = 1; i < dim_; ++i) mrows.append_row(e(i));
    Subspace<F> cur = Subspace<F>::span(k_, mrows);
    while (cur.dim() > 0) {
      powers_.push_back(cur);
      if (powers_.size() > dim_ + 2)
        throw std::invalid_argument("algebra not local: m is not nilpotent");
      cur = ideal_product(powers_[1], cur);
    }
    powers_.push_back(cur);  // the zero subspace
    loewy_ = static_cast<unsigned>(powers_.size()) - 2;

    order_.assign(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) order_[i] = order(e(i));

    verify_table();

    graded_ = true;
    for (std::size_t i = 0; i < dim_ && graded_; ++i)
      for (std::size_t j = 0; j < dim_ && graded_; ++j) {
        const Vec& p = basis_product(i, j);
        for (std::size_t l = 0; l < dim_; ++l)
          if (!k_.is_zero(p[l]) && order_[l] != order_[i] + order_[j]) {
            graded_ = false;
            break;
          }
      }
  }

  void verify_table() {
    if (table_.size() != dim_ * dim_)
      throw std::invalid_argument("algebra table: wrong size");
    for (auto& v : table_)
      if (v.size() != dim_) throw std::invalid_argument("algebra table: ragged");
    for (std::size_t j = 0; j < dim_; ++j) {
      Vec le = basis_product(0, j);
      if (!(le == e(j)) || !(basis_product(j, 0) == e(j)))
        throw std::invalid_argument("algebra table: basis[0] is not an identity");
    }
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (!(basis_product(i, j) == basis_product(j, i)))
          throw std::invalid_argument("algebra table: not commutative");
    // associativity on basis triples: exhaustive for small tables, a fixed
    // pseudo-random sample for large ones
    auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
      Vec lhs = mul(basis_product(a, b), e(c));
      Vec rhs = mul(e(a), basis_product(b, c));
      if (!(lhs == rhs))
        throw std::invalid_argument("algebra table: not associative at (" +
                                    std::to_string(a) + "," + std::to_string(b) +
                                    "," + std::to_string(c) + ")");
    };
    if (dim_ <= 24) {
      for (std::size_t a = 0; a < dim_; ++a)
        for (std::size_t b = 0; b < dim_; ++b)
          for (std::size_t c = 0; c < dim_; ++c) check_triple(a, b, c);
    } else {
      std::mt19937_64 rng(0x5eed);
      for (int t = 0; t < 4000; ++t)
        check_triple(rng() % dim_, rng() % dim_, rng() % dim_);
    }
    // filtration compatibility: ord(b_i b_j) >= ord(b_i) + ord(b_j)
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        const Vec& p = basis_product(i, j);
        if (!is_zero_vec(p) && order(p) < order_[i] + order_[j])
          throw std::invalid_argument("algebra table: order drops on product");
      }
  }

  F k_{init_field()};
  std::size_t dim_ = 0;
  std::vector<std::string> basis_names_;
  std::vector<Vec> table_;  // row-major D x D, entries are coordinate vectors
  std::vector<std::string> gen_names_;
  std::vector<Vec> gens_;
  std::vector<Subspace<F>> powers_;  // m^0 .. m^{loewy+1} (last = 0)
  std::vector<unsigned> order_;
  unsigned loewy_ = 0;
  bool graded_ = false;

  static F init_field() {
    if constexpr (std::is_same_v<F, QqField>) return QqField();
    else return F(32003);
  }
};

}  // namespace ringlab

#endif
