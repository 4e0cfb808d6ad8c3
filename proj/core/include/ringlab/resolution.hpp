#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ringlab/algebra.hpp"
#include "ringlab/matrix.hpp"

namespace ringlab {

// a finitely generated module A^rank / (columns of the presentation matrix)
template <class F>
struct PresentedModule {
  using Vec = typename LocalAlgebra<F>::Vec;

  std::size_t rank = 1;
  std::vector<std::vector<Vec>> relations;  // each relation: rank entries

  static PresentedModule free_module(std::size_t r) {
    PresentedModule m;
    m.rank = r;
    return m;
  }
  static PresentedModule residue_field(const LocalAlgebra<F>& A) {
    PresentedModule m;
    m.rank = 1;
    for (std::size_t i = 0; i < A.ngens(); ++i)
      m.relations.push_back({A.gen(i)});
    return m;
  }
  static PresentedModule cyclic(const LocalAlgebra<F>& A,
                                const std::vector<Vec>& ideal_gens) {
    PresentedModule m;
    m.rank = 1;
    for (auto& g : ideal_gens) m.relations.push_back({g});
    return m;
  }
};

// column-sparse matrix with entries in the algebra (differentials get large
// but stay thin, so a dense rank x cols x dim store is out of the question)
template <class F>
struct AlgMatrix {
  using Vec = typename LocalAlgebra<F>::Vec;
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<std::pair<std::size_t, Vec>>> col;
};

template <class F>
struct ResolutionData {
  std::vector<std::size_t> betti;  // beta_0 .. beta_N
  std::vector<AlgMatrix<F>> d;     // d_1 .. d_N
};

struct ResolveOptions {
  std::size_t max_cells = 200'000'000;  // per elimination block
};

namespace detail {

template <class F>
typename LocalAlgebra<F>::Vec unit_inverse(
    const LocalAlgebra<F>& A, const typename LocalAlgebra<F>::Vec& u) {
  std::size_t D = A.dim();
  DenseMatrix<F> m(D, D);
  for (std::size_t j = 0; j < D; ++j) {
    auto c = A.mul_basis(u, j);
    for (std::size_t i = 0; i < D; ++i) m.at(i, j) = c[i];
  }
  auto z = solve(A.field(), m, A.one());
  if (!z) throw std::invalid_argument("unit_inverse: element is not a unit");
  return *z;
}

// v in A^rank times the basis element e_b of A, chunk by chunk
template <class F>
std::vector<typename F::Elem> free_mul_basis(
    const LocalAlgebra<F>& A, std::size_t rank,
    const std::vector<typename F::Elem>& v, std::size_t b) {
  std::size_t D = A.dim();
  std::vector<typename F::Elem> out(rank * D, A.field().zero());
  typename LocalAlgebra<F>::Vec chunk(D);
  for (std::size_t r = 0; r < rank; ++r) {
    std::copy(v.begin() + r * D, v.begin() + (r + 1) * D, chunk.begin());
    auto p = A.mul_basis(chunk, b);
    std::copy(p.begin(), p.end(), out.begin() + r * D);
  }
  return out;
}

}  // namespace detail

// strip unit entries (and zero columns); betti numbers are computed from the
// minimized presentation so they do not depend on how the module was handed in
template <class F>
PresentedModule<F> minimize_presentation(const LocalAlgebra<F>& A,
                                         PresentedModule<F> M) {
  const F& k = A.field();
  std::size_t D = A.dim();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < M.relations.size() && !changed; ++c)
      for (std::size_t r = 0; r < M.rank && !changed; ++r) {
        if (k.is_zero(M.relations[c][r][0])) continue;
        auto zinv = detail::unit_inverse(A, M.relations[c][r]);
        // column operations: clear row r from every other relation
        for (std::size_t c2 = 0; c2 < M.relations.size(); ++c2) {
          if (c2 == c) continue;
          auto coeff = A.mul(M.relations[c2][r], zinv);
          for (std::size_t r2 = 0; r2 < M.rank; ++r2)
            M.relations[c2][r2] = A.sub(M.relations[c2][r2],
                                        A.mul(coeff, M.relations[c][r2]));
        }
        // drop the generator r and the pivot relation c
        for (auto& rel : M.relations) rel.erase(rel.begin() + r);
        M.relations.erase(M.relations.begin() + c);
        M.rank -= 1;
        changed = true;
      }
  }
  std::vector<std::vector<typename LocalAlgebra<F>::Vec>> keep;
  for (auto& rel : M.relations) {
    bool nz = false;
    for (auto& e : rel)
      if (!A.is_zero_vec(e)) nz = true;
    if (nz) keep.push_back(std::move(rel));
  }
  M.relations = std::move(keep);
  return M;
}

namespace detail {

// one resolution step over an explicit kernel; three regimes share this class
template <class F>
class Resolver {
  using Elem = typename F::Elem;
  using Vec = typename LocalAlgebra<F>::Vec;
  using Row = std::vector<Elem>;

 public:
  Resolver(const LocalAlgebra<F>& A, ResolveOptions opt) : A_(A), opt_(opt) {
    D_ = A.dim();
    for (std::size_t b = 0; b < D_; ++b) {
      unsigned o = A.basis_order(b);
      if (ord_basis_.size() <= o) ord_basis_.resize(o + 1);
      ord_basis_[o].push_back(b);
    }
    square_zero_ring_ = A.power(2).dim() == 0;
  }

  ResolutionData<F> run(const PresentedModule<F>& M0, std::size_t N) {
    auto M = minimize_presentation(A_, M0);
    ResolutionData<F> res;
    res.betti.push_back(M.rank);
    rankF_ = M.rank;
    gdegF_.assign(rankF_, 0u);
    // kernel of A^rank -> M: the submodule spanned by the relations
    DenseMatrix<F> rows(0, rankF_ * D_);
    for (auto& rel : M.relations) {
      Row flat(rankF_ * D_, A_.field().zero());
      for (std::size_t r = 0; r < rankF_; ++r)
        std::copy(rel[r].begin(), rel[r].end(), flat.begin() + r * D_);
      for (std::size_t b = 0; b < D_; ++b)
        rows.append_row(free_mul_basis(A_, rankF_, flat, b));
    }
    V_ = Subspace<F>::span(A_.field(), rows).basis();
    mode_ = Mode::dense;
    tried_grading_ = false;

    for (std::size_t i = 1; i <= N; ++i) {
      switch (mode_) {
        case Mode::dense: step_dense(res); break;
        case Mode::graded: step_graded(res); break;
        case Mode::bookkeeping: step_bookkeeping(res); break;
      }
    }
    return res;
  }

 private:
  enum class Mode { dense, graded, bookkeeping };

  void step_dense(ResolutionData<F>& res) {
    const F& k = A_.field();
    std::size_t amb = rankF_ * D_;
    if (V_.rows() == 0) {
      res.betti.push_back(0);
      AlgMatrix<F> d;
      d.rows = rankF_;
      res.d.push_back(std::move(d));
      rankF_ = 0;
      gdegF_.clear();
      return;
    }
    // over a square-zero ring the kernel is in m*F and killed by m, so the
    // whole tail of the resolution is bookkeeping; keep that path dense-free
    if (A_.graded() && !square_zero_ring_ && !tried_grading_) {
      tried_grading_ = true;
      if (to_graded()) {
        step_graded(res);
        return;
      }
    }
    // m * V
    DenseMatrix<F> mv(0, amb);
    for (std::size_t b = 0; b < D_; ++b) {
      if (A_.basis_order(b) == 0) continue;
      for (std::size_t r = 0; r < V_.rows(); ++r)
        mv.append_row(free_mul_basis(A_, rankF_, V_.row_vec(r), b));
    }
    auto mvr = rref(k, mv);
    DenseMatrix<F> acc(0, amb);
    for (std::size_t r = 0; r < mvr.rank; ++r) acc.append_row(mvr.R.row_vec(r));
    std::vector<Row> gens;
    for (std::size_t r = 0; r < V_.rows(); ++r) {
      Row v = V_.row_vec(r);
      if (append_if_independent(acc, v)) gens.push_back(V_.row_vec(r));
    }
    std::size_t beta = gens.size();
    res.betti.push_back(beta);
    res.d.push_back(columns_to_alg(gens));

    bool mv_zero = mvr.rank == 0;
    if (square_zero_ring_ && mv_zero) {
      // all later kernels are m * (free module); pure bookkeeping from here
      mode_ = Mode::bookkeeping;
      rankF_ = beta;
      return;
    }
    // next kernel: columns indexed by (gen j, positive-order basis b); the
    // missing unit columns cannot appear in any kernel vector (minimality)
    std::size_t cols = beta * (D_ - 1);
    if (amb * cols > opt_.max_cells)
      throw std::runtime_error("resolution size guard exceeded (dense step)");
    DenseMatrix<F> m(amb, cols);
    std::size_t c = 0;
    for (std::size_t j = 0; j < beta; ++j)
      for (std::size_t b = 1; b < D_; ++b, ++c) {
        auto col = free_mul_basis(A_, rankF_, gens[j], b);
        for (std::size_t rr = 0; rr < amb; ++rr) m.at(rr, c) = col[rr];
      }
    auto ker = kernel_basis(k, m);
    DenseMatrix<F> nv(0, beta * D_);
    for (auto& kv : ker) {
      Row flat(beta * D_, k.zero());
      std::size_t cc = 0;
      for (std::size_t j = 0; j < beta; ++j)
        for (std::size_t b = 1; b < D_; ++b, ++cc) flat[j * D_ + b] = kv[cc];
      nv.append_row(std::move(flat));
    }
    V_ = std::move(nv);
    rankF_ = beta;
    gdegF_.assign(beta, 0u);
  }

  void step_bookkeeping(ResolutionData<F>& res) {
    std::size_t n = D_ - 1;
    std::size_t beta = rankF_ * n;
    res.betti.push_back(beta);
    AlgMatrix<F> d;
    d.rows = rankF_;
    d.cols = beta;
    d.col.resize(beta);
    std::size_t c = 0;
    for (std::size_t j = 0; j < rankF_; ++j)
      for (std::size_t b = 1; b < D_; ++b, ++c) d.col[c] = {{j, A_.e(b)}};
    res.d.push_back(std::move(d));
    rankF_ = beta;
  }

  // ---- graded regime: everything is per internal degree ----

  // ambient coordinates of degree e: (gen j, basis b) with gdeg[j]+ord(b) = e
  std::vector<std::pair<std::size_t, std::size_t>> amb_index(unsigned e) const {
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    for (std::size_t j = 0; j < gdegF_.size(); ++j) {
      if (gdegF_[j] > e) continue;
      unsigned o = e - gdegF_[j];
      if (o >= ord_basis_.size()) continue;
      for (auto b : ord_basis_[o]) idx.emplace_back(j, b);
    }
    return idx;
  }

  // expand a flat ambient vector into the degree-e coordinate list
  Row restrict_to(const Row& flat,
                  const std::vector<std::pair<std::size_t, std::size_t>>& idx)
      const {
    Row out(idx.size(), A_.field().zero());
    for (std::size_t i = 0; i < idx.size(); ++i)
      out[i] = flat[idx[i].first * D_ + idx[i].second];
    return out;
  }

  bool to_graded() {
    // split the kernel into homogeneous components; if the span is unchanged
    // the kernel is graded and all further steps can work per degree
    const F& k = A_.field();
    std::map<unsigned, DenseMatrix<F>> comps;
    DenseMatrix<F> all(0, rankF_ * D_);
    for (std::size_t r = 0; r < V_.rows(); ++r) {
      std::map<unsigned, Row> parts;
      for (std::size_t j = 0; j < rankF_; ++j)
        for (std::size_t b = 0; b < D_; ++b) {
          auto& x = V_.at(r, j * D_ + b);
          if (k.is_zero(x)) continue;
          unsigned e = gdegF_[j] + A_.basis_order(b);
          auto it = parts.emplace(e, Row(rankF_ * D_, k.zero())).first;
          it->second[j * D_ + b] = x;
        }
      for (auto& [e, p] : parts) all.append_row(p);
    }
    if (Subspace<F>::span(k, all).dim() != V_.rows()) return false;
    // rebuild the kernel per degree from the homogeneous components
    std::map<unsigned, DenseMatrix<F>> vdeg;
    for (std::size_t r = 0; r < all.rows(); ++r) {
      unsigned e = 0;
      for (std::size_t j = 0; j < rankF_ && e == 0; ++j)
        for (std::size_t b = 0; b < D_; ++b)
          if (!k.is_zero(all.at(r, j * D_ + b))) {
            e = gdegF_[j] + A_.basis_order(b);
            break;
          }
      auto idx = amb_index(e);
      auto it = vdeg.emplace(e, DenseMatrix<F>(0, idx.size())).first;
      it->second.append_row(restrict_to(all.row_vec(r), idx));
    }
    Vg_.clear();
    for (auto& [e, mrows] : vdeg)
      Vg_.emplace(e, Subspace<F>::span(k, mrows).basis());
    mode_ = Mode::graded;
    return true;
  }

  // multiply a degree-g ambient vector (coords idx_g) by basis b, landing in
  // degree g + ord(b); returns coordinates on idx_target
  Row graded_mul(const Row& v,
                 const std::vector<std::pair<std::size_t, std::size_t>>& idx_g,
                 std::size_t b,
                 const std::vector<std::pair<std::size_t, std::size_t>>&
                     idx_target) const {
    const F& k = A_.field();
    // accumulate per-generator algebra chunks
    std::map<std::size_t, Vec> chunks;
    for (std::size_t i = 0; i < idx_g.size(); ++i) {
      if (k.is_zero(v[i])) continue;
      auto [j, b0] = idx_g[i];
      const Vec& t = A_.basis_product(b0, b);
      auto it = chunks.emplace(j, A_.zero()).first;
      for (std::size_t l = 0; l < D_; ++l)
        if (!k.is_zero(t[l]))
          it->second[l] = k.add(it->second[l], k.mul(v[i], t[l]));
    }
    Row out(idx_target.size(), k.zero());
    for (std::size_t i = 0; i < idx_target.size(); ++i) {
      auto [j, b1] = idx_target[i];
      auto it = chunks.find(j);
      if (it != chunks.end()) out[i] = it->second[b1];
    }
    return out;
  }

  void step_graded(ResolutionData<F>& res) {
    const F& k = A_.field();
    // minimal generators per degree: complement of m*V inside V
    std::vector<unsigned> gdeg_new;
    std::vector<std::pair<unsigned, Row>> gens;  // (degree, coords on idx(e))
    for (auto& [e, ve] : Vg_) {
      if (ve.rows() == 0) continue;
      auto idx_e = amb_index(e);
      DenseMatrix<F> mv(0, idx_e.size());
      for (unsigned o = 1; o < ord_basis_.size(); ++o) {
        if (o > e) break;
        auto it = Vg_.find(e - o);
        if (it == Vg_.end()) continue;
        auto idx_lo = amb_index(e - o);
        for (std::size_t r = 0; r < it->second.rows(); ++r)
          for (auto b : ord_basis_[o])
            mv.append_row(
                graded_mul(it->second.row_vec(r), idx_lo, b, idx_e));
      }
      auto mvr = rref(k, mv);
      DenseMatrix<F> acc(0, idx_e.size());
      for (std::size_t r = 0; r < mvr.rank; ++r)
        acc.append_row(mvr.R.row_vec(r));
      for (std::size_t r = 0; r < ve.rows(); ++r) {
        Row v = ve.row_vec(r);
        if (append_if_independent(acc, v)) {
          gens.emplace_back(e, ve.row_vec(r));
          gdeg_new.push_back(e);
        }
      }
    }
    std::size_t beta = gens.size();
    res.betti.push_back(beta);
    // differential columns in flat ambient coordinates of the current F
    {
      AlgMatrix<F> d;
      d.rows = rankF_;
      d.cols = beta;
      d.col.resize(beta);
      for (std::size_t j = 0; j < beta; ++j) {
        auto idx = amb_index(gens[j].first);
        std::map<std::size_t, Vec> chunks;
        for (std::size_t i = 0; i < idx.size(); ++i) {
          if (k.is_zero(gens[j].second[i])) continue;
          auto it = chunks.emplace(idx[i].first, A_.zero()).first;
          it->second[idx[i].second] = gens[j].second[i];
        }
        for (auto& [row, v] : chunks) d.col[j].emplace_back(row, v);
      }
      res.d.push_back(std::move(d));
    }
    if (beta == 0) {
      Vg_.clear();
      rankF_ = 0;
      gdegF_.clear();
      return;
    }
    // kernel of A^beta -> F, one internal degree at a time
    unsigned fmin = gdeg_new.front() + 1;
    unsigned fmax = gdeg_new.back() + A_.loewy_length();
    std::map<unsigned, DenseMatrix<F>> nv;
    std::vector<unsigned> old_gdeg = gdegF_;
    std::map<unsigned, std::vector<std::pair<std::size_t, std::size_t>>>
        old_idx_cache;
    auto old_idx = [&](unsigned e) -> const
        std::vector<std::pair<std::size_t, std::size_t>>& {
          auto it = old_idx_cache.find(e);
          if (it == old_idx_cache.end())
            it = old_idx_cache.emplace(e, amb_index(e)).first;
          return it->second;
        };
    // pre-restrict each generator once per needed degree
    for (unsigned f = fmin; f <= fmax; ++f) {
      // columns: (gen j of degree g, basis b of order f-g >= 1)
      std::vector<std::pair<std::size_t, std::size_t>> colidx;
      for (std::size_t j = 0; j < beta; ++j) {
        unsigned g = gdeg_new[j];
        if (g >= f) continue;
        unsigned o = f - g;
        if (o >= ord_basis_.size()) continue;
        for (auto b : ord_basis_[o]) colidx.emplace_back(j, b);
      }
      if (colidx.empty()) continue;
      const auto& ridx = old_idx(f);
      if (ridx.size() * colidx.size() > opt_.max_cells)
        throw std::runtime_error(
            "resolution size guard exceeded (graded block)");
      DenseMatrix<F> m(ridx.size(), colidx.size());
      for (std::size_t c = 0; c < colidx.size(); ++c) {
        auto [j, b] = colidx[c];
        auto col = graded_mul(gens[j].second, old_idx(gdeg_new[j]), b, ridx);
        for (std::size_t rr = 0; rr < ridx.size(); ++rr) m.at(rr, c) = col[rr];
      }
      auto ker = kernel_basis(k, m);
      if (ker.empty()) continue;
      // re-express on the full ambient index of the *new* free module
      std::vector<unsigned> saved = std::move(gdegF_);
      gdegF_ = gdeg_new;
      auto idx_new = amb_index(f);
      gdegF_ = std::move(saved);
      DenseMatrix<F> rows(0, idx_new.size());
      for (auto& kv : ker) {
        Row out(idx_new.size(), k.zero());
        std::size_t pos = 0;
        for (std::size_t i = 0; i < idx_new.size(); ++i) {
          auto [j, b] = idx_new[i];
          if (A_.basis_order(b) == 0) continue;  // unit columns were skipped
          out[i] = kv[pos++];
        }
        rows.append_row(std::move(out));
      }
      nv.emplace(f, std::move(rows));
    }
    Vg_ = std::move(nv);
    rankF_ = beta;
    gdegF_ = std::move(gdeg_new);
  }

  // reduce v against the rref rows in acc; if independent, fold it in
  bool append_if_independent(DenseMatrix<F>& acc, Row& v) {
    const F& k = A_.field();
    std::size_t n = acc.cols();
    for (std::size_t r = 0; r < acc.rows(); ++r) {
      std::size_t p = 0;
      while (p < n && k.is_zero(acc.at(r, p))) ++p;
      if (p == n || k.is_zero(v[p])) continue;
      auto c = k.mul(v[p], k.inv(acc.at(r, p)));
      for (std::size_t j = p; j < n; ++j)
        v[j] = k.sub(v[j], k.mul(c, acc.at(r, j)));
    }
    bool nz = false;
    for (auto& x : v)
      if (!k.is_zero(x)) nz = true;
    if (nz) acc.append_row(v);
    return nz;
  }

  AlgMatrix<F> columns_to_alg(const std::vector<Row>& gens) const {
    AlgMatrix<F> d;
    d.rows = rankF_;
    d.cols = gens.size();
    d.col.resize(gens.size());
    for (std::size_t c = 0; c < gens.size(); ++c)
      for (std::size_t r = 0; r < rankF_; ++r) {
        Vec chunk(gens[c].begin() + r * D_, gens[c].begin() + (r + 1) * D_);
        if (!A_.is_zero_vec(chunk)) d.col[c].emplace_back(r, std::move(chunk));
      }
    return d;
  }

  const LocalAlgebra<F>& A_;
  ResolveOptions opt_;
  std::size_t D_ = 0;
  std::vector<std::vector<std::size_t>> ord_basis_;
  bool square_zero_ring_ = false;

  Mode mode_ = Mode::dense;
  bool tried_grading_ = false;
  std::size_t rankF_ = 0;
  std::vector<unsigned> gdegF_;
  DenseMatrix<F> V_{0, 0};                    // dense regime
  std::map<unsigned, DenseMatrix<F>> Vg_;     // graded regime
};

}  // namespace detail

template <class F>
ResolutionData<F> minimal_resolution(const LocalAlgebra<F>& A,
                                     const PresentedModule<F>& M,
                                     std::size_t N,
                                     ResolveOptions opt = {}) {
  return detail::Resolver<F>(A, opt).run(M, N);
}

template <class F>
std::vector<std::size_t> betti_sequence(const LocalAlgebra<F>& A,
                                        const PresentedModule<F>& M,
                                        std::size_t N,
                                        ResolveOptions opt = {}) {
  return minimal_resolution(A, M, N, opt).betti;
}

// k-space form of a presented module: dimension plus the action of every
// algebra basis element, used for Hom complexes
template <class F>
struct ModuleData {
  std::size_t dim = 0;
  std::vector<DenseMatrix<F>> act;  // one dim x dim matrix per basis element
};

template <class F>
ModuleData<F> module_data(const LocalAlgebra<F>& A, PresentedModule<F> M0) {
  const F& k = A.field();
  auto M = minimize_presentation(A, M0);
  std::size_t D = A.dim(), amb = M.rank * D;
  DenseMatrix<F> rows(0, amb);
  for (auto& rel : M.relations) {
    std::vector<typename F::Elem> flat(amb, k.zero());
    for (std::size_t r = 0; r < M.rank; ++r)
      std::copy(rel[r].begin(), rel[r].end(), flat.begin() + r * D);
    for (std::size_t b = 0; b < D; ++b)
      rows.append_row(detail::free_mul_basis(A, M.rank, flat, b));
  }
  Subspace<F> U = Subspace<F>::span(k, rows);
  std::vector<std::size_t> coords;
  {
    std::vector<bool> piv(amb, false);
    for (auto p : U.pivots()) piv[p] = true;
    for (std::size_t i = 0; i < amb; ++i)
      if (!piv[i]) coords.push_back(i);
  }
  ModuleData<F> md;
  md.dim = coords.size();
  md.act.assign(D, DenseMatrix<F>(md.dim, md.dim));
  for (std::size_t b = 0; b < D; ++b)
    for (std::size_t c = 0; c < md.dim; ++c) {
      std::vector<typename F::Elem> e(amb, k.zero());
      e[coords[c]] = k.one();
      auto v = detail::free_mul_basis(A, M.rank, e, b);
      auto r = U.reduce(k, v);
      for (std::size_t i = 0; i < md.dim; ++i) md.act[b].at(i, c) = r[coords[i]];
    }
  return md;
}

// dim_k Ext^i_A(M, N_mod) for i in [lo, hi]
template <class F>
std::vector<std::size_t> ext_dims(const LocalAlgebra<F>& A,
                                  const PresentedModule<F>& M,
                                  const PresentedModule<F>& N_mod,
                                  std::size_t lo, std::size_t hi,
                                  ResolveOptions opt = {}) {
  const F& k = A.field();
  auto res = minimal_resolution(A, M, hi + 1, opt);
  auto nd = module_data(A, N_mod);
  // rank of d_i^* : N^{beta_{i-1}} -> N^{beta_i}
  std::vector<std::size_t> costar_rank(hi + 2, 0);
  for (std::size_t i = 1; i <= hi + 1; ++i) {
    const auto& d = res.d[i - 1];
    if (d.rows == 0 || d.cols == 0 || nd.dim == 0) continue;
    DenseMatrix<F> m(d.cols * nd.dim, d.rows * nd.dim);
    for (std::size_t c = 0; c < d.cols; ++c)
      for (auto& [r, a] : d.col[c])
        for (std::size_t b = 0; b < A.dim(); ++b) {
          if (k.is_zero(a[b])) continue;
          for (std::size_t x = 0; x < nd.dim; ++x)
            for (std::size_t y = 0; y < nd.dim; ++y) {
              auto& cell = m.at(c * nd.dim + y, r * nd.dim + x);
              cell = k.add(cell, k.mul(a[b], nd.act[b].at(y, x)));
            }
        }
    costar_rank[i] = rref(k, m).rank;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = lo; i <= hi; ++i) {
    std::size_t total = res.betti[i] * nd.dim;
    std::size_t im = i == 0 ? 0 : costar_rank[i];
    out.push_back(total - costar_rank[i + 1] - im);
  }
  return out;
}

enum class ArVerdict { free_module, consistent_with_ar, vanishing_window_found };

template <class F>
ArVerdict ar_diagnostic(const LocalAlgebra<F>& A, const PresentedModule<F>& M,
                        std::size_t N, ResolveOptions opt = {}) {
  auto Mm = minimize_presentation(A, M);
  if (Mm.relations.empty()) return ArVerdict::free_module;
  auto em = ext_dims(A, Mm, Mm, 1, N, opt);
  auto ea = ext_dims(A, Mm, PresentedModule<F>::free_module(1), 1, N, opt);
  for (auto v : em)
    if (v != 0) return ArVerdict::consistent_with_ar;
  for (auto v : ea)
    if (v != 0) return ArVerdict::consistent_with_ar;
  return ArVerdict::vanishing_window_found;  // finite windows prove nothing
}

// ---- Koszul complex on a minimal generating set of m ----

template <class F>
struct KoszulHomology {
  std::vector<std::size_t> kappa;          // kappa_0 .. kappa_n
  std::vector<DenseMatrix<F>> reps;        // cycle representatives per degree
  std::vector<Subspace<F>> boundaries;     // per degree
  std::vector<Subspace<F>> cycles;         // per degree
  std::size_t n = 0;                       // number of exterior variables
  // mult[i][j][a][b]: coordinates in H_{i+j} of the product of class a of H_i
  // with class b of H_j; only stored for i + j <= n
  std::vector<std::vector<std::vector<std::vector<std::vector<typename F::Elem>>>>>
      mult;
};

namespace detail {

inline std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n,
                                                             std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == r) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (r - cur.size()) <= n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace detail

template <class F>
KoszulHomology<F> koszul_homology(const LocalAlgebra<F>& A) {
  const F& k = A.field();
  std::size_t D = A.dim();
  auto xs = A.min_gens(A.power(1));
  std::size_t n = xs.size();
  std::vector<std::vector<std::vector<std::size_t>>> sets(n + 1);
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> setpos(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    sets[i] = detail::subsets_of_size(n, i);
    for (std::size_t s = 0; s < sets[i].size(); ++s) setpos[i][sets[i][s]] = s;
  }
  // boundary matrices d_i : Lambda^i (x) A -> Lambda^{i-1} (x) A
  std::vector<DenseMatrix<F>> dmat;  // dmat[i-1] = d_i
  for (std::size_t i = 1; i <= n; ++i) {
    DenseMatrix<F> m(sets[i - 1].size() * D, sets[i].size() * D);
    for (std::size_t s = 0; s < sets[i].size(); ++s) {
      const auto& S = sets[i][s];
      for (std::size_t t = 0; t < S.size(); ++t) {
        auto T = S;
        T.erase(T.begin() + t);
        std::size_t s2 = setpos[i - 1][T];
        bool neg = t % 2 == 1;
        for (std::size_t b = 0; b < D; ++b) {
          auto prod = A.mul_basis(xs[S[t]], b);  // x_t * e_b
          for (std::size_t l = 0; l < D; ++l) {
            auto v = neg ? k.neg(prod[l]) : prod[l];
            m.at(s2 * D + l, s * D + b) = k.add(m.at(s2 * D + l, s * D + b), v);
          }
        }
      }
    }
    dmat.push_back(std::move(m));
  }
  KoszulHomology<F> H;
  H.n = n;
  H.kappa.resize(n + 1);
  H.reps.resize(n + 1);
  H.boundaries.resize(n + 1);
  H.cycles.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    std::size_t amb = sets[i].size() * D;
    // cycles
    if (i == 0) {
      DenseMatrix<F> idm(0, amb);
      for (std::size_t c = 0; c < amb; ++c) {
        std::vector<typename F::Elem> e(amb, k.zero());
        e[c] = k.one();
        idm.append_row(std::move(e));
      }
      H.cycles[i] = Subspace<F>::span(k, idm);
    } else {
      DenseMatrix<F> zc(0, amb);
      for (auto& v : kernel_basis(k, dmat[i - 1])) zc.append_row(v);
      H.cycles[i] = Subspace<F>::span(k, zc);
    }
    // boundaries = column space of d_{i+1}
    if (i < n) {
      const auto& m = dmat[i];
      DenseMatrix<F> bc(0, amb);
      for (std::size_t c = 0; c < m.cols(); ++c) {
        std::vector<typename F::Elem> col(amb);
        for (std::size_t r = 0; r < amb; ++r) col[r] = m.at(r, c);
        bc.append_row(std::move(col));
      }
      H.boundaries[i] = Subspace<F>::span(k, bc);
    } else {
      H.boundaries[i] = Subspace<F>();
    }
    H.kappa[i] = H.cycles[i].dim() - H.boundaries[i].dim();
    // representatives: first cycle basis vectors independent mod boundaries
    DenseMatrix<F> reps(0, amb);
    for (std::size_t r = 0; r < H.cycles[i].basis().rows(); ++r) {
      auto v = H.cycles[i].basis().row_vec(r);
      auto red = H.boundaries[i].dim() == 0
                     ? v
                     : H.boundaries[i].reduce(k, v);
      bool nz = false;
      for (auto& x : red)
        if (!k.is_zero(x)) nz = true;
      if (!nz) continue;
      DenseMatrix<F> test = reps;
      test.append_row(v);
      DenseMatrix<F> together = H.boundaries[i].basis();
      for (std::size_t rr = 0; rr < test.rows(); ++rr)
        together.append_row(test.row_vec(rr));
      if (Subspace<F>::span(k, together).dim() ==
          H.boundaries[i].dim() + test.rows())
        reps.append_row(H.cycles[i].basis().row_vec(r));
      if (reps.rows() == H.kappa[i]) break;
    }
    H.reps[i] = std::move(reps);
  }
  // homology multiplication: wedge representatives, reduce to H-coordinates
  H.mult.assign(n + 1, {});
  for (std::size_t i = 0; i <= n; ++i) {
    H.mult[i].resize(n + 1 - i);
    for (std::size_t j = 0; i + j <= n; ++j) {
      auto& tab = H.mult[i][j];
      tab.assign(H.kappa[i], {});
      for (std::size_t a = 0; a < H.kappa[i]; ++a) {
        tab[a].assign(H.kappa[j], {});
        for (std::size_t b = 0; b < H.kappa[j]; ++b) {
          // wedge product in ambient coordinates
          std::size_t amb = sets[i + j].size() * D;
          std::vector<typename F::Elem> w(amb, k.zero());
          for (std::size_t s1 = 0; s1 < sets[i].size(); ++s1)
            for (std::size_t s2 = 0; s2 < sets[j].size(); ++s2) {
              // disjointness and shuffle sign
              const auto& S1 = sets[i][s1];
              const auto& S2 = sets[j][s2];
              std::vector<std::size_t> u;
              std::merge(S1.begin(), S1.end(), S2.begin(), S2.end(),
                         std::back_inserter(u));
              bool dup = false;
              for (std::size_t t = 0; t + 1 < u.size(); ++t)
                if (u[t] == u[t + 1]) dup = true;
              if (dup) continue;
              int inv = 0;
              for (auto p : S1)
                for (auto q : S2)
                  if (q < p) ++inv;
              std::size_t su = setpos[i + j][u];
              for (std::size_t b1 = 0; b1 < D; ++b1) {
                if (k.is_zero(H.reps[i].at(a, s1 * D + b1))) continue;
                for (std::size_t b2 = 0; b2 < D; ++b2) {
                  if (k.is_zero(H.reps[j].at(b, s2 * D + b2))) continue;
                  auto c = k.mul(H.reps[i].at(a, s1 * D + b1),
                                 H.reps[j].at(b, s2 * D + b2));
                  if (inv % 2 == 1) c = k.neg(c);
                  const auto& t = A.basis_product(b1, b2);
                  for (std::size_t l = 0; l < D; ++l)
                    if (!k.is_zero(t[l]))
                      w[su * D + l] =
                          k.add(w[su * D + l], k.mul(c, t[l]));
                }
              }
            }
          // express the cycle w as boundaries + representative combination
          std::size_t kk = H.kappa[i + j];
          std::vector<typename F::Elem> coords(kk, k.zero());
          if (kk > 0) {
            DenseMatrix<F> basis = H.boundaries[i + j].basis();
            for (std::size_t r = 0; r < H.reps[i + j].rows(); ++r)
              basis.append_row(H.reps[i + j].row_vec(r));
            // solve x^T basis = w
            DenseMatrix<F> bt(basis.cols(), basis.rows());
            for (std::size_t r = 0; r < basis.rows(); ++r)
              for (std::size_t c = 0; c < basis.cols(); ++c)
                bt.at(c, r) = basis.at(r, c);
            auto sol = solve(k, bt, w);
            if (!sol)
              throw std::logic_error("koszul product is not a cycle");
            std::size_t off = H.boundaries[i + j].dim();
            for (std::size_t t = 0; t < kk; ++t) coords[t] = (*sol)[off + t];
          }
          tab[a][b] = std::move(coords);
        }
      }
    }
  }
  return H;
}

template <class F>
struct PairingCheck {
  bool ok = false;
  DenseMatrix<F> pairing{0, 0};  // H_1 x H_{n-1} -> H_n coefficients
  std::size_t z = 0;             // chosen H_1 class
  std::size_t partner = 0;       // H_{n-1} class with z * partner != 0
};

template <class F>
PairingCheck<F> poincare_pairing_check(const LocalAlgebra<F>& A) {
  if (!A.is_gorenstein())
    throw std::invalid_argument("poincare_pairing_check: not Gorenstein");
  if (A.edim() < 2)
    throw std::invalid_argument("poincare_pairing_check: edim < 2");
  const F& k = A.field();
  auto H = koszul_homology(A);
  std::size_t n = H.n;
  PairingCheck<F> out;
  out.pairing = DenseMatrix<F>(H.kappa[1], H.kappa[n - 1]);
  for (std::size_t a = 0; a < H.kappa[1]; ++a)
    for (std::size_t b = 0; b < H.kappa[n - 1]; ++b)
      out.pairing.at(a, b) = H.mult[1][n - 1][a][b][0];
  out.ok = H.kappa[1] == H.kappa[n - 1] &&
           rref(k, out.pairing).rank == H.kappa[1];
  if (out.ok && H.kappa[1] > 0) {
    out.z = 0;
    for (std::size_t b = 0; b < H.kappa[n - 1]; ++b)
      if (!k.is_zero(out.pairing.at(0, b))) {
        out.partner = b;
        break;
      }
  }
  return out;
}

}  // namespace ringlab
