#include <doctest.h>

#include <random>

#include "ringlab/field.hpp"
#include "ringlab/matrix.hpp"

using namespace ringlab;

namespace {

template <class F>
DenseMatrix<F> make(const F& k, std::size_t r, std::size_t c,
                    std::initializer_list<long long> vals) {
  DenseMatrix<F> m(r, c);
  auto it = vals.begin();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = k.from_int(*it++);
  return m;
}

template <class F>
std::vector<typename F::Elem> apply(const F& k, const DenseMatrix<F>& m,
                                    const std::vector<typename F::Elem>& v) {
  std::vector<typename F::Elem> out(m.rows(), k.zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i] = k.add(out[i], k.mul(m.at(i, j), v[j]));
  return out;
}

}  // namespace

TEST_CASE("gf field basics") {
  GfField k(32003);
  CHECK(k.prime() == 32003);
  for (std::uint64_t a = 1; a < 200; ++a)
    CHECK(k.mul(a, k.inv(a)) == 1);
  CHECK(k.from_int(-1) == 32002);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 1000; ++t) {
    std::uint64_t a = rng() % 32003, b = rng() % 32003;
    CHECK(k.mul(a, b) == (a * b) % 32003);
  }
  CHECK(k.from_rational(Rational(1, 2)) == k.inv(2));
  CHECK(k.from_rational(Rational(-3, 7)) ==
        k.mul(k.from_int(-3), k.inv(7)));
  CHECK_THROWS_AS(GfField(32004), std::invalid_argument);
  CHECK_THROWS_AS((void)k.from_rational(Rational(1, 32003)), std::domain_error);
}

TEST_CASE("rref rank over GF(5): dependent rows") {
  GfField k(5);
  auto m = make(k, 2, 2, {1, 2, 2, 4});
  auto rr = rref(k, m);
  CHECK(rr.rank == 1);
  CHECK(rr.pivot_columns == std::vector<std::size_t>{0});
  CHECK(rr.R.at(0, 0) == 1);
  CHECK(rr.R.at(0, 1) == 2);
  CHECK(rr.R.at(1, 0) == 0);
  CHECK(rr.R.at(1, 1) == 0);
}

TEST_CASE("rref is idempotent") {
  GfField k(7);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    DenseMatrix<GfField> m(4, 6);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 6; ++j) m.at(i, j) = rng() % 7;
    auto once = rref(k, m).R;
    CHECK(rref(k, once).R == once);
  }
}

TEST_CASE("kernel over GF(3) matches exhaustive search") {
  GfField k(3);
  auto m = make(k, 1, 2, {1, 1});
  auto ker = kernel_basis(k, m);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0] == std::vector<std::uint64_t>{2, 1});
  // brute force: the kernel has exactly 3 points, spanned by (2,1)
  int count = 0;
  for (std::uint64_t a = 0; a < 3; ++a)
    for (std::uint64_t b = 0; b < 3; ++b)
      if (k.add(a, b) == 0) ++count;
  CHECK(count == 3);
}

TEST_CASE("solve over GF(2), free coordinate pinned to zero") {
  GfField k(2);
  auto m = make(k, 1, 2, {1, 1});
  auto x = solve(k, m, {1});
  REQUIRE(x.has_value());
  CHECK(*x == std::vector<std::uint64_t>{1, 0});
  // inconsistent system
  auto m2 = make(k, 2, 1, {1, 1});
  CHECK(!solve(k, m2, {1, 0}).has_value());
  CHECK_THROWS_AS(solve(k, m, {1, 0}), std::invalid_argument);
}

TEST_CASE("rank-nullity on random matrices") {
  GfField k(32003);
  std::mt19937_64 rng(20240817);
  for (int t = 0; t < 100; ++t) {
    std::size_t r = 1 + rng() % 40, c = 1 + rng() % 40;
    DenseMatrix<GfField> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        m.at(i, j) = (rng() % 3) ? 0 : rng() % 32003;
    auto rr = rref(k, m);
    auto ker = kernel_basis(k, m);
    CHECK(rr.rank + ker.size() == c);
    for (auto& v : ker) {
      auto img = apply(k, m, v);
      for (auto e : img) CHECK(e == 0);
    }
  }
}

TEST_CASE("solve produces an actual solution over QQ") {
  QqField k;
  auto m = make(k, 2, 3, {1, 2, 3, 2, 4, 7});
  std::vector<Rational> b{Rational(1), Rational(3)};
  auto x = solve(k, m, b);
  REQUIRE(x.has_value());
  CHECK(apply(k, m, *x) == b);
}

TEST_CASE("subspace algebra") {
  GfField k(32003);
  auto v1 = make(k, 2, 3, {1, 0, 1, 0, 1, 1});  // span{e1+e3, e2+e3}
  auto v2 = make(k, 2, 3, {1, 1, 2, 0, 0, 1});  // contains the sum and e3
  auto s1 = Subspace<GfField>::span(k, v1);
  auto s2 = Subspace<GfField>::span(k, v2);
  CHECK(s1.dim() == 2);
  CHECK(s1.contains(k, {1, 1, 2}));
  CHECK(!s1.contains(k, {1, 0, 0}));

  auto u = s1.sum(k, s2);
  CHECK(u.dim() == 3);
  auto w = s1.intersect(k, s2);
  CHECK(w.dim() == 1);
  CHECK(s1.contains(k, w));
  CHECK(s2.contains(k, w));
  CHECK(w.contains(k, {1, 1, 2}));
  // dim(S+T) + dim(S∩T) = dim S + dim T
  CHECK(u.dim() + w.dim() == s1.dim() + s2.dim());
}

TEST_CASE("subspace reduce is a projection along the subspace") {
  GfField k(101);
  std::mt19937_64 rng(5);
  DenseMatrix<GfField> gens(3, 6);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 6; ++j) gens.at(i, j) = rng() % 101;
  auto s = Subspace<GfField>::span(k, gens);
  for (int t = 0; t < 10; ++t) {
    std::vector<std::uint64_t> v(6);
    for (auto& e : v) e = rng() % 101;
    auto r = s.reduce(k, v);
    CHECK(s.reduce(k, r) == r);
    // v - r must be in the subspace
    std::vector<std::uint64_t> d(6);
    for (int j = 0; j < 6; ++j) d[j] = k.sub(v[j], r[j]);
    CHECK(s.contains(k, d));
  }
}
