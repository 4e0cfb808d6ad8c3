#include <doctest.h>

#include "ringlab/products.hpp"

using namespace ringlab;
using Gf = GfField;
using A32 = LocalAlgebra<Gf>;

namespace {

Presentation chain(unsigned s) {
  Presentation p;
  p.vars = {"x"};
  Monomial m(1);
  m.e = {s};
  p.relations = {Poly::monomial(m)};
  return p;
}

Presentation rels2(std::vector<std::vector<unsigned>> rels) {
  Presentation p;
  p.vars = {"x", "y"};
  for (auto& r : rels) {
    Monomial m(2);
    m.e = r;
    p.relations.push_back(Poly::monomial(m));
  }
  return p;
}

}  // namespace

TEST_CASE("fibre product of two dual numbers") {
  Gf k(32003);
  auto R = A32::build(k, chain(2));
  auto w = fibre_product(R, R);
  CHECK(w.T.dim() == 3);
  CHECK(w.T.loewy_length() == 1);
  CHECK(w.T.hilbert_function() == std::vector<unsigned>{1, 2});
  CHECK(w.T.socle().dim() == 2);
  // cross product vanishes
  CHECK(w.T.mul(w.T.e(1), w.T.e(2)) == w.T.zero());
}

TEST_CASE("fibre product with the field is the other factor") {
  Gf k(32003);
  auto R = A32::build(k, chain(4));
  Presentation pk;
  pk.vars = {"t"};
  Monomial m(1);
  m.e = {1};
  pk.relations = {Poly::monomial(m)};
  auto K = A32::build(k, pk);
  REQUIRE(K.dim() == 1);
  auto w = fibre_product(R, K);
  CHECK(w.T.dim() == R.dim());
  for (std::size_t i = 0; i < R.dim(); ++i)
    for (std::size_t j = 0; j < R.dim(); ++j)
      CHECK(w.T.basis_product(i, j) == R.basis_product(i, j));
}

TEST_CASE("facts: lengths and power decomposition in fibre products") {
  Gf k(32003);
  auto R = A32::build(k, chain(3));
  auto S = A32::build(k, rels2({{2, 0}, {0, 2}}));
  auto w = fibre_product(R, S);
  CHECK(w.T.dim() == R.dim() + S.dim() - 1);
  for (unsigned i = 1; i <= w.T.loewy_length() + 1; ++i)
    CHECK(w.T.power(i).dim() == R.power(i).dim() + S.power(i).dim());
  CHECK(w.T.loewy_length() == std::max(R.loewy_length(), S.loewy_length()));

  // quotient identity: T/m^n ~ R/m^min(n,loR) x_k S/m^min(n,loS)
  for (unsigned n = 2; n <= w.T.loewy_length(); ++n) {
    auto lhs = w.T.quotient(w.T.power(n));
    auto r = R.quotient(R.power(std::min(n, R.loewy_length() + 1)));
    auto s = S.quotient(S.power(std::min(n, S.loewy_length() + 1)));
    auto rhs = fibre_product(r, s);
    CHECK(lhs.dim() == rhs.T.dim());
    CHECK(lhs.hilbert_function() == rhs.T.hilbert_function());
  }
}

TEST_CASE("embeddings are multiplicative and cross-annihilating") {
  Gf k(32003);
  auto R = A32::build(k, chain(4));
  auto S = A32::build(k, rels2({{2, 0}, {0, 2}}));
  auto w = fibre_product(R, S);
  auto x2 = R.mul(R.gen(0), R.gen(0));
  CHECK(w.T.mul(w.embed_r(R, R.gen(0)), w.embed_r(R, R.gen(0))) ==
        w.embed_r(R, x2));
  auto uv = S.mul(S.gen(0), S.gen(1));
  CHECK(w.T.mul(w.embed_s(S, S.gen(0)), w.embed_s(S, S.gen(1))) ==
        w.embed_s(S, uv));
  // embedded maximal ideals annihilate each other
  CHECK(w.T.mul(w.embed_r(R, R.gen(0)), w.embed_s(S, S.gen(1))) == w.T.zero());
}

TEST_CASE("connected sum of two chains of length 3") {
  Gf k(32003);
  auto R = A32::build(k, chain(3));
  auto w = connected_sum(R, R);
  CHECK(w.Q.dim() == 4);
  CHECK(w.Q.is_gorenstein());
  CHECK(w.Q.loewy_length() == 2);
  CHECK(w.Q.hilbert_function() == std::vector<unsigned>{1, 2, 1});
  // same invariants as k[x,y]/(xy, x^2-y^2)
  Presentation p;
  p.vars = {"x", "y"};
  Monomial xy(2), x2(2), y2(2);
  xy.e = {1, 1};
  x2.e = {2, 0};
  y2.e = {0, 2};
  p.relations = {Poly::monomial(xy), Poly::monomial(x2) + Poly::monomial(y2, -1)};
  auto B = A32::build(k, p);
  CHECK(B.dim() == w.Q.dim());
  CHECK(B.hilbert_function() == w.Q.hilbert_function());
  CHECK(B.is_gorenstein());
}

TEST_CASE("connected sum x^5-chain with y^3-chain is the dim-6 example") {
  Gf k(32003);
  auto R = A32::build(k, chain(5));
  auto S = A32::build(k, chain(3));
  auto w = connected_sum(R, S);
  CHECK(w.Q.dim() == 6);
  CHECK(w.Q.loewy_length() == 4);
  CHECK(w.Q.is_gorenstein());
  CHECK(w.Q.hilbert_function() == std::vector<unsigned>{1, 2, 1, 1, 1});
  CHECK(w.Q.loewy_length() ==
        std::max(R.loewy_length(), S.loewy_length()));
}

TEST_CASE("degenerate connected sum of dual numbers") {
  Gf k(32003);
  auto R = A32::build(k, chain(2));
  auto w = connected_sum(R, R);
  CHECK(w.Q.dim() == 2);
  CHECK(w.Q.is_gorenstein());
  CHECK(w.Q.loewy_length() == 1);
}

TEST_CASE("connected sum guards") {
  Gf k(32003);
  auto R = A32::build(k, chain(3));
  auto NG = A32::build(k, rels2({{2, 0}, {1, 1}, {0, 2}}));  // socle dim 2
  CHECK_THROWS_AS(connected_sum(R, NG), std::invalid_argument);
}
