#include <doctest.h>

#include "ringlab/algebra.hpp"
#include "ringlab/inverse_system.hpp"

using namespace ringlab;
using Gf = GfField;
using A32 = LocalAlgebra<Gf>;

namespace {

Poly parse_mono(std::size_t nvars, std::initializer_list<unsigned> exps,
                Rational c = 1) {
  Monomial m(nvars);
  std::size_t i = 0;
  for (auto e : exps) m.e[i++] = e;
  return Poly::monomial(m, c);
}

// k[x]/(x^s)
Presentation chain(unsigned s) {
  Presentation p;
  p.vars = {"x"};
  p.relations = {parse_mono(1, {s})};
  return p;
}

// k[x,y]/(xy, x^4 - y^2): the dim-6 running example
Presentation dim6() {
  Presentation p;
  p.vars = {"x", "y"};
  p.relations = {parse_mono(2, {1, 1}),
                 parse_mono(2, {4, 0}) + parse_mono(2, {0, 2}, -1)};
  return p;
}

Presentation two_vars(std::initializer_list<std::initializer_list<unsigned>> rels) {
  Presentation p;
  p.vars = {"x", "y"};
  for (auto r : rels) p.relations.push_back(parse_mono(2, r));
  return p;
}

}  // namespace

TEST_CASE("monomial order is ascending local degrevlex") {
  auto ms = monomials_below_degree(2, 3);
  // 1 < x < y < x^2 < xy < y^2
  REQUIRE(ms.size() == 6);
  CHECK(ms[0].degree() == 0);
  CHECK(ms[1].e == std::vector<unsigned>{1, 0});
  CHECK(ms[2].e == std::vector<unsigned>{0, 1});
  CHECK(ms[3].e == std::vector<unsigned>{2, 0});
  CHECK(ms[4].e == std::vector<unsigned>{1, 1});
  CHECK(ms[5].e == std::vector<unsigned>{0, 2});
}

TEST_CASE("chain algebra k[x]/(x^3)") {
  Gf k(32003);
  auto A = A32::build(k, chain(3));
  CHECK(A.dim() == 3);
  CHECK(A.loewy_length() == 2);
  CHECK(A.edim() == 1);
  CHECK(A.graded());
  auto x = A.gen(0);
  CHECK(A.mul(x, A.mul(x, x)) == A.zero());
  // soc = (x^2)
  auto soc = A.socle();
  CHECK(soc.dim() == 1);
  CHECK(soc.contains(k, A.mul(x, x)));
  CHECK(A.is_gorenstein());
  CHECK(A.hilbert_function() == std::vector<unsigned>{1, 1, 1});
}

TEST_CASE("dim-6 running example k[x,y]/(xy, x^4-y^2)") {
  Gf k(32003);
  auto A = A32::build(k, dim6());
  REQUIRE(A.dim() == 6);
  // basis {1, x, y, x^2, x^3, x^4} with y^2 = x^4
  CHECK(A.basis_name(0) == "1");
  CHECK(A.basis_name(1) == "x");
  CHECK(A.basis_name(2) == "y");
  CHECK(A.basis_name(3) == "x^2");
  CHECK(A.basis_name(4) == "x^3");
  CHECK(A.basis_name(5) == "x^4");
  auto x = A.gen(0), y = A.gen(1);
  CHECK(A.mul(x, y) == A.zero());
  CHECK(A.mul(y, y) == A.e(5));
  CHECK(A.mul(x, A.mul(x, A.mul(x, x))) == A.e(5));
  CHECK(!A.graded());
  CHECK(A.hilbert_function() == std::vector<unsigned>{1, 2, 1, 1, 1});
  CHECK(A.loewy_length() == 4);
  CHECK(A.is_gorenstein());
  CHECK(A.edim() == 2);

  // (0 : m^2) = span{y, x^3, x^4}
  auto ann = A.annihilator_of(A.power(2));
  CHECK(ann.dim() == 3);
  CHECK(ann.contains(k, y));
  CHECK(ann.contains(k, A.e(4)));
  CHECK(ann.contains(k, A.e(5)));
  CHECK(!ann.contains(k, x));

  // m^2 = span{x^2,x^3,x^4}, minimally generated by x^2
  auto m2 = A.power(2);
  CHECK(m2.dim() == 3);
  auto gens = A.min_gens(m2);
  REQUIRE(gens.size() == 1);
  CHECK(gens[0] == A.e(3));
  CHECK(A.classify() == A32::StretchClass::stretched);

  // m^3 = span{x^3, x^4}
  CHECK(A.power(3).dim() == 2);
  CHECK(A.power(3).contains(k, A.e(4)));
  CHECK(A.power(3).contains(k, A.e(5)));

  // orders: 0,1,1,2,3,4
  CHECK(A.basis_order(2) == 1);
  CHECK(A.basis_order(5) == 4);
}

TEST_CASE("square-zero algebra and classification") {
  Gf k(32003);
  auto A = A32::build(k, two_vars({{2, 0}, {1, 1}, {0, 2}}));
  CHECK(A.dim() == 3);
  CHECK(A.loewy_length() == 1);
  CHECK(!A.is_gorenstein());
  CHECK(A.socle().dim() == 2);
  CHECK(A.hilbert_function() == std::vector<unsigned>{1, 2});
  CHECK(A.classify() == A32::StretchClass::stretched);  // m^2 = 0

  auto B = A32::build(k, two_vars({{2, 0}, {0, 2}}));
  CHECK(B.dim() == 4);
  CHECK(B.is_gorenstein());
  CHECK(B.hilbert_function() == std::vector<unsigned>{1, 2, 1});
  CHECK(B.classify() == A32::StretchClass::stretched);  // m^2 = (xy)

  auto C = A32::build(k, two_vars({{3, 0}, {0, 2}}));  // k[x,y]/(x^3,y^2)
  CHECK(C.dim() == 6);
  CHECK(C.classify() == A32::StretchClass::almost_stretched);
}

TEST_CASE("classification trap: 3-variable stretched ring") {
  Gf k(32003);
  Presentation p;
  p.vars = {"x", "y", "z"};
  auto mono3 = [&](unsigned a, unsigned b, unsigned c, Rational q = 1) {
    Monomial m(3);
    m.e = {a, b, c};
    return Poly::monomial(m, q);
  };
  p.relations = {mono3(1, 1, 0), mono3(1, 0, 1), mono3(0, 1, 1),
                 mono3(2, 0, 0) + mono3(0, 2, 0, -1),
                 mono3(2, 0, 0) + mono3(0, 0, 2, -1)};
  auto A = A32::build(k, p);
  CHECK(A.dim() == 5);
  CHECK(A.is_gorenstein());
  // m^2 = (x^2) is principal despite edim 3
  CHECK(A.classify() == A32::StretchClass::stretched);
}

TEST_CASE("quotients") {
  Gf k(32003);
  auto B = A32::build(k, two_vars({{2, 0}, {0, 2}}));
  auto Bq = B.quotient(B.socle());
  CHECK(Bq.dim() == 3);
  CHECK(Bq.loewy_length() == 1);  // k[x,y]/(x^2,xy,y^2)
  CHECK(!Bq.is_gorenstein());

  auto X = A32::build(k, chain(4));
  auto Xq = X.quotient(X.power(2));
  CHECK(Xq.dim() == 2);
  CHECK(Xq.loewy_length() == 1);

  auto Xk = X.quotient(X.power(1));
  CHECK(Xk.dim() == 1);
  CHECK(Xk.is_gorenstein());
  CHECK(Xk.hilbert_function() == std::vector<unsigned>{1});

  CHECK_THROWS_AS(X.quotient(X.power(0)), std::invalid_argument);
}

TEST_CASE("unital subalgebras of the dim-6 example") {
  Gf k(32003);
  auto A = A32::build(k, dim6());
  // V = span{x, x^2, x^3, x^4} -> k[x]/(x^5)
  DenseMatrix<Gf> v1(0, 6);
  for (std::size_t i : {1, 3, 4, 5}) v1.append_row(A.e(i));
  auto S = A.unital_subalgebra(Subspace<Gf>::span(k, v1));
  CHECK(S.dim() == 5);
  CHECK(S.loewy_length() == 4);
  CHECK(S.is_gorenstein());
  CHECK(S.edim() == 1);
  CHECK(S.hilbert_function() == std::vector<unsigned>{1, 1, 1, 1, 1});

  // V = span{y, x^4} -> k[y]/(y^3) since y^2 = x^4
  DenseMatrix<Gf> v2(0, 6);
  v2.append_row(A.e(2));
  v2.append_row(A.e(5));
  auto T = A.unital_subalgebra(Subspace<Gf>::span(k, v2));
  CHECK(T.dim() == 3);
  CHECK(T.loewy_length() == 2);
  CHECK(T.edim() == 1);
  CHECK(T.is_gorenstein());

  // V = span{x} is not multiplicatively closed (x^2 escapes)
  DenseMatrix<Gf> v3(0, 6);
  v3.append_row(A.e(1));
  CHECK_THROWS_AS(A.unital_subalgebra(Subspace<Gf>::span(k, v3)),
                  std::invalid_argument);
}

TEST_CASE("lift from subalgebra round trips") {
  Gf k(32003);
  auto A = A32::build(k, dim6());
  DenseMatrix<Gf> v(0, 6);
  for (std::size_t i : {1, 3, 4, 5}) v.append_row(A.e(i));
  auto V = Subspace<Gf>::span(k, v);
  auto S = A.unital_subalgebra(V);
  // multiply in S, lift, compare with multiplying lifts in A
  for (std::size_t i = 0; i < S.dim(); ++i)
    for (std::size_t j = 0; j < S.dim(); ++j) {
      auto prod = A.lift_from_subalgebra(V, S.basis_product(i, j));
      auto direct = A.mul(A.lift_from_subalgebra(V, S.e(i)),
                          A.lift_from_subalgebra(V, S.e(j)));
      CHECK(prod == direct);
    }
}

TEST_CASE("inverse systems") {
  Gf k(32003);
  // F = X^2 -> k[x]/(x^3)
  auto A = from_inverse_system(k, {"x"}, parse_mono(1, {2}));
  CHECK(A.dim() == 3);
  CHECK(A.is_gorenstein());
  CHECK(A.loewy_length() == 2);

  // F = XY -> k[x,y]/(x^2, y^2)
  auto B = from_inverse_system(k, {"x", "y"}, parse_mono(2, {1, 1}));
  CHECK(B.dim() == 4);
  CHECK(B.is_gorenstein());
  CHECK(B.hilbert_function() == std::vector<unsigned>{1, 2, 1});
  auto x = B.gen(0), y = B.gen(1);
  CHECK(B.mul(x, x) == B.zero());
  CHECK(B.mul(y, y) == B.zero());
  CHECK(!B.is_zero_vec(B.mul(x, y)));

  // F = X^4 + Y^2 -> dim 6, same invariants as k[x,y]/(xy, x^4-cy^2)
  auto C = from_inverse_system(k, {"x", "y"},
                               parse_mono(2, {4, 0}) + parse_mono(2, {0, 2}));
  CHECK(C.dim() == 6);
  CHECK(C.is_gorenstein());
  CHECK(C.loewy_length() == 4);
  CHECK(C.hilbert_function() == std::vector<unsigned>{1, 2, 1, 1, 1});

  // characteristic guard
  GfField small(3);
  CHECK_THROWS_AS(from_inverse_system(small, {"x"}, parse_mono(1, {4})),
                  std::invalid_argument);
}

TEST_CASE("matlis length identity on gorenstein examples") {
  Gf k(32003);
  for (auto pres : {dim6(), two_vars({{2, 0}, {0, 2}}), chain(5)}) {
    auto A = A32::build(k, pres);
    REQUIRE(A.is_gorenstein());
    for (unsigned i = 0; i <= A.loewy_length() + 1; ++i) {
      auto ann = A.annihilator_of(A.power(i));
      CHECK(ann.dim() == A.dim() - A.power(i).dim());
    }
  }
}

TEST_CASE("nakayama: min_gens spans and is independent mod mJ") {
  Gf k(32003);
  auto A = A32::build(k, dim6());
  for (unsigned i = 1; i <= 4; ++i) {
    auto J = A.power(i);
    auto gens = A.min_gens(J);
    CHECK(A.ideal_span(gens) == J);
    auto mJ = A.ideal_product(A.power(1), J);
    CHECK(gens.size() + mJ.dim() == J.dim());
  }
}

TEST_CASE("build over the rationals") {
  QqField q;
  auto A = LocalAlgebra<QqField>::build(q, dim6());
  CHECK(A.dim() == 6);
  CHECK(A.is_gorenstein());
  CHECK(A.hilbert_function() == std::vector<unsigned>{1, 2, 1, 1, 1});
}

TEST_CASE("build error cases") {
  Gf k(32003);
  Presentation p;
  p.vars = {"x", "y"};
  p.relations = {parse_mono(2, {2, 0})};  // (x^2) is not m-primary
  CHECK_THROWS_AS(A32::build(k, p), std::runtime_error);

  Presentation u;
  u.vars = {"x"};
  u.relations = {Poly::constant(1, 1) + parse_mono(1, {1})};  // contains a unit
  CHECK_THROWS(A32::build(k, u));
}
