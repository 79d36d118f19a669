#include <doctest.h>

#include "error.hpp"
#include "sgw.hpp"

using namespace tropgw;

TEST_CASE("susy rank") {
  CHECK(susy_rank(2, 2) == 2);
  CHECK(susy_rank(3, 0) == 1);
  for (int n = 2; n <= 8; ++n) CHECK(susy_rank(n, 0) == n - 2);
  CHECK_THROWS_AS(susy_rank(1, 0), DomainError);
  CHECK_THROWS_AS(susy_rank(2, -1), DomainError);
}

TEST_CASE("product family splitting") {
  auto s1 = product_family_splitting(2, 2, StratumBase::p1_toroidal);
  REQUIRE(s1.size() == 2);
  for (const auto& b : s1) {
    CHECK(b.kind == BundleKind::s_u_dual);
    CHECK(b.chern_m == -1);
  }

  auto s2 = product_family_splitting(5, 0, StratumBase::affine);
  REQUIRE(s2.size() == 3);
  for (const auto& b : s2) {
    CHECK(b.kind == BundleKind::trivial);
    CHECK(b.chern_m == 0);
  }

  auto s3 = product_family_splitting(3, 2, StratumBase::p1_toroidal);
  REQUIRE(s3.size() == 3);
  CHECK(s3[0].kind == BundleKind::s_u);
  CHECK(s3[0].chern_m == 1);
  CHECK(s3[1].kind == BundleKind::s_u_dual);
  CHECK(s3[2].chern_m == -1);
}

TEST_CASE("inverse equivariant euler series") {
  // rank 1, trivial bundle, point base: the single term kappa^-1
  auto terms = inverse_equivariant_euler({LineBundleModel{BundleKind::trivial, 0}}, 0);
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].kappa_exp == -1);
  CHECK(terms[0].sign == 1);
  REQUIRE(terms[0].tuples.size() == 1);
  CHECK(terms[0].tuples[0] == std::vector<int>{0});

  CHECK_THROWS_AS(inverse_equivariant_euler({}, 1), DomainError);
}

TEST_CASE("euler series evaluated on the fan of P1") {
  // rank 2, base dim 1, twists m1, m2: kappa^-2 [TP1] - kappa^-3 (m1+m2) [pt]
  for (int m1 = -2; m1 <= 2; ++m1)
    for (int m2 = -2; m2 <= 2; ++m2) {
      std::vector<LineBundleModel> splitting{{BundleKind::s_u, m1}, {BundleKind::s_u, m2}};
      auto j_terms = evaluate_euler_series(splitting, 1, p1_fundamental());
      REQUIRE(j_terms.size() == 2);
      CHECK(j_terms[0].kappa_exp == -2);
      CHECK(j_terms[0].sign == 1);
      CHECK(j_terms[0].cycle == p1_fundamental());
      CHECK(j_terms[1].kappa_exp == -3);
      CHECK(j_terms[1].sign == -1);
      CHECK(degree(j_terms[1].cycle) == m1 + m2);
    }
}

TEST_CASE("point-target splitting reproduces the psi-monomial structure") {
  // Rank n-2 splitting: one constant factor plus one spinor factor per leg
  // 4..n. The constant factor's c1 vanishes, so every tuple touching it caps
  // to zero and the surviving exponent tuples at level j are exactly the
  // monomials psi_4^{i_4}...psi_n^{i_n} with i_4+...+i_n = j, each carrying
  // (1/2)^j from squaring to the tangent line. At j = n-3 these are the
  // compositions that the point invariant sums over.
  for (int n = 4; n <= 6; ++n) {
    std::vector<LineBundleModel> splitting{{BundleKind::trivial, 0}};
    for (int leg = 4; leg <= n; ++leg) splitting.push_back({BundleKind::s_u, 0});
    auto terms = inverse_equivariant_euler(splitting, n - 3);
    const EulerTerm& top = terms.back();
    CHECK(top.kappa_exp == -(2 * n - 5));  // -(rank + j) = -((n-2) + (n-3))
    long long survivors = 0;
    for (const auto& tuple : top.tuples) survivors += tuple[0] == 0;
    CHECK(survivors == static_cast<long long>(sgw_point_terms(n).size()));
  }
}

TEST_CASE("euler series truncates: the next term caps to zero") {
  std::vector<LineBundleModel> splitting{{BundleKind::s_u_dual, -1}, {BundleKind::s_u_dual, -1}};
  auto j_terms = evaluate_euler_series(splitting, 2, p1_fundamental());
  REQUIRE(j_terms.size() == 3);
  CHECK_FALSE(j_terms[1].cycle.is_zero());
  CHECK(j_terms[2].cycle.is_zero());  // j = base_dim + 1 lands in negative dimension
}

TEST_CASE("W function trichotomy and values") {
  DualGraph smooth5 = DualGraph::smooth(5);

  // s = n-3: scalar (1/4) kappa^-5 * degree
  EquivariantResult top = w_function({smooth5, {0, 0, 0, 1, 1}});
  CHECK(top.cycle_terms.empty());
  CHECK(top.value == LaurentPoly::monomial(Rational(1, 2), -5));

  // s > n-3: zero
  EquivariantResult over = w_function({smooth5, {0, 0, 0, 2, 1}});
  CHECK(over.is_zero());

  // s < n-3: prefactor with the psi-product cycle
  EquivariantResult cyc = w_function({smooth5, {0, 0, 0, 1, 0}});
  CHECK(cyc.value.is_zero());
  REQUIRE(cyc.cycle_terms.size() == 1);
  CHECK(cyc.cycle_terms[0].kappa_exp == -5);
  CHECK(cyc.cycle_terms[0].coef == Rational(1, 4));
  CHECK(cyc.cycle_terms[0].cycle.facets.size() == 6);
  CHECK(cyc.cycle_terms[0].cycle.dim == 1);

  // exponents on legs 1..3 are stored but not consumed
  CHECK(w_function({smooth5, {3, 3, 3, 1, 1}}).value == top.value);

  CHECK_THROWS_AS(w_function({smooth5, {0, 0, 0, -1, 0}}), DomainError);
}

TEST_CASE("sgw_point values") {
  CHECK(sgw_point(3) == LaurentPoly::kappa_pow(-1));
  CHECK(sgw_point(4) == LaurentPoly::monomial(Rational(-1, 2), -3));
  CHECK(sgw_point(5) == LaurentPoly::kappa_pow(-5));
  CHECK_THROWS_AS(sgw_point(2), DomainError);
  CHECK_THROWS_AS(sgw_point(13), DomainError);

  // closed form for n up to 7 (acceptance extends to 9)
  for (int n = 3; n <= 7; ++n) {
    LaurentPoly value = sgw_point(n);
    BigInt power = 1;
    for (int i = 0; i < n - 3; ++i) power *= (n - 3);
    Rational coef(((n - 3) % 2 == 0 ? power : -power), BigInt(1) << (n - 3));
    CHECK(value == LaurentPoly::monomial(coef, -(2 * n - 5)));
    // kappa exponent -(2n-5), coefficient sign (-1)^(n-3)
    REQUIRE(value.is_monomial());
    CHECK(value.terms().begin()->first == -(2 * n - 5));
    CHECK(value.terms().begin()->second.sign() == ((n - 3) % 2 == 0 ? 1 : -1));
  }

  // the term list enumerates compositions of n-3 on legs 4..n
  auto terms = sgw_point_terms(5);
  CHECK(terms.size() == 3);
  LaurentPoly sum;
  for (const auto& [k, v] : terms) {
    int s = 0;
    for (int i = 3; i < 5; ++i) s += k[i];
    CHECK(s == 2);
    sum += v;
  }
  CHECK(sum == sgw_point(5));
}

TEST_CASE("sgw_p1_deg1") {
  SgwP1Result r = sgw_p1_deg1();
  CHECK(r.value == LaurentPoly::kappa_pow(-4));
  REQUIRE(r.strata.size() == 2);

  const StratumAudit& smooth = r.strata[0];
  CHECK(smooth.stratum.base == StratumBase::affine);
  CHECK(smooth.stratum.base_dim == 2);
  for (std::size_t j = 1; j < smooth.j_terms.size(); ++j)
    CHECK(smooth.j_terms[j].cycle.is_zero());  // trivial splitting kills j >= 1

  const StratumAudit& boundary = r.strata[1];
  CHECK(boundary.stratum.base == StratumBase::p1_toroidal);
  CHECK(boundary.stratum.base_dim == 1);
  REQUIRE(boundary.stratum.splitting.size() == 2);
  for (const auto& b : boundary.stratum.splitting) CHECK(b.chern_m == -1);
  REQUIRE(boundary.j_terms.size() == 2);
  CHECK(boundary.j_terms[0].cycle == p1_fundamental());
  CHECK(boundary.j_terms[0].kappa_exp == -2);
  CHECK(boundary.j_terms[1].kappa_exp == -3);
  CHECK(boundary.j_terms[1].sign * degree(boundary.j_terms[1].cycle) == 2);
  for (const StratumAudit& a : r.strata)
    for (const JTermResult& t : a.j_terms) CHECK(check_balancing(t.cycle).balanced);
}

TEST_CASE("target-checked entry rejects anything but degree-1 P1 with two marks") {
  CHECK(sgw_p1(TargetModel{Target::p1, 2, 2}).value == LaurentPoly::kappa_pow(-4));
  CHECK_THROWS_AS(sgw_p1(TargetModel{Target::p1, 4, 2}), DomainError);
  CHECK_THROWS_AS(sgw_p1(TargetModel{Target::p1, 2, 3}), DomainError);
  CHECK_THROWS_AS(sgw_p1(TargetModel{Target::point, 0, 5}), DomainError);
}

TEST_CASE("regime classification") {
  TargetModel p1{Target::p1, 2, 2};
  CHECK(p1.virdim() == 2);
  CHECK(p1.susy_rank() == 2);
  CHECK(sgw_definition_check({1, 1}, p1) == InvariantRegime::ordinary);
  CHECK(sgw_definition_check({0, 0}, p1) == InvariantRegime::super);
  CHECK(sgw_definition_check({2, 2}, p1) == InvariantRegime::zero);

  TargetModel pt{Target::point, 0, 6};
  CHECK(pt.virdim() == 3);
  CHECK(sgw_definition_check({3, 0, 0, 0, 0, 0}, pt) == InvariantRegime::ordinary);
  CHECK(sgw_definition_check({}, pt) == InvariantRegime::super);
}
