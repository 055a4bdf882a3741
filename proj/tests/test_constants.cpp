#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wpq/constants.hpp"

using namespace wpq;

namespace {
const Rat kTol(1, 1000000);
}

TEST_CASE("rational leading constant") {
    BoundedReal c12 = rational_leading_constant(validate({1, 2}), kTol);
    CHECK(c12.width() <= kTol);
    CHECK(c12.contains(Rat("16638147451614149/10000000000000000")));  // 2/zeta(3)

    BoundedReal c11 = rational_leading_constant(validate({1, 1}), kTol);
    CHECK(c11.contains(Rat("12158542037080532/10000000000000000")));  // 12/pi^2
}

TEST_CASE("Schanuel constant specializations over Q") {
    // n = 1: (1/(2 zeta(2))) * 2^2 * 2^0 = 2/zeta(2)
    FieldInvariants inv1 = rational_field_invariants(2, kTol);
    BoundedReal s1 = schanuel_constant(1, inv1);
    CHECK(s1.overlaps(rational_leading_constant(validate({1, 1}), kTol)));

    // n = 2: (1/(2 zeta(3))) * 2^3 * 3^0 = 4/zeta(3)
    FieldInvariants inv2 = rational_field_invariants(3, kTol);
    BoundedReal s2 = schanuel_constant(2, inv2);
    CHECK(s2.contains(Rat("33276294903228299/10000000000000000")));  // 4/zeta(3)
    CHECK(s2.overlaps(rational_leading_constant(validate({1, 1, 1}), kTol)));

    // doubling the number of roots of unity halves the constant
    FieldInvariants doubled = inv1;
    doubled.roots_of_unity = 4;
    BoundedReal half = schanuel_constant(1, doubled);
    CHECK(half.lower * 2 == s1.lower);
    CHECK(half.upper * 2 == s1.upper);
}

TEST_CASE("inconsistent invariants are rejected") {
    FieldInvariants inv = rational_field_invariants(2, kTol);
    inv.real_embeddings = 2;  // r + 2s = 2 != m*e = 1
    CHECK_THROWS_AS(schanuel_constant(1, inv), std::invalid_argument);
}

TEST_CASE("number-field leading constant at Q matches the rational one") {
    WeightSystem ws = validate({1, 2});
    FieldInvariants inv = rational_field_invariants(ws.Q, kTol);
    LeadingConstant lc = numberfield_leading_constant(ws, inv);
    CHECK(lc.exponent == 3);  // m * Q
    CHECK(lc.constant.overlaps(rational_leading_constant(ws, kTol)));

    // doubling h doubles the constant
    FieldInvariants doubled = inv;
    doubled.class_number = 2;
    LeadingConstant lc2 = numberfield_leading_constant(ws, doubled);
    CHECK(lc2.constant.lower == lc.constant.lower * 2);
    CHECK(lc2.constant.upper == lc.constant.upper * 2);

    // exponent report m*Q
    FieldInvariants m2 = inv;
    m2.m = 2;
    m2.real_embeddings = 2;  // keep r + 2s = m*e
    m2.zeta_value = BoundedReal(Rat(1), Rat(2));
    CHECK(numberfield_leading_constant(ws, m2).exponent == 6);
}

TEST_CASE("sparsity factor") {
    for (unsigned long q = 1; q <= 100; ++q) CHECK(sparsity_factor(q, 1, 1) == 1);
    CHECK(sparsity_factor(6, 1, 3) == Rat(1, 2));
    CHECK(sparsity_factor(60, 2, 2) == Rat(1, 2));
    CHECK(sparsity_factor(2, 1, 2) == 1);  // gcd(2, phi(2)) = 1
}

TEST_CASE("degree-e constant term") {
    // over Q with trivial invariants, V_K = 1 and the constant is
    // S_K(n) divided by the literal geometric divisor
    WeightSystem ws = validate({1, 2});
    FieldInvariants inv = rational_field_invariants(2, kTol);  // zeta(n+1) = zeta(2)
    DegreeEConstant de = degree_e_constant_term(ws, inv);
    CHECK(de.geometric_divisor == 1);  // q^n / prod q_i = 2^1 / (1*2)
    CHECK(de.log_power == 2);          // (me, n) = (1, 1)
    CHECK_FALSE(de.divisor_mismatch);

    WeightSystem big = validate({2, 4, 6, 10});
    FieldInvariants inv4 = rational_field_invariants(4, kTol);
    DegreeEConstant de4 = degree_e_constant_term(big, inv4);
    CHECK(de4.geometric_divisor == 450);
    CHECK(de4.lemma_degree == 900);
    CHECK(de4.divisor_mismatch);
    CHECK(de4.exponent == 22);
    CHECK(de4.error_exponent == 20);  // 22 - min q_i / m = 22 - 2
    CHECK(de4.log_power == 1);

    // the constant is exactly S_K(n) / divisor when V_K = 1
    BoundedReal recon = de4.constant.scale(de4.geometric_divisor);
    BoundedReal s3 = schanuel_constant(3, inv4);
    CHECK(recon.lower == s3.lower);
    CHECK(recon.upper == s3.upper);
}

TEST_CASE("bound exponents") {
    BoundsRecord r = bounds_evaluators(1, 2, 1, 3, 3);
    CHECK(r.gamma_g == 8);
    CHECK(r.mu_g == 5);
    CHECK(r.beta == 3);
    CHECK(r.converges);

    CHECK_FALSE(bounds_evaluators(1, 2, 1, 3, 2).converges);
    CHECK(bounds_evaluators(2, 2, 1, 3, 3).mu_g == -1);  // g = e
    CHECK_THROWS_AS(bounds_evaluators(2, 3, 1, 3, 3), std::invalid_argument);

    // gamma_1 = m(e^2 + e + 2)
    for (auto [g, e, m, Q] : std::vector<std::array<unsigned long, 4>>{
             {1, 2, 1, 3}, {1, 3, 2, 5}, {1, 4, 1, 7}, {1, 5, 3, 4}, {1, 2, 2, 22}}) {
        BoundsRecord b = bounds_evaluators(g, e, m, Q, e + 1);
        REQUIRE(b.gamma_g == Rat(m) * (Rat(e) * Rat(e) + Rat(e) + 2));
    }
}

TEST_CASE("comparison table") {
    WeightSystem ws = validate({1, 2});
    ComparisonReport rep = comparison_constants(ws, kTol);
    CHECK(rep.deng_exponent == 3);
    CHECK(rep.deng_error_exponent == 2);
    CHECK(rep.deng_constant.contains(Rat("16638147451614149/10000000000000000")));
    CHECK(rep.artifact_exponent == rep.deng_exponent);
    CHECK(rep.morphism_degree_e == 2);         // defaults to q
    CHECK(rep.morphism_exponent_T == Rat(3, 2));
    CHECK(rep.morphism_exponent_X_equiv == 3);  // back in the X scale

    // all-ones weights: everything coincides with the Schanuel setting
    ComparisonReport ones = comparison_constants(validate({1, 1}), kTol);
    CHECK(ones.morphism_degree_e == 1);
    CHECK(ones.morphism_exponent_T == 2);
    CHECK(ones.morphism_exponent_X_equiv == 2);
    CHECK(ones.deng_constant.overlaps(schanuel_constant(1, rational_field_invariants(2, kTol))));
}

TEST_CASE("growth predictors") {
    ExponentPredictors p = growth_predictors(1, 1, 1);
    CHECK(p.a_W == 2);
    CHECK(p.b_W == 0);
    CHECK(growth_predictors(2, 3, 1).a_W == 8);
    CHECK(growth_predictors(1, 2, 2).b_W == 1);
}
