#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wpq/lift.hpp"

#include "oracles.hpp"

using namespace wpq;

namespace {

ProjectivePoint proj(std::initializer_list<long> v) {
    std::vector<Int> coords;
    for (long x : v) coords.emplace_back(x);
    return ProjectivePoint(std::move(coords));
}

// every canonical projective point with coordinates in [-B, B]
std::vector<ProjectivePoint> canonical_targets(std::size_t arity, long B) {
    std::vector<ProjectivePoint> out;
    std::vector<long long> xs(arity, -B);
    while (true) {
        long long g = 0;
        int lead = 0;
        for (long long v : xs) {
            if (v != 0 && lead == 0) lead = v > 0 ? 1 : -1;
            g = std::gcd(g, v < 0 ? -v : v);
        }
        if (g == 1 && lead == 1) {
            std::vector<Int> coords;
            for (long long v : xs) coords.push_back(make_int(v));
            out.emplace_back(std::move(coords));
        }
        std::size_t pos = arity;
        while (pos > 0 && ++xs[pos - 1] > B) {
            xs[pos - 1] = -B;
            --pos;
        }
        if (pos == 0) break;
    }
    return out;
}

}  // namespace

TEST_CASE("veronese degree formula") {
    CHECK(veronese_degree(validate({2, 4, 6, 10})) == 900);
    CHECK(veronese_degree(validate({1, 1, 2})) == 2);
    CHECK(veronese_degree(validate({2, 3})) == 1);
    CHECK(veronese_degree(validate({1, 1, 1})) == 1);
    CHECK(veronese_degree(validate({1, 2})) == 1);
    CHECK(veronese_degree(validate({2, 3, 5})) == 30);
}

TEST_CASE("orbit counting oracle equals the degree formula") {
    std::vector<std::vector<unsigned long>> systems = {
        {1, 2},    {2, 3},       {1, 1, 2}, {1, 4, 2}, {2, 2},
        {2, 4},    {3, 3, 3},    {1, 2, 3}, {2, 3, 5}, {1, 1, 1, 1},
        {2, 4, 6, 10}};
    for (const auto& w : systems) {
        WeightSystem ws = validate(w);
        CAPTURE(w);
        REQUIRE(make_int_u(orbit_count_oracle(ws, 10000000)) == veronese_degree(ws));
    }
}

TEST_CASE("orbit oracle rejects oversized systems") {
    CHECK_THROWS_AS(orbit_count_oracle(validate({2, 4, 6, 10}), 100), BudgetExceeded);
}

TEST_CASE("lift_check worked examples") {
    // [1:2] in weights (2,3): lambda = 8 with witness [2:4]
    LiftResult r = lift_check(proj({1, 2}), validate({2, 3}));
    REQUIRE(r.liftable);
    CHECK(*r.lambda == 8);
    CHECK(r.witness->coords == std::vector<Rat>{Rat(2), Rat(4)});
    CHECK(veronese(*r.witness) == proj({1, 2}));

    // [1:2:1] in weights (1,1,2): congruence obstruction at p = 2
    LiftResult s = lift_check(proj({1, 2, 1}), validate({1, 1, 2}));
    REQUIRE_FALSE(s.liftable);
    REQUIRE(std::holds_alternative<CongruenceObstruction>(s.obstruction));
    const auto& ob = std::get<CongruenceObstruction>(s.obstruction);
    CHECK(ob.prime == 2);
    // the certificate must be checkable on its own
    const auto& a = ob.residues[ob.bad_i];
    const auto& b = ob.residues[ob.bad_j];
    long g = static_cast<long>(std::gcd(a.modulus, b.modulus));
    CHECK((a.residue - b.residue) % g != 0);

    // all-ones target lifts trivially
    LiftResult t = lift_check(proj({1, 1, 1}), validate({1, 1, 2}));
    REQUIRE(t.liftable);
    CHECK(*t.lambda == 1);
    CHECK(t.witness->coords == std::vector<Rat>{Rat(1), Rat(1), Rat(1)});

    // [2:1:1] in weights (1,4,2): t = -1 (mod 4) against t = 0 (mod 2)
    LiftResult u = lift_check(proj({2, 1, 1}), validate({1, 4, 2}));
    REQUIRE_FALSE(u.liftable);
    CHECK(std::holds_alternative<CongruenceObstruction>(u.obstruction));

    // [1:-1:1] in weights (1,1,2): even exponents with clashing signs
    LiftResult v = lift_check(proj({1, -1, 1}), validate({1, 1, 2}));
    REQUIRE_FALSE(v.liftable);
    CHECK(std::holds_alternative<SignObstruction>(v.obstruction));
}

TEST_CASE("lift_check arity mismatch is rejected") {
    CHECK_THROWS_AS(lift_check(proj({1, 2, 3}), validate({1, 2})), std::invalid_argument);
}

TEST_CASE("brute-force oracle base cases") {
    LiftResult r = lift_bruteforce_oracle(proj({1, 1}), validate({1, 2}), 0);
    REQUIRE(r.liftable);
    CHECK(*r.lambda == 1);

    LiftResult s = lift_bruteforce_oracle(proj({2, 1, 1}), validate({1, 4, 2}), 6);
    CHECK_FALSE(s.liftable);
    CHECK(std::holds_alternative<SearchExhausted>(s.obstruction));
}

TEST_CASE("lift_check matches the brute-force search on a small sweep") {
    for (auto weights : {std::vector<unsigned long>{1, 2}, {2, 3}}) {
        WeightSystem ws = validate(weights);
        for (const auto& y : canonical_targets(2, 6)) {
            CAPTURE(y.coords[0].get_str() + ":" + y.coords[1].get_str());
            LiftResult fast = lift_check(y, ws);
            LiftResult slow = lift_bruteforce_oracle(y, ws, 6);
            REQUIRE(fast.liftable == slow.liftable);
            if (fast.liftable) REQUIRE(veronese(*fast.witness) == y);
        }
    }
}

TEST_CASE("fiber enumeration") {
    auto f1 = fiber_rational_points(proj({1, 2}), validate({2, 3}));
    REQUIRE(f1.size() == 1);
    CHECK(f1[0].coords == std::vector<Rat>{Rat(2), Rat(4)});

    CHECK(fiber_rational_points(proj({1, 2, 1}), validate({1, 1, 2})).empty());

    auto f3 = fiber_rational_points(proj({1, 1}), validate({1, 2}));
    REQUIRE(f3.size() == 1);
    CHECK(f3[0].coords == std::vector<Rat>{Rat(1), Rat(1)});
}

TEST_CASE("fiber points map back to the target and match lift_check") {
    for (auto weights : {std::vector<unsigned long>{1, 2}, {2, 3}, {1, 1, 2}}) {
        WeightSystem ws = validate(weights);
        Int dphi = veronese_degree(ws);
        for (const auto& y : canonical_targets(ws.arity(), 4)) {
            auto fiber = fiber_rational_points(y, ws);
            bool liftable = lift_check(y, ws).liftable;
            REQUIRE(liftable == !fiber.empty());
            bool full_support = true;
            for (const Int& c : y.coords)
                if (c == 0) full_support = false;
            if (full_support) REQUIRE(make_int_u(fiber.size()) <= dphi);
            for (const auto& p : fiber) {
                REQUIRE(veronese(p) == y);
                REQUIRE(wgcd(p).is_one());
            }
        }
    }
}

TEST_CASE("sparsity scans") {
    // a weight-1 coordinate paired with a trivial second exponent gives a
    // section, so two-coordinate systems (1, w) are fully liftable
    for (unsigned long w : {2UL, 4UL}) {
        SparsityRecord rec = sparsity_scan(validate({1, w}), 6);
        CHECK(rec.density == 1);
    }
    // gcd(3, 2) = 1 keeps the congruences solvable and only one modulus even
    SparsityRecord r23 = sparsity_scan(validate({2, 3}), 5);
    CHECK(r23.density == 1);

    SparsityRecord r112 = sparsity_scan(validate({1, 1, 2}), 10, 100000000);
    CHECK(r112.total > 0);
    CHECK(r112.density < 1);
    CHECK(r112.density > 0);

    // monotonicity in B
    unsigned long long prev_total = 0, prev_lift = 0;
    for (unsigned long B = 1; B <= 4; ++B) {
        SparsityRecord rec = sparsity_scan(validate({1, 1, 2}), B);
        CHECK(rec.total >= prev_total);
        CHECK(rec.liftable >= prev_lift);
        prev_total = rec.total;
        prev_lift = rec.liftable;
    }

    CHECK_THROWS_AS(sparsity_scan(validate({1, 1, 2}), 50, 1000), BudgetExceeded);
}

TEST_CASE("sparsity scan is worker-count independent") {
    SparsityRecord a = sparsity_scan(validate({1, 1, 2}), 6, 100000000, 1);
    SparsityRecord b = sparsity_scan(validate({1, 1, 2}), 6, 100000000, 4);
    CHECK(a.total == b.total);
    CHECK(a.liftable == b.liftable);
    CHECK(a.density == b.density);
}
