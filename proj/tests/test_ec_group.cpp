#include <doctest.h>

#include "ecrse/ec_group.hpp"
#include "ecrse/rng.hpp"

using ecrse::CurveParams;
using ecrse::ECPoint;
using ecrse::Natural;

namespace {

// y^2 = x^3 + 71x + 602 over F_1009, base point (1, 237) of order 530
const CurveParams kCurve{1009, 71, 602};
const ECPoint kBase{1, 237, false};

ECPoint random_point(const CurveParams& curve, ecrse::SeededRng& rng) {
    for (;;) {
        Natural x = rng.below(curve.p);
        Natural rhs = (x * x % curve.p * x + curve.a * x + curve.b) % curve.p;
        if (rhs == 0) return {x, 0, false};
        if (!ecrse::is_quadratic_residue(rhs, curve.p)) continue;
        auto roots = ecrse::mod_sqrt(rhs, curve.p);
        return {x, rng.next_u64() % 2 ? roots.second : roots.first, false};
    }
}

}  // namespace

TEST_SUITE("ec_group") {

TEST_CASE("validate_curve checks primality and the discriminant") {
    CHECK(ecrse::validate_curve(kCurve));
    CHECK(ecrse::validate_curve({17, 2, 2}));  // 4*8 + 27*4 = 140 = 4 (mod 17)
    CHECK_FALSE(ecrse::validate_curve({1009, 0, 0}));
    CHECK_FALSE(ecrse::validate_curve({17, 0, 0}));
    CHECK_FALSE(ecrse::validate_curve({989, 71, 602}));  // 989 = 23 * 43
    CHECK_FALSE(ecrse::validate_curve({3, 1, 1}));       // below the p >= 5 floor
    CHECK_FALSE(ecrse::validate_curve({2, 1, 1}));
}

TEST_CASE("is_on_curve accepts members and rejects everything else") {
    CHECK(ecrse::is_on_curve(kCurve, {354, 88, false}));
    CHECK(ecrse::is_on_curve(kCurve, ECPoint::at_infinity()));
    CHECK(ecrse::is_on_curve(kCurve, kBase));
    CHECK_FALSE(ecrse::is_on_curve(kCurve, {354, 89, false}));
    // unreduced coordinates are not members even if congruent ones are
    CHECK_FALSE(ecrse::is_on_curve(kCurve, {354 + 1009, 88, false}));
}

TEST_CASE("negate mirrors the ordinate") {
    CHECK(ecrse::negate(kCurve, {984, 175, false}) == ECPoint{984, 834, false});
    CHECK(ecrse::negate(kCurve, ECPoint::at_infinity()) == ECPoint::at_infinity());
    // x = 50 is a root of x^3 + 71x + 602 mod 1009, so (50, 0) is 2-torsion
    CHECK(ecrse::negate(kCurve, {50, 0, false}) == ECPoint{50, 0, false});
    CHECK_THROWS_AS(ecrse::negate(kCurve, {354, 89, false}), ecrse::NotOnCurve);
}

TEST_CASE("add reproduces the worked sums") {
    CHECK(ecrse::add(kCurve, {354, 88, false}, {984, 175, false}) == ECPoint{926, 227, false});
    CHECK(ecrse::add(kCurve, {926, 227, false}, {984, 834, false}) == ECPoint{354, 88, false});
}

TEST_CASE("add handles identity, inverses, doubling and 2-torsion") {
    ECPoint p{354, 88, false};
    CHECK(ecrse::add(kCurve, p, ECPoint::at_infinity()) == p);
    CHECK(ecrse::add(kCurve, ECPoint::at_infinity(), p) == p);
    CHECK(ecrse::add(kCurve, ECPoint::at_infinity(), ECPoint::at_infinity()) ==
          ECPoint::at_infinity());
    CHECK(ecrse::add(kCurve, p, ecrse::negate(kCurve, p)) == ECPoint::at_infinity());
    CHECK(ecrse::add(kCurve, kBase, kBase) == ECPoint{268, 692, false});
    CHECK(ecrse::add(kCurve, {50, 0, false}, {50, 0, false}) == ECPoint::at_infinity());
    CHECK_THROWS_AS(ecrse::add(kCurve, p, {354, 89, false}), ecrse::NotOnCurve);
}

TEST_CASE("add is commutative and associative on random samples") {
    ecrse::SeededRng rng(21);
    for (int trial = 0; trial < 250; ++trial) {
        ECPoint a = random_point(kCurve, rng);
        ECPoint b = random_point(kCurve, rng);
        ECPoint c = random_point(kCurve, rng);
        REQUIRE(ecrse::add(kCurve, a, b) == ecrse::add(kCurve, b, a));
        REQUIRE(ecrse::add(kCurve, ecrse::add(kCurve, a, b), c) ==
                ecrse::add(kCurve, a, ecrse::add(kCurve, b, c)));
    }
}

TEST_CASE("addition closes over the curve") {
    ecrse::SeededRng rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        ECPoint a = random_point(kCurve, rng);
        ECPoint b = random_point(kCurve, rng);
        REQUIRE(ecrse::is_on_curve(kCurve, ecrse::add(kCurve, a, b)));
        REQUIRE(ecrse::is_on_curve(kCurve, ecrse::scalar_mul(kCurve, rng.below(2000), a)));
    }
}

TEST_CASE("scalar_mul reproduces the worked multiples of the base point") {
    CHECK(ecrse::scalar_mul(kCurve, 281, kBase) == ECPoint{984, 175, false});
    CHECK(ecrse::scalar_mul(kCurve, 530, kBase) == ECPoint::at_infinity());
    CHECK(ecrse::scalar_mul(kCurve, 17, kBase) == ECPoint{266, 133, false});
    CHECK(ecrse::scalar_mul(kCurve, 453, kBase) == ECPoint{572, 900, false});
    CHECK(ecrse::scalar_mul(kCurve, 1, kBase) == kBase);
    CHECK(ecrse::scalar_mul(kCurve, 0, kBase) == ECPoint::at_infinity());
}

TEST_CASE("scalars are never reduced modulo the field prime") {
    // 17 * 432 = 7344; 7344 = 281 (mod 1009) but 7344 = 454 (mod 530), so
    // 7344 P must equal 454 P and differ from 281 P
    ECPoint big = ecrse::scalar_mul(kCurve, 7344, kBase);
    CHECK(big == ecrse::scalar_mul(kCurve, 454, kBase));
    CHECK(big == ECPoint{471, 198, false});
    CHECK_FALSE(big == ecrse::scalar_mul(kCurve, 281, kBase));
}

TEST_CASE("scalar_mul matches the repeated-addition oracle for k <= 50") {
    ECPoint chain = ECPoint::at_infinity();
    for (unsigned long k = 0; k <= 50; ++k) {
        CAPTURE(k);
        REQUIRE(ecrse::scalar_mul(kCurve, k, kBase) == chain);
        chain = ecrse::add(kCurve, chain, kBase);
    }
}

TEST_CASE("scalar_mul is additive and respects the point order") {
    ecrse::SeededRng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        Natural k1 = rng.below(530);
        Natural k2 = rng.below(530);
        REQUIRE(ecrse::scalar_mul(kCurve, k1 + k2, kBase) ==
                ecrse::add(kCurve, ecrse::scalar_mul(kCurve, k1, kBase),
                           ecrse::scalar_mul(kCurve, k2, kBase)));
        Natural k = rng.below(100000);
        REQUIRE(ecrse::scalar_mul(kCurve, k, kBase) ==
                ecrse::scalar_mul(kCurve, k % 530, kBase));
    }
}

TEST_CASE("brute_force_count finds 1060 points on the demo curve") {
    CHECK(ecrse::brute_force_count(kCurve) == 1060);
}

TEST_CASE("brute_force_count matches a full pair scan on a tiny curve") {
    Natural expect = 1;  // O
    for (unsigned long x = 0; x < 17; ++x)
        for (unsigned long y = 0; y < 17; ++y)
            if (y * y % 17 == (x * x * x + 2 * x + 2) % 17) ++expect;
    CHECK(ecrse::brute_force_count({17, 2, 2}) == expect);
}

TEST_CASE("census respects the Hasse bound") {
    for (const CurveParams& curve :
         {kCurve, CurveParams{17, 2, 2}, CurveParams{101, 3, 5}, CurveParams{997, 1, 1}}) {
        REQUIRE(ecrse::validate_curve(curve));
        Natural count = ecrse::brute_force_count(curve);
        Natural gap = count - (curve.p + 1);
        CAPTURE(curve.p);
        REQUIRE(gap * gap <= 4 * curve.p);
    }
}

TEST_CASE("enumeration guard rejects large fields") {
    CHECK_THROWS_AS(ecrse::brute_force_count({1000003, 1, 1}), ecrse::CurveTooLarge);
    CHECK_THROWS_AS(ecrse::brute_force_order({1000003, 1, 1}, ECPoint::at_infinity()),
                    ecrse::CurveTooLarge);
}

TEST_CASE("brute_force_order finds 530 for the demo base point") {
    CHECK(ecrse::brute_force_order(kCurve, kBase) == 530);
    CHECK(ecrse::brute_force_order(kCurve, ECPoint::at_infinity()) == 1);
    CHECK(ecrse::brute_force_order(kCurve, {50, 0, false}) == 2);
}

TEST_CASE("point orders divide the group order") {
    ecrse::SeededRng rng(24);
    Natural count = ecrse::brute_force_count(kCurve);
    for (int trial = 0; trial < 20; ++trial) {
        ECPoint pt = random_point(kCurve, rng);
        CAPTURE(pt.x);
        REQUIRE(count % ecrse::brute_force_order(kCurve, pt) == 0);
    }
}

TEST_CASE("verify_base_point demands the exact order") {
    CHECK(ecrse::verify_base_point(kCurve, {kBase, 530}));
    CHECK_FALSE(ecrse::verify_base_point(kCurve, {kBase, 1060}));  // multiple, not order
    CHECK_FALSE(ecrse::verify_base_point(kCurve, {kBase, 529}));
    CHECK_FALSE(ecrse::verify_base_point(kCurve, {kBase, 265}));
    CHECK_FALSE(ecrse::verify_base_point(kCurve, {kBase, 0}));
    CHECK(ecrse::verify_base_point(kCurve, {{50, 0, false}, 2}));
    CHECK(ecrse::verify_base_point(kCurve, {ECPoint::at_infinity(), 1}));
    CHECK_FALSE(ecrse::verify_base_point(kCurve, {{354, 89, false}, 530}));
}

}  // TEST_SUITE
