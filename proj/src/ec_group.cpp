#include "ecrse/ec_group.hpp"

#include <cstdint>
#include <vector>

namespace ecrse {

namespace {

// canonical representative in [0, p), tolerating negative intermediates
Natural mod(const Natural& value, const Natural& p) {
    Natural r = value % p;
    if (r < 0) r += p;
    return r;
}

Natural rhs_at(const CurveParams& curve, const Natural& x) {
    return (x * x % curve.p * x + curve.a * x + curve.b) % curve.p;
}

constexpr unsigned long kEnumerationGuard = 1000000;

}  // namespace

bool validate_curve(const CurveParams& curve) {
    if (curve.p < 5 || !is_prime(curve.p)) return false;
    Natural disc = (4 * curve.a * curve.a * curve.a + 27 * curve.b * curve.b) % curve.p;
    return disc != 0;
}

bool is_on_curve(const CurveParams& curve, const ECPoint& pt) {
    if (pt.infinity) return true;
    if (pt.x < 0 || pt.x >= curve.p || pt.y < 0 || pt.y >= curve.p) return false;
    return pt.y * pt.y % curve.p == rhs_at(curve, pt.x);
}

ECPoint negate(const CurveParams& curve, const ECPoint& pt) {
    if (!is_on_curve(curve, pt)) throw NotOnCurve();
    if (pt.infinity) return pt;
    return {pt.x, mod(curve.p - pt.y, curve.p), false};
}

ECPoint add(const CurveParams& curve, const ECPoint& lhs, const ECPoint& rhs) {
    if (!is_on_curve(curve, lhs) || !is_on_curve(curve, rhs)) throw NotOnCurve();
    if (lhs.infinity) return rhs;
    if (rhs.infinity) return lhs;

    const Natural& p = curve.p;
    Natural slope;
    if (lhs.x == rhs.x) {
        // same abscissa: inverse pair (covers 2-torsion doubling) or doubling
        if ((lhs.y + rhs.y) % p == 0) return ECPoint::at_infinity();
        slope = (3 * lhs.x * lhs.x + curve.a) % p * mod_inverse(2 * lhs.y, p) % p;
    } else {
        slope = mod(rhs.y - lhs.y, p) * mod_inverse(mod(rhs.x - lhs.x, p), p) % p;
    }
    Natural x3 = mod(slope * slope - lhs.x - rhs.x, p);
    Natural y3 = mod(slope * (lhs.x - x3) - lhs.y, p);
    return {x3, y3, false};
}

ECPoint scalar_mul(const CurveParams& curve, const Natural& k, const ECPoint& pt) {
    if (!is_on_curve(curve, pt)) throw NotOnCurve();
    ECPoint acc = ECPoint::at_infinity();
    if (k == 0 || pt.infinity) return acc;
    for (std::size_t i = mpz_sizeinbase(k.get_mpz_t(), 2); i-- > 0;) {
        acc = add(curve, acc, acc);
        if (mpz_tstbit(k.get_mpz_t(), i)) acc = add(curve, acc, pt);
    }
    return acc;
}

Natural brute_force_count(const CurveParams& curve) {
    if (curve.p > kEnumerationGuard) throw CurveTooLarge();
    const unsigned long p = mpz_get_ui(curve.p.get_mpz_t());
    const unsigned long a = mpz_get_ui(mod(curve.a, curve.p).get_mpz_t());
    const unsigned long b = mpz_get_ui(mod(curve.b, curve.p).get_mpz_t());

    std::vector<std::uint8_t> is_square(p, 0);
    for (unsigned long y = 1; y < p; ++y) is_square[y * y % p] = 1;

    // #E = 1 + #{x : rhs = 0} + 2 * #{x : rhs a nonzero square}
    Natural count = 1;
    for (unsigned long x = 0; x < p; ++x) {
        unsigned long rhs = (x * x % p * x + a * x + b) % p;
        if (rhs == 0)
            count += 1;
        else if (is_square[rhs])
            count += 2;
    }
    return count;
}

Natural brute_force_order(const CurveParams& curve, const ECPoint& pt) {
    if (curve.p > kEnumerationGuard) throw CurveTooLarge();
    if (!is_on_curve(curve, pt)) throw NotOnCurve();
    if (pt.infinity) return 1;
    Natural k = 1;
    ECPoint acc = pt;
    while (!acc.infinity) {
        acc = add(curve, acc, pt);
        ++k;
    }
    return k;
}

bool verify_base_point(const CurveParams& curve, const BasePointInfo& base) {
    if (!is_on_curve(curve, base.point)) return false;
    if (base.order < 1) return false;
    if (base.point.infinity) return base.order == 1;
    if (!scalar_mul(curve, base.order, base.point).infinity) return false;

    // minimality: no proper divisor works iff no maximal one (order / l) does
    std::vector<Natural> prime_factors;
    Natural rest = base.order;
    for (Natural d = 2; d * d <= rest; d += (d == 2 ? 1 : 2)) {
        if (rest % d == 0) {
            prime_factors.push_back(d);
            while (rest % d == 0) rest /= d;
        }
    }
    if (rest > 1) prime_factors.push_back(rest);
    for (const Natural& l : prime_factors) {
        if (scalar_mul(curve, base.order / l, base.point).infinity) return false;
    }
    return true;
}

}  // namespace ecrse
