#ifndef ECRSE_EC_GROUP_HPP
#define ECRSE_EC_GROUP_HPP

#include "ecrse/bigmath.hpp"

namespace ecrse {

// y^2 = x^3 + ax + b over F_p: p an odd prime >= 5, 4a^3 + 27b^2 != 0 (mod p).
struct CurveParams {
    Natural p;
    Natural a;
    Natural b;
};

// Affine point, or the identity O when infinity is set (x, y then ignored).
struct ECPoint {
    Natural x;
    Natural y;
    bool infinity = false;

    static ECPoint at_infinity() { return {0, 0, true}; }

    friend bool operator==(const ECPoint& lhs, const ECPoint& rhs) {
        if (lhs.infinity || rhs.infinity) return lhs.infinity == rhs.infinity;
        return lhs.x == rhs.x && lhs.y == rhs.y;
    }
};

// A distinguished point together with its exact order in E(F_p).
struct BasePointInfo {
    ECPoint point;
    Natural order;
};

// True iff p is an odd prime >= 5 and the discriminant condition
// 4a^3 + 27b^2 != 0 (mod p) holds.
bool validate_curve(const CurveParams& curve);

// Membership in E(F_p); O belongs by definition.
bool is_on_curve(const CurveParams& curve, const ECPoint& pt);

// -O = O; -(x, y) = (x, p - y). Throws NotOnCurve.
ECPoint negate(const CurveParams& curve, const ECPoint& pt);

// Full affine group law: identity, inverse pair -> O, doubling with
// slope (3x^2 + a)/(2y), 2-torsion doubling -> O, otherwise chord slope
// (y2 - y1)/(x2 - x1). Throws NotOnCurve for operands off the curve.
ECPoint add(const CurveParams& curve, const ECPoint& lhs, const ECPoint& rhs);

// k-fold sum by left-to-right double-and-add; 0*P = O. The scalar is used
// as-is: reducing it mod p would change the result, and only the point
// order is a valid modulus for scalars.
ECPoint scalar_mul(const CurveParams& curve, const Natural& k, const ECPoint& pt);

// |E(F_p)| including O, via a table of squares. Guard: p <= 10^6,
// else CurveTooLarge.
Natural brute_force_count(const CurveParams& curve);

// Least k >= 1 with k*P = O, by repeated addition. Same guard as the census.
Natural brute_force_order(const CurveParams& curve, const ECPoint& pt);

// Checks order * P = O together with minimality: (order/l) * P != O for
// every prime l dividing order. Cheap enough for any desk-scale order.
bool verify_base_point(const CurveParams& curve, const BasePointInfo& base);

}  // namespace ecrse

#endif
