#include "residuation.hpp"

#include "curves.hpp"
#include "errors.hpp"

namespace hilbnef {

ResiduationMap ResiduationMap::for_degree(long d) {
    if (d < 5) throw DomainError("residuation map needs d >= 5");
    ResiduationMap map;
    map.d = d;
    map.m[0][0] = d - 1;
    map.m[0][1] = Rational(-(d * d - 3 * d)) / 2;
    map.m[1][0] = d;
    map.m[1][1] = Rational(-(d * d - d - 6)) / 2;
    // Validate both defining column identities at construction, so the
    // (alpha, beta) encoding cannot drift against the (H, B/2) formulas.
    NSClass h_image = pullback(map, hilbert_chow_ray(d - 2, d));
    NSClass b_image = pullback(map, nonreduced_locus_class(d - 2, d));
    if (h_image.alpha != d - 1 || h_image.beta != d)
        throw DomainError("residuation map failed the H-column identity");
    if (b_image.alpha != d * d - 3 * d || b_image.beta != d * d - d - 6)
        throw DomainError("residuation map failed the B-column identity");
    return map;
}

NSClass pullback(const ResiduationMap& map, const NSClass& divisor) {
    if (divisor.d != map.d)
        throw DomainError("pullback: divisor surface degree does not match the map");
    if (divisor.n != map.d - 2)
        throw DomainError("pullback: divisor must live on X^[d-2]");
    NSClass out;
    out.alpha = map.m[0][0] * divisor.alpha + map.m[0][1] * divisor.beta;
    out.beta = map.m[1][0] * divisor.alpha + map.m[1][1] * divisor.beta;
    out.n = 2;
    out.d = map.d;
    return out;
}

bool adjoint_check(const ResiduationMap& map, const CurveClass& curve_on_x2,
                   const NSClass& divisor) {
    if (curve_on_x2.n != 2 || curve_on_x2.d != map.d)
        throw DomainError("adjoint_check: curve must live on X^[2] for the map's degree");
    CurveClass pushforward;
    if (curve_on_x2.name == "gamma")
        pushforward = make_curve(CurveName::ResGamma, map.d, map.d - 2);
    else if (curve_on_x2.name == "psi")
        pushforward = make_curve(CurveName::ResPsi, map.d, map.d - 2);
    else
        throw DomainError("adjoint_check supports only gamma and psi on X^[2]");
    return pair(pullback(map, divisor), curve_on_x2) == pair(divisor, pushforward);
}

NSClass pullback_catalog(PullbackCatalog which) {
    switch (which) {
        case PullbackCatalog::P3StarL:
            return NSClass{Rational(1), Rational(1), 3, 5};
        case PullbackCatalog::GrassmannSigma1:
            return NSClass{Rational(2), Rational(1), 4, 6};
    }
    throw DomainError("unreachable pullback catalog entry");
}

} // namespace hilbnef
