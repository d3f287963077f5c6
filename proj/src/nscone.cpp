#include "nscone.hpp"

#include "errors.hpp"

namespace hilbnef {

Rational pair(const NSClass& divisor, const CurveClass& curve) {
    if (divisor.n != curve.n || divisor.d != curve.d)
        throw DomainError("pairing requires matching (n, d): class is on X^[" +
                          std::to_string(divisor.n) + "] (d=" + std::to_string(divisor.d) +
                          "), curve on X^[" + std::to_string(curve.n) +
                          "] (d=" + std::to_string(curve.d) + ")");
    return divisor.alpha * curve.h - divisor.beta / 2 * curve.b;
}

Rational slope_bound_from_curve(const CurveClass& curve) {
    if (curve.h <= 0)
        throw DomainError("slope bound needs a curve with positive H-degree; '" + curve.name +
                          "' has h = " + rational_to_string(curve.h));
    return curve.b / (2 * curve.h);
}

std::string to_string(Containment c) {
    switch (c) {
        case Containment::Yes: return "yes";
        case Containment::No: return "no";
        default: return "unknown";
    }
}

std::string to_string(ConeStatus s) {
    switch (s) {
        case ConeStatus::Exact: return "exact";
        case ConeStatus::Bounded: return "bounded";
        case ConeStatus::SliceExact: return "slice-exact";
        default: return "unknown";
    }
}

const CurveClass& ConeSlice::extremal_witness() const {
    for (const auto& sb : bounds)
        if (!sb.trivial && sb.bound == lower_slope) return sb.curve;
    throw DomainError("cone has no recorded witness for its lower slope");
}

Containment cone_contains(const ConeSlice& cone, const NSClass& divisor) {
    if (divisor.n != cone.n || divisor.d != cone.d)
        throw DomainError("cone_contains requires matching (n, d)");
    if (divisor.beta < 0) return Containment::No; // pairs negatively with Gamma
    if (divisor.beta == 0)
        return divisor.alpha >= 0 ? Containment::Yes : Containment::No; // the H ray
    Rational slope = divisor.alpha / divisor.beta;
    if (slope < cone.lower_slope) return Containment::No; // negative against the witness
    if (cone.nef_slope && slope >= *cone.nef_slope)
        return Containment::Yes; // non-negative span of H and the proven-nef ray
    if ((cone.status == ConeStatus::Exact || cone.status == ConeStatus::SliceExact) &&
        slope >= cone.lower_slope)
        return Containment::Yes;
    return Containment::Unknown;
}

} // namespace hilbnef
