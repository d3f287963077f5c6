#ifndef HILBNEF_NSCONE_HPP
#define HILBNEF_NSCONE_HPP

#include "rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hilbnef {

// The divisor class alpha*H^[n] - (beta/2)*B^[n] in the rank-2 slice of the
// Neron-Severi space of the Hilbert scheme of n points on a degree-d surface.
// (1,0) is H^[n]; (0,-2) is B^[n].
struct NSClass {
    Rational alpha;
    Rational beta;
    long n = 2;
    long d = 3;

    bool operator==(const NSClass&) const = default;
};

inline NSClass hilbert_chow_ray(long n, long d) { return NSClass{Rational(1), Rational(0), n, d}; }
inline NSClass nonreduced_locus_class(long n, long d) { return NSClass{Rational(0), Rational(-2), n, d}; }

// A test curve with its exact intersection numbers against H^[n] and B^[n].
struct CurveClass {
    std::string name;
    Rational h; // intersection with H^[n]
    Rational b; // intersection with B^[n]
    long n = 2;
    long d = 3;
    std::optional<long> r;
    std::string provenance;
};

// Bilinear pairing alpha*h - (beta/2)*b; requires matching (n, d).
Rational pair(const NSClass& divisor, const CurveClass& curve);

// b/(2h): the least alpha such that (alpha, 1) pairs non-negatively with the
// curve. Requires h > 0 (the slope bound is not of this form otherwise).
Rational slope_bound_from_curve(const CurveClass& curve);

enum class Containment { Yes, No, Unknown };
std::string to_string(Containment c);

enum class ConeStatus { Exact, Bounded, SliceExact, Unknown };
std::string to_string(ConeStatus s);

// One recorded dual-curve bound; `trivial` marks the Gamma record (alpha >= 0,
// not of the b/2h form since Gamma.h = 0).
struct SlopeBound {
    CurveClass curve;
    Rational bound;
    bool trivial = false;
};

// Best-known description of the nef cone in the (H, B) slice.
//   - every nef alpha*H - (1/2)B has alpha >= lower_slope (dual-curve bound);
//   - (nef_slope, 1) is proven nef when present; strict means it is ample, so
//     the true extremal slope is strictly below it.
struct ConeSlice {
    long d = 3;
    long n = 2;
    std::string surface; // "nl-general" or "contains-line"
    ConeStatus status = ConeStatus::Unknown;
    NSClass ray_low;
    std::optional<NSClass> ray_high;
    Rational lower_slope;
    std::optional<Rational> nef_slope;
    bool nef_slope_strict = false;
    std::vector<SlopeBound> bounds; // all recorded witnesses, extremal first
    std::vector<std::string> provenance;
    std::vector<std::string> warnings;

    const CurveClass& extremal_witness() const; // bound achieving lower_slope
};

Containment cone_contains(const ConeSlice& cone, const NSClass& divisor);

} // namespace hilbnef

#endif
