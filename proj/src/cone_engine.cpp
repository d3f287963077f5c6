#include "cone_engine.hpp"

#include "curves.hpp"
#include "errors.hpp"

#include <algorithm>

namespace hilbnef {

SurfaceKind surface_kind_from_string(const std::string& name) {
    if (name == "nl-general") return SurfaceKind::NLGeneral;
    if (name == "contains-line") return SurfaceKind::ContainsLine;
    throw DomainError("unknown surface kind '" + name + "' (expected nl-general or contains-line)");
}

std::string to_string(SurfaceKind kind) {
    return kind == SurfaceKind::NLGeneral ? "nl-general" : "contains-line";
}

FlexStatus flex_status_from_string(const std::string& name) {
    if (name == "ordinary") return FlexStatus::Ordinary;
    if (name == "absent" || name == "absent-all-3-flexes") return FlexStatus::AbsentAll3Flexes;
    if (name == "unknown") return FlexStatus::Unknown;
    throw DomainError("unknown flex status '" + name + "' (expected ordinary, absent or unknown)");
}

std::string to_string(FlexStatus status) {
    switch (status) {
        case FlexStatus::Ordinary: return "ordinary";
        case FlexStatus::AbsentAll3Flexes: return "absent-all-3-flexes";
        default: return "unknown";
    }
}

void ConeQuery::validate() const {
    if (n < 2) throw DomainError("cone query needs n >= 2");
    if (surface == SurfaceKind::NLGeneral && d < 4)
        throw DomainError("nl-general surfaces need d >= 4 (Noether-Lefschetz loci exist from degree 4)");
    if (surface == SurfaceKind::ContainsLine && d < 3)
        throw DomainError("contains-line queries need d >= 3");
    if (flex) {
        if (surface != SurfaceKind::NLGeneral)
            throw DomainError("flex data is only meaningful for nl-general surfaces");
        if (flex->r < 3 || flex->r > d)
            throw DomainError("flex multiplicity must satisfy 3 <= r <= d");
    }
}

namespace {

struct NefRecord {
    Rational slope;
    bool strict;
    std::string provenance;
};

// Everything compute_cone and explain need, gathered in one pass.
struct Assembly {
    std::vector<SlopeBound> bounds;
    std::vector<NefRecord> nef;
    std::vector<std::string> provenance;
    std::vector<std::string> warnings;
    bool force_unknown = false; // the (5,2)-with-unknown-flex case
};

Assembly assemble(const ConeQuery& q) {
    Assembly a;
    const long d = q.d;
    const long n = q.n;

    auto add_bound = [&](CurveClass c, bool trivial = false) {
        Rational bound = trivial ? Rational(0) : slope_bound_from_curve(c);
        a.bounds.push_back(SlopeBound{std::move(c), bound, trivial});
    };

    // Gamma exists on every X^[n]; its trivial record keeps results non-vacuous.
    add_bound(make_curve(CurveName::Gamma, d, n), /*trivial=*/true);

    if (q.surface == SurfaceKind::ContainsLine) {
        add_bound(make_curve(CurveName::Psi, d, n));
        add_bound(make_curve(CurveName::LineCurve, d, n));
        a.nef.push_back({Rational(n - 1), false,
                         "(n-1)H - 1/2 B is the pullback of a Schubert hyperplane class under the "
                         "degree-(n-1) span morphism, hence nef"});
        a.provenance.push_back(
            "surface contains a line: the span morphism to the Grassmannian of degree-(n-1) forms "
            "contracts the line pencil, giving the slice-exact ray (n-1)H - 1/2 B");
        return a;
    }

    add_bound(make_curve(CurveName::Psi, d, n));
    a.provenance.push_back("generic bound: psi forces alpha >= 1/d on every X^[n]");

    if (n == d - 2 && d >= 4) {
        add_bound(make_curve(CurveName::ResGamma, d, n));
        a.provenance.push_back(
            "n = d-2: the residuation curve of the tangent-vector pencil forces "
            "alpha >= (d^2-d-6)/(2d)");
        if (d >= 5) add_bound(make_curve(CurveName::ResPsi, d, n));
    }

    if (n >= d - 1) {
        CurveClass fiber = make_curve(CurveName::Fiber, d, n);
        Rational slope = slope_bound_from_curve(fiber);
        add_bound(std::move(fiber));
        a.nef.push_back({slope, false,
                         "large-n formula: (d/2 - 3/2 + n/d)H - 1/2 B is nef for n >= d-1 "
                         "(Bridgeland-stability methods)"});
        a.provenance.push_back("n >= d-1: extremal slope d/2 - 3/2 + n/d with the pencil-fiber "
                               "curve as dual witness");
    }

    if (d == 4 && n == 2) {
        a.nef.push_back({Rational(3, 4), false,
                         "established quartic answer: 3/4 H - 1/2 B spans the nef cone of X^[2] "
                         "for an NL-general quartic"});
        a.provenance.push_back("quartic X^[2]: extremal ray 3/4 H - 1/2 B");
    }

    if (d == 5 && n == 3) {
        a.nef.push_back({Rational(7, 5), false,
                         "7/5 H - 1/2 B is nef: nef on the collinear locus by residuation, nef off "
                         "it by the span map to the dual projective space"});
        a.provenance.push_back("quintic X^[3]: extremal ray 7/5 H - 1/2 B");
    }

    if (d == 6 && n == 4) {
        a.nef.push_back({Rational(2), false,
                         "2H - 1/2 B is nef: nef on the collinear locus by residuation, nef off it "
                         "as the pullback of sigma_1 under the quadric span map"});
        a.provenance.push_back("sextic X^[4]: extremal ray 2H - 1/2 B");
    }

    if (d == 5 && n == 2) {
        // The tangent-line pencil exists on every NL-general quintic.
        add_bound(make_curve(CurveName::Omega1, d, n));
        a.provenance.push_back("quintic X^[2]: the tangent-line pencil forces alpha >= 7/10");
    }

    bool flex_used = false;
    if (q.flex && q.flex->status == FlexStatus::Ordinary) {
        long r = q.flex->r;
        if (d >= 5 && r == d - n && r >= 3 && n >= 2) {
            add_bound(make_curve(CurveName::Omega, d, n, r));
            a.provenance.push_back(
                "ordinary " + std::to_string(r) + "-flex: the flex line pencil forces alpha >= "
                "(d^2-d-r^2-r)/(2d)");
            if (d == 5 && r == 3) {
                a.nef.push_back({Rational(4, 5), false,
                                 "4/5 H - 1/2 B is nef on X^[2]: it is the residuation pullback of "
                                 "the nef class (1/5)H on X^[3]"});
            }
            flex_used = true;
        }
    } else if (q.flex && q.flex->status == FlexStatus::AbsentAll3Flexes) {
        if (d == 5 && n == 2 && q.flex->r == 3) {
            a.nef.push_back({Rational(4, 5), true,
                             "no surface 3-flexes: 4/5 H - 1/2 B is ample on X^[2] (the collinear "
                             "composite is finite), so the extremal slope is strictly below 4/5"});
            a.provenance.push_back(
                "quintic X^[2] without 3-flexes: extremal slope lies in [7/10, 4/5)");
            flex_used = true;
        }
    }
    if (q.flex && !flex_used && q.flex->status != FlexStatus::Unknown) {
        a.warnings.push_back("flex datum (r=" + std::to_string(q.flex->r) + ", " +
                             to_string(q.flex->status) +
                             ") matches no applicable result for this (d, n); ignored");
    }

    if (d == 5 && n == 2 && (!q.flex || q.flex->status == FlexStatus::Unknown)) {
        a.force_unknown = true;
        a.warnings.push_back(
            "the answer for a quintic X^[2] depends on whether the surface has a 3-flex: "
            "with an ordinary 3-flex the cone ends at 4/5, without 3-flexes it ends in [7/10, 4/5); "
            "supply --flex 3:ordinary or 3:absent to resolve");
    }
    return a;
}

} // namespace

ConeSlice compute_cone(const ConeQuery& q) {
    q.validate();
    Assembly a = assemble(q);

    ConeSlice cone;
    cone.d = q.d;
    cone.n = q.n;
    cone.surface = to_string(q.surface);
    cone.ray_low = hilbert_chow_ray(q.n, q.d);
    cone.provenance = std::move(a.provenance);
    cone.warnings = std::move(a.warnings);

    // Strongest (max) curve bound.
    cone.lower_slope = 0;
    bool have_nontrivial = false;
    for (const auto& sb : a.bounds) {
        if (!sb.trivial && sb.bound > cone.lower_slope) cone.lower_slope = sb.bound;
        if (!sb.trivial) have_nontrivial = true;
    }
    (void)have_nontrivial;
    // Extremal witnesses first, then descending bound strength.
    std::stable_sort(a.bounds.begin(), a.bounds.end(), [](const SlopeBound& x, const SlopeBound& y) {
        if (x.trivial != y.trivial) return !x.trivial;
        return x.bound > y.bound;
    });
    cone.bounds = std::move(a.bounds);

    // Weakest (min) proven nef slope, keeping the strictness of the winner.
    for (const auto& nef : a.nef) {
        if (!cone.nef_slope || nef.slope < *cone.nef_slope) {
            cone.nef_slope = nef.slope;
            cone.nef_slope_strict = nef.strict;
        } else if (nef.slope == *cone.nef_slope && nef.strict) {
            cone.nef_slope_strict = true;
        }
    }

    if (cone.nef_slope && *cone.nef_slope < cone.lower_slope)
        throw DomainError("internal inconsistency: proven nef slope below a curve bound");

    if (q.surface == SurfaceKind::ContainsLine) {
        cone.status = ConeStatus::SliceExact;
        cone.ray_high = NSClass{*cone.nef_slope, Rational(1), q.n, q.d};
    } else if (a.force_unknown) {
        // Deliberately reports no nef data: the answer is genuinely
        // non-uniform across NL-general quintics.
        cone.status = ConeStatus::Unknown;
        cone.nef_slope.reset();
        cone.nef_slope_strict = false;
    } else if (cone.nef_slope && *cone.nef_slope == cone.lower_slope && !cone.nef_slope_strict) {
        cone.status = ConeStatus::Exact;
        cone.ray_high = NSClass{*cone.nef_slope, Rational(1), q.n, q.d};
    } else if (cone.nef_slope) {
        cone.status = ConeStatus::Bounded;
        cone.ray_high = NSClass{*cone.nef_slope, Rational(1), q.n, q.d};
    } else {
        // A theorem-backed curve bound without proven nef data stays
        // "bounded"; purely generic bounds are "unknown".
        bool theorem_bound = false;
        for (const auto& sb : cone.bounds)
            if (!sb.trivial && sb.curve.name != "psi") theorem_bound = true;
        cone.status = theorem_bound ? ConeStatus::Bounded : ConeStatus::Unknown;
    }
    return cone;
}

namespace {

std::string class_string(const Rational& slope) {
    return rational_to_string(slope) + "*H - 1/2*B";
}

std::string pairing_line(const Rational& slope, const CurveClass& c) {
    Rational lhs = slope * c.h;
    Rational rhs = c.b / 2;
    return "pair(" + class_string(slope) + ", " + c.name + ") = " + rational_to_string(slope) +
           "*" + rational_to_string(c.h) + " - 1/2*" + rational_to_string(c.b) + " = " +
           rational_to_string(lhs) + " - " + rational_to_string(rhs) + " = " +
           rational_to_string(lhs - rhs);
}

} // namespace

std::vector<std::string> explain(const ConeQuery& q) {
    ConeSlice cone = compute_cone(q);
    std::vector<std::string> lines;
    lines.push_back("nef cone of X^[" + std::to_string(q.n) + "] in the (H, B) slice, surface degree " +
                    std::to_string(q.d) + ", " + cone.surface);
    for (const auto& p : cone.provenance) lines.push_back("result: " + p);
    lines.push_back("curve bounds (strongest first):");
    for (const auto& sb : cone.bounds) {
        if (sb.trivial) {
            lines.push_back("  " + sb.curve.name + " (h=" + rational_to_string(sb.curve.h) + ", b=" +
                            rational_to_string(sb.curve.b) + "): trivial bound alpha >= 0");
        } else {
            lines.push_back("  " + sb.curve.name + " (h=" + rational_to_string(sb.curve.h) + ", b=" +
                            rational_to_string(sb.curve.b) +
                            "): alpha >= " + rational_to_string(sb.bound));
        }
    }
    lines.push_back("strongest lower bound: alpha >= " + rational_to_string(cone.lower_slope) +
                    " from " + cone.extremal_witness().name);
    lines.push_back(pairing_line(cone.lower_slope, cone.extremal_witness()));
    if (cone.nef_slope) {
        lines.push_back("proven nef at alpha = " + rational_to_string(*cone.nef_slope) +
                        (cone.nef_slope_strict ? " (ample, so the extremal slope is strictly smaller)"
                                               : ""));
    }
    lines.push_back("status: " + to_string(cone.status));
    if (cone.ray_high) {
        lines.push_back("rays: H and " + class_string(cone.ray_high->alpha));
    } else {
        lines.push_back("rays: H and alpha*H - 1/2*B with alpha >= " +
                        rational_to_string(cone.lower_slope));
    }
    for (const auto& w : cone.warnings) lines.push_back("note: " + w);
    return lines;
}

} // namespace hilbnef
