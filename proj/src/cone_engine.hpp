#ifndef HILBNEF_CONE_ENGINE_HPP
#define HILBNEF_CONE_ENGINE_HPP

#include "nscone.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hilbnef {

enum class SurfaceKind { NLGeneral, ContainsLine };
SurfaceKind surface_kind_from_string(const std::string& name);
std::string to_string(SurfaceKind kind);

enum class FlexStatus { Ordinary, AbsentAll3Flexes, Unknown };
FlexStatus flex_status_from_string(const std::string& name);
std::string to_string(FlexStatus status);

struct FlexData {
    long r = 3;
    FlexStatus status = FlexStatus::Unknown;
};

struct ConeQuery {
    long d = 3;
    long n = 2;
    SurfaceKind surface = SurfaceKind::NLGeneral;
    std::optional<FlexData> flex;

    // Enforces: n >= 2; d >= 4 for nl-general / d >= 3 for contains-line;
    // flex only on nl-general, with 3 <= r <= d.
    void validate() const;
};

// Assembles the best-known cone description for the query: the max over all
// applicable dual-curve lower bounds and the min over proven-nef slopes, with
// every matched witness recorded.
ConeSlice compute_cone(const ConeQuery& query);

// Human-readable derivation: matched results, recorded bounds with their
// curves, and the orthogonality pairing computation for the extremal slope.
std::vector<std::string> explain(const ConeQuery& query);

} // namespace hilbnef

#endif
