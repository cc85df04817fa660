#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cliffordix/rational.hpp"

namespace cliffordix {

enum class Family {
    General,
    Hyperelliptic,
    Trigonal,
    GeneralKGonal,
    Bielliptic,
    SmoothPlane,
    GeneralNodalPlane,
    Custom,
};

std::string family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

// A single d_r value asserted for a custom curve.
struct CurveAssertion {
    Int r = 0;
    Int d = 0;
};

// A curve family plus its parameters. Curves are modeled purely through
// numerical invariants; no equations are ever represented.
struct CurveSpec {
    Family family = Family::General;
    Int g = 0;     // genus parameter (derived for plane families)
    Int delta = 0; // plane model degree
    Int k = 0;     // gonality of a general k-gonal curve
    Int nu = 0;    // node count of a general nodal plane model
    std::optional<Int> stated_gamma1;       // Custom only
    std::vector<CurveAssertion> assertions; // Custom only; strictly increasing in r and d

    static CurveSpec general(Int g);
    static CurveSpec hyperelliptic(Int g);
    static CurveSpec trigonal(Int g);
    static CurveSpec k_gonal(Int g, Int k);
    static CurveSpec bielliptic(Int g);
    static CurveSpec smooth_plane(Int delta);
    static CurveSpec nodal_plane(Int delta, Int nu);
    static CurveSpec custom(Int g, std::optional<Int> gamma1 = std::nullopt,
                            std::vector<CurveAssertion> assertions = {});

    std::string describe() const;
};

// Throws DomainError naming the violated constraint.
void validate_spec(const CurveSpec& spec);

Int genus_of(const CurveSpec& spec);

// Closed integer interval; exact when lo == hi.
struct IntInterval {
    Int lo = 0;
    Int hi = 0;

    bool exact() const { return lo == hi; }
    bool contains(Int v) const { return lo <= v && v <= hi; }
    std::string str() const {
        if (exact()) return std::to_string(lo);
        return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
    }
};

} // namespace cliffordix
