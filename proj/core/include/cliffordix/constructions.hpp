#pragma once

#include <string>
#include <vector>

#include "cliffordix/bounds.hpp"

namespace cliffordix {

// A bundle type whose existence is certified for this curve, together with
// the tag of the existence result and the hypothesis that was checked.
struct ConstructionEntry {
    BundleClass bundle;
    std::string source;
    std::string hypothesis;
};

// Every catalogued existence point of rank n with slope <= g - 1. Entries
// whose hypotheses cannot be certified from exact sequence data are omitted;
// h0 is the certified number of sections (a lower bound where the source
// only guarantees "at least", which is the safe direction for upper bounds
// on gamma).
std::vector<ConstructionEntry> achievable_points(const Curve& curve, Int n);

} // namespace cliffordix
