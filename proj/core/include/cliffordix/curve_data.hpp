#pragma once

#include "cliffordix/gonality.hpp"

namespace cliffordix {

// A curve spec together with everything derivable from it: genus, the
// propagated gonality sequence, and the resolved classical Clifford index.
struct Curve {
    CurveSpec spec;
    Int genus = 0;
    IntInterval gamma1;
    GonalitySequence seq;
};

// r_max = 0 selects the default 3g, which keeps every index the bound
// catalog ever dereferences inside the table.
Curve build_curve(const CurveSpec& spec, Int r_max = 0);

// The family-level gamma_1 where one is stated, cross-checked against the
// sequence-derived interval. Falls back to that interval when the family
// value is provisional and disagrees, or when nothing is stated.
IntInterval known_gamma1(const CurveSpec& spec);

} // namespace cliffordix
