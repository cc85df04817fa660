#pragma once

#include "cliffordix/clifford.hpp"

namespace cliffordix {

// One degree admitted by the bound catalog at the requested section
// threshold, carrying the catalog's maximal h^0 and the gamma it yields.
struct FeasiblePoint {
    Int d = 0;
    Int h0_max = 0;
    Rational gamma;
};

struct FeasibleSet {
    Int n = 1;
    Int threshold = 2;
    std::vector<FeasiblePoint> points;
    std::vector<std::string> skipped_rules; // rules unavailable for lack of exact data
};

// All d in [1, n(g-1)] with h0_upper(n, d) >= threshold. gamma decreases in
// h^0, so evaluating at the catalog maximum loses nothing.
FeasibleSet feasible_set(const Curve& curve, Int n, Int threshold);

// The brute-force lower bound: the least gamma over the feasible set, or
// nothing when the set is empty. Ties resolve to the smallest degree.
struct OracleValue {
    Rational gamma;
    Int attained_d = 0;
    Int attained_h0 = 0;
    bool weakened = false; // some rules were skipped; bound is valid but possibly loose
    std::vector<std::string> skipped_rules;
};

std::optional<OracleValue> oracle_min_gamma(const Curve& curve, Int n, Int threshold);

enum class OracleRelation {
    Equal,          // oracle matches the exact value
    StrictGap,      // oracle is strictly below the exact value
    InsideInterval, // interval result; oracle lies in [lo, hi]
    BelowInterval,  // interval result; oracle is below lo
};

const char* relation_name(OracleRelation r);

// Oracle vs. the closed-form machinery at threshold n+1. The oracle is a
// certified lower bound, so exceeding hi(gamma_n) is a fatal inconsistency.
struct OracleComparison {
    Int n = 1;
    std::optional<OracleValue> oracle;
    CliffordResult clifford;
    OracleRelation relation = OracleRelation::Equal;
};

OracleComparison oracle_cross_check(const Curve& curve, Int n);

} // namespace cliffordix
