#include "cliffordix/oracle.hpp"

#include <algorithm>

namespace cliffordix {

const char* relation_name(OracleRelation r) {
    switch (r) {
    case OracleRelation::Equal: return "equal";
    case OracleRelation::StrictGap: return "strict_gap";
    case OracleRelation::InsideInterval: return "inside_interval";
    case OracleRelation::BelowInterval: return "below_interval";
    }
    return "unknown";
}

FeasibleSet feasible_set(const Curve& curve, Int n, Int threshold) {
    if (n < 1) throw DomainError("feasible_set requires rank >= 1");
    FeasibleSet set;
    set.n = n;
    set.threshold = threshold;
    const Int d_max = checked::mul(n, curve.genus - 1);
    for (Int d = 1; d <= d_max; ++d) {
        H0Bound b = h0_upper(curve, n, d);
        for (const std::string& s : b.skipped)
            if (std::find(set.skipped_rules.begin(), set.skipped_rules.end(), s) ==
                set.skipped_rules.end())
                set.skipped_rules.push_back(s);
        if (b.bound < threshold) continue;
        set.points.push_back({d, b.bound, gamma_of(BundleClass{n, d, b.bound})});
    }
    return set;
}

std::optional<OracleValue> oracle_min_gamma(const Curve& curve, Int n, Int threshold) {
    FeasibleSet set = feasible_set(curve, n, threshold);
    if (set.points.empty()) return std::nullopt;
    const FeasiblePoint* best = &set.points.front();
    for (const FeasiblePoint& p : set.points)
        if (p.gamma < best->gamma) best = &p; // ties keep the smallest degree
    OracleValue v;
    v.gamma = best->gamma;
    v.attained_d = best->d;
    v.attained_h0 = best->h0_max;
    v.weakened = !set.skipped_rules.empty();
    v.skipped_rules = std::move(set.skipped_rules);
    return v;
}

OracleComparison oracle_cross_check(const Curve& curve, Int n) {
    OracleComparison cmp;
    cmp.n = n;
    cmp.clifford = gamma_n(curve, n);
    cmp.oracle = oracle_min_gamma(curve, n, n + 1);

    if (!cmp.oracle)
        throw InconsistencyError("oracle found no feasible point at n=" + std::to_string(n) +
                                 " although the universal construction guarantees one");
    const Rational& o = cmp.oracle->gamma;
    if (o > cmp.clifford.hi)
        throw InconsistencyError("oracle lower bound " + o.str() + " exceeds gamma_" +
                                 std::to_string(n) + " <= " + cmp.clifford.hi.str() +
                                 "; some necessary condition is mis-encoded");

    if (cmp.clifford.exact())
        cmp.relation = o == cmp.clifford.hi ? OracleRelation::Equal : OracleRelation::StrictGap;
    else
        cmp.relation =
            o < cmp.clifford.lo ? OracleRelation::BelowInterval : OracleRelation::InsideInterval;
    return cmp;
}

} // namespace cliffordix
