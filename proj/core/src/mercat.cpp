#include "cliffordix/mercat.hpp"

#include <algorithm>

namespace cliffordix {

const char* regime_name(MercatRegime regime) {
    switch (regime) {
    case MercatRegime::RangeI: return "range_i";
    case MercatRegime::RangeII: return "range_ii";
    case MercatRegime::OutOfRange: return "out_of_range";
    }
    return "unknown";
}

const char* status_name(MercatStatus status) {
    switch (status) {
    case MercatStatus::Holds: return "holds";
    case MercatStatus::Violated: return "violated";
    case MercatStatus::NotApplicable: return "not_applicable";
    }
    return "unknown";
}

namespace {

Int range_i_bound(Int gamma1, const BundleClass& b) {
    return floor_div(checked::sub(b.d, checked::mul(gamma1, b.n)), 2) + b.n;
}

Int range_ii_bound(Int gamma1, const BundleClass& b) {
    return floor_div(checked::sub(b.d, b.n), gamma1 + 1) + b.n;
}

} // namespace

MercatVerdict mercat_check(Int g, Int gamma1, const BundleClass& b) {
    if (b.n < 1) throw DomainError("mercat_check requires rank >= 1");
    if (gamma1 < 0) throw DomainError("mercat_check requires gamma_1 >= 0");

    Rational mu = b.slope();
    Rational low(gamma1 + 2);
    Rational high(2 * g - 4 - gamma1);

    MercatVerdict v;
    if (mu >= low && mu <= high) {
        v.regime = MercatRegime::RangeI;
        Int bound = range_i_bound(gamma1, b);
        // The boundary slope belongs to both ranges; both bounds are
        // conjectured there, so report the weaker one and check both.
        if (mu == low) bound = std::max(bound, range_ii_bound(gamma1, b));
        v.bound = bound;
        v.status = b.h0 <= *v.bound ? MercatStatus::Holds : MercatStatus::Violated;
    } else if (mu >= Rational(1) && mu < low) {
        v.regime = MercatRegime::RangeII;
        v.bound = range_ii_bound(gamma1, b);
        v.status = b.h0 <= *v.bound ? MercatStatus::Holds : MercatStatus::Violated;
    }
    return v;
}

std::pair<bool, bool> gamma_form_equiv(Int g, Int gamma1, const BundleClass& b) {
    MercatVerdict v = mercat_check(g, gamma1, b);
    if (v.regime != MercatRegime::RangeI)
        throw DomainError("gamma_form_equiv is defined only in the main slope range");
    bool h0_form = b.h0 <= range_i_bound(gamma1, b);
    bool gamma_form = gamma_of(b) >= Rational(gamma1);
    return {h0_form, gamma_form};
}

CorDLeDnReport verify_cor_d_le_dn(const Curve& curve, Int n) {
    CorDLeDnReport report;
    report.n = n;
    if (!curve.gamma1.exact()) return report;
    if (n > curve.seq.r_max()) return report;
    if (chain_hypothesis(curve.seq, n) != std::optional<bool>(true)) return report;

    report.applicable = true;
    report.d_n = curve.seq.at(n).value();
    for (Int d = 1; d <= report.d_n; ++d) {
        Int h0_max = h0_upper(curve, n, d).bound;
        for (Int h0 = 0; h0 <= h0_max; ++h0) {
            ++report.points_checked;
            BundleClass b{n, d, h0};
            MercatVerdict v = mercat_check(curve.genus, curve.gamma1.lo, b);
            if (v.status == MercatStatus::Violated) report.counterexamples.push_back(b);
        }
    }
    return report;
}

} // namespace cliffordix
