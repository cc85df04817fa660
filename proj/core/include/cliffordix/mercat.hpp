#pragma once

#include <utility>
#include <vector>

#include "cliffordix/bounds.hpp"

namespace cliffordix {

enum class MercatRegime { RangeI, RangeII, OutOfRange };
enum class MercatStatus { Holds, Violated, NotApplicable };

const char* regime_name(MercatRegime regime);
const char* status_name(MercatStatus status);

// Pointwise verdict of the conjectured section bounds: the regime the slope
// falls into, the conjectured integer bound there, and whether the given
// h^0 respects it.
struct MercatVerdict {
    MercatRegime regime = MercatRegime::OutOfRange;
    std::optional<Int> bound;
    MercatStatus status = MercatStatus::NotApplicable;
};

MercatVerdict mercat_check(Int g, Int gamma1, const BundleClass& b);

// For a point in the main range: whether the h^0-form bound holds, paired
// with whether gamma(E) >= gamma_1 holds. The two are equivalent because
// h^0 is an integer; asserting both is the cross-check.
// Throws DomainError outside the main range.
std::pair<bool, bool> gamma_form_equiv(Int g, Int gamma1, const BundleClass& b);

// Exhaustive confirmation that the conjecture cannot fail below degree d_n
// when the chain hypothesis holds: every (d, h0) admitted by the bound
// catalog with d <= d_n yields Holds or OutOfRange.
struct CorDLeDnReport {
    bool applicable = false;
    Int n = 0;
    Int d_n = 0;
    Int points_checked = 0;
    std::vector<BundleClass> counterexamples;

    bool passed() const { return applicable && counterexamples.empty(); }
};

CorDLeDnReport verify_cor_d_le_dn(const Curve& curve, Int n);

} // namespace cliffordix
