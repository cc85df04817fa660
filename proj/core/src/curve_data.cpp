#include "cliffordix/curve_data.hpp"

#include <algorithm>

namespace cliffordix {

namespace {

struct FamilyGamma1 {
    std::optional<Int> value;
    bool provisional = false; // must agree with the sequence before we trust it
};

FamilyGamma1 family_gamma1(const CurveSpec& spec) {
    switch (spec.family) {
    case Family::Hyperelliptic: return {0, false};
    case Family::Trigonal: return {1, false};
    case Family::Bielliptic: return {2, false};
    case Family::GeneralKGonal:
        if (spec.k == 4) return {2, false};
        return {spec.k - 2, true};
    case Family::SmoothPlane:
    case Family::GeneralNodalPlane:
        return {spec.delta - 4, false};
    case Family::General:
        return {floor_div(genus_of(spec) - 1, 2), false};
    case Family::Custom:
        return {spec.stated_gamma1, false};
    }
    return {};
}

} // namespace

Curve build_curve(const CurveSpec& spec, Int r_max) {
    validate_spec(spec);
    const Int g = genus_of(spec);
    if (r_max <= 0) r_max = 3 * g;

    FamilyGamma1 fam = family_gamma1(spec);
    std::optional<Int> propagation_gamma1 =
        (fam.value && !fam.provisional) ? fam.value : std::nullopt;

    GonalitySequence seq = propagate_intervals(gonality_sequence(spec, r_max), propagation_gamma1);
    IntInterval derived = gamma1_from_sequence(seq);

    IntInterval gamma1;
    if (!fam.value) {
        gamma1 = derived;
    } else if (fam.provisional) {
        // Asserted only when the propagated intervals can accommodate it.
        gamma1 = derived.contains(*fam.value) ? IntInterval{*fam.value, *fam.value} : derived;
    } else {
        if (!derived.contains(*fam.value))
            throw ValidationError("stated gamma_1 = " + std::to_string(*fam.value) +
                                  " is outside the sequence-derived range " + derived.str());
        gamma1 = IntInterval{*fam.value, *fam.value};
    }

    return Curve{spec, g, gamma1, std::move(seq)};
}

IntInterval known_gamma1(const CurveSpec& spec) { return build_curve(spec).gamma1; }

} // namespace cliffordix
