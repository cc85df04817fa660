#include "cliffordix/gonality.hpp"

#include <algorithm>

namespace cliffordix {

namespace {

constexpr const char* kMonotone = "monotone (d_r < d_{r+1})";
constexpr const char* kSubadditive = "subadditive (d_{r+s} <= d_r + d_s)";
constexpr const char* kRiemannRoch = "riemann_roch (d_r = r + g for r >= g)";
constexpr const char* kCliffordLower = "clifford (d_r >= 2r for r <= g-1)";
constexpr const char* kCliffordTop = "clifford (d_{g-1} = 2g-2)";
constexpr const char* kBrillNoether = "brill_noether (d_r <= g - [g/(r+1)] + r)";
constexpr const char* kDegreeCap = "degree (d_r <= r(g-1))";
constexpr const char* kGamma1Lower = "gamma1 (d_r >= min(gamma1 + 2r, g + r - 1))";
constexpr const char* kFamilyFormula = "family formula";
constexpr const char* kAsserted = "asserted value";

Int brill_noether_cap(Int g, Int r) { return g - floor_div(g, r + 1) + r; }

} // namespace

GonalitySequence::GonalitySequence(Int genus, Int r_max) : genus_(genus) {
    if (genus < 4) throw DomainError("gonality sequence requires genus >= 4");
    if (r_max < 1) throw DomainError("gonality sequence requires r_max >= 1");
    entries_.resize(static_cast<std::size_t>(r_max));
    for (Int r = 1; r <= r_max; ++r) {
        GonalityEntry& e = entries_[static_cast<std::size_t>(r - 1)];
        if (r >= genus) {
            e.lo = e.hi = r + genus;
            e.lo_why = e.hi_why = kRiemannRoch;
        } else if (r == genus - 1) {
            e.lo = e.hi = 2 * genus - 2;
            e.lo_why = e.hi_why = kCliffordTop;
        } else {
            e.lo = 2 * r;
            e.lo_why = kCliffordLower;
            Int bn = brill_noether_cap(genus, r);
            Int cap = checked::mul(r, genus - 1);
            if (bn <= cap) {
                e.hi = bn;
                e.hi_why = kBrillNoether;
            } else {
                e.hi = cap;
                e.hi_why = kDegreeCap;
            }
        }
    }
}

void GonalitySequence::check(Int r) const {
    if (r < 1 || r > r_max())
        throw DomainError("gonality index out of range: r=" + std::to_string(r));
}

const GonalityEntry& GonalitySequence::at(Int r) const {
    check(r);
    return entries_[static_cast<std::size_t>(r - 1)];
}

bool GonalitySequence::exact_up_to(Int r) const {
    check(r);
    for (Int i = 1; i <= r; ++i)
        if (!entries_[static_cast<std::size_t>(i - 1)].exact()) return false;
    return true;
}

void GonalitySequence::tighten_lo(Int r, Int v, const char* why) {
    check(r);
    GonalityEntry& e = entries_[static_cast<std::size_t>(r - 1)];
    if (v <= e.lo) return;
    if (v > e.hi)
        throw ValidationError("d_" + std::to_string(r) + ": lower bound " + std::to_string(v) +
                              " from " + why + " exceeds upper bound " + std::to_string(e.hi) +
                              " from " + e.hi_why);
    e.lo = v;
    e.lo_why = why;
}

void GonalitySequence::tighten_hi(Int r, Int v, const char* why) {
    check(r);
    GonalityEntry& e = entries_[static_cast<std::size_t>(r - 1)];
    if (v >= e.hi) return;
    if (v < e.lo)
        throw ValidationError("d_" + std::to_string(r) + ": upper bound " + std::to_string(v) +
                              " from " + why + " is below lower bound " + std::to_string(e.lo) +
                              " from " + e.lo_why);
    e.hi = v;
    e.hi_why = why;
}

void GonalitySequence::assert_exact(Int r, Int v, const char* why) {
    tighten_lo(r, v, why);
    tighten_hi(r, v, why);
}

NoetherIndex noether_decompose(Int r) {
    if (r < 1) throw DomainError("noether_decompose requires r >= 1");
    // alpha(alpha+3)/2 tiles the positive integers: the largest r for a given
    // alpha is alpha(alpha+3)/2 and the smallest is (alpha-1)(alpha+2)/2 + 1.
    Int alpha = 1;
    while (alpha * (alpha + 3) / 2 < r) ++alpha;
    NoetherIndex idx;
    idx.r = r;
    idx.alpha = alpha;
    idx.beta = alpha * (alpha + 3) / 2 - r;
    return idx;
}

GonalitySequence propagate_intervals(GonalitySequence seq, std::optional<Int> exact_gamma1) {
    const Int g = seq.genus();
    const Int r_max = seq.r_max();

    if (exact_gamma1) {
        for (Int r = 1; r <= std::min(g - 2, r_max); ++r)
            seq.tighten_lo(r, std::min(*exact_gamma1 + 2 * r, g + r - 1), kGamma1Lower);
    }

    const Int cap = 10 * r_max;
    Int sweeps = 0;
    bool changed = true;
    while (changed) {
        if (++sweeps > cap)
            throw InconsistencyError("interval propagation exceeded its iteration cap");
        changed = false;
        auto lo_of = [&](Int r) { return seq.at(r).lo; };
        auto hi_of = [&](Int r) { return seq.at(r).hi; };
        for (Int r = 1; r <= r_max; ++r) {
            if (r > 1 && lo_of(r - 1) + 1 > lo_of(r)) {
                seq.tighten_lo(r, lo_of(r - 1) + 1, kMonotone);
                changed = true;
            }
            if (r < r_max && hi_of(r + 1) - 1 < hi_of(r)) {
                seq.tighten_hi(r, hi_of(r + 1) - 1, kMonotone);
                changed = true;
            }
            for (Int s = 1; 2 * s <= r; ++s) {
                Int bound = checked::add(hi_of(s), hi_of(r - s));
                if (bound < hi_of(r)) {
                    seq.tighten_hi(r, bound, kSubadditive);
                    changed = true;
                }
            }
            for (Int s = 1; r + s <= r_max; ++s) {
                Int bound = checked::sub(lo_of(r + s), hi_of(s));
                if (bound > lo_of(r)) {
                    seq.tighten_lo(r, bound, kSubadditive);
                    changed = true;
                }
            }
        }
    }
    return seq;
}

GonalitySequence gonality_sequence(const CurveSpec& spec, Int r_max) {
    validate_spec(spec);
    const Int g = genus_of(spec);
    GonalitySequence seq(g, r_max);

    switch (spec.family) {
    case Family::General:
        // d_r = g - [g/(r+1)] + r also covers r >= g, where the bracket is 0.
        for (Int r = 1; r <= r_max; ++r)
            seq.assert_exact(r, brill_noether_cap(g, r), kFamilyFormula);
        break;
    case Family::Hyperelliptic:
        for (Int r = 1; r <= std::min(g - 1, r_max); ++r)
            seq.assert_exact(r, 2 * r, kFamilyFormula);
        break;
    case Family::Trigonal:
        for (Int r = 1; r <= std::min(g - 1, r_max); ++r) {
            Int v = r <= floor_div(g - 1, 3) ? 3 * r
                                             : r + g - 1 - floor_div(g - r - 1, 2);
            seq.assert_exact(r, v, kFamilyFormula);
        }
        break;
    case Family::GeneralKGonal:
        if (spec.k == 4) {
            for (Int r = 1; r <= std::min(g - 1, r_max); ++r) {
                Int v = r <= floor_div(g - 1, 4) ? 4 * r
                                                 : r + g - 1 - floor_div(g - r - 1, 3);
                if (g % 4 == 0 && r == g / 4) v = g - 1;
                seq.assert_exact(r, v, kFamilyFormula);
            }
        } else {
            // d_1 = k is the definition of the family; the closed form kr is
            // only certified on the stated range. Everything else stays an
            // interval.
            seq.assert_exact(1, spec.k, kFamilyFormula);
            Int exact_range = floor_div(floor_div(g - 4, 2), spec.k - 2);
            for (Int r = 2; r <= std::min(exact_range, r_max); ++r)
                seq.assert_exact(r, spec.k * r, kFamilyFormula);
        }
        break;
    case Family::Bielliptic:
        for (Int r = 1; r <= std::min(g - 3, r_max); ++r)
            seq.assert_exact(r, 2 * r + 2, kFamilyFormula);
        if (g - 2 <= r_max) seq.assert_exact(g - 2, 2 * g - 3, kFamilyFormula);
        break;
    case Family::SmoothPlane:
        for (Int r = 1; r <= std::min(g - 1, r_max); ++r) {
            NoetherIndex idx = noether_decompose(r);
            seq.assert_exact(r, idx.alpha * spec.delta - idx.beta, kFamilyFormula);
        }
        break;
    case Family::GeneralNodalPlane:
        seq.assert_exact(1, spec.delta - 2, kFamilyFormula);
        if (r_max >= 2) seq.assert_exact(2, spec.delta, kFamilyFormula);
        break;
    case Family::Custom:
        for (const auto& a : spec.assertions)
            if (a.r <= r_max) seq.assert_exact(a.r, a.d, kAsserted);
        break;
    }
    return seq;
}

std::vector<std::string> sequence_violations(const GonalitySequence& seq) {
    std::vector<std::string> out;
    const Int g = seq.genus();
    const Int r_max = seq.r_max();
    auto flag = [&](Int r, const char* what) {
        out.push_back("d_" + std::to_string(r) + " violates " + what);
    };

    for (Int r = 1; r <= r_max; ++r) {
        const GonalityEntry& e = seq.at(r);
        if (e.lo > e.hi) flag(r, "interval consistency (lo <= hi)");
        if (r < r_max && seq.at(r + 1).lo < e.lo + 1) flag(r, kMonotone);
        if (r < r_max && e.exact() && seq.at(r + 1).exact() && seq.at(r + 1).value() <= e.value())
            flag(r, kMonotone);
        if (r >= g && !(e.exact() && e.value() == r + g)) flag(r, kRiemannRoch);
        if (r <= g - 1 && e.lo < 2 * r) flag(r, kCliffordLower);
        if (r == g - 1 && !(e.exact() && e.value() == 2 * g - 2)) flag(r, kCliffordTop);
        if (e.hi > brill_noether_cap(g, r)) flag(r, kBrillNoether);
        if (e.hi > r * (g - 1)) flag(r, kDegreeCap);
    }
    for (Int m = 2; m <= r_max; ++m) {
        for (Int s = 1; 2 * s <= m; ++s) {
            if (seq.at(m).lo > checked::add(seq.at(s).hi, seq.at(m - s).hi)) {
                flag(m, kSubadditive);
                break;
            }
        }
    }

    // Additivity anywhere forces the whole initial segment onto multiples of
    // d_1: if d_r + d_s = d_{r+s} then d_m = m d_1 for every m <= r+s.
    Int forced_up_to = 0;
    for (Int m = 2; m <= r_max; ++m) {
        if (!seq.at(m).exact()) continue;
        for (Int s = 1; 2 * s <= m; ++s) {
            if (!seq.at(s).exact() || !seq.at(m - s).exact()) continue;
            if (seq.at(s).value() + seq.at(m - s).value() == seq.at(m).value())
                forced_up_to = std::max(forced_up_to, m);
        }
    }
    if (forced_up_to >= 2 && seq.at(1).exact()) {
        Int d1 = seq.at(1).value();
        for (Int m = 2; m <= forced_up_to; ++m) {
            Int want = checked::mul(m, d1);
            const GonalityEntry& e = seq.at(m);
            bool ok = e.exact() ? e.value() == want : (e.lo <= want && want <= e.hi);
            if (!ok) flag(m, "pencil multiples (d_r + d_s = d_{r+s} forces d_m = m d_1)");
        }
    }
    return out;
}

IntInterval gamma1_from_sequence(const GonalitySequence& seq) {
    const Int g = seq.genus();
    std::optional<Int> lo_min;
    std::optional<Int> hi_min;
    for (Int r = 1; r <= std::min(g - 2, seq.r_max()); ++r) {
        const GonalityEntry& e = seq.at(r);
        // Eligibility d_r <= g + r - 2 keeps h^1 >= 2.
        if (e.lo <= g + r - 2) {
            Int cand = e.lo - 2 * r;
            if (!lo_min || cand < *lo_min) lo_min = cand;
        }
        if (e.hi <= g + r - 2) {
            Int cand = e.hi - 2 * r;
            if (!hi_min || cand < *hi_min) hi_min = cand;
        }
    }
    if (!hi_min)
        throw InconsistencyError("no index is certainly eligible for gamma_1; sequence is invalid");
    return IntInterval{std::max<Int>(0, std::min(*lo_min, *hi_min)), *hi_min};
}

std::optional<bool> ratio_hypothesis(const GonalitySequence& seq, Int n) {
    if (n > seq.r_max() || !seq.exact_up_to(n)) return std::nullopt;
    Int dn = seq.at(n).value();
    for (Int p = 1; p < n; ++p)
        if (checked::mul(seq.at(p).value(), n) < checked::mul(dn, p)) return false;
    return true;
}

std::optional<bool> chain_hypothesis(const GonalitySequence& seq, Int n) {
    if (n > seq.r_max() || !seq.exact_up_to(n)) return std::nullopt;
    for (Int p = 1; p < n; ++p)
        if (checked::mul(seq.at(p).value(), p + 1) < checked::mul(seq.at(p + 1).value(), p))
            return false;
    return true;
}

} // namespace cliffordix
