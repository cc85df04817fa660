#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cliffordix/curve.hpp"

namespace cliffordix {

// One entry of the gonality sequence: an exact value (lo == hi) or a
// certified interval.
struct GonalityEntry {
    Int lo = 0;
    Int hi = 0;
    const char* lo_why = "";
    const char* hi_why = "";

    bool exact() const { return lo == hi; }
    Int value() const { return lo; } // meaningful only when exact
};

// The sequence d_1, d_2, ... up to r_max, with universal bounds applied at
// construction. Immutable once propagated; reads are freely concurrent.
class GonalitySequence {
public:
    GonalitySequence(Int genus, Int r_max);

    Int genus() const { return genus_; }
    Int r_max() const { return static_cast<Int>(entries_.size()); }

    const GonalityEntry& at(Int r) const;

    bool exact_up_to(Int r) const;

    // Intersects entry r with the single value v; throws ValidationError
    // naming the clashing constraint if the entry becomes empty.
    void assert_exact(Int r, Int v, const char* why);

    void tighten_lo(Int r, Int v, const char* why);
    void tighten_hi(Int r, Int v, const char* why);

private:
    Int genus_;
    std::vector<GonalityEntry> entries_;

    void check(Int r) const;
};

// The unique pair (alpha, beta) with alpha >= 1, 0 <= beta <= alpha and
// r = alpha(alpha+3)/2 - beta. Indexing scheme for plane-curve sequences.
struct NoetherIndex {
    Int r = 0;
    Int alpha = 0;
    Int beta = 0;
};

NoetherIndex noether_decompose(Int r);

// Closed-form sequence for the given family where formulas exist, with the
// remaining entries narrowed by axiom propagation.
GonalitySequence gonality_sequence(const CurveSpec& spec, Int r_max);

// Runs the monotone tightening rules to their least fixpoint. Idempotent;
// never widens an entry. gamma1, when exactly known, feeds the lower bound
// d_r >= min(gamma1 + 2r, g + r - 1).
GonalitySequence propagate_intervals(GonalitySequence seq,
                                     std::optional<Int> exact_gamma1 = std::nullopt);

// Checks every sequence axiom; returns one message per violation (empty
// means valid). Exact entries are checked exactly, intervals for
// compatibility.
std::vector<std::string> sequence_violations(const GonalitySequence& seq);

// gamma_1 as derived from the sequence alone: the minimum of d_r - 2r over
// indices with d_r <= g + r - 2. Interval entries yield an interval.
IntInterval gamma1_from_sequence(const GonalitySequence& seq);

// d_p/p >= d_n/n for all p < n. nullopt when interval entries prevent
// certification.
std::optional<bool> ratio_hypothesis(const GonalitySequence& seq, Int n);

// d_p/p >= d_{p+1}/(p+1) for all p < n.
std::optional<bool> chain_hypothesis(const GonalitySequence& seq, Int n);

} // namespace cliffordix
