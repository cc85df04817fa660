#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cliffordix/constructions.hpp"

namespace cliffordix {

enum class BoundSide { Lower, Upper, Exact };

const char* side_name(BoundSide side);

struct SourceTag {
    BoundSide side;
    std::string tag;
};

struct RationalInterval {
    Rational lo;
    Rational hi;
    bool exact() const { return lo == hi; }
};

// gamma_n or gamma_n' as an exact value or a certified interval, with the
// provenance of every binding bound. mercat_conditional carries the value
// the dispatched min-expression takes if gamma_n' were equal to gamma_1.
struct CliffordResult {
    Int n = 1;
    Rational lo;
    Rational hi;
    std::vector<SourceTag> sources;
    std::optional<Rational> mercat_conditional;

    bool exact() const { return lo == hi; }
    std::string str() const { return exact() ? lo.str() : "[" + lo.str() + "," + hi.str() + "]"; }
};

// Memoizing evaluator for one curve. Results are pure functions of the
// immutable curve data, so instances can be used from one thread each and
// curves shared freely.
class CliffordEngine {
public:
    explicit CliffordEngine(const Curve& curve) : curve_(curve) {}

    const Curve& curve() const { return curve_; }
    const CliffordResult& gamma(Int n);
    const CliffordResult& gamma_prime(Int n);

    // Only the family-agnostic bounds (universal window, divisibility,
    // divisor sums, construction points). Every exact dispatch value must
    // land inside this interval; used as a cross-check.
    RationalInterval generic_interval(Int n);

private:
    const Curve& curve_;
    std::map<Int, CliffordResult> gamma_memo_;
    std::map<Int, CliffordResult> prime_memo_;

    CliffordResult compute_gamma(Int n, bool generic_only);
    CliffordResult compute_gamma_prime(Int n);
};

CliffordResult gamma_n(const Curve& curve, Int n);
CliffordResult gamma_n_prime(const Curve& curve, Int n);

// The seven concrete terms of the rank-5 chain-hypothesis lower bound.
// plane_variant swaps (2 d_1 + d_3 - 6)/5 for (4 d_1 + 3 d_2 - 12)/10, the
// form valid on smooth plane curves. Requires exact d_1..d_5.
std::vector<Rational> rank5_lower_terms(const GonalitySequence& seq, bool plane_variant);

} // namespace cliffordix
