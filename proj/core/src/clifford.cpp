#include "cliffordix/clifford.hpp"

#include <algorithm>

namespace cliffordix {

const char* side_name(BoundSide side) {
    switch (side) {
    case BoundSide::Lower: return "lower";
    case BoundSide::Upper: return "upper";
    case BoundSide::Exact: return "exact";
    }
    return "unknown";
}

namespace {

struct Candidate {
    BoundSide side;
    Rational value;
    std::string tag;
};

class Assembler {
public:
    void lower(Rational v, std::string tag) { cands_.push_back({BoundSide::Lower, v, std::move(tag)}); }
    void upper(Rational v, std::string tag) { cands_.push_back({BoundSide::Upper, v, std::move(tag)}); }
    void exact(Rational v, std::string tag) { cands_.push_back({BoundSide::Exact, v, std::move(tag)}); }

    bool empty() const { return cands_.empty(); }

    RationalInterval window(Int n) const {
        std::optional<Rational> lo;
        std::optional<Rational> hi;
        const Candidate* lo_src = nullptr;
        const Candidate* hi_src = nullptr;
        for (const Candidate& c : cands_) {
            if (c.side != BoundSide::Upper && (!lo || c.value > *lo)) {
                lo = c.value;
                lo_src = &c;
            }
            if (c.side != BoundSide::Lower && (!hi || c.value < *hi)) {
                hi = c.value;
                hi_src = &c;
            }
        }
        if (!lo || !hi) throw InconsistencyError("no bound candidates at n=" + std::to_string(n));
        if (*lo > *hi)
            throw InconsistencyError("clashing bounds at n=" + std::to_string(n) + ": " +
                                     lo_src->tag + " gives >= " + lo->str() + " but " +
                                     hi_src->tag + " gives <= " + hi->str());
        return RationalInterval{*lo, *hi};
    }

    CliffordResult finish(Int n, std::optional<Rational> conditional) const {
        RationalInterval w = window(n);
        CliffordResult res;
        res.n = n;
        res.lo = w.lo;
        res.hi = w.hi;
        res.mercat_conditional = std::move(conditional);
        for (const Candidate& c : cands_) {
            std::optional<BoundSide> side;
            if (c.side == BoundSide::Exact && c.value == w.lo && c.value == w.hi)
                side = BoundSide::Exact;
            else if (c.side == BoundSide::Lower && c.value == w.lo)
                side = BoundSide::Lower;
            else if (c.side == BoundSide::Upper && c.value == w.hi)
                side = BoundSide::Upper;
            if (!side) continue;
            bool seen = false;
            for (const SourceTag& s : res.sources)
                seen = seen || (s.side == *side && s.tag == c.tag);
            if (!seen) res.sources.push_back({*side, c.tag});
        }
        return res;
    }

private:
    std::vector<Candidate> cands_;
};

Rational universal_upper(Int g, Int n) {
    return Rational(g - floor_div(g, n + 1) + n - 2, n);
}

} // namespace

std::vector<Rational> rank5_lower_terms(const GonalitySequence& seq, bool plane_variant) {
    if (seq.r_max() < 5 || !seq.exact_up_to(5))
        throw DomainError("rank5_lower_terms requires exact d_1..d_5");
    Int d1 = seq.at(1).value();
    Int d2 = seq.at(2).value();
    Int d3 = seq.at(3).value();
    Int d4 = seq.at(4).value();
    Int d5 = seq.at(5).value();
    return {
        Rational(d2 - 2, 2),
        Rational(d5 - 2, 5),
        Rational(d1 + 2 * d2 - 6, 5),
        Rational(d1 + d4 - 4, 5),
        plane_variant ? Rational(4 * d1 + 3 * d2 - 12, 10) : Rational(2 * d1 + d3 - 6, 5),
        Rational(3 * d1 + d2 - 8, 5),
        Rational(d2 + d3 - 5, 5),
    };
}

const CliffordResult& CliffordEngine::gamma(Int n) {
    auto it = gamma_memo_.find(n);
    if (it == gamma_memo_.end())
        it = gamma_memo_.emplace(n, compute_gamma(n, /*generic_only=*/false)).first;
    return it->second;
}

const CliffordResult& CliffordEngine::gamma_prime(Int n) {
    auto it = prime_memo_.find(n);
    if (it == prime_memo_.end()) it = prime_memo_.emplace(n, compute_gamma_prime(n)).first;
    return it->second;
}

RationalInterval CliffordEngine::generic_interval(Int n) {
    CliffordResult res = compute_gamma(n, /*generic_only=*/true);
    return RationalInterval{res.lo, res.hi};
}

CliffordResult CliffordEngine::compute_gamma_prime(Int n) {
    if (n < 1) throw DomainError("gamma_prime requires rank >= 1");
    const IntInterval g1 = curve_.gamma1;
    const GonalitySequence& seq = curve_.seq;

    Assembler a;
    if (n == 1) {
        if (g1.exact()) {
            a.exact(Rational(g1.lo), "classical");
        } else {
            a.lower(Rational(g1.lo), "classical");
            a.upper(Rational(g1.hi), "classical");
        }
        return a.finish(n, std::nullopt);
    }

    a.lower(0, "nonnegative");
    a.upper(Rational(g1.hi), "le_gamma1");

    if (g1.exact() && g1.lo <= 1) {
        a.exact(Rational(g1.lo), "gamma1_le1");
    } else if (g1.hi <= 1) {
        a.lower(Rational(g1.lo), "gamma1_le1");
    } else if (g1.lo >= 2) {
        a.lower(2, "ge_two");
    } else if (g1.lo == 1) {
        a.lower(1, "gamma1_le1");
    }

    if (n == 2 && g1.exact()) {
        Rational c(g1.lo);
        if (g1.lo >= 3) a.lower(rat_min(c, Rational(g1.lo, 2) + 2), "rank2_refinement");
        if (seq.r_max() >= 4)
            a.lower(rat_min(c, Rational(seq.at(4).lo - 4, 2)), "rank2_sections4");
    }

    return a.finish(n, std::nullopt);
}

CliffordResult CliffordEngine::compute_gamma(Int n, bool generic_only) {
    if (n < 1) throw DomainError("gamma requires rank >= 1");
    const Int g = curve_.genus;
    const IntInterval g1 = curve_.gamma1;
    const GonalitySequence& seq = curve_.seq;
    const bool plane = curve_.spec.family == Family::SmoothPlane;

    Assembler a;
    if (n == 1) {
        if (g1.exact()) {
            a.exact(Rational(g1.lo), "classical");
        } else {
            a.lower(Rational(g1.lo), "classical");
            a.upper(Rational(g1.hi), "classical");
        }
        return a.finish(n, std::nullopt);
    }

    // Family-agnostic window.
    a.lower(0, "nonnegative");
    a.upper(universal_upper(g, n), "universal_upper");
    a.upper(Rational(g1.hi), "le_gamma1");
    if (g1.hi <= 1) a.lower(Rational(g1.lo), "gamma1_le1");
    if (g1.lo >= 1) a.lower(1, "positivity");
    if (g1.lo >= 2 && n <= g - 4) a.lower(2, "low_rank_floor");

    for (Int p = 2; p < n; ++p) {
        if (n % p != 0) continue;
        a.upper(gamma(p).hi, "divisibility:" + std::to_string(p));
    }
    a.upper(gamma_prime(n).hi, "prime_upper");

    for (Int p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        if (p > seq.r_max() || !seq.exact_up_to(p)) continue;
        if (ratio_hypothesis(seq, p) != std::optional<bool>(true)) continue;
        a.upper(Rational(seq.at(p).value() - 2, p), "divisor_sum:" + std::to_string(p));
    }

    for (const ConstructionEntry& e : achievable_points(curve_, n)) {
        if (e.bundle.h0 < n + 1) continue; // below the contribution threshold
        a.upper(gamma_of(e.bundle), "construct:" + e.source);
    }

    std::optional<Rational> conditional;

    if (!generic_only) {
        if (n <= seq.r_max() && seq.at(n).exact() && seq.at(1).exact() &&
            seq.at(n).value() == checked::mul(n, seq.at(1).value())) {
            const CliffordResult& pr = gamma_prime(n);
            a.lower(pr.lo, "pencil_equality");
            a.upper(pr.hi, "pencil_equality");
        }

        if (g1.exact() && g1.lo <= 1) a.exact(Rational(g1.lo), "gamma1_le1");

        if (g1.lo >= 2) {
            if (n > g)
                a.exact(Rational(1) + Rational(g - 2, n), "near_genus_exact");
            else if (n == g)
                a.exact(Rational(2) - Rational(2, g), "near_genus_exact");
            else if (n == g - 1)
                a.exact(Rational(2) - Rational(2, g - 1), "near_genus_exact");
            else if (n == g - 2)
                a.exact(Rational(2) - Rational(1, g - 2), "near_genus_exact");
            else if (n == g - 3)
                a.exact(Rational(2), "near_genus_exact");
        }
        if (g1.exact() && g1.lo == 2 && n <= g - 3) a.exact(Rational(2), "gamma1_two_table");

        // Rank-specific min expressions. gamma_n' is substituted at interval
        // level; the expression collapses to an exact value only when forced.
        auto min_expression = [&](std::vector<Rational> terms, const std::string& tag) {
            Rational t = terms.front();
            for (const Rational& v : terms) t = rat_min(t, v);
            const CliffordResult& pr = gamma_prime(n);
            a.lower(rat_min(pr.lo, t), tag);
            a.upper(rat_min(pr.hi, t), tag);
            if (g1.exact() && !conditional) conditional = rat_min(Rational(g1.lo), t);
        };

        if (n == 2 && g1.exact() && seq.r_max() >= 2 && seq.at(2).exact())
            a.exact(rat_min(Rational(g1.lo), Rational(seq.at(2).value() - 2, 2)), "rank2_formula");

        if (n == 3) {
            if (plane) {
                min_expression({Rational(floor_div(3 * curve_.spec.delta + 1, 2) - 2, 3)},
                               "rank3_plane");
            } else if (seq.r_max() >= 3 && seq.exact_up_to(3) &&
                       3 * seq.at(2).value() >= 2 * seq.at(3).value()) {
                min_expression({Rational(seq.at(3).value() - 2, 3)}, "rank3_ratio");
            }
        }
        if (n == 4) {
            if (plane) {
                min_expression({Rational(curve_.spec.delta - 2, 2)}, "rank4_plane");
            } else if (seq.r_max() >= 4 && seq.exact_up_to(4) &&
                       4 * seq.at(3).value() >= 3 * seq.at(4).value()) {
                min_expression({Rational(seq.at(4).value() - 2, 4),
                                Rational(seq.at(2).value() - 2, 2)},
                               "rank4_ratio");
            }
        }
        if (n == 5) {
            if (plane) {
                min_expression({Rational(2 * (curve_.spec.delta - 1), 5)}, "rank5_plane");
            } else if (curve_.spec.family == Family::General) {
                min_expression({Rational(g - floor_div(g, 6) + 3, 5)}, "rank5_general");
            }
            bool chain_ok = !plane && seq.r_max() >= 5 &&
                            chain_hypothesis(seq, 5) == std::optional<bool>(true);
            if (chain_ok || (plane && seq.r_max() >= 5 && seq.exact_up_to(5))) {
                std::vector<Rational> terms = rank5_lower_terms(seq, plane);
                Rational t = terms.front();
                for (const Rational& v : terms) t = rat_min(t, v);
                a.lower(rat_min(gamma_prime(n).lo, t), "rank5_chain");
                if (g1.exact() && !conditional) conditional = rat_min(Rational(g1.lo), t);
            }
        }
    }

    return a.finish(n, std::move(conditional));
}

CliffordResult gamma_n(const Curve& curve, Int n) { return CliffordEngine(curve).gamma(n); }

CliffordResult gamma_n_prime(const Curve& curve, Int n) {
    return CliffordEngine(curve).gamma_prime(n);
}

} // namespace cliffordix
