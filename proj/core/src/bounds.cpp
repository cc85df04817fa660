#include "cliffordix/bounds.hpp"

#include <algorithm>

namespace cliffordix {

Rational gamma_of(const BundleClass& b) {
    if (b.n < 1) throw DomainError("gamma_of requires rank >= 1");
    return Rational(checked::sub(b.d, 2 * checked::sub(b.h0, b.n)), b.n);
}

BundleClass serre_dual(const BundleClass& b, Int genus) {
    if (b.n < 1) throw DomainError("serre_dual requires rank >= 1");
    // h^0 of the dual equals h^1(E) = h^0(E) - d - n(1 - g).
    Int dual_h0 = checked::sub(checked::sub(b.h0, b.d), checked::mul(b.n, 1 - genus));
    if (dual_h0 < 0)
        throw DomainError("serre_dual: input has h^0 below its Euler characteristic");
    return BundleClass{b.n, checked::sub(checked::mul(b.n, 2 * genus - 2), b.d), dual_h0};
}

namespace {

struct RuleSet {
    Int best = -1;
    std::vector<std::string> sources;
    std::vector<std::string> skipped;

    void offer(const char* id, Int bound) {
        bound = std::max<Int>(bound, 0);
        if (best < 0 || bound < best) {
            best = bound;
            sources.assign(1, id);
        } else if (bound == best) {
            sources.emplace_back(id);
        }
    }

    void skip(const char* id) { skipped.emplace_back(id); }
};

} // namespace

H0Bound h0_upper(const Curve& curve, Int n, Int d) {
    if (n < 1) throw DomainError("h0_upper requires rank >= 1");
    const Int g = curve.genus;
    const GonalitySequence& seq = curve.seq;
    const IntInterval g1 = curve.gamma1;

    RuleSet rules;

    if (d < 0) {
        rules.offer("R_NEG", 0);
        return H0Bound{rules.best, std::move(rules.sources), std::move(rules.skipped)};
    }
    if (d == 0) rules.offer("R_NEG", n);

    // mu <= 2g - 2 holds on every call site (the contributing region stops at
    // mu <= g - 1), which keeps this the unconditional fallback.
    rules.offer("R_CLIFF", floor_div(d, 2) + n);

    if (0 < d && d < n) rules.offer("R_SMALL", n - 1);

    if (g1.lo >= 1 && d >= n) rules.offer("R_RE", floor_div(d + n, 2));

    if (g1.lo >= 2) {
        if (n < d && d < 2 * n) rules.offer("R_M1", n + floor_div(d - n, g));
        if (d == 2 * n) rules.offer("R_M2", n + floor_div(n, g - 1));
        Int region = checked::mul(g - 4, checked::sub(d, 2 * n));
        if (2 * n < d && region < 2 * n) rules.offer("R_M3", n + floor_div(d - n, g - 2));
        if (region >= 2 * n) rules.offer("R_M4", floor_div(d, 2));
    }

    if (n == 2) {
        if (g1.exact() && g1.lo >= 3) {
            Int c = g1.lo;
            if (3 * c - 1 <= d && d <= 2 * g - 2)
                rules.offer("R_RK2_HI", floor_div(d - 2 * c, 2) + 2);
            if (d <= 3 * c - 2) rules.offer("R_RK2_LO", floor_div(d - c, 4) + 2);
        } else if (g1.lo >= 3) {
            rules.skip("R_RK2_HI");
            rules.skip("R_RK2_LO");
        }
    }

    if (n <= seq.r_max() && seq.exact_up_to(n)) {
        Int dn = seq.at(n).value();
        Int d1 = seq.at(1).value();

        if (d < dn && ratio_hypothesis(seq, n) == std::optional<bool>(true))
            rules.offer("R_LT_DN", n);

        bool below_all = true;
        for (Int p = 1; p <= n && below_all; ++p)
            below_all = checked::mul(d, p) < checked::mul(n, seq.at(p).value());
        if (below_all) rules.offer("R_PROP413", n);

        if (d == dn && chain_hypothesis(seq, n) == std::optional<bool>(true))
            rules.offer("R_AT_DN", dn == checked::mul(n, d1) ? 2 * n : n + 1);
    } else {
        rules.skip("R_LT_DN");
        rules.skip("R_PROP413");
        rules.skip("R_AT_DN");
    }

    return H0Bound{rules.best, std::move(rules.sources), std::move(rules.skipped)};
}

} // namespace cliffordix
