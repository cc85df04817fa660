#include "cliffordix/constructions.hpp"

namespace cliffordix {

namespace {

// d_q/q >= d_p/p for all q < p: the semistability criterion for the rank-p
// dual-span bundle of a line bundle computing d_p.
bool dual_span_ok(const GonalitySequence& seq, Int p) {
    return ratio_hypothesis(seq, p) == std::optional<bool>(true);
}

} // namespace

std::vector<ConstructionEntry> achievable_points(const Curve& curve, Int n) {
    if (n < 1) throw DomainError("achievable_points requires rank >= 1");
    const Int g = curve.genus;
    const GonalitySequence& seq = curve.seq;

    std::vector<ConstructionEntry> out;
    auto add = [&](Int d, Int h0, std::string source, std::string hypothesis) {
        if (d > checked::mul(n, g - 1)) return; // slope above g - 1 never contributes
        out.push_back({BundleClass{n, d, h0}, std::move(source), std::move(hypothesis)});
    };

    add(g - floor_div(g, n + 1) + n, n + 1, "C_BN", "none");

    const bool have_n = n <= seq.r_max() && seq.exact_up_to(n);

    if (have_n && dual_span_ok(seq, n))
        add(seq.at(n).value(), n + 1, "C_DUALSPAN", "d_p/p >= d_n/n for p < n");

    if (have_n) {
        for (Int p = 1; p < n; ++p) {
            if (n % p != 0) continue;
            if (!dual_span_ok(seq, p)) continue;
            Int copies = n / p;
            add(checked::mul(copies, seq.at(p).value()), checked::mul(copies, p + 1), "C_SUM",
                "p | n and d_q/q >= d_p/p for q < p");
        }
        Int d1 = seq.at(1).value();
        if (seq.at(n).value() == checked::mul(n, d1))
            add(checked::mul(n, d1), 2 * n, "C_PENCIL", "d_n = n d_1");
    }

    if (curve.spec.family == Family::Bielliptic) {
        for (Int d = 2; d <= checked::mul(n, g - 1); ++d)
            add(d, floor_div(d, 2), "C_BIELL", "bielliptic family");
    }

    if (n > g) add(n + g, n + 1, "C_HIGH", "n > g");
    if (n >= g - 1) add(2 * n, n + floor_div(n, g - 1), "C_HIGH", "n >= g - 1");
    if (n == g - 2 && curve.gamma1.lo >= 2)
        add(2 * g - 3, g - 1, "C_HIGH", "n = g - 2 and gamma_1 >= 2");

    if (n == 5 && seq.r_max() >= 3 && seq.exact_up_to(3)) {
        Int d1 = seq.at(1).value();
        Int d2 = seq.at(2).value();
        Int d3 = seq.at(3).value();
        if (d2 % 2 == 0 && 2 * d1 >= d2)
            add(5 * d2 / 2, 7, "C_RK5A", "d_2 even and d_1 >= d_2/2");
        if (3 * d2 == 2 * d3 && 2 * d1 >= d2)
            add(d2 + d3, 7, "C_RK5B", "d_2/2 = d_3/3 and d_1 >= d_2/2");
    }

    return out;
}

} // namespace cliffordix
