// Command-line front end: curve parsing, subcommand dispatch, output files.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cliffordix/report.hpp"

namespace {

using namespace cliffordix;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitInput = 2;

struct IntRange {
    Int lo = 0;
    Int hi = 0;
};

IntRange parse_range(const std::string& text, const char* what) {
    auto read = [&](const std::string& part) -> Int {
        try {
            std::size_t pos = 0;
            Int v = std::stoll(part, &pos);
            if (pos != part.size()) throw std::invalid_argument(part);
            return v;
        } catch (const std::exception&) {
            throw DomainError(std::string(what) + ": expected an integer, got '" + part + "'");
        }
    };
    auto dots = text.find("..");
    IntRange r;
    if (dots == std::string::npos) {
        r.lo = r.hi = read(text);
    } else {
        r.lo = read(text.substr(0, dots));
        r.hi = read(text.substr(dots + 2));
    }
    if (r.hi < r.lo) throw DomainError(std::string(what) + ": empty range '" + text + "'");
    return r;
}

struct CliOptions {
    std::string curve;
    std::string genus;
    std::string delta;
    Int k = 0;
    Int nu = 0;
    std::optional<Int> gamma1;
    std::vector<std::string> asserts;
    std::string ranks = "1..8";
    Int rmax = 0;
    std::string format = "table";
    std::string output;
    // pointwise mercat check
    std::optional<Int> rank;
    std::optional<Int> degree;
    std::optional<Int> h0;
};

std::vector<CurveSpec> parse_curves(const CliOptions& opt) {
    auto family = family_from_name(opt.curve);
    if (!family) throw DomainError("unknown curve family '" + opt.curve + "'");

    std::vector<CurveSpec> specs;
    if (*family == Family::SmoothPlane || *family == Family::GeneralNodalPlane) {
        if (opt.delta.empty()) throw DomainError("--delta is required for plane curves");
        IntRange deltas = parse_range(opt.delta, "--delta");
        for (Int d = deltas.lo; d <= deltas.hi; ++d)
            specs.push_back(*family == Family::SmoothPlane ? CurveSpec::smooth_plane(d)
                                                           : CurveSpec::nodal_plane(d, opt.nu));
        return specs;
    }

    if (opt.genus.empty()) throw DomainError("--genus is required for this curve family");
    IntRange genera = parse_range(opt.genus, "--genus");
    for (Int g = genera.lo; g <= genera.hi; ++g) {
        switch (*family) {
        case Family::General: specs.push_back(CurveSpec::general(g)); break;
        case Family::Hyperelliptic: specs.push_back(CurveSpec::hyperelliptic(g)); break;
        case Family::Trigonal: specs.push_back(CurveSpec::trigonal(g)); break;
        case Family::Bielliptic: specs.push_back(CurveSpec::bielliptic(g)); break;
        case Family::GeneralKGonal:
            if (opt.k < 4) throw DomainError("--k (>= 4) is required for kgonal curves");
            specs.push_back(CurveSpec::k_gonal(g, opt.k));
            break;
        case Family::Custom: {
            std::vector<CurveAssertion> assertions;
            for (const std::string& text : opt.asserts) {
                // each assertion reads dN=V
                auto eq = text.find('=');
                if (text.size() < 4 || text[0] != 'd' || eq == std::string::npos)
                    throw DomainError("--assert expects dN=V, got '" + text + "'");
                IntRange r = parse_range(text.substr(1, eq - 1), "--assert index");
                IntRange v = parse_range(text.substr(eq + 1), "--assert value");
                assertions.push_back({r.lo, v.lo});
            }
            specs.push_back(CurveSpec::custom(g, opt.gamma1, std::move(assertions)));
            break;
        }
        default: throw DomainError("unsupported family");
        }
    }
    return specs;
}

Int effective_rmax(const CliOptions& opt, const CurveSpec& spec, Int min_needed) {
    Int rmax = opt.rmax;
    if (rmax <= 0) {
        if (const char* env = std::getenv("CLIFFORDIX_RMAX")) rmax = std::atoll(env);
    }
    if (rmax <= 0) rmax = 3 * genus_of(spec);
    return std::max(rmax, min_needed);
}

void emit(const CliOptions& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output);
    if (!out) throw DomainError("cannot open output file '" + opt.output + "'");
    out << text;
}

OutputFormat parse_format(const CliOptions& opt) {
    auto f = format_from_name(opt.format);
    if (!f) throw DomainError("unknown format '" + opt.format + "'");
    return *f;
}

int run_compute(const CliOptions& opt) {
    OutputFormat format = parse_format(opt);
    IntRange ranks = parse_range(opt.ranks, "--ranks");
    if (ranks.lo < 1) throw DomainError("--ranks must start at 1 or above");

    std::vector<ComputeReport> reports;
    for (const CurveSpec& spec : parse_curves(opt)) {
        Curve curve = build_curve(spec, effective_rmax(opt, spec, ranks.hi));
        reports.push_back(compute_report(curve, RankRange{ranks.lo, ranks.hi}));
    }

    if (format == OutputFormat::Json) {
        emit(opt, reports.size() == 1 ? render_json(reports.front()) : render_json(reports));
        return kExitOk;
    }
    std::string text;
    for (const ComputeReport& r : reports) {
        if (!text.empty()) text += "\n";
        text += format == OutputFormat::Csv ? render_csv(r) : render_table(r);
    }
    emit(opt, text);
    return kExitOk;
}

int run_gonality(const CliOptions& opt) {
    OutputFormat format = parse_format(opt);
    std::string text;
    for (const CurveSpec& spec : parse_curves(opt)) {
        Curve curve = build_curve(spec, effective_rmax(opt, spec, 1));
        if (format == OutputFormat::Json) {
            ComputeReport report;
            report.spec = curve.spec;
            report.genus = curve.genus;
            report.gamma1 = curve.gamma1;
            for (Int r = 1; r <= curve.seq.r_max(); ++r)
                report.gonality.push_back(curve.seq.at(r));
            text += render_json(report);
        } else {
            text += "curve: " + curve.spec.describe() + "   genus " +
                    std::to_string(curve.genus) + "   gamma1 " + curve.gamma1.str() + "\n";
            for (Int r = 1; r <= curve.seq.r_max(); ++r) {
                const GonalityEntry& e = curve.seq.at(r);
                text += "d_" + std::to_string(r) + " = " +
                        (e.exact() ? std::to_string(e.value())
                                   : "[" + std::to_string(e.lo) + "," + std::to_string(e.hi) + "]") +
                        "\n";
            }
        }
    }
    emit(opt, text);
    return kExitOk;
}

int run_validate(const CliOptions& opt) {
    OutputFormat format = parse_format(opt);
    bool all_pass = true;
    std::string text;
    for (const CurveSpec& spec : parse_curves(opt)) {
        Curve curve = build_curve(spec, effective_rmax(opt, spec, 1));
        ValidationReport report = run_validation(curve);
        all_pass = all_pass && report.passed();
        text += format == OutputFormat::Json ? render_json(report) : render_table(report);
    }
    emit(opt, text);
    return all_pass ? kExitOk : kExitValidation;
}

int run_oracle(const CliOptions& opt) {
    OutputFormat format = parse_format(opt);
    IntRange ranks = parse_range(opt.ranks, "--ranks");
    std::string text;
    for (const CurveSpec& spec : parse_curves(opt)) {
        Curve curve = build_curve(spec, effective_rmax(opt, spec, ranks.hi));
        OracleReport report = oracle_report(curve, RankRange{ranks.lo, ranks.hi});
        text += format == OutputFormat::Json ? render_json(report) : render_table(report);
    }
    emit(opt, text);
    return kExitOk;
}

int run_mercat(const CliOptions& opt) {
    OutputFormat format = parse_format(opt);
    std::vector<CurveSpec> specs = parse_curves(opt);

    if (opt.rank || opt.degree || opt.h0) {
        if (!(opt.rank && opt.degree && opt.h0))
            throw DomainError("pointwise check needs --rank, --degree and --h0 together");
        if (specs.size() != 1)
            throw DomainError("pointwise check expects a single curve");
        Curve curve = build_curve(specs.front(), effective_rmax(opt, specs.front(), *opt.rank));
        if (!curve.gamma1.exact())
            throw DomainError("pointwise check requires an exactly known gamma_1");
        BundleClass b{*opt.rank, *opt.degree, *opt.h0};
        MercatVerdict v = mercat_check(curve.genus, curve.gamma1.lo, b);
        if (format == OutputFormat::Json) {
            emit(opt, render_json(v, b));
        } else {
            std::string text = std::string("regime ") + regime_name(v.regime) + ", bound " +
                               (v.bound ? std::to_string(*v.bound) : "-") + ", status " +
                               status_name(v.status) + "\n";
            emit(opt, text);
        }
        return kExitOk;
    }

    IntRange ranks = parse_range(opt.ranks, "--ranks");
    std::string text;
    bool clean = true;
    for (const CurveSpec& spec : specs) {
        Curve curve = build_curve(spec, effective_rmax(opt, spec, ranks.hi));
        std::vector<CorDLeDnReport> reports;
        for (Int n = ranks.lo; n <= ranks.hi; ++n) {
            reports.push_back(verify_cor_d_le_dn(curve, n));
            clean = clean && reports.back().counterexamples.empty();
        }
        text += format == OutputFormat::Json ? render_json(reports) : render_table(reports);
    }
    emit(opt, text);
    return clean ? kExitOk : kExitValidation;
}

void add_curve_options(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--curve", opt.curve, "curve family")->required();
    cmd->add_option("--genus", opt.genus, "genus, or a sweep a..b");
    cmd->add_option("--delta", opt.delta, "plane model degree, or a sweep a..b");
    cmd->add_option("--k", opt.k, "gonality for kgonal curves");
    cmd->add_option("--nu", opt.nu, "node count for nodal plane curves");
    cmd->add_option("--gamma1", opt.gamma1, "asserted gamma_1 for custom curves");
    cmd->add_option("--assert", opt.asserts, "asserted entry dN=V for custom curves");
    cmd->add_option("--rmax", opt.rmax, "sequence length (default 3g, env CLIFFORDIX_RMAX)");
    cmd->add_option("--format", opt.format, "table, json or csv");
    cmd->add_option("--output", opt.output, "write to file instead of stdout");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for gonality sequences and Clifford indices of curves"};
    app.require_subcommand(1);

    CliOptions opt;
    CLI::App* compute = app.add_subcommand("compute", "gonality and Clifford indices per rank");
    add_curve_options(compute, opt);
    compute->add_option("--ranks", opt.ranks, "rank range n_lo..n_hi");

    CLI::App* gonality = app.add_subcommand("gonality", "the full gonality sequence");
    add_curve_options(gonality, opt);

    CLI::App* validate = app.add_subcommand("validate", "run every applicable consistency suite");
    add_curve_options(validate, opt);

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force cross-check of the indices");
    add_curve_options(oracle, opt);
    oracle->add_option("--ranks", opt.ranks, "rank range n_lo..n_hi");

    CLI::App* mercat = app.add_subcommand("mercat", "conjectured section bounds");
    add_curve_options(mercat, opt);
    mercat->add_option("--ranks", opt.ranks, "rank range for the d <= d_n verification");
    mercat->add_option("--rank", opt.rank, "rank of a single bundle class");
    mercat->add_option("--degree", opt.degree, "degree of a single bundle class");
    mercat->add_option("--h0", opt.h0, "section count of a single bundle class");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }

    try {
        if (compute->parsed()) return run_compute(opt);
        if (gonality->parsed()) return run_gonality(opt);
        if (validate->parsed()) return run_validate(opt);
        if (oracle->parsed()) return run_oracle(opt);
        if (mercat->parsed()) return run_mercat(opt);
        return kExitInput;
    } catch (const DomainError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
