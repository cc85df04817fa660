#include "cliffordix/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace cliffordix {

using nlohmann::json;

namespace {

json spec_json(const CurveSpec& spec) {
    json params;
    switch (spec.family) {
    case Family::SmoothPlane: params["delta"] = spec.delta; break;
    case Family::GeneralNodalPlane:
        params["delta"] = spec.delta;
        params["nu"] = spec.nu;
        break;
    case Family::GeneralKGonal:
        params["genus"] = spec.g;
        params["k"] = spec.k;
        break;
    case Family::Custom: {
        params["genus"] = spec.g;
        if (spec.stated_gamma1) params["gamma1"] = *spec.stated_gamma1;
        json asserts = json::array();
        for (const auto& a : spec.assertions) asserts.push_back({{"r", a.r}, {"d", a.d}});
        if (!asserts.empty()) params["assertions"] = asserts;
        break;
    }
    default: params["genus"] = spec.g; break;
    }
    return json{{"family", family_name(spec.family)}, {"params", params}};
}

json entry_json(Int r, const GonalityEntry& e) {
    return json{{"r", r}, {"lo", e.lo}, {"hi", e.hi}};
}

json clifford_json(const CliffordResult& res) {
    json sources = json::array();
    for (const SourceTag& s : res.sources)
        sources.push_back({{"side", side_name(s.side)}, {"tag", s.tag}});
    json j{{"n", res.n},
           {"kind", res.exact() ? "exact" : "interval"},
           {"lo", res.lo.str()},
           {"hi", res.hi.str()},
           {"sources", sources}};
    j["mercat_conditional"] =
        res.mercat_conditional ? json(res.mercat_conditional->str()) : json(nullptr);
    return j;
}

json report_json(const ComputeReport& report) {
    json gonality = json::array();
    for (std::size_t i = 0; i < report.gonality.size(); ++i)
        gonality.push_back(entry_json(static_cast<Int>(i + 1), report.gonality[i]));
    json rows = json::array();
    for (const ComputeRow& row : report.rows) {
        json r{{"n", row.n},
               {"d_n", {{"lo", row.d_n.lo}, {"hi", row.d_n.hi}}},
               {"gamma_n", clifford_json(row.gamma)},
               {"gamma_n_prime", clifford_json(row.gamma_prime)}};
        r["mercat_conditional"] = row.gamma.mercat_conditional
                                      ? json(row.gamma.mercat_conditional->str())
                                      : json(nullptr);
        rows.push_back(r);
    }
    return json{{"curve", spec_json(report.spec)},
                {"genus", report.genus},
                {"gamma1", {{"lo", report.gamma1.lo}, {"hi", report.gamma1.hi}}},
                {"gonality", gonality},
                {"results", rows}};
}

std::string entry_str(const GonalityEntry& e) {
    if (e.exact()) return std::to_string(e.value());
    return "[" + std::to_string(e.lo) + "," + std::to_string(e.hi) + "]";
}

std::string sources_str(const CliffordResult& res) {
    std::string out;
    for (const SourceTag& s : res.sources) {
        if (!out.empty()) out += ";";
        out += std::string(side_name(s.side)) + ":" + s.tag;
    }
    return out;
}

void pad(std::ostringstream& os, const std::string& s, std::size_t width) {
    os << s;
    for (std::size_t i = s.size(); i < width; ++i) os << ' ';
    os << "  ";
}

} // namespace

std::optional<OutputFormat> format_from_name(std::string_view name) {
    if (name == "table") return OutputFormat::Table;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    return std::nullopt;
}

ComputeReport compute_report(const Curve& curve, RankRange ranks) {
    if (ranks.lo < 1 || ranks.hi < ranks.lo) throw DomainError("rank range must be non-empty");
    if (ranks.hi > curve.seq.r_max())
        throw DomainError("rank range exceeds the computed sequence; raise r_max");

    ComputeReport report;
    report.spec = curve.spec;
    report.genus = curve.genus;
    report.gamma1 = curve.gamma1;
    Int show = std::min(curve.seq.r_max(), std::max(ranks.hi, curve.genus + 1));
    for (Int r = 1; r <= show; ++r) report.gonality.push_back(curve.seq.at(r));

    CliffordEngine engine(curve);
    for (Int n = ranks.lo; n <= ranks.hi; ++n)
        report.rows.push_back({n, curve.seq.at(n), engine.gamma(n), engine.gamma_prime(n)});
    return report;
}

std::string render_json(const ComputeReport& report) { return report_json(report).dump(2) + "\n"; }

std::string render_json(const std::vector<ComputeReport>& reports) {
    json arr = json::array();
    for (const ComputeReport& r : reports) arr.push_back(report_json(r));
    return arr.dump(2) + "\n";
}

std::string render_csv(const ComputeReport& report) {
    std::ostringstream os;
    os << "n,d_n_lo,d_n_hi,gamma_n_kind,gamma_n_lo,gamma_n_hi,"
          "gamma_prime_kind,gamma_prime_lo,gamma_prime_hi,mercat_conditional,sources\n";
    for (const ComputeRow& row : report.rows) {
        os << row.n << ',' << row.d_n.lo << ',' << row.d_n.hi << ','
           << (row.gamma.exact() ? "exact" : "interval") << ',' << row.gamma.lo.str() << ','
           << row.gamma.hi.str() << ',' << (row.gamma_prime.exact() ? "exact" : "interval") << ','
           << row.gamma_prime.lo.str() << ',' << row.gamma_prime.hi.str() << ','
           << (row.gamma.mercat_conditional ? row.gamma.mercat_conditional->str() : "") << ','
           << '"' << sources_str(row.gamma) << '"' << '\n';
    }
    return os.str();
}

std::string render_table(const ComputeReport& report) {
    std::ostringstream os;
    os << "curve: " << report.spec.describe() << "   genus " << report.genus << "   gamma1 "
       << report.gamma1.str() << "\n";
    std::ostringstream header;
    pad(header, "n", 4);
    pad(header, "d_n", 8);
    pad(header, "gamma_n", 16);
    pad(header, "gamma_n'", 16);
    pad(header, "conditional", 12);
    header << "sources";
    os << header.str() << "\n";
    for (const ComputeRow& row : report.rows) {
        std::ostringstream line;
        pad(line, std::to_string(row.n), 4);
        pad(line, entry_str(row.d_n), 8);
        pad(line, row.gamma.str(), 16);
        pad(line, row.gamma_prime.str(), 16);
        pad(line, row.gamma.mercat_conditional ? row.gamma.mercat_conditional->str() : "-", 12);
        line << sources_str(row.gamma);
        os << line.str() << "\n";
    }
    return os.str();
}

OracleReport oracle_report(const Curve& curve, RankRange ranks) {
    if (ranks.lo < 1 || ranks.hi < ranks.lo) throw DomainError("rank range must be non-empty");
    OracleReport report;
    report.spec = curve.spec;
    report.genus = curve.genus;
    for (Int n = ranks.lo; n <= ranks.hi; ++n)
        report.comparisons.push_back(oracle_cross_check(curve, n));
    return report;
}

std::string render_json(const OracleReport& report) {
    json rows = json::array();
    for (const OracleComparison& c : report.comparisons) {
        json j{{"n", c.n},
               {"clifford", clifford_json(c.clifford)},
               {"relation", relation_name(c.relation)}};
        if (c.oracle) {
            j["oracle"] = json{{"gamma", c.oracle->gamma.str()},
                               {"attained_d", c.oracle->attained_d},
                               {"attained_h0", c.oracle->attained_h0},
                               {"weakened", c.oracle->weakened},
                               {"skipped_rules", c.oracle->skipped_rules}};
        } else {
            j["oracle"] = "infeasible";
        }
        rows.push_back(j);
    }
    return json{{"curve", spec_json(report.spec)},
                {"genus", report.genus},
                {"comparisons", rows}}
               .dump(2) +
           "\n";
}

std::string render_table(const OracleReport& report) {
    std::ostringstream os;
    os << "curve: " << report.spec.describe() << "   genus " << report.genus << "\n";
    std::ostringstream header;
    pad(header, "n", 4);
    pad(header, "oracle", 10);
    pad(header, "at (d,h0)", 12);
    pad(header, "gamma_n", 16);
    header << "relation";
    os << header.str() << "\n";
    for (const OracleComparison& c : report.comparisons) {
        std::ostringstream line;
        pad(line, std::to_string(c.n), 4);
        pad(line, c.oracle ? c.oracle->gamma.str() : "none", 10);
        pad(line,
            c.oracle ? "(" + std::to_string(c.oracle->attained_d) + "," +
                           std::to_string(c.oracle->attained_h0) + ")"
                     : "-",
            12);
        pad(line, c.clifford.str(), 16);
        line << relation_name(c.relation);
        os << line.str() << "\n";
    }
    return os.str();
}

std::string render_json(const MercatVerdict& verdict, const BundleClass& b) {
    json j{{"bundle", {{"n", b.n}, {"d", b.d}, {"h0", b.h0}}},
           {"regime", regime_name(verdict.regime)},
           {"status", status_name(verdict.status)}};
    j["bound"] = verdict.bound ? json(*verdict.bound) : json(nullptr);
    return j.dump(2) + "\n";
}

std::string render_json(const std::vector<CorDLeDnReport>& reports) {
    json arr = json::array();
    for (const CorDLeDnReport& r : reports) {
        json counter = json::array();
        for (const BundleClass& b : r.counterexamples)
            counter.push_back({{"n", b.n}, {"d", b.d}, {"h0", b.h0}});
        arr.push_back(json{{"n", r.n},
                           {"applicable", r.applicable},
                           {"d_n", r.d_n},
                           {"points_checked", r.points_checked},
                           {"counterexamples", counter}});
    }
    return arr.dump(2) + "\n";
}

std::string render_table(const std::vector<CorDLeDnReport>& reports) {
    std::ostringstream os;
    std::ostringstream header;
    pad(header, "n", 4);
    pad(header, "applicable", 11);
    pad(header, "d_n", 6);
    pad(header, "checked", 8);
    header << "counterexamples";
    os << header.str() << "\n";
    for (const CorDLeDnReport& r : reports) {
        std::ostringstream line;
        pad(line, std::to_string(r.n), 4);
        pad(line, r.applicable ? "yes" : "no", 11);
        pad(line, r.applicable ? std::to_string(r.d_n) : "-", 6);
        pad(line, std::to_string(r.points_checked), 8);
        line << r.counterexamples.size();
        os << line.str() << "\n";
    }
    return os.str();
}

ValidationReport run_validation(const Curve& curve) {
    ValidationReport report;
    report.spec = curve.spec;
    report.genus = curve.genus;
    auto record = [&](std::string name, bool pass, std::string detail) {
        report.checks.push_back({std::move(name), pass, std::move(detail)});
    };

    std::vector<std::string> axiom_failures = sequence_violations(curve.seq);
    if (axiom_failures.empty()) {
        record("sequence axioms", true, "");
    } else {
        std::string detail;
        for (const std::string& f : axiom_failures) {
            if (!detail.empty()) detail += "; ";
            detail += f;
        }
        record("sequence axioms", false, detail);
    }

    IntInterval derived = gamma1_from_sequence(curve.seq);
    bool g1_ok = derived.lo <= curve.gamma1.lo && curve.gamma1.hi <= derived.hi;
    record("gamma1 agreement", g1_ok,
           g1_ok ? "" : "known " + curve.gamma1.str() + " vs derived " + derived.str());

    Int n_cap = std::min<Int>(8, curve.seq.r_max());
    bool constructions_ok = true;
    std::string construction_detail;
    for (Int n = 1; n <= n_cap && constructions_ok; ++n) {
        for (const ConstructionEntry& e : achievable_points(curve, n)) {
            if (e.bundle.h0 <= h0_upper(curve, e.bundle.n, e.bundle.d).bound) continue;
            constructions_ok = false;
            construction_detail = e.source + " point (" + std::to_string(e.bundle.n) + "," +
                                  std::to_string(e.bundle.d) + "," + std::to_string(e.bundle.h0) +
                                  ") exceeds the section bound";
            break;
        }
    }
    record("constructions respect bounds", constructions_ok, construction_detail);

    bool oracle_ok = true;
    bool clifford_ok = true;
    std::string oracle_detail;
    std::string clifford_detail;
    try {
        CliffordEngine engine(curve);
        for (Int n = 1; n <= n_cap; ++n) {
            const CliffordResult& res = engine.gamma(n);
            if (res.lo > res.hi) {
                clifford_ok = false;
                clifford_detail = "empty interval at n=" + std::to_string(n);
            }
            auto oracle = oracle_min_gamma(curve, n, n + 1);
            if (oracle && oracle->gamma > res.hi) {
                oracle_ok = false;
                oracle_detail = "oracle exceeds gamma_" + std::to_string(n);
            }
        }
    } catch (const Error& e) {
        clifford_ok = false;
        clifford_detail = e.what();
    }
    record("oracle soundness", oracle_ok, oracle_detail);
    record("clifford consistency", clifford_ok, clifford_detail);
    return report;
}

std::string render_json(const ValidationReport& report) {
    json checks = json::array();
    for (const ValidationCheck& c : report.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return json{{"curve", spec_json(report.spec)},
                {"genus", report.genus},
                {"pass", report.passed()},
                {"checks", checks}}
               .dump(2) +
           "\n";
}

std::string render_table(const ValidationReport& report) {
    std::ostringstream os;
    os << "curve: " << report.spec.describe() << "   genus " << report.genus << "\n";
    for (const ValidationCheck& c : report.checks) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) os << " - " << c.detail;
        os << "\n";
    }
    os << (report.passed() ? "result: pass" : "result: fail") << "\n";
    return os.str();
}

} // namespace cliffordix
