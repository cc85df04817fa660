#pragma once

#include "cliffordix/mercat.hpp"
#include "cliffordix/oracle.hpp"

namespace cliffordix {

enum class OutputFormat { Table, Json, Csv };

std::optional<OutputFormat> format_from_name(std::string_view name);

struct RankRange {
    Int lo = 1;
    Int hi = 1;
};

// One row of the main report: the sequence entry d_n and both indices.
struct ComputeRow {
    Int n = 1;
    GonalityEntry d_n;
    CliffordResult gamma;
    CliffordResult gamma_prime;
};

struct ComputeReport {
    CurveSpec spec;
    Int genus = 0;
    IntInterval gamma1;
    std::vector<GonalityEntry> gonality; // entries 1..gonality.size()
    std::vector<ComputeRow> rows;
};

ComputeReport compute_report(const Curve& curve, RankRange ranks);

std::string render_json(const ComputeReport& report);
std::string render_csv(const ComputeReport& report);
std::string render_table(const ComputeReport& report);

// Batch sweep: one document per curve, emitted as a top-level array in
// input order (callers sort by genus, then rank order is fixed per row).
std::string render_json(const std::vector<ComputeReport>& reports);

struct OracleReport {
    CurveSpec spec;
    Int genus = 0;
    std::vector<OracleComparison> comparisons;
};

OracleReport oracle_report(const Curve& curve, RankRange ranks);
std::string render_json(const OracleReport& report);
std::string render_table(const OracleReport& report);

std::string render_json(const MercatVerdict& verdict, const BundleClass& b);
std::string render_json(const std::vector<CorDLeDnReport>& reports);
std::string render_table(const std::vector<CorDLeDnReport>& reports);

// The per-curve validation suite: sequence axioms, agreement between the
// family gamma_1 and the sequence-derived value, construction points vs.
// the bound catalog, oracle soundness, and interval consistency of every
// computed index.
struct ValidationCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    CurveSpec spec;
    Int genus = 0;
    std::vector<ValidationCheck> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

ValidationReport run_validation(const Curve& curve);
std::string render_json(const ValidationReport& report);
std::string render_table(const ValidationReport& report);

} // namespace cliffordix
