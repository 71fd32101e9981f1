#pragma once

#include "etso/deriv.hpp"
#include "etso/spinor.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace etso {

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class TableFormat { text, csv, json };

TableFormat parse_format(const std::string& name);

// Column names of the coupling tables, in printed order.
const std::vector<std::string>& coupling_columns();
const SqrtLinear& coupling_cell(const CouplingRow& row, int column);

std::string write_spinor_table(const std::vector<SymbolicSpinor>& rows, HalfInt s, TableFormat format);
std::string write_coupling_table(const std::vector<CouplingRow>& rows, HalfInt s, TableFormat format);

// Parsers for the csv and json outputs above.
std::vector<SymbolicSpinor> read_spinor_table(const std::string& text, TableFormat format);
std::vector<CouplingRow> read_coupling_table(const std::string& text, TableFormat format);

bool same_spinor(const SymbolicSpinor& a, const SymbolicSpinor& b);
bool same_coupling(const CouplingRow& a, const CouplingRow& b);

// One transcribed cell of a printed table.
struct PrintedCell {
    std::string table;  // file stem, e.g. spinor_s1_2
    int index = 0;      // n for spinor tables, lambda for coupling tables
    int l = 0;
    HalfInt j;
    HalfInt m;
    std::string column;                  // 1..2(2s+1) or 1A, -1A, ...
    std::optional<OrbitalLabel> orbital; // spinor tables only
    std::string value;
    std::vector<std::string> alternates;
    std::string note;
};

std::vector<PrintedCell> load_printed_table(const std::string& path);

// (table, index, l, j, m, column) -> reason
using Allowlist = std::map<std::string, std::string>;
std::string cell_key(const std::string& table, int index, int l, HalfInt j, HalfInt m, const std::string& column);
Allowlist load_allowlist(const std::string& path);

enum class CellStatus { match, match_alt, mismatch, mismatch_documented, unparseable };
std::string status_name(CellStatus status);

struct ReportLine {
    std::string table;
    std::string labels;
    std::string column;
    std::string computed;
    std::string printed;
    double delta = 0;
    CellStatus status = CellStatus::match;
    std::string reason;

    std::string str() const;
};

struct TableDiff {
    std::string table;
    std::vector<ReportLine> lines;
    int cells = 0;
    int parseable = 0;
    int matched = 0;          // match + match-alt
    int documented = 0;       // mismatches listed in the allowlist
    int undocumented = 0;     // mismatches missing from the allowlist
    int unparseable = 0;

    double match_rate() const { return parseable ? static_cast<double>(matched) / parseable : 0.0; }
};

// Diff a printed table (spinor_s1_2, spinor_s3_2, coupling_s1_2, coupling_s3_2) against computed values.
// The allowlist may be null; then every mismatch is undocumented.
TableDiff diff_printed_table(const std::string& table, const std::vector<PrintedCell>& cells,
                             const Allowlist* allowlist);

// Names of the four printed tables and the directory holding them by default.
const std::vector<std::string>& printed_table_names();
std::string default_data_dir();

}  // namespace etso
