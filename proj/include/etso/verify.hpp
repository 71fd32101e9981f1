#pragma once

#include "etso/quad.hpp"
#include "etso/table_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace etso {

struct CheckResult {
    std::string name;
    bool pass = true;
    double worst = 0;     // largest deviation seen (0 for exact checks that pass)
    double tolerance = 0; // 0 means exact
    std::string detail;
    bool informational = false;  // reported but never fails the suite

    std::string str() const;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    std::vector<std::string> details;  // per-cell lines for the tables suite
    std::vector<TableDiff> tables;     // tables suite only

    bool pass() const;
};

struct VerifyOptions {
    std::optional<HalfInt> s;   // restricts spin-dependent suites
    std::optional<int> alpha;   // restricts the biorthonormality suite
    double zeta = 1.0;
    std::optional<GridSpec> grid;  // each suite has its own default
    std::string data_dir;          // printed tables; empty means the built-in data directory
    std::optional<std::string> allowlist;
    int points = 50;
    unsigned seed = 20240611;
    Exec exec = Exec::parallel;
};

const std::vector<std::string>& suite_names();

SuiteReport verify_tables(const VerifyOptions& opts);
SuiteReport verify_orthonormality(const VerifyOptions& opts);
SuiteReport verify_gradients(const VerifyOptions& opts);
SuiteReport verify_sigma_p(const VerifyOptions& opts);
SuiteReport verify_overlap(const VerifyOptions& opts);
SuiteReport verify_scalar(const VerifyOptions& opts);
SuiteReport verify_rownorm(const VerifyOptions& opts);

// "all" runs every suite in order.
std::vector<SuiteReport> run_suites(const std::string& name, const VerifyOptions& opts);

// Central-difference gradient of a complex scalar field; used as the independent oracle.
struct CartesianField {
    virtual ~CartesianField() = default;
    virtual std::complex<double> operator()(double x, double y, double z) const = 0;
};
std::array<std::complex<double>, 3> fd_gradient(const CartesianField& f, double x, double y, double z,
                                                double h = 1e-5);

// |fd - expected| <= rel * max(|expected|, floor)
inline bool close_rel(std::complex<double> fd, std::complex<double> expected, double rel, double floor = 1e-3) {
    return std::abs(fd - expected) <= rel * std::max(std::abs(expected), floor);
}

}  // namespace etso
