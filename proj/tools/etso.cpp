#include "etso/exact.hpp"
#include "etso/table_io.hpp"
#include "etso/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

namespace fs = std::filesystem;
using namespace etso;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Where a document goes: explicit --output, else $ETSO_OUTPUT_DIR/<default_name>, else stdout.
std::string resolve_output(const std::string& output, const std::string& default_name) {
    if (output == "-") return "";
    if (!output.empty()) return output;
    if (const char* dir = std::getenv("ETSO_OUTPUT_DIR"); dir && *dir) return (fs::path(dir) / default_name).string();
    return "";
}

// Write via a temporary sibling and rename, so a failed run never leaves a partial file.
void write_document(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    const fs::path target(path);
    if (target.has_parent_path() && !fs::exists(target.parent_path())) {
        throw std::runtime_error("output directory does not exist: " + target.parent_path().string());
    }
    const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary);
        out << text;
        out.close();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw std::runtime_error("cannot write " + path);
        }
    }
    fs::rename(tmp, target);
}

HalfInt parse_spin(const std::string& text) {
    try {
        HalfInt s = HalfInt::parse(text);
        if (s.twice < 0) throw UsageError("--s must be non-negative");
        return s;
    } catch (const std::invalid_argument& e) {
        throw UsageError("--s: " + std::string(e.what()));
    }
}

RadialMarker parse_marker(const std::string& name) {
    if (name == "psi") return RadialMarker::psi;
    if (name == "psi-dual") return RadialMarker::psi_dual;
    if (name == "sto") return RadialMarker::sto;
    throw UsageError("--radial must be psi, psi-dual or sto");
}

std::string stem(HalfInt s) { return "s" + std::to_string(s.twice) + "_2"; }

std::string format_ext(TableFormat f) {
    switch (f) {
        case TableFormat::text: return "txt";
        case TableFormat::csv: return "csv";
        case TableFormat::json: return "json";
    }
    return "txt";
}

// ----------------------------------------------------------------- tables

struct TablesArgs {
    std::string kind = "spinor";
    std::string s = "1/2";
    int n_max = 4;
    int l_max = 3;
    std::string format = "text";
    std::string radial = "psi";
    std::string output;
};

int cmd_tables(const TablesArgs& a) {
    const HalfInt s = parse_spin(a.s);
    TableFormat format;
    try {
        format = parse_format(a.format);
    } catch (const FormatError& e) {
        throw UsageError(e.what());
    }
    std::string doc, name;
    if (a.kind == "spinor") {
        if (a.n_max < 1) throw UsageError("--n-max must be at least 1");
        const RadialMarker marker = parse_marker(a.radial);
        doc = write_spinor_table(emit_table(s, a.n_max, marker), s, format);
        name = "spinor_" + stem(s) + "." + format_ext(format);
    } else if (a.kind == "coupling") {
        if (s.is_integer()) throw UsageError("coupling tables need half-odd s");
        if (a.l_max < 0) throw UsageError("--l-max must be non-negative");
        doc = write_coupling_table(emit_coupling_table(s, a.l_max), s, format);
        name = "coupling_" + stem(s) + "." + format_ext(format);
    } else {
        throw UsageError("--kind must be spinor or coupling");
    }
    write_document(resolve_output(a.output, name), doc);
    return kOk;
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
    std::string suite = "all";
    std::string s;
    std::optional<int> alpha;
    double zeta = 1.0;
    std::optional<int> n_theta, n_phi, n_r;
    std::string data_dir;
    std::string allowlist;
    std::string report;
    int points = 50;
    unsigned seed = 20240611;
    bool serial = false;
    bool all_cells = false;
};

int cmd_verify(const VerifyArgs& a) {
    VerifyOptions o;
    if (a.suite != "all" && std::find(suite_names().begin(), suite_names().end(), a.suite) == suite_names().end()) {
        throw UsageError("unknown suite \"" + a.suite + "\"");
    }
    if (!a.s.empty()) o.s = parse_spin(a.s);
    if (o.s && o.s->is_integer() && a.suite != "rownorm" && a.suite != "scalar") {
        throw UsageError("--s must be half-odd for this suite");
    }
    if (a.alpha) {
        if (*a.alpha > 2) throw UsageError("--alpha must be at most 2");
        o.alpha = a.alpha;
    }
    if (!(a.zeta > 0)) throw UsageError("--zeta must be positive");
    o.zeta = a.zeta;
    if (a.n_theta || a.n_phi || a.n_r) {
        GridSpec g;
        if (a.n_theta) g.n_theta = *a.n_theta;
        if (a.n_phi) g.n_phi = *a.n_phi;
        if (a.n_r) g.n_r = *a.n_r;
        try {
            g.validate();
        } catch (const GridError& e) {
            throw UsageError(e.what());
        }
        for (const auto& w : g.warnings()) std::cerr << "warning: " << w << "\n";
        o.grid = g;
    }
    if (a.points < 1) throw UsageError("--points must be positive");
    o.points = a.points;
    o.seed = a.seed;
    o.data_dir = a.data_dir;
    if (!a.allowlist.empty()) o.allowlist = a.allowlist;
    o.exec = a.serial ? Exec::serial : Exec::parallel;

    const auto reports = run_suites(a.suite, o);
    std::ostringstream summary, full;
    bool ok = true;
    for (const auto& r : reports) {
        const std::string head = "[" + std::string(r.pass() ? "PASS" : "FAIL") + "] " + r.suite + "\n";
        summary << head;
        full << head;
        for (const auto& c : r.checks) {
            summary << "  " << c.str() << "\n";
            full << "  " << c.str() << "\n";
        }
        for (const auto& t : r.tables) {
            for (const auto& line : t.lines) {
                full << "    " << line.str() << "\n";
                if (a.all_cells || (line.status != CellStatus::match && line.status != CellStatus::match_alt)) {
                    summary << "    " << line.str() << "\n";
                }
            }
        }
        ok = ok && r.pass();
    }
    summary << (ok ? "all checks passed\n" : "verification failed\n");
    std::cout << summary.str();
    if (!a.report.empty()) write_document(a.report, full.str());
    return ok ? kOk : kVerifyFailed;
}

// ----------------------------------------------------------------- eval

struct EvalArgs {
    std::string s = "1/2";
    int n = 1;
    int l = 0;
    std::string j = "1/2";
    std::string m = "1/2";
    std::string radial = "psi";
    int alpha = 1;
    double zeta = 1.0;
    std::string points_file;
    std::string output;
};

int cmd_eval(const EvalArgs& a) {
    SpinLabels labels;
    try {
        labels = SpinLabels{parse_spin(a.s), a.l, HalfInt::parse(a.j), HalfInt::parse(a.m)};
        labels.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (labels.l >= a.n) throw UsageError("need l < n");
    const RadialMarker marker = parse_marker(a.radial);
    RadialFamily family{marker == RadialMarker::sto        ? RadialKind::sto
                        : marker == RadialMarker::psi_dual ? RadialKind::psi_alpha_dual
                                                           : RadialKind::psi_alpha,
                        a.alpha, a.zeta};
    try {
        family.validate();
    } catch (const RadialError& e) {
        throw UsageError(e.what());
    }
    const SymbolicSpinor sp = marker == RadialMarker::sto ? assemble_chi(labels, a.n)
                                                          : assemble_psi(labels, a.n, marker == RadialMarker::psi_dual);

    std::ifstream in(a.points_file);
    if (!in) throw UsageError("cannot read points file " + a.points_file);
    std::ostringstream out;
    std::string line;
    int lineno = 0;
    char buf[64];
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        double r, theta, phi;
        std::string extra;
        if (!(ls >> r >> theta >> phi) || (ls >> extra) || !(r >= 0)) {
            throw std::runtime_error(a.points_file + ":" + std::to_string(lineno) +
                                     ": expected `r theta phi` with r >= 0");
        }
        const auto v = eval_spinor(sp, family, r, theta, phi);
        for (std::size_t c = 0; c < v.size(); ++c) {
            std::snprintf(buf, sizeof buf, "%s%.17g,%.17g", c ? " " : "", v[c].real(), v[c].imag());
            out << buf;
        }
        out << "\n";
    }
    write_document(resolve_output(a.output, "eval.txt"), out.str());
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Relativistic spinor orbital basis sets: tables, verification and evaluation"};
    app.require_subcommand(1);

    TablesArgs ta;
    auto* tables = app.add_subcommand("tables", "Emit spinor or coupling coefficient tables");
    tables->add_option("--kind", ta.kind, "spinor or coupling")->capture_default_str();
    tables->add_option("--s", ta.s, "spin, e.g. 1/2")->capture_default_str();
    tables->add_option("--n-max", ta.n_max, "largest n (spinor tables)")->capture_default_str();
    tables->add_option("--l-max", ta.l_max, "largest l (coupling tables)")->capture_default_str();
    tables->add_option("--format", ta.format, "text, csv or json")->capture_default_str();
    tables->add_option("--radial", ta.radial, "psi, psi-dual or sto")->capture_default_str();
    tables->add_option("-o,--output", ta.output, "output file; '-' for stdout");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", va.suite, "all, tables, orthonormality, gradients, sigma-p, overlap, scalar, rownorm")
        ->capture_default_str();
    verify->add_option("--s", va.s, "restrict spin-dependent suites to one s");
    verify->add_option("--alpha", va.alpha, "restrict biorthonormality to one alpha");
    verify->add_option("--zeta", va.zeta, "orbital exponent")->capture_default_str();
    verify->add_option("--n-theta", va.n_theta, "theta nodes");
    verify->add_option("--n-phi", va.n_phi, "phi nodes");
    verify->add_option("--n-r", va.n_r, "radial nodes");
    verify->add_option("--data-dir", va.data_dir, "directory of printed tables");
    verify->add_option("--allowlist", va.allowlist, "documented mismatches (tsv)");
    verify->add_option("--report", va.report, "write the full report here");
    verify->add_option("--points", va.points, "finite-difference sample points")->capture_default_str();
    verify->add_option("--seed", va.seed, "sample point seed")->capture_default_str();
    verify->add_flag("--serial", va.serial, "use the serial kernels");
    verify->add_flag("--all-cells", va.all_cells, "print every table cell, not only mismatches");

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "Evaluate one spinor on points read from a file");
    eval->add_option("--s", ea.s)->capture_default_str();
    eval->add_option("--n", ea.n)->capture_default_str();
    eval->add_option("--l", ea.l)->capture_default_str();
    eval->add_option("--j", ea.j)->capture_default_str();
    eval->add_option("--m", ea.m)->capture_default_str();
    eval->add_option("--radial", ea.radial, "psi, psi-dual or sto")->capture_default_str();
    eval->add_option("--alpha", ea.alpha)->capture_default_str();
    eval->add_option("--zeta", ea.zeta)->capture_default_str();
    eval->add_option("points", ea.points_file, "file of `r theta phi` lines")->required();
    eval->add_option("-o,--output", ea.output, "output file; '-' for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*tables) return cmd_tables(ta);
        if (*verify) return cmd_verify(va);
        return cmd_eval(ea);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
