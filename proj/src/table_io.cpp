#include "etso/table_io.hpp"

#include <json.hpp>

#include <boost/tokenizer.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace etso {

using ojson = nlohmann::ordered_json;

TableFormat parse_format(const std::string& name) {
    if (name == "text") return TableFormat::text;
    if (name == "csv") return TableFormat::csv;
    if (name == "json") return TableFormat::json;
    throw FormatError("unknown format \"" + name + "\" (text, csv, json)");
}

const std::vector<std::string>& coupling_columns() {
    static const std::vector<std::string> cols{"1A", "-1A", "1B", "-1B", "1C", "-1C", "1D", "-1D"};
    return cols;
}

const SqrtLinear& coupling_cell(const CouplingRow& row, int column) {
    const CouplingCoeffs& c = (column % 2 == 0) ? row.plus : row.minus;
    switch (column / 2) {
        case 0: return c.A;
        case 1: return c.B;
        case 2: return c.C;
        case 3: return c.D;
    }
    throw FormatError("coupling column out of range");
}

namespace {

// ----------------------------------------------------------------- helpers

std::size_t display_width(const std::string& s) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < s.size();) {
        unsigned char c = s[i];
        std::size_t len = c < 0x80 ? 1 : (c >> 5) == 6 ? 2 : (c >> 4) == 14 ? 3 : 4;
        unsigned cp = c;
        if (len == 2) cp = ((c & 0x1f) << 6) | (s[i + 1] & 0x3f);
        // combining diacritics take no column
        if (!(cp >= 0x300 && cp < 0x370)) ++w;
        i += len;
    }
    return w;
}

std::string aligned(const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> width;
    for (const auto& row : cells) {
        if (row.size() > width.size()) width.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], display_width(row[c]));
    }
    std::string out;
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line += std::string(width[c] - display_width(row[c]) + 2, ' ');
        }
        out += line + "\n";
    }
    return out;
}

// Cells never contain quotes or backslashes, so quoting fields with commas is enough.
std::string csv_field(const std::string& s) {
    if (s.find_first_of("\"\\\n") != std::string::npos) throw FormatError("csv cell with a quote: " + s);
    if (s.find(',') == std::string::npos) return s;
    return "\"" + s + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ",";
        line += csv_field(fields[i]);
    }
    return line + "\n";
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    using Tok = boost::tokenizer<boost::escaped_list_separator<char>>;
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            Tok tok(line, boost::escaped_list_separator<char>('\\', ',', '"'));
            rows.emplace_back(tok.begin(), tok.end());
        } catch (const boost::escaped_list_error& e) {
            throw FormatError("csv line " + std::to_string(rows.size() + 1) + ": " + e.what());
        }
    }
    return rows;
}

int to_int(const std::string& s) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw FormatError("not an integer: \"" + s + "\"");
        return v;
    } catch (const std::logic_error&) {
        throw FormatError("not an integer: \"" + s + "\"");
    }
}

HalfInt s_of_columns(std::size_t n_components) {
    if (n_components < 2 || n_components % 2 != 0) throw FormatError("bad component count");
    return HalfInt::from_twice(static_cast<int>(n_components / 2) - 1);
}

const char* marker_symbol(RadialMarker m) {
    switch (m) {
        case RadialMarker::psi: return "psi";
        case RadialMarker::psi_dual: return "psibar";
        case RadialMarker::sto: return "chi";
    }
    return "?";
}

const char* marker_glyph(RadialMarker m) {
    switch (m) {
        case RadialMarker::psi: return "ψ";
        case RadialMarker::psi_dual: return "ψ̄";
        case RadialMarker::sto: return "χ";
    }
    return "?";
}

RadialMarker marker_from_name(const std::string& s) {
    if (s == "psi") return RadialMarker::psi;
    if (s == "psi-dual") return RadialMarker::psi_dual;
    if (s == "sto") return RadialMarker::sto;
    throw FormatError("unknown radial marker \"" + s + "\"");
}

std::string display_cell(const SpinorTerm& term, RadialMarker marker) {
    if (term.is_zero()) return "0";
    std::string c = to_display(term.coeff);
    if (c == "1") c = "";
    else if (c == "-1") c = "-";
    else if (c.find(" + ") != std::string::npos || c.find(" - ") != std::string::npos) c = "(" + c + ")";
    const auto& o = term.orbital;
    return c + marker_glyph(marker) + "[" + o.str() + "]";
}

std::string exact_cell(const SpinorTerm& term, RadialMarker marker) {
    if (term.is_zero()) return "0";
    return "(" + to_string(term.coeff) + ")*" + marker_symbol(marker) + "[" + term.orbital.str() + "]";
}

OrbitalLabel parse_orbital(const std::string& s) {
    OrbitalLabel o;
    char c1 = 0, c2 = 0;
    std::istringstream in(s);
    if (!(in >> o.n >> c1 >> o.l >> c2 >> o.m) || c1 != ',' || c2 != ',' || !(in >> std::ws).eof()) {
        throw FormatError("bad orbital label \"" + s + "\"");
    }
    return o;
}

SpinorTerm parse_exact_cell(const std::string& cell, RadialMarker marker) {
    SpinorTerm term;
    if (cell == "0") return term;
    const std::string tag = std::string(")*") + marker_symbol(marker) + "[";
    auto pos = cell.rfind(tag);
    if (cell.empty() || cell.front() != '(' || pos == std::string::npos || cell.back() != ']') {
        throw FormatError("bad spinor cell \"" + cell + "\"");
    }
    term.coeff = parse_exact(cell.substr(1, pos - 1));
    term.orbital = parse_orbital(cell.substr(pos + tag.size(), cell.size() - pos - tag.size() - 1));
    return term;
}

std::vector<std::string> spinor_label_cells(const SymbolicSpinor& sp) {
    const auto& L = sp.labels;
    return {std::to_string(sp.n), std::to_string(L.l), L.j.str(), L.m.str(), std::to_string(L.t()),
            std::to_string(L.l_tilde())};
}

std::vector<std::string> coupling_label_cells(const CouplingRow& row) {
    const auto& L = row.labels;
    return {std::to_string(row.lambda), std::to_string(L.l), L.j.str(), L.m.str(), std::to_string(L.t()),
            std::to_string(L.l_tilde())};
}

ojson complex_json(const std::complex<double>& z) { return ojson::array({z.real(), z.imag()}); }

}  // namespace

// ----------------------------------------------------------------- writers

std::string write_spinor_table(const std::vector<SymbolicSpinor>& rows, HalfInt s, TableFormat format) {
    const RadialMarker marker = rows.empty() ? RadialMarker::psi : rows.front().marker;
    const int n_comp = 2 * (s.twice + 1);
    for (const auto& r : rows) {
        if (r.labels.s != s || static_cast<int>(r.rows.size()) != n_comp || r.marker != marker) {
            throw FormatError("spinor rows do not share one spin and radial family");
        }
    }
    switch (format) {
        case TableFormat::text: {
            std::vector<std::vector<std::string>> cells;
            std::vector<std::string> head{"n", "l", "j", "m", "t", "l~"};
            for (int c = 1; c <= n_comp; ++c) head.push_back(std::to_string(c));
            cells.push_back(head);
            for (const auto& r : rows) {
                auto line = spinor_label_cells(r);
                for (const auto& t : r.rows) line.push_back(display_cell(t, marker));
                cells.push_back(line);
            }
            return "# spinor table, s = " + s.str() + ", radial " + marker_name(marker) + "\n" + aligned(cells);
        }
        case TableFormat::csv: {
            std::vector<std::string> head{"s", "n", "l", "j", "m", "t", "l_tilde", "radial"};
            for (int c = 1; c <= n_comp; ++c) head.push_back("c" + std::to_string(c));
            std::string out = csv_line(head);
            for (const auto& r : rows) {
                std::vector<std::string> f{s.str()};
                for (auto& x : spinor_label_cells(r)) f.push_back(x);
                f.push_back(marker_name(marker));
                for (const auto& t : r.rows) f.push_back(exact_cell(t, marker));
                out += csv_line(f);
            }
            return out;
        }
        case TableFormat::json: {
            ojson doc;
            doc["kind"] = "spinor";
            doc["s"] = s.str();
            doc["radial"] = marker_name(marker);
            doc["components"] = n_comp;
            doc["rows"] = ojson::array();
            for (const auto& r : rows) {
                ojson row;
                row["n"] = r.n;
                row["l"] = r.labels.l;
                row["j"] = r.labels.j.str();
                row["m"] = r.labels.m.str();
                row["t"] = r.labels.t();
                row["l_tilde"] = r.labels.l_tilde();
                row["components"] = ojson::array();
                for (const auto& t : r.rows) {
                    ojson c;
                    c["coeff"] = to_string(t.coeff);
                    c["value"] = complex_json(t.coeff.to_complex());
                    c["orbital"] = t.is_zero() ? ojson(nullptr)
                                               : ojson::array({t.orbital.n, t.orbital.l, t.orbital.m});
                    row["components"].push_back(c);
                }
                doc["rows"].push_back(row);
            }
            return doc.dump(2) + "\n";
        }
    }
    throw FormatError("unknown format");
}

std::string write_coupling_table(const std::vector<CouplingRow>& rows, HalfInt s, TableFormat format) {
    const auto& cols = coupling_columns();
    switch (format) {
        case TableFormat::text: {
            std::vector<std::vector<std::string>> cells;
            std::vector<std::string> head{"lambda", "l", "j", "m", "t", "l~"};
            head.insert(head.end(), cols.begin(), cols.end());
            cells.push_back(head);
            for (const auto& r : rows) {
                auto line = coupling_label_cells(r);
                for (int c = 0; c < 8; ++c) line.push_back(to_display(ExactComplex(coupling_cell(r, c))));
                cells.push_back(line);
            }
            return "# coupling table, s = " + s.str() + "\n" + aligned(cells);
        }
        case TableFormat::csv: {
            std::vector<std::string> head{"s", "lambda", "l", "j", "m", "t", "l_tilde"};
            head.insert(head.end(), cols.begin(), cols.end());
            std::string out = csv_line(head);
            for (const auto& r : rows) {
                std::vector<std::string> f{s.str()};
                for (auto& x : coupling_label_cells(r)) f.push_back(x);
                for (int c = 0; c < 8; ++c) f.push_back(to_string(coupling_cell(r, c)));
                out += csv_line(f);
            }
            return out;
        }
        case TableFormat::json: {
            ojson doc;
            doc["kind"] = "coupling";
            doc["s"] = s.str();
            doc["rows"] = ojson::array();
            for (const auto& r : rows) {
                ojson row;
                row["lambda"] = r.lambda;
                row["l"] = r.labels.l;
                row["j"] = r.labels.j.str();
                row["m"] = r.labels.m.str();
                row["t"] = r.labels.t();
                row["l_tilde"] = r.labels.l_tilde();
                ojson coeffs;
                for (int c = 0; c < 8; ++c) {
                    const auto& v = coupling_cell(r, c);
                    coeffs[cols[c]] = {{"exact", to_string(v)}, {"value", v.to_double()}};
                }
                row["coeffs"] = coeffs;
                doc["rows"].push_back(row);
            }
            return doc.dump(2) + "\n";
        }
    }
    throw FormatError("unknown format");
}

// ----------------------------------------------------------------- readers

namespace {

SqrtLinear real_part_only(const ExactComplex& z, const std::string& text) {
    if (!z.is_real()) throw FormatError("coupling value is not real: \"" + text + "\"");
    return z.re();
}

void set_coupling_cell(CouplingRow& row, int column, const SqrtLinear& v) {
    CouplingCoeffs& c = (column % 2 == 0) ? row.plus : row.minus;
    switch (column / 2) {
        case 0: c.A = v; break;
        case 1: c.B = v; break;
        case 2: c.C = v; break;
        case 3: c.D = v; break;
    }
}

}  // namespace

std::vector<SymbolicSpinor> read_spinor_table(const std::string& text, TableFormat format) {
    std::vector<SymbolicSpinor> out;
    try {
        if (format == TableFormat::csv) {
            auto rows = csv_rows(text);
            if (rows.empty()) return out;
            const auto& head = rows.front();
            if (head.size() < 10 || head[0] != "s" || head[7] != "radial") throw FormatError("not a spinor csv");
            const std::size_t n_comp = head.size() - 8;
            for (std::size_t i = 1; i < rows.size(); ++i) {
                const auto& f = rows[i];
                if (f.size() != head.size()) throw FormatError("csv line " + std::to_string(i + 1) + ": bad width");
                SymbolicSpinor sp;
                sp.labels.s = HalfInt::parse(f[0]);
                if (sp.labels.s != s_of_columns(n_comp)) throw FormatError("spin does not match column count");
                sp.n = to_int(f[1]);
                sp.labels.l = to_int(f[2]);
                sp.labels.j = HalfInt::parse(f[3]);
                sp.labels.m = HalfInt::parse(f[4]);
                sp.marker = marker_from_name(f[7]);
                for (std::size_t c = 0; c < n_comp; ++c) sp.rows.push_back(parse_exact_cell(f[8 + c], sp.marker));
                out.push_back(sp);
            }
            return out;
        }
        if (format == TableFormat::json) {
            auto doc = ojson::parse(text);
            if (doc.at("kind") != "spinor") throw FormatError("not a spinor table");
            const HalfInt s = HalfInt::parse(doc.at("s").get<std::string>());
            const RadialMarker marker = marker_from_name(doc.at("radial").get<std::string>());
            for (const auto& row : doc.at("rows")) {
                SymbolicSpinor sp;
                sp.labels.s = s;
                sp.marker = marker;
                sp.n = row.at("n").get<int>();
                sp.labels.l = row.at("l").get<int>();
                sp.labels.j = HalfInt::parse(row.at("j").get<std::string>());
                sp.labels.m = HalfInt::parse(row.at("m").get<std::string>());
                for (const auto& c : row.at("components")) {
                    SpinorTerm t;
                    t.coeff = parse_exact(c.at("coeff").get<std::string>());
                    if (!c.at("orbital").is_null()) {
                        const auto& o = c.at("orbital");
                        t.orbital = {o.at(0).get<int>(), o.at(1).get<int>(), o.at(2).get<int>()};
                    }
                    sp.rows.push_back(t);
                }
                out.push_back(sp);
            }
            return out;
        }
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("json: ") + e.what());
    } catch (const ExactError& e) {
        throw FormatError(e.what());
    }
    throw FormatError("text tables are for reading by people; parse csv or json");
}

std::vector<CouplingRow> read_coupling_table(const std::string& text, TableFormat format) {
    std::vector<CouplingRow> out;
    const auto& cols = coupling_columns();
    try {
        if (format == TableFormat::csv) {
            auto rows = csv_rows(text);
            if (rows.empty()) return out;
            if (rows.front().size() != 15 || rows.front()[1] != "lambda") throw FormatError("not a coupling csv");
            for (std::size_t i = 1; i < rows.size(); ++i) {
                const auto& f = rows[i];
                if (f.size() != 15) throw FormatError("csv line " + std::to_string(i + 1) + ": bad width");
                CouplingRow row;
                row.labels.s = HalfInt::parse(f[0]);
                row.lambda = to_int(f[1]);
                row.labels.l = to_int(f[2]);
                row.labels.j = HalfInt::parse(f[3]);
                row.labels.m = HalfInt::parse(f[4]);
                for (int c = 0; c < 8; ++c) set_coupling_cell(row, c, real_part_only(parse_exact(f[7 + c]), f[7 + c]));
                out.push_back(row);
            }
            return out;
        }
        if (format == TableFormat::json) {
            auto doc = ojson::parse(text);
            if (doc.at("kind") != "coupling") throw FormatError("not a coupling table");
            const HalfInt s = HalfInt::parse(doc.at("s").get<std::string>());
            for (const auto& r : doc.at("rows")) {
                CouplingRow row;
                row.labels.s = s;
                row.lambda = r.at("lambda").get<int>();
                row.labels.l = r.at("l").get<int>();
                row.labels.j = HalfInt::parse(r.at("j").get<std::string>());
                row.labels.m = HalfInt::parse(r.at("m").get<std::string>());
                for (int c = 0; c < 8; ++c) {
                    const auto text_v = r.at("coeffs").at(cols[c]).at("exact").get<std::string>();
                    set_coupling_cell(row, c, real_part_only(parse_exact(text_v), text_v));
                }
                out.push_back(row);
            }
            return out;
        }
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("json: ") + e.what());
    } catch (const ExactError& e) {
        throw FormatError(e.what());
    }
    throw FormatError("text tables are for reading by people; parse csv or json");
}

bool same_spinor(const SymbolicSpinor& a, const SymbolicSpinor& b) {
    if (a.n != b.n || a.marker != b.marker || a.labels.s != b.labels.s || a.labels.l != b.labels.l ||
        a.labels.j != b.labels.j || a.labels.m != b.labels.m || a.rows.size() != b.rows.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        if (!(a.rows[i].coeff == b.rows[i].coeff)) return false;
        if (!a.rows[i].is_zero() && a.rows[i].orbital != b.rows[i].orbital) return false;
    }
    return true;
}

bool same_coupling(const CouplingRow& a, const CouplingRow& b) {
    if (a.lambda != b.lambda || a.labels.s != b.labels.s || a.labels.l != b.labels.l || a.labels.j != b.labels.j ||
        a.labels.m != b.labels.m) {
        return false;
    }
    for (int c = 0; c < 8; ++c) {
        if (!(coupling_cell(a, c) == coupling_cell(b, c))) return false;
    }
    return true;
}

// ----------------------------------------------------------------- printed tables

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string file_stem(const std::string& path) {
    auto slash = path.find_last_of('/');
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = name.rfind('.');
    return dot == std::string::npos ? name : name.substr(0, dot);
}

std::vector<std::vector<std::string>> read_tsv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        rows.push_back(split(line, '\t'));
    }
    return rows;
}

bool is_spinor_table(const std::string& table) { return table.rfind("spinor_", 0) == 0; }

HalfInt table_spin(const std::string& table) {
    auto pos = table.find("_s");
    if (pos == std::string::npos) throw FormatError("table name carries no spin: " + table);
    std::string tail = table.substr(pos + 2);
    auto us = tail.find('_');
    if (us == std::string::npos) throw FormatError("table name carries no spin: " + table);
    return HalfInt::parse(tail.substr(0, us) + "/" + tail.substr(us + 1));
}

}  // namespace

std::vector<PrintedCell> load_printed_table(const std::string& path) {
    const std::string table = file_stem(path);
    const bool spin = is_spinor_table(table);
    std::vector<PrintedCell> cells;
    int line_no = 0;
    for (const auto& f : read_tsv(path)) {
        ++line_no;
        const std::size_t want = spin ? 10 : 9;
        if (f.size() != want) throw FormatError(path + ": row " + std::to_string(line_no) + " has wrong width");
        PrintedCell c;
        c.table = table;
        c.index = to_int(f[0]);
        c.l = to_int(f[1]);
        c.j = HalfInt::parse(f[2]);
        c.m = HalfInt::parse(f[3]);
        c.column = f[4];
        std::size_t k = 5;
        if (spin) {
            if (f[k] != "-") c.orbital = parse_orbital(f[k]);
            ++k;
        }
        c.value = f[k++];
        if (f[k] != "-") c.alternates = split(f[k], ';');
        ++k;
        ++k;  // raw transcription, kept in the file for provenance
        c.note = f[k] == "-" ? "" : f[k];
        cells.push_back(c);
    }
    return cells;
}

std::string cell_key(const std::string& table, int index, int l, HalfInt j, HalfInt m, const std::string& column) {
    return table + "|" + std::to_string(index) + "|" + std::to_string(l) + "|" + j.str() + "|" + m.str() + "|" +
           column;
}

Allowlist load_allowlist(const std::string& path) {
    Allowlist out;
    for (const auto& f : read_tsv(path)) {
        if (f.size() != 7) throw FormatError(path + ": allowlist rows need 7 fields");
        out[cell_key(f[0], to_int(f[1]), to_int(f[2]), HalfInt::parse(f[3]), HalfInt::parse(f[4]), f[5])] = f[6];
    }
    return out;
}

std::string status_name(CellStatus status) {
    switch (status) {
        case CellStatus::match: return "match";
        case CellStatus::match_alt: return "match-alt";
        case CellStatus::mismatch: return "mismatch";
        case CellStatus::mismatch_documented: return "mismatch (documented)";
        case CellStatus::unparseable: return "unparseable";
    }
    return "?";
}

std::string ReportLine::str() const {
    char buf[32];
    if (std::isnan(delta)) {
        std::snprintf(buf, sizeof buf, "-");
    } else {
        std::snprintf(buf, sizeof buf, "%.3g", delta);
    }
    std::string out = table + "\t" + labels + "\t" + column + "\t" + computed + "\t" + printed + "\t" + buf + "\t" +
                      status_name(status);
    if (!reason.empty()) out += "\t" + reason;
    return out;
}

TableDiff diff_printed_table(const std::string& table, const std::vector<PrintedCell>& cells,
                             const Allowlist* allowlist) {
    TableDiff diff;
    diff.table = table;
    const HalfInt s = table_spin(table);
    const bool spin = is_spinor_table(table);

    std::map<std::string, SymbolicSpinor> spinors;
    std::map<std::string, CouplingRow> couplings;
    auto row_key = [](int index, int l, HalfInt j, HalfInt m) {
        return std::to_string(index) + "|" + std::to_string(l) + "|" + j.str() + "|" + m.str();
    };
    if (spin) {
        for (auto& r : emit_table(s, 4)) spinors[row_key(r.n, r.labels.l, r.labels.j, r.labels.m)] = r;
    } else {
        for (auto& r : emit_coupling_table(s, 3)) couplings[row_key(r.lambda, r.labels.l, r.labels.j, r.labels.m)] = r;
    }
    const auto& cols = coupling_columns();

    for (const auto& cell : cells) {
        ++diff.cells;
        ReportLine line;
        line.table = table;
        line.labels = (spin ? "n=" : "lambda=") + std::to_string(cell.index) + " l=" + std::to_string(cell.l) +
                      " j=" + cell.j.str() + " m=" + cell.m.str();
        line.column = cell.column;
        line.printed = cell.value + (cell.orbital ? " [" + cell.orbital->str() + "]" : "");

        // computed side
        ExactComplex computed;
        std::optional<OrbitalLabel> computed_orbital;
        bool found = false;
        const std::string rk = row_key(cell.index, cell.l, cell.j, cell.m);
        if (spin) {
            auto it = spinors.find(rk);
            if (it != spinors.end()) {
                int c = -1;
                try {
                    c = std::stoi(cell.column) - 1;
                } catch (const std::logic_error&) {
                }
                if (c >= 0 && c < static_cast<int>(it->second.rows.size())) {
                    const auto& term = it->second.rows[c];
                    computed = term.coeff;
                    if (!term.is_zero()) computed_orbital = term.orbital;
                    found = true;
                }
            }
        } else {
            auto it = couplings.find(rk);
            auto ci = std::find(cols.begin(), cols.end(), cell.column);
            if (it != couplings.end() && ci != cols.end()) {
                computed = ExactComplex(coupling_cell(it->second, static_cast<int>(ci - cols.begin())));
                found = true;
            }
        }
        line.computed = to_string(computed) + (computed_orbital ? " [" + computed_orbital->str() + "]" : "");

        const std::string key = cell_key(table, cell.index, cell.l, cell.j, cell.m, cell.column);
        const std::string* reason = nullptr;
        if (allowlist) {
            auto it = allowlist->find(key);
            if (it != allowlist->end()) reason = &it->second;
        }

        std::vector<std::string> readings{cell.value};
        readings.insert(readings.end(), cell.alternates.begin(), cell.alternates.end());
        std::optional<ExactComplex> primary;
        bool any_parsed = false;
        int matched_at = -1;
        for (std::size_t r = 0; r < readings.size(); ++r) {
            ExactComplex v;
            try {
                v = parse_exact(readings[r]);
            } catch (const ExactError&) {
                continue;
            }
            any_parsed = true;
            if (r == 0) primary = v;
            const bool orbital_ok = !spin || computed.is_zero() ||
                                    (cell.orbital && computed_orbital && *cell.orbital == *computed_orbital);
            if (found && v == computed && orbital_ok) {
                matched_at = static_cast<int>(r);
                break;
            }
        }
        line.delta = primary ? std::abs(primary->to_complex() - computed.to_complex())
                             : std::numeric_limits<double>::quiet_NaN();
        if (!any_parsed) {
            ++diff.unparseable;
            line.status = CellStatus::unparseable;
            if (reason) line.reason = *reason;
        } else {
            ++diff.parseable;
            if (matched_at == 0) {
                line.status = CellStatus::match;
                ++diff.matched;
            } else if (matched_at > 0) {
                line.status = CellStatus::match_alt;
                ++diff.matched;
            } else if (reason) {
                line.status = CellStatus::mismatch_documented;
                line.reason = *reason;
                ++diff.documented;
            } else {
                line.status = CellStatus::mismatch;
                line.reason = found ? "" : "no computed cell with these labels";
                ++diff.undocumented;
            }
        }
        diff.lines.push_back(line);
    }
    return diff;
}

const std::vector<std::string>& printed_table_names() {
    static const std::vector<std::string> names{"spinor_s1_2", "spinor_s3_2", "coupling_s1_2", "coupling_s3_2"};
    return names;
}

std::string default_data_dir() { return ETSO_DATA_DIR; }

}  // namespace etso
