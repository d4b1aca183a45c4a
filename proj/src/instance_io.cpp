#include "acr/instance_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>

namespace acr {

namespace {

// whitespace-token scanner that tracks the current 1-based line
class TokenScanner {
public:
    explicit TokenScanner(std::string_view text, int start_line = 1)
        : text_(text), line_(start_line) {}

    bool next(std::string& out) {
        skip_space();
        if (pos_ >= text_.size()) return false;
        const std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        out.assign(text_.substr(start, pos_ - start));
        return true;
    }

    std::string expect(const char* what) {
        std::string tok;
        if (!next(tok)) throw ParseError(line_, std::string("unexpected end of input, expected ") + what);
        return tok;
    }

    double expect_number(const char* what) {
        const std::string tok = expect(what);
        return parse_double(tok, what);
    }

    long expect_integer(const char* what) {
        const std::string tok = expect(what);
        return parse_integer(tok, what);
    }

    double parse_double(const std::string& tok, const char* what) {
        char* end = nullptr;
        const double v = std::strtod(tok.c_str(), &end);
        if (end != tok.c_str() + tok.size() || tok.empty())
            throw ParseError(line_, std::string("expected ") + what + ", got '" + tok + "'");
        return v;
    }

    long parse_integer(const std::string& tok, const char* what) {
        long v = 0;
        const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
            throw ParseError(line_, std::string("expected ") + what + ", got '" + tok + "'");
        return v;
    }

    int line() const { return line_; }
    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') ++line_;
            ++pos_;
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
};

std::string trim(std::string_view s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

std::string upper(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

// split "KEY : VALUE" / "KEY: VALUE" / bare "KEY"
bool split_header(const std::string& line, std::string& key, std::string& value) {
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
        key = upper(trim(line));
        value.clear();
    } else {
        key = upper(trim(line.substr(0, colon)));
        value = trim(line.substr(colon + 1));
    }
    return !key.empty();
}

int tsplib_nint(double x) { return static_cast<int>(x + 0.5); }

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    // trim to the shortest representation that still round-trips
    for (int prec = 1; prec < 17; ++prec) {
        char shorter[64];
        std::snprintf(shorter, sizeof shorter, "%.*g", prec, v);
        if (std::strtod(shorter, nullptr) == v) return shorter;
    }
    return buf;
}

}  // namespace

// ---------------------------------------------------------------------------
// TSPLIB
// ---------------------------------------------------------------------------

TspInstance parse_tsplib(std::string_view text) {
    TspInstance inst;
    int dimension = -1;
    std::string weight_type;
    std::string weight_format;
    double scale = 1.0;

    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;
    bool in_data = false;
    std::string section;
    std::string data_text;  // raw section body handed to a token scanner
    int data_first_line = 0;

    while (std::getline(stream, line)) {
        ++line_no;
        if (in_data) {
            data_text += line;
            data_text += '\n';
            continue;
        }
        const std::string trimmed = trim(line);
        if (trimmed.empty()) continue;
        std::string key, value;
        if (!split_header(trimmed, key, value)) continue;
        if (key == "NAME") {
            inst.name = value;
        } else if (key == "TYPE" || key == "DISPLAY_DATA_TYPE") {
            // accepted and ignored
        } else if (key == "COMMENT") {
            // a generator tag "scale <v>" sets the report divisor
            const auto pos = value.find("scale ");
            if (pos != std::string::npos) {
                const double v = std::strtod(value.c_str() + pos + 6, nullptr);
                if (v > 0.0) scale = v;
            }
        } else if (key == "DIMENSION") {
            dimension = static_cast<int>(std::strtol(value.c_str(), nullptr, 10));
            if (dimension <= 0) throw ParseError(line_no, "DIMENSION must be a positive integer");
        } else if (key == "EDGE_WEIGHT_TYPE") {
            weight_type = upper(value);
            if (weight_type != "EUC_2D" && weight_type != "EXPLICIT")
                throw ParseError(line_no, "unsupported EDGE_WEIGHT_TYPE '" + value + "'");
        } else if (key == "EDGE_WEIGHT_FORMAT") {
            weight_format = upper(value);
            if (weight_format != "FULL_MATRIX")
                throw ParseError(line_no, "unsupported EDGE_WEIGHT_FORMAT '" + value + "'");
        } else if (key == "NODE_COORD_SECTION" || key == "EDGE_WEIGHT_SECTION") {
            section = key;
            in_data = true;
            data_first_line = line_no;
        } else if (key == "EOF") {
            break;
        } else {
            throw ParseError(line_no, "unknown keyword '" + key + "'");
        }
    }

    if (dimension <= 0) throw ParseError(line_no, "missing DIMENSION");
    if (weight_type.empty()) throw ParseError(line_no, "missing EDGE_WEIGHT_TYPE");
    if (section.empty()) throw ParseError(line_no, "missing data section");
    inst.n = dimension;
    inst.display_scale = scale;

    // strip a trailing EOF marker from the data body
    {
        std::istringstream body(data_text);
        std::string rebuilt, data_line;
        while (std::getline(body, data_line)) {
            if (upper(trim(data_line)) == "EOF") break;
            rebuilt += data_line;
            rebuilt += '\n';
        }
        data_text = rebuilt;
    }

    TokenScanner scan(data_text, data_first_line + 1);

    if (weight_type == "EUC_2D") {
        if (section != "NODE_COORD_SECTION")
            throw ParseError(data_first_line, "EUC_2D requires NODE_COORD_SECTION");
        std::vector<std::pair<double, double>> pts(static_cast<std::size_t>(dimension));
        std::vector<char> seen(static_cast<std::size_t>(dimension), 0);
        for (int i = 0; i < dimension; ++i) {
            const long id = scan.expect_integer("node id");
            const double x = scan.expect_number("x coordinate");
            const double y = scan.expect_number("y coordinate");
            if (id < 1 || id > dimension)
                throw ParseError(scan.line(), "node id out of range (dimension mismatch?)");
            if (seen[static_cast<std::size_t>(id - 1)])
                throw ParseError(scan.line(), "duplicate node id");
            seen[static_cast<std::size_t>(id - 1)] = 1;
            pts[static_cast<std::size_t>(id - 1)] = {x, y};
        }
        if (!scan.at_end()) throw ParseError(scan.line(), "more coordinates than DIMENSION");
        inst.costs.assign(static_cast<std::size_t>(dimension),
                          std::vector<double>(static_cast<std::size_t>(dimension), 0.0));
        for (int i = 0; i < dimension; ++i)
            for (int j = 0; j < dimension; ++j) {
                if (i == j) continue;
                const double dx = pts[static_cast<std::size_t>(i)].first - pts[static_cast<std::size_t>(j)].first;
                const double dy = pts[static_cast<std::size_t>(i)].second - pts[static_cast<std::size_t>(j)].second;
                inst.costs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    tsplib_nint(std::sqrt(dx * dx + dy * dy));
            }
        inst.symmetric = true;
    } else {
        if (section != "EDGE_WEIGHT_SECTION")
            throw ParseError(data_first_line, "EXPLICIT requires EDGE_WEIGHT_SECTION");
        if (weight_format.empty())
            throw ParseError(data_first_line, "EXPLICIT requires EDGE_WEIGHT_FORMAT FULL_MATRIX");
        inst.costs.assign(static_cast<std::size_t>(dimension),
                          std::vector<double>(static_cast<std::size_t>(dimension), 0.0));
        for (int i = 0; i < dimension; ++i)
            for (int j = 0; j < dimension; ++j) {
                const double v = scan.expect_number("matrix cell");
                if (v < 0.0) throw ParseError(scan.line(), "negative edge weight");
                inst.costs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            }
        if (!scan.at_end()) throw ParseError(scan.line(), "more matrix cells than DIMENSION^2");
        for (int i = 0; i < dimension; ++i)
            inst.costs[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0.0;
        inst.symmetric = true;
        for (int i = 0; i < dimension && inst.symmetric; ++i)
            for (int j = i + 1; j < dimension; ++j)
                if (inst.costs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                    inst.costs[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
                    inst.symmetric = false;
                    break;
                }
    }

    validate(inst);
    return inst;
}

std::string write_tsplib(const TspInstance& inst) {
    std::ostringstream os;
    os << "NAME : " << inst.name << "\n";
    os << "TYPE : TSP\n";
    if (inst.display_scale != 1.0)
        os << "COMMENT : scale " << format_double(inst.display_scale) << "\n";
    os << "DIMENSION : " << inst.n << "\n";
    os << "EDGE_WEIGHT_TYPE : EXPLICIT\n";
    os << "EDGE_WEIGHT_FORMAT : FULL_MATRIX\n";
    os << "EDGE_WEIGHT_SECTION\n";
    for (const auto& row : inst.costs) {
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << format_double(row[j]);
        os << "\n";
    }
    os << "EOF\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// OR-Library airland
// ---------------------------------------------------------------------------

AlspInstance parse_airland(std::string_view text, int runways) {
    TokenScanner scan(text);
    const long planes = scan.expect_integer("aircraft count");
    if (planes < 1) throw ParseError(scan.line(), "aircraft count must be positive");
    scan.expect_number("freeze time");  // present in the format, unused here

    AlspInstance inst;
    inst.runways = runways;
    inst.aircraft.resize(static_cast<std::size_t>(planes));
    inst.sep.assign(static_cast<std::size_t>(planes),
                    std::vector<double>(static_cast<std::size_t>(planes), 0.0));

    for (long i = 0; i < planes; ++i) {
        auto& a = inst.aircraft[static_cast<std::size_t>(i)];
        a.appearance = scan.expect_number("appearance time");
        a.earliest = scan.expect_number("earliest landing time");
        a.target = scan.expect_number("target landing time");
        a.latest = scan.expect_number("latest landing time");
        a.early_penalty = scan.expect_number("early penalty");
        a.late_penalty = scan.expect_number("late penalty");
        if (a.earliest > a.target)
            throw ParseError(scan.line(), "earliest landing time exceeds target");
        if (a.target > a.latest)
            throw ParseError(scan.line(), "target landing time exceeds latest");
        if (a.early_penalty < 0.0 || a.late_penalty < 0.0)
            throw ParseError(scan.line(), "negative penalty coefficient");
        for (long j = 0; j < planes; ++j) {
            const double s = scan.expect_number("separation time");
            // the OR files carry a 99999 self-separation sentinel
            inst.sep[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i == j) ? 0.0 : s;
            if (i != j && s < 0.0) throw ParseError(scan.line(), "negative separation time");
        }
    }
    if (!scan.at_end()) throw ParseError(scan.line(), "trailing data after last separation row");

    validate(inst);
    return inst;
}

std::string write_airland(const AlspInstance& inst) {
    std::ostringstream os;
    const int n = inst.size();
    os << n << " 0\n";
    for (int i = 0; i < n; ++i) {
        const auto& a = inst.aircraft[static_cast<std::size_t>(i)];
        os << format_double(a.appearance) << ' ' << format_double(a.earliest) << ' '
           << format_double(a.target) << ' ' << format_double(a.latest) << ' '
           << format_double(a.early_penalty) << ' ' << format_double(a.late_penalty) << "\n";
        for (int j = 0; j < n; ++j)
            os << (j ? " " : "")
               << (i == j ? "99999" : format_double(inst.sep[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// RH panel
// ---------------------------------------------------------------------------

RhPanel parse_rh_panel(std::string_view text) {
    RhPanel panel;
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        std::istringstream ls(t);
        std::string name, vec;
        ls >> name >> vec;
        if (vec.empty()) throw ParseError(line_no, "marker line needs a name and a vector");
        std::string extra;
        if (ls >> extra) throw ParseError(line_no, "unexpected trailing token '" + extra + "'");
        std::vector<RhCell> row;
        row.reserve(vec.size());
        for (char c : vec) {
            switch (c) {
                case '0': row.push_back(RhCell::absent); break;
                case '1': row.push_back(RhCell::present); break;
                case '2': row.push_back(RhCell::unknown); break;
                default:
                    throw ParseError(line_no, std::string("invalid panel character '") + c + "'");
            }
        }
        if (panel.hybrids == 0)
            panel.hybrids = static_cast<int>(row.size());
        else if (static_cast<int>(row.size()) != panel.hybrids)
            throw ParseError(line_no, "ragged vector length");
        panel.names.push_back(name);
        panel.cells.push_back(std::move(row));
    }
    panel.markers = static_cast<int>(panel.cells.size());
    if (panel.markers < 2) throw ParseError(line_no, "panel needs at least two markers");
    try {
        validate(panel);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
    return panel;
}

std::string write_rh_panel(const RhPanel& panel) {
    std::ostringstream os;
    for (int i = 0; i < panel.markers; ++i) {
        os << (panel.names.empty() ? "M" + std::to_string(i) : panel.names[static_cast<std::size_t>(i)]) << ' ';
        for (auto c : panel.cells[static_cast<std::size_t>(i)])
            os << static_cast<char>('0' + static_cast<int>(c));
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Config file
// ---------------------------------------------------------------------------

int RunSettings::capacity_for(ProblemKind kind) const {
    switch (kind) {
        case ProblemKind::tsp: return tsp_capacity > 0 ? tsp_capacity : capacity;
        case ProblemKind::alsp: return alsp_capacity > 0 ? alsp_capacity : capacity;
        case ProblemKind::rh: return rh_capacity > 0 ? rh_capacity : capacity;
    }
    return capacity;
}

RunSettings parse_config(std::string_view text) {
    RunSettings rs;
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) throw ParseError(line_no, "expected 'key = value'");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (value.empty()) throw ParseError(line_no, "missing value for '" + key + "'");

        const auto as_number = [&](double lo, double hi) {
            char* end = nullptr;
            const double v = std::strtod(value.c_str(), &end);
            if (end != value.c_str() + value.size())
                throw ParseError(line_no, "non-numeric value for '" + key + "'");
            if (v < lo || v > hi)
                throw ParseError(line_no, "value for '" + key + "' out of range");
            return v;
        };
        const auto as_int = [&](long lo, long hi) {
            return static_cast<long>(as_number(static_cast<double>(lo), static_cast<double>(hi)));
        };

        if (key == "seed") rs.reactor.seed = static_cast<std::uint64_t>(as_int(0, 1L << 62));
        else if (key == "reactions_per_epoch") rs.reactor.reactions_per_epoch = static_cast<int>(as_int(0, 1 << 30));
        else if (key == "wall_probability") rs.reactor.wall_probability = as_number(0.0, 1.0);
        else if (key == "heavy_quantile") rs.reactor.heavy_quantile = as_number(1e-9, 1.0 - 1e-9);
        else if (key == "decay_fraction") rs.reactor.decay_fraction = as_number(0.0, 1.0);
        else if (key == "saturation_share") rs.reactor.saturation_share = as_number(1e-9, 1.0);
        else if (key == "saturation_tolerance") rs.reactor.saturation_tolerance = as_number(0.0, 1e18);
        else if (key == "max_epochs") rs.reactor.max_epochs = static_cast<std::uint64_t>(as_int(0, 1L << 62));
        else if (key == "capacity") rs.capacity = static_cast<int>(as_int(2, 1 << 30));
        else if (key == "tsp_capacity") rs.tsp_capacity = static_cast<int>(as_int(2, 1 << 30));
        else if (key == "alsp_capacity") rs.alsp_capacity = static_cast<int>(as_int(2, 1 << 30));
        else if (key == "rh_capacity") rs.rh_capacity = static_cast<int>(as_int(2, 1 << 30));
        else if (key == "repeats") rs.repeats = static_cast<int>(as_int(1, 1 << 30));
        else if (key == "runways") rs.runways = static_cast<int>(as_int(1, 1 << 20));
        else if (key == "tsp") rs.tsp_paths.push_back(value);
        else if (key == "alsp") rs.alsp_paths.push_back(value);
        else if (key == "rh") rs.rh_paths.push_back(value);
        else throw ParseError(line_no, "unknown key '" + key + "'");
    }
    return rs;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

namespace {

ProblemKind kind_from_name(const std::string& s, int line) {
    if (s == "tsp") return ProblemKind::tsp;
    if (s == "alsp") return ProblemKind::alsp;
    if (s == "rh") return ProblemKind::rh;
    throw ParseError(line, "unknown problem kind '" + s + "'");
}

std::string perm_to_string(const Perm& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << p[i];
    return os.str();
}

std::string table_cell(double mean, double stddev, bool with_stddev) {
    char buf[80];
    if (with_stddev)
        std::snprintf(buf, sizeof buf, "%.2f (%.2f)", mean, stddev);
    else
        std::snprintf(buf, sizeof buf, "%.2f", mean);
    return buf;
}

}  // namespace

std::string write_report(const ReportDocument& doc, ReportFormat format) {
    std::ostringstream os;
    if (format == ReportFormat::machine) {
        os << "acr.version=1\n";
        os << "report.seed=" << doc.seed << "\n";
        os << "report.repeats=" << doc.repeats << "\n";
        os << "report.groups=" << doc.groups.size() << "\n";
        for (std::size_t i = 0; i < doc.groups.size(); ++i) {
            const auto& g = doc.groups[i];
            const std::string p = "group." + std::to_string(i) + ".";
            os << p << "label=" << g.label << "\n";
            os << p << "kind=" << kind_name(g.kind) << "\n";
            os << p << "atoms=" << g.atoms << "\n";
            os << p << "best_mass=" << format_double(g.best_mass) << "\n";
            os << p << "best_perm=" << perm_to_string(g.best_perm) << "\n";
            os << p << "saturation_epoch=" << g.saturation_epoch << "\n";
            os << p << "mean_best=" << format_double(g.mean_best) << "\n";
            if (doc.repeats >= 2) os << p << "stddev_best=" << format_double(g.stddev_best) << "\n";
            if (g.display_scale != 1.0) os << p << "display_scale=" << format_double(g.display_scale) << "\n";
            if (g.kind == ProblemKind::rh) os << p << "per_marker_avg=" << format_double(g.per_marker_avg) << "\n";
            os << p << "reactions_r1=" << g.r1 << "\n";
            os << p << "reactions_r2=" << g.r2 << "\n";
            os << p << "reactions_r3=" << g.r3 << "\n";
        }
        return os.str();
    }

    // table format, one row per group
    const bool with_stddev = doc.repeats >= 2;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"group", "kind", "atoms", "best",
                                    with_stddev ? "mean (stddev)" : "mean", "sat.epoch"};
    bool any_rh = false;
    for (const auto& g : doc.groups)
        if (g.kind == ProblemKind::rh) any_rh = true;
    if (any_rh) header.push_back("breaks/marker");

    for (const auto& g : doc.groups) {
        const double scale = g.display_scale != 0.0 ? g.display_scale : 1.0;
        std::vector<std::string> row;
        row.push_back(g.label.empty() ? std::string("-") : g.label);
        row.push_back(kind_name(g.kind));
        row.push_back(std::to_string(g.atoms));
        row.push_back(format_double(g.best_mass / scale));
        row.push_back(table_cell(g.mean_best / scale, g.stddev_best / scale, with_stddev));
        row.push_back(g.saturation_epoch < 0 ? std::string("never")
                                             : std::to_string(g.saturation_epoch));
        if (any_rh) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.2f", g.per_marker_avg);
            row.push_back(g.kind == ProblemKind::rh ? std::string(buf) : std::string("-"));
        }
        rows.push_back(std::move(row));
    }

    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

    const auto emit_row = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            os << row[c];
            if (c + 1 < row.size()) os << std::string(width[c] - row[c].size() + 2, ' ');
        }
        os << "\n";
    };
    emit_row(header);
    for (const auto& row : rows) emit_row(row);
    os << "repeats: " << doc.repeats << "  seed: " << doc.seed << "\n";
    return os.str();
}

ReportDocument parse_report(std::string_view machine_text) {
    std::istringstream stream{std::string(machine_text)};
    std::string line;
    int line_no = 0;
    std::map<std::string, std::pair<std::string, int>> kv;
    while (std::getline(stream, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty()) continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) throw ParseError(line_no, "expected 'key=value'");
        kv[t.substr(0, eq)] = {t.substr(eq + 1), line_no};
    }

    const auto get = [&](const std::string& key) -> std::pair<std::string, int> {
        const auto it = kv.find(key);
        if (it == kv.end()) throw ParseError(line_no, "missing key '" + key + "'");
        auto out = it->second;
        kv.erase(it);
        return out;
    };
    const auto get_number = [&](const std::string& key) {
        const auto [value, at] = get(key);
        char* end = nullptr;
        const double v = std::strtod(value.c_str(), &end);
        if (end != value.c_str() + value.size())
            throw ParseError(at, "non-numeric value for '" + key + "'");
        return v;
    };

    ReportDocument doc;
    if (get("acr.version").first != "1") throw ParseError(1, "unsupported report version");
    doc.seed = static_cast<std::uint64_t>(get_number("report.seed"));
    doc.repeats = static_cast<int>(get_number("report.repeats"));
    const int n_groups = static_cast<int>(get_number("report.groups"));
    for (int i = 0; i < n_groups; ++i) {
        const std::string p = "group." + std::to_string(i) + ".";
        GroupReport g;
        g.label = get(p + "label").first;
        const auto [kind_str, kind_line] = get(p + "kind");
        g.kind = kind_from_name(kind_str, kind_line);
        g.atoms = static_cast<int>(get_number(p + "atoms"));
        g.best_mass = get_number(p + "best_mass");
        const auto [perm_str, perm_line] = get(p + "best_perm");
        std::istringstream ps(perm_str);
        long v = 0;
        while (ps >> v) g.best_perm.push_back(static_cast<std::int32_t>(v));
        if (!ps.eof()) throw ParseError(perm_line, "malformed best_perm");
        g.saturation_epoch = static_cast<std::int64_t>(get_number(p + "saturation_epoch"));
        g.mean_best = get_number(p + "mean_best");
        if (doc.repeats >= 2) g.stddev_best = get_number(p + "stddev_best");
        if (kv.count(p + "display_scale")) g.display_scale = get_number(p + "display_scale");
        if (g.kind == ProblemKind::rh) g.per_marker_avg = get_number(p + "per_marker_avg");
        g.r1 = static_cast<std::uint64_t>(get_number(p + "reactions_r1"));
        g.r2 = static_cast<std::uint64_t>(get_number(p + "reactions_r2"));
        g.r3 = static_cast<std::uint64_t>(get_number(p + "reactions_r3"));
        doc.groups.push_back(std::move(g));
    }
    if (!kv.empty())
        throw ParseError(kv.begin()->second.second, "unknown key '" + kv.begin()->first + "'");
    return doc;
}

}  // namespace acr
