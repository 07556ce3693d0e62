#include "calab/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

namespace calab {

namespace {

std::string join_issues(const std::vector<ParseError::Issue>& issues) {
    std::string msg;
    for (const auto& issue : issues) {
        if (!msg.empty()) msg += '\n';
        msg += "line " + std::to_string(issue.line) + ": " + issue.message;
    }
    return msg;
}

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<std::string> words(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

template <class T>
T parse_number(const std::string& text, const char* field) {
    T value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw std::invalid_argument(std::string("bad ") + field + " '" + text + "'");
    return value;
}

double parse_double(const std::string& text, const char* field) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("bad ") + field + " '" + text + "'");
}

std::string format_fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

}  // namespace

ParseError::ParseError(std::vector<Issue> issues)
    : std::runtime_error(join_issues(issues)), issues_(std::move(issues)) {}

std::vector<RuleTable> read_rule_list(std::istream& in) {
    std::vector<RuleTable> rules;
    std::vector<ParseError::Issue> issues;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        const auto body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        try {
            rules.push_back(parse_hex(body));
        } catch (const FormatError& e) {
            issues.push_back({lineno, e.what()});
        }
    }
    if (!issues.empty()) throw ParseError(std::move(issues));
    return rules;
}

std::vector<RuleTable> read_rule_list_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open rule file " + path.string());
    return read_rule_list(in);
}

void write_rule_list(std::ostream& out, const std::vector<RuleTable>& rules) {
    for (const auto& r : rules) out << format_hex(r) << '\n';
}

std::string csv_row(const PerformanceReport& report) {
    std::ostringstream os;
    os << format_hex(report.rule) << ',' << to_string(report.task.kind) << ','
       << report.task.n_cells << ',' << report.task.t_max << ',' << to_string(report.distribution)
       << ',' << report.samples << ',' << report.correct << ',' << format_fixed(report.p_hat(), 6)
       << ',' << report.master_seed;
    return os.str();
}

std::vector<ReportRow> read_report_csv(std::istream& in) {
    std::vector<ReportRow> rows;
    std::string line;
    if (!std::getline(in, line)) return rows;
    if (trim(line) != kReportCsvHeader)
        throw ParseError({{1, "expected header '" + std::string(kReportCsvHeader) + "'"}});
    for (std::size_t lineno = 2; std::getline(in, line); ++lineno) {
        const auto body = trim(line);
        if (body.empty()) continue;
        const auto f = split(body, ',');
        if (f.size() != 9)
            throw ParseError({{lineno, "expected 9 fields, got " + std::to_string(f.size())}});
        try {
            ReportRow r;
            r.rule_hex = format_hex(parse_hex(f[0]));
            r.task = parse_task_kind(f[1]);
            r.n_cells = parse_number<std::size_t>(f[2], "n_cells");
            r.t_max = parse_number<std::size_t>(f[3], "t_max");
            r.distribution = f[4];
            r.samples = parse_number<std::size_t>(f[5], "samples");
            r.correct = parse_number<std::size_t>(f[6], "correct");
            r.p_hat = parse_double(f[7], "p_hat");
            r.master_seed = parse_number<std::uint64_t>(f[8], "master_seed");
            rows.push_back(std::move(r));
        } catch (const std::exception& e) {
            throw ParseError({{lineno, e.what()}});
        }
    }
    return rows;
}

void write_pbm(std::ostream& out, const std::vector<Lattice>& rows) {
    const std::size_t width = rows.empty() ? 0 : rows.front().size();
    out << "P1\n" << width << ' ' << rows.size() << '\n';
    for (const auto& row : rows) out << row.to_string() << '\n';
}

std::vector<Lattice> read_pbm(std::istream& in) {
    // Tokens are whitespace separated; '#' starts a comment running to end of
    // line. Raster digits need no separators.
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::size_t pos = 0;
    std::size_t line = 1;
    auto skip = [&] {
        while (pos < text.size()) {
            if (text[pos] == '#') {
                while (pos < text.size() && text[pos] != '\n') ++pos;
            } else if (std::isspace(static_cast<unsigned char>(text[pos]))) {
                if (text[pos] == '\n') ++line;
                ++pos;
            } else {
                break;
            }
        }
    };
    auto token = [&] {
        skip();
        const std::size_t b = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '#')
            ++pos;
        return text.substr(b, pos - b);
    };
    if (token() != "P1") throw ParseError({{line, "not a plain PBM (P1) image"}});
    std::size_t width = 0, height = 0;
    try {
        width = parse_number<std::size_t>(token(), "width");
        height = parse_number<std::size_t>(token(), "height");
    } catch (const std::exception& e) {
        throw ParseError({{line, e.what()}});
    }
    if (width == 0) throw ParseError({{line, "image width must be positive"}});
    std::vector<Lattice> rows;
    rows.reserve(height);
    for (std::size_t r = 0; r < height; ++r) {
        Lattice row(width);
        for (std::size_t x = 0; x < width; ++x) {
            skip();
            if (pos >= text.size()) throw ParseError({{line, "raster ends early"}});
            const char c = text[pos++];
            if (c != '0' && c != '1')
                throw ParseError({{line, std::string("unexpected raster character '") + c + "'"}});
            row.set(x, c == '1');
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_text_diagram(std::ostream& out, const std::vector<Lattice>& rows) {
    for (const auto& row : rows) out << row.to_string() << '\n';
}

void write_boundary_pbm(std::ostream& out, const FilteredDiagram& fd) {
    out << "P1\n" << fd.n_cells() << ' ' << fd.rows() << '\n';
    for (std::size_t t = 0; t < fd.rows(); ++t) {
        std::string line(fd.n_cells(), '0');
        for (std::size_t x = 0; x < fd.n_cells(); ++x)
            if (fd.is_boundary(t, x)) line[x] = '1';
        out << line << '\n';
    }
}

void write_label_grid(std::ostream& out, const FilteredDiagram& fd) {
    for (std::size_t t = 0; t < fd.rows(); ++t) {
        std::string line(fd.n_cells(), '*');
        for (std::size_t x = 0; x < fd.n_cells(); ++x) {
            const auto label = fd.label(t, x);
            if (label != FilteredDiagram::kBoundary) line[x] = fd.domain_names()[label].front();
        }
        out << line << '\n';
    }
}

DomainCatalog read_catalog(std::istream& in) {
    DomainCatalog cat;
    std::vector<ParseError::Issue> issues;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        const auto body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        const auto f = words(body);
        try {
            if (f.size() < 5) throw std::invalid_argument("expected 'name p tau L tile-rows...'");
            Domain d;
            d.name = f[0];
            d.spatial_period = parse_number<std::size_t>(f[1], "spatial period");
            d.temporal_period = parse_number<std::size_t>(f[2], "temporal period");
            d.min_run = parse_number<std::size_t>(f[3], "minimum run");
            d.tile.assign(f.begin() + 4, f.end());
            d.validate();
            cat.domains.push_back(std::move(d));
        } catch (const std::exception& e) {
            issues.push_back({lineno, e.what()});
        }
    }
    if (!issues.empty()) throw ParseError(std::move(issues));
    if (cat.domains.empty()) throw ParseError({{1, "catalog defines no domains"}});
    return cat;
}

void write_event_log(std::ostream& out, const Census& census) {
    auto segs = [](const std::vector<Segment>& v) {
        std::string s;
        for (const auto& seg : v) {
            if (!s.empty()) s += ';';
            s += std::to_string(seg.start) + '+' + std::to_string(seg.length);
        }
        return s;
    };
    out << "time,kind,before,after\n";
    for (const auto& ev : census.events)
        out << ev.time << ',' << to_string(ev.kind) << ',' << segs(ev.before) << ','
            << segs(ev.after) << '\n';
}

std::string run_log_line(const GenerationRecord& record) {
    return std::to_string(record.index) + ',' + record.best_hex + ',' +
           format_fixed(record.best_fitness, 4) + ',' + format_fixed(record.mean_fitness, 6) + ',' +
           std::to_string(record.ic_seed);
}

void write_checkpoint(std::ostream& out, const GaState& state) {
    out << "# next_generation then one genome per line\n";
    out << state.next_generation << '\n';
    write_rule_list(out, state.population);
}

GaState read_checkpoint(std::istream& in) {
    GaState state;
    std::string line;
    std::size_t lineno = 0;
    bool have_generation = false;
    std::vector<ParseError::Issue> issues;
    while (std::getline(in, line)) {
        ++lineno;
        const auto body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        try {
            if (!have_generation) {
                state.next_generation = parse_number<std::size_t>(std::string(body), "generation");
                have_generation = true;
            } else {
                state.population.push_back(parse_hex(body));
            }
        } catch (const std::exception& e) {
            issues.push_back({lineno, e.what()});
        }
    }
    if (!have_generation && issues.empty())
        issues.push_back({lineno + 1, "checkpoint has no generation counter"});
    if (!issues.empty()) throw ParseError(std::move(issues));
    return state;
}

}  // namespace calab
