#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "calab/evolve.hpp"
#include "calab/lattice.hpp"
#include "calab/particles.hpp"
#include "calab/rule_table.hpp"
#include "calab/tasks.hpp"

namespace calab {

// A parse failure tied to a 1-based line (or CSV row) number. Several
// failures may be reported together; what() lists them all.
class ParseError : public std::runtime_error {
public:
    struct Issue {
        std::size_t line;
        std::string message;
    };
    explicit ParseError(std::vector<Issue> issues);
    const std::vector<Issue>& issues() const { return issues_; }

private:
    std::vector<Issue> issues_;
};

// --- rule lists: one 32-hex-digit rule per line, '#' comments ----------

std::vector<RuleTable> read_rule_list(std::istream& in);
std::vector<RuleTable> read_rule_list_file(const std::filesystem::path& path);
void write_rule_list(std::ostream& out, const std::vector<RuleTable>& rules);

// --- performance CSV ----------------------------------------------------

inline constexpr const char* kReportCsvHeader =
    "rule_hex,task,n_cells,t_max,distribution,samples,correct,p_hat,master_seed";

std::string csv_row(const PerformanceReport& report);

struct ReportRow {
    std::string rule_hex;
    TaskKind task = TaskKind::Density;
    std::size_t n_cells = 0;
    std::size_t t_max = 0;
    std::string distribution;
    std::size_t samples = 0;
    std::size_t correct = 0;
    double p_hat = 0.0;
    std::uint64_t master_seed = 0;
};

// Expects the header line first; malformed rows raise ParseError with the
// 1-based line number.
std::vector<ReportRow> read_report_csv(std::istream& in);

// --- space-time images ----------------------------------------------------

// Plain PBM (P1): rows = time, columns = cells, ON = 1 (black).
void write_pbm(std::ostream& out, const std::vector<Lattice>& rows);
std::vector<Lattice> read_pbm(std::istream& in);

// '1' / '0' per cell, one line per step.
void write_text_diagram(std::ostream& out, const std::vector<Lattice>& rows);

// BOUNDARY sites black.
void write_boundary_pbm(std::ostream& out, const FilteredDiagram& fd);
// One character per site: first letter of the domain name, '*' for BOUNDARY.
void write_label_grid(std::ostream& out, const FilteredDiagram& fd);

// --- domain catalogs: "name p tau L tile-row..." per line -----------------

DomainCatalog read_catalog(std::istream& in);

// --- particle events --------------------------------------------------------

// time,kind,before,after with segments written as start+length joined by ';'.
void write_event_log(std::ostream& out, const Census& census);

// --- GA run log and checkpoint ---------------------------------------------

inline constexpr const char* kRunLogHeader = "generation,best_hex,best_fitness,mean_fitness,ic_seed";

std::string run_log_line(const GenerationRecord& record);

void write_checkpoint(std::ostream& out, const GaState& state);
GaState read_checkpoint(std::istream& in);

}  // namespace calab
