// ca_lab: simulate, evaluate, evolve and filter radius-3 binary cellular
// automata.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "calab/engine.hpp"
#include "calab/evolve.hpp"
#include "calab/io.hpp"
#include "calab/particles.hpp"
#include "calab/published_rules.hpp"
#include "calab/rng.hpp"
#include "calab/tasks.hpp"
#include "calab/version.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace calab;

namespace {

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ofstream open_out(const fs::path& path) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

void finish(std::ofstream& out, const fs::path& path) {
    out.flush();
    if (!out) throw std::runtime_error("error writing " + path.string());
}

// Writes `body` through a temporary file so readers never see a torn file.
template <class Body>
void write_atomically(const fs::path& path, Body&& body) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        auto out = open_out(tmp);
        body(out);
        finish(out, tmp);
    }
    fs::rename(tmp, path);
}

fs::path manifest_path_for(const fs::path& output) {
    fs::path p = output;
    p += ".manifest.json";
    return p;
}

void write_manifest(const fs::path& path, const std::string& subcommand, json config,
                    std::uint64_t seed, const std::vector<fs::path>& outputs) {
    json m;
    m["subcommand"] = subcommand;
    m["tool_version"] = kVersion;
    m["master_seed"] = seed;
    m["config"] = std::move(config);
    json outs = json::array();
    for (const auto& o : outputs) outs.push_back(o.string());
    m["outputs"] = outs;
    write_atomically(path, [&](std::ostream& out) { out << m.dump(2) << '\n'; });
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

// --- initial configurations --------------------------------------------------

struct IcOptions {
    std::string spec = "random";
    std::optional<std::uint64_t> seed;
};

bool ic_is_stochastic(const std::string& spec) {
    return spec == "random" || spec.rfind("density:", 0) == 0;
}

// random | density:<d> | all-on | all-off | a literal 0/1 string of n cells
Lattice make_ic(const IcOptions& opt, std::size_t n_cells) {
    const std::string& spec = opt.spec;
    if (ic_is_stochastic(spec) && !opt.seed)
        throw UsageError("--seed is required for a random initial configuration");
    if (spec == "all-on") return Lattice::uniform(n_cells, true);
    if (spec == "all-off") return Lattice::uniform(n_cells, false);
    if (spec == "random") {
        Substream rng(*opt.seed, streams::kSimulate, 0);
        return gen_unbiased(n_cells, rng);
    }
    if (spec.rfind("density:", 0) == 0) {
        double d = 0.0;
        try {
            d = std::stod(spec.substr(8));
        } catch (const std::exception&) {
            throw UsageError("bad density in --ic '" + spec + "'");
        }
        if (d < 0.0 || d > 1.0) throw UsageError("--ic density must be in [0, 1]");
        Substream rng(*opt.seed, streams::kSimulate, 0);
        const auto k = static_cast<std::size_t>(d * static_cast<double>(n_cells) + 0.5);
        return gen_with_on_count(n_cells, std::min(k, n_cells), rng);
    }
    Lattice l = Lattice::from_string(spec);
    if (l.size() != n_cells)
        throw UsageError("--ic has " + std::to_string(l.size()) + " cells but --n-cells is " +
                         std::to_string(n_cells));
    return l;
}

// --- simulate -------------------------------------------------------------------

struct SimulateArgs {
    std::string rule;
    std::size_t n_cells = 149;
    std::optional<std::size_t> t_max;
    IcOptions ic;
    bool stop_at_fixed_point = false;
    std::string out;
    std::string text;
};

int cmd_simulate(const SimulateArgs& a) {
    const RuleTable rule = parse_hex(a.rule);
    const std::size_t t_max = a.t_max.value_or(default_t_max(a.n_cells));
    const Lattice ic = make_ic(a.ic, a.n_cells);
    const Trajectory traj = run(rule, ic, t_max, a.stop_at_fixed_point);

    std::vector<fs::path> outputs{a.out};
    write_atomically(a.out, [&](std::ostream& out) { write_pbm(out, traj.states); });
    if (!a.text.empty()) {
        write_atomically(a.text, [&](std::ostream& out) { write_text_diagram(out, traj.states); });
        outputs.emplace_back(a.text);
    }
    json cfg{{"rule", format_hex(rule)},
             {"n_cells", a.n_cells},
             {"t_max", t_max},
             {"ic", a.ic.spec},
             {"stop_at_fixed_point", a.stop_at_fixed_point}};
    write_manifest(manifest_path_for(a.out), "simulate", cfg, a.ic.seed.value_or(0), outputs);

    const Lattice& last = traj.final_state();
    std::cout << "steps " << traj.states.size() - 1 << ", halt "
              << to_string(traj.halt_reason) << ", final density " << fixed(last.density(), 4)
              << '\n';
    return 0;
}

// --- evaluate -------------------------------------------------------------------

struct EvaluateArgs {
    std::string rules;
    std::vector<std::string> tasks{"density", "and", "or"};
    std::vector<std::size_t> sizes{149};
    std::size_t samples = 10000;
    std::uint64_t seed = 0;
    std::optional<std::size_t> t_max;
    std::string distribution = "unbiased";
    unsigned workers = 0;
    std::string out;
};

IcDistribution distribution_for(const std::string& name, TaskKind task) {
    if (name == "logical-biased") {
        if (task == TaskKind::Density)
            throw UsageError("the logical-biased distribution only applies to the and/or tasks");
        return IcDistribution::logical_biased(task);
    }
    return parse_distribution(name);
}

int cmd_evaluate(const EvaluateArgs& a) {
    // Everything is parsed and validated before the first evaluation starts.
    const std::vector<RuleTable> rules = read_rule_list_file(a.rules);
    std::vector<TaskKind> tasks;
    for (const auto& t : a.tasks) tasks.push_back(parse_task_kind(t));
    std::vector<TaskSpec> specs;
    for (auto task : tasks)
        for (auto n : a.sizes) {
            specs.push_back(TaskSpec::make(task, n, a.t_max));
            (void)distribution_for(a.distribution, task);
        }
    if (a.samples == 0) throw UsageError("--samples must be positive");

    const fs::path out_path = a.out;
    fs::path tmp = out_path;
    tmp += ".tmp";
    {
        auto out = open_out(tmp);
        out << kReportCsvHeader << '\n';
        for (const auto& rule : rules) {
            for (const auto& spec : specs) {
                const auto report = evaluate_performance(rule, spec, distribution_for(a.distribution, spec.kind),
                                                         a.samples, a.seed, a.workers);
                out << csv_row(report) << '\n';
                std::cerr << format_hex(rule) << ' ' << to_string(spec.kind) << ' ' << spec.n_cells
                          << ' ' << fixed(report.p_hat(), 4) << '\n';
            }
        }
        finish(out, tmp);
    }
    fs::rename(tmp, out_path);

    json cfg{{"rules_file", a.rules},
             {"rules", json::array()},
             {"tasks", a.tasks},
             {"sizes", a.sizes},
             {"samples", a.samples},
             {"t_max", a.t_max ? json(*a.t_max) : json("2*n_cells+22")},
             {"distribution", a.distribution}};
    for (const auto& r : rules) cfg["rules"].push_back(format_hex(r));
    write_manifest(manifest_path_for(out_path), "evaluate", cfg, a.seed, {out_path});
    return 0;
}

// --- evolve ---------------------------------------------------------------------

struct EvolveArgs {
    std::string task = "and";
    std::size_t n_cells = 149;
    std::optional<std::size_t> t_max;
    std::size_t population = 100;
    std::size_t elite = 20;
    std::size_t mutations = 2;
    std::optional<std::size_t> generations;
    std::optional<std::uint64_t> seed;
    std::string seed_rules;
    bool published_seeds = false;
    bool fixed_ics = false;
    std::size_t holdout_rounds = 10;
    unsigned workers = 0;
    bool resume = false;
    std::string out;
};

json ga_config_json(const GaConfig& cfg, std::size_t holdout_rounds) {
    json j{{"task", to_string(cfg.task)},
           {"n_cells", cfg.n_cells},
           {"t_max", cfg.t_max},
           {"population_size", cfg.population_size},
           {"elite_count", cfg.elite_count},
           {"mutations_per_child", cfg.mutations_per_child},
           {"generations", cfg.generations},
           {"fresh_ics_per_generation", cfg.fresh_ics_per_generation},
           {"holdout_rounds", holdout_rounds},
           {"seed_rules", json::array()}};
    for (const auto& r : cfg.seed_rules) j["seed_rules"].push_back(format_hex(r));
    return j;
}

GaConfig ga_config_from_json(const json& m) {
    const json& c = m.at("config");
    GaConfig cfg;
    cfg.task = parse_task_kind(c.at("task").get<std::string>());
    cfg.n_cells = c.at("n_cells").get<std::size_t>();
    cfg.t_max = c.at("t_max").get<std::size_t>();
    cfg.population_size = c.at("population_size").get<std::size_t>();
    cfg.elite_count = c.at("elite_count").get<std::size_t>();
    cfg.mutations_per_child = c.at("mutations_per_child").get<std::size_t>();
    cfg.generations = c.at("generations").get<std::size_t>();
    cfg.fresh_ics_per_generation = c.at("fresh_ics_per_generation").get<bool>();
    cfg.master_seed = m.at("master_seed").get<std::uint64_t>();
    for (const auto& h : c.at("seed_rules")) cfg.seed_rules.push_back(parse_hex(h.get<std::string>()));
    return cfg;
}

// Keeps the header and the first `generations` data lines of the run log.
void truncate_run_log(const fs::path& path, std::size_t generations) {
    std::vector<std::string> kept;
    {
        std::ifstream in(path);
        std::string line;
        while (std::getline(in, line) && kept.size() < generations + 1) kept.push_back(line);
    }
    if (kept.size() != generations + 1)
        throw std::runtime_error("run log " + path.string() + " is shorter than the checkpoint");
    write_atomically(path, [&](std::ostream& out) {
        for (const auto& l : kept) out << l << '\n';
    });
}

int cmd_evolve(const EvolveArgs& a) {
    const fs::path dir = a.out;
    const fs::path log_path = dir / "run_log.csv";
    const fs::path checkpoint_path = dir / "checkpoint.txt";
    const fs::path final_path = dir / "final_rules.txt";
    const fs::path holdout_path = dir / "holdout.csv";
    const fs::path manifest_path = dir / "manifest.json";

    GaConfig cfg;
    std::size_t holdout_rounds = a.holdout_rounds;
    GaState start;
    if (a.resume) {
        std::ifstream min(manifest_path);
        if (!min) throw UsageError("--resume: no manifest in " + dir.string());
        const json m = json::parse(min);
        cfg = ga_config_from_json(m);
        holdout_rounds = m.at("config").at("holdout_rounds").get<std::size_t>();
        if (a.generations) cfg.generations = *a.generations;
        std::ifstream cin_(checkpoint_path);
        if (!cin_) throw UsageError("--resume: no checkpoint in " + dir.string());
        start = read_checkpoint(cin_);
        truncate_run_log(log_path, start.next_generation);
    } else {
        if (!a.seed) throw UsageError("--seed is required");
        cfg.task = parse_task_kind(a.task);
        cfg.n_cells = a.n_cells;
        cfg.t_max = a.t_max.value_or(default_t_max(a.n_cells));
        cfg.population_size = a.population;
        cfg.elite_count = a.elite;
        cfg.mutations_per_child = a.mutations;
        cfg.generations = a.generations.value_or(50);
        cfg.master_seed = *a.seed;
        cfg.fresh_ics_per_generation = !a.fixed_ics;
        if (a.published_seeds)
            for (const auto& p : published_rules())
                if (p.density_seed) cfg.seed_rules.push_back(parse_hex(p.hex));
        if (!a.seed_rules.empty())
            for (const auto& r : read_rule_list_file(a.seed_rules)) cfg.seed_rules.push_back(r);
    }
    cfg.workers = a.workers;
    cfg.validate();
    if (!a.resume) start = GaState{0, init_population(cfg)};

    fs::create_directories(dir);
    const std::vector<fs::path> outputs{log_path, checkpoint_path, final_path, holdout_path};
    write_manifest(manifest_path, "evolve", ga_config_json(cfg, holdout_rounds), cfg.master_seed, outputs);
    if (!a.resume) {
        write_atomically(log_path, [](std::ostream& out) { out << kRunLogHeader << '\n'; });
        write_atomically(checkpoint_path, [&](std::ostream& out) { write_checkpoint(out, start); });
    }

    std::ofstream log(log_path, std::ios::app | std::ios::binary);
    if (!log) throw std::runtime_error("cannot append to " + log_path.string());
    const GaResult result = run_ga(cfg, start, [&](const GenerationRecord& rec, const GaState& next) {
        log << run_log_line(rec) << '\n';
        log.flush();
        write_atomically(checkpoint_path, [&](std::ostream& out) { write_checkpoint(out, next); });
        std::cerr << "generation " << rec.index << " best " << fixed(rec.best_fitness, 2) << " mean "
                  << fixed(rec.mean_fitness, 3) << '\n';
    });
    if (!log) throw std::runtime_error("error writing " + log_path.string());

    write_atomically(final_path, [&](std::ostream& out) { write_rule_list(out, result.population); });

    write_atomically(holdout_path, [&](std::ostream& out) {
        out << "role,rule_hex,validation_fitness,test_fitness\n";
        if (holdout_rounds == 0) return;
        const std::size_t top = std::min(cfg.elite_count, result.population.size());
        const std::vector<RuleTable> finalists(result.population.begin(), result.population.begin() + top);
        const auto best = pick_by_holdout(finalists, cfg.task, cfg.n_cells, cfg.t_max, cfg.master_seed,
                                          holdout_rounds, cfg.workers);
        out << "evolved," << format_hex(finalists[best.index]) << ',' << fixed(best.validation, 4) << ','
            << fixed(best.test, 4) << '\n';
        std::cout << "best evolved " << format_hex(finalists[best.index]) << " held-out "
                  << fixed(best.test, 4) << '\n';
        if (!cfg.seed_rules.empty()) {
            const auto seed = pick_by_holdout(cfg.seed_rules, cfg.task, cfg.n_cells, cfg.t_max,
                                              cfg.master_seed, holdout_rounds, cfg.workers);
            out << "seed," << format_hex(cfg.seed_rules[seed.index]) << ',' << fixed(seed.validation, 4)
                << ',' << fixed(seed.test, 4) << '\n';
            std::cout << "best seed    " << format_hex(cfg.seed_rules[seed.index]) << " held-out "
                      << fixed(seed.test, 4) << '\n';
        }
    });
    return 0;
}

// --- filter ---------------------------------------------------------------------

struct FilterArgs {
    std::string diagram;
    std::string rule;
    std::size_t n_cells = 149;
    std::optional<std::size_t> t_max;
    IcOptions ic;
    std::string catalog;
    std::size_t min_run = 2 * kRadius + 1;
    std::size_t warmup = 10;
    std::size_t reach = kRadius;
    std::string out;
};

int cmd_filter(const FilterArgs& a) {
    DomainCatalog catalog;
    if (a.catalog.empty()) {
        catalog = DomainCatalog::density_default(a.min_run);
    } else {
        std::ifstream in(a.catalog);
        if (!in) throw UsageError("cannot open catalog " + a.catalog);
        catalog = read_catalog(in);
    }

    std::vector<Lattice> rows;
    json cfg;
    if (!a.diagram.empty()) {
        if (!a.rule.empty()) throw UsageError("give either --diagram or --rule, not both");
        std::ifstream in(a.diagram);
        if (!in) throw UsageError("cannot open diagram " + a.diagram);
        rows = read_pbm(in);
        cfg["diagram"] = a.diagram;
    } else {
        if (a.rule.empty()) throw UsageError("filter needs --diagram or --rule");
        const RuleTable rule = parse_hex(a.rule);
        const std::size_t t_max = a.t_max.value_or(default_t_max(a.n_cells));
        rows = run(rule, make_ic(a.ic, a.n_cells), t_max).states;
        cfg["rule"] = format_hex(rule);
        cfg["n_cells"] = a.n_cells;
        cfg["t_max"] = t_max;
        cfg["ic"] = a.ic.spec;
    }
    cfg["catalog"] = a.catalog.empty() ? json("default") : json(a.catalog);
    cfg["min_run"] = a.min_run;
    cfg["warmup"] = a.warmup;
    cfg["reach"] = a.reach;

    const FilteredDiagram fd = label_sites(rows, catalog);
    const Census c = census(fd, a.reach);

    const fs::path prefix = a.out;
    auto with_suffix = [&](const char* suffix) {
        fs::path p = prefix;
        p += suffix;
        return p;
    };
    const fs::path grid_path = with_suffix(".grid.txt");
    const fs::path mask_path = with_suffix(".boundary.pbm");
    const fs::path events_path = with_suffix(".events.csv");
    write_atomically(grid_path, [&](std::ostream& out) { write_label_grid(out, fd); });
    write_atomically(mask_path, [&](std::ostream& out) { write_boundary_pbm(out, fd); });
    write_atomically(events_path, [&](std::ostream& out) { write_event_log(out, c); });
    write_manifest(manifest_path_for(prefix), "filter", cfg, a.ic.seed.value_or(0),
                   {grid_path, mask_path, events_path});

    std::cout << "boundary fraction after step " << a.warmup << ": "
              << fixed(fd.boundary_fraction(a.warmup), 4) << '\n'
              << "events " << c.events.size() << ", final segments "
              << (c.segment_counts.empty() ? 0 : c.segment_counts.back()) << '\n';
    return 0;
}

// --- report ---------------------------------------------------------------------

struct ReportArgs {
    std::string csv;
    std::string out;
};

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string render_report(const std::vector<ReportRow>& rows) {
    std::ostringstream os;
    const std::size_t w_rule = 34, w_name = 22, w_task = 9, w_n = 6, w_p = 8, w_ref = 7;
    os << pad("rule", w_rule) << pad("name", w_name) << pad("task", w_task) << pad("N", w_n)
       << pad("p_hat", w_p) << pad("ref", w_ref) << "delta\n";
    for (const auto& r : rows) {
        const PublishedRule* known = find_published(r.rule_hex);
        std::string name, ref, delta;
        if (known) {
            name = known->name.empty() ? "(evolved)" : std::string(known->name);
            if (auto v = known->performance(r.task, r.n_cells)) {
                ref = fixed(*v, 3);
                char buf[32];
                std::snprintf(buf, sizeof buf, "%+.3f", r.p_hat - *v);
                delta = buf;
            }
        }
        std::string line = pad(r.rule_hex, w_rule) + pad(name, w_name) +
                           pad(std::string(to_string(r.task)), w_task) +
                           pad(std::to_string(r.n_cells), w_n) + pad(fixed(r.p_hat, 3), w_p) +
                           pad(ref, w_ref) + delta;
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

int cmd_report(const ReportArgs& a) {
    std::vector<ReportRow> rows;
    if (a.csv == "-") {
        rows = read_report_csv(std::cin);
    } else {
        std::ifstream in(a.csv);
        if (!in) throw UsageError("cannot open " + a.csv);
        rows = read_report_csv(in);
    }
    const std::string table = render_report(rows);
    if (a.out.empty()) {
        std::cout << table;
        return 0;
    }
    write_atomically(a.out, [&](std::ostream& out) { out << table; });
    write_manifest(manifest_path_for(a.out), "report", json{{"csv", a.csv}}, 0, {fs::path(a.out)});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Radius-3 cellular automata laboratory"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* s = app.add_subcommand("simulate", "Run a rule and write its space-time diagram as PBM");
    s->add_option("--rule", sim.rule, "32-hex-digit rule")->required();
    s->add_option("--n-cells", sim.n_cells, "Lattice size")->check(CLI::PositiveNumber);
    s->add_option("--t-max", sim.t_max, "Steps to run (default 2N+22)");
    s->add_option("--ic", sim.ic.spec, "random | density:<d> | all-on | all-off | 0/1 string");
    s->add_option("--seed", sim.ic.seed, "Master seed (required for random ICs)");
    s->add_flag("--stop-at-fixed-point", sim.stop_at_fixed_point, "Stop at a uniform fixed point");
    s->add_option("--out", sim.out, "PBM output path")->required();
    s->add_option("--text", sim.text, "Optional 0/1 text diagram path");

    EvaluateArgs ev;
    auto* e = app.add_subcommand("evaluate", "Estimate task performance of a list of rules");
    e->add_option("--rules", ev.rules, "Rule-list file")->required();
    e->add_option("--tasks", ev.tasks, "Tasks: density, and, or")->delimiter(',');
    e->add_option("--sizes", ev.sizes, "Odd lattice sizes")->delimiter(',');
    e->add_option("--samples", ev.samples, "ICs per (rule, task, size)");
    e->add_option("--seed", ev.seed, "Master seed")->required();
    e->add_option("--t-max", ev.t_max, "Step budget (default 2N+22)");
    e->add_option("--distribution", ev.distribution,
                  "unbiased | uniform-density | logical-biased");
    e->add_option("--workers", ev.workers, "Worker threads (0 = all cores)");
    e->add_option("--out", ev.out, "CSV output path")->required();

    EvolveArgs evo;
    auto* g = app.add_subcommand("evolve", "Evolve rules for the density task plus a logical task");
    g->add_option("--task", evo.task, "and | or");
    g->add_option("--n-cells", evo.n_cells, "Odd lattice size");
    g->add_option("--t-max", evo.t_max, "Step budget (default 2N+22)");
    g->add_option("--population", evo.population, "Population size");
    g->add_option("--elite", evo.elite, "Genomes copied unchanged each generation");
    g->add_option("--mutations", evo.mutations, "Bit flips per child");
    g->add_option("--generations", evo.generations, "Generations (default 50)");
    g->add_option("--seed", evo.seed, "Master seed (required unless resuming)");
    g->add_option("--seed-rules", evo.seed_rules, "Rule-list file seeding the population");
    g->add_flag("--published-seeds", evo.published_seeds,
                "Seed with the four published density rules");
    g->add_flag("--fixed-ics", evo.fixed_ics, "Reuse one IC sample for every generation");
    g->add_option("--holdout-rounds", evo.holdout_rounds, "100-IC rounds for held-out scoring (0 = skip)");
    g->add_option("--workers", evo.workers, "Worker threads (0 = all cores)");
    g->add_flag("--resume", evo.resume, "Continue the run stored in --out");
    g->add_option("--out", evo.out, "Output directory")->required();

    FilterArgs fl;
    auto* f = app.add_subcommand("filter", "Filter a space-time diagram against regular domains");
    f->add_option("--diagram", fl.diagram, "PBM space-time diagram to filter");
    f->add_option("--rule", fl.rule, "Rule to simulate instead of reading a diagram");
    f->add_option("--n-cells", fl.n_cells, "Lattice size")->check(CLI::PositiveNumber);
    f->add_option("--t-max", fl.t_max, "Steps to simulate (default 2N+22)");
    f->add_option("--ic", fl.ic.spec, "random | density:<d> | all-on | all-off | 0/1 string");
    f->add_option("--seed", fl.ic.seed, "Master seed (required for random ICs)");
    f->add_option("--catalog", fl.catalog, "Domain catalog file (default: 0, 1, checkerboard)");
    f->add_option("--min-run", fl.min_run, "Minimum run for the default catalog");
    f->add_option("--warmup", fl.warmup, "Rows skipped in the reported boundary fraction");
    f->add_option("--reach", fl.reach, "Cells a boundary may move per step when matching");
    f->add_option("--out", fl.out, "Output prefix")->required();

    ReportArgs rp;
    auto* r = app.add_subcommand("report", "Tabulate an evaluate CSV against published values");
    r->add_option("--csv", rp.csv, "CSV from 'evaluate' ('-' for stdin)")->required();
    r->add_option("--out", rp.out, "Write the table here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*s) return cmd_simulate(sim);
        if (*e) return cmd_evaluate(ev);
        if (*g) return cmd_evolve(evo);
        if (*f) return cmd_filter(fl);
        if (*r) return cmd_report(rp);
    } catch (const std::exception& ex) {
        std::cerr << "ca_lab: " << ex.what() << '\n';
        return 1;
    }
    return 1;
}
