#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "calab/rng.hpp"
#include "calab/rule_table.hpp"
#include "calab/tasks.hpp"

namespace calab {

using Population = std::vector<RuleTable>;

struct GaConfig {
    std::size_t population_size = 100;
    std::size_t elite_count = 20;
    std::size_t mutations_per_child = 2;
    std::size_t generations = 50;
    TaskKind task = TaskKind::And;
    std::size_t n_cells = 149;
    std::size_t t_max = 320;
    std::uint64_t master_seed = 0;
    std::vector<RuleTable> seed_rules;
    bool fresh_ics_per_generation = true;
    unsigned workers = 0;  // 0 = hardware concurrency; never affects results

    // Throws std::invalid_argument naming the offending field.
    void validate() const;
};

struct GenerationRecord {
    std::size_t index = 0;
    std::vector<double> fitness;  // per genome, population order
    std::string best_hex;
    double best_fitness = 0.0;
    double mean_fitness = 0.0;
    std::uint64_t ic_seed = 0;
};

// Everything needed to continue a run: the population about to be evaluated
// as generation `next_generation`.
struct GaState {
    std::size_t next_generation = 0;
    Population population;
};

struct GaResult {
    // Last evaluated population ordered by fitness (best first); the initial
    // population when no generation ran.
    Population population;
    std::vector<double> fitness;  // matches `population`; empty if no generation ran
    std::vector<GenerationRecord> records;
};

Population init_population(const GaConfig& cfg);

// child = a.outputs[0, k) ++ b.outputs[k, 128); k must be in [1, 127].
RuleTable crossover(const RuleTable& a, const RuleTable& b, std::size_t k);

// Flips exactly `flips` distinct positions chosen uniformly; flips <= 128.
RuleTable mutate(const RuleTable& rule, std::size_t flips, Substream& rng);

// IC sample seed used by the fitness evaluation of a generation.
std::uint64_t generation_ic_seed(const GaConfig& cfg, std::size_t generation);

// Genome indices sorted by descending fitness, ties by index.
std::vector<std::size_t> rank_by_fitness(const std::vector<double>& fitness);

// Produces the next population: the top elite_count genomes unchanged, then
// children of uniformly chosen elite pairs (single-point crossover followed by
// mutations_per_child flips).
Population breed(const GaConfig& cfg, const Population& current,
                 const std::vector<double>& fitness, std::size_t generation);

using GenerationObserver = std::function<void(const GenerationRecord&, const GaState& next)>;

// Runs generations [start.next_generation, cfg.generations). The observer
// sees each record together with the state a resumed run would start from.
GaResult run_ga(const GaConfig& cfg, GaState start, const GenerationObserver& observer = {});
GaResult run_ga(const GaConfig& cfg, const GenerationObserver& observer = {});

// Mean combined fitness over `rounds` independent 100-IC samples drawn from
// a stream disjoint from any training sample.
double holdout_fitness(const RuleTable& rule, TaskKind logical, std::size_t n_cells,
                       std::size_t t_max, std::uint64_t seed, std::size_t rounds);

struct HoldoutPick {
    std::size_t index = 0;  // into the candidate list
    double validation = 0.0;
    double test = 0.0;
};

// Picks the candidate with the best held-out fitness on a validation sample
// and reports its fitness on a second, independent test sample, so the
// reported number carries no selection bias.
HoldoutPick pick_by_holdout(const std::vector<RuleTable>& candidates, TaskKind logical,
                            std::size_t n_cells, std::size_t t_max, std::uint64_t seed,
                            std::size_t rounds, unsigned workers = 0);

}  // namespace calab
