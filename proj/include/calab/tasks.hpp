#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "calab/engine.hpp"
#include "calab/lattice.hpp"
#include "calab/rng.hpp"
#include "calab/rule_table.hpp"

namespace calab {

enum class TaskKind { Density, And, Or };

std::string_view to_string(TaskKind kind);
// Accepts "density", "and", "or" (case-insensitive).
TaskKind parse_task_kind(std::string_view name);

struct TaskSpec {
    TaskKind kind = TaskKind::Density;
    std::size_t n_cells = 149;
    std::size_t t_max = 320;

    // Builds a spec with the default budget; throws std::domain_error for
    // even or zero sizes.
    static TaskSpec make(TaskKind kind, std::size_t n_cells,
                         std::optional<std::size_t> t_max = std::nullopt);
    void validate() const;
};

enum class Target { AllOff, AllOn };

// ON iff on_count > length / 2; exact ties are OFF. length == 0 throws
// std::domain_error.
bool majority(std::size_t on_count, std::size_t length);
bool majority(const Lattice& lattice);
bool majority(const Lattice& lattice, std::size_t first, std::size_t last);

struct LogicalBits {
    bool first = false;
    bool second = false;
    friend bool operator==(const LogicalBits&, const LogicalBits&) = default;
};

// Half-lattice geometry for the logical tasks: [0, h) and [h + 1, n) with
// h = (n - 1) / 2; cell h is unused.
inline std::size_t half_size(std::size_t n_cells) { return (n_cells - 1) / 2; }

LogicalBits extract_bits(const Lattice& lattice, const TaskSpec& task);

Target target_state(const TaskSpec& task, const Lattice& ic);

bool adjudicate(const RuleTable& rule, const Lattice& ic, const TaskSpec& task);
// Reuses a compiled rule; same result as the overload above.
bool adjudicate(Stepper& stepper, const Lattice& ic, const TaskSpec& task);

// --- initial-configuration generators -----------------------------------

Lattice gen_unbiased(std::size_t n_cells, Substream& rng);
Lattice gen_uniform_density(std::size_t n_cells, Substream& rng);
// Exactly k ON cells, uniformly placed.
Lattice gen_with_on_count(std::size_t n_cells, std::size_t k, Substream& rng);
Lattice gen_logical_biased(TaskKind logical, std::size_t n_cells, Substream& rng);

enum class IcKind { Unbiased, UniformDensity, LogicalBiased };

struct IcDistribution {
    IcKind kind = IcKind::Unbiased;
    TaskKind logical = TaskKind::And;  // used only by LogicalBiased

    static IcDistribution unbiased() { return {IcKind::Unbiased, TaskKind::And}; }
    static IcDistribution uniform_density() { return {IcKind::UniformDensity, TaskKind::And}; }
    static IcDistribution logical_biased(TaskKind task);

    Lattice sample(std::size_t n_cells, Substream& rng) const;
    friend bool operator==(const IcDistribution&, const IcDistribution&) = default;
};

// "unbiased", "uniform-density", "logical-biased-and", "logical-biased-or".
std::string to_string(const IcDistribution& dist);
IcDistribution parse_distribution(std::string_view name);

// The IC with index i under master_seed.
Lattice evaluation_ic(const IcDistribution& dist, std::size_t n_cells,
                      std::uint64_t master_seed, std::uint64_t index);

struct PerformanceReport {
    RuleTable rule;
    TaskSpec task;
    IcDistribution distribution;
    std::size_t samples = 0;
    std::size_t correct = 0;
    std::uint64_t master_seed = 0;

    double p_hat() const {
        return samples == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(samples);
    }
};

// Monte-Carlo estimate of the fraction of ICs classified correctly. IC i is
// drawn from a substream keyed by (master_seed, i), so the report is the same
// for every worker count (0 = hardware concurrency).
PerformanceReport evaluate_performance(const RuleTable& rule, const TaskSpec& task,
                                       const IcDistribution& dist, std::size_t samples,
                                       std::uint64_t master_seed, unsigned workers = 0);

inline constexpr std::size_t kFitnessIcsPerTask = 50;

// Combined training fitness: 50 uniform-density ICs judged on the density
// task plus 50 logically biased ICs judged on `logical`; fraction correct.
double fitness(const RuleTable& rule, TaskKind logical, std::size_t n_cells, std::size_t t_max,
               std::uint64_t master_seed);
double fitness(Stepper& stepper, TaskKind logical, std::size_t n_cells, std::size_t t_max,
               std::uint64_t master_seed);

}  // namespace calab
