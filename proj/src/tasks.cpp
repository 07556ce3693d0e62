#include "calab/tasks.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "calab/parallel.hpp"

namespace calab {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

// Sets exactly k of the cells [offset, offset + len) ON, positions uniform
// without replacement (partial Fisher-Yates over the smaller side).
void place_on_cells(Lattice& lattice, std::size_t offset, std::size_t len, std::size_t k,
                    Substream& rng) {
    const bool pick_on = k <= len - k;
    const std::size_t picks = pick_on ? k : len - k;
    if (!pick_on)
        for (std::size_t i = 0; i < len; ++i) lattice.set(offset + i, true);
    std::vector<std::size_t> index(len);
    std::iota(index.begin(), index.end(), std::size_t{0});
    for (std::size_t i = 0; i < picks; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(len - i));
        std::swap(index[i], index[j]);
        lattice.set(offset + index[i], pick_on);
    }
}

// ON-count for one half whose bit is `on`, from a density drawn uniformly on
// (0.5, 1] or [0, 0.5), rounded so the half majority is strict.
std::size_t biased_half_count(bool on, std::size_t half, Substream& rng) {
    const double u = rng.uniform();
    const auto h = static_cast<double>(half);
    if (on) {
        const double density = 1.0 - 0.5 * u;  // (0.5, 1]
        auto count = static_cast<std::size_t>(std::ceil(density * h));
        return std::clamp(count, half / 2 + 1, half);
    }
    const double density = 0.5 * u;  // [0, 0.5)
    auto count = static_cast<std::size_t>(std::floor(density * h));
    return std::min(count, (half - 1) / 2);
}

}  // namespace

std::string_view to_string(TaskKind kind) {
    switch (kind) {
        case TaskKind::Density:
            return "density";
        case TaskKind::And:
            return "and";
        case TaskKind::Or:
            return "or";
    }
    return "unknown";
}

TaskKind parse_task_kind(std::string_view name) {
    const std::string s = lower(name);
    if (s == "density" || s == "dens") return TaskKind::Density;
    if (s == "and") return TaskKind::And;
    if (s == "or") return TaskKind::Or;
    throw std::invalid_argument("unknown task '" + std::string(name) + "'");
}

TaskSpec TaskSpec::make(TaskKind kind, std::size_t n_cells, std::optional<std::size_t> t_max) {
    TaskSpec spec{kind, n_cells, t_max.value_or(default_t_max(n_cells))};
    spec.validate();
    return spec;
}

void TaskSpec::validate() const {
    if (n_cells == 0 || n_cells % 2 == 0)
        throw std::domain_error("task lattice size must be odd, got " + std::to_string(n_cells));
    if (kind != TaskKind::Density && n_cells < 3)
        throw std::domain_error("logical tasks need at least 3 cells");
    if (t_max == 0) throw std::domain_error("t_max must be at least 1");
}

bool majority(std::size_t on_count, std::size_t length) {
    if (length == 0) throw std::domain_error("majority of an empty sequence");
    return 2 * on_count > length;
}

bool majority(const Lattice& lattice) { return majority(lattice.count_on(), lattice.size()); }

bool majority(const Lattice& lattice, std::size_t first, std::size_t last) {
    if (last < first) throw std::domain_error("majority: inverted range");
    return majority(lattice.count_on(first, last), last - first);
}

LogicalBits extract_bits(const Lattice& lattice, const TaskSpec& task) {
    if (lattice.size() != task.n_cells)
        throw std::domain_error("extract_bits: lattice has " + std::to_string(lattice.size()) +
                                " cells, task expects " + std::to_string(task.n_cells));
    if (task.n_cells % 2 == 0 || task.n_cells < 3)
        throw std::domain_error("extract_bits: lattice size must be odd and >= 3");
    const std::size_t h = half_size(task.n_cells);
    return {majority(lattice, 0, h), majority(lattice, h + 1, task.n_cells)};
}

Target target_state(const TaskSpec& task, const Lattice& ic) {
    switch (task.kind) {
        case TaskKind::Density:
            return majority(ic) ? Target::AllOn : Target::AllOff;
        case TaskKind::And: {
            const auto bits = extract_bits(ic, task);
            return bits.first && bits.second ? Target::AllOn : Target::AllOff;
        }
        case TaskKind::Or: {
            const auto bits = extract_bits(ic, task);
            return bits.first || bits.second ? Target::AllOn : Target::AllOff;
        }
    }
    return Target::AllOff;
}

bool adjudicate(Stepper& stepper, const Lattice& ic, const TaskSpec& task) {
    if (ic.size() != task.n_cells) throw std::domain_error("adjudicate: size mismatch");
    const Target target = target_state(task, ic);
    const RunOutcome outcome = run_to_end(stepper, ic, task.t_max);
    return target == Target::AllOn ? outcome.final_state.all_on() : outcome.final_state.all_off();
}

bool adjudicate(const RuleTable& rule, const Lattice& ic, const TaskSpec& task) {
    Stepper stepper(rule);
    return adjudicate(stepper, ic, task);
}

Lattice gen_unbiased(std::size_t n_cells, Substream& rng) {
    Lattice l(n_cells);
    for (auto& w : l.mutable_words()) w = rng.next();
    l.clear_padding();
    return l;
}

Lattice gen_with_on_count(std::size_t n_cells, std::size_t k, Substream& rng) {
    if (k > n_cells) throw std::domain_error("more ON cells requested than lattice cells");
    Lattice l(n_cells);
    place_on_cells(l, 0, n_cells, k, rng);
    return l;
}

Lattice gen_uniform_density(std::size_t n_cells, Substream& rng) {
    const auto k = static_cast<std::size_t>(rng.below(n_cells + 1));
    return gen_with_on_count(n_cells, k, rng);
}

Lattice gen_logical_biased(TaskKind logical, std::size_t n_cells, Substream& rng) {
    if (logical == TaskKind::Density)
        throw std::domain_error("logical-biased generator needs the AND or OR task");
    if (n_cells % 2 == 0 || n_cells < 3)
        throw std::domain_error("logical-biased generator needs an odd size >= 3, got " +
                                std::to_string(n_cells));
    // The exception pattern is (ON,ON) for AND and (OFF,OFF) for OR.
    const bool exception_value = logical == TaskKind::And;
    LogicalBits bits;
    if (rng.coin()) {
        bits = {exception_value, exception_value};
    } else {
        // Remaining patterns in a fixed order, excluding the exception.
        static constexpr LogicalBits kAll[4] = {{false, false}, {false, true}, {true, false}, {true, true}};
        LogicalBits others[3];
        std::size_t m = 0;
        for (const auto& p : kAll)
            if (!(p.first == exception_value && p.second == exception_value)) others[m++] = p;
        bits = others[rng.below(3)];
    }
    const std::size_t h = half_size(n_cells);
    Lattice l(n_cells);
    place_on_cells(l, 0, h, biased_half_count(bits.first, h, rng), rng);
    place_on_cells(l, h + 1, h, biased_half_count(bits.second, h, rng), rng);
    l.set(h, rng.coin());
    return l;
}

IcDistribution IcDistribution::logical_biased(TaskKind task) {
    if (task == TaskKind::Density)
        throw std::domain_error("logical-biased distribution needs the AND or OR task");
    return {IcKind::LogicalBiased, task};
}

Lattice IcDistribution::sample(std::size_t n_cells, Substream& rng) const {
    switch (kind) {
        case IcKind::Unbiased:
            return gen_unbiased(n_cells, rng);
        case IcKind::UniformDensity:
            return gen_uniform_density(n_cells, rng);
        case IcKind::LogicalBiased:
            return gen_logical_biased(logical, n_cells, rng);
    }
    throw std::logic_error("unknown IC distribution");
}

std::string to_string(const IcDistribution& dist) {
    switch (dist.kind) {
        case IcKind::Unbiased:
            return "unbiased";
        case IcKind::UniformDensity:
            return "uniform-density";
        case IcKind::LogicalBiased:
            return "logical-biased-" + std::string(to_string(dist.logical));
    }
    return "unknown";
}

IcDistribution parse_distribution(std::string_view name) {
    const std::string s = lower(name);
    if (s == "unbiased") return IcDistribution::unbiased();
    if (s == "uniform-density") return IcDistribution::uniform_density();
    if (s == "logical-biased-and") return IcDistribution::logical_biased(TaskKind::And);
    if (s == "logical-biased-or") return IcDistribution::logical_biased(TaskKind::Or);
    throw std::invalid_argument("unknown IC distribution '" + std::string(name) + "'");
}

Lattice evaluation_ic(const IcDistribution& dist, std::size_t n_cells, std::uint64_t master_seed,
                      std::uint64_t index) {
    Substream rng(master_seed, streams::kEvaluation, index);
    return dist.sample(n_cells, rng);
}

PerformanceReport evaluate_performance(const RuleTable& rule, const TaskSpec& task,
                                       const IcDistribution& dist, std::size_t samples,
                                       std::uint64_t master_seed, unsigned workers) {
    task.validate();
    if (samples == 0) throw std::domain_error("evaluate_performance: samples must be >= 1");

    constexpr std::size_t kChunk = 64;
    const std::size_t chunks = (samples + kChunk - 1) / kChunk;
    std::vector<std::size_t> correct(chunks, 0);
    parallel_for(chunks, workers, [&](std::size_t c) {
        Stepper stepper(rule);
        const std::size_t end = std::min(samples, (c + 1) * kChunk);
        std::size_t hits = 0;
        for (std::size_t i = c * kChunk; i < end; ++i)
            hits += adjudicate(stepper, evaluation_ic(dist, task.n_cells, master_seed, i), task);
        correct[c] = hits;
    });

    PerformanceReport report;
    report.rule = rule;
    report.task = task;
    report.distribution = dist;
    report.samples = samples;
    report.correct = std::accumulate(correct.begin(), correct.end(), std::size_t{0});
    report.master_seed = master_seed;
    return report;
}

double fitness(Stepper& stepper, TaskKind logical, std::size_t n_cells, std::size_t t_max,
               std::uint64_t master_seed) {
    if (logical == TaskKind::Density) throw std::domain_error("fitness needs the AND or OR task");
    const TaskSpec density = TaskSpec::make(TaskKind::Density, n_cells, t_max);
    const TaskSpec logic = TaskSpec::make(logical, n_cells, t_max);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < kFitnessIcsPerTask; ++i) {
        Substream rng(master_seed, streams::kFitnessDensity, i);
        hits += adjudicate(stepper, gen_uniform_density(n_cells, rng), density);
    }
    for (std::size_t i = 0; i < kFitnessIcsPerTask; ++i) {
        Substream rng(master_seed, streams::kFitnessLogical, i);
        hits += adjudicate(stepper, gen_logical_biased(logical, n_cells, rng), logic);
    }
    return static_cast<double>(hits) / static_cast<double>(2 * kFitnessIcsPerTask);
}

double fitness(const RuleTable& rule, TaskKind logical, std::size_t n_cells, std::size_t t_max,
               std::uint64_t master_seed) {
    Stepper stepper(rule);
    return fitness(stepper, logical, n_cells, t_max, master_seed);
}

}  // namespace calab
