#include "calab/evolve.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "calab/parallel.hpp"

namespace calab {

void GaConfig::validate() const {
    auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };
    if (population_size == 0) fail("population_size must be positive");
    if (elite_count == 0) fail("elite_count must be positive");
    if (elite_count >= population_size) fail("elite_count must be smaller than population_size");
    if (mutations_per_child > kRuleEntries) fail("mutations_per_child must be at most 128");
    if (task == TaskKind::Density) fail("task must be 'and' or 'or'");
    if (n_cells < 3 || n_cells % 2 == 0) fail("n_cells must be odd and at least 3");
    if (t_max == 0) fail("t_max must be positive");
    if (seed_rules.size() > population_size) fail("more seed rules than population slots");
}

Population init_population(const GaConfig& cfg) {
    cfg.validate();
    Population pop;
    pop.reserve(cfg.population_size);
    if (cfg.seed_rules.empty()) {
        for (std::size_t i = 0; i < cfg.population_size; ++i) {
            Substream rng(cfg.master_seed, streams::kGaInit, i);
            RuleTable r;
            for (std::size_t n = 0; n < kRuleEntries; ++n) r.set(n, rng.coin());
            pop.push_back(r);
        }
        return pop;
    }
    pop = cfg.seed_rules;
    for (std::size_t i = pop.size(); i < cfg.population_size; ++i) {
        Substream rng(cfg.master_seed, streams::kGaInit, i);
        const RuleTable& parent = cfg.seed_rules[(i - cfg.seed_rules.size()) % cfg.seed_rules.size()];
        pop.push_back(mutate(parent, cfg.mutations_per_child, rng));
    }
    return pop;
}

RuleTable crossover(const RuleTable& a, const RuleTable& b, std::size_t k) {
    if (k < 1 || k >= kRuleEntries)
        throw std::domain_error("crossover point must be in [1, 127], got " + std::to_string(k));
    RuleTable child = b;
    for (std::size_t n = 0; n < k; ++n) child.set(n, a.output(n));
    return child;
}

RuleTable mutate(const RuleTable& rule, std::size_t flips, Substream& rng) {
    if (flips > kRuleEntries)
        throw std::domain_error("cannot flip more than 128 positions, got " + std::to_string(flips));
    std::array<std::uint8_t, kRuleEntries> index;
    std::iota(index.begin(), index.end(), std::uint8_t{0});
    RuleTable out = rule;
    for (std::size_t i = 0; i < flips; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(kRuleEntries - i));
        std::swap(index[i], index[j]);
        out.flip(index[i]);
    }
    return out;
}

std::uint64_t generation_ic_seed(const GaConfig& cfg, std::size_t generation) {
    return derive_key(cfg.master_seed, streams::kGaIcSeed,
                      cfg.fresh_ics_per_generation ? generation : 0);
}

std::vector<std::size_t> rank_by_fitness(const std::vector<double>& fitness) {
    std::vector<std::size_t> order(fitness.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fitness[a] > fitness[b]; });
    return order;
}

Population breed(const GaConfig& cfg, const Population& current,
                 const std::vector<double>& fitness, std::size_t generation) {
    const auto order = rank_by_fitness(fitness);
    Population elites;
    elites.reserve(cfg.elite_count);
    for (std::size_t i = 0; i < cfg.elite_count; ++i) elites.push_back(current[order[i]]);

    Population next = elites;
    next.reserve(cfg.population_size);
    for (std::size_t c = cfg.elite_count; c < cfg.population_size; ++c) {
        Substream rng(derive_key(cfg.master_seed, streams::kGaBreed, generation), 0, c);
        const std::size_t e = elites.size();
        const auto first = static_cast<std::size_t>(rng.below(e));
        std::size_t second = first;
        if (e > 1) {
            second = static_cast<std::size_t>(rng.below(e - 1));
            if (second >= first) ++second;
        }
        const auto point = 1 + static_cast<std::size_t>(rng.below(kRuleEntries - 1));
        next.push_back(mutate(crossover(elites[first], elites[second], point),
                              cfg.mutations_per_child, rng));
    }
    return next;
}

GaResult run_ga(const GaConfig& cfg, GaState start, const GenerationObserver& observer) {
    cfg.validate();
    if (start.population.size() != cfg.population_size)
        throw std::invalid_argument("starting population has " +
                                    std::to_string(start.population.size()) + " genomes, expected " +
                                    std::to_string(cfg.population_size));
    GaResult result;
    result.population = std::move(start.population);

    for (std::size_t g = start.next_generation; g < cfg.generations; ++g) {
        const std::uint64_t ic_seed = generation_ic_seed(cfg, g);
        std::vector<double> fit(result.population.size());
        parallel_for(result.population.size(), cfg.workers, [&](std::size_t i) {
            fit[i] = fitness(result.population[i], cfg.task, cfg.n_cells, cfg.t_max, ic_seed);
        });

        const auto order = rank_by_fitness(fit);
        GenerationRecord rec;
        rec.index = g;
        rec.best_hex = format_hex(result.population[order.front()]);
        rec.best_fitness = fit[order.front()];
        rec.mean_fitness = std::accumulate(fit.begin(), fit.end(), 0.0) / static_cast<double>(fit.size());
        rec.ic_seed = ic_seed;
        rec.fitness = fit;

        GaState next{g + 1, breed(cfg, result.population, fit, g)};
        if (observer) observer(rec, next);
        result.records.push_back(std::move(rec));

        if (g + 1 == cfg.generations) {
            Population sorted;
            std::vector<double> sorted_fit;
            for (auto i : order) {
                sorted.push_back(result.population[i]);
                sorted_fit.push_back(fit[i]);
            }
            result.population = std::move(sorted);
            result.fitness = std::move(sorted_fit);
        } else {
            result.population = std::move(next.population);
        }
    }
    return result;
}

GaResult run_ga(const GaConfig& cfg, const GenerationObserver& observer) {
    return run_ga(cfg, GaState{0, init_population(cfg)}, observer);
}

double holdout_fitness(const RuleTable& rule, TaskKind logical, std::size_t n_cells,
                       std::size_t t_max, std::uint64_t seed, std::size_t rounds) {
    if (rounds == 0) throw std::domain_error("holdout_fitness needs at least one round");
    Stepper stepper(rule);
    double total = 0.0;
    for (std::size_t r = 0; r < rounds; ++r)
        total += fitness(stepper, logical, n_cells, t_max, derive_key(seed, streams::kHoldout, r));
    return total / static_cast<double>(rounds);
}

HoldoutPick pick_by_holdout(const std::vector<RuleTable>& candidates, TaskKind logical,
                            std::size_t n_cells, std::size_t t_max, std::uint64_t seed,
                            std::size_t rounds, unsigned workers) {
    if (candidates.empty()) throw std::invalid_argument("pick_by_holdout: no candidates");
    const std::uint64_t validation_seed = derive_key(seed, streams::kHoldout, 0);
    const std::uint64_t test_seed = derive_key(seed, streams::kHoldout, 1);
    std::vector<double> validation(candidates.size());
    parallel_for(candidates.size(), workers, [&](std::size_t i) {
        validation[i] = holdout_fitness(candidates[i], logical, n_cells, t_max, validation_seed, rounds);
    });
    HoldoutPick pick;
    pick.index = rank_by_fitness(validation).front();
    pick.validation = validation[pick.index];
    pick.test = holdout_fitness(candidates[pick.index], logical, n_cells, t_max, test_seed, rounds);
    return pick;
}

}  // namespace calab
