#include <doctest.h>

#include <cmath>
#include <vector>

#include "calab/io.hpp"
#include "calab/rng.hpp"
#include "calab/tasks.hpp"

using namespace calab;

namespace {

const char* kDas = "000F730F001FFF0F000FFF0F001FFF1F";

Lattice with_on_prefix(std::size_t n, std::size_t k) {
    Lattice l(n);
    for (std::size_t x = 0; x < k; ++x) l.set(x, true);
    return l;
}

}  // namespace

TEST_CASE("majority examples") {
    CHECK(majority(with_on_prefix(149, 75)));
    CHECK_FALSE(majority(with_on_prefix(149, 74)));
    CHECK_FALSE(majority(with_on_prefix(74, 37)));  // exact tie is OFF
    CHECK(majority(with_on_prefix(74, 38)));
    CHECK_THROWS_AS(majority(0, 0), std::domain_error);
    CHECK_THROWS_AS(majority(Lattice(5), 2, 2), std::domain_error);
}

TEST_CASE("task specs need odd sizes") {
    CHECK_THROWS_AS(TaskSpec::make(TaskKind::Density, 148), std::domain_error);
    CHECK_THROWS_AS(TaskSpec::make(TaskKind::And, 1), std::domain_error);
    const TaskSpec s = TaskSpec::make(TaskKind::Or, 149);
    CHECK(s.t_max == 320);
}

TEST_CASE("extract_bits examples") {
    const TaskSpec and149 = TaskSpec::make(TaskKind::And, 149);
    SUBCASE("50 ON left, 10 ON right") {
        Lattice l(149);
        for (std::size_t x = 0; x < 50; ++x) l.set(x, true);
        for (std::size_t x = 75; x < 85; ++x) l.set(x, true);
        CHECK(extract_bits(l, and149) == LogicalBits{true, false});
        l.set(74, true);  // the center cell never matters
        CHECK(extract_bits(l, and149) == LogicalBits{true, false});
    }
    SUBCASE("all ON") { CHECK(extract_bits(Lattice::uniform(149, true), and149) == LogicalBits{true, true}); }
    SUBCASE("hand-countable N=7") {
        CHECK(extract_bits(Lattice::from_string("1101001"), TaskSpec::make(TaskKind::And, 7)) ==
              LogicalBits{true, false});
    }
    SUBCASE("size mismatch") { CHECK_THROWS_AS(extract_bits(Lattice(7), and149), std::domain_error); }
}

TEST_CASE("target_state follows the task truth tables") {
    const TaskSpec and7 = TaskSpec::make(TaskKind::And, 7);
    const TaskSpec or7 = TaskSpec::make(TaskKind::Or, 7);
    // halves {0,1,2} and {4,5,6}
    const Lattice on_on = Lattice::from_string("1100110");
    const Lattice on_off = Lattice::from_string("1101000");
    const Lattice off_on = Lattice::from_string("0001011");
    const Lattice off_off = Lattice::from_string("0011000");
    CHECK(target_state(and7, on_on) == Target::AllOn);
    CHECK(target_state(and7, on_off) == Target::AllOff);
    CHECK(target_state(and7, off_on) == Target::AllOff);
    CHECK(target_state(and7, off_off) == Target::AllOff);
    CHECK(target_state(or7, on_on) == Target::AllOn);
    CHECK(target_state(or7, on_off) == Target::AllOn);
    CHECK(target_state(or7, off_on) == Target::AllOn);
    CHECK(target_state(or7, off_off) == Target::AllOff);
    CHECK(target_state(TaskSpec::make(TaskKind::Density, 7), Lattice(7)) == Target::AllOff);
}

TEST_CASE("AND and OR targets differ exactly on mixed bit pairs (all 128 ICs at N=7)") {
    const TaskSpec and7 = TaskSpec::make(TaskKind::And, 7);
    const TaskSpec or7 = TaskSpec::make(TaskKind::Or, 7);
    for (unsigned code = 0; code < 128; ++code) {
        Lattice l(7);
        for (std::size_t x = 0; x < 7; ++x) l.set(x, (code >> x) & 1u);
        const LogicalBits bits = extract_bits(l, and7);
        const bool mixed = bits.first != bits.second;
        CHECK((target_state(and7, l) != target_state(or7, l)) == mixed);
    }
}

TEST_CASE("adjudicate examples") {
    const TaskSpec dens = TaskSpec::make(TaskKind::Density, 149);
    CHECK(adjudicate(RuleTable::zeros(), with_on_prefix(149, 74), dens));
    CHECK_FALSE(adjudicate(RuleTable::zeros(), with_on_prefix(149, 75), dens));
    const TaskSpec or149 = TaskSpec::make(TaskKind::Or, 149);
    Substream rng(11, 0, 0);
    for (int i = 0; i < 50; ++i) {
        const Lattice l = gen_logical_biased(TaskKind::Or, 149, rng);
        const auto bits = extract_bits(l, or149);
        if (bits.first || bits.second) CHECK(adjudicate(RuleTable::ones(), l, or149));
    }
}

TEST_CASE("adjudicate accepts the target reached exactly at the budget") {
    // outputs[0] = 1 and outputs[127] = 0: uniform states alternate, never halt.
    RuleTable blinker;
    blinker.set(0, true);
    const Lattice off = Lattice::uniform(9, false);
    CHECK(adjudicate(blinker, off, TaskSpec{TaskKind::Density, 9, 2}));   // ends all-OFF
    CHECK_FALSE(adjudicate(blinker, off, TaskSpec{TaskKind::Density, 9, 1}));  // ends all-ON
}

TEST_CASE("rules that keep all-OFF fixed classify the all-OFF IC") {
    Substream rng(12, 0, 0);
    for (int i = 0; i < 100; ++i) {
        RuleTable r;
        for (std::size_t n = 0; n < kRuleEntries; ++n) r.set(n, rng.coin());
        r.set(0, false);
        CHECK(adjudicate(r, Lattice(149), TaskSpec::make(TaskKind::Density, 149)));
    }
}

TEST_CASE("adjudication is deterministic") {
    const RuleTable das = parse_hex(kDas);
    const TaskSpec and149 = TaskSpec::make(TaskKind::And, 149);
    for (std::uint64_t i = 0; i < 50; ++i) {
        const Lattice ic = evaluation_ic(IcDistribution::unbiased(), 149, 99, i);
        const bool first = adjudicate(das, ic, and149);
        CHECK(adjudicate(das, ic, and149) == first);
    }
}

TEST_CASE("unbiased generator statistics") {
    double density_sum = 0.0;
    std::size_t majority_on = 0;
    for (std::uint64_t i = 0; i < 100000; ++i) {
        Substream rng(13, streams::kEvaluation, i);
        const Lattice l = gen_unbiased(149, rng);
        density_sum += l.density();
        if (i < 10000) majority_on += majority(l);
    }
    CHECK(std::abs(density_sum / 100000.0 - 0.5) < 0.002);
    CHECK(std::abs(static_cast<double>(majority_on) / 10000.0 - 0.5) < 0.01);
}

TEST_CASE("generators are pure functions of their substream") {
    for (std::uint64_t i = 0; i < 20; ++i) {
        for (auto dist : {IcDistribution::unbiased(), IcDistribution::uniform_density(),
                          IcDistribution::logical_biased(TaskKind::And)}) {
            CHECK(evaluation_ic(dist, 149, 5, i) == evaluation_ic(dist, 149, 5, i));
        }
    }
    CHECK_FALSE(evaluation_ic(IcDistribution::unbiased(), 149, 5, 0) ==
                evaluation_ic(IcDistribution::unbiased(), 149, 5, 1));
}

TEST_CASE("uniform-density generator draws k uniformly on 0..N") {
    constexpr std::size_t n = 149;
    constexpr std::size_t draws = 100000;
    std::vector<std::size_t> histogram(n + 1, 0);
    for (std::uint64_t i = 0; i < draws; ++i) {
        Substream rng(14, 0, i);
        Substream copy = rng;
        const auto k = static_cast<std::size_t>(copy.below(n + 1));
        const Lattice l = gen_uniform_density(n, rng);
        CHECK(l.count_on() == k);  // exactly the drawn count
        ++histogram[k];
    }
    const double expected = static_cast<double>(draws) / (n + 1);
    double chi2 = 0.0;
    for (auto c : histogram) chi2 += (static_cast<double>(c) - expected) * (static_cast<double>(c) - expected) / expected;
    // chi-square critical value, 149 degrees of freedom, alpha = 0.01
    CHECK(chi2 < 192.073);
}

TEST_CASE("k = 0 gives an all-OFF lattice") {
    Substream rng(15, 0, 0);
    CHECK(gen_with_on_count(149, 0, rng).all_off());
    CHECK(gen_with_on_count(149, 149, rng).all_on());
    CHECK_THROWS_AS(gen_with_on_count(5, 6, rng), std::domain_error);
}

TEST_CASE("logical-biased generator mixture and strict halves") {
    for (TaskKind task : {TaskKind::And, TaskKind::Or}) {
        const TaskSpec spec = TaskSpec::make(task, 149);
        const bool exception_bit = task == TaskKind::And;
        std::size_t exceptions = 0;
        std::size_t pattern_count[4] = {0, 0, 0, 0};
        for (std::uint64_t i = 0; i < 10000; ++i) {
            Substream rng(16, 0, i);
            const Lattice l = gen_logical_biased(task, 149, rng);
            const auto bits = extract_bits(l, spec);
            // strict majorities on both halves
            const std::size_t left = l.count_on(0, 74);
            const std::size_t right = l.count_on(75, 149);
            CHECK(2 * left != 74);
            CHECK(2 * right != 74);
            if (bits.first == exception_bit && bits.second == exception_bit) ++exceptions;
            ++pattern_count[(bits.first ? 2 : 0) + (bits.second ? 1 : 0)];
        }
        CHECK(std::abs(static_cast<double>(exceptions) / 10000.0 - 0.5) <= 0.02);
        for (int p = 0; p < 4; ++p) {
            const bool is_exception = (p == 3 && exception_bit) || (p == 0 && !exception_bit);
            if (!is_exception) CHECK(std::abs(static_cast<double>(pattern_count[p]) / 10000.0 - 1.0 / 6.0) < 0.02);
        }
    }
    Substream rng(17, 0, 0);
    CHECK_THROWS_AS(gen_logical_biased(TaskKind::And, 148, rng), std::domain_error);
    CHECK_THROWS_AS(gen_logical_biased(TaskKind::Density, 149, rng), std::domain_error);
}

TEST_CASE("logical-biased generator on the smallest ring") {
    const TaskSpec and3 = TaskSpec::make(TaskKind::And, 3);
    for (std::uint64_t i = 0; i < 200; ++i) {
        Substream rng(18, 0, i);
        const Lattice l = gen_logical_biased(TaskKind::And, 3, rng);
        const auto bits = extract_bits(l, and3);
        CHECK(l.get(0) == bits.first);
        CHECK(l.get(2) == bits.second);
    }
}

TEST_CASE("evaluate_performance: zero rule scores one half by symmetry") {
    const auto rep = evaluate_performance(RuleTable::zeros(), TaskSpec::make(TaskKind::Density, 149),
                                          IcDistribution::unbiased(), 10000, 21, 1);
    CHECK(rep.samples == 10000);
    CHECK(rep.correct <= rep.samples);
    CHECK(std::abs(rep.p_hat() - 0.5) <= 0.015);
}

TEST_CASE("evaluate_performance: Das rule density and an evolved AND rule") {
    const auto das = evaluate_performance(parse_hex(kDas), TaskSpec::make(TaskKind::Density, 149),
                                          IcDistribution::unbiased(), 10000, 22);
    CHECK(das.p_hat() >= 0.803);
    CHECK(das.p_hat() <= 0.843);
    const auto evolved = evaluate_performance(parse_hex("005F1053405F045F005FFD5F005DFF5F"),
                                              TaskSpec::make(TaskKind::And, 149),
                                              IcDistribution::unbiased(), 10000, 22);
    CHECK(evolved.p_hat() >= 0.82);
    CHECK(evolved.p_hat() <= 0.86);
}

TEST_CASE("evaluate_performance is independent of the worker count") {
    const RuleTable das = parse_hex(kDas);
    const TaskSpec spec = TaskSpec::make(TaskKind::Or, 149);
    const auto one = evaluate_performance(das, spec, IcDistribution::unbiased(), 700, 23, 1);
    for (unsigned workers : {2u, 3u, 8u}) {
        const auto many = evaluate_performance(das, spec, IcDistribution::unbiased(), 700, 23, workers);
        CHECK(csv_row(many) == csv_row(one));
    }
}

TEST_CASE("evaluate_performance rejects zero samples") {
    CHECK_THROWS_AS(evaluate_performance(RuleTable::zeros(), TaskSpec::make(TaskKind::Density, 9),
                                         IcDistribution::unbiased(), 0, 1),
                    std::domain_error);
}

TEST_CASE("fitness of the zero rule matches the generator mixture") {
    // Closed form by enumeration: the zero rule is right exactly when the
    // target is all-OFF.
    constexpr std::size_t n = 149;
    double density_part = 0.0;
    for (std::size_t k = 0; k <= n; ++k) density_part += (2 * k < n ? 1.0 : 0.0) / (n + 1);
    // AND mixture: (ON,ON) with 1/2, the three others with 1/6 each.
    const double and_part = 0.5 * 0.0 + 3.0 * (0.5 / 3.0) * 1.0;
    const double expected = 0.5 * density_part + 0.5 * and_part;
    CHECK(expected == doctest::Approx(0.5));

    double mean = 0.0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const double f = fitness(RuleTable::zeros(), TaskKind::And, n, 320, seed);
        CHECK(std::abs(f - expected) <= 0.15);
        mean += f / 40.0;
    }
    CHECK(std::abs(mean - expected) <= 0.03);
}

TEST_CASE("fitness is deterministic and bounded") {
    const RuleTable das = parse_hex(kDas);
    const double f = fitness(das, TaskKind::Or, 149, 320, 77);
    CHECK(fitness(das, TaskKind::Or, 149, 320, 77) == f);
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);

    // Recount the same 100 ICs through adjudicate.
    std::size_t hits = 0;
    for (std::uint64_t i = 0; i < kFitnessIcsPerTask; ++i) {
        Substream d(77, streams::kFitnessDensity, i);
        hits += adjudicate(das, gen_uniform_density(149, d), TaskSpec::make(TaskKind::Density, 149));
        Substream l(77, streams::kFitnessLogical, i);
        hits += adjudicate(das, gen_logical_biased(TaskKind::Or, 149, l), TaskSpec::make(TaskKind::Or, 149));
    }
    CHECK(f == static_cast<double>(hits) / 100.0);
    CHECK_THROWS_AS(fitness(das, TaskKind::Density, 149, 320, 1), std::domain_error);
}

TEST_CASE("distribution names round-trip") {
    for (auto d : {IcDistribution::unbiased(), IcDistribution::uniform_density(),
                   IcDistribution::logical_biased(TaskKind::And), IcDistribution::logical_biased(TaskKind::Or)})
        CHECK(parse_distribution(to_string(d)) == d);
    CHECK_THROWS(parse_distribution("biased"));
    CHECK(parse_task_kind("AND") == TaskKind::And);
    CHECK_THROWS(parse_task_kind("xor"));
}
