#include "calab/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace calab {

namespace {

inline std::uint64_t mux(std::uint64_t when0, std::uint64_t when1, std::uint64_t sel) {
    return when0 ^ ((when0 ^ when1) & sel);
}

}  // namespace

Stepper::Stepper(const RuleTable& rule) : rule_(rule) {
    for (std::size_t block = 0; block < block_function_.size(); ++block) {
        std::uint8_t table = 0;
        for (std::size_t i = 0; i < 4; ++i)
            if (rule.output(4 * block + i)) table |= static_cast<std::uint8_t>(1u << i);
        block_function_[block] = table;
    }
}

void Stepper::fill_halo(const Lattice& in) {
    const std::size_t n = in.size();
    const auto cells = in.words();
    const std::size_t w = cells.size();
    halo_.assign(w + 1, 0);
    for (std::size_t i = 0; i < w; ++i) {
        halo_[i] |= cells[i] << kRadius;
        halo_[i + 1] |= cells[i] >> (64 - kRadius);
    }
    auto set_bit = [&](std::size_t p, bool on) {
        if (on) halo_[p >> 6] |= std::uint64_t{1} << (p & 63);
    };
    const auto sn = static_cast<long long>(n);
    for (int j = 0; j < kRadius; ++j) {
        // Position j holds cell j - 3; position n + 3 + j holds cell n + j.
        set_bit(static_cast<std::size_t>(j), in.get_cyclic(j - kRadius));
        set_bit(n + kRadius + static_cast<std::size_t>(j), in.get_cyclic(sn + j));
    }
    // n < 3 would let the shifted body overlap the wrapped tail; rebuild those
    // positions directly.
    if (n < static_cast<std::size_t>(kRadius)) {
        std::fill(halo_.begin(), halo_.end(), 0);
        for (std::size_t p = 0; p < n + 2 * kRadius; ++p)
            set_bit(p, in.get_cyclic(static_cast<long long>(p) - kRadius));
    }
}

void Stepper::step(const Lattice& in, Lattice& next) {
    if (next.size() != in.size()) throw std::invalid_argument("step: size mismatch");
    fill_halo(in);
    auto out = next.mutable_words();
    const std::size_t w = out.size();

    for (std::size_t k = 0; k < w; ++k) {
        // var[b] holds, for each cell x of this word, neighborhood bit b:
        // bit 6 is cell x-3, bit 0 is cell x+3.
        std::uint64_t var[kNeighborhood];
        for (int b = 0; b < kNeighborhood; ++b) {
            const int s = kNeighborhood - 1 - b;  // halo offset 0..6
            const std::uint64_t lo = halo_[k] >> s;
            const std::uint64_t hi = s == 0 ? 0 : halo_[k + 1] << (64 - s);
            var[b] = lo | hi;
        }

        // All 16 functions of (bit1, bit0); entry t has minterm i set iff bit i of t.
        const std::uint64_t minterm[4] = {~var[1] & ~var[0], ~var[1] & var[0],
                                          var[1] & ~var[0], var[1] & var[0]};
        std::uint64_t fn[16];
        fn[0] = 0;
        for (unsigned t = 1; t < 16; ++t) {
            const unsigned low = static_cast<unsigned>(__builtin_ctz(t));
            fn[t] = fn[t & (t - 1)] | minterm[low];
        }

        std::uint64_t level[32];
        for (std::size_t i = 0; i < 32; ++i) level[i] = fn[block_function_[i]];
        std::size_t count = 32;
        for (int b = 2; b < kNeighborhood; ++b) {
            count /= 2;
            for (std::size_t i = 0; i < count; ++i)
                level[i] = mux(level[2 * i], level[2 * i + 1], var[b]);
        }
        out[k] = level[0];
    }
    next.clear_padding();
}

Lattice step(const RuleTable& rule, const Lattice& lattice) {
    Stepper stepper(rule);
    Lattice next(lattice.size());
    stepper.step(lattice, next);
    return next;
}

std::string_view to_string(HaltReason reason) {
    switch (reason) {
        case HaltReason::UniformFixedPoint:
            return "uniform-fixed-point";
        case HaltReason::BudgetExhausted:
            return "cycle-budget-exhausted";
    }
    return "unknown";
}

bool is_uniform_fixed_point(const RuleTable& rule, const Lattice& lattice) {
    if (lattice.all_off()) return !rule.output(0);
    if (lattice.all_on()) return rule.output(kRuleEntries - 1);
    return false;
}

Trajectory run(const RuleTable& rule, const Lattice& initial, std::size_t t_max,
               bool stop_at_fixed_point) {
    if (t_max < 1) throw std::invalid_argument("run: t_max must be at least 1");
    Trajectory traj{rule, {initial}, std::nullopt, HaltReason::BudgetExhausted};
    traj.states.reserve(t_max + 1);
    Stepper stepper(rule);
    for (std::size_t t = 0;; ++t) {
        if (stop_at_fixed_point && is_uniform_fixed_point(rule, traj.states.back())) {
            traj.halted_at = t;
            traj.halt_reason = HaltReason::UniformFixedPoint;
            break;
        }
        if (t == t_max) break;
        Lattice next(initial.size());
        stepper.step(traj.states.back(), next);
        traj.states.push_back(std::move(next));
    }
    return traj;
}

RunOutcome run_to_end(Stepper& stepper, const Lattice& initial, std::size_t t_max) {
    if (t_max < 1) throw std::invalid_argument("run: t_max must be at least 1");
    const RuleTable& rule = stepper.rule();
    Lattice current = initial;
    Lattice next(initial.size());
    for (std::size_t t = 0;; ++t) {
        if (is_uniform_fixed_point(rule, current))
            return {std::move(current), t, HaltReason::UniformFixedPoint};
        if (t == t_max) return {std::move(current), t, HaltReason::BudgetExhausted};
        stepper.step(current, next);
        std::swap(current, next);
    }
}

RunOutcome run_to_end(const RuleTable& rule, const Lattice& initial, std::size_t t_max) {
    Stepper stepper(rule);
    return run_to_end(stepper, initial, t_max);
}

}  // namespace calab
