#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "calab/lattice.hpp"
#include "calab/rule_table.hpp"

namespace calab {

// Step budget used when none is given: 2N + 22, i.e. 320 at N = 149.
inline std::size_t default_t_max(std::size_t n_cells) { return 2 * n_cells + 22; }

// A rule compiled into a word-parallel multiplexer network.
//
// The 128-entry table is evaluated as a binary decision tree over the seven
// neighborhood variables. The two least significant variables (cells x+2 and
// x+3) are folded into one of 16 precomputed two-input functions; the
// remaining five levels are plain multiplexers, so one output word costs
// about 140 word operations regardless of the rule.
class Stepper {
public:
    explicit Stepper(const RuleTable& rule);

    const RuleTable& rule() const { return rule_; }

    // next must already have in.size() cells; in and next must not alias.
    void step(const Lattice& in, Lattice& next);

private:
    void fill_halo(const Lattice& in);

    RuleTable rule_;
    // Truth table (4 bits) of each 4-entry block of the rule table.
    std::array<std::uint8_t, 32> block_function_{};
    // Cells (x - 3) mod n ... (x + n + 2) mod n, shifted so bit p holds cell p - 3.
    std::vector<std::uint64_t> halo_;
};

Lattice step(const RuleTable& rule, const Lattice& lattice);

enum class HaltReason { UniformFixedPoint, BudgetExhausted };

std::string_view to_string(HaltReason reason);

// True when the lattice is all-ON with outputs[127] = 1, or all-OFF with
// outputs[0] = 0.
bool is_uniform_fixed_point(const RuleTable& rule, const Lattice& lattice);

struct Trajectory {
    RuleTable rule;
    std::vector<Lattice> states;  // states[0] is the initial configuration
    std::optional<std::size_t> halted_at;
    HaltReason halt_reason = HaltReason::BudgetExhausted;

    const Lattice& initial() const { return states.front(); }
    const Lattice& final_state() const { return states.back(); }
};

// Iterates up to t_max steps, stopping at the first uniform fixed point when
// stop_at_fixed_point is set. t_max must be >= 1.
Trajectory run(const RuleTable& rule, const Lattice& initial, std::size_t t_max,
               bool stop_at_fixed_point = true);

// Same halting semantics as run() without recording intermediate states.
struct RunOutcome {
    Lattice final_state;
    std::size_t steps = 0;
    HaltReason halt_reason = HaltReason::BudgetExhausted;
};

RunOutcome run_to_end(Stepper& stepper, const Lattice& initial, std::size_t t_max);
RunOutcome run_to_end(const RuleTable& rule, const Lattice& initial, std::size_t t_max);

}  // namespace calab
