#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "calab/tasks.hpp"

namespace calab {

// Reference unbiased performance of evolved radius-3 rules (100000 random
// ICs per cell) for the density, AND and OR tasks at three lattice sizes.
struct PublishedRule {
    std::string_view hex;
    std::string_view name;  // empty for unnamed rules
    bool density_seed;      // one of the density rules that seeded the GA
    std::array<double, 3> density;
    std::array<double, 3> logical_and;
    std::array<double, 3> logical_or;

    // nullopt when n_cells is not one of the published sizes.
    std::optional<double> performance(TaskKind task, std::size_t n_cells) const;
};

inline constexpr std::array<std::size_t, 3> kPublishedSizes = {149, 599, 999};

std::span<const PublishedRule> published_rules();
// Case-insensitive hex lookup.
const PublishedRule* find_published(std::string_view hex);

}  // namespace calab
