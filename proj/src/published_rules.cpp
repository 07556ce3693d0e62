#include "calab/published_rules.hpp"

#include <cctype>

namespace calab {

namespace {

constexpr PublishedRule kRules[] = {
    {"0504058705000F77037755837BFFB77F", "Crutchfield/Mitchell", true,
     {.773, .725, .707}, {.713, .73, .738}, {.664, .578, .548}},
    {"000F730F001FFF0F000FFF0F001FFF1F", "Das", true,
     {.823, .777, .763}, {.68, .684, .68}, {.733, .686, .675}},
    {"050055050500550555FF55FF55FF55FF", "Koza", true,
     {.823, .766, .73}, {.679, .674, .644}, {.727, .671, .642}},
    {"0760437B0700413507600F7F47F577FF", "Jouille", true,
     {.833, .788, .771}, {.656, .642, .62}, {.747, .736, .743}},
    {"0057005D005F005D085FFF7F405FFF5F", "", false,
     {.78, .705, .668}, {.77, .783, .784}, {.634, .501, .453}},
    {"005F1053405F045F005FFD5F005DFF5F", "", false,
     {.635, .510, .503}, {.84, .76, .754}, {.441, .261, .254}},
    {"005F005F005F005F005FFF6F005FFF5F", "", false,
     {.805, .755, .737}, {.624, .605, .581}, {.756, .738, .743}},
    {"0504070705002573077755B37BFFF77F", "", false,
     {.745, .65, .61}, {.501, .421, .371}, {.784, .793, .785}},
};

}  // namespace

std::optional<double> PublishedRule::performance(TaskKind task, std::size_t n_cells) const {
    for (std::size_t i = 0; i < kPublishedSizes.size(); ++i) {
        if (kPublishedSizes[i] != n_cells) continue;
        switch (task) {
            case TaskKind::Density:
                return density[i];
            case TaskKind::And:
                return logical_and[i];
            case TaskKind::Or:
                return logical_or[i];
        }
    }
    return std::nullopt;
}

std::span<const PublishedRule> published_rules() { return kRules; }

const PublishedRule* find_published(std::string_view hex) {
    for (const auto& rule : kRules) {
        if (rule.hex.size() != hex.size()) continue;
        bool same = true;
        for (std::size_t i = 0; i < hex.size() && same; ++i)
            same = std::toupper(static_cast<unsigned char>(hex[i])) == rule.hex[i];
        if (same) return &rule;
    }
    return nullptr;
}

}  // namespace calab
