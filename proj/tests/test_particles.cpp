#include <doctest.h>

#include "calab/particles.hpp"
#include "calab/rng.hpp"
#include "calab/tasks.hpp"

using namespace calab;

namespace {

const char* kDas = "000F730F001FFF0F000FFF0F001FFF1F";

DomainCatalog zeros_and_ones(std::size_t min_run) {
    DomainCatalog cat;
    cat.domains.push_back({"0", 1, 1, {"0"}, min_run});
    cat.domains.push_back({"1", 1, 1, {"1"}, min_run});
    return cat;
}

// Block of ON cells shrinking by two cells per side each step, then gone.
std::vector<Lattice> shrinking_block() {
    std::vector<Lattice> rows;
    for (auto [first, last] : {std::pair{9, 21}, {11, 19}, {13, 17}, {0, 0}}) {
        Lattice row(30);
        for (int x = first; x < last; ++x) row.set(static_cast<std::size_t>(x), true);
        rows.push_back(row);
    }
    return rows;
}

void check_partition(const FilteredDiagram& fd) {
    std::size_t labeled = 0, boundary = 0;
    for (std::size_t t = 0; t < fd.rows(); ++t)
        for (std::size_t x = 0; x < fd.n_cells(); ++x) {
            const auto l = fd.label(t, x);
            if (l == FilteredDiagram::kBoundary)
                ++boundary;
            else if (l < fd.domain_names().size())
                ++labeled;
        }
    CHECK(labeled + boundary == fd.rows() * fd.n_cells());
    CHECK(boundary == fd.boundary_count());
}

}  // namespace

TEST_CASE("all-OFF diagram has no boundary under the all-0 domain") {
    DomainCatalog cat;
    cat.domains.push_back({"0", 1, 1, {"0"}, 7});
    const Trajectory traj = run(RuleTable::zeros(), Lattice(149), 10, false);
    const FilteredDiagram fd = label_sites(traj, cat);
    CHECK(fd.boundary_count() == 0);
    CHECK(fd.rows() == 11);
}

TEST_CASE("half-0 half-1 ring has exactly two boundary segments") {
    Lattice row(40);
    for (std::size_t x = 20; x < 40; ++x) row.set(x, true);
    const FilteredDiagram fd = label_sites(std::vector<Lattice>{row}, zeros_and_ones(4));
    const auto segs = boundary_segments(fd, 0);
    CHECK(segs.size() == 2);
    check_partition(fd);
}

TEST_CASE("empty catalog is rejected") {
    CHECK_THROWS_AS(label_sites(std::vector<Lattice>{Lattice(5)}, DomainCatalog{}), std::domain_error);
}

TEST_CASE("catalog validation") {
    DomainCatalog cat;
    cat.domains.push_back({"bad", 2, 1, {"0"}, 7});
    CHECK_THROWS_AS(cat.validate(), std::domain_error);
    cat.domains = {{"short", 3, 1, {"001"}, 2}};
    CHECK_THROWS_AS(cat.validate(), std::domain_error);
    CHECK_NOTHROW(DomainCatalog::density_default().validate());
}

TEST_CASE("pure-domain diagrams are fully labeled") {
    const DomainCatalog cat = DomainCatalog::density_default();
    SUBCASE("checkerboard, alternating in time") {
        std::vector<Lattice> rows;
        for (std::size_t t = 0; t < 8; ++t) {
            Lattice row(30);
            for (std::size_t x = 0; x < 30; ++x) row.set(x, (x + t) % 2 == 1);
            rows.push_back(row);
        }
        const FilteredDiagram fd = label_sites(rows, cat);
        CHECK(fd.boundary_count() == 0);
        CHECK(fd.label(3, 3) == 2);
    }
    SUBCASE("all-1") {
        const FilteredDiagram fd = label_sites(std::vector<Lattice>(5, Lattice::uniform(77, true)), cat);
        CHECK(fd.boundary_count() == 0);
        CHECK(fd.label(0, 0) == 1);
    }
}

TEST_CASE("partition and shift consistency on random runs") {
    const DomainCatalog cat = DomainCatalog::density_default();
    Substream rng(31, 0, 0);
    for (int i = 0; i < 40; ++i) {
        RuleTable rule;
        if (i % 2 == 0)
            rule = parse_hex(kDas);
        else
            for (std::size_t n = 0; n < kRuleEntries; ++n) rule.set(n, rng.coin());
        const std::size_t n = 21 + static_cast<std::size_t>(rng.below(60));
        const Lattice ic = gen_unbiased(n, rng);
        const auto k = static_cast<long long>(rng.below(n));
        const Trajectory a = run(rule, ic, 30, false);
        const Trajectory b = run(rule, ic.rotated(k), 30, false);
        const FilteredDiagram fa = label_sites(a, cat);
        const FilteredDiagram fb = label_sites(b, cat);
        check_partition(fa);
        bool same = true;
        for (std::size_t t = 0; t < fa.rows(); ++t)
            for (std::size_t x = 0; x < n; ++x)
                same = same && fb.label(t, (x + static_cast<std::size_t>(k)) % n) == fa.label(t, x);
        CHECK(same);
    }
}

TEST_CASE("overlapping claims go to the longer run") {
    // ON at 3, 7, 11: the period-4 domain matches cells 0..14, the all-0
    // domain matches 12..39 and wraps onto 0..2. Their interiors overlap at
    // cells 1 and 13, where the longer all-0 run wins despite coming second.
    Lattice row(40);
    for (std::size_t x : {3u, 7u, 11u}) row.set(x, true);
    DomainCatalog cat;
    cat.domains.push_back({"period4", 4, 1, {"0001"}, 4});
    cat.domains.push_back({"zero", 1, 1, {"0"}, 4});
    const FilteredDiagram fd = label_sites(std::vector<Lattice>{row}, cat);
    CHECK(fd.label(0, 1) == 1);
    CHECK(fd.label(0, 13) == 1);
    CHECK(fd.label(0, 5) == 0);
    CHECK(fd.label(0, 20) == 1);
    CHECK(fd.label(0, 12) == 0);
    CHECK(fd.boundary_count() == 0);
}

TEST_CASE("equal runs go to the earlier domain") {
    DomainCatalog cat;
    cat.domains.push_back({"a", 1, 1, {"0"}, 2});
    cat.domains.push_back({"b", 1, 1, {"0"}, 2});
    const FilteredDiagram fd = label_sites(std::vector<Lattice>{Lattice(12)}, cat);
    for (std::size_t x = 0; x < 12; ++x) CHECK(fd.label(0, x) == 0);
}

TEST_CASE("census of a uniform diagram is empty") {
    const FilteredDiagram fd = label_sites(std::vector<Lattice>(6, Lattice(50)), DomainCatalog::density_default());
    const Census c = census(fd);
    CHECK(c.events.empty());
    for (auto count : c.segment_counts) CHECK(count == 0);
}

TEST_CASE("two boundaries drifting together annihilate once") {
    SUBCASE("hand-built label grid") {
        FilteredDiagram fd(6, 40, {"0"});
        for (std::size_t t = 0; t < 6; ++t)
            for (std::size_t x = 0; x < 40; ++x) fd.set_label(t, x, 0);
        for (std::size_t t = 0; t < 5; ++t) {
            fd.set_label(t, 10 + t, FilteredDiagram::kBoundary);
            fd.set_label(t, 20 - t, FilteredDiagram::kBoundary);
        }
        const Census c = census(fd);
        CHECK(c.segment_counts == std::vector<std::size_t>{2, 2, 2, 2, 2, 0});
        REQUIRE(c.events.size() == 1);
        CHECK(c.events[0].kind == EventKind::Annihilate);
        CHECK(c.events[0].time == 5);
        CHECK(c.events[0].before.size() == 2);
        CHECK(c.events[0].after.empty());
    }
    SUBCASE("filtered cell diagram") {
        const FilteredDiagram fd = label_sites(shrinking_block(), zeros_and_ones(2));
        check_partition(fd);
        CHECK(boundary_segments(fd, 0).size() == 2);
        const Census c = census(fd);
        REQUIRE(c.events.size() == 1);
        CHECK(c.events[0].kind == EventKind::Annihilate);
        CHECK(c.events[0].time == 3);
    }
}

TEST_CASE("appear, merge and split are classified") {
    FilteredDiagram fd(4, 40, {"0"});
    for (std::size_t t = 0; t < 4; ++t)
        for (std::size_t x = 0; x < 40; ++x) fd.set_label(t, x, 0);
    // row 1: one segment appears; row 2: it splits; row 3: the halves merge.
    fd.set_label(1, 10, FilteredDiagram::kBoundary);
    fd.set_label(2, 8, FilteredDiagram::kBoundary);
    fd.set_label(2, 12, FilteredDiagram::kBoundary);
    fd.set_label(3, 10, FilteredDiagram::kBoundary);
    const Census c = census(fd);
    REQUIRE(c.events.size() == 3);
    CHECK(c.events[0].kind == EventKind::Appear);
    CHECK(c.events[1].kind == EventKind::Split);
    CHECK(c.events[2].kind == EventKind::Merge);
}

TEST_CASE("segments wrap around the ring") {
    FilteredDiagram fd(1, 10, {"0"});
    for (std::size_t x = 2; x < 8; ++x) fd.set_label(0, x, 0);
    const auto segs = boundary_segments(fd, 0);
    REQUIRE(segs.size() == 1);
    CHECK(segs[0] == Segment{8, 4});
    FilteredDiagram all(1, 10, {"0"});
    CHECK(boundary_segments(all, 0) == std::vector<Segment>{{0, 10}});
}

TEST_CASE("segment counts change only at emitted events") {
    const DomainCatalog cat = DomainCatalog::density_default();
    const RuleTable das = parse_hex(kDas);
    for (std::uint64_t i = 0; i < 10; ++i) {
        const Trajectory traj = run(das, evaluation_ic(IcDistribution::unbiased(), 149, 41, i), 320);
        const Census c = census(label_sites(traj, cat));
        std::size_t e = 0;
        for (std::size_t t = 1; t < c.segment_counts.size(); ++t) {
            const bool changed = c.segment_counts[t] != c.segment_counts[t - 1];
            bool has_event = false;
            while (e < c.events.size() && c.events[e].time == t) {
                has_event = true;
                ++e;
            }
            CHECK(changed == has_event);
        }
    }
}

TEST_CASE("Das rule: domains dominate and correct runs end without boundaries") {
    const DomainCatalog cat = DomainCatalog::density_default();
    const RuleTable das = parse_hex(kDas);
    const TaskSpec dens = TaskSpec::make(TaskKind::Density, 149);
    std::size_t correct_runs = 0;
    double worst_fraction = 0.0;
    for (std::uint64_t i = 0; i < 30; ++i) {
        const Lattice ic = evaluation_ic(IcDistribution::unbiased(), 149, 42, i);
        const Trajectory traj = run(das, ic, dens.t_max);
        const FilteredDiagram fd = label_sites(traj, cat);
        if (fd.rows() > 11) worst_fraction = std::max(worst_fraction, fd.boundary_fraction(10));
        if (adjudicate(das, ic, dens)) {
            ++correct_runs;
            CHECK(census(fd).segment_counts.back() == 0);
        }
    }
    CHECK(correct_runs > 15);
    CHECK(worst_fraction < 0.25);
}
