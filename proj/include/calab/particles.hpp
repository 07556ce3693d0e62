#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "calab/engine.hpp"
#include "calab/lattice.hpp"

namespace calab {

// A spatially and temporally periodic pattern. tile[r][c] is the cell value
// at spatial offset c (mod period) on rows t with t mod temporal_period == r.
struct Domain {
    std::string name;
    std::size_t spatial_period = 1;
    std::size_t temporal_period = 1;
    std::vector<std::string> tile;  // temporal_period rows of spatial_period '0'/'1'
    std::size_t min_run = 7;        // shortest matching run that counts

    bool cell(std::size_t row, std::size_t col) const {
        return tile[row % temporal_period][col % spatial_period] == '1';
    }
    void validate() const;
};

struct DomainCatalog {
    std::vector<Domain> domains;

    // all-0, all-1 and the period-2 checkerboard, minimum run 7.
    static DomainCatalog density_default(std::size_t min_run = 2 * kRadius + 1);
    void validate() const;
};

// Label grid over a space-time diagram; labels index into domain_names, or
// are kBoundary.
class FilteredDiagram {
public:
    static constexpr std::uint16_t kBoundary = 0xFFFF;

    FilteredDiagram(std::size_t rows, std::size_t n_cells, std::vector<std::string> domain_names);

    std::size_t rows() const { return rows_; }
    std::size_t n_cells() const { return n_; }
    const std::vector<std::string>& domain_names() const { return names_; }

    std::uint16_t label(std::size_t t, std::size_t x) const { return labels_[t * n_ + x]; }
    void set_label(std::size_t t, std::size_t x, std::uint16_t value) { labels_[t * n_ + x] = value; }
    bool is_boundary(std::size_t t, std::size_t x) const { return label(t, x) == kBoundary; }

    std::size_t boundary_count() const;
    std::size_t boundary_count(std::size_t first_row) const;
    std::size_t domain_count() const;
    // Fraction of BOUNDARY sites over rows [first_row, rows()); 0 when empty.
    double boundary_fraction(std::size_t first_row = 0) const;

private:
    std::size_t rows_;
    std::size_t n_;
    std::vector<std::string> names_;
    std::vector<std::uint16_t> labels_;
};

FilteredDiagram label_sites(const std::vector<Lattice>& rows, const DomainCatalog& catalog);
FilteredDiagram label_sites(const Trajectory& trajectory, const DomainCatalog& catalog);

// A maximal cyclic run of BOUNDARY sites: cells start, start+1, ... (mod n).
struct Segment {
    std::size_t start = 0;
    std::size_t length = 0;
    friend bool operator==(const Segment&, const Segment&) = default;
};

std::vector<Segment> boundary_segments(const FilteredDiagram& fd, std::size_t row);

enum class EventKind { Appear, Annihilate, Merge, Split };

std::string_view to_string(EventKind kind);

struct ParticleEvent {
    std::size_t time = 0;  // row at which the new segment configuration is observed
    EventKind kind = EventKind::Appear;
    std::vector<Segment> before;
    std::vector<Segment> after;
};

struct Census {
    std::vector<ParticleEvent> events;
    std::vector<std::size_t> segment_counts;  // per row
};

// Segments on consecutive rows are linked when their intervals, widened by
// `reach` cells on each side, overlap; linked groups whose segment count
// changes yield one event each. Events are only emitted on rows where the
// total segment count changes.
Census census(const FilteredDiagram& fd, std::size_t reach = kRadius);

}  // namespace calab
