#include "calab/particles.hpp"

#include <numeric>
#include <stdexcept>

namespace calab {

void Domain::validate() const {
    if (name.empty()) throw std::domain_error("domain needs a name");
    if (spatial_period < 1 || temporal_period < 1)
        throw std::domain_error("domain '" + name + "': periods must be >= 1");
    if (tile.size() != temporal_period)
        throw std::domain_error("domain '" + name + "': tile needs " +
                                std::to_string(temporal_period) + " rows");
    for (const auto& row : tile) {
        if (row.size() != spatial_period)
            throw std::domain_error("domain '" + name + "': tile rows need " +
                                    std::to_string(spatial_period) + " cells");
        if (row.find_first_not_of("01") != std::string::npos)
            throw std::domain_error("domain '" + name + "': tile cells must be '0' or '1'");
    }
    if (min_run < spatial_period)
        throw std::domain_error("domain '" + name + "': minimum run shorter than spatial period");
}

DomainCatalog DomainCatalog::density_default(std::size_t min_run) {
    DomainCatalog cat;
    cat.domains.push_back({"0", 1, 1, {"0"}, min_run});
    cat.domains.push_back({"1", 1, 1, {"1"}, min_run});
    cat.domains.push_back({"checkerboard", 2, 2, {"01", "10"}, min_run});
    return cat;
}

void DomainCatalog::validate() const {
    if (domains.empty()) throw std::domain_error("domain catalog is empty");
    if (domains.size() >= FilteredDiagram::kBoundary)
        throw std::domain_error("domain catalog too large");
    for (const auto& d : domains) d.validate();
}

FilteredDiagram::FilteredDiagram(std::size_t rows, std::size_t n_cells,
                                 std::vector<std::string> domain_names)
    : rows_(rows), n_(n_cells), names_(std::move(domain_names)), labels_(rows * n_cells, kBoundary) {}

std::size_t FilteredDiagram::boundary_count() const { return boundary_count(0); }

std::size_t FilteredDiagram::boundary_count(std::size_t first_row) const {
    std::size_t total = 0;
    for (std::size_t i = first_row * n_; i < labels_.size(); ++i) total += labels_[i] == kBoundary;
    return total;
}

std::size_t FilteredDiagram::domain_count() const { return labels_.size() - boundary_count(); }

double FilteredDiagram::boundary_fraction(std::size_t first_row) const {
    if (first_row >= rows_ || n_ == 0) return 0.0;
    return static_cast<double>(boundary_count(first_row)) /
           static_cast<double>((rows_ - first_row) * n_);
}

namespace {

// Labels one row. For every domain and spatial phase the row is scanned twice
// around the ring with the pattern column advancing continuously, so each
// maximal cyclic run of matching cells is seen whole. A run of at least
// min_run cells claims its interior (the end cells stay unclaimed, they touch
// a mismatch); a run covering the whole ring claims every cell. Conflicting
// claims go to the longer run, then to the earlier domain.
void label_row(const Lattice& row, std::size_t t, const DomainCatalog& catalog,
               FilteredDiagram& fd) {
    const std::size_t n = row.size();
    std::vector<std::size_t> claim_len(n, 0);
    for (std::size_t d = 0; d < catalog.domains.size(); ++d) {
        const Domain& dom = catalog.domains[d];
        for (std::size_t phase = 0; phase < dom.spatial_period; ++phase) {
            auto claim = [&](std::size_t begin, std::size_t end) {
                const std::size_t len = end - begin;
                if (len < dom.min_run) return;
                std::size_t first = begin + 1;
                std::size_t last = end - 1;
                std::size_t eff = len;
                if (len >= n) {
                    first = begin;
                    last = begin + n;
                    eff = n;
                }
                for (std::size_t i = first; i < last; ++i) {
                    const std::size_t x = i % n;
                    if (eff > claim_len[x]) {
                        claim_len[x] = eff;
                        fd.set_label(t, x, static_cast<std::uint16_t>(d));
                    }
                }
            };
            std::size_t run_start = 0;
            bool in_run = false;
            for (std::size_t i = 0; i < 2 * n; ++i) {
                const bool match = row.get(i % n) == dom.cell(t, i + phase);
                if (match && !in_run) {
                    run_start = i;
                    in_run = true;
                } else if (!match && in_run) {
                    claim(run_start, i);
                    in_run = false;
                }
            }
            if (in_run) claim(run_start, 2 * n);
        }
    }
}

std::size_t forward_distance(std::size_t from, std::size_t to, std::size_t n) {
    return (to + n - from % n) % n;
}

bool widened_overlap(const Segment& a, const Segment& b, std::size_t reach, std::size_t n) {
    const std::size_t alen = a.length + 2 * reach;
    const std::size_t blen = b.length + 2 * reach;
    if (alen >= n || blen >= n) return true;
    const std::size_t astart = (a.start + n - reach % n) % n;
    const std::size_t bstart = (b.start + n - reach % n) % n;
    return forward_distance(astart, bstart, n) < alen || forward_distance(bstart, astart, n) < blen;
}

struct DisjointSet {
    std::vector<std::size_t> parent;
    explicit DisjointSet(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

FilteredDiagram label_sites(const std::vector<Lattice>& rows, const DomainCatalog& catalog) {
    catalog.validate();
    std::vector<std::string> names;
    for (const auto& d : catalog.domains) names.push_back(d.name);
    const std::size_t n = rows.empty() ? 0 : rows.front().size();
    FilteredDiagram fd(rows.size(), n, std::move(names));
    for (std::size_t t = 0; t < rows.size(); ++t) {
        if (rows[t].size() != n) throw std::invalid_argument("diagram rows differ in width");
        label_row(rows[t], t, catalog, fd);
    }
    return fd;
}

FilteredDiagram label_sites(const Trajectory& trajectory, const DomainCatalog& catalog) {
    return label_sites(trajectory.states, catalog);
}

std::vector<Segment> boundary_segments(const FilteredDiagram& fd, std::size_t row) {
    const std::size_t n = fd.n_cells();
    std::vector<Segment> segs;
    std::size_t anchor = n;
    for (std::size_t x = 0; x < n; ++x)
        if (!fd.is_boundary(row, x)) {
            anchor = x;
            break;
        }
    if (anchor == n) {
        if (n > 0) segs.push_back({0, n});
        return segs;
    }
    // Scan one full turn starting right after a domain site so no segment
    // straddles the scan origin.
    std::size_t run_start = 0;
    bool in_run = false;
    for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t x = (anchor + i) % n;
        const bool b = fd.is_boundary(row, x);
        if (b && !in_run) {
            run_start = x;
            in_run = true;
        } else if (!b && in_run) {
            segs.push_back({run_start, forward_distance(run_start, x, n)});
            in_run = false;
        }
    }
    return segs;
}

std::string_view to_string(EventKind kind) {
    switch (kind) {
        case EventKind::Appear:
            return "appear";
        case EventKind::Annihilate:
            return "annihilate";
        case EventKind::Merge:
            return "merge";
        case EventKind::Split:
            return "split";
    }
    return "unknown";
}

Census census(const FilteredDiagram& fd, std::size_t reach) {
    Census out;
    const std::size_t n = fd.n_cells();
    std::vector<Segment> prev;
    for (std::size_t t = 0; t < fd.rows(); ++t) {
        std::vector<Segment> cur = boundary_segments(fd, t);
        out.segment_counts.push_back(cur.size());
        if (t > 0 && cur.size() != prev.size()) {
            const std::size_t p = prev.size();
            DisjointSet sets(p + cur.size());
            auto seg = [&](std::size_t i) -> const Segment& { return i < p ? prev[i] : cur[i - p]; };
            for (std::size_t i = 0; i < p + cur.size(); ++i)
                for (std::size_t j = i + 1; j < p + cur.size(); ++j)
                    if (widened_overlap(seg(i), seg(j), reach, n)) sets.unite(i, j);

            std::vector<bool> seen(p + cur.size(), false);
            for (std::size_t i = 0; i < p + cur.size(); ++i) {
                const std::size_t root = sets.find(i);
                if (seen[root]) continue;
                seen[root] = true;
                ParticleEvent ev;
                ev.time = t;
                for (std::size_t j = 0; j < p + cur.size(); ++j) {
                    if (sets.find(j) != root) continue;
                    (j < p ? ev.before : ev.after).push_back(seg(j));
                }
                const std::size_t a = ev.before.size();
                const std::size_t b = ev.after.size();
                if (a == b) continue;
                if (b == 0)
                    ev.kind = EventKind::Annihilate;
                else if (a == 0)
                    ev.kind = EventKind::Appear;
                else if (a > b)
                    ev.kind = EventKind::Merge;
                else
                    ev.kind = EventKind::Split;
                out.events.push_back(std::move(ev));
            }
        }
        prev = std::move(cur);
    }
    return out;
}

}  // namespace calab
