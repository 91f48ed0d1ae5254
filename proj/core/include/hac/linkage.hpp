#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hac/metric.hpp"

namespace hac {

enum class Linkage { single, complete, hausdorff };

std::string_view to_string(Linkage linkage);
// Accepts "single", "complete", "hausdorff".
Linkage parse_linkage(std::string_view name);

// How to choose among pairs at exactly equal distance (no epsilon).
class TiePolicy {
public:
    static TiePolicy lexicographic() { return TiePolicy(false, 0); }
    static TiePolicy seeded_random(std::uint64_t seed) { return TiePolicy(true, seed); }

    bool is_random() const { return random_; }
    std::uint64_t seed() const { return seed_; }

private:
    TiePolicy(bool random, std::uint64_t seed) : random_(random), seed_(seed) {}
    bool random_;
    std::uint64_t seed_;
};

// Leaves are 0..n-1; the merge at step s (1-based) creates cluster n + s - 1.
using ClusterId = std::size_t;

struct Merge {
    ClusterId left = 0;   // smaller id
    ClusterId right = 0;  // larger id
    double height = 0.0;
    ClusterId new_id = 0;
    std::size_t step = 0;

    bool operator==(const Merge&) const = default;
};

struct Dendrogram {
    std::size_t n_leaves = 0;
    std::vector<std::string> labels;
    Linkage linkage = Linkage::single;
    std::vector<Merge> merges;

    std::vector<double> heights() const;
    // Structural checks: merge count, id numbering, single use of every id,
    // finite nonnegative heights. Throws std::invalid_argument.
    void validate() const;
};

// Active clusters plus, for every point p and active cluster C, the minimum
// and maximum of d(p, c) over c in C. Every linkage distance is a scan over
// one of the two tables:
//   single    = min_{p in A} min_table[p][B]
//   complete  = max_{p in A} max_table[p][B]
//   hausdorff = max(max_{p in A} min_table[p][B], max_{p in B} min_table[p][A])
// Merging updates both tables column-wise in O(n); no Lance-Williams style
// recurrence exists for the Hausdorff case.
class ClusterState {
public:
    explicit ClusterState(const DistanceMatrix& d);

    std::size_t n_points() const { return n_; }
    // Ascending.
    const std::vector<ClusterId>& active() const { return active_; }
    bool is_active(ClusterId id) const;
    std::span<const std::size_t> members(ClusterId id) const;

    double point_min(std::size_t p, ClusterId c) const;
    double point_max(std::size_t p, ClusterId c) const;

    double pair_distance(ClusterId a, ClusterId b, Linkage linkage) const;

    // Replaces a and b by their union; returns the new id.
    // Throws std::invalid_argument for inactive or equal ids.
    ClusterId merge(ClusterId a, ClusterId b);

    ClusterId next_id() const { return next_id_; }

    // Storage column of an active cluster. A merge keeps the column of its
    // first argument, so columns are reused.
    std::size_t slot_of(ClusterId id) const;

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t n_ = 0;
    ClusterId next_id_ = 0;
    std::vector<ClusterId> active_;
    std::vector<std::size_t> slot_of_;                 // by cluster id
    std::vector<std::vector<std::size_t>> members_;    // by slot
    std::vector<double> min_table_;                    // [point * n + slot]
    std::vector<double> max_table_;
};

// Step-wise agglomeration engine. Candidate distances between active clusters
// are cached in a slot x slot table; after a merge only the row of the new
// cluster is recomputed. O(n^2) memory, O(n^3) time worst case.
class Agglomerator {
public:
    Agglomerator(const DistanceMatrix& d, Linkage linkage,
                 TiePolicy ties = TiePolicy::lexicographic());

    bool done() const { return state_.active().size() <= 1; }
    const ClusterState& state() const { return state_; }
    Linkage linkage() const { return linkage_; }

    // Cached inter-cluster distance between two distinct active clusters.
    double candidate_distance(ClusterId a, ClusterId b) const;

    // Merges the closest pair. Precondition: !done().
    const Merge& step();

    const Dendrogram& dendrogram() const { return dendrogram_; }

private:
    void refresh_row(ClusterId id);

    Linkage linkage_;
    TiePolicy ties_;
    std::mt19937_64 rng_;
    ClusterState state_;
    std::size_t n_;
    std::vector<double> cache_;  // [slot * n + slot]
    Dendrogram dendrogram_;
};

// Validates d, then runs the Agglomerator to completion. n = 1 gives no merges.
Dendrogram agglomerate(const DistanceMatrix& d, Linkage linkage,
                       TiePolicy ties = TiePolicy::lexicographic());

}  // namespace hac
