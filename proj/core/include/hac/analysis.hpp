#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hac/linkage.hpp"

namespace hac {

// Total allocation element -> label, labels 1..k numbered by the smallest
// member of each cluster.
struct Partition {
    std::vector<std::size_t> assignment;
    std::size_t k = 0;

    std::vector<std::size_t> cluster_sizes() const;
    // clusters()[label - 1] lists the members in ascending order.
    std::vector<std::vector<std::size_t>> clusters() const;
    bool operator==(const Partition&) const = default;
};

struct EntropyPoint {
    std::size_t step = 0;  // 0 for the all-singletons level
    double height = 0.0;   // height of the merge at this step, 0 at step 0
    std::size_t n_clusters = 0;
    double entropy = 0.0;
};

using EntropyCurve = std::vector<EntropyPoint>;

// Applies the first n - k merges. Throws std::out_of_range unless 1 <= k <= n.
Partition cut_at_count(const Dendrogram& dendro, std::size_t k);

// Applies merges in order, stopping before the first one higher than
// `height`. With backsteps this differs from filtering all merges <= height,
// but the result is always a level of the hierarchy, so cuts stay nested.
Partition cut_at_height(const Dendrogram& dendro, double height);

// -sum P(k) ln P(k) with P(k) = |cluster k| / n_elements.
double cluster_entropy(const Partition& p, std::size_t n_elements);

// One point per level from n singletons (ln n) down to one cluster (0).
EntropyCurve entropy_curve(const Dendrogram& dendro);

// Steps (1-based) whose height is below the running maximum of all earlier
// merges.
std::vector<std::size_t> detect_backsteps(const Dendrogram& dendro);

}  // namespace hac
