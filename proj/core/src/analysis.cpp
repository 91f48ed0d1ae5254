#include "hac/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hac {

namespace {

// Union-find over leaves and internal clusters, replaying merges in order.
class Replay {
public:
    explicit Replay(const Dendrogram& dendro)
        : dendro_(dendro), parent_(2 * dendro.n_leaves - 1) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    void apply(std::size_t count) {
        for (; applied_ < count; ++applied_) {
            const Merge& m = dendro_.merges[applied_];
            parent_[find(m.left)] = m.new_id;
            parent_[find(m.right)] = m.new_id;
        }
    }

    std::size_t applied() const { return applied_; }

    Partition partition() {
        const std::size_t n = dendro_.n_leaves;
        Partition p;
        p.assignment.assign(n, 0);
        std::vector<std::size_t> label_of_root(parent_.size(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t root = find(i);
            if (label_of_root[root] == 0) label_of_root[root] = ++p.k;
            p.assignment[i] = label_of_root[root];
        }
        return p;
    }

private:
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    const Dendrogram& dendro_;
    std::vector<std::size_t> parent_;
    std::size_t applied_ = 0;
};

}  // namespace

std::vector<std::size_t> Partition::cluster_sizes() const {
    std::vector<std::size_t> sizes(k, 0);
    for (std::size_t label : assignment) ++sizes.at(label - 1);
    return sizes;
}

std::vector<std::vector<std::size_t>> Partition::clusters() const {
    std::vector<std::vector<std::size_t>> out(k);
    for (std::size_t i = 0; i < assignment.size(); ++i) out.at(assignment[i] - 1).push_back(i);
    return out;
}

Partition cut_at_count(const Dendrogram& dendro, std::size_t k) {
    if (k < 1 || k > dendro.n_leaves)
        throw std::out_of_range("cut_at_count: k = " + std::to_string(k) + " outside [1, " +
                                std::to_string(dendro.n_leaves) + "]");
    Replay replay(dendro);
    replay.apply(dendro.n_leaves - k);
    return replay.partition();
}

Partition cut_at_height(const Dendrogram& dendro, double height) {
    std::size_t count = 0;
    while (count < dendro.merges.size() && dendro.merges[count].height <= height) ++count;
    Replay replay(dendro);
    replay.apply(count);
    return replay.partition();
}

double cluster_entropy(const Partition& p, std::size_t n_elements) {
    if (n_elements == 0 || p.k == 0 || p.assignment.empty())
        throw std::invalid_argument("cluster_entropy: empty partition");
    if (p.assignment.size() != n_elements)
        throw std::invalid_argument("cluster_entropy: partition covers " +
                                    std::to_string(p.assignment.size()) + " elements, expected " +
                                    std::to_string(n_elements));
    const double n = static_cast<double>(n_elements);
    double s = 0.0;
    for (std::size_t size : p.cluster_sizes()) {
        if (size == 0) throw std::invalid_argument("cluster_entropy: empty cluster label");
        const double frac = static_cast<double>(size) / n;
        s -= frac * std::log(frac);
    }
    // -0.0 for a single cluster
    return s == 0.0 ? 0.0 : s;
}

EntropyCurve entropy_curve(const Dendrogram& dendro) {
    EntropyCurve curve;
    curve.reserve(dendro.n_leaves);
    Replay replay(dendro);
    for (std::size_t step = 0; step <= dendro.merges.size(); ++step) {
        replay.apply(step);
        const Partition p = replay.partition();
        EntropyPoint pt;
        pt.step = step;
        pt.height = step == 0 ? 0.0 : dendro.merges[step - 1].height;
        pt.n_clusters = p.k;
        pt.entropy = cluster_entropy(p, dendro.n_leaves);
        curve.push_back(pt);
    }
    return curve;
}

std::vector<std::size_t> detect_backsteps(const Dendrogram& dendro) {
    std::vector<std::size_t> steps;
    double running_max = -std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < dendro.merges.size(); ++s) {
        const double h = dendro.merges[s].height;
        if (h < running_max) steps.push_back(s + 1);
        running_max = std::max(running_max, h);
    }
    return steps;
}

}  // namespace hac
