#include "hac/linkage.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hac {

std::string_view to_string(Linkage linkage) {
    switch (linkage) {
        case Linkage::single: return "single";
        case Linkage::complete: return "complete";
        case Linkage::hausdorff: return "hausdorff";
    }
    return "unknown";
}

Linkage parse_linkage(std::string_view name) {
    if (name == "single") return Linkage::single;
    if (name == "complete") return Linkage::complete;
    if (name == "hausdorff") return Linkage::hausdorff;
    throw std::invalid_argument("unknown linkage '" + std::string(name) + "'");
}

std::vector<double> Dendrogram::heights() const {
    std::vector<double> h;
    h.reserve(merges.size());
    for (const auto& m : merges) h.push_back(m.height);
    return h;
}

void Dendrogram::validate() const {
    if (n_leaves == 0) throw std::invalid_argument("dendrogram: no leaves");
    if (!labels.empty() && labels.size() != n_leaves)
        throw std::invalid_argument("dendrogram: label count does not match n_leaves");
    if (merges.size() != n_leaves - 1)
        throw std::invalid_argument("dendrogram: expected " + std::to_string(n_leaves - 1) +
                                    " merges, got " + std::to_string(merges.size()));
    std::vector<bool> used(2 * n_leaves - 1, false);
    for (std::size_t s = 0; s < merges.size(); ++s) {
        const Merge& m = merges[s];
        const std::string where = "dendrogram: merge " + std::to_string(s + 1) + ": ";
        if (m.step != s + 1) throw std::invalid_argument(where + "step out of order");
        if (m.new_id != n_leaves + s) throw std::invalid_argument(where + "bad new_id");
        if (m.left == m.right) throw std::invalid_argument(where + "left == right");
        for (ClusterId id : {m.left, m.right}) {
            if (id >= m.new_id) throw std::invalid_argument(where + "refers to a future cluster");
            if (used[id]) throw std::invalid_argument(where + "cluster " + std::to_string(id) + " merged twice");
            used[id] = true;
        }
        if (!std::isfinite(m.height) || m.height < 0.0)
            throw std::invalid_argument(where + "height must be finite and nonnegative");
    }
}

// ClusterState

ClusterState::ClusterState(const DistanceMatrix& d)
    : n_(d.size()),
      next_id_(d.size()),
      slot_of_(d.size() == 0 ? 0 : 2 * d.size() - 1, npos),
      members_(d.size()),
      min_table_(d.size() * d.size()),
      max_table_(d.size() * d.size()) {
    active_.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        active_.push_back(i);
        slot_of_[i] = i;
        members_[i] = {i};
    }
    for (std::size_t p = 0; p < n_; ++p) {
        for (std::size_t c = 0; c < n_; ++c) {
            min_table_[p * n_ + c] = d(p, c);
            max_table_[p * n_ + c] = d(p, c);
        }
    }
}

bool ClusterState::is_active(ClusterId id) const {
    return id < slot_of_.size() && slot_of_[id] != npos;
}

std::size_t ClusterState::slot_of(ClusterId id) const {
    if (!is_active(id)) throw std::invalid_argument("cluster " + std::to_string(id) + " is not active");
    return slot_of_[id];
}

std::span<const std::size_t> ClusterState::members(ClusterId id) const { return members_[slot_of(id)]; }

double ClusterState::point_min(std::size_t p, ClusterId c) const {
    if (p >= n_) throw std::out_of_range("point index out of range");
    return min_table_[p * n_ + slot_of(c)];
}

double ClusterState::point_max(std::size_t p, ClusterId c) const {
    if (p >= n_) throw std::out_of_range("point index out of range");
    return max_table_[p * n_ + slot_of(c)];
}

double ClusterState::pair_distance(ClusterId a, ClusterId b, Linkage linkage) const {
    const std::size_t sa = slot_of(a);
    const std::size_t sb = slot_of(b);
    if (sa == sb) throw std::invalid_argument("pair_distance: cluster paired with itself");

    switch (linkage) {
        case Linkage::single: {
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t p : members_[sa]) best = std::min(best, min_table_[p * n_ + sb]);
            return best;
        }
        case Linkage::complete: {
            double best = 0.0;
            for (std::size_t p : members_[sa]) best = std::max(best, max_table_[p * n_ + sb]);
            return best;
        }
        case Linkage::hausdorff: {
            double worst = 0.0;
            for (std::size_t p : members_[sa]) worst = std::max(worst, min_table_[p * n_ + sb]);
            for (std::size_t p : members_[sb]) worst = std::max(worst, min_table_[p * n_ + sa]);
            return worst;
        }
    }
    throw std::invalid_argument("pair_distance: unknown linkage");
}

ClusterId ClusterState::merge(ClusterId a, ClusterId b) {
    const std::size_t sa = slot_of(a);
    const std::size_t sb = slot_of(b);
    if (sa == sb) throw std::invalid_argument("merge: cluster merged with itself");

    for (std::size_t p = 0; p < n_; ++p) {
        double* row_min = &min_table_[p * n_];
        double* row_max = &max_table_[p * n_];
        row_min[sa] = std::min(row_min[sa], row_min[sb]);
        row_max[sa] = std::max(row_max[sa], row_max[sb]);
    }

    std::vector<std::size_t> joined;
    joined.reserve(members_[sa].size() + members_[sb].size());
    std::merge(members_[sa].begin(), members_[sa].end(), members_[sb].begin(), members_[sb].end(),
               std::back_inserter(joined));
    members_[sa] = std::move(joined);
    members_[sb].clear();

    const ClusterId id = next_id_++;
    slot_of_[a] = npos;
    slot_of_[b] = npos;
    slot_of_[id] = sa;
    active_.erase(std::remove_if(active_.begin(), active_.end(),
                                 [a, b](ClusterId c) { return c == a || c == b; }),
                  active_.end());
    active_.push_back(id);  // new ids exceed all existing ones
    return id;
}

// Agglomerator

Agglomerator::Agglomerator(const DistanceMatrix& d, Linkage linkage, TiePolicy ties)
    : linkage_(linkage),
      ties_(ties),
      rng_(ties.seed()),
      state_(d),
      n_(d.size()),
      cache_(d.size() * d.size(), 0.0) {
    if (n_ == 0) throw std::invalid_argument("agglomerate: empty matrix");
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) cache_[i * n_ + j] = d(i, j);
    }
    dendrogram_.n_leaves = n_;
    dendrogram_.labels = d.labels();
    dendrogram_.linkage = linkage;
    dendrogram_.merges.reserve(n_ - 1);
}

double Agglomerator::candidate_distance(ClusterId a, ClusterId b) const {
    if (!state_.is_active(a) || !state_.is_active(b) || a == b)
        throw std::invalid_argument("candidate_distance: need two distinct active clusters");
    return cache_[state_.slot_of(a) * n_ + state_.slot_of(b)];
}

void Agglomerator::refresh_row(ClusterId id) {
    const std::size_t s = state_.slot_of(id);
    for (ClusterId other : state_.active()) {
        if (other == id) continue;
        const std::size_t o = state_.slot_of(other);
        const double v = state_.pair_distance(id, other, linkage_);
        cache_[s * n_ + o] = v;
        cache_[o * n_ + s] = v;
    }
}

const Merge& Agglomerator::step() {
    if (done()) throw std::logic_error("Agglomerator::step: agglomeration already complete");

    const auto& active = state_.active();
    double best = std::numeric_limits<double>::infinity();
    ClusterId best_a = 0, best_b = 0;
    std::vector<std::pair<ClusterId, ClusterId>> tied;

    // Ascending scan with strict '<' keeps the lexicographically smallest pair.
    for (std::size_t i = 0; i < active.size(); ++i) {
        const double* row = &cache_[state_.slot_of(active[i]) * n_];
        for (std::size_t j = i + 1; j < active.size(); ++j) {
            const double v = row[state_.slot_of(active[j])];
            if (v < best) {
                best = v;
                best_a = active[i];
                best_b = active[j];
                if (ties_.is_random()) {
                    tied.clear();
                    tied.emplace_back(best_a, best_b);
                }
            } else if (v == best && ties_.is_random()) {
                tied.emplace_back(active[i], active[j]);
            }
        }
    }
    if (ties_.is_random() && tied.size() > 1) {
        // Modulo instead of a distribution object keeps seeds portable across
        // standard library implementations.
        std::tie(best_a, best_b) = tied[rng_() % tied.size()];
    }

    const ClusterId id = state_.merge(best_a, best_b);
    refresh_row(id);

    Merge m;
    m.left = best_a;
    m.right = best_b;
    m.height = best;
    m.new_id = id;
    m.step = dendrogram_.merges.size() + 1;
    dendrogram_.merges.push_back(m);
    return dendrogram_.merges.back();
}

Dendrogram agglomerate(const DistanceMatrix& d, Linkage linkage, TiePolicy ties) {
    d.validate();
    Agglomerator engine(d, linkage, ties);
    while (!engine.done()) engine.step();
    return engine.dendrogram();
}

}  // namespace hac
