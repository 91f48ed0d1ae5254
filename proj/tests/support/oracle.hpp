#pragma once

// Test-only reference implementations. Nothing here calls into the library's
// distance or linkage code, so results can be compared against it.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "hac/metric.hpp"
#include "hac/set_distance.hpp"

namespace hac::testing {

using Matrix = std::vector<std::vector<double>>;

inline std::vector<Point> random_points(std::mt19937_64& rng, std::size_t n, std::size_t dim = 2,
                                        double scale = 10.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    std::vector<Point> pts(n);
    for (auto& p : pts) {
        p.coords.resize(dim);
        for (double& c : p.coords) c = u(rng);
    }
    return pts;
}

inline IndexSet random_index_set(std::mt19937_64& rng, std::size_t n, std::size_t max_size) {
    std::uniform_int_distribution<std::size_t> size_dist(1, std::min(n, max_size));
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(size_dist(rng));
    return IndexSet(all);
}

inline std::vector<ReturnSeries> random_series(std::mt19937_64& rng, std::size_t count, std::size_t length) {
    std::normal_distribution<double> g(0.0, 0.01);
    std::vector<ReturnSeries> out(count);
    std::vector<double> common(length);
    for (double& c : common) c = g(rng);
    for (std::size_t i = 0; i < count; ++i) {
        out[i].label = "S" + std::to_string(i);
        for (std::size_t t = 0; t < length; ++t) out[i].values.push_back(0.5 * common[t] + g(rng));
    }
    return out;
}

inline Matrix euclid_matrix(const std::vector<Point>& pts) {
    Matrix m(pts.size(), std::vector<double>(pts.size(), 0.0));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < pts[i].dim(); ++k) {
                const double d = pts[i].coords[k] - pts[j].coords[k];
                s += d * d;
            }
            m[i][j] = std::sqrt(s);
        }
    return m;
}

enum class RefLinkage { single, complete, hausdorff };

inline double ref_set_distance(const Matrix& d, const std::vector<std::size_t>& a,
                               const std::vector<std::size_t>& b, RefLinkage kind) {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (auto i : a)
        for (auto j : b) {
            lo = std::min(lo, d[i][j]);
            hi = std::max(hi, d[i][j]);
        }
    if (kind == RefLinkage::single) return lo;
    if (kind == RefLinkage::complete) return hi;
    auto directed = [&](const auto& x, const auto& y) {
        double worst = 0.0;
        for (auto i : x) {
            double best = std::numeric_limits<double>::infinity();
            for (auto j : y) best = std::min(best, d[i][j]);
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

struct RefMerge {
    std::vector<std::size_t> members;  // sorted union
    double height;
};

// Naive agglomeration: recompute every pair from scratch each step and take
// the lexicographically first minimum over clusters ordered by creation.
inline std::vector<RefMerge> reference_agglomerate(const Matrix& d, RefLinkage kind) {
    std::vector<std::vector<std::size_t>> clusters;
    for (std::size_t i = 0; i < d.size(); ++i) clusters.push_back({i});
    std::vector<RefMerge> out;
    while (clusters.size() > 1) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < clusters.size(); ++i)
            for (std::size_t j = i + 1; j < clusters.size(); ++j) {
                const double v = ref_set_distance(d, clusters[i], clusters[j], kind);
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        std::vector<std::size_t> u = clusters[bi];
        u.insert(u.end(), clusters[bj].begin(), clusters[bj].end());
        std::sort(u.begin(), u.end());
        clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(bj));
        clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(bi));
        clusters.push_back(u);
        out.push_back({u, best});
    }
    return out;
}

// Groups after replaying merges described as member sets; canonical form is a
// set of sorted member lists.
inline std::set<std::vector<std::size_t>> replay_groups(std::size_t n,
                                                        const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                                        std::size_t count) {
    std::vector<std::size_t> parent(2 * n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x];
        return x;
    };
    for (std::size_t s = 0; s < count; ++s) {
        parent[find(pairs[s].first)] = n + s;
        parent[find(pairs[s].second)] = n + s;
    }
    std::vector<std::vector<std::size_t>> by_root(2 * n);
    for (std::size_t i = 0; i < n; ++i) by_root[find(i)].push_back(i);
    std::set<std::vector<std::size_t>> groups;
    for (auto& g : by_root)
        if (!g.empty()) groups.insert(g);
    return groups;
}

}  // namespace hac::testing
