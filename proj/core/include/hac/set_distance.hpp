#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "hac/metric.hpp"

namespace hac {

// Nonempty sorted set of element indices into a DistanceMatrix.
class IndexSet {
public:
    IndexSet(std::initializer_list<std::size_t> members);
    explicit IndexSet(std::vector<std::size_t> members);

    std::span<const std::size_t> members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(std::size_t i) const;

    // Set union.
    IndexSet operator|(const IndexSet& other) const;
    bool operator==(const IndexSet&) const = default;

private:
    std::vector<std::size_t> members_;
};

// All four scan the |A| x |B| submatrix, O(|A| |B|). Indices out of range
// throw std::out_of_range.

// min over pairs
double single_distance(const IndexSet& a, const IndexSet& b, const DistanceMatrix& d);
// max over pairs
double complete_distance(const IndexSet& a, const IndexSet& b, const DistanceMatrix& d);
// max over a in A of min over b in B; not symmetric
double directed_hausdorff(const IndexSet& a, const IndexSet& b, const DistanceMatrix& d);
double hausdorff_distance(const IndexSet& a, const IndexSet& b, const DistanceMatrix& d);

}  // namespace hac
