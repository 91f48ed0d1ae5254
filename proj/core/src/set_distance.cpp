#include "hac/set_distance.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace hac {

IndexSet::IndexSet(std::initializer_list<std::size_t> members)
    : IndexSet(std::vector<std::size_t>(members)) {}

IndexSet::IndexSet(std::vector<std::size_t> members) : members_(std::move(members)) {
    if (members_.empty()) throw std::invalid_argument("IndexSet: empty set");
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw std::invalid_argument("IndexSet: duplicate member");
}

bool IndexSet::contains(std::size_t i) const {
    return std::binary_search(members_.begin(), members_.end(), i);
}

IndexSet IndexSet::operator|(const IndexSet& other) const {
    std::vector<std::size_t> out;
    std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                   std::back_inserter(out));
    return IndexSet(std::move(out));
}

namespace {

void check_range(const IndexSet& s, const DistanceMatrix& d) {
    // members are sorted
    if (s.members().back() >= d.size())
        throw std::out_of_range("index " + std::to_string(s.members().back()) +
                                " out of range for matrix of size " + std::to_string(d.size()));
}

double min_to(std::size_t p, const IndexSet& b, const DistanceMatrix& d) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t q : b.members()) best = std::min(best, d(p, q));
    return best;
}

}  // namespace

double single_distance(const IndexSet& a, const IndexSet& b, const DistanceMatrix& d) {
    check_range(a, d);
    check_range(b, d);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t p : a.members())
        for (std::size_t q : b.members()) best = std::min(best, d(p, q));
    return best;
}

double complete_distance(const IndexSet& a, const IndexSet& b, const DistanceMatrix& d) {
    check_range(a, d);
    check_range(b, d);
    double best = 0.0;
    for (std::size_t p : a.members())
        for (std::size_t q : b.members()) best = std::max(best, d(p, q));
    return best;
}

double directed_hausdorff(const IndexSet& a, const IndexSet& b, const DistanceMatrix& d) {
    check_range(a, d);
    check_range(b, d);
    double worst = 0.0;
    for (std::size_t p : a.members()) worst = std::max(worst, min_to(p, b, d));
    return worst;
}

double hausdorff_distance(const IndexSet& a, const IndexSet& b, const DistanceMatrix& d) {
    return std::max(directed_hausdorff(a, b, d), directed_hausdorff(b, a, d));
}

}  // namespace hac
