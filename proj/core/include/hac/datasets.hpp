#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hac/metric.hpp"

namespace hac {

struct LabeledPointSet {
    std::vector<Point> points;
    std::vector<std::string> groups;  // one tag per point

    std::size_t size() const { return points.size(); }
    std::vector<std::size_t> indices_of(std::string_view group) const;
};

// 71 points: two unit-circle lens rims of 31 points centred at (-2.5, 0) and
// (2.5, 0), a 5-point bar between the inner rim points and a 2-point pupil
// inside each lens. Groups: left-glass, right-glass, bar, left-pupil,
// right-pupil.
LabeledPointSet glasses_dataset();

// Two uniformly sampled concentric circles around the origin, groups
// inner/outer. Throws std::invalid_argument for counts < 3 or radii not
// satisfying 0 < r_inner < r_outer.
LabeledPointSet concentric_dataset(std::size_t inner_count, std::size_t outer_count,
                                   double r_inner, double r_outer);

// A = {0, 1}, B = {9, 10}, C = {4, 6} on the x axis. Single linkage distance
// fails the triangle inequality here: d_s(A,B) = 8 > d_s(A,C) + d_s(C,B) = 6.
LabeledPointSet single_triangle_counterexample();

// Two stacked horizontal segment samples A (y = 0) and B (y = 2) inside the
// vertices of a wider U (group C). d_H(A,B) < d_H(A,C), d_H(B,C) while
// d_H(A u B, C) < d_H(A,B), so Hausdorff agglomeration steps back down.
LabeledPointSet backstep_dataset();

}  // namespace hac
