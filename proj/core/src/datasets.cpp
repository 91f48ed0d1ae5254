#include "hac/datasets.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hac {

std::vector<std::size_t> LabeledPointSet::indices_of(std::string_view group) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < groups.size(); ++i)
        if (groups[i] == group) out.push_back(i);
    return out;
}

namespace {

void add(LabeledPointSet& set, double x, double y, const char* group) {
    set.points.push_back(Point{x, y});
    set.groups.emplace_back(group);
}

void add_circle(LabeledPointSet& set, double cx, double cy, double radius, std::size_t count,
                double phase, const char* group) {
    for (std::size_t k = 0; k < count; ++k) {
        const double t = phase + 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count);
        add(set, cx + radius * std::cos(t), cy + radius * std::sin(t), group);
    }
}

}  // namespace

LabeledPointSet glasses_dataset() {
    constexpr std::size_t rim_points = 31;
    constexpr double lens_x = 2.5;
    constexpr double pupil_offset = 0.05;

    LabeledPointSet set;
    // Phases chosen so each rim contains its inner point (+-1.5, 0).
    add_circle(set, -lens_x, 0.0, 1.0, rim_points, 0.0, "left-glass");
    add_circle(set, lens_x, 0.0, 1.0, rim_points, std::numbers::pi, "right-glass");

    // bar: interior points of the segment between the inner rim points
    const double inner = lens_x - 1.0;
    for (int i = 1; i <= 5; ++i) add(set, -inner + 2.0 * inner * i / 6.0, 0.0, "bar");

    add(set, -lens_x - pupil_offset, 0.0, "left-pupil");
    add(set, -lens_x + pupil_offset, 0.0, "left-pupil");
    add(set, lens_x - pupil_offset, 0.0, "right-pupil");
    add(set, lens_x + pupil_offset, 0.0, "right-pupil");
    return set;
}

LabeledPointSet concentric_dataset(std::size_t inner_count, std::size_t outer_count,
                                   double r_inner, double r_outer) {
    if (inner_count < 3 || outer_count < 3)
        throw std::invalid_argument("concentric_dataset: each ring needs at least 3 points");
    if (!(r_inner > 0.0 && r_inner < r_outer && std::isfinite(r_outer)))
        throw std::invalid_argument("concentric_dataset: need 0 < r_inner < r_outer");
    LabeledPointSet set;
    add_circle(set, 0.0, 0.0, r_inner, inner_count, 0.0, "inner");
    add_circle(set, 0.0, 0.0, r_outer, outer_count, 0.0, "outer");
    return set;
}

LabeledPointSet single_triangle_counterexample() {
    LabeledPointSet set;
    add(set, 0.0, 0.0, "A");
    add(set, 1.0, 0.0, "A");
    add(set, 9.0, 0.0, "B");
    add(set, 10.0, 0.0, "B");
    add(set, 4.0, 0.0, "C");
    add(set, 6.0, 0.0, "C");
    return set;
}

LabeledPointSet backstep_dataset() {
    LabeledPointSet set;
    for (double x : {-0.5, 0.0, 0.5}) add(set, x, 0.0, "A");
    for (double x : {-0.5, 0.0, 0.5}) add(set, x, 2.0, "B");
    // U vertices, listed along the polyline: left arm top, bottom corners, right arm top
    add(set, -1.5, 2.25, "C");
    add(set, -1.5, -0.25, "C");
    add(set, 1.5, -0.25, "C");
    add(set, 1.5, 2.25, "C");
    return set;
}

}  // namespace hac
