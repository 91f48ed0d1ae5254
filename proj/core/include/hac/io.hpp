#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hac/analysis.hpp"
#include "hac/datasets.hpp"
#include "hac/linkage.hpp"
#include "hac/metric.hpp"

namespace hac {

// Shortest representation that round-trips to the same double.
std::string format_number(double v);

// All readers throw std::runtime_error with the offending line/column on
// malformed input.

// date,<label>,<label>,...
PriceTable read_price_table(std::istream& in);
void write_price_table(std::ostream& out, const PriceTable& table);

// Same layout as the price table; `dates` has one entry per row.
std::vector<ReturnSeries> read_returns(std::istream& in);
void write_returns(std::ostream& out, std::span<const ReturnSeries> series,
                   std::span<const std::string> dates);

// Header of n labels followed by n rows of n values. Validated on read.
DistanceMatrix read_distance_matrix(std::istream& in);
void write_distance_matrix(std::ostream& out, const DistanceMatrix& d);

// x,y,group
LabeledPointSet read_points(std::istream& in);
void write_points(std::ostream& out, const LabeledPointSet& points);
// True when the first line is the x,y,group header.
bool looks_like_points_csv(std::string_view header_line);

// step,height,n_clusters,entropy
void write_entropy_curve(std::ostream& out, const EntropyCurve& curve);

// { n_leaves, labels, linkage, merges: [{left, right, height, step}], backsteps }
std::string dendrogram_to_json(const Dendrogram& dendro);
Dendrogram dendrogram_from_json(std::string_view text);

// Leaves along the x axis in tree order, merge heights on the y axis.
// Merges flagged by detect_backsteps get class "backstep" (red stroke),
// all others class "merge".
std::string render_svg(const Dendrogram& dendro);

}  // namespace hac
