#include "hac/metric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hac {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

}  // namespace

void PriceTable::validate() const {
    if (prices.size() != labels.size())
        throw std::invalid_argument("price table: " + std::to_string(labels.size()) +
                                    " labels but " + std::to_string(prices.size()) + " series");
    for (std::size_t s = 0; s < prices.size(); ++s) {
        if (prices[s].size() != dates.size())
            throw std::invalid_argument("price table: series '" + labels[s] + "' has " +
                                        std::to_string(prices[s].size()) + " prices for " +
                                        std::to_string(dates.size()) + " dates");
        for (std::size_t t = 0; t < prices[s].size(); ++t) {
            double p = prices[s][t];
            if (!std::isfinite(p) || p <= 0.0)
                throw std::invalid_argument("price table: non-positive or non-finite price at date '" +
                                            dates[t] + "', column '" + labels[s] + "'");
        }
    }
}

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<std::string> labels)
    : n_(n), labels_(labels.empty() ? default_labels(n) : std::move(labels)), d_(n * n, 0.0) {
    if (labels_.size() != n_)
        throw std::invalid_argument("distance matrix: label count does not match size");
}

DistanceMatrix::DistanceMatrix(std::vector<std::string> labels,
                               std::vector<std::vector<double>> rows)
    : DistanceMatrix(rows.size(), std::move(labels)) {
    for (std::size_t i = 0; i < n_; ++i) {
        if (rows[i].size() != n_)
            throw std::invalid_argument("distance matrix: row " + std::to_string(i) + " has " +
                                        std::to_string(rows[i].size()) + " entries, expected " +
                                        std::to_string(n_));
        std::copy(rows[i].begin(), rows[i].end(), d_.begin() + static_cast<std::ptrdiff_t>(i * n_));
    }
}

void DistanceMatrix::set(std::size_t i, std::size_t j, double v) {
    d_[i * n_ + j] = v;
    d_[j * n_ + i] = v;
}

void DistanceMatrix::validate() const {
    for (std::size_t i = 0; i < n_; ++i) {
        if ((*this)(i, i) != 0.0)
            throw std::invalid_argument("distance matrix: nonzero diagonal at " + std::to_string(i));
        for (std::size_t j = 0; j < n_; ++j) {
            double v = (*this)(i, j);
            if (!std::isfinite(v))
                throw std::invalid_argument("distance matrix: non-finite entry at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
            if (v < 0.0)
                throw std::invalid_argument("distance matrix: negative entry at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
            if (v != (*this)(j, i))
                throw std::invalid_argument("distance matrix: asymmetric at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
}

double euclidean_distance(const Point& p, const Point& q) {
    if (p.dim() != q.dim())
        throw std::invalid_argument("euclidean_distance: dimension mismatch (" +
                                    std::to_string(p.dim()) + " vs " + std::to_string(q.dim()) + ")");
    double sum = 0.0;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        double diff = p.coords[i] - q.coords[i];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

ReturnSeries log_returns(std::span<const double> prices, std::string label) {
    if (prices.size() < 2)
        throw std::invalid_argument("log_returns: need at least 2 prices");
    for (std::size_t t = 0; t < prices.size(); ++t) {
        if (!std::isfinite(prices[t]) || prices[t] <= 0.0)
            throw std::invalid_argument("log_returns: non-positive price at index " + std::to_string(t));
    }
    ReturnSeries out{std::move(label), {}};
    out.values.reserve(prices.size() - 1);
    for (std::size_t t = 1; t < prices.size(); ++t)
        out.values.push_back(std::log(prices[t] / prices[t - 1]));
    return out;
}

double correlation(const ReturnSeries& x, const ReturnSeries& y) {
    const std::size_t n = x.values.size();
    if (n != y.values.size())
        throw std::invalid_argument("correlation: length mismatch between '" + x.label + "' and '" +
                                    y.label + "'");
    if (n < 2) throw std::invalid_argument("correlation: need at least 2 observations");

    double mx = 0.0, my = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        mx += x.values[t];
        my += y.values[t];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    // Centred sums; the 1/N factors cancel in the ratio.
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        double dx = x.values[t] - mx;
        double dy = y.values[t] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0) throw std::invalid_argument("correlation: zero variance in '" + x.label + "'");
    if (syy == 0.0) throw std::invalid_argument("correlation: zero variance in '" + y.label + "'");
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double correlation_distance(double rho) {
    if (!(rho >= -1.0 && rho <= 1.0))
        throw std::invalid_argument("correlation_distance: rho outside [-1, 1]");
    return std::sqrt(2.0 * (1.0 - rho));
}

DistanceMatrix build_distance_matrix(std::span<const Point> points, std::vector<std::string> labels) {
    if (points.empty()) throw std::invalid_argument("build_distance_matrix: no points");
    DistanceMatrix d(points.size(), std::move(labels));
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            d.set(i, j, euclidean_distance(points[i], points[j]));
    return d;
}

DistanceMatrix build_distance_matrix(std::span<const ReturnSeries> series) {
    if (series.empty()) throw std::invalid_argument("build_distance_matrix: no series");
    std::vector<std::string> labels;
    for (const auto& s : series) labels.push_back(s.label);
    DistanceMatrix d(series.size(), std::move(labels));
    for (std::size_t i = 0; i < series.size(); ++i)
        for (std::size_t j = i + 1; j < series.size(); ++j)
            d.set(i, j, correlation_distance(correlation(series[i], series[j])));
    return d;
}

std::size_t AxiomReport::count(AxiomKind kind) const {
    return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                  [kind](const auto& v) { return v.kind == kind; }));
}

AxiomReport check_metric_axioms(const DistanceMatrix& d, double tolerance) {
    AxiomReport report;
    const std::size_t n = d.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(d(i, i)) > tolerance)
            report.violations.push_back({AxiomKind::indiscernible, i, i, 0, std::abs(d(i, i))});
        for (std::size_t j = i + 1; j < n; ++j) {
            double asym = std::abs(d(i, j) - d(j, i));
            if (asym > tolerance) report.violations.push_back({AxiomKind::symmetry, i, j, 0, asym});
            if (d(i, j) <= tolerance)
                report.violations.push_back({AxiomKind::indiscernible, i, j, 0, tolerance - d(i, j)});
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                double excess = d(i, j) - (d(i, k) + d(k, j));
                if (excess > tolerance)
                    report.violations.push_back({AxiomKind::triangle, i, j, k, excess});
            }
        }
    }
    return report;
}

}  // namespace hac
