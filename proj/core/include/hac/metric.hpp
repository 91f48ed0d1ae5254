#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hac {

struct Point {
    std::vector<double> coords;

    Point() = default;
    Point(std::initializer_list<double> c) : coords(c) {}
    explicit Point(std::vector<double> c) : coords(std::move(c)) {}

    std::size_t dim() const { return coords.size(); }
    bool operator==(const Point&) const = default;
};

struct ReturnSeries {
    std::string label;
    std::vector<double> values;
};

// Daily closure prices, one column per label.
struct PriceTable {
    std::vector<std::string> labels;
    std::vector<std::string> dates;
    std::vector<std::vector<double>> prices;  // prices[label][day]

    // Throws std::invalid_argument naming the first bad cell.
    void validate() const;
};

// Dense symmetric distance matrix stored row-major.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n, std::vector<std::string> labels = {});
    DistanceMatrix(std::vector<std::string> labels, std::vector<std::vector<double>> rows);

    std::size_t size() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }

    double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
    // Writes both (i,j) and (j,i).
    void set(std::size_t i, std::size_t j, double v);

    std::span<const double> row(std::size_t i) const { return {d_.data() + i * n_, n_}; }

    // Throws std::invalid_argument on asymmetry, negative or non-finite entries,
    // or a nonzero diagonal.
    void validate() const;

private:
    std::size_t n_ = 0;
    std::vector<std::string> labels_;
    std::vector<double> d_;
};

double euclidean_distance(const Point& p, const Point& q);

// ln(P(t)/P(t-1)) for t = 1..N-1.
ReturnSeries log_returns(std::span<const double> prices, std::string label = {});

// Pearson correlation with population moments (divisor N), clamped to [-1, 1].
double correlation(const ReturnSeries& x, const ReturnSeries& y);

// sqrt(2 (1 - rho)), in [0, 2].
double correlation_distance(double rho);

// Labels default to "0".."n-1".
DistanceMatrix build_distance_matrix(std::span<const Point> points,
                                     std::vector<std::string> labels = {});
// Correlation distance; labels come from the series.
DistanceMatrix build_distance_matrix(std::span<const ReturnSeries> series);

enum class AxiomKind { indiscernible, symmetry, triangle };

struct AxiomViolation {
    AxiomKind kind;
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;    // intermediate index, triangle only
    double excess = 0.0;  // amount by which the axiom fails
};

struct AxiomReport {
    std::vector<AxiomViolation> violations;

    bool ok() const { return violations.empty(); }
    std::size_t count(AxiomKind kind) const;
};

// Brute force over all pairs and triples. Off-diagonal zeros are reported as
// indiscernible violations (the matrix is then only a pseudometric).
// Triangle violations are reported once per pair i < j with intermediate k.
AxiomReport check_metric_axioms(const DistanceMatrix& d, double tolerance);

}  // namespace hac
