#include "hac/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace hac {

using json = nlohmann::ordered_json;

std::string format_number(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) throw std::runtime_error("format_number: conversion failed");
    return std::string(buf, end);
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_csv(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        fields.emplace_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

// Reads non-empty lines, remembering their 1-based line numbers.
struct CsvReader {
    explicit CsvReader(std::istream& in) : in_(in) {}

    bool next(std::vector<std::string>& fields) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no;
            if (trim(line).empty()) continue;
            if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);  // UTF-8 BOM
            fields = split_csv(line);
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
    }

    std::size_t line_no = 0;

private:
    std::istream& in_;
};

double parse_number(const CsvReader& reader, const std::string& field, const std::string& column) {
    double v = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    if (!field.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (field.empty() || ec != std::errc{} || ptr != last)
        reader.fail("column '" + column + "': '" + field + "' is not a number");
    if (!std::isfinite(v)) reader.fail("column '" + column + "': non-finite value");
    return v;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        out << fields[i];
    }
    out << '\n';
}

// Shared layout of price and return tables.
struct DatedColumns {
    std::vector<std::string> labels;
    std::vector<std::string> dates;
    std::vector<std::vector<double>> columns;
};

DatedColumns read_dated_columns(std::istream& in, const char* what) {
    CsvReader reader(in);
    std::vector<std::string> fields;
    if (!reader.next(fields)) throw std::runtime_error(std::string(what) + ": empty input");
    if (fields.empty() || fields[0] != "date") reader.fail("first header column must be 'date'");
    if (fields.size() < 2) reader.fail("no series columns in header");

    DatedColumns table;
    table.labels.assign(fields.begin() + 1, fields.end());
    table.columns.resize(table.labels.size());
    while (reader.next(fields)) {
        if (fields.size() != table.labels.size() + 1)
            reader.fail("expected " + std::to_string(table.labels.size() + 1) + " fields, got " +
                        std::to_string(fields.size()));
        table.dates.push_back(fields[0]);
        for (std::size_t c = 0; c < table.labels.size(); ++c)
            table.columns[c].push_back(parse_number(reader, fields[c + 1], table.labels[c]));
    }
    return table;
}

}  // namespace

PriceTable read_price_table(std::istream& in) {
    DatedColumns cols = read_dated_columns(in, "price table");
    PriceTable table{std::move(cols.labels), std::move(cols.dates), std::move(cols.columns)};
    table.validate();
    return table;
}

void write_price_table(std::ostream& out, const PriceTable& table) {
    std::vector<std::string> row{"date"};
    row.insert(row.end(), table.labels.begin(), table.labels.end());
    write_row(out, row);
    for (std::size_t t = 0; t < table.dates.size(); ++t) {
        row.assign(1, table.dates[t]);
        for (const auto& series : table.prices) row.push_back(format_number(series[t]));
        write_row(out, row);
    }
}

std::vector<ReturnSeries> read_returns(std::istream& in) {
    DatedColumns cols = read_dated_columns(in, "returns");
    std::vector<ReturnSeries> out;
    for (std::size_t c = 0; c < cols.labels.size(); ++c)
        out.push_back({std::move(cols.labels[c]), std::move(cols.columns[c])});
    return out;
}

void write_returns(std::ostream& out, std::span<const ReturnSeries> series,
                   std::span<const std::string> dates) {
    std::vector<std::string> row{"date"};
    for (const auto& s : series) {
        if (s.values.size() != dates.size())
            throw std::invalid_argument("write_returns: series '" + s.label + "' length does not match dates");
        row.push_back(s.label);
    }
    write_row(out, row);
    for (std::size_t t = 0; t < dates.size(); ++t) {
        row.assign(1, dates[t]);
        for (const auto& s : series) row.push_back(format_number(s.values[t]));
        write_row(out, row);
    }
}

DistanceMatrix read_distance_matrix(std::istream& in) {
    CsvReader reader(in);
    std::vector<std::string> labels;
    if (!reader.next(labels)) throw std::runtime_error("distance matrix: empty input");
    const std::size_t n = labels.size();
    std::vector<std::vector<double>> rows;
    std::vector<std::string> fields;
    while (reader.next(fields)) {
        if (fields.size() != n)
            reader.fail("expected " + std::to_string(n) + " values, got " + std::to_string(fields.size()));
        std::vector<double> row;
        row.reserve(n);
        for (std::size_t j = 0; j < n; ++j) row.push_back(parse_number(reader, fields[j], labels[j]));
        rows.push_back(std::move(row));
    }
    if (rows.size() != n)
        throw std::runtime_error("distance matrix: " + std::to_string(n) + " labels but " +
                                 std::to_string(rows.size()) + " rows");
    DistanceMatrix d(std::move(labels), std::move(rows));
    d.validate();
    return d;
}

void write_distance_matrix(std::ostream& out, const DistanceMatrix& d) {
    write_row(out, d.labels());
    std::vector<std::string> row;
    for (std::size_t i = 0; i < d.size(); ++i) {
        row.clear();
        for (double v : d.row(i)) row.push_back(format_number(v));
        write_row(out, row);
    }
}

bool looks_like_points_csv(std::string_view header_line) {
    const auto fields = split_csv(trim(header_line));
    return fields.size() == 3 && fields[0] == "x" && fields[1] == "y" && fields[2] == "group";
}

LabeledPointSet read_points(std::istream& in) {
    CsvReader reader(in);
    std::vector<std::string> fields;
    if (!reader.next(fields)) throw std::runtime_error("points: empty input");
    if (fields != std::vector<std::string>{"x", "y", "group"}) reader.fail("expected header 'x,y,group'");
    LabeledPointSet set;
    while (reader.next(fields)) {
        if (fields.size() != 3) reader.fail("expected 3 fields, got " + std::to_string(fields.size()));
        set.points.push_back(Point{parse_number(reader, fields[0], "x"), parse_number(reader, fields[1], "y")});
        set.groups.push_back(fields[2]);
    }
    if (set.points.empty()) throw std::runtime_error("points: no rows");
    return set;
}

void write_points(std::ostream& out, const LabeledPointSet& points) {
    out << "x,y,group\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Point& p = points.points[i];
        if (p.dim() != 2) throw std::invalid_argument("write_points: only 2-D points are supported");
        out << format_number(p.coords[0]) << ',' << format_number(p.coords[1]) << ','
            << points.groups[i] << '\n';
    }
}

void write_entropy_curve(std::ostream& out, const EntropyCurve& curve) {
    out << "step,height,n_clusters,entropy\n";
    for (const auto& pt : curve)
        out << pt.step << ',' << format_number(pt.height) << ',' << pt.n_clusters << ','
            << format_number(pt.entropy) << '\n';
}

std::string dendrogram_to_json(const Dendrogram& dendro) {
    json merges = json::array();
    for (const Merge& m : dendro.merges)
        merges.push_back({{"left", m.left}, {"right", m.right}, {"height", m.height}, {"step", m.step}});
    json doc = {{"n_leaves", dendro.n_leaves},
                {"labels", dendro.labels},
                {"linkage", std::string(to_string(dendro.linkage))},
                {"merges", std::move(merges)},
                {"backsteps", detect_backsteps(dendro)}};
    return doc.dump(2) + "\n";
}

Dendrogram dendrogram_from_json(std::string_view text) {
    Dendrogram dendro;
    try {
        const json doc = json::parse(text);
        dendro.n_leaves = doc.at("n_leaves").get<std::size_t>();
        if (doc.contains("labels")) dendro.labels = doc.at("labels").get<std::vector<std::string>>();
        dendro.linkage = parse_linkage(doc.at("linkage").get<std::string>());
        for (const json& m : doc.at("merges")) {
            Merge merge;
            merge.left = m.at("left").get<std::size_t>();
            merge.right = m.at("right").get<std::size_t>();
            merge.height = m.at("height").get<double>();
            merge.step = m.at("step").get<std::size_t>();
            merge.new_id = dendro.n_leaves + merge.step - 1;
            dendro.merges.push_back(merge);
        }
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("dendrogram JSON: ") + e.what());
    }
    try {
        dendro.validate();
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(e.what());
    }
    return dendro;
}

namespace {

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

std::string render_svg(const Dendrogram& dendro) {
    dendro.validate();
    const std::size_t n = dendro.n_leaves;
    const std::size_t total = 2 * n - 1;

    std::vector<ClusterId> left(total, 0), right(total, 0);
    std::vector<double> height(total, 0.0);
    for (const Merge& m : dendro.merges) {
        left[m.new_id] = m.left;
        right[m.new_id] = m.right;
        height[m.new_id] = m.height;
    }

    // leaf order: depth-first from the root, left child first
    std::vector<ClusterId> order;
    std::vector<ClusterId> stack{total - 1};
    while (!stack.empty()) {
        const ClusterId c = stack.back();
        stack.pop_back();
        if (c < n) {
            order.push_back(c);
        } else {
            stack.push_back(right[c]);
            stack.push_back(left[c]);
        }
    }

    constexpr double margin = 40.0, spacing = 14.0, plot_height = 300.0, label_band = 60.0;
    const double width = 2 * margin + spacing * static_cast<double>(std::max<std::size_t>(n, 2) - 1);
    const double svg_height = plot_height + 2 * margin + label_band;
    const double max_h = *std::max_element(height.begin(), height.end());
    const double baseline = margin + plot_height;
    auto y_of = [&](double h) { return max_h > 0.0 ? baseline - plot_height * h / max_h : baseline; };

    std::vector<double> x(total, 0.0);
    for (std::size_t i = 0; i < order.size(); ++i) x[order[i]] = margin + spacing * static_cast<double>(i);
    for (const Merge& m : dendro.merges) x[m.new_id] = 0.5 * (x[m.left] + x[m.right]);

    const auto backsteps = detect_backsteps(dendro);

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(width) << "\" height=\""
        << fixed(svg_height) << "\">\n";
    svg << "<title>" << to_string(dendro.linkage) << " linkage dendrogram</title>\n";
    svg << "<line class=\"axis\" x1=\"" << fixed(margin / 2) << "\" y1=\"" << fixed(baseline) << "\" x2=\""
        << fixed(margin / 2) << "\" y2=\"" << fixed(margin) << "\" stroke=\"#888\"/>\n";
    svg << "<text x=\"2\" y=\"" << fixed(margin - 6) << "\" font-size=\"10\">" << format_number(max_h)
        << "</text>\n";

    for (const Merge& m : dendro.merges) {
        const bool back = std::find(backsteps.begin(), backsteps.end(), m.step) != backsteps.end();
        const double y = y_of(m.height);
        svg << "<path class=\"" << (back ? "backstep" : "merge") << "\" fill=\"none\" stroke=\""
            << (back ? "#d62728" : "#000") << "\" stroke-width=\"" << (back ? "2" : "1") << "\" d=\"M"
            << fixed(x[m.left]) << ' ' << fixed(y_of(height[m.left])) << " V" << fixed(y) << " H"
            << fixed(x[m.right]) << " V" << fixed(y_of(height[m.right])) << "\"/>\n";
    }

    for (ClusterId leaf : order) {
        const std::string label = dendro.labels.empty() ? std::to_string(leaf) : dendro.labels[leaf];
        svg << "<text class=\"leaf\" font-size=\"9\" transform=\"translate(" << fixed(x[leaf]) << ' '
            << fixed(baseline + 8) << ") rotate(90)\">" << xml_escape(label) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace hac
