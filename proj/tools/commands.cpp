#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "hac/analysis.hpp"
#include "hac/datasets.hpp"
#include "hac/io.hpp"
#include "hac/market.hpp"
#include "hac/metric.hpp"

namespace hac::cli {

namespace {

std::ifstream open_input(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    return in;
}

std::string slurp(const fs::path& path) {
    std::ifstream in = open_input(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

template <typename Fn>
std::string to_text(Fn&& fn) {
    std::ostringstream os;
    fn(os);
    return os.str();
}

// Prefix file-reading errors with the file name.
template <typename Fn>
auto reading(const fs::path& path, Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

}  // namespace

void cmd_dataset(const RunConfig& cfg) {
    LabeledPointSet set;
    if (cfg.dataset_name == "glasses")
        set = glasses_dataset();
    else if (cfg.dataset_name == "concentric")
        set = concentric_dataset(cfg.inner_count, cfg.outer_count, cfg.r_inner, cfg.r_outer);
    else if (cfg.dataset_name == "backstep")
        set = backstep_dataset();
    else if (cfg.dataset_name == "triangle")
        set = single_triangle_counterexample();
    else
        throw std::invalid_argument("unknown dataset '" + cfg.dataset_name + "'");
    write_file(cfg.output, to_text([&](std::ostream& os) { write_points(os, set); }));
}

void cmd_returns(const fs::path& prices, const fs::path& out) {
    const PriceTable table = reading(prices, [&] {
        std::ifstream in = open_input(prices);
        return read_price_table(in);
    });
    if (table.dates.size() < 2) throw std::runtime_error(prices.string() + ": need at least 2 price rows");
    const auto series = table_returns(table);
    const std::vector<std::string> dates(table.dates.begin() + 1, table.dates.end());
    write_file(out, to_text([&](std::ostream& os) { write_returns(os, series, dates); }));
}

void cmd_distances(const fs::path& returns, const fs::path& out) {
    const auto series = reading(returns, [&] {
        std::ifstream in = open_input(returns);
        return read_returns(in);
    });
    if (series.size() < 2) throw std::runtime_error(returns.string() + ": need at least 2 series");
    const DistanceMatrix d = build_distance_matrix(series);
    write_file(out, to_text([&](std::ostream& os) { write_distance_matrix(os, d); }));
}

void cmd_cluster(const fs::path& input, Linkage linkage, TiePolicy ties, const fs::path& out) {
    const DistanceMatrix d = reading(input, [&] {
        std::ifstream in = open_input(input);
        std::string header;
        std::getline(in, header);
        in.seekg(0);
        if (looks_like_points_csv(header)) {
            const LabeledPointSet set = read_points(in);
            return build_distance_matrix(set.points);
        }
        return read_distance_matrix(in);
    });
    const Dendrogram dendro = agglomerate(d, linkage, ties);
    write_file(out, dendrogram_to_json(dendro));
}

namespace {

Dendrogram load_dendrogram(const fs::path& path) {
    return reading(path, [&] { return dendrogram_from_json(slurp(path)); });
}

}  // namespace

void cmd_entropy(const fs::path& dendrogram, const fs::path& out) {
    const EntropyCurve curve = entropy_curve(load_dendrogram(dendrogram));
    write_file(out, to_text([&](std::ostream& os) { write_entropy_curve(os, curve); }));
}

void cmd_render(const fs::path& dendrogram, const fs::path& out) {
    write_file(out, render_svg(load_dendrogram(dendrogram)));
}

void cmd_cut(const fs::path& dendrogram, std::optional<std::size_t> k, std::optional<double> height,
             const fs::path& out) {
    if (k.has_value() == height.has_value()) throw std::invalid_argument("cut: give exactly one of --k, --height");
    const Dendrogram dendro = load_dendrogram(dendrogram);
    const Partition p = k ? cut_at_count(dendro, *k) : cut_at_height(dendro, *height);
    write_file(out, to_text([&](std::ostream& os) {
                   os << "element,label,cluster\n";
                   for (std::size_t i = 0; i < p.assignment.size(); ++i)
                       os << i << ',' << (dendro.labels.empty() ? std::to_string(i) : dendro.labels[i]) << ','
                          << p.assignment[i] << '\n';
               }));
}

void cmd_synth_prices(std::size_t days, std::uint64_t seed, const fs::path& out) {
    const PriceTable table = synthetic_price_table(days, seed);
    write_file(out, to_text([&](std::ostream& os) { write_price_table(os, table); }));
}

void execute(const RunConfig& cfg) {
    switch (cfg.command) {
        case Command::dataset: cmd_dataset(cfg); break;
        case Command::returns: cmd_returns(cfg.input, cfg.output); break;
        case Command::distances: cmd_distances(cfg.input, cfg.output); break;
        case Command::cluster: cmd_cluster(cfg.input, cfg.linkage, cfg.ties, cfg.output); break;
        case Command::entropy: cmd_entropy(cfg.input, cfg.output); break;
        case Command::render: cmd_render(cfg.input, cfg.output); break;
        case Command::cut: cmd_cut(cfg.input, cfg.cut_k, cfg.cut_height, cfg.output); break;
        case Command::synth_prices: cmd_synth_prices(cfg.days, cfg.seed, cfg.output); break;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hierarchical agglomerative clustering with single, complete and Hausdorff linkage"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string linkage_name;
    std::string ties_name = "lex";
    std::size_t k = 0;
    double height = 0.0;

    auto* dataset = app.add_subcommand("dataset", "Write a built-in point set as x,y,group CSV");
    dataset->add_option("name", cfg.dataset_name, "glasses | concentric | backstep | triangle")
        ->required()
        ->check(CLI::IsMember({"glasses", "concentric", "backstep", "triangle"}));
    dataset->add_option("--output,-o", cfg.output)->required();
    dataset->add_option("--inner", cfg.inner_count, "concentric: points on the inner ring");
    dataset->add_option("--outer", cfg.outer_count, "concentric: points on the outer ring");
    dataset->add_option("--r-inner", cfg.r_inner, "concentric: inner radius");
    dataset->add_option("--r-outer", cfg.r_outer, "concentric: outer radius");

    auto* returns = app.add_subcommand("returns", "Log-returns of a price table");
    returns->add_option("--prices", cfg.input)->required()->check(CLI::ExistingFile);
    returns->add_option("--output,-o", cfg.output)->required();

    auto* distances = app.add_subcommand("distances", "Correlation distance matrix of a returns table");
    distances->add_option("--returns", cfg.input)->required()->check(CLI::ExistingFile);
    distances->add_option("--output,-o", cfg.output)->required();

    auto* cluster = app.add_subcommand("cluster", "Agglomerate a distance matrix or point CSV");
    cluster->add_option("--input", cfg.input)->required()->check(CLI::ExistingFile);
    cluster->add_option("--linkage", linkage_name)
        ->required()
        ->check(CLI::IsMember({"single", "complete", "hausdorff"}));
    cluster->add_option("--ties", ties_name, "lex (default) | random")->check(CLI::IsMember({"lex", "random"}));
    cluster->add_option("--seed", cfg.seed, "seed for --ties random");
    cluster->add_option("--output,-o", cfg.output)->required();

    auto* entropy = app.add_subcommand("entropy", "Cluster entropy at every dendrogram level");
    entropy->add_option("--dendrogram", cfg.input)->required()->check(CLI::ExistingFile);
    entropy->add_option("--output,-o", cfg.output)->required();

    auto* render = app.add_subcommand("render", "Draw a dendrogram as SVG");
    render->add_option("--dendrogram", cfg.input)->required()->check(CLI::ExistingFile);
    render->add_option("--output,-o", cfg.output)->required();

    auto* cut = app.add_subcommand("cut", "Partition from a dendrogram cut");
    cut->add_option("--dendrogram", cfg.input)->required()->check(CLI::ExistingFile);
    auto* k_opt = cut->add_option("--k", k, "number of clusters");
    auto* h_opt = cut->add_option("--height", height, "cut height (prefix semantics)");
    k_opt->excludes(h_opt);
    cut->add_option("--output,-o", cfg.output)->required();

    auto* synth = app.add_subcommand("synth-prices", "Synthetic 30-ticker price table");
    synth->add_option("--days", cfg.days, "number of trading days (rows)");
    synth->add_option("--seed", cfg.seed);
    synth->add_option("--output,-o", cfg.output)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (dataset->parsed()) cfg.command = Command::dataset;
        else if (returns->parsed()) cfg.command = Command::returns;
        else if (distances->parsed()) cfg.command = Command::distances;
        else if (cluster->parsed()) {
            cfg.command = Command::cluster;
            cfg.linkage = parse_linkage(linkage_name);
            cfg.ties = ties_name == "random" ? TiePolicy::seeded_random(cfg.seed) : TiePolicy::lexicographic();
        } else if (entropy->parsed()) cfg.command = Command::entropy;
        else if (render->parsed()) cfg.command = Command::render;
        else if (cut->parsed()) {
            cfg.command = Command::cut;
            if (k_opt->count()) cfg.cut_k = k;
            if (h_opt->count()) cfg.cut_height = height;
        } else cfg.command = Command::synth_prices;

        execute(cfg);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace hac::cli
