#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "hac/linkage.hpp"

namespace hac::cli {

namespace fs = std::filesystem;

enum class Command { dataset, returns, distances, cluster, entropy, render, cut, synth_prices };

struct RunConfig {
    Command command = Command::dataset;
    std::string dataset_name;
    fs::path input;
    fs::path output;
    Linkage linkage = Linkage::hausdorff;
    TiePolicy ties = TiePolicy::lexicographic();
    std::optional<std::size_t> cut_k;
    std::optional<double> cut_height;
    // concentric dataset
    std::size_t inner_count = 16;
    std::size_t outer_count = 32;
    double r_inner = 1.0;
    double r_outer = 4.0;
    // synthetic prices
    std::size_t days = 253;
    std::uint64_t seed = 1998;
};

// Each command reads its input file(s) and writes one output file. Errors
// surface as exceptions carrying a one-line message.
void cmd_dataset(const RunConfig& cfg);
void cmd_returns(const fs::path& prices, const fs::path& out);
void cmd_distances(const fs::path& returns, const fs::path& out);
// Input is either a distance matrix CSV or an x,y,group point CSV (Euclidean).
void cmd_cluster(const fs::path& input, Linkage linkage, TiePolicy ties, const fs::path& out);
void cmd_entropy(const fs::path& dendrogram, const fs::path& out);
void cmd_render(const fs::path& dendrogram, const fs::path& out);
// Writes element,label,cluster.
void cmd_cut(const fs::path& dendrogram, std::optional<std::size_t> k, std::optional<double> height,
             const fs::path& out);
void cmd_synth_prices(std::size_t days, std::uint64_t seed, const fs::path& out);

void execute(const RunConfig& cfg);

// Parses argv, runs the command, and returns the process exit code. Usage
// errors print CLI help to `err`; runtime failures print "error: <message>".
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hac::cli
