#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "hac/io.hpp"

using namespace hac;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("hac-cli-" + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    fs::path operator/(const char* name) const { return path / name; }
    fs::path path;
};

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "hac");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string read(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("dataset") {
    TempDir tmp;
    CHECK(run({"dataset", "glasses", "--output", (tmp / "g.csv").string()}).code == 0);
    const auto g = read(tmp / "g.csv");
    CHECK(lines(g) == 72);
    CHECK(g.rfind("x,y,group\n", 0) == 0);

    CHECK(run({"dataset", "backstep", "-o", (tmp / "b.csv").string()}).code == 0);
    const auto b = read(tmp / "b.csv");
    for (const char* grp : {",A\n", ",B\n", ",C\n"}) CHECK(b.find(grp) != std::string::npos);

    CHECK(run({"dataset", "concentric", "--inner", "8", "--outer", "16", "-o", (tmp / "c.csv").string()}).code == 0);
    CHECK(lines(read(tmp / "c.csv")) == 25);
    CHECK(run({"dataset", "concentric", "--inner", "2", "-o", (tmp / "c.csv").string()}).code != 0);

    const auto bad = run({"dataset", "spectacles", "-o", (tmp / "x.csv").string()});
    CHECK(bad.code != 0);
    CHECK_FALSE(fs::exists(tmp / "x.csv"));
}

TEST_CASE("returns") {
    TempDir tmp;
    write(tmp / "flat.csv", "date,A,B\nd1,5,7\nd2,5,7\nd3,5,7\n");
    REQUIRE(run({"returns", "--prices", (tmp / "flat.csv").string(), "-o", (tmp / "r.csv").string()}).code == 0);
    CHECK(read(tmp / "r.csv") == "date,A,B\nd2,0,0\nd3,0,0\n");

    REQUIRE(run({"synth-prices", "--days", "253", "-o", (tmp / "p.csv").string()}).code == 0);
    CHECK(lines(read(tmp / "p.csv")) == 254);
    REQUIRE(run({"returns", "--prices", (tmp / "p.csv").string(), "-o", (tmp / "r.csv").string()}).code == 0);
    std::ifstream in(tmp / "r.csv");
    const auto series = read_returns(in);
    CHECK(series.size() == 30);
    for (const auto& s : series) CHECK(s.values.size() == 252);

    write(tmp / "zero.csv", "date,A,B\nd1,5,7\nd2,5,0\n");
    const auto r = run({"returns", "--prices", (tmp / "zero.csv").string(), "-o", (tmp / "z.csv").string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("date 'd2', column 'B'") != std::string::npos);
    CHECK(lines(r.err) == 1);
}

TEST_CASE("distances") {
    TempDir tmp;
    write(tmp / "r.csv", "date,X,Y,Z\nd1,0.1,0.1,-0.1\nd2,-0.2,-0.2,0.2\nd3,0.05,0.05,-0.05\n");
    REQUIRE(run({"distances", "--returns", (tmp / "r.csv").string(), "-o", (tmp / "d.csv").string()}).code == 0);
    std::ifstream in(tmp / "d.csv");
    const auto d = read_distance_matrix(in);
    CHECK(d(0, 1) == 0.0);
    CHECK(d(0, 2) == doctest::Approx(2.0).epsilon(1e-12));

    write(tmp / "flat.csv", "date,X,Y\nd1,0.1,0.3\nd2,0.1,0.2\n");
    const auto r = run({"distances", "--returns", (tmp / "flat.csv").string(), "-o", (tmp / "e.csv").string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("zero variance") != std::string::npos);

    write(tmp / "one.csv", "date,X\nd1,0.1\nd2,0.2\n");
    CHECK(run({"distances", "--returns", (tmp / "one.csv").string(), "-o", (tmp / "e.csv").string()}).code == 1);
}

TEST_CASE("cluster, entropy, render, cut") {
    TempDir tmp;
    REQUIRE(run({"dataset", "glasses", "-o", (tmp / "g.csv").string()}).code == 0);
    for (const char* l : {"single", "complete", "hausdorff"}) {
        const auto json = tmp / (std::string(l) + ".json").c_str();
        REQUIRE(run({"cluster", "--input", (tmp / "g.csv").string(), "--linkage", l, "-o", json.string()}).code == 0);
        const auto d = dendrogram_from_json(read(json));
        CHECK(d.merges.size() == 70);

        REQUIRE(run({"entropy", "--dendrogram", json.string(), "-o", (tmp / "e.csv").string()}).code == 0);
        const auto e = read(tmp / "e.csv");
        CHECK(lines(e) == 72);
        const std::string first_row = "step,height,n_clusters,entropy\n0,0,71,";
        REQUIRE(e.rfind(first_row, 0) == 0);
        CHECK(std::abs(std::stod(e.substr(first_row.size())) - std::log(71.0)) <= 1e-12);
    }

    // deterministic output
    const auto again = tmp / "again.json";
    REQUIRE(run({"cluster", "--input", (tmp / "g.csv").string(), "--linkage", "hausdorff", "-o", again.string()}).code == 0);
    CHECK(read(again) == read(tmp / "hausdorff.json"));
    REQUIRE(run({"cluster", "--input", (tmp / "g.csv").string(), "--linkage", "hausdorff", "--ties", "random",
                 "--seed", "5", "-o", (tmp / "r1.json").string()}).code == 0);
    REQUIRE(run({"cluster", "--input", (tmp / "g.csv").string(), "--linkage", "hausdorff", "--ties", "random",
                 "--seed", "5", "-o", (tmp / "r2.json").string()}).code == 0);
    CHECK(read(tmp / "r1.json") == read(tmp / "r2.json"));

    REQUIRE(run({"dataset", "backstep", "-o", (tmp / "b.csv").string()}).code == 0);
    REQUIRE(run({"cluster", "--input", (tmp / "b.csv").string(), "--linkage", "hausdorff", "-o",
                 (tmp / "bh.json").string()}).code == 0);
    REQUIRE(run({"cluster", "--input", (tmp / "b.csv").string(), "--linkage", "complete", "-o",
                 (tmp / "bc.json").string()}).code == 0);
    CHECK(read(tmp / "bh.json").find("\"backsteps\": [\n    7\n  ]") != std::string::npos);
    CHECK(read(tmp / "bc.json").find("\"backsteps\": []") != std::string::npos);

    REQUIRE(run({"render", "--dendrogram", (tmp / "bh.json").string(), "-o", (tmp / "bh.svg").string()}).code == 0);
    CHECK(read(tmp / "bh.svg").find("class=\"backstep\"") != std::string::npos);

    REQUIRE(run({"cut", "--dendrogram", (tmp / "bh.json").string(), "--k", "3", "-o", (tmp / "cut.csv").string()}).code == 0);
    const auto cut = read(tmp / "cut.csv");
    CHECK(lines(cut) == 11);
    CHECK(cut.rfind("element,label,cluster\n0,0,1\n", 0) == 0);
    CHECK(run({"cut", "--dendrogram", (tmp / "bh.json").string(), "--k", "99", "-o", (tmp / "c.csv").string()}).code == 1);
    CHECK(run({"cut", "--dendrogram", (tmp / "bh.json").string(), "-o", (tmp / "c.csv").string()}).code == 1);

    // matrix input path
    write(tmp / "m.csv", "a,b,c\n0,1,4\n1,0,2\n4,2,0\n");
    REQUIRE(run({"cluster", "--input", (tmp / "m.csv").string(), "--linkage", "single", "-o", (tmp / "m.json").string()}).code == 0);
    const auto m = dendrogram_from_json(read(tmp / "m.json"));
    CHECK(m.labels == std::vector<std::string>{"a", "b", "c"});
    CHECK(m.heights() == std::vector<double>{1, 2});
}

TEST_CASE("error paths") {
    TempDir tmp;
    write(tmp / "asym.csv", "a,b\n0,1\n2,0\n");
    auto r = run({"cluster", "--input", (tmp / "asym.csv").string(), "--linkage", "single", "-o", (tmp / "x.json").string()});
    CHECK(r.code == 1);
    CHECK(r.err.rfind("error: ", 0) == 0);
    CHECK(lines(r.err) == 1);

    CHECK(run({"cluster", "--input", (tmp / "asym.csv").string(), "--linkage", "average", "-o", "x"}).code != 0);
    CHECK(run({"cluster", "--input", (tmp / "missing.csv").string(), "--linkage", "single", "-o", "x"}).code != 0);
    write(tmp / "bad.json", "{ not json");
    CHECK(run({"entropy", "--dendrogram", (tmp / "bad.json").string(), "-o", (tmp / "e.csv").string()}).code == 1);
    CHECK(run({"render", "--dendrogram", (tmp / "bad.json").string(), "-o", (tmp / "e.svg").string()}).code == 1);
    CHECK(run({}).code != 0);
}

TEST_CASE("installed binary exit codes") {
    TempDir tmp;
    const std::string exe = HAC_CLI_PATH;
    CHECK(std::system((exe + " dataset glasses -o " + (tmp / "g.csv").string() + " >/dev/null 2>&1").c_str()) == 0);
    CHECK(std::system((exe + " dataset spectacles -o " + (tmp / "g.csv").string() + " >/dev/null 2>&1").c_str()) != 0);
}

TEST_SUITE_END();
