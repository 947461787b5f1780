#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "slt/cli.hpp"
#include "slt/io.hpp"

using namespace slt;
namespace fs = std::filesystem;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "slt");
    std::ostringstream out;
    std::ostringstream err;
    const int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double field(const std::string& line, const std::string& key) {
    const auto at = line.find(key + "=");
    REQUIRE(at != std::string::npos);
    return std::stod(line.substr(at + key.size() + 1));
}

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / ("slt-cli-test-" + std::to_string(::getpid()))) {
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string operator/(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

}  // namespace

TEST_CASE("gen, build and verify end to end") {
    TempDir dir;
    const auto inst = dir / "c.inst";
    const auto tree = dir / "c.tree";
    CHECK(cli({"gen", "--kind", "circle", "--epsilon", "0.0625", "--seed", "1", "-o", inst}).status == kExitOk);
    CHECK(load_instance(inst).points.size() == 16);
    CHECK(cli({"build", "--algo", "kry", "-i", inst, "-o", tree}).status == kExitOk);
    const Run v = cli({"verify", "-i", inst, "-t", tree});
    CHECK(v.status == kExitOk);
    CHECK(v.out.rfind("stretch=", 0) == 0);
    CHECK(field(v.out, "stretch") <= 1.0625);
    CHECK(field(v.out, "lightness") >= 1.0);

    CHECK(cli({"build", "--algo", "mst", "-i", inst, "-o", tree}).status == kExitOk);
    CHECK(field(cli({"verify", "-i", inst, "-t", tree}).out, "lightness") == 1.0);
}

TEST_CASE("verify with certificate and oracle") {
    TempDir dir;
    const auto inst = dir / "s.inst";
    const auto tree = dir / "s.tree";
    REQUIRE(cli({"gen", "--kind", "sector-lb", "--epsilon", "0.015625", "-o", inst}).status == kExitOk);
    REQUIRE(cli({"build", "--algo", "steiner", "-i", inst, "-o", tree}).status == kExitOk);
    const Run v = cli({"verify", "-i", inst, "-t", tree, "--certificate"});
    CHECK(v.status == kExitOk);
    CHECK(field(v.out, "certificate") > 0.0);

    const auto small = dir / "u.inst";
    const auto small_tree = dir / "u.tree";
    REQUIRE(cli({"gen", "--kind", "uniform", "--epsilon", "0.015625", "--n", "5", "--seed", "3", "-o", small}).status ==
            kExitOk);
    REQUIRE(cli({"build", "--algo", "restricted", "-i", small, "-o", small_tree}).status == kExitOk);
    const Run o = cli({"verify", "-i", small, "-t", small_tree, "--oracle"});
    CHECK(o.status == kExitOk);
    CHECK(field(o.out, "opt") > 0.0);

    // a tree for another instance does not cover this one
    const Run bad = cli({"verify", "-i", inst, "-t", small_tree});
    CHECK(bad.status == kExitVerifyFailed);
    CHECK_FALSE(bad.err.empty());
}

TEST_CASE("bench writes one row per algorithm, epsilon and seed") {
    TempDir dir;
    const auto csv = dir / "b.csv";
    const Run r = cli({"bench", "--algos", "kry,abp", "--eps-list", "0.0625,0.015625", "--kind", "comb", "--seeds", "1",
                       "-o", csv});
    CHECK(r.status == kExitOk);
    std::istringstream in(slurp(csv));
    std::string line;
    std::getline(in, line);
    CHECK(line == "epsilon,algorithm,kind,n,seed,weight,mst_weight,lightness,max_stretch,runtime_ms");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 9);
    }
    CHECK(rows == 4);

    CHECK(cli({"bench", "--algos", "mst", "--eps-list", "0.1", "--kind", "uniform", "--seeds", "1,2,3", "--n", "50",
               "-o", csv})
              .status == kExitOk);
    std::istringstream again(slurp(csv));
    rows = -1;
    while (std::getline(again, line)) {
        ++rows;
    }
    CHECK(rows == 3);
}

TEST_CASE("usage and parse errors exit with status 2") {
    TempDir dir;
    CHECK(cli({}).status == kExitUsage);
    CHECK(cli({"frobnicate"}).status == kExitUsage);
    CHECK(cli({"gen", "--kind", "circle", "-o", dir / "x"}).status == kExitUsage);
    CHECK(cli({"gen", "--kind", "spiral", "--epsilon", "0.1", "-o", dir / "x"}).status == kExitUsage);
    CHECK(cli({"gen", "--kind", "comb", "--epsilon", "0.1", "--k", "4", "--delta", "0.142857", "-o", dir / "x"})
              .status == kExitUsage);

    const auto inst = dir / "i.inst";
    REQUIRE(cli({"gen", "--kind", "uniform", "--epsilon", "0.1", "--n", "20", "-o", inst}).status == kExitOk);
    CHECK(cli({"build", "--algo", "fastest", "-i", inst, "-o", dir / "t"}).status == kExitUsage);
    CHECK(cli({"build", "--algo", "mst", "-i", dir / "missing", "-o", dir / "t"}).status == kExitUsage);
    CHECK(cli({"build", "--algo", "mst", "-i", inst, "-o", dir / "t", "--threads", "0"}).status == kExitUsage);

    std::ofstream(dir / "broken.inst") << "slt-instance v1\nepsilon 0\n";
    const Run r = cli({"build", "--algo", "mst", "-i", dir / "broken.inst", "-o", dir / "t"});
    CHECK(r.status == kExitUsage);
    CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("thread count gives byte-identical tree files") {
    TempDir dir;
    const auto inst = dir / "u.inst";
    REQUIRE(cli({"gen", "--kind", "uniform", "--epsilon", "0.01", "--n", "3000", "--seed", "4", "-o", inst}).status ==
            kExitOk);
    for (const std::string algo : {"steiner", "restricted"}) {
        REQUIRE(cli({"build", "--algo", algo, "-i", inst, "-o", dir / "t1", "--threads", "1"}).status == kExitOk);
        REQUIRE(cli({"build", "--algo", algo, "-i", inst, "-o", dir / "t3", "--threads", "3"}).status == kExitOk);
        CHECK(slurp(dir / "t1") == slurp(dir / "t3"));
    }
}

TEST_CASE("plot writes a standalone SVG") {
    TempDir dir;
    const auto inst = dir / "p.inst";
    const auto tree = dir / "p.tree";
    REQUIRE(cli({"gen", "--kind", "uniform", "--epsilon", "0.0625", "--n", "30", "-o", inst}).status == kExitOk);
    REQUIRE(cli({"build", "--algo", "steiner", "-i", inst, "-o", tree}).status == kExitOk);
    CHECK(cli({"plot", "-i", inst, "-t", tree, "-o", dir / "p.svg"}).status == kExitOk);
    const std::string svg = slurp(dir / "p.svg");
    CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(std::count(svg.begin(), svg.end(), '\n') > 30);
    const auto lines = [&] {
        std::size_t n = 0;
        for (std::size_t at = 0; (at = svg.find("<line ", at)) != std::string::npos; ++at) {
            ++n;
        }
        return n;
    }();
    CHECK(lines == load_tree(tree).vertices.size() - 1);

    CHECK(cli({"plot", "-i", inst, "-o", dir / "q.svg"}).status == kExitOk);
    CHECK(slurp(dir / "q.svg").find("<line ") == std::string::npos);
}
