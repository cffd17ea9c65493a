#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "polytuple/io.hpp"

using namespace polytuple;
namespace fs = std::filesystem;

namespace {

// ctest runs with the build directory as cwd, next to the binary.
const std::string kBinary = "./polytuple";
const std::string kScratch = "cli_scratch";

int run(const std::string& args) {
    const std::string cmd = kBinary + " " + args + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string path(const std::string& name) { return kScratch + "/" + name; }

}  // namespace

TEST_CASE("command line surface end to end") {
    REQUIRE_MESSAGE(fs::exists(kBinary), "run from the build directory");
    fs::create_directories(kScratch);

    SUBCASE("generation is deterministic in the seed") {
        REQUIRE(run("gen random --n 10 --bbox 1000000 --seed 7 --output " + path("a.json")) == 0);
        REQUIRE(run("gen random --n 10 --bbox 1000000 --seed 7 --output " + path("b.json")) == 0);
        REQUIRE(run("gen random --n 10 --bbox 1000000 --seed 8 --output " + path("c.json")) == 0);
        CHECK(read_text_file(path("a.json")) == read_text_file(path("b.json")));
        CHECK(read_text_file(path("a.json")) != read_text_file(path("c.json")));
    }

    SUBCASE("disk pipeline: gen, ranges, color, verify") {
        REQUIRE(run("gen random --n 10 --bbox 1000000 --seed 3 --output " + path("pts.json")) == 0);
        REQUIRE(run("ranges --input " + path("pts.json") + " --kind disks2d --output " +
                    path("hg.json")) == 0);
        REQUIRE(run("color --input " + path("pts.json") + " --kind disks2d --k 2 --output " +
                    path("col.json")) == 0);
        CHECK(run("verify " + path("hg.json") + " " + path("col.json") + " --f 14 --output " +
                  path("rep.json")) == 0);
        const VerificationReport report = report_from_json(read_text_file(path("rep.json")));
        CHECK(report.ok);
        CHECK(report.f == 14);
    }

    SUBCASE("resampled grid coloring verifies and leaves a log") {
        REQUIRE(run("gen grid 6 6 --output " + path("grid.json")) == 0);
        REQUIRE(run("ranges --input " + path("grid.json") + " --kind rects2d --output " +
                    path("ghg.json")) == 0);
        REQUIRE(run("color --input " + path("grid.json") +
                    " --kind rects2d --t 2 --k 2 --seed 11 --output " + path("gcol.json")) == 0);
        CHECK(fs::exists(path("gcol.json.log")));
        // Derived window floor for k = 2 pairs at c = 126.
        CHECK(run("verify " + path("ghg.json") + " " + path("gcol.json") + " --f 14") == 0);
    }

    SUBCASE("exit codes distinguish the failure modes") {
        CHECK(run("gen random --n 10 --bbox 1000000 --output " + path("x.json")) == 2);
        CHECK(run("ranges --input " + path("missing.json")) == 2);
        CHECK(run("gen grid 0 4 --output " + path("x.json")) == 2);

        REQUIRE(run("gen random --n 10 --bbox 1000000 --seed 3 --output " + path("pts.json")) == 0);
        REQUIRE(run("ranges --input " + path("pts.json") + " --kind disks2d --output " +
                    path("hg.json")) == 0);
        CHECK(run("exactf --input " + path("hg.json") +
                  " --t 2 --k 3 --budget-nodes 2 --output " + path("ef.json")) == 4);

        REQUIRE(run("gen grid 2 2 --output " + path("g22.json")) == 0);
        CHECK(run("color --input " + path("g22.json") +
                  " --kind rects2d --t 2 --k 7 --m 3 --seed 1 --max-rounds 20 --output " +
                  path("x.json")) == 3);

        // Single-pair interval edges cannot show two pair colors at f = 2.
        REQUIRE(run("gen random --n 12 --dim 1 --bbox 100000 --seed 5 --output " +
                    path("line.json")) == 0);
        REQUIRE(run("ranges --input " + path("line.json") + " --kind intervals1d --output " +
                    path("lhg.json")) == 0);
        REQUIRE(run("color --input " + path("line.json") +
                    " --kind intervals1d --t 2 --k 2 --output " + path("lcol.json")) == 0);
        CHECK(run("verify " + path("lhg.json") + " " + path("lcol.json") + " --f 2 --output " +
                  path("lrep.json")) == 1);
        const VerificationReport report = report_from_json(read_text_file(path("lrep.json")));
        CHECK_FALSE(report.ok);
        CHECK_FALSE(report.violations.empty());
    }

    SUBCASE("net decomposition reaches the file format intact") {
        REQUIRE(run("gen random --n 16 --dim 1 --bbox 100000 --seed 9 --output " +
                    path("line.json")) == 0);
        REQUIRE(run("nets --input " + path("line.json") + " --t 2 --eps 1/2 --output " +
                    path("dec.json")) == 0);
        const NetDecomposition nets = decomposition_from_json(read_text_file(path("dec.json")));
        CHECK(nets.t == 2);
        CHECK(nets.k >= 1);
        CHECK(nets.coloring.n == 16);
        CHECK(decomposition_to_json(nets) == read_text_file(path("dec.json")));
    }

    SUBCASE("svg emission renders points and a highlighted range") {
        REQUIRE(run("gen random --n 8 --bbox 1000000 --seed 2 --output " + path("p.svg")) == 0);
        const std::string plain = read_text_file(path("p.svg"));
        CHECK(plain.rfind("<svg", 0) == 0);
        CHECK(plain.find("<circle") != std::string::npos);

        REQUIRE(run("gen random --n 8 --bbox 1000000 --seed 2 --output " + path("p.json")) == 0);
        REQUIRE(run("ranges --input " + path("p.json") + " --kind disks2d --output " +
                    path("hl.svg")) == 0);
        const std::string highlighted = read_text_file(path("hl.svg"));
        CHECK(highlighted.find("fill-opacity") != std::string::npos);
        CHECK(highlighted.find("<line") != std::string::npos);
    }
}
