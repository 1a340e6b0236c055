#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    const char* bin = std::getenv("LGMODEL_BIN");
    REQUIRE(bin != nullptr);
    std::string out_path = "cli_output.txt";
    std::string cmd = std::string(bin) + " " + args + " > " + out_path + " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(out_path.c_str());
    return {WEXITSTATUS(status), ss.str()};
}

std::string model(const std::string& name) {
    const char* dir = std::getenv("LGMODEL_MODELS");
    REQUIRE(dir != nullptr);
    return std::string(dir) + "/" + name;
}

}  // namespace

TEST_CASE("statespace renders the diamonds") {
    RunResult r = run("statespace " + model("two_cubic_J.model"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("73") != std::string::npos);

    r = run("statespace " + model("quintic_T.model") + " --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"hodge\"") != std::string::npos);
    CHECK(r.output.find("101") != std::string::npos);

    r = run("statespace " + model("two_cubic_J.model") + " --format latex");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\\\\") != std::string::npos);
}

TEST_CASE("group lists contributing elements") {
    RunResult r = run("group " + model("two_cubic_T.model"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("141 contributing elements") != std::string::npos);
    CHECK(r.output.find("order 81") != std::string::npos);

    r = run("group " + model("two_cubic_J.model"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("3 contributing elements") != std::string::npos);
}

TEST_CASE("mirror emits and checks the assignment") {
    RunResult r = run("mirror " + model("two_cubic_J.model") + " " + model("two_cubic_T.model") + " --check");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("71 matches, 2 documented misprints, 0 unexpected") !=
          std::string::npos);

    r = run("mirror " + model("quintic_J.model") + " " + model("quintic_T.model") +
            " --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"provenance\"") != std::string::npos);

    r = run("mirror " + model("two_cubic_J.model") + " " + model("quintic_J.model"));
    CHECK(r.exit_code == 2);
}

TEST_CASE("input errors exit with code 2") {
    CHECK(run("statespace no_such_file.model").exit_code == 2);
    CHECK(run("statespace " + model("two_cubic_J.model") + " --format yaml").exit_code == 2);
    CHECK(run("bogus-subcommand").exit_code == 2);

    std::string bad = "bad_model.tmp";
    {
        std::ofstream out(bad);
        out << "name broken\nvars x y\nweights 1\npoly W = x^2 + y^2\ngroup J\n";
    }
    CHECK(run("statespace " + bad).exit_code == 2);
    std::remove(bad.c_str());
}

TEST_CASE("paper suite passes") {
    RunResult r = run("paper-suite");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("FAIL") == std::string::npos);
    // One line per criterion.
    int passes = 0;
    for (std::size_t pos = 0; (pos = r.output.find("PASS", pos)) != std::string::npos; ++pos)
        ++passes;
    CHECK(passes == 8);
}
