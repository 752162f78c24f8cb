#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::current_path() / "cli_scratch" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void spit(const fs::path& path, const std::string& text) {
    std::ofstream(path, std::ios::binary) << text;
}

Run cstar(const std::string& args, const fs::path& dir) {
    const fs::path out = dir / "stdout.txt";
    const fs::path err = dir / "stderr.txt";
    const std::string command = std::string("\"") + CSTAR_CLI_PATH + "\" " + args + " > \"" + out.string() +
                                "\" 2> \"" + err.string() + "\"";
    const int status = std::system(command.c_str());
    Run run;
    run.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    run.out = slurp(out);
    run.err = slurp(err);
    return run;
}

// One-node scalar instance with f, g and the bounding pairs given as real numbers.
std::string scalar_instance(double f, double g, double x, double xp, double y, double yp) {
    Json j{{"dims", {{"n", 1}, {"k", 1}}},
           {"nodes", {0.5}},
           {"weights", {1.0}},
           {"f_values", {{f}}},
           {"g_values", {{g}}},
           {"x", {x}},
           {"x_prime", {xp}},
           {"y", {y}},
           {"y_prime", {yp}}};
    return j.dump();
}

}  // namespace

TEST_CASE("verify on the step witness") {
    const fs::path dir = scratch("verify_step");
    const Run emitted = cstar(std::string("sharpness --emit-instance \"") + (dir / "step.json").string() + "\"", dir);
    REQUIRE(emitted.code == 0);
    const Run run = cstar(std::string("verify \"") + (dir / "step.json").string() + "\"", dir);
    CHECK(run.code == 0);
    const Json report = Json::parse(run.out);
    for (const char* key : {"L0", "L1", "L2", "L3"}) CHECK(report[key].get<double>() == doctest::Approx(1.0));
    CHECK(report["pass"] == true);
}

TEST_CASE("verify on a constant pair") {
    const fs::path dir = scratch("verify_constant");
    // Two nodes, f = g = 0.3 everywhere: the functional vanishes.
    Json j = Json::parse(scalar_instance(0.3, 0.3, -1.0, 1.0, -1.0, 1.0));
    j["nodes"] = {0.25, 0.75};
    j["weights"] = {0.5, 0.5};
    j["f_values"] = {{0.3}, {0.3}};
    j["g_values"] = {{0.3}, {0.3}};
    spit(dir / "constant.json", j.dump());
    const Run run = cstar(std::string("verify \"") + (dir / "constant.json").string() + "\"", dir);
    CHECK(run.code == 0);
    CHECK(Json::parse(run.out)["L0"].get<double>() == 0.0);
}

TEST_CASE("verify flags a function outside its bounds") {
    const fs::path dir = scratch("verify_outside");
    spit(dir / "outside.json", scalar_instance(10.0, 0.5, 0.0, 1.0, 0.0, 1.0));
    const Run run = cstar(std::string("verify \"") + (dir / "outside.json").string() + "\"", dir);
    CHECK(run.code == 1);
    const Json report = Json::parse(run.out);
    CHECK(report["premise_margin_f"].get<double>() < 0.0);
    CHECK(report["pass"] == false);
}

TEST_CASE("verify rejects malformed input") {
    const fs::path dir = scratch("verify_malformed");
    spit(dir / "broken.json", "{\n  \"dims\": {\"n\": 1,\n  \"k\": }\n}\n");
    const Run broken = cstar(std::string("verify \"") + (dir / "broken.json").string() + "\"", dir);
    CHECK(broken.code == 2);
    CHECK(broken.err.find("3:8") != std::string::npos);

    Json j = Json::parse(scalar_instance(0.5, 0.5, 0.0, 1.0, 0.0, 1.0));
    j["weights"] = {0.7};
    spit(dir / "weights.json", j.dump());
    const Run weights = cstar(std::string("verify \"") + (dir / "weights.json").string() + "\"", dir);
    CHECK(weights.code == 2);
    CHECK(weights.err.find("/weights") != std::string::npos);

    CHECK(cstar(std::string("verify \"") + (dir / "missing.json").string() + "\"", dir).code == 2);
    CHECK(cstar("verify", dir).code == 2);
    CHECK(cstar("frobnicate", dir).code == 2);
}

TEST_CASE("campaign writes csv and summary") {
    const fs::path dir = scratch("campaign");
    const Run run = cstar("campaign --seed 42 --instances 1000 --out \"" + (dir / "a").string() + "\"", dir);
    CHECK(run.code == 0);
    const std::string csv = slurp(dir / "a" / "campaign.csv");
    CHECK(csv.rfind("seed,n,k,m,L0,L1,L2,L3,slack01,slack12,slack23,premise_margin_f,premise_margin_g,pass\n", 0) ==
          0);
    std::size_t lines = 0;
    for (char c : csv) lines += c == '\n';
    CHECK(lines == 1001);
    const Json summary = Json::parse(slurp(dir / "a" / "summary.json"));
    CHECK(summary["violations"] == 0);
    CHECK(summary["instances"] == 1000);

    // Same seed, different thread count: byte-identical output.
    CHECK(cstar("campaign --seed 42 --instances 1000 --jobs 4 --out \"" + (dir / "b").string() + "\"", dir).code == 0);
    CHECK(slurp(dir / "b" / "campaign.csv") == csv);

    // A config file supplies defaults, flags override it.
    spit(dir / "config.json", R"({"seed": 42, "instances": 5, "max_k": 2})");
    CHECK(cstar("campaign \"" + (dir / "config.json").string() + "\" --instances 7 --out \"" + (dir / "c").string() +
                    "\"",
                dir)
              .code == 0);
    const Json config_summary = Json::parse(slurp(dir / "c" / "summary.json"));
    CHECK(config_summary["instances"] == 7);
}

TEST_CASE("campaign rejects bad configuration") {
    const fs::path dir = scratch("campaign_bad");
    CHECK(cstar("campaign --instances 0 --out \"" + dir.string() + "\"", dir).code == 2);
    CHECK(cstar("campaign --max-n 100 --out \"" + dir.string() + "\"", dir).code == 2);
    CHECK(cstar("campaign --instances many", dir).code == 2);
    spit(dir / "config.json", R"({"instances": 5, "colour": "blue"})");
    CHECK(cstar("campaign \"" + (dir / "config.json").string() + "\" --out \"" + dir.string() + "\"", dir).code == 2);
}

TEST_CASE("sharpness") {
    const fs::path dir = scratch("sharpness");
    const Run first = cstar("sharpness", dir);
    CHECK(first.code == 0);
    const Json report = Json::parse(first.out);
    for (const char* key : {"L0", "L1", "L2", "L3"}) CHECK(std::abs(report[key].get<double>() - 1.0) <= 1e-12);
    CHECK(cstar("sharpness", dir).out == first.out);

    const Run skewed = cstar("sharpness --left-weight 0.4", dir);
    CHECK(skewed.code == 1);
    const Json skewed_report = Json::parse(skewed.out);
    CHECK(skewed_report["L0"].get<double>() < skewed_report["L3"].get<double>());
    CHECK(skewed_report["L0"].get<double>() == doctest::Approx(0.96));
    CHECK(cstar("sharpness --left-weight 1.5", dir).code == 2);
}

TEST_CASE("expapp") {
    const fs::path dir = scratch("expapp");
    // An odd grid on [-2, 2] hits A = 0, which is skipped with a note.
    const Run run = cstar("expapp --k 1 --samples 5 --out \"" + (dir / "a").string() + "\"", dir);
    CHECK(run.code == 0);
    CHECK(run.err.find("real:0") != std::string::npos);
    const std::string csv = slurp(dir / "a" / "expapp.csv");
    CHECK(csv.rfind("A_descriptor,norm_A,margin_i,margin_ii,margin_iii,premise_margin,quadrature_error\n", 0) == 0);

    CHECK(cstar("expapp --k 2 --samples 10 --out \"" + (dir / "b").string() + "\"", dir).code == 0);
    CHECK(cstar("expapp --k 2 --samples 10 --out \"" + (dir / "c").string() + "\"", dir).code == 0);
    CHECK(slurp(dir / "b" / "expapp.csv") == slurp(dir / "c" / "expapp.csv"));

    CHECK(cstar("expapp --norm-cap 80 --out \"" + dir.string() + "\"", dir).code == 2);
}
