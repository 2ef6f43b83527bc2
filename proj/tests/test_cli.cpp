#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

// The driver binary under test; ctest exports ENZEROS_CLI, and the
// fallbacks cover running the test executable by hand.
std::string cli_binary() {
    if (const char* env = std::getenv("ENZEROS_CLI")) return env;
    for (const char* candidate :
         {"build/tools/enzeros", "tools/enzeros", "../tools/enzeros"}) {
        if (std::filesystem::exists(candidate)) return candidate;
    }
    FAIL("driver binary not found; set ENZEROS_CLI");
    return "";
}

struct CliResult {
    int status = -1;
    std::string output;  // stdout and stderr interleaved
};

CliResult run_cli(const std::string& args) {
    std::string cmd = cli_binary() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int rc = pclose(pipe);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("identities pass for rediscovered relations") {
    CliResult r2 = run_cli("identities --level 2");
    CHECK(r2.status == 0);
    CHECK(contains(r2.output, "level 2"));
    CHECK(contains(r2.output, "coefficients match"));
    CHECK(contains(r2.output, "q^0: ok"));

    CliResult r7 = run_cli("identities --level 7");
    CHECK(r7.status == 0);

    CliResult all = run_cli("identities");
    CHECK(all.status == 0);
    for (const char* level : {"level 2", "level 3", "level 5", "level 7"})
        CHECK(contains(all.output, level));
}

TEST_CASE("identities expose the published level-7 misprint") {
    CliResult r = run_cli("identities --level 7 --as-printed");
    CHECK(r.status == 1);
    CHECK(contains(r.output, "q^0: MISMATCH"));
    CHECK(contains(r.output, "2221/2401"));
    CHECK(contains(r.output, "deficit 180/2401"));

    // The other printed relations are faithful.
    for (int n : {2, 3, 5}) {
        CliResult ok = run_cli("identities --as-printed --level " + std::to_string(n));
        CHECK(ok.status == 0);
    }
}

TEST_CASE("certify prints the zero list and exits cleanly") {
    CliResult r = run_cli("certify --level 5");
    CHECK(r.status == 0);
    CHECK(contains(r.output, "zeros: -1/(i+2) -1/(i+3)"));
    CHECK(contains(r.output, "ZERO"));
    CHECK(contains(r.output, "NONZERO"));

    CliResult bad = run_cli("certify --level 4");
    CHECK(bad.status == 64);

    CliResult missing = run_cli("certify");
    CHECK(missing.status == 64);
}

TEST_CASE("certify JSON report matches the schema and round-trips") {
    const char* path = "/tmp/enzeros_cli_report.json";
    std::filesystem::remove(path);
    CliResult r = run_cli(std::string("certify --level 2 --json ") + path);
    REQUIRE(r.status == 0);

    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();

    // Byte-identical canonical rendering.
    nlohmann::ordered_json doc = nlohmann::ordered_json::parse(text);
    CHECK(doc.dump(2) + "\n" == text);

    CHECK(doc["level"] == 2);
    REQUIRE(doc["relation"].is_array());
    REQUIRE(doc["relation"].size() == 2);
    for (const auto& term : doc["relation"]) {
        CHECK(term["etilde_power"].is_number());
        CHECK(term["e4"].is_number());
        CHECK(term["e6"].is_number());
        REQUIRE(term["coeff"].is_array());
        REQUIRE(term["coeff"].size() == 2);
        CHECK(term["coeff"][0].is_string());
        CHECK(term["coeff"][1].is_string());
    }
    REQUIRE(doc["candidates"].is_array());
    REQUIRE(doc["candidates"].size() == 2);
    for (const auto& cand : doc["candidates"]) {
        CHECK(cand["point"]["base"].is_string());
        CHECK(cand["point"]["k"].is_number());
        CHECK(cand["point"]["form"].is_string());
        CHECK((cand["verdict"] == "ZERO" || cand["verdict"] == "NONZERO" ||
               cand["verdict"] == "UNDECIDED"));
        for (const char* rect : {"etilde", "cofactor"}) {
            for (const char* part : {"re", "im"}) {
                const auto& interval = cand[rect][part];
                REQUIRE(interval.is_array());
                REQUIRE(interval.size() == 2);
                for (const auto& endpoint : interval) {
                    REQUIRE(endpoint.is_array());
                    REQUIRE(endpoint.size() == 2);
                    CHECK(endpoint[0].is_string());
                    CHECK(endpoint[1].is_string());
                }
            }
        }
        CHECK(cand["relocated"].is_boolean());
        CHECK(cand["params"]["m"].is_number());
        CHECK(cand["params"]["bits"].is_number());
        CHECK(cand["params"]["exp_terms"].is_number());
    }
    REQUIRE(doc["zeros"].is_array());
    REQUIRE(doc["zeros"].size() == 1);
    CHECK(doc["zeros"][0]["base"] == "i");
    CHECK(doc["zeros"][0]["k"] == 1);
    CHECK(doc["zeros"][0]["form"] == "inverted");

    std::filesystem::remove(path);
}

TEST_CASE("eval straddles zero where the theory says zero") {
    CliResult e6 = run_cli("eval E6 --point i");
    CHECK(e6.status == 0);
    CHECK(contains(e6.output, "contains zero: yes"));

    CliResult etilde = run_cli("eval Etilde2 --point inv:i+1");
    CHECK(etilde.status == 0);
    CHECK(contains(etilde.output, "contains zero: yes"));

    CliResult rect = run_cli("eval E4 --point 1/2,3/2");
    CHECK(rect.status == 0);
    CHECK(contains(rect.output, "contains zero: no"));

    CliResult rho = run_cli("eval Etilde3 --point base:rho");
    CHECK(rho.status == 0);
    CHECK(contains(rho.output, "contains zero: no"));
}

TEST_CASE("eval surfaces region violations with a relocation hint") {
    CliResult direct = run_cli("eval Etilde7 --point inv:rho+6");
    CHECK(direct.status == 1);
    CHECK(contains(direct.output, "error:"));
    CHECK(contains(direct.output, "--auto-relocate"));

    CliResult moved = run_cli("eval Etilde7 --point inv:rho+6 --auto-relocate");
    CHECK(moved.status == 0);
    CHECK(contains(moved.output, "evaluated through -1/(rho-1)"));
    CHECK(contains(moved.output, "contains zero: no"));
}

TEST_CASE("eval rejects malformed input as usage errors") {
    CHECK(run_cli("eval E8 --point i").status == 64);
    CHECK(run_cli("eval E4 --point nowhere").status == 64);
    CHECK(run_cli("eval E4 --point 1/2,-3").status == 64);
    CHECK(run_cli("eval E4 --point inv:i*3").status == 64);
    CHECK(run_cli("eval E4").status == 64);
}

TEST_CASE("scan emits a complete CSV grid") {
    CliResult r = run_cli(
        "scan --level 2 --xmin -1/2 --xmax 0 --ymin 2 --ymax 3 --nx 10 --ny 10");
    CHECK(r.status == 0);
    CHECK(!contains(r.output, "\r"));
    std::vector<std::string> lines = split_lines(r.output);
    REQUIRE(lines.size() == 101);
    CHECK(lines[0] == "x,y,abs_lo,abs_hi,status");
    for (size_t i = 1; i < lines.size(); ++i) {
        std::vector<std::string> fields = split_fields(lines[i]);
        REQUIRE(fields.size() == 5);
        CHECK(fields[4] == "OK");
        CHECK(!fields[2].empty());
        CHECK(!fields[3].empty());
        CHECK(std::stod(fields[2]) <= std::stod(fields[3]));
    }
}

TEST_CASE("scan brackets the certified zero tightly") {
    CliResult r = run_cli(
        "scan --level 2 --xmin -1/2 --xmax -1/2 --ymin 1/2 --ymax 1/2 --nx 1 --ny 1");
    REQUIRE(r.status == 0);
    std::vector<std::string> lines = split_lines(r.output);
    REQUIRE(lines.size() == 2);
    std::vector<std::string> fields = split_fields(lines[1]);
    REQUIRE(fields.size() == 5);
    CHECK(fields[4] == "OK");
    CHECK(std::stod(fields[2]) == 0.0);
    CHECK(std::stod(fields[3]) <= 1e-19);
}

TEST_CASE("scan marks shallow points SKIPPED") {
    CliResult r = run_cli(
        "scan --level 2 --xmin 0 --xmax 0 --ymin 1/100 --ymax 1/100 --nx 1 --ny 1");
    REQUIRE(r.status == 0);
    std::vector<std::string> lines = split_lines(r.output);
    REQUIRE(lines.size() == 2);
    std::vector<std::string> fields = split_fields(lines[1]);
    REQUIRE(fields.size() == 5);
    CHECK(fields[2].empty());
    CHECK(fields[3].empty());
    CHECK(fields[4] == "SKIPPED");
}

TEST_CASE("scan rejects malformed grids") {
    CHECK(run_cli("scan --level 2 --xmin 1 --xmax 0 --ymin 1 --ymax 1 "
                  "--nx 2 --ny 1").status == 64);
    CHECK(run_cli("scan --level 2 --xmin 0 --xmax 1 --ymin -1 --ymax 1 "
                  "--nx 2 --ny 2").status == 64);
    CHECK(run_cli("scan --level 2 --xmin 0 --xmax 1 --ymin 1 --ymax 1 "
                  "--nx 0 --ny 1").status == 64);
    CHECK(run_cli("scan --level 2 --xmin abc --xmax 1 --ymin 1 --ymax 1 "
                  "--nx 2 --ny 1").status == 64);
    CHECK(run_cli("scan --level 6 --xmin 0 --xmax 1 --ymin 1 --ymax 1 "
                  "--nx 2 --ny 1").status == 64);
}

TEST_CASE("scan writes to a file when asked") {
    const char* path = "/tmp/enzeros_cli_scan.csv";
    std::filesystem::remove(path);
    CliResult r = run_cli(std::string("scan --level 3 --xmin 0 --xmax 1/4 "
                                      "--ymin 1 --ymax 2 --nx 2 --ny 2 --out ") +
                          path);
    CHECK(r.status == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "x,y,abs_lo,abs_hi,status");
    std::filesystem::remove(path);
}

TEST_CASE("top-level usage") {
    CHECK(run_cli("").status == 64);
    CHECK(run_cli("frobnicate").status == 64);
    CliResult help = run_cli("--help");
    CHECK(help.status == 0);
    for (const char* sub : {"identities", "certify", "eval", "scan"})
        CHECK(contains(help.output, sub));
}

TEST_SUITE_END();
