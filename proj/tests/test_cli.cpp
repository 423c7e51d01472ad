// End-to-end tests of the command-line driver: each case spawns the real
// binary (path injected as KNUTSON_CLI_BIN at compile time) and checks the
// exit code and output.  Exit-code contract: 0 success, 1 failed check,
// 2 usage error, 3 cap exceeded.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

struct CliResult {
    int code = -1;
    std::string output; // stdout and stderr interleaved
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(KNUTSON_CLI_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
        r.output.append(buf, got);
    }
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

// A scratch file that cleans up after itself.
struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& stem, const std::string& content) {
        path = std::filesystem::temp_directory_path() /
               (stem + "." + std::to_string(::getpid()) + ".txt");
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::filesystem::remove(path); }
    std::string str() const { return path.string(); }
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

} // namespace

TEST_CASE("gb prints the reduced basis and exits 0") {
    CliResult r = run_cli("gb --gens \"x1*x3 - x2^2; x1*x2 - x3\"");
    CHECK(r.code == 0);
    // Reduced lex basis derived in the library tests: the parser round-trip
    // makes the three monic generators appear one per line.
    CHECK(contains(r.output, "x2^3 - x3^2"));
    CHECK(contains(r.output, "x1*x3 - x2^2"));
    CHECK(contains(r.output, "x1*x2 - x3"));
}

TEST_CASE("a syntax error reports its byte offset and exits 2") {
    CliResult r = run_cli("gb --gens \"x1*x3-x2^2)\"");
    CHECK(r.code == 2);
    CHECK(contains(r.output, "offset 11"));
}

TEST_CASE("fractional coefficients parse and normalize") {
    CliResult r = run_cli("gb --gens \"1/2*x1\"");
    CHECK(r.code == 0);
    CHECK(contains(r.output, "x1"));
}

TEST_CASE("initial prints the leading-term ideal") {
    CliResult r = run_cli("initial --gens \"x1*x3 - x2^2; x1*x2 - x3\"");
    CHECK(r.code == 0);
    CHECK(contains(r.output, "(x1*x2, x1*x3, x2^3)"));
}

TEST_CASE("member answers with the exit code") {
    CHECK(run_cli("member --poly \"x2^3 - x3^2\" "
                  "--gens \"x1*x3 - x2^2; x1*x2 - x3\"")
              .code == 0);
    CliResult out = run_cli("member --poly \"x1\" --gens \"x2\"");
    CHECK(out.code == 1);
    CHECK(contains(out.output, "not a member"));
}

TEST_CASE("equal answers with the exit code") {
    CHECK(run_cli("equal --left \"x1; x2\" --right \"x2; x1 + x2\"").code == 0);
    CHECK(run_cli("equal --left \"x1\" --right \"x2\"").code == 1);
}

TEST_CASE("sum, intersect and colon emit reduced bases") {
    CliResult sum = run_cli("sum --left \"x1*x3 - x2^2\" --right \"x2\"");
    CHECK(sum.code == 0);
    CHECK(contains(sum.output, "x1*x3"));

    CliResult meet = run_cli("intersect --left \"x1\" --right \"x2\"");
    CHECK(meet.code == 0);
    CHECK(contains(meet.output, "x1*x2"));

    CliResult colon = run_cli("colon --left \"x1*x2\" --right \"x1\"");
    CHECK(colon.code == 0);
    CHECK(contains(colon.output, "x2"));
}

TEST_CASE("hilbert emits the summary as JSON") {
    CliResult r = run_cli("hilbert --gens \"x1*x3 - x2^2\"");
    CHECK(r.code == 0);
    CHECK(contains(r.output, "\"h_vector\""));
    CHECK(contains(r.output, "\"dim\": 2"));
    CHECK(contains(r.output, "\"height\": 1"));
    CHECK(contains(r.output, "\"multiplicity\": 2"));
}

TEST_CASE("generators can come from a file with comments") {
    TempFile gens("knutson_cli_gens", "# two generators\nx1*x3 - x2^2\nx1*x2 - x3\n");
    CliResult at = run_cli("gb --gens @" + gens.str());
    CHECK(at.code == 0);
    CHECK(contains(at.output, "x2^3 - x3^2"));
    // A bare path to an existing file reads the same way.
    CliResult bare = run_cli("gb --gens " + gens.str());
    CHECK(bare.output == at.output);
}

TEST_CASE("ring flags select order, characteristic and variable count") {
    // Either leading term of x1*x4 - x2*x3 gives the same summary, so the
    // point here is only that --order grevlex parses and computes.
    CliResult grev = run_cli("hilbert --vars 4 --order grevlex --gens \"x1*x4 - x2*x3\"");
    CHECK(grev.code == 0);
    CHECK(contains(grev.output, "\"multiplicity\": 2"));
    CliResult mat = run_cli(
        "gb --order \"matrix:1,0,0;0,1,0;0,0,1\" --gens \"x2*x3 - x1; x2^2\"");
    CliResult lex = run_cli("gb --order lex --gens \"x2*x3 - x1; x2^2\"");
    CHECK(mat.code == 0);
    CHECK(mat.output == lex.output);

    CliResult fp = run_cli("gb --char 5 --gens \"x1*x3 - 1/2*x2^2\"");
    CHECK(fp.code == 0);
    // 1/2 = 3 mod 5, so the monic trailing coefficient is -3 = 2.
    CHECK(contains(fp.output, "x1*x3 + 2*x2^2"));

    CliResult badp = run_cli("gb --char 4 --gens \"x1\"");
    CHECK(badp.code == 2);
}

TEST_CASE("knutson-closure reports the family and certifies it") {
    CliResult r = run_cli("knutson-closure --seed \"x1*x2\"");
    CHECK(r.code == 0);
    CHECK(contains(r.output, "family of 5 members"));
    CHECK(contains(r.output, "0 violations"));

    // Caps are surfaced as exit 3.
    CHECK(run_cli("knutson-closure --seed \"x1*x2*x3 - x2^3\" --max-members 3")
              .code == 3);
    // A non-squarefree leading term is refused up front.
    CHECK(run_cli("knutson-closure --seed \"x1^2\"").code == 2);
}

TEST_CASE("closure report JSON is deterministic and carries the schema") {
    std::filesystem::path out1 =
        std::filesystem::temp_directory_path() / "knutson_cli_clo1.json";
    std::filesystem::path out2 =
        std::filesystem::temp_directory_path() / "knutson_cli_clo2.json";
    CHECK(run_cli("knutson-closure --seed \"x1*x2\" --out " + out1.string()).code == 0);
    CHECK(run_cli("knutson-closure --seed \"x1*x2\" --out " + out2.string()).code == 0);
    std::string a = slurp(out1), b = slurp(out2);
    CHECK(a == b);
    CHECK(contains(a, "\"members\""));
    CHECK(contains(a, "\"checks\""));
    CHECK(contains(a, "\"stats\""));
    CHECK(contains(a, "\"provenance\""));
    CHECK(contains(a, "\"hilbert_summary\""));
    std::filesystem::remove(out1);
    std::filesystem::remove(out2);
}

TEST_CASE("modp compare flags only the bad prime") {
    TempFile ideal("knutson_cli_tilted", "2*x1 - x2\n");
    CliResult r =
        run_cli("modp compare --ideal " + ideal.str() + " --primes 2,3,5,101 --order lex");
    CHECK(r.code == 1);
    CHECK(contains(r.output, "p=2  bad"));
    CHECK(contains(r.output, "p=3  match"));
    CHECK(contains(r.output, "p=101  match"));
    CHECK(contains(r.output, "1 of 4 primes flagged"));

    CliResult good = run_cli("modp compare --ideal \"x1*x3 - x2^2\" --primes 2,3,5");
    CHECK(good.code == 0);
    CHECK(contains(good.output, "0 of 3 primes flagged"));
}

TEST_CASE("modp scan sweeps primes up to a bound") {
    CliResult r = run_cli("modp scan --ideal \"2*x1 - x2\" --upto 10");
    CHECK(r.code == 1);
    CHECK(contains(r.output, "1 of 4 primes flagged"));

    CHECK(run_cli("modp scan --ideal \"x1\" --upto 999999").code == 2);
}

TEST_CASE("suites run from the command line") {
    CliResult mono = run_cli("suite squarefree-monomial --n 2");
    CHECK(mono.code == 0);
    CHECK(contains(mono.output, "0 failed"));

    // Desk-scale refusal is a usage error.
    CliResult refused = run_cli("suite hankel-square --m 99");
    CHECK(refused.code == 2);
    CHECK(contains(refused.output, "refused"));
}

TEST_CASE("suite JSON is byte-identical across runs unless timestamped") {
    std::filesystem::path out1 =
        std::filesystem::temp_directory_path() / "knutson_cli_suite1.json";
    std::filesystem::path out2 =
        std::filesystem::temp_directory_path() / "knutson_cli_suite2.json";
    CHECK(run_cli("suite squarefree-monomial --n 2 --json " + out1.string()).code == 0);
    CHECK(run_cli("suite squarefree-monomial --n 2 --json " + out2.string()).code == 0);
    CHECK(slurp(out1) == slurp(out2));
    CHECK(contains(slurp(out1), "\"anchor\""));
    CHECK_FALSE(contains(slurp(out1), "timestamp"));

    CHECK(run_cli("--timestamp suite squarefree-monomial --n 2 --json " +
                  out1.string())
              .code == 0);
    CHECK(contains(slurp(out1), "\"timestamp\""));
    std::filesystem::remove(out1);
    std::filesystem::remove(out2);
}

TEST_CASE("hankel verify runs both characteristics") {
    std::filesystem::path rep =
        std::filesystem::temp_directory_path() / "knutson_cli_hankel.json";
    CliResult q = run_cli("hankel verify --m 2 --shape square --report " + rep.string());
    CHECK(q.code == 0);
    CHECK(contains(q.output, "0 failed"));
    CHECK(contains(slurp(rep), "hankel-verify (square, m = 2, char 0)"));
    std::filesystem::remove(rep);

    CHECK(run_cli("hankel verify --m 2 --shape rect").code == 0);
    CHECK(run_cli("hankel verify --m 2 --shape square --char 101").code == 0);
    CHECK(run_cli("hankel verify --m 9 --shape square").code == 2);
}

TEST_CASE("bare invocations are usage errors, help is not") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("no-such-command").code == 2);
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("gb").code == 2); // --gens is required
}
