// Runs the command-line tool as a subprocess and checks exit codes and
// outputs.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#ifndef WEILPOLY_CLI_PATH
#error "WEILPOLY_CLI_PATH must name the CLI executable"
#endif

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(std::string const & args)
{
    std::string cmd = std::string(WEILPOLY_CLI_PATH) + " " + args + " 2>&1";
    Run r { -1, {} };
    FILE * pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe))
        r.out.append(buf, n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(fs::path const & p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct TempDir {
    fs::path path;
    TempDir()
    {
        path = fs::temp_directory_path() / ("weilpoly_cli_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

bool contains(std::string const & s, std::string const & needle)
{
    return s.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("construct")
{
    Run ok = run("construct --rho 5 --b 1 --r 2 --p 5 --n 1 --m 0");
    CHECK(ok.code == 0);
    CHECK(ok.out.rfind("25,5,1,1,1\n", 0) == 0);
    CHECK(contains(ok.out, "absolutely simple: yes"));

    Run bad = run("construct --rho 5 --b 1 --r 2 --p 2 --n 2 --m 0");
    CHECK(bad.code == 2);
    CHECK(contains(bad.out, "q_congruent_1_mod_r"));

    CHECK(run("construct --rho 4 --b 1 --r 2 --p 5 --n 1 --m 0").code == 1);
    CHECK(run("construct --rho 5 --b 1 --r 2 --p 5 --n 1").code == 1);
    CHECK(run("construct --rho 5 --b 1 --r 2 --p 5 --n 1 --m x").code == 1);
    CHECK(run("").code == 1);
    CHECK(run("frobnicate").code == 1);

    Run json = run("construct --rho 5 --b 2 --r 2 --p 5 --n 1 --m 0 --format jsonl");
    CHECK(json.code == 0);
    CHECK(contains(json.out, "\"witness_d\":5"));
}

TEST_CASE("verify")
{
    Run cx1 = run("verify --poly 8,4,2,5,1,1,1 --q 2");
    CHECK(cx1.code == 3);
    CHECK(contains(cx1.out, "two real roots"));
    CHECK(contains(cx1.out, "real roots 2"));

    Run cx2 = run("verify --poly 64,16,2,2,1 --q 8");
    CHECK(cx2.code == 0);
    CHECK(contains(cx2.out, "ordinary: no"));

    Run fx = run("verify --poly 25,5,1,1,1 --q 5");
    CHECK(fx.code == 0);
    CHECK(contains(fx.out, "ordinary: yes"));
    CHECK(contains(fx.out, "simple: yes"));
    CHECK(contains(fx.out, "absolutely simple: yes"));

    CHECK(run("verify --poly 1,,2 --q 5").code == 1);
    CHECK(run("verify --poly 25,5,1,1,1 --q five").code == 1);
    CHECK(run("verify --poly 25,5,1,1,1 --q 0").code == 1);
}

TEST_CASE("search and report")
{
    TempDir tmp;
    auto a = tmp.path / "a.jsonl", b = tmp.path / "b.jsonl", c = tmp.path / "c.csv";
    std::string range = "search --rho 5,7 --b-max 2 --q-max 32 --no-timings --no-numeric";
    Run r1 = run(range + " --out " + a.string());
    CHECK(r1.code == 0);
    CHECK(contains(r1.out, "theorem violations 0"));
    Run r2 = run(range + " --workers 3 --out " + b.string());
    CHECK(r2.code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK_FALSE(slurp(a).empty());

    CHECK(run(range + " --format csv --out " + c.string()).code == 0);
    std::string csv = slurp(c);
    CHECK(csv.rfind("tuple.rho,", 0) == 0);

    Run table = run("report --in " + a.string());
    CHECK(table.code == 0);
    CHECK(contains(table.out, "no (d = 5)"));
    CHECK(contains(table.out, "no (d = 7)"));

    auto e = tmp.path / "e.jsonl";
    Run empty = run("search --q-max 3 --out " + e.string());
    CHECK(empty.code == 0);
    CHECK(contains(empty.out, "0 tuples"));
    CHECK(fs::file_size(e) == 0);
    Run empty_table = run("report --in " + e.string());
    CHECK(empty_table.code == 0);

    CHECK(run("search --rho 5 --q-max 8 --out /nonexistent/dir/x.jsonl").code == 1);
    auto junk = tmp.path / "junk.jsonl";
    std::ofstream(junk) << "not json\n";
    CHECK(run("report --in " + junk.string()).code == 1);
    CHECK(run("report --in " + (tmp.path / "missing.jsonl").string()).code == 1);
}
