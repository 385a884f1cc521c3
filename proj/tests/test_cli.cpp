#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Result {
    int status = -1;
    std::string out;
};

Result run(const std::string& args)
{
    const std::string cmd = std::string("\"") + NEIGHBORLY_CLI + "\" " + args + " 2>/dev/null";
    Result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& content)
{
    const auto path = std::filesystem::temp_directory_path() / ("neighborly_cli_" + name);
    std::ofstream(path) << content;
    return path.string();
}

bool contains(const std::string& text, const std::string& what)
{
    return text.find(what) != std::string::npos;
}

} // namespace

TEST_CASE("solve")
{
    const auto c5 = write_temp("c5.g6", "Dhc\n");
    auto r = run("solve chromatic " + c5);
    CHECK(r.status == 0);
    CHECK(contains(r.out, "chi 3\n"));
    CHECK(contains(run("solve vc " + c5).out, "beta 3\n"));

    const auto contradiction = write_temp("u.cnf", "p cnf 1 2\n1 0\n-1 0\n");
    CHECK(run("solve sat " + contradiction).out == "s UNSATISFIABLE\n");
}

TEST_CASE("oracle-run")
{
    auto p4 = run("oracle-run colorer " + write_temp("p4.g6", "Ch\n"));
    CHECK(p4.status == 0);
    CHECK(contains(p4.out, "value 2\n"));
    CHECK(contains(p4.out, "queries 2\n"));
    CHECK(contains(p4.out, "{\"query\":2,"));

    auto k2 = run("oracle-run vc-vertex-del " + write_temp("k2.g6", "A_\n"));
    CHECK(contains(k2.out, "value 1\n"));
    CHECK(contains(k2.out, "queries 2\n"));

    // A budget of one query is not enough for the colorer on P4.
    CHECK(run("oracle-run colorer --query-budget 1 " + write_temp("p4b.g6", "Ch\n")).status == 1);
}

TEST_CASE("reduce")
{
    const auto phi = write_temp("two.cnf", "p cnf 3 2\n1 2 3 0\n-1 2 -3 0\n");
    auto pw = run("reduce pw " + phi);
    CHECK(pw.status == 0);
    CHECK(contains(pw.out, "p cnf 5 9\n"));
    CHECK(contains(pw.out, "{\"deleted_clause\":8,"));

    const auto out = (std::filesystem::temp_directory_path() / "neighborly_cli_g.json").string();
    CHECK(run("reduce g " + phi + " -o " + out).status == 0);
    std::ifstream in(out);
    std::string json((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(contains(json, "\"roles\""));
    CHECK(std::filesystem::exists(out + ".witnesses.jsonl"));

    auto theta = run("reduce theta --format graph6 " + write_temp("k3.g6", "Bw\n") + " " + write_temp("k2t.g6", "A_\n"));
    CHECK(theta.status == 0);
    CHECK(theta.out.size() > 1);
}

TEST_CASE("recognize and catalog")
{
    auto r = run("recognize chi-critical " + write_temp("c5r.g6", "Dhc\n"));
    CHECK(r.out.rfind("Dhc true ", 0) == 0);
    CHECK(contains(r.out, "summary: 1 graphs, 1 true, 0 false\n"));

    auto mu = run("recognize minimal-unsat " + write_temp("mu.cnf", "p cnf 1 2\n1 0\n-1 0\n"));
    CHECK(mu.out.rfind("true ", 0) == 0);

    auto cat = run("catalog beta-stable --vertices 4");
    CHECK(cat.out == "C]\nCo\nCs\nC}\nsummary: 11 graphs, 4 beta-stable\n");
    CHECK(run("catalog beta-stable --vertices 4").out == cat.out);
}

TEST_CASE("exit codes")
{
    CHECK(run("solve sat " + write_temp("bad.cnf", "1 2 0\n")).status == 2);
    CHECK(run("solve chromatic " + write_temp("bad.g6", "D\n")).status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("reduce join-lift --k 3 " + write_temp("c5j.g6", "Dhc\n")).status == 3);
    CHECK(run("reduce f " + write_temp("one.cnf", "p cnf 3 1\n1 2 3 0\n")).status == 3);
}

TEST_CASE("verify uses the seed from the environment")
{
    auto a = run("verify sat-witness --seed 7");
    CHECK(a.status == 0);
    CHECK(a.out.rfind("neighborly verify (seed 7)\n", 0) == 0);
    auto b = run("verify sat-witness");
    CHECK(b.out.rfind("neighborly verify (seed 42)\n", 0) == 0);
    const std::string env = "NEIGHBORLY_SEED=7 \"" + std::string(NEIGHBORLY_CLI) + "\" verify sat-witness";
    FILE* pipe = popen(env.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    pclose(pipe);
    CHECK(out == a.out);
}
