// Runs `neighborly verify all --seed 42` twice and prints one line per
// acceptance criterion.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
    int status = -1;
    std::string report;
    double seconds = 0;
};

Run run_verify(const std::string& cli, const std::filesystem::path& out)
{
    const std::string cmd = "\"" + cli + "\" verify all --seed 42 -o \"" + out.string() + "\"";
    const auto t0 = std::chrono::steady_clock::now();
    Run r;
    r.status = std::system(cmd.c_str());
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ifstream in(out, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    r.report = ss.str();
    return r;
}

// "suite/property" -> passed
std::map<std::string, bool> parse_report(const std::string& report)
{
    std::map<std::string, bool> out;
    std::istringstream in(report);
    std::string line, suite;
    while (std::getline(in, line)) {
        if (line.size() > 2 && line.front() == '[' && line.back() == ']') {
            suite = line.substr(1, line.size() - 2);
            continue;
        }
        for (const char* tag : {"  PASS ", "  FAIL "}) {
            if (line.rfind(tag, 0) != 0) continue;
            const auto colon = line.find(':');
            out[suite + "/" + line.substr(7, colon - 7)] = tag[2] == 'P';
        }
    }
    return out;
}

bool suite_passed(const std::map<std::string, bool>& props, const std::string& suite)
{
    bool any = false;
    for (const auto& [name, ok] : props) {
        if (name.rfind(suite + "/", 0) != 0) continue;
        any = true;
        if (!ok) return false;
    }
    return any;
}

bool property_passed(const std::map<std::string, bool>& props, const std::string& name)
{
    auto it = props.find(name);
    return it != props.end() && it->second;
}

} // namespace

int main(int argc, char** argv)
{
    if (argc < 3) {
        std::cerr << "usage: acceptance <neighborly-cli> <work-dir>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::filesystem::path dir = argv[2];
    std::filesystem::create_directories(dir);

    const Run first = run_verify(cli, dir / "verify_run1.txt");
    const Run second = run_verify(cli, dir / "verify_run2.txt");
    const auto props = parse_report(first.report);

    struct Criterion {
        std::string text;
        bool ok;
    };
    const std::vector<Criterion> criteria = {
        {"sat-witness: f(phi) is E3CNF, satisfiability preserved, every clause-deleted witness satisfies",
         suite_passed(props, "sat-witness")},
        {"coloring-witness: 3-colorable iff satisfiable, optimal 3-colorings for every edge and vertex deletion",
         suite_passed(props, "coloring-witness")},
        {"minimality pipeline: pw output minimal-unsat, all four recognizers accept the graph",
         property_passed(props, "criticality-crosschecks/minimality-pipeline")},
        {"join-lift: edge-minimality transfers and chi shifts by k-3 on all graphs up to 6 vertices",
         property_passed(props, "criticality-crosschecks/join-lift")},
        {"oracle algorithms: optimal answers within query budgets on all graphs up to 7 vertices",
         suite_passed(props, "oracle-budgets")},
        {"vc-reduction: cover size matches satisfiability, optimal covers for every clause triangle",
         suite_passed(props, "vc-witness")},
        {"theta gadget: beta formula and vertex-criticality iff equal covers",
         property_passed(props, "criticality-crosschecks/theta-gadget")},
        {"determinism: two runs of verify all --seed 42 are byte-identical",
         !first.report.empty() && first.report == second.report},
    };

    bool all = first.status == 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::cout << (criteria[i].ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].text << '\n';
        all = all && criteria[i].ok;
    }
    std::cout << "verify all exit status " << first.status << ", runs took " << static_cast<int>(first.seconds)
              << "s and " << static_cast<int>(second.seconds) << "s\n";
    return all ? 0 : 1;
}
