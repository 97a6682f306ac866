// Exercises the installed command-line surface: exit codes, CSV schema,
// JSON keys. Invoked by ctest with the qdiscord binary path as argv[1].

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& cmd) {
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

int failures = 0;

void check(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    std::stringstream ss(s);
    std::string line;
    while (std::getline(ss, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-qdiscord>\n";
        return 2;
    }
    const std::string bin = argv[1];
    const std::string workbench = " --c1 1 --c2 -0.6 --c3 0.6 --channel phase";

    {
        const auto r = run(bin + " sweep" + workbench + " --x 0.5 --t-max 2 --steps 401");
        check(r.exit_code == 0, "sweep exits 0");
        const auto lines = lines_of(r.output);
        check(lines.size() == 402, "sweep emits header + 401 rows");
        check(lines[0] == "gamma_t,mutual_info,classical,discord,sqd_x=0.5",
              "sweep header schema");
        check(lines[1].rfind("0,1.27807191,1,0.278071905,1.11801344", 0) == 0,
              "sweep first row values, got: " + lines[1]);
    }
    {
        const auto r = run(bin + " sweep" + workbench + " --x 0.5 --steps 2");
        check(lines_of(r.output).size() == 3, "steps=2 emits two rows");
    }
    {
        const auto r = run(bin + " sweep --c1 1 --c2 1 --c3 1");
        check(r.exit_code == 2, "invalid state exits 2");
    }
    {
        const auto r = run(bin + " sweep" + workbench + " --channel nosuch");
        check(r.exit_code == 2, "unknown channel exits 2");
    }
    {
        const auto r = run(bin + " sweep --no-such-flag");
        check(r.exit_code == 2, "bad flag exits 2");
    }
    {
        const auto r = run(bin + " point" + workbench + " --gamma-t 0 --x 0.5");
        check(r.exit_code == 0, "point exits 0");
        for (const char* key : {"\"mutual_info\"", "\"classical\"", "\"discord\"", "\"sqd\"",
                                "\"method\"", "\"0.5\""})
            check(r.output.find(key) != std::string::npos, std::string("point JSON has ") + key);
        check(r.output.find("1.118013") != std::string::npos, "point sqd value");
    }
    {
        const auto r = run(bin + " point" + workbench + " --gamma-t 0 --x 0.5 --method numeric");
        check(r.output.find("\"argmin_theta_phi\"") != std::string::npos,
              "numeric point reports the minimizing direction");
    }
    {
        const auto r = run(bin + " kink" + workbench + " --x 0.5,1,2");
        check(r.exit_code == 0, "kink exits 0");
        for (const char* key : {"\"classical\"", "\"discord\"", "\"sqd_x=0.5\"", "\"sqd_x=1\"",
                                "\"sqd_x=2\"", "\"slope_jump\"", "\"gamma_t_star\"", "\"flagged\""})
            check(r.output.find(key) != std::string::npos, std::string("kink JSON has ") + key);
    }
    {
        const auto r = run(bin + " verify --samples 5 --seed 7");
        check(r.exit_code == 0, "verify exits 0");
        check(r.output.find("PASS") != std::string::npos, "verify reports PASS lines");
        check(r.output.find("mutual information") != std::string::npos,
              "verify mentions the x=0 limit");
    }
    {
        const auto a = run(bin + " sweep" + workbench + " --x 0.5,1,2");
        const auto b = run(bin + " sweep" + workbench + " --x 0.5,1,2");
        check(a.output == b.output, "sweep output is deterministic");
    }

    if (failures == 0) std::cout << "cli_tests: all checks passed\n";
    return failures == 0 ? 0 : 1;
}
