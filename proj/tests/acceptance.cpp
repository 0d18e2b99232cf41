// Acceptance gate: runs every verification check at the default budget and
// prints exactly one PASS/FAIL line per acceptance criterion.  Exit code 0
// iff every criterion passes.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "mgx/verify.hpp"

int main() {
    mgx::CheckOptions opt;
    const char* env_threads = std::getenv("MGX_THREADS");
    if (env_threads != nullptr) opt.threads = std::max(1, std::atoi(env_threads));

    const std::vector<mgx::CheckReport> reports = mgx::run_checks("", opt);

    struct Line {
        bool pass = true;
        std::vector<std::string> parts;
        double seconds = 0.0;
    };
    std::map<int, Line> by_criterion;
    for (const mgx::CheckReport& r : reports) {
        Line& line = by_criterion[r.criterion];
        line.seconds += r.seconds;
        if (r.status == "pass") {
            line.parts.push_back(r.name + " (" + r.detail + ")");
        } else {
            line.pass = false;
            line.parts.push_back(r.name + " [" + r.status + ": " + r.detail + "]");
        }
    }

    bool all_pass = true;
    for (const auto& [criterion, line] : by_criterion) {
        all_pass = all_pass && line.pass;
        std::string joined;
        for (const std::string& p : line.parts) {
            if (!joined.empty()) joined += "; ";
            joined += p;
        }
        std::printf("%s criterion %2d: %s [%.1fs]\n", line.pass ? "PASS" : "FAIL", criterion,
                    joined.c_str(), line.seconds);
    }
    std::printf("%s: %zu/11 criteria\n", all_pass ? "ALL PASS" : "FAILURES",
                by_criterion.size());
    return all_pass ? 0 : 1;
}
