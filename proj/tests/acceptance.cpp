// One line per acceptance criterion; exit status 1 if any fails.
// Usage: acceptance [fast|full] [criterion ...]

#include "hookdual/acceptance.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

using namespace hookdual;

int main(int argc, char** argv) {
    Profile profile = Profile::Full;
    std::vector<int> ids;
    try {
        for (int i = 1; i < argc; ++i) {
            const std::string a = argv[i];
            if (a == "fast" || a == "full")
                profile = parse_profile(a);
            else
                ids.push_back(std::stoi(a));
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance: %s\n", e.what());
        return 2;
    }
    if (ids.empty())
        for (int id = 1; id <= kCriteria; ++id) ids.push_back(id);
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    if (const char* t = std::getenv("HOOKDUAL_THREADS")) threads = std::atoi(t);
    if (threads < 1) threads = 1;

    bool all = true;
    for (int id : ids) {
        const CriterionResult r = run_criterion(id, profile, threads);
        all = all && r.pass;
        std::printf("criterion %d %s: %s (%ld checks, %.1fs)\n", r.id, r.pass ? "PASS" : "FAIL", r.title.c_str(),
                    r.checks, r.seconds);
        for (const auto& f : r.failures) std::printf("  failed: %s\n", f.c_str());
        for (const auto& n : r.notes) std::printf("  note: %s\n", n.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
