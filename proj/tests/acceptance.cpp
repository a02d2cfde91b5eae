// Acceptance gate: runs the reproduction experiments and prints one PASS/FAIL
// line per criterion. With an experiment id as the only argument it runs just
// that criterion and exits 0 (pass) or 1 (fail); with no arguments it runs all
// twelve and exits with the number of failing criteria.

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "curvegraph/repro.hpp"

using curvegraph::ReproReport;

namespace {

int criterion_number(const std::string& id) {
    const auto ids = curvegraph::repro_ids();
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (ids[i] == id) return static_cast<int>(i) + 1;
    return 0;
}

int run_one(const std::string& id, bool verbose) {
    ReproReport rep = curvegraph::run_repro(id);
    std::printf("criterion %2d [%-24s] %s  (%.2fs, %zu checks)\n", criterion_number(id),
                rep.id.c_str(), rep.pass ? "PASS" : "FAIL", rep.seconds, rep.checks.size());
    for (const auto& c : rep.checks) {
        if (c.pass && !verbose) continue;
        std::printf("    %-4s %-48s expected=%-14.10g computed=%-14.10g tol=%.3g  %s\n",
                    c.pass ? "ok" : "FAIL", c.name.c_str(), c.expected, c.computed,
                    c.tolerance, c.note.c_str());
    }
    return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    bool verbose = false;
    std::vector<std::string> ids;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "-v") == 0)
            verbose = true;
        else
            ids.emplace_back(argv[i]);
    }
    if (ids.empty()) ids = curvegraph::repro_ids();
    int failures = 0;
    for (const auto& id : ids) failures += run_one(id, verbose);
    if (ids.size() > 1)
        std::printf("%zu/%zu criteria passed\n", ids.size() - failures, ids.size());
    return failures;
}
