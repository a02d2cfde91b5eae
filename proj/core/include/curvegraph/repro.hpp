#pragma once

#include <string>
#include <vector>

namespace curvegraph {

// One numeric comparison inside an experiment. `pass` is authoritative;
// expected/computed/tolerance exist for reporting. Exact half-integer
// comparisons carry tolerance 0.
struct ReproCheck {
    std::string name;
    double expected = 0;
    double computed = 0;
    double tolerance = 0;
    bool pass = false;
    std::string note;
};

struct ReproReport {
    std::string id;
    std::string title;
    std::vector<ReproCheck> checks;
    bool pass = false;  // all checks passed
    double seconds = 0;
};

// Experiment ids, in canonical order.
std::vector<std::string> repro_ids();

ReproReport run_repro(const std::string& id);
std::vector<ReproReport> run_all_repro();

}  // namespace curvegraph
