#ifndef TSMLAB_SELFTEST_HPP
#define TSMLAB_SELFTEST_HPP

#include <json.hpp>

#include <string>
#include <vector>

namespace tsmlab {

struct AcceptanceResult {
    unsigned id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    double time_limit = 0.0;
};

/// Runs the twelve acceptance criteria in order. `only` restricts the run to
/// the listed ids when non-empty.
std::vector<AcceptanceResult> run_acceptance(const std::vector<unsigned>& only = {});

nlohmann::ordered_json acceptance_to_json(const std::vector<AcceptanceResult>& results);

/// "[PASS] 3 hecke_bochner_consistency (12.3 s): detail"
std::string format_acceptance_line(const AcceptanceResult& r);

} // namespace tsmlab

#endif
