#pragma once
// The acceptance battery, shared by the CLI suite and the acceptance test binary.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hookdual {

enum class Profile { Fast, Full };

Profile parse_profile(const std::string& s);
std::string profile_name(Profile p);

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    long checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;  // e.g. results carrying the conjectural-structure label
    double seconds = 0;

    nlohmann::json to_json(bool with_timing = true) const;
};

constexpr int kCriteria = 7;

// A table cell to corrupt in criterion 1, e.g. {"C(1,1)", "r"}. Cells: r, h+, h-, k_b+, k_b-,
// delta_rho+, delta_rho-, flip+, flip-.
struct TableFault {
    std::string pair;
    std::string cell;
};

// Criterion 1..7. Fast shrinks truncations and weight ranges; Full is the documented battery.
CriterionResult run_criterion(int id, Profile profile, int threads, const std::optional<TableFault>& fault = std::nullopt);

}  // namespace hookdual
