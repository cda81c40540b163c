#pragma once

/**
 * @file verify.hpp
 * @brief The verification suite behind `bunmot verify all`.
 *
 * Every check is an exact finite computation. Checks whose statement rests on
 * the conjectural motive of Bun_{n,d} are labelled CONJECTURAL, the rest THEOREM.
 */

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace bunmot {

enum class Grid { Small, Full };

Grid parse_grid(const std::string& name);
std::string to_string(Grid g);

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string label;  ///< THEOREM or CONJECTURAL
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json witnesses = nlohmann::json::object();
    double seconds = 0;

    nlohmann::json to_json() const;
};

CheckResult check_quot_oracle(Grid grid);
CheckResult check_harder_vs_bd(Grid grid);
CheckResult check_compact_vs_bd(Grid grid);
CheckResult check_convergence_p1(Grid grid);
CheckResult check_convergence_fixtures(Grid grid);
CheckResult check_duality(Grid grid);
CheckResult check_zeta_duality(Grid grid);
/// key_inequality >= 0 exactly as stated, over every enumerated type.
CheckResult check_hn_key_inequality(Grid grid);
/// key_inequality - n d + n max(d, 0) >= 0, the bound that holds for every sign of d.
CheckResult check_hn_key_inequality_corrected(Grid grid);
CheckResult check_hn_codim(Grid grid);
CheckResult check_hn_defect(Grid grid);
CheckResult check_stabilized_sum(Grid grid);
CheckResult check_bun1_consistency(Grid grid);
CheckResult check_tate_purity(Grid grid);
CheckResult check_fixed_det_relations(Grid grid);
CheckResult check_transition_codim(Grid grid);
CheckResult check_algebra_properties(Grid grid, std::uint64_t seed = 20241016, int cases = 500);
CheckResult check_parser_round_trip(Grid grid, std::uint64_t seed = 7, int cases = 500);

std::vector<CheckResult> run_all_checks(Grid grid);

/// {"grid", "checks": [...], "passed", "failed", "all_pass"}.
nlohmann::json verdict(Grid grid, const std::vector<CheckResult>& checks);

} // namespace bunmot
