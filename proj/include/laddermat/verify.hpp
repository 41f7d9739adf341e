#pragma once

/**
 * The cross-check suite tying the closed forms to the elimination oracle.
 *
 * A VerifyContext bundles everything derivable from one (family, n): the
 * graph, its incidence/Laplacian matrices, the closed-form matrices, and the
 * oracle pseudoinverses. The individual checks are pure functions of the
 * context; run_all_checks evaluates the full battery in a fixed order.
 */

#include "laddermat/closed_form.hpp"
#include "laddermat/graph.hpp"
#include "laddermat/linalg.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace laddermat {

struct VerifyContext {
    FamilySpec spec;
    OrientedGraph graph;
    RationalMatrix incidence;
    RationalMatrix laplacian;
    RationalMatrix qplus_closed;
    RationalMatrix lplus_closed;
    RationalMatrix resistance_closed;
    RationalMatrix lplus_oracle;
    RationalMatrix qplus_oracle;

    static VerifyContext make(const FamilySpec& spec);
};

struct CheckResult {
    std::string name;
    bool applicable = true;
    bool pass = true;
    /// On failure: the first differing entry or the offending values.
    nlohmann::ordered_json detail = nlohmann::ordered_json::object();
};

/// Column order used by run_all_checks and the CLI report.
const std::vector<std::string>& check_names();

CheckResult check_penrose(const VerifyContext& ctx);
CheckResult check_qplus_oracle(const VerifyContext& ctx);
CheckResult check_lplus_oracle(const VerifyContext& ctx);
/// Ladder only: H 1 = 0, QH = I - J/2n, HQ symmetric.
CheckResult check_ladder_lemmas(const VerifyContext& ctx);
/// Ladder only: 2 s_n B has integer entries, row sums s_n, diagonal
/// a_i a_{n-i+1}.
CheckResult check_scaled_b(const VerifyContext& ctx);
/// Circular ladder only: the parity factorizations of the tree count.
CheckResult check_factorization(const VerifyContext& ctx);
CheckResult check_resistance_oracle(const VerifyContext& ctx);
/// Spoke resistance equals contracted / total tree count.
CheckResult check_spoke_resistance(const VerifyContext& ctx);
/// Path sums over spokes and rail paths of length <= 3 match the oracle.
CheckResult check_path_sum(const VerifyContext& ctx);
/// Closed Kirchhoff index vs half grand sum vs 2n tr(L+ oracle).
CheckResult check_kirchhoff(const VerifyContext& ctx);
CheckResult check_tree_count(const VerifyContext& ctx);
/// Closed contracted counts vs Matrix-Tree on the contracted graph, per spoke.
CheckResult check_contracted_trees(const VerifyContext& ctx);

std::vector<CheckResult> run_all_checks(const VerifyContext& ctx);

} // namespace laddermat
