#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "subrack/catalog.hpp"
#include "subrack/group.hpp"
#include "subrack/lattice.hpp"

namespace subrack {

enum class LatticeMode { Auto, Explicit, Implicit };

/// Exact for abelian groups (2^n); otherwise 2^|Z| * 2^(classes) * n, a loose guess.
double predicted_subrack_count(const FiniteGroup& g);

struct BuiltLattice {
    std::shared_ptr<const Lattice> lattice;
    bool explicit_lattice = false;
};

/**
 * Explicit mode enumerates (CapExceeded above `cap`); implicit mode wraps the
 * rack. Auto enumerates when the prediction is under the cap and falls back to
 * the implicit view if enumeration hits the cap anyway.
 */
BuiltLattice build_lattice(const FiniteGroup& g, LatticeMode mode, std::size_t cap = kExplicitCap);

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;  ///< failure or skip reason, or a short summary
    double millis = 0;
};

struct GroupReport {
    std::string group;
    int order = 0;
    bool explicit_lattice = false;
    std::vector<CheckResult> checks;
};

struct VerificationReport {
    std::vector<GroupReport> groups;  ///< catalog order

    int count(CheckStatus s) const;
    /// 0 all pass, 2 any failure, 4 no failure but something skipped.
    int exit_code() const;
};

/**
 * Runs every applicable cross-check on one group:
 *   enumeration, recovery         order <= 8
 *   explicit_implicit             order <= 16
 *   partition_survey              order <= 12
 *   cycle_forms, order_monotonicity, associated_abelian,
 *   equal_cycle_length, theta     centerless groups
 *   everything else               every group
 */
GroupReport verify_group(const FiniteGroup& g, LatticeMode mode = LatticeMode::Auto, std::uint64_t seed = 1);

/// verify_group over the catalog groups of order <= max_order, in parallel.
VerificationReport verify_catalog(int max_order, LatticeMode mode = LatticeMode::Auto, std::uint64_t seed = 1);

/// One line per check; timings only when `timings` is set.
std::string report_to_text(const VerificationReport& r, bool timings = false);
nlohmann::json report_to_json(const VerificationReport& r, bool timings = false);

const char* status_name(CheckStatus s);

}  // namespace subrack
