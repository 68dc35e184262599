#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "radon/parabolic.hpp"
#include "radon/parameters.hpp"
#include "radon/weyl.hpp"

namespace radon::oracle {

struct SuiteResult {
  std::string suite;
  long long instances_checked = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

// The available suites, in canonical order: lengths, star_action,
// condition_star, bh_factorization, rho_identities, transport_composition,
// annihilator_compat.
const std::vector<std::string>& suite_names();

// Runs one suite against the root system, checking the implementation against
// independently recomputed referee values (breadth-first word search, raw
// matrix products, rational base change).  Randomized suites draw their
// weights from the seed; cap bounds group enumeration (GroupTooLarge).
// UnknownSuite for a name outside suite_names().
SuiteResult verify_suite(const RootSystem& rs, const std::string& suite,
                         uint64_t seed, std::size_t cap = 200000);

// Referee routes recomputing core values from definitions, sharing no code
// with the operations they audit.
namespace reference {

// Positive roots as the full reflection orbit of the simple roots, negatives
// filtered afterwards.
std::vector<RootVec> positive_roots_by_orbit(
    const std::vector<std::vector<int>>& cartan, std::size_t max_roots = 10000);

// Length as breadth-first distance from the identity in the Cayley graph.
int length_by_word_search(const RootSystem& rs, const WeylElem& w,
                          std::size_t cap = 200000);

// Linear action computed as a single base change: fundamental-weight
// coordinates to root coordinates (rational solve), integer matrix, back.
Weight act_by_base_change(const RootSystem& rs, const WeylElem& w,
                          const Weight& lambda);
Weight star_by_base_change(const RootSystem& rs, const WeylElem& w,
                           const Weight& lambda);

// Matrix of the longest element of a parabolic subgroup, found as the unique
// breadth-first element of maximal depth.
std::vector<int> longest_matrix(const RootSystem& rs,
                                const ParabolicSubset& subset,
                                std::size_t cap = 200000);

// Group order by breadth-first search over raw matrices.
std::size_t group_order(const RootSystem& rs, const ParabolicSubset& subset,
                        std::size_t cap = 200000);

}  // namespace reference

}  // namespace radon::oracle
