#pragma once

#include <string>
#include <vector>

#include "concordia/knotexpr.hpp"

namespace concordia {

// One verification suite outcome. `checks` counts elementary exact comparisons;
// `failure` holds the first counterexample (empty when passed).
struct CheckResult {
    std::string suite;
    bool passed = false;
    std::size_t checks = 0;
    std::string failure;
};

// Registered suite names, in execution order:
//   torus, oracle, cp2, parity, identities, recursion, wu, homwu, poset,
//   subadditivity, fulltwist.
std::vector<std::string> verify_suite_names();

// Runs one suite by name; throws std::invalid_argument for unknown names.
CheckResult run_verify_suite(const std::string& name);

// Runs one suite, or every suite in order for "all".
std::vector<CheckResult> run_verify(const std::string& name_or_all);

// The acceptance criteria, numbered 1..11, each backed by one suite.
struct CriterionSpec {
    int number;
    std::string description;
    std::string suite;
};
const std::vector<CriterionSpec>& acceptance_criteria();

// Every certified atom with genus <= max_genus buildable from torus knots and
// iterated certified cables; deterministic order. Used by the oracle suite and
// reusable from tests.
std::vector<Atom> certified_family(int max_genus);

// Engine value nu+ of the standard tau-vs-nu+ separating example
// T(2,5) + 2*T(2,3) - C(2,5;T(2,3)), pinned after first computation.
extern const int kSeparatingExampleNuPlus;

}  // namespace concordia
