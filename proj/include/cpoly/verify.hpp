#pragma once

/* Named verification checks over the whole computation: the mutation
 * graph, the transported polytope family, their combinatorial data, the
 * equivalence classification, and the supporting property suites. Each
 * check compares computed values against the stored reference data with
 * exact arithmetic and reports pass or fail with a diagnostic.
 */

#include <string>
#include <vector>

#include "cpoly/equivalence.hpp"
#include "cpoly/flag.hpp"

namespace cpoly {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/* Check names in report order. */
const std::vector<std::string>& check_names();

CheckResult run_check(const std::string& name);
std::vector<CheckResult> run_all_checks();

/* Everything computed once and shared between checks. Construction throws
 * when an internal cross-validation fails. */
struct Pipeline {
    TransportedFamily sl4;
    TransportedFamily sl3;
    Classification classification;
};

const Pipeline& pipeline();

/* Independent vertex enumeration for cross-checking: solve every maximal
 * square subsystem of tight facet equations and keep the feasible
 * solutions. Exponential, but fine at these sizes. */
std::vector<Vec> vertex_oracle(const std::vector<Halfspace>& halfspaces,
                               std::size_t dim);

}  // namespace cpoly
