/*
 * verification.hpp
 * The verification suites behind `springer verify` and the acceptance
 * runner: Coxeter counts, multiplicity oracle agreement, dimension sums,
 * the lower-bound corollary, the GL2 end-to-end fixture, meet semilattice
 * laws, stratification, nonemptiness-criteria equivalence, discriminant
 * identities, enhanced dominance, and the ramified fixtures.
 */
#pragma once

#include <random>
#include <string>
#include <vector>

#include "springer/torus.hpp"

namespace springer {

struct SuiteOptions {
    bool small = false;           // shrink radii/trial counts for a quick pass
    unsigned long seed = 7;       // seed for the randomized scans
    long trials_equivalence = 100;   // concrete gammas per type (criterion 8)
    long trials_strata = 500;        // rational Newton points total (criterion 7)
    long trials_discriminant = 200;  // concrete inputs (criterion 9)
};

struct SuiteResult {
    std::string name;
    bool pass = false;
    size_t checks = 0;
    std::string detail;
    long long ms = 0;
};

SuiteResult suite_coxeter_counts();
SuiteResult suite_multiplicity_oracles(const SuiteOptions& opt);
SuiteResult suite_dimension_sum(const SuiteOptions& opt);
SuiteResult suite_lower_bound(const SuiteOptions& opt);
SuiteResult suite_gl2_fixture();
SuiteResult suite_meet_semilattice(const SuiteOptions& opt);
SuiteResult suite_stratification(const SuiteOptions& opt);
SuiteResult suite_nonempty_equivalence(const SuiteOptions& opt);
SuiteResult suite_discriminant_identities(const SuiteOptions& opt);
SuiteResult suite_enhanced_dominance(const SuiteOptions& opt);
SuiteResult suite_ramified_fixtures();

// All suites in acceptance-criteria order.
std::vector<SuiteResult> run_all_suites(const SuiteOptions& opt);

// Names accepted by `verify <suite>`; throws MalformedSpec on unknown names.
SuiteResult run_suite_by_name(const std::string& name, const SuiteOptions& opt);
std::vector<std::string> suite_names();

// Deterministic draw of a regular semisimple concrete element: integral mu
// in a +-mu_radius lattice box, truncation-16 unit coordinates. Redraws on
// non-regular or inconclusive samples.
TorusElement random_concrete_element(const RootDatum& d, std::mt19937_64& rng,
                                     long mu_radius);

}  // namespace springer
