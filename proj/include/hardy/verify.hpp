#pragma once

// Sweeps over the identities the library rests on. Each suite counts its
// cases and keeps the first counterexample; the command-line tool and the
// acceptance run share them.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hardy/core.hpp"
#include "hardy/qverify.hpp"
#include "hardy/sums.hpp"

namespace hardy {

struct SuiteReport {
    std::string name;
    std::string unit = "cases";
    long long cases = 0;
    long long failures = 0;
    std::string first_failure;
    std::vector<std::string> notes;
    double max_error = 0; // numeric suites only
    double seconds = 0;

    bool pass() const { return failures == 0 && cases > 0; }
    // "PASS 31 rows" or "FAIL 2 of 500 cases; first: ..."
    std::string summary() const;
};

struct SuiteOptions {
    long max_c = 0; // 0: the suite's own default
    SeriesParams series{};
    int words = 50;        // random words per check and basepoint
    std::uint64_t seed = 1;
    Rational epsilon{1, 1000};
    ReciprocityForm form = ReciprocityForm::Standard;
};

// 0.3 + 1.6i, -0.4 + 1.1i, 0.15 + 2.3i.
const std::array<Complex, 3> &default_basepoints();

// Words are redrawn until A.z has at least this imaginary part.
constexpr double min_image_height = 0.05;

// Table rows against the published values (c <= 10) and, for every row,
// S and S4 against the defining sums. Default max_c 10.
SuiteReport verify_table(const SuiteOptions &opts);

// Both partial-quotient formulas against the defining sums for coprime
// -c < d < c. Default max_c 500.
SuiteReport verify_theorem1(const SuiteOptions &opts);

// S + S4 = 2 sum_{k odd} (-1)^floor(dk/c) = -2(c1 + c3 + ...) for c even,
// d odd, -c < d < c. Default max_c 500.
SuiteReport verify_corollary(const SuiteOptions &opts);

// S reciprocity with its swapped and negated variants for 0 < d < c <= 300,
// and the S4 partial-quotient reciprocity for odd 0 < d < c <= 201. A
// given max_c replaces both bounds.
SuiteReport verify_reciprocity(const SuiteOptions &opts);

// Recursive against partial-quotient Dedekind sums, exactly, and both
// against the cotangent sum within 1e-9, 0 < d < c. Default max_c 200;
// opts.form selects the recursion.
SuiteReport verify_dedekind(const SuiteOptions &opts);

// All three constructions for x in +-1/10, +-3/10, ..., +-9/10 and targets
// in -5..5, re-checked by the defining sums (c <= 10^6) or the partial-
// quotient formulas, with the distance bound in exact arithmetic.
SuiteReport verify_density(const SuiteOptions &opts);

// Transformation laws of E2, log eta, log theta and log theta4 on random
// words at the default basepoints, plus the log-derivative and doubling
// identities.
SuiteReport verify_qseries(const SuiteOptions &opts);

// E2 cycle integrals, both cocycle formulas on random expansions, the
// homomorphism and basepoint properties, and phi(T^2) = phi(V) = 2,
// psi(T^2) = 2, psi(S) = 0.
SuiteReport verify_cocycle(const SuiteOptions &opts);

// table, theorem1, corollary, reciprocity, dedekind, density, qseries, cocycle.
const std::vector<std::string> &suite_names();
// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(std::string_view name, const SuiteOptions &opts);

} // namespace hardy
