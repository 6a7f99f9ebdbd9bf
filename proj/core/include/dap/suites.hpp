#pragma once

#include <cstdint>
#include <string_view>

#include "dap/report.hpp"
#include "dap/sampler.hpp"

namespace dap::suites {

struct Options {
    FieldSpec field = FieldSpec::rationals();
    std::uint64_t seed = 42;
    std::size_t samples = 200;
    std::size_t aux_samples = 50;
};

/// Skew-field laws on sampled elements plus the affine-plane axioms
/// (uniqueness of joins and parallels, a non-collinear triple, parallelism
/// as an equivalence relation, collineations preserving collinearity).
Report axioms(const Options& options);

/// The perspective-triangle configuration check: exhaustive over the plane
/// for F:2 and F:3, randomized valid configurations elsewhere.
Report desargues(const Options& options);

/// Two-point ratio identity suite; exhaustive over small finite fields,
/// sampled otherwise.  Records the resolution of the product-divisor
/// identity's two printed forms.
Report ratio2(const Options& options);

/// Three-point ratio identity suite, including the line-equation
/// coefficients, midpoint analysis, and the inverse-points resolution.
Report ratio3(const Options& options);

/// Bijectivity of the ratio maps plus the image set's field laws.
Report substructure(const Options& options);

/// Ratio preservation under dilations, translations (with the recorded
/// two-point counterexample), and parallel projection with rebasing.
Report preservation(const Options& options);

/// Geometric constructions against field arithmetic: oracle equality for
/// add/mul/sub/ldiv across many auxiliary points, auxiliary independence,
/// trace replay soundness, and the construction-level algebra witnesses.
Report construct_oracle(const Options& options);

/// Dispatch by CLI suite name: axioms | desargues | ratio2 | ratio3 |
/// substructure | preservation.  Throws on unknown names.
Report run(std::string_view name, const Options& options);

} // namespace dap::suites
