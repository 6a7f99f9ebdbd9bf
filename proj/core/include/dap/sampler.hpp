#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dap/plane.hpp"
#include "dap/scalar.hpp"

namespace dap {

/// Seeded element generator for one field.  Draws go through the raw engine
/// output (never std::uniform_int_distribution) so sequences are identical
/// across platforms.  Rational and quaternion draws keep numerators and
/// denominators small; finite field draws are uniform over the field.
class Sampler {
public:
    Sampler(FieldSpec spec, std::uint64_t seed);

    const FieldSpec& spec() const noexcept { return spec_; }

    std::uint64_t raw() { return rng_(); }
    std::uint64_t below(std::uint64_t bound); // uniform-ish in [0, bound)

    Scalar scalar();
    Scalar nonzero();
    Scalar distinct_from(const Scalar& avoid);
    Point point();
    Point off_base_point(); // y != 0

    /// Every element of a finite field, in a fixed enumeration order.
    static std::vector<Scalar> enumerate(const FieldSpec& spec);

private:
    FieldSpec spec_;
    std::mt19937_64 rng_;
};

} // namespace dap
