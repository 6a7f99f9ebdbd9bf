#include "dap/sampler.hpp"

namespace dap {

Sampler::Sampler(FieldSpec spec, std::uint64_t seed) : spec_(spec), rng_(seed) {}

std::uint64_t Sampler::below(std::uint64_t bound) {
    return bound == 0 ? 0 : rng_() % bound;
}

Scalar Sampler::scalar() {
    switch (spec_.kind()) {
        case FieldKind::rationals: {
            long long num = static_cast<long long>(below(19)) - 9; // [-9, 9]
            long long den = static_cast<long long>(below(9)) + 1;  // [1, 9]
            return Scalar::rational(Rational(num, den));
        }
        case FieldKind::prime:
            return Scalar::residue(spec_, static_cast<long long>(below(spec_.prime_modulus())));
        case FieldKind::extension: {
            std::vector<std::uint32_t> coeffs(spec_.degree());
            for (auto& ci : coeffs) {
                ci = static_cast<std::uint32_t>(below(spec_.prime_modulus()));
            }
            return Scalar::poly(spec_, coeffs);
        }
        case FieldKind::quaternions: {
            auto component = [&] {
                long long num = static_cast<long long>(below(9)) - 4; // [-4, 4]
                long long den = static_cast<long long>(below(3)) + 1; // [1, 3]
                return Rational(num, den);
            };
            return Scalar::quaternion(component(), component(), component(), component());
        }
    }
    raise(Errc::unsupported, "unknown field kind");
}

Scalar Sampler::nonzero() {
    for (;;) {
        Scalar s = scalar();
        if (!s.is_zero()) return s;
    }
}

Scalar Sampler::distinct_from(const Scalar& avoid) {
    for (;;) {
        Scalar s = scalar();
        if (s != avoid) return s;
    }
}

Point Sampler::point() { return Point{scalar(), scalar()}; }

Point Sampler::off_base_point() { return Point{scalar(), nonzero()}; }

std::vector<Scalar> Sampler::enumerate(const FieldSpec& spec) {
    if (!spec.finite()) raise(Errc::unsupported, "enumerate() requires a finite field");
    std::vector<Scalar> out;
    if (spec.kind() == FieldKind::prime) {
        for (std::uint32_t v = 0; v < spec.prime_modulus(); ++v) {
            out.push_back(Scalar::residue(spec, v));
        }
        return out;
    }
    std::vector<std::uint32_t> coeffs(spec.degree(), 0);
    for (;;) {
        out.push_back(Scalar::poly(spec, coeffs));
        std::size_t pos = 0;
        while (pos < coeffs.size()) {
            if (++coeffs[pos] < spec.prime_modulus()) break;
            coeffs[pos] = 0;
            ++pos;
        }
        if (pos == coeffs.size()) break;
    }
    return out;
}

} // namespace dap
