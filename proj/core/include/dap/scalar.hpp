#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dap/error.hpp"
#include "dap/field_spec.hpp"

namespace dap {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string rational_str(const Rational& value);
Rational rational_parse(std::string_view text);

/// One element of the active skew field, always in canonical form:
/// fractions reduced with positive denominator, residues in [0, p),
/// polynomial residues reduced by the field's modulus, quaternion
/// components individually canonical.  Values are immutable; every
/// operation returns a fresh scalar.  Equality is canonical-form identity.
///
/// Multiplication is not assumed commutative anywhere; the quaternion
/// backend is the one genuinely noncommutative model.
class Scalar {
public:
    struct Quat {
        std::array<Rational, 4> c; // w + x*i + y*j + z*k
        bool operator==(const Quat&) const = default;
    };
    struct Poly {
        std::array<std::uint32_t, 3> c; // c0..c_{k-1}, unused entries zero
        bool operator==(const Poly&) const = default;
    };

    static Scalar zero(const FieldSpec& spec);
    static Scalar one(const FieldSpec& spec);
    /// The image of an integer under n |-> n * 1 in the field.
    static Scalar integer(const FieldSpec& spec, long long n);

    static Scalar rational(Rational value);
    static Scalar residue(const FieldSpec& spec, long long value);
    static Scalar poly(const FieldSpec& spec, std::span<const std::uint32_t> coeffs);
    static Scalar quaternion(Rational w, Rational x, Rational y, Rational z);

    /// Literal grammar per backend:
    ///   Q      "n" or "n/d"
    ///   F:p    "m" (any integer; canonical form is the residue in [0,p))
    ///   F:p^k  "[c0,c1,...]" with up to k entries, or a bare integer
    ///   HQ     "a+bi+cj+dk" with rational components, zero terms omitted
    /// parse(print(x)) == x for every canonical form.
    static Scalar parse(const FieldSpec& spec, std::string_view literal);
    std::string str() const;

    const FieldSpec& spec() const noexcept { return spec_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar inv() const; // throws DivisionByZero on zero

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);

    bool operator==(const Scalar&) const = default;

    // payload accessors (checked against the spec kind)
    const Rational& rational_value() const;
    std::uint32_t residue_value() const;
    std::span<const std::uint32_t> poly_coeffs() const;
    const std::array<Rational, 4>& quaternion_parts() const;

private:
    Scalar(FieldSpec spec, std::variant<Rational, std::uint32_t, Poly, Quat> payload)
        : spec_(spec), payload_(std::move(payload)) {}

    FieldSpec spec_;
    std::variant<Rational, std::uint32_t, Poly, Quat> payload_;
};

/// True iff `a` commutes with every element of its field.  Decided against a
/// finite generating set: the quaternion basis {1, i, j, k} for HQ, trivially
/// true on the commutative backends.
bool is_central(const Scalar& a);

/// True iff p*k == k*p (same field required).
bool commutes(const Scalar& p, const Scalar& k);

/// q^{-1} * p * q; equals p whenever p is central.
Scalar conjugate_by(const Scalar& p, const Scalar& q);

} // namespace dap
