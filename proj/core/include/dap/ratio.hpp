#pragma once

#include <optional>
#include <span>
#include <string>

#include "dap/construct.hpp"
#include "dap/plane.hpp"
#include "dap/report.hpp"
#include "dap/scalar.hpp"

namespace dap {

/// The value of a point ratio: a finite line coordinate, or the single
/// improper value that shows up in the degenerate cases r(A:O) with A != O
/// and r(A,B;C) with B = C, A != C.  No arithmetic is defined on the
/// infinite value; asking for .value() on it throws InfiniteInput.
class RatioValue {
public:
    static RatioValue finite(Scalar v) { return RatioValue(v.spec(), std::move(v)); }
    static RatioValue infinity(const FieldSpec& spec) { return RatioValue(spec, std::nullopt); }

    bool is_infinite() const noexcept { return !finite_.has_value(); }
    const Scalar& value() const;
    const FieldSpec& spec() const noexcept { return spec_; }

    std::string str() const { return is_infinite() ? "inf" : finite_->str(); }
    bool operator==(const RatioValue&) const = default;

private:
    RatioValue(FieldSpec spec, std::optional<Scalar> v)
        : spec_(spec), finite_(std::move(v)) {}

    FieldSpec spec_;
    std::optional<Scalar> finite_;
};

/// r(A:B) = B^{-1} A.  B = O with A != O gives the infinite value;
/// A = B = O is UndefinedRatio.
RatioValue ratio2(const Scalar& a, const Scalar& b);

/// r(A,B;C) = (B-C)^{-1} (A-C).  B = C with A != C gives the infinite
/// value; A = B = C is UndefinedRatio.
RatioValue ratio3(const Scalar& a, const Scalar& b, const Scalar& c);

/// The unique X with r(X:B) = R, namely X = B*R.  Requires B != O and a
/// finite R.
Scalar ratio2_inverse_point(const RatioValue& r, const Scalar& b);

/// The unique X with r(X,B;C) = R, namely X = (B-C)*R + C.  Requires
/// B != C and a finite R.
Scalar ratio3_inverse_point(const RatioValue& r, const Scalar& b, const Scalar& c);

/// r(X,B;C) as the affine map X |-> scale*X + offset with
/// scale = (B-C)^{-1} and offset = (C-B)^{-1} C.
struct LineEquation {
    Scalar scale;
    Scalar offset;
    Scalar eval(const Scalar& x) const { return scale * x + offset; }
};
LineEquation line_equation_coeffs(const Scalar& b, const Scalar& c);

/// Solves C + C = A + B.  Unique solution (I+I)^{-1}(A+B) away from
/// characteristic 2; in characteristic 2 there is no solution when A != B
/// and every C works when A = B.
struct MidpointResult {
    enum class Kind { unique, none, all } kind;
    std::optional<Scalar> value; // set iff unique

    std::string str() const;
};
MidpointResult midpoint_solve(const Scalar& a, const Scalar& b);

/// Fixes one ratio self-map of the base line: X |-> r(X:B), or
/// X |-> r(X,B;C).
class RatioMapSpec {
public:
    static RatioMapSpec two_point(Scalar b);                 // B != O
    static RatioMapSpec three_point(Scalar b, Scalar c);     // B != C

    bool is_two_point() const noexcept { return !c_.has_value(); }
    const Scalar& b() const noexcept { return b_; }
    const Scalar& c() const; // three-point only
    const FieldSpec& spec() const noexcept { return b_.spec(); }

    RatioValue apply(const Scalar& x) const;

private:
    RatioMapSpec(Scalar b, std::optional<Scalar> c) : b_(std::move(b)), c_(std::move(c)) {}
    Scalar b_;
    std::optional<Scalar> c_;
};

/// Evaluates the two-point ratio identities on one input triple: inverse
/// duality, additivity, multiplicativity, the equal-ratios criterion, the
/// degenerate table (including the infinite case), and both printed forms
/// of the product-divisor identity (the form that holds is asserted, the
/// other recorded).  Identities whose hypotheses fail are reported skipped.
Report check_ratio2_identities(const Scalar& a, const Scalar& b, const Scalar& c);

/// Evaluates the three-point ratio identities on one input triple: sign
/// invariance, inverse duality, degenerate propagation, the value table,
/// the inverse-points identity in its oracle-resolved form, the line
/// equation and its coefficient identities, and the midpoint analysis.
/// The commutative-only product factorization is skipped on
/// noncommutative backends.
Report check_ratio3_identities(const Scalar& a, const Scalar& b, const Scalar& c);

/// Verifies the substructure laws of the ratio-map image set on the given
/// sample: neutral elements, opposites, inverses, closure witnesses for
/// both operations, commutativity/associativity of addition, and both
/// distributive laws.
Report check_substructure(const RatioMapSpec& map, std::span<const Scalar> sample);

/// Verifies which ratios the given collineation preserves: left dilations
/// preserve both ratios, translations preserve the three-point ratio (the
/// two-point ratio is evaluated and recorded, not asserted), parallel
/// projections preserve the three-point ratio after rebasing to the images
/// of O and I.
Report check_preservation(const PlaneMap& map, const Scalar& a, const Scalar& b,
                          const Scalar& c);

/// Three-point ratio of collinear points measured in the coordinates of an
/// arbitrary line with marked origin and unit points.
RatioValue ratio3_on_line(const Point& a, const Point& b, const Point& c,
                          const Point& origin, const Point& unit);

} // namespace dap
