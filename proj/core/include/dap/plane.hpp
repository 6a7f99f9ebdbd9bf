#pragma once

#include <optional>
#include <string>
#include <variant>

#include "dap/scalar.hpp"

namespace dap {

/// A point of the coordinate plane over the active skew field.
struct Point {
    Scalar x;
    Scalar y;

    const FieldSpec& spec() const noexcept { return x.spec(); }
    bool operator==(const Point&) const = default;
    std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

Point make_point(const Scalar& x, const Scalar& y);

/// A line in canonical form.  Slanted lines follow the right-slope
/// convention y = x*m + b: the slope multiplies from the right, which is
/// what makes the multiplication construction on the base line come out as
/// A*B rather than B*A in noncommutative fields.  Two lines are equal iff
/// their canonical forms match componentwise.
class Line {
public:
    static Line vertical(Scalar c);
    static Line slanted(Scalar m, Scalar b);

    bool is_vertical() const noexcept { return std::holds_alternative<Vertical>(form_); }
    const Scalar& abscissa() const;  // vertical lines: the fixed x
    const Scalar& slope() const;     // slanted lines
    const Scalar& intercept() const; // slanted lines

    const FieldSpec& spec() const noexcept;
    bool contains(const Point& p) const;

    bool operator==(const Line&) const = default;
    std::string str() const;

private:
    struct Vertical {
        Scalar c;
        bool operator==(const Vertical&) const = default;
    };
    struct Slanted {
        Scalar m;
        Scalar b;
        bool operator==(const Slanted&) const = default;
    };

    explicit Line(std::variant<Vertical, Slanted> form) : form_(std::move(form)) {}
    std::variant<Vertical, Slanted> form_;
};

/// The unique line through two distinct points (throws DegenerateInput).
Line line_through(const Point& p, const Point& q);

/// The unique parallel to `l` through `p`; equals `l` when p lies on it.
Line parallel_through(const Line& l, const Point& p);

/// Same direction class: both vertical, or equal slopes.  Includes equality.
bool same_direction(const Line& a, const Line& b);

/// The unique common point, or nullopt for (proper or improper) parallels.
/// Throws SameLine when the arguments are equal.
std::optional<Point> intersect(const Line& a, const Line& b);

/// Two perspective triangles.  A/B/C and Ap/Bp/Cp are the corresponding
/// vertices; the configuration checker validates the full hypothesis list.
struct TriangleConfig {
    Point A, B, C;
    Point Ap, Bp, Cp;
};

/// Verifies the perspective-triangle hypotheses (distinct non-collinear
/// vertex triples, AB || A'B' and BC || B'C' as distinct line pairs, the
/// three connector lines pairwise distinct and either all parallel or
/// concurrent in one point) and returns whether AC || A'C'.  Throws
/// HypothesisViolated naming the first failed hypothesis.
bool check_desargues(const TriangleConfig& config);

struct Translate {
    Scalar dx, dy;
};
struct LeftDilate {
    Scalar factor; // nonzero
};
struct ParallelProjection {
    Line source;
    Line target;
    Scalar dir_x, dir_y; // direction of the projecting pencil, not both zero
};
using PlaneMap = std::variant<Translate, LeftDilate, ParallelProjection>;

/// Applies a collineation.  Each kind maps lines to lines and preserves
/// parallelism.  ParallelProjection requires the point on its source line
/// (NotOnSource) and a direction transverse to the target (BadDirection).
Point apply_map(const PlaneMap& map, const Point& p);

} // namespace dap
