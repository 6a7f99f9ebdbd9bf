#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dap/plane.hpp"

namespace dap {

/// Incidence-only arithmetic on the base line through O = (0,0) and
/// I = (1,0) (the x-axis).  A point of that line is identified with its
/// x-coordinate, so the operations below take and return scalars.
///
/// Every operation runs purely on line_through / parallel_through /
/// intersect and emits a replayable trace.  The computed value always
/// agrees with the field arithmetic, independently of the auxiliary point,
/// which is the executable content of the Desargues property.

/// The base line y = x*0 + 0.
Line base_line(const FieldSpec& spec);

/// Embeds a line coordinate as the plane point (value, 0).
Point embed(const Scalar& coordinate);

/// The default auxiliary point (0, 1).
Point default_aux(const FieldSpec& spec);

struct TraceLine {
    std::string label;
    Line line;
    bool operator==(const TraceLine&) const = default;
};

/// One algorithm step: the point it produces, and (for intersection steps)
/// the two lines meeting there.
struct TraceStep {
    std::string label;
    Point point;
    std::vector<TraceLine> via;
    bool operator==(const TraceStep&) const = default;
};

struct Trace {
    FieldSpec field;
    std::string op; // "add" | "mul" | "sub" | "ldiv"
    std::vector<Scalar> args;
    Point aux;
    std::vector<TraceStep> steps;
    Scalar result;

    bool operator==(const Trace&) const = default;
    std::string to_json(int indent = -1) const;
    static Trace from_json(std::string_view text);
};

struct GeoResult {
    Scalar value;
    Trace trace;
};

/// A + B.  Step 1 picks the auxiliary point off the base line, step 2 meets
/// the parallel of the base line through it with the parallel of O-aux
/// through A, step 3 carries B along the aux direction to the sum.
GeoResult geo_add(const Scalar& a, const Scalar& b, const Point& aux);

/// A * B under the right-slope convention (left operand first).
GeoResult geo_mul(const Scalar& a, const Scalar& b, const Point& aux);

/// C - A: the addition construction solved for its second operand.
GeoResult geo_sub(const Scalar& c, const Scalar& a, const Point& aux);

/// B^{-1} * A: the multiplication construction solved for its second
/// operand.  Throws DivisionByZero when B is zero.
GeoResult geo_left_div(const Scalar& a, const Scalar& b, const Point& aux);

GeoResult geo_neg(const Scalar& a, const Point& aux);
GeoResult geo_inv(const Scalar& b, const Point& aux);

/// Re-executes the trace and verifies it end to end: the recorded steps
/// match a fresh run, every intersection point is incident with both of its
/// recorded lines, the final point lies on the base line, and the recorded
/// result is the final point's x-coordinate.  Throws ReplayMismatch (or a
/// parse/validation error) on any violation.
void replay(const Trace& trace);

} // namespace dap
