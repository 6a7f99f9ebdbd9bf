#include "dap/svg.hpp"

#include <algorithm>
#include <vector>

namespace dap {

namespace {

// fixed-precision decimal expansion, integer arithmetic only
std::string decimal(const Rational& value, int digits = 2) {
    BigInt num = numerator(value);
    BigInt den = denominator(value);
    bool negative = num < 0;
    if (negative) num = -num;
    BigInt whole = num / den;
    BigInt rem = num % den;
    std::string out = (negative ? "-" : "") + whole.str();
    if (digits > 0) {
        out += ".";
        for (int i = 0; i < digits; ++i) {
            rem *= 10;
            out += BigInt(rem / den).str();
            rem %= den;
        }
    }
    return out;
}

struct Mapper {
    Rational min_x, min_y, span_x, span_y;
    Rational width, height, margin;

    Rational sx(const Rational& x) const { return margin + (x - min_x) * (width - margin * 2) / span_x; }
    // SVG y grows downward
    Rational sy(const Rational& y) const {
        return height - (margin + (y - min_y) * (height - margin * 2) / span_y);
    }
};

const Rational& coord_x(const Point& p) { return p.x.rational_value(); }
const Rational& coord_y(const Point& p) { return p.y.rational_value(); }

} // namespace

std::string render_trace_svg(const Trace& trace) {
    if (trace.field.kind() != FieldKind::rationals) {
        raise(Errc::unsupported,
              "SVG rendering needs planar coordinates; only the rational backend has them");
    }

    std::vector<std::pair<std::string, Point>> points;
    points.emplace_back("O", embed(Scalar::zero(trace.field)));
    points.emplace_back("I", embed(Scalar::one(trace.field)));
    for (const auto& step : trace.steps) points.emplace_back(step.label, step.point);

    Rational min_x = coord_x(points.front().second), max_x = min_x;
    Rational min_y = coord_y(points.front().second), max_y = min_y;
    for (const auto& [label, p] : points) {
        min_x = std::min(min_x, coord_x(p));
        max_x = std::max(max_x, coord_x(p));
        min_y = std::min(min_y, coord_y(p));
        max_y = std::max(max_y, coord_y(p));
    }
    min_x -= 1;
    max_x += 1;
    min_y -= 1;
    max_y += 1;

    Mapper m{min_x, min_y, max_x - min_x, max_y - min_y, Rational(640), Rational(480),
             Rational(32)};

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 640 480\" "
           "font-family=\"monospace\" font-size=\"12\">\n";
    svg += "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";

    // every distinct line used by a step, drawn across the view box
    std::vector<TraceLine> lines;
    for (const auto& step : trace.steps) {
        for (const auto& v : step.via) {
            bool known = std::any_of(lines.begin(), lines.end(),
                                     [&](const TraceLine& t) { return t.line == v.line; });
            if (!known) lines.push_back(v);
        }
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const TraceLine& tl = lines[i];
        Rational x1, y1, x2, y2;
        if (tl.line.is_vertical()) {
            const Rational& c = tl.line.abscissa().rational_value();
            x1 = x2 = c;
            y1 = min_y;
            y2 = max_y;
        } else {
            const Rational& slope = tl.line.slope().rational_value();
            const Rational& intercept = tl.line.intercept().rational_value();
            x1 = min_x;
            x2 = max_x;
            y1 = x1 * slope + intercept;
            y2 = x2 * slope + intercept;
        }
        const char* color = tl.label == "OI" ? "#888888" : "#3366cc";
        svg += "<line x1=\"" + decimal(m.sx(x1)) + "\" y1=\"" + decimal(m.sy(y1)) + "\" x2=\"" +
               decimal(m.sx(x2)) + "\" y2=\"" + decimal(m.sy(y2)) + "\" stroke=\"" + color +
               "\" stroke-width=\"1\"/>\n";
        Rational label_x = (x1 + x2) / 2;
        Rational label_y = (y1 + y2) / 2;
        svg += "<text x=\"" + decimal(m.sx(label_x) + 4) + "\" y=\"" +
               decimal(m.sy(label_y) - 4) + "\" fill=\"#3366cc\">" + tl.label + "</text>\n";
    }

    for (const auto& [label, p] : points) {
        Rational cx = m.sx(coord_x(p));
        Rational cy = m.sy(coord_y(p));
        svg += "<circle cx=\"" + decimal(cx) + "\" cy=\"" + decimal(cy) +
               "\" r=\"3\" fill=\"#cc2222\"/>\n";
        svg += "<text x=\"" + decimal(cx + 5) + "\" y=\"" + decimal(cy - 5) +
               "\" fill=\"#222222\">" + label + "</text>\n";
    }

    svg += "<text x=\"8\" y=\"472\" fill=\"#555555\">" + trace.op + "(" + trace.args[0].str() +
           ", " + trace.args[1].str() + ") = " + trace.result.str() + "</text>\n";
    svg += "</svg>\n";
    return svg;
}

} // namespace dap
