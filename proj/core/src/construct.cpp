#include "dap/construct.hpp"

#include <json.hpp>

namespace dap {

namespace {

using nlohmann::json;

void require_usable_aux(const FieldSpec& spec, const Scalar& a, const Scalar& b,
                        const Point& aux) {
    if (a.spec() != spec || b.spec() != spec || aux.spec() != spec) {
        raise(Errc::field_mismatch, "operands and auxiliary point must share one field");
    }
    if (aux.y.is_zero()) {
        raise(Errc::aux_on_line, "auxiliary point must lie off the base line");
    }
}

Point meet_or_degenerate(const Line& a, const Line& b) {
    auto p = intersect(a, b);
    if (!p) raise(Errc::degenerate_aux, "required intersection is parallel; re-sample aux");
    return *p;
}

Trace make_trace(const FieldSpec& spec, std::string op, const Scalar& lhs, const Scalar& rhs,
                 const Point& aux, std::vector<TraceStep> steps, Scalar result) {
    return Trace{spec, std::move(op), {lhs, rhs}, aux, std::move(steps), std::move(result)};
}

} // namespace

Line base_line(const FieldSpec& spec) {
    return Line::slanted(Scalar::zero(spec), Scalar::zero(spec));
}

Point embed(const Scalar& coordinate) {
    return Point{coordinate, Scalar::zero(coordinate.spec())};
}

Point default_aux(const FieldSpec& spec) {
    return Point{Scalar::zero(spec), Scalar::one(spec)};
}

GeoResult geo_add(const Scalar& a, const Scalar& b, const Point& aux) {
    const FieldSpec& spec = a.spec();
    require_usable_aux(spec, a, b, aux);
    Line base = base_line(spec);
    Point O = embed(Scalar::zero(spec));
    Point A = embed(a);
    Point B = embed(b);

    Line l1 = parallel_through(base, aux);                 // base direction through B1
    Line l2 = parallel_through(line_through(O, aux), A);   // O-B1 direction through A
    Point p1 = meet_or_degenerate(l1, l2);
    Line l3 = parallel_through(line_through(B, aux), p1);  // B-B1 direction through P1
    Point c = meet_or_degenerate(l3, base);

    std::vector<TraceStep> steps{
        {"B1", aux, {}},
        {"P1", p1, {{"OI||B1", l1}, {"OB1||A", l2}}},
        {"C", c, {{"BB1||P1", l3}, {"OI", base}}},
    };
    return GeoResult{c.x, make_trace(spec, "add", a, b, aux, std::move(steps), c.x)};
}

GeoResult geo_mul(const Scalar& a, const Scalar& b, const Point& aux) {
    const FieldSpec& spec = a.spec();
    require_usable_aux(spec, a, b, aux);
    Line base = base_line(spec);
    Point O = embed(Scalar::zero(spec));
    Point I = embed(Scalar::one(spec));
    Point A = embed(a);
    Point B = embed(b);

    Line l1 = parallel_through(line_through(I, aux), A);   // I-B1 direction through A
    Line l2 = line_through(O, aux);
    Point p1 = meet_or_degenerate(l1, l2);
    Line l3 = parallel_through(line_through(B, aux), p1);
    Point c = meet_or_degenerate(l3, base);

    std::vector<TraceStep> steps{
        {"B1", aux, {}},
        {"P1", p1, {{"IB1||A", l1}, {"OB1", l2}}},
        {"C", c, {{"BB1||P1", l3}, {"OI", base}}},
    };
    return GeoResult{c.x, make_trace(spec, "mul", a, b, aux, std::move(steps), c.x)};
}

GeoResult geo_sub(const Scalar& c, const Scalar& a, const Point& aux) {
    const FieldSpec& spec = c.spec();
    require_usable_aux(spec, c, a, aux);
    Line base = base_line(spec);
    Point O = embed(Scalar::zero(spec));
    Point A = embed(a);
    Point C = embed(c);

    Line l1 = parallel_through(base, aux);
    Line l2 = parallel_through(line_through(O, aux), A);
    Point p1 = meet_or_degenerate(l1, l2);
    Line l3 = parallel_through(line_through(C, p1), aux);  // C-P1 direction through B1
    Point bpt = meet_or_degenerate(l3, base);

    std::vector<TraceStep> steps{
        {"B1", aux, {}},
        {"P1", p1, {{"OI||B1", l1}, {"OB1||A", l2}}},
        {"B", bpt, {{"CP1||B1", l3}, {"OI", base}}},
    };
    return GeoResult{bpt.x, make_trace(spec, "sub", c, a, aux, std::move(steps), bpt.x)};
}

GeoResult geo_left_div(const Scalar& a, const Scalar& b, const Point& aux) {
    const FieldSpec& spec = a.spec();
    require_usable_aux(spec, a, b, aux);
    if (b.is_zero()) raise(Errc::division_by_zero, "left division by zero");
    Line base = base_line(spec);
    Point O = embed(Scalar::zero(spec));
    Point I = embed(Scalar::one(spec));
    Point A = embed(a);
    Point B = embed(b);

    Line l1 = parallel_through(line_through(I, aux), B);
    Line l2 = line_through(O, aux);
    Point p1 = meet_or_degenerate(l1, l2);
    Line l3 = parallel_through(line_through(A, p1), aux);  // A-P1 direction through B1
    Point xpt = meet_or_degenerate(l3, base);

    std::vector<TraceStep> steps{
        {"B1", aux, {}},
        {"P1", p1, {{"IB1||B", l1}, {"OB1", l2}}},
        {"X", xpt, {{"AP1||B1", l3}, {"OI", base}}},
    };
    return GeoResult{xpt.x, make_trace(spec, "ldiv", a, b, aux, std::move(steps), xpt.x)};
}

GeoResult geo_neg(const Scalar& a, const Point& aux) {
    return geo_sub(Scalar::zero(a.spec()), a, aux);
}

GeoResult geo_inv(const Scalar& b, const Point& aux) {
    return geo_left_div(Scalar::one(b.spec()), b, aux);
}

// ---- JSON ----

namespace {

json line_to_json(const TraceLine& tl) {
    json out;
    out["label"] = tl.label;
    if (tl.line.is_vertical()) {
        out["type"] = "vertical";
        out["c"] = tl.line.abscissa().str();
    } else {
        out["type"] = "slanted";
        out["m"] = tl.line.slope().str();
        out["b"] = tl.line.intercept().str();
    }
    return out;
}

TraceLine line_from_json(const FieldSpec& spec, const json& j) {
    TraceLine out{j.at("label").get<std::string>(), base_line(spec)};
    std::string type = j.at("type").get<std::string>();
    if (type == "vertical") {
        out.line = Line::vertical(Scalar::parse(spec, j.at("c").get<std::string>()));
    } else if (type == "slanted") {
        out.line = Line::slanted(Scalar::parse(spec, j.at("m").get<std::string>()),
                                 Scalar::parse(spec, j.at("b").get<std::string>()));
    } else {
        raise(Errc::parse_error, "unknown line type '" + type + "'");
    }
    return out;
}

} // namespace

std::string Trace::to_json(int indent) const {
    json out;
    out["field"] = field.str();
    out["op"] = op;
    json jargs = json::array();
    for (const auto& arg : args) jargs.push_back(arg.str());
    out["args"] = jargs;
    out["aux"] = json::array({aux.x.str(), aux.y.str()});
    json jsteps = json::array();
    for (const auto& step : steps) {
        json js;
        js["label"] = step.label;
        js["kind"] = "point";
        json data;
        data["xy"] = json::array({step.point.x.str(), step.point.y.str()});
        if (!step.via.empty()) {
            json vias = json::array();
            for (const auto& v : step.via) vias.push_back(line_to_json(v));
            data["via"] = vias;
        }
        js["data"] = data;
        jsteps.push_back(js);
    }
    out["steps"] = jsteps;
    out["result"] = result.str();
    return out.dump(indent);
}

Trace Trace::from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        raise(Errc::parse_error, std::string("bad trace JSON: ") + e.what());
    }
    try {
        FieldSpec spec = FieldSpec::parse(j.at("field").get<std::string>());
        Trace out{spec,
                  j.at("op").get<std::string>(),
                  {},
                  default_aux(spec),
                  {},
                  Scalar::zero(spec)};
        for (const auto& arg : j.at("args")) {
            out.args.push_back(Scalar::parse(spec, arg.get<std::string>()));
        }
        const auto& jaux = j.at("aux");
        out.aux = Point{Scalar::parse(spec, jaux.at(0).get<std::string>()),
                        Scalar::parse(spec, jaux.at(1).get<std::string>())};
        for (const auto& js : j.at("steps")) {
            if (js.at("kind").get<std::string>() != "point") {
                raise(Errc::parse_error, "construction steps record points");
            }
            const auto& data = js.at("data");
            TraceStep step{js.at("label").get<std::string>(),
                           Point{Scalar::parse(spec, data.at("xy").at(0).get<std::string>()),
                                 Scalar::parse(spec, data.at("xy").at(1).get<std::string>())},
                           {}};
            if (data.contains("via")) {
                for (const auto& v : data.at("via")) {
                    step.via.push_back(line_from_json(spec, v));
                }
            }
            out.steps.push_back(std::move(step));
        }
        out.result = Scalar::parse(spec, j.at("result").get<std::string>());
        return out;
    } catch (const json::exception& e) {
        raise(Errc::parse_error, std::string("bad trace JSON: ") + e.what());
    }
}

void replay(const Trace& trace) {
    if (trace.args.size() != 2) {
        raise(Errc::replay_mismatch, "trace must record exactly two operands");
    }
    GeoResult fresh = [&] {
        if (trace.op == "add") return geo_add(trace.args[0], trace.args[1], trace.aux);
        if (trace.op == "mul") return geo_mul(trace.args[0], trace.args[1], trace.aux);
        if (trace.op == "sub") return geo_sub(trace.args[0], trace.args[1], trace.aux);
        if (trace.op == "ldiv") return geo_left_div(trace.args[0], trace.args[1], trace.aux);
        raise(Errc::replay_mismatch, "unknown trace op '" + trace.op + "'");
    }();
    if (fresh.trace.steps != trace.steps) {
        raise(Errc::replay_mismatch, "recorded steps differ from a fresh construction");
    }
    if (fresh.value != trace.result) {
        raise(Errc::replay_mismatch, "recorded result differs from a fresh construction");
    }
    // validate the recorded objects on their own terms
    Line base = base_line(trace.field);
    for (const auto& step : trace.steps) {
        for (const auto& v : step.via) {
            if (!v.line.contains(step.point)) {
                raise(Errc::replay_mismatch,
                      "step " + step.label + " is not incident with line " + v.label);
            }
        }
    }
    const Point& last = trace.steps.back().point;
    if (!base.contains(last)) {
        raise(Errc::replay_mismatch, "final point does not lie on the base line");
    }
    if (last.x != trace.result) {
        raise(Errc::replay_mismatch, "recorded result is not the final point's coordinate");
    }
}

} // namespace dap
