#include "dap/ratio.hpp"

namespace dap {

namespace {

void require_same(const Scalar& a, const Scalar& b) {
    if (a.spec() != b.spec()) {
        raise(Errc::field_mismatch, "mixed field specs in ratio arguments");
    }
}

std::vector<std::string> lits(std::initializer_list<const Scalar*> values) {
    std::vector<std::string> out;
    for (const Scalar* v : values) out.push_back(v->str());
    return out;
}

} // namespace

const Scalar& RatioValue::value() const {
    if (is_infinite()) raise(Errc::infinite_input, "the infinite ratio has no coordinate");
    return *finite_;
}

RatioValue ratio2(const Scalar& a, const Scalar& b) {
    require_same(a, b);
    if (b.is_zero()) {
        if (a.is_zero()) raise(Errc::undefined_ratio, "r(O:O) is undefined");
        return RatioValue::infinity(a.spec());
    }
    return RatioValue::finite(b.inv() * a);
}

RatioValue ratio3(const Scalar& a, const Scalar& b, const Scalar& c) {
    require_same(a, b);
    require_same(b, c);
    if (b == c) {
        if (a == c) raise(Errc::undefined_ratio, "r(A,B;C) with A = B = C is undefined");
        return RatioValue::infinity(a.spec());
    }
    return RatioValue::finite((b - c).inv() * (a - c));
}

Scalar ratio2_inverse_point(const RatioValue& r, const Scalar& b) {
    if (r.is_infinite()) raise(Errc::infinite_input, "no preimage for the infinite ratio");
    if (b.is_zero()) raise(Errc::division_by_zero, "the two-point map needs B != O");
    return b * r.value();
}

Scalar ratio3_inverse_point(const RatioValue& r, const Scalar& b, const Scalar& c) {
    require_same(b, c);
    if (r.is_infinite()) raise(Errc::infinite_input, "no preimage for the infinite ratio");
    if (b == c) raise(Errc::degenerate_input, "the three-point map needs B != C");
    return (b - c) * r.value() + c;
}

LineEquation line_equation_coeffs(const Scalar& b, const Scalar& c) {
    require_same(b, c);
    if (b == c) raise(Errc::degenerate_input, "line equation needs B != C");
    return LineEquation{(b - c).inv(), (c - b).inv() * c};
}

std::string MidpointResult::str() const {
    switch (kind) {
        case Kind::unique: return value->str();
        case Kind::none: return "none";
        case Kind::all: return "all";
    }
    return "?";
}

MidpointResult midpoint_solve(const Scalar& a, const Scalar& b) {
    require_same(a, b);
    const FieldSpec& spec = a.spec();
    if (spec.characteristic() != 2) {
        Scalar two = Scalar::integer(spec, 2);
        return MidpointResult{MidpointResult::Kind::unique, two.inv() * (a + b)};
    }
    if (a == b) return MidpointResult{MidpointResult::Kind::all, std::nullopt};
    return MidpointResult{MidpointResult::Kind::none, std::nullopt};
}

RatioMapSpec RatioMapSpec::two_point(Scalar b) {
    if (b.is_zero()) raise(Errc::degenerate_input, "two-point map needs B != O");
    return RatioMapSpec(std::move(b), std::nullopt);
}

RatioMapSpec RatioMapSpec::three_point(Scalar b, Scalar c) {
    require_same(b, c);
    if (b == c) raise(Errc::degenerate_input, "three-point map needs B != C");
    return RatioMapSpec(std::move(b), std::move(c));
}

const Scalar& RatioMapSpec::c() const {
    if (!c_) raise(Errc::degenerate_input, "two-point map has no C");
    return *c_;
}

RatioValue RatioMapSpec::apply(const Scalar& x) const {
    return is_two_point() ? ratio2(x, b_) : ratio3(x, b_, *c_);
}

// ---- identity suites on one input triple ----

Report check_ratio2_identities(const Scalar& a, const Scalar& b, const Scalar& c) {
    require_same(a, b);
    require_same(b, c);
    const FieldSpec& spec = a.spec();
    const Scalar zero = Scalar::zero(spec);
    Report report;
    auto in3 = lits({&a, &b, &c});
    auto in2 = lits({&a, &b});

    if (a.is_zero() || b.is_zero()) {
        report.add(CheckEntry::skip("r^-1(A:B) = r(B:A)", in2, "needs A, B != O"));
    } else {
        Scalar lhs = ratio2(a, b).value().inv();
        Scalar rhs = ratio2(b, a).value();
        report.add(CheckEntry::of(lhs == rhs, "r^-1(A:B) = r(B:A)", in2, lhs.str(), rhs.str()));
    }

    if (c.is_zero()) {
        report.add(CheckEntry::skip("r(A+B:C) = r(A:C) + r(B:C)", in3, "needs C != O"));
        report.add(CheckEntry::skip("r(A*B:C) = r(A:C)*B", in3, "needs C != O"));
    } else {
        Scalar lhs = ratio2(a + b, c).value();
        Scalar rhs = ratio2(a, c).value() + ratio2(b, c).value();
        report.add(CheckEntry::of(lhs == rhs, "r(A+B:C) = r(A:C) + r(B:C)", in3, lhs.str(),
                                  rhs.str()));
        lhs = ratio2(a * b, c).value();
        rhs = ratio2(a, c).value() * b;
        report.add(
            CheckEntry::of(lhs == rhs, "r(A*B:C) = r(A:C)*B", in3, lhs.str(), rhs.str()));
    }

    if (b.is_zero() || c.is_zero()) {
        report.add(CheckEntry::skip("r(A:B*C) = C^-1 * r(A:B)", in3, "needs B, C != O"));
    } else {
        Scalar lhs = ratio2(a, b * c).value();
        Scalar rhs = c.inv() * ratio2(a, b).value();
        report.add(CheckEntry::of(lhs == rhs, "r(A:B*C) = C^-1 * r(A:B)", in3, lhs.str(),
                                  rhs.str()));
        Scalar alt = c.inv() * ratio2(a, c).value();
        CheckEntry entry{"r(A:B*C) = C^-1 * r(A:C)  [recorded, not asserted]",
                         in3,
                         CheckEntry::Status::skipped,
                         lhs.str(),
                         alt.str(),
                         "holds only when B = C or A = O; the asserted identity divides by B"};
        report.add(std::move(entry));
    }

    if (a.is_zero() || b.is_zero()) {
        report.add(CheckEntry::skip("r(A:B) = r(B:A) iff A = B or A = -B", in2,
                                    "needs A, B != O"));
    } else {
        bool same = ratio2(a, b) == ratio2(b, a);
        CheckEntry corrected = CheckEntry::of(same == (a == b || a == -b),
                                              "r(A:B) = r(B:A) iff A = B or A = -B", in2,
                                              ratio2(a, b).str(), ratio2(b, a).str());
        corrected.note = "oracle-corrected criterion: B^-1*A = A^-1*B means (A^-1*B)^2 = I, "
                         "so A^-1*B is I or -I";
        report.add(std::move(corrected));
        CheckEntry printed{"r(A:B) = r(B:A) iff A = B  [recorded, not asserted]",
                           in2,
                           CheckEntry::Status::skipped,
                           ratio2(a, b).str(),
                           ratio2(b, a).str(),
                           same == (a == b) ? "printed criterion holds on this instance"
                                            : "printed criterion fails on this instance"};
        report.add(std::move(printed));
    }

    // degenerate table
    if (b.is_zero()) {
        report.add(CheckEntry::skip("r(B:B) = I", {b.str()}, "needs B != O"));
        report.add(CheckEntry::skip("r(O:B) = O", {b.str()}, "needs B != O"));
    } else {
        RatioValue diag = ratio2(b, b);
        report.add(CheckEntry::of(!diag.is_infinite() && diag.value().is_one(), "r(B:B) = I",
                                  {b.str()}, diag.str(), "1"));
        RatioValue at_zero = ratio2(zero, b);
        CheckEntry zero_entry = CheckEntry::of(!at_zero.is_infinite() && at_zero.value().is_zero(),
                                               "r(O:B) = O", {b.str()}, at_zero.str(), "0");
        zero_entry.note = "B^-1 * O = O";
        report.add(std::move(zero_entry));
    }
    if (a.is_zero()) {
        report.add(CheckEntry::skip("r(A:O) is the infinite point", {a.str()}, "needs A != O"));
    } else {
        RatioValue inf = ratio2(a, zero);
        report.add(CheckEntry::of(inf.is_infinite(), "r(A:O) is the infinite point", {a.str()},
                                  inf.str(), "inf"));
    }
    bool undefined_thrown = false;
    try {
        (void)ratio2(zero, zero);
    } catch (const Error& e) {
        undefined_thrown = e.code() == Errc::undefined_ratio;
    }
    report.add(CheckEntry::of(undefined_thrown, "r(O:O) is undefined", {}, "", ""));

    return report;
}

Report check_ratio3_identities(const Scalar& a, const Scalar& b, const Scalar& c) {
    require_same(a, b);
    require_same(b, c);
    const FieldSpec& spec = a.spec();
    const Scalar one = Scalar::one(spec);
    Report report;
    auto in3 = lits({&a, &b, &c});

    if (a == b && b == c) {
        report.add(CheckEntry::skip("r(-A,-B;-C) = r(A,B;C)", in3, "undefined on A = B = C"));
    } else {
        RatioValue lhs = ratio3(-a, -b, -c);
        RatioValue rhs = ratio3(a, b, c);
        report.add(
            CheckEntry::of(lhs == rhs, "r(-A,-B;-C) = r(A,B;C)", in3, lhs.str(), rhs.str()));
    }

    if (b == c || a == c) {
        report.add(CheckEntry::skip("r^-1(A,B;C) = r(B,A;C)", in3, "needs A != C and B != C"));
    } else {
        Scalar lhs = ratio3(a, b, c).value().inv();
        Scalar rhs = ratio3(b, a, c).value();
        report.add(
            CheckEntry::of(lhs == rhs, "r^-1(A,B;C) = r(B,A;C)", in3, lhs.str(), rhs.str()));
    }

    // degenerate propagation and value table
    if (a == c) {
        report.add(CheckEntry::skip("r(A,C;C) is the infinite point", in3, "needs A != C"));
        report.add(CheckEntry::skip("r(A,A;C) = I", in3, "needs A != C"));
    } else {
        RatioValue inf = ratio3(a, c, c);
        report.add(CheckEntry::of(inf.is_infinite(), "r(A,C;C) is the infinite point",
                                  lits({&a, &c}), inf.str(), "inf"));
        RatioValue unit = ratio3(a, a, c);
        report.add(CheckEntry::of(!unit.is_infinite() && unit.value().is_one(), "r(A,A;C) = I",
                                  lits({&a, &c}), unit.str(), "1"));
    }
    if (b == c) {
        report.add(CheckEntry::skip("r(C,B;C) = O", in3, "needs B != C"));
    } else {
        RatioValue z = ratio3(c, b, c);
        report.add(CheckEntry::of(!z.is_infinite() && z.value().is_zero(), "r(C,B;C) = O",
                                  lits({&b, &c}), z.str(), "0"));
    }
    bool undefined_thrown = false;
    try {
        (void)ratio3(a, a, a);
    } catch (const Error& e) {
        undefined_thrown = e.code() == Errc::undefined_ratio;
    }
    report.add(
        CheckEntry::of(undefined_thrown, "r(A,A;A) is undefined", {a.str()}, "", ""));

    const bool distinct = a != b && b != c && a != c;
    const bool invertible = !a.is_zero() && !b.is_zero() && !c.is_zero();

    if (!distinct || !invertible) {
        report.add(CheckEntry::skip("r(A^-1,B^-1;C^-1) = B * r(A,B;C) * A^-1", in3,
                                    "needs pairwise distinct points away from O"));
    } else {
        Scalar lhs = ratio3(a.inv(), b.inv(), c.inv()).value();
        Scalar rhs = b * ratio3(a, b, c).value() * a.inv();
        CheckEntry entry = CheckEntry::of(lhs == rhs, "r(A^-1,B^-1;C^-1) = B * r(A,B;C) * A^-1",
                                          in3, lhs.str(), rhs.str());
        entry.note = "oracle-resolved form";
        report.add(std::move(entry));

        Scalar alt = b * ratio3(b, a, c).value() * a.inv();
        CheckEntry recorded{"r(A^-1,B^-1;C^-1) = B * r(B,A;C) * A^-1  [recorded, not asserted]",
                            in3,
                            CheckEntry::Status::skipped,
                            lhs.str(),
                            alt.str(),
                            "alternative closing form; fails whenever r(A,B;C) != r(B,A;C)"};
        report.add(std::move(recorded));
    }

    if (!distinct || !invertible) {
        report.add(CheckEntry::skip("r(A^-1,B^-1;C^-1) = r(A,B;C) * r(B,A;O)", in3,
                                    "needs pairwise distinct points away from O"));
    } else if (!spec.commutative()) {
        report.add(CheckEntry::skip("r(A^-1,B^-1;C^-1) = r(A,B;C) * r(B,A;O)", in3,
                                    "commutative backends only"));
    } else {
        Scalar lhs = ratio3(a.inv(), b.inv(), c.inv()).value();
        Scalar rhs =
            ratio3(a, b, c).value() * ratio3(b, a, Scalar::zero(spec)).value();
        report.add(CheckEntry::of(lhs == rhs, "r(A^-1,B^-1;C^-1) = r(A,B;C) * r(B,A;O)", in3,
                                  lhs.str(), rhs.str()));
    }

    if (b == c) {
        report.add(CheckEntry::skip("r(X,B;C) = M*X + N", in3, "needs B != C"));
        report.add(CheckEntry::skip("M*B + N = I and M*C + N = O", in3, "needs B != C"));
    } else {
        LineEquation eq = line_equation_coeffs(b, c);
        Scalar lhs = ratio3(a, b, c).value();
        Scalar rhs = eq.eval(a);
        CheckEntry entry = CheckEntry::of(lhs == rhs, "r(X,B;C) = M*X + N", in3, lhs.str(),
                                          rhs.str());
        entry.note = "M = (B-C)^-1, N = (C-B)^-1 * C, evaluated at X = A";
        report.add(std::move(entry));
        bool ends = eq.eval(b).is_one() && eq.eval(c).is_zero();
        report.add(CheckEntry::of(ends, "M*B + N = I and M*C + N = O", lits({&b, &c}),
                                  eq.eval(b).str() + " , " + eq.eval(c).str(), "1 , 0"));
    }

    if (!distinct) {
        report.add(CheckEntry::skip("r(A,C;B) - r(B,C;A) = [(C-B)^-1 + (C-A)^-1]*(A-B)", in3,
                                    "needs pairwise distinct points"));
        report.add(CheckEntry::skip("M = O iff C+C = A+B", in3, "needs pairwise distinct points"));
        report.add(CheckEntry::skip("N = I+I at the midpoint", in3,
                                    "needs pairwise distinct points"));
    } else {
        Scalar coeff = (c - b).inv() + (c - a).inv();
        Scalar lhs = ratio3(a, c, b).value() - ratio3(b, c, a).value();
        Scalar rhs = coeff * (a - b);
        report.add(CheckEntry::of(lhs == rhs,
                                  "r(A,C;B) - r(B,C;A) = [(C-B)^-1 + (C-A)^-1]*(A-B)", in3,
                                  lhs.str(), rhs.str()));
        bool iff = coeff.is_zero() == (c + c == a + b);
        report.add(CheckEntry::of(iff, "M = O iff C+C = A+B", in3, coeff.str(),
                                  (c + c).str() + " vs " + (a + b).str()));
        if (c + c == a + b) {
            Scalar two = one + one;
            bool n_val = ratio3(a, c, b).value() == two && ratio3(b, c, a).value() == two;
            report.add(CheckEntry::of(n_val, "N = I+I at the midpoint", in3,
                                      ratio3(a, c, b).str(), two.str()));
        } else {
            report.add(
                CheckEntry::skip("N = I+I at the midpoint", in3, "C is not the midpoint of A, B"));
        }
    }

    return report;
}

// ---- substructure ----

namespace {

class LawCheck {
public:
    LawCheck(std::string identity, std::vector<std::string> map_inputs)
        : identity_(std::move(identity)), inputs_(std::move(map_inputs)) {}

    void observe(bool ok, const std::string& lhs, const std::string& rhs,
                 const std::string& at) {
        ++cases_;
        if (!ok && all_ok_) {
            all_ok_ = false;
            witness_lhs_ = lhs;
            witness_rhs_ = rhs;
            witness_at_ = at;
        }
    }

    CheckEntry entry() const {
        if (cases_ == 0) {
            return CheckEntry::skip(identity_, inputs_, "no applicable sample");
        }
        CheckEntry out = CheckEntry::of(all_ok_, identity_, inputs_, witness_lhs_, witness_rhs_);
        out.note = all_ok_ ? std::to_string(cases_) + " instances"
                           : "counterexample at " + witness_at_;
        return out;
    }

private:
    std::string identity_;
    std::vector<std::string> inputs_;
    bool all_ok_ = true;
    std::size_t cases_ = 0;
    std::string witness_lhs_, witness_rhs_, witness_at_;
};

} // namespace

Report check_substructure(const RatioMapSpec& map, std::span<const Scalar> sample) {
    const FieldSpec& spec = map.spec();
    const Scalar zero = Scalar::zero(spec);
    const Scalar one = Scalar::one(spec);
    Report report;

    std::vector<std::string> map_inputs;
    if (map.is_two_point()) {
        map_inputs = {"B=" + map.b().str()};
    } else {
        map_inputs = {"B=" + map.b().str(), "C=" + map.c().str()};
    }

    auto value = [&](const Scalar& x) { return map.apply(x).value(); };
    // the neutral arguments of the map: r(.)=O at `zero_arg`, r(.)=I at B
    const Scalar zero_arg = map.is_two_point() ? zero : map.c();

    report.add(CheckEntry::of(value(zero_arg).is_zero(),
                              map.is_two_point() ? "zero element is r_B(O)"
                                                 : "zero element is r_BC(C)",
                              map_inputs, value(zero_arg).str(), "0"));
    report.add(CheckEntry::of(value(map.b()).is_one(),
                              map.is_two_point() ? "unit element is r_B(B)"
                                                 : "unit element is r_BC(B)",
                              map_inputs, value(map.b()).str(), "1"));

    LawCheck zero_law("x + zero = x", map_inputs);
    LawCheck opposite_law(map.is_two_point() ? "opposite of r_B(X) is r_B(-X)"
                                             : "opposite of r_BC(X) is r_BC(2C-X)",
                          map_inputs);
    LawCheck unit_law("x * unit = x", map_inputs);
    LawCheck inverse_law(map.is_two_point() ? "inverse of r_B(X) is r_X(B)"
                                            : "inverse of r_BC(X) is r_XC(B)",
                         map_inputs);
    LawCheck add_closure("the image set is closed under +", map_inputs);
    LawCheck mul_closure("the image set is closed under *", map_inputs);
    LawCheck comm_law("addition commutes", map_inputs);
    LawCheck assoc_law("addition associates", map_inputs);
    LawCheck left_dist("left distributive law", map_inputs);
    LawCheck right_dist("right distributive law", map_inputs);

    auto at = [](std::initializer_list<const Scalar*> xs) {
        std::string out;
        for (const Scalar* x : xs) {
            if (!out.empty()) out += ", ";
            out += x->str();
        }
        return out;
    };

    for (const Scalar& x : sample) {
        Scalar vx = value(x);
        {
            Scalar lhs = vx + value(zero_arg);
            zero_law.observe(lhs == vx, lhs.str(), vx.str(), at({&x}));
        }
        {
            Scalar mirror = map.is_two_point() ? -x : map.c() + map.c() - x;
            Scalar lhs = vx + value(mirror);
            opposite_law.observe(lhs.is_zero(), lhs.str(), "0", at({&x}));
        }
        {
            Scalar lhs = vx * value(map.b());
            unit_law.observe(lhs == vx, lhs.str(), vx.str(), at({&x}));
        }
        if (x != zero_arg) {
            Scalar inv_val = map.is_two_point() ? ratio2(map.b(), x).value()
                                                : ratio3(map.b(), x, map.c()).value();
            Scalar lhs = vx * inv_val;
            inverse_law.observe(lhs.is_one(), lhs.str(), "1", at({&x}));
        }
    }

    const std::size_t n = sample.size();
    const bool small = n > 0 && n <= 8;
    auto pair_indices = [&](auto&& body) {
        if (small) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) body(i, j);
        } else {
            for (std::size_t i = 0; i < n; ++i) body(i, (i + 1) % n);
        }
    };
    auto triple_indices = [&](auto&& body) {
        if (small) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) body(i, j, k);
        } else {
            for (std::size_t i = 0; i < n; ++i) body(i, (i + 1) % n, (i + 2) % n);
        }
    };

    pair_indices([&](std::size_t i, std::size_t j) {
        const Scalar &x = sample[i], &y = sample[j];
        Scalar vx = value(x), vy = value(y);
        {
            Scalar lhs = vx + vy;
            Scalar witness = map.is_two_point() ? x + y : x + y - map.c();
            add_closure.observe(lhs == value(witness), lhs.str(), value(witness).str(),
                                at({&x, &y}));
            comm_law.observe(lhs == vy + vx, lhs.str(), (vy + vx).str(), at({&x, &y}));
        }
        {
            Scalar lhs = vx * vy;
            Scalar witness = map.is_two_point()
                                 ? x * map.b().inv() * y
                                 : (x - map.c()) * (map.b() - map.c()).inv() * (y - map.c()) +
                                       map.c();
            mul_closure.observe(lhs == value(witness), lhs.str(), value(witness).str(),
                                at({&x, &y}));
        }
    });

    triple_indices([&](std::size_t i, std::size_t j, std::size_t k) {
        const Scalar &x = sample[i], &y = sample[j], &z = sample[k];
        Scalar vx = value(x), vy = value(y), vz = value(z);
        assoc_law.observe((vx + vy) + vz == vx + (vy + vz), ((vx + vy) + vz).str(),
                          (vx + (vy + vz)).str(), at({&x, &y, &z}));
        left_dist.observe(vx * (vy + vz) == vx * vy + vx * vz, (vx * (vy + vz)).str(),
                          (vx * vy + vx * vz).str(), at({&x, &y, &z}));
        right_dist.observe((vx + vy) * vz == vx * vz + vy * vz, ((vx + vy) * vz).str(),
                           (vx * vz + vy * vz).str(), at({&x, &y, &z}));
    });

    report.add(zero_law.entry());
    report.add(opposite_law.entry());
    report.add(unit_law.entry());
    report.add(inverse_law.entry());
    report.add(add_closure.entry());
    report.add(mul_closure.entry());
    report.add(comm_law.entry());
    report.add(assoc_law.entry());
    report.add(left_dist.entry());
    report.add(right_dist.entry());
    return report;
}

// ---- preservation ----

RatioValue ratio3_on_line(const Point& a, const Point& b, const Point& c,
                          const Point& origin, const Point& unit) {
    if (origin == unit) raise(Errc::degenerate_input, "base pair must be two distinct points");
    Line l = line_through(origin, unit);
    for (const Point* p : {&a, &b, &c}) {
        if (!l.contains(*p)) {
            raise(Errc::degenerate_input, "ratio points must lie on the base pair's line");
        }
    }
    auto coordinate = [&](const Point& p) {
        if (l.is_vertical()) {
            return (p.y - origin.y) * (unit.y - origin.y).inv();
        }
        return (p.x - origin.x) * (unit.x - origin.x).inv();
    };
    return ratio3(coordinate(a), coordinate(b), coordinate(c));
}

Report check_preservation(const PlaneMap& map, const Scalar& a, const Scalar& b,
                          const Scalar& c) {
    require_same(a, b);
    require_same(b, c);
    const FieldSpec& spec = a.spec();
    Report report;
    auto in3 = lits({&a, &b, &c});
    auto in2 = lits({&a, &b});

    if (const auto* dilate = std::get_if<LeftDilate>(&map)) {
        const Scalar& factor = dilate->factor;
        if (factor.is_zero()) raise(Errc::degenerate_input, "dilation factor must be nonzero");
        std::vector<std::string> tagged2 = {"lambda=" + factor.str(), a.str(), b.str()};
        std::vector<std::string> tagged3 = {"lambda=" + factor.str(), a.str(), b.str(), c.str()};
        if (a.is_zero() && b.is_zero()) {
            report.add(CheckEntry::skip("dilation preserves r(A:B)", tagged2,
                                        "r(O:O) is undefined"));
        } else {
            RatioValue lhs = ratio2(factor * a, factor * b);
            RatioValue rhs = ratio2(a, b);
            report.add(CheckEntry::of(lhs == rhs, "dilation preserves r(A:B)", tagged2,
                                      lhs.str(), rhs.str()));
        }
        if (a == b && b == c) {
            report.add(CheckEntry::skip("dilation preserves r(A,B;C)", tagged3,
                                        "undefined on A = B = C"));
        } else {
            RatioValue lhs = ratio3(factor * a, factor * b, factor * c);
            RatioValue rhs = ratio3(a, b, c);
            report.add(CheckEntry::of(lhs == rhs, "dilation preserves r(A,B;C)", tagged3,
                                      lhs.str(), rhs.str()));
        }
        return report;
    }

    if (const auto* shift = std::get_if<Translate>(&map)) {
        if (!shift->dy.is_zero()) {
            raise(Errc::degenerate_input, "translation must fix the base line (dy = 0)");
        }
        const Scalar& t = shift->dx;
        std::vector<std::string> tagged2 = {"t=" + t.str(), a.str(), b.str()};
        std::vector<std::string> tagged3 = {"t=" + t.str(), a.str(), b.str(), c.str()};
        if (a == b && b == c) {
            report.add(CheckEntry::skip("translation preserves r(A,B;C)", tagged3,
                                        "undefined on A = B = C"));
        } else {
            RatioValue lhs = ratio3(a + t, b + t, c + t);
            RatioValue rhs = ratio3(a, b, c);
            report.add(CheckEntry::of(lhs == rhs, "translation preserves r(A,B;C)", tagged3,
                                      lhs.str(), rhs.str()));
        }
        // the two-point ratio is generally not translation invariant; the
        // evaluation is recorded, never asserted
        if (!(a.is_zero() && b.is_zero()) && !((a + t).is_zero() && (b + t).is_zero())) {
            RatioValue lhs = ratio2(a + t, b + t);
            RatioValue rhs = ratio2(a, b);
            CheckEntry entry{"translation and r(A:B)  [recorded, not asserted]",
                             tagged2,
                             CheckEntry::Status::skipped,
                             lhs.str(),
                             rhs.str(),
                             lhs == rhs ? "preserved on this instance"
                                        : "not preserved on this instance"};
            report.add(std::move(entry));
        }
        return report;
    }

    const auto& projection = std::get<ParallelProjection>(map);
    if (projection.source != base_line(spec)) {
        raise(Errc::degenerate_input, "projection preservation reads points off the base line");
    }
    if (!projection.dir_x.is_zero() && projection.dir_y.is_zero()) {
        // a pencil parallel to the source collapses it to one point
        raise(Errc::bad_direction, "projection direction parallel to the source line");
    }
    std::vector<std::string> tagged3 = in3;
    if (a == b && b == c) {
        report.add(CheckEntry::skip("parallel projection preserves r(A,B;C) after rebasing",
                                    tagged3, "undefined on A = B = C"));
        return report;
    }
    Point img_o = apply_map(map, embed(Scalar::zero(spec)));
    Point img_i = apply_map(map, embed(Scalar::one(spec)));
    Point img_a = apply_map(map, embed(a));
    Point img_b = apply_map(map, embed(b));
    Point img_c = apply_map(map, embed(c));
    RatioValue lhs = ratio3_on_line(img_a, img_b, img_c, img_o, img_i);
    RatioValue rhs = ratio3(a, b, c);
    report.add(CheckEntry::of(lhs == rhs,
                              "parallel projection preserves r(A,B;C) after rebasing", tagged3,
                              lhs.str(), rhs.str()));
    return report;
}

} // namespace dap
