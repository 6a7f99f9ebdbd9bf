#include "dap/suites.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "dap/construct.hpp"
#include "dap/ratio.hpp"

namespace dap::suites {

namespace {

/// Collapses many per-case reports into one entry per identity, keeping the
/// first counterexample as the witness.
class Folder {
public:
    void fold(const Report& report) {
        for (const auto& e : report.entries()) fold(e);
    }

    void fold(const CheckEntry& e) {
        auto [it, inserted] = index_.try_emplace(e.identity, aggregates_.size());
        if (inserted) aggregates_.push_back(Aggregate{e.identity, {}, 0, 0, 0, "", "", ""});
        Aggregate& agg = aggregates_[it->second];
        switch (e.status) {
            case CheckEntry::Status::pass:
                ++agg.passes;
                break;
            case CheckEntry::Status::skipped:
                ++agg.skips;
                if (agg.skip_note.empty()) agg.skip_note = e.note;
                break;
            case CheckEntry::Status::fail:
                if (agg.fails++ == 0) {
                    agg.witness = e.inputs;
                    agg.lhs = e.lhs;
                    agg.rhs = e.rhs;
                }
                break;
        }
    }

    Report finish() const {
        Report out;
        for (const auto& agg : aggregates_) {
            if (agg.fails > 0) {
                CheckEntry e = CheckEntry::failed(agg.identity, agg.witness, agg.lhs, agg.rhs);
                e.note = std::to_string(agg.fails) + " of " +
                         std::to_string(agg.fails + agg.passes) + " instances failed";
                out.add(std::move(e));
            } else if (agg.passes > 0) {
                CheckEntry e = CheckEntry::passed(agg.identity, {});
                e.note = std::to_string(agg.passes) + " instances";
                if (agg.skips > 0) e.note += ", " + std::to_string(agg.skips) + " skipped";
                out.add(std::move(e));
            } else {
                out.add(CheckEntry::skip(agg.identity, {},
                                         "skipped on all " + std::to_string(agg.skips) +
                                             " instances: " + agg.skip_note));
            }
        }
        return out;
    }

private:
    struct Aggregate {
        std::string identity;
        std::vector<std::string> witness;
        std::size_t passes, skips, fails;
        std::string lhs, rhs, skip_note;
    };
    std::map<std::string, std::size_t> index_;
    std::vector<Aggregate> aggregates_;
};

Point point_on(const Line& line, const Scalar& t) {
    if (line.is_vertical()) return Point{line.abscissa(), t};
    return Point{t, t * line.slope() + line.intercept()};
}

bool small_finite(const FieldSpec& spec) { return spec.finite() && spec.order() <= 16; }

std::vector<Point> all_points(const FieldSpec& spec) {
    auto elems = Sampler::enumerate(spec);
    std::vector<Point> out;
    out.reserve(elems.size() * elems.size());
    for (const auto& x : elems) {
        for (const auto& y : elems) out.push_back(Point{x, y});
    }
    return out;
}

std::vector<Point> points_on(const FieldSpec& spec, const Line& line) {
    std::vector<Point> out;
    for (const auto& s : Sampler::enumerate(spec)) {
        out.push_back(point_on(line, s));
    }
    return out;
}

std::vector<std::vector<Scalar>> case_triples(const Options& options) {
    std::vector<std::vector<Scalar>> out;
    if (small_finite(options.field)) {
        auto elems = Sampler::enumerate(options.field);
        for (const auto& a : elems) {
            for (const auto& b : elems) {
                for (const auto& c : elems) out.push_back({a, b, c});
            }
        }
        return out;
    }
    Sampler sampler(options.field, options.seed);
    for (std::size_t i = 0; i < options.samples; ++i) {
        out.push_back({sampler.scalar(), sampler.scalar(), sampler.scalar()});
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------- axioms

Report axioms(const Options& options) {
    const FieldSpec& F = options.field;
    Sampler sampler(F, options.seed);
    const Scalar zero = Scalar::zero(F);
    const Scalar one = Scalar::one(F);
    Folder folder;

    for (std::size_t i = 0; i < options.samples; ++i) {
        Scalar a = sampler.scalar(), b = sampler.scalar(), c = sampler.scalar();
        Report r;
        auto in = std::vector<std::string>{a.str(), b.str(), c.str()};
        r.add(CheckEntry::of((a + b) + c == a + (b + c), "(a+b)+c = a+(b+c)", in));
        r.add(CheckEntry::of(a + b == b + a, "a+b = b+a", in));
        r.add(CheckEntry::of(a + zero == a, "a+0 = a", in));
        r.add(CheckEntry::of((a + (-a)).is_zero(), "a+(-a) = 0", in));
        r.add(CheckEntry::of((a * b) * c == a * (b * c), "(a*b)*c = a*(b*c)", in));
        r.add(CheckEntry::of(a * one == a && one * a == a, "a*1 = 1*a = a", in));
        r.add(CheckEntry::of(a * (b + c) == a * b + a * c, "a*(b+c) = a*b + a*c", in));
        r.add(CheckEntry::of((a + b) * c == a * c + b * c, "(a+b)*c = a*c + b*c", in));
        if (a.is_zero()) {
            r.add(CheckEntry::skip("a*a^-1 = a^-1*a = 1", in, "a = 0"));
        } else {
            r.add(CheckEntry::of((a * a.inv()).is_one() && (a.inv() * a).is_one(),
                                 "a*a^-1 = a^-1*a = 1", in));
        }
        if (a.is_zero() || b.is_zero()) {
            r.add(CheckEntry::skip("(a*b)^-1 = b^-1 * a^-1", in, "needs a, b != 0"));
            r.add(CheckEntry::skip("x^-1 - y^-1 = y^-1*(y-x)*x^-1", in, "needs x, y != 0"));
            r.add(CheckEntry::skip("no zero divisors", in, "needs a, b != 0"));
        } else {
            r.add(CheckEntry::of((a * b).inv() == b.inv() * a.inv(), "(a*b)^-1 = b^-1 * a^-1",
                                 in));
            r.add(CheckEntry::of(a.inv() - b.inv() == b.inv() * (b - a) * a.inv(),
                                 "x^-1 - y^-1 = y^-1*(y-x)*x^-1", in));
            r.add(CheckEntry::of(!(a * b).is_zero(), "no zero divisors", in));
        }
        r.add(CheckEntry::of(!(a * a == a) || a.is_zero() || a.is_one(),
                             "only 0 and 1 are idempotent", in));
        r.add(CheckEntry::of(!(a * a == one) || a == one || a == -one,
                             "a^2 = 1 implies a = 1 or a = -1", in));
        folder.fold(r);
    }

    Report out = folder.finish();

    if (F.commutative()) {
        Sampler extra(F, options.seed + 1);
        Scalar a = extra.scalar(), b = extra.scalar();
        out.add(CheckEntry::of(a * b == b * a && is_central(a),
                               "every element is central (commutative backend)",
                               {a.str(), b.str()}));
        out.add(CheckEntry::skip("noncommutativity witness", {},
                                 "commutative backend has none"));
    } else {
        Scalar qi = Scalar::quaternion(0, 1, 0, 0);
        Scalar qj = Scalar::quaternion(0, 0, 1, 0);
        Scalar qk = Scalar::quaternion(0, 0, 0, 1);
        out.add(CheckEntry::of(qi * qj == qk && qj * qi == -qk && qi * qj != qj * qi,
                               "noncommutativity witness", {"i", "j"}, (qi * qj).str(),
                               (qj * qi).str()));
        Scalar five = Scalar::integer(F, 5);
        out.add(CheckEntry::of(is_central(five) && !is_central(qi),
                               "scalars are central, i is not", {"5", "i"}));
        Scalar p = qi;
        Scalar inside = Scalar::quaternion(3, 2, 0, 0);
        out.add(CheckEntry::of(commutes(p, inside) && !commutes(p, qj),
                               "centralizer membership: 3+2i yes, j no", {"i"}));
        out.add(CheckEntry::of(conjugate_by(qi, qj) == -qi, "j^-1 * i * j = -i", {"i", "j"},
                               conjugate_by(qi, qj).str(), (-qi).str()));
        Sampler extra(F, options.seed + 1);
        Scalar q = extra.nonzero();
        out.add(CheckEntry::of(conjugate_by(five, q) == five,
                               "conjugating a central element is the identity",
                               {"5", q.str()}));
    }

    // characteristic: the first n with n*1 = 0, or none
    {
        std::uint32_t ch = F.characteristic();
        bool ok = true;
        Scalar acc = zero;
        for (std::uint32_t n = 1; n <= (ch == 0 ? 16 : ch); ++n) {
            acc = acc + one;
            bool expect_zero = (ch != 0 && n == ch);
            if (acc.is_zero() != expect_zero) ok = false;
        }
        out.add(CheckEntry::of(ok, "characteristic matches n*1 accumulation",
                               {std::to_string(ch)}));
    }

    // ---- plane axioms ----
    Sampler geo(F, options.seed + 2);
    Folder plane_folder;
    for (std::size_t i = 0; i < options.samples; ++i) {
        Point p = geo.point();
        Point q = geo.point();
        if (p == q) continue;
        Report r;
        std::vector<std::string> in{p.str(), q.str()};
        Line l = line_through(p, q);
        r.add(CheckEntry::of(l.contains(p) && l.contains(q), "join contains both points", in));
        r.add(CheckEntry::of(line_through(q, p) == l, "join is symmetric", in));
        Point w = geo.point();
        Line par = parallel_through(l, w);
        r.add(CheckEntry::of(same_direction(par, l) && par.contains(w),
                             "parallel through a point has the same direction", in));
        r.add(CheckEntry::of(parallel_through(par, w) == par, "parallel_through is idempotent",
                             in));
        r.add(CheckEntry::of(parallel_through(l, p) == l,
                             "parallel through an incident point is the line", in));
        if (par != l) {
            r.add(CheckEntry::of(!intersect(par, l).has_value(),
                                 "proper parallels do not meet", in));
        }
        Line vertical = Line::vertical(p.x);
        if (!l.is_vertical()) {
            auto meet = intersect(vertical, l);
            r.add(CheckEntry::of(meet.has_value() && vertical.contains(*meet) && l.contains(*meet),
                                 "a vertical and a slanted line meet on both", in));
        }
        plane_folder.fold(r);
    }
    out.merge(plane_folder.finish());

    {
        Point o = embed(zero);
        Point i = embed(one);
        Point up = Point{zero, one};
        bool ok = !line_through(o, i).contains(up);
        out.add(CheckEntry::of(ok, "O, I, (0,1) are not collinear", {}));
    }

    // parallelism is an equivalence relation
    {
        std::vector<Line> lines;
        if (small_finite(F)) {
            for (const auto& s : Sampler::enumerate(F)) {
                lines.push_back(Line::vertical(s));
                for (const auto& t : Sampler::enumerate(F)) {
                    lines.push_back(Line::slanted(s, t));
                }
            }
        } else {
            Sampler ls(F, options.seed + 3);
            for (std::size_t i = 0; i < 12; ++i) {
                Point p = ls.point();
                Point q = ls.point();
                if (p == q) continue;
                lines.push_back(line_through(p, q));
            }
        }
        bool ok = true;
        for (const auto& l1 : lines) {
            ok = ok && same_direction(l1, l1);
            for (const auto& l2 : lines) {
                ok = ok && same_direction(l1, l2) == same_direction(l2, l1);
                for (const auto& l3 : lines) {
                    if (same_direction(l1, l2) && same_direction(l2, l3)) {
                        ok = ok && same_direction(l1, l3);
                    }
                }
            }
        }
        out.add(CheckEntry::of(ok, "parallelism is an equivalence relation",
                               {std::to_string(lines.size()) + " lines"}));
    }

    // collineations preserve collinearity
    {
        Sampler ms(F, options.seed + 4);
        Folder map_folder;
        for (std::size_t i = 0; i < std::min<std::size_t>(options.samples, 100); ++i) {
            Point p = ms.point();
            Point q = ms.point();
            if (p == q) continue;
            Line l = line_through(p, q);
            Point r1 = point_on(l, ms.scalar());
            Point r2 = point_on(l, ms.scalar());
            Point r3 = point_on(l, ms.scalar());
            Report r;
            PlaneMap shift = Translate{ms.scalar(), ms.scalar()};
            PlaneMap dilate = LeftDilate{ms.nonzero()};
            auto still_collinear = [&](const PlaneMap& m) {
                Point i1 = apply_map(m, r1), i2 = apply_map(m, r2), i3 = apply_map(m, r3);
                if (i1 == i2 || i1 == i3 || i2 == i3) return true;
                return line_through(i1, i2).contains(i3);
            };
            r.add(CheckEntry::of(still_collinear(shift), "translations preserve collinearity",
                                 {l.str()}));
            r.add(CheckEntry::of(still_collinear(dilate),
                                 "left dilations preserve collinearity", {l.str()}));
            // parallel projection off the base line
            Point t1 = ms.point();
            Point t2 = ms.point();
            if (t1 == t2) continue;
            Line target = line_through(t1, t2);
            Scalar dx = ms.scalar(), dy = ms.scalar();
            if (dx.is_zero() && dy.is_zero()) continue;
            Line probe = dx.is_zero() ? Line::vertical(zero) : [&] {
                Scalar m = dx.inv() * dy;
                return Line::slanted(m, zero);
            }();
            if (same_direction(probe, target)) continue;
            PlaneMap proj = ParallelProjection{base_line(F), target, dx, dy};
            Point s1 = embed(ms.scalar()), s2 = embed(ms.scalar()), s3 = embed(ms.scalar());
            Point i1 = apply_map(proj, s1), i2 = apply_map(proj, s2), i3 = apply_map(proj, s3);
            bool on_target = target.contains(i1) && target.contains(i2) && target.contains(i3);
            r.add(CheckEntry::of(on_target, "parallel projection lands on the target line",
                                 {target.str()}));
            map_folder.fold(r);
        }
        out.merge(map_folder.finish());
    }

    return out;
}

// ------------------------------------------------------------- desargues

namespace {

std::optional<TriangleConfig> derive_config(const Point& A, const Point& B, const Point& C,
                                            const Point& Ap, const Point& Bp,
                                            const std::optional<Scalar>& free_parameter) {
    if (A == Ap || B == Bp || Bp == Ap) return std::nullopt;
    Line l_aap = line_through(A, Ap);
    Line l_bbp = line_through(B, Bp);
    Line l1 = parallel_through(line_through(B, C), Bp);

    std::optional<Line> l2;
    if (same_direction(l_aap, l_bbp)) {
        l2 = parallel_through(l_aap, C);
    } else {
        auto center = intersect(l_aap, l_bbp);
        if (!center) return std::nullopt;
        if (C == *center) {
            l2 = std::nullopt; // every point of l1 satisfies the pencil constraint
        } else {
            l2 = line_through(*center, C);
        }
    }

    Point Cp = A; // placeholder
    if (!l2 || *l2 == l1) {
        if (!free_parameter) return std::nullopt;
        Cp = point_on(l1, *free_parameter);
    } else {
        auto meet = intersect(l1, *l2);
        if (!meet) return std::nullopt;
        Cp = *meet;
    }
    return TriangleConfig{A, B, C, Ap, Bp, Cp};
}

} // namespace

Report desargues(const Options& options) {
    const FieldSpec& F = options.field;
    Report out;

    if (F.kind() == FieldKind::prime && F.prime_modulus() <= 3) {
        auto points = all_points(F);
        std::size_t checked = 0;
        bool all_ok = true;
        std::string witness;
        for (const Point& A : points) {
            for (const Point& B : points) {
                if (B == A) continue;
                Line ab = line_through(A, B);
                for (const Point& C : points) {
                    if (C == A || C == B || ab.contains(C)) continue;
                    for (const Point& Ap : points) {
                        if (Ap == A) continue;
                        Line lpar = parallel_through(ab, Ap);
                        for (const Point& Bp : points_on(F, lpar)) {
                            if (Bp == Ap) continue;
                            std::vector<std::optional<Scalar>> parameters;
                            for (const auto& s : Sampler::enumerate(F)) parameters.push_back(s);
                            std::set<std::string> seen;
                            for (const auto& parameter : parameters) {
                                auto cfg = derive_config(A, B, C, Ap, Bp, parameter);
                                if (!cfg) continue;
                                std::string key = cfg->Cp.str();
                                if (!seen.insert(key).second) continue;
                                try {
                                    bool ok = check_desargues(*cfg);
                                    ++checked;
                                    if (!ok && all_ok) {
                                        all_ok = false;
                                        witness = A.str() + B.str() + C.str() + " / " +
                                                  Ap.str() + Bp.str() + cfg->Cp.str();
                                    }
                                } catch (const Error&) {
                                    // hypothesis miss: not a valid configuration
                                }
                            }
                        }
                    }
                }
            }
        }
        CheckEntry exhaustive = CheckEntry::of(
            all_ok, "third sides parallel on every valid configuration (exhaustive)",
            {F.str(), std::to_string(checked) + " configurations"}, witness, "");
        if (checked == 0) {
            // AG(2,2) has 4 points; the pairwise-distinct-line hypotheses
            // leave nothing to check there
            exhaustive.note = "no valid configuration exists at this order";
        }
        out.add(std::move(exhaustive));
    } else {
        Sampler sampler(F, options.seed);
        std::size_t produced = 0;
        std::size_t attempts = 0;
        const std::size_t cap = options.samples * 400 + 1000;
        bool all_ok = true;
        std::string witness;
        while (produced < options.samples && attempts < cap) {
            ++attempts;
            Point A = sampler.point();
            Point B = sampler.point();
            if (B == A) continue;
            Line ab = line_through(A, B);
            Point C = sampler.point();
            if (C == A || C == B || ab.contains(C)) continue;

            std::optional<TriangleConfig> cfg;
            if (sampler.raw() % 2 == 0) {
                Scalar tx = sampler.scalar(), ty = sampler.scalar();
                if (tx.is_zero() && ty.is_zero()) continue;
                Point Ap{A.x + tx, A.y + ty};
                Point Bp{B.x + tx, B.y + ty};
                Point Cp{C.x + tx, C.y + ty};
                cfg = TriangleConfig{A, B, C, Ap, Bp, Cp};
            } else {
                Point Ap = sampler.point();
                if (Ap == A) continue;
                Point Bp = point_on(parallel_through(ab, Ap), sampler.scalar());
                cfg = derive_config(A, B, C, Ap, Bp, sampler.scalar());
                if (!cfg) continue;
            }
            try {
                bool ok = check_desargues(*cfg);
                ++produced;
                if (!ok && all_ok) {
                    all_ok = false;
                    witness = cfg->A.str() + cfg->B.str() + cfg->C.str() + " / " +
                              cfg->Ap.str() + cfg->Bp.str() + cfg->Cp.str();
                }
            } catch (const Error&) {
                continue;
            }
        }
        out.add(CheckEntry::of(all_ok && produced == options.samples,
                               "third sides parallel on randomized valid configurations",
                               {F.str(), std::to_string(produced) + " configurations"}, witness,
                               ""));
    }

    // a violated hypothesis is reported, not silently accepted
    {
        const Scalar zero = Scalar::zero(F);
        const Scalar one = Scalar::one(F);
        Point a = embed(zero), b = embed(one), c = embed(one + one);
        bool threw = false;
        try {
            (void)check_desargues(TriangleConfig{a, b, c, a, b, c});
        } catch (const Error& e) {
            threw = e.code() == Errc::hypothesis_violated;
        }
        out.add(CheckEntry::of(threw, "degenerate configurations raise HypothesisViolated", {}));
    }

    return out;
}

// ------------------------------------------------------ ratio suites

Report ratio2(const Options& options) {
    Folder folder;
    auto cases = case_triples(options);
    for (const auto& t : cases) folder.fold(check_ratio2_identities(t[0], t[1], t[2]));
    Report out = folder.finish();

    // which side of the product-divisor identity holds: divide by B, not C
    std::optional<std::vector<std::string>> witness;
    for (const auto& t : cases) {
        const Scalar &a = t[0], &b = t[1], &c = t[2];
        if (b.is_zero() || c.is_zero()) continue;
        Scalar lhs = ratio2(a, b * c).value();
        Scalar proof_form = c.inv() * ratio2(a, b).value();
        Scalar printed_form = c.inv() * ratio2(a, c).value();
        if (lhs == proof_form && lhs != printed_form) {
            witness = {a.str(), b.str(), c.str()};
            break;
        }
        if (lhs != proof_form) {
            witness = std::nullopt;
            CheckEntry bad = CheckEntry::failed("resolution: r(A:B*C) divides by B",
                                                {a.str(), b.str(), c.str()}, lhs.str(),
                                                proof_form.str());
            out.add(std::move(bad));
            return out;
        }
    }
    if (witness) {
        CheckEntry e = CheckEntry::passed("resolution: r(A:B*C) divides by B", *witness);
        e.note = "r(A:B*C) = C^-1*r(A:B) holds; the variant C^-1*r(A:C) fails at this witness";
        out.add(std::move(e));
    } else {
        out.add(CheckEntry::skip("resolution: r(A:B*C) divides by B", {},
                                 "both forms coincide on every sampled triple of this backend"));
    }

    // the equal-ratio criterion needs the two-sided condition away from char 2
    {
        const FieldSpec& F = options.field;
        const Scalar one = Scalar::one(F);
        if (F.characteristic() == 2) {
            out.add(CheckEntry::skip("resolution: equal ratios need A = B or A = -B", {},
                                     "A = -B collapses to A = B in characteristic 2"));
        } else {
            Scalar a = one;
            Scalar b = -one;
            bool equal_yet_distinct = ratio2(a, b) == ratio2(b, a) && a != b;
            CheckEntry e = CheckEntry::of(equal_yet_distinct,
                                          "resolution: equal ratios need A = B or A = -B",
                                          {a.str(), b.str()}, ratio2(a, b).str(),
                                          ratio2(b, a).str());
            e.note = "r(I:-I) = r(-I:I) with I != -I, so the one-sided criterion fails";
            out.add(std::move(e));
        }
    }
    return out;
}

Report ratio3(const Options& options) {
    Folder folder;
    auto cases = case_triples(options);
    // make sure midpoint instances occur even on sampled backends
    if (!small_finite(options.field) && options.field.characteristic() != 2) {
        Sampler sampler(options.field, options.seed + 7);
        for (std::size_t i = 0; i < std::max<std::size_t>(options.samples / 10, 4); ++i) {
            Scalar a = sampler.scalar();
            Scalar c = sampler.scalar();
            cases.push_back({a, c + c - a, c});
        }
    }
    for (const auto& t : cases) folder.fold(check_ratio3_identities(t[0], t[1], t[2]));
    Report out = folder.finish();

    // closing form of the inverse-points identity
    std::optional<std::vector<std::string>> witness;
    for (const auto& t : cases) {
        const Scalar &a = t[0], &b = t[1], &c = t[2];
        if (a == b || b == c || a == c) continue;
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        Scalar lhs = ratio3(a.inv(), b.inv(), c.inv()).value();
        Scalar kept = b * ratio3(a, b, c).value() * a.inv();
        Scalar alternative = b * ratio3(b, a, c).value() * a.inv();
        if (lhs == kept && lhs != alternative) {
            witness = {a.str(), b.str(), c.str()};
            break;
        }
        if (lhs != kept) {
            CheckEntry bad = CheckEntry::failed(
                "resolution: r(A^-1,B^-1;C^-1) keeps r(A,B;C) in the middle",
                {a.str(), b.str(), c.str()}, lhs.str(), kept.str());
            out.add(std::move(bad));
            return out;
        }
    }
    if (witness) {
        CheckEntry e = CheckEntry::passed(
            "resolution: r(A^-1,B^-1;C^-1) keeps r(A,B;C) in the middle", *witness);
        e.note = "B*r(A,B;C)*A^-1 holds; the swapped variant B*r(B,A;C)*A^-1 fails at this witness";
        out.add(std::move(e));
    } else {
        out.add(CheckEntry::skip(
            "resolution: r(A^-1,B^-1;C^-1) keeps r(A,B;C) in the middle", {},
            "no admissible distinct nonzero triple separates the two forms on this backend"));
    }
    return out;
}

// ------------------------------------------------------ substructure

Report substructure(const Options& options) {
    const FieldSpec& F = options.field;
    const Scalar zero = Scalar::zero(F);
    Report out;

    if (small_finite(F)) {
        auto elems = Sampler::enumerate(F);
        auto everything = [&](const RatioMapSpec& map, const std::string& name) {
            Folder folder;
            folder.fold(check_substructure(map, elems));
            Report laws = folder.finish();
            // bijection: the image is the whole line and round-trips hold
            std::set<std::string> image;
            bool round_trips = true;
            for (const auto& x : elems) {
                RatioValue r = map.apply(x);
                image.insert(r.value().str());
                Scalar back = map.is_two_point()
                                  ? ratio2_inverse_point(r, map.b())
                                  : ratio3_inverse_point(r, map.b(), map.c());
                round_trips = round_trips && back == x;
            }
            Report b;
            b.add(CheckEntry::of(image.size() == elems.size(),
                                 name + " maps the line onto the line (exhaustive)",
                                 {std::to_string(image.size()) + " of " +
                                  std::to_string(elems.size()) + " values"}));
            b.add(CheckEntry::of(round_trips, name + " round-trips through its inverse point",
                                 {}));
            b.merge(laws);
            return b;
        };

        Folder two_folder;
        for (const auto& b : elems) {
            if (b.is_zero()) continue;
            two_folder.fold(everything(RatioMapSpec::two_point(b), "r_B"));
        }
        out.merge(two_folder.finish());

        Folder three_folder;
        for (const auto& b : elems) {
            for (const auto& c : elems) {
                if (b == c || b.is_zero() || c.is_zero()) continue;
                three_folder.fold(everything(RatioMapSpec::three_point(b, c), "r_BC"));
            }
        }
        out.merge(three_folder.finish());
        return out;
    }

    Sampler sampler(F, options.seed);
    // bijection round-trips
    {
        bool ok2 = true, ok3 = true;
        std::string w2, w3;
        for (std::size_t i = 0; i < options.samples; ++i) {
            Scalar b = sampler.nonzero();
            Scalar x = sampler.scalar();
            Scalar back = ratio2_inverse_point(ratio2(x, b), b);
            if (back != x && ok2) {
                ok2 = false;
                w2 = "X=" + x.str() + ", B=" + b.str();
            }
            RatioValue r = RatioValue::finite(sampler.scalar());
            if (ratio2(ratio2_inverse_point(r, b), b) != r && ok2) {
                ok2 = false;
                w2 = "R=" + r.str() + ", B=" + b.str();
            }
            Scalar c = sampler.distinct_from(b);
            Scalar y = sampler.scalar();
            Scalar back3 = ratio3_inverse_point(ratio3(y, b, c), b, c);
            if (back3 != y && ok3) {
                ok3 = false;
                w3 = "X=" + y.str() + ", B=" + b.str() + ", C=" + c.str();
            }
            RatioValue r3 = RatioValue::finite(sampler.scalar());
            if (ratio3(ratio3_inverse_point(r3, b, c), b, c) != r3 && ok3) {
                ok3 = false;
                w3 = "R=" + r3.str() + ", B=" + b.str() + ", C=" + c.str();
            }
        }
        out.add(CheckEntry::of(ok2, "r_B round-trips through its inverse point",
                               {std::to_string(options.samples) + " instances"}, w2, ""));
        out.add(CheckEntry::of(ok3, "r_BC round-trips through its inverse point",
                               {std::to_string(options.samples) + " instances"}, w3, ""));
    }

    // field laws of the image set on sampled maps
    {
        Folder two_folder, three_folder;
        for (std::size_t m = 0; m < 5; ++m) {
            std::vector<Scalar> sample;
            for (std::size_t i = 0; i < 12; ++i) sample.push_back(sampler.scalar());
            Scalar b = sampler.nonzero();
            two_folder.fold(check_substructure(RatioMapSpec::two_point(b), sample));
            Scalar c = sampler.nonzero();
            if (c == b) c = sampler.distinct_from(b);
            if (!c.is_zero() && c != b) {
                three_folder.fold(check_substructure(RatioMapSpec::three_point(b, c), sample));
            }
        }
        out.merge(two_folder.finish());
        out.merge(three_folder.finish());
    }
    return out;
}

// ------------------------------------------------------ preservation

Report preservation(const Options& options) {
    const FieldSpec& F = options.field;
    const Scalar zero = Scalar::zero(F);
    Sampler sampler(F, options.seed);
    Folder folder;

    for (std::size_t i = 0; i < options.samples; ++i) {
        Scalar a = sampler.scalar(), b = sampler.scalar(), c = sampler.scalar();
        folder.fold(check_preservation(LeftDilate{sampler.nonzero()}, a, b, c));
        folder.fold(check_preservation(Translate{sampler.scalar(), zero}, a, b, c));
    }

    // parallel projection with rebased origin and unit
    {
        std::size_t produced = 0;
        std::size_t attempts = 0;
        std::size_t want = std::max<std::size_t>(options.samples / 2, 8);
        while (produced < want && attempts < want * 200) {
            ++attempts;
            Point t1 = sampler.point();
            Point t2 = sampler.point();
            if (t1 == t2) continue;
            Line target = line_through(t1, t2);
            Scalar dx = sampler.scalar(), dy = sampler.scalar();
            if (dy.is_zero()) continue; // keep the pencil transverse to the source
            Line probe = dx.is_zero() ? Line::vertical(zero) : [&] {
                Scalar m = dx.inv() * dy;
                return Line::slanted(m, zero);
            }();
            if (same_direction(probe, target)) continue;
            ParallelProjection proj{base_line(F), target, dx, dy};
            folder.fold(check_preservation(PlaneMap{proj}, sampler.scalar(), sampler.scalar(),
                                           sampler.scalar()));
            ++produced;
        }
    }

    Report out = folder.finish();

    // the two-point ratio genuinely fails under translation: find a witness
    {
        std::optional<std::string> witness;
        auto try_witness = [&](const Scalar& t, const Scalar& a, const Scalar& b) {
            if (witness) return;
            if (a.is_zero() && b.is_zero()) return;
            if ((a + t).is_zero() && (b + t).is_zero()) return;
            RatioValue before = ratio2(a, b);
            RatioValue after = ratio2(a + t, b + t);
            if (before != after) {
                witness = "t=" + t.str() + ", A=" + a.str() + ", B=" + b.str();
            }
        };
        if (F.kind() == FieldKind::rationals) {
            try_witness(Scalar::integer(F, 1), Scalar::integer(F, 6), Scalar::integer(F, 2));
        }
        if (!witness && F.finite()) {
            auto elems = Sampler::enumerate(F);
            for (const auto& t : elems) {
                if (t.is_zero()) continue;
                for (const auto& a : elems) {
                    for (const auto& b : elems) try_witness(t, a, b);
                }
            }
        }
        for (std::size_t i = 0; !witness && i < options.samples * 4; ++i) {
            try_witness(sampler.nonzero(), sampler.scalar(), sampler.scalar());
        }
        out.add(CheckEntry::of(witness.has_value(),
                               "translation does not preserve r(A:B) (counterexample found)",
                               {witness.value_or("none found")}));
    }
    return out;
}

// ------------------------------------------------------ construct oracle

Report construct_oracle(const Options& options) {
    const FieldSpec& F = options.field;
    Sampler sampler(F, options.seed);
    Folder folder;
    Report out;

    for (std::size_t i = 0; i < options.samples; ++i) {
        Scalar a = sampler.scalar();
        Scalar b = sampler.nonzero();
        Scalar expect_add = a + b;
        Scalar expect_mul = a * b;
        Scalar expect_sub = a - b;
        Scalar expect_div = b.inv() * a;

        std::optional<Scalar> first_add, first_mul, first_sub, first_div;
        Report per_pair;
        bool independent = true;
        std::size_t done_aux = 0;
        std::size_t attempts = 0;
        while (done_aux < options.aux_samples && attempts < options.aux_samples * 4) {
            ++attempts;
            Point aux = sampler.off_base_point();
            std::optional<GeoResult> ga, gm, gs, gd;
            try {
                ga = geo_add(a, b, aux);
                gm = geo_mul(a, b, aux);
                gs = geo_sub(a, b, aux);
                gd = geo_left_div(a, b, aux);
            } catch (const Error& e) {
                if (e.code() != Errc::degenerate_aux) throw;
                continue; // re-sample the auxiliary point
            }
            per_pair.add(CheckEntry::of(ga->value == expect_add, "geo_add matches a+b",
                                        {a.str(), b.str(), aux.str()}, ga->value.str(),
                                        expect_add.str()));
            per_pair.add(CheckEntry::of(gm->value == expect_mul, "geo_mul matches a*b",
                                        {a.str(), b.str(), aux.str()}, gm->value.str(),
                                        expect_mul.str()));
            per_pair.add(CheckEntry::of(gs->value == expect_sub, "geo_sub matches a-b",
                                        {a.str(), b.str(), aux.str()}, gs->value.str(),
                                        expect_sub.str()));
            per_pair.add(CheckEntry::of(gd->value == expect_div, "geo_left_div matches b^-1*a",
                                        {a.str(), b.str(), aux.str()}, gd->value.str(),
                                        expect_div.str()));
            if (!first_add) {
                first_add = ga->value;
                first_mul = gm->value;
                first_sub = gs->value;
                first_div = gd->value;
                // replay soundness on the first auxiliary choice
                bool replays = true;
                try {
                    replay(ga->trace);
                    replay(gm->trace);
                    replay(gs->trace);
                    replay(gd->trace);
                    Trace round = Trace::from_json(gm->trace.to_json());
                    replays = round == gm->trace;
                    replay(round);
                } catch (const Error&) {
                    replays = false;
                }
                per_pair.add(CheckEntry::of(replays, "traces replay and round-trip through JSON",
                                            {a.str(), b.str(), aux.str()}));
                GeoResult swapped = geo_add(b, a, aux);
                per_pair.add(CheckEntry::of(swapped.value == ga->value, "geo_add commutes",
                                            {a.str(), b.str()}, swapped.value.str(),
                                            ga->value.str()));
                GeoResult inv_b = geo_inv(b, aux);
                GeoResult chained = geo_mul(inv_b.value, geo_mul(b, a, aux).value, aux);
                per_pair.add(CheckEntry::of(chained.value == a,
                                            "geo_mul(geo_inv(B), geo_mul(B,A)) = A",
                                            {a.str(), b.str()}, chained.value.str(), a.str()));
            } else {
                independent = independent && ga->value == *first_add &&
                              gm->value == *first_mul && gs->value == *first_sub &&
                              gd->value == *first_div;
            }
            ++done_aux;
        }
        per_pair.add(CheckEntry::of(independent && done_aux == options.aux_samples,
                                    "results independent of the auxiliary point",
                                    {a.str(), b.str(),
                                     std::to_string(done_aux) + " aux points"}));
        folder.fold(per_pair);
    }
    out.merge(folder.finish());

    {
        bool threw = false;
        try {
            (void)geo_add(Scalar::one(F), Scalar::one(F), embed(Scalar::one(F)));
        } catch (const Error& e) {
            threw = e.code() == Errc::aux_on_line;
        }
        out.add(CheckEntry::of(threw, "an auxiliary point on the base line is rejected", {}));
    }

    if (!F.commutative()) {
        Scalar qi = Scalar::quaternion(0, 1, 0, 0);
        Scalar qj = Scalar::quaternion(0, 0, 1, 0);
        Scalar qk = Scalar::quaternion(0, 0, 0, 1);
        bool ok = true;
        Sampler aux_sampler(F, options.seed + 9);
        for (int n = 0; n < 5; ++n) {
            Point aux = aux_sampler.off_base_point();
            ok = ok && geo_mul(qi, qj, aux).value == qk && geo_mul(qj, qi, aux).value == -qk;
        }
        out.add(CheckEntry::of(ok, "geometric product is order sensitive: i*j = k, j*i = -k",
                               {"i", "j"}));
    } else {
        out.add(CheckEntry::skip("geometric product is order sensitive: i*j = k, j*i = -k", {},
                                 "commutative backend"));
    }

    return out;
}

Report run(std::string_view name, const Options& options) {
    if (name == "axioms") return axioms(options);
    if (name == "desargues") return desargues(options);
    if (name == "ratio2") return ratio2(options);
    if (name == "ratio3") return ratio3(options);
    if (name == "substructure") return substructure(options);
    if (name == "preservation") return preservation(options);
    raise(Errc::parse_error, "unknown check suite '" + std::string(name) + "'");
}

} // namespace dap::suites
