#include "dap/plane.hpp"

namespace dap {

Point make_point(const Scalar& x, const Scalar& y) {
    if (x.spec() != y.spec()) {
        raise(Errc::field_mismatch, "point components from different fields");
    }
    return Point{x, y};
}

Line Line::vertical(Scalar c) { return Line(Vertical{std::move(c)}); }

Line Line::slanted(Scalar m, Scalar b) {
    if (m.spec() != b.spec()) {
        raise(Errc::field_mismatch, "line coefficients from different fields");
    }
    return Line(Slanted{std::move(m), std::move(b)});
}

const Scalar& Line::abscissa() const {
    if (!is_vertical()) raise(Errc::degenerate_input, "abscissa() on a slanted line");
    return std::get<Vertical>(form_).c;
}

const Scalar& Line::slope() const {
    if (is_vertical()) raise(Errc::degenerate_input, "slope() on a vertical line");
    return std::get<Slanted>(form_).m;
}

const Scalar& Line::intercept() const {
    if (is_vertical()) raise(Errc::degenerate_input, "intercept() on a vertical line");
    return std::get<Slanted>(form_).b;
}

const FieldSpec& Line::spec() const noexcept {
    if (is_vertical()) return std::get<Vertical>(form_).c.spec();
    return std::get<Slanted>(form_).m.spec();
}

bool Line::contains(const Point& p) const {
    if (is_vertical()) return p.x == abscissa();
    return p.y == p.x * slope() + intercept();
}

std::string Line::str() const {
    if (is_vertical()) return "{x = " + abscissa().str() + "}";
    return "{y = x*(" + slope().str() + ") + (" + intercept().str() + ")}";
}

Line line_through(const Point& p, const Point& q) {
    if (p.spec() != q.spec()) raise(Errc::field_mismatch, "points from different fields");
    if (p == q) raise(Errc::degenerate_input, "line through a repeated point");
    if (p.x == q.x) return Line::vertical(p.x);
    Scalar m = (q.x - p.x).inv() * (q.y - p.y);
    Scalar b = p.y - p.x * m;
    return Line::slanted(std::move(m), std::move(b));
}

Line parallel_through(const Line& l, const Point& p) {
    if (l.spec() != p.spec()) raise(Errc::field_mismatch, "line and point from different fields");
    if (l.is_vertical()) return Line::vertical(p.x);
    return Line::slanted(l.slope(), p.y - p.x * l.slope());
}

bool same_direction(const Line& a, const Line& b) {
    if (a.is_vertical() || b.is_vertical()) return a.is_vertical() && b.is_vertical();
    return a.slope() == b.slope();
}

std::optional<Point> intersect(const Line& a, const Line& b) {
    if (a.spec() != b.spec()) raise(Errc::field_mismatch, "lines from different fields");
    if (a == b) raise(Errc::same_line, "intersect() on one line");
    if (a.is_vertical() && b.is_vertical()) return std::nullopt;
    if (a.is_vertical() || b.is_vertical()) {
        const Line& v = a.is_vertical() ? a : b;
        const Line& s = a.is_vertical() ? b : a;
        Scalar x = v.abscissa();
        Scalar y = x * s.slope() + s.intercept();
        return Point{std::move(x), std::move(y)};
    }
    if (a.slope() == b.slope()) return std::nullopt;
    // x*(m1 - m2) = b2 - b1, solved by right division
    Scalar x = (b.intercept() - a.intercept()) * (a.slope() - b.slope()).inv();
    Scalar y = x * a.slope() + a.intercept();
    return Point{std::move(x), std::move(y)};
}

namespace {

bool collinear(const Point& a, const Point& b, const Point& c) {
    if (a == b || a == c || b == c) return true;
    return line_through(a, b).contains(c);
}

void require(bool condition, const char* hypothesis) {
    if (!condition) raise(Errc::hypothesis_violated, hypothesis);
}

} // namespace

bool check_desargues(const TriangleConfig& config) {
    const Point &A = config.A, &B = config.B, &C = config.C;
    const Point &Ap = config.Ap, &Bp = config.Bp, &Cp = config.Cp;

    require(A != B && B != C && A != C, "first vertex triple must be pairwise distinct");
    require(Ap != Bp && Bp != Cp && Ap != Cp, "second vertex triple must be pairwise distinct");
    require(!collinear(A, B, C), "first vertex triple must not be collinear");
    require(!collinear(Ap, Bp, Cp), "second vertex triple must not be collinear");
    require(A != Ap && B != Bp && C != Cp, "corresponding vertices must differ");

    Line ab = line_through(A, B), apbp = line_through(Ap, Bp);
    Line bc = line_through(B, C), bpcp = line_through(Bp, Cp);
    Line ac = line_through(A, C), apcp = line_through(Ap, Cp);
    require(same_direction(ab, apbp), "AB must be parallel to A'B'");
    require(ab != apbp, "AB and A'B' must be distinct lines");
    require(same_direction(bc, bpcp), "BC must be parallel to B'C'");
    require(bc != bpcp, "BC and B'C' must be distinct lines");

    Line la = line_through(A, Ap);
    Line lb = line_through(B, Bp);
    Line lc = line_through(C, Cp);
    const Line* five[5] = {&la, &lb, &lc, &ac, &apcp};
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            require(*five[i] != *five[j],
                    "the lines AA', BB', CC', AC, A'C' must be pairwise distinct");
        }
    }

    bool pab = same_direction(la, lb);
    bool pbc = same_direction(lb, lc);
    bool pac = same_direction(la, lc);
    if (!(pab && pbc)) {
        require(!pab && !pbc && !pac,
                "connector lines must be all parallel or all concurrent");
        auto meet = intersect(la, lb);
        require(meet.has_value(), "connector lines must meet");
        require(lc.contains(*meet), "connector lines must be concurrent in one point");
    }

    return same_direction(ac, apcp);
}

Point apply_map(const PlaneMap& map, const Point& p) {
    if (const auto* t = std::get_if<Translate>(&map)) {
        return Point{p.x + t->dx, p.y + t->dy};
    }
    if (const auto* d = std::get_if<LeftDilate>(&map)) {
        if (d->factor.is_zero()) raise(Errc::degenerate_input, "dilation factor must be nonzero");
        return Point{d->factor * p.x, d->factor * p.y};
    }
    const auto& proj = std::get<ParallelProjection>(map);
    if (!proj.source.contains(p)) raise(Errc::not_on_source, "point not on the source line");
    if (proj.dir_x.is_zero() && proj.dir_y.is_zero()) {
        raise(Errc::bad_direction, "projection direction must be nonzero");
    }
    Line ray = proj.dir_x.is_zero()
                   ? Line::vertical(p.x)
                   : [&] {
                         Scalar m = proj.dir_x.inv() * proj.dir_y;
                         return Line::slanted(m, p.y - p.x * m);
                     }();
    if (same_direction(ray, proj.target)) {
        raise(Errc::bad_direction, "projection direction parallel to the target line");
    }
    auto image = intersect(ray, proj.target);
    // transverse directions always meet in the affine plane
    return *image;
}

} // namespace dap
