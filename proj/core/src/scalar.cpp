#include "dap/scalar.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <utility>

namespace dap {

namespace {

[[noreturn]] void bad_literal(const FieldSpec& spec, std::string_view literal) {
    raise(Errc::parse_error,
          "bad " + spec.str() + " literal: '" + std::string(literal) + "'");
}

void require_same_spec(const Scalar& a, const Scalar& b) {
    if (a.spec() != b.spec()) {
        raise(Errc::field_mismatch,
              "mixed field specs: " + a.spec().str() + " vs " + b.spec().str());
    }
}

// ---- residues mod p ----

std::uint32_t mod_add(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>((a + b) % p);
}

std::uint32_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>((a * b) % p);
}

std::uint32_t mod_neg(std::uint32_t a, std::uint32_t p) {
    return a == 0 ? 0 : p - a;
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
    // extended Euclid; p prime, a in [1, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

// ---- polynomials over F_p (coefficient vectors, low degree first) ----

int poly_degree(std::span<const std::uint32_t> a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
        if (a[static_cast<std::size_t>(i)] != 0) return i;
    }
    return -1;
}

std::vector<std::uint32_t> poly_mul(std::span<const std::uint32_t> a,
                                    std::span<const std::uint32_t> b,
                                    std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = mod_add(out[i + j], mod_mul(a[i], b[j], p), p);
        }
    }
    return out;
}

// in-place remainder of a by monic-normalized divisor
void poly_mod(std::vector<std::uint32_t>& a, std::span<const std::uint32_t> divisor,
              std::uint32_t p) {
    int dd = poly_degree(divisor);
    std::uint32_t lead_inv = mod_inv(divisor[static_cast<std::size_t>(dd)], p);
    for (int i = poly_degree(a); i >= dd; i = poly_degree(a)) {
        std::uint32_t factor = mod_mul(a[static_cast<std::size_t>(i)], lead_inv, p);
        for (int j = 0; j <= dd; ++j) {
            auto idx = static_cast<std::size_t>(i - dd + j);
            a[idx] = mod_add(a[idx],
                             mod_neg(mod_mul(factor, divisor[static_cast<std::size_t>(j)], p), p),
                             p);
        }
    }
}

// inverse of a modulo the field polynomial, via extended Euclid in F_p[x]
std::vector<std::uint32_t> poly_inv(std::span<const std::uint32_t> a,
                                    std::span<const std::uint32_t> modulus,
                                    std::uint32_t p) {
    std::vector<std::uint32_t> r0(modulus.begin(), modulus.end());
    std::vector<std::uint32_t> r1(a.begin(), a.end());
    std::vector<std::uint32_t> t0{};
    std::vector<std::uint32_t> t1{1};
    while (poly_degree(r1) >= 0) {
        // divide r0 by r1
        std::vector<std::uint32_t> q(r0.size(), 0);
        std::vector<std::uint32_t> rem = r0;
        int d1 = poly_degree(r1);
        std::uint32_t lead_inv = mod_inv(r1[static_cast<std::size_t>(d1)], p);
        for (int i = poly_degree(rem); i >= d1; i = poly_degree(rem)) {
            std::uint32_t factor = mod_mul(rem[static_cast<std::size_t>(i)], lead_inv, p);
            q[static_cast<std::size_t>(i - d1)] = factor;
            for (int j = 0; j <= d1; ++j) {
                auto idx = static_cast<std::size_t>(i - d1 + j);
                rem[idx] = mod_add(
                    rem[idx], mod_neg(mod_mul(factor, r1[static_cast<std::size_t>(j)], p), p), p);
            }
        }
        // (r0, r1) <- (r1, rem); (t0, t1) <- (t1, t0 - q*t1)
        std::vector<std::uint32_t> qt = poly_mul(q, t1, p);
        std::vector<std::uint32_t> t2(std::max(t0.size(), qt.size()), 0);
        for (std::size_t i = 0; i < t2.size(); ++i) {
            std::uint32_t lhs = i < t0.size() ? t0[i] : 0;
            std::uint32_t rhs = i < qt.size() ? qt[i] : 0;
            t2[i] = mod_add(lhs, mod_neg(rhs, p), p);
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 is now gcd = nonzero constant (a is a unit mod an irreducible)
    std::uint32_t scale = mod_inv(r0[0], p);
    for (auto& c : t0) c = mod_mul(c, scale, p);
    std::vector<std::uint32_t> mod_copy(modulus.begin(), modulus.end());
    poly_mod(t0, mod_copy, p);
    return t0;
}

// ---- quaternions ----

Scalar::Quat quat_mul(const Scalar::Quat& a, const Scalar::Quat& b) {
    const Rational &aw = a.c[0], &ax = a.c[1], &ay = a.c[2], &az = a.c[3];
    const Rational &bw = b.c[0], &bx = b.c[1], &by = b.c[2], &bz = b.c[3];
    return Scalar::Quat{{
        aw * bw - ax * bx - ay * by - az * bz,
        aw * bx + ax * bw + ay * bz - az * by,
        aw * by - ax * bz + ay * bw + az * bx,
        aw * bz + ax * by - ay * bx + az * bw,
    }};
}

// ---- literal helpers ----

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

BigInt bigint_parse(std::string_view text) {
    bool negative = false;
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        negative = digits.front() == '-';
        digits.remove_prefix(1);
    }
    if (!all_digits(digits)) {
        raise(Errc::parse_error, "bad integer literal: '" + std::string(text) + "'");
    }
    BigInt value{std::string(digits)};
    return negative ? BigInt(-value) : value;
}

long long longlong_parse(std::string_view text) {
    BigInt v = bigint_parse(text);
    if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max()) {
        raise(Errc::parse_error, "integer literal out of range: '" + std::string(text) + "'");
    }
    return static_cast<long long>(v);
}

std::uint32_t residue_reduce(long long value, std::uint32_t p) {
    long long r = value % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

} // namespace

std::string rational_str(const Rational& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) {
        out += "/" + denominator(value).str();
    }
    return out;
}

Rational rational_parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(bigint_parse(text));
    }
    BigInt num = bigint_parse(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
        raise(Errc::parse_error, "bad rational literal: '" + std::string(text) + "'");
    }
    BigInt den = bigint_parse(den_text);
    if (den == 0) {
        raise(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

Scalar Scalar::zero(const FieldSpec& spec) { return integer(spec, 0); }
Scalar Scalar::one(const FieldSpec& spec) { return integer(spec, 1); }

Scalar Scalar::integer(const FieldSpec& spec, long long n) {
    switch (spec.kind()) {
        case FieldKind::rationals:
            return Scalar(spec, Rational(n));
        case FieldKind::prime:
            return Scalar(spec, residue_reduce(n, spec.prime_modulus()));
        case FieldKind::extension: {
            Poly p{};
            p.c[0] = residue_reduce(n, spec.prime_modulus());
            return Scalar(spec, p);
        }
        case FieldKind::quaternions:
            return Scalar(spec, Quat{{Rational(n), Rational(0), Rational(0), Rational(0)}});
    }
    raise(Errc::unsupported, "unknown field kind");
}

Scalar Scalar::rational(Rational value) {
    return Scalar(FieldSpec::rationals(), std::move(value));
}

Scalar Scalar::residue(const FieldSpec& spec, long long value) {
    if (spec.kind() != FieldKind::prime) {
        raise(Errc::field_mismatch, "residue() requires a prime field spec");
    }
    return Scalar(spec, residue_reduce(value, spec.prime_modulus()));
}

Scalar Scalar::poly(const FieldSpec& spec, std::span<const std::uint32_t> coeffs) {
    if (spec.kind() != FieldKind::extension) {
        raise(Errc::field_mismatch, "poly() requires an extension field spec");
    }
    if (coeffs.size() > spec.degree()) {
        raise(Errc::parse_error, "too many coefficients for " + spec.str());
    }
    Poly p{};
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        p.c[i] = coeffs[i] % spec.prime_modulus();
    }
    return Scalar(spec, p);
}

Scalar Scalar::quaternion(Rational w, Rational x, Rational y, Rational z) {
    return Scalar(FieldSpec::quaternions(),
                  Quat{{std::move(w), std::move(x), std::move(y), std::move(z)}});
}

bool Scalar::is_zero() const { return *this == zero(spec_); }
bool Scalar::is_one() const { return *this == one(spec_); }

Scalar Scalar::operator-() const {
    switch (spec_.kind()) {
        case FieldKind::rationals:
            return Scalar(spec_, Rational(-std::get<Rational>(payload_)));
        case FieldKind::prime:
            return Scalar(spec_, mod_neg(std::get<std::uint32_t>(payload_), spec_.prime_modulus()));
        case FieldKind::extension: {
            Poly out = std::get<Poly>(payload_);
            for (auto& c : out.c) c = mod_neg(c, spec_.prime_modulus());
            return Scalar(spec_, out);
        }
        case FieldKind::quaternions: {
            Quat out = std::get<Quat>(payload_);
            for (auto& c : out.c) c = -c;
            return Scalar(spec_, out);
        }
    }
    raise(Errc::unsupported, "unknown field kind");
}

Scalar Scalar::inv() const {
    if (is_zero()) raise(Errc::division_by_zero, "inverse of zero");
    switch (spec_.kind()) {
        case FieldKind::rationals: {
            const Rational& r = std::get<Rational>(payload_);
            return Scalar(spec_, Rational(1) / r);
        }
        case FieldKind::prime:
            return Scalar(spec_, mod_inv(std::get<std::uint32_t>(payload_), spec_.prime_modulus()));
        case FieldKind::extension: {
            const Poly& a = std::get<Poly>(payload_);
            std::span<const std::uint32_t> coeffs(a.c.data(), spec_.degree());
            auto r = poly_inv(coeffs, spec_.modulus(), spec_.prime_modulus());
            Poly out{};
            for (std::size_t i = 0; i < r.size() && i < out.c.size(); ++i) out.c[i] = r[i];
            return Scalar(spec_, out);
        }
        case FieldKind::quaternions: {
            const Quat& q = std::get<Quat>(payload_);
            Rational norm = q.c[0] * q.c[0] + q.c[1] * q.c[1] + q.c[2] * q.c[2] + q.c[3] * q.c[3];
            return Scalar(spec_, Quat{{q.c[0] / norm, -q.c[1] / norm, -q.c[2] / norm, -q.c[3] / norm}});
        }
    }
    raise(Errc::unsupported, "unknown field kind");
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_spec(a, b);
    const FieldSpec& spec = a.spec_;
    switch (spec.kind()) {
        case FieldKind::rationals:
            return Scalar(spec, Rational(std::get<Rational>(a.payload_) + std::get<Rational>(b.payload_)));
        case FieldKind::prime:
            return Scalar(spec, mod_add(std::get<std::uint32_t>(a.payload_),
                                        std::get<std::uint32_t>(b.payload_),
                                        spec.prime_modulus()));
        case FieldKind::extension: {
            Scalar::Poly out = std::get<Scalar::Poly>(a.payload_);
            const auto& rhs = std::get<Scalar::Poly>(b.payload_);
            for (std::size_t i = 0; i < out.c.size(); ++i) {
                out.c[i] = mod_add(out.c[i], rhs.c[i], spec.prime_modulus());
            }
            return Scalar(spec, out);
        }
        case FieldKind::quaternions: {
            Scalar::Quat out = std::get<Scalar::Quat>(a.payload_);
            const auto& rhs = std::get<Scalar::Quat>(b.payload_);
            for (std::size_t i = 0; i < 4; ++i) out.c[i] += rhs.c[i];
            return Scalar(spec, out);
        }
    }
    raise(Errc::unsupported, "unknown field kind");
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_spec(a, b);
    const FieldSpec& spec = a.spec_;
    switch (spec.kind()) {
        case FieldKind::rationals:
            return Scalar(spec, Rational(std::get<Rational>(a.payload_) * std::get<Rational>(b.payload_)));
        case FieldKind::prime:
            return Scalar(spec, mod_mul(std::get<std::uint32_t>(a.payload_),
                                        std::get<std::uint32_t>(b.payload_),
                                        spec.prime_modulus()));
        case FieldKind::extension: {
            const auto& lhs = std::get<Scalar::Poly>(a.payload_);
            const auto& rhs = std::get<Scalar::Poly>(b.payload_);
            std::span<const std::uint32_t> la(lhs.c.data(), spec.degree());
            std::span<const std::uint32_t> ra(rhs.c.data(), spec.degree());
            auto prod = poly_mul(la, ra, spec.prime_modulus());
            poly_mod(prod, spec.modulus(), spec.prime_modulus());
            Scalar::Poly out{};
            for (std::size_t i = 0; i < prod.size() && i < out.c.size(); ++i) out.c[i] = prod[i];
            return Scalar(spec, out);
        }
        case FieldKind::quaternions:
            return Scalar(spec, quat_mul(std::get<Scalar::Quat>(a.payload_),
                                         std::get<Scalar::Quat>(b.payload_)));
    }
    raise(Errc::unsupported, "unknown field kind");
}

const Rational& Scalar::rational_value() const {
    if (spec_.kind() != FieldKind::rationals) {
        raise(Errc::field_mismatch, "rational_value() on " + spec_.str());
    }
    return std::get<Rational>(payload_);
}

std::uint32_t Scalar::residue_value() const {
    if (spec_.kind() != FieldKind::prime) {
        raise(Errc::field_mismatch, "residue_value() on " + spec_.str());
    }
    return std::get<std::uint32_t>(payload_);
}

std::span<const std::uint32_t> Scalar::poly_coeffs() const {
    if (spec_.kind() != FieldKind::extension) {
        raise(Errc::field_mismatch, "poly_coeffs() on " + spec_.str());
    }
    return std::span<const std::uint32_t>(std::get<Poly>(payload_).c.data(), spec_.degree());
}

const std::array<Rational, 4>& Scalar::quaternion_parts() const {
    if (spec_.kind() != FieldKind::quaternions) {
        raise(Errc::field_mismatch, "quaternion_parts() on " + spec_.str());
    }
    return std::get<Quat>(payload_).c;
}

// ---- printing ----

std::string Scalar::str() const {
    switch (spec_.kind()) {
        case FieldKind::rationals:
            return rational_str(std::get<Rational>(payload_));
        case FieldKind::prime:
            return std::to_string(std::get<std::uint32_t>(payload_));
        case FieldKind::extension: {
            const Poly& p = std::get<Poly>(payload_);
            std::string out = "[";
            for (std::uint32_t i = 0; i < spec_.degree(); ++i) {
                if (i) out += ",";
                out += std::to_string(p.c[i]);
            }
            return out + "]";
        }
        case FieldKind::quaternions: {
            const Quat& q = std::get<Quat>(payload_);
            static constexpr const char* kUnits[4] = {"", "i", "j", "k"};
            std::string out;
            for (std::size_t idx = 0; idx < 4; ++idx) {
                const Rational& comp = q.c[idx];
                if (comp == 0) continue;
                std::string term;
                if (idx == 0) {
                    term = rational_str(comp);
                } else if (comp == 1) {
                    term = kUnits[idx];
                } else if (comp == -1) {
                    term = std::string("-") + kUnits[idx];
                } else {
                    term = rational_str(comp) + kUnits[idx];
                }
                if (!out.empty() && term.front() != '-') out += "+";
                out += term;
            }
            return out.empty() ? "0" : out;
        }
    }
    raise(Errc::unsupported, "unknown field kind");
}

// ---- parsing ----

namespace {

Scalar parse_quaternion(const FieldSpec& spec, std::string_view text) {
    if (text.empty()) bad_literal(spec, text);
    std::array<Rational, 4> comp{Rational(0), Rational(0), Rational(0), Rational(0)};
    std::size_t pos = 0;
    while (pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            if (pos == text.size()) bad_literal(spec, text);
        } else if (pos != 0) {
            bad_literal(spec, text); // terms must be joined by + or -
        }
        auto unit_index = [](char c) -> int {
            switch (c) {
                case 'i': return 1;
                case 'j': return 2;
                case 'k': return 3;
                default: return -1;
            }
        };
        int unit = unit_index(text[pos]);
        Rational coeff;
        if (unit >= 0) {
            coeff = 1;
            ++pos;
        } else {
            std::size_t start = pos;
            while (pos < text.size() && ((text[pos] >= '0' && text[pos] <= '9') || text[pos] == '/')) {
                ++pos;
            }
            if (pos == start) bad_literal(spec, text);
            coeff = rational_parse(text.substr(start, pos - start));
            if (pos < text.size()) {
                int u = unit_index(text[pos]);
                if (u >= 0) {
                    unit = u;
                    ++pos;
                }
            }
        }
        if (unit < 0) unit = 0;
        comp[static_cast<std::size_t>(unit)] += sign * coeff;
    }
    return Scalar::quaternion(comp[0], comp[1], comp[2], comp[3]);
}

Scalar parse_poly_list(const FieldSpec& spec, std::string_view text) {
    // "[c0,c1,...]"
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') bad_literal(spec, text);
    std::string_view body = text.substr(1, text.size() - 2);
    std::vector<std::uint32_t> coeffs;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string_view item =
            comma == std::string_view::npos ? body.substr(pos) : body.substr(pos, comma - pos);
        if (item.empty()) bad_literal(spec, text);
        coeffs.push_back(residue_reduce(longlong_parse(item), spec.prime_modulus()));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (coeffs.empty() || coeffs.size() > spec.degree()) bad_literal(spec, text);
    return Scalar::poly(spec, coeffs);
}

} // namespace

Scalar Scalar::parse(const FieldSpec& spec, std::string_view literal) {
    switch (spec.kind()) {
        case FieldKind::rationals:
            return Scalar::rational(rational_parse(literal));
        case FieldKind::prime:
            return Scalar::residue(spec, longlong_parse(literal));
        case FieldKind::extension:
            if (!literal.empty() && literal.front() == '[') {
                return parse_poly_list(spec, literal);
            }
            return Scalar::integer(spec, longlong_parse(literal));
        case FieldKind::quaternions:
            return parse_quaternion(spec, literal);
    }
    raise(Errc::unsupported, "unknown field kind");
}

// ---- structural algebra ----

bool commutes(const Scalar& p, const Scalar& k) {
    require_same_spec(p, k);
    return p * k == k * p;
}

bool is_central(const Scalar& a) {
    if (a.spec().commutative()) return true;
    // commutation with the algebra basis suffices, by bilinearity
    const FieldSpec& spec = a.spec();
    const Scalar i = Scalar::quaternion(0, 1, 0, 0);
    const Scalar j = Scalar::quaternion(0, 0, 1, 0);
    const Scalar k = Scalar::quaternion(0, 0, 0, 1);
    return commutes(a, Scalar::one(spec)) && commutes(a, i) && commutes(a, j) && commutes(a, k);
}

Scalar conjugate_by(const Scalar& p, const Scalar& q) {
    require_same_spec(p, q);
    if (q.is_zero()) raise(Errc::division_by_zero, "conjugation by zero");
    return q.inv() * p * q;
}

} // namespace dap
