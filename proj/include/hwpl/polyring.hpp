#pragma once

/**
 * @file polyring.hpp
 * @brief Exact Laurent polynomials and rational functions in one variable q.
 *
 * Every Hall number computed by the library is a LaurentPoly over the
 * arbitrary-precision integers; a few conventional values (for instance
 * 1/(q-1)) need the field of fractions, which is RationalFn.
 */

#include "hwpl/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hwpl {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/**
 * Sparse Laurent polynomial with integer coefficients.
 *
 * Invariant: no stored coefficient is zero, so the zero polynomial is the
 * empty map and equality is map equality.
 */
class LaurentPoly {
public:
    using coeff_map = std::map<int, Integer>;

    LaurentPoly() = default;
    LaurentPoly(int constant) : LaurentPoly(Integer(constant)) {}          // NOLINT
    LaurentPoly(long long constant) : LaurentPoly(Integer(constant)) {}    // NOLINT
    LaurentPoly(const Integer& constant) {                                 // NOLINT
        if (constant != 0) terms_.emplace(0, constant);
    }

    /// Build from (exponent, coefficient) pairs; repeated exponents accumulate.
    static LaurentPoly from_terms(const std::vector<std::pair<int, Integer>>& terms) {
        LaurentPoly p;
        for (const auto& [e, c] : terms) p.add_term(e, c);
        return p;
    }

    static LaurentPoly monomial(const Integer& coeff, int exponent) {
        LaurentPoly p;
        p.add_term(exponent, coeff);
        return p;
    }

    /// The variable q itself.
    static LaurentPoly q() { return monomial(1, 1); }

    /// q^e.
    static LaurentPoly q_pow(int e) { return monomial(1, e); }

    const coeff_map& coeffs() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    /// Largest exponent with a nonzero coefficient. Requires a nonzero polynomial.
    int max_exponent() const {
        if (is_zero()) throw PreconditionError("max_exponent of the zero polynomial");
        return terms_.rbegin()->first;
    }
    int min_exponent() const {
        if (is_zero()) throw PreconditionError("min_exponent of the zero polynomial");
        return terms_.begin()->first;
    }

    Integer coeff(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Integer(0) : it->second;
    }
    Integer leading_coeff() const { return is_zero() ? Integer(0) : terms_.rbegin()->second; }

    /// True when the polynomial is ±q^k (a unit of the Laurent ring).
    bool is_unit() const { return terms_.size() == 1 && abs(terms_.begin()->second) == 1; }

    LaurentPoly& add_term(int exponent, const Integer& c) {
        if (c == 0) return *this;
        auto [it, inserted] = terms_.try_emplace(exponent, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    /// Multiply by q^k.
    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
        return r;
    }

    LaurentPoly pow(unsigned n) const {
        LaurentPoly result(1), base = *this;
        while (n) {
            if (n & 1U) result *= base;
            base *= base;
            n >>= 1U;
        }
        return result;
    }

    /// gcd of the coefficients (0 for the zero polynomial).
    Integer content() const {
        Integer g = 0;
        for (const auto& [e, c] : terms_) g = gcd(g, abs(c));
        return g;
    }

    /// Exact evaluation at a rational point. Negative exponents need q != 0.
    Rational eval(const Rational& at) const {
        if (is_zero()) return Rational(0);
        if (at == 0 && min_exponent() < 0) throw PreconditionError("pole at q = 0");
        Rational sum = 0;
        for (const auto& [e, c] : terms_) {
            Rational power = 1;
            Rational base = e >= 0 ? at : Rational(1) / at;
            for (int i = 0, n = e >= 0 ? e : -e; i < n; ++i) power *= base;
            sum += Rational(c) * power;
        }
        return sum;
    }
    Rational eval(long long at) const { return eval(Rational(at)); }

    /// Descending exponents, e.g. "q^2 - 3*q + 3"; the zero polynomial is "0".
    std::string to_string() const;

    /// Parse the textual grammar `c*q^e`, `c*q`, `c`, `q^e`, `q` joined by + / -.
    static LaurentPoly parse(std::string_view text);

private:
    coeff_map terms_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

inline std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const int e = it->first;
        Integer c = it->second;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        c = abs(c);
        if (e == 0) {
            out += c.str();
            continue;
        }
        if (c != 1) out += c.str() + "*";
        out += "q";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

namespace detail {

class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    LaurentPoly parse_all() {
        LaurentPoly p = parse_sum();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

    LaurentPoly parse_sum() {
        LaurentPoly result;
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (true) {
            skip_ws();
            int sign = 1;
            if (!at_end() && (peek() == '+' || peek() == '-')) {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                break;
            }
            first = false;
            auto [e, c] = parse_term();
            result.add_term(e, sign * c);
            skip_ws();
            if (at_end() || (peek() != '+' && peek() != '-')) break;
        }
        return result;
    }

    std::size_t position() const { return pos_; }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    void expect(char ch) {
        skip_ws();
        if (at_end() || peek() != ch) fail(std::string("expected '") + ch + "'");
        ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError("polynomial: " + msg, pos_); }

private:
    std::pair<int, Integer> parse_term() {
        skip_ws();
        if (at_end()) fail("missing term");
        Integer coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_unsigned();
            skip_ws();
            if (at_end() || peek() != '*') {
                if (!at_end() && peek() == 'q') fail("missing '*' between coefficient and q");
                return {0, coeff};
            }
            ++pos_;
            skip_ws();
        }
        if (at_end() || peek() != 'q') fail("expected 'q' or an integer");
        ++pos_;
        skip_ws();
        int exponent = 1;
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            int sign = 1;
            if (!at_end() && (peek() == '-' || peek() == '+')) {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            }
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
            Integer e = parse_unsigned();
            if (e > 1000000) fail("exponent out of range");
            exponent = sign * static_cast<int>(e);
        }
        return {exponent, coeff};
    }

    Integer parse_unsigned() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

/// Dense integer polynomial helpers (ascending coefficients, no trailing zeros).
using Dense = std::vector<Integer>;

inline void trim(Dense& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Dense to_dense(const LaurentPoly& p, int shift) {
    Dense d;
    for (const auto& [e, c] : p.coeffs()) {
        const auto idx = static_cast<std::size_t>(e - shift);
        if (d.size() <= idx) d.resize(idx + 1, 0);
        d[idx] = c;
    }
    return d;
}

inline LaurentPoly from_dense(const Dense& d, int shift) {
    LaurentPoly p;
    for (std::size_t i = 0; i < d.size(); ++i) p.add_term(static_cast<int>(i) + shift, d[i]);
    return p;
}

inline Integer dense_content(const Dense& a) {
    Integer g = 0;
    for (const auto& c : a) g = gcd(g, abs(c));
    return g;
}

inline Dense primitive_part(Dense a) {
    trim(a);
    if (a.empty()) return a;
    Integer g = dense_content(a);
    if (a.back() < 0) g = -g;
    for (auto& c : a) c /= g;
    return a;
}

/// Pseudo-remainder of a by b (b nonzero).
inline Dense pseudo_remainder(Dense a, const Dense& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const Integer& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        const Integer la = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (auto& c : a) c *= lb;
        for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
        trim(a);
    }
    return a;
}

/// Primitive gcd of two integer polynomials, positive leading coefficient.
inline Dense dense_gcd(Dense a, Dense b) {
    a = primitive_part(std::move(a));
    b = primitive_part(std::move(b));
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        Dense r = primitive_part(pseudo_remainder(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Exact quotient a / b over Q; returns nullopt when the remainder is nonzero.
inline std::optional<std::vector<Rational>> dense_divide(const Dense& a, const Dense& b) {
    std::vector<Rational> rem(a.begin(), a.end());
    if (a.size() < b.size()) {
        for (const auto& c : rem)
            if (c != 0) return std::nullopt;
        return std::vector<Rational>{};
    }
    std::vector<Rational> quot(a.size() - b.size() + 1, Rational(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational factor = rem[k + b.size() - 1] / Rational(b.back());
        quot[k] = factor;
        if (factor == 0) continue;
        for (std::size_t i = 0; i < b.size(); ++i) rem[k + i] -= factor * Rational(b[i]);
    }
    for (const auto& c : rem)
        if (c != 0) return std::nullopt;
    return quot;
}

} // namespace detail

inline LaurentPoly LaurentPoly::parse(std::string_view text) { return detail::PolyParser(text).parse_all(); }

/// Exact quotient in the Laurent ring Z[q, q^-1]; nullopt when b does not divide a.
inline std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
    if (a.is_zero()) return LaurentPoly{};
    const int sa = a.min_exponent(), sb = b.min_exponent();
    auto quot = detail::dense_divide(detail::to_dense(a, sa), detail::to_dense(b, sb));
    if (!quot) return std::nullopt;
    LaurentPoly r;
    for (std::size_t i = 0; i < quot->size(); ++i) {
        const Rational& c = (*quot)[i];
        if (denominator(c) != 1) return std::nullopt;
        r.add_term(static_cast<int>(i) + sa - sb, numerator(c));
    }
    return r;
}

/**
 * Quotient of two Laurent polynomials in canonical form.
 *
 * Canonical form: numerator and denominator coprime in Z[q, q^-1], the
 * denominator is an ordinary polynomial with nonzero constant term and
 * positive leading coefficient, and the combined integer content is 1.
 */
class RationalFn {
public:
    RationalFn() : den_(1) {}
    RationalFn(const LaurentPoly& p) : num_(p), den_(1) {}          // NOLINT
    RationalFn(int c) : RationalFn(LaurentPoly(c)) {}                  // NOLINT
    RationalFn(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const LaurentPoly& numerator() const noexcept { return num_; }
    const LaurentPoly& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == LaurentPoly(1); }

    /// The Laurent polynomial this value equals, if any.
    std::optional<LaurentPoly> as_polynomial() const {
        if (is_polynomial()) return num_;
        return std::nullopt;
    }

    friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFn operator-(const RationalFn& a) { return {-a.num_, a.den_}; }
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
        if (b.is_zero()) throw PreconditionError("division by the zero rational function");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    Rational eval(const Rational& at) const {
        Rational d = den_.eval(at);
        if (d == 0) throw PreconditionError("pole at q = " + at.str());
        return num_.eval(at) / d;
    }
    Rational eval(long long at) const { return eval(Rational(at)); }

    /// "p" for polynomial values, otherwise "(p)/(r)" with parentheses
    /// dropped around single terms.
    std::string to_string() const {
        if (is_polynomial()) return num_.to_string();
        auto wrap = [](const LaurentPoly& p) {
            return p.term_count() <= 1 && p.coeff(p.is_zero() ? 0 : p.max_exponent()) >= 0
                       ? p.to_string()
                       : "(" + p.to_string() + ")";
        };
        return wrap(num_) + "/" + wrap(den_);
    }

    /// Accepts the polynomial grammar, optionally as "A/B" with parenthesised parts.
    static RationalFn parse(std::string_view text);

private:
    void normalize() {
        if (den_.is_zero()) throw PreconditionError("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = LaurentPoly(1);
            return;
        }
        // q is a unit: move all powers of q into the numerator.
        const int sn = num_.min_exponent(), sd = den_.min_exponent();
        detail::Dense n = detail::to_dense(num_, sn), d = detail::to_dense(den_, sd);
        const detail::Dense g = detail::dense_gcd(n, d);
        if (g.size() > 1) {
            auto nq = detail::dense_divide(n, g), dq = detail::dense_divide(d, g);
            n.assign(nq->size(), 0);
            d.assign(dq->size(), 0);
            for (std::size_t i = 0; i < nq->size(); ++i) n[i] = boost::multiprecision::numerator((*nq)[i]);
            for (std::size_t i = 0; i < dq->size(); ++i) d[i] = boost::multiprecision::numerator((*dq)[i]);
        }
        detail::trim(n);
        detail::trim(d);
        Integer c = gcd(detail::dense_content(n), detail::dense_content(d));
        if (d.back() < 0) c = -c;
        for (auto& x : n) x /= c;
        for (auto& x : d) x /= c;
        num_ = detail::from_dense(n, sn - sd);
        den_ = detail::from_dense(d, 0);
    }

    LaurentPoly num_;
    LaurentPoly den_;
};

inline std::ostream& operator<<(std::ostream& os, const RationalFn& r) { return os << r.to_string(); }

inline RationalFn RationalFn::parse(std::string_view text) {
    detail::PolyParser parser(text);
    auto part = [&parser]() {
        parser.skip_ws();
        if (!parser.at_end() && parser.peek() == '(') {
            parser.expect('(');
            LaurentPoly p = parser.parse_sum();
            parser.expect(')');
            return p;
        }
        return parser.parse_sum();
    };
    LaurentPoly num = part();
    parser.skip_ws();
    LaurentPoly den(1);
    if (!parser.at_end() && parser.peek() == '/') {
        parser.expect('/');
        den = part();
        if (den.is_zero()) parser.fail("zero denominator");
    }
    parser.skip_ws();
    if (!parser.at_end()) parser.fail("unexpected trailing input");
    return {num, den};
}

/// a / b in the fraction field.
inline RationalFn divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
    return {a, b};
}

} // namespace hwpl
