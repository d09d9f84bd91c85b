#pragma once

/**
 * @file lgroup.hpp
 * @brief The rank-one abelian group L(p) of line-bundle twists.
 *
 * L(p) is generated by x_1..x_t subject to p_1 x_1 = ... = p_t x_t = c.
 * Every element has a unique normal form  sum_i l_i x_i + lc * c  with
 * 0 <= l_i < p_i; LElement always stores that form.
 */

#include "hwpl/error.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hwpl {

/// Weight sequence (p_1, ..., p_t), t >= 2, every p_i >= 2.
class WeightType {
public:
    WeightType() = default;
    explicit WeightType(std::vector<int> weights) : p_(std::move(weights)) {
        if (p_.size() < 2) throw PreconditionError("a weight type needs at least two weights");
        for (int p : p_)
            if (p < 2) throw PreconditionError("weights must be >= 2, got " + std::to_string(p));
    }

    /// Number of weights t.
    int size() const noexcept { return static_cast<int>(p_.size()); }
    /// p_i for 1 <= i <= t.
    int weight(int i) const {
        check_index(i);
        return p_[static_cast<std::size_t>(i - 1)];
    }
    const std::vector<int>& weights() const noexcept { return p_; }

    void check_index(int i) const {
        if (i < 1 || i > size())
            throw PreconditionError("tube index " + std::to_string(i) + " outside 1.." + std::to_string(size()));
    }

    /// Extension-bundle machinery is only available for three weights.
    void require_three(std::string_view what) const {
        if (size() != 3)
            throw UnsupportedError(std::string(what) + " requires exactly three weights, got " +
                                   std::to_string(size()));
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < p_.size(); ++i) s += (i ? "," : "") + std::to_string(p_[i]);
        return s;
    }

    /// "2,3,5".
    static WeightType parse(std::string_view text);

    friend bool operator==(const WeightType&, const WeightType&) = default;

private:
    std::vector<int> p_;
};

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }
inline std::int64_t mod(std::int64_t a, std::int64_t b) { return a - b * floor_div(a, b); }

/// Parse a signed 64-bit integer; throws ParseError with the position inside `whole`.
inline std::int64_t parse_int(std::string_view token, std::size_t offset, std::string_view what) {
    std::size_t i = 0;
    while (i < token.size() && token[i] == ' ') ++i;
    std::size_t end = token.size();
    while (end > i && token[end - 1] == ' ') --end;
    bool neg = false;
    if (i < end && (token[i] == '-' || token[i] == '+')) {
        neg = token[i] == '-';
        ++i;
    }
    if (i == end) throw ParseError(std::string(what) + ": expected an integer", offset + i);
    std::int64_t v = 0;
    for (; i < end; ++i) {
        const char ch = token[i];
        if (ch < '0' || ch > '9')
            throw ParseError(std::string(what) + ": unexpected character '" + std::string(1, ch) + "'", offset + i);
        if (v > (INT64_MAX - 9) / 10) throw ParseError(std::string(what) + ": integer too large", offset + i);
        v = v * 10 + (ch - '0');
    }
    return neg ? -v : v;
}

/// Split on a separator, remembering each piece's offset.
inline std::vector<std::pair<std::string_view, std::size_t>> split(std::string_view s, char sep) {
    std::vector<std::pair<std::string_view, std::size_t>> out;
    std::size_t start = 0;
    while (true) {
        std::size_t p = s.find(sep, start);
        if (p == std::string_view::npos) {
            out.emplace_back(s.substr(start), start);
            return out;
        }
        out.emplace_back(s.substr(start, p - start), start);
        start = p + 1;
    }
}

} // namespace detail

inline WeightType WeightType::parse(std::string_view text) {
    std::vector<int> w;
    for (auto [tok, off] : detail::split(text, ',')) {
        const auto v = detail::parse_int(tok, off, "weight type");
        if (v < 2 || v > 1000) throw ParseError("weight type: weights must lie in 2..1000", off);
        w.push_back(static_cast<int>(v));
    }
    if (w.size() < 2) throw ParseError("weight type: at least two weights required", 0);
    return WeightType(std::move(w));
}

/**
 * Element of L(p) in normal form.
 *
 * Carries its WeightType so that arithmetic between different groups is
 * rejected rather than silently mixed.
 */
class LElement {
public:
    LElement() = default;

    /// Normal form of sum_i raw_i x_i + raw_c c.
    static LElement normal_form(const WeightType& w, std::span<const std::int64_t> raw, std::int64_t raw_c) {
        if (static_cast<int>(raw.size()) != w.size())
            throw PreconditionError("expected " + std::to_string(w.size()) + " coordinates, got " +
                                    std::to_string(raw.size()));
        LElement e;
        e.w_ = w;
        e.l_.resize(raw.size());
        e.lc_ = raw_c;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            const std::int64_t p = w.weights()[i];
            e.l_[i] = detail::mod(raw[i], p);
            e.lc_ += detail::floor_div(raw[i], p);
        }
        return e;
    }
    static LElement normal_form(const WeightType& w, std::initializer_list<std::int64_t> raw, std::int64_t raw_c) {
        std::vector<std::int64_t> v(raw);
        return normal_form(w, v, raw_c);
    }

    static LElement zero(const WeightType& w) {
        return normal_form(w, std::vector<std::int64_t>(static_cast<std::size_t>(w.size()), 0), 0);
    }
    /// The canonical element c.
    static LElement c(const WeightType& w) {
        return normal_form(w, std::vector<std::int64_t>(static_cast<std::size_t>(w.size()), 0), 1);
    }
    /// The generator x_i, 1 <= i <= t.
    static LElement x(const WeightType& w, int i, std::int64_t multiple = 1) {
        w.check_index(i);
        std::vector<std::int64_t> raw(static_cast<std::size_t>(w.size()), 0);
        raw[static_cast<std::size_t>(i - 1)] = multiple;
        return normal_form(w, raw, 0);
    }
    /// The dualizing element (t-2)c - sum_i x_i.
    static LElement omega(const WeightType& w) {
        return normal_form(w, std::vector<std::int64_t>(static_cast<std::size_t>(w.size()), -1), w.size() - 2);
    }

    const WeightType& weights() const noexcept { return w_; }
    int size() const noexcept { return static_cast<int>(l_.size()); }
    /// Coefficient l_i of x_i in normal form, 1 <= i <= t.
    std::int64_t coefficient(int i) const {
        w_.check_index(i);
        return l_[static_cast<std::size_t>(i - 1)];
    }
    const std::vector<std::int64_t>& coefficients() const noexcept { return l_; }
    /// Coefficient of c in normal form.
    std::int64_t c_coefficient() const noexcept { return lc_; }

    bool is_zero() const {
        if (lc_ != 0) return false;
        for (auto v : l_)
            if (v != 0) return false;
        return true;
    }

    /// x lies in the positive cone iff its c-coefficient is nonnegative.
    bool is_effective() const noexcept { return lc_ >= 0; }

    friend LElement combine(const LElement& a, std::int64_t m, const LElement& b);

    friend LElement operator+(const LElement& a, const LElement& b) { return combine(a, 1, b); }
    friend LElement operator-(const LElement& a, const LElement& b) { return combine(a, -1, b); }
    friend LElement operator-(const LElement& a) { return combine(zero(a.w_), -1, a); }
    friend LElement operator*(std::int64_t m, const LElement& a) { return combine(zero(a.w_), m, a); }

    friend bool operator==(const LElement& a, const LElement& b) {
        return a.w_ == b.w_ && a.l_ == b.l_ && a.lc_ == b.lc_;
    }
    /// Lexicographic order on (l, lc); only meaningful for a fixed weight type.
    friend std::strong_ordering operator<=>(const LElement& a, const LElement& b) {
        if (auto cmp = a.l_ <=> b.l_; cmp != 0) return cmp;
        return a.lc_ <=> b.lc_;
    }

    /// "l1,...,lt;lc".
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < l_.size(); ++i) s += (i ? "," : "") + std::to_string(l_[i]);
        return s + ";" + std::to_string(lc_);
    }

    /// Accepts "l1,...,lt;lc" with arbitrary integers and reduces to normal form.
    /// A bare "l1,...,lt" means lc = 0.
    static LElement parse(const WeightType& w, std::string_view text) {
        std::string_view coords = text;
        std::int64_t lc = 0;
        if (auto semi = text.find(';'); semi != std::string_view::npos) {
            coords = text.substr(0, semi);
            lc = detail::parse_int(text.substr(semi + 1), semi + 1, "lattice element");
        }
        std::vector<std::int64_t> raw;
        for (auto [tok, off] : detail::split(coords, ',')) raw.push_back(detail::parse_int(tok, off, "lattice element"));
        if (static_cast<int>(raw.size()) != w.size())
            throw ParseError("lattice element: expected " + std::to_string(w.size()) + " coordinates before ';'", 0);
        return normal_form(w, raw, lc);
    }

private:
    WeightType w_;
    std::vector<std::int64_t> l_;
    std::int64_t lc_ = 0;
};

/// Normal form of a + m*b.
inline LElement combine(const LElement& a, std::int64_t m, const LElement& b) {
    if (!(a.w_ == b.w_)) throw PreconditionError("lattice elements over different weight types");
    std::vector<std::int64_t> raw(a.l_.size());
    for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = a.l_[i] + m * b.l_[i];
    return LElement::normal_form(a.w_, raw, a.lc_ + m * b.lc_);
}

/// x <= y in the partial order induced by the positive cone.
inline bool leq(const LElement& x, const LElement& y) { return (y - x).is_effective(); }

} // namespace hwpl
