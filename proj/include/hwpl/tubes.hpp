#pragma once

// Torsion sheaves: indecomposables in exceptional and homogeneous tubes.

#include "hwpl/error.hpp"
#include "hwpl/lgroup.hpp"
#include "hwpl/polyring.hpp"
#include "hwpl/sheafcat.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace hwpl {

/// Hom/Ext data between two objects a and b of one tube.
struct TubeDims {
    std::int64_t hom = 0;     ///< dim Hom(a, b)
    std::int64_t ext_ba = 0;  ///< dim Ext^1(b, a)
    std::int64_t ext_ab = 0;  ///< dim Ext^1(a, b)
    std::int64_t euler = 0;   ///< <a, b>
    friend bool operator==(const TubeDims&, const TubeDims&) = default;
};

namespace detail {

/// dim Hom(S_j^(n), S_k^(m)) and dim Ext^1(S_k^(m), S_j^(n)) in a tube of rank p.
inline std::pair<std::int64_t, std::int64_t> tube_hom_ext1(std::int64_t p, std::int64_t j, std::int64_t n,
                                                            std::int64_t k, std::int64_t m) {
    if (n >= m)
        return {ceil_div(m - k + j, p) + floor_div(k - j, p), floor_div(m - k + j, p) + ceil_div(k - j, p)};
    return {ceil_div(m - k + j, p) + floor_div(n - m + k - j, p),
            floor_div(m - k + j, p) + ceil_div(n - m + k - j, p)};
}

} // namespace detail

/// Hom/Ext dimensions between S_j^(n) and S_k^(m) in a tube of rank p >= 1.
inline TubeDims tube_hom_ext_dims(std::int64_t p, std::int64_t j, std::int64_t n, std::int64_t k, std::int64_t m) {
    if (p < 1) throw PreconditionError("tube rank must be >= 1");
    if (n < 1 || m < 1) throw PreconditionError("tube lengths must be >= 1");
    const auto [hom, ext_ba] = detail::tube_hom_ext1(p, j, n, k, m);
    const auto ext_ab = detail::tube_hom_ext1(p, k, m, j, n).second;
    return {hom, ext_ba, ext_ab, hom - ext_ab};
}

/// Homogeneous tube over a point of degree d.
inline TubeDims homogeneous_hom_ext_dims(std::int64_t d, std::int64_t n, std::int64_t m) {
    if (d < 1) throw PreconditionError("point degree must be >= 1");
    if (n < 1 || m < 1) throw PreconditionError("tube lengths must be >= 1");
    const auto v = d * std::min(n, m);
    return {v, v, v, 0};
}

/**
 * Indecomposable torsion sheaf.
 *
 * Exceptional: S_{i,j}^{(n)} in tube i of rank p, top S_{i,j}, j reduced mod p.
 * Homogeneous: S_z^{(n)} at a point z of degree d; points are opaque labels.
 */
class TubeIndec {
public:
    enum class Kind { Exceptional, Homogeneous };

    static TubeIndec exceptional(const WeightType& w, int i, std::int64_t j, std::int64_t n) {
        w.check_index(i);
        return exceptional_in_rank(i, w.weight(i), j, n);
    }
    static TubeIndec exceptional_in_rank(int i, int p, std::int64_t j, std::int64_t n) {
        if (n < 1) throw PreconditionError("torsion length must be >= 1, got " + std::to_string(n));
        TubeIndec s;
        s.kind_ = Kind::Exceptional;
        s.i_ = i;
        s.p_ = p;
        s.j_ = detail::mod(j, p);
        s.n_ = n;
        return s;
    }
    static TubeIndec homogeneous(std::int64_t d, std::int64_t n, std::string label = {}) {
        if (d < 1) throw PreconditionError("point degree must be >= 1, got " + std::to_string(d));
        if (n < 1) throw PreconditionError("torsion length must be >= 1, got " + std::to_string(n));
        TubeIndec s;
        s.kind_ = Kind::Homogeneous;
        s.d_ = d;
        s.n_ = n;
        s.label_ = std::move(label);
        return s;
    }

    Kind kind() const noexcept { return kind_; }
    bool is_exceptional() const noexcept { return kind_ == Kind::Exceptional; }
    int tube() const noexcept { return i_; }
    int rank() const noexcept { return is_exceptional() ? p_ : 1; }
    std::int64_t top_index() const noexcept { return j_; }
    std::int64_t length() const noexcept { return n_; }
    std::int64_t degree() const noexcept { return d_; }
    const std::string& label() const noexcept { return label_; }

    /// Identifies the tube: ("E", i) or ("H", d, label).
    std::tuple<int, std::int64_t, std::string> tube_key() const {
        return is_exceptional() ? std::tuple<int, std::int64_t, std::string>{0, i_, {}}
                                : std::tuple<int, std::int64_t, std::string>{1, d_, label_};
    }
    bool same_tube(const TubeIndec& o) const { return tube_key() == o.tube_key(); }

    /// tau S_{i,j}^{(n)} = S_{i,j-1}^{(n)}; homogeneous tubes are tau-stable.
    TubeIndec tau() const {
        if (!is_exceptional()) return *this;
        return exceptional_in_rank(i_, p_, j_ - 1, n_);
    }
    TubeIndec top() const {
        if (!is_exceptional()) return homogeneous(d_, 1, label_);
        return exceptional_in_rank(i_, p_, j_, 1);
    }
    /// Unique subobject of length l, 1 <= l <= n.
    TubeIndec submodule(std::int64_t l) const {
        if (l < 1 || l > n_) throw PreconditionError("submodule length outside 1..n");
        if (!is_exceptional()) return homogeneous(d_, l, label_);
        return exceptional_in_rank(i_, p_, j_ - (n_ - l), l);
    }
    /// Quotient by the unique subobject of length l, 0 <= l < n.
    TubeIndec quotient(std::int64_t l) const {
        if (l < 0 || l >= n_) throw PreconditionError("quotient length outside 0..n-1");
        if (!is_exceptional()) return homogeneous(d_, n_ - l, label_);
        return exceptional_in_rank(i_, p_, j_, n_ - l);
    }
    /// All subobjects from length 1 to n.
    std::vector<TubeIndec> submodule_chain() const {
        std::vector<TubeIndec> out;
        for (std::int64_t l = 1; l <= n_; ++l) out.push_back(submodule(l));
        return out;
    }

    std::string to_string() const {
        if (is_exceptional())
            return "E:" + std::to_string(i_) + "," + std::to_string(j_) + "," + std::to_string(n_);
        return "H:" + std::to_string(d_) + "," + std::to_string(n_) + (label_.empty() ? "" : ":" + label_);
    }

    /// "E:i,j,n" or "H:d,n[:label]".
    static TubeIndec parse(const WeightType& w, std::string_view text, std::size_t offset = 0);

    friend bool operator==(const TubeIndec& a, const TubeIndec& b) {
        return a.kind_ == b.kind_ && a.i_ == b.i_ && a.p_ == b.p_ && a.j_ == b.j_ && a.n_ == b.n_ && a.d_ == b.d_ &&
               a.label_ == b.label_;
    }
    friend bool operator<(const TubeIndec& a, const TubeIndec& b) {
        return std::tie(a.kind_, a.i_, a.d_, a.label_, a.j_, a.n_) < std::tie(b.kind_, b.i_, b.d_, b.label_, b.j_, b.n_);
    }

private:
    Kind kind_ = Kind::Exceptional;
    int i_ = 0;
    int p_ = 1;
    std::int64_t j_ = 0;
    std::int64_t n_ = 1;
    std::int64_t d_ = 0;
    std::string label_;
};

inline TubeIndec TubeIndec::parse(const WeightType& w, std::string_view text, std::size_t offset) {
    std::size_t b = 0;
    while (b < text.size() && text[b] == ' ') ++b;
    if (text.size() < b + 2 || text[b + 1] != ':' || (text[b] != 'E' && text[b] != 'H'))
        throw ParseError("torsion summand: expected 'E:i,j,n' or 'H:d,n[:label]'", offset + b);
    const char kind = text[b];
    std::string_view body = text.substr(b + 2);
    const std::size_t base = offset + b + 2;
    std::string label;
    if (kind == 'H') {
        if (auto colon = body.find(':'); colon != std::string_view::npos) {
            label = std::string(body.substr(colon + 1));
            while (!label.empty() && label.back() == ' ') label.pop_back();
            if (label.empty()) throw ParseError("torsion summand: empty point label", base + colon + 1);
            body = body.substr(0, colon);
        }
    }
    const auto parts = detail::split(body, ',');
    std::vector<std::int64_t> v;
    for (auto [tok, off] : parts) v.push_back(detail::parse_int(tok, base + off, "torsion summand"));
    if (kind == 'E') {
        if (v.size() != 3) throw ParseError("torsion summand: 'E:' needs three integers i,j,n", base);
        if (v[0] < 1 || v[0] > w.size()) throw ParseError("torsion summand: tube index out of range", base);
        if (v[2] < 1) throw ParseError("torsion summand: length must be >= 1", base);
        return exceptional(w, static_cast<int>(v[0]), v[1], v[2]);
    }
    if (v.size() != 2) throw ParseError("torsion summand: 'H:' needs two integers d,n", base);
    if (v[0] < 1 || v[1] < 1) throw ParseError("torsion summand: degree and length must be >= 1", base);
    return homogeneous(v[0], v[1], std::move(label));
}

/// Hom/Ext data between indecomposables; zero when they lie in different tubes.
inline TubeDims torsion_hom_ext_dims(const TubeIndec& a, const TubeIndec& b) {
    if (!a.same_tube(b)) return {};
    if (a.is_exceptional()) return tube_hom_ext_dims(a.rank(), a.top_index(), a.length(), b.top_index(), b.length());
    return homogeneous_hom_ext_dims(a.degree(), a.length(), b.length());
}

/// Finite direct sum of tube indecomposables.
class TorsionSheaf {
public:
    TorsionSheaf() = default;
    explicit TorsionSheaf(std::vector<TubeIndec> summands) : s_(std::move(summands)) {
        std::sort(s_.begin(), s_.end());
    }
    TorsionSheaf(const TubeIndec& s) : s_{s} {} // NOLINT

    const std::vector<TubeIndec>& summands() const noexcept { return s_; }
    bool is_zero() const noexcept { return s_.empty(); }

    bool distinct_tubes() const {
        for (std::size_t a = 0; a < s_.size(); ++a)
            for (std::size_t b = a + 1; b < s_.size(); ++b)
                if (s_[a].same_tube(s_[b])) return false;
        return true;
    }
    void require_distinct_tubes(std::string_view what) const {
        if (!distinct_tubes())
            throw UnsupportedError(std::string(what) + ": summands must lie in pairwise distinct tubes");
    }

    std::string to_string() const {
        if (s_.empty()) return "0";
        std::string out;
        for (std::size_t a = 0; a < s_.size(); ++a) out += (a ? "+" : "") + s_[a].to_string();
        return out;
    }

    /// '+'-joined summands; "0" is the zero sheaf.
    static TorsionSheaf parse(const WeightType& w, std::string_view text) {
        std::size_t b = 0;
        while (b < text.size() && text[b] == ' ') ++b;
        if (text.substr(b) == "0") return {};
        std::vector<TubeIndec> v;
        for (auto [tok, off] : detail::split(text, '+')) v.push_back(TubeIndec::parse(w, tok, off));
        return TorsionSheaf(std::move(v));
    }

    friend bool operator==(const TorsionSheaf&, const TorsionSheaf&) = default;

private:
    std::vector<TubeIndec> s_;
};

/// [S_{i,j}^{(n)}] = [O(j x_i)] - [O((j - n) x_i)], [S_z^{(n)}] = d n delta.
inline K0Class k0_class_torsion(const WeightType& w, const TubeIndec& s) {
    if (!s.is_exceptional()) return (s.degree() * s.length()) * delta(w);
    if (s.tube() < 1 || s.tube() > w.size() || w.weight(s.tube()) != s.rank())
        throw PreconditionError("exceptional summand " + s.to_string() + " does not fit weight type " + w.to_string());
    return k0_class_line(LElement::x(w, s.tube(), s.top_index())) -
           k0_class_line(LElement::x(w, s.tube(), s.top_index() - s.length()));
}
inline K0Class k0_class_torsion(const WeightType& w, const TorsionSheaf& t) {
    K0Class k(w);
    for (const auto& s : t.summands()) k += k0_class_torsion(w, s);
    return k;
}

/// |Aut| of an indecomposable as a polynomial in q.
inline LaurentPoly aut_count(const TubeIndec& s) {
    const auto q = LaurentPoly::q();
    if (s.is_exceptional())
        return (q - 1) * LaurentPoly::q_pow(static_cast<int>(detail::ceil_div(s.length(), s.rank()) - 1));
    const int d = static_cast<int>(s.degree());
    return (LaurentPoly::q_pow(d) - 1) * LaurentPoly::q_pow(d * static_cast<int>(s.length() - 1));
}
/// |Aut| of a sum over pairwise distinct tubes.
inline LaurentPoly aut_count(const TorsionSheaf& t) {
    t.require_distinct_tubes("aut_count");
    LaurentPoly r(1);
    for (const auto& s : t.summands()) r *= aut_count(s);
    return r;
}

/// Hom(O(v), s) and Ext^1(s, O(v)).
inline HomExt line_torsion_hom_dims(const LElement& v, const TubeIndec& s) {
    if (!s.is_exceptional()) return {s.degree() * s.length(), s.degree() * s.length()};
    const auto vi = v.coefficient(s.tube());
    const auto p = s.rank();
    const auto hom = tube_hom_ext_dims(p, vi, s.length(), s.top_index(), s.length()).hom;
    const auto t = s.tau();
    const auto ext = tube_hom_ext_dims(p, vi, t.length(), t.top_index(), t.length()).hom;
    return {hom, ext};
}

/// tau, top and the chain of subobjects of one indecomposable.
struct TauTop {
    TubeIndec tau;
    TubeIndec top;
    std::vector<TubeIndec> submodules;
};
inline TauTop tau_top(const TubeIndec& s) { return {s.tau(), s.top(), s.submodule_chain()}; }

} // namespace hwpl
