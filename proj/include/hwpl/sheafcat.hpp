#pragma once

// Line bundles O(x), their Hom/Ext dimensions, K0 and the Euler form.

#include "hwpl/error.hpp"
#include "hwpl/lgroup.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hwpl {

struct HomExt {
    std::int64_t hom = 0;
    std::int64_t ext = 0;
    friend bool operator==(const HomExt&, const HomExt&) = default;
};

/// dim Hom(O(x), O(y)) = max(0, lc(y - x) + 1).
inline std::int64_t line_hom_dim(const LElement& x, const LElement& y) {
    const auto lc = (y - x).c_coefficient();
    return lc >= 0 ? lc + 1 : 0;
}

/// Hom and Ext^1 from O(x) to O(y); Ext^1(O(x), O(y)) is dual to Hom(O(y), O(x + omega)).
inline HomExt line_hom_ext_dims(const LElement& x, const LElement& y) {
    const auto w = LElement::omega(x.weights());
    return {line_hom_dim(x, y), line_hom_dim(y, x + w)};
}

/**
 * Integer vector over the basis [O(x)], 0 <= x <= c.
 *
 * Basis order: [O], then [O(l x_i)] for i = 1..t and l = 1..p_i-1, then [O(c)].
 */
class K0Class {
public:
    K0Class() = default;
    explicit K0Class(WeightType w) : w_(std::move(w)), v_(static_cast<std::size_t>(basis_size(w_)), 0) {}

    static int basis_size(const WeightType& w) {
        int n = 2;
        for (int p : w.weights()) n += p - 1;
        return n;
    }

    /// Index of [O(l x_i)] for 0 <= l <= p_i; l = 0 gives [O] and l = p_i gives [O(c)].
    static int basis_index(const WeightType& w, int i, std::int64_t l) {
        w.check_index(i);
        const int p = w.weight(i);
        if (l < 0 || l > p) throw PreconditionError("basis twist out of range");
        if (l == 0) return 0;
        if (l == p) return basis_size(w) - 1;
        int idx = 1;
        for (int k = 1; k < i; ++k) idx += w.weight(k) - 1;
        return idx + static_cast<int>(l) - 1;
    }

    /// The twist x with basis vector `index` equal to [O(x)].
    static LElement basis_twist(const WeightType& w, int index) {
        const int n = basis_size(w);
        if (index < 0 || index >= n) throw PreconditionError("basis index out of range");
        if (index == 0) return LElement::zero(w);
        if (index == n - 1) return LElement::c(w);
        int idx = index - 1;
        for (int i = 1; i <= w.size(); ++i) {
            if (idx < w.weight(i) - 1) return LElement::x(w, i, idx + 1);
            idx -= w.weight(i) - 1;
        }
        throw InconsistencyError("basis index bookkeeping");
    }

    static K0Class unit(const WeightType& w, int index) {
        K0Class k(w);
        k.v_.at(static_cast<std::size_t>(index)) = 1;
        return k;
    }

    const WeightType& weights() const noexcept { return w_; }
    int size() const noexcept { return static_cast<int>(v_.size()); }
    std::int64_t operator[](int index) const { return v_.at(static_cast<std::size_t>(index)); }
    const std::vector<std::int64_t>& coords() const noexcept { return v_; }

    bool is_zero() const {
        for (auto c : v_)
            if (c != 0) return false;
        return true;
    }

    K0Class& operator+=(const K0Class& o) { return axpy(1, o); }
    K0Class& operator-=(const K0Class& o) { return axpy(-1, o); }
    K0Class& axpy(std::int64_t m, const K0Class& o) {
        if (!(w_ == o.w_)) throw PreconditionError("K0 classes over different weight types");
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += m * o.v_[i];
        return *this;
    }
    friend K0Class operator+(K0Class a, const K0Class& b) { return a += b; }
    friend K0Class operator-(K0Class a, const K0Class& b) { return a -= b; }
    friend K0Class operator*(std::int64_t m, const K0Class& a) {
        K0Class r(a.w_);
        return r.axpy(m, a);
    }
    friend bool operator==(const K0Class& a, const K0Class& b) { return a.w_ == b.w_ && a.v_ == b.v_; }

    static std::string basis_name(const WeightType& w, int index) {
        if (index == 0) return "[O]";
        if (index == basis_size(w) - 1) return "[O(c)]";
        const auto x = basis_twist(w, index);
        for (int i = 1; i <= w.size(); ++i) {
            const auto l = x.coefficient(i);
            if (l != 0) return "[O(" + (l == 1 ? std::string() : std::to_string(l)) + "x" + std::to_string(i) + ")]";
        }
        return "[?]";
    }

    /// "[O(x1)] + [O(x2)] + [O(c)] - 2*[O]" style, basis order, zero terms omitted.
    std::string to_string() const {
        std::string s;
        for (int i = 0; i < size(); ++i) {
            const auto c = v_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            const auto mag = c < 0 ? -c : c;
            if (s.empty()) s += c < 0 ? "-" : "";
            else s += c < 0 ? " - " : " + ";
            if (mag != 1) s += std::to_string(mag) + "*";
            s += basis_name(w_, i);
        }
        return s.empty() ? "0" : s;
    }

private:
    WeightType w_;
    std::vector<std::int64_t> v_;
};

/// [O(x)] = sum_i [O(l_i x_i)] + lc [O(c)] - (lc + t - 1) [O] for x in normal form.
inline K0Class k0_class_line(const LElement& x) {
    const auto& w = x.weights();
    K0Class k(w);
    K0Class o = K0Class::unit(w, 0);
    for (int i = 1; i <= w.size(); ++i) {
        const auto l = x.coefficient(i);
        k += K0Class::unit(w, K0Class::basis_index(w, i, l));
    }
    k.axpy(x.c_coefficient(), K0Class::unit(w, K0Class::basis_size(w) - 1));
    k.axpy(-(x.c_coefficient() + w.size() - 1), o);
    return k;
}

/// delta = [O(c)] - [O].
inline K0Class delta(const WeightType& w) {
    return K0Class::unit(w, K0Class::basis_size(w) - 1) - K0Class::unit(w, 0);
}

/// Gram matrix of the Euler form on the [O(x)] basis.
inline std::vector<std::vector<std::int64_t>> euler_matrix(const WeightType& w) {
    const int n = K0Class::basis_size(w);
    std::vector<LElement> twists;
    for (int i = 0; i < n; ++i) twists.push_back(K0Class::basis_twist(w, i));
    std::vector<std::vector<std::int64_t>> g(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const auto he = line_hom_ext_dims(twists[static_cast<std::size_t>(a)], twists[static_cast<std::size_t>(b)]);
            g[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = he.hom - he.ext;
        }
    return g;
}

/// <a, b> = dim Hom - dim Ext^1, extended bilinearly.
inline std::int64_t euler_form(const K0Class& a, const K0Class& b) {
    if (!(a.weights() == b.weights())) throw PreconditionError("K0 classes over different weight types");
    const auto g = euler_matrix(a.weights());
    std::int64_t s = 0;
    for (int i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < b.size(); ++j) s += a[i] * g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * b[j];
    }
    return s;
}

/// (a, b) = <a, b> + <b, a>.
inline std::int64_t symmetric_form(const K0Class& a, const K0Class& b) { return euler_form(a, b) + euler_form(b, a); }

} // namespace hwpl
