#pragma once

// Rank-two extension bundles E_L<x> for three weights.

#include "hwpl/error.hpp"
#include "hwpl/lgroup.hpp"
#include "hwpl/sheafcat.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hwpl {

/**
 * E_L<x>: middle term of the nonsplit sequence 0 -> L(omega) -> E -> L(x) -> 0,
 * with L = O(base) and 0 <= x <= sum_i (p_i - 2) x_i.
 */
class ExtensionBundle {
public:
    ExtensionBundle(LElement base, LElement offset) : base_(std::move(base)), offset_(std::move(offset)) {
        const auto& w = base_.weights();
        w.require_three("extension bundle");
        if (!(offset_.weights() == w)) throw PreconditionError("base and offset over different weight types");
        if (offset_.c_coefficient() != 0)
            throw PreconditionError("offset " + offset_.to_string() + " violates 0 <= x: its c-coefficient must be 0");
        for (int i = 1; i <= 3; ++i)
            if (offset_.coefficient(i) > w.weight(i) - 2)
                throw PreconditionError("offset " + offset_.to_string() + " violates x <= sum (p_i - 2) x_i at i = " +
                                        std::to_string(i) + " (l_" + std::to_string(i) +
                                        " <= " + std::to_string(w.weight(i) - 2) + ")");
    }

    const WeightType& weights() const noexcept { return base_.weights(); }
    const LElement& base() const noexcept { return base_; }
    const LElement& offset() const noexcept { return offset_; }

    /// Twist of the subbundle L(omega).
    LElement sub_twist() const { return base_ + LElement::omega(weights()); }
    /// Twist of the quotient L(x).
    LElement quotient_twist() const { return base_ + offset_; }

    /// E(z) = E_{L(z)}<x>.
    ExtensionBundle twisted(const LElement& z) const { return {base_ + z, offset_}; }

    std::string to_string() const { return "EB:" + base_.to_string() + ";" + offset_.to_string(); }

    /// "EB:base;offset", each part "l1,l2,l3;lc" (the offset's ";lc" may be omitted).
    static ExtensionBundle parse(const WeightType& w, std::string_view text) {
        std::size_t b = 0;
        while (b < text.size() && text[b] == ' ') ++b;
        if (text.substr(b, 3) != "EB:") throw ParseError("extension bundle: expected 'EB:'", b);
        const auto body = text.substr(b + 3);
        const auto first = body.find(';');
        if (first == std::string_view::npos) throw ParseError("extension bundle: expected 'base;offset'", b + 3);
        const auto second = body.find(';', first + 1);
        if (second == std::string_view::npos)
            throw ParseError("extension bundle: base needs its c-coefficient", b + 3 + first);
        return {LElement::parse(w, body.substr(0, second)), LElement::parse(w, body.substr(second + 1))};
    }

    friend bool operator==(const ExtensionBundle&, const ExtensionBundle&) = default;

private:
    LElement base_;
    LElement offset_;
};

inline ExtensionBundle make_extension_bundle(const LElement& base, const LElement& offset) { return {base, offset}; }

/// Every z with a = b(z).
inline std::vector<LElement> orbit_twists(const ExtensionBundle& a, const ExtensionBundle& b) {
    if (!(a.weights() == b.weights())) throw PreconditionError("extension bundles over different weight types");
    const auto& w = a.weights();
    const auto& x = a.offset();
    const auto& y = b.offset();
    const auto shift = a.base() - b.base();
    std::vector<LElement> out;
    if (x == y) out.push_back(shift);
    for (int j = 1; j <= 3; ++j) {
        std::vector<std::int64_t> yy(3), zz(3);
        for (int i = 1; i <= 3; ++i) {
            const auto li = x.coefficient(i);
            yy[static_cast<std::size_t>(i - 1)] = i == j ? li : w.weight(i) - 2 - li;
            zz[static_cast<std::size_t>(i - 1)] = i == j ? 0 : li + 1;
        }
        if (LElement::normal_form(w, yy, 0) == y) {
            auto z = shift + LElement::normal_form(w, zz, -1);
            if (std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
        }
    }
    return out;
}

/// The twist z with a = b(z), if any; condition (i) is preferred.
inline std::optional<LElement> same_orbit(const ExtensionBundle& a, const ExtensionBundle& b) {
    auto zs = orbit_twists(a, b);
    if (zs.empty()) return std::nullopt;
    return zs.front();
}

inline K0Class k0_class_ext(const ExtensionBundle& e) {
    return k0_class_line(e.sub_twist()) + k0_class_line(e.quotient_twist());
}

struct OrthogonalPair {
    std::int64_t hom_x_omega = 0;  ///< dim Hom(L(x), L(omega))
    std::int64_t hom_omega_x = 0;  ///< dim Hom(L(omega), L(x))
    std::int64_t ext_omega_x = 0;  ///< dim Ext^1(L(omega), L(x))
    std::int64_t ext_x_omega = 0;  ///< dim Ext^1(L(x), L(omega))

    bool orthogonal() const { return hom_x_omega == 0 && hom_omega_x == 0 && ext_omega_x == 0; }
    bool holds() const { return orthogonal() && ext_x_omega == 1; }
};

inline OrthogonalPair orthogonal_pair_check(const ExtensionBundle& e) {
    const auto lw = e.sub_twist();
    const auto lx = e.quotient_twist();
    const auto xw = line_hom_ext_dims(lx, lw);
    const auto wx = line_hom_ext_dims(lw, lx);
    return {xw.hom, wx.hom, wx.ext, xw.ext};
}

/// All admissible offsets 0 <= x <= sum (p_i - 2) x_i.
inline std::vector<LElement> admissible_offsets(const WeightType& w) {
    w.require_three("admissible offsets");
    std::vector<LElement> out;
    for (std::int64_t a = 0; a <= w.weight(1) - 2; ++a)
        for (std::int64_t b = 0; b <= w.weight(2) - 2; ++b)
            for (std::int64_t c = 0; c <= w.weight(3) - 2; ++c) out.push_back(LElement::normal_form(w, {a, b, c}, 0));
    return out;
}

/// An extension bundle of the given class, if one exists.
inline std::optional<ExtensionBundle> find_extension_bundle(const K0Class& target) {
    const auto& w = target.weights();
    w.require_three("find_extension_bundle");
    const auto d = delta(w);
    const int top = K0Class::basis_size(w) - 1;
    for (std::int64_t a = 0; a < w.weight(1); ++a)
        for (std::int64_t b = 0; b < w.weight(2); ++b)
            for (std::int64_t c = 0; c < w.weight(3); ++c)
                for (const auto& off : admissible_offsets(w)) {
                    ExtensionBundle e(LElement::normal_form(w, {a, b, c}, 0), off);
                    const auto diff = target - k0_class_ext(e);
                    // a difference m * delta with m even is absorbed by twisting with (m/2) c
                    const auto m = diff[top];
                    if (m % 2 != 0 || !(diff == m * d)) continue;
                    return e.twisted((m / 2) * LElement::c(w));
                }
    return std::nullopt;
}

} // namespace hwpl
