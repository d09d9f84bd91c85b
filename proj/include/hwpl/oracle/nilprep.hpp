#pragma once

/**
 * @file nilprep.hpp
 * @brief Nilpotent representations of the cyclic quiver with p vertices.
 *
 * Arrows run v -> v-1 (mod p), so the indecomposable with top at vertex j
 * and length n has basis vectors at vertices j, j-1, ..., j-n+1 and
 * tau S_j = S_{j-1}. For p = 1 this is the Jordan quiver.
 */

#include "hwpl/error.hpp"
#include "hwpl/oracle/ffield.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hwpl::oracle {

inline int wrap(int v, int p) { return ((v % p) + p) % p; }

/// Isomorphism class of a nilpotent representation: sorted (top, length) pairs.
struct IsoType {
    int p = 1;
    std::vector<std::pair<int, int>> parts;

    IsoType() = default;
    IsoType(int rank, std::vector<std::pair<int, int>> ps) : p(rank), parts(std::move(ps)) {
        for (auto& [j, n] : parts) {
            if (n < 1) throw PreconditionError("summand length must be >= 1");
            j = wrap(j, p);
        }
        std::sort(parts.begin(), parts.end());
    }

    int dim() const {
        int d = 0;
        for (auto [j, n] : parts) d += n;
        return d;
    }
    std::vector<int> dim_vector() const {
        std::vector<int> d(static_cast<std::size_t>(p), 0);
        for (auto [j, n] : parts)
            for (int t = 0; t < n; ++t) ++d[static_cast<std::size_t>(wrap(j - t, p))];
        return d;
    }
    bool is_zero() const { return parts.empty(); }

    std::string to_string() const {
        if (parts.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < parts.size(); ++i)
            s += (i ? "+" : "") + std::string("(") + std::to_string(parts[i].first) + "," +
                 std::to_string(parts[i].second) + ")";
        return s;
    }

    friend IsoType operator+(const IsoType& a, const IsoType& b) {
        auto ps = a.parts;
        ps.insert(ps.end(), b.parts.begin(), b.parts.end());
        return {a.p, std::move(ps)};
    }
    friend bool operator==(const IsoType&, const IsoType&) = default;
    friend auto operator<=>(const IsoType& a, const IsoType& b) {
        if (auto c = a.p <=> b.p; c != 0) return c;
        return a.parts <=> b.parts;
    }
};

/// Representation: arrows[v] maps V_v to V_{v-1}, shape dims[v-1] x dims[v].
struct NilpRep {
    int p = 1;
    std::vector<int> dims;
    std::vector<Mat> arrows;

    int total_dim() const {
        int d = 0;
        for (int x : dims) d += x;
        return d;
    }
    int prev(int v) const { return wrap(v - 1, p); }

    void validate() const {
        if (static_cast<int>(dims.size()) != p || static_cast<int>(arrows.size()) != p)
            throw PreconditionError("representation shape does not match its vertex count");
        for (int v = 0; v < p; ++v) {
            const auto& a = arrows[static_cast<std::size_t>(v)];
            if (a.rows != dims[static_cast<std::size_t>(prev(v))] || a.cols != dims[static_cast<std::size_t>(v)])
                throw PreconditionError("arrow matrix shape does not match the dimension vector");
        }
    }
};

/// Canonical representative of an isomorphism type.
inline NilpRep build_rep(const IsoType& t) {
    NilpRep r;
    r.p = t.p;
    r.dims = t.dim_vector();
    // local coordinate of each (summand, depth) basis vector at its vertex
    std::vector<int> fill(static_cast<std::size_t>(t.p), 0);
    std::vector<std::vector<int>> coord;
    for (auto [j, n] : t.parts) {
        std::vector<int> c;
        for (int s = 0; s < n; ++s) c.push_back(fill[static_cast<std::size_t>(wrap(j - s, t.p))]++);
        coord.push_back(std::move(c));
    }
    for (int v = 0; v < t.p; ++v)
        r.arrows.emplace_back(r.dims[static_cast<std::size_t>(r.prev(v))], r.dims[static_cast<std::size_t>(v)]);
    for (std::size_t k = 0; k < t.parts.size(); ++k) {
        auto [j, n] = t.parts[k];
        for (int s = 0; s + 1 < n; ++s) {
            const int v = wrap(j - s, t.p);
            r.arrows[static_cast<std::size_t>(v)](coord[k][static_cast<std::size_t>(s + 1)], coord[k][static_cast<std::size_t>(s)]) = 1;
        }
    }
    return r;
}

/// Composite path maps P(v, l): V_v -> V_{v-l}, for 0 <= l <= maxlen.
class PathTable {
public:
    PathTable(const Field& f, const NilpRep& r, int maxlen) : p_(r.p), maxlen_(maxlen) {
        paths_.resize(static_cast<std::size_t>(p_ * (maxlen + 1)));
        for (int v = 0; v < p_; ++v) {
            at(v, 0) = Mat::identity(r.dims[static_cast<std::size_t>(v)]);
            for (int l = 1; l <= maxlen; ++l)
                at(v, l) = mul(f, r.arrows[static_cast<std::size_t>(wrap(v - l + 1, p_))], at(v, l - 1));
        }
    }
    const Mat& operator()(int v, int l) const { return paths_[static_cast<std::size_t>(v * (maxlen_ + 1) + l)]; }
    int max_length() const { return maxlen_; }

private:
    Mat& at(int v, int l) { return paths_[static_cast<std::size_t>(v * (maxlen_ + 1) + l)]; }
    int p_;
    int maxlen_;
    std::vector<Mat> paths_;
};

/// Decomposition from the rank array r(v, l) = rank of the length-l path starting at v.
inline IsoType from_rank_array(int p, int maxlen, const std::function<int(int, int)>& r) {
    auto c = [&](int v, int l) { return r(wrap(v, p), l) - (l + 1 <= maxlen ? r(wrap(v, p), l + 1) : 0); };
    std::vector<std::pair<int, int>> parts;
    for (int n = 1; n <= maxlen; ++n)
        for (int j = 0; j < p; ++j) {
            const int m = c(j, n - 1) - (n <= maxlen ? c(j + 1, n) : 0);
            if (m < 0) throw InconsistencyError("negative multiplicity in rank-array decomposition");
            for (int k = 0; k < m; ++k) parts.emplace_back(j, n);
        }
    return {p, std::move(parts)};
}

inline IsoType classify(const Field& f, const NilpRep& rep) {
    rep.validate();
    const int d = rep.total_dim();
    PathTable paths(f, rep, d + 1);
    for (int v = 0; v < rep.p; ++v)
        if (!paths(v, d).is_zero()) throw PreconditionError("representation is not nilpotent");
    return from_rank_array(rep.p, d + 1, [&](int v, int l) { return rank(f, paths(v, l)); });
}

/// A subrepresentation: one subspace per vertex, rows = RREF basis.
using SubRep = std::vector<Mat>;

/// Iso types of a subrepresentation and of the corresponding quotient.
inline std::pair<IsoType, IsoType> classify_sub_quotient(const Field& f, const NilpRep& rep, const PathTable& paths,
                                                          const SubRep& u) {
    const int p = rep.p;
    const int maxlen = paths.max_length();
    std::vector<int> sub_r(static_cast<std::size_t>(p * (maxlen + 1))), quo_r(sub_r.size());
    for (int v = 0; v < p; ++v)
        for (int l = 0; l <= maxlen; ++l) {
            const auto& path = paths(v, l);
            const auto& uv = u[static_cast<std::size_t>(v)];
            const auto& ut = u[static_cast<std::size_t>(wrap(v - l, p))];
            const auto idx = static_cast<std::size_t>(v * (maxlen + 1) + l);
            // images of the rows of uv under the path, as rows
            sub_r[idx] = uv.rows ? rank(f, transpose(mul(f, path, transpose(uv)))) : 0;
            quo_r[idx] = rank(f, stack(ut, transpose(path))) - ut.rows;
        }
    auto sub = from_rank_array(p, maxlen, [&](int v, int l) { return sub_r[static_cast<std::size_t>(v * (maxlen + 1) + l)]; });
    auto quo = from_rank_array(p, maxlen, [&](int v, int l) { return quo_r[static_cast<std::size_t>(v * (maxlen + 1) + l)]; });
    return {sub, quo};
}

/// Calls visit(u) for every subrepresentation of rep.
inline void for_each_subrep(const Field& f, const NilpRep& rep, const std::function<void(const SubRep&)>& visit) {
    const int p = rep.p;
    std::vector<std::vector<Mat>> spaces;
    for (int v = 0; v < p; ++v) spaces.push_back(all_subspaces(f, rep.dims[static_cast<std::size_t>(v)]));
    // arrow images of a basis, as rows
    auto image = [&](int v, const Mat& uv) { return transpose(mul(f, rep.arrows[static_cast<std::size_t>(v)], transpose(uv))); };
    auto contains = [&](const Mat& big, const Mat& rows) {
        if (rows.rows == 0) return true;
        return rank(f, stack(big, rows)) == big.rows;
    };
    SubRep u(static_cast<std::size_t>(p));
    std::function<void(int)> go = [&](int v) {
        if (v == p) {
            if (contains(u[static_cast<std::size_t>(p - 1)], image(0, u[0]))) visit(u);
            return;
        }
        for (const auto& s : spaces[static_cast<std::size_t>(v)]) {
            u[static_cast<std::size_t>(v)] = s;
            if (v > 0 && !contains(u[static_cast<std::size_t>(v - 1)], image(v, s))) continue;
            go(v + 1);
        }
    };
    if (rep.total_dim() > 8) throw ScaleError("subrepresentation enumeration limited to total dimension 8");
    go(0);
}

/// (quotient type, sub type) -> number of subrepresentations.
using Census = std::map<std::pair<IsoType, IsoType>, std::int64_t>;

inline Census census(const Field& f, const NilpRep& rep) {
    Census c;
    PathTable paths(f, rep, rep.total_dim() + 1);
    for_each_subrep(f, rep, [&](const SubRep& u) {
        auto [sub, quo] = classify_sub_quotient(f, rep, paths, u);
        ++c[{quo, sub}];
    });
    return c;
}

/// |{X <= M : X ~ b, M/X ~ a}|.
inline std::int64_t brute_hall(const Field& f, const IsoType& a, const IsoType& b, const NilpRep& m) {
    if (m.total_dim() > 6) throw ScaleError("brute_hall is limited to total dimension 6");
    const auto c = census(f, m);
    auto it = c.find({a, b});
    return it == c.end() ? 0 : it->second;
}

/**
 * Linear system for Hom(X, Y): unknowns phi_v (dims Y_v x X_v), one equation
 * block phi_{v-1} alpha_v - beta_v phi_v per vertex.
 */
struct IntertwinerSystem {
    Mat matrix;
    std::vector<int> offsets;  ///< start of phi_v among the unknowns
    int unknowns = 0;
    int equations = 0;
};

inline IntertwinerSystem intertwiner_system(const Field& f, const NilpRep& x, const NilpRep& y) {
    if (x.p != y.p) throw PreconditionError("representations of different quivers");
    const int p = x.p;
    IntertwinerSystem s;
    for (int v = 0; v < p; ++v) {
        s.offsets.push_back(s.unknowns);
        s.unknowns += y.dims[static_cast<std::size_t>(v)] * x.dims[static_cast<std::size_t>(v)];
    }
    for (int v = 0; v < p; ++v) s.equations += y.dims[static_cast<std::size_t>(x.prev(v))] * x.dims[static_cast<std::size_t>(v)];
    s.matrix = Mat(s.equations, s.unknowns);
    int row = 0;
    for (int v = 0; v < p; ++v) {
        const int u = x.prev(v);
        const int xv = x.dims[static_cast<std::size_t>(v)], xu = x.dims[static_cast<std::size_t>(u)];
        const int yv = y.dims[static_cast<std::size_t>(v)], yu = y.dims[static_cast<std::size_t>(u)];
        const auto& alpha = x.arrows[static_cast<std::size_t>(v)];
        const auto& beta = y.arrows[static_cast<std::size_t>(v)];
        for (int r = 0; r < yu; ++r)
            for (int c = 0; c < xv; ++c, ++row) {
                // (phi_u alpha)[r][c] = sum_k phi_u[r][k] alpha[k][c]
                for (int k = 0; k < xu; ++k)
                    if (alpha(k, c))
                        s.matrix(row, s.offsets[static_cast<std::size_t>(u)] + r * xu + k) =
                            f.add(s.matrix(row, s.offsets[static_cast<std::size_t>(u)] + r * xu + k), alpha(k, c));
                // - (beta phi_v)[r][c] = - sum_k beta[r][k] phi_v[k][c]
                for (int k = 0; k < yv; ++k)
                    if (beta(r, k))
                        s.matrix(row, s.offsets[static_cast<std::size_t>(v)] + k * xv + c) =
                            f.sub(s.matrix(row, s.offsets[static_cast<std::size_t>(v)] + k * xv + c), beta(r, k));
            }
    }
    return s;
}

struct HomExtDims {
    int hom = 0;
    int ext = 0;
    int system_rank = 0;
};

/// dim Hom(X, Y) = unknowns - rank, dim Ext^1(X, Y) = equations - rank.
inline HomExtDims hom_ext_dims(const Field& f, const NilpRep& x, const NilpRep& y) {
    const auto s = intertwiner_system(f, x, y);
    const int rk = rank(f, s.matrix);
    return {s.unknowns - rk, s.equations - rk, rk};
}

/// Unpack a solution vector into per-vertex matrices phi_v : X_v -> Y_v.
inline std::vector<Mat> unpack_morphism(const NilpRep& x, const NilpRep& y, const IntertwinerSystem& s,
                                        const std::vector<std::uint8_t>& sol) {
    std::vector<Mat> phi;
    for (int v = 0; v < x.p; ++v) {
        Mat m(y.dims[static_cast<std::size_t>(v)], x.dims[static_cast<std::size_t>(v)]);
        std::copy_n(sol.begin() + s.offsets[static_cast<std::size_t>(v)], m.a.size(), m.a.begin());
        phi.push_back(std::move(m));
    }
    return phi;
}

/// Calls visit on every element of the span of `basis` (q^|basis| vectors).
inline void for_each_combination(const Field& f, const std::vector<std::vector<std::uint8_t>>& basis, std::size_t len,
                                 double limit, const std::function<void(const std::vector<std::uint8_t>&)>& visit) {
    double count = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) count *= f.size();
    if (count > limit) throw ScaleError("enumeration of " + std::to_string(static_cast<long long>(count)) + " elements exceeds the limit");
    std::vector<std::uint8_t> cur(len, 0);
    std::vector<int> digits(basis.size(), 0);
    while (true) {
        visit(cur);
        std::size_t d = 0;
        // each increment adds basis[d]; a wrap to zero has added q * basis[d] = 0 in total
        while (d < digits.size()) {
            for (std::size_t k = 0; k < len; ++k) cur[k] = f.add(cur[k], basis[d][k]);
            if (++digits[d] < f.size()) break;
            digits[d] = 0;
            ++d;
        }
        if (d == digits.size()) break;
    }
}

/// |Aut(M)| by enumerating End(M).
inline std::int64_t brute_aut(const Field& f, const NilpRep& m, double limit = 5e7) {
    const auto s = intertwiner_system(f, m, m);
    const auto basis = nullspace(f, s.matrix);
    std::int64_t n = 0;
    for_each_combination(f, basis, static_cast<std::size_t>(s.unknowns), limit, [&](const std::vector<std::uint8_t>& sol) {
        const auto phi = unpack_morphism(m, m, s, sol);
        for (const auto& blk : phi)
            if (!invertible(f, blk)) return;
        ++n;
    });
    return n;
}

/**
 * |Aut(M)| from End(M)/rad = prod_i M_{m_i}(F_q), where m_i are the summand
 * multiplicities: q^{dim End - sum m_i^2} prod_i |GL_{m_i}(F_q)|.
 */
inline std::int64_t structural_aut(const Field& f, const NilpRep& m, const IsoType& t) {
    const auto d = hom_ext_dims(f, m, m);
    std::map<std::pair<int, int>, int> mult;
    for (const auto& part : t.parts) ++mult[part];
    const std::int64_t q = f.size();
    std::int64_t out = 1;
    int semisimple = 0;
    for (const auto& [part, k] : mult) {
        semisimple += k * k;
        std::int64_t qk = 1;
        for (int i = 0; i < k; ++i) qk *= q;
        std::int64_t qi = 1;
        for (int i = 0; i < k; ++i) {
            out *= qk - qi;
            qi *= q;
        }
    }
    for (int i = semisimple; i < d.hom; ++i) out *= q;
    return out;
}

/// brute_aut when End(M) is small enough to enumerate, structural_aut otherwise.
inline std::int64_t aut_of(const Field& f, const NilpRep& m, const IsoType& t, double limit = 2e6) {
    const auto d = hom_ext_dims(f, m, m);
    double count = 1;
    for (int i = 0; i < d.hom; ++i) count *= f.size();
    return count <= limit ? brute_aut(f, m) : structural_aut(f, m, t);
}

/// Ext^1(X, Y) sorted by middle term: |Ext^1(X, Y)_L| for every L, plus dim Ext^1.
struct ExtCensus {
    std::map<IsoType, std::int64_t> by_middle;
    int ext_dim = 0;
    int hom_dim = 0;
};

/**
 * Enumerates cocycles eta_v : X_v -> Y_{v-1}; the middle term has arrows
 * [[beta_v, eta_v], [0, alpha_v]] on Y_v + X_v. Each class has q^rank representatives.
 */
inline ExtCensus ext_census(const Field& f, const NilpRep& x, const NilpRep& y, double limit = 5e6) {
    const int p = x.p;
    const auto sys = intertwiner_system(f, x, y);
    const int rk = rank(f, sys.matrix);
    ExtCensus out;
    out.ext_dim = sys.equations - rk;
    out.hom_dim = sys.unknowns - rk;
    std::vector<std::vector<std::uint8_t>> basis;
    for (int i = 0; i < sys.equations; ++i) {
        std::vector<std::uint8_t> e(static_cast<std::size_t>(sys.equations), 0);
        e[static_cast<std::size_t>(i)] = 1;
        basis.push_back(std::move(e));
    }
    std::map<IsoType, std::int64_t> raw;
    for_each_combination(f, basis, static_cast<std::size_t>(sys.equations), limit, [&](const std::vector<std::uint8_t>& eta) {
        NilpRep mid;
        mid.p = p;
        for (int v = 0; v < p; ++v)
            mid.dims.push_back(y.dims[static_cast<std::size_t>(v)] + x.dims[static_cast<std::size_t>(v)]);
        int off = 0;
        for (int v = 0; v < p; ++v) {
            const int u = x.prev(v);
            const int yu = y.dims[static_cast<std::size_t>(u)], yv = y.dims[static_cast<std::size_t>(v)];
            const int xv = x.dims[static_cast<std::size_t>(v)];
            Mat a(mid.dims[static_cast<std::size_t>(u)], mid.dims[static_cast<std::size_t>(v)]);
            const auto& beta = y.arrows[static_cast<std::size_t>(v)];
            const auto& alpha = x.arrows[static_cast<std::size_t>(v)];
            for (int r = 0; r < yu; ++r)
                for (int c = 0; c < yv; ++c) a(r, c) = beta(r, c);
            for (int r = 0; r < yu; ++r)
                for (int c = 0; c < xv; ++c) a(r, yv + c) = eta[static_cast<std::size_t>(off + r * xv + c)];
            for (int r = 0; r < alpha.rows; ++r)
                for (int c = 0; c < xv; ++c) a(yu + r, yv + c) = alpha(r, c);
            off += yu * xv;
            mid.arrows.push_back(std::move(a));
        }
        ++raw[classify(f, mid)];
    });
    std::int64_t boundary = 1;
    for (int i = 0; i < rk; ++i) boundary *= f.size();
    for (auto& [t, n] : raw) {
        if (n % boundary != 0) throw InconsistencyError("cocycle count not divisible by the coboundary count");
        out.by_middle[t] = n / boundary;
    }
    return out;
}

/// Monomorphisms Y -> L grouped by cokernel type.
inline std::map<IsoType, std::int64_t> mono_census(const Field& f, const NilpRep& y, const NilpRep& l, double limit = 5e6) {
    const auto sys = intertwiner_system(f, y, l);
    const auto basis = nullspace(f, sys.matrix);
    PathTable paths(f, l, l.total_dim() + 1);
    std::map<IsoType, std::int64_t> out;
    for_each_combination(f, basis, static_cast<std::size_t>(sys.unknowns), limit, [&](const std::vector<std::uint8_t>& sol) {
        const auto phi = unpack_morphism(y, l, sys, sol);
        SubRep img;
        for (int v = 0; v < y.p; ++v) {
            const auto& m = phi[static_cast<std::size_t>(v)];
            if (rank(f, m) != y.dims[static_cast<std::size_t>(v)]) return;
            Mat rows = transpose(m);
            rref(f, rows);
            img.push_back(std::move(rows));
        }
        ++out[classify_sub_quotient(f, l, paths, img).second];
    });
    return out;
}

} // namespace hwpl::oracle
