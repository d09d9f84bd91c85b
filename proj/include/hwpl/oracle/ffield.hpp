#pragma once

// Dense linear algebra over a prime field F_q, q < 256.

#include "hwpl/error.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace hwpl::oracle {

/// Prime field F_q.
class Field {
public:
    explicit Field(int q) : q_(q) {
        if (q < 2 || q > 251) throw PreconditionError("field size must be a prime below 256");
        for (int d = 2; d * d <= q; ++d)
            if (q % d == 0) throw PreconditionError("oracle fields must be prime, got q = " + std::to_string(q));
        inv_.fill(0);
        for (int a = 1; a < q; ++a)
            for (int b = 1; b < q; ++b)
                if (a * b % q == 1) inv_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
    }

    int size() const noexcept { return q_; }
    std::uint8_t add(int a, int b) const noexcept { return static_cast<std::uint8_t>((a + b) % q_); }
    std::uint8_t sub(int a, int b) const noexcept { return static_cast<std::uint8_t>((a - b + q_) % q_); }
    std::uint8_t mul(int a, int b) const noexcept { return static_cast<std::uint8_t>(a * b % q_); }
    std::uint8_t neg(int a) const noexcept { return static_cast<std::uint8_t>((q_ - a) % q_); }
    std::uint8_t inv(int a) const {
        if (a == 0) throw InconsistencyError("inverse of zero in F_q");
        return inv_[static_cast<std::size_t>(a)];
    }

private:
    int q_;
    std::array<std::uint8_t, 256> inv_{};
};

/// Row-major matrix over F_q.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r * c), 0) {}

    std::uint8_t& operator()(int r, int c) { return a[static_cast<std::size_t>(r * cols + c)]; }
    std::uint8_t operator()(int r, int c) const { return a[static_cast<std::size_t>(r * cols + c)]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    bool is_zero() const {
        for (auto v : a)
            if (v) return false;
        return true;
    }
    friend bool operator==(const Mat&, const Mat&) = default;
};

inline Mat mul(const Field& f, const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw InconsistencyError("matrix shape mismatch");
    Mat r(x.rows, y.cols);
    const int q = f.size();
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const int v = x(i, k);
            if (!v) continue;
            for (int j = 0; j < y.cols; ++j) r(i, j) = static_cast<std::uint8_t>((r(i, j) + v * y(k, j)) % q);
        }
    return r;
}

inline Mat transpose(const Mat& x) {
    Mat r(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r(j, i) = x(i, j);
    return r;
}

/// Rows of x followed by rows of y.
inline Mat stack(const Mat& x, const Mat& y) {
    if (x.rows == 0) return y;
    if (y.rows == 0) return x;
    if (x.cols != y.cols) throw InconsistencyError("stack: column mismatch");
    Mat r(x.rows + y.rows, x.cols);
    std::copy(x.a.begin(), x.a.end(), r.a.begin());
    std::copy(y.a.begin(), y.a.end(), r.a.begin() + static_cast<std::ptrdiff_t>(x.a.size()));
    return r;
}

/// In-place reduced row echelon form; returns pivot columns.
inline std::vector<int> rref(const Field& f, Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int c = 0; c < m.cols && row < m.rows; ++c) {
        int piv = -1;
        for (int r = row; r < m.rows; ++r)
            if (m(r, c)) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(row, j));
        const int s = f.inv(m(row, c));
        for (int j = 0; j < m.cols; ++j) m(row, j) = f.mul(m(row, j), s);
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || !m(r, c)) continue;
            const int t = m(r, c);
            for (int j = 0; j < m.cols; ++j) m(r, j) = f.sub(m(r, j), f.mul(t, m(row, j)));
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

inline int rank(const Field& f, Mat m) { return static_cast<int>(rref(f, m).size()); }

inline bool invertible(const Field& f, const Mat& m) { return m.rows == m.cols && rank(f, m) == m.rows; }

/// Basis of the right null space {v : m v = 0}, one vector per entry.
inline std::vector<std::vector<std::uint8_t>> nullspace(const Field& f, Mat m) {
    const auto pivots = rref(f, m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<std::uint8_t>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<std::uint8_t> v(static_cast<std::size_t>(m.cols), 0);
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = f.neg(m(static_cast<int>(r), free));
        basis.push_back(std::move(v));
    }
    return basis;
}

/**
 * All subspaces of F_q^n, each as a matrix whose rows are its RREF basis.
 */
inline std::vector<Mat> all_subspaces(const Field& f, int n) {
    std::vector<Mat> out;
    const int q = f.size();
    for (int k = 0; k <= n; ++k) {
        std::vector<int> piv(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) piv[static_cast<std::size_t>(i)] = i;
        while (true) {
            // free slots: (row r, column c) with c > piv[r] and c not a pivot
            std::vector<std::pair<int, int>> slots;
            std::vector<bool> is_piv(static_cast<std::size_t>(n), false);
            for (int p : piv) is_piv[static_cast<std::size_t>(p)] = true;
            for (int r = 0; r < k; ++r)
                for (int c = piv[static_cast<std::size_t>(r)] + 1; c < n; ++c)
                    if (!is_piv[static_cast<std::size_t>(c)]) slots.emplace_back(r, c);
            std::vector<int> digits(slots.size(), 0);
            while (true) {
                Mat m(k, n);
                for (int r = 0; r < k; ++r) m(r, piv[static_cast<std::size_t>(r)]) = 1;
                for (std::size_t s = 0; s < slots.size(); ++s)
                    m(slots[s].first, slots[s].second) = static_cast<std::uint8_t>(digits[s]);
                out.push_back(std::move(m));
                std::size_t d = 0;
                while (d < digits.size() && ++digits[d] == q) digits[d++] = 0;
                if (d == digits.size()) break;
            }
            // next pivot combination
            int i = k - 1;
            while (i >= 0 && piv[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++piv[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) piv[static_cast<std::size_t>(j)] = piv[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

} // namespace hwpl::oracle
