#pragma once

#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace endolift {

namespace detail {

template <class F>
inline void row_axpy(const F& f, typename F::elem* dst, typename F::elem c, const typename F::elem* src, int n) {
    if (f.is_zero(c)) return;
    if constexpr (std::is_same_v<F, GF2>) {
        for (int j = 0; j < n; ++j) dst[j] ^= src[j];
    } else if constexpr (std::is_same_v<F, GF4>) {
        const auto* t = GF4::mul_table[c];
        for (int j = 0; j < n; ++j) dst[j] ^= t[src[j]];
    } else {
        for (int j = 0; j < n; ++j) dst[j] = f.add(dst[j], f.mul(c, src[j]));
    }
}

template <class F>
inline void row_scale(const F& f, typename F::elem* dst, typename F::elem c, int n) {
    for (int j = 0; j < n; ++j) dst[j] = f.mul(c, dst[j]);
}

}  // namespace detail

// ---------------------------------------------------------------- fields

// Reduced row echelon form in place; returns pivot columns.
template <class F>
std::vector<int> rref(Mat<F>& a) {
    static_assert(F::is_field);
    const F& f = a.ring;
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < a.cols && r < a.rows; ++c) {
        int p = -1;
        for (int i = r; i < a.rows; ++i)
            if (!f.is_zero(a(i, c))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < a.cols; ++j) std::swap(a(p, j), a(r, j));
        auto inv = f.inv(a(r, c));
        if (!f.eq(inv, f.one())) detail::row_scale(f, a.row(r), inv, a.cols);
        for (int i = 0; i < a.rows; ++i) {
            if (i == r || f.is_zero(a(i, c))) continue;
            detail::row_axpy(f, a.row(i), f.neg(a(i, c)), a.row(r), a.cols);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

template <class F>
int rank(Mat<F> a) {
    return static_cast<int>(rref(a).size());
}

// Columns form a basis of {v : a v = 0}.
template <class F>
Mat<F> kernel(Mat<F> a) {
    const F& f = a.ring;
    auto piv = rref(a);
    std::vector<bool> is_piv(a.cols, false);
    for (int c : piv) is_piv[c] = true;
    int k = a.cols - static_cast<int>(piv.size());
    Mat<F> ker(f, a.cols, k);
    int col = 0;
    for (int fc = 0; fc < a.cols; ++fc) {
        if (is_piv[fc]) continue;
        ker(fc, col) = f.one();
        for (std::size_t i = 0; i < piv.size(); ++i) ker(piv[i], col) = f.neg(a(int(i), fc));
        ++col;
    }
    return ker;
}

// Some X with a X = b, if one exists.
template <class F>
std::optional<Mat<F>> solve(const Mat<F>& a, const Mat<F>& b) {
    const F& f = a.ring;
    auto aug = hstack(a, b);
    auto piv = rref(aug);
    for (int c : piv)
        if (c >= a.cols) return std::nullopt;
    Mat<F> x(f, a.cols, b.cols);
    for (std::size_t i = 0; i < piv.size(); ++i)
        for (int j = 0; j < b.cols; ++j) x(piv[i], j) = aug(int(i), a.cols + j);
    return x;
}

template <class F>
std::optional<Mat<F>> inverse(const Mat<F>& a) {
    if (a.rows != a.cols) throw std::invalid_argument("inverse: not square");
    auto x = solve(a, Mat<F>::identity(a.ring, a.rows));
    if (!x || rank(a) != a.rows) return std::nullopt;
    return x;
}

// Basis (as columns) of the column space, chosen from the given columns in order.
template <class F>
Mat<F> column_basis(const Mat<F>& a) {
    auto t = a;
    auto piv = rref(t);
    Mat<F> r(a.ring, a.rows, static_cast<int>(piv.size()));
    for (std::size_t k = 0; k < piv.size(); ++k)
        for (int i = 0; i < a.rows; ++i) r(i, int(k)) = a(i, piv[k]);
    return r;
}

// Row-reduced basis of the column space, as columns.
template <class F>
Mat<F> span_basis(const Mat<F>& cols) {
    auto t = cols.transpose();
    auto piv = rref(t);
    return t.block(0, 0, static_cast<int>(piv.size()), t.cols).transpose();
}

// ---------------------------------------------------------------- local rings Z/2^N, Z/2^N[w]

template <class R>
std::optional<Mat<R>> inverse_local(const Mat<R>& a) {
    if (a.rows != a.cols) throw std::invalid_argument("inverse_local: not square");
    const R& rg = a.ring;
    int n = a.rows;
    auto m = hstack(a, Mat<R>::identity(rg, n));
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (rg.is_unit(m(i, c))) {
                p = i;
                break;
            }
        if (p < 0) return std::nullopt;
        if (p != c)
            for (int j = 0; j < 2 * n; ++j) std::swap(m(p, j), m(c, j));
        auto inv = rg.inv(m(c, c));
        detail::row_scale(rg, m.row(c), inv, 2 * n);
        for (int i = 0; i < n; ++i)
            if (i != c && !rg.is_zero(m(i, c))) detail::row_axpy(rg, m.row(i), rg.neg(m(i, c)), m.row(c), 2 * n);
    }
    return m.block(0, n, n, n);
}

// Determinant of a matrix that is invertible modulo 2.
template <class R>
typename R::elem det_local(Mat<R> m) {
    const R& rg = m.ring;
    int n = m.rows;
    auto det = rg.one();
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (rg.is_unit(m(i, c))) {
                p = i;
                break;
            }
        if (p < 0) throw std::domain_error("det_local: matrix is singular modulo 2");
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = rg.neg(det);
        }
        det = rg.mul(det, m(c, c));
        auto inv = rg.inv(m(c, c));
        for (int i = c + 1; i < n; ++i)
            if (!rg.is_zero(m(i, c))) detail::row_axpy(rg, m.row(i), rg.neg(rg.mul(m(i, c), inv)), m.row(c), n);
    }
    return det;
}

template <class R>
struct SmithResult {
    Mat<R> U, D, V;      // U * D * V == input
    Mat<R> Uinv, Vinv;
    std::vector<int> exponents;  // 2-adic valuation of each diagonal entry, N for zero

    int unit_count() const {
        int k = 0;
        for (int e : exponents) k += (e == 0);
        return k;
    }
    bool all_units_or_zero(int N) const {
        for (int e : exponents)
            if (e != 0 && e < N) return false;
        return true;
    }
};

// Diagonalization over Z/2^N or Z/2^N[w]: pivot of least valuation, ties row-major.
template <class R>
SmithResult<R> smith_form(const Mat<R>& a) {
    const R& rg = a.ring;
    int m = a.rows, n = a.cols;
    SmithResult<R> s{Mat<R>::identity(rg, m), a, Mat<R>::identity(rg, n), Mat<R>::identity(rg, m),
                     Mat<R>::identity(rg, n), {}};
    auto& D = s.D;
    auto& U = s.U;
    auto& V = s.V;
    auto& Ui = s.Uinv;
    auto& Vi = s.Vinv;
    const int full = [&] {
        if constexpr (std::is_same_v<R, Zmod2N>) return rg.N;
        else return rg.N();
    }();

    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        for (int c = 0; c < n; ++c) std::swap(D(i, c), D(j, c));
        for (int c = 0; c < m; ++c) std::swap(Ui(i, c), Ui(j, c));
        for (int r = 0; r < m; ++r) std::swap(U(r, i), U(r, j));
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < m; ++r) std::swap(D(r, i), D(r, j));
        for (int r = 0; r < n; ++r) std::swap(Vi(r, i), Vi(r, j));
        for (int c = 0; c < n; ++c) std::swap(V(i, c), V(j, c));
    };
    // row_i -= c * row_j
    auto row_sub = [&](int i, int j, const typename R::elem& c) {
        auto nc = rg.neg(c);
        detail::row_axpy(rg, D.row(i), nc, D.row(j), n);
        detail::row_axpy(rg, Ui.row(i), nc, Ui.row(j), m);
        for (int r = 0; r < m; ++r) U(r, j) = rg.add(U(r, j), rg.mul(U(r, i), c));
    };
    // col_j -= c * col_i
    auto col_sub = [&](int j, int i, const typename R::elem& c) {
        for (int r = 0; r < m; ++r) D(r, j) = rg.sub(D(r, j), rg.mul(D(r, i), c));
        for (int r = 0; r < n; ++r) Vi(r, j) = rg.sub(Vi(r, j), rg.mul(Vi(r, i), c));
        detail::row_axpy(rg, V.row(i), c, V.row(j), n);
    };
    auto scale_row = [&](int i, const typename R::elem& u) {
        auto ui = rg.inv(u);
        detail::row_scale(rg, D.row(i), ui, n);
        detail::row_scale(rg, Ui.row(i), ui, m);
        for (int r = 0; r < m; ++r) U(r, i) = rg.mul(U(r, i), u);
    };

    int k = 0;
    for (; k < std::min(m, n); ++k) {
        int best = full, bi = -1, bj = -1;
        for (int i = k; i < m && best > 0; ++i)
            for (int j = k; j < n; ++j) {
                int v = rg.val(D(i, j));
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                    if (v == 0) break;
                }
            }
        if (bi < 0) break;
        swap_rows(k, bi);
        swap_cols(k, bj);
        // normalize pivot to 2^e
        auto p = D(k, k);
        typename R::elem unit;
        if constexpr (std::is_same_v<R, Zmod2N>) unit = p >> best;
        else unit = {p[0] >> best, p[1] >> best};
        scale_row(k, unit);
        auto piv = D(k, k);
        for (int i = k + 1; i < m; ++i)
            if (!rg.is_zero(D(i, k))) row_sub(i, k, rg.div_exact(D(i, k), piv));
        for (int j = k + 1; j < n; ++j)
            if (!rg.is_zero(D(k, j))) col_sub(j, k, rg.div_exact(D(k, j), piv));
        s.exponents.push_back(best);
    }
    for (; k < std::min(m, n); ++k) s.exponents.push_back(full);
    return s;
}

// Basis of the kernel when the Smith invariants are units or zero; nullopt otherwise.
template <class R>
std::optional<Mat<R>> free_kernel(const Mat<R>& a, int precision) {
    auto s = smith_form(a);
    if (!s.all_units_or_zero(precision)) return std::nullopt;
    int r = s.unit_count();
    return s.Vinv.block(0, r, a.cols, a.cols - r);
}

}  // namespace endolift
