#pragma once

#include <stdexcept>
#include <type_traits>
#include <vector>

#include "rings.hpp"

namespace endolift {

template <class R>
struct Mat {
    using elem = typename R::elem;

    R ring{};
    int rows = 0;
    int cols = 0;
    std::vector<elem> e;

    Mat() = default;
    Mat(const R& rg, int r, int c) : ring(rg), rows(r), cols(c), e(std::size_t(r) * c, rg.zero()) {}

    static Mat identity(const R& rg, int n) {
        Mat m(rg, n, n);
        for (int i = 0; i < n; ++i) m(i, i) = rg.one();
        return m;
    }
    static Mat from_ints(const R& rg, int r, int c, const std::vector<long long>& v) {
        if (v.size() != std::size_t(r) * c) throw std::invalid_argument("Mat::from_ints: size mismatch");
        Mat m(rg, r, c);
        for (std::size_t i = 0; i < v.size(); ++i) m.e[i] = rg.from_int(v[i]);
        return m;
    }

    elem& operator()(int i, int j) { return e[std::size_t(i) * cols + j]; }
    const elem& operator()(int i, int j) const { return e[std::size_t(i) * cols + j]; }
    elem* row(int i) { return e.data() + std::size_t(i) * cols; }
    const elem* row(int i) const { return e.data() + std::size_t(i) * cols; }

    bool is_zero() const {
        for (auto& x : e)
            if (!ring.is_zero(x)) return false;
        return true;
    }
    bool is_identity() const { return rows == cols && *this == identity(ring, rows); }

    bool operator==(const Mat& o) const {
        if (rows != o.rows || cols != o.cols) return false;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (!ring.eq(e[i], o.e[i])) return false;
        return true;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const {
        check_same(o);
        Mat r(ring, rows, cols);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = ring.add(e[i], o.e[i]);
        return r;
    }
    Mat operator-(const Mat& o) const {
        check_same(o);
        Mat r(ring, rows, cols);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = ring.sub(e[i], o.e[i]);
        return r;
    }
    Mat scaled(const elem& c) const {
        Mat r(ring, rows, cols);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = ring.mul(c, e[i]);
        return r;
    }
    Mat operator*(const Mat& o) const {
        if (cols != o.rows) throw std::invalid_argument("Mat: dimension mismatch in product");
        Mat r(ring, rows, o.cols);
        if constexpr (std::is_same_v<R, GF2>) {
            for (int i = 0; i < rows; ++i) {
                auto* out = r.row(i);
                const auto* a = row(i);
                for (int k = 0; k < cols; ++k) {
                    if (!a[k]) continue;
                    const auto* b = o.row(k);
                    for (int j = 0; j < o.cols; ++j) out[j] ^= b[j];
                }
            }
        } else if constexpr (std::is_same_v<R, GF4>) {
            for (int i = 0; i < rows; ++i) {
                auto* out = r.row(i);
                const auto* a = row(i);
                for (int k = 0; k < cols; ++k) {
                    if (!a[k]) continue;
                    const auto* b = o.row(k);
                    const auto* t = GF4::mul_table[a[k]];
                    for (int j = 0; j < o.cols; ++j) out[j] ^= t[b[j]];
                }
            }
        } else {
            for (int i = 0; i < rows; ++i)
                for (int k = 0; k < cols; ++k) {
                    const auto& a = (*this)(i, k);
                    if (ring.is_zero(a)) continue;
                    for (int j = 0; j < o.cols; ++j) r(i, j) = ring.add(r(i, j), ring.mul(a, o(k, j)));
                }
        }
        return r;
    }

    Mat transpose() const {
        Mat r(ring, cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r(j, i) = (*this)(i, j);
        return r;
    }
    Mat pow(long long k) const {
        if (rows != cols) throw std::invalid_argument("Mat::pow: not square");
        Mat result = identity(ring, rows), base = *this;
        while (k > 0) {
            if (k & 1) result = result * base;
            k >>= 1;
            if (k) base = base * base;
        }
        return result;
    }
    Mat block(int r0, int c0, int nr, int nc) const {
        Mat r(ring, nr, nc);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
        return r;
    }
    Mat column(int j) const { return block(0, j, rows, 1); }

    void check_same(const Mat& o) const {
        if (rows != o.rows || cols != o.cols) throw std::invalid_argument("Mat: dimension mismatch");
    }
};

template <class R>
Mat<R> kron(const Mat<R>& a, const Mat<R>& b) {
    Mat<R> r(a.ring, a.rows * b.rows, a.cols * b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            const auto& x = a(i, j);
            if (a.ring.is_zero(x)) continue;
            for (int k = 0; k < b.rows; ++k)
                for (int l = 0; l < b.cols; ++l) r(i * b.rows + k, j * b.cols + l) = a.ring.mul(x, b(k, l));
        }
    return r;
}

template <class R>
Mat<R> hstack(const Mat<R>& a, const Mat<R>& b) {
    if (a.rows != b.rows) throw std::invalid_argument("hstack: row mismatch");
    Mat<R> r(a.ring, a.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) r(i, j) = a(i, j);
        for (int j = 0; j < b.cols; ++j) r(i, a.cols + j) = b(i, j);
    }
    return r;
}

template <class R>
Mat<R> direct_sum(const Mat<R>& a, const Mat<R>& b) {
    Mat<R> r(a.ring, a.rows + b.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r(i, j) = a(i, j);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j) r(a.rows + i, a.cols + j) = b(i, j);
    return r;
}

// Entry-wise image under a ring map.
template <class S, class R, class F>
Mat<S> map_entries(const Mat<R>& a, const S& target, F&& f) {
    Mat<S> r(target, a.rows, a.cols);
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = f(a.e[i]);
    return r;
}

template <class R>
Mat<typename R::residue_field> reduce_mod2(const Mat<R>& a) {
    return map_entries(a, typename R::residue_field{}, [&](const typename R::elem& x) { return a.ring.reduce(x); });
}

template <class R>
Mat<R> lift_from_residue(const R& ring, const Mat<typename R::residue_field>& a) {
    return map_entries(a, ring, [&](const typename R::residue_field::elem& x) { return ring.lift(x); });
}

template <class R>
nlohmann::json to_json(const Mat<R>& a) {
    nlohmann::json j;
    j["ring"] = a.ring.name();
    j["rows"] = a.rows;
    j["cols"] = a.cols;
    auto entries = nlohmann::json::array();
    for (auto& x : a.e) entries.push_back(a.ring.to_json(x));
    j["entries"] = entries;
    return j;
}

}  // namespace endolift
