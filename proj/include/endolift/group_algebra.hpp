#pragma once

#include <stdexcept>
#include <vector>

#include "group.hpp"
#include "matrix.hpp"
#include "rings.hpp"

namespace endolift {

// Element of A[G], dense on the normal-form index.
template <class R>
struct GroupAlgebraElement {
    using elem = typename R::elem;

    GroupSpec group;
    R ring{};
    std::vector<elem> c;

    GroupAlgebraElement() = default;
    GroupAlgebraElement(const GroupSpec& g, const R& r) : group(g), ring(r), c(g.order(), r.zero()) {}

    static GroupAlgebraElement of(const GroupSpec& g, const R& r, const GroupElement& h) {
        GroupAlgebraElement a(g, r);
        a.c[g.index(h)] = r.one();
        return a;
    }
    static GroupAlgebraElement one(const GroupSpec& g, const R& r) { return of(g, r, g.identity()); }
    static GroupAlgebraElement x_pow(const GroupSpec& g, const R& r, long long e) { return of(g, r, g.x_pow(e)); }

    elem coef(const GroupElement& h) const { return c[group.index(h)]; }

    GroupAlgebraElement operator+(const GroupAlgebraElement& o) const {
        check(o);
        GroupAlgebraElement r(group, ring);
        for (std::size_t k = 0; k < c.size(); ++k) r.c[k] = ring.add(c[k], o.c[k]);
        return r;
    }
    GroupAlgebraElement operator-(const GroupAlgebraElement& o) const {
        check(o);
        GroupAlgebraElement r(group, ring);
        for (std::size_t k = 0; k < c.size(); ++k) r.c[k] = ring.sub(c[k], o.c[k]);
        return r;
    }
    GroupAlgebraElement scaled(const elem& s) const {
        GroupAlgebraElement r(group, ring);
        for (std::size_t k = 0; k < c.size(); ++k) r.c[k] = ring.mul(s, c[k]);
        return r;
    }
    GroupAlgebraElement operator*(const GroupAlgebraElement& o) const {
        check(o);
        GroupAlgebraElement r(group, ring);
        int n = group.order();
        for (int a = 0; a < n; ++a) {
            if (ring.is_zero(c[a])) continue;
            auto ga = group.element(a);
            for (int b = 0; b < n; ++b) {
                if (ring.is_zero(o.c[b])) continue;
                int k = group.index(group.mul(ga, group.element(b)));
                r.c[k] = ring.add(r.c[k], ring.mul(c[a], o.c[b]));
            }
        }
        return r;
    }
    GroupAlgebraElement pow(long long e) const {
        auto r = one(group, ring);
        for (long long k = 0; k < e; ++k) r = r * *this;
        return r;
    }
    bool operator==(const GroupAlgebraElement& o) const {
        if (!(group == o.group) || c.size() != o.c.size()) return false;
        for (std::size_t k = 0; k < c.size(); ++k)
            if (!ring.eq(c[k], o.c[k])) return false;
        return true;
    }
    bool is_zero() const {
        for (auto& v : c)
            if (!ring.is_zero(v)) return false;
        return true;
    }
    bool supported_on_x() const {
        for (int k = 0; k < group.order(); ++k)
            if (group.element(k).j != 0 && !ring.is_zero(c[k])) return false;
        return true;
    }
    // x^i -> x^{-i}
    GroupAlgebraElement star() const {
        if (!supported_on_x()) throw std::domain_error("star: support outside <x>");
        GroupAlgebraElement r(group, ring);
        int n = group.x_order();
        for (int i = 0; i < n; ++i) r.c[(n - i) % n] = c[i];
        return r;
    }
    std::size_t support_size() const {
        std::size_t k = 0;
        for (auto& v : c) k += !ring.is_zero(v);
        return k;
    }

    void check(const GroupAlgebraElement& o) const {
        if (!(group == o.group)) throw std::invalid_argument("group algebra: group mismatch");
    }
};

template <class R>
GroupAlgebraElement<R> trace_element(const GroupSpec& g, const R& r, const std::vector<GroupElement>& sub) {
    GroupAlgebraElement<R> a(g, r);
    for (auto& h : sub) a.c[g.index(h)] = r.add(a.c[g.index(h)], r.one());
    return a;
}

template <class R>
nlohmann::json to_json(const GroupAlgebraElement<R>& a) {
    nlohmann::json terms = nlohmann::json::array();
    for (int k = 0; k < a.group.order(); ++k) {
        if (a.ring.is_zero(a.c[k])) continue;
        auto h = a.group.element(k);
        terms.push_back({{"x", h.i}, {"y", h.j}, {"coef", a.ring.to_json(a.c[k])}});
    }
    return terms;
}

// S = A[X]/(A Tr_X) for the cyclic subgroup X = <x> of order M = 2^{d-1}, A = Z/2^N,
// in the basis c_i = image of x^{i-1}, 1 <= i <= M - 1.
class SRing {
public:
    using elem = std::vector<std::uint64_t>;
    static constexpr bool is_field = false;

    SRing(int d, const Zmod2N& z) : d_(d), M_(1 << (d - 1)), z_(z) {
        if (d < 2) throw std::invalid_argument("SRing: d >= 2 required");
    }

    int d() const { return d_; }
    int M() const { return M_; }
    int dim() const { return M_ - 1; }
    const Zmod2N& base() const { return z_; }

    elem zero() const { return elem(dim(), 0); }
    elem one() const { return x_pow(0); }
    elem from_int(std::int64_t v) const { return scale(z_.from_int(v), one()); }
    elem basis(int i) const {  // c_i, 1-based
        elem r = zero();
        r[i - 1] = 1;
        return r;
    }
    elem x_pow(long long e) const {
        std::vector<std::uint64_t> full(M_, 0);
        full[((e % M_) + M_) % M_] = 1;
        return project(full);
    }
    // image of a coefficient vector on x^0..x^{M-1}
    elem project(const std::vector<std::uint64_t>& full) const {
        elem r(dim());
        auto top = full[M_ - 1];
        for (int i = 0; i < dim(); ++i) r[i] = z_.sub(full[i], top);
        return r;
    }
    std::vector<std::uint64_t> lift(const elem& a) const {
        std::vector<std::uint64_t> full(M_, 0);
        for (int i = 0; i < dim(); ++i) full[i] = a[i];
        return full;
    }
    template <class R>
    elem project(const GroupAlgebraElement<R>& a) const {
        if (!a.supported_on_x()) throw std::domain_error("s_project: support outside <x>");
        if (a.group.x_order() != M_) throw std::invalid_argument("s_project: order mismatch");
        std::vector<std::uint64_t> full(M_);
        for (int i = 0; i < M_; ++i) full[i] = z_.from_int(static_cast<std::int64_t>(a.c[i]));
        return project(full);
    }

    elem add(const elem& a, const elem& b) const {
        elem r(dim());
        for (int i = 0; i < dim(); ++i) r[i] = z_.add(a[i], b[i]);
        return r;
    }
    elem sub(const elem& a, const elem& b) const {
        elem r(dim());
        for (int i = 0; i < dim(); ++i) r[i] = z_.sub(a[i], b[i]);
        return r;
    }
    elem neg(const elem& a) const { return sub(zero(), a); }
    elem scale(std::uint64_t s, const elem& a) const {
        elem r(dim());
        for (int i = 0; i < dim(); ++i) r[i] = z_.mul(s, a[i]);
        return r;
    }
    elem mul(const elem& a, const elem& b) const {
        auto fa = lift(a), fb = lift(b);
        std::vector<std::uint64_t> full(M_, 0);
        for (int i = 0; i < M_; ++i) {
            if (!fa[i]) continue;
            for (int j = 0; j < M_; ++j) full[(i + j) % M_] += fa[i] * fb[j];
        }
        for (auto& v : full) v &= z_.mask;
        return project(full);
    }
    elem pow(const elem& a, int k) const {
        elem r = one();
        for (int i = 0; i < k; ++i) r = mul(r, a);
        return r;
    }
    elem star(const elem& a) const {
        auto fa = lift(a);
        std::vector<std::uint64_t> full(M_, 0);
        for (int i = 0; i < M_; ++i) full[(M_ - i) % M_] = fa[i];
        return project(full);
    }
    bool is_zero(const elem& a) const {
        for (auto v : a)
            if (v) return false;
        return true;
    }
    bool eq(const elem& a, const elem& b) const { return a == b; }
    // reduce to F2 coefficients
    elem mod2(const elem& a) const {
        elem r(dim());
        for (int i = 0; i < dim(); ++i) r[i] = a[i] & 1;
        return r;
    }

    // Matrix of s -> a s on the c-basis.
    Mat<Zmod2N> mult_matrix(const elem& a) const {
        Mat<Zmod2N> m(z_, dim(), dim());
        for (int j = 0; j < dim(); ++j) {
            auto col = mul(a, basis(j + 1));
            for (int i = 0; i < dim(); ++i) m(i, j) = col[i];
        }
        return m;
    }
    Mat<Zmod2N> star_matrix() const {
        Mat<Zmod2N> m(z_, dim(), dim());
        for (int j = 0; j < dim(); ++j) {
            auto col = star(basis(j + 1));
            for (int i = 0; i < dim(); ++i) m(i, j) = col[i];
        }
        return m;
    }
    std::string name() const { return "S(d=" + std::to_string(d_) + ") over " + z_.name(); }
    nlohmann::json to_json(const elem& a) const { return nlohmann::json(a); }

private:
    int d_;
    int M_;
    Zmod2N z_;
};

}  // namespace endolift
