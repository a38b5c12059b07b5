#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "rings.hpp"

namespace endolift {

namespace detail {
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("IntPoly: coefficient overflow");
    return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("IntPoly: coefficient overflow");
    return r;
}
}  // namespace detail

// Polynomial in Z[t]; c[i] is the coefficient of t^i. Zero has degree -1.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<std::int64_t> c) : c_(c) { trim(); }
    explicit IntPoly(std::vector<std::int64_t> c) : c_(std::move(c)) { trim(); }

    static IntPoly constant(std::int64_t v) { return IntPoly(std::vector<std::int64_t>{v}); }
    static IntPoly t() { return IntPoly{0, 1}; }
    static IntPoly monomial(std::int64_t coef, int deg) {
        std::vector<std::int64_t> c(deg + 1, 0);
        c[deg] = coef;
        return IntPoly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::int64_t coef(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0; }
    std::int64_t lead() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<std::int64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = detail::checked_add(a.coef(int(i)), b.coef(int(i)));
        return IntPoly(std::move(r));
    }
    friend IntPoly operator-(const IntPoly& a) {
        std::vector<std::int64_t> r(a.c_);
        for (auto& x : r) x = -x;
        return IntPoly(std::move(r));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<std::int64_t> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = detail::checked_add(r[i + j], detail::checked_mul(a.c_[i], b.c_[j]));
        return IntPoly(std::move(r));
    }
    friend IntPoly operator*(std::int64_t s, const IntPoly& a) { return IntPoly::constant(s) * a; }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    IntPoly pow(int k) const {
        IntPoly r = constant(1);
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }
    // p(q(t))
    IntPoly compose(const IntPoly& q) const {
        IntPoly r;
        for (int i = degree(); i >= 0; --i) r = r * q + constant(c_[i]);
        return r;
    }
    std::int64_t eval(std::int64_t x) const {
        std::int64_t r = 0;
        for (int i = degree(); i >= 0; --i) r = detail::checked_add(detail::checked_mul(r, x), c_[i]);
        return r;
    }
    IntPoly truncate(int m) const {
        std::vector<std::int64_t> r(c_.begin(), c_.begin() + std::min<std::size_t>(c_.size(), std::size_t(m)));
        return IntPoly(std::move(r));
    }
    // Exact quotient in Z[t]; throws when b does not divide *this.
    IntPoly exact_divide(const IntPoly& b) const {
        if (b.is_zero()) throw std::domain_error("IntPoly: division by zero");
        std::vector<std::int64_t> rem(c_);
        int db = b.degree();
        if (degree() < db) {
            if (is_zero()) return {};
            throw std::domain_error("IntPoly: inexact division");
        }
        std::vector<std::int64_t> q(degree() - db + 1, 0);
        for (int k = degree() - db; k >= 0; --k) {
            std::int64_t top = rem[k + db];
            if (top % b.lead() != 0) throw std::domain_error("IntPoly: inexact division");
            std::int64_t qk = top / b.lead();
            q[k] = qk;
            for (int i = 0; i <= db; ++i) rem[k + i] = detail::checked_add(rem[k + i], -detail::checked_mul(qk, b.c_[i]));
        }
        for (auto x : rem)
            if (x != 0) throw std::domain_error("IntPoly: inexact division");
        return IntPoly(std::move(q));
    }
    // Divide every coefficient by s; throws unless exact.
    IntPoly exact_scalar_divide(std::int64_t s) const {
        std::vector<std::int64_t> r(c_);
        for (auto& x : r) {
            if (x % s != 0) throw std::domain_error("IntPoly: inexact scalar division");
            x /= s;
        }
        return IntPoly(std::move(r));
    }
    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            auto v = c_[i];
            if (v == 0) continue;
            if (!s.empty()) s += v < 0 ? " - " : " + ";
            else if (v < 0) s += "-";
            auto a = v < 0 ? -v : v;
            if (a != 1 || i == 0) s += std::to_string(a);
            if (i >= 1) s += "t";
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<std::int64_t> c_;
};

// (Z/2^N)[t] / (modulus), where the modulus is t^M or a monic polynomial Phi.
class QuotRing {
public:
    using elem = std::vector<std::uint64_t>;
    static constexpr bool is_field = false;

    static QuotRing truncated(int N, int M) {
        if (M < 1) throw std::invalid_argument("QuotRing: M must be positive");
        QuotRing r;
        r.z_ = Zmod2N(N);
        r.deg_ = M;
        r.red_.assign(M, 0);
        r.modulus_ = IntPoly::monomial(1, M);
        return r;
    }
    static QuotRing modulo(int N, const IntPoly& phi) {
        if (phi.degree() < 1 || phi.lead() != 1) throw std::invalid_argument("QuotRing: modulus must be monic of positive degree");
        QuotRing r;
        r.z_ = Zmod2N(N);
        r.deg_ = phi.degree();
        r.red_.resize(r.deg_);
        for (int i = 0; i < r.deg_; ++i) r.red_[i] = r.z_.from_int(phi.coef(i));
        r.modulus_ = phi;
        return r;
    }

    const Zmod2N& base() const { return z_; }
    int N() const { return z_.N; }
    int degree() const { return deg_; }
    const IntPoly& modulus() const { return modulus_; }
    // modulus congruent to t^deg modulo 2
    bool is_local() const {
        for (auto c : red_)
            if (c & 1) return false;
        return true;
    }

    elem zero() const { return elem(deg_, 0); }
    elem one() const { return from_int(1); }
    elem t() const { return from_poly(IntPoly::t()); }
    elem from_int(std::int64_t v) const {
        elem r = zero();
        r[0] = z_.from_int(v);
        return r;
    }
    elem from_poly(const IntPoly& p) const {
        std::vector<std::uint64_t> c(std::max(p.degree() + 1, deg_), 0);
        for (int i = 0; i <= p.degree(); ++i) c[i] = z_.from_int(p.coef(i));
        return reduce(std::move(c));
    }
    elem add(const elem& a, const elem& b) const {
        elem r(deg_);
        for (int i = 0; i < deg_; ++i) r[i] = z_.add(a[i], b[i]);
        return r;
    }
    elem sub(const elem& a, const elem& b) const {
        elem r(deg_);
        for (int i = 0; i < deg_; ++i) r[i] = z_.sub(a[i], b[i]);
        return r;
    }
    elem neg(const elem& a) const {
        elem r(deg_);
        for (int i = 0; i < deg_; ++i) r[i] = z_.neg(a[i]);
        return r;
    }
    elem scale(std::int64_t s, const elem& a) const {
        elem r(deg_);
        auto sv = z_.from_int(s);
        for (int i = 0; i < deg_; ++i) r[i] = z_.mul(sv, a[i]);
        return r;
    }
    elem mul(const elem& a, const elem& b) const {
        std::vector<std::uint64_t> c(2 * deg_ - 1, 0);
        for (int i = 0; i < deg_; ++i) {
            if (!a[i]) continue;
            for (int j = 0; j < deg_; ++j) c[i + j] += a[i] * b[j];
        }
        for (auto& x : c) x &= z_.mask;
        return reduce(std::move(c));
    }
    elem pow(const elem& a, int k) const {
        elem r = one();
        for (int i = 0; i < k; ++i) r = mul(r, a);
        return r;
    }
    bool is_zero(const elem& a) const {
        for (auto x : a)
            if (x) return false;
        return true;
    }
    bool eq(const elem& a, const elem& b) const { return a == b; }
    bool is_unit(const elem& a) const {
        if (!is_local()) throw std::domain_error("QuotRing: unit test needs a distinguished modulus");
        return a[0] & 1;
    }
    // Newton iteration v <- v (2 - u v); the ring is local so this converges.
    elem inv(const elem& u) const {
        if (!is_unit(u)) throw std::domain_error("QuotRing: inverse of non-unit");
        elem v = from_int(static_cast<std::int64_t>(z_.inv(u[0])));
        auto two = from_int(2);
        for (int it = 0; it < 4 * (N() + deg_) + 8; ++it) {
            auto nv = mul(v, sub(two, mul(u, v)));
            if (nv == v) break;
            v = std::move(nv);
        }
        if (!eq(mul(u, v), one())) throw std::runtime_error("QuotRing: inverse iteration failed");
        return v;
    }
    std::vector<std::int64_t> to_ints(const elem& a) const { return {a.begin(), a.end()}; }
    std::string name() const { return "Z/2^" + std::to_string(N()) + "[t]/(" + modulus_.str() + ")"; }
    nlohmann::json to_json(const elem& a) const { return nlohmann::json(a); }

private:
    elem reduce(std::vector<std::uint64_t> c) const {
        for (int k = static_cast<int>(c.size()) - 1; k >= deg_; --k) {
            auto top = c[k];
            if (!top) continue;
            for (int i = 0; i < deg_; ++i) c[k - deg_ + i] = z_.sub(c[k - deg_ + i], z_.mul(top, red_[i]));
            c[k] = 0;
        }
        c.resize(deg_);
        return c;
    }

    Zmod2N z_;
    int deg_ = 1;
    std::vector<std::uint64_t> red_;
    IntPoly modulus_;
};

}  // namespace endolift
