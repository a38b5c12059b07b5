#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "group_algebra.hpp"
#include "poly.hpp"

namespace endolift {

enum class Branch { Plus, Minus };

inline std::string branch_name(Branch b) { return b == Branch::Plus ? "plus" : "minus"; }

// p_0 = 2, p_1 = t, p_{j+1} = t p_j - p_{j-1}
inline std::vector<IntPoly> p_sequence(int j_max) {
    if (j_max < 1) throw std::invalid_argument("p_sequence: j_max >= 1");
    std::vector<IntPoly> p{IntPoly::constant(2), IntPoly::t()};
    for (int j = 1; j < j_max; ++j) p.push_back(IntPoly::t() * p[j] - p[j - 1]);
    return p;
}

inline IntPoly tau_poly(int d) {
    if (d < 4) throw std::invalid_argument("tau_poly: d >= 4");
    int top = (1 << (d - 2)) - 1;
    auto p = p_sequence(std::max(top, 1));
    IntPoly s;
    for (int j = 0; j <= top; ++j) s = s + p[j];
    return s;
}

// a = 1 + 2^{d-4} t
inline IntPoly a_poly(int d) {
    if (d < 4) throw std::invalid_argument("a_poly: d >= 4");
    return IntPoly{1, std::int64_t{1} << (d - 4)};
}

// t^2 a^2 - 4 (a^2 - (1 - tau))
inline IntPoly discriminant(int d) {
    auto a = a_poly(d);
    auto t = IntPoly::t();
    auto one = IntPoly::constant(1);
    return t * t * a * a - 4 * (a * a - (one - tau_poly(d)));
}

// q_1 = t + 2, q_2 = t, q_{j+1}(t) = q_j(t^2 - 2)
inline std::vector<IntPoly> q_sequence(int j_max) {
    std::vector<IntPoly> q{IntPoly{}, IntPoly{2, 1}, IntPoly::t()};
    auto sub = IntPoly{-2, 0, 1};
    for (int j = 2; j < j_max; ++j) q.push_back(q[j].compose(sub));
    q.resize(j_max + 1);
    return q;
}

inline IntPoly phi_poly(int d) {
    if (d < 4) throw std::invalid_argument("phi_poly: d >= 4");
    auto q = q_sequence(d - 1);
    IntPoly r = IntPoly::constant(1);
    for (int j = 1; j <= d - 1; ++j) r = r * q[j];
    return r;
}

inline bool is_distinguished(const IntPoly& p) {
    if (p.lead() != 1) return false;
    for (int i = 0; i < p.degree(); ++i)
        if (p.coef(i) % 2 != 0) return false;
    return true;
}

// m with Delta = t^2 (1 + 4 m), for d >= 5
inline IntPoly m_poly(int d) {
    if (d < 5) throw std::invalid_argument("m_poly: integral form needs d >= 5");
    auto q = discriminant(d).exact_divide(IntPoly{0, 0, 1});
    return (q - IntPoly::constant(1)).exact_scalar_divide(4);
}

// delta with delta + delta^2 = m, by delta <- m - delta^2; m must lie in the radical (2, t).
inline QuotRing::elem delta_series(const QuotRing& ring, const QuotRing::elem& m) {
    if (m[0] & 1) throw std::domain_error("delta_series: m is not in the radical");
    auto delta = ring.zero();
    int cap = 4 * ring.N() * ring.degree() + 8;
    for (int it = 0; it < cap; ++it) {
        auto next = ring.sub(m, ring.mul(delta, delta));
        if (next == delta) return delta;
        delta = std::move(next);
    }
    throw std::runtime_error("delta_series: iteration did not stabilize");
}

// Binomial route: delta = sum_{j >= 1} (-1)^{j-1} Cat(j-1) m^j, since (1/2 choose j) 4^j = (-1)^{j-1} 2 Cat(j-1).
inline QuotRing::elem delta_binomial(const QuotRing& ring, const QuotRing::elem& m, int terms) {
    const auto& z = ring.base();
    std::vector<std::uint64_t> cat{1};
    for (int j = 1; j < terms; ++j) {
        std::uint64_t c = 0;
        for (int i = 0; i < j; ++i) c += cat[i] * cat[j - 1 - i];
        cat.push_back(c & z.mask);
    }
    auto result = ring.zero();
    auto mp = m;
    for (int j = 1; j <= terms; ++j) {
        auto term = ring.scale(static_cast<std::int64_t>(cat[j - 1]), mp);
        result = (j % 2 == 1) ? ring.add(result, term) : ring.sub(result, term);
        mp = ring.mul(mp, m);
    }
    return result;
}

struct BSolution {
    QuotRing::elem m;
    QuotRing::elem delta;
    QuotRing::elem b;
};

// b solving b^2 + t a b + a^2 = 1 - tau in the local ring (t^M or Phi modulus).
inline BSolution b_solution(const QuotRing& ring, int d, Branch br) {
    if (d < 4) throw std::invalid_argument("b_solution: d >= 4");
    auto t = ring.t();
    BSolution s;
    if (d == 4) {
        // Delta = f^2 (1 + 4m), f = t(1 - t), m = -2 / (1 - t)^2
        auto one_minus_t = ring.sub(ring.one(), t);
        auto inv = ring.inv(one_minus_t);
        s.m = ring.scale(-2, ring.mul(inv, inv));
        s.delta = delta_series(ring, s.m);
        auto f = ring.mul(t, one_minus_t);
        if (br == Branch::Plus) s.b = ring.add(ring.neg(ring.mul(t, t)), ring.mul(f, s.delta));
        else s.b = ring.sub(ring.neg(t), ring.mul(f, s.delta));
        return s;
    }
    s.m = ring.from_poly(m_poly(d));
    s.delta = delta_series(ring, s.m);
    auto h = std::int64_t{1} << (d - 5);
    auto tt = ring.mul(t, t);
    auto td = ring.mul(t, s.delta);
    if (br == Branch::Plus) s.b = ring.add(ring.scale(-h, tt), td);
    else s.b = ring.sub(ring.sub(ring.neg(t), ring.scale(h, tt)), td);
    return s;
}

// b^2 + t a b + a^2 - (1 - tau)
inline QuotRing::elem crucial_residual(const QuotRing& ring, int d, const QuotRing::elem& b) {
    auto t = ring.t();
    auto a = ring.from_poly(a_poly(d));
    auto lhs = ring.add(ring.add(ring.mul(b, b), ring.mul(ring.mul(t, a), b)), ring.mul(a, a));
    auto rhs = ring.from_poly(IntPoly::constant(1) - tau_poly(d));
    return ring.sub(lhs, rhs);
}

struct VietaCheck {
    bool sum_ok = false;
    bool product_ok = false;
};

// b_plus + b_minus = -t a and b_plus b_minus = a^2 - (1 - tau) modulo (2^N, Phi)
inline VietaCheck branch_vieta(int d, int N) {
    auto ring = QuotRing::modulo(N, phi_poly(d));
    auto bp = b_solution(ring, d, Branch::Plus).b;
    auto bm = b_solution(ring, d, Branch::Minus).b;
    auto a = ring.from_poly(a_poly(d));
    auto sum = ring.neg(ring.mul(ring.t(), a));
    auto prod = ring.sub(ring.mul(a, a), ring.from_poly(IntPoly::constant(1) - tau_poly(d)));
    return {ring.eq(ring.add(bp, bm), sum), ring.eq(ring.mul(bp, bm), prod)};
}

// pi(t) = x + x^{-1}
inline SRing::elem pi_map(const SRing& S, const std::vector<std::uint64_t>& coeffs) {
    auto u = S.add(S.x_pow(1), S.x_pow(-1));
    auto r = S.zero();
    auto pw = S.one();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        r = S.add(r, S.scale(coeffs[i] & S.base().mask, pw));
        pw = S.mul(pw, u);
    }
    return r;
}

inline SRing::elem pi_map(const SRing& S, const IntPoly& p) {
    std::vector<std::uint64_t> c;
    for (int i = 0; i <= p.degree(); ++i) c.push_back(S.base().from_int(p.coef(i)));
    return pi_map(S, c);
}

struct LiftCertificate {
    int d = 0;
    int N = 0;
    Branch branch = Branch::Plus;
    IntPoly tau, delta_poly_int, phi;
    std::vector<std::uint64_t> m, delta, b;  // coefficients mod (2^N, Phi)
    SRing::elem beta;
    SRing::elem gamma;
    std::map<std::string, bool> checks;

    bool all_pass() const {
        for (auto& [k, v] : checks)
            if (!v) return false;
        return true;
    }
    nlohmann::json to_json() const {
        nlohmann::json c;
        for (auto& [k, v] : checks) c[k] = v;
        return {{"d", d},
                {"N", N},
                {"branch", branch_name(branch)},
                {"tau", tau.coeffs()},
                {"Delta", delta_poly_int.coeffs()},
                {"phi", phi.coeffs()},
                {"m_coeffs_mod_phi", m},
                {"delta_coeffs_mod_phi", delta},
                {"b_coeffs_mod_phi", b},
                {"beta_c_basis", beta},
                {"checks", c}};
    }
};

inline LiftCertificate beta_element(int d, Branch br, int N) {
    LiftCertificate c;
    c.d = d;
    c.N = N;
    c.branch = br;
    c.tau = tau_poly(d);
    c.delta_poly_int = discriminant(d);
    c.phi = phi_poly(d);
    auto ring = QuotRing::modulo(N, c.phi);
    auto sol = b_solution(ring, d, br);
    c.m = sol.m;
    c.delta = sol.delta;
    c.b = sol.b;
    Zmod2N z(N);
    SRing S(d, z);
    auto zel = S.x_pow(S.M() / 2);
    auto pa = pi_map(S, a_poly(d));
    auto pb = pi_map(S, sol.b);
    c.beta = S.add(pa, S.mul(S.x_pow(1), pb));
    c.checks["crucial_identity"] = ring.is_zero(crucial_residual(ring, d, sol.b));
    c.checks["delta_identity"] = ring.eq(ring.add(sol.delta, ring.mul(sol.delta, sol.delta)), sol.m);
    c.checks["phi_distinguished"] = is_distinguished(c.phi) && c.phi.degree() == (1 << (d - 2));
    c.checks["pi_phi_zero"] = S.is_zero(pi_map(S, c.phi));
    c.checks["pi_one_minus_tau_is_z"] = S.eq(pi_map(S, IntPoly::constant(1) - c.tau), zel);
    c.checks["pi_b_star_invariant"] = S.eq(S.star(pb), pb);
    c.checks["beta_beta_star_is_z"] = S.eq(S.mul(c.beta, S.star(c.beta)), zel);
    SRing S2(d, Zmod2N(1));
    c.gamma = S.mod2(c.beta);
    c.checks["gamma_gamma_star_is_z_mod2"] = S2.eq(S2.mul(c.gamma, S2.star(c.gamma)), S2.x_pow(S2.M() / 2));
    return c;
}

// u = 1 + 2v with v + v^2 = r, so u^2 = 1 + 4r; r must be nilpotent modulo 2.
inline SRing::elem sqrt_unit(const SRing& S, const SRing::elem& r) {
    auto v = S.zero();
    int cap = 4 * S.base().N * S.dim() + 8;
    for (int it = 0; it < cap; ++it) {
        auto next = S.sub(r, S.mul(v, v));
        if (next == v) return S.add(S.one(), S.scale(2, v));
        v = std::move(next);
    }
    throw std::runtime_error("sqrt_unit: iteration did not stabilize");
}

// (1/3)(-1 - 2x - x^2 + x^3 + 2x^4 + x^5 - x^6 - 2x^7) in S for d = 4
inline SRing::elem u1_element(const SRing& S) {
    if (S.d() != 4) throw std::invalid_argument("u1_element: d = 4 only");
    const std::int64_t c[8] = {-1, -2, -1, 1, 2, 1, -1, -2};
    auto inv3 = S.base().inv(3);
    auto r = S.zero();
    for (int i = 0; i < 8; ++i) r = S.add(r, S.scale(S.base().mul(S.base().from_int(c[i]), inv3), S.x_pow(i)));
    return r;
}

}  // namespace endolift
