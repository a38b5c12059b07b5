#include <catch_amalgamated.hpp>

#include <endolift/quaternion_lift.hpp>

#include <random>

using namespace endolift;

TEST_CASE("Chebyshev-type sequence and tau", "[quaternion_lift]") {
    auto p = p_sequence(3);
    CHECK(p[0] == IntPoly::constant(2));
    CHECK(p[1] == IntPoly::t());
    CHECK(p[2] == (IntPoly{-2, 0, 1}));
    CHECK(p[3] == (IntPoly{0, -3, 0, 1}));
    CHECK(tau_poly(4) == (IntPoly{0, -2, 1, 1}));
    CHECK(tau_poly(4).eval(0) == 0);
    for (int d : {4, 5, 6}) {
        std::int64_t c = std::int64_t{1} << (d - 3);
        CHECK(tau_poly(d).truncate(3) == (IntPoly{0, -c, c * (c - 1) / 2}));
    }
}

TEST_CASE("discriminant and the distinguished polynomial", "[quaternion_lift]") {
    CHECK(discriminant(4) == (IntPoly{0, 0, -7, -2, 1}));
    auto t = IntPoly::t();
    auto one = IntPoly::constant(1);
    CHECK(discriminant(4) == t * t * ((one - t) * (one - t) - IntPoly::constant(8)));
    for (int d : {4, 5, 6}) CHECK(discriminant(d).eval(0) == 0);
    auto q = q_sequence(3);
    CHECK(q[3] == (IntPoly{-2, 0, 1}));
    CHECK(phi_poly(4) == (IntPoly{0, -4, -2, 2, 1}));
    CHECK(phi_poly(4) == t * (t + IntPoly::constant(2)) * (t * t - IntPoly::constant(2)));
    CHECK(phi_poly(5).degree() == 8);
    for (int d : {4, 5, 6}) CHECK(is_distinguished(phi_poly(d)));
    CHECK_FALSE(is_distinguished(IntPoly{1, 1}));
    CHECK(discriminant(5) == IntPoly{0, 0, 1} * (IntPoly::constant(1) + 4 * m_poly(5)));
}

TEST_CASE("delta solves delta + delta^2 = m", "[quaternion_lift]") {
    auto tr = QuotRing::truncated(16, 5);
    CHECK(tr.is_zero(delta_series(tr, tr.zero())));
    // m = t: delta = sum (-1)^{j-1} Cat(j-1) t^j = t - t^2 + 2t^3 - 5t^4
    auto dl = delta_series(tr, tr.t());
    CHECK(tr.eq(dl, tr.from_poly(IntPoly{0, 1, -1, 2, -5})));
    CHECK(tr.eq(delta_binomial(tr, tr.t(), 8), dl));
    CHECK_THROWS(delta_series(tr, tr.one()));
    auto q = QuotRing::modulo(16, phi_poly(5));
    auto m = q.from_poly(m_poly(5));
    auto d5 = delta_series(q, m);
    CHECK(q.eq(q.add(d5, q.mul(d5, d5)), m));
}

TEST_CASE("both branches solve the quadratic", "[quaternion_lift]") {
    for (int d : {4, 5}) {
        auto ring = QuotRing::modulo(16, phi_poly(d));
        for (auto br : {Branch::Plus, Branch::Minus}) {
            auto s = b_solution(ring, d, br);
            CHECK(ring.is_zero(crucial_residual(ring, d, s.b)));
        }
        auto v = branch_vieta(d, 16);
        CHECK(v.sum_ok);
        CHECK(v.product_ok);
    }
}

TEST_CASE("pi map into S", "[quaternion_lift]") {
    for (int d : {4, 5}) {
        SRing S(d, Zmod2N(16));
        auto p = p_sequence(2);
        CHECK(S.eq(pi_map(S, p[2]), S.add(S.x_pow(2), S.x_pow(-2))));
        CHECK(S.eq(pi_map(S, IntPoly::constant(1) - tau_poly(d)), S.x_pow(1 << (d - 2))));
        CHECK(S.is_zero(pi_map(S, phi_poly(d))));
    }
}

TEST_CASE("beta certificates", "[quaternion_lift]") {
    for (int d : {4, 5})
        for (int N : {4, 8, 16})
            for (auto br : {Branch::Plus, Branch::Minus}) {
                auto c = beta_element(d, br, N);
                INFO("d=" << d << " N=" << N << " " << branch_name(br));
                for (auto& [name, ok] : c.checks) {
                    INFO(name);
                    CHECK(ok);
                }
                SRing S(d, Zmod2N(N));
                CHECK(S.eq(S.mul(c.beta, S.star(c.beta)), S.x_pow(S.M() / 2)));
                auto j = c.to_json();
                CHECK(j["branch"] == branch_name(br));
                CHECK(j.contains("beta_c_basis"));
            }
}

TEST_CASE("beta is stable under change of precision", "[quaternion_lift]") {
    for (int d : {4, 5})
        for (auto br : {Branch::Plus, Branch::Minus}) {
            auto hi = beta_element(d, br, 16), lo = beta_element(d, br, 8);
            for (std::size_t i = 0; i < hi.beta.size(); ++i) CHECK((hi.beta[i] & 0xff) == lo.beta[i]);
            for (std::size_t i = 0; i < hi.b.size(); ++i) CHECK((hi.b[i] & 0xff) == lo.b[i]);
        }
}

TEST_CASE("square roots of 1 + 4r", "[quaternion_lift]") {
    SRing S(5, Zmod2N(16));
    CHECK(S.eq(sqrt_unit(S, S.zero()), S.one()));
    std::mt19937_64 rng(29);
    auto one_minus_x = S.sub(S.one(), S.x_pow(1));
    for (int k = 0; k < 20; ++k) {
        SRing::elem a(S.dim());
        for (auto& c : a) c = S.base().from_int(static_cast<std::int64_t>(rng()));
        auto r = S.mul(one_minus_x, a);
        auto u = sqrt_unit(S, r);
        CHECK(S.eq(S.mul(u, u), S.add(S.one(), S.scale(4, r))));
    }
    SRing S4(4, Zmod2N(16));
    auto e = S4.sub(S4.sub(S4.one(), S4.x_pow(1)), S4.x_pow(-1));
    CHECK(S4.eq(S4.mul(u1_element(S4), e), S4.one()));
}
