#include <catch_amalgamated.hpp>

#include <endolift/linalg.hpp>
#include <endolift/poly.hpp>
#include <endolift/rings.hpp>

#include <random>

using namespace endolift;

TEST_CASE("F2 and F4 field axioms", "[rings]") {
    GF4 f;
    auto w = f.omega();
    CHECK(f.add(f.add(f.mul(w, w), w), f.one()) == 0);
    for (int a = 1; a < 4; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    GF2 g;
    CHECK(g.add(1, 1) == 0);
    CHECK(g.inv(1) == 1);
}

TEST_CASE("Z/2^N arithmetic and inverses", "[rings]") {
    Zmod2N z(4);
    CHECK(z.inv(3) == 11);
    CHECK(z.neg(1) == 15);
    CHECK(z.val(8) == 3);
    CHECK(z.val(0) == 4);
    CHECK_THROWS(z.inv(2));
    Zmod2N big(62);
    std::mt19937_64 rng(7);
    for (int k = 0; k < 200; ++k) {
        auto a = big.from_int(static_cast<std::int64_t>(rng() | 1));
        CHECK(big.mul(a, big.inv(a)) == 1);
    }
}

TEST_CASE("reduction commutes with arithmetic", "[rings]") {
    Zmod2N hi(16), lo(8);
    std::mt19937_64 rng(11);
    for (int k = 0; k < 500; ++k) {
        auto a = hi.from_int(static_cast<std::int64_t>(rng())), b = hi.from_int(static_cast<std::int64_t>(rng()));
        CHECK((hi.mul(a, b) & lo.mask) == lo.mul(a & lo.mask, b & lo.mask));
        CHECK((hi.add(a, b) & lo.mask) == lo.add(a & lo.mask, b & lo.mask));
    }
}

TEST_CASE("Z/2^N[w] has a primitive cube root of unity", "[rings]") {
    ZmodOmega r(16);
    auto w = r.omega();
    auto w2 = r.mul(w, w);
    CHECK(r.is_zero(r.add(r.add(w2, w), r.one())));
    CHECK(r.eq(r.mul(w2, w), r.one()));
    CHECK(r.eq(r.mul(w, r.inv(w)), r.one()));
    CHECK(r.reduce(w) == GF4{}.omega());
}

TEST_CASE("matrix basics", "[rings]") {
    GF2 f;
    auto A = Mat<GF2>::from_ints(f, 2, 2, {1, 1, 0, 1});
    CHECK(A * A == Mat<GF2>::identity(f, 2));
    CHECK(Mat<GF2>::identity(f, 2) * A == A);
    // x acting on the Q8 module L: (1 0 0 / 1 1 0 / 0 1 1) has order 4
    GF4 g;
    auto X = Mat<GF4>::from_ints(g, 3, 3, {1, 0, 0, 1, 1, 0, 0, 1, 1});
    CHECK(X.pow(4) == Mat<GF4>::identity(g, 3));
    CHECK(X.pow(2) != Mat<GF4>::identity(g, 3));
}

TEST_CASE("rank and kernel", "[rings]") {
    GF2 f;
    Mat<GF2> Z(f, 4, 4);
    CHECK(rank(Z) == 0);
    CHECK(kernel(Z).cols == 4);
    auto J = Mat<GF2>::from_ints(f, 2, 2, {1, 1, 1, 1});
    CHECK(rank(J) == 1);
    auto K = kernel(J);
    REQUIRE(K.cols == 1);
    CHECK(K(0, 0) == 1);
    CHECK(K(1, 0) == 1);
    // norm map of the regular C4 representation: all-ones matrix, rank 1
    auto T = Mat<GF2>::from_ints(f, 4, 4, std::vector<long long>(16, 1));
    CHECK(rank(T) == 1);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 50; ++k) {
        int r = 1 + int(rng() % 7), c = 1 + int(rng() % 7);
        Mat<GF2> M(f, r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) M(i, j) = rng() & 1;
        auto ker = kernel(M);
        CHECK(rank(M) + ker.cols == c);
        CHECK((M * ker).is_zero());
    }
}

TEST_CASE("Smith form over Z/2^N", "[rings]") {
    Zmod2N z(4);
    auto check_factorization = [&](const Mat<Zmod2N>& a) {
        auto s = smith_form(a);
        CHECK(s.U * s.D * s.V == a);
        CHECK(z.is_unit(det_local(s.U)));
        CHECK(z.is_unit(det_local(s.V)));
        return s;
    };
    auto s1 = check_factorization(Mat<Zmod2N>::from_ints(z, 2, 2, {1, 0, 0, 2}));
    CHECK(s1.exponents == std::vector<int>{0, 1});
    auto s2 = check_factorization(Mat<Zmod2N>::from_ints(z, 2, 2, {2, 2, 2, 2}));
    CHECK(s2.exponents == std::vector<int>{1, 4});
    CHECK(s2.D(0, 0) == 2);
    CHECK(s2.D(1, 1) == 0);
    auto s3 = check_factorization(Mat<Zmod2N>::from_ints(z, 1, 8, std::vector<long long>(8, 1)));
    CHECK(s3.exponents == std::vector<int>{0});
    CHECK(s3.D(0, 0) == 1);
    std::mt19937_64 rng(5);
    for (int k = 0; k < 30; ++k) {
        Mat<Zmod2N> M(z, 3, 4);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 4; ++j) M(i, j) = z.from_int(static_cast<std::int64_t>(rng()));
        check_factorization(M);
    }
}

TEST_CASE("integer polynomials", "[rings]") {
    auto sub = IntPoly{-2, 0, 1};
    CHECK(sub.compose(sub) == (IntPoly{2, 0, -4, 0, 1}));
    CHECK((IntPoly{0, 0, 1, 1}).exact_divide(IntPoly{0, 0, 1}) == (IntPoly{1, 1}));
    auto phi4 = IntPoly{0, -4, -2, 2, 1};
    CHECK(phi4.eval(1) == -3);
}

TEST_CASE("local quotient rings", "[rings]") {
    auto tr = QuotRing::truncated(4, 3);
    CHECK(tr.eq(tr.inv(tr.one()), tr.one()));
    CHECK(tr.eq(tr.inv(tr.sub(tr.one(), tr.t())), tr.from_poly(IntPoly{1, 1, 1})));
    auto q = QuotRing::modulo(4, IntPoly{0, -4, -2, 2, 1});
    CHECK(q.eq(q.inv(q.from_int(3)), q.from_int(11)));
    auto u = q.sub(q.one(), q.t());
    CHECK(q.eq(q.mul(q.inv(u), u), q.one()));
    CHECK_THROWS(q.inv(q.t()));
}
