#include <catch_amalgamated.hpp>

#include <endolift/quaternion_lift.hpp>
#include <endolift/repmod.hpp>

#include <random>

using namespace endolift;

namespace {

MatrixRep<GF2> L_sd(int d) { return reduce_rep(module_L_SD(d, Zmod2N(16))); }

MatrixRep<GF2> L_gq(int d, Branch br = Branch::Plus) {
    return reduce_rep(module_L_GQ(d, Zmod2N(16), beta_element(d, br, 16).beta));
}

template <class F>
MatrixRep<F> conjugate(const MatrixRep<F>& v, const Mat<F>& P) {
    auto Pi = *inverse(P);
    MatrixRep<F> r = v;
    for (auto& g : r.gens) g = P * g * Pi;
    return r;
}

template <class F>
Mat<F> random_invertible(const F& f, int n, std::mt19937_64& rng) {
    while (true) {
        Mat<F> P(f, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) P(i, j) = static_cast<typename F::elem>(rng() % F::q);
        if (rank(P) == n) return P;
    }
}

}  // namespace

TEST_CASE("explicit representations satisfy the relations", "[repmod]") {
    CHECK(check_relations(trivial_rep(GroupSpec::sd(4), GF2{})));
    CHECK(check_relations(module_L_Q8(GF4{})));
    auto LW = module_L_Q8(ZmodOmega(16));
    CHECK(check_relations(LW));
    auto r = reduce_rep(LW);
    auto L = module_L_Q8(GF4{});
    CHECK(r.gens[0] == L.gens[0]);
    CHECK(r.gens[1] == L.gens[1]);
    CHECK(LW.gens[0].pow(4) == Mat<ZmodOmega>::identity(LW.ring, 3));
    for (int d : {4, 5}) {
        CHECK(check_relations(module_L_SD(d, Zmod2N(16))));
        CHECK(check_relations(regular_rep(GroupSpec::gq(d), GF2{})));
    }
    // a corrupted generator is rejected
    auto bad = L;
    bad.gens[1](2, 1) = 0;
    CHECK_FALSE(check_relations(bad));
}

TEST_CASE("the permutation module Y and L = rad Y", "[repmod]") {
    auto Y = permutation_Y(4, GF2{});
    CHECK(Y.n == 8);
    CHECK(Y.x().pow(8) == Mat<GF2>::identity(GF2{}, 8));
    CHECK(Y.x().pow(4) != Mat<GF2>::identity(GF2{}, 8));
    for (auto& m : Y.gens)
        for (int j = 0; j < 8; ++j) {
            int s = 0;
            for (int i = 0; i < 8; ++i) s += m(i, j);
            CHECK(s == 1);
        }
    auto L = module_L_SD(4, Zmod2N(16));
    CHECK(L.n == 7);
    // y c_1 = c_1 + c_2 + c_3
    for (int i = 0; i < 7; ++i) CHECK(L.y()(i, 0) == (i < 3 ? 1u : 0u));
}

TEST_CASE("generalized quaternion module: y^2 acts as z", "[repmod]") {
    for (int d : {4, 5}) {
        auto beta = beta_element(d, Branch::Plus, 16).beta;
        auto L = module_L_GQ(d, Zmod2N(16), beta);
        CHECK(L.n == (1 << (d - 1)) - 1);
        CHECK(L.y() * L.y() == L.x().pow(1 << (d - 2)));
        CHECK(check_relations(L));
    }
    SRing S(4, Zmod2N(16));
    CHECK_THROWS(module_L_GQ(4, Zmod2N(16), S.one()));
}

TEST_CASE("duals, tensors, Hom", "[repmod]") {
    auto g = GroupSpec::sd(4);
    GF2 f;
    auto k = trivial_rep(g, f);
    auto L = L_sd(4);
    CHECK(dual(k).gens == k.gens);
    auto T = tensor(dual(L), L);
    CHECK(T.n == 49);
    CHECK(check_relations(T));
    CHECK(hom_space(k, k).size() == 1);
    CHECK(hom_space(k, regular_rep(g, f)).size() == 1);
    CHECK(hom_space(L_gq(4), L_gq(4)).size() == 4);
    CHECK(free_rank(regular_rep(g, f)) == 1);
    CHECK(free_rank(k) == 0);
    CHECK(free_rank(T) == 3);
}

TEST_CASE("strip_free and endo-triviality", "[repmod]") {
    auto g = GroupSpec::sd(4);
    GF2 f;
    CHECK(strip_free(regular_rep(g, f)).core.n == 0);
    auto s = strip_free(tensor(dual(L_sd(4)), L_sd(4)));
    CHECK(s.core.n == 1);
    CHECK(s.free_rank == 3);
    CHECK(is_trivial_module(s.core));
    CHECK(endo_trivial_check(trivial_rep(g, f)));
    CHECK(endo_trivial_check(L_sd(4)));
    CHECK_FALSE(endo_trivial_check(regular_rep(g, f)));
    CHECK_FALSE(endo_trivial_check(direct_sum(trivial_rep(g, f), trivial_rep(g, f))));
    CHECK_FALSE(endo_trivial_check(permutation_Y(4, f)));
}

TEST_CASE("isomorphism tests against conjugated copies", "[repmod]") {
    std::mt19937_64 rng(23);
    std::vector<MatrixRep<GF2>> reps{L_sd(4), L_gq(4), augmentation_ideal(GroupSpec::sd(4), GF2{}),
                                     permutation_Y(4, GF2{}), L_sd(5)};
    for (auto& v : reps) {
        CHECK(is_isomorphic(v, v).status == IsoStatus::Isomorphic);
        auto w = conjugate(v, random_invertible(GF2{}, v.n, rng));
        auto r = is_isomorphic(v, w);
        REQUIRE(r.status == IsoStatus::Isomorphic);
        REQUIRE(r.witness);
        auto P = *r.witness;
        for (std::size_t k = 0; k < v.gens.size(); ++k) CHECK(P * v.gens[k] == w.gens[k] * P);
    }
    auto L = module_L_Q8(GF4{});
    auto w = conjugate(L, random_invertible(GF4{}, 3, rng));
    CHECK(is_isomorphic(L, w).status == IsoStatus::Isomorphic);
    CHECK(is_isomorphic(L, dual(L)).status != IsoStatus::Undecided);
    CHECK(is_isomorphic(L_sd(4), augmentation_ideal(GroupSpec::sd(4), GF2{})).status == IsoStatus::NotIsomorphic);
    // 1-dimensional modules over a 2-group are trivial
    MatrixRep<GF2> one_dim{GroupSpec::sd(4), GF2{}, 1, {Mat<GF2>::identity(GF2{}, 1), Mat<GF2>::identity(GF2{}, 1)}};
    CHECK(is_isomorphic(one_dim, trivial_rep(GroupSpec::sd(4), GF2{})).status == IsoStatus::Isomorphic);
}

TEST_CASE("stable Hom", "[repmod]") {
    auto g = GroupSpec::sd(4);
    GF2 f;
    CHECK(stable_hom_dim(L_sd(4), L_sd(4)) == 1);
    CHECK(stable_hom_dim(trivial_rep(g, f), trivial_rep(g, f)) == 1);
    CHECK(stable_hom_dim(regular_rep(g, f), L_sd(4)) == 0);
    CHECK(stable_hom_dim(regular_rep(g, f), trivial_rep(g, f)) == 0);
}

TEST_CASE("restriction and classification", "[repmod]") {
    auto g = GroupSpec::sd(4);
    auto L = L_sd(4);
    auto rE = restrict_rep(L, {g.y(), g.z()});
    CHECK(rE.n == 7);
    CHECK(rE.group.family == Family::KleinFour);
    auto cE = classify_syzygy_of_trivial(rE);
    REQUIRE(cE.epsilon);
    CHECK(*cE.epsilon == -1);
    CHECK(cE.free_summands == 1);
    CHECK(cE.core_dim == 3);
    auto cH = classify_syzygy_of_trivial(restrict_rep(L, {g.x_pow(2), g.mul(g.y(), g.x())}));
    REQUIRE(cH.epsilon);
    CHECK(*cH.epsilon == 1);
    CHECK(cH.free_summands == 0);
    auto gq = GroupSpec::gq(4);
    auto rH = restrict_rep(L_gq(4), {gq.mul(gq.y(), gq.x()), gq.x_pow(2)});
    CHECK(rH.n == 7);
    CHECK(rH.group.family == Family::Quaternion8);
    auto creg = classify_syzygy_of_trivial(regular_rep(GroupSpec::klein_four(), GF2{}));
    CHECK_FALSE(creg.epsilon);
    CHECK(creg.label() == "none");
    CHECK(creg.free_summands == 1);
    auto ck = classify_syzygy_of_trivial(trivial_rep(GroupSpec::q8(), GF2{}));
    REQUIRE(ck.epsilon);
    CHECK(*ck.epsilon == 0);
}
