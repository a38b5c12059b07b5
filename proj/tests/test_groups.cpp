#include <catch_amalgamated.hpp>

#include <endolift/group.hpp>

using namespace endolift;

namespace {

std::vector<GroupSpec> all_groups() {
    return {GroupSpec::sd(4), GroupSpec::sd(5), GroupSpec::gq(4), GroupSpec::gq(5), GroupSpec::q8(),
            GroupSpec::cyclic(3), GroupSpec::klein_four()};
}

int count_involutions(const GroupSpec& g) {
    int c = 0;
    for (auto& h : g.elements()) c += g.element_order(h) == 2;
    return c;
}

}  // namespace

TEST_CASE("presentations define groups of order 2^d", "[groups]") {
    for (auto& g : all_groups()) {
        INFO(g.name());
        CHECK(g.relations_hold());
        auto el = g.elements();
        CHECK(static_cast<int>(el.size()) == g.order());
        // brute-force associativity and inverses
        for (auto& a : el) {
            CHECK(g.mul(a, g.inverse(a)) == g.identity());
            CHECK(g.mul(g.identity(), a) == a);
            for (auto& b : el)
                for (auto& c : el) REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
        }
    }
}

TEST_CASE("multiplication rules", "[groups]") {
    auto sd = GroupSpec::sd(4);
    CHECK(sd.mul(sd.y(), sd.x()) == sd.mul(sd.x_pow(3), sd.y()));
    CHECK(sd.element_order(sd.y()) == 2);
    CHECK(sd.element_order(sd.identity()) == 1);
    auto gq = GroupSpec::gq(4);
    CHECK(gq.mul(gq.y(), gq.y()) == gq.x_pow(4));
    CHECK(gq.element_order(gq.mul(gq.y(), gq.x())) == 4);
}

TEST_CASE("involution counts distinguish the families", "[groups]") {
    // generalized quaternion: a unique involution; semidihedral of order 2^d: 2^{d-2} + 1
    CHECK(count_involutions(GroupSpec::q8()) == 1);
    CHECK(count_involutions(GroupSpec::gq(4)) == 1);
    CHECK(count_involutions(GroupSpec::gq(5)) == 1);
    CHECK(count_involutions(GroupSpec::sd(4)) == 5);
    CHECK(count_involutions(GroupSpec::sd(5)) == 9);
}

TEST_CASE("subgroups", "[groups]") {
    auto sd = GroupSpec::sd(4);
    auto E = identify_subgroup(sd, {sd.y(), sd.z()});
    REQUIRE(E);
    CHECK(E->spec.family == Family::KleinFour);
    CHECK(subgroup_elements(sd, {sd.y(), sd.z()}).size() == 4);
    auto gq = GroupSpec::gq(4);
    auto H = identify_subgroup(gq, {gq.mul(gq.y(), gq.x()), gq.x_pow(2)});
    REQUIRE(H);
    CHECK(H->spec.family == Family::Quaternion8);
    CHECK(subgroup_elements(gq, {gq.identity()}).size() == 1);
    auto Hsd = identify_subgroup(sd, {sd.x_pow(2), sd.mul(sd.y(), sd.x())});
    REQUIRE(Hsd);
    CHECK(Hsd->spec.family == Family::Quaternion8);
}

TEST_CASE("abelianization onto the Klein four group", "[groups]") {
    auto g = GroupSpec::sd(5);
    CHECK(g.abelianization(g.x_pow(2)) == g.identity());
    CHECK(g.abelianization(g.y()) == GroupElement{0, 1});
    CHECK(g.abelianization(g.mul(g.y(), g.x())) == GroupElement{1, 1});
    // a homomorphism: brute force over all pairs
    for (auto& a : g.elements())
        for (auto& b : g.elements())
            CHECK((g.abelianization_index(g.mul(a, b)) ^ g.abelianization_index(a) ^ g.abelianization_index(b)) == 0);
}
