#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace endolift {

enum class Family { Cyclic, SemiDihedral, GeneralizedQuaternion, Quaternion8, KleinFour };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::Cyclic: return "cyclic";
        case Family::SemiDihedral: return "sd";
        case Family::GeneralizedQuaternion: return "gq";
        case Family::Quaternion8: return "q8";
        case Family::KleinFour: return "klein4";
    }
    return "?";
}

// Element x^i y^j in normal form.
struct GroupElement {
    int i = 0;
    int j = 0;
    auto operator<=>(const GroupElement&) const = default;
};

// A 2-group of order 2^d presented on x (and y).
struct GroupSpec {
    Family family = Family::Cyclic;
    int d = 1;

    GroupSpec() = default;
    GroupSpec(Family f, int dd) : family(f), d(dd) {
        switch (f) {
            case Family::SemiDihedral:
                if (d < 4) throw std::invalid_argument("semidihedral group needs d >= 4");
                break;
            case Family::GeneralizedQuaternion:
                if (d < 4) throw std::invalid_argument("generalized quaternion group needs d >= 4");
                break;
            case Family::Quaternion8:
                if (d != 3) throw std::invalid_argument("Q8 has d = 3");
                break;
            case Family::KleinFour:
                if (d != 2) throw std::invalid_argument("Klein four has d = 2");
                break;
            case Family::Cyclic:
                if (d < 1) throw std::invalid_argument("cyclic group needs d >= 1");
                break;
        }
    }
    static GroupSpec sd(int d) { return {Family::SemiDihedral, d}; }
    static GroupSpec gq(int d) { return d == 3 ? GroupSpec{Family::Quaternion8, 3} : GroupSpec{Family::GeneralizedQuaternion, d}; }
    static GroupSpec q8() { return {Family::Quaternion8, 3}; }
    static GroupSpec cyclic(int d) { return {Family::Cyclic, d}; }
    static GroupSpec klein_four() { return {Family::KleinFour, 2}; }

    bool operator==(const GroupSpec&) const = default;

    bool is_cyclic() const { return family == Family::Cyclic; }
    bool quaternion_type() const { return family == Family::GeneralizedQuaternion || family == Family::Quaternion8; }
    int order() const { return 1 << d; }
    int num_generators() const { return is_cyclic() ? 1 : 2; }
    // order of x
    int x_order() const { return is_cyclic() ? (1 << d) : (family == Family::KleinFour ? 2 : (1 << (d - 1))); }
    // y x y^-1 = x^k
    int conj_exponent() const {
        switch (family) {
            case Family::SemiDihedral: return (1 << (d - 2)) - 1;
            case Family::GeneralizedQuaternion:
            case Family::Quaternion8: return x_order() - 1;
            default: return 1;
        }
    }
    // y^2 = x^s
    int y_square_exponent() const { return quaternion_type() ? x_order() / 2 : 0; }
    std::string name() const { return family_name(family) + "(d=" + std::to_string(d) + ")"; }

    GroupElement identity() const { return {0, 0}; }
    GroupElement x() const { return {1 % x_order(), 0}; }
    GroupElement y() const {
        if (is_cyclic()) throw std::logic_error("cyclic group has no y");
        return {0, 1};
    }
    GroupElement x_pow(long long e) const {
        int n = x_order();
        return {static_cast<int>(((e % n) + n) % n), 0};
    }
    // central involution x^{2^{d-2}}
    GroupElement z() const {
        if (is_cyclic() || family == Family::KleinFour) throw std::logic_error("z defined for SD, GQ, Q8");
        return x_pow(x_order() / 2);
    }

    int index(const GroupElement& g) const { return g.i + x_order() * g.j; }
    GroupElement element(int idx) const { return {idx % x_order(), idx / x_order()}; }
    std::vector<GroupElement> elements() const {
        std::vector<GroupElement> r;
        for (int k = 0; k < order(); ++k) r.push_back(element(k));
        return r;
    }

    GroupElement mul(const GroupElement& a, const GroupElement& b) const {
        int n = x_order();
        if (is_cyclic()) return {(a.i + b.i) % n, 0};
        long long c = b.i;
        if (a.j) c = (c * conj_exponent()) % n;
        int i = static_cast<int>((a.i + c) % n);
        int j = a.j + b.j;
        if (j == 2) {
            i = (i + y_square_exponent()) % n;
            j = 0;
        }
        return {i, j};
    }
    GroupElement pow(GroupElement g, long long e) const {
        GroupElement r = identity();
        for (long long k = 0; k < e; ++k) r = mul(r, g);
        return r;
    }
    GroupElement inverse(const GroupElement& g) const {
        GroupElement h = g;
        GroupElement prev = identity();
        while (!(h == identity())) {
            prev = h;
            h = mul(h, g);
        }
        return prev == identity() ? identity() : prev;
    }
    int element_order(const GroupElement& g) const {
        int k = 1;
        GroupElement h = g;
        while (!(h == identity())) {
            h = mul(h, g);
            ++k;
        }
        return k;
    }
    // Klein four image on {1, x, y, yx} indexed by bits (x, y).
    int abelianization_index(const GroupElement& g) const {
        if (is_cyclic()) throw std::logic_error("abelianization to Klein four needs SD, GQ or Q8");
        return (g.i & 1) | (g.j << 1);
    }
    GroupElement abelianization(const GroupElement& g) const {
        int k = abelianization_index(g);
        return {k & 1, k >> 1};
    }

    // Left multiplication tables for the generators: gen_table[k][idx(g)] = idx(gen_k * g).
    std::vector<std::vector<int>> generator_tables() const {
        std::vector<GroupElement> gens{x()};
        if (!is_cyclic()) gens.push_back(y());
        std::vector<std::vector<int>> t;
        for (auto& s : gens) {
            std::vector<int> row(order());
            for (int k = 0; k < order(); ++k) row[k] = index(mul(s, element(k)));
            t.push_back(std::move(row));
        }
        return t;
    }

    bool relations_hold() const {
        auto e = identity();
        if (!(pow(x(), x_order()) == e)) return false;
        if (is_cyclic()) return true;
        if (!(mul(y(), y()) == x_pow(y_square_exponent()))) return false;
        return mul(mul(y(), x()), inverse(y())) == x_pow(conj_exponent());
    }
};

inline std::vector<GroupElement> subgroup_elements(const GroupSpec& g, const std::vector<GroupElement>& gens) {
    std::set<GroupElement> seen{g.identity()};
    std::vector<GroupElement> frontier{g.identity()};
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (auto& h : frontier)
            for (auto& s : gens) {
                auto p = g.mul(s, h);
                if (seen.insert(p).second) next.push_back(p);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

// A subgroup recognized as one of the supported families, with images of its generators.
struct SubgroupShape {
    GroupSpec spec;
    std::vector<GroupElement> images;  // images of the generators x, y of the ambient group
};

inline std::optional<SubgroupShape> identify_subgroup(const GroupSpec& g, const std::vector<GroupElement>& gens) {
    auto elems = subgroup_elements(g, gens);
    int size = static_cast<int>(elems.size());
    int d = 0;
    while ((1 << d) < size) ++d;
    if ((1 << d) != size) return std::nullopt;
    if (gens.size() == 1) return SubgroupShape{GroupSpec::cyclic(d), {gens[0]}};
    if (gens.size() != 2) return std::nullopt;
    auto try_pair = [&](GroupElement a, GroupElement b) -> std::optional<SubgroupShape> {
        for (Family f : {Family::KleinFour, Family::Quaternion8, Family::SemiDihedral, Family::GeneralizedQuaternion}) {
            GroupSpec s;
            try {
                s = GroupSpec(f, d);
            } catch (const std::invalid_argument&) {
                continue;
            }
            if (g.element_order(a) != s.x_order()) continue;
            if (!(g.mul(b, b) == g.pow(a, s.y_square_exponent()))) continue;
            if (!(g.mul(g.mul(b, a), g.inverse(b)) == g.pow(a, s.conj_exponent()))) continue;
            return SubgroupShape{s, {a, b}};
        }
        return std::nullopt;
    };
    if (auto r = try_pair(gens[0], gens[1])) return r;
    return try_pair(gens[1], gens[0]);
}

}  // namespace endolift
