#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "repmod.hpp"

namespace endolift {

// Representation over B[Gbar]: Klein four for SD, GQ and Q8, cyclic of order 2^d for the cyclic family.
template <class B>
using DeformationRep = MatrixRep<AbGroupRing<B>>;

// Index of g's image in Gbar.
inline int gbar_index(const GroupSpec& g, const GroupElement& h) {
    if (g.is_cyclic()) return h.i % g.x_order();
    return g.abelianization_index(h);
}

// rho_U(g) = rho_V(g) * gbar
template <class B>
DeformationRep<B> universal_deformation(const MatrixRep<B>& vw, bool check_endo_trivial = true) {
    if (!check_relations(vw)) throw std::invalid_argument("universal_deformation: input fails the group relations");
    if (check_endo_trivial && !endo_trivial_check(reduce_rep(vw)))
        throw std::invalid_argument("universal_deformation: reduction is not endo-trivial");
    const auto& g = vw.group;
    auto R = g.is_cyclic() ? AbGroupRing<B>::cyclic(vw.ring, g.x_order()) : AbGroupRing<B>::klein_four(vw.ring);
    DeformationRep<B> u{g, R, vw.n, {}};
    std::vector<GroupElement> gens{g.x()};
    if (!g.is_cyclic()) gens.push_back(g.y());
    for (std::size_t k = 0; k < gens.size(); ++k) {
        auto gb = R.basis(gbar_index(g, gens[k]));
        Mat<AbGroupRing<B>> m(R, vw.n, vw.n);
        for (int i = 0; i < vw.n; ++i)
            for (int j = 0; j < vw.n; ++j) m(i, j) = R.mul(R.scalar(vw.gens[k](i, j)), gb);
        u.gens.push_back(std::move(m));
    }
    if (!check_relations(u)) throw std::logic_error("universal_deformation: relations fail over R");
    return u;
}

template <class B>
MatrixRep<B> augmentation(const DeformationRep<B>& u) {
    MatrixRep<B> r{u.group, u.ring.base, u.n, {}};
    for (auto& m : u.gens) r.gens.push_back(map_entries(m, u.ring.base, [&](const auto& a) { return u.ring.augment(a); }));
    return r;
}

template <class B>
auto full_reduction(const DeformationRep<B>& u) {
    return reduce_rep(augmentation(u));
}

// Character of the Klein four group with chi(xbar) = sx, chi(ybar) = sy.
struct KleinCharacter {
    int sx = 1;
    int sy = 1;
    std::string name() const { return std::string(sx > 0 ? "+" : "-") + (sy > 0 ? "+" : "-"); }
};

inline std::array<KleinCharacter, 4> klein_characters() { return {{{1, 1}, {-1, 1}, {1, -1}, {-1, -1}}}; }

template <class B>
MatrixRep<B> specialize_character(const DeformationRep<B>& u, const KleinCharacter& chi) {
    if (u.ring.order != 4) throw std::invalid_argument("specialize_character: base is not the Klein four group ring");
    const B& b = u.ring.base;
    std::vector<typename B::elem> values(4);
    for (int k = 0; k < 4; ++k) values[k] = b.from_int(((k & 1) ? chi.sx : 1) * ((k & 2) ? chi.sy : 1));
    MatrixRep<B> r{u.group, b, u.n, {}};
    for (auto& m : u.gens) r.gens.push_back(map_entries(m, b, [&](const auto& a) { return u.ring.evaluate(a, values); }));
    return r;
}

// (det rho(x), det rho(y))
template <class B>
std::vector<typename B::elem> determinant_vector(const MatrixRep<B>& v) {
    std::vector<typename B::elem> out;
    for (auto& m : v.gens) out.push_back(det_local(m));
    return out;
}

// U_1 tensor W[C]: sigma on the subdiagonal, -sigma down the last column.
inline DeformationRep<Zmod2N> cyclic_universal(int d, const Zmod2N& z) {
    if (d < 2) throw std::invalid_argument("cyclic_universal: order must be at least 4");
    auto g = GroupSpec::cyclic(d);
    int m = g.x_order();
    auto R = AbGroupRing<Zmod2N>::cyclic(z, m);
    int n = m - 1;
    Mat<AbGroupRing<Zmod2N>> S(R, n, n);
    auto sigma = R.basis(1);
    for (int i = 0; i + 1 < n; ++i) S(i + 1, i) = sigma;
    for (int i = 0; i < n; ++i) S(i, n - 1) = R.neg(sigma);
    return {g, R, n, {S}};
}

}  // namespace endolift
