#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "modules.hpp"
#include "rep.hpp"

namespace endolift {

template <class F>
struct StripResult {
    MatrixRep<F> core;
    int free_rank = 0;
};

// Splits off all free summands.  For w with Tr w != 0 the map kG -> V, a -> a w is
// injective, and v -> sum_g phi(g^{-1} v) g is a retraction up to a unit when phi(Tr w) = 1.
template <class F>
StripResult<F> strip_free(const MatrixRep<F>& v) {
    static_assert(F::is_field);
    const F& f = v.ring;
    auto alg = group_algebra(v.group, f);
    auto M = as_module(v);
    if (v.n == 0) return {v, 0};
    auto T = alg.socle_action(M);
    auto U = column_basis(T);
    int r = U.cols;
    if (r == 0) return {v, 0};
    auto PhiT = solve(U.transpose(), Mat<F>::identity(f, r));
    if (!PhiT) throw std::logic_error("strip_free: functionals not found");
    auto Phi = PhiT->transpose();  // r x n, Phi U = I
    std::vector<Mat<F>> inv_gens;
    for (auto& g : v.gens) inv_gens.push_back(invert_matrix(g));
    int G = alg.dim;
    Mat<F> Psi(f, r * G, v.n);
    for (int j = 0; j < r; ++j) {
        std::vector<Mat<F>> rows(G);
        rows[0] = Phi.block(j, 0, 1, v.n);
        for (int k : alg.order) {
            if (k == 0) continue;
            auto [s, parent] = alg.tree[k];
            rows[k] = rows[parent] * inv_gens[s];
        }
        for (int k = 0; k < G; ++k)
            for (int c = 0; c < v.n; ++c) Psi(j * G + k, c) = rows[k](0, c);
    }
    auto K = kernel(Psi);
    if (K.cols != v.n - r * G) throw std::logic_error("strip_free: splitting system inconsistent");
    MatrixRep<F> core{v.group, f, K.cols, {}};
    if (K.cols == 0) {
        core.gens.assign(v.gens.size(), Mat<F>(f, 0, 0));
    } else {
        core = as_rep(v.group, restrict_to_submodule(M, K));
    }
    return {core, r};
}

template <class F>
int free_rank(const MatrixRep<F>& v) {
    return free_rank(group_algebra(v.group, v.ring), as_module(v));
}

template <class F>
bool is_trivial_module(const MatrixRep<F>& v) {
    if (v.n != 1) return false;
    for (auto& g : v.gens)
        if (!g.is_identity()) return false;
    return true;
}

template <class F>
struct EndoTrivialReport {
    bool endo_trivial = false;
    int dim = 0;
    int tensor_dim = 0;
    int free_summands = 0;
    int core_dim = 0;
    bool dim_congruence = false;
};

template <class F>
EndoTrivialReport<F> endo_trivial_report(const MatrixRep<F>& v) {
    EndoTrivialReport<F> r;
    r.dim = v.n;
    auto T = tensor(dual(v), v);
    r.tensor_dim = T.n;
    auto s = strip_free(T);
    r.free_summands = s.free_rank;
    r.core_dim = s.core.n;
    long long G = v.group.order();
    r.dim_congruence = (static_cast<long long>(v.n) * v.n) % G == 1 % G;
    r.endo_trivial = is_trivial_module(s.core) && r.dim_congruence;
    return r;
}

template <class F>
bool endo_trivial_check(const MatrixRep<F>& v) {
    return endo_trivial_report(v).endo_trivial;
}

template <class F>
IsoResult<F> is_isomorphic(const MatrixRep<F>& a, const MatrixRep<F>& b, const IsoOptions& opt = {}) {
    if (!(a.group == b.group)) throw std::invalid_argument("is_isomorphic: group mismatch");
    return is_isomorphic(as_module(a), as_module(b), opt);
}

template <class F>
std::vector<Mat<F>> hom_space(const MatrixRep<F>& a, const MatrixRep<F>& b) {
    return hom_space(as_module(a), as_module(b));
}

template <class F>
int stable_hom_dim(const MatrixRep<F>& a, const MatrixRep<F>& b) {
    return stable_hom_dim(group_algebra(a.group, a.ring), as_module(a), as_module(b));
}

// Omega^1(k): the augmentation ideal.
template <class F>
MatrixRep<F> augmentation_ideal(const GroupSpec& g, const F& f) {
    auto alg = group_algebra(g, f);
    return as_rep(g, omega(alg, as_module(trivial_rep(g, f))).module);
}

// Omega^{-1}(k): the regular module modulo its socle.
template <class F>
MatrixRep<F> regular_mod_socle(const GroupSpec& g, const F& f) {
    auto alg = group_algebra(g, f);
    auto soc = column_basis(alg.socle_action(alg.regular));
    return as_rep(g, quotient_module(alg.regular, soc));
}

template <class F>
struct Classification {
    std::optional<int> epsilon;  // -1, 0, +1
    int free_summands = 0;
    int core_dim = 0;
    IsoStatus status = IsoStatus::NotIsomorphic;
    std::string label() const { return epsilon ? std::to_string(*epsilon) : std::string("none"); }
};

// Core of v compared with k, Omega^1(k) and Omega^{-1}(k).
template <class F>
Classification<F> classify_syzygy_of_trivial(const MatrixRep<F>& v, const IsoOptions& opt = {}) {
    Classification<F> c;
    auto s = strip_free(v);
    c.free_summands = s.free_rank;
    c.core_dim = s.core.n;
    if (s.core.n == 0) return c;
    const auto& g = v.group;
    const F& f = v.ring;
    bool undecided = false;
    std::vector<std::pair<int, MatrixRep<F>>> candidates;
    candidates.emplace_back(0, trivial_rep(g, f));
    candidates.emplace_back(1, augmentation_ideal(g, f));
    candidates.emplace_back(-1, regular_mod_socle(g, f));
    for (auto& [eps, m] : candidates) {
        auto r = is_isomorphic(s.core, m, opt);
        if (r.status == IsoStatus::Isomorphic) {
            c.epsilon = eps;
            c.status = IsoStatus::Isomorphic;
            return c;
        }
        undecided = undecided || r.status == IsoStatus::Undecided;
    }
    c.status = undecided ? IsoStatus::Undecided : IsoStatus::NotIsomorphic;
    return c;
}

}  // namespace endolift
