#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"

namespace endolift {

// Left module over a finite-dimensional local algebra, given by the actions of its generators.
template <class F>
struct Module {
    F field{};
    int n = 0;
    std::vector<Mat<F>> act;

    int dim() const { return n; }
};

// A local algebra A with a chosen generating set, a basis reachable from 1 by left
// multiplication with generators, and a spanning element of the socle.
template <class F>
struct LocalAlgebra {
    enum class Kind { Group, Based };

    F field{};
    Kind kind = Kind::Group;
    int dim = 0;
    Module<F> regular;
    // basis element k > 0 equals gen[tree[k].first] * basis[tree[k].second]
    std::vector<std::pair<int, int>> tree;
    // basis indices in an order where each parent precedes its children
    std::vector<int> order;
    // Based: socle generator as a word in the generators, applied right to left
    std::vector<int> socle_word;
    // Group: order of the first generator x; every element is x^i or x^i y
    int x_order = 1;
    std::string label;

    // Images under the generators that generate rad(M) as a submodule.
    std::vector<Mat<F>> radical_generators(const Module<F>& m) const {
        std::vector<Mat<F>> r;
        for (auto& a : m.act) r.push_back(kind == Kind::Group ? a - Mat<F>::identity(field, m.n) : a);
        return r;
    }
    // Action of the socle generator on m.
    Mat<F> socle_action(const Module<F>& m) const {
        auto I = Mat<F>::identity(field, m.n);
        if (kind == Kind::Based) {
            Mat<F> r = I;
            for (auto it = socle_word.rbegin(); it != socle_word.rend(); ++it) r = m.act[*it] * r;
            return r;
        }
        // Group: every element is x^i y^j, so Tr = (sum_i x^i)(1 + y) = prod_k (1 + x^{2^k}) (1 + y).
        Mat<F> tr = I;
        Mat<F> p = m.act[0];
        for (int e = 1; e < x_order; e *= 2) {
            tr = tr * (I + p);
            p = p * p;
        }
        if (m.act.size() > 1) tr = tr * (I + m.act[1]);
        return tr;
    }
};

// -------------------------------------------------------------- basic operations

template <class F>
Mat<F> stack_columns(const F& f, int n, const std::vector<Mat<F>>& cols) {
    Mat<F> r(f, n, static_cast<int>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k)
        for (int i = 0; i < n; ++i) r(i, int(k)) = cols[k](i, 0);
    return r;
}

// Smallest submodule containing the given column vectors; returned as a basis (columns).
template <class F>
Mat<F> submodule_closure(const Module<F>& m, const Mat<F>& gens) {
    const F& f = m.field;
    Mat<F> basis = span_basis(gens);
    while (true) {
        Mat<F> all = basis;
        for (auto& a : m.act) all = hstack(all, a * basis);
        auto nb = span_basis(all);
        if (nb.cols == basis.cols) return nb;
        basis = std::move(nb);
    }
    (void)f;
}

template <class F>
Mat<F> radical_basis(const LocalAlgebra<F>& alg, const Module<F>& m) {
    Mat<F> gens(m.field, m.n, 0);
    for (auto& r : alg.radical_generators(m)) gens = hstack(gens, r);
    if (gens.cols == 0) return gens;
    return submodule_closure(m, gens);
}

// Standard basis vectors completing a basis of the subspace spanned by `sub` (columns).
template <class F>
std::vector<int> complement_indices(const Mat<F>& sub) {
    int n = sub.rows;
    auto all = hstack(sub, Mat<F>::identity(sub.ring, n));
    auto t = all;
    auto piv = rref(t);
    std::vector<int> r;
    for (int c : piv)
        if (c >= sub.cols) r.push_back(c - sub.cols);
    return r;
}

template <class F>
Module<F> restrict_to_submodule(const Module<F>& m, const Mat<F>& basis) {
    Module<F> r{m.field, basis.cols, {}};
    for (auto& a : m.act) {
        auto x = solve(basis, a * basis);
        if (!x) throw std::logic_error("restrict_to_submodule: subspace is not a submodule");
        r.act.push_back(*x);
    }
    return r;
}

template <class F>
Module<F> quotient_module(const Module<F>& m, const Mat<F>& sub) {
    auto comp = complement_indices(sub);
    int k = static_cast<int>(comp.size());
    Mat<F> C(m.field, m.n, k);
    for (int j = 0; j < k; ++j) C(comp[j], j) = m.field.one();
    auto full = hstack(sub, C);
    Module<F> r{m.field, k, {}};
    for (auto& a : m.act) {
        auto x = solve(full, a * C);
        if (!x) throw std::logic_error("quotient_module: basis failure");
        r.act.push_back(x->block(sub.cols, 0, k, k));
    }
    return r;
}

template <class F>
Module<F> direct_sum(const Module<F>& a, const Module<F>& b) {
    Module<F> r{a.field, a.n + b.n, {}};
    for (std::size_t g = 0; g < a.act.size(); ++g) r.act.push_back(direct_sum(a.act[g], b.act[g]));
    return r;
}

template <class F>
Module<F> free_module(const LocalAlgebra<F>& alg, int r) {
    Module<F> m{alg.field, 0, {}};
    for (std::size_t g = 0; g < alg.regular.act.size(); ++g) m.act.push_back(Mat<F>(alg.field, 0, 0));
    for (int i = 0; i < r; ++i) m = direct_sum(m, alg.regular);
    return m;
}

// Vectors b_k * w for every basis element b_k of the algebra, as columns.
template <class F>
Mat<F> orbit_columns(const LocalAlgebra<F>& alg, const Module<F>& m, const Mat<F>& w) {
    std::vector<Mat<F>> cols(alg.dim);
    cols[0] = w;
    for (int k : alg.order)
        if (k != 0) cols[k] = m.act[alg.tree[k].first] * cols[alg.tree[k].second];
    return stack_columns(m.field, m.n, cols);
}

template <class F>
bool check_module_relations_equal(const Module<F>& a, const Module<F>& b) {
    if (a.n != b.n || a.act.size() != b.act.size()) return false;
    for (std::size_t g = 0; g < a.act.size(); ++g)
        if (a.act[g] != b.act[g]) return false;
    return true;
}

// -------------------------------------------------------------- covers and syzygies

template <class F>
struct Cover {
    int rank = 0;
    std::vector<int> generators;  // indices of standard basis vectors mapping onto top(M)
    Mat<F> map;                   // n x (rank * dim A)
};

template <class F>
Cover<F> projective_cover(const LocalAlgebra<F>& alg, const Module<F>& m) {
    Cover<F> c;
    auto rad = radical_basis(alg, m);
    c.generators = complement_indices(rad);
    c.rank = static_cast<int>(c.generators.size());
    c.map = Mat<F>(m.field, m.n, 0);
    for (int g : c.generators) {
        Mat<F> w(m.field, m.n, 1);
        w(g, 0) = m.field.one();
        c.map = hstack(c.map, orbit_columns(alg, m, w));
    }
    return c;
}

template <class F>
struct OmegaResult {
    Module<F> module;
    int cover_rank = 0;
    Mat<F> kernel_basis;
};

template <class F>
OmegaResult<F> omega(const LocalAlgebra<F>& alg, const Module<F>& m) {
    auto c = projective_cover(alg, m);
    auto P = free_module(alg, c.rank);
    auto K = kernel(c.map);
    OmegaResult<F> r;
    r.cover_rank = c.rank;
    r.kernel_basis = K;
    r.module = K.cols ? restrict_to_submodule(P, K) : Module<F>{m.field, 0, std::vector<Mat<F>>(m.act.size(), Mat<F>(m.field, 0, 0))};
    return r;
}

// -------------------------------------------------------------- homomorphisms

// Basis of Hom_A(M, N): matrices T (dim N x dim M) with T a_M = a_N T.
template <class F>
std::vector<Mat<F>> hom_space(const Module<F>& M, const Module<F>& N) {
    const F& f = M.field;
    int n = M.n, m = N.n;
    if (n == 0 || m == 0) return {};
    int unknowns = m * n;
    Mat<F> sys(f, static_cast<int>(M.act.size()) * unknowns, unknowns);
    int row = 0;
    for (std::size_t g = 0; g < M.act.size(); ++g) {
        const auto& A = M.act[g];
        const auto& B = N.act[g];
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j, ++row) {
                // (T A)_{ij} - (B T)_{ij}
                auto* r = sys.row(row);
                for (int q = 0; q < n; ++q)
                    if (!f.is_zero(A(q, j))) r[i * n + q] = f.add(r[i * n + q], A(q, j));
                for (int p = 0; p < m; ++p)
                    if (!f.is_zero(B(i, p))) r[p * n + j] = f.sub(r[p * n + j], B(i, p));
            }
    }
    auto K = kernel(std::move(sys));
    std::vector<Mat<F>> basis;
    for (int k = 0; k < K.cols; ++k) {
        Mat<F> T(f, m, n);
        for (int u = 0; u < unknowns; ++u) T.e[u] = K(u, k);
        basis.push_back(std::move(T));
    }
    return basis;
}

template <class F>
int hom_dim(const Module<F>& M, const Module<F>& N) {
    return static_cast<int>(hom_space(M, N).size());
}

enum class IsoStatus { Isomorphic, NotIsomorphic, Undecided };

inline std::string iso_status_name(IsoStatus s) {
    switch (s) {
        case IsoStatus::Isomorphic: return "isomorphic";
        case IsoStatus::NotIsomorphic: return "not_isomorphic";
        case IsoStatus::Undecided: return "undecided";
    }
    return "?";
}

// rad(M): generators act unipotently on group modules and nilpotently on modules over a based algebra.
template <class F>
Mat<F> module_radical(const Module<F>& m) {
    Mat<F> gens(m.field, m.n, 0);
    for (auto& a : m.act) gens = hstack(gens, rank(a) == m.n ? a - Mat<F>::identity(m.field, m.n) : a);
    if (gens.cols == 0) return gens;
    return submodule_closure(m, gens);
}

// Induced maps top(M) -> top(N) of the given homomorphisms, in complement coordinates.
template <class F>
std::vector<Mat<F>> top_maps(const Module<F>& M, const Module<F>& N, const std::vector<Mat<F>>& homs) {
    auto radM = module_radical(M), radN = module_radical(N);
    auto cm = complement_indices(radM), cn = complement_indices(radN);
    Mat<F> basisN = radN;
    for (int i : cn) {
        Mat<F> e(N.field, N.n, 1);
        e(i, 0) = N.field.one();
        basisN = hstack(basisN, e);
    }
    std::vector<Mat<F>> out;
    for (auto& phi : homs) {
        Mat<F> cols(M.field, N.n, 0);
        for (int i : cm) cols = hstack(cols, phi.block(0, i, N.n, 1));
        auto x = solve(basisN, cols);
        if (!x) throw std::logic_error("top_maps: basis of N is singular");
        out.push_back(x->block(radN.cols, 0, static_cast<int>(cn.size()), static_cast<int>(cm.size())));
    }
    return out;
}

struct IsoOptions {
    int max_hom_bits = 20;              // exhaustive search over at most 2^20 elements
    std::optional<std::uint64_t> seed;  // enables a randomized search beyond the bound
    int random_budget = 4096;
};

template <class F>
struct IsoResult {
    IsoStatus status = IsoStatus::Undecided;
    int hom_dim = 0;
    std::string reason;
    std::optional<Mat<F>> witness;
};

// Ranks of fixed words in the generators g and g - 1; invariant under simultaneous conjugation.
template <class F>
std::vector<int> rank_fingerprint(const Module<F>& m) {
    std::vector<int> out;
    auto I = Mat<F>::identity(m.field, m.n);
    std::vector<Mat<F>> base;
    for (auto& a : m.act) {
        base.push_back(a);
        base.push_back(a - I);
    }
    for (auto& u : base) {
        auto p = u;
        for (int k = 1; k <= 3; ++k, p = p * u) out.push_back(rank(p));
        for (auto& v : base) out.push_back(rank(u * v));
    }
    return out;
}

template <class F>
IsoResult<F> is_isomorphic(const Module<F>& M, const Module<F>& N, const IsoOptions& opt = {}) {
    const F& f = M.field;
    IsoResult<F> res;
    if (M.n != N.n) {
        res.status = IsoStatus::NotIsomorphic;
        res.reason = "dimension";
        return res;
    }
    if (M.n == 0) {
        res.status = IsoStatus::Isomorphic;
        return res;
    }
    for (std::size_t g = 0; g < M.act.size(); ++g)
        if (rank(M.act[g]) != rank(N.act[g])) {
            res.status = IsoStatus::NotIsomorphic;
            res.reason = "generator rank";
            return res;
        }
    if (rank_fingerprint(M) != rank_fingerprint(N)) {
        res.status = IsoStatus::NotIsomorphic;
        res.reason = "rank fingerprint";
        return res;
    }
    auto H = hom_space(M, N);
    res.hom_dim = static_cast<int>(H.size());
    if (H.empty()) {
        res.status = IsoStatus::NotIsomorphic;
        res.reason = "no homomorphisms";
        return res;
    }
    int n = M.n;
    auto try_combo = [&](const Mat<F>& T) {
        if (rank(T) == n) {
            res.status = IsoStatus::Isomorphic;
            res.witness = T;
            return true;
        }
        return false;
    };
    const int bits_per = F::q == 2 ? 1 : 2;
    const int h = res.hom_dim;
    // isomorphic modules have dim Hom(M, N) = dim End(M)
    auto dim_end_m = hom_dim(M, M);
    if (dim_end_m != h || hom_dim(N, N) != h || hom_dim(N, M) != h) {
        res.status = IsoStatus::NotIsomorphic;
        res.reason = "hom dimension fingerprint";
        return res;
    }
    // Nakayama: phi is an isomorphism iff its map on tops is invertible.
    {
        auto T = top_maps(M, N, H);
        int t = T.front().rows;
        if (t != T.front().cols) {
            res.status = IsoStatus::NotIsomorphic;
            res.reason = "top dimension";
            return res;
        }
        if (t * t * bits_per <= opt.max_hom_bits) {
            Mat<F> flat(f, t * t, h);
            for (int b = 0; b < h; ++b)
                for (int i = 0; i < t; ++i)
                    for (int j = 0; j < t; ++j) flat(i * t + j, b) = T[b](i, j);
            auto piv = rref(flat);
            const int r = static_cast<int>(piv.size());
            std::uint64_t total = std::uint64_t{1} << (r * bits_per);
            for (std::uint64_t k = 1; k < total; ++k) {
                Mat<F> top(f, t, t), S(f, N.n, n);
                for (int b = 0; b < r; ++b) {
                    auto c = static_cast<typename F::elem>((k >> (bits_per * b)) & (F::q - 1));
                    if (!c) continue;
                    top = top + T[piv[b]].scaled(c);
                    S = S + H[piv[b]].scaled(c);
                }
                if (rank(top) == t) {
                    if (!try_combo(S)) throw std::logic_error("is_isomorphic: invertible top map gave a singular homomorphism");
                    return res;
                }
            }
            res.status = IsoStatus::NotIsomorphic;
            res.reason = "no invertible top map";
            return res;
        }
    }
    if (h * bits_per <= opt.max_hom_bits) {
        // enumerate every element of the Hom space
        std::uint64_t total = std::uint64_t{1} << (h * bits_per);
        Mat<F> T(f, N.n, n);
        if constexpr (F::q == 2) {
            for (std::uint64_t k = 1; k < total; ++k) {
                int bit = std::countr_zero(k);  // Gray code step
                T = T + H[bit];
                if (try_combo(T)) return res;
            }
        } else {
            for (std::uint64_t k = 1; k < total; ++k) {
                Mat<F> S(f, N.n, n);
                for (int b = 0; b < h; ++b) {
                    auto c = static_cast<typename F::elem>((k >> (2 * b)) & 3);
                    if (c) S = S + H[b].scaled(c);
                }
                if (try_combo(S)) return res;
            }
        }
        res.status = IsoStatus::NotIsomorphic;
        res.reason = "exhaustive search";
        return res;
    }
    if (opt.seed) {
        std::mt19937_64 rng(*opt.seed);
        for (int it = 0; it < opt.random_budget; ++it) {
            Mat<F> S(f, N.n, n);
            for (int b = 0; b < h; ++b) {
                auto c = static_cast<typename F::elem>(rng() % F::q);
                if (c) S = S + H[b].scaled(c);
            }
            if (try_combo(S)) return res;
        }
    }
    res.status = IsoStatus::Undecided;
    res.reason = "hom space too large";
    return res;
}

// dim Hom(M, N) minus the maps factoring through a projective; the latter are
// exactly those factoring through the projective cover of N.
template <class F>
int stable_hom_dim(const LocalAlgebra<F>& alg, const Module<F>& M, const Module<F>& N) {
    if (M.n == 0 || N.n == 0) return 0;
    auto H = hom_space(M, N);
    auto cov = projective_cover(alg, N);
    auto P = free_module(alg, cov.rank);
    auto HP = hom_space(M, P);
    if (HP.empty()) return static_cast<int>(H.size());
    Mat<F> span(M.field, N.n * M.n, static_cast<int>(HP.size()));
    for (std::size_t k = 0; k < HP.size(); ++k) {
        auto T = cov.map * HP[k];
        for (int u = 0; u < N.n * M.n; ++u) span(u, int(k)) = T.e[u];
    }
    return static_cast<int>(H.size()) - rank(span);
}

template <class F>
int free_rank(const LocalAlgebra<F>& alg, const Module<F>& m) {
    if (m.n == 0) return 0;
    return rank(alg.socle_action(m));
}

// Loewy layers dim rad^i M / rad^{i+1} M.
template <class F>
std::vector<int> radical_layers(const LocalAlgebra<F>& alg, const Module<F>& m) {
    std::vector<int> layers;
    Module<F> cur = m;
    Mat<F> basis = Mat<F>::identity(m.field, m.n);
    int prev = m.n;
    while (prev > 0) {
        auto rad = radical_basis(alg, cur);
        int rd = rad.cols;
        layers.push_back(prev - rd);
        if (rd == 0 || rd == prev) break;
        cur = restrict_to_submodule(cur, rad);
        prev = rd;
    }
    return layers;
}

template <class F>
bool is_uniserial(const LocalAlgebra<F>& alg, const Module<F>& m) {
    for (int l : radical_layers(alg, m))
        if (l != 1) return false;
    return true;
}

}  // namespace endolift
