#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "group.hpp"
#include "group_algebra.hpp"
#include "linalg.hpp"
#include "modules.hpp"

namespace endolift {

// Representation of a presented 2-group: one matrix per generator (x, and y unless cyclic).
template <class R>
struct MatrixRep {
    GroupSpec group;
    R ring{};
    int n = 0;
    std::vector<Mat<R>> gens;

    const Mat<R>& x() const { return gens.at(0); }
    const Mat<R>& y() const { return gens.at(1); }
    int dim() const { return n; }

    Mat<R> of(const GroupElement& g) const {
        auto m = x().pow(g.i);
        if (g.j) m = m * y();
        return m;
    }
};

template <class R>
bool check_relations(const MatrixRep<R>& v) {
    const auto& g = v.group;
    auto I = Mat<R>::identity(v.ring, v.n);
    if (static_cast<int>(v.gens.size()) != g.num_generators()) return false;
    for (auto& m : v.gens)
        if (m.rows != v.n || m.cols != v.n) return false;
    if (v.x().pow(g.x_order()) != I) return false;
    if (g.is_cyclic()) return true;
    const auto& X = v.x();
    const auto& Y = v.y();
    if (Y * Y != X.pow(g.y_square_exponent())) return false;
    // y x = x^k y
    return Y * X == X.pow(g.conj_exponent()) * Y;
}

template <class R>
MatrixRep<R> trivial_rep(const GroupSpec& g, const R& r) {
    MatrixRep<R> v{g, r, 1, {}};
    for (int k = 0; k < g.num_generators(); ++k) v.gens.push_back(Mat<R>::identity(r, 1));
    return v;
}

template <class R>
MatrixRep<R> regular_rep(const GroupSpec& g, const R& r) {
    MatrixRep<R> v{g, r, g.order(), {}};
    for (auto& t : g.generator_tables()) {
        Mat<R> m(r, g.order(), g.order());
        for (int k = 0; k < g.order(); ++k) m(t[k], k) = r.one();
        v.gens.push_back(std::move(m));
    }
    return v;
}

// Y = A[SD/<y>] on the cosets x^a<y>, 0 <= a < 2^{d-1}.
template <class R>
MatrixRep<R> permutation_Y(int d, const R& r) {
    auto g = GroupSpec::sd(d);
    int M = g.x_order();
    MatrixRep<R> v{g, r, M, {}};
    for (auto s : {g.x(), g.y()}) {
        Mat<R> m(r, M, M);
        for (int a = 0; a < M; ++a) m(g.mul(s, g.x_pow(a)).i, a) = r.one();
        v.gens.push_back(std::move(m));
    }
    return v;
}

// The SD module on S with x acting by multiplication and
// y c_i = sum_{j=(i-1)k+1}^{ik} c_j, k = 2^{d-2} - 1, indices read through c_j = image of x^{j-1}.
inline MatrixRep<Zmod2N> module_L_SD(int d, const Zmod2N& z) {
    auto g = GroupSpec::sd(d);
    SRing S(d, z);
    int n = S.dim();
    int k = (1 << (d - 2)) - 1;
    Mat<Zmod2N> Y(z, n, n);
    for (int i = 1; i <= n; ++i) {
        auto col = S.zero();
        for (int j = (i - 1) * k + 1; j <= i * k; ++j) col = S.add(col, S.x_pow(j - 1));
        for (int r = 0; r < n; ++r) Y(r, i - 1) = col[r];
    }
    return {g, z, n, {S.mult_matrix(S.x_pow(1)), Y}};
}

// Q8 module over F4: x -> [[1,0,0],[1,1,0],[0,1,1]], y -> [[1,0,0],[w,1,0],[0,w^2,1]].
inline MatrixRep<GF4> module_L_Q8(const GF4& f) {
    auto w = f.omega(), w2 = f.mul(w, w);
    Mat<GF4> X(f, 3, 3), Y(f, 3, 3);
    X(0, 0) = X(1, 0) = X(1, 1) = X(2, 1) = X(2, 2) = f.one();
    Y(0, 0) = Y(1, 1) = Y(2, 2) = f.one();
    Y(1, 0) = w;
    Y(2, 1) = w2;
    return {GroupSpec::q8(), f, 3, {X, Y}};
}

// Q8 lift over Z/2^N[w]: x -> [[1,0,0],[1,-1,2],[0,-1,1]], y -> [[1,0,0],[-w,-1,-2w],[0,w^2,1]].
inline MatrixRep<ZmodOmega> module_L_Q8(const ZmodOmega& r) {
    auto one = r.one(), w = r.omega(), w2 = r.mul(w, w);
    auto m1 = r.neg(one), two = r.from_int(2);
    Mat<ZmodOmega> X(r, 3, 3), Y(r, 3, 3);
    X(0, 0) = one;
    X(1, 0) = one;
    X(1, 1) = m1;
    X(1, 2) = two;
    X(2, 1) = m1;
    X(2, 2) = one;
    Y(0, 0) = one;
    Y(1, 0) = r.neg(w);
    Y(1, 1) = m1;
    Y(1, 2) = r.neg(r.mul(two, w));
    Y(2, 1) = w2;
    Y(2, 2) = one;
    return {GroupSpec::q8(), r, 3, {X, Y}};
}

// GQ module on S: x by multiplication, y s = beta s*.  Requires beta beta* = z in S.
inline MatrixRep<Zmod2N> module_L_GQ(int d, const Zmod2N& z, const SRing::elem& beta) {
    auto g = GroupSpec::gq(d);
    SRing S(d, z);
    SRing::elem b(beta.begin(), beta.end());
    for (auto& c : b) c &= z.mask;
    if (!S.eq(S.mul(b, S.star(b)), S.x_pow(S.M() / 2)))
        throw std::domain_error("module_L_GQ: beta beta* != z");
    return {g, z, S.dim(), {S.mult_matrix(S.x_pow(1)), S.mult_matrix(b) * S.star_matrix()}};
}

template <class R>
auto reduce_rep(const MatrixRep<R>& v) {
    using F = typename R::residue_field;
    MatrixRep<F> r{v.group, F{}, v.n, {}};
    for (auto& m : v.gens) r.gens.push_back(reduce_mod2(m));
    return r;
}

template <class R>
Mat<R> invert_matrix(const Mat<R>& m) {
    std::optional<Mat<R>> r;
    if constexpr (R::is_field) r = inverse(m);
    else r = inverse_local(m);
    if (!r) throw std::domain_error("invert_matrix: singular");
    return *r;
}

// g -> rho(g^{-1})^T
template <class R>
MatrixRep<R> dual(const MatrixRep<R>& v) {
    MatrixRep<R> r{v.group, v.ring, v.n, {}};
    for (auto& m : v.gens) r.gens.push_back(invert_matrix(m).transpose());
    return r;
}

template <class R>
MatrixRep<R> tensor(const MatrixRep<R>& a, const MatrixRep<R>& b) {
    if (!(a.group == b.group)) throw std::invalid_argument("tensor: group mismatch");
    MatrixRep<R> r{a.group, a.ring, a.n * b.n, {}};
    for (std::size_t k = 0; k < a.gens.size(); ++k) r.gens.push_back(kron(a.gens[k], b.gens[k]));
    return r;
}

template <class R>
MatrixRep<R> direct_sum(const MatrixRep<R>& a, const MatrixRep<R>& b) {
    MatrixRep<R> r{a.group, a.ring, a.n + b.n, {}};
    for (std::size_t k = 0; k < a.gens.size(); ++k) r.gens.push_back(direct_sum(a.gens[k], b.gens[k]));
    return r;
}

// Restriction to the subgroup generated by gens, presented as one of the supported families.
template <class R>
MatrixRep<R> restrict_rep(const MatrixRep<R>& v, const std::vector<GroupElement>& gens) {
    auto shape = identify_subgroup(v.group, gens);
    if (!shape) throw std::invalid_argument("restrict: subgroup not of a supported shape");
    MatrixRep<R> r{shape->spec, v.ring, v.n, {}};
    for (auto& h : shape->images) r.gens.push_back(v.of(h));
    return r;
}

// ------------------------------------------------------------ bridges to module theory over fields

template <class F>
Module<F> as_module(const MatrixRep<F>& v) {
    return Module<F>{v.ring, v.n, v.gens};
}

template <class F>
MatrixRep<F> as_rep(const GroupSpec& g, const Module<F>& m) {
    return MatrixRep<F>{g, m.field, m.n, m.act};
}

template <class F>
LocalAlgebra<F> group_algebra(const GroupSpec& g, const F& f) {
    LocalAlgebra<F> a;
    a.field = f;
    a.kind = LocalAlgebra<F>::Kind::Group;
    a.dim = g.order();
    a.regular = as_module(regular_rep(g, f));
    a.x_order = g.x_order();
    a.label = "k" + g.name();
    // breadth-first tree from the identity
    auto tables = g.generator_tables();
    a.tree.assign(g.order(), {-1, -1});
    std::vector<bool> seen(g.order(), false);
    seen[0] = true;
    std::vector<int> frontier{0};
    a.order = {0};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int k : frontier)
            for (std::size_t s = 0; s < tables.size(); ++s) {
                int t = tables[s][k];
                if (seen[t]) continue;
                seen[t] = true;
                a.tree[t] = {static_cast<int>(s), k};
                a.order.push_back(t);
                next.push_back(t);
            }
        frontier = std::move(next);
    }
    return a;
}

template <class R>
nlohmann::json to_json(const MatrixRep<R>& v) {
    nlohmann::json j;
    j["group"] = {{"family", family_name(v.group.family)}, {"d", v.group.d}};
    j["ring"] = v.ring.name();
    j["dim"] = v.n;
    nlohmann::json g;
    g["x"] = to_json(v.gens.at(0));
    if (v.gens.size() > 1) g["y"] = to_json(v.gens.at(1));
    j["generators"] = g;
    return j;
}

}  // namespace endolift
