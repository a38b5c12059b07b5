#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "group_algebra.hpp"
#include "modules.hpp"
#include "rep.hpp"

namespace endolift {

enum class LambdaFamily { SD, GQ };

inline std::string lambda_family_name(LambdaFamily f) { return f == LambdaFamily::SD ? "sd" : "gq"; }

// k<a,b>/I on the basis of alternating words of length < 2K and s = (ab)^K, K = 2^{d-2}.
// Generator 0 is a, generator 1 is b.  Structure constants lie in F_2.
class BasedAlgebra {
public:
    using Vec = std::uint64_t;  // F_2 coefficient bitmask over the basis

    BasedAlgebra(LambdaFamily fam, int d) : fam_(fam), d_(d) {
        if (fam == LambdaFamily::SD && (d < 4 || d > 6)) throw std::invalid_argument("build_lambda: SD needs 4 <= d <= 6");
        if (fam == LambdaFamily::GQ && (d < 3 || d > 6)) throw std::invalid_argument("build_lambda: GQ needs 3 <= d <= 6");
        K_ = 1 << (d - 2);
        delta_ = (fam == LambdaFamily::GQ && d == 3) ? 0 : 1;
        dim_ = 4 * K_;
        table_.assign(dim_ * dim_, 0);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                auto w = letters(i);
                auto v = letters(j);
                w.insert(w.end(), v.begin(), v.end());
                table_[i * dim_ + j] = reduce(w);
            }
    }

    LambdaFamily family() const { return fam_; }
    int d() const { return d_; }
    int K() const { return K_; }
    int dim() const { return dim_; }
    int delta() const { return delta_; }
    int socle_index() const { return dim_ - 1; }

    // index of the alternating word of the given length starting with letter `first`
    int word_index(int first, int len) const {
        if (len == 0) return 0;
        if (len == 2 * K_) return socle_index();
        if (len < 0 || len > 2 * K_) throw std::out_of_range("word_index");
        return 1 + 2 * (len - 1) + first;
    }
    std::vector<int> letters(int idx) const {
        if (idx == 0) return {};
        if (idx == socle_index()) return alternating(0, 2 * K_);
        int len = (idx - 1) / 2 + 1;
        return alternating((idx - 1) % 2, len);
    }
    std::string word(int idx) const {
        if (idx == 0) return "1";
        if (idx == socle_index()) return "s";
        std::string s;
        for (int l : letters(idx)) s += l == 0 ? 'a' : 'b';
        return s;
    }
    int length(int idx) const { return static_cast<int>(letters(idx).size()); }

    Vec mul_basis(int i, int j) const { return table_[i * dim_ + j]; }
    Vec mul(Vec u, Vec v) const {
        Vec r = 0;
        for (int i = 0; i < dim_; ++i) {
            if (!((u >> i) & 1)) continue;
            for (int j = 0; j < dim_; ++j)
                if ((v >> j) & 1) r ^= mul_basis(i, j);
        }
        return r;
    }
    static Vec unit(int i) { return Vec{1} << i; }

    // product of a letter sequence, reduced to the basis
    Vec evaluate(const std::vector<int>& w) const { return reduce(w); }

    bool associative() const {
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                for (int k = 0; k < dim_; ++k)
                    if (mul(mul_basis(i, j), unit(k)) != mul(unit(i), mul_basis(j, k))) return false;
        return true;
    }

    nlohmann::json to_json() const {
        nlohmann::json basis = nlohmann::json::array();
        for (int i = 0; i < dim_; ++i) basis.push_back(word(i));
        nlohmann::json table = nlohmann::json::array();
        for (int i = 0; i < dim_; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int j = 0; j < dim_; ++j) {
                std::vector<int> c(dim_);
                for (int k = 0; k < dim_; ++k) c[k] = (mul_basis(i, j) >> k) & 1;
                row.push_back(c);
            }
            table.push_back(row);
        }
        return {{"family", lambda_family_name(fam_)}, {"d", d_}, {"basis", basis}, {"table", table}};
    }

private:
    std::vector<int> alternating(int first, int len) const {
        std::vector<int> w(len);
        for (int k = 0; k < len; ++k) w[k] = (first + k) % 2;
        return w;
    }

    // X^2 as a sum of letter sequences
    std::vector<std::vector<int>> square_rule(int X) const {
        std::vector<std::vector<int>> terms;
        bool sd = fam_ == LambdaFamily::SD;
        if (X == 1 && sd) return terms;  // b^2 = 0
        terms.push_back(alternating(1 - X, 2 * K_ - 1));  // b(ab)^{K-1} or a(ba)^{K-1}
        if (sd || delta_) terms.push_back(alternating(0, 2 * K_));
        return terms;
    }

    Vec reduce(const std::vector<int>& w) const {
        if (static_cast<int>(w.size()) > 2 * K_) return 0;
        for (std::size_t p = 0; p + 1 < w.size(); ++p) {
            if (w[p] != w[p + 1]) continue;
            Vec r = 0;
            for (auto& t : square_rule(w[p])) {
                std::vector<int> nw(w.begin(), w.begin() + p);
                nw.insert(nw.end(), t.begin(), t.end());
                nw.insert(nw.end(), w.begin() + p + 2, w.end());
                r ^= reduce(nw);
            }
            return r;
        }
        if (w.empty()) return unit(0);
        return unit(word_index(w[0], static_cast<int>(w.size())));
    }

    LambdaFamily fam_;
    int d_;
    int K_;
    int delta_;
    int dim_;
    std::vector<Vec> table_;
};

inline BasedAlgebra build_lambda(LambdaFamily fam, int d) {
    BasedAlgebra A(fam, d);
    if (A.dim() != (1 << d)) throw std::logic_error("build_lambda: dimension mismatch");
    if (!A.associative()) throw std::logic_error("build_lambda: multiplication is not associative");
    int s = A.socle_index();
    for (int g : {A.word_index(0, 1), A.word_index(1, 1)})
        if (A.mul_basis(s, g) != 0 || A.mul_basis(g, s) != 0)
            throw std::logic_error("build_lambda: socle element is not annihilated");
    return A;
}

template <class F>
Mat<F> vec_to_column(const F& f, const BasedAlgebra& A, BasedAlgebra::Vec v) {
    Mat<F> c(f, A.dim(), 1);
    for (int k = 0; k < A.dim(); ++k)
        if ((v >> k) & 1) c(k, 0) = f.one();
    return c;
}

// Local algebra structure of Lambda over F with left multiplication by a and b.
template <class F>
LocalAlgebra<F> lambda_local_algebra(const BasedAlgebra& A, const F& f = F{}) {
    LocalAlgebra<F> L;
    L.field = f;
    L.kind = LocalAlgebra<F>::Kind::Based;
    L.dim = A.dim();
    L.label = "Lambda_" + lambda_family_name(A.family());
    std::vector<Mat<F>> act;
    for (int g = 0; g < 2; ++g) {
        Mat<F> m(f, A.dim(), A.dim());
        int gi = A.word_index(g, 1);
        for (int j = 0; j < A.dim(); ++j) {
            auto v = A.mul_basis(gi, j);
            for (int k = 0; k < A.dim(); ++k)
                if ((v >> k) & 1) m(k, j) = f.one();
        }
        act.push_back(std::move(m));
    }
    L.regular = Module<F>{f, A.dim(), act};
    L.tree.assign(A.dim(), {-1, -1});
    L.order = {0};
    for (int len = 1; len <= 2 * A.K(); ++len)
        for (int first = 0; first < 2; ++first) {
            int idx = A.word_index(first, len);
            if (len == 2 * A.K() && first == 1) continue;
            L.tree[idx] = {first, A.word_index(1 - first, len - 1)};
            L.order.push_back(idx);
        }
    for (int k = 0; k < 2 * A.K(); ++k) L.socle_word.push_back(k % 2);
    return L;
}

// ------------------------------------------------------------ distinguished modules

enum class LambdaModuleKind { Y, La, Lb, Mab };

inline std::string lambda_module_name(LambdaModuleKind k) {
    switch (k) {
        case LambdaModuleKind::Y: return "Y";
        case LambdaModuleKind::La: return "L_a";
        case LambdaModuleKind::Lb: return "L_b";
        case LambdaModuleKind::Mab: return "M_ab";
    }
    return "?";
}

// Left ideal Lambda w.
template <class F>
Module<F> left_ideal(const BasedAlgebra& A, const LocalAlgebra<F>& L, BasedAlgebra::Vec w) {
    auto sub = submodule_closure(L.regular, vec_to_column(L.field, A, w));
    return restrict_to_submodule(L.regular, sub);
}

// Lambda / (Lambda w_1 + ... + Lambda w_r)
template <class F>
Module<F> cyclic_quotient(const BasedAlgebra& A, const LocalAlgebra<F>& L, const std::vector<BasedAlgebra::Vec>& ws) {
    Mat<F> gens(L.field, A.dim(), 0);
    for (auto w : ws) gens = hstack(gens, vec_to_column(L.field, A, w));
    return quotient_module(L.regular, submodule_closure(L.regular, gens));
}

template <class F>
Module<F> lambda_module(LambdaModuleKind which, const BasedAlgebra& A, const LocalAlgebra<F>& L) {
    using V = BasedAlgebra::Vec;
    const V a = BasedAlgebra::unit(A.word_index(0, 1));
    const V b = BasedAlgebra::unit(A.word_index(1, 1));
    const V ab = BasedAlgebra::unit(A.word_index(0, 2));
    const V ba = BasedAlgebra::unit(A.word_index(1, 2));
    switch (which) {
        case LambdaModuleKind::Y:
            if (A.family() != LambdaFamily::SD) throw std::invalid_argument("lambda_module: Y is defined for SD");
            return left_ideal(A, L, b);
        case LambdaModuleKind::La: return left_ideal(A, L, ab);
        case LambdaModuleKind::Lb: return left_ideal(A, L, ba);
        case LambdaModuleKind::Mab: {
            const F& f = L.field;
            int n = A.dim();
            auto P = direct_sum(L.regular, L.regular);
            Mat<F> gens(f, 2 * n, 0);
            auto embed = [&](V v, int copy) {
                Mat<F> c(f, 2 * n, 1);
                for (int k = 0; k < n; ++k)
                    if ((v >> k) & 1) c(copy * n + k, 0) = f.one();
                return c;
            };
            gens = hstack(gens, embed(ba, 0));
            gens = hstack(gens, embed(A.mul(a, a), 0));
            gens = hstack(gens, embed(b, 1));
            std::vector<int> ba_pow;
            for (int k = 0; k < A.K() - 1; ++k) {
                ba_pow.push_back(1);
                ba_pow.push_back(0);
            }
            auto line = embed(a, 0) + embed(A.evaluate(ba_pow), 1);
            gens = hstack(gens, line);
            return quotient_module(P, submodule_closure(P, gens));
        }
    }
    throw std::invalid_argument("lambda_module");
}

template <class F>
bool uniserial_check(const LocalAlgebra<F>& L, const Module<F>& m) {
    return is_uniserial(L, m);
}

// Every relation of I_D evaluated on the action matrices (A, B).
template <class F>
std::vector<std::pair<std::string, bool>> lambda_relations(const BasedAlgebra& Al, const Mat<F>& A, const Mat<F>& B) {
    int K = Al.K();
    auto AB = A * B, BA = B * A;
    auto s1 = AB.pow(K), s2 = BA.pow(K);
    std::vector<std::pair<std::string, bool>> out;
    auto zero = [&](const Mat<F>& m) { return m == Mat<F>(A.ring, m.rows, m.cols); };
    out.emplace_back("(ab)^K - (ba)^K", zero(s1 - s2));
    bool sd = Al.family() == LambdaFamily::SD;
    auto sa = sd || Al.delta() ? s1 : Mat<F>(A.ring, A.rows, A.cols);
    out.emplace_back("a^2 - b(ab)^(K-1) - c(ab)^K", zero(A * A - B * AB.pow(K - 1) - sa));
    if (sd) out.emplace_back("b^2", zero(B * B));
    else out.emplace_back("b^2 - a(ba)^(K-1) - c(ab)^K", zero(B * B - A * BA.pow(K - 1) - sa));
    out.emplace_back("(ab)^K a", zero(s1 * A));
    return out;
}

template <class F>
bool lambda_relations_hold(const BasedAlgebra& Al, const Module<F>& m) {
    for (auto& [name, ok] : lambda_relations(Al, m.act[0], m.act[1]))
        if (!ok) return false;
    return true;
}

// ------------------------------------------------------------ the isomorphism f_D : Lambda -> k D

template <class F>
struct FMap {
    LambdaFamily family;
    int d = 0;
    GroupSpec group;
    GroupAlgebraElement<F> ra, rb;
};

template <class F>
GroupAlgebraElement<F> group_element(const GroupSpec& g, const F& f, const GroupElement& h) {
    return GroupAlgebraElement<F>::of(g, f, h);
}

template <class F>
FMap<F> f_map(LambdaFamily fam, int d, const F& f = F{}) {
    using E = GroupAlgebraElement<F>;
    FMap<F> m;
    m.family = fam;
    m.d = d;
    if (fam == LambdaFamily::SD) {
        auto g = GroupSpec::sd(d);
        m.group = g;
        auto el = [&](const GroupElement& h) { return group_element(g, f, h); };
        auto one = E::one(g, f);
        auto z = g.z();
        auto yx = g.mul(g.y(), g.x());
        auto zy = g.mul(z, g.y());
        E ra = el(z) + el(yx) + el(g.x_pow(1)) + el(g.x_pow(-1));
        for (int i = 1; i <= (1 << (d - 4)) - 1; ++i)
            ra = ra + (el(g.x_pow(4 * i + 1)) + el(g.x_pow(-(4 * i + 1)))) * (one + el(zy));
        m.ra = ra;
        m.rb = one + el(g.y());
        return m;
    }
    auto g = GroupSpec::gq(d);
    m.group = g;
    auto el = [&](const GroupElement& h) { return group_element(g, f, h); };
    auto one = E::one(g, f);
    auto yx = el(g.mul(g.y(), g.x()));
    auto y = el(g.y());
    if (d == 3) {
        if constexpr (std::is_same_v<F, GF4>) {
            auto w = f.omega(), w2 = f.mul(w, w);
            auto ux = one + el(g.x_pow(1)), uyx = one + yx, uy = one + y;
            m.ra = ux + uyx.scaled(w) + uy.scaled(w2);
            m.rb = ux + uyx.scaled(w2) + uy.scaled(w);
            return m;
        } else {
            throw std::invalid_argument("f_map: GQ with d = 3 needs a primitive cube root of unity");
        }
    }
    int K = 1 << (d - 2);
    auto u = yx + y;
    E r = u.pow((1 << (d - 1)) - 3);
    for (int i = 1; i <= d - 3; ++i) r = r + u.pow(K - (1 << i));
    auto A = one + yx + r, B = one + y + r;
    auto C = (A * B).pow(K - 1);
    m.ra = A + C;
    m.rb = B + C;
    return m;
}

// f applied to a basis word of Lambda
template <class F>
GroupAlgebraElement<F> f_of_word(const FMap<F>& m, const std::vector<int>& w) {
    auto r = GroupAlgebraElement<F>::one(m.group, m.ra.ring);
    for (int l : w) r = r * (l == 0 ? m.ra : m.rb);
    return r;
}

struct IsoCertificate {
    bool ok = false;
    std::vector<std::pair<std::string, bool>> items;
    int span_dim = 0;
    std::string failing;

    nlohmann::json to_json() const {
        nlohmann::json it = nlohmann::json::object();
        for (auto& [k, v] : items) it[k] = v;
        return {{"ok", ok}, {"items", it}, {"span_dim", span_dim}, {"failing", failing}};
    }
};

template <class F>
Mat<F> coords(const GroupAlgebraElement<F>& e) {
    Mat<F> c(e.ring, static_cast<int>(e.c.size()), 1);
    for (std::size_t k = 0; k < e.c.size(); ++k) c(int(k), 0) = e.c[k];
    return c;
}

// Dimension of the subalgebra generated by 1, r_a, r_b.
template <class F>
int generated_span_dim(const FMap<F>& m) {
    const F& f = m.ra.ring;
    int n = m.group.order();
    std::vector<GroupAlgebraElement<F>> basis{GroupAlgebraElement<F>::one(m.group, f)};
    Mat<F> span = coords(basis[0]);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        for (auto* r : {&m.ra, &m.rb}) {
            auto c = *r * basis[k];
            auto trial = hstack(span, coords(c));
            if (rank(trial) > span.cols) {
                span = trial;
                basis.push_back(c);
            }
        }
        if (span.cols == n) break;
    }
    return span.cols;
}

template <class F>
IsoCertificate verify_iso(const FMap<F>& m) {
    IsoCertificate c;
    const auto& g = m.group;
    const F& f = m.ra.ring;
    int K = 1 << (m.d - 2);
    BasedAlgebra A(m.family, m.d);
    auto reg = regular_rep(g, f);
    auto act = [&](const GroupAlgebraElement<F>& e) {
        Mat<F> r(f, g.order(), g.order());
        for (int k = 0; k < g.order(); ++k) {
            if (f.is_zero(e.c[k])) continue;
            r = r + reg.of(g.element(k)).scaled(e.c[k]);
        }
        return r;
    };
    c.items = lambda_relations(A, act(m.ra), act(m.rb));
    using E = GroupAlgebraElement<F>;
    auto one = E::one(g, f), y = E::of(g, f, g.y());
    E sum_x(g, f), sum_x2(g, f);
    for (int i = 0; i < 2 * K; ++i) sum_x = sum_x + E::x_pow(g, f, i);
    for (int i = 0; i < K; ++i) sum_x2 = sum_x2 + E::x_pow(g, f, 2 * i);
    auto trace = sum_x * (one + y);
    c.items.emplace_back("(r_a r_b)^K = sum x^i (1+y)", (m.ra * m.rb).pow(K) == trace);
    if (m.family == LambdaFamily::SD) c.items.emplace_back("r_a^2 = sum x^(2i) (1+y)", m.ra * m.ra == sum_x2 * (one + y));
    c.span_dim = generated_span_dim(m);
    c.items.emplace_back("span dimension 2^d", c.span_dim == g.order());
    c.ok = true;
    for (auto& [k, v] : c.items)
        if (!v) {
            c.ok = false;
            if (c.failing.empty()) c.failing = k;
        }
    return c;
}

// Lambda-module with a, b acting as rho(r_a), rho(r_b).
template <class F>
Module<F> transport(const FMap<F>& m, const MatrixRep<F>& v) {
    if (!(v.group == m.group)) throw std::invalid_argument("transport: group mismatch");
    auto act = [&](const GroupAlgebraElement<F>& e) {
        Mat<F> r(v.ring, v.n, v.n);
        for (int k = 0; k < v.group.order(); ++k) {
            if (v.ring.is_zero(e.c[k])) continue;
            r = r + v.of(v.group.element(k)).scaled(e.c[k]);
        }
        return r;
    };
    Module<F> out{v.ring, v.n, {act(m.ra), act(m.rb)}};
    BasedAlgebra A(m.family, m.d);
    if (!lambda_relations_hold(A, out)) throw std::logic_error("transport: relations of I_D fail");
    return out;
}

// Group module with x, y acting through f^{-1}(x), f^{-1}(y).
template <class F>
MatrixRep<F> inverse_transport(const FMap<F>& m, const Module<F>& mod) {
    BasedAlgebra A(m.family, m.d);
    const F& f = mod.field;
    int n = A.dim();
    Mat<F> Fm(f, m.group.order(), 0);
    std::vector<Mat<F>> word_act;
    for (int k = 0; k < n; ++k) {
        auto w = A.letters(k);
        Fm = hstack(Fm, coords(f_of_word(m, w)));
        auto a = Mat<F>::identity(f, mod.n);
        for (int l : w) a = a * mod.act[l];
        word_act.push_back(std::move(a));
    }
    MatrixRep<F> out{m.group, f, mod.n, {}};
    for (auto h : {m.group.x(), m.group.y()}) {
        auto sol = solve(Fm, coords(GroupAlgebraElement<F>::of(m.group, f, h)));
        if (!sol) throw std::logic_error("inverse_transport: f is not surjective");
        Mat<F> r(f, mod.n, mod.n);
        for (int k = 0; k < n; ++k)
            if (!f.is_zero((*sol)(k, 0))) r = r + word_act[k].scaled((*sol)(k, 0));
        out.gens.push_back(std::move(r));
    }
    if (!check_relations(out)) throw std::logic_error("inverse_transport: group relations fail");
    return out;
}

// ------------------------------------------------------------ Auslander-Reiten shadows

template <class F>
struct OrbitStep {
    int dim = 0;
    std::string expected;
    IsoStatus status = IsoStatus::Undecided;
};

// Omega^1..Omega^4 of L_a against Lambda a, L_b, Lambda b, L_a.
template <class F>
std::vector<OrbitStep<F>> lambda_omega_orbit(const BasedAlgebra& A, const LocalAlgebra<F>& L, const IsoOptions& opt = {}) {
    using V = BasedAlgebra::Vec;
    V a = BasedAlgebra::unit(A.word_index(0, 1)), b = BasedAlgebra::unit(A.word_index(1, 1));
    std::vector<std::pair<std::string, Module<F>>> expected{
        {"Lambda a", left_ideal(A, L, a)},
        {"L_b", lambda_module(LambdaModuleKind::Lb, A, L)},
        {"Lambda b", left_ideal(A, L, b)},
        {"L_a", lambda_module(LambdaModuleKind::La, A, L)}};
    std::vector<OrbitStep<F>> out;
    auto cur = lambda_module(LambdaModuleKind::La, A, L);
    for (auto& [name, target] : expected) {
        cur = omega(L, cur).module;
        OrbitStep<F> s;
        s.dim = cur.n;
        s.expected = name;
        s.status = is_isomorphic(cur, target, opt).status;
        out.push_back(s);
    }
    return out;
}

struct StableEndExt {
    int stable_end = 0;
    int ext1 = 0;
};

template <class F>
StableEndExt stable_end_and_ext(const LocalAlgebra<F>& L, const Module<F>& m, const Module<F>& n) {
    return {stable_hom_dim(L, m, m), stable_hom_dim(L, omega(L, m).module, n)};
}

enum class Tristate { True, False, Undecided };

inline std::string tristate_name(Tristate t) {
    return t == Tristate::True ? "true" : t == Tristate::False ? "false" : "undecided";
}

// End(m) is local iff every endomorphism is nilpotent or invertible.
template <class F>
Tristate local_end_check(const Module<F>& m, std::uint64_t bound = std::uint64_t{1} << 16) {
    // Endomorphisms with image in rad(m) form a nilpotent ideal, so End(m) is local
    // iff its image in End(top m) is; every element there must be a unit or nilpotent.
    const F& f = m.field;
    auto H = hom_space(m, m);
    if (H.empty()) return Tristate::False;
    auto T = top_maps(m, m, H);
    int t = T.front().rows;
    Mat<F> flat(f, t * t, static_cast<int>(T.size()));
    for (std::size_t b = 0; b < T.size(); ++b)
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) flat(i * t + j, int(b)) = T[b](i, j);
    auto piv = rref(flat);
    int e = static_cast<int>(piv.size());
    int q = F::q;
    double total = std::pow(double(q), e);
    if (total > double(bound)) return Tristate::Undecided;
    auto N = static_cast<std::uint64_t>(total);
    for (std::uint64_t it = 0; it < N; ++it) {
        std::uint64_t r = it;
        Mat<F> X(f, t, t);
        for (int k = 0; k < e; ++k) {
            auto c = static_cast<typename F::elem>(r % q);
            r /= q;
            if (!f.is_zero(c)) X = X + T[piv[k]].scaled(c);
        }
        if (rank(X) == t) continue;
        if (X.pow(t) != Mat<F>(f, t, t)) return Tristate::False;
    }
    return Tristate::True;
}

}  // namespace endolift
