#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "repmod.hpp"

namespace endolift {

struct SyzygyCertificate {
    std::string direction;  // "omega" or "coomega"
    int exponent = 1;
    int input_dim = 0;
    int output_dim = 0;
    int cover_rank = 0;
    int group_order = 0;
    bool ledger_ok = false;              // output = rank * |G| - input
    std::vector<int> smith_exponents;    // coefficient-ring runs only
    bool kernel_free = true;

    nlohmann::json to_json() const {
        return {{"direction", direction},       {"exponent", exponent},     {"input_dim", input_dim},
                {"output_dim", output_dim},     {"cover_rank", cover_rank}, {"group_order", group_order},
                {"ledger_ok", ledger_ok},       {"kernel_free", kernel_free},
                {"smith_exponents", smith_exponents}};
    }
};

template <class R>
struct SyzygyResult {
    MatrixRep<R> rep;
    SyzygyCertificate cert;
};

namespace detail {

inline SyzygyCertificate make_cert(const char* dir, int in, int out, int rank, int G) {
    SyzygyCertificate c;
    c.direction = dir;
    c.input_dim = in;
    c.output_dim = out;
    c.cover_rank = rank;
    c.group_order = G;
    c.ledger_ok = out == rank * G - in;
    return c;
}

template <class R>
int precision_of(const R& r) {
    if constexpr (std::is_same_v<R, Zmod2N>) return r.N;
    else return r.N();
}

}  // namespace detail

// Kernel of a minimal projective cover.  Over Z/2^N (or Z/2^N[w]) the cover lifts the
// residue-field cover and the kernel is read off a Smith form.
template <class R>
SyzygyResult<R> omega(const MatrixRep<R>& v) {
    const int G = v.group.order();
    if constexpr (R::is_field) {
        auto alg = group_algebra(v.group, v.ring);
        auto o = omega(alg, as_module(v));
        auto rep = as_rep(v.group, o.module);
        return {rep, detail::make_cert("omega", v.n, rep.n, o.cover_rank, G)};
    } else {
        using F = typename R::residue_field;
        const R& rg = v.ring;
        auto vf = reduce_rep(v);
        auto algf = group_algebra(v.group, F{});
        auto cov = projective_cover(algf, as_module(vf));
        int r = cov.rank;
        auto alg_tree = algf;  // shares the basis tree
        Mat<R> pi(rg, v.n, 0);
        for (int gi : cov.generators) {
            std::vector<Mat<R>> cols(G);
            Mat<R> w(rg, v.n, 1);
            w(gi, 0) = rg.one();
            cols[0] = w;
            for (int k : alg_tree.order)
                if (k != 0) cols[k] = v.gens[alg_tree.tree[k].first] * cols[alg_tree.tree[k].second];
            Mat<R> block(rg, v.n, G);
            for (int k = 0; k < G; ++k)
                for (int i = 0; i < v.n; ++i) block(i, k) = cols[k](i, 0);
            pi = hstack(pi, block);
        }
        auto s = smith_form(pi);
        auto cert = detail::make_cert("omega", v.n, r * G - v.n, r, G);
        cert.smith_exponents = s.exponents;
        int prec = detail::precision_of(rg);
        cert.kernel_free = s.unit_count() == v.n && s.all_units_or_zero(prec);
        if (!cert.kernel_free) throw std::runtime_error("omega: Smith invariants are not all units");
        int k = r * G - v.n;
        auto K = s.Vinv.block(0, v.n, r * G, k);
        auto Kleft = s.V.block(v.n, 0, k, r * G);
        auto reg = regular_rep(v.group, rg);
        MatrixRep<R> out{v.group, rg, k, {}};
        for (std::size_t g = 0; g < v.gens.size(); ++g) {
            Mat<R> P(rg, 0, 0);
            for (int i = 0; i < r; ++i) P = direct_sum(P, reg.gens[g]);
            auto PK = P * K;
            auto A = Kleft * PK;
            if (K * A != PK) throw std::logic_error("omega: kernel is not a submodule");
            out.gens.push_back(std::move(A));
        }
        return {out, cert};
    }
}

// Cokernel of an injective hull, computed as dual(omega(dual(v))).
template <class R>
SyzygyResult<R> coomega(const MatrixRep<R>& v) {
    auto o = omega(dual(v));
    o.rep = dual(o.rep);
    o.cert.direction = "coomega";
    return o;
}

constexpr int kOmegaIterGuard = 6;

template <class R>
MatrixRep<R> omega_iter(const MatrixRep<R>& v, int i, std::vector<SyzygyCertificate>* certs = nullptr) {
    if (std::abs(i) > kOmegaIterGuard) throw std::invalid_argument("omega_iter: |i| exceeds guard");
    MatrixRep<R> cur = v;
    for (int k = 0; k < std::abs(i); ++k) {
        auto r = i > 0 ? omega(cur) : coomega(cur);
        r.cert.exponent = k + 1;
        if (certs) certs->push_back(r.cert);
        cur = std::move(r.rep);
    }
    return cur;
}

}  // namespace endolift
