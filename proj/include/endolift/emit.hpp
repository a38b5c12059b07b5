#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "suites.hpp"

namespace endolift {

struct EmitOptions {
    std::string family = "sd";
    int d = 4;
    int N = 16;
    std::string module = "L";  // k | L | Y
    int power = 0;             // Omega^power of the module
    Branch branch = Branch::Plus;
    bool over_w = false;       // matrices over the lift ring instead of the residue field
    bool unsafe_large = false;
};

inline Branch parse_branch(const std::string& s) {
    if (s == "plus") return Branch::Plus;
    if (s == "minus") return Branch::Minus;
    throw std::invalid_argument("branch must be plus or minus");
}

inline void check_emit(EmitOptions& o) {
    VerifyOptions v;
    v.family = o.family;
    v.d = o.d;
    v.N = o.N;
    v.unsafe_large = o.unsafe_large;
    v = normalize(v);
    o.family = v.family;
    if (std::abs(o.power) > kOmegaIterGuard)
        throw std::invalid_argument("omega power out of range");
    if (o.module != "k" && o.module != "L" && o.module != "Y") throw std::invalid_argument("module must be k, L or Y");
    if (o.module == "Y" && o.family != "sd") throw std::invalid_argument("Y is defined for sd only");
    if (o.module == "L" && o.family == "cyclic") throw std::invalid_argument("cyclic family has no L");
}

// {d, N, branch, b_coeffs_mod_phi, beta_c_basis, checks}
inline nlohmann::json emit_beta(int d, Branch br, int N) {
    if (d < 4) throw std::invalid_argument("beta is defined for d >= 4");
    auto c = beta_element(d, br, N).to_json();
    return {{"d", c["d"]},
            {"N", c["N"]},
            {"branch", c["branch"]},
            {"b_coeffs_mod_phi", c["b_coeffs_mod_phi"]},
            {"beta_c_basis", c["beta_c_basis"]},
            {"checks", c["checks"]}};
}

namespace emit_detail {

template <class Fn>
auto with_lift(const EmitOptions& o, Fn&& fn) {
    const int d = o.d, N = o.N;
    if (o.family == "sd") {
        auto g = GroupSpec::sd(d);
        if (o.module == "k") return fn(trivial_rep(g, Zmod2N(N)));
        if (o.module == "Y") return fn(permutation_Y(d, Zmod2N(N)));
        return fn(module_L_SD(d, Zmod2N(N)));
    }
    if (o.family == "gq") {
        if (o.module == "k") return fn(trivial_rep(GroupSpec::gq(d), Zmod2N(N)));
        return fn(suite_detail::gq_lift(d, N, o.branch));
    }
    if (o.family == "cyclic") return fn(trivial_rep(GroupSpec::cyclic(d), Zmod2N(N)));
    // q8: L needs the cube root of unity, k is taken over the same ring for uniformity
    if (o.module == "k") return fn(trivial_rep(GroupSpec::q8(), ZmodOmega(N)));
    return fn(module_L_Q8(ZmodOmega(N)));
}

}  // namespace emit_detail

inline nlohmann::json emit_matrices(EmitOptions o) {
    check_emit(o);
    return emit_detail::with_lift(o, [&](auto v) {
        auto w = omega_iter(v, o.power);
        nlohmann::json j{{"module", o.module}, {"omega_power", o.power}};
        if (o.family == "gq" && o.module == "L") j["branch"] = branch_name(o.branch);
        j["representation"] = o.over_w ? to_json(w) : to_json(reduce_rep(w));
        return j;
    });
}

// Generator matrices over W[Gbar]; entries are coefficient vectors indexed by Gbar.
inline nlohmann::json emit_deformation(EmitOptions o) {
    check_emit(o);
    return emit_detail::with_lift(o, [&](auto v) {
        auto u = universal_deformation(omega_iter(v, o.power));
        nlohmann::json j{{"module", o.module}, {"omega_power", o.power}};
        if (o.family == "gq" && o.module == "L") j["branch"] = branch_name(o.branch);
        j["gbar_order"] = u.ring.order;
        j["representation"] = to_json(u);
        return j;
    });
}

// {family, d, basis: [word], table: [[coefficient vector]]}
inline nlohmann::json emit_lambda(LambdaFamily fam, int d) { return build_lambda(fam, d).to_json(); }

}  // namespace endolift
