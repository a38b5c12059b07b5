#include <endolift/emit.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace endolift;

namespace {

struct Log {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

MatrixRep<Zmod2N> gq_lift(int d, int N, Branch br) { return module_L_GQ(d, Zmod2N(N), beta_element(d, br, N).beta); }

template <class F>
bool iso(const MatrixRep<F>& a, const MatrixRep<F>& b) {
    return is_isomorphic(a, b).status == IsoStatus::Isomorphic;
}

// 1. the Q8 module over F4 and its lift over Z/2^N[w]
void q8_matrices(Log& log) {
    auto L = module_L_Q8(GF4{});
    log.expect(check_relations(L), "rho_L relations over F4");
    auto LW = module_L_Q8(ZmodOmega(16));
    log.expect(check_relations(LW), "rho_L,W relations over Z/2^16[w]");
    auto r = reduce_rep(LW);
    log.expect(r.gens == L.gens, "rho_L,W reduces to rho_L");
}

// 2. the quadratic, tau, Delta and Phi
void quadratic(Log& log) {
    for (int d : {4, 5}) {
        auto ring = QuotRing::modulo(16, phi_poly(d));
        for (auto br : {Branch::Plus, Branch::Minus})
            log.expect(ring.is_zero(crucial_residual(ring, d, b_solution(ring, d, br).b)),
                       "crucial identity d=" + std::to_string(d) + " " + branch_name(br));
        std::int64_t c = std::int64_t{1} << (d - 3);
        log.expect(tau_poly(d).truncate(3) == (IntPoly{0, -c, c * (c - 1) / 2}), "tau mod t^3, d=" + std::to_string(d));
        auto phi = phi_poly(d);
        log.expect(is_distinguished(phi) && phi.degree() == (1 << (d - 2)), "Phi distinguished, d=" + std::to_string(d));
    }
    auto t = IntPoly::t();
    auto one = IntPoly::constant(1);
    log.expect(discriminant(4) == t * t * ((one - t) * (one - t) - IntPoly::constant(8)), "Delta for d=4");
}

// 3. beta beta* = z, and the mod-2 module
void beta_identity(Log& log) {
    for (int d : {4, 5})
        for (int N : {4, 8, 16})
            for (auto br : {Branch::Plus, Branch::Minus}) {
                auto tag = "d=" + std::to_string(d) + " N=" + std::to_string(N) + " " + branch_name(br);
                auto c = beta_element(d, br, N);
                SRing S(d, Zmod2N(N));
                log.expect(S.eq(S.mul(c.beta, S.star(c.beta)), S.x_pow(S.M() / 2)), "beta beta* = z, " + tag);
                auto L = reduce_rep(module_L_GQ(d, Zmod2N(N), c.beta));
                log.expect(check_relations(L), "module_L_GQ relations, " + tag);
                log.expect(endo_trivial_check(L), "module_L_GQ endo-trivial, " + tag);
            }
}

// 4. V* (x) V = k + free
template <class F>
void endo_one(Log& log, const MatrixRep<F>& v, const std::string& name) {
    auto s = strip_free(tensor(dual(v), v));
    log.expect(s.core.n == 1 && is_trivial_module(s.core), name + ": stripped V*V is k");
    log.expect((v.n * v.n) % v.group.order() == 1, name + ": dim^2 = 1 mod |G|");
}

void endo_trivial(Log& log) {
    for (auto g : {GroupSpec::sd(4), GroupSpec::gq(4), GroupSpec::q8()}) endo_one(log, trivial_rep(g, GF2{}), "k " + g.name());
    for (int d : {4, 5}) {
        endo_one(log, reduce_rep(module_L_SD(d, Zmod2N(16))), "L_SD d=" + std::to_string(d));
        endo_one(log, reduce_rep(gq_lift(d, 16, Branch::Plus)), "L_GQ d=" + std::to_string(d));
    }
    endo_one(log, module_L_Q8(GF4{}), "L_Q8 over F4");
}

// 5. restrictions to the two rank-two subgroups
void restriction_check(Log& log, const MatrixRep<GF2>& v, const std::vector<GroupElement>& gens, int eps,
                       const std::string& name) {
    auto r = restrict_rep(v, gens);
    auto c = classify_syzygy_of_trivial(r);
    log.expect(c.epsilon && *c.epsilon == eps, name + ": epsilon " + c.label());
    log.expect(c.core_dim + c.free_summands * r.group.order() == v.n, name + ": dimension ledger");
}

void restrictions(Log& log) {
    for (int d : {4, 5}) {
        auto g = GroupSpec::sd(d);
        auto L = reduce_rep(module_L_SD(d, Zmod2N(16)));
        auto x4 = g.x_pow(1LL << (d - 3));
        restriction_check(log, L, {x4, g.mul(g.y(), g.x())}, 1, "SD H d=" + std::to_string(d));
        restriction_check(log, L, {g.y(), g.z()}, -1, "SD E d=" + std::to_string(d));
        auto q = GroupSpec::gq(d);
        for (auto br : {Branch::Plus, Branch::Minus}) {
            auto Lq = reduce_rep(gq_lift(d, 16, br));
            auto xq = q.x_pow(1LL << (d - 3));
            auto cH = classify_syzygy_of_trivial(restrict_rep(Lq, {q.mul(q.y(), q.x()), xq}));
            auto cHp = classify_syzygy_of_trivial(restrict_rep(Lq, {q.y(), xq}));
            auto tag = "GQ d=" + std::to_string(d) + " " + branch_name(br);
            log.expect(cH.epsilon && cHp.epsilon && *cH.epsilon != 0 && *cH.epsilon == -*cHp.epsilon,
                       tag + ": opposite signs on H and H'");
            log.expect(cH.core_dim + 8 * cH.free_summands == Lq.n && cHp.core_dim + 8 * cHp.free_summands == Lq.n,
                       tag + ": dimension ledger");
        }
    }
}

// 6. periodic resolution of k
void periodicity(Log& log) {
    for (int d : {3, 4, 5}) {
        auto g = GroupSpec::gq(d);
        auto k = trivial_rep(g, GF2{});
        int n = g.order();
        std::vector<int> expected{1, n - 1, n + 1, n - 1}, dims;
        auto cur = k;
        for (int i = 0; i < 4; ++i) {
            dims.push_back(cur.n);
            cur = omega(cur).rep;
        }
        log.expect(dims == expected, "Omega^i(k) dimensions, d=" + std::to_string(d));
        log.expect(iso(cur, k), "Omega^4(k) = k, d=" + std::to_string(d));
        std::vector<SyzygyCertificate> certs;
        omega_iter(trivial_rep(g, Zmod2N(16)), 4, &certs);
        bool unit = true;
        for (auto& c : certs) {
            unit = unit && c.kernel_free;
            for (int e : c.smith_exponents) unit = unit && (e == 0 || e == 16);
        }
        log.expect(unit && certs.size() == 4, "unit Smith invariants over Z/2^16, d=" + std::to_string(d));
    }
}

// 7. universal deformations
template <class B>
void deform_one(Log& log, const MatrixRep<B>& v, int N, const std::string& name) {
    auto u = universal_deformation(v);
    log.expect(check_relations(u), name + ": relations over W[Gbar]");
    log.expect(augmentation(u).gens == v.gens, name + ": augmentation");
    std::vector<std::vector<typename B::elem>> dets;
    for (auto chi : klein_characters()) dets.push_back(determinant_vector(specialize_character(u, chi)));
    bool distinct = true;
    for (int p = 0; p < 4; ++p)
        for (int q = p + 1; q < 4; ++q) distinct = distinct && dets[p] != dets[q];
    if (N >= 2) log.expect(distinct, name + ": distinct determinant vectors");
}

void deformations(Log& log) {
    for (int N : {2, 16}) {
        auto tag = " N=" + std::to_string(N);
        for (int i = -1; i <= 2; ++i) {
            auto is = " Omega^" + std::to_string(i);
            deform_one(log, omega_iter(trivial_rep(GroupSpec::sd(4), Zmod2N(N)), i), N, "SD k" + is + tag);
            deform_one(log, omega_iter(module_L_SD(4, Zmod2N(N)), i), N, "SD L" + is + tag);
            deform_one(log, omega_iter(trivial_rep(GroupSpec::gq(4), Zmod2N(N)), i), N, "GQ k" + is + tag);
            deform_one(log, omega_iter(gq_lift(4, N, Branch::Plus), i), N, "GQ L" + is + tag);
            deform_one(log, omega_iter(trivial_rep(GroupSpec::q8(), ZmodOmega(N)), i), N, "Q8 k" + is + tag);
            deform_one(log, omega_iter(module_L_Q8(ZmodOmega(N)), i), N, "Q8 L" + is + tag);
        }
    }
    for (int d : {2, 3, 4}) {
        auto u = cyclic_universal(d, Zmod2N(16));
        int m = 1 << d;
        log.expect(u.n == m - 1 && u.gens.size() == 1, "cyclic universal shape d=" + std::to_string(d));
        log.expect(u.gens[0].pow(m) == Mat<AbGroupRing<Zmod2N>>::identity(u.ring, u.n),
                   "sigma^(2^d) = 1, d=" + std::to_string(d));
    }
}

// 8. Lambda algebras
void lambda_suite(Log& log) {
    for (int d : {4, 5}) log.expect(verify_iso(f_map<GF2>(LambdaFamily::SD, d)).ok, "verify_iso SD d=" + std::to_string(d));
    log.expect(verify_iso(f_map<GF4>(LambdaFamily::GQ, 3)).ok, "verify_iso GQ d=3");
    for (int d : {4, 5}) log.expect(verify_iso(f_map<GF2>(LambdaFamily::GQ, d)).ok, "verify_iso GQ d=" + std::to_string(d));
    for (int d : {4, 5}) {
        auto tag = " d=" + std::to_string(d);
        int half = 1 << (d - 1);
        auto A = build_lambda(LambdaFamily::SD, d);
        log.expect(A.dim() == (1 << d), "dim Lambda_SD" + tag);
        auto L = lambda_local_algebra<GF2>(A);
        auto Y = lambda_module(LambdaModuleKind::Y, A, L);
        auto La = lambda_module(LambdaModuleKind::La, A, L);
        log.expect(uniserial_check(L, Y) && radical_layers(L, Y).size() == std::size_t(half), "Y uniserial" + tag);
        log.expect(uniserial_check(L, La) && radical_layers(L, La).size() == std::size_t(half - 1), "L_a uniserial" + tag);
        auto m = f_map<GF2>(LambdaFamily::SD, d);
        log.expect(is_isomorphic(transport(m, reduce_rep(module_L_SD(d, Zmod2N(16)))), La).status == IsoStatus::Isomorphic,
                   "transport(L_SD) = L_a" + tag);
        auto Lb = lambda_module(LambdaModuleKind::Lb, A, L);
        auto se = stable_end_and_ext(L, La, Lb);
        log.expect(se.stable_end == 1 && se.ext1 == 1, "SD stable End / Ext^1" + tag);
        // the defining identities in the group algebra
        auto g = m.group;
        using E = GroupAlgebraElement<GF2>;
        auto one = E::one(g, GF2{}), y = E::of(g, GF2{}, g.y());
        E sq(g, GF2{}), tr(g, GF2{});
        for (int i = 0; i < half / 2; ++i) sq = sq + E::x_pow(g, GF2{}, 2 * i) * (one + y);
        for (int i = 0; i < half; ++i) tr = tr + E::x_pow(g, GF2{}, i) * (one + y);
        log.expect(m.ra * m.ra == sq, "r_a^2 identity" + tag);
        log.expect((m.ra * m.rb).pow(A.K()) == tr, "(r_a r_b)^K identity SD" + tag);
    }
    for (int d : {3, 4, 5}) {
        auto tag = " GQ d=" + std::to_string(d);
        int half = 1 << (d - 1);
        auto A = build_lambda(LambdaFamily::GQ, d);
        log.expect(A.dim() == (1 << d), "dim Lambda" + tag);
        auto L = lambda_local_algebra<GF2>(A);
        auto La = lambda_module(LambdaModuleKind::La, A, L);
        auto Lb = lambda_module(LambdaModuleKind::Lb, A, L);
        log.expect(uniserial_check(L, La) && La.n == half - 1, "L_a uniserial" + tag);
        bool chain = true;
        std::vector<int> dims;
        for (auto& s : lambda_omega_orbit(A, L)) {
            chain = chain && s.status == IsoStatus::Isomorphic;
            dims.push_back(s.dim);
        }
        log.expect(chain && dims == std::vector<int>{half + 1, half - 1, half + 1, half - 1}, "Omega orbit chain" + tag);
        auto se = stable_end_and_ext(L, La, Lb);
        log.expect(se.stable_end == 1 && se.ext1 == 1, "stable End / Ext^1" + tag);
        if (d <= 4) {
            log.expect(local_end_check(lambda_module(LambdaModuleKind::Mab, A, L)) == Tristate::True, "M_ab local" + tag);
            if (d == 3) {
                auto L4 = lambda_local_algebra<GF4>(A);
                log.expect(local_end_check(lambda_module(LambdaModuleKind::Mab, A, L4)) == Tristate::True,
                           "M_ab local over F4" + tag);
            }
        }
    }
    {
        auto m = f_map<GF4>(LambdaFamily::GQ, 3);
        auto g = m.group;
        using E = GroupAlgebraElement<GF4>;
        auto one = E::one(g, GF4{}), y = E::of(g, GF4{}, g.y());
        E tr(g, GF4{});
        for (int i = 0; i < 4; ++i) tr = tr + E::x_pow(g, GF4{}, i) * (one + y);
        log.expect((m.ra * m.rb).pow(2) == tr, "(r_a r_b)^K identity GQ d=3");
    }
    for (int d : {4, 5}) {
        auto m = f_map<GF2>(LambdaFamily::GQ, d);
        auto g = m.group;
        using E = GroupAlgebraElement<GF2>;
        auto one = E::one(g, GF2{}), y = E::of(g, GF2{}, g.y());
        E tr(g, GF2{});
        for (int i = 0; i < (1 << (d - 1)); ++i) tr = tr + E::x_pow(g, GF2{}, i) * (one + y);
        log.expect((m.ra * m.rb).pow(1 << (d - 2)) == tr, "(r_a r_b)^K identity GQ d=" + std::to_string(d));
    }
}

// 9. transport of the generalized quaternion module
void gq_transport(Log& log) {
    for (int d : {4, 5}) {
        auto A = build_lambda(LambdaFamily::GQ, d);
        auto L = lambda_local_algebra<GF2>(A);
        auto m = f_map<GF2>(LambdaFamily::GQ, d);
        auto La = lambda_module(LambdaModuleKind::La, A, L), Lb = lambda_module(LambdaModuleKind::Lb, A, L);
        for (auto br : {Branch::Plus, Branch::Minus}) {
            auto tag = " d=" + std::to_string(d) + " " + branch_name(br);
            auto v = reduce_rep(gq_lift(d, 16, br));
            auto T = transport(m, v);
            bool lands = is_isomorphic(T, La).status == IsoStatus::Isomorphic ||
                         is_isomorphic(T, Lb).status == IsoStatus::Isomorphic;
            log.expect(lands, "transport lands on L_a or L_b" + tag);
            auto lam2 = omega(L, omega(L, T).module).module;
            log.expect(iso(inverse_transport(m, lam2), omega_iter(v, 2)), "Omega^2 coherence" + tag);
        }
    }
}

// 10. byte-identical certificates from repeated full runs
std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

void determinism(Log& log) {
    std::vector<std::pair<std::string, std::string>> runs{
        {"sd4", "verify sd --d 4 --suite all"},         {"sd5", "verify sd --d 5 --suite all"},
        {"gq4", "verify gq --d 4 --suite all"},         {"gq5", "verify gq --d 5 --suite all"},
        {"q8w", "verify q8 --omega --suite all"},       {"cyc", "verify cyclic --d 4 --suite all"},
        {"beta5", "emit beta --d 5 --branch minus"},    {"def", "emit deformation --group gq --d 4 --module L"},
        {"lam", "emit matrices --lambda gq --d 5"}};
    for (auto& [tag, args] : runs) {
        std::string a = "accept_" + tag + "_1.json", b = "accept_" + tag + "_2.json";
        std::string cli = std::string("\"") + ENDOLIFT_CLI + "\" ";
        int r1 = std::system((cli + args + " --out " + a).c_str());
        int r2 = std::system(("ENDOLIFT_THREADS=3 " + cli + args + " --out " + b).c_str());
        log.expect(r1 == 0 && r2 == 0, tag + ": runs exit 0");
        auto s1 = slurp(a), s2 = slurp(b);
        log.expect(!s1.empty() && s1 == s2, tag + ": identical bytes");
    }
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<void(Log&)>>> criteria{
        {"Q8 module over F4 and its lift over Z/2^N[w]", q8_matrices},
        {"quadratic identity, tau, Delta, distinguished Phi", quadratic},
        {"beta beta* = z for d in {4,5}, N in {4,8,16}; mod-2 module is endo-trivial", beta_identity},
        {"V* (x) V = k + free for k, L_SD, L_Q8, L_GQ", endo_trivial},
        {"restriction classification and free-summand ledger", restrictions},
        {"syzygy dimensions, Omega^4(k) = k, unit Smith invariants", periodicity},
        {"universal deformations, characters, cyclic case", deformations},
        {"Lambda algebras and their modules", lambda_suite},
        {"transport of the generalized quaternion module", gq_transport},
        {"byte-identical certificates across runs", determinism}};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Log log;
        try {
            criteria[i].second(log);
        } catch (const std::exception& e) {
            log.failures.push_back(std::string("exception: ") + e.what());
        }
        bool ok = log.failures.empty();
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << "\n";
        for (auto& f : log.failures) std::cout << "    " << f << "\n";
        std::cout.flush();
    }
    return failed ? 1 : 0;
}
