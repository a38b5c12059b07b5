#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "deformation.hpp"
#include "lambda.hpp"
#include "quaternion_lift.hpp"
#include "report.hpp"
#include "syzygy.hpp"

namespace endolift {

struct VerifyOptions {
    std::string family = "sd";  // sd | gq | q8 | cyclic
    int d = 4;
    int N = 16;
    std::string suite = "all";  // all | endotrivial | lift | lambda | deform
    bool omega = false;         // extend scalars to F_4 (Q8 only)
    std::optional<std::uint64_t> seed;
    bool unsafe_large = false;
};

constexpr int kDeskMaxD = 5;
constexpr int kDeskMaxN = 16;

inline int default_d(const std::string& family) {
    if (family == "q8") return 3;
    if (family == "cyclic") return 3;
    return 4;
}

// Bring gq with d = 3 to q8 and validate bounds; throws std::invalid_argument on bad input.
inline VerifyOptions normalize(VerifyOptions o) {
    if (o.family == "gq" && o.d == 3) o.family = "q8";
    const std::vector<std::string> families{"sd", "gq", "q8", "cyclic"};
    if (std::find(families.begin(), families.end(), o.family) == families.end())
        throw std::invalid_argument("unknown group family '" + o.family + "'");
    const std::vector<std::string> suites{"all", "endotrivial", "lift", "lambda", "deform"};
    if (std::find(suites.begin(), suites.end(), o.suite) == suites.end())
        throw std::invalid_argument("unknown suite '" + o.suite + "'");
    int lo = o.family == "sd" ? 4 : o.family == "gq" ? 4 : o.family == "q8" ? 3 : 2;
    if (o.family == "q8" && o.d != 3) throw std::invalid_argument("q8 has d = 3");
    if (o.d < lo) throw std::invalid_argument(o.family + " needs d >= " + std::to_string(lo));
    int dmax = o.unsafe_large ? 6 : kDeskMaxD;
    int nmax = o.unsafe_large ? 62 : kDeskMaxN;
    if (o.d > dmax) throw std::invalid_argument("d exceeds " + std::to_string(dmax) + (o.unsafe_large ? "" : " (use --unsafe-large)"));
    if (o.N < 1 || o.N > nmax)
        throw std::invalid_argument("precision must lie in [1, " + std::to_string(nmax) + "]" + (o.unsafe_large ? "" : " (use --unsafe-large)"));
    if (o.omega && o.family != "q8") throw std::invalid_argument("--omega applies to q8 only");
    return o;
}

namespace suite_detail {

inline IsoOptions iso_opts(const VerifyOptions& o) {
    IsoOptions i;
    i.seed = o.seed;
    return i;
}

template <class F>
nlohmann::json iso_json(const IsoResult<F>& r) {
    return {{"status", iso_status_name(r.status)}, {"hom_dim", r.hom_dim}, {"reason", r.reason}};
}

inline Outcome from_iso(IsoStatus s, bool want_iso, nlohmann::json w) {
    if (s == IsoStatus::Undecided) return Outcome::undecided(std::move(w));
    return Outcome::expect((s == IsoStatus::Isomorphic) == want_iso, std::move(w));
}

template <class F>
Outcome endo_outcome(const MatrixRep<F>& v) {
    auto r = endo_trivial_report(v);
    return Outcome::expect(r.endo_trivial, {{"dim", r.dim},
                                            {"tensor_dim", r.tensor_dim},
                                            {"free_summands", r.free_summands},
                                            {"core_dim", r.core_dim},
                                            {"dim_squared_congruent_1", r.dim_congruence}});
}

template <class R>
nlohmann::json elems_json(const R& ring, const std::vector<typename R::elem>& v) {
    nlohmann::json j = nlohmann::json::array();
    for (auto& e : v) j.push_back(ring.to_json(e));
    return j;
}

// Universal deformation of a W-lift: relations over W[Gbar], reductions, and the four W-points.
template <class B>
Outcome deform_outcome(const MatrixRep<B>& v, int N) {
    auto u = universal_deformation(v);
    nlohmann::json w;
    bool ok = true;
    w["dim"] = v.n;
    w["relations"] = check_relations(u);
    ok = ok && w["relations"].get<bool>();
    auto aug = augmentation(u);
    bool aug_ok = true;
    for (std::size_t k = 0; k < v.gens.size(); ++k) aug_ok = aug_ok && aug.gens[k] == v.gens[k];
    w["augmentation_recovers_lift"] = aug_ok;
    ok = ok && aug_ok;
    auto red = full_reduction(u);
    auto vr = reduce_rep(v);
    bool red_ok = true;
    for (std::size_t k = 0; k < v.gens.size(); ++k) red_ok = red_ok && red.gens[k] == vr.gens[k];
    w["reduction_recovers_module"] = red_ok;
    ok = ok && red_ok;
    std::vector<std::vector<typename B::elem>> dets;
    nlohmann::json dj = nlohmann::json::object();
    bool spec_ok = true;
    for (auto chi : klein_characters()) {
        auto s = specialize_character(u, chi);
        spec_ok = spec_ok && check_relations(s);
        auto sr = reduce_rep(s);
        for (std::size_t k = 0; k < v.gens.size(); ++k) spec_ok = spec_ok && sr.gens[k] == vr.gens[k];
        if (chi.sx == 1 && chi.sy == 1)
            for (std::size_t k = 0; k < v.gens.size(); ++k) spec_ok = spec_ok && s.gens[k] == v.gens[k];
        dets.push_back(determinant_vector(s));
        dj[chi.name()] = elems_json(v.ring, dets.back());
    }
    w["specializations_are_lifts"] = spec_ok;
    w["determinants"] = dj;
    ok = ok && spec_ok;
    if (N >= 2) {
        bool distinct = true;
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) distinct = distinct && !(dets[p] == dets[q]);
        w["determinants_distinct"] = distinct;
        ok = ok && distinct;
    } else {
        w["determinants_distinct"] = "not applicable at N = 1";
    }
    return Outcome::expect(ok, w);
}

// Omega over the coefficient ring: freeness of the kernel and agreement with the field computation.
template <class R>
Outcome w_syzygy_outcome(const MatrixRep<R>& v) {
    nlohmann::json steps = nlohmann::json::array();
    bool ok = true;
    for (int i : {1, 2, -1}) {
        std::vector<SyzygyCertificate> certs;
        auto o = omega_iter(v, i, &certs);
        auto field_side = omega_iter(reduce_rep(v), i);
        auto iso = is_isomorphic(reduce_rep(o), field_side);
        bool free = true, ledger = true;
        for (auto& c : certs) {
            free = free && c.kernel_free;
            ledger = ledger && c.ledger_ok;
        }
        bool step_ok = free && ledger && check_relations(o) && iso.status == IsoStatus::Isomorphic;
        ok = ok && step_ok;
        steps.push_back({{"exponent", i}, {"dim", o.n}, {"kernel_free", free}, {"ledger_ok", ledger},
                         {"reduction_vs_field", iso_status_name(iso.status)}});
    }
    return Outcome::expect(ok, {{"steps", steps}});
}

inline MatrixRep<Zmod2N> gq_lift(int d, int N, Branch br) {
    auto c = beta_element(d, br, N);
    if (!c.all_pass()) throw std::runtime_error("beta certificate failed");
    return module_L_GQ(d, Zmod2N(N), c.beta);
}

// Pairs {A, B} with A not isomorphic to B, stable End of each of dimension 1, and Omega^2 swapping them.
template <class F>
Outcome tube_pairs_outcome(const std::vector<std::pair<std::string, std::pair<MatrixRep<F>, MatrixRep<F>>>>& pairs,
                           const IsoOptions& io) {
    nlohmann::json w = nlohmann::json::object();
    bool ok = true, undecided = false;
    for (auto& [name, pr] : pairs) {
        auto& [A, B] = pr;
        auto ab = is_isomorphic(A, B, io).status;
        auto swap1 = is_isomorphic(omega_iter(A, 2), B, io).status;
        auto swap2 = is_isomorphic(omega_iter(B, 2), A, io).status;
        int sa = stable_hom_dim(A, A), sb = stable_hom_dim(B, B);
        bool p_ok = ab == IsoStatus::NotIsomorphic && swap1 == IsoStatus::Isomorphic && swap2 == IsoStatus::Isomorphic &&
                    sa == 1 && sb == 1;
        undecided = undecided || ab == IsoStatus::Undecided || swap1 == IsoStatus::Undecided || swap2 == IsoStatus::Undecided;
        ok = ok && p_ok;
        w[name] = {{"pair_isomorphic", iso_status_name(ab)},
                   {"omega2_first_to_second", iso_status_name(swap1)},
                   {"omega2_second_to_first", iso_status_name(swap2)},
                   {"stable_end_dims", {sa, sb}}};
    }
    if (!ok && undecided) return Outcome::undecided(w);
    return Outcome::expect(ok, w);
}

template <class F>
int count_classes(const std::vector<MatrixRep<F>>& mods, const IsoOptions& io, bool& undecided) {
    int classes = 0;
    for (std::size_t i = 0; i < mods.size(); ++i) {
        bool fresh = true;
        for (std::size_t j = 0; j < i; ++j) {
            auto s = is_isomorphic(mods[i], mods[j], io).status;
            if (s == IsoStatus::Undecided) undecided = true;
            if (s == IsoStatus::Isomorphic) fresh = false;
        }
        classes += fresh;
    }
    return classes;
}

inline nlohmann::json dims_json(const std::vector<int>& v) { return nlohmann::json(v); }

// Omega^0..Omega^3(k) dimensions and Omega^4(k) = k for a group with periodic cohomology.
template <class F>
Outcome periodic_syzygy_outcome(const GroupSpec& g, const F& f, const IsoOptions& io) {
    auto k = trivial_rep(g, f);
    int n = g.order();
    std::vector<int> dims, expected{1, n - 1, n + 1, n - 1};
    auto cur = k;
    for (int i = 0; i < 4; ++i) {
        dims.push_back(cur.n);
        cur = omega(cur).rep;
    }
    auto iso = is_isomorphic(cur, k, io);
    nlohmann::json w{{"dims", dims}, {"expected", expected}, {"omega4_vs_k", iso_status_name(iso.status)}};
    if (dims != expected) return Outcome::fail(w);
    return from_iso(iso.status, true, w);
}

template <class F>
Outcome restriction_outcome(const MatrixRep<F>& v, const std::vector<GroupElement>& gens, int expected_eps,
                            const IsoOptions& io) {
    auto r = restrict_rep(v, gens);
    auto c = classify_syzygy_of_trivial(r, io);
    int order = r.group.order();
    bool ledger = c.core_dim + c.free_summands * order == v.n;
    nlohmann::json w{{"subgroup", r.group.name()}, {"epsilon", c.label()}, {"free_summands", c.free_summands},
                     {"core_dim", c.core_dim}, {"ledger_ok", ledger}, {"expected_epsilon", expected_eps}};
    if (!c.epsilon && c.status == IsoStatus::Undecided) return Outcome::undecided(w);
    return Outcome::expect(c.epsilon && *c.epsilon == expected_eps && ledger, w);
}

// ---------------------------------------------------------------- Lambda checks

template <class F>
void lambda_jobs(std::vector<CheckJob>& jobs, const std::string& pre, LambdaFamily fam, int d, const VerifyOptions& o,
                 std::optional<MatrixRep<F>> L_group) {
    auto io = iso_opts(o);
    jobs.push_back({pre + "lambda.build", [=] {
                        auto A = build_lambda(fam, d);
                        return Outcome::expect(A.dim() == (1 << d), {{"dim", A.dim()}, {"associative", true}});
                    }});
    jobs.push_back({pre + "lambda.verify_iso", [=] {
                        auto c = verify_iso(f_map<F>(fam, d));
                        return Outcome::expect(c.ok, c.to_json());
                    }});
    jobs.push_back({pre + "lambda.verify_iso_negative_control", [=] {
                        auto m = f_map<F>(fam, d);
                        // drop the 1 + yx (resp. yx) contribution from r_a
                        auto yx = GroupAlgebraElement<F>::of(m.group, m.ra.ring, m.group.mul(m.group.y(), m.group.x()));
                        m.ra = m.ra - yx;
                        auto c = verify_iso(m);
                        return Outcome::expect(!c.ok && !c.failing.empty(), {{"rejected", !c.ok}, {"failing", c.failing}});
                    }});
    jobs.push_back({pre + "lambda.uniserial", [=] {
                        auto A = build_lambda(fam, d);
                        auto L = lambda_local_algebra<F>(A);
                        int half = 1 << (d - 1);
                        nlohmann::json w;
                        bool ok = true;
                        auto note = [&](const std::string& name, const Module<F>& m, int len) {
                            auto layers = radical_layers(L, m);
                            bool u = uniserial_check(L, m);
                            w[name] = {{"dim", m.n}, {"layers", layers}, {"uniserial", u}, {"expected_length", len}};
                            ok = ok && u && m.n == len && static_cast<int>(layers.size()) == len;
                        };
                        if (fam == LambdaFamily::SD) note("Y", lambda_module(LambdaModuleKind::Y, A, L), half);
                        note("L_a", lambda_module(LambdaModuleKind::La, A, L), half - 1);
                        note("L_b", lambda_module(LambdaModuleKind::Lb, A, L), half - 1);
                        w["regular_uniserial"] = uniserial_check(L, L.regular);
                        ok = ok && !w["regular_uniserial"].get<bool>();
                        return Outcome::expect(ok, w);
                    }});
    jobs.push_back({pre + "lambda.stable_end_ext", [=] {
                        auto A = build_lambda(fam, d);
                        auto L = lambda_local_algebra<F>(A);
                        auto La = lambda_module(LambdaModuleKind::La, A, L);
                        auto Lb = lambda_module(LambdaModuleKind::Lb, A, L);
                        auto ab = stable_end_and_ext(L, La, Lb);
                        int end_b = stable_hom_dim(L, Lb, Lb);
                        int free_end = stable_hom_dim(L, L.regular, L.regular);
                        nlohmann::json w{{"stable_end_La", ab.stable_end}, {"stable_end_Lb", end_b},
                                         {"ext1_La_Lb", ab.ext1}, {"stable_end_regular", free_end}};
                        return Outcome::expect(ab.stable_end == 1 && end_b == 1 && ab.ext1 == 1 && free_end == 0, w);
                    }});
    if (fam == LambdaFamily::GQ) {
        jobs.push_back({pre + "lambda.omega_orbit", [=] {
                            auto A = build_lambda(fam, d);
                            auto L = lambda_local_algebra<F>(A);
                            auto steps = lambda_omega_orbit(A, L, io);
                            int half = 1 << (d - 1);
                            std::vector<int> expected{half + 1, half - 1, half + 1, half - 1};
                            nlohmann::json w = nlohmann::json::array();
                            bool ok = true, und = false;
                            for (std::size_t i = 0; i < steps.size(); ++i) {
                                w.push_back({{"step", i + 1}, {"dim", steps[i].dim}, {"expected", steps[i].expected},
                                             {"status", iso_status_name(steps[i].status)}});
                                ok = ok && steps[i].dim == expected[i] && steps[i].status == IsoStatus::Isomorphic;
                                und = und || steps[i].status == IsoStatus::Undecided;
                            }
                            if (!ok && und) return Outcome::undecided(w);
                            return Outcome::expect(ok, w);
                        }});
        jobs.push_back({pre + "lambda.mab_local", [=] {
                            auto A = build_lambda(fam, d);
                            auto L = lambda_local_algebra<F>(A);
                            auto M = lambda_module(LambdaModuleKind::Mab, A, L);
                            int expected = 2 * ((1 << (d - 1)) - 1);
                            auto t = local_end_check(M);
                            nlohmann::json w{{"dim", M.n}, {"expected_dim", expected}, {"relations", lambda_relations_hold(A, M)},
                                             {"local_end", tristate_name(t)}};
                            if (M.n != expected || !lambda_relations_hold(A, M) || t == Tristate::False) return Outcome::fail(w);
                            if (t == Tristate::Undecided) return Outcome::undecided(w);
                            return Outcome::pass(w);
                        }});
    }
    if (L_group) {
        auto Lg = *L_group;
        jobs.push_back({pre + "lambda.transport", [=] {
                            auto A = build_lambda(fam, d);
                            auto L = lambda_local_algebra<F>(A);
                            auto m = f_map<F>(fam, d);
                            auto T = transport(m, Lg);
                            auto sa = is_isomorphic(T, lambda_module(LambdaModuleKind::La, A, L), io).status;
                            auto sb = is_isomorphic(T, lambda_module(LambdaModuleKind::Lb, A, L), io).status;
                            nlohmann::json w{{"vs_L_a", iso_status_name(sa)}, {"vs_L_b", iso_status_name(sb)}};
                            if (fam == LambdaFamily::SD) {
                                auto Y = permutation_Y(d, F{});
                                auto sy = is_isomorphic(transport(m, Y), lambda_module(LambdaModuleKind::Y, A, L), io).status;
                                w["Y_vs_Y_Lambda"] = iso_status_name(sy);
                                if (sa == IsoStatus::Undecided || sy == IsoStatus::Undecided) return Outcome::undecided(w);
                                return Outcome::expect(sa == IsoStatus::Isomorphic && sy == IsoStatus::Isomorphic, w);
                            }
                            w["lands_on"] = sa == IsoStatus::Isomorphic ? "L_a" : sb == IsoStatus::Isomorphic ? "L_b" : "neither";
                            if (sa != IsoStatus::Isomorphic && sb != IsoStatus::Isomorphic &&
                                (sa == IsoStatus::Undecided || sb == IsoStatus::Undecided))
                                return Outcome::undecided(w);
                            return Outcome::expect(sa == IsoStatus::Isomorphic || sb == IsoStatus::Isomorphic, w);
                        }});
        jobs.push_back({pre + "lambda.omega2_coherence", [=] {
                            auto A = build_lambda(fam, d);
                            auto L = lambda_local_algebra<F>(A);
                            auto m = f_map<F>(fam, d);
                            auto T = transport(m, Lg);
                            auto O2 = omega(L, omega(L, T).module).module;
                            auto back = inverse_transport(m, O2);
                            auto g2 = omega_iter(Lg, 2);
                            auto s = is_isomorphic(back, g2, io).status;
                            return from_iso(s, true, {{"lambda_side_dim", O2.n}, {"group_side_dim", g2.n},
                                                      {"status", iso_status_name(s)}});
                        }});
    }
}

// ---------------------------------------------------------------- families

inline void sd_jobs(std::vector<CheckJob>& jobs, const VerifyOptions& o, bool want(const std::string&, const VerifyOptions&)) {
    const int d = o.d, N = o.N;
    auto io = iso_opts(o);
    auto g = GroupSpec::sd(d);
    auto LW = [=] { return module_L_SD(d, Zmod2N(N)); };
    auto Lk = [=] { return reduce_rep(module_L_SD(d, Zmod2N(N))); };
    if (want("endotrivial", o)) {
        jobs.push_back({"sd.endotrivial.k", [=] { return endo_outcome(trivial_rep(g, GF2{})); }});
        jobs.push_back({"sd.endotrivial.L", [=] { return endo_outcome(Lk()); }});
        jobs.push_back({"sd.endotrivial.L_is_rad_Y", [=] {
                            auto Y = permutation_Y(d, GF2{});
                            auto alg = group_algebra(g, GF2{});
                            auto rad = restrict_to_submodule(as_module(Y), radical_basis(alg, as_module(Y)));
                            auto s = is_isomorphic(rad, as_module(Lk()), io).status;
                            return from_iso(s, true, {{"status", iso_status_name(s)}, {"dim_Y", Y.n}});
                        }});
        jobs.push_back({"sd.restriction.E", [=] {
                            return restriction_outcome(Lk(), {g.y(), g.z()}, -1, io);
                        }});
        jobs.push_back({"sd.restriction.H", [=] {
                            return restriction_outcome(Lk(), {g.x_pow(1LL << (d - 3)), g.mul(g.y(), g.x())}, 1, io);
                        }});
        jobs.push_back({"sd.syzygy.ledger", [=] {
                            std::vector<SyzygyCertificate> certs;
                            omega_iter(trivial_rep(g, GF2{}), 3, &certs);
                            omega_iter(Lk(), 3, &certs);
                            nlohmann::json w = nlohmann::json::array();
                            bool ok = true;
                            for (auto& c : certs) {
                                w.push_back(c.to_json());
                                ok = ok && c.ledger_ok;
                            }
                            return Outcome::expect(ok, w);
                        }});
        jobs.push_back({"sd.syzygy.W_kernel_free.k", [=] { return w_syzygy_outcome(trivial_rep(g, Zmod2N(N))); }});
        jobs.push_back({"sd.syzygy.W_kernel_free.L", [=] { return w_syzygy_outcome(LW()); }});
        jobs.push_back({"sd.ar.omega2_orbits", [=] {
                            auto k = trivial_rep(g, GF2{});
                            std::vector<std::pair<std::string, MatrixRep<GF2>>> reps{
                                {"k", k}, {"Omega k", omega_iter(k, 1)}, {"L", Lk()}, {"Omega L", omega_iter(Lk(), 1)}};
                            nlohmann::json w = nlohmann::json::object();
                            bool ok = true, und = false;
                            for (auto& [name, r] : reps) {
                                auto o2 = omega_iter(r, 2);
                                int se = stable_hom_dim(r, r), se2 = stable_hom_dim(o2, o2);
                                nlohmann::json cmp = nlohmann::json::object();
                                for (auto& [other, s] : reps) {
                                    auto st = is_isomorphic(o2, s, io).status;
                                    cmp[other] = iso_status_name(st);
                                    und = und || st == IsoStatus::Undecided;
                                    ok = ok && st == IsoStatus::NotIsomorphic;
                                }
                                for (auto& [other, s] : reps) {
                                    if (other == name) continue;
                                    auto st = is_isomorphic(r, s, io).status;
                                    und = und || st == IsoStatus::Undecided;
                                    ok = ok && st == IsoStatus::NotIsomorphic;
                                }
                                ok = ok && se == 1 && se2 == 1;
                                w[name] = {{"dim", r.n}, {"stable_end", se}, {"omega2_stable_end", se2}, {"omega2_vs", cmp}};
                            }
                            if (!ok && und) return Outcome::undecided(w);
                            return Outcome::expect(ok, w);
                        }});
    }
    if (want("lift", o)) {
        jobs.push_back({"sd.lift.L_W", [=] {
                            auto v = LW();
                            bool rel = check_relations(v);
                            bool endo = endo_trivial_check(reduce_rep(v));
                            return Outcome::expect(rel && endo, {{"relations", rel}, {"reduction_endo_trivial", endo},
                                                                 {"ring", v.ring.name()}, {"dim", v.n}});
                        }});
    }
    if (want("lambda", o)) lambda_jobs<GF2>(jobs, "sd.", LambdaFamily::SD, d, o, Lk());
    if (want("deform", o)) {
        for (int i = -1; i <= 2; ++i) {
            jobs.push_back({"sd.deform.k.omega" + std::to_string(i),
                            [=] { return deform_outcome(omega_iter(trivial_rep(g, Zmod2N(N)), i), N); }});
            jobs.push_back({"sd.deform.L.omega" + std::to_string(i), [=] { return deform_outcome(omega_iter(LW(), i), N); }});
        }
    }
}

inline void gq_jobs(std::vector<CheckJob>& jobs, const VerifyOptions& o, bool want(const std::string&, const VerifyOptions&)) {
    const int d = o.d, N = o.N;
    auto io = iso_opts(o);
    auto g = GroupSpec::gq(d);
    auto Lk = [=](Branch b) { return reduce_rep(gq_lift(d, N, b)); };
    auto H = std::vector<GroupElement>{g.mul(g.y(), g.x()), g.x_pow(1LL << (d - 3))};
    auto Hp = std::vector<GroupElement>{g.y(), g.x_pow(1LL << (d - 3))};
    if (want("endotrivial", o)) {
        jobs.push_back({"gq.endotrivial.k", [=] { return endo_outcome(trivial_rep(g, GF2{})); }});
        for (auto br : {Branch::Plus, Branch::Minus})
            jobs.push_back({"gq.endotrivial.L." + branch_name(br), [=] { return endo_outcome(Lk(br)); }});
        jobs.push_back({"gq.syzygy.dims", [=] { return periodic_syzygy_outcome(g, GF2{}, io); }});
        jobs.push_back({"gq.syzygy.W_kernel_free.k", [=] { return w_syzygy_outcome(trivial_rep(g, Zmod2N(N))); }});
        jobs.push_back({"gq.syzygy.W_kernel_free.L", [=] { return w_syzygy_outcome(gq_lift(d, N, Branch::Plus)); }});
        for (auto br : {Branch::Plus, Branch::Minus})
            jobs.push_back({"gq.restriction.H_Hprime." + branch_name(br), [=] {
                                auto L = Lk(br);
                                auto rH = restrict_rep(L, H), rHp = restrict_rep(L, Hp);
                                auto cH = classify_syzygy_of_trivial(rH, io), cHp = classify_syzygy_of_trivial(rHp, io);
                                bool ledger = cH.core_dim + 8 * cH.free_summands == L.n && cHp.core_dim + 8 * cHp.free_summands == L.n;
                                nlohmann::json w{{"epsilon_H", cH.label()}, {"epsilon_Hprime", cHp.label()},
                                                 {"free_H", cH.free_summands}, {"free_Hprime", cHp.free_summands},
                                                 {"ledger_ok", ledger}};
                                if (!cH.epsilon || !cHp.epsilon) {
                                    if (cH.status == IsoStatus::Undecided || cHp.status == IsoStatus::Undecided)
                                        return Outcome::undecided(w);
                                    return Outcome::fail(w);
                                }
                                bool ok = *cH.epsilon != 0 && *cH.epsilon == -*cHp.epsilon && ledger;
                                return Outcome::expect(ok, w);
                            }});
        jobs.push_back({"gq.ar.tube_ends", [=] {
                            auto k = trivial_rep(g, GF2{});
                            auto L = Lk(Branch::Plus);
                            std::vector<std::pair<std::string, std::pair<MatrixRep<GF2>, MatrixRep<GF2>>>> pairs{
                                {"k|Omega2 k", {k, omega_iter(k, 2)}},
                                {"Omega-1 k|Omega k", {omega_iter(k, -1), omega_iter(k, 1)}},
                                {"L|Omega2 L", {L, omega_iter(L, 2)}},
                                {"Omega-1 L|Omega L", {omega_iter(L, -1), omega_iter(L, 1)}}};
                            return tube_pairs_outcome(pairs, io);
                        }});
    }
    if (want("lift", o)) {
        jobs.push_back({"gq.lift.tau_mod_t3", [=] {
                            auto tau = tau_poly(d);
                            std::int64_t c = std::int64_t{1} << (d - 3);
                            auto expected = IntPoly{0, -c, c * (c - 1) / 2};
                            return Outcome::expect(tau.truncate(3) == expected,
                                                   {{"tau", tau.coeffs()}, {"expected_mod_t3", expected.coeffs()}});
                        }});
        jobs.push_back({"gq.lift.discriminant", [=] {
                            auto D = discriminant(d);
                            nlohmann::json w{{"Delta", D.coeffs()}};
                            if (d == 4) {
                                auto t = IntPoly::t();
                                auto one = IntPoly::constant(1);
                                auto expected = t * t * ((one - t) * (one - t) - IntPoly::constant(8));
                                w["expected"] = expected.coeffs();
                                return Outcome::expect(D == expected, w);
                            }
                            auto m = m_poly(d);
                            w["m"] = m.coeffs();
                            bool ok = IntPoly{0, 0, 1} * (IntPoly::constant(1) + 4 * m) == D && m.coef(0) % 2 == 0;
                            return Outcome::expect(ok, w);
                        }});
        jobs.push_back({"gq.lift.phi_distinguished", [=] {
                            auto phi = phi_poly(d);
                            return Outcome::expect(is_distinguished(phi) && phi.degree() == (1 << (d - 2)),
                                                   {{"phi", phi.coeffs()}});
                        }});
        jobs.push_back({"gq.lift.pi_chebyshev", [=] {
                            SRing S(d, Zmod2N(N));
                            int K = 1 << (d - 2);
                            auto p = p_sequence(K);
                            bool ok = true;
                            nlohmann::json bad = nlohmann::json::array();
                            for (int j = 0; j <= K; ++j) {
                                bool e = S.eq(pi_map(S, p[j]), S.add(S.x_pow(j), S.x_pow(-j)));
                                if (!e) bad.push_back(j);
                                ok = ok && e;
                            }
                            return Outcome::expect(ok, {{"checked_up_to", K}, {"failing_j", bad}});
                        }});
        for (auto br : {Branch::Plus, Branch::Minus})
            jobs.push_back({"gq.lift.beta." + branch_name(br), [=] {
                                auto c = beta_element(d, br, N);
                                nlohmann::json w = c.all_pass() ? nlohmann::json{{"checks", c.to_json()["checks"]}} : c.to_json();
                                return Outcome::expect(c.all_pass(), w);
                            }});
        jobs.push_back({"gq.lift.vieta", [=] {
                            auto v = branch_vieta(d, N);
                            return Outcome::expect(v.sum_ok && v.product_ok, {{"sum", v.sum_ok}, {"product", v.product_ok}});
                        }});
        jobs.push_back({"gq.lift.delta_binomial_crosscheck", [=] {
                            int M = 3 << (d - 2);
                            auto tr = QuotRing::truncated(N, M);
                            QuotRing::elem m;
                            if (d == 4) {
                                auto inv = tr.inv(tr.sub(tr.one(), tr.t()));
                                m = tr.scale(-2, tr.mul(inv, inv));
                            } else {
                                m = tr.from_poly(m_poly(d));
                            }
                            auto a = delta_series(tr, m);
                            auto b = delta_binomial(tr, m, N * M + 4);
                            return Outcome::expect(a == b, {{"iteration", a}, {"binomial", b}, {"truncation", M}});
                        }});
        jobs.push_back({"gq.lift.L_W", [=] {
                            nlohmann::json w;
                            bool ok = true;
                            for (auto br : {Branch::Plus, Branch::Minus}) {
                                auto v = gq_lift(d, N, br);
                                bool rel = check_relations(v), endo = endo_trivial_check(reduce_rep(v));
                                w[branch_name(br)] = {{"relations", rel}, {"reduction_endo_trivial", endo}};
                                ok = ok && rel && endo;
                            }
                            return Outcome::expect(ok, w);
                        }});
        jobs.push_back({"gq.lift.sqrt_unit", [=] {
                            SRing S(d, Zmod2N(N));
                            auto r = S.add(S.x_pow(1), S.x_pow(-1));
                            auto u = sqrt_unit(S, r);
                            bool sq = S.eq(S.mul(u, u), S.add(S.one(), S.scale(4, r)));
                            bool cong = S.is_zero(S.mod2(S.sub(u, S.one())));
                            bool sym = S.eq(S.star(u), u);
                            nlohmann::json w{{"square_ok", sq}, {"congruent_to_1", cong}, {"star_invariant", sym}};
                            bool ok = sq && cong && sym;
                            if (d == 4) {
                                auto u1 = u1_element(S);
                                auto e = S.sub(S.sub(S.one(), S.x_pow(1)), S.x_pow(-1));
                                bool inv = S.eq(S.mul(u1, e), S.one());
                                w["u1_inverse_ok"] = inv;
                                ok = ok && inv;
                            }
                            return Outcome::expect(ok, w);
                        }});
    }
    if (want("lambda", o)) lambda_jobs<GF2>(jobs, "gq.", LambdaFamily::GQ, d, o, Lk(Branch::Plus));
    if (want("deform", o)) {
        for (int i = -1; i <= 2; ++i) {
            jobs.push_back({"gq.deform.k.omega" + std::to_string(i),
                            [=] { return deform_outcome(omega_iter(trivial_rep(g, Zmod2N(N)), i), N); }});
            jobs.push_back({"gq.deform.L.omega" + std::to_string(i),
                            [=] { return deform_outcome(omega_iter(gq_lift(d, N, Branch::Plus), i), N); }});
        }
    }
}

inline void q8_jobs(std::vector<CheckJob>& jobs, std::vector<std::string>& notes, const VerifyOptions& o,
                    bool want(const std::string&, const VerifyOptions&)) {
    const int N = o.N;
    auto io = iso_opts(o);
    auto g = GroupSpec::q8();
    const bool w = o.omega;
    if (!w && o.suite != "deform")
        notes.push_back("L not defined: F_2 has no primitive cube root of unity; rerun with --omega for the F_4 checks");
    if (want("endotrivial", o)) {
        jobs.push_back({"q8.endotrivial.k", [=] { return endo_outcome(trivial_rep(g, GF2{})); }});
        jobs.push_back({"q8.syzygy.dims", [=] { return periodic_syzygy_outcome(g, GF2{}, io); }});
        jobs.push_back({"q8.syzygy.W_kernel_free.k", [=] { return w_syzygy_outcome(trivial_rep(g, Zmod2N(N))); }});
        if (!w) {
            jobs.push_back({"q8.endotrivial.orbit_classes", [=] {
                                auto k = trivial_rep(g, GF2{});
                                std::vector<MatrixRep<GF2>> mods;
                                for (int i = 0; i < 4; ++i) mods.push_back(omega_iter(k, i));
                                bool und = false;
                                int c = count_classes(mods, io, und);
                                nlohmann::json wj{{"classes", c}, {"expected", 4}};
                                if (c != 4 && und) return Outcome::undecided(wj);
                                return Outcome::expect(c == 4, wj);
                            }});
            jobs.push_back({"q8.ar.tube_ends", [=] {
                                auto k = trivial_rep(g, GF2{});
                                std::vector<std::pair<std::string, std::pair<MatrixRep<GF2>, MatrixRep<GF2>>>> pairs{
                                    {"k|Omega2 k", {k, omega_iter(k, 2)}},
                                    {"Omega-1 k|Omega k", {omega_iter(k, -1), omega_iter(k, 1)}}};
                                return tube_pairs_outcome(pairs, io);
                            }});
        } else {
            jobs.push_back({"q8.endotrivial.L", [=] { return endo_outcome(module_L_Q8(GF4{})); }});
            jobs.push_back({"q8.syzygy.W_kernel_free.L", [=] { return w_syzygy_outcome(module_L_Q8(ZmodOmega(N))); }});
            jobs.push_back({"q8.endotrivial.orbit_classes", [=] {
                                auto k = trivial_rep(g, GF4{});
                                auto L = module_L_Q8(GF4{});
                                std::vector<MatrixRep<GF4>> mods;
                                for (int i = 0; i < 4; ++i) {
                                    mods.push_back(omega_iter(k, i));
                                    mods.push_back(omega_iter(L, i));
                                }
                                bool und = false;
                                int c = count_classes(mods, io, und);
                                nlohmann::json wj{{"classes", c}, {"expected", 8}};
                                if (c != 8 && und) return Outcome::undecided(wj);
                                return Outcome::expect(c == 8, wj);
                            }});
            jobs.push_back({"q8.ar.tube_ends", [=] {
                                auto k = trivial_rep(g, GF4{});
                                auto L = module_L_Q8(GF4{});
                                std::vector<std::pair<std::string, std::pair<MatrixRep<GF4>, MatrixRep<GF4>>>> pairs{
                                    {"k|Omega2 k", {k, omega_iter(k, 2)}},
                                    {"Omega-1 k|Omega k", {omega_iter(k, -1), omega_iter(k, 1)}},
                                    {"L|Omega2 L", {L, omega_iter(L, 2)}},
                                    {"Omega-1 L|Omega L", {omega_iter(L, -1), omega_iter(L, 1)}}};
                                return tube_pairs_outcome(pairs, io);
                            }});
        }
    }
    if (want("lift", o) && w) {
        jobs.push_back({"q8.lift.rho_L", [=] {
                            auto L = module_L_Q8(GF4{});
                            return Outcome::expect(check_relations(L), {{"relations", check_relations(L)}, {"ring", "F4"}});
                        }});
        jobs.push_back({"q8.lift.rho_L_W", [=] {
                            auto LW = module_L_Q8(ZmodOmega(N));
                            auto L = module_L_Q8(GF4{});
                            auto r = reduce_rep(LW);
                            bool rel = check_relations(LW);
                            bool red = r.gens[0] == L.gens[0] && r.gens[1] == L.gens[1];
                            return Outcome::expect(rel && red, {{"relations", rel}, {"reduces_to_rho_L", red}, {"ring", LW.ring.name()}});
                        }});
    }
    if (want("lambda", o)) {
        if (w) {
            lambda_jobs<GF4>(jobs, "q8.", LambdaFamily::GQ, 3, o, module_L_Q8(GF4{}));
        } else {
            jobs.push_back({"q8.lambda.build", [=] {
                                auto A = build_lambda(LambdaFamily::GQ, 3);
                                return Outcome::expect(A.dim() == 8, {{"dim", A.dim()}, {"associative", true}});
                            }});
        }
    }
    if (want("deform", o)) {
        for (int i = -1; i <= 2; ++i) {
            jobs.push_back({"q8.deform.k.omega" + std::to_string(i),
                            [=] { return deform_outcome(omega_iter(trivial_rep(g, Zmod2N(N)), i), N); }});
            if (w)
                jobs.push_back({"q8.deform.L.omega" + std::to_string(i),
                                [=] { return deform_outcome(omega_iter(module_L_Q8(ZmodOmega(N)), i), N); }});
        }
    }
}

inline void cyclic_jobs(std::vector<CheckJob>& jobs, std::vector<std::string>& notes, const VerifyOptions& o,
                        bool want(const std::string&, const VerifyOptions&)) {
    const int d = o.d, N = o.N;
    auto io = iso_opts(o);
    auto g = GroupSpec::cyclic(d);
    if (o.suite == "lift" || o.suite == "lambda") notes.push_back("no " + o.suite + " checks for the cyclic family");
    if (want("endotrivial", o)) {
        jobs.push_back({"cyclic.endotrivial.k", [=] { return endo_outcome(trivial_rep(g, GF2{})); }});
        jobs.push_back({"cyclic.endotrivial.omega_k", [=] { return endo_outcome(augmentation_ideal(g, GF2{})); }});
        jobs.push_back({"cyclic.syzygy.period2", [=] {
                            auto k = trivial_rep(g, GF2{});
                            auto s = is_isomorphic(omega_iter(k, 2), k, io).status;
                            return from_iso(s, true, {{"omega2_vs_k", iso_status_name(s)}});
                        }});
        jobs.push_back({"cyclic.syzygy.W_kernel_free.k", [=] {
                            auto k = trivial_rep(g, Zmod2N(N));
                            std::vector<SyzygyCertificate> certs;
                            auto o1 = omega_iter(k, 2, &certs);
                            bool ok = check_relations(o1);
                            nlohmann::json w = nlohmann::json::array();
                            for (auto& c : certs) {
                                ok = ok && c.kernel_free && c.ledger_ok;
                                w.push_back(c.to_json());
                            }
                            return Outcome::expect(ok, w);
                        }});
    }
    if (want("deform", o)) {
        jobs.push_back({"cyclic.deform.universal", [=] {
                            auto u = cyclic_universal(d, Zmod2N(N));
                            auto I = Mat<AbGroupRing<Zmod2N>>::identity(u.ring, u.n);
                            bool period = u.gens[0].pow(g.x_order()) == I;
                            bool shape = true;
                            const auto& R = u.ring;
                            for (int i = 0; i < u.n; ++i)
                                for (int j = 0; j < u.n; ++j) {
                                    auto want_e = j == u.n - 1 ? R.neg(R.basis(1)) : (i == j + 1 ? R.basis(1) : R.zero());
                                    shape = shape && R.eq(u.gens[0](i, j), want_e);
                                }
                            auto red = full_reduction(u);
                            auto s = is_isomorphic(red, augmentation_ideal(g, GF2{}), io).status;
                            auto aug = augmentation(u);
                            bool aug_rel = check_relations(aug);
                            nlohmann::json w{{"dim", u.n}, {"sigma_power_identity", period}, {"shape", shape},
                                             {"relations", check_relations(u)}, {"augmentation_relations", aug_rel},
                                             {"reduction_vs_omega_k", iso_status_name(s)}};
                            if (s == IsoStatus::Undecided) return Outcome::undecided(w);
                            return Outcome::expect(period && shape && aug_rel && check_relations(u) && s == IsoStatus::Isomorphic, w);
                        }});
    }
}

inline bool suite_selected(const std::string& s, const VerifyOptions& o) { return o.suite == "all" || o.suite == s; }

}  // namespace suite_detail

inline RunReport run_verify(VerifyOptions o) {
    o = normalize(o);
    RunReport r;
    r.family = o.family;
    r.d = o.d;
    r.N = o.N;
    r.suite = o.suite;
    r.omega = o.omega;
    r.seed = o.seed;
    if (o.seed) r.notes.push_back("randomized isomorphism search enabled");
    std::vector<CheckJob> jobs;
    auto want = &suite_detail::suite_selected;
    if (o.family == "sd") suite_detail::sd_jobs(jobs, o, want);
    else if (o.family == "gq") suite_detail::gq_jobs(jobs, o, want);
    else if (o.family == "q8") suite_detail::q8_jobs(jobs, r.notes, o, want);
    else suite_detail::cyclic_jobs(jobs, r.notes, o, want);
    r.checks = run_jobs(jobs, o.family, o.d, o.N, thread_cap());
    return r;
}

}  // namespace endolift
