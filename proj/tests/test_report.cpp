#include <catch_amalgamated.hpp>

#include <endolift/emit.hpp>

#include <cstdlib>

using namespace endolift;

TEST_CASE("exit codes", "[report]") {
    CHECK(exit_code_for({}) == 0);
    CHECK(exit_code_for({Status::Pass, Status::Pass}) == 0);
    CHECK(exit_code_for({Status::Pass, Status::Undecided}) == 3);
    CHECK(exit_code_for({Status::Undecided, Status::Fail}) == 1);
    CHECK(parse_status("undecided") == Status::Undecided);
    CHECK_FALSE(parse_status("maybe"));
}

TEST_CASE("jobs run in any order and report sorted", "[report]") {
    std::vector<CheckJob> jobs;
    for (std::string id : {"c", "a", "d", "b"}) jobs.push_back({id, [id] { return Outcome::pass({{"id", id}}); }});
    jobs.push_back({"e.throws", []() -> Outcome { throw std::runtime_error("boom"); }});
    jobs.push_back({"f.bare_fail", [] { return Outcome{Status::Fail, nullptr}; }});
    for (int threads : {1, 3}) {
        auto r = run_jobs(jobs, "sd", 4, 16, threads);
        REQUIRE(r.size() == 6);
        for (std::size_t i = 1; i < r.size(); ++i) CHECK(r[i - 1].check_id < r[i].check_id);
        CHECK(r[4].status == Status::Fail);
        CHECK(r[4].witness["exception"] == "boom");
        CHECK(r[5].status == Status::Fail);
        CHECK_FALSE(r[5].witness.is_null());
        CHECK_FALSE(r[0].to_json().contains("timing_ms"));
    }
}

TEST_CASE("report validation", "[report]") {
    RunReport r;
    r.family = "cyclic";
    r.d = 3;
    r.N = 4;
    r.suite = "all";
    r.checks = run_jobs({{"x", [] { return Outcome::fail({{"lhs", 1}, {"rhs", 0}}); }}}, "cyclic", 3, 4);
    auto j = r.to_json();
    CHECK(validate_report(j).empty());
    CHECK(exit_code(r) == 1);
    CHECK(render_text(j).find("\"lhs\":1") != std::string::npos);
    auto broken = j;
    broken["checks"][0].erase("witness");
    CHECK_FALSE(validate_report(broken).empty());
    auto unsorted = j;
    unsorted["checks"].push_back(unsorted["checks"][0]);
    unsorted["checks"][1]["check_id"] = "a";
    CHECK_FALSE(validate_report(unsorted).empty());
    CHECK_FALSE(validate_report(nlohmann::json::array()).empty());
}

TEST_CASE("option normalization", "[report]") {
    VerifyOptions o;
    o.family = "gq";
    o.d = 3;
    CHECK(normalize(o).family == "q8");
    o.family = "sd";
    o.d = 6;
    CHECK_THROWS_AS(normalize(o), std::invalid_argument);
    o.unsafe_large = true;
    CHECK_NOTHROW(normalize(o));
    o.d = 4;
    o.N = 17;
    o.unsafe_large = false;
    CHECK_THROWS_AS(normalize(o), std::invalid_argument);
    o.N = 16;
    o.omega = true;
    CHECK_THROWS_AS(normalize(o), std::invalid_argument);
    o.family = "pentagon";
    CHECK_THROWS_AS(normalize(o), std::invalid_argument);
}

TEST_CASE("q8 without a cube root of unity", "[report]") {
    VerifyOptions o;
    o.family = "q8";
    o.d = 3;
    o.N = 8;
    o.suite = "endotrivial";
    auto r = run_verify(o);
    CHECK(exit_code(r) == 0);
    REQUIRE_FALSE(r.notes.empty());
    CHECK(r.notes[0].find("L not defined") != std::string::npos);
    bool found = false;
    for (auto& c : r.checks)
        if (c.check_id == "q8.endotrivial.orbit_classes") {
            found = true;
            CHECK(c.witness["classes"] == 4);
        }
    CHECK(found);
}

TEST_CASE("reports do not depend on the worker count", "[report]") {
    VerifyOptions o;
    o.family = "cyclic";
    o.d = 3;
    o.N = 8;
    auto a = run_verify(o).to_json().dump();
    setenv("ENDOLIFT_THREADS", "3", 1);
    CHECK(thread_cap() == 3);
    auto b = run_verify(o).to_json().dump();
    unsetenv("ENDOLIFT_THREADS");
    CHECK(thread_cap() == 1);
    CHECK(a == b);
}

TEST_CASE("emitted documents", "[report]") {
    auto b = emit_beta(4, Branch::Plus, 16);
    for (auto key : {"d", "N", "branch", "b_coeffs_mod_phi", "beta_c_basis", "checks"}) CHECK(b.contains(key));
    CHECK(b.size() == 6);
    EmitOptions e;
    e.family = "sd";
    e.d = 4;
    e.N = 8;
    auto dj = emit_deformation(e);
    auto entry = dj["representation"]["generators"]["x"]["entries"][0];
    CHECK(entry.size() == 4);
    CHECK(dj["representation"]["dim"] == 7);
    e.module = "Y";
    e.over_w = true;
    CHECK(emit_matrices(e)["representation"]["dim"] == 8);
    e.family = "cyclic";
    CHECK_THROWS(emit_matrices(e));
    auto lam = emit_lambda(LambdaFamily::GQ, 3);
    CHECK(lam["basis"].size() == 8);
    CHECK(emit_beta(5, Branch::Minus, 8).dump() == emit_beta(5, Branch::Minus, 8).dump());
}
