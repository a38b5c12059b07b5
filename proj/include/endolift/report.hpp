#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

namespace endolift {

enum class Status { Pass, Fail, Undecided };

inline std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Undecided: return "undecided";
    }
    return "?";
}

inline std::optional<Status> parse_status(const std::string& s) {
    if (s == "pass") return Status::Pass;
    if (s == "fail") return Status::Fail;
    if (s == "undecided") return Status::Undecided;
    return std::nullopt;
}

struct Outcome {
    Status status = Status::Pass;
    nlohmann::json witness;  // null when absent

    static Outcome pass(nlohmann::json w = nullptr) { return {Status::Pass, std::move(w)}; }
    static Outcome fail(nlohmann::json w) { return {Status::Fail, std::move(w)}; }
    static Outcome undecided(nlohmann::json w) { return {Status::Undecided, std::move(w)}; }
    // Pass iff ok; the witness is kept in both cases.
    static Outcome expect(bool ok, nlohmann::json w) { return {ok ? Status::Pass : Status::Fail, std::move(w)}; }
};

struct CheckReport {
    std::string check_id;
    std::string family;
    int d = 0;
    int N = 0;
    Status status = Status::Pass;
    nlohmann::json witness;
    double timing_ms = 0;

    nlohmann::json to_json() const {
        nlohmann::json j = {{"check_id", check_id}, {"family", family}, {"d", d}, {"N", N}, {"status", status_name(status)}};
        if (!witness.is_null()) j["witness"] = witness;
        return j;
    }
};

struct CheckJob {
    std::string id;
    std::function<Outcome()> run;
};

// Worker count from ENDOLIFT_THREADS, default 1.
inline int thread_cap() {
    const char* s = std::getenv("ENDOLIFT_THREADS");
    if (!s) return 1;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end == s || v < 1) return 1;
    return static_cast<int>(std::min<long>(v, 64));
}

// Runs every job and returns reports sorted by check_id.  Exceptions become failures.
inline std::vector<CheckReport> run_jobs(const std::vector<CheckJob>& jobs, const std::string& family, int d, int N,
                                         int threads = 1) {
    std::vector<CheckReport> out(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < jobs.size(); k = next++) {
            auto t0 = std::chrono::steady_clock::now();
            Outcome o;
            try {
                o = jobs[k].run();
            } catch (const std::exception& e) {
                o = Outcome::fail({{"exception", e.what()}});
            }
            if (o.status == Status::Fail && o.witness.is_null()) o.witness = {{"note", "no witness recorded"}};
            auto& r = out[k];
            r.check_id = jobs[k].id;
            r.family = family;
            r.d = d;
            r.N = N;
            r.status = o.status;
            r.witness = std::move(o.witness);
            r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        }
    };
    int n = std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) { return a.check_id < b.check_id; });
    return out;
}

struct RunReport {
    std::string family;
    int d = 0;
    int N = 0;
    std::string suite;
    bool omega = false;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> notes;
    std::vector<CheckReport> checks;

    int count(Status s) const {
        return static_cast<int>(std::count_if(checks.begin(), checks.end(), [&](auto& c) { return c.status == s; }));
    }

    nlohmann::json to_json() const {
        nlohmann::json cs = nlohmann::json::array();
        for (auto& c : checks) cs.push_back(c.to_json());
        return {{"schema", "endolift-report/1"},
                {"family", family},
                {"d", d},
                {"N", N},
                {"suite", suite},
                {"omega", omega},
                {"seed", seed ? nlohmann::json(*seed) : nlohmann::json(nullptr)},
                {"notes", notes},
                {"checks", cs},
                {"summary", {{"pass", count(Status::Pass)}, {"fail", count(Status::Fail)}, {"undecided", count(Status::Undecided)}}}};
    }

    nlohmann::json timings_json() const {
        nlohmann::json t = nlohmann::json::object();
        for (auto& c : checks) t[c.check_id] = c.timing_ms;
        return t;
    }
};

// 0 when every status is pass, 1 on any failure, 3 when something is undecided.
inline int exit_code_for(const std::vector<Status>& statuses) {
    bool undecided = false;
    for (auto s : statuses) {
        if (s == Status::Fail) return 1;
        undecided = undecided || s == Status::Undecided;
    }
    return undecided ? 3 : 0;
}

inline int exit_code(const RunReport& r) {
    std::vector<Status> s;
    for (auto& c : r.checks) s.push_back(c.status);
    return exit_code_for(s);
}

// Structural validation of a report document; returns the list of violations.
inline std::vector<std::string> validate_report(const nlohmann::json& j) {
    std::vector<std::string> err;
    if (!j.is_object()) return {"report is not an object"};
    auto need = [&](const char* key, auto pred, const char* what) {
        if (!j.contains(key)) err.push_back(std::string("missing key ") + key);
        else if (!pred(j.at(key))) err.push_back(std::string(key) + " is not " + what);
    };
    auto is_str = [](const nlohmann::json& v) { return v.is_string(); };
    auto is_int = [](const nlohmann::json& v) { return v.is_number_integer(); };
    need("schema", [](const nlohmann::json& v) { return v == "endolift-report/1"; }, "endolift-report/1");
    need("family", is_str, "a string");
    need("d", is_int, "an integer");
    need("N", is_int, "an integer");
    need("suite", is_str, "a string");
    need("omega", [](const nlohmann::json& v) { return v.is_boolean(); }, "a boolean");
    need("seed", [](const nlohmann::json& v) { return v.is_null() || v.is_number_unsigned() || v.is_number_integer(); }, "null or an integer");
    need("notes", [](const nlohmann::json& v) { return v.is_array(); }, "an array");
    need("summary", [](const nlohmann::json& v) { return v.is_object(); }, "an object");
    need("checks", [](const nlohmann::json& v) { return v.is_array(); }, "an array");
    if (!j.contains("checks") || !j.at("checks").is_array()) return err;
    std::string prev;
    bool first = true;
    for (auto& c : j.at("checks")) {
        if (!c.is_object()) {
            err.push_back("check entry is not an object");
            continue;
        }
        for (auto key : {"check_id", "family", "status"})
            if (!c.contains(key) || !c.at(key).is_string()) err.push_back(std::string("check entry lacks string ") + key);
        for (auto key : {"d", "N"})
            if (!c.contains(key) || !c.at(key).is_number_integer()) err.push_back(std::string("check entry lacks integer ") + key);
        if (!c.contains("check_id") || !c.at("check_id").is_string() || !c.contains("status") || !c.at("status").is_string())
            continue;
        auto id = c.at("check_id").get<std::string>();
        auto st = parse_status(c.at("status").get<std::string>());
        if (!st) err.push_back(id + ": unknown status");
        if (st == Status::Fail && (!c.contains("witness") || c.at("witness").is_null())) err.push_back(id + ": failure without witness");
        if (!first && id < prev) err.push_back("checks are not sorted at " + id);
        prev = id;
        first = false;
    }
    return err;
}

inline std::string render_text(const nlohmann::json& j) {
    std::string s;
    s += "family " + j.value("family", std::string("?")) + "  d " + std::to_string(j.value("d", 0)) + "  N " +
         std::to_string(j.value("N", 0)) + "  suite " + j.value("suite", std::string("?")) + "\n";
    if (j.contains("notes"))
        for (auto& n : j.at("notes")) s += "note: " + n.get<std::string>() + "\n";
    if (j.contains("checks"))
        for (auto& c : j.at("checks")) {
            auto st = c.value("status", std::string("?"));
            std::string tag = st == "pass" ? "PASS" : st == "fail" ? "FAIL" : "UNDECIDED";
            s += tag + "  " + c.value("check_id", std::string("?")) + "\n";
            if (st != "pass" && c.contains("witness")) s += "      witness: " + c.at("witness").dump() + "\n";
        }
    if (j.contains("summary")) {
        auto& m = j.at("summary");
        s += "summary: " + std::to_string(m.value("pass", 0)) + " pass, " + std::to_string(m.value("fail", 0)) + " fail, " +
             std::to_string(m.value("undecided", 0)) + " undecided\n";
    }
    return s;
}

}  // namespace endolift
