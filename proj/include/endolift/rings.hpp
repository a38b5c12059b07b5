#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace endolift {

struct GF2 {
    using elem = std::uint8_t;
    static constexpr bool is_field = true;
    static constexpr int q = 2;

    elem zero() const { return 0; }
    elem one() const { return 1; }
    elem from_int(std::int64_t v) const { return static_cast<elem>(v & 1); }
    elem add(elem a, elem b) const { return a ^ b; }
    elem sub(elem a, elem b) const { return a ^ b; }
    elem neg(elem a) const { return a; }
    elem mul(elem a, elem b) const { return a & b; }
    elem inv(elem a) const {
        if (!a) throw std::domain_error("GF2: inverse of zero");
        return 1;
    }
    bool is_zero(elem a) const { return a == 0; }
    bool eq(elem a, elem b) const { return a == b; }
    std::string name() const { return "F2"; }
    nlohmann::json to_json(elem a) const { return int(a); }
    bool operator==(const GF2&) const { return true; }
};

// Encoding: 0, 1, 2 = w, 3 = w^2 = w + 1, with w^2 + w + 1 = 0.
struct GF4 {
    using elem = std::uint8_t;
    static constexpr bool is_field = true;
    static constexpr int q = 4;

    static constexpr std::uint8_t mul_table[4][4] = {
        {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    static constexpr std::uint8_t inv_table[4] = {0, 1, 3, 2};

    elem zero() const { return 0; }
    elem one() const { return 1; }
    elem omega() const { return 2; }
    elem from_int(std::int64_t v) const { return static_cast<elem>(v & 1); }
    elem add(elem a, elem b) const { return a ^ b; }
    elem sub(elem a, elem b) const { return a ^ b; }
    elem neg(elem a) const { return a; }
    elem mul(elem a, elem b) const { return mul_table[a][b]; }
    elem inv(elem a) const {
        if (!a) throw std::domain_error("GF4: inverse of zero");
        return inv_table[a];
    }
    bool is_zero(elem a) const { return a == 0; }
    bool eq(elem a, elem b) const { return a == b; }
    std::string name() const { return "F4"; }
    nlohmann::json to_json(elem a) const { return int(a); }
    bool operator==(const GF4&) const { return true; }
};

// Z/2^N for 1 <= N <= 62.
struct Zmod2N {
    using elem = std::uint64_t;
    using residue_field = GF2;
    static constexpr bool is_field = false;

    int N = 16;
    std::uint64_t mask = 0xffff;

    Zmod2N() = default;
    explicit Zmod2N(int n) : N(n) {
        if (n < 1 || n > 62) throw std::invalid_argument("Zmod2N: precision out of range");
        mask = (std::uint64_t{1} << n) - 1;
    }

    elem zero() const { return 0; }
    elem one() const { return 1; }
    elem from_int(std::int64_t v) const { return static_cast<std::uint64_t>(v) & mask; }
    elem add(elem a, elem b) const { return (a + b) & mask; }
    elem sub(elem a, elem b) const { return (a - b) & mask; }
    elem neg(elem a) const { return (0 - a) & mask; }
    elem mul(elem a, elem b) const { return (a * b) & mask; }
    bool is_zero(elem a) const { return a == 0; }
    bool eq(elem a, elem b) const { return a == b; }
    bool is_unit(elem a) const { return a & 1; }
    int val(elem a) const { return a == 0 ? N : std::countr_zero(a); }
    elem inv(elem a) const {
        if (!is_unit(a)) throw std::domain_error("Zmod2N: inverse of non-unit");
        std::uint64_t x = a;
        for (int i = 0; i < 6; ++i) x *= 2 - a * x;
        return x & mask;
    }
    // c with c * p == q, assuming val(q) >= val(p).
    elem div_exact(elem q, elem p) const {
        int e = val(p);
        if (val(q) < e) throw std::domain_error("Zmod2N: inexact division");
        if (e >= N) return 0;
        return mul(q >> e, inv(p >> e));
    }
    std::int64_t to_int(elem a) const { return static_cast<std::int64_t>(a); }
    // symmetric residue in (-2^{N-1}, 2^{N-1}]
    std::int64_t to_signed(elem a) const {
        std::int64_t v = static_cast<std::int64_t>(a);
        if (v > static_cast<std::int64_t>(mask >> 1) + 1) v -= static_cast<std::int64_t>(mask) + 1;
        return v;
    }
    residue_field::elem reduce(elem a) const { return a & 1; }
    elem lift(residue_field::elem f) const { return f & 1; }
    std::string name() const { return "Z/2^" + std::to_string(N); }
    nlohmann::json to_json(elem a) const { return a; }
    bool operator==(const Zmod2N& o) const { return N == o.N; }
};

// (Z/2^N)[w]/(w^2 + w + 1); elements a + b w stored as {a, b}.
struct ZmodOmega {
    using elem = std::array<std::uint64_t, 2>;
    using residue_field = GF4;
    static constexpr bool is_field = false;

    Zmod2N base;

    ZmodOmega() = default;
    explicit ZmodOmega(int n) : base(n) {}

    int N() const { return base.N; }
    elem zero() const { return {0, 0}; }
    elem one() const { return {1, 0}; }
    elem omega() const { return {0, 1}; }
    elem from_int(std::int64_t v) const { return {base.from_int(v), 0}; }
    elem add(elem a, elem b) const { return {base.add(a[0], b[0]), base.add(a[1], b[1])}; }
    elem sub(elem a, elem b) const { return {base.sub(a[0], b[0]), base.sub(a[1], b[1])}; }
    elem neg(elem a) const { return {base.neg(a[0]), base.neg(a[1])}; }
    elem mul(elem a, elem b) const {
        auto ac = base.mul(a[0], b[0]);
        auto bd = base.mul(a[1], b[1]);
        auto mid = base.add(base.mul(a[0], b[1]), base.mul(a[1], b[0]));
        return {base.sub(ac, bd), base.sub(mid, bd)};
    }
    bool is_zero(elem a) const { return a[0] == 0 && a[1] == 0; }
    bool eq(elem a, elem b) const { return a == b; }
    bool is_unit(elem a) const { return ((a[0] | a[1]) & 1) != 0; }
    int val(elem a) const { return std::min(base.val(a[0]), base.val(a[1])); }
    elem conj(elem a) const { return {base.sub(a[0], a[1]), base.neg(a[1])}; }
    elem inv(elem a) const {
        if (!is_unit(a)) throw std::domain_error("ZmodOmega: inverse of non-unit");
        auto nrm = base.add(base.sub(base.mul(a[0], a[0]), base.mul(a[0], a[1])), base.mul(a[1], a[1]));
        auto ni = base.inv(nrm);
        auto c = conj(a);
        return {base.mul(c[0], ni), base.mul(c[1], ni)};
    }
    elem div_exact(elem q, elem p) const {
        int e = val(p);
        if (val(q) < e) throw std::domain_error("ZmodOmega: inexact division");
        if (e >= N()) return zero();
        return mul({q[0] >> e, q[1] >> e}, inv({p[0] >> e, p[1] >> e}));
    }
    residue_field::elem reduce(elem a) const {
        return static_cast<std::uint8_t>((a[0] & 1) | ((a[1] & 1) << 1));
    }
    elem lift(residue_field::elem f) const {
        // 3 = w^2 = -1 - w, but any lift of 1 + w works modulo 2
        return {std::uint64_t(f & 1), std::uint64_t((f >> 1) & 1)};
    }
    std::string name() const { return "Z/2^" + std::to_string(N()) + "[w]"; }
    nlohmann::json to_json(elem a) const { return nlohmann::json::array({a[0], a[1]}); }
    bool operator==(const ZmodOmega& o) const { return base == o.base; }
};

// Group ring B[A] of a finite abelian group A given by its multiplication table.
template <class B>
struct AbGroupRing {
    using elem = std::vector<typename B::elem>;
    static constexpr bool is_field = false;

    B base;
    int order = 1;
    std::shared_ptr<const std::vector<int>> table;
    std::string label;

    AbGroupRing() = default;
    AbGroupRing(B b, int m, std::vector<int> t, std::string lbl)
        : base(b), order(m), table(std::make_shared<const std::vector<int>>(std::move(t))), label(std::move(lbl)) {}

    // Klein four on {1, x, y, yx}: index bit 0 is x, bit 1 is y.
    static AbGroupRing klein_four(B b) {
        std::vector<int> t(16);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) t[i * 4 + j] = i ^ j;
        return AbGroupRing(b, 4, std::move(t), "[K4]");
    }
    static AbGroupRing cyclic(B b, int m) {
        std::vector<int> t(m * m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) t[i * m + j] = (i + j) % m;
        return AbGroupRing(b, m, std::move(t), "[C" + std::to_string(m) + "]");
    }

    int mul_index(int i, int j) const { return (*table)[i * order + j]; }
    elem zero() const { return elem(order, base.zero()); }
    elem one() const { return basis(0); }
    elem basis(int i) const {
        elem r = zero();
        r[i] = base.one();
        return r;
    }
    elem scalar(typename B::elem c) const {
        elem r = zero();
        r[0] = c;
        return r;
    }
    elem from_int(std::int64_t v) const { return scalar(base.from_int(v)); }
    elem add(const elem& a, const elem& b) const {
        elem r(order);
        for (int i = 0; i < order; ++i) r[i] = base.add(a[i], b[i]);
        return r;
    }
    elem sub(const elem& a, const elem& b) const {
        elem r(order);
        for (int i = 0; i < order; ++i) r[i] = base.sub(a[i], b[i]);
        return r;
    }
    elem neg(const elem& a) const {
        elem r(order);
        for (int i = 0; i < order; ++i) r[i] = base.neg(a[i]);
        return r;
    }
    elem mul(const elem& a, const elem& b) const {
        elem r = zero();
        for (int i = 0; i < order; ++i) {
            if (base.is_zero(a[i])) continue;
            for (int j = 0; j < order; ++j) {
                if (base.is_zero(b[j])) continue;
                int k = mul_index(i, j);
                r[k] = base.add(r[k], base.mul(a[i], b[j]));
            }
        }
        return r;
    }
    bool is_zero(const elem& a) const {
        for (auto& c : a)
            if (!base.is_zero(c)) return false;
        return true;
    }
    bool eq(const elem& a, const elem& b) const {
        for (int i = 0; i < order; ++i)
            if (!base.eq(a[i], b[i])) return false;
        return true;
    }
    typename B::elem augment(const elem& a) const {
        auto s = base.zero();
        for (auto& c : a) s = base.add(s, c);
        return s;
    }
    // ring map B[A] -> B induced by a character chi: A -> B^x
    typename B::elem evaluate(const elem& a, const std::vector<typename B::elem>& chi) const {
        auto s = base.zero();
        for (int i = 0; i < order; ++i) s = base.add(s, base.mul(a[i], chi[i]));
        return s;
    }
    std::string name() const { return base.name() + label; }
    nlohmann::json to_json(const elem& a) const {
        auto j = nlohmann::json::array();
        for (auto& c : a) j.push_back(base.to_json(c));
        return j;
    }
    bool operator==(const AbGroupRing& o) const { return base == o.base && order == o.order && *table == *o.table; }
};

}  // namespace endolift
