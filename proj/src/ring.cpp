#include "m2cyclic/ring.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace m2c {

namespace {

constexpr uint8_t GF4_MUL[4][4] = {
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},  // w*w = w^2, w*w^2 = 1
    {0, 3, 1, 2},
};

struct WuTables {
    // pack() of r -> (z1, z2) with r = embed(z1) + U embed(z2)
    std::array<std::pair<GR42, GR42>, 256> decompose;
    // (c0, c1) of z -> (t0, t1) Teichmuller pair
    std::array<std::pair<F4, F4>, 16> teich_inv;
    std::array<std::pair<F4, F4>, 16> m2z2_decompose;

    WuTables() {
        std::array<bool, 256> seen{};
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c)
                    for (int d = 0; d < 4; ++d) {
                        GR42 z1(a, b), z2(c, d);
                        M2Z4 r = embed_gr(z1) + M2Z4::u() * embed_gr(z2);
                        uint8_t p = r.pack();
                        if (seen[p]) throw std::logic_error("W + UW decomposition is not unique");
                        seen[p] = true;
                        decompose[p] = {z1, z2};
                    }
        for (bool s : seen)
            if (!s) throw std::logic_error("W + UW does not cover M2(Z4)");

        for (int t0 = 0; t0 < 4; ++t0)
            for (int t1 = 0; t1 < 4; ++t1) {
                GR42 z = teich(F4(t0)) + teich(F4(t1)).scaled(2);
                teich_inv[z.c0 + 4 * z.c1] = {F4(t0), F4(t1)};
            }

        std::array<bool, 16> seen2{};
        for (int a = 0; a < 4; ++a)
            for (int c = 0; c < 4; ++c) {
                M2Z2 s = embed_f4_m2z2(F4(a)) + M2Z2::u() * embed_f4_m2z2(F4(c));
                uint8_t p = s.pack();
                if (seen2[p]) throw std::logic_error("F4 + uF4 decomposition is not unique");
                seen2[p] = true;
                m2z2_decompose[p] = {F4(a), F4(c)};
            }
    }
};

const WuTables& tables() {
    static const WuTables t;
    return t;
}

}  // namespace

F4 operator*(F4 a, F4 b) { return F4(GF4_MUL[a.v][b.v]); }

F4 F4::inv() const {
    if (v == 0) throw std::domain_error("F4: zero has no inverse");
    for (int x = 1; x < 4; ++x)
        if (GF4_MUL[v][x] == 1) return F4(x);
    throw std::logic_error("unreachable");
}

GR42 GR42::inv() const {
    if (!is_unit()) throw std::domain_error("GR42: not a unit");
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if ((*this * GR42(a, b)) == GR42(1, 0)) return GR42(a, b);
    throw std::logic_error("unreachable");
}

GR42 teich(F4 t) {
    switch (t.v) {
        case 0: return GR42(0, 0);
        case 1: return GR42(1, 0);
        case 2: return GR42(0, 1);
        default: return GR42(3, 3);  // lift of w^2
    }
}

std::pair<F4, F4> teich_decompose(GR42 z) { return tables().teich_inv[z.c0 + 4 * z.c1]; }

GR42 frobenius(GR42 z) {
    auto [t0, t1] = teich_decompose(z);
    return teich(t0.square()) + teich(t1.square()).scaled(2);
}

M2Z4 M2Z4::unit(int k) {
    switch (k) {
        case 0: return {1, 0, 0, 0};
        case 1: return {0, 1, 0, 0};
        case 2: return {0, 0, 1, 0};
        default: return {0, 0, 0, 1};
    }
}

M2Z2 M2Z2::unit(int k) {
    switch (k) {
        case 0: return {1, 0, 0, 0};
        case 1: return {0, 1, 0, 0};
        case 2: return {0, 0, 1, 0};
        default: return {0, 0, 0, 1};
    }
}

M2Z2 M2Z4::reduce_mod2() const { return M2Z2(m[0], m[1], m[2], m[3]); }

M2Z4 embed_gr(GR42 z) { return M2Z4::scalar(z.c0) + M2Z4::wmat().scaled(z.c1); }

std::pair<GR42, GR42> decompose_wu(const M2Z4& r) { return tables().decompose[r.pack()]; }

M2Z4 conj_r(const M2Z4& r) {
    auto [z1, z2] = decompose_wu(r);
    return embed_gr(frobenius(z1)) + M2Z4::u() * embed_gr(frobenius(z2));
}

F4 mu(const M2Z4& r) { return decompose_wu(r).first.reduce2(); }

M2Z2 embed_f4_m2z2(F4 t) {
    M2Z2 w = M2Z2::wmat();
    M2Z2 r;
    if (t.v & 1) r = r + M2Z2::ident();
    if (t.v & 2) r = r + w;
    return r;
}

std::pair<F4, F4> decompose_m2z2(const M2Z2& s) { return tables().m2z2_decompose[s.pack()]; }

M2Z2 conj_m2z2(const M2Z2& s) {
    auto [a, c] = decompose_m2z2(s);
    return embed_f4_m2z2(a.square()) + M2Z2::u() * embed_f4_m2z2(c.square());
}

std::string to_string(F4 x) {
    static const char* names[4] = {"0", "1", "w", "w2"};
    return names[x.v & 3];
}

std::string to_string(GR42 z) {
    if (z.is_zero()) return "0";
    std::string s;
    if (z.c0 != 0) s += std::to_string(int(z.c0));
    if (z.c1 != 0) {
        if (!s.empty()) s += "+";
        if (z.c1 != 1) s += std::to_string(int(z.c1));
        s += "w";
    }
    return s;
}

std::string to_string(const M2Z4& r) {
    std::string s = "[[";
    s += std::to_string(int(r.m[0]));
    s += ",";
    s += std::to_string(int(r.m[1]));
    s += "],[";
    s += std::to_string(int(r.m[2]));
    s += ",";
    s += std::to_string(int(r.m[3]));
    s += "]]";
    return s;
}

std::string to_string(const M2Z2& s2) {
    std::string s = "[[";
    s += std::to_string(int(s2.m[0]));
    s += ",";
    s += std::to_string(int(s2.m[1]));
    s += "],[";
    s += std::to_string(int(s2.m[2]));
    s += ",";
    s += std::to_string(int(s2.m[3]));
    s += "]]";
    return s;
}

namespace {

[[noreturn]] void bad(std::string_view what, std::string_view s) {
    throw std::invalid_argument(std::string(what) + ": cannot parse '" + std::string(s) + "'");
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

F4 parse_f4(std::string_view s) {
    s = strip(s);
    if (s == "0") return F4(0);
    if (s == "1") return F4(1);
    if (s == "w") return f4_w;
    if (s == "w2" || s == "W") return f4_w2;
    bad("F4", s);
}

GR42 parse_gr42(std::string_view s) {
    s = strip(s);
    if (s.empty()) bad("GR42", s);
    int c0 = 0, c1 = 0;
    size_t i = 0;
    auto read_term = [&]() {
        int num = -1;
        size_t start = i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
        if (i > start) num = std::stoi(std::string(s.substr(start, i - start)));
        bool has_w = (i < s.size() && s[i] == 'w');
        if (has_w) ++i;
        if (num < 0 && !has_w) bad("GR42", s);
        if (has_w)
            c1 += (num < 0 ? 1 : num);
        else
            c0 += num;
    };
    read_term();
    while (i < s.size()) {
        if (s[i] != '+') bad("GR42", s);
        ++i;
        read_term();
    }
    return GR42(c0, c1);
}

namespace {

std::array<int, 4> parse_matrix4(std::string_view s, std::string_view what) {
    s = strip(s);
    std::array<int, 4> e{};
    size_t i = 0;
    auto expect = [&](char c) {
        if (i >= s.size() || s[i] != c) bad(what, s);
        ++i;
    };
    auto digit = [&]() {
        if (i >= s.size() || s[i] < '0' || s[i] > '9') bad(what, s);
        return s[i++] - '0';
    };
    expect('[');
    expect('[');
    e[0] = digit();
    expect(',');
    e[1] = digit();
    expect(']');
    expect(',');
    expect('[');
    e[2] = digit();
    expect(',');
    e[3] = digit();
    expect(']');
    expect(']');
    if (i != s.size()) bad(what, s);
    return e;
}

}  // namespace

M2Z4 parse_m2z4(std::string_view s) {
    auto e = parse_matrix4(s, "M2Z4");
    for (int x : e)
        if (x > 3) bad("M2Z4", s);
    return M2Z4(e[0], e[1], e[2], e[3]);
}

M2Z2 parse_m2z2(std::string_view s) {
    auto e = parse_matrix4(s, "M2Z2");
    for (int x : e)
        if (x > 1) bad("M2Z2", s);
    return M2Z2(e[0], e[1], e[2], e[3]);
}

}  // namespace m2c
