#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace m2c {

/// Field of four elements {0, 1, w, w^2}, w^2 = w + 1.
/// Encoded as c0 + 2*c1 for the element c0 + c1*w, so addition is xor and the
/// natural ordering 0 < 1 < w < w^2 is the numeric one.
struct F4 {
    uint8_t v = 0;

    constexpr F4() = default;
    constexpr explicit F4(int x) : v(uint8_t(x & 3)) {}

    friend constexpr F4 operator+(F4 a, F4 b) { return F4(a.v ^ b.v); }
    friend constexpr F4 operator-(F4 a, F4 b) { return F4(a.v ^ b.v); }
    friend F4 operator*(F4 a, F4 b);
    F4 inv() const;  // throws on zero
    F4 square() const { return *this * *this; }
    constexpr bool is_zero() const { return v == 0; }
    bool operator==(const F4&) const = default;
    auto operator<=>(const F4&) const = default;
};

inline constexpr F4 f4_w{2};
inline constexpr F4 f4_w2{3};

/// Element of the Galois ring GR(4,2) = Z4[w], w^2 = 3w + 3.
struct GR42 {
    uint8_t c0 = 0, c1 = 0;  // c0 + c1*w, residues mod 4

    constexpr GR42() = default;
    constexpr GR42(int a, int b) : c0(uint8_t(((a % 4) + 4) % 4)), c1(uint8_t(((b % 4) + 4) % 4)) {}
    static constexpr GR42 from_z4(int a) { return GR42(a, 0); }

    friend constexpr GR42 operator+(GR42 x, GR42 y) { return GR42(x.c0 + y.c0, x.c1 + y.c1); }
    friend constexpr GR42 operator-(GR42 x, GR42 y) { return GR42(x.c0 + 4 - y.c0, x.c1 + 4 - y.c1); }
    friend constexpr GR42 operator*(GR42 x, GR42 y) {
        // (a0 + a1 w)(b0 + b1 w) with w^2 = 3w + 3
        int t = x.c1 * y.c1;
        return GR42(x.c0 * y.c0 + 3 * t, x.c0 * y.c1 + x.c1 * y.c0 + 3 * t);
    }
    constexpr GR42 scaled(int k) const { return GR42(k * c0, k * c1); }

    constexpr bool is_zero() const { return c0 == 0 && c1 == 0; }
    constexpr bool is_unit() const { return ((c0 | c1) & 1) != 0; }
    constexpr F4 reduce2() const { return F4((c0 & 1) | ((c1 & 1) << 1)); }
    GR42 inv() const;  // throws on non-unit

    bool operator==(const GR42&) const = default;
    auto operator<=>(const GR42&) const = default;
};

/// Teichmuller lift of F4 into GR(4,2): {0, 1, w, w^2} -> {0, 1, w, 3+3w}.
GR42 teich(F4 t);
/// Unique (t0, t1) with z = teich(t0) + 2*teich(t1).
std::pair<F4, F4> teich_decompose(GR42 z);
/// Ring automorphism: teich(t0) + 2 teich(t1) -> teich(t0^2) + 2 teich(t1^2).
GR42 frobenius(GR42 z);

struct M2Z2;

/// Element of M2(Z4): 2x2 matrix of residues mod 4, row-major.
/// This canonical matrix form drives all products; the z1 + U z2 view over
/// GR(4,2) is derived from it.
struct M2Z4 {
    std::array<uint8_t, 4> m{0, 0, 0, 0};

    constexpr M2Z4() = default;
    constexpr M2Z4(int a, int b, int c, int d)
        : m{uint8_t(((a % 4) + 4) % 4), uint8_t(((b % 4) + 4) % 4), uint8_t(((c % 4) + 4) % 4),
            uint8_t(((d % 4) + 4) % 4)} {}

    static constexpr M2Z4 ident() { return {1, 0, 0, 1}; }
    static constexpr M2Z4 scalar(int k) { return {k, 0, 0, k}; }
    static constexpr M2Z4 u() { return {1, 1, 1, 1}; }
    static constexpr M2Z4 wmat() { return {0, 1, 3, 3}; }
    /// Matrix units E11, E12, E21, E22 (the additive basis of Lemma-style coordinates).
    static M2Z4 unit(int k);

    friend constexpr M2Z4 operator+(const M2Z4& x, const M2Z4& y) {
        return {x.m[0] + y.m[0], x.m[1] + y.m[1], x.m[2] + y.m[2], x.m[3] + y.m[3]};
    }
    friend constexpr M2Z4 operator-(const M2Z4& x, const M2Z4& y) {
        return {x.m[0] + 4 - y.m[0], x.m[1] + 4 - y.m[1], x.m[2] + 4 - y.m[2], x.m[3] + 4 - y.m[3]};
    }
    friend constexpr M2Z4 operator*(const M2Z4& x, const M2Z4& y) {
        return {x.m[0] * y.m[0] + x.m[1] * y.m[2], x.m[0] * y.m[1] + x.m[1] * y.m[3],
                x.m[2] * y.m[0] + x.m[3] * y.m[2], x.m[2] * y.m[1] + x.m[3] * y.m[3]};
    }
    constexpr M2Z4 scaled(int k) const { return {k * m[0], k * m[1], k * m[2], k * m[3]}; }

    constexpr bool is_zero() const { return m[0] == 0 && m[1] == 0 && m[2] == 0 && m[3] == 0; }
    constexpr uint8_t pack() const { return uint8_t(m[0] | (m[1] << 2) | (m[2] << 4) | (m[3] << 6)); }
    static constexpr M2Z4 unpack(uint8_t p) { return {p & 3, (p >> 2) & 3, (p >> 4) & 3, (p >> 6) & 3}; }

    /// Coordinates in the matrix-unit basis; for the canonical matrix form
    /// these are just the entries.
    constexpr std::array<uint8_t, 4> coords() const { return m; }

    M2Z2 reduce_mod2() const;

    bool operator==(const M2Z4&) const = default;
    auto operator<=>(const M2Z4&) const = default;
};

/// Element of M2(Z2).
struct M2Z2 {
    std::array<uint8_t, 4> m{0, 0, 0, 0};

    constexpr M2Z2() = default;
    constexpr M2Z2(int a, int b, int c, int d)
        : m{uint8_t(a & 1), uint8_t(b & 1), uint8_t(c & 1), uint8_t(d & 1)} {}

    static constexpr M2Z2 ident() { return {1, 0, 0, 1}; }
    static constexpr M2Z2 u() { return {1, 1, 1, 1}; }
    static constexpr M2Z2 wmat() { return {0, 1, 1, 1}; }
    static M2Z2 unit(int k);

    friend constexpr M2Z2 operator+(const M2Z2& x, const M2Z2& y) {
        return {x.m[0] ^ y.m[0], x.m[1] ^ y.m[1], x.m[2] ^ y.m[2], x.m[3] ^ y.m[3]};
    }
    friend constexpr M2Z2 operator-(const M2Z2& x, const M2Z2& y) { return x + y; }
    friend constexpr M2Z2 operator*(const M2Z2& x, const M2Z2& y) {
        return {x.m[0] * y.m[0] + x.m[1] * y.m[2], x.m[0] * y.m[1] + x.m[1] * y.m[3],
                x.m[2] * y.m[0] + x.m[3] * y.m[2], x.m[2] * y.m[1] + x.m[3] * y.m[3]};
    }
    constexpr M2Z2 scaled(int k) const { return {k * m[0], k * m[1], k * m[2], k * m[3]}; }

    constexpr bool is_zero() const { return m[0] == 0 && m[1] == 0 && m[2] == 0 && m[3] == 0; }
    constexpr uint8_t pack() const { return uint8_t(m[0] | (m[1] << 1) | (m[2] << 2) | (m[3] << 3)); }
    static constexpr M2Z2 unpack(uint8_t p) { return {p & 1, (p >> 1) & 1, (p >> 2) & 1, (p >> 3) & 1}; }

    bool operator==(const M2Z2&) const = default;
    auto operator<=>(const M2Z2&) const = default;
};

/// z = c0 + c1 w  ->  c0 I + c1 Wmat. Injective ring homomorphism onto the
/// 16-element commutative subring W.
M2Z4 embed_gr(GR42 z);
/// Unique (z1, z2) with r = embed_gr(z1) + U * embed_gr(z2).
std::pair<GR42, GR42> decompose_wu(const M2Z4& r);
/// Componentwise Frobenius on the (z1, z2) view. Additive involution; on the
/// subring W it is the Galois conjugation.
M2Z4 conj_r(const M2Z4& r);
/// Reduction of r modulo 2 and U: the F4 residue of the z1 component.
F4 mu(const M2Z4& r);

/// F4 -> M2(Z2) via the mod-2 image of W.
M2Z2 embed_f4_m2z2(F4 t);
/// Unique (a, c) with s = embed(a) + u * embed(c).
std::pair<F4, F4> decompose_m2z2(const M2Z2& s);
M2Z2 conj_m2z2(const M2Z2& s);

// text rendering / parsing
std::string to_string(F4 x);
std::string to_string(GR42 z);
std::string to_string(const M2Z4& r);
std::string to_string(const M2Z2& s);
F4 parse_f4(std::string_view s);
GR42 parse_gr42(std::string_view s);
M2Z4 parse_m2z4(std::string_view s);
M2Z2 parse_m2z2(std::string_view s);

}  // namespace m2c
