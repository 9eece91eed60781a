#include "doctest.h"
#include "m2cyclic/ring.hpp"

using namespace m2c;

namespace {

// Structural product of basis symbols 1, X, Y, YX (matrix units E11, E12,
// E21, E22): an independent route to the ring product, used to check that
// coordinates multiply by the published rule.
// entry: -1 means zero, otherwise the index of the resulting basis symbol.
constexpr int SYMBOL_PRODUCT[4][4] = {
    {0, 1, -1, -1},
    {-1, -1, 0, 1},
    {2, 3, -1, -1},
    {-1, -1, 2, 3},
};

M2Z4 coords_product(const M2Z4& x, const M2Z4& y) {
    std::array<int, 4> out{0, 0, 0, 0};
    auto a = x.coords(), b = y.coords();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int t = SYMBOL_PRODUCT[i][j];
            if (t >= 0) out[t] += a[i] * b[j];
        }
    return M2Z4(out[0], out[1], out[2], out[3]);
}

}  // namespace

TEST_CASE("F4 arithmetic") {
    CHECK(f4_w * f4_w == f4_w2);
    CHECK(f4_w * f4_w2 == F4(1));
    CHECK(f4_w2 * f4_w2 == f4_w);
    CHECK(f4_w + F4(1) == f4_w2);
    for (int i = 1; i < 4; ++i) CHECK(F4(i) * F4(i).inv() == F4(1));
    CHECK(to_string(f4_w2) == "w2");
    CHECK(parse_f4("w2") == f4_w2);
}

TEST_CASE("GR42 arithmetic") {
    GR42 w(0, 1);
    CHECK(w * w == GR42(3, 3));  // w^2 = 3w + 3
    // mod-2 reduction reproduces F4
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    GR42 x(a, b), y(c, d);
                    CHECK((x * y).reduce2() == x.reduce2() * y.reduce2());
                    CHECK((x + y).reduce2() == x.reduce2() + y.reduce2());
                }
    int units = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (GR42(a, b).is_unit()) {
                ++units;
                CHECK(GR42(a, b) * GR42(a, b).inv() == GR42(1, 0));
            }
    CHECK(units == 12);
    CHECK(to_string(GR42(3, 3)) == "3+3w");
    CHECK(to_string(GR42(0, 2)) == "2w");
    CHECK(parse_gr42("3+3w") == GR42(3, 3));
    CHECK(parse_gr42("w") == GR42(0, 1));
    CHECK(parse_gr42("2") == GR42(2, 0));
}

TEST_CASE("matrix product matches the coordinate product rule on all pairs") {
    // the published multiplication rule of the basis symbols, checked
    // exhaustively against the 2x2 matrix product: 256 x 256 pairs
    for (int p = 0; p < 256; ++p)
        for (int q = 0; q < 256; ++q) {
            M2Z4 x = M2Z4::unpack(uint8_t(p)), y = M2Z4::unpack(uint8_t(q));
            CHECK(x * y == coords_product(x, y));
        }
    // spot values: X*Y = E11, X*X = 0
    CHECK(M2Z4::unit(1) * M2Z4::unit(2) == M2Z4::unit(0));
    CHECK((M2Z4::unit(1) * M2Z4::unit(1)).is_zero());
    CHECK(M2Z4::ident() * M2Z4::u() == M2Z4::u());
}

TEST_CASE("U relations") {
    M2Z4 u = M2Z4::u();
    CHECK(u * u == u.scaled(2));
    CHECK((u * u * u).is_zero());
    CHECK(((u * u).scaled(2)).is_zero());
    CHECK(u.scaled(2) == M2Z4::scalar(2) * u);
}

TEST_CASE("embed_gr") {
    CHECK(embed_gr(GR42(1, 0)) == M2Z4::ident());
    CHECK(embed_gr(GR42(0, 1)) == M2Z4(0, 1, 3, 3));
    CHECK(embed_gr(GR42(0, 2)) == M2Z4(0, 2, 2, 2));
    // Wmat^2 + Wmat + I = 0
    M2Z4 w = M2Z4::wmat();
    CHECK((w * w + w + M2Z4::ident()).is_zero());
    // injective, additive, multiplicative
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b) {
            GR42 x(a & 3, a >> 2), y(b & 3, b >> 2);
            CHECK(embed_gr(x * y) == embed_gr(x) * embed_gr(y));
            CHECK(embed_gr(x + y) == embed_gr(x) + embed_gr(y));
            if (!(x == y)) CHECK(!(embed_gr(x) == embed_gr(y)));
        }
}

TEST_CASE("decompose_wu") {
    auto [z1, z2] = decompose_wu(M2Z4::ident());
    CHECK(z1 == GR42(1, 0));
    CHECK(z2 == GR42(0, 0));
    auto [y1, y2] = decompose_wu(M2Z4::u());
    CHECK(y1 == GR42(0, 0));
    CHECK(y2 == GR42(1, 0));
    // derived by scanning all 256 (z1, z2) pairs: U * Wmat decomposes as (0, w)
    auto [x1, x2] = decompose_wu(M2Z4::u() * M2Z4::wmat());
    CHECK(x1 == GR42(0, 0));
    CHECK(x2 == GR42(0, 1));
    // round trip on every element
    for (int p = 0; p < 256; ++p) {
        M2Z4 r = M2Z4::unpack(uint8_t(p));
        auto [a, b] = decompose_wu(r);
        CHECK(embed_gr(a) + M2Z4::u() * embed_gr(b) == r);
    }
}

TEST_CASE("teichmuller decomposition") {
    CHECK(teich_decompose(GR42(0, 0)) == std::pair{F4(0), F4(0)});
    CHECK(teich_decompose(GR42(3, 0)) == std::pair{F4(1), F4(1)});  // 3 = 1 + 2*1
    CHECK(teich_decompose(GR42(3, 3)) == std::pair{f4_w2, F4(0)});
    // uniqueness over all 16 elements
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            auto [t0, t1] = teich_decompose(GR42(a, b));
            CHECK(teich(t0) + teich(t1).scaled(2) == GR42(a, b));
        }
}

TEST_CASE("frobenius") {
    CHECK(frobenius(GR42(1, 0)) == GR42(1, 0));
    CHECK(frobenius(GR42(0, 1)) == GR42(3, 3));  // w -> w^2 representative
    CHECK(frobenius(GR42(2, 0)) == GR42(2, 0));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            GR42 z(a, b);
            CHECK(frobenius(frobenius(z)) == z);
            CHECK(frobenius(z).reduce2() == z.reduce2().square());
        }
    // ring automorphism fixing Z4
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b) {
            GR42 x(a & 3, a >> 2), y(b & 3, b >> 2);
            CHECK(frobenius(x * y) == frobenius(x) * frobenius(y));
            CHECK(frobenius(x + y) == frobenius(x) + frobenius(y));
        }
}

TEST_CASE("conj_r") {
    CHECK(conj_r(M2Z4::ident()) == M2Z4::ident());
    CHECK(conj_r(M2Z4::u()) == M2Z4::u());
    CHECK(conj_r(embed_gr(GR42(0, 1))) == embed_gr(GR42(3, 3)));
    for (int p = 0; p < 256; ++p) {
        M2Z4 r = M2Z4::unpack(uint8_t(p));
        CHECK(conj_r(conj_r(r)) == r);
        for (int q = 0; q < 256; q += 7) {
            M2Z4 s = M2Z4::unpack(uint8_t(q));
            CHECK(conj_r(r + s) == conj_r(r) + conj_r(s));
        }
    }
    // multiplicative on the subring W (not asserted on all of R)
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b) {
            M2Z4 x = embed_gr(GR42(a & 3, a >> 2)), y = embed_gr(GR42(b & 3, b >> 2));
            CHECK(conj_r(x * y) == conj_r(x) * conj_r(y));
        }
}

TEST_CASE("mu") {
    CHECK(mu(M2Z4::ident()) == F4(1));
    CHECK(mu(M2Z4::u()) == F4(0));
    CHECK(mu(embed_gr(GR42(0, 1)) + M2Z4::scalar(2)) == f4_w);
    // additive and surjective; kills left factors 2 and U; multiplicative on W
    std::array<int, 4> hits{};
    for (int p = 0; p < 256; ++p) {
        M2Z4 r = M2Z4::unpack(uint8_t(p));
        hits[mu(r).v]++;
        CHECK(mu(M2Z4::u() * r) == F4(0));
        CHECK(mu(r.scaled(2)) == F4(0));
        for (int q = 0; q < 256; q += 5) {
            M2Z4 s = M2Z4::unpack(uint8_t(q));
            CHECK(mu(r + s) == mu(r) + mu(s));
        }
    }
    for (int v = 0; v < 4; ++v) CHECK(hits[v] == 64);
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b) {
            M2Z4 x = embed_gr(GR42(a & 3, a >> 2)), y = embed_gr(GR42(b & 3, b >> 2));
            CHECK(mu(x * y) == mu(x) * mu(y));
        }
}

TEST_CASE("reduce_mod2 and M2Z2") {
    CHECK(M2Z4::scalar(2).reduce_mod2().is_zero());
    CHECK(M2Z4::u().reduce_mod2() == M2Z2::u());
    CHECK(M2Z4(1, 2, 3, 0).reduce_mod2() == M2Z2(1, 0, 1, 0));
    // ring homomorphism
    for (int p = 0; p < 256; p += 3)
        for (int q = 0; q < 256; q += 5) {
            M2Z4 x = M2Z4::unpack(uint8_t(p)), y = M2Z4::unpack(uint8_t(q));
            CHECK((x * y).reduce_mod2() == x.reduce_mod2() * y.reduce_mod2());
            CHECK((x + y).reduce_mod2() == x.reduce_mod2() + y.reduce_mod2());
        }
    // u^2 = 0 mod 2, and F4 + uF4 covers all 16 elements
    CHECK((M2Z2::u() * M2Z2::u()).is_zero());
    for (int p = 0; p < 16; ++p) {
        M2Z2 s = M2Z2::unpack(uint8_t(p));
        auto [a, c] = decompose_m2z2(s);
        CHECK(embed_f4_m2z2(a) + M2Z2::u() * embed_f4_m2z2(c) == s);
        CHECK(conj_m2z2(conj_m2z2(s)) == s);
    }
}

TEST_CASE("element text round trips") {
    for (int p = 0; p < 256; ++p) {
        M2Z4 r = M2Z4::unpack(uint8_t(p));
        CHECK(parse_m2z4(to_string(r)) == r);
    }
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            GR42 z(a, b);
            CHECK(parse_gr42(to_string(z)) == z);
        }
}
