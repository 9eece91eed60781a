#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "m2cyclic/ring.hpp"

namespace m2c {

template <class T>
constexpr T ring_one();
template <>
constexpr F4 ring_one<F4>() { return F4(1); }
template <>
constexpr GR42 ring_one<GR42>() { return GR42(1, 0); }
template <>
constexpr M2Z4 ring_one<M2Z4>() { return M2Z4::ident(); }
template <>
constexpr M2Z2 ring_one<M2Z2>() { return M2Z2::ident(); }

/// Polynomial with coefficients in T, ascending degree, no trailing zeros.
/// x is central also over the matrix ring: multiplying by x only shifts
/// coefficients.
template <class T>
struct Poly {
    std::vector<T> c;

    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) { normalize(); }
    static Poly one() { return Poly({ring_one<T>()}); }
    static Poly x() { return Poly({T{}, ring_one<T>()}); }
    static Poly constant(T v) { return Poly({v}); }

    void normalize() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    int degree() const { return int(c.size()) - 1; }  // -1 for the zero polynomial
    bool is_zero() const { return c.empty(); }
    T coeff(int k) const { return (k >= 0 && k < int(c.size())) ? c[size_t(k)] : T{}; }
    T leading() const { return c.back(); }

    bool operator==(const Poly&) const = default;
};

using PolyF4 = Poly<F4>;
using PolyGR = Poly<GR42>;
using PolyR = Poly<M2Z4>;
using PolyM2 = Poly<M2Z2>;

template <class T>
Poly<T> operator+(const Poly<T>& f, const Poly<T>& g) {
    std::vector<T> r(std::max(f.c.size(), g.c.size()), T{});
    for (size_t i = 0; i < r.size(); ++i) r[i] = f.coeff(int(i)) + g.coeff(int(i));
    return Poly<T>(std::move(r));
}

template <class T>
Poly<T> operator-(const Poly<T>& f, const Poly<T>& g) {
    std::vector<T> r(std::max(f.c.size(), g.c.size()), T{});
    for (size_t i = 0; i < r.size(); ++i) r[i] = f.coeff(int(i)) - g.coeff(int(i));
    return Poly<T>(std::move(r));
}

/// Convolution; coefficient products are taken in the written order f_i * g_j,
/// which matters over the matrix ring.
template <class T>
Poly<T> operator*(const Poly<T>& f, const Poly<T>& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<T> r(f.c.size() + g.c.size() - 1, T{});
    for (size_t i = 0; i < f.c.size(); ++i)
        for (size_t j = 0; j < g.c.size(); ++j) r[i + j] = r[i + j] + f.c[i] * g.c[j];
    return Poly<T>(std::move(r));
}

template <class T>
Poly<T> scale_left(const T& s, const Poly<T>& f) {
    std::vector<T> r(f.c.size(), T{});
    for (size_t i = 0; i < f.c.size(); ++i) r[i] = s * f.c[i];
    return Poly<T>(std::move(r));
}

/// Reduce modulo x^n - 1 by folding coefficient k onto k mod n.
template <class T>
Poly<T> mod_xn_minus_1(const Poly<T>& f, int n) {
    std::vector<T> r(size_t(n), T{});
    for (size_t i = 0; i < f.c.size(); ++i) r[i % n] = r[i % n] + f.c[i];
    return Poly<T>(std::move(r));
}

PolyF4 xn_minus_1_f4(int n);
PolyGR xn_minus_1_gr(int n);

// field-specific arithmetic over F4[x]
std::pair<PolyF4, PolyF4> divmod(const PolyF4& f, const PolyF4& g);
PolyF4 poly_mod(const PolyF4& f, const PolyF4& g);
PolyF4 poly_gcd(PolyF4 f, PolyF4 g);  // monic
/// Bezout data (d, a, b) with a*f + b*g = d, d the monic gcd.
std::tuple<PolyF4, PolyF4, PolyF4> ext_gcd(const PolyF4& f, const PolyF4& g);
bool is_irreducible(const PolyF4& f);

/// f*(x) = a0^{-1} x^k f(1/x); requires a unit constant term.
PolyF4 reciprocal(const PolyF4& f);
PolyGR reciprocal(const PolyGR& f);
/// Coefficientwise Frobenius.
PolyF4 conj_poly(const PolyF4& f);

/// 4-cyclotomic cosets of {0..n-1}, sorted by smallest member.
std::vector<std::vector<int>> cyclotomic_cosets(int n);

/// Monic irreducible factors of x^n - 1 over F4, n odd, in canonical order
/// (degree, then lexicographic on coefficients from the top down, 0<1<w<w2).
std::vector<PolyF4> factor_xn1(int n);

/// The unique monic divisor of x^n - 1 over GR(4,2) reducing to fbar mod 2.
/// The lifts of all factors of x^n - 1 multiply back to x^n - 1 exactly.
PolyGR hensel_lift(const PolyF4& fbar, int n);

/// All 4^deg(f) - 1 nonzero residues modulo an irreducible f, each a unit.
std::vector<PolyF4> units_mod(const PolyF4& f);

// lifts and reductions between coefficient rings
PolyGR lift_bits(const PolyF4& f);   // (c0, c1) bits as Z4 digits
PolyGR lift_teich(const PolyF4& f);  // Teichmuller coefficient lift
PolyF4 reduce2(const PolyGR& f);
PolyR embed_r(const PolyGR& f);
PolyM2 embed_m2(const PolyF4& f);
PolyF4 mu_poly(const PolyR& f);

std::string to_string(const PolyF4& f);
std::string to_string(const PolyGR& f);
std::string to_string(const PolyR& f);
std::string to_string(const PolyM2& f);
PolyF4 parse_poly_f4(std::string_view s);
PolyGR parse_poly_gr(std::string_view s);
PolyR parse_poly_r(std::string_view s);

}  // namespace m2c
