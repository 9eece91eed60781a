#include "m2cyclic/poly.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace m2c {

PolyF4 xn_minus_1_f4(int n) {
    std::vector<F4> c(size_t(n) + 1, F4(0));
    c[0] = F4(1);  // -1 = 1 in characteristic 2
    c[size_t(n)] = F4(1);
    return PolyF4(std::move(c));
}

PolyGR xn_minus_1_gr(int n) {
    std::vector<GR42> c(size_t(n) + 1, GR42());
    c[0] = GR42(3, 0);
    c[size_t(n)] = GR42(1, 0);
    return PolyGR(std::move(c));
}

std::pair<PolyF4, PolyF4> divmod(const PolyF4& f, const PolyF4& g) {
    if (g.is_zero()) throw std::domain_error("poly division by zero");
    PolyF4 r = f;
    std::vector<F4> q(f.c.size(), F4(0));
    F4 lg_inv = g.leading().inv();
    while (!r.is_zero() && r.degree() >= g.degree()) {
        int k = r.degree() - g.degree();
        F4 s = r.leading() * lg_inv;
        q[size_t(k)] = q[size_t(k)] + s;
        for (int i = 0; i <= g.degree(); ++i) r.c[size_t(i + k)] = r.c[size_t(i + k)] - s * g.c[size_t(i)];
        r.normalize();
    }
    return {PolyF4(std::move(q)), r};
}

PolyF4 poly_mod(const PolyF4& f, const PolyF4& g) { return divmod(f, g).second; }

PolyF4 poly_gcd(PolyF4 f, PolyF4 g) {
    while (!g.is_zero()) {
        PolyF4 r = poly_mod(f, g);
        f = std::move(g);
        g = std::move(r);
    }
    if (f.is_zero()) return f;
    F4 inv = f.leading().inv();
    for (auto& x : f.c) x = x * inv;
    return f;
}

std::tuple<PolyF4, PolyF4, PolyF4> ext_gcd(const PolyF4& f, const PolyF4& g) {
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("ext_gcd(0, 0)");
    PolyF4 r0 = f, r1 = g;
    PolyF4 a0 = PolyF4::one(), a1{};
    PolyF4 b0{}, b1 = PolyF4::one();
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        PolyF4 a2 = a0 - q * a1, b2 = b0 - q * b1;
        r0 = std::move(r1);
        r1 = std::move(r);
        a0 = std::move(a1);
        a1 = std::move(a2);
        b0 = std::move(b1);
        b1 = std::move(b2);
    }
    F4 inv = r0.leading().inv();
    for (auto& x : r0.c) x = x * inv;
    for (auto& x : a0.c) x = x * inv;
    for (auto& x : b0.c) x = x * inv;
    return {r0, a0, b0};
}

bool is_irreducible(const PolyF4& f) {
    if (f.degree() < 1) return false;
    // trial division; fine at the degrees this library meets
    std::function<void(std::vector<F4>&, int)> noop;
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        std::vector<F4> div(size_t(d) + 1, F4(0));
        div[size_t(d)] = F4(1);
        uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= 4;
        for (uint64_t idx = 0; idx < count; ++idx) {
            for (int i = 0; i < d; ++i) div[size_t(i)] = F4(int((idx >> (2 * i)) & 3));
            if (poly_mod(f, PolyF4(std::vector<F4>(div))).is_zero()) return false;
        }
    }
    return true;
}

namespace {

template <class T>
Poly<T> reciprocal_impl(const Poly<T>& f, bool unit_const) {
    if (f.is_zero() || !unit_const)
        throw std::invalid_argument("reciprocal: constant term is not a unit");
    std::vector<T> r(f.c.rbegin(), f.c.rend());
    T inv = [&] {
        if constexpr (std::is_same_v<T, F4>)
            return f.c[0].inv();
        else
            return f.c[0].inv();
    }();
    for (auto& x : r) x = inv * x;
    return Poly<T>(std::move(r));
}

}  // namespace

PolyF4 reciprocal(const PolyF4& f) {
    return reciprocal_impl(f, !f.is_zero() && !f.c[0].is_zero());
}

PolyGR reciprocal(const PolyGR& f) {
    return reciprocal_impl(f, !f.is_zero() && f.c[0].is_unit());
}

PolyF4 conj_poly(const PolyF4& f) {
    std::vector<F4> r(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) r[i] = f.c[i].square();
    return PolyF4(std::move(r));
}

std::vector<std::vector<int>> cyclotomic_cosets(int n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("n must be odd and >= 1");
    std::vector<bool> seen(size_t(n), false);
    std::vector<std::vector<int>> cosets;
    for (int s = 0; s < n; ++s) {
        if (seen[size_t(s)]) continue;
        std::vector<int> cs;
        int t = s;
        do {
            seen[size_t(t)] = true;
            cs.push_back(t);
            t = int((int64_t(t) * 4) % n);
        } while (t != s);
        cosets.push_back(std::move(cs));
    }
    return cosets;
}

namespace {

// F4[y]/(p), p monic irreducible of degree m; elements as PolyF4 of degree < m
struct FieldExt {
    int m;
    PolyF4 p;

    PolyF4 mul(const PolyF4& a, const PolyF4& b) const { return poly_mod(a * b, p); }
    PolyF4 pow(PolyF4 base, uint64_t e) const {
        PolyF4 r = PolyF4::one();
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    PolyF4 element(uint64_t idx) const {
        std::vector<F4> c(size_t(m), F4(0));
        for (int i = 0; i < m; ++i) c[size_t(i)] = F4(int((idx >> (2 * i)) & 3));
        return PolyF4(std::move(c));
    }
};

PolyF4 find_irreducible(int m) {
    if (m == 1) return PolyF4::x();
    std::vector<F4> c(size_t(m) + 1, F4(0));
    c[size_t(m)] = F4(1);
    uint64_t count = 1;
    for (int i = 0; i < m; ++i) count *= 4;
    for (uint64_t idx = 0; idx < count; ++idx) {
        for (int i = 0; i < m; ++i) c[size_t(i)] = F4(int((idx >> (2 * i)) & 3));
        PolyF4 cand{std::vector<F4>(c)};
        if (is_irreducible(cand)) return cand;
    }
    throw std::logic_error("no irreducible polynomial found");
}

std::vector<int> prime_factors(int n) {
    std::vector<int> ps;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

bool canonical_less(const PolyF4& a, const PolyF4& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = a.degree(); k >= 0; --k)
        if (a.c[size_t(k)] != b.c[size_t(k)]) return a.c[size_t(k)] < b.c[size_t(k)];
    return false;
}

}  // namespace

std::vector<PolyF4> factor_xn1(int n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("n must be odd and >= 1");
    if (n == 1) return {PolyF4({F4(1), F4(1)})};

    int m = 1;
    {
        int64_t t = 4 % n;
        while (t != 1) {
            t = (t * 4) % n;
            ++m;
        }
    }
    FieldExt ext{m, find_irreducible(m)};
    uint64_t q = 1;
    for (int i = 0; i < m; ++i) q *= 4;
    const uint64_t group = q - 1;
    if (group % uint64_t(n) != 0) throw std::logic_error("field degree does not match n");

    // deterministic primitive n-th root: first element (in coefficient order)
    // whose (group/n)-th power has exact order n
    PolyF4 zeta;
    auto primes = prime_factors(n);
    for (uint64_t idx = 1; idx < q; ++idx) {
        PolyF4 s = ext.pow(ext.element(idx), group / uint64_t(n));
        if (!(ext.pow(s, uint64_t(n)) == PolyF4::one())) continue;
        bool exact = !(s == PolyF4::one()) || n == 1;
        for (int p : primes)
            if (ext.pow(s, uint64_t(n / p)) == PolyF4::one()) exact = false;
        if (exact) {
            zeta = s;
            break;
        }
    }
    if (zeta.is_zero()) throw std::logic_error("no primitive n-th root found");

    std::vector<PolyF4> factors;
    for (const auto& coset : cyclotomic_cosets(n)) {
        // minimal polynomial: product of (x - zeta^i) over the coset
        std::vector<PolyF4> poly{PolyF4::one()};  // coefficients in the extension
        for (int i : coset) {
            PolyF4 root = ext.pow(zeta, uint64_t(i));
            std::vector<PolyF4> next(poly.size() + 1, PolyF4{});
            for (size_t k = 0; k < poly.size(); ++k) {
                next[k + 1] = next[k + 1] + poly[k];
                next[k] = next[k] - ext.mul(root, poly[k]);
            }
            poly = std::move(next);
        }
        std::vector<F4> base(poly.size(), F4(0));
        for (size_t k = 0; k < poly.size(); ++k) {
            if (poly[k].degree() > 0) throw std::logic_error("minimal polynomial not over F4");
            base[k] = poly[k].coeff(0);
        }
        factors.emplace_back(std::move(base));
    }
    std::sort(factors.begin(), factors.end(), canonical_less);
    return factors;
}

PolyGR hensel_lift(const PolyF4& fbar, int n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("n must be odd and >= 1");
    auto [quot, rem] = divmod(xn_minus_1_f4(n), fbar);
    if (!rem.is_zero()) throw std::invalid_argument("hensel_lift: polynomial does not divide x^n - 1");
    const PolyF4& gbar = quot;

    auto [d, a, b] = ext_gcd(fbar, gbar);
    if (!(d == PolyF4::one())) throw std::logic_error("cofactors of x^n - 1 must be coprime for odd n");

    PolyGR f0 = lift_bits(fbar), g0 = lift_bits(gbar);
    PolyGR e = xn_minus_1_gr(n) - f0 * g0;
    // e = 2*ebar with ebar over F4
    std::vector<F4> eb(e.c.size());
    for (size_t i = 0; i < e.c.size(); ++i) {
        GR42 z = e.c[i];
        if ((z.c0 & 1) || (z.c1 & 1)) throw std::logic_error("hensel defect is not divisible by 2");
        eb[i] = F4((z.c0 >> 1) | ((z.c1 >> 1) << 1));
    }
    PolyF4 ebar(std::move(eb));

    PolyF4 s = poly_mod(b * ebar, fbar);
    PolyF4 t = poly_mod(a * ebar, gbar);
    PolyGR lift = f0 + scale_left(GR42(2, 0), lift_bits(s));
    PolyGR cof = g0 + scale_left(GR42(2, 0), lift_bits(t));
    if (!(lift * cof == xn_minus_1_gr(n))) throw std::logic_error("hensel lift is not exact");
    return lift;
}

std::vector<PolyF4> units_mod(const PolyF4& f) {
    if (!is_irreducible(f)) throw std::invalid_argument("units_mod: polynomial is reducible");
    const int d = f.degree();
    uint64_t q = 1;
    for (int i = 0; i < d; ++i) q *= 4;
    std::vector<PolyF4> out;
    out.reserve(q - 1);
    for (uint64_t idx = 1; idx < q; ++idx) {
        std::vector<F4> c(size_t(d), F4(0));
        for (int i = 0; i < d; ++i) c[size_t(i)] = F4(int((idx >> (2 * i)) & 3));
        out.emplace_back(std::move(c));
    }
    return out;
}

PolyGR lift_bits(const PolyF4& f) {
    std::vector<GR42> c(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) c[i] = GR42(f.c[i].v & 1, (f.c[i].v >> 1) & 1);
    return PolyGR(std::move(c));
}

PolyGR lift_teich(const PolyF4& f) {
    std::vector<GR42> c(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) c[i] = teich(f.c[i]);
    return PolyGR(std::move(c));
}

PolyF4 reduce2(const PolyGR& f) {
    std::vector<F4> c(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) c[i] = f.c[i].reduce2();
    return PolyF4(std::move(c));
}

PolyR embed_r(const PolyGR& f) {
    std::vector<M2Z4> c(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) c[i] = embed_gr(f.c[i]);
    return PolyR(std::move(c));
}

PolyM2 embed_m2(const PolyF4& f) {
    std::vector<M2Z2> c(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) c[i] = embed_f4_m2z2(f.c[i]);
    return PolyM2(std::move(c));
}

PolyF4 mu_poly(const PolyR& f) {
    std::vector<F4> c(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) c[i] = mu(f.c[i]);
    return PolyF4(std::move(c));
}

namespace {

template <class T>
std::string poly_to_string(const Poly<T>& f, std::string (*coeff_str)(T), bool (*composite)(T)) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int k = f.degree(); k >= 0; --k) {
        T c = f.c[size_t(k)];
        if (c.is_zero()) continue;
        if (!out.empty()) out += "+";
        std::string xpart = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
        if (k > 0 && c == ring_one<T>()) {
            out += xpart;
        } else {
            std::string cs = coeff_str(c);
            if (composite(c)) cs = "(" + cs + ")";
            out += cs;
            if (k > 0) out += "*" + xpart;
        }
    }
    return out;
}

std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        if (ch == '(' || ch == '[') ++depth;
        if (ch == ')' || ch == ']') --depth;
        if (ch == sep && depth == 0) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    parts.push_back(s.substr(start));
    return parts;
}

template <class T>
Poly<T> parse_poly(std::string_view s, T (*coeff_parse)(std::string_view)) {
    std::string clean;
    clean.reserve(s.size());
    for (char ch : s)
        if (ch != ' ' && ch != '\t') clean.push_back(ch);
    if (clean.empty()) throw std::invalid_argument("empty polynomial");
    if (clean == "0") return {};

    std::vector<T> coeffs;
    auto put = [&](int deg, T v) {
        if (deg >= int(coeffs.size())) coeffs.resize(size_t(deg) + 1, T{});
        coeffs[size_t(deg)] = coeffs[size_t(deg)] + v;
    };
    for (std::string_view term : split_top_level(clean, '+')) {
        if (term.empty()) throw std::invalid_argument("malformed polynomial: '" + clean + "'");
        std::string_view ctext, xpart;
        auto star = split_top_level(term, '*');
        if (star.size() == 2) {
            ctext = star[0];
            xpart = star[1];
        } else if (star.size() == 1) {
            if (term[0] == 'x')
                xpart = term;
            else
                ctext = term;
        } else {
            throw std::invalid_argument("malformed term: '" + std::string(term) + "'");
        }
        int deg = 0;
        if (!xpart.empty()) {
            if (xpart == "x")
                deg = 1;
            else if (xpart.substr(0, 2) == "x^")
                deg = std::stoi(std::string(xpart.substr(2)));
            else
                throw std::invalid_argument("malformed term: '" + std::string(term) + "'");
        }
        T cv;
        if (ctext.empty()) {
            cv = ring_one<T>();
        } else {
            if (ctext.front() == '(' && ctext.back() == ')') ctext = ctext.substr(1, ctext.size() - 2);
            cv = coeff_parse(ctext);
        }
        put(deg, cv);
    }
    return Poly<T>(std::move(coeffs));
}

}  // namespace

std::string to_string(const PolyF4& f) {
    return poly_to_string<F4>(
        f, [](F4 c) { return to_string(c); }, [](F4) { return false; });
}

std::string to_string(const PolyGR& f) {
    return poly_to_string<GR42>(
        f, [](GR42 c) { return to_string(c); }, [](GR42 c) { return c.c0 != 0 && c.c1 != 0; });
}

std::string to_string(const PolyR& f) {
    return poly_to_string<M2Z4>(
        f, [](M2Z4 c) { return to_string(c); }, [](M2Z4) { return false; });
}

std::string to_string(const PolyM2& f) {
    return poly_to_string<M2Z2>(
        f, [](M2Z2 c) { return to_string(c); }, [](M2Z2) { return false; });
}

PolyF4 parse_poly_f4(std::string_view s) {
    return parse_poly<F4>(s, [](std::string_view t) { return parse_f4(t); });
}

PolyGR parse_poly_gr(std::string_view s) {
    return parse_poly<GR42>(s, [](std::string_view t) { return parse_gr42(t); });
}

PolyR parse_poly_r(std::string_view s) {
    return parse_poly<M2Z4>(s, [](std::string_view t) { return parse_m2z4(t); });
}

}  // namespace m2c
