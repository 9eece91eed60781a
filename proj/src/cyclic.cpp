#include "m2cyclic/cyclic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace m2c {

std::string to_string(RingKind r) { return r == RingKind::M2Z4 ? "m2z4" : "m2z2"; }
std::string to_string(DualKind k) { return k == DualKind::Euclidean ? "euclidean" : "hermitian"; }

RingKind parse_ring(std::string_view s) {
    if (s == "m2z4") return RingKind::M2Z4;
    if (s == "m2z2") return RingKind::M2Z2;
    throw std::invalid_argument("unknown ring '" + std::string(s) + "' (expected m2z4 or m2z2)");
}

DualKind parse_kind(std::string_view s) {
    if (s == "euclidean") return DualKind::Euclidean;
    if (s == "hermitian") return DualKind::Hermitian;
    throw std::invalid_argument("unknown kind '" + std::string(s) + "' (expected euclidean or hermitian)");
}

const FactorTable& FactorTable::get(int n) {
    static std::map<int, FactorTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    FactorTable t;
    t.n = n;
    t.factors = factor_xn1(n);
    for (const auto& f : t.factors) t.lifts.push_back(hensel_lift(f, n));
    auto find_index = [&](const PolyF4& f) {
        for (size_t i = 0; i < t.factors.size(); ++i)
            if (t.factors[i] == f) return int(i);
        throw std::logic_error("factor set not closed under pairing map");
    };
    for (const auto& f : t.factors) {
        t.recip_partner.push_back(find_index(reciprocal(f)));
        t.conj_recip_partner.push_back(find_index(conj_poly(reciprocal(f))));
    }
    return cache.emplace(n, std::move(t)).first->second;
}

// ---- words -----------------------------------------------------------------

template <class Elem>
static std::vector<Elem> shift_impl(std::vector<Elem> w) {
    if (w.size() > 1) std::rotate(w.begin(), w.end() - 1, w.end());
    return w;
}

std::vector<M2Z4> shift(std::vector<M2Z4> word) { return shift_impl(std::move(word)); }
std::vector<M2Z2> shift(std::vector<M2Z2> word) { return shift_impl(std::move(word)); }

template <class Elem>
static std::vector<uint8_t> flatten_impl(const std::vector<Elem>& w) {
    std::vector<uint8_t> v;
    v.reserve(w.size() * 4);
    for (const auto& e : w)
        for (int k = 0; k < 4; ++k) v.push_back(e.m[size_t(k)]);
    return v;
}

std::vector<uint8_t> flatten(const std::vector<M2Z4>& word) { return flatten_impl(word); }
std::vector<uint8_t> flatten(const std::vector<M2Z2>& word) { return flatten_impl(word); }

std::vector<M2Z4> unflatten_r(std::span<const uint8_t> v) {
    std::vector<M2Z4> w(v.size() / 4);
    for (size_t i = 0; i < w.size(); ++i) w[i] = M2Z4(v[4 * i], v[4 * i + 1], v[4 * i + 2], v[4 * i + 3]);
    return w;
}

std::vector<M2Z2> unflatten_m2(std::span<const uint8_t> v) {
    std::vector<M2Z2> w(v.size() / 4);
    for (size_t i = 0; i < w.size(); ++i) w[i] = M2Z2(v[4 * i], v[4 * i + 1], v[4 * i + 2], v[4 * i + 3]);
    return w;
}

namespace {

template <class Elem>
std::vector<Elem> word_of(const Poly<Elem>& g, int n) {
    Poly<Elem> r = mod_xn_minus_1(g, n);
    auto w = std::vector<Elem>(size_t(n));
    for (int i = 0; i < n; ++i) w[size_t(i)] = r.coeff(i);
    return w;
}

template <class Elem>
constexpr int ring_mod() {
    return std::is_same_v<Elem, M2Z4> ? 4 : 2;
}

// rows spanning the right-module closure of the generators:
// x^i * g * E for all shifts i and matrix units E
template <class Elem>
std::vector<std::vector<uint8_t>> closure_rows(int n, const std::vector<Poly<Elem>>& gens) {
    std::vector<std::vector<uint8_t>> rows;
    for (const auto& g : gens) {
        std::vector<Elem> w = word_of(g, n);
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < 4; ++k) {
                Elem e = Elem::unit(k);
                std::vector<Elem> we(w.size());
                for (size_t j = 0; j < w.size(); ++j) we[j] = w[j] * e;
                rows.push_back(flatten_impl(we));
            }
            w = shift_impl(std::move(w));
        }
    }
    return rows;
}

template <class Elem>
CyclicCode code_from_generators_impl(int n, const std::vector<Poly<Elem>>& gens) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("n must be odd and >= 1");
    CyclicCode c;
    c.n = n;
    c.ring = std::is_same_v<Elem, M2Z4> ? RingKind::M2Z4 : RingKind::M2Z2;
    c.basis = howell_form(closure_rows(n, gens), 4 * n, ring_mod<Elem>());
    return c;
}

}  // namespace

CyclicCode code_from_generators(int n, const std::vector<PolyR>& gens) {
    return code_from_generators_impl(n, gens);
}

CyclicCode code_from_generators(int n, const std::vector<PolyM2>& gens) {
    return code_from_generators_impl(n, gens);
}

// ---- assignment-built codes --------------------------------------------------

void validate(const FactorAssignment& a) {
    if (a.n < 1 || a.n % 2 == 0) throw std::invalid_argument("n must be odd and >= 1");
    const auto& ft = FactorTable::get(a.n);
    if (a.types.size() != ft.factors.size())
        throw std::invalid_argument("assignment must type every canonical factor");
    for (size_t i = 0; i < a.types.size(); ++i) {
        const auto& tf = a.types[i];
        if (a.ring == RingKind::M2Z2 && tf.type != SubType::Zero && tf.type != SubType::One &&
            tf.type != SubType::Uu)
            throw std::invalid_argument("M2(Z2) assignments only admit types zero, one, u");
        if (tf.type == SubType::TwoPlusUm) {
            if (poly_mod(tf.m, ft.factors[i]).is_zero())
                throw std::invalid_argument("m must be a unit modulo its factor");
        }
    }
}

int alpha_log4(const FactorAssignment& a) {
    const auto& ft = FactorTable::get(a.n);
    int alpha = 0;
    for (size_t i = 0; i < a.types.size(); ++i) {
        int deg = ft.factors[i].degree();
        int e = 0;
        if (a.ring == RingKind::M2Z4) {
            switch (a.types[i].type) {
                case SubType::Zero: e = 0; break;
                case SubType::One: e = 4; break;
                case SubType::Uu: e = 2; break;
                case SubType::Two: e = 2; break;
                case SubType::TwoU: e = 1; break;
                case SubType::TwoPlusUm: e = 2; break;
                case SubType::TwoAndU: e = 3; break;
            }
        } else {
            switch (a.types[i].type) {
                case SubType::Zero: e = 0; break;
                case SubType::One: e = 2; break;
                case SubType::Uu: e = 1; break;
                default: e = 0; break;
            }
        }
        alpha += e * deg;
    }
    return alpha;
}

namespace {

// product of the lifts of every factor whose index is not excluded
PolyGR hat_product(const FactorTable& ft, const std::vector<bool>& excluded) {
    PolyGR p = PolyGR::one();
    for (size_t i = 0; i < ft.lifts.size(); ++i)
        if (!excluded[i]) p = p * ft.lifts[i];
    return p;
}

PolyF4 hat_product_f4(const FactorTable& ft, const std::vector<bool>& excluded) {
    PolyF4 p = PolyF4::one();
    for (size_t i = 0; i < ft.factors.size(); ++i)
        if (!excluded[i]) p = p * ft.factors[i];
    return p;
}

std::vector<bool> group_mask(const FactorAssignment& a, SubType t) {
    std::vector<bool> mask(a.types.size(), false);
    bool any = false;
    for (size_t i = 0; i < a.types.size(); ++i)
        if (a.types[i].type == t) {
            mask[i] = true;
            any = true;
        }
    return any ? mask : std::vector<bool>{};
}

std::vector<PolyR> assignment_generators(const FactorAssignment& a) {
    const auto& ft = FactorTable::get(a.n);
    std::vector<PolyR> gens;
    const M2Z4 two = M2Z4::scalar(2), u = M2Z4::u(), two_u = u.scaled(2);

    if (auto g = group_mask(a, SubType::One); !g.empty())
        gens.push_back(embed_r(hat_product(ft, g)));
    if (auto g = group_mask(a, SubType::Uu); !g.empty())
        gens.push_back(scale_left(u, embed_r(hat_product(ft, g))));
    if (auto g = group_mask(a, SubType::Two); !g.empty())
        gens.push_back(scale_left(two, embed_r(hat_product(ft, g))));
    if (auto g = group_mask(a, SubType::TwoU); !g.empty())
        gens.push_back(scale_left(two_u, embed_r(hat_product(ft, g))));
    // one generator per TwoPlusUm factor, so each keeps its own unit m
    for (size_t i = 0; i < a.types.size(); ++i) {
        if (a.types[i].type != SubType::TwoPlusUm) continue;
        std::vector<bool> only(a.types.size(), false);
        only[i] = true;
        PolyGR hat = hat_product(ft, only);
        PolyR gen = scale_left(two, embed_r(hat)) +
                    scale_left(u, embed_r(lift_teich(poly_mod(a.types[i].m, ft.factors[i])) * hat));
        gens.push_back(std::move(gen));
    }
    if (auto g = group_mask(a, SubType::TwoAndU); !g.empty()) {
        PolyR h = embed_r(hat_product(ft, g));
        gens.push_back(scale_left(two, h));
        gens.push_back(scale_left(u, h));
    }
    return gens;
}

std::vector<PolyM2> assignment_generators_m2(const FactorAssignment& a) {
    const auto& ft = FactorTable::get(a.n);
    std::vector<PolyM2> gens;
    if (auto g = group_mask(a, SubType::One); !g.empty())
        gens.push_back(embed_m2(hat_product_f4(ft, g)));
    if (auto g = group_mask(a, SubType::Uu); !g.empty())
        gens.push_back(scale_left(M2Z2::u(), embed_m2(hat_product_f4(ft, g))));
    return gens;
}

}  // namespace

CyclicCode build_code(const FactorAssignment& a) {
    validate(a);
    CyclicCode c = (a.ring == RingKind::M2Z4)
                       ? code_from_generators(a.n, assignment_generators(a))
                       : code_from_generators(a.n, assignment_generators_m2(a));
    c.assignment = a;
    return c;
}

std::vector<PolyR> single_generator_set(const FactorAssignment& a) {
    validate(a);
    if (a.ring != RingKind::M2Z4)
        throw std::invalid_argument("single generator form applies to the M2(Z4) ring");
    const auto& ft = FactorTable::get(a.n);
    const M2Z4 two = M2Z4::scalar(2), u = M2Z4::u(), two_u = u.scaled(2);

    PolyR f{};
    if (auto g = group_mask(a, SubType::One); !g.empty()) f = f + embed_r(hat_product(ft, g));
    if (auto g = group_mask(a, SubType::Uu); !g.empty())
        f = f + scale_left(u, embed_r(hat_product(ft, g)));
    if (auto g = group_mask(a, SubType::Two); !g.empty())
        f = f + scale_left(two, embed_r(hat_product(ft, g)));
    if (auto g = group_mask(a, SubType::TwoU); !g.empty())
        f = f + scale_left(two_u, embed_r(hat_product(ft, g)));

    if (auto g = group_mask(a, SubType::TwoPlusUm); !g.empty()) {
        // one unit modulo the whole group, interpolated so it reduces to each
        // factor's own m (CRT over F4[x])
        PolyF4 group_prod = PolyF4::one();
        for (size_t i = 0; i < g.size(); ++i)
            if (g[i]) group_prod = group_prod * ft.factors[i];
        PolyF4 m_total{};
        for (size_t i = 0; i < g.size(); ++i) {
            if (!g[i]) continue;
            auto [q, rem] = divmod(group_prod, ft.factors[i]);
            if (!rem.is_zero()) throw std::logic_error("factor does not divide its group product");
            auto [d, inv, unused] = ext_gcd(q, ft.factors[i]);
            if (!(d == PolyF4::one())) throw std::logic_error("group factors not coprime");
            m_total = m_total + poly_mod(a.types[i].m, ft.factors[i]) * inv * q;
        }
        m_total = poly_mod(m_total, group_prod);
        PolyGR hat = hat_product(ft, g);
        f = f + scale_left(two, embed_r(hat)) + scale_left(u, embed_r(lift_teich(m_total) * hat));
    }

    auto g6 = group_mask(a, SubType::TwoAndU);
    if (g6.empty()) {
        if (f.is_zero()) return {};
        return {f};
    }
    PolyR h = embed_r(hat_product(ft, g6));
    return {f + scale_left(two, h), scale_left(u, h)};
}

// ---- GR-code composition -----------------------------------------------------

namespace {

std::vector<uint8_t> flatten_gr(const std::vector<GR42>& w) {
    std::vector<uint8_t> v;
    v.reserve(w.size() * 2);
    for (auto z : w) {
        v.push_back(z.c0);
        v.push_back(z.c1);
    }
    return v;
}

std::vector<GR42> unflatten_gr(std::span<const uint8_t> v) {
    std::vector<GR42> w(v.size() / 2);
    for (size_t i = 0; i < w.size(); ++i) w[i] = GR42(v[2 * i], v[2 * i + 1]);
    return w;
}

}  // namespace

GrCode gr_code_from_generators(int n, const std::vector<PolyGR>& gens) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("n must be odd and >= 1");
    std::vector<std::vector<uint8_t>> rows;
    for (const auto& g : gens) {
        PolyGR r = mod_xn_minus_1(g, n);
        auto w = std::vector<GR42>(size_t(n));
        for (int i = 0; i < n; ++i) w[size_t(i)] = r.coeff(i);
        for (int i = 0; i < n; ++i) {
            for (GR42 s : {GR42(1, 0), GR42(0, 1)}) {
                std::vector<GR42> ws(w.size());
                for (size_t j = 0; j < w.size(); ++j) ws[j] = w[j] * s;
                rows.push_back(flatten_gr(ws));
            }
            if (w.size() > 1) std::rotate(w.begin(), w.end() - 1, w.end());
        }
    }
    return {n, howell_form(std::move(rows), 2 * n, 4)};
}

bool is_cyclic(const GrCode& c) {
    for (int i = 0; i < c.basis.row_count(); ++i) {
        auto w = unflatten_gr(c.basis.mat.row(i));
        std::rotate(w.begin(), w.end() - 1, w.end());
        if (!span_contains(c.basis, flatten_gr(w))) return false;
    }
    return true;
}

CyclicCode compose_c1_c2(const GrCode& c1, const GrCode& c2) {
    if (c1.n != c2.n) throw std::invalid_argument("component codes must share the length");
    std::vector<std::vector<uint8_t>> rows;
    auto push = [&](const HowellBasis& b, bool with_u) {
        for (int i = 0; i < b.row_count(); ++i) {
            auto w = unflatten_gr(b.mat.row(i));
            std::vector<M2Z4> we(w.size());
            for (size_t j = 0; j < w.size(); ++j)
                we[j] = with_u ? M2Z4::u() * embed_gr(w[j]) : embed_gr(w[j]);
            rows.push_back(flatten(we));
        }
    };
    push(c1.basis, false);
    push(c2.basis, true);
    CyclicCode c;
    c.n = c1.n;
    c.ring = RingKind::M2Z4;
    c.basis = howell_form(std::move(rows), 4 * c1.n, 4);
    return c;
}

// ---- predicates ----------------------------------------------------------------

bool is_cyclic(const CyclicCode& c) {
    for (int i = 0; i < c.basis.row_count(); ++i) {
        std::vector<uint8_t> row(c.basis.mat.row(i).begin(), c.basis.mat.row(i).end());
        std::rotate(row.begin(), row.end() - 4, row.end());
        if (!span_contains(c.basis, row)) return false;
    }
    return true;
}

bool closed_under_right_mult(const CyclicCode& c) {
    for (int i = 0; i < c.basis.row_count(); ++i) {
        for (int k = 0; k < 4; ++k) {
            std::vector<uint8_t> out;
            if (c.ring == RingKind::M2Z4) {
                auto w = unflatten_r(c.basis.mat.row(i));
                for (auto& e : w) e = e * M2Z4::unit(k);
                out = flatten(w);
            } else {
                auto w = unflatten_m2(c.basis.mat.row(i));
                for (auto& e : w) e = e * M2Z2::unit(k);
                out = flatten(w);
            }
            if (!span_contains(c.basis, out)) return false;
        }
    }
    return true;
}

// ---- duals ----------------------------------------------------------------------

namespace {

// linear conditions on x (4n unknowns) for sum_i x_i y_i = 0, with optional
// conjugation applied to y first
template <class Elem>
ModMatrix dual_equations(const CyclicCode& c, bool conj) {
    const int n = c.n;
    const int mod = ring_mod<Elem>();
    ModMatrix a(4 * c.basis.row_count(), 4 * n, mod);
    for (int r = 0; r < c.basis.row_count(); ++r) {
        std::vector<Elem> y;
        if constexpr (std::is_same_v<Elem, M2Z4>) {
            y = unflatten_r(c.basis.mat.row(r));
            if (conj)
                for (auto& e : y) e = conj_r(e);
        } else {
            y = unflatten_m2(c.basis.mat.row(r));
            if (conj)
                for (auto& e : y) e = conj_m2z2(e);
        }
        for (int i = 0; i < n; ++i) {
            const auto& m = y[size_t(i)].m;  // [ya yb; yc yd]
            // x_i y_i = [xa ya + xb yc, xa yb + xb yd; xc ya + xd yc, xc yb + xd yd]
            a.at(4 * r + 0, 4 * i + 0) = m[0];
            a.at(4 * r + 0, 4 * i + 1) = m[2];
            a.at(4 * r + 1, 4 * i + 0) = m[1];
            a.at(4 * r + 1, 4 * i + 1) = m[3];
            a.at(4 * r + 2, 4 * i + 2) = m[0];
            a.at(4 * r + 2, 4 * i + 3) = m[2];
            a.at(4 * r + 3, 4 * i + 2) = m[1];
            a.at(4 * r + 3, 4 * i + 3) = m[3];
        }
    }
    return a;
}

CyclicCode dual_impl(const CyclicCode& c, bool conj) {
    CyclicCode d;
    d.n = c.n;
    d.ring = c.ring;
    d.basis = (c.ring == RingKind::M2Z4) ? kernel(dual_equations<M2Z4>(c, conj))
                                         : kernel(dual_equations<M2Z2>(c, conj));
    return d;
}

}  // namespace

CyclicCode dual_code(const CyclicCode& c) { return dual_impl(c, false); }
CyclicCode hermitian_dual_code(const CyclicCode& c) { return dual_impl(c, true); }

namespace {

SubType sigma(SubType t) {
    switch (t) {
        case SubType::Zero: return SubType::One;
        case SubType::One: return SubType::Zero;
        case SubType::TwoU: return SubType::TwoAndU;
        case SubType::TwoAndU: return SubType::TwoU;
        default: return t;
    }
}

// generator of the TwoPlusUm component at factor index i with unit m
PolyR two_plus_um_generator(const FactorTable& ft, size_t i, const PolyF4& m) {
    std::vector<bool> only(ft.factors.size(), false);
    only[i] = true;
    PolyGR hat = hat_product(ft, only);
    return scale_left(M2Z4::scalar(2), embed_r(hat)) +
           scale_left(M2Z4::u(), embed_r(lift_teich(poly_mod(m, ft.factors[i])) * hat));
}

}  // namespace

FactorAssignment dual_assignment(const FactorAssignment& a, DualKind kind) {
    validate(a);
    const auto& ft = FactorTable::get(a.n);
    const auto& perm = (kind == DualKind::Euclidean) ? ft.recip_partner : ft.conj_recip_partner;

    FactorAssignment d;
    d.n = a.n;
    d.ring = a.ring;
    d.types.resize(a.types.size());
    bool need_m = false;
    for (size_t i = 0; i < a.types.size(); ++i) {
        SubType t = sigma(a.types[i].type);
        d.types[size_t(perm[i])].type = t;
        if (t == SubType::TwoPlusUm) need_m = true;
    }
    if (!need_m) return d;

    // the published dual keeps the symbol m unchanged; recover the actual unit
    // from the kernel-built dual instead of assuming it survives
    CyclicCode oracle = (kind == DualKind::Euclidean) ? dual_code(build_code(a))
                                                      : hermitian_dual_code(build_code(a));
    for (size_t j = 0; j < d.types.size(); ++j) {
        if (d.types[j].type != SubType::TwoPlusUm) continue;
        bool found = false;
        for (const auto& cand : units_mod(ft.factors[j])) {
            auto rows = closure_rows<M2Z4>(a.n, {two_plus_um_generator(ft, j, cand)});
            bool inside = true;
            for (const auto& row : rows)
                if (!span_contains(oracle.basis, row)) {
                    inside = false;
                    break;
                }
            if (inside) {
                d.types[j].m = cand;
                found = true;
                break;
            }
        }
        if (!found)
            throw std::runtime_error(
                "dual assignment: no unit m matches the kernel-built dual at factor f" +
                std::to_string(j));
    }
    return d;
}

bool is_self_dual(const FactorAssignment& a, DualKind kind) {
    FactorAssignment d = dual_assignment(a, kind);
    const auto& ft = FactorTable::get(a.n);
    for (size_t i = 0; i < a.types.size(); ++i) {
        if (a.types[i].type != d.types[i].type) return false;
        if (a.types[i].type == SubType::TwoPlusUm &&
            !(poly_mod(a.types[i].m, ft.factors[i]) == poly_mod(d.types[i].m, ft.factors[i])))
            return false;
    }
    return true;
}

// ---- submodules of R --------------------------------------------------------------

std::vector<HowellBasis> enumerate_submodules_of_r() {
    std::map<std::string, HowellBasis> seen;
    std::vector<HowellBasis> order;
    auto add = [&](HowellBasis b) {
        std::string k = basis_key(b);
        if (seen.emplace(k, b).second) order.push_back(std::move(b));
    };
    for (int p = 0; p < 256; ++p) {
        M2Z4 r = M2Z4::unpack(uint8_t(p));
        std::vector<std::vector<uint8_t>> rows;
        for (int k = 0; k < 4; ++k) {
            M2Z4 e = r * M2Z4::unit(k);
            rows.push_back({e.m[0], e.m[1], e.m[2], e.m[3]});
        }
        add(howell_form(std::move(rows), 4, 4));
    }
    // close under pairwise sums; new joins re-enter the loop as `order` grows
    for (size_t i = 0; i < order.size(); ++i)
        for (size_t j = 0; j < i; ++j) add(span_sum(order[i], order[j]));
    std::sort(order.begin(), order.end(),
              [](const HowellBasis& x, const HowellBasis& y) { return basis_key(x) < basis_key(y); });
    return order;
}

HowellBasis submodule_form(SubType t, F4 m_unit) {
    std::vector<M2Z4> gens;
    switch (t) {
        case SubType::Zero: break;
        case SubType::One: gens = {M2Z4::ident()}; break;
        case SubType::Uu: gens = {M2Z4::u()}; break;
        case SubType::Two: gens = {M2Z4::scalar(2)}; break;
        case SubType::TwoU: gens = {M2Z4::u().scaled(2)}; break;
        case SubType::TwoPlusUm: gens = {M2Z4::scalar(2) + M2Z4::u() * embed_gr(teich(m_unit))}; break;
        case SubType::TwoAndU: gens = {M2Z4::scalar(2), M2Z4::u()}; break;
    }
    std::vector<std::vector<uint8_t>> rows;
    for (const auto& g : gens)
        for (int k = 0; k < 4; ++k) {
            M2Z4 e = g * M2Z4::unit(k);
            rows.push_back({e.m[0], e.m[1], e.m[2], e.m[3]});
        }
    return howell_form(std::move(rows), 4, 4);
}

// ---- search ------------------------------------------------------------------------

namespace {

std::vector<std::vector<TypedFactor>> choice_lists(const FactorTable& ft, RingKind ring,
                                                   MPolicy m_policy) {
    std::vector<std::vector<TypedFactor>> lists(ft.factors.size());
    for (size_t i = 0; i < ft.factors.size(); ++i) {
        auto& l = lists[i];
        l.push_back({SubType::Zero, {}});
        l.push_back({SubType::One, {}});
        l.push_back({SubType::Uu, {}});
        if (ring == RingKind::M2Z4) {
            l.push_back({SubType::Two, {}});
            l.push_back({SubType::TwoU, {}});
            l.push_back({SubType::TwoAndU, {}});
            if (m_policy == MPolicy::One) {
                l.push_back({SubType::TwoPlusUm, PolyF4::one()});
            } else {
                for (const auto& m : units_mod(ft.factors[i])) l.push_back({SubType::TwoPlusUm, m});
            }
        }
    }
    return lists;
}

}  // namespace

std::vector<SearchResult> search_self_dual(int n, DualKind kind, RingKind ring, MPolicy m_policy,
                                           int workers) {
    const auto& ft = FactorTable::get(n);
    const auto& perm = (kind == DualKind::Euclidean) ? ft.recip_partner : ft.conj_recip_partner;
    auto lists = choice_lists(ft, ring, m_policy);

    uint64_t total = 1;
    for (const auto& l : lists) total *= l.size();

    auto run_range = [&](uint64_t lo, uint64_t hi, std::vector<SearchResult>& out) {
        for (uint64_t idx = lo; idx < hi; ++idx) {
            FactorAssignment a;
            a.n = n;
            a.ring = ring;
            a.types.resize(lists.size());
            uint64_t t = idx;
            for (size_t i = 0; i < lists.size(); ++i) {
                a.types[i] = lists[i][size_t(t % lists[i].size())];
                t /= lists[i].size();
            }
            // necessary condition on the type pattern before any code is built
            bool plausible = true;
            for (size_t i = 0; i < a.types.size() && plausible; ++i)
                plausible = (a.types[size_t(perm[i])].type == sigma(a.types[i].type));
            if (!plausible) continue;

            CyclicCode c = build_code(a);
            CyclicCode d = (kind == DualKind::Euclidean) ? dual_code(c) : hermitian_dual_code(c);
            if (span_equal(c.basis, d.basis)) out.push_back({std::move(a), std::move(c)});
        }
    };

    workers = std::max(1, workers);
    auto parts = std::vector<std::vector<SearchResult>>(size_t(workers));
    if (workers == 1) {
        run_range(0, total, parts[0]);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) {
            uint64_t lo = total * uint64_t(w) / uint64_t(workers);
            uint64_t hi = total * uint64_t(w + 1) / uint64_t(workers);
            threads.emplace_back([&, lo, hi, w] { run_range(lo, hi, parts[size_t(w)]); });
        }
        for (auto& t : threads) t.join();
    }

    std::vector<SearchResult> all;
    for (auto& p : parts)
        for (auto& r : p) all.push_back(std::move(r));
    std::sort(all.begin(), all.end(), [](const SearchResult& x, const SearchResult& y) {
        return to_string(x.assignment) < to_string(y.assignment);
    });
    std::set<std::string> keys;
    std::vector<SearchResult> dedup;
    for (auto& r : all)
        if (keys.insert(basis_key(r.code.basis)).second) dedup.push_back(std::move(r));
    return dedup;
}

// ---- assignment text -----------------------------------------------------------------

namespace {

std::string type_tag(const TypedFactor& tf) {
    switch (tf.type) {
        case SubType::Zero: return "zero";
        case SubType::One: return "one";
        case SubType::Uu: return "u";
        case SubType::Two: return "2";
        case SubType::TwoU: return "2u";
        case SubType::TwoAndU: return "2&u";
        case SubType::TwoPlusUm: return "2+um(m=" + to_string(tf.m) + ")";
    }
    return "?";
}

}  // namespace

std::string to_string(const FactorAssignment& a) {
    std::string s = "n=" + std::to_string(a.n);
    for (size_t i = 0; i < a.types.size(); ++i)
        s += "; f" + std::to_string(i) + ":" + type_tag(a.types[i]);
    return s;
}

FactorAssignment parse_assignment(std::string_view text, RingKind ring, std::optional<int> n_hint) {
    FactorAssignment a;
    a.ring = ring;
    std::optional<int> n;
    struct Entry {
        int idx;
        TypedFactor tf;
    };
    std::vector<Entry> entries;

    std::string t(text);
    std::vector<std::string> parts;
    {
        int depth = 0;
        size_t start = 0;
        for (size_t pos = 0; pos <= t.size(); ++pos) {
            char ch = pos < t.size() ? t[pos] : ';';
            if (ch == '(') ++depth;
            if (ch == ')') --depth;
            if ((ch == ';' || ch == ',') && depth == 0) {
                parts.push_back(t.substr(start, pos - start));
                start = pos + 1;
            }
        }
    }
    auto strip = [](std::string s) {
        size_t b = s.find_first_not_of(" \t");
        size_t e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    for (auto& raw : parts) {
        std::string p = strip(raw);
        if (p.empty()) continue;
        if (p.rfind("n=", 0) == 0) {
            n = std::stoi(p.substr(2));
            continue;
        }
        size_t colon = p.find(':');
        if (p[0] != 'f' || colon == std::string::npos)
            throw std::invalid_argument("bad assignment clause '" + p + "'");
        int idx = std::stoi(p.substr(1, colon - 1));
        std::string tag = strip(p.substr(colon + 1));
        TypedFactor tf;
        if (tag == "zero")
            tf.type = SubType::Zero;
        else if (tag == "one")
            tf.type = SubType::One;
        else if (tag == "u")
            tf.type = SubType::Uu;
        else if (tag == "2")
            tf.type = SubType::Two;
        else if (tag == "2u")
            tf.type = SubType::TwoU;
        else if (tag == "2&u")
            tf.type = SubType::TwoAndU;
        else if (tag.rfind("2+um", 0) == 0) {
            tf.type = SubType::TwoPlusUm;
            tf.m = PolyF4::one();
            size_t open = tag.find('(');
            if (open != std::string::npos) {
                size_t close = tag.rfind(')');
                if (close == std::string::npos || close < open)
                    throw std::invalid_argument("bad unit clause '" + tag + "'");
                std::string inner = strip(tag.substr(open + 1, close - open - 1));
                if (inner.rfind("m=", 0) != 0)
                    throw std::invalid_argument("bad unit clause '" + tag + "'");
                tf.m = parse_poly_f4(inner.substr(2));
            }
        } else
            throw std::invalid_argument("unknown submodule type '" + tag + "'");
        entries.push_back({idx, std::move(tf)});
    }

    if (!n) n = n_hint;
    if (!n) throw std::invalid_argument("assignment does not specify n");
    if (n_hint && *n_hint != *n) throw std::invalid_argument("conflicting lengths n");
    a.n = *n;
    const auto& ft = FactorTable::get(a.n);
    a.types.assign(ft.factors.size(), TypedFactor{});
    for (auto& e : entries) {
        if (e.idx < 0 || e.idx >= int(ft.factors.size()))
            throw std::invalid_argument("factor index f" + std::to_string(e.idx) + " out of range");
        a.types[size_t(e.idx)] = std::move(e.tf);
    }
    validate(a);
    return a;
}

}  // namespace m2c
