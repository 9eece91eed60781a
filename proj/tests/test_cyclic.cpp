#include "doctest.h"
#include "m2cyclic/cyclic.hpp"
#include "m2cyclic/gray.hpp"

#include <random>
#include <stdexcept>

using namespace m2c;

namespace {

FactorAssignment asg(const char* text, RingKind ring = RingKind::M2Z4) {
    return parse_assignment(text, ring);
}

FactorAssignment random_assignment(int n, RingKind ring, std::mt19937& rng, bool random_m = false) {
    const auto& ft = FactorTable::get(n);
    FactorAssignment a;
    a.n = n;
    a.ring = ring;
    for (size_t i = 0; i < ft.factors.size(); ++i) {
        TypedFactor tf;
        if (ring == RingKind::M2Z4) {
            tf.type = SubType(rng() % 7);
            if (tf.type == SubType::TwoPlusUm) {
                auto units = units_mod(ft.factors[i]);
                tf.m = random_m ? units[rng() % units.size()] : PolyF4::one();
            }
        } else {
            tf.type = SubType(rng() % 3);  // Zero, One, Uu
        }
        a.types.push_back(std::move(tf));
    }
    return a;
}

}  // namespace

TEST_CASE("shift") {
    std::vector<M2Z4> one{M2Z4::ident()};
    CHECK(shift(one) == one);
    std::vector<M2Z4> w{M2Z4::scalar(1), M2Z4::scalar(2), M2Z4::scalar(3)};
    CHECK(shift(w) == std::vector<M2Z4>{M2Z4::scalar(3), M2Z4::scalar(1), M2Z4::scalar(2)});
    auto w3 = shift(shift(shift(w)));
    CHECK(w3 == w);
}

TEST_CASE("code_from_generators basics") {
    auto full = code_from_generators(3, std::vector<PolyR>{PolyR::one()});
    CHECK(full.k_log2() == 2 * 4 * 3);  // 4^(4n)
    auto zero = code_from_generators(3, std::vector<PolyR>{});
    CHECK(zero.k_log2() == 0);
    auto zero2 = code_from_generators(3, std::vector<PolyR>{PolyR{}});
    CHECK(zero2.basis == zero.basis);
    CHECK_THROWS_AS(code_from_generators(4, std::vector<PolyR>{}), std::invalid_argument);
}

TEST_CASE("build_code extremes") {
    CHECK(build_code(asg("n=3; f0:one; f1:one; f2:one")).k_log2() == 24);
    CHECK(build_code(asg("n=3")).k_log2() == 0);  // unlisted factors default to zero
    CHECK(build_code(asg("n=1; f0:one")).k_log2() == 8);
}

TEST_CASE("the n=7 two-generator code equals its assignment build") {
    const auto& ft = FactorTable::get(7);
    // generators lift(f0 f1) and U lift(f1 f2)
    PolyR g1 = embed_r(ft.lifts[0] * ft.lifts[1]);
    PolyR g2 = scale_left(M2Z4::u(), embed_r(ft.lifts[1] * ft.lifts[2]));
    auto direct = code_from_generators(7, std::vector<PolyR>{g1, g2});
    auto built = build_code(asg("n=7; f0:u; f1:zero; f2:one"));
    CHECK(span_equal(direct.basis, built.basis));
    CHECK(built.k_log2() == 28);  // 4^14
    CHECK(alpha_log4(*built.assignment) == 14);
}

TEST_CASE("random assignment panel: size, closure, duality") {
    std::mt19937 rng(91);
    for (int n : {1, 3, 5}) {
        for (int trial = 0; trial < (n == 5 ? 12 : 25); ++trial) {
            auto a = random_assignment(n, RingKind::M2Z4, rng, trial % 3 == 0);
            auto c = build_code(a);
            CHECK(c.k_log2() == 2 * alpha_log4(a));
            CHECK(is_cyclic(c));
            CHECK(closed_under_right_mult(c));
            auto d = dual_code(c);
            CHECK(c.k_log2() + d.k_log2() == 8 * n);  // |C| |Cperp| = 4^(4n)
            auto da = dual_assignment(a, DualKind::Euclidean);
            CHECK(span_equal(build_code(da).basis, d.basis));
            // involution up to m recovery
            auto dd = dual_assignment(da, DualKind::Euclidean);
            for (size_t i = 0; i < a.types.size(); ++i) CHECK(dd.types[i].type == a.types[i].type);
        }
    }
}

TEST_CASE("hermitian duals on a small panel") {
    std::mt19937 rng(17);
    for (int n : {3, 5}) {
        for (int trial = 0; trial < 10; ++trial) {
            auto a = random_assignment(n, RingKind::M2Z4, rng);
            auto c = build_code(a);
            auto d = hermitian_dual_code(c);
            CHECK(c.k_log2() + d.k_log2() == 8 * n);
            CHECK(span_equal(build_code(dual_assignment(a, DualKind::Hermitian)).basis, d.basis));
        }
    }
}

TEST_CASE("dual_code extremes") {
    auto full = build_code(asg("n=3; f0:one; f1:one; f2:one"));
    CHECK(dual_code(full).k_log2() == 0);
    auto zero = build_code(asg("n=3"));
    CHECK(dual_code(zero).k_log2() == 24);
    auto c = build_code(asg("n=3; f0:one"));
    CHECK(c.k_log2() + dual_code(c).k_log2() == 24);
}

TEST_CASE("single generator set") {
    CHECK(single_generator_set(asg("n=3; f0:one; f1:one; f2:one")) ==
          std::vector<PolyR>{PolyR::one()});

    std::mt19937 rng(5);
    for (int n : {1, 3, 5}) {
        for (int trial = 0; trial < 10; ++trial) {
            auto a = random_assignment(n, RingKind::M2Z4, rng, true);
            auto gens = single_generator_set(a);
            bool has_two_and_u = false;
            for (const auto& t : a.types) has_two_and_u |= (t.type == SubType::TwoAndU);
            bool all_zero = true;
            for (const auto& t : a.types) all_zero &= (t.type == SubType::Zero);
            if (!has_two_and_u) CHECK(gens.size() == (all_zero ? 0 : 1));
            CHECK(span_equal(code_from_generators(n, gens).basis, build_code(a).basis));
        }
    }

    // a TwoAndU component needs both its generators: (2+U) F_hat spans less
    auto a = asg("n=3; f0:2&u");
    const auto& ft = FactorTable::get(3);
    PolyGR hat = ft.lifts[1] * ft.lifts[2];
    PolyR folded = scale_left(M2Z4::scalar(2) + M2Z4::u(), embed_r(hat));
    auto small = code_from_generators(3, std::vector<PolyR>{folded});
    auto correct = build_code(a);
    CHECK(small.k_log2() < correct.k_log2());
}

TEST_CASE("compose_c1_c2 cyclicity") {
    const auto& ft = FactorTable::get(3);
    GrCode cyc1 = gr_code_from_generators(3, {ft.lifts[0] * ft.lifts[1]});
    GrCode cyc2 = gr_code_from_generators(3, {ft.lifts[2]});
    CHECK(is_cyclic(cyc1));
    CHECK(is_cyclic(cyc2));

    // a GR-scalar-closed but not shift-closed submodule
    auto non_cyclic_gr = [&](GR42 v) {
        std::vector<std::vector<uint8_t>> rows;
        for (GR42 s : {GR42(1, 0), GR42(0, 1)}) {
            GR42 e = v * s;
            rows.push_back({e.c0, e.c1, 0, 0, 0, 0});
        }
        return GrCode{3, howell_form(std::move(rows), 6, 4)};
    };
    GrCode bad = non_cyclic_gr(GR42(1, 0));
    CHECK_FALSE(is_cyclic(bad));

    CHECK(is_cyclic(compose_c1_c2(cyc1, cyc2)));
    CHECK_FALSE(is_cyclic(compose_c1_c2(cyc1, bad)));
    CHECK_FALSE(is_cyclic(compose_c1_c2(bad, cyc2)));
    CHECK_FALSE(is_cyclic(compose_c1_c2(bad, bad)));

    auto full = compose_c1_c2(gr_code_from_generators(3, {PolyGR::one()}),
                              gr_code_from_generators(3, {PolyGR::one()}));
    CHECK(full.k_log2() == 24);
    auto zero = compose_c1_c2(GrCode{3, howell_form({}, 6, 4)}, GrCode{3, howell_form({}, 6, 4)});
    CHECK(zero.k_log2() == 0);

    // the W part and the U W part stay complementary under composition
    auto c = compose_c1_c2(cyc1, cyc2);
    CHECK(c.k_log2() == span_log2(cyc1.basis) + span_log2(cyc2.basis));
}

TEST_CASE("self-dual predicates reproduce the published example codes") {
    // n=7, Euclidean: <f1 f2, r f2 f3> for r in {U, 2, 2+U}
    CHECK(is_self_dual(asg("n=7; f0:u; f1:zero; f2:one"), DualKind::Euclidean));
    CHECK(is_self_dual(asg("n=7; f0:2; f1:zero; f2:one"), DualKind::Euclidean));
    CHECK(is_self_dual(asg("n=7; f0:2+um(m=1); f1:zero; f2:one"), DualKind::Euclidean));
    // second family <f1 f3, r f2 f3>
    CHECK(is_self_dual(asg("n=7; f0:u; f1:one; f2:zero"), DualKind::Euclidean));
    CHECK_FALSE(is_self_dual(asg("n=7; f0:one; f1:one; f2:one"), DualKind::Euclidean));

    // n=5, Hermitian: the same shapes pair f1 with f2 through conj-reciprocal
    CHECK(is_self_dual(asg("n=5; f0:u; f1:zero; f2:one"), DualKind::Hermitian));
    CHECK(is_self_dual(asg("n=5; f0:2; f1:zero; f2:one"), DualKind::Hermitian));
    CHECK(is_self_dual(asg("n=5; f0:2+um(m=1); f1:zero; f2:one"), DualKind::Hermitian));
    // but not Euclidean: x^2+wx+1 is its own reciprocal
    CHECK_FALSE(is_self_dual(asg("n=5; f0:u; f1:zero; f2:one"), DualKind::Euclidean));

    // predicate always agrees with the span oracle
    std::mt19937 rng(3);
    for (int trial = 0; trial < 15; ++trial) {
        auto a = random_assignment(trial % 2 ? 3 : 5, RingKind::M2Z4, rng);
        auto c = build_code(a);
        CHECK(is_self_dual(a, DualKind::Euclidean) == span_equal(c.basis, dual_code(c).basis));
        CHECK(is_self_dual(a, DualKind::Hermitian) ==
              span_equal(c.basis, hermitian_dual_code(c).basis));
    }
}

TEST_CASE("M2(Z2) codes") {
    // both length-5 codes: <f1 f2, u f2 f3> and <f1 f3, u f2 f3>
    auto a1 = asg("n=5; f0:u; f1:zero; f2:one", RingKind::M2Z2);
    auto a2 = asg("n=5; f0:u; f1:one; f2:zero", RingKind::M2Z2);
    for (const auto& a : {a1, a2}) {
        auto c = build_code(a);
        CHECK(c.k_log2() == 10);  // 4^5
        CHECK(is_cyclic(c));
        CHECK(closed_under_right_mult(c));
        CHECK(is_self_dual(a, DualKind::Hermitian));
        CHECK(span_equal(c.basis, hermitian_dual_code(c).basis));
    }
    auto full = build_code(asg("n=5; f0:one; f1:one; f2:one", RingKind::M2Z2));
    CHECK(full.k_log2() == 20);
    CHECK_FALSE(is_self_dual(*full.assignment, DualKind::Hermitian));
    CHECK_THROWS_AS(asg("n=5; f0:2", RingKind::M2Z2), std::invalid_argument);

    std::mt19937 rng(8);
    for (int trial = 0; trial < 15; ++trial) {
        auto a = random_assignment(5, RingKind::M2Z2, rng);
        auto c = build_code(a);
        CHECK(c.k_log2() == 2 * alpha_log4(a));
        auto d = dual_code(c);
        CHECK(c.k_log2() + d.k_log2() == 4 * 5);  // ambient 2^(4n)
        CHECK(span_equal(build_code(dual_assignment(a, DualKind::Euclidean)).basis, d.basis));
        CHECK(span_equal(build_code(dual_assignment(a, DualKind::Hermitian)).basis,
                         hermitian_dual_code(c).basis));
    }
}

TEST_CASE("submodules of R match the seven forms") {
    auto all = enumerate_submodules_of_r();
    CHECK(span_size(submodule_form(SubType::Zero, F4(1))) == 1);
    CHECK(span_size(submodule_form(SubType::One, F4(1))) == 256);
    CHECK(span_size(submodule_form(SubType::Uu, F4(1))) == 16);
    CHECK(span_size(submodule_form(SubType::Two, F4(1))) == 16);
    CHECK(span_size(submodule_form(SubType::TwoU, F4(1))) == 4);
    CHECK(span_size(submodule_form(SubType::TwoPlusUm, F4(1))) == 16);
    CHECK(span_size(submodule_form(SubType::TwoAndU, F4(1))) == 64);

    std::vector<HowellBasis> forms;
    for (SubType t : {SubType::Zero, SubType::One, SubType::Uu, SubType::Two, SubType::TwoU,
                      SubType::TwoAndU})
        forms.push_back(submodule_form(t, F4(1)));
    for (int v = 1; v < 4; ++v) forms.push_back(submodule_form(SubType::TwoPlusUm, F4(v)));
    for (size_t i = 0; i < forms.size(); ++i)
        for (size_t j = i + 1; j < forms.size(); ++j) CHECK_FALSE(span_equal(forms[i], forms[j]));

    for (const auto& module : all) {
        bool matched = false;
        for (const auto& f : forms) matched |= span_equal(module, f);
        CHECK(matched);
    }
    CHECK(all.size() == forms.size());  // every form occurs, nothing else does
}

TEST_CASE("search finds the published codes and stays deterministic") {
    auto r5 = search_self_dual(5, DualKind::Hermitian, RingKind::M2Z4);
    auto contains = [&](const char* text) {
        auto key = to_string(asg(text));
        for (const auto& r : r5)
            if (to_string(r.assignment) == key) return true;
        return false;
    };
    CHECK(contains("n=5; f0:u; f1:zero; f2:one"));
    CHECK(contains("n=5; f0:2; f1:zero; f2:one"));
    CHECK(contains("n=5; f0:2+um(m=1); f1:zero; f2:one"));
    CHECK(contains("n=5; f0:u; f1:one; f2:zero"));

    for (const auto& r : r5) {
        auto d = hermitian_dual_code(r.code);
        CHECK(span_equal(r.code.basis, d.basis));
    }

    auto again = search_self_dual(5, DualKind::Hermitian, RingKind::M2Z4);
    REQUIRE(again.size() == r5.size());
    for (size_t i = 0; i < r5.size(); ++i)
        CHECK(to_string(again[i].assignment) == to_string(r5[i].assignment));
    for (int workers : {2, 3, 5}) {
        auto par = search_self_dual(5, DualKind::Hermitian, RingKind::M2Z4, MPolicy::One, workers);
        REQUIRE(par.size() == r5.size());
        for (size_t i = 0; i < r5.size(); ++i) {
            CHECK(to_string(par[i].assignment) == to_string(r5[i].assignment));
            CHECK(span_equal(par[i].code.basis, r5[i].code.basis));
        }
    }

    auto m2 = search_self_dual(5, DualKind::Hermitian, RingKind::M2Z2);
    auto m2_contains = [&](const char* text) {
        auto key = to_string(asg(text, RingKind::M2Z2));
        for (const auto& r : m2)
            if (to_string(r.assignment) == key) return true;
        return false;
    };
    CHECK(m2_contains("n=5; f0:u; f1:zero; f2:one"));
    CHECK(m2_contains("n=5; f0:u; f1:one; f2:zero"));
}

TEST_CASE("assignment text round trips") {
    for (const char* text :
         {"n=7; f0:u; f1:zero; f2:one", "n=3; f0:2&u; f1:2u; f2:2",
          "n=5; f0:2+um(m=1); f1:2+um(m=w*x+1); f2:one"}) {
        auto a = asg(text);
        CHECK(to_string(a) == text);
        CHECK(parse_assignment(to_string(a), a.ring) == a);
    }
    // comma separators and a separate n hint are accepted
    auto a = parse_assignment("f2:one,f0:u,f1:zero", RingKind::M2Z4, 7);
    CHECK(to_string(a) == "n=7; f0:u; f1:zero; f2:one");
    CHECK_THROWS_AS(parse_assignment("f0:one", RingKind::M2Z4), std::invalid_argument);
    CHECK_THROWS_AS(parse_assignment("n=7; f0:bogus", RingKind::M2Z4), std::invalid_argument);
    CHECK_THROWS_AS(parse_assignment("n=7; f9:one", RingKind::M2Z4), std::invalid_argument);
    CHECK_THROWS_AS(parse_assignment("n=7; f0:2+um(m=x+1); f2:one", RingKind::M2Z4),
                    std::invalid_argument);  // m = x+1 = 0 mod f0
}
