#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "m2cyclic/howell.hpp"
#include "m2cyclic/poly.hpp"
#include "m2cyclic/ring.hpp"

namespace m2c {

enum class RingKind { M2Z4, M2Z2 };
enum class DualKind { Euclidean, Hermitian };
enum class MPolicy { One, AllUnits };

std::string to_string(RingKind r);
std::string to_string(DualKind k);
RingKind parse_ring(std::string_view s);
DualKind parse_kind(std::string_view s);

/// The seven submodule types a factor of x^n - 1 can carry. "m" is the unit
/// attached to TwoPlusUm generators, reduced modulo the factor it belongs to.
enum class SubType { Zero, One, Uu, Two, TwoU, TwoPlusUm, TwoAndU };

struct TypedFactor {
    SubType type = SubType::Zero;
    PolyF4 m;  // only meaningful for TwoPlusUm

    bool operator==(const TypedFactor&) const = default;
};

/// A code's genome: one submodule type per canonical factor of x^n - 1.
struct FactorAssignment {
    int n = 1;
    RingKind ring = RingKind::M2Z4;
    std::vector<TypedFactor> types;

    bool operator==(const FactorAssignment&) const = default;
};

/// Canonical factor data for one length: factors of x^n - 1 over F4 in
/// canonical order, their Hensel lifts, and the reciprocal /
/// conjugate-reciprocal pairings as index permutations.
struct FactorTable {
    int n = 0;
    std::vector<PolyF4> factors;
    std::vector<PolyGR> lifts;
    std::vector<int> recip_partner;
    std::vector<int> conj_recip_partner;

    static const FactorTable& get(int n);  // cached, thread-safe
};

struct CyclicCode {
    int n = 1;
    RingKind ring = RingKind::M2Z4;
    HowellBasis basis;  // 4n columns over Z4 (or Z2)
    std::optional<FactorAssignment> assignment;

    int k_log2() const { return span_log2(basis); }
};

/// A Z4[w]-submodule of GR(4,2)^n, the building block of the C1 + U C2 view.
struct GrCode {
    int n = 1;
    HowellBasis basis;  // 2n columns over Z4
};

// words and the cyclic shift
std::vector<M2Z4> shift(std::vector<M2Z4> word);
std::vector<M2Z2> shift(std::vector<M2Z2> word);
std::vector<uint8_t> flatten(const std::vector<M2Z4>& word);
std::vector<uint8_t> flatten(const std::vector<M2Z2>& word);
std::vector<M2Z4> unflatten_r(std::span<const uint8_t> v);
std::vector<M2Z2> unflatten_m2(std::span<const uint8_t> v);

/// Smallest submodule of R[x]/(x^n - 1) containing the generators, closed
/// under multiplication by x and right multiplication by R.
CyclicCode code_from_generators(int n, const std::vector<PolyR>& gens);
CyclicCode code_from_generators(int n, const std::vector<PolyM2>& gens);

int alpha_log4(const FactorAssignment& a);
void validate(const FactorAssignment& a);

/// Assignment-built code: one generator scaffold per occupied type group.
CyclicCode build_code(const FactorAssignment& a);

/// Theorem-style single generator (two generators when a TwoAndU factor is
/// present; that type needs both its 2- and U-part).
std::vector<PolyR> single_generator_set(const FactorAssignment& a);

GrCode gr_code_from_generators(int n, const std::vector<PolyGR>& gens);
bool is_cyclic(const GrCode& c);
/// Z4-span of C1 embedded in W plus U times C2.
CyclicCode compose_c1_c2(const GrCode& c1, const GrCode& c2);

bool is_cyclic(const CyclicCode& c);
bool closed_under_right_mult(const CyclicCode& c);

/// Kernel-built annihilator under sum_i x_i y_i (entries of the matrix sum
/// all zero). This is the definition; assignment-level duals are theorems
/// checked against it.
CyclicCode dual_code(const CyclicCode& c);
/// Annihilator under sum_i x_i conj(y_i).
CyclicCode hermitian_dual_code(const CyclicCode& c);

/// Factor-permutation dual: g of type t contributes g* (or conj-reciprocal
/// g for the Hermitian kind) of type sigma(t), sigma swapping Zero/One and
/// TwoU/TwoAndU. Units m of TwoPlusUm components are recovered by oracle
/// against the kernel-built dual.
FactorAssignment dual_assignment(const FactorAssignment& a, DualKind kind = DualKind::Euclidean);

bool is_self_dual(const FactorAssignment& a, DualKind kind);

/// All right R-submodules of R itself, by closing the cyclic modules r*R
/// under pairwise sums. Deterministic order.
std::vector<HowellBasis> enumerate_submodules_of_r();
/// Canonical module of one submodule type with the given constant unit m
/// (used for matching enumerated submodules against the seven forms).
HowellBasis submodule_form(SubType t, F4 m_unit);

struct SearchResult {
    FactorAssignment assignment;
    CyclicCode code;
};

/// All self-dual assignment-built codes of length n, verified against the
/// kernel-built dual. Deterministic and duplicate-free for any worker count.
std::vector<SearchResult> search_self_dual(int n, DualKind kind, RingKind ring,
                                           MPolicy m_policy = MPolicy::One, int workers = 1);

std::string to_string(const FactorAssignment& a);
FactorAssignment parse_assignment(std::string_view text, RingKind ring,
                                  std::optional<int> n_hint = std::nullopt);

}  // namespace m2c
