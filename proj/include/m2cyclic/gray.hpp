#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "m2cyclic/cyclic.hpp"
#include "m2cyclic/ring.hpp"

namespace m2c {

/// a + 2b + Uc + 2Ud  ->  (d, c+d, b+d, a+b+c+d) with a,b,c,d in F4 read off
/// the Teichmuller pairs of the (z1, z2) decomposition. Bijection onto F4^4.
std::array<F4, 4> gray_map(const M2Z4& r);
/// a + uc -> (c, a+c). Bijection onto F4^2.
std::array<F4, 2> gray_map_m2z2(const M2Z2& s);

/// Hamming weight of the Gray image.
int lee_weight(const M2Z4& r);
int hamming_weight_m2z2(const M2Z2& s);

int lee_weight(const std::vector<M2Z4>& word);
int lee_distance(const std::vector<M2Z4>& x, const std::vector<M2Z4>& y);

std::string gray_word_string(const std::vector<M2Z4>& word);
std::string gray_word_string_m2z2(const std::vector<M2Z2>& word);

struct MinWeight {
    int weight = 0;
    bool exhaustive = true;
    uint64_t enumerated = 0;
    std::vector<uint8_t> witness;  // flattened word achieving the minimum
};

/// Minimum Gray weight over all nonzero codewords, by direct span enumeration
/// with pivot-structured mixed-radix counters. Exact when the code has at most
/// `budget` words; otherwise the minimum over the first `budget` words with
/// exhaustive = false. stop_at > 0 ends the scan once a word of weight <=
/// stop_at is seen (a witness search). Throws on the zero code.
MinWeight min_weight(const CyclicCode& c, uint64_t budget = uint64_t(1) << 24, int stop_at = 0);

struct GrayParams {
    int length = 0;
    int k_log2 = 0;  // cardinality = 2^k_log2 = 4^(k_log2/2)
    std::optional<int> d;
    bool exhaustive = true;
};

/// (4n over M2(Z4), 2n over M2(Z2)), log of the size, minimum Gray weight.
GrayParams gray_image_params(const CyclicCode& c, uint64_t budget = uint64_t(1) << 24);

}  // namespace m2c
