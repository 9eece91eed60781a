#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace m2c {

/// Dense matrix over Z_m, m in {2, 4}. Entries are stored reduced mod m.
struct ModMatrix {
    int rows = 0;
    int cols = 0;
    int mod = 4;
    std::vector<uint8_t> a;

    ModMatrix() = default;
    ModMatrix(int r, int c, int m) : rows(r), cols(c), mod(m), a(size_t(r) * size_t(c), 0) {}

    uint8_t& at(int r, int c) { return a[size_t(r) * cols + c]; }
    uint8_t at(int r, int c) const { return a[size_t(r) * cols + c]; }
    std::span<const uint8_t> row(int r) const { return {a.data() + size_t(r) * cols, size_t(cols)}; }

    static ModMatrix identity(int n, int m);
    static ModMatrix from_rows(const std::vector<std::vector<int>>& rows, int cols, int m);
    ModMatrix transpose() const;

    bool operator==(const ModMatrix&) const = default;
};

struct Pivot {
    int col = 0;
    uint8_t value = 0;  // 1 or 2

    bool operator==(const Pivot&) const = default;
};

/// Canonical Howell-form basis of a row span. No zero rows; pivot columns
/// strictly increase; pivots are 1 or 2; entries above a pivot are reduced
/// below it. Two spans are equal iff their HowellBasis matrices are identical.
struct HowellBasis {
    ModMatrix mat;
    std::vector<Pivot> pivots;

    int cols() const { return mat.cols; }
    int mod() const { return mat.mod; }
    int row_count() const { return mat.rows; }

    bool operator==(const HowellBasis& o) const { return mat == o.mat; }
};

HowellBasis howell_form(const ModMatrix& m);
HowellBasis howell_form(std::vector<std::vector<uint8_t>> rows, int cols, int mod);

/// Number of distinct Z_m-combinations of the basis rows.
/// Throws std::overflow_error if it does not fit in 64 bits.
uint64_t span_size(const HowellBasis& b);
int span_log2(const HowellBasis& b);

/// Canonical basis of { x : a * x = 0 }, x a column vector of length a.cols.
HowellBasis kernel(const ModMatrix& a);

bool span_equal(const HowellBasis& x, const HowellBasis& y);
bool span_contains(const HowellBasis& b, std::span<const uint8_t> v);
HowellBasis span_sum(const HowellBasis& x, const HowellBasis& y);

/// Stable byte key for dedup maps.
std::string basis_key(const HowellBasis& b);

}  // namespace m2c
