#include "m2cyclic/gray.hpp"

#include <stdexcept>

namespace m2c {

std::array<F4, 4> gray_map(const M2Z4& r) {
    auto [z1, z2] = decompose_wu(r);
    auto [a, b] = teich_decompose(z1);
    auto [c, d] = teich_decompose(z2);
    return {d, c + d, b + d, a + b + c + d};
}

std::array<F4, 2> gray_map_m2z2(const M2Z2& s) {
    auto [a, c] = decompose_m2z2(s);
    return {c, a + c};
}

namespace {

struct WeightTables {
    std::array<uint8_t, 256> lee;
    std::array<uint8_t, 16> ham2;

    WeightTables() {
        for (int p = 0; p < 256; ++p) {
            auto g = gray_map(M2Z4::unpack(uint8_t(p)));
            int w = 0;
            for (auto s : g) w += s.is_zero() ? 0 : 1;
            lee[size_t(p)] = uint8_t(w);
        }
        for (int p = 0; p < 16; ++p) {
            auto g = gray_map_m2z2(M2Z2::unpack(uint8_t(p)));
            int w = 0;
            for (auto s : g) w += s.is_zero() ? 0 : 1;
            ham2[size_t(p)] = uint8_t(w);
        }
    }
};

const WeightTables& wt() {
    static const WeightTables t;
    return t;
}

inline uint8_t pack4(const uint8_t* e) {
    return uint8_t(e[0] | (e[1] << 2) | (e[2] << 4) | (e[3] << 6));
}

inline uint8_t pack2(const uint8_t* e) {
    return uint8_t(e[0] | (e[1] << 1) | (e[2] << 2) | (e[3] << 3));
}

int flat_weight(const std::vector<uint8_t>& v, RingKind ring) {
    int w = 0;
    if (ring == RingKind::M2Z4)
        for (size_t i = 0; i < v.size(); i += 4) w += wt().lee[pack4(v.data() + i)];
    else
        for (size_t i = 0; i < v.size(); i += 4) w += wt().ham2[pack2(v.data() + i)];
    return w;
}

}  // namespace

int lee_weight(const M2Z4& r) { return wt().lee[r.pack()]; }
int hamming_weight_m2z2(const M2Z2& s) { return wt().ham2[s.pack()]; }

int lee_weight(const std::vector<M2Z4>& word) {
    int w = 0;
    for (const auto& r : word) w += lee_weight(r);
    return w;
}

int lee_distance(const std::vector<M2Z4>& x, const std::vector<M2Z4>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("lee_distance: length mismatch");
    int w = 0;
    for (size_t i = 0; i < x.size(); ++i) w += lee_weight(x[i] - y[i]);
    return w;
}

namespace {

char gray_symbol(F4 s) {
    switch (s.v) {
        case 0: return '0';
        case 1: return '1';
        case 2: return 'w';
        default: return 'W';
    }
}

}  // namespace

std::string gray_word_string(const std::vector<M2Z4>& word) {
    std::string s;
    s.reserve(word.size() * 4);
    for (const auto& r : word)
        for (auto g : gray_map(r)) s.push_back(gray_symbol(g));
    return s;
}

std::string gray_word_string_m2z2(const std::vector<M2Z2>& word) {
    std::string s;
    s.reserve(word.size() * 2);
    for (const auto& r : word)
        for (auto g : gray_map_m2z2(r)) s.push_back(gray_symbol(g));
    return s;
}

MinWeight min_weight(const CyclicCode& c, uint64_t budget, int stop_at) {
    const auto& b = c.basis;
    const int rows = b.row_count();
    if (rows == 0) throw std::domain_error("the zero code has no nonzero codeword");
    const int mod = b.mod();
    const size_t cols = size_t(b.cols());

    // mixed-radix counter: 4 per unit pivot (2 over Z2), 2 per pivot value 2
    auto radix = std::vector<int>(size_t(rows));
    unsigned __int128 total = 1;
    for (int i = 0; i < rows; ++i) {
        radix[size_t(i)] = mod / b.pivots[size_t(i)].value;
        total *= radix[size_t(i)];
    }
    bool exhaustive = total - 1 <= budget;
    uint64_t limit = exhaustive ? uint64_t(total - 1) : budget;

    std::vector<int> digit(size_t(rows), 0);
    std::vector<uint8_t> cur(cols, 0);
    MinWeight out;
    out.weight = int(cols) + 1;
    out.exhaustive = exhaustive;

    auto add_row = [&](int r, int times) {
        const uint8_t* row = b.mat.a.data() + size_t(r) * cols;
        for (size_t k = 0; k < cols; ++k) cur[k] = uint8_t((cur[k] + times * row[k]) % mod);
    };

    for (uint64_t step = 0; step < limit; ++step) {
        // odometer increment with incremental vector updates
        int r = 0;
        while (digit[size_t(r)] == radix[size_t(r)] - 1) {
            add_row(r, mod - (radix[size_t(r)] - 1));  // reset from max back to 0
            digit[size_t(r)] = 0;
            ++r;
        }
        ++digit[size_t(r)];
        add_row(r, 1);

        int w = flat_weight(cur, c.ring);
        if (w < out.weight) {
            out.weight = w;
            out.witness = cur;
            if (stop_at > 0 && w <= stop_at) {
                out.enumerated = step + 1;
                out.exhaustive = false;
                return out;
            }
        }
    }
    out.enumerated = limit;
    return out;
}

GrayParams gray_image_params(const CyclicCode& c, uint64_t budget) {
    GrayParams p;
    p.length = (c.ring == RingKind::M2Z4) ? 4 * c.n : 2 * c.n;
    p.k_log2 = c.k_log2();
    MinWeight mw = min_weight(c, budget);
    p.d = mw.weight;
    p.exhaustive = mw.exhaustive;
    return p;
}

}  // namespace m2c
