#include "m2cyclic/howell.hpp"

#include <algorithm>
#include <stdexcept>

namespace m2c {

namespace {

void check_mod(int mod) {
    if (mod != 2 && mod != 4) throw std::invalid_argument("modulus must be 2 or 4");
}

bool is_zero_row(const std::vector<uint8_t>& r) {
    return std::all_of(r.begin(), r.end(), [](uint8_t x) { return x == 0; });
}

// r -= q * p  (mod m)
void submul(std::vector<uint8_t>& r, const std::vector<uint8_t>& p, uint8_t q, int mod) {
    if (q == 0) return;
    const uint8_t nq = uint8_t(mod - q);
    for (size_t k = 0; k < r.size(); ++k) r[k] = uint8_t((r[k] + nq * p[k]) % mod);
}

void scale(std::vector<uint8_t>& r, uint8_t s, int mod) {
    for (auto& x : r) x = uint8_t((x * s) % mod);
}

}  // namespace

ModMatrix ModMatrix::identity(int n, int m) {
    ModMatrix id(n, n, m);
    for (int i = 0; i < n; ++i) id.at(i, i) = 1;
    return id;
}

ModMatrix ModMatrix::from_rows(const std::vector<std::vector<int>>& rows, int cols, int m) {
    check_mod(m);
    ModMatrix r(int(rows.size()), cols, m);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (int(rows[i].size()) != cols) throw std::invalid_argument("row length mismatch");
        for (int j = 0; j < cols; ++j) r.at(int(i), j) = uint8_t(((rows[i][j] % m) + m) % m);
    }
    return r;
}

ModMatrix ModMatrix::transpose() const {
    ModMatrix t(cols, rows, mod);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

HowellBasis howell_form(std::vector<std::vector<uint8_t>> pool, int cols, int mod) {
    check_mod(mod);
    struct OutRow {
        int col;
        std::vector<uint8_t> r;
    };
    std::vector<OutRow> out;

    pool.erase(std::remove_if(pool.begin(), pool.end(), is_zero_row), pool.end());

    for (int col = 0; col < cols && !pool.empty(); ++col) {
        // pick the entry generating the largest ideal: a unit beats 2
        int best = -1;
        int best_val = 99;
        for (size_t i = 0; i < pool.size(); ++i) {
            uint8_t e = pool[i][col];
            if (e == 0) continue;
            int val = (e & 1) ? 0 : 1;
            if (val < best_val) {
                best_val = val;
                best = int(i);
                if (val == 0) break;
            }
        }
        if (best < 0) continue;

        std::vector<uint8_t> piv = std::move(pool[best]);
        pool.erase(pool.begin() + best);
        uint8_t e = piv[col];
        if (e & 1) {
            if (e == 3) scale(piv, 3, mod);  // 3 is its own inverse mod 4
        }
        const uint8_t pval = piv[col];

        for (auto& r : pool) {
            uint8_t v = r[col];
            if (v == 0) continue;
            uint8_t q = (pval == 1) ? v : uint8_t(v >> 1);
            submul(r, piv, q, mod);
        }
        pool.erase(std::remove_if(pool.begin(), pool.end(), is_zero_row), pool.end());

        if (pval == 2) {
            // 2*piv is in the span and starts strictly to the right of col;
            // feeding it back is what upgrades echelon form to Howell form
            std::vector<uint8_t> t = piv;
            scale(t, 2, mod);
            if (!is_zero_row(t)) pool.push_back(std::move(t));
        }
        out.push_back({col, std::move(piv)});
    }

    // reduce entries above every pivot
    for (size_t i = 0; i < out.size(); ++i) {
        const uint8_t p = out[i].r[out[i].col];
        for (size_t j = 0; j < i; ++j) {
            uint8_t v = out[j].r[out[i].col];
            uint8_t q = (p == 1) ? v : uint8_t(v >> 1);
            if (q) submul(out[j].r, out[i].r, q, mod);
        }
    }

    HowellBasis b;
    b.mat = ModMatrix(int(out.size()), cols, mod);
    for (size_t i = 0; i < out.size(); ++i) {
        b.pivots.push_back({out[i].col, out[i].r[out[i].col]});
        std::copy(out[i].r.begin(), out[i].r.end(), b.mat.a.begin() + long(i) * cols);
    }
    return b;
}

HowellBasis howell_form(const ModMatrix& m) {
    std::vector<std::vector<uint8_t>> rows(m.rows);
    for (int i = 0; i < m.rows; ++i) rows[i].assign(m.row(i).begin(), m.row(i).end());
    return howell_form(std::move(rows), m.cols, m.mod);
}

uint64_t span_size(const HowellBasis& b) {
    unsigned __int128 s = 1;
    for (const auto& p : b.pivots) {
        s *= uint64_t(b.mod() / p.value);
        if (s > (unsigned __int128)UINT64_MAX) throw std::overflow_error("span size exceeds 64 bits");
    }
    return uint64_t(s);
}

int span_log2(const HowellBasis& b) {
    int l = 0;
    for (const auto& p : b.pivots) l += (b.mod() / p.value == 4) ? 2 : 1;
    return l;
}

HowellBasis kernel(const ModMatrix& a) {
    const int r = a.rows, c = a.cols;
    ModMatrix b(c, r + c, a.mod);
    for (int i = 0; i < c; ++i) {
        for (int j = 0; j < r; ++j) b.at(i, j) = a.at(j, i);
        b.at(i, r + i) = 1;
    }
    HowellBasis h = howell_form(b);
    std::vector<std::vector<uint8_t>> tails;
    for (int i = 0; i < h.row_count(); ++i) {
        if (h.pivots[i].col < r) continue;  // head not annihilated
        tails.emplace_back(h.mat.row(i).begin() + r, h.mat.row(i).end());
    }
    return howell_form(std::move(tails), c, a.mod);
}

bool span_equal(const HowellBasis& x, const HowellBasis& y) {
    if (x.cols() != y.cols() || x.mod() != y.mod())
        throw std::invalid_argument("span_equal: dimension mismatch");
    return x.mat == y.mat;
}

bool span_contains(const HowellBasis& b, std::span<const uint8_t> v) {
    if (int(v.size()) != b.cols()) throw std::invalid_argument("span_contains: length mismatch");
    std::vector<uint8_t> w(v.begin(), v.end());
    const int mod = b.mod();
    for (int i = 0; i < b.row_count(); ++i) {
        const auto [col, p] = b.pivots[i];
        uint8_t e = w[col];
        if (e == 0) continue;
        if (p == 2 && (e & 1)) return false;
        uint8_t q = (p == 1) ? e : uint8_t(e >> 1);
        std::vector<uint8_t> row(b.mat.row(i).begin(), b.mat.row(i).end());
        submul(w, row, q, mod);
    }
    return is_zero_row(w);
}

HowellBasis span_sum(const HowellBasis& x, const HowellBasis& y) {
    if (x.cols() != y.cols() || x.mod() != y.mod())
        throw std::invalid_argument("span_sum: dimension mismatch");
    std::vector<std::vector<uint8_t>> rows;
    for (int i = 0; i < x.row_count(); ++i) rows.emplace_back(x.mat.row(i).begin(), x.mat.row(i).end());
    for (int i = 0; i < y.row_count(); ++i) rows.emplace_back(y.mat.row(i).begin(), y.mat.row(i).end());
    return howell_form(std::move(rows), x.cols(), x.mod());
}

std::string basis_key(const HowellBasis& b) {
    std::string k;
    k.reserve(b.mat.a.size() + 8);
    k.push_back(char(b.mod()));
    k.push_back(char(b.cols() & 0xff));
    k.push_back(char(b.cols() >> 8));
    k.push_back(char(b.row_count() & 0xff));
    k.push_back(char(b.row_count() >> 8));
    for (uint8_t x : b.mat.a) k.push_back(char(x));
    return k;
}

}  // namespace m2c
