#include "integrabilis/linalg.hpp"

#include <algorithm>

namespace integrabilis {

IntMatrix clear_denominators(const RatMatrix& m) {
    IntMatrix out;
    out.reserve(m.size());
    for (const auto& row : m) {
        Int lcm = 1;
        for (const auto& e : row) {
            Int den = e.get_den();
            Int g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
        std::vector<Int> r;
        r.reserve(row.size());
        for (const auto& e : row)
            r.push_back(Int(e.get_num()) * (lcm / Int(e.get_den())));
        out.push_back(std::move(r));
    }
    return out;
}

namespace {

// Bareiss elimination to echelon form. Returns pivot (row, col) pairs.
std::vector<std::pair<int, int>> bareiss_echelon(IntMatrix& m) {
    std::vector<std::pair<int, int>> pivots;
    if (m.empty()) return pivots;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivots.emplace_back(r, c);
        ++r;
    }
    return pivots;
}

} // namespace

int bareiss_rank(IntMatrix m, std::vector<int>* pivot_cols) {
    auto pivots = bareiss_echelon(m);
    if (pivot_cols) {
        pivot_cols->clear();
        for (auto& [pr, pc] : pivots) pivot_cols->push_back(pc);
    }
    return static_cast<int>(pivots.size());
}

std::vector<std::vector<Int>> integer_nullspace(const IntMatrix& m, int ncols) {
    IntMatrix e = m;
    auto pivots = bareiss_echelon(e);

    std::vector<bool> is_pivot(ncols, false);
    for (auto& [pr, pc] : pivots) is_pivot[pc] = true;

    std::vector<std::vector<Int>> basis;
    for (int free_c = 0; free_c < ncols; ++free_c) {
        if (is_pivot[free_c]) continue;
        // Back-substitute over Q, then scale to a primitive integer vector.
        std::vector<Rat> v(ncols, Rat(0));
        v[free_c] = 1;
        for (int i = static_cast<int>(pivots.size()) - 1; i >= 0; --i) {
            auto [pr, pc] = pivots[i];
            if (pc > free_c) continue;
            Rat s(0);
            for (int j = pc + 1; j < ncols; ++j)
                if (e[pr][j] != 0 && v[j] != 0) s += Rat(e[pr][j]) * v[j];
            v[pc] = -s / Rat(e[pr][pc]);
        }
        Int lcm = 1;
        for (auto& x : v) {
            Int den = x.get_den(), g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
        std::vector<Int> iv(ncols);
        Int content = 0;
        for (int j = 0; j < ncols; ++j) {
            iv[j] = Int(v[j].get_num()) * (lcm / Int(v[j].get_den()));
            Int g;
            mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), iv[j].get_mpz_t());
            content = g;
        }
        if (content > 1)
            for (auto& x : iv) x /= content;
        for (auto& x : iv) {
            if (x == 0) continue;
            if (x < 0)
                for (auto& y : iv) y = -y;
            break;
        }
        basis.push_back(std::move(iv));
    }
    return basis;
}

} // namespace integrabilis
