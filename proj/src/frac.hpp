#ifndef QCH_SRC_FRAC_HPP
#define QCH_SRC_FRAC_HPP

// Internal: exact rational arithmetic and dense Gaussian elimination for the
// small integer linear systems of the library (root coordinates, A-lattice
// factorization). Numerators stay tiny; overflow is still checked.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qch::detail {

inline long long checked_ll(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
    return static_cast<long long>(v);
}

struct Frac {
    long long num = 0;
    long long den = 1;  // always > 0

    Frac() = default;
    Frac(long long n) : num(n) {}
    Frac(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("zero denominator");
        if (den < 0) { num = -num; den = -den; }
        if (num == 0) { den = 1; return; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        num /= g;
        den /= g;
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    friend Frac operator+(const Frac& a, const Frac& b) {
        __int128 n = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
        __int128 d = static_cast<__int128>(a.den) * b.den;
        return reduced(n, d);
    }
    friend Frac operator-(const Frac& a, const Frac& b) { return a + Frac(-b.num, b.den); }
    friend Frac operator*(const Frac& a, const Frac& b) {
        __int128 n = static_cast<__int128>(a.num) * b.num;
        __int128 d = static_cast<__int128>(a.den) * b.den;
        return reduced(n, d);
    }
    friend Frac operator/(const Frac& a, const Frac& b) {
        if (b.num == 0) throw std::domain_error("division by zero");
        __int128 n = static_cast<__int128>(a.num) * b.den;
        __int128 d = static_cast<__int128>(a.den) * b.num;
        return reduced(n, d);
    }
    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num == b.num && a.den == b.den;
    }

  private:
    static Frac reduced(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 an = n < 0 ? -n : n;
        __int128 g = gcd128(an, d);
        if (g > 1) { n /= g; d /= g; }
        Frac f;
        f.num = checked_ll(n);
        f.den = checked_ll(d);
        return f;
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }
};

/// Sparse linear system for the factorization solver, rows keyed by column
/// index. Kept exact; the systems here are banded, so Gauss-Jordan with a
/// column-to-rows index stays near-linear.
struct SparseSystem {
    std::size_t cols = 0;
    std::vector<std::map<std::size_t, Frac>> rows;
    std::vector<Frac> rhs;

    void add(std::size_t row, std::size_t col, const Frac& v) {
        Frac& slot = rows[row][col];
        slot = slot + v;
        if (slot.is_zero()) rows[row].erase(col);
    }
};

/// Solves the (possibly overdetermined) sparse system exactly. Returns
/// nullopt if inconsistent; free columns are pinned to zero, so uniqueness
/// needs full column rank on the caller's side.
inline std::optional<std::vector<Frac>> solve_sparse(SparseSystem sys) {
    const std::size_t rows = sys.rows.size();
    std::vector<std::vector<std::size_t>> with_col(sys.cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (const auto& [c, v] : sys.rows[r]) with_col[c].push_back(r);
    auto occupied = [&](std::size_t c) {
        // Compact the lazily-maintained index before use.
        auto& lst = with_col[c];
        std::vector<std::size_t> live;
        for (std::size_t r : lst)
            if (sys.rows[r].count(c)) live.push_back(r);
        std::sort(live.begin(), live.end());
        live.erase(std::unique(live.begin(), live.end()), live.end());
        lst = live;
        return lst;
    };

    std::vector<bool> is_pivot_row(rows, false);
    std::vector<std::optional<std::size_t>> pivot_row_of_col(sys.cols);
    for (std::size_t c = 0; c < sys.cols; ++c) {
        std::optional<std::size_t> pick;
        for (std::size_t r : occupied(c)) {
            if (is_pivot_row[r]) continue;
            if (!pick || sys.rows[r].size() < sys.rows[*pick].size()) pick = r;
        }
        if (!pick) continue;
        const std::size_t p = *pick;
        is_pivot_row[p] = true;
        pivot_row_of_col[c] = p;
        Frac inv = Frac(1) / sys.rows[p].at(c);
        for (auto& [cc, v] : sys.rows[p]) v = v * inv;
        sys.rhs[p] = sys.rhs[p] * inv;
        for (std::size_t r : occupied(c)) {
            if (r == p) continue;
            auto it = sys.rows[r].find(c);
            if (it == sys.rows[r].end()) continue;
            Frac f = it->second;
            for (const auto& [cc, v] : sys.rows[p]) {
                Frac& slot = sys.rows[r][cc];
                slot = slot - f * v;
                if (slot.is_zero())
                    sys.rows[r].erase(cc);
                else if (cc != c)
                    with_col[cc].push_back(r);
            }
            sys.rhs[r] = sys.rhs[r] - f * sys.rhs[p];
        }
    }
    for (std::size_t r = 0; r < rows; ++r)
        if (!is_pivot_row[r] && !sys.rhs[r].is_zero()) return std::nullopt;
    std::vector<Frac> x(sys.cols, Frac(0));
    for (std::size_t c = 0; c < sys.cols; ++c)
        if (pivot_row_of_col[c]) x[c] = sys.rhs[*pivot_row_of_col[c]];
    return x;
}

/// Dense exact solve for tiny systems (root coordinates). Same conventions:
/// overdetermined allowed, nullopt if inconsistent, free columns pinned to
/// zero.
inline std::optional<std::vector<Frac>> solve_exact(std::vector<std::vector<Frac>> a,
                                                    std::vector<Frac> rhs) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(rhs[p], rhs[r]);
        Frac inv = Frac(1) / a[r][c];
        for (std::size_t cc = c; cc < cols; ++cc) a[r][cc] = a[r][cc] * inv;
        rhs[r] = rhs[r] * inv;
        for (std::size_t rr = 0; rr < rows; ++rr) {
            if (rr == r || a[rr][c].is_zero()) continue;
            Frac f = a[rr][c];
            for (std::size_t cc = c; cc < cols; ++cc) a[rr][cc] = a[rr][cc] - f * a[r][cc];
            rhs[rr] = rhs[rr] - f * rhs[r];
        }
        pivot_col_of_row.push_back(c);
        ++r;
    }
    for (std::size_t rr = r; rr < rows; ++rr)
        if (!rhs[rr].is_zero()) return std::nullopt;
    std::vector<Frac> x(cols, Frac(0));
    for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i) x[pivot_col_of_row[i]] = rhs[i];
    return x;
}

}  // namespace qch::detail

#endif
