// Independent oracles used to derive expected values in tests. These go
// through routes separate from the library implementations they check.
#ifndef STRATA_TESTS_ORACLES_HPP
#define STRATA_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <vector>

namespace oracles {

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// f-vector of the standard n-simplex: C(n+1, k+1) nondegenerate k-simplices.
inline std::vector<int> simplex_f_vector(int n) {
    std::vector<int> f(n + 1);
    for (int k = 0; k <= n; ++k) f[k] = static_cast<int>(binomial(n + 1, k + 1));
    return f;
}

// Nondegenerate p-simplices of Delta^m x Delta^n counted by brute-force
// enumeration of strictly increasing chains in the grid poset [m] x [n].
// A p-simplex is a pair of weakly monotone vertex sequences with no
// simultaneous repeat, i.e. a strict chain of length p+1 in the product order.
inline long long grid_chain_count(int m, int n, int p) {
    std::vector<std::pair<int, int>> pts;
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j) pts.push_back({i, j});
    long long total = 0;
    std::function<void(size_t, int, int, int)> rec = [&](size_t start, int len, int ci, int cj) {
        if (len == p + 1) {
            ++total;
            return;
        }
        for (size_t k = start; k < pts.size(); ++k) {
            auto [i, j] = pts[k];
            if (len > 0) {
                if (i < ci || j < cj) continue;
                if (i == ci && j == cj) continue;
            }
            rec(k + 1, len + 1, i, j);
        }
    };
    rec(0, 0, -1, -1);
    return total;
}

// Reduced Euler characteristic from an f-vector.
inline long long reduced_euler(const std::vector<int>& f) {
    long long chi = -1;
    for (size_t n = 0; n < f.size(); ++n) chi += (n % 2 == 0 ? 1LL : -1LL) * f[n];
    return chi;
}

}  // namespace oracles

#endif
