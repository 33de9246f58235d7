#pragma once

// Test-only reference computations. Nothing here calls into the library's
// determinant or eigensolver paths.

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <numeric>
#include <vector>

namespace graphzeta::oracle {

/// Leibniz expansion over all permutations. Practical up to about 9x9.
inline std::complex<double> leibniz_determinant(const Eigen::MatrixXcd& m) {
    const int n = static_cast<int>(m.rows());
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::complex<double> total{0.0, 0.0};
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
        std::complex<double> term = (inversions % 2) ? -1.0 : 1.0;
        for (int i = 0; i < n; ++i) term *= m(i, perm[static_cast<std::size_t>(i)]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Sum of a truncated power series for -log det(I - uT) = sum_r tr(T^r) u^r / r.
inline std::complex<double> log_series(const std::vector<long long>& traces, std::complex<double> u) {
    std::complex<double> sum{0.0, 0.0};
    std::complex<double> power{1.0, 0.0};
    for (std::size_t r = 1; r <= traces.size(); ++r) {
        power *= u;
        sum += static_cast<double>(traces[r - 1]) * power / static_cast<double>(r);
    }
    return sum;
}

}  // namespace graphzeta::oracle
