#include "divgraph/snf.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace divgraph {

namespace {

Integer abs_int(const Integer& x) {
    return x < 0 ? Integer(-x) : x;
}

void check_rectangular(const IntMatrix& m) {
    for (const auto& row : m) {
        if (row.size() != m.front().size()) {
            throw std::invalid_argument("matrix rows must have equal length");
        }
    }
}

// In-place reduction to Smith diagonal form by unimodular row and column
// operations.  Row operations are mirrored onto *rhs when given, so integer
// solvability of (m | rhs) is preserved; column operations only rename the
// unknowns.  Returns the nonnegative diagonal, divisibility-chained.
std::vector<Integer> smith_diagonal(IntMatrix& m, std::vector<Integer>* rhs) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    const int steps = std::min(rows, cols);
    std::vector<Integer> diag;
    diag.reserve(steps);

    auto swap_rows = [&](int a, int b) {
        if (a == b) return;
        std::swap(m[a], m[b]);
        if (rhs) std::swap((*rhs)[a], (*rhs)[b]);
    };
    auto swap_cols = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
    };
    auto add_row = [&](int dst, int src, const Integer& k) {
        for (int j = 0; j < cols; ++j) m[dst][j] += k * m[src][j];
        if (rhs) (*rhs)[dst] += k * (*rhs)[src];
    };
    auto add_col = [&](int dst, int src, const Integer& k) {
        for (int i = 0; i < rows; ++i) m[i][dst] += k * m[i][src];
    };

    for (int t = 0; t < steps; ++t) {
        // Smallest nonzero entry of the trailing submatrix becomes the pivot.
        auto locate_pivot = [&]() -> std::pair<int, int> {
            int pi = -1, pj = -1;
            Integer best;
            for (int i = t; i < rows; ++i) {
                for (int j = t; j < cols; ++j) {
                    if (m[i][j] == 0) continue;
                    Integer a = abs_int(m[i][j]);
                    if (pi < 0 || a < best) {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            }
            return {pi, pj};
        };

        bool settled = false;
        while (!settled) {
            auto [pi, pj] = locate_pivot();
            if (pi < 0) {
                settled = true;  // trailing submatrix is zero
                break;
            }
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool retry = false;
            for (int i = t + 1; i < rows && !retry; ++i) {
                if (m[i][t] == 0) continue;
                add_row(i, t, -Integer(m[i][t] / m[t][t]));
                if (m[i][t] != 0) retry = true;  // remainder smaller than pivot
            }
            if (retry) continue;
            for (int j = t + 1; j < cols && !retry; ++j) {
                if (m[t][j] == 0) continue;
                add_col(j, t, -Integer(m[t][j] / m[t][t]));
                if (m[t][j] != 0) retry = true;
            }
            if (retry) continue;

            // Pivot must divide the whole trailing block for the chain.
            for (int i = t + 1; i < rows && !retry; ++i) {
                for (int j = t + 1; j < cols; ++j) {
                    if (m[i][j] % m[t][t] != 0) {
                        add_row(t, i, Integer(1));
                        retry = true;
                        break;
                    }
                }
            }
            settled = !retry;
        }

        diag.push_back(abs_int(m[t][t]));
    }
    return diag;
}

}  // namespace

std::vector<Integer> smith_invariants(IntMatrix m) {
    if (m.empty() || m[0].empty()) {
        return {};
    }
    check_rectangular(m);
    return smith_diagonal(m, nullptr);
}

Integer determinant(IntMatrix a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) {
        return 1;
    }
    check_rectangular(a);
    if (static_cast<int>(a[0].size()) != n) {
        throw std::invalid_argument("determinant needs a square matrix");
    }
    // Bareiss fraction-free elimination: every division below is exact.
    int sign = 1;
    Integer prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            int swap_with = -1;
            for (int i = k + 1; i < n; ++i) {
                if (a[i][k] != 0) {
                    swap_with = i;
                    break;
                }
            }
            if (swap_with < 0) {
                return 0;
            }
            std::swap(a[k], a[swap_with]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : Integer(-a[n - 1][n - 1]);
}

bool integer_solvable(IntMatrix m, std::vector<Integer> rhs) {
    if (m.size() != rhs.size()) {
        throw std::invalid_argument("one right-hand side entry per matrix row");
    }
    if (m.empty()) {
        return true;
    }
    check_rectangular(m);
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    if (cols == 0) {
        for (const Integer& b : rhs) {
            if (b != 0) return false;
        }
        return true;
    }
    std::vector<Integer> diag = smith_diagonal(m, &rhs);
    for (int t = 0; t < static_cast<int>(diag.size()); ++t) {
        if (diag[t] == 0) {
            if (rhs[t] != 0) return false;
        } else if (rhs[t] % diag[t] != 0) {
            return false;
        }
    }
    for (int i = cols; i < rows; ++i) {
        if (rhs[i] != 0) return false;
    }
    return true;
}

}  // namespace divgraph
