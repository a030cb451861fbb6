#include "ontomatch/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ontomatch/error.hpp"

namespace ontomatch {

namespace {

struct Solution {
    std::vector<std::size_t> row_to_col;
    std::vector<double> u;
    std::vector<double> v;
};

// Classical minimisation with row/column potentials, O(n^3).
// Potentials satisfy u[i] + v[j] <= cost(i, j), with equality on matched cells.
Solution solve_min_cost(const Matrix<double>& cost) {
    const std::size_t n = cost.rows();
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    std::vector<double> minv(n + 1);
    std::vector<char> used(n + 1);

    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::fill(minv.begin(), minv.end(), kInf);
        std::fill(used.begin(), used.end(), 0);
        do {
            used[j0] = 1;
            const std::size_t i0 = p[j0];
            double delta = kInf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    Solution s;
    s.row_to_col.assign(n, 0);
    for (std::size_t j = 1; j <= n; ++j) s.row_to_col[p[j] - 1] = j - 1;
    s.u.assign(u.begin() + 1, u.end());
    s.v.assign(v.begin() + 1, v.end());
    return s;
}

// Every optimal matching lies inside the subgraph of tight cells. Walk the
// real rows in order and move each onto the smallest column reachable by an
// alternating cycle through rows that are not yet fixed.
void make_lexicographic(const Matrix<double>& cost, const Solution& sol, double tol, std::size_t real_rows,
                        std::vector<std::size_t>& row_to_col) {
    const std::size_t n = cost.rows();
    const auto tight = [&](std::size_t i, std::size_t j) { return cost(i, j) - sol.u[i] - sol.v[j] <= tol; };

    std::vector<std::size_t> col_to_row(n);
    for (std::size_t i = 0; i < n; ++i) col_to_row[row_to_col[i]] = i;

    std::vector<std::size_t> successor(n);
    std::vector<char> reached(n);
    std::vector<std::size_t> queue;
    queue.reserve(n);

    for (std::size_t r = 0; r < real_rows; ++r) {
        const std::size_t current = row_to_col[r];
        bool candidate = false;
        for (std::size_t c = 0; c < current && !candidate; ++c) {
            candidate = col_to_row[c] > r && tight(r, c);
        }
        if (!candidate) continue;

        // Rows that can hand their column along a chain ending at r.
        std::fill(reached.begin(), reached.end(), 0);
        queue.clear();
        queue.push_back(r);
        reached[r] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t w = queue[head];
            const std::size_t cw = row_to_col[w];
            for (std::size_t x = r + 1; x < n; ++x) {
                if (!reached[x] && tight(x, cw)) {
                    reached[x] = 1;
                    successor[x] = w;
                    queue.push_back(x);
                }
            }
        }

        std::size_t best_col = current;
        for (std::size_t c = 0; c < current; ++c) {
            const std::size_t owner = col_to_row[c];
            if (owner > r && reached[owner] && tight(r, c)) {
                best_col = c;
                break;
            }
        }
        if (best_col == current) continue;

        // Rotate columns along y -> successor[y] -> ... -> r.
        std::size_t y = col_to_row[best_col];
        row_to_col[r] = best_col;
        while (y != r) {
            const std::size_t next = successor[y];
            row_to_col[y] = (next == r) ? current : row_to_col[next];
            y = next;
        }
        for (std::size_t i = 0; i < n; ++i) col_to_row[row_to_col[i]] = i;
    }
}

} // namespace

Assignment kuhn_munkres(const Matrix<double>& values) {
    const std::size_t m = values.rows();
    const std::size_t k = values.cols();
    if (m == 0 || k == 0) throw Error(ErrorCode::EmptyMatrix, "assignment needs a non-empty matrix");

    double max_value = 0.0;
    double scale = 1.0;
    for (double x : values.data()) {
        if (!std::isfinite(x)) throw Error(ErrorCode::NonFiniteValue, "assignment matrix holds a non-finite value");
        max_value = std::max(max_value, x);
        scale = std::max(scale, std::abs(x));
    }

    const std::size_t n = std::max(m, k);
    Matrix<double> cost(n, n, max_value);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j) cost(i, j) = max_value - values(i, j);
    }

    const Solution sol = solve_min_cost(cost);
    std::vector<std::size_t> row_to_col = sol.row_to_col;
    make_lexicographic(cost, sol, kTieTolerance * scale, m, row_to_col);

    Assignment result;
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = row_to_col[i];
        if (j >= k) continue;
        result.pairs.emplace_back(i, j);
        result.total_weight += values(i, j);
    }
    return result;
}

} // namespace ontomatch
