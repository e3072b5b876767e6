#include "ctx/simplex.hpp"

#include <cstddef>

#include "ctx/errors.hpp"

namespace ctx {

namespace {

// Tableau layout: columns [0, n) structural, [n, n+m) artificial, column
// n+m the right-hand side; row m is the phase-one objective (reduced
// costs, with the negated objective value in the last cell).
struct Tableau {
    std::size_t m;
    std::size_t n;
    std::vector<std::vector<Rational>> cells;
    std::vector<std::size_t> basis;  // basic variable per row

    Rational& at(std::size_t row, std::size_t col) { return cells[row][col]; }
};

void pivot(Tableau& t, std::size_t row, std::size_t col) {
    const Rational inv = Rational(1) / t.at(row, col);
    for (auto& cell : t.cells[row]) cell *= inv;
    for (std::size_t r = 0; r <= t.m; ++r) {
        if (r == row) continue;
        const Rational factor = t.at(r, col);
        if (factor == 0) continue;
        for (std::size_t c = 0; c < t.cells[r].size(); ++c) {
            t.cells[r][c] -= factor * t.cells[row][c];
        }
    }
    t.basis[row] = col;
}

}  // namespace

std::optional<std::vector<Rational>> feasible_point(const Matrix& a, std::vector<Rational> b) {
    const std::size_t m = a.size();
    if (b.size() != m) {
        throw AnalysisError("feasibility system has mismatched dimensions");
    }
    const std::size_t n = m == 0 ? 0 : a.front().size();
    if (m == 0) {
        return std::vector<Rational>(n, Rational(0));
    }

    Tableau t;
    t.m = m;
    t.n = n;
    t.cells.assign(m + 1, std::vector<Rational>(n + m + 1, Rational(0)));
    t.basis.resize(m);

    for (std::size_t r = 0; r < m; ++r) {
        if (a[r].size() != n) {
            throw AnalysisError("feasibility system has ragged rows");
        }
        const bool flip = b[r] < 0;
        for (std::size_t c = 0; c < n; ++c) {
            t.at(r, c) = flip ? -a[r][c] : a[r][c];
        }
        t.at(r, n + r) = 1;
        t.at(r, n + m) = flip ? -b[r] : b[r];
        t.basis[r] = n + r;
    }
    // Phase-one objective: minimize the sum of artificials. Reduced costs
    // of the structural columns are the negated column sums.
    for (std::size_t c = 0; c < n; ++c) {
        Rational sum(0);
        for (std::size_t r = 0; r < m; ++r) sum += t.at(r, c);
        t.at(m, c) = -sum;
    }
    Rational rhs_sum(0);
    for (std::size_t r = 0; r < m; ++r) rhs_sum += t.at(r, n + m);
    t.at(m, n + m) = -rhs_sum;

    while (true) {
        // Bland: entering column = smallest index with a negative reduced cost.
        std::size_t entering = n + m;
        for (std::size_t c = 0; c < n + m; ++c) {
            if (t.at(m, c) < 0) {
                entering = c;
                break;
            }
        }
        if (entering == n + m) break;

        // Ratio test; ties broken by the smallest basic variable index.
        std::size_t leaving = m;
        Rational best_ratio;
        for (std::size_t r = 0; r < m; ++r) {
            if (t.at(r, entering) <= 0) continue;
            Rational ratio = t.at(r, n + m) / t.at(r, entering);
            if (leaving == m || ratio < best_ratio ||
                (ratio == best_ratio && t.basis[r] < t.basis[leaving])) {
                leaving = r;
                best_ratio = ratio;
            }
        }
        if (leaving == m) {
            // Unbounded phase-one objective cannot happen (bounded below by 0).
            throw AnalysisError("phase-one simplex detected an unbounded direction");
        }
        pivot(t, leaving, entering);
    }

    if (t.at(m, n + m) != 0) {
        return std::nullopt;  // optimum of the artificial sum is positive
    }
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t r = 0; r < m; ++r) {
        if (t.basis[r] < n) {
            x[t.basis[r]] = t.at(r, n + m);
        }
    }
    return x;
}

}  // namespace ctx
