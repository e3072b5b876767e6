#include "ctx/linear.hpp"

#include "ctx/errors.hpp"

namespace ctx {

std::optional<std::vector<Rational>> solve_linear(Matrix a, std::vector<Rational> b) {
    const std::size_t m = a.size();
    if (b.size() != m) {
        throw AnalysisError("linear system has mismatched dimensions");
    }
    const std::size_t n = m == 0 ? 0 : a.front().size();
    for (const auto& row : a) {
        if (row.size() != n) {
            throw AnalysisError("linear system has ragged rows");
        }
    }

    std::vector<std::size_t> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t pivot = row;
        while (pivot < m && a[pivot][col] == 0) ++pivot;
        if (pivot == m) continue;
        std::swap(a[pivot], a[row]);
        std::swap(b[pivot], b[row]);

        const Rational inv = Rational(1) / a[row][col];
        for (std::size_t c = col; c < n; ++c) a[row][c] *= inv;
        b[row] *= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || a[r][col] == 0) continue;
            const Rational factor = a[r][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[row][c];
            b[r] -= factor * b[row];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < m; ++r) {
        if (b[r] != 0) {
            return std::nullopt;  // 0 = nonzero: inconsistent
        }
    }
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t r = 0; r < row; ++r) {
        x[pivot_col_of_row[r]] = b[r];
    }
    return x;
}

}  // namespace ctx
