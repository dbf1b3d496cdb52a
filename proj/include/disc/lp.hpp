#pragma once

// Exact linear feasibility: phase-one simplex over rationals with Bland's rule.

#include "disc/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace disc {

using Matrix = std::vector<std::vector<Rational>>;

/// Returns some y with rows[i] . y <= rhs[i] for all i (y unrestricted in
/// sign), or nullopt when the system is infeasible.
inline std::optional<std::vector<Rational>> feasible_point(const Matrix& rows, const std::vector<Rational>& rhs,
                                                           std::size_t vars)
{
    const std::size_t m = rows.size();
    if (rhs.size() != m)
        throw std::invalid_argument("row and right-hand side counts differ");
    for (const auto& r : rows)
        if (r.size() != vars)
            throw std::invalid_argument("row length does not match variable count");
    if (m == 0)
        return std::vector<Rational>(vars);

    // Columns: y+ [0, n), y- [n, 2n), slack [2n, 2n+m), artificial after that.
    std::size_t artificial = 0;
    for (const auto& b : rhs)
        if (b.sign() < 0)
            ++artificial;
    const std::size_t slack0 = 2 * vars;
    const std::size_t art0 = slack0 + m;
    const std::size_t cols = art0 + artificial;

    Matrix t(m + 1, std::vector<Rational>(cols + 1));
    std::vector<std::size_t> basis(m);
    std::size_t next_art = art0;
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = rhs[i].sign() < 0;
        auto& row = t[i];
        for (std::size_t j = 0; j < vars; ++j) {
            row[j] = flip ? -rows[i][j] : rows[i][j];
            row[vars + j] = -row[j];
        }
        row[slack0 + i] = flip ? Rational(-1) : Rational(1);
        row[cols] = flip ? -rhs[i] : rhs[i];
        if (flip) {
            row[next_art] = Rational(1);
            basis[i] = next_art++;
        } else {
            basis[i] = slack0 + i;
        }
    }
    // Objective row: reduced costs of minimizing the artificial sum, rhs = -w.
    auto& obj = t[m];
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < art0)
            continue;
        for (std::size_t j = 0; j < art0; ++j)
            obj[j] -= t[i][j];
        obj[cols] -= t[i][cols];
    }

    for (;;) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (obj[j].sign() < 0) {
                enter = j;
                break;
            }
        if (enter == cols)
            break;
        std::size_t leave = m;
        Rational best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter].sign() <= 0)
                continue;
            Rational ratio = t[i][cols] / t[i][enter];
            if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m)
            throw std::logic_error("phase-one objective unbounded");
        Rational pivot = t[leave][enter];
        for (auto& x : t[leave])
            x /= pivot;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave || t[i][enter].sign() == 0)
                continue;
            Rational f = t[i][enter];
            for (std::size_t j = 0; j <= cols; ++j)
                if (t[leave][j].sign() != 0)
                    t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    if (obj[cols].sign() != 0)
        return std::nullopt;

    std::vector<Rational> y(vars);
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < vars)
            y[basis[i]] += t[i][cols];
        else if (basis[i] < 2 * vars)
            y[basis[i] - vars] -= t[i][cols];
    }
    return y;
}

} // namespace disc
