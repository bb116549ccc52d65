#pragma once

// Drops equality forms that are rational linear combinations of earlier
// ones. Each equality a.x = b becomes the affine row [a | b]; a row is
// dependent when exact elimination against the kept rows zeroes it.
// Congruences are never dropped.

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "linear_form.hpp"

namespace evasive {

using Rational = boost::multiprecision::cpp_rational;

struct RankFilterResult {
    std::vector<LinearForm> kept;       // input order; equalities then congruences interleaved as given
    std::vector<LinearForm> discarded;  // dependent equalities
    std::size_t rank = 0;
};

inline RankFilterResult rank_filter(const std::vector<LinearForm>& forms) {
    std::vector<ClassId> columns;
    for (const auto& f : forms)
        for (const auto& [id, a] : f.coefficients())
            if (std::find(columns.begin(), columns.end(), id) == columns.end()) columns.push_back(id);
    std::sort(columns.begin(), columns.end(), ClassIdLess{});
    const std::size_t width = columns.size() + 1;  // last column holds the right-hand side

    struct BasisRow {
        std::vector<Rational> v;
        std::size_t pivot;
    };
    std::vector<BasisRow> basis;
    RankFilterResult out;

    for (const auto& f : forms) {
        if (f.is_congruence()) {
            out.kept.push_back(f);
            continue;
        }
        std::vector<Rational> row(width);
        for (std::size_t c = 0; c < columns.size(); ++c) row[c] = f.coefficient(columns[c]);
        row.back() = f.rhs();
        for (const auto& b : basis) {
            if (row[b.pivot] == 0) continue;
            const Rational factor = row[b.pivot];
            for (std::size_t c = 0; c < width; ++c) row[c] -= factor * b.v[c];
        }
        auto nz = std::find_if(row.begin(), row.end(), [](const Rational& x) { return x != 0; });
        if (nz == row.end()) {
            out.discarded.push_back(f);
            continue;
        }
        const std::size_t pivot = static_cast<std::size_t>(nz - row.begin());
        const Rational p = row[pivot];
        for (auto& x : row) x /= p;
        // keep the basis fully reduced in pivot columns
        for (auto& b : basis) {
            if (b.v[pivot] == 0) continue;
            const Rational factor = b.v[pivot];
            for (std::size_t c = 0; c < width; ++c) b.v[c] -= factor * row[c];
        }
        basis.push_back({std::move(row), pivot});
        out.kept.push_back(f);
    }
    out.rank = basis.size();
    return out;
}

}  // namespace evasive
