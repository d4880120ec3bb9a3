#pragma once

// Sparse matrices over Int/Rat and exact rank computation.
//
// Rank is computed by division-controlled integer elimination: a pivot step
// replaces a row by (pivot * row - entry * pivot_row) and then strips the gcd
// of the result, so every division is by a divisor of the whole row and is
// exact unconditionally. (Classical one-step Bareiss would have to rescale
// the rows that miss the pivot column to keep its divisions exact, which
// destroys sparsity.) Pivots are chosen Markowitz-style with a preference
// for +-1 entries to limit fill-in and coefficient growth.

#include "okls/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <unordered_map>
#include <vector>

namespace okls {

struct SparseMat {
    long rows = 0;
    long cols = 0;
    // row -> sorted (col, value), zero values never stored
    std::vector<std::vector<std::pair<long, Rat>>> entries;

    SparseMat() = default;
    SparseMat(long r, long c) : rows(r), cols(c), entries(static_cast<size_t>(r)) {}

    void add(long r, long c, const Rat& v)
    {
        if (v == 0) return;
        entries[static_cast<size_t>(r)].emplace_back(c, v);
    }

    // Collapse duplicate coordinates accumulated through add().
    void compress()
    {
        for (auto& row : entries) {
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            std::vector<std::pair<long, Rat>> out;
            for (auto& e : row) {
                if (!out.empty() && out.back().first == e.first) out.back().second += e.second;
                else out.push_back(e);
            }
            out.erase(std::remove_if(out.begin(), out.end(),
                                     [](const auto& e) { return e.second == 0; }),
                      out.end());
            row = std::move(out);
        }
    }

    bool is_zero() const
    {
        for (const auto& row : entries)
            if (!row.empty()) return false;
        return true;
    }

    long nnz() const
    {
        long n = 0;
        for (const auto& row : entries) n += static_cast<long>(row.size());
        return n;
    }

    Rat at(long r, long c) const
    {
        for (const auto& e : entries[static_cast<size_t>(r)])
            if (e.first == c) return e.second;
        return Rat(0);
    }

    // this * other (for d^2 = 0 checks; operands are small and very sparse).
    SparseMat multiply(const SparseMat& other) const
    {
        SparseMat out(rows, other.cols);
        for (long r = 0; r < rows; ++r) {
            std::unordered_map<long, Rat> acc;
            for (const auto& [k, v] : entries[static_cast<size_t>(r)])
                for (const auto& [c, w] : other.entries[static_cast<size_t>(k)]) acc[c] += v * w;
            for (auto& [c, v] : acc)
                if (v != 0) out.entries[static_cast<size_t>(r)].emplace_back(c, v);
            std::sort(out.entries[static_cast<size_t>(r)].begin(),
                      out.entries[static_cast<size_t>(r)].end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        }
        return out;
    }

    long rank() const;
};

namespace detail {

using IntRow = std::vector<std::pair<long, Int>>;

// gcd of the absolute values of all entries; 0 for an empty row
inline Int row_content(const IntRow& row)
{
    Int g = 0;
    for (const auto& e : row) {
        g = int_gcd(g, e.second);
        if (g == 1) break;
    }
    return g;
}

inline void row_strip_content(IntRow& row)
{
    Int g = row_content(row);
    if (g > 1)
        for (auto& e : row) e.second /= g;
}

// r1 <- (p * r1 - f * r2) / content, skipping the pivot column pc.
inline IntRow row_combine(const IntRow& r1, const IntRow& r2, const Int& p, const Int& f, long pc)
{
    IntRow out;
    out.reserve(r1.size() + r2.size());
    size_t i = 0, j = 0;
    while (i < r1.size() || j < r2.size()) {
        long c1 = i < r1.size() ? r1[i].first : -1;
        long c2 = j < r2.size() ? r2[j].first : -1;
        if (j >= r2.size() || (i < r1.size() && c1 < c2)) {
            if (c1 != pc) {
                Int v = p * r1[i].second;
                if (v != 0) out.emplace_back(c1, std::move(v));
            }
            ++i;
        } else if (i >= r1.size() || c2 < c1) {
            if (c2 != pc) {
                Int v = -f * r2[j].second;
                if (v != 0) out.emplace_back(c2, std::move(v));
            }
            ++j;
        } else {
            if (c1 != pc) {
                Int v = p * r1[i].second - f * r2[j].second;
                if (v != 0) out.emplace_back(c1, std::move(v));
            }
            ++i;
            ++j;
        }
    }
    row_strip_content(out);
    return out;
}

inline long rank_fraction_free(std::vector<IntRow> rows, long ncols)
{
    std::vector<long> col_count(static_cast<size_t>(ncols), 0);
    for (auto& row : rows) {
        row_strip_content(row);
        for (auto& e : row) ++col_count[static_cast<size_t>(e.first)];
    }

    long rank = 0;
    std::vector<size_t> active;
    active.reserve(rows.size());
    for (size_t i = 0; i < rows.size(); ++i)
        if (!rows[i].empty()) active.push_back(i);

    while (!active.empty()) {
        // Pivot selection: cheapest (row_nnz-1)*(col_count-1), unit entries first.
        size_t best_pos = 0;
        long best_col = -1;
        long best_score = -1;
        int best_unit = 0;
        for (size_t pos = 0; pos < active.size(); ++pos) {
            const IntRow& row = rows[active[pos]];
            long rn = static_cast<long>(row.size()) - 1;
            for (const auto& e : row) {
                long score = rn * (col_count[static_cast<size_t>(e.first)] - 1);
                int unit = (e.second == 1 || e.second == -1) ? 1 : 0;
                if (best_col < 0 || unit > best_unit || (unit == best_unit && score < best_score)) {
                    best_pos = pos;
                    best_col = e.first;
                    best_score = score;
                    best_unit = unit;
                }
            }
            if (best_unit == 1 && best_score == 0) break; // cannot do better
        }

        size_t prow = active[best_pos];
        long pc = best_col;
        Int pv = 0;
        for (const auto& e : rows[prow])
            if (e.first == pc) pv = e.second;

        active[best_pos] = active.back();
        active.pop_back();
        for (const auto& e : rows[prow]) --col_count[static_cast<size_t>(e.first)];

        std::vector<size_t> next;
        next.reserve(active.size());
        for (size_t idx : active) {
            IntRow& row = rows[idx];
            Int f = 0;
            for (const auto& e : row)
                if (e.first == pc) f = e.second;
            if (f != 0) {
                for (const auto& e : row) --col_count[static_cast<size_t>(e.first)];
                row = row_combine(row, rows[prow], pv, f, pc);
                for (const auto& e : row) ++col_count[static_cast<size_t>(e.first)];
            }
            if (!row.empty()) next.push_back(idx);
        }
        rows[prow].clear();
        active = std::move(next);
        ++rank;
    }
    return rank;
}

} // namespace detail

inline long SparseMat::rank() const
{
    // Scale each row to integers; row scaling does not change the rank.
    std::vector<detail::IntRow> irows(entries.size());
    for (size_t r = 0; r < entries.size(); ++r) {
        Int l = 1;
        for (const auto& e : entries[r]) l = int_lcm(l, rat_den(e.second));
        detail::IntRow row;
        row.reserve(entries[r].size());
        for (const auto& e : entries[r]) {
            Int v = rat_num(e.second) * (l / rat_den(e.second));
            if (v != 0) row.emplace_back(e.first, std::move(v));
        }
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        irows[r] = std::move(row);
    }
    return detail::rank_fraction_free(std::move(irows), cols);
}

} // namespace okls
