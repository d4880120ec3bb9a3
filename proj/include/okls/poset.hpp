#pragma once

// Finite graded bounded posets. Stored as the full <= relation plus the cover
// list: element counts stay small (caps default to 500), so O(n^2) storage
// buys O(1) comparisons everywhere else.

#include "okls/errors.hpp"
#include "okls/numeric.hpp"
#include "okls/poly.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace okls {

class GradedBoundedPoset {
public:
    GradedBoundedPoset() = default;

    // Build from labels and a cover list; derives the order relation as the
    // reflexive-transitive closure and validates bounded + graded.
    static GradedBoundedPoset from_covers(std::vector<std::string> labels,
                                          const std::vector<std::pair<int, int>>& covers,
                                          const Caps& caps = Caps{})
    {
        GradedBoundedPoset p;
        p.labels_ = std::move(labels);
        p.n_ = static_cast<int>(p.labels_.size());
        if (p.n_ == 0) fail(ErrorKind::InvalidInput, "poset needs at least one element");
        if (p.n_ > caps.max_elements)
            fail(ErrorKind::SizeGuardExceeded,
                 "element count " + std::to_string(p.n_) + " exceeds cap " + std::to_string(caps.max_elements));

        std::vector<std::vector<int>> up(static_cast<size_t>(p.n_));
        for (auto [a, b] : covers) {
            if (a < 0 || b < 0 || a >= p.n_ || b >= p.n_)
                fail(ErrorKind::InvalidInput, "cover index out of range");
            if (a == b) fail(ErrorKind::InvalidInput, "cover relation is irreflexive");
            up[static_cast<size_t>(a)].push_back(b);
        }

        p.leq_.assign(static_cast<size_t>(p.n_), std::vector<char>(static_cast<size_t>(p.n_), 0));
        for (int i = 0; i < p.n_; ++i) {
            // DFS reachability from i
            std::vector<int> stack = {i};
            auto& row = p.leq_[static_cast<size_t>(i)];
            row[static_cast<size_t>(i)] = 1;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int y : up[static_cast<size_t>(x)])
                    if (!row[static_cast<size_t>(y)]) {
                        row[static_cast<size_t>(y)] = 1;
                        stack.push_back(y);
                    }
            }
        }
        for (int i = 0; i < p.n_; ++i)
            for (int j = i + 1; j < p.n_; ++j)
                if (p.leq_[static_cast<size_t>(i)][static_cast<size_t>(j)] &&
                    p.leq_[static_cast<size_t>(j)][static_cast<size_t>(i)])
                    fail(ErrorKind::InvalidInput,
                         "cover relation has a cycle through " + p.labels_[static_cast<size_t>(i)] +
                             " and " + p.labels_[static_cast<size_t>(j)]);
        p.finish_construction();
        return p;
    }

    // Build directly from a full order relation (already reflexive/transitive).
    static GradedBoundedPoset from_relation(std::vector<std::string> labels,
                                            std::vector<std::vector<char>> leq,
                                            const Caps& caps = Caps{})
    {
        GradedBoundedPoset p;
        p.labels_ = std::move(labels);
        p.n_ = static_cast<int>(p.labels_.size());
        if (p.n_ == 0) fail(ErrorKind::InvalidInput, "poset needs at least one element");
        if (p.n_ > caps.max_elements) fail(ErrorKind::SizeGuardExceeded, "element count exceeds cap");
        p.leq_ = std::move(leq);
        p.finish_construction();
        return p;
    }

    int size() const { return n_; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }
    int rank() const { return rank_of_[static_cast<size_t>(top_)]; }
    int rank_of(int x) const { return rank_of_[static_cast<size_t>(x)]; }
    int interval_rank(int x, int y) const { return rank_of(y) - rank_of(x); }
    bool leq(int x, int y) const { return leq_[static_cast<size_t>(x)][static_cast<size_t>(y)] != 0; }
    bool lt(int x, int y) const { return x != y && leq(x, y); }
    const std::string& label(int x) const { return labels_[static_cast<size_t>(x)]; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    const std::vector<int>& covers_up(int x) const { return covers_up_[static_cast<size_t>(x)]; }
    const std::vector<int>& covers_down(int x) const { return covers_down_[static_cast<size_t>(x)]; }
    bool covers_rel(int x, int y) const // y covers x
    {
        const auto& u = covers_up_[static_cast<size_t>(x)];
        return std::find(u.begin(), u.end(), y) != u.end();
    }

    // Elements sorted by (rank, index); a linear extension.
    const std::vector<int>& linear_extension() const { return linext_; }

    std::vector<int> elements_of_rank(int r) const
    {
        std::vector<int> out;
        for (int x = 0; x < n_; ++x)
            if (rank_of(x) == r) out.push_back(x);
        return out;
    }

    std::vector<int> open_interval(int x, int y) const
    {
        std::vector<int> out;
        for (int z : linext_)
            if (lt(x, z) && lt(z, y)) out.push_back(z);
        return out;
    }
    std::vector<int> interior() const { return open_interval(bottom_, top_); }

    // Closed interval [x, y] as a poset in its own right; rank is shifted so
    // the new bottom has rank 0. back_map()[i] gives the parent element.
    GradedBoundedPoset interval(int x, int y) const
    {
        if (!leq(x, y)) fail(ErrorKind::NotComparable, label(x) + " is not below " + label(y));
        std::vector<int> elems;
        for (int z : linext_)
            if (leq(x, z) && leq(z, y)) elems.push_back(z);
        GradedBoundedPoset p;
        p.n_ = static_cast<int>(elems.size());
        p.labels_.reserve(elems.size());
        for (int z : elems) p.labels_.push_back(label(z));
        p.leq_.assign(static_cast<size_t>(p.n_), std::vector<char>(static_cast<size_t>(p.n_), 0));
        for (int i = 0; i < p.n_; ++i)
            for (int j = 0; j < p.n_; ++j)
                p.leq_[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    leq(elems[static_cast<size_t>(i)], elems[static_cast<size_t>(j)]);
        p.back_map_ = elems;
        p.finish_construction();
        return p;
    }

    const std::vector<int>& back_map() const { return back_map_; }

    // Moebius function via the defining recursion mu(x,x) = 1,
    // sum_{x<=z<=y} mu(x,z) = 0 for x < y. Rows are memoized.
    Int mobius(int x, int y) const
    {
        if (!leq(x, y)) fail(ErrorKind::NotComparable, label(x) + " is not below " + label(y));
        const auto& row = mobius_row(x);
        return row[static_cast<size_t>(y)];
    }

    // chi_P(t) = sum_G mu(0,G) t^{rk[G,1]}
    IntPoly characteristic_polynomial() const
    {
        const auto& row = mobius_row(bottom_);
        std::vector<Int> coeffs(static_cast<size_t>(rank()) + 1);
        for (int g = 0; g < n_; ++g) coeffs[static_cast<size_t>(interval_rank(g, top_))] += row[static_cast<size_t>(g)];
        return IntPoly(std::move(coeffs));
    }
    IntPoly characteristic_polynomial_unsigned() const
    {
        const auto& row = mobius_row(bottom_);
        std::vector<Int> coeffs(static_cast<size_t>(rank()) + 1);
        for (int g = 0; g < n_; ++g)
            coeffs[static_cast<size_t>(interval_rank(g, top_))] += int_abs(row[static_cast<size_t>(g)]);
        return IntPoly(std::move(coeffs));
    }

    // All strictly increasing chains in the open interior (the empty chain
    // included), in lexicographic order of element-index sequences.
    std::vector<std::vector<int>> interior_chains(const Caps& caps = Caps{}) const
    {
        std::vector<std::vector<int>> out;
        out.push_back({});
        std::vector<int> inter = interior();
        std::vector<int> cur;
        chains_rec(inter, 0, cur, out, caps);
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        return out;
    }

    // Maximal chains from bottom to top (endpoints included).
    std::vector<std::vector<int>> maximal_chains(const Caps& caps = Caps{}) const
    {
        return maximal_chains_between(bottom_, top_, caps);
    }
    std::vector<std::vector<int>> maximal_chains_between(int x, int y, const Caps& caps = Caps{}) const
    {
        if (!leq(x, y)) fail(ErrorKind::NotComparable, "maximal_chains_between: not comparable");
        std::vector<std::vector<int>> out;
        std::vector<int> cur = {x};
        max_chains_rec(x, y, cur, out, caps);
        return out;
    }

private:
    void chains_rec(const std::vector<int>& inter, size_t start, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out, const Caps& caps) const
    {
        for (size_t i = start; i < inter.size(); ++i) {
            int z = inter[i];
            if (!cur.empty() && !lt(cur.back(), z)) continue;
            cur.push_back(z);
            if (static_cast<long>(out.size()) >= caps.max_chains)
                fail(ErrorKind::SizeGuardExceeded, "chain count exceeds cap");
            out.push_back(cur);
            chains_rec(inter, i + 1, cur, out, caps);
            cur.pop_back();
        }
    }

    void max_chains_rec(int x, int y, std::vector<int>& cur, std::vector<std::vector<int>>& out,
                        const Caps& caps) const
    {
        if (x == y) {
            if (static_cast<long>(out.size()) >= caps.max_chains)
                fail(ErrorKind::SizeGuardExceeded, "chain count exceeds cap");
            out.push_back(cur);
            return;
        }
        for (int z : covers_up(x))
            if (leq(z, y)) {
                cur.push_back(z);
                max_chains_rec(z, y, cur, out, caps);
                cur.pop_back();
            }
    }

    // Rows are memoized behind a lock so shared posets can be queried from
    // several threads; copies of a poset share the same memo.
    const std::vector<Int>& mobius_row(int x) const
    {
        std::lock_guard<std::mutex> lock(memo_->m);
        if (memo_->rows.empty()) memo_->rows.assign(static_cast<size_t>(n_), {});
        auto& row = memo_->rows[static_cast<size_t>(x)];
        if (!row.empty()) return row;
        row.assign(static_cast<size_t>(n_), Int(0));
        for (int y : linext_) {
            if (!leq(x, y)) continue;
            if (y == x) {
                row[static_cast<size_t>(y)] = 1;
                continue;
            }
            Int s = 0;
            for (int z = 0; z < n_; ++z)
                if (leq(x, z) && lt(z, y)) s += row[static_cast<size_t>(z)];
            row[static_cast<size_t>(y)] = -s;
        }
        return row;
    }

    void finish_construction()
    {
        // antisymmetry of a relation given directly
        for (int i = 0; i < n_; ++i) {
            if (!leq(i, i)) fail(ErrorKind::InvalidInput, "order relation is not reflexive");
            for (int j = 0; j < n_; ++j)
                if (i != j && leq(i, j) && leq(j, i))
                    fail(ErrorKind::InvalidInput, "order relation is not antisymmetric");
        }
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (leq(i, j))
                    for (int k = 0; k < n_; ++k)
                        if (leq(j, k) && !leq(i, k))
                            fail(ErrorKind::InvalidInput, "order relation is not transitive");

        // bounds
        bottom_ = -1;
        top_ = -1;
        for (int i = 0; i < n_; ++i) {
            bool all_above = true, all_below = true;
            for (int j = 0; j < n_; ++j) {
                if (!leq(i, j)) all_above = false;
                if (!leq(j, i)) all_below = false;
            }
            if (all_above) bottom_ = i;
            if (all_below) top_ = i;
        }
        if (bottom_ < 0 || top_ < 0)
            fail(ErrorKind::InvalidInput, "poset is not bounded (no unique bottom/top)");

        // covers
        covers_.clear();
        covers_up_.assign(static_cast<size_t>(n_), {});
        covers_down_.assign(static_cast<size_t>(n_), {});
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                if (!lt(i, j)) continue;
                bool is_cover = true;
                for (int k = 0; k < n_ && is_cover; ++k)
                    if (lt(i, k) && lt(k, j)) is_cover = false;
                if (is_cover) {
                    covers_.emplace_back(i, j);
                    covers_up_[static_cast<size_t>(i)].push_back(j);
                    covers_down_[static_cast<size_t>(j)].push_back(i);
                }
            }

        // rank = longest chain from bottom; graded iff every cover raises it by 1
        rank_of_.assign(static_cast<size_t>(n_), -1);
        rank_of_[static_cast<size_t>(bottom_)] = 0;
        // relax longest-path repeatedly (n is small)
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto [a, b] : covers_) {
                int ra = rank_of_[static_cast<size_t>(a)];
                if (ra >= 0 && rank_of_[static_cast<size_t>(b)] < ra + 1) {
                    rank_of_[static_cast<size_t>(b)] = ra + 1;
                    changed = true;
                }
            }
        }
        for (auto [a, b] : covers_)
            if (rank_of_[static_cast<size_t>(b)] != rank_of_[static_cast<size_t>(a)] + 1)
                fail(ErrorKind::NotGraded, "cover " + label(a) + " < " + label(b) +
                                               " does not raise rank by one");

        linext_.assign(static_cast<size_t>(n_), 0);
        std::iota(linext_.begin(), linext_.end(), 0);
        std::sort(linext_.begin(), linext_.end(), [&](int a, int b) {
            if (rank_of(a) != rank_of(b)) return rank_of(a) < rank_of(b);
            return a < b;
        });
    }

    int n_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::vector<char>> leq_;
    std::vector<int> rank_of_;
    int bottom_ = -1;
    int top_ = -1;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<int>> covers_up_;
    std::vector<std::vector<int>> covers_down_;
    std::vector<int> linext_;
    std::vector<int> back_map_;

    struct MobiusMemo {
        std::mutex m;
        std::vector<std::vector<Int>> rows;
    };
    std::shared_ptr<MobiusMemo> memo_ = std::make_shared<MobiusMemo>();
};

} // namespace okls
