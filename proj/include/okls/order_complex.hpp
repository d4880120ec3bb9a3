#pragma once

// Reduced simplicial homology of the order complex of the open interior of a
// bounded poset, over Q by exact rank computation. Simplices are the chains
// of the interior; the empty simplex is included (reduced/augmented complex),
// so the contractible cases come out with all reduced Betti numbers zero and
// the empty interior has a single class in degree -1.

#include "okls/poset.hpp"
#include "okls/sparse.hpp"

#include <map>
#include <vector>

namespace okls {

struct OrderComplexHomology {
    // reduced Betti numbers by simplex dimension (>= -1); zeros omitted
    std::map<int, long> betti;
    std::map<int, long> face_counts; // dimension -> number of simplices

    long betti_at(int d) const
    {
        auto it = betti.find(d);
        return it == betti.end() ? 0 : it->second;
    }
};

inline OrderComplexHomology order_complex_homology(const GradedBoundedPoset& P, const Caps& caps = Caps{})
{
    auto chains = P.interior_chains(caps); // includes the empty chain
    // group by dimension (chain size - 1); record index of each chain
    std::map<std::vector<int>, long> index;
    std::vector<std::vector<std::vector<int>>> by_dim; // by_dim[d+1]
    int top_dim = -1;
    for (const auto& c : chains) top_dim = std::max(top_dim, static_cast<int>(c.size()) - 1);
    by_dim.assign(static_cast<size_t>(top_dim + 2), {});
    for (const auto& c : chains) {
        int d = static_cast<int>(c.size()) - 1;
        index[c] = static_cast<long>(by_dim[static_cast<size_t>(d + 1)].size());
        by_dim[static_cast<size_t>(d + 1)].push_back(c);
    }

    // boundary_d : C_d -> C_{d-1}
    std::vector<SparseMat> boundary(static_cast<size_t>(top_dim + 2));
    for (int d = 0; d <= top_dim; ++d) {
        const auto& faces = by_dim[static_cast<size_t>(d + 1)];
        const auto& below = by_dim[static_cast<size_t>(d)];
        SparseMat B(static_cast<long>(below.size()), static_cast<long>(faces.size()));
        for (size_t j = 0; j < faces.size(); ++j) {
            int sign = 1;
            for (size_t v = 0; v < faces[j].size(); ++v) {
                std::vector<int> f = faces[j];
                f.erase(f.begin() + static_cast<long>(v));
                B.add(index.at(f), static_cast<long>(j), Rat(sign));
                sign = -sign;
            }
        }
        B.compress();
        boundary[static_cast<size_t>(d + 1)] = std::move(B);
    }

    OrderComplexHomology out;
    for (int d = -1; d <= top_dim; ++d) {
        long dim = static_cast<long>(by_dim[static_cast<size_t>(d + 1)].size());
        out.face_counts[d] = dim;
        long rank_in = d + 1 <= top_dim ? boundary[static_cast<size_t>(d + 2)].rank() : 0;
        long rank_out = d >= 0 ? boundary[static_cast<size_t>(d + 1)].rank() : 0;
        long b = dim - rank_in - rank_out;
        if (b != 0) out.betti[d] = b;
    }
    return out;
}

} // namespace okls
