#pragma once

// Bjorner's minimal-atom edge labeling of a geometric lattice:
// lambda(x <| y) = least atom index i with x v a_i = y. In every closed
// interval exactly one maximal chain has a weakly increasing label word, and
// that chain is lexicographically least.

#include "okls/lattice.hpp"

#include <map>
#include <vector>

namespace okls {

class ELLabeling {
public:
    explicit ELLabeling(const GeometricLattice& L) : L_(&L)
    {
        for (auto [x, y] : L.poset().covers()) labels_[{x, y}] = L.min_atom_label(x, y);
    }

    int label(int x, int y) const
    {
        auto it = labels_.find({x, y});
        if (it == labels_.end()) fail(ErrorKind::NotComparable, "not a cover relation");
        return it->second;
    }

    std::vector<int> word(const std::vector<int>& maximal_chain) const
    {
        std::vector<int> w;
        for (size_t i = 0; i + 1 < maximal_chain.size(); ++i)
            w.push_back(label(maximal_chain[i], maximal_chain[i + 1]));
        return w;
    }

    static bool increasing(const std::vector<int>& w)
    {
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) return false;
        return true;
    }
    static bool decreasing(const std::vector<int>& w)
    {
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] <= w[i + 1]) return false;
        return true;
    }

    // Exhaustive EL check on every closed interval of rank <= rank_cap:
    // exactly one weakly increasing maximal chain, and it is lex-least.
    void verify(const Caps& caps = Caps{}) const
    {
        const auto& P = L_->poset();
        for (int x = 0; x < P.size(); ++x)
            for (int y = 0; y < P.size(); ++y) {
                if (!P.lt(x, y) || P.interval_rank(x, y) > caps.el_verify_rank_cap) continue;
                auto chains = P.maximal_chains_between(x, y, caps);
                int inc_count = 0;
                std::vector<int> inc_word, min_word;
                for (const auto& c : chains) {
                    auto w = word(c);
                    if (increasing(w)) {
                        ++inc_count;
                        inc_word = w;
                    }
                    if (min_word.empty() || w < min_word) min_word = w;
                }
                if (inc_count != 1 || inc_word != min_word)
                    fail(ErrorKind::ELVerificationFailed,
                         "interval [" + P.label(x) + ", " + P.label(y) + "] has " +
                             std::to_string(inc_count) + " increasing chains");
            }
    }

    const GeometricLattice& lattice() const { return *L_; }

private:
    const GeometricLattice* L_;
    std::map<std::pair<int, int>, int> labels_;
};

inline ELLabeling el_labeling_min_atom(const GeometricLattice& L, bool verify = false,
                                       const Caps& caps = Caps{})
{
    ELLabeling lab(L);
    if (verify) lab.verify(caps);
    return lab;
}

} // namespace okls
