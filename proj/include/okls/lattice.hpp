#pragma once

// Geometric lattices: a graded bounded poset with join/meet tables, an atom
// list in a fixed linear order, and the matroid-style helpers (closure, rank
// of atom sets) that the Orlik-Solomon layer is built on. The atom order is
// the construction input order; nbc bases and EL-labelings depend on it.

#include "okls/poset.hpp"

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

namespace okls {

class GeometricLattice {
public:
    GeometricLattice() = default;

    // atoms, when given, fixes the linear atom order; defaults to element
    // index order. Validates lattice + atomic + semimodular.
    static GeometricLattice from_poset(GradedBoundedPoset poset, std::vector<int> atoms = {})
    {
        GeometricLattice L;
        L.poset_ = std::make_shared<GradedBoundedPoset>(std::move(poset));
        L.build_join_meet();
        if (atoms.empty()) {
            for (int x = 0; x < L.size(); ++x)
                if (L.poset().rank_of(x) == 1) atoms.push_back(x);
        }
        L.atoms_ = std::move(atoms);
        L.build_atoms_below();
        L.validate_geometric();
        return L;
    }

    const GradedBoundedPoset& poset() const { return *poset_; }
    int size() const { return poset().size(); }
    int bottom() const { return poset().bottom(); }
    int top() const { return poset().top(); }
    int rank() const { return poset().rank(); }
    int rank_of(int x) const { return poset().rank_of(x); }
    bool leq(int x, int y) const { return poset().leq(x, y); }
    bool lt(int x, int y) const { return poset().lt(x, y); }
    const std::string& label(int x) const { return poset().label(x); }

    int join(int x, int y) const { return join_[static_cast<size_t>(x)][static_cast<size_t>(y)]; }
    int meet(int x, int y) const { return meet_[static_cast<size_t>(x)][static_cast<size_t>(y)]; }

    int atom_count() const { return static_cast<int>(atoms_.size()); }
    const std::vector<int>& atoms() const { return atoms_; }
    int atom_elem(int i) const { return atoms_[static_cast<size_t>(i)]; }

    // Global atom indices lying below x, ascending.
    const std::vector<int>& atoms_below(int x) const { return atoms_below_[static_cast<size_t>(x)]; }

    // Least global atom index i with a_i <= v and a_i not<= x. For a cover
    // x <| v this is the Bjorner minimal-atom edge label.
    int min_atom_label(int x, int v) const
    {
        for (int i : atoms_below(v))
            if (!leq(atom_elem(i), x)) return i;
        fail(ErrorKind::NotGeometric, "no atom separates " + label(x) + " from " + label(v));
    }

    // Atoms of the closed interval [x, y]: the covers of x below y, sorted by
    // their minimal-atom label (the induced atom order used for nbc bases).
    std::vector<int> interval_atoms(int x, int y) const
    {
        std::vector<std::pair<int, int>> tagged;
        for (int v : poset().covers_up(x))
            if (leq(v, y)) tagged.emplace_back(min_atom_label(x, v), v);
        std::sort(tagged.begin(), tagged.end());
        std::vector<int> out;
        out.reserve(tagged.size());
        for (auto& [lbl, v] : tagged) out.push_back(v);
        return out;
    }

    // Closed interval as a geometric lattice in its own right (atom order
    // induced from the parent); validated on construction.
    GeometricLattice interval_lattice(int x, int y) const
    {
        GradedBoundedPoset sub = poset().interval(x, y);
        // interval atoms, translated to sub indices via the back map
        std::vector<int> inv(static_cast<size_t>(size()), -1);
        for (int i = 0; i < sub.size(); ++i) inv[static_cast<size_t>(sub.back_map()[static_cast<size_t>(i)])] = i;
        std::vector<int> atoms;
        for (int v : interval_atoms(x, y)) atoms.push_back(inv[static_cast<size_t>(v)]);
        return from_poset(std::move(sub), std::move(atoms));
    }

    bool same_object(const GeometricLattice& o) const { return poset_.get() == o.poset_.get(); }

private:
    void build_join_meet()
    {
        const auto& P = poset();
        int n = P.size();
        join_.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
        meet_.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
        for (int x = 0; x < n; ++x)
            for (int y = x; y < n; ++y) {
                int j = unique_bound(x, y, true);
                int m = unique_bound(x, y, false);
                join_[static_cast<size_t>(x)][static_cast<size_t>(y)] = j;
                join_[static_cast<size_t>(y)][static_cast<size_t>(x)] = j;
                meet_[static_cast<size_t>(x)][static_cast<size_t>(y)] = m;
                meet_[static_cast<size_t>(y)][static_cast<size_t>(x)] = m;
            }
    }

    int unique_bound(int x, int y, bool upper) const
    {
        const auto& P = poset();
        std::vector<int> bounds;
        for (int z = 0; z < P.size(); ++z) {
            bool ok = upper ? (P.leq(x, z) && P.leq(y, z)) : (P.leq(z, x) && P.leq(z, y));
            if (ok) bounds.push_back(z);
        }
        // minimal (resp. maximal) elements among bounds
        std::vector<int> extremal;
        for (int b : bounds) {
            bool ext = true;
            for (int c : bounds)
                if (c != b && (upper ? P.lt(c, b) : P.lt(b, c))) ext = false;
            if (ext) extremal.push_back(b);
        }
        if (extremal.size() != 1)
            fail(ErrorKind::NotALattice,
                 std::string(upper ? "join" : "meet") + " of " + P.label(x) + " and " + P.label(y) +
                     " is not unique");
        return extremal[0];
    }

    void build_atoms_below()
    {
        atoms_below_.assign(static_cast<size_t>(size()), {});
        for (int i = 0; i < atom_count(); ++i) {
            if (rank_of(atom_elem(i)) != 1)
                fail(ErrorKind::NotGeometric, "atom list entry " + label(atom_elem(i)) + " has rank != 1");
            for (int x = 0; x < size(); ++x)
                if (leq(atom_elem(i), x)) atoms_below_[static_cast<size_t>(x)].push_back(i);
        }
    }

    void validate_geometric() const
    {
        const auto& P = poset();
        // atom list must be exactly the rank-1 elements
        int rank1 = 0;
        for (int x = 0; x < size(); ++x)
            if (P.rank_of(x) == 1) ++rank1;
        if (rank1 != atom_count())
            fail(ErrorKind::NotGeometric, "atom list does not cover all rank-1 elements");
        // atomic: every element is the join of the atoms below it
        for (int x = 0; x < size(); ++x) {
            int j = bottom();
            for (int i : atoms_below(x)) j = join(j, atom_elem(i));
            if (j != x)
                fail(ErrorKind::NotGeometric, "not atomic: " + label(x) + " is not a join of atoms");
        }
        // semimodular: rk x + rk y >= rk(x v y) + rk(x ^ y)
        for (int x = 0; x < size(); ++x)
            for (int y = x + 1; y < size(); ++y)
                if (P.rank_of(x) + P.rank_of(y) <
                    P.rank_of(join(x, y)) + P.rank_of(meet(x, y)))
                    fail(ErrorKind::NotGeometric,
                         "not semimodular at pair (" + label(x) + ", " + label(y) + ")");
    }

    std::shared_ptr<GradedBoundedPoset> poset_;
    std::vector<std::vector<int>> join_, meet_;
    std::vector<int> atoms_;
    std::vector<std::vector<int>> atoms_below_;
};

} // namespace okls
