#pragma once

// Orlik-Solomon algebras of closed intervals of a geometric lattice.
//
// The algebra of [x, y] is generated in degree 1 by e_v for v an atom of the
// interval (a cover of x below y); atoms are ordered by their minimal-atom
// label in the root lattice, so nested intervals see consistent orders. A
// monomial is stored as a strictly decreasing list of atom indices; the nbc
// monomials (independent, no broken circuit) form the linear basis, and
// reduce() straightens an arbitrary word into that basis by rewriting along
// circuit boundaries: for a circuit c0 < c1 < ... < ck,
//   e_{C \ c0} = sum_{j>=1} (-1)^{j+1} e_{C \ cj}   (ascending words),
// which replaces an atom by a strictly smaller one, so rewriting terminates.

#include "okls/lattice.hpp"
#include "okls/numeric.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace okls {

using NbcMonomial = std::vector<int>; // atom indices, strictly decreasing
using OSCombination = std::map<NbcMonomial, Rat>;

namespace detail {

// Sort a word into strictly decreasing order; returns the sign of the
// permutation, or 0 if an atom repeats.
inline int sign_sort_desc(std::vector<int>& word)
{
    int sign = 1;
    for (size_t i = 1; i < word.size(); ++i)
        for (size_t j = i; j > 0 && word[j] > word[j - 1]; --j) {
            std::swap(word[j], word[j - 1]);
            sign = -sign;
        }
    for (size_t i = 1; i < word.size(); ++i)
        if (word[i] == word[i - 1]) return 0;
    return sign;
}

} // namespace detail

class OSAlgebra {
public:
    OSAlgebra(const GeometricLattice& L, int lo, int hi, const Caps& caps = Caps{})
        : L_(&L), lo_(lo), hi_(hi), caps_(caps)
    {
        if (!L.leq(lo, hi)) fail(ErrorKind::NotComparable, "interval endpoints not comparable");
        rank_ = L.poset().interval_rank(lo, hi);
        atom_elem_ = L.interval_atoms(lo, hi);
        enumerate_nbc();
    }

    const GeometricLattice& lattice() const { return *L_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    int rank() const { return rank_; }
    int atom_count() const { return static_cast<int>(atom_elem_.size()); }
    int atom_element(int i) const { return atom_elem_[static_cast<size_t>(i)]; }

    int atom_index_of(int elem) const
    {
        for (size_t i = 0; i < atom_elem_.size(); ++i)
            if (atom_elem_[i] == elem) return static_cast<int>(i);
        fail(ErrorKind::InvalidInput, "element is not an atom of the interval");
    }

    long dim() const { return dim_; }
    int degrees() const { return static_cast<int>(nbc_.size()); } // = rank + 1
    const std::vector<NbcMonomial>& nbc_basis(int d) const { return nbc_[static_cast<size_t>(d)]; }
    long dim_of_degree(int d) const
    {
        return d < 0 || d > rank_ ? 0 : static_cast<long>(nbc_[static_cast<size_t>(d)].size());
    }

    long flat_index(const NbcMonomial& m) const
    {
        auto it = nbc_index_.find(m);
        if (it == nbc_index_.end()) fail(ErrorKind::InvalidInput, "not an nbc monomial");
        return it->second;
    }
    const NbcMonomial& monomial_at(long flat) const { return flat_list_[static_cast<size_t>(flat)]; }
    int degree_of_flat(long flat) const
    {
        return static_cast<int>(flat_list_[static_cast<size_t>(flat)].size());
    }
    long flat_offset(int d) const { return offsets_[static_cast<size_t>(d)]; }

    // join of the interval bottom with the listed atoms
    int join_of(const std::vector<int>& atom_idxs) const
    {
        int j = lo_;
        for (int i : atom_idxs) j = L_->join(j, atom_elem_[static_cast<size_t>(i)]);
        return j;
    }
    int set_rank(const std::vector<int>& atom_idxs) const
    {
        return L_->poset().interval_rank(lo_, join_of(atom_idxs));
    }
    bool set_independent(const std::vector<int>& atom_idxs) const
    {
        return set_rank(atom_idxs) == static_cast<int>(atom_idxs.size());
    }

    bool is_nbc(const std::vector<int>& set) const
    {
        if (!set_independent(set)) return false;
        // broken-circuit test: some atom c outside the set lies in the
        // closure of the part of the set above c
        for (int c = 0; c < atom_count(); ++c) {
            if (std::find(set.begin(), set.end(), c) != set.end()) continue;
            std::vector<int> above;
            for (int s : set)
                if (s > c) above.push_back(s);
            if (above.empty()) continue;
            std::vector<int> with = above;
            with.push_back(c);
            if (set_rank(with) == set_rank(above)) return false;
        }
        return true;
    }

    // Straighten a word of atom indices into the nbc basis.
    OSCombination reduce(std::vector<int> word) const
    {
        OSCombination acc;
        int sign = detail::sign_sort_desc(word);
        if (sign == 0) return acc;
        if (static_cast<int>(word.size()) > rank_) return acc; // cannot be independent
        std::map<std::vector<int>, Rat> pending;
        pending[word] = Rat(sign);
        long steps = 0;
        while (!pending.empty()) {
            if (++steps > caps_.rewrite_loop_cap)
                fail(ErrorKind::LoopCapExceeded, "nbc straightening did not terminate");
            auto it = pending.begin();
            std::vector<int> S = it->first;
            Rat coeff = it->second;
            pending.erase(it);
            if (coeff == 0) continue;
            if (!set_independent(S)) continue; // dependent monomials vanish
            if (is_nbc(S)) {
                acc[S] += coeff;
                if (acc[S] == 0) acc.erase(S);
                continue;
            }
            rewrite_once(S, coeff, pending);
        }
        return acc;
    }

    OSCombination multiply(const OSCombination& a, const OSCombination& b) const
    {
        OSCombination out;
        for (const auto& [ma, ca] : a)
            for (const auto& [mb, cb] : b) {
                std::vector<int> word = ma;
                word.insert(word.end(), mb.begin(), mb.end());
                for (const auto& [m, c] : reduce(std::move(word))) {
                    out[m] += ca * cb * c;
                    if (out[m] == 0) out.erase(m);
                }
            }
        return out;
    }

    std::string monomial_str(const NbcMonomial& m) const
    {
        if (m.empty()) return "1";
        std::string s;
        for (int i : m) {
            if (!s.empty()) s += "^";
            s += "e(" + L_->label(atom_elem_[static_cast<size_t>(i)]) + ")";
        }
        return s;
    }

private:
    void enumerate_nbc()
    {
        nbc_.assign(static_cast<size_t>(rank_) + 1, {});
        std::vector<int> cur;
        // grow ascending index sets; nbc sets form a hereditary family
        enumerate_rec(cur, 0);
        // canonical storage is descending; sort each degree lexicographically
        for (auto& level : nbc_) {
            for (auto& m : level) std::reverse(m.begin(), m.end());
            std::sort(level.begin(), level.end());
        }
        dim_ = 0;
        offsets_.assign(static_cast<size_t>(rank_) + 2, 0);
        for (int d = 0; d <= rank_; ++d) {
            offsets_[static_cast<size_t>(d)] = dim_;
            for (const auto& m : nbc_[static_cast<size_t>(d)]) {
                nbc_index_[m] = dim_++;
                flat_list_.push_back(m);
            }
        }
        offsets_[static_cast<size_t>(rank_) + 1] = dim_;
    }

    void enumerate_rec(std::vector<int>& cur, int next)
    {
        nbc_[cur.size()].push_back(cur); // ascending here; reversed to canonical later
        for (int a = next; a < atom_count(); ++a) {
            cur.push_back(a);
            bool keep = set_independent(cur);
            if (keep) {
                std::vector<int> desc(cur.rbegin(), cur.rend());
                keep = is_nbc(desc);
            }
            if (keep) enumerate_rec(cur, a + 1);
            cur.pop_back();
        }
    }

    // S is independent but contains a broken circuit: apply one circuit
    // relation and push the resulting terms.
    void rewrite_once(const std::vector<int>& S, const Rat& coeff,
                      std::map<std::vector<int>, Rat>& pending) const
    {
        // least atom c outside S with c in the closure of S_{>c}
        int c = -1;
        std::vector<int> above;
        for (int cand = 0; cand < atom_count(); ++cand) {
            if (std::find(S.begin(), S.end(), cand) != S.end()) continue;
            above.clear();
            for (int s : S)
                if (s > cand) above.push_back(s);
            if (above.empty()) continue;
            std::vector<int> with = above;
            with.push_back(cand);
            if (set_rank(with) == set_rank(above)) {
                c = cand;
                break;
            }
        }
        if (c < 0) fail(ErrorKind::LoopCapExceeded, "monomial flagged non-nbc but no broken circuit found");

        // fundamental circuit: minimal T subset of S_{>c} with c in cl(T)
        std::vector<int> T = above;
        for (size_t i = 0; i < T.size();) {
            std::vector<int> without;
            for (size_t j = 0; j < T.size(); ++j)
                if (j != i) without.push_back(T[j]);
            std::vector<int> with = without;
            with.push_back(c);
            if (set_rank(with) == set_rank(without)) T = std::move(without);
            else ++i;
        }
        std::vector<int> circuit = {c};
        circuit.insert(circuit.end(), T.begin(), T.end()); // ascending: c < all of T

        // e_{C\c0} = sum_{j>=1} (-1)^{j+1} e_{C\cj}; multiply by the rest of S
        std::vector<int> rest;
        for (int s : S)
            if (std::find(T.begin(), T.end(), s) == T.end()) rest.push_back(s);

        std::vector<int> base_word = T; // ascending
        base_word.insert(base_word.end(), rest.begin(), rest.end());
        int base_sign = detail::sign_sort_desc(base_word); // base_word now canonical = S up to sign
        // e_S = base_sign * e_{[T, rest]}
        for (size_t j = 1; j < circuit.size(); ++j) {
            std::vector<int> word;
            for (size_t t = 0; t < circuit.size(); ++t)
                if (t != j) word.push_back(circuit[t]);
            word.insert(word.end(), rest.begin(), rest.end());
            int s = detail::sign_sort_desc(word);
            if (s == 0) continue;
            int sign_j = (j % 2 == 1) ? 1 : -1; // (-1)^{j+1}
            Rat add = coeff * base_sign * sign_j * s;
            pending[word] += add;
            if (pending[word] == 0) pending.erase(word);
        }
    }

    const GeometricLattice* L_;
    int lo_, hi_, rank_;
    Caps caps_;
    std::vector<int> atom_elem_;
    std::vector<std::vector<NbcMonomial>> nbc_;
    std::map<NbcMonomial, long> nbc_index_;
    std::vector<NbcMonomial> flat_list_;
    std::vector<long> offsets_;
    long dim_ = 0;
};

// A sparse element of OS([lo,hi]) tagged with its host, for the high-level
// algebra operations (reduce / multiply / coproduct of elements).
struct OSElement {
    const OSAlgebra* host = nullptr;
    OSCombination terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const OSElement& o) const { return host == o.host && terms == o.terms; }

    OSElement operator+(const OSElement& o) const
    {
        if (host != o.host) fail(ErrorKind::HostMismatch, "adding elements of different algebras");
        OSElement out{host, terms};
        for (const auto& [m, c] : o.terms) {
            out.terms[m] += c;
            if (out.terms[m] == 0) out.terms.erase(m);
        }
        return out;
    }
    OSElement operator*(const OSElement& o) const
    {
        if (host != o.host) fail(ErrorKind::HostMismatch, "multiplying elements of different algebras");
        return {host, host->multiply(terms, o.terms)};
    }
    OSElement scaled(const Rat& c) const
    {
        OSElement out{host, {}};
        if (c == 0) return out;
        for (const auto& [m, v] : terms) out.terms[m] = v * c;
        return out;
    }
};

inline OSElement os_one(const OSAlgebra& A) { return {&A, {{NbcMonomial{}, Rat(1)}}}; }

inline OSElement os_word(const OSAlgebra& A, const std::vector<int>& atom_idxs)
{
    return {&A, A.reduce(atom_idxs)};
}

inline OSElement os_generator(const OSAlgebra& A, int atom_idx) { return os_word(A, {atom_idx}); }

} // namespace okls
