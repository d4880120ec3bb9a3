#pragma once

// The Gerstenhaber operad of a geometric lattice, realized through duality:
// Gerst([x,y]) is the linear dual of OS([x,y]) with dual-nbc basis, and the
// operadic product mu_G is the transpose of the Orlik-Solomon coproduct
// Delta_G. The dual of a degree-d monomial sits in bigrade
// (rank - d, d) = (C-weight, L-weight); the pure-C slice realizes Com and the
// pure-L slice realizes Lie.

#include "okls/os_algebra.hpp"
#include "okls/poly.hpp"

#include <map>
#include <memory>
#include <sstream>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace okls {

// Delta_G in nbc bases: per column (flat index in OS([lo,hi])) the list of
// (left flat, right flat, coefficient) with left in OS([lo,G]) and right in
// OS([G,hi]).
struct CoproductData {
    std::vector<std::vector<std::tuple<long, long, Rat>>> cols;
};

// The transpose, keyed by the (left, right) pair: mu_G(a (x) b) expanded in
// the nbc basis of the big interval.
struct MuData {
    long rdim = 0;
    std::unordered_map<long, std::vector<std::pair<long, Rat>>> pairs;

    const std::vector<std::pair<long, Rat>>* find(long lflat, long rflat) const
    {
        auto it = pairs.find(lflat * rdim + rflat);
        return it == pairs.end() ? nullptr : &it->second;
    }
};

class GerstSystem {
public:
    explicit GerstSystem(const GeometricLattice& L, Caps caps = Caps{}) : L_(&L), caps_(caps) {}

    const GeometricLattice& lattice() const { return *L_; }
    const Caps& caps() const { return caps_; }

    const OSAlgebra& os(int lo, int hi) const
    {
        auto key = std::make_pair(lo, hi);
        auto it = os_.find(key);
        if (it == os_.end())
            it = os_.emplace(key, std::make_unique<OSAlgebra>(*L_, lo, hi, caps_)).first;
        return *it->second;
    }

    const CoproductData& coproduct(int lo, int mid, int hi, bool twisted) const
    {
        auto key = std::make_tuple(lo, mid, hi, twisted);
        auto it = delta_.find(key);
        if (it != delta_.end()) return it->second;
        return delta_.emplace(key, build_coproduct(lo, mid, hi, twisted)).first->second;
    }

    const MuData& mu(int lo, int mid, int hi) const
    {
        auto key = std::make_tuple(lo, mid, hi);
        auto it = mu_.find(key);
        if (it != mu_.end()) return it->second;
        const CoproductData& d = coproduct(lo, mid, hi, false);
        MuData m;
        m.rdim = os(mid, hi).dim();
        for (size_t col = 0; col < d.cols.size(); ++col)
            for (const auto& [lf, rf, c] : d.cols[col])
                m.pairs[lf * m.rdim + rf].emplace_back(static_cast<long>(col), c);
        return mu_.emplace(key, std::move(m)).first->second;
    }

    // Interior chains of the whole lattice, lex-sorted, with an id lookup.
    const std::vector<std::vector<int>>& interior_chains() const
    {
        if (chains_.empty()) {
            chains_ = L_->poset().interior_chains(caps_);
            for (size_t i = 0; i < chains_.size(); ++i) chain_id_[chains_[i]] = static_cast<long>(i);
        }
        return chains_;
    }
    long chain_id(const std::vector<int>& c) const
    {
        interior_chains();
        auto it = chain_id_.find(c);
        if (it == chain_id_.end()) fail(ErrorKind::InvalidInput, "unknown chain");
        return it->second;
    }

private:
    CoproductData build_coproduct(int lo, int mid, int hi, bool twisted) const
    {
        const auto& P = L_->poset();
        if (!(P.lt(lo, mid) && P.lt(mid, hi)))
            fail(ErrorKind::NotInterior, "coproduct point must lie strictly inside the interval");
        const OSAlgebra& big = os(lo, hi);
        const OSAlgebra& left = os(lo, mid);
        const OSAlgebra& right = os(mid, hi);
        CoproductData out;
        out.cols.resize(static_cast<size_t>(big.dim()));
        for (long col = 0; col < big.dim(); ++col) {
            const NbcMonomial& m = big.monomial_at(col);
            // split generators: e_v goes left if v <= mid, otherwise to
            // e_{mid v v} on the right (with a sign in the twisted variant);
            // Koszul signs from moving left factors past the right part.
            int sign = 1;
            int right_count = 0;
            std::vector<int> lword, rword;
            for (int a : m) {
                int v = big.atom_element(a);
                if (L_->leq(v, mid)) {
                    if (right_count % 2 == 1) sign = -sign;
                    lword.push_back(left.atom_index_of(v));
                } else {
                    if (twisted) sign = -sign;
                    rword.push_back(right.atom_index_of(L_->join(mid, v)));
                    ++right_count;
                }
            }
            OSCombination lred = left.reduce(lword);
            OSCombination rred = right.reduce(rword);
            for (const auto& [lm, lc] : lred)
                for (const auto& [rm, rc] : rred) {
                    Rat c = lc * rc * sign;
                    if (c != 0)
                        out.cols[static_cast<size_t>(col)].emplace_back(left.flat_index(lm),
                                                                        right.flat_index(rm), c);
                }
        }
        return out;
    }

    const GeometricLattice* L_;
    Caps caps_;
    mutable std::map<std::pair<int, int>, std::unique_ptr<OSAlgebra>> os_;
    mutable std::map<std::tuple<int, int, int, bool>, CoproductData> delta_;
    mutable std::map<std::tuple<int, int, int>, MuData> mu_;
    mutable std::vector<std::vector<int>> chains_;
    mutable std::map<std::vector<int>, long> chain_id_;
};

// Element-level coproduct: Delta_G applied to a combination in OS([lo,hi]),
// expanded in the nbc (x) nbc basis of OS([lo,G]) (x) OS([G,hi]).
struct OSTensorElement {
    const OSAlgebra* left = nullptr;
    const OSAlgebra* right = nullptr;
    std::map<std::pair<NbcMonomial, NbcMonomial>, Rat> terms;
};

inline OSTensorElement os_coproduct(const GerstSystem& sys, int G, const OSElement& a, bool twisted)
{
    if (!a.host) fail(ErrorKind::HostMismatch, "element has no host algebra");
    int lo = a.host->lo(), hi = a.host->hi();
    const CoproductData& cd = sys.coproduct(lo, G, hi, twisted);
    OSTensorElement out;
    out.left = &sys.os(lo, G);
    out.right = &sys.os(G, hi);
    for (const auto& [m, c] : a.terms)
        for (const auto& [lf, rf, c2] : cd.cols[static_cast<size_t>(a.host->flat_index(m))]) {
            auto key = std::make_pair(out.left->monomial_at(lf), out.right->monomial_at(rf));
            out.terms[key] += c * c2;
            if (out.terms[key] == 0) out.terms.erase(key);
        }
    return out;
}

// Bigraded dimension table of Gerst([lo,hi]).
struct GerstSpace {
    int lo = 0, hi = 0;
    int rank = 0;
    long dim = 0;
    // dims[d] = dim of bigrade (rank - d, d); index d is the L-weight
    std::vector<long> dims;

    // Hilbert series in the C-weight variable; equals chi_plus of the interval.
    IntPoly hilbert_c() const
    {
        std::vector<Int> coeffs(static_cast<size_t>(rank) + 1);
        for (int d = 0; d <= rank; ++d) coeffs[static_cast<size_t>(rank - d)] = dims[static_cast<size_t>(d)];
        return IntPoly(std::move(coeffs));
    }
};

inline GerstSpace gerst_space(const GerstSystem& sys, int lo, int hi)
{
    const OSAlgebra& A = sys.os(lo, hi);
    GerstSpace g;
    g.lo = lo;
    g.hi = hi;
    g.rank = A.rank();
    g.dim = A.dim();
    for (int d = 0; d <= A.rank(); ++d) g.dims.push_back(A.dim_of_degree(d));
    return g;
}

struct AxiomCheck {
    bool ok = true;
    std::string witness;
};

// Exhaustive check of the operad associativity axiom on [lo,hi]:
// mu_{G2} (mu_{G1} (x) Id) = mu_{G1} (Id (x) mu_{G2}) for all lo < G1 < G2 < hi.
inline AxiomCheck check_operad_axiom(const GerstSystem& sys, int lo, int hi)
{
    const auto& P = sys.lattice().poset();
    for (int g1 = 0; g1 < P.size(); ++g1) {
        if (!(P.lt(lo, g1) && P.lt(g1, hi))) continue;
        for (int g2 = 0; g2 < P.size(); ++g2) {
            if (!(P.lt(g1, g2) && P.lt(g2, hi))) continue;
            const OSAlgebra& A = sys.os(lo, g1);
            const OSAlgebra& B = sys.os(g1, g2);
            const OSAlgebra& C = sys.os(g2, hi);
            const MuData& mu_low = sys.mu(lo, g1, g2);   // A (x) B -> [lo,g2]
            const MuData& mu_top = sys.mu(lo, g2, hi);   // [lo,g2] (x) C -> [lo,hi]
            const MuData& mu_up = sys.mu(g1, g2, hi);    // B (x) C -> [g1,hi]
            const MuData& mu_bot = sys.mu(lo, g1, hi);   // A (x) [g1,hi] -> [lo,hi]
            for (long a = 0; a < A.dim(); ++a)
                for (long b = 0; b < B.dim(); ++b)
                    for (long c = 0; c < C.dim(); ++c) {
                        std::map<long, Rat> lhs, rhs;
                        if (const auto* t1s = mu_low.find(a, b))
                            for (const auto& [t1, c1] : *t1s)
                                if (const auto* ts = mu_top.find(t1, c))
                                    for (const auto& [t, c2] : *ts) lhs[t] += c1 * c2;
                        if (const auto* t2s = mu_up.find(b, c))
                            for (const auto& [t2, c2] : *t2s)
                                if (const auto* ts = mu_bot.find(a, t2))
                                    for (const auto& [t, c1] : *ts) rhs[t] += c1 * c2;
                        for (auto it = lhs.begin(); it != lhs.end();)
                            it = it->second == 0 ? lhs.erase(it) : std::next(it);
                        for (auto it = rhs.begin(); it != rhs.end();)
                            it = it->second == 0 ? rhs.erase(it) : std::next(it);
                        if (lhs != rhs) {
                            std::ostringstream os;
                            os << "axiom fails at G1=" << P.label(g1) << " G2=" << P.label(g2)
                               << " basis (" << a << "," << b << "," << c << ")";
                            return {false, os.str()};
                        }
                    }
        }
    }
    return {};
}

} // namespace okls
