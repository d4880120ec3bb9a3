#pragma once

// Monomials of the free operad on the C/L alphabet, divisibility, admissible
// orders, normal monomials and the quadratic rewriting for the Com and Lie
// presentations. This layer is the verification side of the Groebner story:
// the realized operad lives in gerst.hpp, and the counts produced here
// (1 Com normal monomial per interval, |mu| for Lie, dim OS for Gerst) are
// cross-checked against it.

#include "okls/el_labeling.hpp"
#include "okls/numeric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace okls {

enum class Letter : char { C = 'C', L = 'L' };

// A chain in a host interval with one basis letter per rank-1 step.
struct DecoratedChainMonomial {
    int lo = 0, hi = 0;
    std::vector<int> chain;       // lo = chain.front(), hi = chain.back(), saturated
    std::vector<Letter> letters;  // one per step

    bool operator==(const DecoratedChainMonomial& o) const
    {
        return lo == o.lo && hi == o.hi && chain == o.chain && letters == o.letters;
    }
    bool operator<(const DecoratedChainMonomial& o) const
    {
        return std::tie(lo, hi, chain, letters) < std::tie(o.lo, o.hi, o.chain, o.letters);
    }

    std::string str(const GradedBoundedPoset& P) const
    {
        std::ostringstream os;
        for (size_t k = 0; k + 1 < chain.size(); ++k)
            os << P.label(chain[k]) << " -" << static_cast<char>(letters[k]) << "- ";
        os << P.label(chain.back());
        return os.str();
    }
};

// m1 divides m2 iff m1's interval is [G_p, G_q] for chain points of m2, the
// chains agree there, and so do the decorations.
inline bool divides(const DecoratedChainMonomial& m1, const DecoratedChainMonomial& m2)
{
    auto p_it = std::find(m2.chain.begin(), m2.chain.end(), m1.lo);
    auto q_it = std::find(m2.chain.begin(), m2.chain.end(), m1.hi);
    if (p_it == m2.chain.end() || q_it == m2.chain.end()) return false;
    size_t p = static_cast<size_t>(p_it - m2.chain.begin());
    size_t q = static_cast<size_t>(q_it - m2.chain.begin());
    if (q < p) return false;
    if (q - p != m1.chain.size() - 1) return false;
    for (size_t k = 0; k <= q - p; ++k)
        if (m2.chain[p + k] != m1.chain[k]) return false;
    for (size_t k = 0; k < q - p; ++k)
        if (m2.letters[p + k] != m1.letters[k]) return false;
    return true;
}

// Total orders on decorated chain monomials. compare() returns -1/0/+1; the
// admissibility property (compatibility with operadic products at a common
// split point) is spot-checked in the test suite.
struct AdmissibleOrder {
    std::function<int(const DecoratedChainMonomial&, const DecoratedChainMonomial&)> compare;

    bool less(const DecoratedChainMonomial& a, const DecoratedChainMonomial& b) const
    {
        return compare(a, b) < 0;
    }

    // The bottom-up recipe: compare the elements at the bottom of the chains,
    // then the decorations, then move up; ties broken by chain length.
    static AdmissibleOrder element_lex()
    {
        AdmissibleOrder o;
        o.compare = [](const DecoratedChainMonomial& a, const DecoratedChainMonomial& b) {
            size_t n = std::min(a.chain.size(), b.chain.size());
            for (size_t k = 1; k < n; ++k) {
                if (a.chain[k] != b.chain[k]) return a.chain[k] < b.chain[k] ? -1 : 1;
                if (k - 1 < a.letters.size() && k - 1 < b.letters.size() &&
                    a.letters[k - 1] != b.letters[k - 1])
                    return a.letters[k - 1] == Letter::C ? -1 : 1;
            }
            if (a.chain.size() != b.chain.size()) return a.chain.size() < b.chain.size() ? -1 : 1;
            return 0;
        };
        return o;
    }

    // Order by the EL label word of the chain (lexicographically); with
    // reverse = true the lex-greater word is the smaller monomial. The word
    // order is the one the Com (resp. Lie) rewriting strictly decreases.
    static AdmissibleOrder word_lex(const ELLabeling& lab, bool reverse)
    {
        AdmissibleOrder o;
        o.compare = [&lab, reverse](const DecoratedChainMonomial& a, const DecoratedChainMonomial& b) {
            if (a.chain.size() != b.chain.size()) return a.chain.size() < b.chain.size() ? -1 : 1;
            auto wa = lab.word(a.chain), wb = lab.word(b.chain);
            if (wa == wb) return 0;
            bool lt = wa < wb;
            if (reverse) lt = !lt;
            return lt ? -1 : 1;
        };
        return o;
    }
};

enum class PresentationKind { Com, Lie, Gerst };

// Normal monomials with respect to the quadratic Groebner bases induced by an
// EL-labeling: Com keeps the unique weakly increasing maximal chain, Lie the
// strictly decreasing ones, and Gerst glues a decreasing all-L chain below a
// split point with the increasing all-C chain above it.
inline std::vector<DecoratedChainMonomial> normal_monomials(const GeometricLattice& L, int lo, int hi,
                                                            PresentationKind kind, const ELLabeling& lab,
                                                            const Caps& caps = Caps{})
{
    const auto& P = L.poset();
    std::vector<DecoratedChainMonomial> out;
    auto emit = [&](const std::vector<int>& chain, Letter fill) {
        DecoratedChainMonomial m;
        m.lo = lo;
        m.hi = hi;
        m.chain = chain;
        m.letters.assign(chain.size() - 1, fill);
        out.push_back(std::move(m));
    };
    switch (kind) {
    case PresentationKind::Com:
        for (const auto& c : P.maximal_chains_between(lo, hi, caps))
            if (ELLabeling::increasing(lab.word(c))) emit(c, Letter::C);
        break;
    case PresentationKind::Lie:
        for (const auto& c : P.maximal_chains_between(lo, hi, caps))
            if (ELLabeling::decreasing(lab.word(c))) emit(c, Letter::L);
        break;
    case PresentationKind::Gerst:
        for (int g = 0; g < P.size(); ++g) {
            if (!(P.leq(lo, g) && P.leq(g, hi))) continue;
            std::vector<std::vector<int>> lower, upper;
            for (const auto& c : P.maximal_chains_between(lo, g, caps))
                if (ELLabeling::decreasing(lab.word(c))) lower.push_back(c);
            for (const auto& c : P.maximal_chains_between(g, hi, caps))
                if (ELLabeling::increasing(lab.word(c))) upper.push_back(c);
            for (const auto& lc : lower)
                for (const auto& uc : upper) {
                    DecoratedChainMonomial m;
                    m.lo = lo;
                    m.hi = hi;
                    m.chain = lc;
                    m.chain.insert(m.chain.end(), uc.begin() + 1, uc.end());
                    m.letters.assign(lc.size() - 1, Letter::L);
                    m.letters.insert(m.letters.end(), uc.size() - 1, Letter::C);
                    out.push_back(std::move(m));
                }
        }
        break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

using MonomialCombination = std::map<DecoratedChainMonomial, Rat>;

// Quadratic rewriting to normal form for the pure presentations.
//   Com: a non-increasing adjacent label pair G_{q-1} < G_q < G_{q+1} is
//        replaced by the unique element of the rank-2 subinterval giving the
//        increasing word, with coefficient 1.
//   Lie: an increasing pair is replaced by minus the sum over all the other
//        elements of the rank-2 subinterval.
// Every step strictly decreases the given admissible order; a loop cap guards
// the termination measure.
inline MonomialCombination rewrite_normal_form(const GeometricLattice& L, const DecoratedChainMonomial& m,
                                               PresentationKind kind, const AdmissibleOrder& order,
                                               const ELLabeling& lab, const Caps& caps = Caps{},
                                               unsigned pick_seed = 0)
{
    if (kind == PresentationKind::Gerst)
        fail(ErrorKind::InvalidInput, "rewriting is implemented for the Com and Lie presentations");
    const auto& P = L.poset();
    for (size_t k = 0; k + 1 < m.chain.size(); ++k)
        if (P.interval_rank(m.chain[k], m.chain[k + 1]) != 1)
            fail(ErrorKind::InvalidInput, "monomial must decorate a maximal chain");

    MonomialCombination pending, done;
    pending[m] = Rat(1);
    long steps = 0;
    // pick_seed permutes which violating position is rewritten first, used by
    // the confluence tests
    while (!pending.empty()) {
        if (++steps > caps.rewrite_loop_cap)
            fail(ErrorKind::LoopCapExceeded, "rewriting did not terminate within the loop cap");
        auto it = pending.begin();
        DecoratedChainMonomial cur = it->first;
        Rat coeff = it->second;
        pending.erase(it);
        if (coeff == 0) continue;

        auto w = lab.word(cur.chain);
        std::vector<size_t> bad;
        for (size_t q = 0; q + 1 < w.size(); ++q) {
            bool violates = kind == PresentationKind::Com ? w[q] > w[q + 1] : w[q] < w[q + 1];
            if (violates) bad.push_back(q);
        }
        if (bad.empty()) {
            done[cur] += coeff;
            if (done[cur] == 0) done.erase(cur);
            continue;
        }
        size_t q = bad[pick_seed % bad.size()];
        int below = cur.chain[q], mid = cur.chain[q + 1], above = cur.chain[q + 2];
        std::vector<int> middles = P.open_interval(below, above);
        if (kind == PresentationKind::Com) {
            int best = -1;
            for (int h : middles) {
                if (lab.label(below, h) <= lab.label(h, above)) best = h;
            }
            if (best < 0) fail(ErrorKind::ELVerificationFailed, "rank-2 interval has no increasing chain");
            DecoratedChainMonomial nm = cur;
            nm.chain[q + 1] = best;
            if (!order.less(nm, cur))
                fail(ErrorKind::LoopCapExceeded, "Com rewrite step does not decrease the order");
            pending[nm] += coeff;
            if (pending[nm] == 0) pending.erase(nm);
        } else {
            for (int h : middles) {
                if (h == mid) continue;
                DecoratedChainMonomial nm = cur;
                nm.chain[q + 1] = h;
                if (!order.less(nm, cur))
                    fail(ErrorKind::LoopCapExceeded, "Lie rewrite step does not decrease the order");
                pending[nm] -= coeff;
                if (pending[nm] == 0) pending.erase(nm);
            }
        }
    }
    return done;
}

} // namespace okls
