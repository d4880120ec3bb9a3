#pragma once

// Bar construction of Gerst (and its Com/Lie slices), the four KLS
// subcomplexes, the Koszul complex, and exact cohomology.
//
// A summand of Bar(Gerst)(L) is a chain 0 = G_0 < ... < G_m = 1 together with
// a bigrade (i_k, j_k) per factor, i_k + j_k = rk[G_k, G_{k+1}]; the factor
// space is the dual-nbc slice of L-weight j_k. Cohomological degree is
// rk L - (number of factors); the differential merges adjacent factors
// through mu with sign (-1)^position and raises degree by one. The weight
// grading (total i, or total j for the hatted variants) is preserved, so all
// complexes are assembled one weight slice at a time.
//
// KLS membership is decided twice on every summand: by the half-rank
// inequality families and by the positivity pattern of the associated lattice
// path; a disagreement raises CharacterizationMismatch.

#include "okls/gerst.hpp"
#include "okls/sparse.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace okls {

enum class Variant { Bar, RKLS, LKLS, RKLSHat, LKLSHat };
enum class OperadKind { Gerst, Com, Lie };

inline const char* variant_name(Variant v)
{
    switch (v) {
    case Variant::Bar: return "bar";
    case Variant::RKLS: return "rkls";
    case Variant::LKLS: return "lkls";
    case Variant::RKLSHat: return "rkls-hat";
    case Variant::LKLSHat: return "lkls-hat";
    }
    return "?";
}

struct ChainSummand {
    std::vector<int> chain;                     // full chain, bottom ... top (root ids)
    std::vector<std::pair<int, int>> bigrades;  // (i_k, j_k) per factor

    int factors() const { return static_cast<int>(bigrades.size()); }
    int total_rank() const
    {
        int r = 0;
        for (auto [i, j] : bigrades) r += i + j;
        return r;
    }
    int cohomological_degree() const { return total_rank() - factors(); }
    int weight() const
    {
        int w = 0;
        for (auto [i, j] : bigrades) w += i;
        return w;
    }
    int weight_hat() const
    {
        int w = 0;
        for (auto [i, j] : bigrades) w += j;
        return w;
    }
};

// The lattice path of a summand: phi(0) = 0 at the top; reading the letters
// top-down, an L steps +1 and a C steps -1; only values at chain ranks
// (measured as rk L - rk G) are kept.
struct LatticePath {
    std::vector<int> domain; // ascending, domain.front() = 0
    std::vector<int> value;

    int span() const { return domain.back() - domain.front(); }
    int degree() const { return span() - static_cast<int>(domain.size()) + 1; }
    int weight() const { return (span() - value.back() + value.front()) / 2; }

    int interior_min() const
    {
        int m = 0;
        bool seen = false;
        for (size_t q = 1; q + 1 < domain.size(); ++q)
            if (!seen || value[q] < m) {
                m = value[q];
                seen = true;
            }
        return m;
    }
    std::vector<int> interior_argmin() const
    {
        std::vector<int> out;
        if (domain.size() < 3) return out;
        int m = interior_min();
        for (size_t q = 1; q + 1 < domain.size(); ++q)
            if (value[q] == m) out.push_back(domain[q]);
        return out;
    }
};

inline LatticePath path_of_summand(const ChainSummand& s)
{
    int m = s.factors();
    LatticePath p;
    // domain point for chain index q is rk P - rk G_q; walk from the top
    std::vector<int> dom(static_cast<size_t>(m) + 1), val(static_cast<size_t>(m) + 1);
    int x = 0, phi = 0;
    dom[static_cast<size_t>(m)] = 0;
    val[static_cast<size_t>(m)] = 0;
    for (int q = m - 1; q >= 0; --q) {
        auto [i, j] = s.bigrades[static_cast<size_t>(q)];
        x += i + j;
        phi += j - i;
        dom[static_cast<size_t>(q)] = x;
        val[static_cast<size_t>(q)] = phi;
    }
    p.domain.assign(dom.rbegin(), dom.rend());
    p.value.assign(val.rbegin(), val.rend());
    return p;
}

namespace detail {

inline bool kls_admits_inequalities(const ChainSummand& s, Variant var)
{
    if (var == Variant::Bar) return true;
    bool hat = var == Variant::RKLSHat || var == Variant::LKLSHat;
    bool right = var == Variant::RKLS || var == Variant::RKLSHat;
    int m = s.factors();
    auto designated = [&](int k) {
        auto [i, j] = s.bigrades[static_cast<size_t>(k)];
        return hat ? j : i;
    };
    auto rank_of_factor = [&](int k) {
        auto [i, j] = s.bigrades[static_cast<size_t>(k)];
        return i + j;
    };
    if (right) {
        // sum_{p>=q} i_p < rk[G_q, 1]/2 for q = 1..m-1
        int tail_w = 0, tail_r = 0;
        for (int q = m - 1; q >= 1; --q) {
            tail_w += designated(q);
            tail_r += rank_of_factor(q);
            if (2 * tail_w >= tail_r) return false;
        }
        return true;
    }
    // left: sum_{p<=q} i_p < rk[0, G_{q+1}]/2 for q = 0..m-2
    int head_w = 0, head_r = 0;
    for (int q = 0; q <= m - 2; ++q) {
        head_w += designated(q);
        head_r += rank_of_factor(q);
        if (2 * head_w >= head_r) return false;
    }
    return true;
}

inline bool kls_admits_path(const ChainSummand& s, Variant var)
{
    if (var == Variant::Bar) return true;
    LatticePath p = path_of_summand(s);
    int last = p.value.back();
    for (size_t q = 1; q + 1 < p.domain.size(); ++q) {
        int v = p.value[q];
        bool ok = true;
        switch (var) {
        case Variant::RKLS: ok = v > 0; break;          // strictly positive after 0
        case Variant::RKLSHat: ok = v < 0; break;
        case Variant::LKLS: ok = v < last; break;       // strictly below the last value
        case Variant::LKLSHat: ok = v > last; break;    // never drops to the last value
        case Variant::Bar: break;
        }
        if (!ok) return false;
    }
    return true;
}

} // namespace detail

// Evaluates the half-rank inequality family and the lattice-path
// characterization, asserting they agree.
inline bool kls_filter(const ChainSummand& s, Variant var)
{
    bool by_ineq = detail::kls_admits_inequalities(s, var);
    bool by_path = detail::kls_admits_path(s, var);
    if (by_ineq != by_path) {
        std::ostringstream os;
        os << "inequality test says " << by_ineq << ", path test says " << by_path << " for "
           << variant_name(var);
        fail(ErrorKind::CharacterizationMismatch, os.str());
    }
    return by_ineq;
}

// One admitted (chain, degree-tuple) block of basis vectors. Local indices
// run in mixed radix over the factor slices, last factor fastest.
struct SummandBlock {
    std::vector<int> chain;  // full chain incl. endpoints
    std::vector<int> degs;   // nbc degree of each factor
    ChainSummand summand;    // bigrades derived from degs
    int coh_degree = 0;
    long offset = 0;
    long size = 1;
    std::vector<long> dims;
    std::vector<long> strides;
};

struct GradedChainComplex {
    std::string variant;
    int weight = 0;
    std::vector<long> dims;                         // dims[d] for degree d
    std::vector<SparseMat> diff;                    // diff[d] : C^d -> C^{d+1}
    std::vector<std::vector<SummandBlock>> blocks;  // per degree

    long total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0L); }

    Int euler_from_dims() const
    {
        Int e = 0;
        int sign = 1;
        for (size_t d = 0; d < dims.size(); ++d, sign = -sign) e += sign * Int(dims[d]);
        return e;
    }

    void verify_d_squared() const
    {
        for (size_t d = 0; d + 1 < diff.size(); ++d) {
            if (diff[d].cols == 0 || diff[d + 1].cols == 0) continue;
            if (!diff[d + 1].multiply(diff[d]).is_zero())
                fail(ErrorKind::DSquareNonzero,
                     variant + " differential does not square to zero at degree " + std::to_string(d));
        }
    }
};

struct BettiTable {
    std::string variant;
    int weight = 0;
    std::map<int, long> betti;       // degree -> dim H^degree (zeros omitted)
    std::map<int, long> chain_dims;  // degree -> dim C^degree

    long betti_at(int d) const
    {
        auto it = betti.find(d);
        return it == betti.end() ? 0 : it->second;
    }
    Int euler() const
    {
        Int e = 0;
        for (auto [d, b] : betti) e += (d % 2 == 0 ? Int(b) : Int(-b));
        return e;
    }
    bool concentrated_in(int degree) const
    {
        for (auto [d, b] : betti)
            if (d != degree && b != 0) return false;
        return true;
    }
    bool acyclic() const { return betti.empty(); }
};

inline BettiTable cohomology(const GradedChainComplex& c)
{
    BettiTable t;
    t.variant = c.variant;
    t.weight = c.weight;
    int n = static_cast<int>(c.dims.size());
    std::vector<long> ranks(static_cast<size_t>(n), 0); // rank of diff[d]
    for (int d = 0; d < n; ++d)
        if (d + 1 < n && c.dims[static_cast<size_t>(d)] > 0 && c.dims[static_cast<size_t>(d + 1)] > 0)
            ranks[static_cast<size_t>(d)] = c.diff[static_cast<size_t>(d)].rank();
    for (int d = 0; d < n; ++d) {
        long dim = c.dims[static_cast<size_t>(d)];
        t.chain_dims[d] = dim;
        long b = dim - ranks[static_cast<size_t>(d)] - (d > 0 ? ranks[static_cast<size_t>(d - 1)] : 0);
        if (b != 0) t.betti[d] = b;
    }
    return t;
}

namespace detail {

struct BlockKey {
    long chain_id;
    std::vector<int> degs;
    bool operator<(const BlockKey& o) const
    {
        if (chain_id != o.chain_id) return chain_id < o.chain_id;
        return degs < o.degs;
    }
};

inline void enumerate_deg_tuples(const std::vector<int>& ranks, OperadKind kind, int target_total,
                                 std::vector<int>& cur, int pos, int acc,
                                 std::vector<std::vector<int>>& out)
{
    if (pos == static_cast<int>(ranks.size())) {
        if (acc == target_total) out.push_back(cur);
        return;
    }
    int r = ranks[static_cast<size_t>(pos)];
    int lo = 0, hi = r;
    if (kind == OperadKind::Com) hi = 0;
    if (kind == OperadKind::Lie) lo = r;
    for (int d = lo; d <= hi; ++d) {
        if (acc + d > target_total) break;
        cur.push_back(d);
        enumerate_deg_tuples(ranks, kind, target_total, cur, pos + 1, acc + d, out);
        cur.pop_back();
    }
}

} // namespace detail

// Assemble the weight slice of Bar (variant = Bar) or of a KLS subcomplex.
// For the hatted variants the weight parameter selects the L-weight slice;
// otherwise it selects the C-weight slice.
inline GradedChainComplex build_complex(const GerstSystem& sys, int weight, Variant var,
                                        OperadKind kind = OperadKind::Gerst)
{
    const GeometricLattice& L = sys.lattice();
    int R = L.rank();
    bool hat = var == Variant::RKLSHat || var == Variant::LKLSHat;
    // total nbc degree of a tuple: hatted weight = sum j = sum degs;
    // C-weight = R - sum degs
    int target_degsum = hat ? weight : R - weight;

    GradedChainComplex out;
    out.variant = std::string(variant_name(var)) +
                  (kind == OperadKind::Com ? "(com)" : kind == OperadKind::Lie ? "(lie)" : "");
    out.weight = weight;
    int ndeg = std::max(R, 1);
    out.dims.assign(static_cast<size_t>(ndeg), 0);
    out.blocks.assign(static_cast<size_t>(ndeg), {});
    // the bar construction indexes non-singleton intervals only
    if (R == 0 || target_degsum < 0 || target_degsum > R) {
        out.diff.assign(static_cast<size_t>(ndeg), SparseMat(0, 0));
        return out;
    }

    const auto& chains = sys.interior_chains();
    std::map<detail::BlockKey, std::pair<int, size_t>> index; // key -> (degree, block position)

    for (size_t cid = 0; cid < chains.size(); ++cid) {
        std::vector<int> full;
        full.push_back(L.bottom());
        full.insert(full.end(), chains[cid].begin(), chains[cid].end());
        full.push_back(L.top());
        int m = static_cast<int>(full.size()) - 1;
        std::vector<int> ranks(static_cast<size_t>(m));
        for (int k = 0; k < m; ++k)
            ranks[static_cast<size_t>(k)] =
                L.poset().interval_rank(full[static_cast<size_t>(k)], full[static_cast<size_t>(k + 1)]);

        std::vector<std::vector<int>> tuples;
        std::vector<int> cur;
        detail::enumerate_deg_tuples(ranks, kind, target_degsum, cur, 0, 0, tuples);
        for (const auto& degs : tuples) {
            ChainSummand s;
            s.chain = full;
            for (int k = 0; k < m; ++k)
                s.bigrades.emplace_back(ranks[static_cast<size_t>(k)] - degs[static_cast<size_t>(k)],
                                        degs[static_cast<size_t>(k)]);
            if (!kls_filter(s, var)) continue;

            SummandBlock b;
            b.chain = full;
            b.degs = degs;
            b.summand = s;
            b.coh_degree = R - m;
            b.size = 1;
            for (int k = 0; k < m; ++k) {
                long dk = sys.os(full[static_cast<size_t>(k)], full[static_cast<size_t>(k + 1)])
                              .dim_of_degree(degs[static_cast<size_t>(k)]);
                b.dims.push_back(dk);
                b.size *= dk;
            }
            if (b.size == 0) continue;
            b.strides.assign(static_cast<size_t>(m), 1);
            for (int k = m - 2; k >= 0; --k)
                b.strides[static_cast<size_t>(k)] =
                    b.strides[static_cast<size_t>(k + 1)] * b.dims[static_cast<size_t>(k + 1)];
            b.offset = out.dims[static_cast<size_t>(b.coh_degree)];
            out.dims[static_cast<size_t>(b.coh_degree)] += b.size;
            index[{static_cast<long>(cid), degs}] = {b.coh_degree,
                                                     out.blocks[static_cast<size_t>(b.coh_degree)].size()};
            out.blocks[static_cast<size_t>(b.coh_degree)].push_back(std::move(b));
        }
    }

    // differentials
    out.diff.assign(static_cast<size_t>(ndeg), SparseMat(0, 0));
    for (int d = 0; d + 1 < ndeg; ++d)
        out.diff[static_cast<size_t>(d)] =
            SparseMat(out.dims[static_cast<size_t>(d + 1)], out.dims[static_cast<size_t>(d)]);
    if (ndeg > 0) out.diff[static_cast<size_t>(ndeg - 1)] = SparseMat(0, out.dims[static_cast<size_t>(ndeg - 1)]);

    for (int d = 0; d + 1 < ndeg; ++d) {
        SparseMat& D = out.diff[static_cast<size_t>(d)];
        for (const auto& b : out.blocks[static_cast<size_t>(d)]) {
            int m = static_cast<int>(b.degs.size());
            for (int p = 0; p + 1 < m; ++p) {
                int sign = (p % 2 == 0) ? 1 : -1;
                // target: drop chain point p+1, merge factor degrees
                std::vector<int> tchain = b.chain;
                tchain.erase(tchain.begin() + p + 1);
                std::vector<int> tinterior(tchain.begin() + 1, tchain.end() - 1);
                long tcid = sys.chain_id(tinterior);
                std::vector<int> tdegs = b.degs;
                tdegs[static_cast<size_t>(p)] += tdegs[static_cast<size_t>(p + 1)];
                tdegs.erase(tdegs.begin() + p + 1);

                const OSAlgebra& osA = sys.os(b.chain[static_cast<size_t>(p)], b.chain[static_cast<size_t>(p + 1)]);
                const OSAlgebra& osB =
                    sys.os(b.chain[static_cast<size_t>(p + 1)], b.chain[static_cast<size_t>(p + 2)]);
                const OSAlgebra& osT =
                    sys.os(b.chain[static_cast<size_t>(p)], b.chain[static_cast<size_t>(p + 2)]);
                const MuData& mu = sys.mu(b.chain[static_cast<size_t>(p)], b.chain[static_cast<size_t>(p + 1)],
                                          b.chain[static_cast<size_t>(p + 2)]);

                // structure constants restricted to the (deg_p, deg_{p+1}) slices
                int da = b.degs[static_cast<size_t>(p)], db = b.degs[static_cast<size_t>(p + 1)];
                long dimA = b.dims[static_cast<size_t>(p)], dimB = b.dims[static_cast<size_t>(p + 1)];
                std::vector<std::tuple<long, long, long, Rat>> local; // (aloc, bloc, tloc, coeff)
                for (long a = 0; a < dimA; ++a)
                    for (long bb = 0; bb < dimB; ++bb) {
                        const auto* hits = mu.find(osA.flat_offset(da) + a, osB.flat_offset(db) + bb);
                        if (!hits) continue;
                        for (const auto& [t, c] : *hits)
                            local.emplace_back(a, bb, t - osT.flat_offset(da + db), c);
                    }
                if (local.empty()) continue;

                auto tit = index.find({tcid, tdegs});
                if (tit == index.end())
                    fail(ErrorKind::SubcomplexViolation,
                         out.variant + ": differential leaves the admitted span at weight " +
                             std::to_string(weight));
                const SummandBlock& tb =
                    out.blocks[static_cast<size_t>(tit->second.first)][tit->second.second];

                // iterate over assignments of the untouched factors
                std::vector<long> locals(static_cast<size_t>(m), 0);
                bool done = false;
                while (!done) {
                    long src_rest = b.offset, dst_rest = tb.offset;
                    for (int k = 0; k < m; ++k) {
                        if (k == p || k == p + 1) continue;
                        src_rest += locals[static_cast<size_t>(k)] * b.strides[static_cast<size_t>(k)];
                        int tk = k < p ? k : k - 1; // position in the target block
                        dst_rest += locals[static_cast<size_t>(k)] * tb.strides[static_cast<size_t>(tk)];
                    }
                    for (const auto& [a, bb, t, c] : local) {
                        long src = src_rest + a * b.strides[static_cast<size_t>(p)] +
                                   bb * b.strides[static_cast<size_t>(p + 1)];
                        long dst = dst_rest + t * tb.strides[static_cast<size_t>(p)];
                        D.add(dst, src, c * sign);
                    }
                    // odometer over factors other than p, p+1
                    done = true;
                    for (int k = m - 1; k >= 0; --k) {
                        if (k == p || k == p + 1) continue;
                        if (++locals[static_cast<size_t>(k)] < b.dims[static_cast<size_t>(k)]) {
                            done = false;
                            break;
                        }
                        locals[static_cast<size_t>(k)] = 0;
                    }
                }
            }
        }
        D.compress();
    }
    out.verify_d_squared();
    return out;
}

inline GradedChainComplex bar_complex(const GerstSystem& sys, int weight,
                                      OperadKind kind = OperadKind::Gerst)
{
    return build_complex(sys, weight, Variant::Bar, kind);
}

inline GradedChainComplex kls_complex(const GerstSystem& sys, int weight, Variant var)
{
    return build_complex(sys, weight, var, OperadKind::Gerst);
}

// --- Koszul complex -------------------------------------------------------
//
// Kos(Gerst)(L) = (+)_G Gerst([0,G]) (x) twOS([G,1]) with differential
// d = sum_{G' covers G} (mu_G (x) Id) o (Id (x) tau (x) Id) o (Id (x) Delta^tw_{G'}).
// tau lives on rank-1 intervals only and sends the twOS basis 1 -> L and
// e -> C. Degree = rk G; the weight (C-weight of the Gerst part plus nbc
// degree of the twOS part) is preserved.

inline GradedChainComplex koszul_complex(const GerstSystem& sys, int weight)
{
    const GeometricLattice& L = sys.lattice();
    const auto& P = L.poset();
    int R = L.rank();
    int bot = L.bottom(), top = L.top();

    GradedChainComplex out;
    out.variant = "kos";
    out.weight = weight;
    out.dims.assign(static_cast<size_t>(R) + 1, 0);
    out.blocks.assign(static_cast<size_t>(R) + 1, {});
    if (R == 0) { // defined over non-singleton intervals only
        out.dims.assign(1, 0);
        out.diff.assign(1, SparseMat(0, 0));
        return out;
    }

    // per element: list of (deg_beta, deg_omega) blocks within this weight
    struct GBlock {
        int degb, dego;
        long offset;
        long dimb, dimo;
    };
    std::map<int, std::vector<GBlock>> gblocks;
    for (int g = 0; g < P.size(); ++g) {
        const OSAlgebra& A = sys.os(bot, g);
        const OSAlgebra& W = sys.os(g, top);
        int rg = P.rank_of(g);
        for (int db = 0; db <= A.rank(); ++db) {
            int dw = weight - (rg - db);
            if (dw < 0 || dw > W.rank()) continue;
            GBlock blk;
            blk.degb = db;
            blk.dego = dw;
            blk.dimb = A.dim_of_degree(db);
            blk.dimo = W.dim_of_degree(dw);
            if (blk.dimb == 0 || blk.dimo == 0) continue;
            blk.offset = out.dims[static_cast<size_t>(rg)];
            out.dims[static_cast<size_t>(rg)] += blk.dimb * blk.dimo;
            gblocks[g].push_back(blk);
        }
    }

    auto locate = [&](int g, long bflat, long wflat) -> long {
        const OSAlgebra& A = sys.os(bot, g);
        const OSAlgebra& W = sys.os(g, top);
        int db = A.degree_of_flat(bflat);
        int dw = W.degree_of_flat(wflat);
        for (const auto& blk : gblocks[g])
            if (blk.degb == db && blk.dego == dw)
                return blk.offset + (bflat - A.flat_offset(db)) * blk.dimo + (wflat - W.flat_offset(dw));
        return -1;
    };

    out.diff.assign(static_cast<size_t>(R) + 1, SparseMat(0, 0));
    for (int j = 0; j <= R; ++j) {
        long next = j + 1 <= R ? out.dims[static_cast<size_t>(j + 1)] : 0;
        out.diff[static_cast<size_t>(j)] = SparseMat(next, out.dims[static_cast<size_t>(j)]);
    }

    for (int g = 0; g < P.size(); ++g) {
        if (gblocks.find(g) == gblocks.end()) continue;
        const OSAlgebra& A = sys.os(bot, g);
        const OSAlgebra& W = sys.os(g, top);
        int rg = P.rank_of(g);
        for (int gp : P.covers_up(g)) {
            // Delta^tw_{gp} entries on OS([g,1]): (w1 in OS([g,gp]), w2 in OS([gp,1]))
            const OSAlgebra& Wg = sys.os(g, gp);
            // tau sends the empty monomial to L (dual of the degree-1 monomial,
            // flat 1) and the degree-1 monomial to C (flat 0)
            auto tau_flat = [](long w1) { return 1 - w1; };
            const MuData* mu = g == bot ? nullptr : &sys.mu(bot, g, gp);

            auto emit = [&](long bflat, long wflat, long w1, long w2, const Rat& c) {
                long col = locate(g, bflat, wflat);
                if (col < 0) return;
                long tf = tau_flat(w1);
                if (g == bot) {
                    long row = locate(gp, tf, w2);
                    if (row >= 0) out.diff[static_cast<size_t>(rg)].add(row, col, c);
                    return;
                }
                if (const auto* hits = mu->find(bflat, tf))
                    for (const auto& [t, c2] : *hits) {
                        long row = locate(gp, t, w2);
                        if (row >= 0) out.diff[static_cast<size_t>(rg)].add(row, col, c * c2);
                    }
            };

            if (gp == top) {
                // Delta_top(w) = w (x) 1; needs rk[g, top] = 1 for tau
                if (W.rank() != 1) continue;
                for (long w = 0; w < W.dim(); ++w)
                    for (long b = 0; b < A.dim(); ++b) emit(b, w, w, 0, Rat(1));
            } else {
                const CoproductData& cd = sys.coproduct(g, gp, top, true);
                for (long w = 0; w < W.dim(); ++w)
                    for (const auto& [w1, w2, c] : cd.cols[static_cast<size_t>(w)]) {
                        if (Wg.degree_of_flat(w1) > 1) continue; // rank-1 interval, cannot happen
                        for (long b = 0; b < A.dim(); ++b) emit(b, w, w1, w2, c);
                    }
            }
        }
    }
    for (auto& D : out.diff) D.compress();
    out.verify_d_squared();
    return out;
}

// --- KLS polynomials from Betti numbers ------------------------------------

struct KLFromComplexes {
    IntPoly P, Q;
    std::map<int, BettiTable> rkls_tables;     // weight -> cohomology of RKLS_(w)
    std::map<int, BettiTable> lkls_hat_tables; // weight -> cohomology of LKLS-hat_(w)
};

// Coefficient i of P is dim H^i(RKLS_(i)) and of Q is dim H^i(LKLS-hat_(i)),
// for 2i < rk. Cohomology escaping the predicted degree is an error, reported
// loudly rather than corrected.
inline KLFromComplexes kl_via_complexes(const GerstSystem& sys)
{
    int R = sys.lattice().rank();
    KLFromComplexes out;
    if (R == 0) { // singleton interval: both polynomials are 1 by definition
        out.P = IntPoly(Int(1));
        out.Q = IntPoly(Int(1));
        return out;
    }
    std::vector<Int> pc, qc;
    for (int i = 0; 2 * i < R; ++i) {
        BettiTable r = cohomology(kls_complex(sys, i, Variant::RKLS));
        BettiTable l = cohomology(kls_complex(sys, i, Variant::LKLSHat));
        if (!r.concentrated_in(i))
            fail(ErrorKind::ConcentrationFailure,
                 "RKLS weight " + std::to_string(i) + " has cohomology outside degree " + std::to_string(i));
        if (!l.concentrated_in(i))
            fail(ErrorKind::ConcentrationFailure,
                 "LKLS-hat weight " + std::to_string(i) + " has cohomology outside degree " + std::to_string(i));
        pc.push_back(Int(r.betti_at(i)));
        qc.push_back(Int(l.betti_at(i)));
        out.rkls_tables[i] = std::move(r);
        out.lkls_hat_tables[i] = std::move(l);
    }
    out.P = IntPoly(std::move(pc));
    out.Q = IntPoly(std::move(qc));
    return out;
}

} // namespace okls
