#pragma once

// The incidence-algebra layer: families of integer polynomials indexed by the
// intervals of a graded bounded poset, the rank-reversal involution, P-kernels
// and Stanley's recursion for the left/right KLS polynomials.
//
// Conventions. bar(f)_{xy} = t^{rk[x,y]} f_{xy}(1/t). The right KLS polynomial
// f of a kernel kappa solves bar(f) = kappa * f, the left one solves
// bar(g) = g * kappa; both have diagonal 1 and degree < rk/2 strictly off the
// diagonal, and both are verified against their defining equation after the
// recursion runs.

#include "okls/poly.hpp"
#include "okls/poset.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace okls {

class IncidencePolynomial {
public:
    IncidencePolynomial() = default;
    explicit IncidencePolynomial(const GradedBoundedPoset& host)
        : host_(&host), entries_(static_cast<size_t>(host.size()) * static_cast<size_t>(host.size()))
    {
    }

    const GradedBoundedPoset& host() const { return *host_; }
    bool same_host(const IncidencePolynomial& o) const { return host_ == o.host_; }

    const IntPoly& entry(int x, int y) const
    {
        if (!host_->leq(x, y)) fail(ErrorKind::NotComparable, "entry requested for incomparable pair");
        return entries_[idx(x, y)];
    }
    void set_entry(int x, int y, IntPoly p)
    {
        if (!host_->leq(x, y)) fail(ErrorKind::NotComparable, "entry set for incomparable pair");
        entries_[idx(x, y)] = std::move(p);
    }

    // deg f_{xy} <= rk[x,y]
    bool in_I_rk() const
    {
        for (auto [x, y] : comparable_pairs())
            if (entry(x, y).degree() > host_->interval_rank(x, y)) return false;
        return true;
    }
    // deg f_{xy} < rk[x,y]/2 for x < y
    bool in_I_half() const
    {
        for (auto [x, y] : comparable_pairs())
            if (x != y && 2 * entry(x, y).degree() >= host_->interval_rank(x, y) &&
                !entry(x, y).is_zero())
                return false;
        return true;
    }

    std::vector<std::pair<int, int>> comparable_pairs() const
    {
        std::vector<std::pair<int, int>> out;
        for (int x = 0; x < host_->size(); ++x)
            for (int y = 0; y < host_->size(); ++y)
                if (host_->leq(x, y)) out.emplace_back(x, y);
        return out;
    }

    bool operator==(const IncidencePolynomial& o) const
    {
        return host_ == o.host_ && entries_ == o.entries_;
    }

private:
    size_t idx(int x, int y) const
    {
        return static_cast<size_t>(x) * static_cast<size_t>(host_->size()) + static_cast<size_t>(y);
    }

    const GradedBoundedPoset* host_ = nullptr;
    std::vector<IntPoly> entries_;
};

inline IncidencePolynomial delta(const GradedBoundedPoset& P)
{
    IncidencePolynomial d(P);
    for (int x = 0; x < P.size(); ++x) d.set_entry(x, x, IntPoly(Int(1)));
    return d;
}

// The characteristic polynomial of every interval: chi_{xy} = sum mu(x,z) t^{rk[z,y]}.
inline IncidencePolynomial chi(const GradedBoundedPoset& P)
{
    IncidencePolynomial c(P);
    for (int x = 0; x < P.size(); ++x)
        for (int y = 0; y < P.size(); ++y) {
            if (!P.leq(x, y)) continue;
            IntPoly p;
            for (int z = 0; z < P.size(); ++z)
                if (P.leq(x, z) && P.leq(z, y))
                    p += IntPoly::monomial(P.interval_rank(z, y), P.mobius(x, z));
            c.set_entry(x, y, std::move(p));
        }
    return c;
}

inline IncidencePolynomial chi_plus(const GradedBoundedPoset& P)
{
    IncidencePolynomial c = chi(P);
    for (auto [x, y] : c.comparable_pairs()) c.set_entry(x, y, c.entry(x, y).abs_coeffs());
    return c;
}

inline IncidencePolynomial bar(const IncidencePolynomial& f)
{
    IncidencePolynomial out(f.host());
    for (auto [x, y] : f.comparable_pairs()) {
        int r = f.host().interval_rank(x, y);
        if (f.entry(x, y).degree() > r)
            fail(ErrorKind::DegreeExceedsRank,
                 "entry at (" + f.host().label(x) + ", " + f.host().label(y) + ") has degree " +
                     std::to_string(f.entry(x, y).degree()) + " > rank " + std::to_string(r));
        out.set_entry(x, y, f.entry(x, y).reversed(r));
    }
    return out;
}

inline IncidencePolynomial convolve(const IncidencePolynomial& f, const IncidencePolynomial& g)
{
    if (!f.same_host(g)) fail(ErrorKind::HostMismatch, "convolution across different posets");
    const auto& P = f.host();
    IncidencePolynomial out(P);
    for (int x = 0; x < P.size(); ++x)
        for (int z = 0; z < P.size(); ++z) {
            if (!P.leq(x, z)) continue;
            IntPoly p;
            for (int y = 0; y < P.size(); ++y)
                if (P.leq(x, y) && P.leq(y, z)) p += f.entry(x, y) * g.entry(y, z);
            out.set_entry(x, z, std::move(p));
        }
    return out;
}

struct KernelCheck {
    bool ok = true;
    std::pair<int, int> witness{-1, -1};
};

// kappa is a P-kernel iff kappa_{xx} = 1 and bar(kappa) * kappa = delta.
inline KernelCheck is_kernel(const IncidencePolynomial& kappa)
{
    const auto& P = kappa.host();
    for (int x = 0; x < P.size(); ++x)
        if (kappa.entry(x, x) != IntPoly(Int(1))) return {false, {x, x}};
    IncidencePolynomial prod = convolve(bar(kappa), kappa);
    for (auto [x, y] : kappa.comparable_pairs()) {
        const IntPoly& want = x == y ? IntPoly(Int(1)) : IntPoly();
        if (prod.entry(x, y) != want) return {false, {x, y}};
    }
    return {};
}

namespace detail {

// Comparable pairs sorted by interval rank; the recursion for f_{xy} only
// needs entries on strictly smaller intervals.
inline std::vector<std::pair<int, int>> pairs_by_rank(const GradedBoundedPoset& P)
{
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < P.size(); ++x)
        for (int y = 0; y < P.size(); ++y)
            if (P.leq(x, y)) pairs.emplace_back(x, y);
    std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
        return P.interval_rank(a.first, a.second) < P.interval_rank(b.first, b.second);
    });
    return pairs;
}

inline void require_kernel(const IncidencePolynomial& kappa)
{
    auto check = is_kernel(kappa);
    if (!check.ok)
        fail(ErrorKind::KernelCheckFailed,
             "not a P-kernel; witness interval (" + kappa.host().label(check.witness.first) + ", " +
                 kappa.host().label(check.witness.second) + ")");
}

} // namespace detail

// Right KLS polynomial: unique f with diagonal 1, deg f_{xy} < rk/2, and
// bar(f) = kappa * f. Recursion: f_{xz} = TR(-sum_{x<y<=z} kappa_{xy} f_{yz}).
inline IncidencePolynomial kls_right(const IncidencePolynomial& kappa)
{
    detail::require_kernel(kappa);
    const auto& P = kappa.host();
    IncidencePolynomial f(P);
    for (auto [x, z] : detail::pairs_by_rank(P)) {
        if (x == z) {
            f.set_entry(x, z, IntPoly(Int(1)));
            continue;
        }
        IntPoly s;
        for (int y = 0; y < P.size(); ++y)
            if (P.lt(x, y) && P.leq(y, z)) s += kappa.entry(x, y) * f.entry(y, z);
        f.set_entry(x, z, (-s).truncate_below_half(P.interval_rank(x, z)));
    }
    if (!(bar(f) == convolve(kappa, f)))
        fail(ErrorKind::RecursionInconsistent, "right KLS output fails bar(f) = kappa*f");
    return f;
}

// Left KLS polynomial: bar(g) = g * kappa; g_{xz} = TR(-sum_{x<=y<z} g_{xy} kappa_{yz}).
inline IncidencePolynomial kls_left(const IncidencePolynomial& kappa)
{
    detail::require_kernel(kappa);
    const auto& P = kappa.host();
    IncidencePolynomial g(P);
    for (auto [x, z] : detail::pairs_by_rank(P)) {
        if (x == z) {
            g.set_entry(x, z, IntPoly(Int(1)));
            continue;
        }
        IntPoly s;
        for (int y = 0; y < P.size(); ++y)
            if (P.leq(x, y) && P.lt(y, z)) s += g.entry(x, y) * kappa.entry(y, z);
        g.set_entry(x, z, (-s).truncate_below_half(P.interval_rank(x, z)));
    }
    if (!(bar(g) == convolve(g, kappa)))
        fail(ErrorKind::RecursionInconsistent, "left KLS output fails bar(g) = g*kappa");
    return g;
}

// KLS polynomials of bar(kappa): the inverse right/left KLS pair.
inline std::pair<IncidencePolynomial, IncidencePolynomial> inverse_kls(const IncidencePolynomial& kappa)
{
    IncidencePolynomial k = bar(kappa);
    return {kls_right(k), kls_left(k)};
}

} // namespace okls
