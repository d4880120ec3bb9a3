#pragma once

// Test-only oracles, independent of the library's recursion paths.
//
// The KLS oracles expand the defining equations chain by chain: unfolding
// bar(f) = kappa f from the top element gives
//   f = sum over chains 0 = G_0 < ... < G_n = 1 of
//       (-1)^n TR_0(kappa_{G_0 G_1} TR_1(kappa_{G_1 G_2} TR_2(...)))
// with TR_q truncating below half of rk[G_q, 1]; unfolding bar(g) = g kappa
// from the bottom gives the mirror formula with truncations at rk[0, G_q].
// Both are computed here by explicit enumeration of all chains, with no
// memoization and no rank ordering, so they exercise none of the code paths
// of kls_right / kls_left.

#include "okls/incidence.hpp"
#include "okls/json_io.hpp"
#include "okls/matroid.hpp"

#include <vector>

namespace okls::testing {

inline IntPoly oracle_kls_right_top(const GradedBoundedPoset& P, const IncidencePolynomial& kappa)
{
    if (P.bottom() == P.top()) return IntPoly(Int(1));
    IntPoly total;
    for (const auto& interior : P.interior_chains()) {
        std::vector<int> chain;
        chain.push_back(P.bottom());
        chain.insert(chain.end(), interior.begin(), interior.end());
        chain.push_back(P.top());
        int n = static_cast<int>(chain.size()) - 1;
        IntPoly v(Int(1));
        for (int q = n - 1; q >= 0; --q) {
            v = kappa.entry(chain[static_cast<size_t>(q)], chain[static_cast<size_t>(q + 1)]) * v;
            v = v.truncate_below_half(P.interval_rank(chain[static_cast<size_t>(q)], P.top()));
        }
        total += (n % 2 == 0) ? v : -v;
    }
    return total;
}

inline IntPoly oracle_kls_left_top(const GradedBoundedPoset& P, const IncidencePolynomial& kappa)
{
    if (P.bottom() == P.top()) return IntPoly(Int(1));
    IntPoly total;
    for (const auto& interior : P.interior_chains()) {
        std::vector<int> chain;
        chain.push_back(P.bottom());
        chain.insert(chain.end(), interior.begin(), interior.end());
        chain.push_back(P.top());
        int n = static_cast<int>(chain.size()) - 1;
        IntPoly v(Int(1));
        for (int q = 1; q <= n; ++q) {
            v = v * kappa.entry(chain[static_cast<size_t>(q - 1)], chain[static_cast<size_t>(q)]);
            v = v.truncate_below_half(P.interval_rank(P.bottom(), chain[static_cast<size_t>(q)]));
        }
        total += (n % 2 == 0) ? v : -v;
    }
    return total;
}

// P_L and Q_L as the acceptance suite binds them: P solves bar(f) = chi f and
// Q is (-1)^rk times the solution of bar(g) = g bar(chi).
inline IntPoly oracle_P(const GradedBoundedPoset& P)
{
    return oracle_kls_right_top(P, chi(P));
}
inline IntPoly oracle_Q(const GradedBoundedPoset& P)
{
    IntPoly q = oracle_kls_left_top(P, bar(chi(P)));
    return P.rank() % 2 == 1 ? -q : q;
}

inline std::string fano_json();

// The acceptance corpus. Kept small enough that every criterion runs in
// seconds; the partition lattice of a 5-set is the stress case.
inline std::vector<std::pair<std::string, GeometricLattice>> corpus(bool include_big = true)
{
    std::vector<std::pair<std::string, GeometricLattice>> out;
    auto add = [&](const std::string& name, MatroidSpec spec) {
        out.emplace_back(name, build_lattice(spec));
    };
    add("uniform:1,1", MatroidSpec::uniform(1, 1));
    add("uniform:1,3", MatroidSpec::uniform(1, 3));
    add("uniform:2,3", MatroidSpec::uniform(2, 3));
    add("uniform:2,4", MatroidSpec::uniform(2, 4));
    add("uniform:3,4", MatroidSpec::uniform(3, 4));
    add("uniform:2,5", MatroidSpec::uniform(2, 5));
    add("uniform:3,5", MatroidSpec::uniform(3, 5));
    add("uniform:4,5", MatroidSpec::uniform(4, 5));
    add("boolean:2", MatroidSpec::boolean(2));
    add("boolean:3", MatroidSpec::boolean(3));
    add("boolean:4", MatroidSpec::boolean(4));
    add("partition:3", MatroidSpec::partition(3));
    add("partition:4", MatroidSpec::partition(4));
    add("graph:K4", MatroidSpec::from_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
    add("graph:C4", MatroidSpec::from_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    // a JSON-ingested rank-3 lattice that is neither uniform nor graphic:
    // the point-line lattice of the Fano plane, entered by its 28 bases
    out.emplace_back("json:fano", lattice_from_json_text(fano_json()));
    if (include_big) add("partition:5", MatroidSpec::partition(5));
    return out;
}

inline std::string fano_json()
{
    // bases = all 3-subsets of {0..6} except the seven lines
    std::vector<std::vector<int>> lines = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                                           {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
    std::string s = R"({"ground": [0,1,2,3,4,5,6], "bases": [)";
    bool first = true;
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b)
            for (int c = b + 1; c < 7; ++c) {
                bool is_line = false;
                for (auto& l : lines)
                    if (l == std::vector<int>{a, b, c}) is_line = true;
                if (is_line) continue;
                if (!first) s += ",";
                s += "[" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "]";
                first = false;
            }
    s += "]}";
    return s;
}

} // namespace okls::testing
