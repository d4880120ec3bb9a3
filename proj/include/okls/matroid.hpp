#pragma once

// Matroid ingestion: circuits, bases, graphs, uniform/boolean/partition
// parameters, or an explicit cover list. Everything except the cover path
// goes through a rank oracle and the closure operator to enumerate the
// lattice of flats.

#include "okls/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace okls {

struct MatroidSpec {
    enum class Kind { Covers, Circuits, Bases, Graph, Uniform, Boolean, Partition };
    Kind kind = Kind::Boolean;

    // Covers
    std::vector<std::string> elements;
    std::vector<std::pair<int, int>> covers;
    // Circuits / Bases over a ground set
    std::vector<std::string> ground;
    std::vector<std::vector<int>> sets;
    // Graph (cycle matroid on the edge list)
    int graph_vertices = 0;
    std::vector<std::pair<int, int>> edges;
    // Parameters
    int uniform_k = 0, uniform_n = 0;
    int boolean_n = 0;
    int partition_n = 0;

    static MatroidSpec from_covers(std::vector<std::string> elements,
                                   std::vector<std::pair<int, int>> covers)
    {
        MatroidSpec s;
        s.kind = Kind::Covers;
        s.elements = std::move(elements);
        s.covers = std::move(covers);
        return s;
    }
    static MatroidSpec from_circuits(std::vector<std::string> ground, std::vector<std::vector<int>> circuits)
    {
        MatroidSpec s;
        s.kind = Kind::Circuits;
        s.ground = std::move(ground);
        s.sets = std::move(circuits);
        return s;
    }
    static MatroidSpec from_bases(std::vector<std::string> ground, std::vector<std::vector<int>> bases)
    {
        MatroidSpec s;
        s.kind = Kind::Bases;
        s.ground = std::move(ground);
        s.sets = std::move(bases);
        return s;
    }
    static MatroidSpec from_graph(int vertices, std::vector<std::pair<int, int>> edges)
    {
        MatroidSpec s;
        s.kind = Kind::Graph;
        s.graph_vertices = vertices;
        s.edges = std::move(edges);
        return s;
    }
    static MatroidSpec uniform(int k, int n)
    {
        MatroidSpec s;
        s.kind = Kind::Uniform;
        s.uniform_k = k;
        s.uniform_n = n;
        return s;
    }
    static MatroidSpec boolean(int n)
    {
        MatroidSpec s;
        s.kind = Kind::Boolean;
        s.boolean_n = n;
        return s;
    }
    static MatroidSpec partition(int n)
    {
        MatroidSpec s;
        s.kind = Kind::Partition;
        s.partition_n = n;
        return s;
    }

    void validate() const;
};

namespace detail {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return __builtin_popcountll(m); }

struct RankOracle {
    int m = 0; // ground size
    std::function<int(Mask)> rank;

    Mask closure(Mask s) const
    {
        int r = rank(s);
        Mask out = s;
        for (int e = 0; e < m; ++e)
            if (!((s >> e) & 1) && rank(s | (Mask(1) << e)) == r) out |= Mask(1) << e;
        return out;
    }
};

inline RankOracle circuit_oracle(int m, const std::vector<Mask>& circuits)
{
    RankOracle o;
    o.m = m;
    auto independent = [circuits](Mask s) {
        for (Mask c : circuits)
            if ((c & s) == c) return false;
        return true;
    };
    o.rank = [m, independent](Mask s) {
        // greedy: matroid rank is the size of any maximal independent subset
        Mask t = 0;
        int r = 0;
        for (int e = 0; e < m; ++e)
            if ((s >> e) & 1) {
                if (independent(t | (Mask(1) << e))) {
                    t |= Mask(1) << e;
                    ++r;
                }
            }
        return r;
    };
    return o;
}

inline RankOracle basis_oracle(int m, const std::vector<Mask>& bases)
{
    RankOracle o;
    o.m = m;
    o.rank = [bases](Mask s) {
        int r = 0;
        for (Mask b : bases) r = std::max(r, popcount(b & s));
        return r;
    };
    return o;
}

inline RankOracle graph_oracle(int vertices, const std::vector<std::pair<int, int>>& edges)
{
    RankOracle o;
    o.m = static_cast<int>(edges.size());
    o.rank = [vertices, edges](Mask s) {
        std::vector<int> parent(static_cast<size_t>(vertices));
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            return x;
        };
        int r = 0;
        for (size_t e = 0; e < edges.size(); ++e)
            if ((s >> e) & 1) {
                int a = find(edges[e].first), b = find(edges[e].second);
                if (a != b) {
                    parent[static_cast<size_t>(a)] = b;
                    ++r;
                }
            }
        return r;
    };
    return o;
}

inline RankOracle uniform_oracle(int k, int n)
{
    RankOracle o;
    o.m = n;
    o.rank = [k](Mask s) { return std::min(popcount(s), k); };
    return o;
}

} // namespace detail

inline void MatroidSpec::validate() const
{
    using detail::Mask;
    auto to_mask = [](const std::vector<int>& v, int m) {
        Mask out = 0;
        for (int e : v) {
            if (e < 0 || e >= m) fail(ErrorKind::InvalidInput, "ground index out of range");
            out |= Mask(1) << e;
        }
        return out;
    };
    switch (kind) {
    case Kind::Circuits: {
        int m = static_cast<int>(ground.size());
        if (m > 63) fail(ErrorKind::SizeGuardExceeded, "ground set larger than 63");
        std::vector<Mask> cs;
        for (const auto& c : sets) {
            if (c.empty()) fail(ErrorKind::InvalidInput, "empty circuit");
            cs.push_back(to_mask(c, m));
        }
        for (size_t i = 0; i < cs.size(); ++i)
            for (size_t j = 0; j < cs.size(); ++j)
                if (i != j && (cs[i] & cs[j]) == cs[i])
                    fail(ErrorKind::InvalidInput, "circuits are not a clutter (containment between circuits)");
        // circuit exchange: for C1 != C2 and e in the intersection,
        // (C1 u C2) - e contains a circuit
        for (size_t i = 0; i < cs.size(); ++i)
            for (size_t j = i + 1; j < cs.size(); ++j) {
                Mask inter = cs[i] & cs[j];
                for (int e = 0; e < m; ++e)
                    if ((inter >> e) & 1) {
                        Mask u = (cs[i] | cs[j]) & ~(Mask(1) << e);
                        bool found = false;
                        for (Mask c : cs)
                            if ((c & u) == c) found = true;
                        if (!found)
                            fail(ErrorKind::InvalidInput,
                                 "circuit exchange fails for circuits " + std::to_string(i) + "," +
                                     std::to_string(j));
                    }
            }
        break;
    }
    case Kind::Bases: {
        int m = static_cast<int>(ground.size());
        if (m > 63) fail(ErrorKind::SizeGuardExceeded, "ground set larger than 63");
        if (sets.empty()) fail(ErrorKind::InvalidInput, "no bases given");
        std::vector<Mask> bs;
        for (const auto& b : sets) bs.push_back(to_mask(b, m));
        for (Mask b : bs)
            if (detail::popcount(b) != detail::popcount(bs[0]))
                fail(ErrorKind::InvalidInput, "bases of unequal cardinality");
        std::set<Mask> basis_set(bs.begin(), bs.end());
        for (Mask b1 : bs)
            for (Mask b2 : bs)
                for (int x = 0; x < m; ++x)
                    if (((b1 >> x) & 1) && !((b2 >> x) & 1)) {
                        bool found = false;
                        for (int y = 0; y < m && !found; ++y)
                            if (((b2 >> y) & 1) && !((b1 >> y) & 1))
                                if (basis_set.count((b1 & ~(Mask(1) << x)) | (Mask(1) << y))) found = true;
                        if (!found) fail(ErrorKind::InvalidInput, "basis exchange fails");
                    }
        break;
    }
    case Kind::Graph:
        if (graph_vertices <= 0) fail(ErrorKind::InvalidInput, "graph needs vertices");
        if (edges.size() > 63) fail(ErrorKind::SizeGuardExceeded, "more than 63 edges");
        for (auto [u, v] : edges)
            if (u < 0 || v < 0 || u >= graph_vertices || v >= graph_vertices)
                fail(ErrorKind::InvalidInput, "edge endpoint out of range");
        break;
    case Kind::Uniform:
        if (uniform_n < 0 || uniform_k < 0 || uniform_k > uniform_n || uniform_n > 63)
            fail(ErrorKind::InvalidInput, "uniform(k,n) needs 0 <= k <= n <= 63");
        break;
    case Kind::Boolean:
        if (boolean_n < 0 || boolean_n > 20) fail(ErrorKind::InvalidInput, "boolean n out of range");
        break;
    case Kind::Partition:
        if (partition_n < 1 || partition_n > 8) fail(ErrorKind::InvalidInput, "partition n out of range");
        break;
    case Kind::Covers:
        if (elements.empty()) fail(ErrorKind::InvalidInput, "covers input needs elements");
        break;
    }
}

namespace detail {

// Enumerate the flats of the matroid given by a rank oracle and assemble the
// lattice; element 0 is the bottom flat and atoms follow the ground order.
inline GeometricLattice lattice_of_flats(const RankOracle& oracle,
                                         const std::vector<std::string>& ground_labels,
                                         const Caps& caps)
{
    int m = oracle.m;
    std::set<Mask> flats;
    std::vector<Mask> frontier;
    Mask bottomflat = oracle.closure(0);
    flats.insert(bottomflat);
    frontier.push_back(bottomflat);
    while (!frontier.empty()) {
        std::vector<Mask> next;
        for (Mask f : frontier)
            for (int e = 0; e < m; ++e)
                if (!((f >> e) & 1)) {
                    Mask g = oracle.closure(f | (Mask(1) << e));
                    if (!flats.count(g)) {
                        if (static_cast<long>(flats.size()) >= caps.max_elements)
                            fail(ErrorKind::SizeGuardExceeded, "flat count exceeds element cap");
                        flats.insert(g);
                        next.push_back(g);
                    }
                }
        frontier = std::move(next);
    }

    // order: by (rank, lowest ground element, mask) so atoms come out in
    // ground-set order and indexing is deterministic
    std::vector<Mask> sorted(flats.begin(), flats.end());
    std::sort(sorted.begin(), sorted.end(), [&](Mask a, Mask b) {
        int ra = oracle.rank(a), rb = oracle.rank(b);
        if (ra != rb) return ra < rb;
        return a < b;
    });
    std::map<Mask, int> index;
    std::vector<std::string> labels;
    for (size_t i = 0; i < sorted.size(); ++i) {
        index[sorted[i]] = static_cast<int>(i);
        std::ostringstream os;
        os << "{";
        bool first = true;
        for (int e = 0; e < m; ++e)
            if ((sorted[i] >> e) & 1) {
                if (!first) os << ",";
                os << (e < static_cast<int>(ground_labels.size()) ? ground_labels[static_cast<size_t>(e)]
                                                                  : std::to_string(e));
                first = false;
            }
        os << "}";
        labels.push_back(os.str());
    }

    int n = static_cast<int>(sorted.size());
    std::vector<std::vector<char>> leq(static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            leq[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                (sorted[static_cast<size_t>(i)] & sorted[static_cast<size_t>(j)]) == sorted[static_cast<size_t>(i)];

    auto poset = GradedBoundedPoset::from_relation(std::move(labels), std::move(leq), caps);

    // atoms ordered by their least ground element
    std::vector<std::pair<int, int>> tagged;
    for (int x = 0; x < n; ++x)
        if (poset.rank_of(x) == 1) {
            Mask f = sorted[static_cast<size_t>(x)];
            int least = 0;
            while (!((f >> least) & 1)) ++least;
            tagged.emplace_back(least, x);
        }
    std::sort(tagged.begin(), tagged.end());
    std::vector<int> atoms;
    for (auto& [l, x] : tagged) atoms.push_back(x);
    return GeometricLattice::from_poset(std::move(poset), std::move(atoms));
}

} // namespace detail

inline GeometricLattice build_lattice(const MatroidSpec& spec, const Caps& caps = Caps{})
{
    using detail::Mask;
    spec.validate();
    switch (spec.kind) {
    case MatroidSpec::Kind::Covers: {
        auto poset = GradedBoundedPoset::from_covers(spec.elements, spec.covers, caps);
        return GeometricLattice::from_poset(std::move(poset));
    }
    case MatroidSpec::Kind::Circuits: {
        std::vector<Mask> cs;
        for (const auto& c : spec.sets) {
            Mask x = 0;
            for (int e : c) x |= Mask(1) << e;
            cs.push_back(x);
        }
        return detail::lattice_of_flats(detail::circuit_oracle(static_cast<int>(spec.ground.size()), cs),
                                        spec.ground, caps);
    }
    case MatroidSpec::Kind::Bases: {
        std::vector<Mask> bs;
        for (const auto& b : spec.sets) {
            Mask x = 0;
            for (int e : b) x |= Mask(1) << e;
            bs.push_back(x);
        }
        return detail::lattice_of_flats(detail::basis_oracle(static_cast<int>(spec.ground.size()), bs),
                                        spec.ground, caps);
    }
    case MatroidSpec::Kind::Graph: {
        std::vector<std::string> labels;
        for (auto [u, v] : spec.edges)
            labels.push_back(std::to_string(u) + "-" + std::to_string(v));
        return detail::lattice_of_flats(detail::graph_oracle(spec.graph_vertices, spec.edges), labels, caps);
    }
    case MatroidSpec::Kind::Uniform: {
        std::vector<std::string> labels;
        for (int e = 1; e <= spec.uniform_n; ++e) labels.push_back(std::to_string(e));
        return detail::lattice_of_flats(detail::uniform_oracle(spec.uniform_k, spec.uniform_n), labels, caps);
    }
    case MatroidSpec::Kind::Boolean: {
        std::vector<std::string> labels;
        for (int e = 1; e <= spec.boolean_n; ++e) labels.push_back(std::to_string(e));
        return detail::lattice_of_flats(detail::uniform_oracle(spec.boolean_n, spec.boolean_n), labels, caps);
    }
    case MatroidSpec::Kind::Partition: {
        // the partition lattice is the lattice of flats of the complete graph
        int n = spec.partition_n;
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        std::vector<std::string> labels;
        for (auto [u, v] : edges) labels.push_back(std::to_string(u + 1) + std::to_string(v + 1));
        return detail::lattice_of_flats(detail::graph_oracle(n, edges), labels, caps);
    }
    }
    fail(ErrorKind::InvalidInput, "unknown matroid spec kind");
}

// Builtin generator names used by the CLI and tests: "boolean:3",
// "uniform:2,4", "partition:4".
inline GeometricLattice builtin_lattice(const std::string& name, const Caps& caps = Caps{})
{
    auto colon = name.find(':');
    if (colon == std::string::npos) fail(ErrorKind::InvalidInput, "builtin name needs ':' parameters");
    std::string kind = name.substr(0, colon), args = name.substr(colon + 1);
    try {
        if (kind == "boolean") return build_lattice(MatroidSpec::boolean(std::stoi(args)), caps);
        if (kind == "partition") return build_lattice(MatroidSpec::partition(std::stoi(args)), caps);
        if (kind == "uniform") {
            auto comma = args.find(',');
            if (comma == std::string::npos) fail(ErrorKind::InvalidInput, "uniform:k,n");
            return build_lattice(
                MatroidSpec::uniform(std::stoi(args.substr(0, comma)), std::stoi(args.substr(comma + 1))), caps);
        }
    } catch (const std::invalid_argument&) {
        fail(ErrorKind::InvalidInput, "bad builtin parameter in " + name);
    } catch (const std::out_of_range&) {
        fail(ErrorKind::InvalidInput, "bad builtin parameter in " + name);
    }
    fail(ErrorKind::InvalidInput, "unknown builtin " + name);
}

} // namespace okls
