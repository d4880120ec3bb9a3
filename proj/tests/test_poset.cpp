#include "okls/el_labeling.hpp"
#include "okls/matroid.hpp"
#include "okls/order_complex.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace okls;

TEST_CASE("build_lattice on the builtin generators")
{
    SECTION("uniform(1,1) is the two-element chain")
    {
        auto L = build_lattice(MatroidSpec::uniform(1, 1));
        REQUIRE(L.size() == 2);
        REQUIRE(L.rank() == 1);
        REQUIRE(L.atom_count() == 1);
    }
    SECTION("boolean(3) is the subset lattice")
    {
        auto L = build_lattice(MatroidSpec::boolean(3));
        REQUIRE(L.size() == 8);
        REQUIRE(L.rank() == 3);
        REQUIRE(L.atom_count() == 3);
        // brute-force subset model: C(3,k) elements per rank, mu = (-1)^rank
        for (int r = 0; r <= 3; ++r)
            REQUIRE(L.poset().elements_of_rank(r).size() == std::vector<size_t>{1, 3, 3, 1}[static_cast<size_t>(r)]);
        for (int x = 0; x < L.size(); ++x) {
            int r = L.rank_of(x);
            REQUIRE(L.poset().mobius(L.bottom(), x) == (r % 2 == 0 ? 1 : -1));
        }
    }
    SECTION("partition(3) has 5 elements, rank 2, 3 atoms")
    {
        auto L = build_lattice(MatroidSpec::partition(3));
        REQUIRE(L.size() == 5);
        REQUIRE(L.rank() == 2);
        REQUIRE(L.atom_count() == 3);
    }
    SECTION("partition(4) has Bell(4) = 15 elements")
    {
        auto L = build_lattice(MatroidSpec::partition(4));
        REQUIRE(L.size() == 15);
        REQUIRE(L.rank() == 3);
        REQUIRE(L.atom_count() == 6);
    }
    SECTION("circuits and bases inputs agree with uniform(2,3)")
    {
        auto by_circuits = build_lattice(MatroidSpec::from_circuits({"a", "b", "c"}, {{0, 1, 2}}));
        auto by_bases = build_lattice(MatroidSpec::from_bases({"a", "b", "c"}, {{0, 1}, {0, 2}, {1, 2}}));
        auto uniform = build_lattice(MatroidSpec::uniform(2, 3));
        REQUIRE(by_circuits.size() == uniform.size());
        REQUIRE(by_bases.size() == uniform.size());
        REQUIRE(by_circuits.poset().characteristic_polynomial() ==
                uniform.poset().characteristic_polynomial());
        REQUIRE(by_bases.poset().characteristic_polynomial() ==
                uniform.poset().characteristic_polynomial());
    }
    SECTION("graphic matroid of K4 is the partition lattice of a 4-set")
    {
        auto K4 = build_lattice(MatroidSpec::from_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
        auto P4 = build_lattice(MatroidSpec::partition(4));
        REQUIRE(K4.size() == P4.size());
        REQUIRE(K4.poset().characteristic_polynomial() == P4.poset().characteristic_polynomial());
    }
    SECTION("invalid axioms are rejected with named errors")
    {
        REQUIRE_THROWS_AS(build_lattice(MatroidSpec::from_circuits({"a", "b"}, {{0}, {0, 1}})), Error);
        REQUIRE_THROWS_AS(build_lattice(MatroidSpec::from_bases({"a", "b", "c"}, {{0}, {1, 2}})), Error);
        // rank-2 chain: bounded and graded but not atomic
        auto spec = MatroidSpec::from_covers({"0", "m", "1"}, {{0, 1}, {1, 2}});
        try {
            build_lattice(spec);
            FAIL("expected NotGeometric");
        } catch (const Error& e) {
            REQUIRE(e.kind() == ErrorKind::NotGeometric);
        }
    }
    SECTION("element cap raises SizeGuardExceeded")
    {
        Caps caps;
        caps.max_elements = 10;
        try {
            build_lattice(MatroidSpec::partition(4), caps);
            FAIL("expected SizeGuardExceeded");
        } catch (const Error& e) {
            REQUIRE(e.kind() == ErrorKind::SizeGuardExceeded);
        }
    }
}

TEST_CASE("intervals")
{
    auto B3 = build_lattice(MatroidSpec::boolean(3));
    const auto& P = B3.poset();
    SECTION("full interval is the poset itself")
    {
        auto I = P.interval(P.bottom(), P.top());
        REQUIRE(I.size() == P.size());
        REQUIRE(I.rank() == P.rank());
    }
    SECTION("interval above an atom is a boolean lattice of rank 2")
    {
        int atom = B3.atom_elem(0);
        auto I = P.interval(atom, P.top());
        REQUIRE(I.size() == 4);
        REQUIRE(I.rank() == 2);
        REQUIRE(I.back_map().size() == 4);
        REQUIRE(I.back_map()[0] == atom);
    }
    SECTION("singleton interval")
    {
        auto I = P.interval(3, 3);
        REQUIRE(I.size() == 1);
        REQUIRE(I.rank() == 0);
    }
    SECTION("incomparable endpoints raise NotComparable")
    {
        int a = B3.atom_elem(0), b = B3.atom_elem(1);
        try {
            P.interval(a, b);
            FAIL("expected NotComparable");
        } catch (const Error& e) {
            REQUIRE(e.kind() == ErrorKind::NotComparable);
        }
    }
    SECTION("closed intervals of a geometric lattice are geometric")
    {
        for (int x = 0; x < P.size(); ++x)
            for (int y = 0; y < P.size(); ++y)
                if (P.leq(x, y)) REQUIRE_NOTHROW(B3.interval_lattice(x, y));
    }
}

TEST_CASE("Moebius function and characteristic polynomials")
{
    SECTION("singleton")
    {
        auto L = build_lattice(MatroidSpec::boolean(0));
        REQUIRE(L.poset().mobius(0, 0) == 1);
        REQUIRE(L.poset().characteristic_polynomial() == IntPoly(Int(1)));
    }
    SECTION("mu(B3) = -1, mu(U23) = 2")
    {
        auto B3 = build_lattice(MatroidSpec::boolean(3));
        REQUIRE(B3.poset().mobius(B3.bottom(), B3.top()) == -1);
        auto U = build_lattice(MatroidSpec::uniform(2, 3));
        REQUIRE(U.poset().mobius(U.bottom(), U.top()) == 2);
    }
    SECTION("chi of U23 and B2, with the unsigned variant")
    {
        auto U = build_lattice(MatroidSpec::uniform(2, 3));
        REQUIRE(U.poset().characteristic_polynomial() == IntPoly({Int(2), Int(-3), Int(1)}));
        REQUIRE(U.poset().characteristic_polynomial_unsigned() == IntPoly({Int(2), Int(3), Int(1)}));
        auto B2 = build_lattice(MatroidSpec::boolean(2));
        REQUIRE(B2.poset().characteristic_polynomial() == IntPoly({Int(1), Int(-2), Int(1)}));
    }
    SECTION("defining recursion holds exhaustively")
    {
        for (auto& [name, L] : testing::corpus(false)) {
            const auto& P = L.poset();
            for (int x = 0; x < P.size(); ++x)
                for (int y = 0; y < P.size(); ++y) {
                    if (!P.leq(x, y)) continue;
                    Int s = 0;
                    for (int z = 0; z < P.size(); ++z)
                        if (P.leq(x, z) && P.leq(z, y)) s += P.mobius(x, z);
                    REQUIRE(s == (x == y ? 1 : 0));
                }
        }
    }
    SECTION("chi is monic of degree rk")
    {
        for (auto& [name, L] : testing::corpus(false)) {
            IntPoly c = L.poset().characteristic_polynomial();
            REQUIRE(c.degree() == L.rank());
            REQUIRE(c.coeff(L.rank()) == 1);
            if (L.rank() >= 1) REQUIRE(c.eval(1) == 0);
        }
    }
}

TEST_CASE("chain enumeration")
{
    SECTION("rank-1 lattice has only the empty chain")
    {
        auto L = build_lattice(MatroidSpec::uniform(1, 1));
        auto chains = L.poset().interior_chains();
        REQUIRE(chains.size() == 1);
        REQUIRE(chains[0].empty());
    }
    SECTION("U23 has the empty chain plus 3 singletons")
    {
        auto L = build_lattice(MatroidSpec::uniform(2, 3));
        REQUIRE(L.poset().interior_chains().size() == 4);
    }
    SECTION("B3 has 13 interior chains")
    {
        auto L = build_lattice(MatroidSpec::boolean(3));
        auto chains = L.poset().interior_chains();
        REQUIRE(chains.size() == 13);
        // deterministic lexicographic order by (length, sequence)
        auto sorted = chains;
        std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        REQUIRE(chains == sorted);
    }
    SECTION("chain cap raises SizeGuardExceeded")
    {
        auto L = build_lattice(MatroidSpec::boolean(3));
        Caps caps;
        caps.max_chains = 5;
        try {
            L.poset().interior_chains(caps);
            FAIL("expected SizeGuardExceeded");
        } catch (const Error& e) {
            REQUIRE(e.kind() == ErrorKind::SizeGuardExceeded);
        }
    }
}

TEST_CASE("minimal-atom EL-labeling")
{
    SECTION("B2 label words through the two atoms")
    {
        auto B2 = build_lattice(MatroidSpec::boolean(2));
        ELLabeling lab(B2);
        std::vector<int> through_a1 = {B2.bottom(), B2.atom_elem(0), B2.top()};
        std::vector<int> through_a2 = {B2.bottom(), B2.atom_elem(1), B2.top()};
        REQUIRE(lab.word(through_a1) == std::vector<int>{0, 1});
        REQUIRE(lab.word(through_a2) == std::vector<int>{1, 0});
    }
    SECTION("rank-1 lattice has a single label")
    {
        auto L = build_lattice(MatroidSpec::uniform(1, 2));
        ELLabeling lab(L);
        REQUIRE(lab.word({L.bottom(), L.top()}).size() == 1);
    }
    SECTION("partition(3) has a unique increasing chain among its 3")
    {
        auto L = build_lattice(MatroidSpec::partition(3));
        ELLabeling lab(L);
        int increasing = 0;
        auto chains = L.poset().maximal_chains();
        REQUIRE(chains.size() == 3);
        for (const auto& c : chains)
            if (ELLabeling::increasing(lab.word(c))) ++increasing;
        REQUIRE(increasing == 1);
    }
    SECTION("EL property verifies on the corpus")
    {
        for (auto& [name, L] : testing::corpus(false)) REQUIRE_NOTHROW(ELLabeling(L).verify());
    }
    SECTION("Hall: decreasing maximal chains count |mu|")
    {
        for (auto& [name, L] : testing::corpus(false)) {
            ELLabeling lab(L);
            long dec = 0;
            for (const auto& c : L.poset().maximal_chains())
                if (ELLabeling::decreasing(lab.word(c))) ++dec;
            REQUIRE(Int(dec) == int_abs(L.poset().mobius(L.bottom(), L.top())));
        }
    }
}

TEST_CASE("order complex homology")
{
    SECTION("rank-2 lattice with m atoms: reduced H_0 has dimension m-1")
    {
        for (int m : {2, 3, 5}) {
            auto L = build_lattice(MatroidSpec::uniform(2, m));
            auto H = order_complex_homology(L.poset());
            REQUIRE(H.betti_at(0) == m - 1);
            REQUIRE(H.betti.size() == 1);
        }
    }
    SECTION("B3 interior is a hexagon: H_1 = 1")
    {
        auto L = build_lattice(MatroidSpec::boolean(3));
        auto H = order_complex_homology(L.poset());
        REQUIRE(H.betti_at(1) == 1);
        REQUIRE(H.betti.size() == 1);
    }
    SECTION("rank-2 chain interior is contractible")
    {
        auto chain = GradedBoundedPoset::from_covers({"0", "m", "1"}, {{0, 1}, {1, 2}});
        auto H = order_complex_homology(chain);
        REQUIRE(H.betti.empty());
    }
    SECTION("rank-1 lattice: empty complex, one class in degree -1")
    {
        auto L = build_lattice(MatroidSpec::uniform(1, 1));
        auto H = order_complex_homology(L.poset());
        REQUIRE(H.betti_at(-1) == 1);
    }
    SECTION("corpus intervals are Cohen-Macaulay with top Betti |mu|")
    {
        for (auto& [name, L] : testing::corpus(false)) {
            if (L.size() > 20) continue; // exhaustive interval sweep on the small ones
            const auto& P = L.poset();
            for (int x = 0; x < P.size(); ++x)
                for (int y = 0; y < P.size(); ++y) {
                    if (!P.lt(x, y)) continue;
                    auto H = order_complex_homology(P.interval(x, y));
                    int top = P.interval_rank(x, y) - 2;
                    for (auto [d, b] : H.betti) REQUIRE(d == top);
                    REQUIRE(Int(H.betti_at(top)) == int_abs(P.mobius(x, y)));
                }
        }
    }
}

TEST_CASE("poset construction edge cases")
{
    SECTION("cycle in covers is rejected")
    {
        REQUIRE_THROWS_AS(GradedBoundedPoset::from_covers({"a", "b"}, {{0, 1}, {1, 0}}), Error);
    }
    SECTION("unbounded posets are rejected")
    {
        // two incomparable elements
        REQUIRE_THROWS_AS(GradedBoundedPoset::from_covers({"a", "b"}, {}), Error);
    }
    SECTION("non-graded poset is rejected")
    {
        // diamond with one long side: 0 < a < b < 1 and 0 < c < 1
        try {
            GradedBoundedPoset::from_covers({"0", "a", "b", "c", "1"},
                                            {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
            FAIL("expected NotGraded");
        } catch (const Error& e) {
            REQUIRE(e.kind() == ErrorKind::NotGraded);
        }
    }
    SECTION("join uniqueness failure is NotALattice")
    {
        // 0 < a,b < c,d < 1: a,b have two minimal upper bounds
        auto poset = GradedBoundedPoset::from_covers(
            {"0", "a", "b", "c", "d", "1"},
            {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}});
        try {
            GeometricLattice::from_poset(std::move(poset));
            FAIL("expected NotALattice");
        } catch (const Error& e) {
            REQUIRE(e.kind() == ErrorKind::NotALattice);
        }
    }
}
