#include "okls/complexes.hpp"
#include "okls/matroid.hpp"
#include "okls/order_complex.hpp"
#include "okls/verify.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace okls;

namespace {

ChainSummand summand(std::vector<int> chain, std::vector<std::pair<int, int>> bigrades)
{
    ChainSummand s;
    s.chain = std::move(chain);
    s.bigrades = std::move(bigrades);
    return s;
}

} // namespace

TEST_CASE("lattice paths of summands")
{
    // letters read top-down; storeys listed bottom-up as bigrades (i, j)
    SECTION("column [L / L / C] (top-down) over a rank-3 chain")
    {
        // bottom factor C = (1,0), then L = (0,1), then L = (0,1)
        auto s = summand({0, 1, 2, 3}, {{1, 0}, {0, 1}, {0, 1}});
        auto p = path_of_summand(s);
        REQUIRE(p.domain == std::vector<int>{0, 1, 2, 3});
        REQUIRE(p.value == std::vector<int>{0, 1, 2, 1});
        REQUIRE(p.weight() == 1);
        REQUIRE(p.degree() == 0);
        REQUIRE(p.span() == 3);
    }
    SECTION("column [L / C / L]")
    {
        auto s = summand({0, 1, 2, 3}, {{0, 1}, {1, 0}, {0, 1}});
        REQUIRE(path_of_summand(s).value == std::vector<int>{0, 1, 0, 1});
    }
    SECTION("column [L^2 / C] keeps values only at chain ranks")
    {
        auto s = summand({0, 1, 3}, {{1, 0}, {0, 2}});
        auto p = path_of_summand(s);
        REQUIRE(p.domain == std::vector<int>{0, 2, 3});
        REQUIRE(p.value == std::vector<int>{0, 2, 1});
    }
    SECTION("column [CL / L]")
    {
        auto s = summand({0, 1, 3}, {{0, 1}, {1, 1}});
        auto p = path_of_summand(s);
        REQUIRE(p.domain == std::vector<int>{0, 2, 3});
        REQUIRE(p.value == std::vector<int>{0, 0, 1});
    }
    SECTION("all-C maximal chain gives the strictly decreasing path")
    {
        auto s = summand({0, 1, 2, 3}, {{1, 0}, {1, 0}, {1, 0}});
        REQUIRE(path_of_summand(s).value == std::vector<int>{0, -1, -2, -3});
    }
    SECTION("numerical parameters recovered from the path")
    {
        for (auto& [name, L] : testing::corpus(false)) {
            if (L.rank() < 2 || L.size() > 16) continue;
            GerstSystem sys(L);
            auto c = bar_complex(sys, 1);
            for (const auto& blocks : c.blocks)
                for (const auto& b : blocks) {
                    auto p = path_of_summand(b.summand);
                    REQUIRE(p.span() == L.rank());
                    REQUIRE(p.degree() == b.coh_degree);
                    REQUIRE(p.weight() == b.summand.weight());
                }
        }
    }
}

TEST_CASE("KLS membership filters")
{
    SECTION("rank 2: column [L / C] is in RKLS, [C / L] is not")
    {
        auto in = summand({0, 1, 2}, {{1, 0}, {0, 1}});  // C bottom, L top
        auto out = summand({0, 1, 2}, {{0, 1}, {1, 0}}); // L bottom, C top
        REQUIRE(kls_filter(in, Variant::RKLS));
        REQUIRE_FALSE(kls_filter(out, Variant::RKLS));
    }
    SECTION("weight 0 summands are always in RKLS")
    {
        auto s = summand({0, 1, 2, 3}, {{0, 1}, {0, 1}, {0, 1}});
        REQUIRE(kls_filter(s, Variant::RKLS));
    }
    SECTION("one-factor summands are admitted by every variant")
    {
        for (auto v : {Variant::RKLS, Variant::LKLS, Variant::RKLSHat, Variant::LKLSHat}) {
            auto s = summand({0, 3}, {{2, 1}});
            REQUIRE(kls_filter(s, v));
        }
    }
    SECTION("flip and swap symmetries on explicit shapes")
    {
        auto s = summand({0, 1, 3}, {{1, 0}, {0, 2}});
        auto rev = summand({0, 2, 3}, {{0, 2}, {1, 0}});
        REQUIRE(kls_filter(s, Variant::LKLS) == kls_filter(rev, Variant::RKLS));
        auto swp = summand({0, 1, 3}, {{0, 1}, {2, 0}});
        REQUIRE(kls_filter(s, Variant::RKLSHat) == kls_filter(swp, Variant::RKLS));
    }
}

TEST_CASE("rank-2 KLS complexes")
{
    for (int m : {2, 3, 4}) {
        auto L = build_lattice(MatroidSpec::uniform(2, m));
        GerstSystem sys(L);
        SECTION("RKLS_(0) on " + std::to_string(m) + " atoms: Q^m -> Q^{m-1}")
        {
            auto c = kls_complex(sys, 0, Variant::RKLS);
            REQUIRE(c.dims == std::vector<long>{m, m - 1});
            auto t = cohomology(c);
            REQUIRE(t.betti_at(0) == 1);
            REQUIRE(t.betti_at(1) == 0);
        }
        SECTION("RKLS_(1) on " + std::to_string(m) + " atoms is acyclic")
        {
            auto t = cohomology(kls_complex(sys, 1, Variant::RKLS));
            REQUIRE(t.acyclic());
        }
        SECTION("RKLS_(2) is the one-term C^2 summand")
        {
            auto c = kls_complex(sys, 2, Variant::RKLS);
            REQUIRE(c.dims == std::vector<long>{0, 1});
            REQUIRE(cohomology(c).betti_at(1) == 1);
        }
    }
}

TEST_CASE("rank-3 weight-0 RKLS is the bar construction of the Lie slice")
{
    auto L = builtin_lattice("partition:4");
    GerstSystem sys(L);
    auto rkls0 = kls_complex(sys, 0, Variant::RKLS);
    auto barlie = bar_complex(sys, 0, OperadKind::Lie);
    REQUIRE(rkls0.dims == barlie.dims);
    auto t = cohomology(rkls0);
    REQUIRE(t.concentrated_in(0));
    REQUIRE(t.betti_at(0) == 1);
}

TEST_CASE("rank-4 weight-2 RKLS has the eight summand shapes")
{
    auto L = builtin_lattice("uniform:4,5");
    GerstSystem sys(L);
    auto c = kls_complex(sys, 2, Variant::RKLS);
    std::set<std::vector<std::pair<int, int>>> shapes;
    for (const auto& blocks : c.blocks)
        for (const auto& b : blocks) shapes.insert(b.summand.bigrades);
    // bottom-up storeys of the eight nodes
    std::set<std::vector<std::pair<int, int>>> expected = {
        {{1, 0}, {1, 0}, {0, 1}, {0, 1}}, // C, C, L, L
        {{1, 0}, {1, 0}, {0, 2}},         // C, C, L^2
        {{1, 0}, {1, 1}, {0, 1}},         // C, CL, L
        {{2, 0}, {0, 1}, {0, 1}},         // C^2, L, L
        {{1, 0}, {1, 2}},                 // C, CL^2
        {{2, 0}, {0, 2}},                 // C^2, L^2
        {{2, 1}, {0, 1}},                 // C^2 L, L
        {{2, 2}},                         // C^2 L^2
    };
    REQUIRE(shapes == expected);
}

TEST_CASE("bar construction")
{
    SECTION("Bar(Com) Betti numbers are the order-complex homology")
    {
        for (std::string name : {"uniform:2,3", "boolean:3", "partition:4"}) {
            auto L = builtin_lattice(name);
            GerstSystem sys(L);
            auto t = cohomology(bar_complex(sys, L.rank(), OperadKind::Com));
            auto H = order_complex_homology(L.poset());
            for (int k = 0; k < L.rank(); ++k)
                REQUIRE(t.betti_at(k) == H.betti_at(L.rank() - 2 - k));
        }
    }
    SECTION("Bar(Gerst) is concentrated in degree 0 with total dim OS")
    {
        for (std::string name : {"uniform:2,4", "boolean:3", "partition:4", "uniform:3,4"}) {
            auto L = builtin_lattice(name);
            GerstSystem sys(L);
            long total = 0;
            for (int w = 0; w <= L.rank(); ++w) {
                auto t = cohomology(bar_complex(sys, w));
                REQUIRE(t.concentrated_in(0));
                total += t.betti_at(0);
            }
            REQUIRE(total == sys.os(L.bottom(), L.top()).dim());
        }
    }
    SECTION("rank-1 lattice: one-term complex per weight")
    {
        auto L = build_lattice(MatroidSpec::uniform(1, 2));
        GerstSystem sys(L);
        for (int w : {0, 1}) {
            auto c = bar_complex(sys, w);
            REQUIRE(c.total_dim() == 1);
            REQUIRE(cohomology(c).betti_at(0) == 1);
        }
    }
}

TEST_CASE("Koszul complex")
{
    SECTION("rank-1 lattice: two-step acyclic complex")
    {
        auto L = build_lattice(MatroidSpec::uniform(1, 1));
        GerstSystem sys(L);
        for (int w : {0, 1}) {
            auto c = koszul_complex(sys, w);
            REQUIRE(c.dims.size() == 2);
            REQUIRE(cohomology(c).acyclic());
        }
    }
    SECTION("rank-2, m atoms: acyclic at every weight")
    {
        for (int m : {2, 3, 5}) {
            auto L = build_lattice(MatroidSpec::uniform(2, m));
            GerstSystem sys(L);
            for (int w = 0; w <= 2; ++w) REQUIRE(cohomology(koszul_complex(sys, w)).acyclic());
        }
    }
    SECTION("per-weight Euler characteristic vanishes")
    {
        for (std::string name : {"uniform:2,3", "boolean:3", "partition:4"}) {
            auto L = builtin_lattice(name);
            GerstSystem sys(L);
            for (int w = 0; w <= L.rank(); ++w)
                REQUIRE(koszul_complex(sys, w).euler_from_dims() == 0);
        }
    }
}

TEST_CASE("cohomology of explicit complexes")
{
    SECTION("zero differential gives Betti = chain dimensions")
    {
        GradedChainComplex c;
        c.variant = "test";
        c.dims = {3, 2};
        c.diff = {SparseMat(2, 3), SparseMat(0, 2)};
        auto t = cohomology(c);
        REQUIRE(t.betti_at(0) == 3);
        REQUIRE(t.betti_at(1) == 2);
    }
    SECTION("Euler characteristic from Betti equals the alternating chain sum")
    {
        auto L = builtin_lattice("partition:4");
        GerstSystem sys(L);
        for (int w = 0; w <= 3; ++w) {
            auto c = kls_complex(sys, w, Variant::RKLS);
            REQUIRE(cohomology(c).euler() == c.euler_from_dims());
        }
    }
}

TEST_CASE("KLS polynomials from Betti numbers")
{
    SECTION("rank <= 2: P = 1, Q counts atoms minus one")
    {
        auto B2 = builtin_lattice("boolean:2");
        GerstSystem sysb(B2);
        auto klb = kl_via_complexes(sysb);
        REQUIRE(klb.P == IntPoly(Int(1)));
        REQUIRE(klb.Q == IntPoly(Int(1)));

        auto U = builtin_lattice("uniform:2,3");
        GerstSystem sysu(U);
        auto klu = kl_via_complexes(sysu);
        REQUIRE(klu.P == IntPoly(Int(1)));
        REQUIRE(klu.Q == IntPoly(Int(2)));
    }
    SECTION("corpus agreement with the Stanley recursion oracle")
    {
        for (auto& [name, L] : testing::corpus(false)) {
            GerstSystem sys(L);
            auto kl = kl_via_complexes(sys);
            INFO(name);
            REQUIRE(kl.P == testing::oracle_P(L.poset()));
            REQUIRE(kl.Q == testing::oracle_Q(L.poset()));
        }
    }
    SECTION("rank-3: coefficient 0 of P comes from the weight-0 Lie slice")
    {
        auto L = builtin_lattice("partition:4");
        GerstSystem sys(L);
        auto kl = kl_via_complexes(sys);
        REQUIRE(kl.P.coeff(0) == 1);
        REQUIRE(kl.rkls_tables.at(0).betti_at(0) == 1);
    }
    SECTION("Euler-characteristic identity: sum_i (-t)^i chi_E(RKLS_(i)) = P below half rank")
    {
        for (std::string name : {"partition:4", "uniform:3,4", "boolean:4", "uniform:4,5"}) {
            auto L = builtin_lattice(name);
            GerstSystem sys(L);
            IntPoly from_euler;
            for (int i = 0; 2 * i < L.rank(); ++i) {
                Int e = cohomology(kls_complex(sys, i, Variant::RKLS)).euler();
                from_euler += IntPoly::monomial(i, (i % 2 == 0 ? e : -e));
            }
            INFO(name);
            REQUIRE(from_euler == testing::oracle_P(L.poset()));
        }
    }
}

TEST_CASE("full invariant suite on the small corpus")
{
    for (auto& [name, L] : testing::corpus(false)) {
        VerifySuite suite(L);
        for (auto& r : suite.run_all()) {
            INFO(name << " / " << r.name << ": " << r.detail);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("path interior minima characterize RKLS membership")
{
    auto L = builtin_lattice("uniform:3,4");
    GerstSystem sys(L);
    for (int w = 0; w <= L.rank(); ++w) {
        auto c = bar_complex(sys, w);
        for (const auto& blocks : c.blocks)
            for (const auto& b : blocks) {
                auto p = path_of_summand(b.summand);
                if (p.domain.size() < 3) continue; // no interior points
                bool strictly_positive = p.interior_min() > 0;
                REQUIRE(strictly_positive == kls_filter(b.summand, Variant::RKLS));
                // argmin values really are the minima
                for (int x : p.interior_argmin()) {
                    auto it = std::find(p.domain.begin(), p.domain.end(), x);
                    REQUIRE(it != p.domain.end());
                    REQUIRE(p.value[static_cast<size_t>(it - p.domain.begin())] == p.interior_min());
                }
            }
    }
}
