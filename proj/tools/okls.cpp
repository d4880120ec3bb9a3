// Command-line front end: lattice ingestion, KLS polynomial computation with
// cross-validation, dimension tables, Betti tables and the verification
// suite. Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 size guard exceeded.

#include "okls/complexes.hpp"
#include "okls/groebner.hpp"
#include "okls/incidence.hpp"
#include "okls/json_io.hpp"
#include "okls/verify.hpp"

#include <CLI11.hpp>

#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace okls;

int exit_code_for(ErrorKind k)
{
    switch (k) {
    case ErrorKind::SizeGuardExceeded: return 3;
    case ErrorKind::InvalidInput:
    case ErrorKind::NotALattice:
    case ErrorKind::NotGraded:
    case ErrorKind::NotGeometric:
    case ErrorKind::NotComparable:
    case ErrorKind::NotInterior:
    case ErrorKind::HostMismatch:
    case ErrorKind::DegreeExceedsRank: return 2;
    default: return 1;
    }
}

struct CommonOpts {
    std::string builtin;
    std::string input;
    std::string format = "text";
    long max_elements = Caps{}.max_elements;
    long max_chains = Caps{}.max_chains;
    int jobs = 1;

    Caps caps() const
    {
        Caps c;
        c.max_elements = max_elements;
        c.max_chains = max_chains;
        return c;
    }

    GeometricLattice load() const
    {
        if (builtin.empty() == input.empty())
            fail(ErrorKind::InvalidInput, "exactly one of --builtin or --input is required");
        if (!builtin.empty()) return builtin_lattice(builtin, caps());
        return lattice_from_json_file(input, caps());
    }

    std::string source() const { return builtin.empty() ? input : builtin; }
};

void add_common(CLI::App* cmd, CommonOpts& o)
{
    cmd->add_option("--builtin", o.builtin, "builtin lattice: boolean:N, uniform:K,N, partition:N");
    cmd->add_option("--input", o.input, "JSON lattice/matroid input file");
    cmd->add_option("--format", o.format, "output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--max-elements", o.max_elements, "element-count cap");
    cmd->add_option("--max-chains", o.max_chains, "chain-count cap");
    cmd->add_option("--jobs", o.jobs, "parallel workers for independent (weight, variant) units");
}

Json lattice_report(const GeometricLattice& L, const std::string& source)
{
    const auto& P = L.poset();
    Json j;
    j["source"] = source;
    j["elements"] = Json::array();
    for (int x = 0; x < P.size(); ++x)
        j["elements"].push_back({{"index", x}, {"label", P.label(x)}, {"rank", P.rank_of(x)}});
    j["size"] = P.size();
    j["rank"] = P.rank();
    Json atoms = Json::array();
    for (int i = 0; i < L.atom_count(); ++i) atoms.push_back(P.label(L.atom_elem(i)));
    j["atoms"] = atoms;
    Json mob = Json::array();
    for (int x = 0; x < P.size(); ++x) mob.push_back(static_cast<long long>(P.mobius(P.bottom(), x)));
    j["mobius_from_bottom"] = mob;
    j["characteristic_polynomial"] = poly_to_json(P.characteristic_polynomial());
    j["characteristic_polynomial_unsigned"] = poly_to_json(P.characteristic_polynomial_unsigned());
    return j;
}

int cmd_lattice(const CommonOpts& o)
{
    GeometricLattice L = o.load();
    const auto& P = L.poset();
    Json j = lattice_report(L, o.source());
    if (o.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::cout << "index,label,rank,mobius_from_bottom\n";
        for (int x = 0; x < P.size(); ++x)
            std::cout << x << ",\"" << P.label(x) << "\"," << P.rank_of(x) << ","
                      << P.mobius(P.bottom(), x).str() << "\n";
    } else {
        std::cout << "lattice " << o.source() << ": " << P.size() << " elements, rank " << P.rank()
                  << ", " << L.atom_count() << " atoms\n";
        std::cout << "chi   = " << P.characteristic_polynomial().str() << "\n";
        std::cout << "chi+  = " << P.characteristic_polynomial_unsigned().str() << "\n";
        std::cout << "x  rank  mu(0,x)  label\n";
        for (int x = 0; x < P.size(); ++x)
            std::cout << x << "  " << P.rank_of(x) << "  " << P.mobius(P.bottom(), x).str() << "  "
                      << P.label(x) << "\n";
    }
    return 0;
}

int cmd_kl(const CommonOpts& o)
{
    GeometricLattice L = o.load();
    const auto& P = L.poset();
    Caps caps = o.caps();

    IncidencePolynomial c = chi(P);
    IntPoly p_rec = kls_right(c).entry(P.bottom(), P.top());
    IncidencePolynomial q_left = kls_left(bar(c));
    IntPoly q_rec = q_left.entry(P.bottom(), P.top());
    if (L.rank() % 2 == 1) q_rec = -q_rec;

    GerstSystem sys(L, caps);
    KLFromComplexes kl = kl_via_complexes(sys);
    bool match = kl.P == p_rec && kl.Q == q_rec;

    if (o.format == "json") {
        Json j;
        j["source"] = o.source();
        j["interval"] = {P.bottom(), P.top()};
        j["P"] = {{"recursion", poly_to_json(p_rec)}, {"complexes", poly_to_json(kl.P)}};
        j["Q"] = {{"recursion", poly_to_json(q_rec)}, {"complexes", poly_to_json(kl.Q)}};
        j["match"] = match;
        Json tables = Json::array();
        for (auto& [w, t] : kl.rkls_tables) {
            Json bt;
            for (auto& [d, b] : t.betti) bt[std::to_string(d)] = b;
            tables.push_back({{"variant", "rkls"}, {"weight", w}, {"betti", bt}});
        }
        for (auto& [w, t] : kl.lkls_hat_tables) {
            Json bt;
            for (auto& [d, b] : t.betti) bt[std::to_string(d)] = b;
            tables.push_back({{"variant", "lkls-hat"}, {"weight", w}, {"betti", bt}});
        }
        j["evidence"] = tables;
        std::cout << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        // full tables: one row per interval, ascending coefficients
        std::cout << "polynomial,x,y,rank,coeffs...\n";
        IncidencePolynomial f = kls_right(c);
        for (auto [x, y] : f.comparable_pairs()) {
            std::cout << "P," << x << "," << y << "," << P.interval_rank(x, y);
            const IntPoly& e = f.entry(x, y);
            for (int d = 0; d <= e.degree(); ++d) std::cout << "," << e.coeff(d).str();
            std::cout << "\n";
        }
        for (auto [x, y] : q_left.comparable_pairs()) {
            IntPoly e = q_left.entry(x, y);
            if (P.interval_rank(x, y) % 2 == 1) e = -e;
            std::cout << "Q," << x << "," << y << "," << P.interval_rank(x, y);
            for (int d = 0; d <= e.degree(); ++d) std::cout << "," << e.coeff(d).str();
            std::cout << "\n";
        }
    } else {
        std::cout << "lattice " << o.source() << " (rank " << L.rank() << ")\n";
        std::cout << "P via Stanley recursion: " << p_rec.str() << "\n";
        std::cout << "P via RKLS Betti:        " << kl.P.str() << "\n";
        std::cout << "Q via Stanley recursion: " << q_rec.str() << "\n";
        std::cout << "Q via LKLS-hat Betti:    " << kl.Q.str() << "\n";
        std::cout << (match ? "match" : "MISMATCH") << "\n";
    }
    return match ? 0 : 1;
}

int cmd_dims(const CommonOpts& o)
{
    GeometricLattice L = o.load();
    const auto& P = L.poset();
    Caps caps = o.caps();
    GerstSystem sys(L, caps);
    GerstSpace g = gerst_space(sys, P.bottom(), P.top());
    ELLabeling lab(L);
    auto com = normal_monomials(L, P.bottom(), P.top(), PresentationKind::Com, lab, caps);
    auto lie = normal_monomials(L, P.bottom(), P.top(), PresentationKind::Lie, lab, caps);
    auto ger = normal_monomials(L, P.bottom(), P.top(), PresentationKind::Gerst, lab, caps);
    IntPoly cp = P.characteristic_polynomial_unsigned();
    bool hilbert_ok = g.hilbert_c() == cp;

    if (o.format == "json") {
        Json j;
        j["source"] = o.source();
        j["rank"] = g.rank;
        j["dim"] = g.dim;
        Json bg = Json::array();
        for (int d = 0; d <= g.rank; ++d)
            bg.push_back({{"c_weight", g.rank - d}, {"l_weight", d}, {"dim", g.dims[static_cast<size_t>(d)]}});
        j["bigraded_dims"] = bg;
        j["whitney"] = poly_to_json(cp);
        j["hilbert_matches_chi_plus"] = hilbert_ok;
        j["normal_monomials"] = {{"com", com.size()}, {"lie", lie.size()}, {"gerst", ger.size()}};
        std::cout << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::cout << "c_weight,l_weight,dim\n";
        for (int d = 0; d <= g.rank; ++d)
            std::cout << g.rank - d << "," << d << "," << g.dims[static_cast<size_t>(d)] << "\n";
    } else {
        std::cout << "Gerst(" << o.source() << "), rank " << g.rank << ", dim " << g.dim << "\n";
        for (int d = 0; d <= g.rank; ++d)
            std::cout << "  (" << g.rank - d << "," << d << "): " << g.dims[static_cast<size_t>(d)] << "\n";
        std::cout << "Hilbert series in C-weight: " << g.hilbert_c().str()
                  << (hilbert_ok ? " = chi+" : " != chi+ (BUG)") << "\n";
        std::cout << "normal monomials: com " << com.size() << ", lie " << lie.size() << ", gerst "
                  << ger.size() << "\n";
    }
    return hilbert_ok ? 0 : 1;
}

std::optional<Variant> variant_of(const std::string& s)
{
    if (s == "rkls") return Variant::RKLS;
    if (s == "lkls") return Variant::LKLS;
    if (s == "rkls-hat") return Variant::RKLSHat;
    if (s == "lkls-hat") return Variant::LKLSHat;
    if (s == "bar") return Variant::Bar;
    return std::nullopt;
}

int cmd_betti(const CommonOpts& o, const std::string& variant, int weight)
{
    GeometricLattice L = o.load();
    Caps caps = o.caps();

    std::vector<std::pair<std::string, int>> work;
    std::vector<std::string> variants =
        variant.empty() ? std::vector<std::string>{"bar", "rkls", "lkls", "rkls-hat", "lkls-hat", "kos"}
                        : std::vector<std::string>{variant};
    for (const auto& v : variants) {
        if (weight >= 0) work.emplace_back(v, weight);
        else
            for (int w = 0; w <= L.rank(); ++w) work.emplace_back(v, w);
    }

    auto compute = [&](const std::pair<std::string, int>& unit) {
        // each worker builds its own system; the caches are not shared
        GerstSystem sys(L, caps);
        if (unit.first == "kos") return cohomology(koszul_complex(sys, unit.second));
        auto v = variant_of(unit.first);
        if (!v) fail(ErrorKind::InvalidInput, "unknown variant " + unit.first);
        return cohomology(build_complex(sys, unit.second, *v));
    };

    std::vector<BettiTable> results(work.size());
    if (o.jobs > 1) {
        std::vector<std::future<BettiTable>> futs;
        for (const auto& u : work)
            futs.push_back(std::async(std::launch::async, [&compute, u] { return compute(u); }));
        for (size_t i = 0; i < futs.size(); ++i) results[i] = futs[i].get();
    } else {
        for (size_t i = 0; i < work.size(); ++i) results[i] = compute(work[i]);
    }

    if (o.format == "json") {
        Json arr = Json::array();
        for (size_t i = 0; i < work.size(); ++i) {
            Json bt = Json::object();
            for (auto& [d, b] : results[i].betti) bt[std::to_string(d)] = b;
            arr.push_back({{"lattice", o.source()},
                           {"variant", work[i].first},
                           {"weight", work[i].second},
                           {"betti", bt},
                           {"euler", static_cast<long long>(results[i].euler())}});
        }
        std::cout << arr.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::cout << "variant,weight,degree,dim\n";
        for (size_t i = 0; i < work.size(); ++i)
            for (auto& [d, b] : results[i].betti)
                std::cout << work[i].first << "," << work[i].second << "," << d << "," << b << "\n";
    } else {
        for (size_t i = 0; i < work.size(); ++i) {
            std::cout << work[i].first << " weight " << work[i].second << ":";
            if (results[i].betti.empty()) std::cout << " acyclic";
            for (auto& [d, b] : results[i].betti) std::cout << " H^" << d << "=" << b;
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_verify(const CommonOpts& o, const std::vector<std::string>& checks)
{
    Caps caps = o.caps();
    GeometricLattice L;
    try {
        L = o.load();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotGeometric || e.kind() == ErrorKind::NotALattice ||
            e.kind() == ErrorKind::NotGraded) {
            // report the failed geometricity check and skip the operadic suite
            if (o.format == "json") {
                Json j;
                j["source"] = o.source();
                j["checks"] = Json::array({{{"name", "geometric"}, {"pass", false}, {"detail", e.what()}}});
                j["pass"] = false;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "[FAIL] geometric: " << e.what() << "\n";
                std::cout << "remaining checks skipped\n";
            }
            return 1;
        }
        throw;
    }

    VerifySuite suite(L, caps);
    auto results = suite.run_all(checks);
    if (results.empty()) fail(ErrorKind::InvalidInput, "no such check");
    bool all = true;
    for (const auto& r : results) all &= r.pass;

    if (o.format == "json") {
        Json j;
        j["source"] = o.source();
        Json arr = Json::array();
        for (const auto& r : results)
            arr.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        j["checks"] = arr;
        j["pass"] = all;
        std::cout << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::cout << "check,pass,detail\n";
        for (const auto& r : results)
            std::cout << r.name << "," << (r.pass ? 1 : 0) << ",\"" << r.detail << "\"\n";
    } else {
        for (const auto& r : results)
            std::cout << (r.pass ? "[pass] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
        std::cout << (all ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact operadic Kazhdan-Lusztig-Stanley computations on geometric lattices"};
    app.require_subcommand(1);

    CommonOpts lattice_opts, kl_opts, dims_opts, betti_opts, verify_opts;
    std::string betti_variant;
    int betti_weight = -1;
    std::vector<std::string> verify_checks;

    CLI::App* c_lattice = app.add_subcommand("lattice", "elements, rank, atoms, Moebius, chi");
    add_common(c_lattice, lattice_opts);
    CLI::App* c_kl = app.add_subcommand("kl", "KLS polynomials by recursion and by complex Betti numbers");
    add_common(c_kl, kl_opts);
    CLI::App* c_dims = app.add_subcommand("dims", "bigraded Gerst dimensions and normal-monomial counts");
    add_common(c_dims, dims_opts);
    CLI::App* c_betti = app.add_subcommand("betti", "Betti tables of bar/KLS/Koszul complexes");
    add_common(c_betti, betti_opts);
    c_betti->add_option("--variant", betti_variant, "bar|rkls|lkls|rkls-hat|lkls-hat|kos (default: all)");
    c_betti->add_option("--weight", betti_weight, "weight slice (default: all)");
    CLI::App* c_verify = app.add_subcommand("verify", "run the invariant suite");
    add_common(c_verify, verify_opts);
    c_verify->add_option("--check", verify_checks, "run only the named checks")->take_all();

    try {
        app.parse(argc, argv);
        if (c_lattice->parsed()) return cmd_lattice(lattice_opts);
        if (c_kl->parsed()) return cmd_kl(kl_opts);
        if (c_dims->parsed()) return cmd_dims(dims_opts);
        if (c_betti->parsed()) return cmd_betti(betti_opts, betti_variant, betti_weight);
        if (c_verify->parsed()) return cmd_verify(verify_opts, verify_checks);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const okls::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
