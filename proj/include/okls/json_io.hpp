#pragma once

// JSON ingestion and report serialization for the CLI.
//
// Accepted input documents (one object per file):
//   {"elements": [...], "covers": [[i,j], ...]}         explicit poset
//   {"ground": [...], "circuits": [[...], ...]}         matroid by circuits
//   {"ground": [...], "bases": [[...], ...]}            matroid by bases
//   {"graph": {"vertices": n, "edges": [[u,v], ...]}}   cycle matroid
//   {"uniform": [k, n]} | {"boolean": n} | {"partition": n}
//
// Polynomials are serialized as ascending integer coefficient lists.

#include "okls/matroid.hpp"
#include "okls/poly.hpp"

#include <json.hpp>

#include <fstream>
#include <string>
#include <vector>

namespace okls {

using Json = nlohmann::json;

inline Json poly_to_json(const IntPoly& p)
{
    Json arr = Json::array();
    for (int d = 0; d <= p.degree(); ++d) {
        const Int& c = p.coeff(d);
        if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
            arr.push_back(static_cast<long long>(c));
        else
            arr.push_back(c.str());
    }
    return arr;
}

inline MatroidSpec matroid_spec_from_json(const Json& j)
{
    if (!j.is_object()) fail(ErrorKind::InvalidInput, "input document must be a JSON object");
    auto ground_of = [&]() {
        std::vector<std::string> g;
        for (const auto& e : j.at("ground")) {
            if (e.is_string()) g.push_back(e.get<std::string>());
            else g.push_back(std::to_string(e.get<long long>()));
        }
        return g;
    };
    auto int_lists = [&](const char* key) {
        std::vector<std::vector<int>> out;
        for (const auto& s : j.at(key)) {
            std::vector<int> v;
            for (const auto& e : s) v.push_back(e.get<int>());
            out.push_back(std::move(v));
        }
        return out;
    };
    try {
        if (j.contains("covers")) {
            std::vector<std::string> labels;
            if (j.contains("elements")) {
                for (const auto& e : j.at("elements")) {
                    if (e.is_string()) labels.push_back(e.get<std::string>());
                    else labels.push_back(e.dump());
                }
            }
            std::vector<std::pair<int, int>> covers;
            for (const auto& c : j.at("covers")) {
                if (!c.is_array() || c.size() != 2) fail(ErrorKind::InvalidInput, "cover must be a pair");
                covers.emplace_back(c[0].get<int>(), c[1].get<int>());
            }
            if (labels.empty()) {
                int n = 0;
                for (auto [a, b] : covers) n = std::max({n, a + 1, b + 1});
                for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
            }
            return MatroidSpec::from_covers(std::move(labels), std::move(covers));
        }
        if (j.contains("circuits")) return MatroidSpec::from_circuits(ground_of(), int_lists("circuits"));
        if (j.contains("bases")) return MatroidSpec::from_bases(ground_of(), int_lists("bases"));
        if (j.contains("graph")) {
            const Json& g = j.at("graph");
            std::vector<std::pair<int, int>> edges;
            for (const auto& e : g.at("edges")) edges.emplace_back(e[0].get<int>(), e[1].get<int>());
            return MatroidSpec::from_graph(g.at("vertices").get<int>(), std::move(edges));
        }
        if (j.contains("uniform"))
            return MatroidSpec::uniform(j.at("uniform")[0].get<int>(), j.at("uniform")[1].get<int>());
        if (j.contains("boolean")) return MatroidSpec::boolean(j.at("boolean").get<int>());
        if (j.contains("partition")) return MatroidSpec::partition(j.at("partition").get<int>());
    } catch (const Json::exception& e) {
        fail(ErrorKind::InvalidInput, std::string("malformed input: ") + e.what());
    }
    fail(ErrorKind::InvalidInput,
         "input object needs one of: covers, circuits, bases, graph, uniform, boolean, partition");
}

inline GeometricLattice lattice_from_json_file(const std::string& path, const Caps& caps = Caps{})
{
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidInput, "cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        fail(ErrorKind::InvalidInput, std::string("JSON parse error in ") + path + ": " + e.what());
    }
    return build_lattice(matroid_spec_from_json(j), caps);
}

inline GeometricLattice lattice_from_json_text(const std::string& text, const Caps& caps = Caps{})
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        fail(ErrorKind::InvalidInput, std::string("JSON parse error: ") + e.what());
    }
    return build_lattice(matroid_spec_from_json(j), caps);
}

} // namespace okls
