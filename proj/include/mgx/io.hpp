#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "mgx/catalog.hpp"
#include "mgx/common.hpp"
#include "mgx/pattern.hpp"

namespace mgx {

// Pattern JSON: either an explicit listing
//   {"vertices": k, "loops": [...], "edges": [[u, v, m], ...]}
// (unlisted pairs default to 0), a layered clique shorthand
//   {"turan": {"r": [r_0, ...], "a": a}},
// or a catalog name {"named": "Petersen", "a": 2}.
inline Pattern pattern_from_json(const nlohmann::json& j) {
    try {
        if (j.contains("turan")) {
            TuranSpec spec;
            spec.r = j.at("turan").at("r").get<std::vector<int>>();
            spec.a = j.at("turan").at("a").get<long>();
            return make_turan_pattern(spec);
        }
        if (j.contains("named"))
            return named_pattern(j.at("named").get<std::string>(), j.at("a").get<long>());
        const int k = j.at("vertices").get<int>();
        auto loops = j.at("loops").get<std::vector<std::uint32_t>>();
        if (static_cast<int>(loops.size()) != k)
            throw input_error("pattern json: loops length differs from vertex count");
        std::vector<std::uint32_t> pairs(choose2(k), 0);
        if (j.contains("edges"))
            for (const auto& e : j.at("edges")) {
                const int u = e.at(0).get<int>(), v = e.at(1).get<int>();
                if (u < 0 || v < 0 || u >= k || v >= k || u == v)
                    throw input_error("pattern json: bad edge endpoints");
                pairs[pair_index(u, v, k)] = e.at(2).get<std::uint32_t>();
            }
        return Pattern(std::move(loops), std::move(pairs));
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("pattern json: ") + e.what());
    }
}

inline nlohmann::json pattern_to_json(const Pattern& p) {
    nlohmann::json j;
    j["vertices"] = p.k();
    j["loops"] = p.loops();
    nlohmann::json edges = nlohmann::json::array();
    for (int u = 0; u < p.k(); ++u)
        for (int v = u + 1; v < p.k(); ++v)
            if (p.pair(u, v) != 0) edges.push_back({u, v, p.pair(u, v)});
    j["edges"] = edges;
    return j;
}

inline Pattern load_pattern(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open pattern file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("pattern json: ") + e.what());
    }
    return pattern_from_json(j);
}

// Rationals are rendered as {"num": ..., "den": ...} in lowest terms.
inline nlohmann::json rational_to_json(const Rational& r) {
    nlohmann::json j;
    j["num"] = boost::multiprecision::numerator(r).str();
    j["den"] = boost::multiprecision::denominator(r).str();
    return j;
}

}  // namespace mgx
