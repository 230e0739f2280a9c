#pragma once

#include <string>

#include <json.hpp>

#include "rocp/blocks.hpp"

namespace rocp {

// Canonical JSON encoding of expression trees, used by the CLI for
// expression files and debugging dumps.  Every node is an object with a
// "kind" discriminator:
//
//   {"kind":"unit"}
//   {"kind":"sphere","degree":{"fixed":F,"underlying":U}}   (ctheta, moore alike)
//   {"kind":"sum","summands":[...]}
//   {"kind":"tensor","factors":[...]}
//   {"kind":"free_norm","prime":P,"index":I}                (t_theta, dsa_factor alike)
//   {"kind":"dsa_model","prime":P}

inline nlohmann::json degree_to_json(RODegree d) {
    return {{"fixed", d.fixed}, {"underlying", d.underlying}};
}

inline RODegree degree_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("fixed") || !j.contains("underlying"))
        throw std::invalid_argument("degree: expected {\"fixed\":..,\"underlying\":..}");
    return {j.at("fixed").get<long long>(), j.at("underlying").get<long long>()};
}

inline nlohmann::json expr_to_json(const SpectrumExpr& e) {
    using nlohmann::json;
    return std::visit(
        [](const auto& node) -> json {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, UnitExpr>) {
                return {{"kind", "unit"}};
            } else if constexpr (std::is_same_v<T, SphereExpr>) {
                return {{"kind", "sphere"}, {"degree", degree_to_json(node.degree)}};
            } else if constexpr (std::is_same_v<T, CThetaExpr>) {
                return {{"kind", "ctheta"}, {"degree", degree_to_json(node.degree)}};
            } else if constexpr (std::is_same_v<T, MooreExpr>) {
                return {{"kind", "moore"}, {"degree", degree_to_json(node.degree)}};
            } else if constexpr (std::is_same_v<T, SumExpr>) {
                json arr = json::array();
                for (const auto& x : node.summands) arr.push_back(expr_to_json(x));
                return {{"kind", "sum"}, {"summands", arr}};
            } else if constexpr (std::is_same_v<T, TensorExpr>) {
                json arr = json::array();
                for (const auto& x : node.factors) arr.push_back(expr_to_json(x));
                return {{"kind", "tensor"}, {"factors", arr}};
            } else if constexpr (std::is_same_v<T, FreeNormExpr>) {
                return {{"kind", "free_norm"}, {"prime", node.p.value()}, {"index", node.index}};
            } else if constexpr (std::is_same_v<T, TThetaExpr>) {
                return {{"kind", "t_theta"}, {"prime", node.p.value()}, {"index", node.index}};
            } else if constexpr (std::is_same_v<T, DsaFactorExpr>) {
                return {{"kind", "dsa_factor"}, {"prime", node.p.value()}, {"index", node.index}};
            } else {
                static_assert(std::is_same_v<T, DsaModelExpr>);
                return {{"kind", "dsa_model"}, {"prime", node.p.value()}};
            }
        },
        e.node);
}

inline SpectrumExpr expr_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("expression: expected an object with a \"kind\" field");
    const std::string kind = j.at("kind").get<std::string>();
    auto prime_of = [&] { return Prime(j.at("prime").get<int>()); };
    auto index_of = [&] { return j.at("index").get<int>(); };
    auto list_of = [&](const char* field) {
        std::vector<SpectrumExpr> out;
        for (const auto& x : j.at(field)) out.push_back(expr_from_json(x));
        return out;
    };
    try {
        if (kind == "unit") return unit_expr();
        if (kind == "sphere") return sphere(degree_from_json(j.at("degree")));
        if (kind == "ctheta") return ctheta(degree_from_json(j.at("degree")));
        if (kind == "moore") return moore(degree_from_json(j.at("degree")));
        if (kind == "sum") return sum_expr(list_of("summands"));
        if (kind == "tensor") return tensor_expr(list_of("factors"));
        if (kind == "free_norm") return free_norm(prime_of(), index_of());
        if (kind == "t_theta") return t_theta(prime_of(), index_of());
        if (kind == "dsa_factor") return dsa_factor(prime_of(), index_of());
        if (kind == "dsa_model") return dsa_model(prime_of());
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("expression: malformed \"" + kind + "\" node: " + e.what());
    }
    throw std::invalid_argument("expression: unknown kind \"" + kind + "\"");
}

}  // namespace rocp
