#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "orthops/classify.hpp"
#include "orthops/diffop.hpp"
#include "orthops/opsfam.hpp"
#include "orthops/poly.hpp"
#include "orthops/rational.hpp"
#include "orthops/rootcheck.hpp"

// JSON bindings (nlohmann ADL serializers). Scalars travel as exact text
// ("p/q", "p/q+r/s*i"), never as floating point, so serialization round
// trips are loss-free. Object keys come back alphabetically sorted from
// nlohmann's default map storage, which keeps CLI output byte-deterministic.

namespace orthops {

void to_json(nlohmann::json& j, const Rational& r);
void from_json(const nlohmann::json& j, Rational& r);
void to_json(nlohmann::json& j, const GaussianRational& g);
void from_json(const nlohmann::json& j, GaussianRational& g);

template <typename K>
void to_json(nlohmann::json& j, const Polynomial<K>& p) {
    j = nlohmann::json{{"coeffs", p.coeffs()}};
}

template <typename K>
void from_json(const nlohmann::json& j, Polynomial<K>& p) {
    p = Polynomial<K>(j.at("coeffs").get<std::vector<K>>());
}

template <typename K>
void to_json(nlohmann::json& j, const DiffOp<K>& op) {
    j = nlohmann::json{{"pk", op.pk}};
}

template <typename K>
void from_json(const nlohmann::json& j, DiffOp<K>& op) {
    op.pk = j.at("pk").get<std::vector<Polynomial<K>>>();
}

template <typename K>
void to_json(nlohmann::json& j, const GammaSeq<K>& g) {
    j = nlohmann::json{{"gammas", g.gammas}};
}

template <typename K>
void from_json(const nlohmann::json& j, GammaSeq<K>& g) {
    g.gammas = j.at("gammas").get<std::vector<K>>();
}

// Three-term recurrence tables use 1-based semantic indices. Monic form:
// "c" is a plain array whose entry j holds c_{j+1}; "lam" is index-aligned
// with nulls at positions 0 and 1, so position n holds lambda_n for n >= 2.
// General form: "A" and "B" start at semantic index 0 (plain arrays);
// "C" is index-aligned with one null at position 0.
template <typename K>
void to_json(nlohmann::json& j, const TTRSpec<K>& spec) {
    j = nlohmann::json::object();
    j["p0"] = spec.p0;
    if (spec.kind == TTRSpec<K>::Kind::monic) {
        j["kind"] = "monic";
        j["c"] = spec.c;
        nlohmann::json lam = nlohmann::json::array({nullptr, nullptr});
        for (const K& v : spec.lam) lam.push_back(v);
        j["lam"] = lam;
    } else {
        j["kind"] = "general";
        j["A"] = spec.A;
        j["B"] = spec.B;
        nlohmann::json cc = nlohmann::json::array({nullptr});
        for (const K& v : spec.C) cc.push_back(v);
        j["C"] = cc;
    }
}

namespace detail {

// Parses an index-aligned table: the first `null_prefix` entries must be
// null (the semantic indices where the table is undefined).
template <typename K>
std::vector<K> aligned_table(const nlohmann::json& arr, std::size_t null_prefix,
                             const char* name) {
    if (!arr.is_array())
        throw std::invalid_argument(std::string("TTRSpec: ") + name +
                                    " must be an array");
    std::vector<K> out;
    for (std::size_t k = 0; k < arr.size(); ++k) {
        if (k < null_prefix) {
            if (!arr[k].is_null())
                throw std::invalid_argument(
                    std::string("TTRSpec: ") + name + " entry " +
                    std::to_string(k) + " must be null (undefined index)");
        } else {
            out.push_back(arr[k].get<K>());
        }
    }
    return out;
}

}  // namespace detail

template <typename K>
void from_json(const nlohmann::json& j, TTRSpec<K>& spec) {
    const std::string kind = j.at("kind").get<std::string>();
    spec = TTRSpec<K>{};
    if (j.contains("p0")) spec.p0 = j.at("p0").get<K>();
    if (kind == "monic") {
        spec.kind = TTRSpec<K>::Kind::monic;
        if (j.contains("c")) spec.c = j.at("c").get<std::vector<K>>();
        if (j.contains("lam"))
            spec.lam = detail::aligned_table<K>(j.at("lam"), 2, "lam");
    } else if (kind == "general") {
        spec.kind = TTRSpec<K>::Kind::general;
        if (j.contains("A")) spec.A = j.at("A").get<std::vector<K>>();
        if (j.contains("B")) spec.B = j.at("B").get<std::vector<K>>();
        if (j.contains("C"))
            spec.C = detail::aligned_table<K>(j.at("C"), 1, "C");
    } else {
        throw std::invalid_argument("TTRSpec: kind must be \"monic\" or \"general\"");
    }
}

template <typename K>
void to_json(nlohmann::json& j, const ClassifyResult<K>& r) {
    if (r.is_exp_form()) {
        j = nlohmann::json{{"verdict", "exp_form"},
                           {"gamma0", r.params.gamma0},
                           {"alpha", r.params.alpha},
                           {"beta", r.params.beta}};
    } else {
        j = nlohmann::json{{"verdict", "not_ops"},
                           {"index", r.witness_index},
                           {"reason", to_string(r.reason)}};
    }
}

void to_json(nlohmann::json& j, const RootReport& r);

}  // namespace orthops
