#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bfun/bfunction.hpp"
#include "bfun/mpoly.hpp"
#include "bfun/parse.hpp"
#include "bfun/resolution.hpp"
#include "bfun/weyl.hpp"

namespace bfun {

using Json = nlohmann::json;

inline Json rational_to_json(const Rational& q) { return rat_to_string(q); }

inline Json roots_to_json(const BFunction& b) {
    Json arr = Json::array();
    for (const auto& r : b.root_list()) arr.push_back(rat_to_string(r));
    return arr;
}

inline Json rational_set_to_json(const std::set<Rational>& roots) {
    Json arr = Json::array();
    for (const auto& r : roots) arr.push_back(rat_to_string(r));
    return arr;
}

/// Canonical term-list form: [[coefficient-string, [e1..en]], ...].
inline Json mpoly_to_json(const MPoly& p) {
    Json arr = Json::array();
    for (const auto& [cs, e] : mpoly_to_terms(p)) arr.push_back(Json::array({cs, e}));
    return arr;
}

inline MPoly mpoly_from_json(const Json& j, unsigned nvars, const std::string& path) {
    if (j.is_string()) {
        try {
            return parse_mpoly(j.get<std::string>(), nvars);
        } catch (const Error& e) {
            throw SchemaError(e.what(), path);
        }
    }
    if (!j.is_array()) throw SchemaError("polynomial must be an infix string or a term list", path);
    MPoly p(nvars);
    for (size_t i = 0; i < j.size(); ++i) {
        const Json& t = j[i];
        const std::string tpath = path + "[" + std::to_string(i) + "]";
        if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_array())
            throw SchemaError("term must be [coefficient-string, [e1..en]]", tpath);
        Exponents e;
        for (const auto& x : t[1]) {
            if (!x.is_number_unsigned()) throw SchemaError("exponents must be non-negative integers", tpath);
            e.push_back(x.get<unsigned>());
        }
        if (e.size() != nvars) throw SchemaError("exponent arity differs from vars", tpath);
        try {
            p.add_term(e, parse_rational(t[0].get<std::string>()));
        } catch (const Error& err) {
            throw SchemaError(err.what(), tpath);
        }
    }
    return p;
}

inline Json resolution_to_json(const ResolutionData& res) {
    Json divisors = Json::array();
    for (const auto& d : res.divisors) {
        divisors.push_back(Json{{"label", d.label},
                                {"a", d.a},
                                {"k", d.k},
                                {"b", d.b},
                                {"exceptional", d.exceptional}});
    }
    return Json{{"divisors", divisors},
                {"reduced", res.reduced},
                {"strict_transform_smooth", res.strict_transform_smooth}};
}

inline ResolutionData resolution_from_json(const Json& j, const std::string& path) {
    if (!j.is_object()) throw SchemaError("resolution table must be an object", path);
    ResolutionData res;
    if (!j.contains("divisors") || !j["divisors"].is_array())
        throw SchemaError("missing divisors array", path + ".divisors");
    if (j["divisors"].empty())
        throw SchemaError("divisors must be non-empty", path + ".divisors");
    for (size_t i = 0; i < j["divisors"].size(); ++i) {
        const Json& d = j["divisors"][i];
        const std::string dpath = path + ".divisors[" + std::to_string(i) + "]";
        DivisorRecord rec;
        if (d.contains("label")) {
            if (!d["label"].is_string()) throw SchemaError("label must be a string", dpath + ".label");
            rec.label = d["label"].get<std::string>();
        }
        for (const char* key : {"a", "k", "b"}) {
            if (!d.contains(key) || !d[key].is_number_unsigned())
                throw SchemaError("divisor field must be a non-negative integer",
                                  dpath + "." + key);
        }
        rec.a = d["a"].get<unsigned>();
        rec.k = d["k"].get<unsigned>();
        rec.b = d["b"].get<unsigned>();
        if (!d.contains("exceptional") || !d["exceptional"].is_boolean())
            throw SchemaError("divisor field must be a boolean", dpath + ".exceptional");
        rec.exceptional = d["exceptional"].get<bool>();
        res.divisors.push_back(std::move(rec));
    }
    auto flag = [&](const char* key) {
        if (!j.contains(key) || !j[key].is_boolean())
            throw SchemaError("flag must be a boolean", path + "." + key);
        return j[key].get<bool>();
    };
    res.reduced = flag("reduced");
    res.strict_transform_smooth = flag("strict_transform_smooth");
    return res;
}

/// Operator rendered term by term: coefficient, derivative exponents, s power.
inline Json weyl_to_json(const WeylOperator& op) {
    Json arr = Json::array();
    for (const auto& [key, coeff] : op.terms()) {
        arr.push_back(Json{{"coeff", mpoly_to_json(coeff)},
                           {"partial", key.beta},
                           {"s", key.spow}});
    }
    return arr;
}

inline std::string weyl_to_string(const WeylOperator& op,
                                  const std::vector<std::string>& names) {
    if (op.is_zero()) return "0";
    std::string out;
    for (const auto& [key, coeff] : op.terms()) {
        if (!out.empty()) out += " + ";
        std::string part;
        if (coeff.is_constant() && coeff.constant_value() == 1) {
            part = "";
        } else if (coeff.terms().size() == 1) {
            part = mpoly_to_string(coeff, names) + "*";
        } else {
            part = "(" + mpoly_to_string(coeff, names) + ")*";
        }
        std::string ops;
        for (unsigned i = 0; i < key.beta.size(); ++i) {
            if (key.beta[i] == 0) continue;
            if (!ops.empty()) ops += "*";
            ops += "d/d" + names.at(i);
            if (key.beta[i] > 1) ops += "^" + std::to_string(key.beta[i]);
        }
        if (key.spow > 0) {
            if (!ops.empty()) ops += "*";
            ops += "s";
            if (key.spow > 1) ops += "^" + std::to_string(key.spow);
        }
        if (ops.empty()) ops = "1";
        if (part.empty() && ops.empty()) part = "1";
        out += part + ops;
    }
    return out;
}

} // namespace bfun
