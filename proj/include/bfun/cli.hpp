#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bfun/multiplier.hpp"
#include "bfun/newton2d.hpp"
#include "bfun/serialize.hpp"
#include "bfun/snc_bounds.hpp"

namespace bfun {

/// One batch problem: a command name and its command-specific payload.
struct ProblemSpec {
    std::string command;
    Json payload;
};

/// Flag-level overrides applied on top of the payload.
struct RunOverrides {
    std::optional<unsigned> ell_max;
    std::optional<OracleBounds> bounds;
    std::optional<unsigned> cap;
};

struct Report {
    Json doc;
    std::string text;
    int exit_code = 0;
};

namespace detail {

inline const Json& require_field(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object() || !j.contains(key))
        throw SchemaError("missing required field", path + "." + key);
    return j[key];
}

inline unsigned get_unsigned(const Json& j, const char* key, const std::string& path,
                             std::optional<unsigned> fallback = std::nullopt) {
    if (!j.is_object() || !j.contains(key)) {
        if (fallback) return *fallback;
        throw SchemaError("missing required field", path + "." + key);
    }
    if (!j[key].is_number_unsigned())
        throw SchemaError("field must be a non-negative integer", path + "." + key);
    return j[key].get<unsigned>();
}

inline std::string get_string(const Json& j, const char* key, const std::string& path) {
    const Json& v = require_field(j, key, path);
    if (!v.is_string()) throw SchemaError("field must be a string", path + "." + key);
    return v.get<std::string>();
}

inline Rational get_rational(const Json& j, const char* key, const std::string& path) {
    const Json& v = require_field(j, key, path);
    if (v.is_number_unsigned()) return Rational(v.get<unsigned long long>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (!v.is_string()) throw SchemaError("field must be a rational string", path + "." + key);
    try {
        return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
        throw SchemaError(e.what(), path + "." + key);
    }
}

inline std::vector<unsigned> get_unsigned_vector(const Json& j, const char* key,
                                                 const std::string& path) {
    const Json& v = require_field(j, key, path);
    if (!v.is_array()) throw SchemaError("field must be an array", path + "." + key);
    std::vector<unsigned> out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number_unsigned())
            throw SchemaError("entries must be non-negative integers",
                              path + "." + key + "[" + std::to_string(i) + "]");
        out.push_back(v[i].get<unsigned>());
    }
    return out;
}

inline BFunction bfunction_from_roots_json(const Json& j, const std::string& path) {
    if (!j.is_array()) throw SchemaError("roots must be an array of rational strings", path);
    BFunction b;
    for (size_t i = 0; i < j.size(); ++i) {
        const std::string ipath = path + "[" + std::to_string(i) + "]";
        if (!j[i].is_string()) throw SchemaError("root must be a rational string", ipath);
        try {
            b.add_root(parse_rational(j[i].get<std::string>()));
        } catch (const Error& e) {
            throw SchemaError(e.what(), ipath);
        }
    }
    return b;
}

inline OracleBounds bounds_from_json(const Json& payload, const std::string& path,
                                     const RunOverrides& over) {
    if (over.bounds) return *over.bounds;
    OracleBounds def;
    if (!payload.contains("bounds")) return def;
    const Json& b = payload["bounds"];
    const std::string bpath = path + ".bounds";
    if (!b.is_object()) throw SchemaError("bounds must be an object", bpath);
    def.max_order = get_unsigned(b, "order", bpath, def.max_order);
    def.max_coeff_degree = get_unsigned(b, "coeff_degree", bpath, def.max_coeff_degree);
    def.max_s_degree = get_unsigned(b, "s_degree", bpath, def.max_s_degree);
    def.max_b_degree = get_unsigned(b, "b_degree", bpath, def.max_b_degree);
    return def;
}

inline Json bounds_to_json(const OracleBounds& b) {
    return Json{{"order", b.max_order},
                {"coeff_degree", b.max_coeff_degree},
                {"s_degree", b.max_s_degree},
                {"b_degree", b.max_b_degree}};
}

inline std::string bounds_to_text(const OracleBounds& b) {
    return "order=" + std::to_string(b.max_order) +
           " coeff_degree=" + std::to_string(b.max_coeff_degree) +
           " s_degree=" + std::to_string(b.max_s_degree) +
           " b_degree=" + std::to_string(b.max_b_degree);
}

inline std::string join_rationals(const std::vector<Rational>& v) {
    std::string out;
    for (const auto& r : v) {
        if (!out.empty()) out += ", ";
        out += rat_to_string(r);
    }
    return out;
}

inline std::string join_rational_set(const std::set<Rational>& v) {
    return join_rationals(std::vector<Rational>(v.begin(), v.end()));
}

inline std::string exponents_to_text(const Exponents& e) {
    std::string out = "[";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(e[i]);
    }
    return out + "]";
}

} // namespace detail

/// Validate and wrap a raw JSON document as a ProblemSpec.
inline ProblemSpec parse_problem(const Json& j) {
    if (!j.is_object()) throw SchemaError("problem must be a JSON object", "$");
    if (!j.contains("command") || !j["command"].is_string())
        throw SchemaError("missing command string", "$.command");
    static const std::set<std::string> known{
        "solve-b",  "snc-bound",   "candidates",   "lct",          "membership",
        "jumps",    "budur-saito", "min-exponent", "newton-resolve"};
    ProblemSpec spec;
    spec.command = j["command"].get<std::string>();
    if (!known.count(spec.command)) throw SchemaError("unknown command", "$.command");
    if (!j.contains("payload") || !j["payload"].is_object())
        throw SchemaError("missing payload object", "$.payload");
    spec.payload = j["payload"];
    return spec;
}

namespace detail {

inline Report run_solve_b(const Json& payload, const RunOverrides& over) {
    const std::string path = "$.payload";
    unsigned vars = get_unsigned(payload, "vars", path);
    MPoly f = mpoly_from_json(require_field(payload, "f", path), vars, path + ".f");
    MPoly g = payload.contains("g")
                  ? mpoly_from_json(payload["g"], vars, path + ".g")
                  : MPoly::constant(vars, Rational(1));
    OracleBounds bounds = bounds_from_json(payload, path, over);
    OracleResult res = solve_bfunction(f, g, bounds);

    auto names = default_var_names(vars);
    Report rep;
    rep.doc = Json{{"command", "solve-b"},
                   {"f", mpoly_to_string(f, names)},
                   {"g", mpoly_to_string(g, names)},
                   {"bounds", bounds_to_json(bounds)},
                   {"degree", res.b.degree()},
                   {"roots", roots_to_json(res.b)},
                   {"factored", res.b.factored_string()},
                   {"witness", weyl_to_json(res.witness)},
                   {"witness_rendered", weyl_to_string(res.witness, names)}};
    rep.text = "b-function of g*f^s\n";
    rep.text += "  f = " + mpoly_to_string(f, names) + "\n";
    rep.text += "  g = " + mpoly_to_string(g, names) + "\n";
    rep.text += "  bounds: " + bounds_to_text(bounds) + "\n";
    rep.text += "  b = " + res.b.factored_string() + "\n";
    rep.text += "  roots: " + join_rationals(res.b.root_list()) + "\n";
    rep.text += "  witness: " + weyl_to_string(res.witness, names) + "\n";
    return rep;
}

inline Report run_snc_bound(const Json& payload) {
    const std::string path = "$.payload";
    const std::string variant =
        payload.contains("variant") ? get_string(payload, "variant", path) : "general";
    BFunction bound;
    unsigned m = get_unsigned(payload, "m", path, 0u);
    if (variant == "shift") {
        BFunction b = bfunction_from_roots_json(require_field(payload, "roots", path),
                                                path + ".roots");
        bound = shift_bound(b, m);
    } else {
        MonomialData d(get_unsigned_vector(payload, "a", path),
                       get_unsigned_vector(payload, "b", path), m);
        if (variant == "general") {
            bound = monomial_bound_general(d);
        } else if (variant == "m0") {
            bound = monomial_bound_m0(d);
        } else if (variant == "smooth-factor") {
            bound = monomial_bound_smooth_factor(d);
        } else {
            throw SchemaError("variant must be general, m0, smooth-factor or shift",
                              path + ".variant");
        }
    }
    Report rep;
    rep.doc = Json{{"command", "snc-bound"},
                   {"variant", variant},
                   {"m", m},
                   {"roots", roots_to_json(bound)},
                   {"factored", bound.factored_string()}};
    rep.text = "divisibility bound (" + variant + ", m=" + std::to_string(m) + ")\n";
    rep.text += "  bound = " + bound.factored_string() + "\n";
    rep.text += "  roots: " + join_rationals(bound.root_list()) + "\n";
    return rep;
}

inline Report run_candidates(const Json& payload, const RunOverrides& over) {
    const std::string path = "$.payload";
    ResolutionData res =
        resolution_from_json(require_field(payload, "resolution", path), path + ".resolution");
    const std::string family =
        payload.contains("family") ? get_string(payload, "family", path) : "lichtin";
    unsigned m = get_unsigned(payload, "m", path, 0u);
    unsigned ell_max = over.ell_max ? *over.ell_max : get_unsigned(payload, "ell_max", path, 2u);

    std::set<Rational> roots;
    bool escape = false;
    if (family == "lichtin") {
        roots = lichtin_candidates(res, ell_max);
    } else if (family == "g1") {
        bool exc_only = payload.contains("exceptional_only") &&
                        payload["exceptional_only"].is_boolean() &&
                        payload["exceptional_only"].get<bool>();
        CandidateRoots c = candidate_roots_g1(res, m, ell_max, exc_only);
        roots = std::move(c.roots);
        escape = c.integer_escape;
    } else if (family == "twisted") {
        CandidateRoots c = candidate_roots_twisted(res, m, ell_max);
        roots = std::move(c.roots);
        escape = c.integer_escape;
    } else {
        throw SchemaError("family must be lichtin, g1 or twisted", path + ".family");
    }
    Report rep;
    rep.doc = Json{{"command", "candidates"},
                   {"family", family},
                   {"m", m},
                   {"ell_max", ell_max},
                   {"roots", rational_set_to_json(roots)},
                   {"integer_escape", escape}};
    rep.text = "candidate roots (" + family + ", m=" + std::to_string(m) +
               ", ell_max=" + std::to_string(ell_max) + ")\n";
    rep.text += "  roots: " + join_rational_set(roots) + "\n";
    rep.text += std::string("  negative integers admissible: ") + (escape ? "yes" : "no") + "\n";
    return rep;
}

inline Report run_lct(const Json& payload) {
    const std::string path = "$.payload";
    ResolutionData res =
        resolution_from_json(require_field(payload, "resolution", path), path + ".resolution");
    Rational v = lct_g(res);
    Report rep;
    rep.doc = Json{{"command", "lct"}, {"lct", rat_to_string(v)}};
    rep.text = "lct = " + rat_to_string(v) + "\n";
    return rep;
}

inline Report run_membership(const Json& payload) {
    const std::string path = "$.payload";
    ResolutionData res =
        resolution_from_json(require_field(payload, "resolution", path), path + ".resolution");
    Rational lambda = get_rational(payload, "lambda", path);
    bool member = multiplier_membership(res, lambda);
    Report rep;
    rep.doc = Json{{"command", "membership"},
                   {"lambda", rat_to_string(lambda)},
                   {"member", member}};
    rep.text = "g in I(f^" + rat_to_string(lambda) + "): " + (member ? "yes" : "no") + "\n";
    return rep;
}

inline Report run_jumps(const Json& payload) {
    const std::string path = "$.payload";
    std::vector<unsigned> a = get_unsigned_vector(payload, "a", path);
    Rational T = get_rational(payload, "T", path);
    std::vector<Rational> jumps = jumping_numbers_snc(a, T);
    Json arr = Json::array();
    for (const auto& r : jumps) arr.push_back(rat_to_string(r));
    Report rep;
    rep.doc = Json{{"command", "jumps"}, {"T", rat_to_string(T)}, {"jumping_numbers", arr}};
    rep.text = "jumping numbers in (0," + rat_to_string(T) + "]: " + join_rationals(jumps) + "\n";
    return rep;
}

inline Report run_budur_saito(const Json& payload, const RunOverrides& over) {
    const std::string path = "$.payload";
    std::vector<unsigned> a = get_unsigned_vector(payload, "a", path);
    Rational alpha = get_rational(payload, "alpha", path);
    unsigned cap = over.cap ? *over.cap : get_unsigned(payload, "cap", path);
    BudurSaitoReport report = budur_saito_check(a, alpha, cap);

    auto exps_to_json = [](const std::vector<Exponents>& v) {
        Json arr = Json::array();
        for (const auto& e : v) arr.push_back(e);
        return arr;
    };
    Json per = Json::array();
    for (const auto& [g, b] : report.per_monomial_b)
        per.push_back(Json{{"g", g}, {"roots", roots_to_json(b)}});
    Report rep;
    rep.doc = Json{{"command", "budur-saito"},
                   {"alpha", rat_to_string(alpha)},
                   {"cap", cap},
                   {"bounds", bounds_to_json(monomial_oracle_bounds(a))},
                   {"side_a", exps_to_json(report.side_a)},
                   {"side_b", exps_to_json(report.side_b)},
                   {"symmetric_difference", exps_to_json(report.symmetric_difference)},
                   {"per_monomial", per}};
    rep.text = "V-filtration vs multiplier ideal at alpha = " + rat_to_string(alpha) + "\n";
    rep.text += "  side A (V-level >= alpha): " + std::to_string(report.side_a.size()) +
                " monomials\n";
    rep.text += "  side B (multiplier ideal): " + std::to_string(report.side_b.size()) +
                " monomials\n";
    rep.text += "  symmetric difference: " +
                std::to_string(report.symmetric_difference.size()) + "\n";
    for (const auto& e : report.symmetric_difference)
        rep.text += "    " + exponents_to_text(e) + "\n";
    return rep;
}

inline Report run_min_exponent(const Json& payload) {
    const std::string path = "$.payload";
    const bool have_roots = payload.contains("roots");
    const bool have_res = payload.contains("resolution");
    if (!have_roots && !have_res)
        throw SchemaError("need roots and/or resolution", path);

    Report rep;
    rep.doc = Json{{"command", "min-exponent"}};
    std::optional<BFunction> b;
    if (have_roots) {
        b = bfunction_from_roots_json(payload["roots"], path + ".roots");
        auto me = min_exponent_from_bfunction(*b);
        rep.doc["min_exponent"] = me ? Json(rat_to_string(*me)) : Json("infinite");
        rep.text += "minimal exponent = " + (me ? rat_to_string(*me) : "infinite") + "\n";
    }
    std::optional<ResolutionData> res;
    if (have_res) {
        res = resolution_from_json(payload["resolution"], path + ".resolution");
        auto bound = min_exponent_lower_bound(*res);
        rep.doc["lower_bound"] = bound ? Json(rat_to_string(*bound)) : Json("unbounded");
        rep.text += "resolution lower bound = " + (bound ? rat_to_string(*bound) : "unbounded") +
                    "\n";
    }
    if (b && res) {
        bool ok = saito_criterion_check(*b, *res);
        rep.doc["criterion_confirmed"] = ok;
        rep.text += std::string("criterion confirmed: ") + (ok ? "yes" : "no") + "\n";
    }
    return rep;
}

inline Report run_newton_resolve(const Json& payload) {
    const std::string path = "$.payload";
    MPoly f = mpoly_from_json(require_field(payload, "f", path), 2, path + ".f");
    std::vector<unsigned> g{0, 0};
    if (payload.contains("g")) {
        g = get_unsigned_vector(payload, "g", path);
        if (g.size() != 2) throw SchemaError("g must be a pair of exponents", path + ".g");
    }
    ResolutionData res = resolution_from_newton(f, {g[0], g[1]});
    Report rep;
    rep.doc = Json{{"command", "newton-resolve"},
                   {"f", mpoly_to_string(f)},
                   {"resolution", resolution_to_json(res)}};
    rep.text = "log resolution data for " + mpoly_to_string(f) + "\n";
    for (const auto& d : res.divisors) {
        rep.text += "  " + d.label + ": a=" + std::to_string(d.a) + " k=" + std::to_string(d.k) +
                    " b=" + std::to_string(d.b) +
                    (d.exceptional ? " (exceptional)" : " (strict transform)") + "\n";
    }
    return rep;
}

} // namespace detail

/// Dispatch one problem; exceptions become error reports with stable exit
/// codes (2 schema, 3 bounds exhausted, 4 hypothesis violations).
inline Report run(const ProblemSpec& spec, const RunOverrides& over = {}) {
    auto error_report = [](int code, const std::string& type, const std::string& msg,
                           const std::string& field = "") {
        Report rep;
        rep.exit_code = code;
        rep.doc = Json{{"error", Json{{"type", type}, {"message", msg}}}};
        if (!field.empty()) rep.doc["error"]["field"] = field;
        rep.text = "error (" + type + "): " + msg + "\n";
        return rep;
    };
    try {
        if (spec.command == "solve-b") return detail::run_solve_b(spec.payload, over);
        if (spec.command == "snc-bound") return detail::run_snc_bound(spec.payload);
        if (spec.command == "candidates") return detail::run_candidates(spec.payload, over);
        if (spec.command == "lct") return detail::run_lct(spec.payload);
        if (spec.command == "membership") return detail::run_membership(spec.payload);
        if (spec.command == "jumps") return detail::run_jumps(spec.payload);
        if (spec.command == "budur-saito") return detail::run_budur_saito(spec.payload, over);
        if (spec.command == "min-exponent") return detail::run_min_exponent(spec.payload);
        if (spec.command == "newton-resolve") return detail::run_newton_resolve(spec.payload);
        throw SchemaError("unknown command", "$.command");
    } catch (const SchemaError& e) {
        return error_report(2, "schema", e.what(), e.field);
    } catch (const BoundsExhausted& e) {
        return error_report(3, "bounds-exhausted", e.what());
    } catch (const HypothesisViolated& e) {
        return error_report(4, "hypothesis-violated", e.what());
    } catch (const PreconditionViolated& e) {
        return error_report(4, "precondition-violated", e.what());
    } catch (const MissingRootMinusOne& e) {
        return error_report(4, "missing-root-minus-one", e.what());
    } catch (const NonzeroShift& e) {
        return error_report(4, "nonzero-shift", e.what());
    } catch (const DegenerateInput& e) {
        return error_report(4, "degenerate-input", e.what());
    } catch (const NonReduced& e) {
        return error_report(4, "non-reduced", e.what());
    } catch (const ZeroPolynomial& e) {
        return error_report(4, "zero-polynomial", e.what());
    } catch (const NonvanishingAtOrigin& e) {
        return error_report(4, "nonvanishing-at-origin", e.what());
    } catch (const VariableMismatch& e) {
        return error_report(4, "variable-mismatch", e.what());
    } catch (const Error& e) {
        return error_report(1, "internal", e.what());
    }
}

} // namespace bfun
