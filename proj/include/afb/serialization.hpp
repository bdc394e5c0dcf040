/**
 * @file serialization.hpp
 * @brief JSON input/output formats for the CLI.
 *
 * Laurent polynomials travel as a list of [exponent, coefficient] pairs with
 * strictly increasing integer exponents and coefficients as "p" or "p/q"
 * strings. All other file formats are built from this one.
 */
#pragma once

#include "affine_bundle.hpp"
#include "laurent.hpp"
#include "report_types.hpp"
#include "section_curve.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace afb {

using json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline QLaurent laurent_from_json(const json& j, const std::string& field)
{
    if (!j.is_array())
        throw ParseError("field '" + field + "': expected a list of [exponent, coefficient] "
                                              "pairs");
    QLaurent p("u");
    bool have_prev = false;
    int prev = 0;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_string())
            throw ParseError("field '" + field + "': each term must be [integer exponent, "
                                                  "rational string]");
        const int e = item[0].get<int>();
        if (have_prev && e <= prev)
            throw ParseError("field '" + field + "': exponents must be strictly increasing");
        prev = e;
        have_prev = true;
        Rational c;
        try {
            c = parse_rational(item[1].get<std::string>());
        } catch (const std::invalid_argument& err) {
            throw ParseError("field '" + field + "': " + err.what());
        }
        p.add_term(e, c);
    }
    return p;
}

inline json laurent_to_json(const QLaurent& p)
{
    json out = json::array();
    for (const auto& [e, c] : p.terms())
        out.push_back(json::array({e, to_string(c)}));
    return out;
}

// Accepts either a transition cocycle {"a": ..., "b": ...} or a canonical
// family point {"n": ..., "t": [...]}.
inline AffineBundleCocycle cocycle_from_json(const json& j)
{
    if (!j.is_object())
        throw ParseError("input: expected an object");
    if (j.contains("a") || j.contains("b")) {
        if (!j.contains("a") || !j.contains("b"))
            throw ParseError("input: a cocycle needs both fields 'a' and 'b'");
        const QLaurent a = laurent_from_json(j.at("a"), "a");
        const QLaurent b = laurent_from_json(j.at("b"), "b");
        if (!a.is_monomial())
            throw ParseError("field 'a': must be a unit (exactly one term)");
        return AffineBundleCocycle(a, b);
    }
    if (j.contains("n") && j.contains("t")) {
        if (!j.at("n").is_number_integer())
            throw ParseError("field 'n': expected an integer");
        const int n = j.at("n").get<int>();
        if (n < 2)
            throw ParseError("field 'n': canonical form needs n >= 2");
        if (!j.at("t").is_array())
            throw ParseError("field 't': expected a list of rational strings");
        std::vector<Rational> t;
        for (const auto& item : j.at("t")) {
            if (!item.is_string())
                throw ParseError("field 't': entries must be rational strings");
            try {
                t.push_back(parse_rational(item.get<std::string>()));
            } catch (const std::invalid_argument& err) {
                throw ParseError(std::string("field 't': ") + err.what());
            }
        }
        if (static_cast<int>(t.size()) != n - 1)
            throw ParseError("field 't': expected n-1 = " + std::to_string(n - 1) + " entries");
        return CanonicalAffineBundle(n, t).cocycle();
    }
    throw ParseError("input: expected {\"a\":..., \"b\":...} or {\"n\":..., \"t\":[...]}");
}

// {"n": int, "l": int, "s": poly, "q": poly}, or {"n": int, "l": 0,
// "infinity": true} for the section at infinity.
inline SectionCurve section_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer())
        throw ParseError("section: expected an object with integer field 'n'");
    const int n = j.at("n").get<int>();
    if (j.value("infinity", false))
        return SectionCurve::infinity_section(n);
    if (!j.contains("l") || !j.at("l").is_number_integer())
        throw ParseError("section: expected integer field 'l'");
    const int l = j.at("l").get<int>();
    if (!j.contains("s") || !j.contains("q"))
        throw ParseError("section: expected polynomial fields 's' and 'q'");
    const QLaurent s = laurent_from_json(j.at("s"), "s");
    const QLaurent q = laurent_from_json(j.at("q"), "q");
    try {
        return SectionCurve(n, l, s, q);
    } catch (const std::invalid_argument& err) {
        throw ParseError(std::string("section: ") + err.what());
    }
}

inline json record_to_json(const ReportRecord& r)
{
    json j;
    j["id"] = r.id;
    j["inputs"] = r.inputs;
    j["computed"] = r.computed;
    j["expected"] = r.expected;
    j["citation"] = r.citation;
    j["status"] = r.pass ? "pass" : "fail";
    return j;
}

inline json report_to_json(const VerificationReport& rep)
{
    json j;
    j["suite"] = {{"n_min", rep.n_min},
                  {"n_max", rep.n_max},
                  {"l_min", rep.l_min},
                  {"l_max", rep.l_max},
                  {"total", rep.records.size()},
                  {"failures", rep.failures()},
                  {"status", rep.pass() ? "pass" : "fail"}};
    json records = json::array();
    for (const auto& r : rep.records)
        records.push_back(record_to_json(r));
    j["records"] = std::move(records);
    return j;
}

} // namespace afb
