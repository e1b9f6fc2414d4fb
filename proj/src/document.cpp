#include "tautring/document.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

namespace tautring {

namespace {

Json context_header(const JacobianContext& ctx, const char* side) {
    Json doc;
    doc["genus"] = ctx.genus();
    doc["gonality"] = ctx.gonality() ? Json(*ctx.gonality()) : Json(nullptr);
    doc["side"] = side;
    return doc;
}

Json term(const std::vector<int>& monomial, const Rational& c) {
    Json t;
    t["monomial"] = monomial;
    t["coeff"] = c.str();
    return t;
}

std::string join(const std::vector<int>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

template <typename E, typename F>
void read_terms(const Json& terms, E& out, F&& make_monomial, std::ostream& warnings) {
    if (!terms.is_array()) throw ParseError("'terms' must be an array");
    for (const auto& t : terms) {
        if (!t.is_object() || !t.contains("monomial") || !t.contains("coeff"))
            throw ParseError("each term needs 'monomial' and 'coeff'");
        if (!t["monomial"].is_array()) throw ParseError("'monomial' must be an array of integers");
        std::vector<int> entries;
        for (const auto& v : t["monomial"]) {
            if (!v.is_number_integer()) throw ParseError("'monomial' must be an array of integers");
            entries.push_back(v.get<int>());
        }
        if (!t["coeff"].is_string()) throw ParseError("'coeff' must be a string \"a/b\"");
        Rational c;
        try {
            c = Rational::parse(t["coeff"].get<std::string>());
        } catch (const std::exception& e) {
            throw ParseError(std::string("bad coefficient: ") + e.what());
        }
        const auto m = make_monomial(entries);
        if (!m || !out.add(*m, c))
            warnings << "warning: monomial [" << join(entries, ",") << "] vanishes identically and was dropped\n";
    }
}

}  // namespace

Json serialize_element(const NElement& x) {
    Json doc = context_header(x.context(), "newton");
    doc["terms"] = Json::array();
    for (const auto& [m, c] : x.terms()) doc["terms"].push_back(term(m.indices(), c));
    return doc;
}

Json serialize_element(const PElement& x) {
    Json doc = context_header(x.context(), "pontryagin");
    doc["terms"] = Json::array();
    for (const auto& [m, c] : x.terms()) doc["terms"].push_back(term(m.parts, c));
    return doc;
}

Json serialize_element(const AnyElement& x) {
    return std::visit([](const auto& e) { return serialize_element(e); }, x);
}

AnyElement parse_element(const Json& doc, std::ostream& warnings) {
    if (!doc.is_object()) throw ParseError("element document must be a JSON object");
    for (const char* key : {"genus", "side", "terms"})
        if (!doc.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
    if (!doc["genus"].is_number_integer()) throw ParseError("'genus' must be an integer");
    std::optional<int> gonality;
    if (doc.contains("gonality") && !doc["gonality"].is_null()) {
        if (!doc["gonality"].is_number_integer()) throw ParseError("'gonality' must be an integer or null");
        gonality = doc["gonality"].get<int>();
    }
    const JacobianContext ctx(doc["genus"].get<int>(), gonality);
    const int g = ctx.genus();
    if (!doc["side"].is_string()) throw ParseError("'side' must be a string");
    const auto side = doc["side"].get<std::string>();

    if (side == "newton") {
        NElement x(ctx);
        read_terms(doc["terms"], x, [&](const std::vector<int>& idx) {
            for (int i : idx)
                if (i < 1 || i > g)
                    throw ParseError("generator index " + std::to_string(i) + " outside [1, " + std::to_string(g) + "]");
            // N^g = 0
            if (std::find(idx.begin(), idx.end(), g) != idx.end()) return std::optional<NMonomial>();
            return std::optional(NMonomial::from_indices(ctx, idx));
        }, warnings);
        return x;
    }
    if (side == "pontryagin") {
        PElement x(ctx);
        read_terms(doc["terms"], x, [&](const std::vector<int>& parts) {
            for (int s : parts)
                if (s < 0 || s > g - 2)
                    throw ParseError("part " + std::to_string(s) + " outside [0, " + std::to_string(g - 2) + "]");
            if (static_cast<int>(parts.size()) > g) throw ParseError("more than g parts");
            return std::optional(PMonomial(parts));
        }, warnings);
        return x;
    }
    throw ParseError("'side' must be \"newton\" or \"pontryagin\"");
}

AnyElement parse_element(const std::string& text, std::ostream& warnings) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_element(doc, warnings);
}

std::string element_csv(const AnyElement& x) {
    const Json doc = serialize_element(x);
    std::ostringstream os;
    os << "monomial,coeff\n";
    for (const auto& t : doc["terms"]) os << join(t["monomial"].get<std::vector<int>>(), " ") << ',' << t["coeff"].get<std::string>() << '\n';
    return os.str();
}

Json dimension_table_json(const DimensionTable& t) {
    Json doc;
    doc["genus"] = t.genus;
    doc["gonality"] = t.gonality ? Json(*t.gonality) : Json(nullptr);
    doc["entries"] = Json::array();
    for (const auto& [ps, n] : t.entries) doc["entries"].push_back(Json{{"p", ps.first}, {"s", ps.second}, {"dim", n}});
    return doc;
}

std::string dimension_table_csv(const DimensionTable& t) {
    std::ostringstream os;
    os << "p,s,dim\n";
    for (const auto& [ps, n] : t.entries) os << ps.first << ',' << ps.second << ',' << n << '\n';
    return os.str();
}

Json report_json(const PresentationReport& r) {
    Json doc;
    doc["genus"] = r.genus;
    doc["gonality"] = r.gonality;
    doc["generators"] = Json::array();
    for (const auto& gen : r.generators)
        doc["generators"].push_back(Json{{"name", gen.name}, {"bidegree", {gen.bidegree.p, gen.bidegree.s}}});
    doc["relations"] = Json::array();
    for (const auto& rel : r.relations) doc["relations"].push_back(Json{{"theta", rel.theta_exponent}, {"eta", rel.eta_exponent}});
    doc["k"] = r.k ? Json(*r.k) : Json(nullptr);
    doc["lambda_table"] = Json::array();
    for (const auto& [ab, lambda] : r.lambda_table)
        doc["lambda_table"].push_back(Json{{"a", ab.first}, {"b", ab.second}, {"lambda", lambda.str()}});
    doc["dimensions"] = dimension_table_json(r.dimensions)["entries"];
    doc["verdict"] = r.verdict;
    doc["diagnostics"] = r.diagnostics;
    doc["findings"] = r.findings;
    return doc;
}

}  // namespace tautring
