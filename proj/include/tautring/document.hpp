#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "tautring/gonality.hpp"
#include "tautring/newton_algebra.hpp"
#include "tautring/pontryagin.hpp"

namespace tautring {

using Json = nlohmann::ordered_json;

/// Malformed document: bad JSON, wrong shape, bad coefficient, index out of range.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using AnyElement = std::variant<NElement, PElement>;

/// {"genus", "gonality", "side", "terms": [{"monomial": [...], "coeff": "a/b"}]}
/// Newton monomials list generator indices with repetition, Pontryagin
/// monomials list their parts.
Json serialize_element(const NElement& x);
Json serialize_element(const PElement& x);
Json serialize_element(const AnyElement& x);

/// Inverse of serialize_element. Killed monomials are dropped with a warning
/// on `warnings`. Throws ParseError, or DomainError for an invalid genus or
/// gonality.
AnyElement parse_element(const Json& doc, std::ostream& warnings);
AnyElement parse_element(const std::string& text, std::ostream& warnings);

/// One row per term: "monomial,coeff" with space-separated monomial entries.
std::string element_csv(const AnyElement& x);

Json dimension_table_json(const DimensionTable& t);
/// Header "p,s,dim", rows in (p, s) order.
std::string dimension_table_csv(const DimensionTable& t);

Json report_json(const PresentationReport& r);

}  // namespace tautring
