#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tautring/context.hpp"
#include "tautring/rational.hpp"

namespace tautring {

/// Number of surviving Pontryagin monomials per bidegree (p, s). These are
/// upper bounds for the dimensions of the graded pieces R^p_(s).
struct DimensionTable {
    int genus = 0;
    std::optional<int> gonality;
    std::map<std::pair<int, int>, int> entries;  ///< (p, s) -> count, full grid 0<=p<=g, 0<=s<=g-1

    [[nodiscard]] int at(int p, int s) const;
};

DimensionTable dimension_table(const JacobianContext& ctx);

struct GeneratorInfo {
    std::string name;
    Bidegree bidegree;
};

/// theta^theta_exponent eta^eta_exponent = 0.
struct MonomialRelation {
    int theta_exponent = 0;
    int eta_exponent = 0;
    friend bool operator==(const MonomialRelation&, const MonomialRelation&) = default;
    friend auto operator<=>(const MonomialRelation&, const MonomialRelation&) = default;
};

/// Presentation of the tautological ring of a d-gonal curve as computed in the
/// model, with the checks that led to it.
struct PresentationReport {
    int genus = 0;
    int gonality = 0;
    std::vector<GeneratorInfo> generators;
    std::vector<MonomialRelation> relations;
    std::optional<int> k;  ///< model-maximal k (trigonal only)
    /// (a, b) -> lambda with theta . <0^a 1^b> = lambda <0^(a-1) 1^b>.
    std::map<std::pair<int, int>, Rational> lambda_table;
    DimensionTable dimensions;
    bool verdict = false;
    std::vector<std::string> diagnostics;  ///< failed checks
    std::vector<std::string> findings;     ///< noteworthy facts that do not fail the verdict
};

/// Checks R = Q[theta]/(theta^(g+1)) for gonality 2, g >= 2.
PresentationReport hyperelliptic_report(int genus);

/// Q[theta, eta]/(theta^(g+1), theta^(g-2) eta, ..., theta^(g+1-3k) eta^k, eta^(k+1))
/// for gonality 3, g >= 3, with k the model-maximal value.
PresentationReport trigonal_report(int genus);

/// floor((g+1)/2): w^1..w^d generate R for every curve of genus g.
int generator_bound(int genus);

}  // namespace tautring
