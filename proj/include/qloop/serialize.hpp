#pragma once

#include "qloop/criterion.hpp"
#include "qloop/dpoly.hpp"
#include "qloop/fundrep.hpp"
#include "qloop/module.hpp"
#include "qloop/oracle.hpp"
#include "qloop/rmatrix.hpp"
#include "qloop/rootform.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace qloop {

using Json = nlohmann::json;

Json to_json(const Scalar& s);
// {rows, cols, entries: [[row, col, "value"], ...]} in column-major order.
Json to_json(const Matrix& m);
Json to_json(const Weight& w);
Json to_json(const DrinfeldPoly& p);
Json to_json(const ModuleRep& m);
Json to_json(const CriterionResult& c);
Json to_json(const RelationReport& r);
Json to_json(const RData& r);
Json to_json(const RestrictedWeightData& t);
Json to_json(const IrreducibilityVerdict& v, const std::optional<CriterionResult>& prediction = std::nullopt);
Json to_json(const RootVerdict& v);

// Dense CSV, one matrix row per line, entries as canonical scalar strings.
std::string matrix_csv(const Matrix& m);

}  // namespace qloop
