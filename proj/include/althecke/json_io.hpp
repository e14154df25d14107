#pragma once

// JSON encodings used by the command-line tool. Complex numbers are [re, im]
// pairs and matrices are lists of rows.

#include <json.hpp>

#include "althecke/alternating.hpp"

namespace althecke {

using Json = nlohmann::ordered_json;

Json to_json(Scalar z);
Json to_json(const Matrix& m);
Json to_json(const Multipartition& mp);
/// Per-component ragged entry matrices.
Json to_json(const StdTableau& t);
Json to_json(const AlgebraParams& p);

Json to_json(const AxiomReport& r);
Json to_json(const RelationReport& r);
Json to_json(const IdempotentReport& r);
Json to_json(const HashReport& r);
Json to_json(const AltDimension& d);

/// {lambda, basis, gamma, generators: {L: [...], T: [...]}}
Json specht_json(const SpechtBlock& blk, const TableauCatalog& cat, const GammaTable& gamma);

/// {params, irreps: [{label, dim, traces}], checks: {...}}
Json classification_json(const Classification& c, const AlgebraParams& p);

}  // namespace althecke
