#pragma once

#include <iosfwd>

#include <json.hpp>

#include "latshift/criteria.hpp"
#include "latshift/graph.hpp"
#include "latshift/space.hpp"
#include "latshift/spectral.hpp"
#include "latshift/sparse_vector.hpp"

namespace latshift {

using Json = nlohmann::ordered_json;

// Models: {"kind":"strip","m":3}. Vertices: {"i":..,"j":..} or {"k":..}.
Json to_json(const GraphModel& model);
GraphModel model_from_json(const Json& j);

Json to_json(const Vertex& v);
Vertex vertex_from_json(const GraphModel& model, const Json& j);

// Vectors: list of {"vertex":..,"num":..,"den":..} (exact) or
// {"vertex":..,"re":..,"im":..} (float).
Json to_json(const SparseVector<Rational>& vec);
Json to_json(const SparseVector<Complex>& vec);
SparseVector<Rational> exact_vector_from_json(const GraphModel& model, const Json& j);
SparseVector<Complex> float_vector_from_json(const GraphModel& model, const Json& j);

// Reports: {"criterion","verdict","horizon","evidence":[...]}.
Json to_json(const CriterionReport& report);
Json to_json(const BoundednessReport& report);
Json to_json(const RegionReport& report);

/// Scan trace as CSV with header "n,quantity".
void write_trace_csv(std::ostream& os, const CriterionReport& report);
/// Region points as CSV with header "r,s_re,s_im,in_norm,abs_lambda,region".
void write_region_csv(std::ostream& os, const RegionReport& report);
/// Vector as CSV with header "i,j,re,im" (exact values are written as
/// fractions in the re column).
void write_vector_csv(std::ostream& os, const SparseVector<Rational>& vec);
void write_vector_csv(std::ostream& os, const SparseVector<Complex>& vec);

}  // namespace latshift
