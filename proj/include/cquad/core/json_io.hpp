#pragma once

#include "cquad/core/linalg.hpp"
#include "cquad/core/mpoly.hpp"
#include "cquad/core/poly1.hpp"

#include <json.hpp>

namespace cquad {

using Json = nlohmann::json;

// Rationals are strings "p" or "p/q"; matrices are arrays of rows of such
// strings; polynomials are {"vars": [...], "terms": {"e1,e2,...": "p/q"}}.

Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json to_json(const RatVector& v);
RatVector vector_from_json(const Json& j);

Json to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j);

Json to_json(const Poly1& p);
Poly1 poly1_from_json(const Json& j);

Json to_json(const MPoly& p);
MPoly mpoly_from_json(const Json& j);

Json to_json(const Matrix<MPoly>& m);

} // namespace cquad
