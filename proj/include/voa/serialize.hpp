#pragma once

#include <json.hpp>

#include "voa/state_space.hpp"
#include "voa/structure.hpp"

namespace voa {

using json = nlohmann::ordered_json;

/// [num, den]; components that do not fit in 64 bits are written as decimal strings.
json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);

/// {"rat": [...], "rad": [...], "n": conductor, "N": lattice parameter}
json to_json(const Scalar& s);
/// Reads a scalar into its own field, or into `target` (lifting the conductor
/// when it divides the target's). Throws ContextError on mismatch and
/// DomainError on malformed input.
Scalar scalar_from_json(const json& j, const Field* target = nullptr);

/// {"N": N, "terms": [{"partition": [...], "charge": k, "coeff": <scalar>}, ...]}
json to_json(const Vector& v);
/// Without `target` the field is Field::get(lcm of coefficient conductors and 4, N).
Vector vector_from_json(const json& j, const Field* target = nullptr);

json to_json(const BasisMonomial& m);
json to_json(const GradedSubspace& s, bool with_basis = true);
json to_json(const Report& r);
json to_json(const VirasoroVectorCertificate& c);
json to_json(const Poly3& p);

}  // namespace voa
