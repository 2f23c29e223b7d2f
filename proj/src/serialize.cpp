#include "voa/serialize.hpp"

#include <numeric>

namespace voa {

namespace {

json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw DomainError("malformed integer string: " + j.get<std::string>());
    return z;
  }
  throw DomainError("expected an integer, got " + j.dump());
}

std::vector<Rational> coeffs_from_json(const json& j, const char* key) {
  std::vector<Rational> out;
  if (!j.contains(key)) return out;
  const json& arr = j.at(key);
  if (!arr.is_array()) throw DomainError(std::string("scalar field '") + key + "' must be an array");
  for (const auto& q : arr) out.push_back(rational_from_json(q));
  return out;
}

int int_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
    throw DomainError(std::string("missing integer field '") + key + "'");
  return j.at(key).get<int>();
}

}  // namespace

json rational_to_json(const Rational& q) { return json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())}); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (!j.is_array() || j.size() != 2) throw DomainError("rational must be [num, den], got " + j.dump());
  const mpz_class num = integer_from_json(j[0]);
  const mpz_class den = integer_from_json(j[1]);
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

json to_json(const Scalar& s) {
  json j;
  j["rat"] = json::array();
  for (const auto& q : s.rat()) j["rat"].push_back(rational_to_json(q));
  j["rad"] = json::array();
  for (const auto& q : s.rad()) j["rad"].push_back(rational_to_json(q));
  j["n"] = s.field().conductor();
  j["N"] = s.field().lattice_n();
  return j;
}

Scalar scalar_from_json(const json& j, const Field* target) {
  if (!j.is_object()) throw DomainError("scalar must be a JSON object");
  const int n = j.contains("n") ? int_field(j, "n") : (target ? target->conductor() : 4);
  const int lattice_n = j.contains("N") ? int_field(j, "N") : (target ? target->lattice_n() : 0);
  if (lattice_n <= 0) throw DomainError("scalar is missing its lattice parameter N");
  const Field& own = Field::get(n, lattice_n);
  Scalar s(own, coeffs_from_json(j, "rat"), coeffs_from_json(j, "rad"));
  if (!target || target == &own) return s;
  if (target->lattice_n() != lattice_n)
    throw ContextError("scalar has N=" + std::to_string(lattice_n) + " but context has N=" + std::to_string(target->lattice_n()));
  return s.lifted(target->conductor());
}

json to_json(const BasisMonomial& m) { return json{{"partition", m.partition}, {"charge", m.charge}}; }

json to_json(const Vector& v) {
  json j;
  j["N"] = v.lattice_n();
  j["terms"] = json::array();
  for (const auto& [m, c] : v.terms()) {
    json t = to_json(m);
    t["coeff"] = to_json(c);
    j["terms"].push_back(std::move(t));
  }
  return j;
}

Vector vector_from_json(const json& j, const Field* target) {
  if (!j.is_object()) throw DomainError("vector must be a JSON object");
  const int lattice_n = int_field(j, "N");
  if (target && target->lattice_n() != lattice_n)
    throw ContextError("vector has N=" + std::to_string(lattice_n) + " but context has N=" + std::to_string(target->lattice_n()));
  if (!j.contains("terms") || !j.at("terms").is_array()) throw DomainError("vector is missing its 'terms' array");
  const Field* field = target;
  if (!field) {
    int n = 4;
    for (const auto& t : j.at("terms"))
      if (t.contains("coeff") && t.at("coeff").contains("n")) n = std::lcm(n, int_field(t.at("coeff"), "n"));
    field = &Field::get(n, lattice_n);
  }
  Vector v(*field);
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("partition") || !t.contains("coeff")) throw DomainError("malformed vector term " + t.dump());
    std::vector<int> modes;
    for (const auto& x : t.at("partition")) {
      if (!x.is_number_integer()) throw DomainError("partition entries must be integers");
      modes.push_back(x.get<int>());
    }
    const int charge = t.contains("charge") ? int_field(t, "charge") : 0;
    json coeff = t.at("coeff");
    if (coeff.is_object() && coeff.contains("N") && int_field(coeff, "N") != lattice_n)
      throw ContextError("coefficient N does not match vector N");
    v.add_term(BasisMonomial::make(std::move(modes), charge), scalar_from_json(coeff, field));
  }
  return v;
}

json to_json(const GradedSubspace& s, bool with_basis) {
  json j;
  j["N"] = s.field ? s.field->lattice_n() : 0;
  j["cutoff"] = s.cutoff;
  j["dims"] = s.dims();
  if (with_basis) {
    j["basis"] = json::array();
    for (int w = 0; w <= s.cutoff; ++w) {
      json layer = json::array();
      for (const auto& v : s.basis(w)) layer.push_back(to_json(v));
      j["basis"].push_back({{"w", w}, {"vectors", layer}});
    }
  }
  return j;
}

json to_json(const Report& r) {
  json j;
  j["check"] = r.check;
  j["params"] = json::object();
  for (const auto& [k, v] : r.params) j["params"][k] = v;
  j["per_weight"] = json::array();
  for (const auto& w : r.per_weight) j["per_weight"].push_back({{"w", w.weight}, {"lhs", w.lhs}, {"rhs", w.rhs}, {"ok", w.ok}});
  if (!r.items.empty()) {
    j["checks"] = json::array();
    for (const auto& c : r.items) {
      json item = {{"name", c.name}, {"ok", c.ok}};
      if (!c.detail.empty()) item["detail"] = c.detail;
      j["checks"].push_back(std::move(item));
    }
  }
  j["verdict"] = r.verdict;
  return j;
}

json to_json(const VirasoroVectorCertificate& c) {
  json j;
  j["omega"] = to_json(c.omega);
  j["central_charge"] = rational_to_json(c.central_charge);
  j["cutoff"] = c.cutoff;
  j["certified"] = c.certified;
  j["checks"] = c.checks;
  if (c.counterexample) {
    j["counterexample"] = {{"m", c.counterexample->m},
                           {"n", c.counterexample->n},
                           {"v", to_json(c.counterexample->v)},
                           {"residual", to_json(c.counterexample->residual)}};
  }
  return j;
}

json to_json(const Poly3& p) {
  json j = json::array();
  for (const auto& [e, c] : p.terms) j.push_back({{"a", e[0]}, {"b", e[1]}, {"bbar", e[2]}, {"coeff", to_json(c)}});
  return j;
}

}  // namespace voa
