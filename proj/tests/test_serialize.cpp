#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "voa/serialize.hpp"

using namespace voa;

namespace {

Vector mono(const Field& f, std::vector<int> modes, int charge = 0) {
  return Vector::monomial(f, BasisMonomial::make(std::move(modes), charge));
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(rational_to_json(frac(-3, 4)).dump() == "[-3,4]");
  CHECK(rational_from_json(json::parse("[6,-8]")) == frac(-3, 4));
  CHECK(rational_from_json(json(5)) == 5);
  const Rational big(mpz_class("1208925819614629174706176"), mpz_class(3));  // 2^80 / 3
  const json j = rational_to_json(big);
  CHECK(j[0].is_string());
  CHECK(rational_from_json(j) == big);
  CHECK_THROWS_AS(rational_from_json(json::parse("[1,0]")), DomainError);
  CHECK_THROWS_AS(rational_from_json(json::parse("[1,2,3]")), DomainError);
  CHECK_THROWS_AS(rational_from_json(json::parse("[\"x\",2]")), DomainError);
}

TEST_CASE("scalars round-trip") {
  for (auto [n, lattice_n] : {std::pair{4, 1}, std::pair{8, 3}, std::pair{24, 3}, std::pair{4, 2}}) {
    const Field& f = Field::get(n, lattice_n);
    const Scalar s = Scalar::zeta(f, 1) * frac(7, 3) + Scalar::sqrt_2n(f) * frac(-1, 5) + Scalar(f, 2L);
    CHECK(scalar_from_json(to_json(s)) == s);
    CHECK(scalar_from_json(json::parse(to_json(s).dump()), &f) == s);
  }
  const Field& f4 = Field::get(4, 3);
  const Field& f8 = Field::get(8, 3);
  const Scalar i = Scalar::imaginary_unit(f4);
  CHECK(scalar_from_json(to_json(i), &f8) == Scalar::zeta(f8, 2));
  CHECK_THROWS_AS(scalar_from_json(to_json(i), &Field::get(4, 5)), ContextError);
  CHECK_THROWS_AS(scalar_from_json(json::parse("[1]")), DomainError);
}

TEST_CASE("vectors round-trip") {
  const Field& f = Field::get(8, 1);
  const Vector v = mono(f, {-3, -1}, 2) * Scalar::zeta(f, 3) + mono(f, {}, -1) * Scalar::sqrt_2n(f) +
                   mono(f, {-1, -1}) * frac(1, 2);
  const json j = to_json(v);
  CHECK(vector_from_json(j) == v);
  CHECK(vector_from_json(json::parse(j.dump())) == v);
  CHECK(to_json(vector_from_json(j)).dump() == j.dump());
  // deterministic text
  CHECK(to_json(v).dump() == j.dump());

  const Field& f4 = Field::get(4, 2);
  const Vector w = mono(f4, {-2}) * Scalar::imaginary_unit(f4);
  CHECK(vector_from_json(to_json(w), &Field::get(8, 2)) == w.lifted(8));
  CHECK_THROWS_AS(vector_from_json(to_json(w), &Field::get(4, 3)), ContextError);
}

TEST_CASE("hand-written vector JSON") {
  const json j = json::parse(R"({"N": 2, "terms": [{"partition": [-1, -1], "charge": 0, "coeff": {"rat": [[1, 2]]}}]})");
  const Vector v = vector_from_json(j);
  CHECK(v == mono(Field::get(4, 2), {-1, -1}) * frac(1, 2));
  CHECK_THROWS_AS(vector_from_json(json::parse(R"({"terms": []})")), DomainError);
  CHECK_THROWS_AS(vector_from_json(json::parse(R"({"N": 2, "terms": [{"partition": [0], "coeff": {"rat": [1]}}]})")),
                  DomainError);
  CHECK_THROWS_AS(vector_from_json(json::parse(R"({"N": 2, "terms": [{"partition": [-1]}]})")), DomainError);
  CHECK_THROWS_AS(
      vector_from_json(json::parse(R"({"N": 2, "terms": [{"partition": [-1], "coeff": {"rat": [1], "N": 3}}]})")),
      ContextError);
}

TEST_CASE("reports and subspaces") {
  Report r;
  r.check = "demo";
  r.params["N"] = "3";
  r.add_weight(0, 1, 1);
  r.add("named", false, "because");
  const json j = to_json(r);
  CHECK(j["verdict"] == false);
  CHECK(j["per_weight"][0]["ok"] == true);
  CHECK(j["checks"][0]["detail"] == "because");

  const Field& f = Field::get(4, 1);
  const auto s = full_space(f, 2);
  const json js = to_json(s);
  CHECK(js["dims"] == json::parse("[1,3,4]"));
  CHECK(js["basis"].size() == 3);
  CHECK(!to_json(s, false).contains("basis"));

  Poly3 p(f);
  p.add({1, 0, 0}, Scalar(f, 2L));
  p.add({2, 0, 0}, Scalar(f, -2L));
  const json jp = to_json(p);
  CHECK(jp.size() == 2);
  CHECK(jp[0]["a"] == 1);
}
