#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "voa/scalar.hpp"

using namespace voa;

namespace {

// Numerical value of a scalar, used only as an independent sign/consistency oracle.
std::complex<double> numeric(const Scalar& s) {
  const int n = s.field().conductor();
  std::complex<double> z = 0;
  for (size_t j = 0; j < s.rat().size(); ++j)
    z += s.rat()[j].get_d() * std::polar(1.0, 2 * std::numbers::pi * double(j) / n);
  std::complex<double> r = 0;
  for (size_t j = 0; j < s.rad().size(); ++j)
    r += s.rad()[j].get_d() * std::polar(1.0, 2 * std::numbers::pi * double(j) / n);
  return z + r * std::sqrt(2.0 * s.field().lattice_n());
}

Scalar random_scalar(const Field& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Rational> a, b;
  for (int j = 0; j < f.degree(); ++j) {
    a.push_back(frac(num(rng), den(rng)));
    b.push_back(frac(num(rng), den(rng)));
  }
  return Scalar(f, a, b);
}

}  // namespace

TEST_CASE("basic arithmetic") {
  const Field& f = Field::get(4, 3);
  CHECK(Scalar(f, frac(1, 2)) + Scalar(f, frac(1, 2)) == Scalar::one(f));
  const Scalar i = Scalar::imaginary_unit(f);
  CHECK(i * i == Scalar(f, -1L));
  CHECK(Scalar::sqrt_2n(f) * Scalar::sqrt_2n(f) == Scalar(f, 6L));
  CHECK(Scalar::zeta(f, 4).is_one());
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(17);
  for (auto [n, lattice_n] : {std::pair{4, 1}, std::pair{8, 3}, std::pair{12, 5}, std::pair{8, 1}, std::pair{24, 3}}) {
    const Field& f = Field::get(n, lattice_n);
    for (int trial = 0; trial < 10; ++trial) {
      const Scalar x = random_scalar(f, rng), y = random_scalar(f, rng), z = random_scalar(f, rng);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * y == y * x);
      CHECK(x - x == Scalar::zero(f));
      if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
      CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
      CHECK(x.conjugate().conjugate() == x);
      const auto d = numeric(x * y) - numeric(x) * numeric(y);
      CHECK(std::abs(d) < 1e-6);
    }
  }
}

TEST_CASE("conjugation") {
  const Field& f4 = Field::get(4, 3);
  CHECK(Scalar::imaginary_unit(f4).conjugate() == -Scalar::imaginary_unit(f4));
  const Scalar real = Scalar(f4, frac(3, 4)) + Scalar::sqrt_2n(f4);
  CHECK(real.conjugate() == real);
  const Field& f8 = Field::get(8, 1);
  CHECK(Scalar::zeta(f8, 1).conjugate() == Scalar::zeta(f8, 7));
}

TEST_CASE("roots of unity") {
  const Field& f = Field::get(4, 2);
  CHECK(Scalar::root_of_unity(f, 1, 2) == Scalar(f, -1L));
  CHECK(Scalar::root_of_unity(f, 1, 4) == Scalar::imaginary_unit(f));
  CHECK_THROWS_AS(Scalar::root_of_unity(f, 1, 8), ContextError);
  const Field& f12 = Field::get(12, 1);
  const Scalar w = Scalar::root_of_unity(f12, 1, 3);
  CHECK(w.pow(3).is_one());
  CHECK(!w.is_one());
  CHECK(w * w + w + Scalar::one(f12) == Scalar::zero(f12));
}

TEST_CASE("errors") {
  const Field& a = Field::get(4, 1);
  const Field& b = Field::get(4, 2);
  const Field& c = Field::get(8, 1);
  CHECK_THROWS_AS(Scalar::one(a) + Scalar::one(b), ContextError);
  CHECK_THROWS_AS(Scalar::one(a) * Scalar::one(c), ContextError);
  CHECK_THROWS_AS(Scalar::zero(a).inverse(), DomainError);
}

TEST_CASE("interning") {
  CHECK(&Field::get(8, 3) == &Field::get(8, 3));
  CHECK(&Field::get(8, 3) != &Field::get(8, 5));
  CHECK(euler_phi(24) == 8);
  CHECK(Field::get(24, 1).degree() == 8);
}

TEST_CASE("perfect square radical folds to a rational") {
  const Field& f = Field::get(4, 2);
  CHECK(f.radical_folded());
  CHECK(Scalar::sqrt_2n(f) == Scalar(f, 2L));
  const Field& g = Field::get(4, 8);
  CHECK(Scalar::sqrt_2n(g) == Scalar(g, 4L));
  CHECK(Scalar::sqrt_2n(g).rad().empty());
}

TEST_CASE("folded radicals have the positive sign") {
  // sqrt(2N) lies in Q(zeta_n) for these pairs; the representation must be the positive root.
  for (auto [n, lattice_n] : {std::pair{8, 1}, std::pair{24, 3}, std::pair{12, 6}, std::pair{40, 5}, std::pair{20, 10}}) {
    const Field& f = Field::get(n, lattice_n);
    CAPTURE(n);
    CAPTURE(lattice_n);
    REQUIRE(f.radical_folded());
    const Scalar r = Scalar::sqrt_2n(f);
    CHECK(r.rad().empty());
    CHECK(r * r == Scalar(f, long(2 * lattice_n)));
    const auto z = numeric(r);
    CHECK(std::abs(z.imag()) < 1e-9);
    CHECK(z.real() == doctest::Approx(std::sqrt(2.0 * lattice_n)));
  }
  CHECK(!Field::get(4, 3).radical_folded());
  CHECK(!Field::get(8, 3).radical_folded());
}

TEST_CASE("lifting preserves values") {
  const Field& f4 = Field::get(4, 3);
  const Scalar x = Scalar::imaginary_unit(f4) * Rational(3) + Scalar::sqrt_2n(f4);
  const Scalar y = x.lifted(24);
  CHECK(&y.field() == &Field::get(24, 3));
  CHECK(Scalar::imaginary_unit(f4).lifted(8) == Scalar::zeta(Field::get(8, 3), 2));
  CHECK(std::abs(numeric(x) - numeric(y)) < 1e-9);
  // sqrt 6 becomes cyclotomic after lifting to conductor 24
  CHECK(y.rad().empty());
}

TEST_CASE("rational detection and printing") {
  const Field& f = Field::get(8, 1);
  CHECK(Scalar(f, frac(-5, 3)).as_rational() == frac(-5, 3));
  CHECK(!Scalar::zeta(f, 1).as_rational().has_value());
  CHECK(!Scalar(f, frac(-5, 3)).to_string().empty());
}
