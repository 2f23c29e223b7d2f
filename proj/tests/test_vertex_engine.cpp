#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "voa/vertex_engine.hpp"

using namespace voa;

namespace {

Vector mono(const Field& f, std::vector<int> modes, int charge = 0) {
  return Vector::monomial(f, BasisMonomial::make(std::move(modes), charge));
}

Vector nu(const Field& f) { return mono(f, {-1, -1}) * frac(1, 2); }

// C(m, j) for any integer m.
Rational binom(int m, int j) {
  Rational r = 1;
  for (int i = 0; i < j; ++i) r = r * Rational(m - i) / Rational(i + 1);
  return r;
}

Vector word_vector(const Field& f, const std::vector<CreationWord>& words) {
  Vector v(f);
  for (const auto& w : words) v.add_term(BasisMonomial::make(w.modes, 0), w.coeff);
  return v;
}

int wt(const Vector& v) { return *v.homogeneous_weight(); }

// Homogeneous test states of small weight.
std::vector<Vector> sample_states(const Field& f) {
  std::vector<Vector> out = {Vector::vacuum(f), mono(f, {-1}), mono(f, {-2}), nu(f), mono(f, {}, 1), mono(f, {}, -1),
                             mono(f, {-1}, 1)};
  if (f.lattice_n() == 1) out.push_back(mono(f, {}, 1) * Scalar::imaginary_unit(f) + mono(f, {-1}, 0) * Rational(3));
  return out;
}

std::vector<Vector> targets(const Field& f, int cutoff) {
  std::vector<Vector> out;
  for (int w = 0; w <= cutoff; ++w)
    for (const auto& m : enumerate_basis(f.lattice_n(), w)) out.push_back(Vector::monomial(f, m));
  return out;
}

}  // namespace

TEST_CASE("Heisenberg modes") {
  const Field& f = Field::get(4, 3);
  CHECK(heis_apply(1, mono(f, {-1})) == Vector::vacuum(f));
  CHECK(heis_apply(0, mono(f, {}, 2)) == mono(f, {}, 2) * (Scalar::sqrt_2n(f) * Rational(2)));
  CHECK(heis_apply(3, mono(f, {-3, -1})) == mono(f, {-1}) * Rational(3));
  CHECK(heis_apply(-2, mono(f, {-1}, 1)) == mono(f, {-2, -1}, 1));
  CHECK(heis_apply(2, mono(f, {-1})).is_zero());
  // [J_m, J_n] = m delta
  for (const auto& v : targets(f, 5))
    for (int m = -3; m <= 3; ++m)
      for (int n = -3; n <= 3; ++n) {
        const Vector lhs = heis_apply(m, heis_apply(n, v)) - heis_apply(n, heis_apply(m, v));
        CHECK(lhs == (m + n == 0 ? v * Rational(m) : Vector(f)));
      }
}

TEST_CASE("Virasoro modes") {
  const Field& f = Field::get(4, 2);
  CHECK(virasoro_apply(1, mono(f, {-2})) == mono(f, {-1}) * Rational(2));
  CHECK(virasoro_apply(0, mono(f, {-3, -1}, 1)) == mono(f, {-3, -1}, 1) * Rational(6));
  CHECK(virasoro_apply(4, mono(f, {-3, -1})) == Vector::vacuum(f) * Rational(3));
  CHECK(virasoro_apply(-1, Vector::vacuum(f)).is_zero());
  CHECK(virasoro_apply(-2, Vector::vacuum(f)) == nu(f));
  // L_{-1} e^alpha = alpha_{-1} e^alpha with alpha = 2 J for N = 2
  CHECK(virasoro_apply(-1, mono(f, {}, 1)) == mono(f, {-1}, 1) * Rational(2));
}

TEST_CASE("E+ coefficients") {
  const Field& f = Field::get(4, 3);
  const Scalar g = Scalar::sqrt_2n(f) * Rational(2);
  const auto e0 = eplus_coefficient(g, 0);
  REQUIRE(e0.size() == 1);
  CHECK(e0[0].modes.empty());
  CHECK(e0[0].coeff.is_one());
  CHECK(word_vector(f, eplus_coefficient(g, 1)) == mono(f, {-1}) * g);
  const Vector expected4 = mono(f, {-4}) * (g * frac(1, 4)) + mono(f, {-2, -2}) * (g.pow(2) * frac(1, 8)) +
                           mono(f, {-3, -1}) * (g.pow(2) * frac(1, 3)) + mono(f, {-2, -1, -1}) * (g.pow(3) * frac(1, 4)) +
                           mono(f, {-1, -1, -1, -1}) * (g.pow(4) * frac(1, 24));
  CHECK(word_vector(f, eplus_coefficient(g, 4)) == expected4);
  CHECK(word_vector(f, eplus_coefficient(f, 2, 4)) == expected4);
}

TEST_CASE("E+ coefficients satisfy m E_m = sum_j g J_{-j} E_{m-j}") {
  for (int n : {1, 2, 5}) {
    const Field& f = Field::get(4, n);
    for (int charge : {1, -1, 3}) {
      const Scalar g = Scalar::sqrt_2n(f) * Rational(charge);
      std::vector<Vector> e;
      for (int m = 0; m <= 8; ++m) e.push_back(word_vector(f, eplus_coefficient(f, charge, m)));
      for (int m = 1; m <= 8; ++m) {
        Vector rhs(f);
        for (int j = 1; j <= m; ++j) rhs += heis_apply(-j, e[m - j]) * g;
        CHECK(e[m] * Rational(m) == rhs);
      }
    }
  }
}

TEST_CASE("E- and E+ actions") {
  const Field& f = Field::get(4, 2);
  const auto vac_terms = eminus_apply(1, mono(f, {}, 3), -6, 6);
  REQUIRE(vac_terms.size() == 1);
  CHECK(vac_terms[0].first == 0);
  CHECK(vac_terms[0].second == mono(f, {}, 3));
  const Vector nu_e = nu(f);
  Vector nu_e2(f);
  for (const auto& [m, c] : nu_e.terms()) nu_e2.add_term(BasisMonomial::make(m.partition, 1), c);
  const auto terms = eminus_apply(1, nu_e2, -6, 6);
  REQUIRE(terms.size() == 3);
  CHECK(terms[0].first == -2);
  CHECK(terms[0].second == mono(f, {}, 1) * Rational(2));
  CHECK(terms[1].first == -1);
  CHECK(terms[1].second == mono(f, {-1}, 1) * Rational(-2));
  CHECK(terms[2].first == 0);
  CHECK(terms[2].second == nu_e2);
  CHECK(eminus_apply(1, Vector::vacuum(f), -3, 3).size() == 1);

  const Series plus = eplus_apply(1, Vector::vacuum(f), 4);
  CHECK(plus.at(0) == Vector::vacuum(f));
  CHECK(plus.at(1) == mono(f, {-1}) * Rational(2));
  CHECK(lattice_shift(1, mono(f, {-1})) == mono(f, {-1}, 1));
  CHECK(lattice_shift(-1, mono(f, {}, 1)) == Vector::vacuum(f));
  const Series z = z_alpha0_apply(1, mono(f, {}, 2) + mono(f, {-1}));
  CHECK(z.at(8) == mono(f, {}, 2));
  CHECK(z.at(0) == mono(f, {-1}));
}

TEST_CASE("vertex mode examples") {
  const Field& f = Field::get(4, 2);
  CHECK(vertex_mode(mono(f, {}, 1), 2, mono(f, {}, -1)) == mono(f, {-1}) * Rational(2));
  CHECK(vertex_mode(mono(f, {}, -1), 2, mono(f, {}, 1)) == mono(f, {-1}) * Rational(-2));
  CHECK(vertex_mode(mono(f, {}, 1), -1, mono(f, {}, 1)).is_zero());
  CHECK(vertex_mode(mono(f, {}, 1), -5, mono(f, {}, 1)) == mono(f, {}, 2));
  CHECK(vertex_mode(mono(f, {}, 1), 3, mono(f, {}, -1)) == Vector::vacuum(f));
  for (const auto& b : targets(f, 4)) CHECK(vertex_mode(nu(f), 1, b) == virasoro_apply(0, b));
  CHECK(vertex_mode(nu(f), -1, Vector::vacuum(f)) == nu(f));
  const Field& f1 = Field::get(4, 1);
  // (e^{k alpha})_(-2Nkl-1) e^{l alpha} = e^{(k+l) alpha}
  for (int k : {-1, 1, 2})
    for (int l : {-2, -1, 1}) {
      const int n = -2 * k * l - 1;
      CHECK(vertex_mode(mono(f1, {}, k), n, mono(f1, {}, l)) == mono(f1, {}, k + l));
      CHECK(vertex_mode(mono(f1, {}, k), n + 1, mono(f1, {}, l)).is_zero());
    }
}

TEST_CASE("vacuum and creation") {
  for (int n : {1, 2, 3}) {
    const Field& f = Field::get(4, n);
    for (const auto& b : targets(f, 4)) {
      CHECK(vertex_mode(Vector::vacuum(f), -1, b) == b);
      CHECK(vertex_mode(Vector::vacuum(f), 0, b).is_zero());
      CHECK(vertex_mode(Vector::vacuum(f), -2, b).is_zero());
      CHECK(vertex_mode(b, -1, Vector::vacuum(f)) == b);
      CHECK(vertex_mode(b, 0, Vector::vacuum(f)).is_zero());
      CHECK(vertex_mode(b, -2, Vector::vacuum(f)) == virasoro_apply(-1, b));
    }
  }
}

TEST_CASE("J_{-1} Omega generates the Heisenberg modes and nu the Virasoro modes") {
  for (int n : {1, 2, 3}) {
    const Field& f = Field::get(4, n);
    for (const auto& v : targets(f, 5))
      for (int m = -3; m <= 3; ++m) {
        CHECK(vertex_mode(mono(f, {-1}), m, v) == heis_apply(m, v));
        CHECK(virasoro_field_of(nu(f), m, v) == virasoro_apply(m, v));
        CHECK(physics_mode(nu(f), m, v) == virasoro_apply(m, v));
      }
  }
  const Field& f = Field::get(4, 2);
  CHECK_THROWS_AS(virasoro_field_of(mono(f, {-1}), 0, Vector::vacuum(f)), DomainError);
}

TEST_CASE("commutator formula") {
  // [a_(m), b_(n)] c = sum_j C(m, j) (a_(j) b)_(m+n-j) c
  for (int n : {1, 2}) {
    const Field& f = Field::get(4, n);
    const auto states = sample_states(f);
    const auto cs = targets(f, 3);
    ModeCache cache(f);
    for (const auto& a : states)
      for (const auto& b : states) {
        const int top = wt(a) + wt(b);
        for (int m = -2; m <= 2; ++m)
          for (int k = -2; k <= 2; ++k) {
            std::vector<Vector> ab;
            for (int j = 0; j < top + 4; ++j) ab.push_back(cache.mode(a, j, b));
            for (const auto& c : cs) {
              const Vector lhs = cache.mode(a, m, cache.mode(b, k, c)) - cache.mode(b, k, cache.mode(a, m, c));
              Vector rhs(f);
              for (int j = 0; j < static_cast<int>(ab.size()); ++j)
                if (!ab[j].is_zero()) rhs += cache.mode(ab[j], m + k - j, c) * binom(m, j);
              CHECK(lhs == rhs);
            }
          }
      }
  }
}

TEST_CASE("skew symmetry") {
  // b_(n) a = sum_j (-1)^{n+j+1} L_{-1}^j / j! a_(n+j) b
  for (int n : {1, 3}) {
    const Field& f = Field::get(4, n);
    const auto states = sample_states(f);
    for (const auto& a : states)
      for (const auto& b : states) {
        const int top = wt(a) + wt(b);
        for (int k = -3; k <= top; ++k) {
          Vector rhs(f);
          Rational fact = 1;
          for (int j = 0; k + j < top; ++j) {
            if (j > 0) fact *= j;
            Vector t = vertex_mode(a, k + j, b);
            for (int s = 0; s < j; ++s) t = virasoro_apply(-1, t);
            rhs += t * (Rational((k + j + 1) % 2 == 0 ? 1 : -1) / fact);
          }
          CHECK(vertex_mode(b, k, a) == rhs);
        }
      }
  }
}

TEST_CASE("grading and truncation") {
  const Field& f = Field::get(4, 1);
  for (const auto& a : sample_states(f))
    for (const auto& b : targets(f, 3)) {
      const auto modes = vertex_modes(a, b, -4, 10);
      for (const auto& [n, v] : modes) {
        REQUIRE(v.homogeneous_weight().has_value());
        CHECK(*v.homogeneous_weight() == wt(a) + wt(b) - n - 1);
      }
      // a_(n) b = 0 once the weight would drop below zero
      CHECK(vertex_mode(a, wt(a) + wt(b), b).is_zero());
    }
}

TEST_CASE("cached and uncached modes agree") {
  const Field& f = Field::get(4, 3);
  ModeCache cache(f);
  const Vector a = mono(f, {-1}, 1) + mono(f, {-2}) * Scalar::imaginary_unit(f);
  for (const auto& b : targets(f, 4)) {
    CHECK(cache.mode(a, 1, b) == vertex_mode(a, 1, b));
    CHECK(cache.modes(a, b, -2, 4) == vertex_modes(a, b, -2, 4));
  }
  ModeOperator op(a, 0, &cache);
  for (const auto& b : targets(f, 4)) CHECK(op(b) == vertex_mode(a, 0, b));
  CHECK(cache.size() > 0);
}
