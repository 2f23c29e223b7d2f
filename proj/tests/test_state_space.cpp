#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "voa/state_space.hpp"

using namespace voa;

namespace {

// Partition numbers by the coin-change recursion.
std::vector<long> partition_table(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s) p[s] += p[s - part];
  return p;
}

// dim of weight w in V_{L_2N}: coefficient of q^w in theta(q) / prod (1 - q^n).
long lattice_dim(int lattice_n, int w) {
  const auto p = partition_table(w);
  long d = 0;
  for (int k = -w; k <= w; ++k)
    if (lattice_n * k * k <= w) d += p[w - lattice_n * k * k];
  return d;
}

// <J_{-a1}...Omega | J_{-b1}...Omega> by moving one annihilator across:
// <J_{-a} x | y> = <x | J_a y>, J_a J_{-b1}...J_{-bs} = sum_{b_i = a} a * (drop b_i).
Rational oracle_norm(std::vector<int> xs, std::vector<int> ys) {
  if (xs.empty()) return ys.empty() ? Rational(1) : Rational(0);
  if (xs.size() != ys.size()) return 0;
  const int a = xs.back();
  xs.pop_back();
  Rational total = 0;
  for (size_t i = 0; i < ys.size(); ++i) {
    if (ys[i] != a) continue;
    std::vector<int> rest = ys;
    rest.erase(rest.begin() + static_cast<long>(i));
    total += Rational(a) * oracle_norm(xs, rest);
  }
  return total;
}

std::vector<int> positive_parts(const BasisMonomial& m) {
  std::vector<int> out;
  for (int n : m.partition) out.push_back(-n);
  return out;
}

Vector mono(const Field& f, std::vector<int> modes, int charge = 0) {
  return Vector::monomial(f, BasisMonomial::make(std::move(modes), charge));
}

}  // namespace

TEST_CASE("partitions") {
  CHECK(partitions_of(4).size() == 5);
  for (int n = 0; n <= 12; ++n) CHECK(partition_count(n) == partition_table(12)[n]);
  for (const auto& part : partitions_of(6)) {
    CHECK(std::is_sorted(part.begin(), part.end()));
    for (int x : part) CHECK(x < 0);
  }
  const auto& p4 = partitions_of(4);
  CHECK(std::find(p4.begin(), p4.end(), std::vector<int>{-3, -1}) != p4.end());
}

TEST_CASE("monomials") {
  const auto m = BasisMonomial::make({-1, -3}, 0);
  CHECK(m.partition == std::vector<int>{-3, -1});
  CHECK(weight_of(m, 7) == 4);
  CHECK(weight_of(BasisMonomial::make({}, 1), 3) == 3);
  CHECK(weight_of(BasisMonomial::make({}, -1), 3) == 3);
  CHECK(weight_of(BasisMonomial::vacuum(), 3) == 0);
  CHECK_THROWS_AS(BasisMonomial::make({0}, 0), DomainError);
  CHECK(monomial_norm_squared(BasisMonomial::make({-2, -2, -1}, 0)) == 8);
  CHECK(BasisMonomial::make({-2, -2, -1}, 0).multiplicity(2) == 2);
}

TEST_CASE("enumeration") {
  const auto w1 = enumerate_basis(1, 1);
  REQUIRE(w1.size() == 3);
  CHECK(std::find(w1.begin(), w1.end(), BasisMonomial::make({-1}, 0)) != w1.end());
  CHECK(std::find(w1.begin(), w1.end(), BasisMonomial::make({}, 1)) != w1.end());
  CHECK(std::find(w1.begin(), w1.end(), BasisMonomial::make({}, -1)) != w1.end());
  CHECK(enumerate_basis(2, 2).size() == 4);
  CHECK(enumerate_basis(5, 0).size() == 1);
  for (int n : {1, 2, 3, 5})
    for (int w = 0; w <= 10; ++w) {
      const auto basis = enumerate_basis(n, w);
      CHECK(static_cast<long>(basis.size()) == lattice_dim(n, w));
      CHECK(std::is_sorted(basis.begin(), basis.end()));
      for (const auto& m : basis) CHECK(weight_of(m, n) == w);
    }
  const auto graded = enumerate_graded(2, 5);
  for (int w = 0; w <= 5; ++w) CHECK(graded.at(w) == enumerate_basis(2, w));
}

TEST_CASE("vector arithmetic keeps canonical form") {
  const Field& f = Field::get(4, 2);
  const Vector a = mono(f, {-1, -1});
  const Vector b = mono(f, {-2});
  const Vector s = a + b;
  CHECK((s - b) == a);
  CHECK((a - a).is_zero());
  CHECK((a * Scalar::zero(f)).is_zero());
  CHECK(s.size() == 2);
  CHECK(s.homogeneous_weight() == 2);
  CHECK(!(a + mono(f, {-1})).homogeneous_weight().has_value());
  CHECK(mono(f, {}, 1).homogeneous_weight() == 2);
  CHECK_THROWS_AS(a + mono(Field::get(4, 3), {-2}), ContextError);
  const Vector l = (a * Scalar::imaginary_unit(f)).lifted(8);
  CHECK(&l.field() == &Field::get(8, 2));
}

TEST_CASE("inner product examples") {
  const Field& f = Field::get(4, 1);
  const Vector vac = Vector::vacuum(f);
  CHECK(inner_product(vac, vac).is_one());
  CHECK(inner_product(mono(f, {-1}), mono(f, {-1})).is_one());
  CHECK(inner_product(mono(f, {-1}), mono(f, {}, 1)).is_zero());
  const Scalar i = Scalar::imaginary_unit(f);
  CHECK(inner_product(vac * i, vac) == -i);
  CHECK(inner_product(vac, vac * i) == i);
}

TEST_CASE("inner product against the adjoint recursion") {
  const Field& f = Field::get(4, 3);
  for (int w = 0; w <= 6; ++w) {
    const auto& parts = partitions_of(w);
    for (const auto& x : parts)
      for (const auto& y : parts) {
        const BasisMonomial mx = BasisMonomial::make(x, 0), my = BasisMonomial::make(y, 0);
        const Rational expected = oracle_norm(positive_parts(mx), positive_parts(my));
        CHECK(inner_product(Vector::monomial(f, mx), Vector::monomial(f, my)) == Scalar(f, expected));
        // charge sectors share the oscillator norm
        CHECK(inner_product(Vector::monomial(f, BasisMonomial::make(x, 2)), Vector::monomial(f, BasisMonomial::make(y, 2))) ==
              Scalar(f, expected));
        CHECK(inner_product(Vector::monomial(f, BasisMonomial::make(x, 1)), Vector::monomial(f, BasisMonomial::make(y, -1))).is_zero());
      }
  }
}

TEST_CASE("gram matrices") {
  const Field& f2 = Field::get(4, 2);
  const Matrix g0 = gram_matrix(f2, 0);
  CHECK(g0.rows == 1);
  CHECK(g0.at(0, 0).is_one());
  const Field& f1 = Field::get(4, 1);
  const Matrix g1 = gram_matrix(f1, 1);
  REQUIRE(g1.rows == 3);
  for (size_t r = 0; r < 3; ++r)
    for (size_t c = 0; c < 3; ++c) CHECK(g1.at(r, c) == Scalar(f1, r == c ? 1L : 0L));
  const Field& f3 = Field::get(4, 3);
  const Matrix g2 = gram_matrix(f3, 2);
  REQUIRE(g2.rows == 2);
  CHECK(g2.at(0, 0) == Scalar(f3, 2L));
  CHECK(g2.at(1, 1) == Scalar(f3, 2L));
  CHECK(g2.at(0, 1).is_zero());
}

TEST_CASE("gram matrices of non-monomial bases are hermitian positive definite") {
  for (int n : {1, 2, 3, 5}) {
    const Field& f = Field::get(4, n);
    const Scalar i = Scalar::imaginary_unit(f);
    for (int w = 0; w <= 6; ++w) {
      // a triangular change of basis with complex coefficients
      const auto monos = enumerate_basis(n, w);
      GradedSubspace s;
      s.field = &f;
      s.cutoff = w;
      for (size_t a = 0; a < monos.size(); ++a) {
        Vector v = Vector::monomial(f, monos[a]);
        for (size_t b = a + 1; b < monos.size(); ++b)
          v.add_term(monos[b], (b % 2 ? i : Scalar::one(f)) * frac(static_cast<long>(b), static_cast<long>(a + 2)));
        s.basis_by_weight[w].push_back(v);
      }
      const Matrix g = gram_matrix(f, w, &s);
      CHECK(g.is_hermitian());
      for (const auto& minor : leading_principal_minors(g)) {
        const auto q = minor.as_rational();
        REQUIRE(q.has_value());
        CHECK(*q > 0);
      }
    }
  }
}

TEST_CASE("PCT operator") {
  const Field& f = Field::get(4, 2);
  const Scalar i = Scalar::imaginary_unit(f);
  CHECK(pct(mono(f, {-1}, 1)) == -mono(f, {-1}, -1));
  CHECK(pct(Vector::vacuum(f) * i) == Vector::vacuum(f) * (-i));
  const Vector nu = mono(f, {-1, -1}) * frac(1, 2);
  CHECK(pct(nu) == nu);
  for (int w = 0; w <= 5; ++w)
    for (const auto& m : enumerate_basis(2, w)) {
      const Vector v = Vector::monomial(f, m, i + Scalar(f, 2L));
      CHECK(pct(pct(v)) == v);
      for (const auto& m2 : enumerate_basis(2, w)) {
        const Vector u = Vector::monomial(f, m2, Scalar::one(f) - i);
        CHECK(inner_product(pct(u), pct(v)) == inner_product(u, v).conjugate());
      }
    }
}

TEST_CASE("flip and torus automorphisms") {
  const Field& f = Field::get(12, 2);
  CHECK(apply_flip(mono(f, {-1})) == -mono(f, {-1}));
  const Vector nu = mono(f, {-1, -1}) * frac(1, 2);
  CHECK(apply_flip(nu) == nu);
  const Vector e_sum = mono(f, {}, 1) + mono(f, {}, -1);
  CHECK(apply_flip(e_sum) == e_sum);
  CHECK(apply_torus(1, 2, mono(f, {}, 1)) == -mono(f, {}, 1));
  CHECK(apply_torus(1, 6, mono(f, {-2})) == mono(f, {-2}));
  CHECK_THROWS_AS(apply_torus(1, 8, mono(f, {}, 1)), ContextError);

  std::vector<Vector> samples;
  for (int w = 0; w <= 5; ++w)
    for (const auto& m : enumerate_basis(2, w)) samples.push_back(Vector::monomial(f, m, Scalar::zeta(f, w)));
  for (const auto& v : samples) {
    CHECK(apply_flip(apply_flip(v)) == v);
    CHECK(apply_torus(1, 3, apply_torus(1, 3, apply_torus(1, 3, v))) == v);
    // phi g_t phi = g_{-t}
    CHECK(apply_flip(apply_torus(1, 12, apply_flip(v))) == apply_torus(-1, 12, v));
    for (const auto& u : samples) {
      CHECK(inner_product(apply_torus(5, 12, u), apply_torus(5, 12, v)) == inner_product(u, v));
      CHECK(inner_product(apply_flip(u), apply_flip(v)) == inner_product(u, v));
    }
  }
}

TEST_CASE("echelon basis") {
  const Field& f = Field::get(4, 1);
  EchelonBasis e(f);
  const Vector a = mono(f, {-1, -1}) + mono(f, {-2});
  const Vector b = mono(f, {-2}) * Scalar::imaginary_unit(f);
  CHECK(e.insert(a));
  CHECK(e.insert(b));
  CHECK(!e.insert(a + b));
  CHECK(e.rank() == 2);
  CHECK(e.contains(mono(f, {-1, -1})));
  CHECK(!e.contains(mono(f, {}, 1)));
  CHECK(e.reduce(mono(f, {}, 1) + a) == mono(f, {}, 1));
  for (const auto& v : e.basis()) CHECK(v.terms().begin()->second.is_one());
}
