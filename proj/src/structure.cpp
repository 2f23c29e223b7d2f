#include "voa/structure.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace voa {

namespace states {

Vector vacuum(const Field& f) { return Vector::vacuum(f); }

Vector nu(const Field& f) { return Vector::monomial(f, BasisMonomial{{-1, -1}, 0}, Scalar(f, Rational(1, 2))); }

Vector current(const Field& f) { return Vector::monomial(f, BasisMonomial{{-1}, 0}); }

Vector exponential(const Field& f, int charge) { return Vector::monomial(f, BasisMonomial{{}, charge}); }

Vector u4(const Field& f) {
  Vector v(f);
  v.add_term(BasisMonomial{{-1, -1, -1, -1}, 0}, Scalar(f, Rational(1, 2)));
  v.add_term(BasisMonomial{{-3, -1}, 0}, Scalar(f, -1L));
  v.add_term(BasisMonomial{{-2, -2}, 0}, Scalar(f, Rational(3, 4)));
  return v;
}

Vector v_g(const Field& f, int m) {
  const Rational g2(2L * f.lattice_n() * m * m);
  Vector v(f);
  v.add_term(BasisMonomial{{-1, -1, -1, -1}, 0}, Scalar(f, Rational(g2 * g2 / 12)));
  v.add_term(BasisMonomial{{-3, -1}, 0}, Scalar(f, Rational(2 * g2 / 3)));
  v.add_term(BasisMonomial{{-2, -2}, 0}, Scalar(f, Rational(g2 / 4)));
  return v;
}

Vector e_g_b(const Field& f, int m, const Scalar& b) {
  Vector v = exponential(f, m);
  v.add_term(BasisMonomial{{}, -m}, b);
  return v;
}

Vector omega_t(const Field& f, long p, long q) {
  if (f.lattice_n() != 2) throw ContextError("omega_t lives in the N = 2 lattice space");
  const Scalar quarter(f, Rational(1, 4));
  Vector v = nu(f) * Rational(1, 2);
  v.add_term(BasisMonomial{{}, 1}, Scalar::root_of_unity(f, p, q) * quarter);
  v.add_term(BasisMonomial{{}, -1}, Scalar::root_of_unity(f, -p, q) * quarter);
  return v;
}

std::optional<Vector> by_name(const Field& f, const std::string& name) {
  if (name == "nu") return nu(f);
  if (name == "vac") return vacuum(f);
  if (name == "j1") return current(f);
  if (name == "u4") return u4(f);
  if (name == "omega0") return omega_t(f, 0, 1);
  if (name == "omega_pi") return omega_t(f, 1, 2);
  if (name == "e_plus") return exponential(f, 1);
  if (name == "e_minus") return exponential(f, -1);
  if (name == "e_sum" || name == "egb") return e_g_b(f, 1, Scalar::one(f));
  if (name == "v_g") return v_g(f, 1);
  return std::nullopt;
}

std::vector<std::string> names() {
  return {"nu", "vac", "j1", "u4", "omega0", "omega_pi", "e_plus", "e_minus", "e_sum", "egb", "v_g"};
}

}  // namespace states

// ---------------------------------------------------------------------------

void Report::add(std::string name, bool ok, std::string detail) {
  items.push_back({std::move(name), ok, std::move(detail)});
  verdict = verdict && ok;
}

void Report::add_weight(int w, long lhs, long rhs) {
  per_weight.push_back({w, lhs, rhs, lhs == rhs});
  verdict = verdict && lhs == rhs;
}

// ---------------------------------------------------------------------------

std::vector<Vector> common_kernel(const Field& f, const std::vector<Vector>& domain, const std::vector<LinearMap>& maps) {
  EchelonBasis out(f);
  if (domain.empty()) return {};
  std::map<std::pair<size_t, BasisMonomial>, size_t> row_of;
  std::vector<std::vector<std::pair<size_t, Scalar>>> columns(domain.size());
  for (size_t j = 0; j < domain.size(); ++j) {
    for (size_t i = 0; i < maps.size(); ++i) {
      const Vector image = maps[i](domain[j]);
      for (const auto& [mono, c] : image.terms()) {
        auto [it, inserted] = row_of.try_emplace({i, mono}, row_of.size());
        columns[j].emplace_back(it->second, c);
      }
    }
  }
  Matrix m(f, row_of.size(), domain.size());
  for (size_t j = 0; j < domain.size(); ++j)
    for (const auto& [r, c] : columns[j]) m.at(r, j) = c;
  for (const auto& x : kernel(m)) {
    Vector v(f);
    for (size_t j = 0; j < domain.size(); ++j)
      if (!x[j].is_zero()) v.add_scaled(domain[j], x[j]);
    out.insert(v);
  }
  return out.basis();
}

std::optional<std::vector<Scalar>> express_in_span(const Vector& target, const std::vector<Vector>& spanning) {
  const Field& f = target.field();
  std::map<BasisMonomial, size_t> row_of;
  for (const auto& [mono, c] : target.terms()) row_of.try_emplace(mono, row_of.size());
  for (const auto& v : spanning)
    for (const auto& [mono, c] : v.terms()) row_of.try_emplace(mono, row_of.size());
  Matrix a(f, row_of.size(), spanning.size());
  std::vector<Scalar> rhs(row_of.size(), Scalar(f));
  for (size_t j = 0; j < spanning.size(); ++j)
    for (const auto& [mono, c] : spanning[j].terms()) a.at(row_of.at(mono), j) = c;
  for (const auto& [mono, c] : target.terms()) rhs[row_of.at(mono)] = c;
  return solve(a, rhs);
}

std::vector<Vector> monomial_vectors(const Field& f, int weight) {
  std::vector<Vector> out;
  for (auto& m : enumerate_basis(f.lattice_n(), weight)) out.push_back(Vector::monomial(f, std::move(m)));
  return out;
}

GradedSubspace full_space(const Field& f, int cutoff) {
  GradedSubspace s{&f, cutoff, {}};
  for (int w = 0; w <= cutoff; ++w) s.basis_by_weight[w] = monomial_vectors(f, w);
  return s;
}

// ---------------------------------------------------------------------------

std::vector<Vector> primary_basis(const Field& f, int weight, const GradedSubspace* ambient) {
  const std::vector<Vector> domain = ambient ? ambient->basis(weight) : monomial_vectors(f, weight);
  return common_kernel(f, domain,
                       {[](const Vector& v) { return virasoro_apply(1, v); },
                        [](const Vector& v) { return virasoro_apply(2, v); }});
}

std::vector<Vector> quasi_primary_basis(const Field& f, int weight) {
  return common_kernel(f, monomial_vectors(f, weight), {[](const Vector& v) { return virasoro_apply(1, v); }});
}

namespace {

std::vector<long> partition_numbers(int n) {
  std::vector<long> p(std::max(n, 0) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int w = part; w <= n; ++w) p[w] += p[w - part];
  return p;
}

std::optional<long> integer_of(const Rational& q) {
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return std::nullopt;
  return q.get_num().get_si();
}

}  // namespace

std::vector<long> virasoro_character(const Rational& c, const Rational& h, int max_weight) {
  if (max_weight < 0) throw DomainError("virasoro_character: max_weight must be nonnegative");
  // numerator exponents relative to h, with signs
  std::map<long, long> numerator;
  if (c == 1) {
    if (h < 0) throw DomainError("L(1,h) requires h >= 0");
    numerator[0] = 1;
    // degenerate exactly when h = (m/2)^2: subtract q^{((m+2)/2)^2}
    if (auto h4 = integer_of(h * 4)) {
      long m = 0;
      while (m * m < *h4) ++m;
      if (m * m == *h4) numerator[m + 1] -= 1;
    }
  } else {
    // discrete series c = 1 - 6/(m(m+1))
    long m = 0;
    for (long t = 2; t < 10000; ++t) {
      if (c == 1 - frac(6, t * (t + 1))) {
        m = t;
        break;
      }
      if (1 - frac(6, t * (t + 1)) > c) break;
    }
    if (m == 0) throw DomainError("central charge is neither 1 nor in the unitary discrete series");
    const long p = m + 1, pp = m;
    auto kac = [&](long x) { return frac(x * x - (p - pp) * (p - pp), 4 * p * pp); };
    long rr = 0, ss = 0;
    for (long r = 1; r <= pp - 1 && rr == 0; ++r)
      for (long s = 1; s <= p - 1; ++s)
        if (kac(p * r - pp * s) == h) {
          rr = r;
          ss = s;
          break;
        }
    if (rr == 0) throw DomainError("h is not in the Kac table for this central charge");
    for (long k = -(max_weight + 2); k <= max_weight + 2; ++k) {
      const Rational e1 = kac(2 * p * pp * k + p * rr - pp * ss) - h;
      const Rational e2 = kac(2 * p * pp * k + p * rr + pp * ss) - h;
      if (e1 <= max_weight) numerator[*integer_of(e1)] += 1;
      if (e2 <= max_weight) numerator[*integer_of(e2)] -= 1;
    }
  }
  long offset_count;
  long shift = 0;
  if (auto hi = integer_of(h)) {
    shift = *hi;
    offset_count = max_weight - *hi + 1;
  } else {
    const Rational room = max_weight - h;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), room.get_num_mpz_t(), room.get_den_mpz_t());
    offset_count = fl.get_si() + 1;
  }
  offset_count = std::max(offset_count, 0L);
  const auto p = partition_numbers(static_cast<int>(offset_count));
  std::vector<long> rel(offset_count, 0);
  for (long j = 0; j < offset_count; ++j)
    for (const auto& [e, s] : numerator)
      if (e >= 0 && e <= j) rel[j] += s * p[j - e];
  if (!integer_of(h)) return rel;
  std::vector<long> out(max_weight + 1, 0);
  for (long j = 0; j < offset_count; ++j) out[j + shift] = rel[j];
  return out;
}

SpaceKind parse_space_kind(const std::string& s) {
  if (s == "V") return SpaceKind::V;
  if (s == "M1") return SpaceKind::M1;
  if (s == "V+") return SpaceKind::VPlus;
  if (s == "M1+") return SpaceKind::M1Plus;
  throw DomainError("unknown space '" + s + "' (expected V, M1, V+ or M1+)");
}

std::string to_string(SpaceKind k) {
  switch (k) {
    case SpaceKind::V: return "V";
    case SpaceKind::M1: return "M1";
    case SpaceKind::VPlus: return "V+";
    case SpaceKind::M1Plus: return "M1+";
  }
  return "?";
}

DecompositionReport verify_decomposition(SpaceKind which, int lattice_n, int cutoff) {
  long root = 0;
  while ((root + 1) * (root + 1) <= lattice_n) ++root;
  if (root * root == lattice_n) throw DomainError("decompositions are only stated for N not a perfect square");
  const Field& f = Field::get(4, lattice_n);

  std::vector<long> lhs(cutoff + 1, 0);
  GradedSubspace fixed;
  if (which == SpaceKind::VPlus) fixed = fixed_point_subspace(GroupSpec{GroupSpec::Kind::Dihedral, 1}, f, cutoff);
  if (which == SpaceKind::M1Plus) fixed = fixed_point_subspace(GroupSpec{GroupSpec::Kind::DInfinity}, f, cutoff);
  for (int w = 0; w <= cutoff; ++w) {
    switch (which) {
      case SpaceKind::V: lhs[w] = static_cast<long>(enumerate_basis(lattice_n, w).size()); break;
      case SpaceKind::M1: {
        long n = 0;
        for (const auto& m : enumerate_basis(lattice_n, w)) n += m.charge == 0;
        lhs[w] = n;
        break;
      }
      default: lhs[w] = fixed.dim(w);
    }
  }

  std::vector<long> rhs(cutoff + 1, 0);
  auto add = [&](long h, long mult) {
    if (h > cutoff) return;
    const auto ch = virasoro_character(1, h, cutoff);
    for (int w = 0; w <= cutoff; ++w) rhs[w] += mult * ch[w];
  };
  const bool plus = which == SpaceKind::VPlus || which == SpaceKind::M1Plus;
  const bool lattice = which == SpaceKind::V || which == SpaceKind::VPlus;
  for (long p = 0; (plus ? 4 * p * p : p * p) <= cutoff; ++p) add(plus ? 4 * p * p : p * p, 1);
  if (lattice)
    for (long m = 1; lattice_n * m * m <= cutoff; ++m) add(lattice_n * m * m, plus ? 1 : 2);

  DecompositionReport r;
  r.check = "decomposition";
  r.params = {{"space", to_string(which)}, {"N", std::to_string(lattice_n)}, {"cutoff", std::to_string(cutoff)}};
  for (int w = 0; w <= cutoff; ++w) r.add_weight(w, lhs[w], rhs[w]);
  return r;
}

// ---------------------------------------------------------------------------

GroupSpec GroupSpec::parse(const std::string& s, long p, long q) {
  GroupSpec g;
  g.p = p;
  g.q = q;
  if (s == "T") {
    g.kind = Kind::Torus;
    return g;
  }
  if (s == "Dinf") {
    g.kind = Kind::DInfinity;
    return g;
  }
  std::string body = s;
  bool twisted = false;
  if (body.size() > 2 && body.compare(body.size() - 2, 2, "^t") == 0) {
    twisted = true;
    body.resize(body.size() - 2);
  }
  if (body.size() < 2 || (body[0] != 'Z' && body[0] != 'D')) throw DomainError("unknown group '" + s + "'");
  size_t used = 0;
  int k = 0;
  try {
    k = std::stoi(body.substr(1), &used);
  } catch (const std::exception&) {
    throw DomainError("unknown group '" + s + "'");
  }
  if (used != body.size() - 1 || k <= 0) throw DomainError("unknown group '" + s + "'");
  if (body[0] == 'Z' && twisted) throw DomainError("cyclic groups have no twisted form");
  g.k = k;
  g.kind = body[0] == 'Z' ? Kind::Cyclic : (twisted ? Kind::DihedralTwisted : Kind::Dihedral);
  if (twisted && q <= 0) throw DomainError("twist angle denominator must be positive");
  return g;
}

std::string GroupSpec::to_string() const {
  switch (kind) {
    case Kind::Cyclic: return "Z" + std::to_string(k);
    case Kind::Dihedral: return "D" + std::to_string(k);
    case Kind::DihedralTwisted: return "D" + std::to_string(k) + "^t(t=2pi*" + std::to_string(p) + "/" + std::to_string(q) + ")";
    case Kind::Torus: return "T";
    case Kind::DInfinity: return "Dinf";
  }
  return "?";
}

GradedSubspace fixed_point_subspace(const GroupSpec& g, const Field& f, int cutoff) {
  std::vector<std::function<Vector(const Vector&)>> elements;
  const bool charge_zero = g.kind == GroupSpec::Kind::Torus || g.kind == GroupSpec::Kind::DInfinity;
  switch (g.kind) {
    case GroupSpec::Kind::Torus: elements.push_back([](const Vector& v) { return v; }); break;
    case GroupSpec::Kind::DInfinity:
      elements.push_back([](const Vector& v) { return v; });
      elements.push_back([](const Vector& v) { return apply_flip(v); });
      break;
    default: {
      Scalar::root_of_unity(f, 1, g.k);  // conductor check
      if (g.kind == GroupSpec::Kind::DihedralTwisted) Scalar::root_of_unity(f, 2 * g.p, g.q);
      for (int j = 0; j < g.k; ++j) {
        const long k = g.k;
        elements.push_back([j, k](const Vector& v) { return apply_torus(j, k, v); });
        if (g.kind == GroupSpec::Kind::Dihedral)
          elements.push_back([j, k](const Vector& v) { return apply_torus(j, k, apply_flip(v)); });
        if (g.kind == GroupSpec::Kind::DihedralTwisted) {
          const long p2 = 2 * g.p, q = g.q;
          elements.push_back([j, k, p2, q](const Vector& v) { return apply_torus(j, k, apply_torus(p2, q, apply_flip(v))); });
        }
      }
    }
  }
  GradedSubspace out{&f, cutoff, {}};
  for (int w = 0; w <= cutoff; ++w) {
    EchelonBasis ech(f);
    for (auto& m : enumerate_basis(f.lattice_n(), w)) {
      if (charge_zero && m.charge != 0) continue;
      const Vector v = Vector::monomial(f, std::move(m));
      Vector avg(f);
      for (const auto& e : elements) avg += e(v);
      ech.insert(avg);
    }
    out.basis_by_weight[w] = ech.basis();
  }
  return out;
}

// ---------------------------------------------------------------------------

GradedSubspace close_subalgebra(const std::vector<Vector>& generators, const Field& f, int cutoff, ClosureOptions opts) {
  std::map<int, EchelonBasis> ech;
  std::vector<std::pair<int, Vector>> members;  // (weight, vector) in insertion order
  std::vector<std::pair<int, Vector>> fresh;
  for (int w = 0; w <= cutoff; ++w) ech.emplace(w, EchelonBasis(f));

  auto add = [&](const Vector& v) {
    for (auto& [w, comp] : v.weight_components()) {
      if (w > cutoff) continue;
      if (ech.at(w).insert(comp)) fresh.emplace_back(w, comp);
    }
  };
  add(Vector::vacuum(f));
  for (const auto& g : generators) {
    if (&g.field() != &f) throw ContextError("close_subalgebra: generator lives in a different field");
    add(g);
  }

  ModeCache cache(f);
  int rounds = 0;
  while (!fresh.empty()) {
    if (++rounds > opts.max_rounds) throw DomainError("close_subalgebra: iteration guard exceeded");
    std::vector<std::pair<int, Vector>> batch;
    batch.swap(fresh);
    members.insert(members.end(), batch.begin(), batch.end());
    for (const auto& [wx, x] : batch) {
      add(pct(x));
      add(virasoro_apply(1, x));
      // x_(n) y for every member y; y_(n) x follows by skew symmetry once L_{-1} = (.)_(-2) Omega is closed
      for (const auto& [wy, y] : members) {
        const int top = wx + wy - 1;
        for (const auto& [n, v] : cache.modes(x, y, top - cutoff, top)) add(v);
      }
    }
  }
  GradedSubspace out{&f, cutoff, {}};
  for (auto& [w, e] : ech) out.basis_by_weight[w] = e.basis();
  return out;
}

Vector project_conformal(const GradedSubspace& w) {
  const Field& f = *w.field;
  const auto& basis = w.basis(2);
  if (basis.empty()) return Vector(f);
  const Vector target = states::nu(f);
  const Matrix g = gram_matrix(f, 2, &w);
  std::vector<Scalar> rhs;
  for (const auto& b : basis) rhs.push_back(inner_product(b, target));
  const auto x = solve(g, rhs);
  if (!x) throw DomainError("project_conformal: singular Gram matrix");
  Vector omega(f);
  for (size_t j = 0; j < basis.size(); ++j) omega.add_scaled(basis[j], (*x)[j]);
  return omega;
}

Report check_projection(const GradedSubspace& w, const Vector& omega) {
  Report r;
  r.check = "projection";
  r.params = {{"cutoff", std::to_string(w.cutoff)}};
  if (omega.is_zero()) {
    r.add("trivial", true, "weight-2 piece is zero; certification skipped");
    return r;
  }
  r.add("theta(omega) = omega", pct(omega) == omega);
  ModeCache cache(*w.field);
  for (int n = -1; n <= 1; ++n) {
    ModeOperator l(omega, n + 1, &cache);
    bool ok = true;
    for (int wt = 0; wt <= w.cutoff - 2 && ok; ++wt)
      for (const auto& b : w.basis(wt))
        if (l(b) != virasoro_apply(n, b)) {
          ok = false;
          break;
        }
    r.add("L^omega_" + std::to_string(n) + " = L_" + std::to_string(n) + " on W", ok);
  }
  return r;
}

VirasoroVectorCertificate certify_virasoro_vector(const Vector& omega, const Rational& c, int cutoff, int range,
                                                  ModeCache* cache) {
  const Field& f = omega.field();
  if (omega.homogeneous_weight() != 2) throw DomainError("certify_virasoro_vector: omega must be homogeneous of weight 2");
  std::optional<ModeCache> local;
  if (!cache) cache = &local.emplace(f);

  VirasoroVectorCertificate cert{omega, c, cutoff, false, {}, std::nullopt};
  std::map<int, ModeOperator> ops;
  auto L = [&](int m) -> ModeOperator& {
    auto it = ops.find(m);
    if (it == ops.end()) it = ops.emplace(m, ModeOperator(omega, m + 1, cache)).first;
    return it->second;
  };

  const Vector l0 = L(0)(omega);
  if (l0 != omega * Rational(2)) {
    cert.counterexample = VirasoroCounterexample{0, 0, omega, l0 - omega * Rational(2)};
    return cert;
  }
  cert.checks.push_back("L_0 omega = 2 omega");
  const Vector l1 = L(1)(omega);
  if (!l1.is_zero()) {
    cert.counterexample = VirasoroCounterexample{1, 1, omega, l1};
    return cert;
  }
  cert.checks.push_back("L_1 omega = 0");

  for (int w = 0; w <= cutoff; ++w) {
    for (const auto& mono : enumerate_basis(f.lattice_n(), w)) {
      const Vector v = Vector::monomial(f, mono);
      std::map<int, Vector> single;
      for (int m = -range; m <= range; ++m) single.emplace(m, L(m)(v));
      for (int m = -range; m <= range; ++m) {
        for (int n = m + 1; n <= range; ++n) {
          Vector lhs = L(m)(single.at(n)) - L(n)(single.at(m));
          Vector rhs = (m + n >= -range && m + n <= range ? single.at(m + n) : L(m + n)(v)) * Rational(m - n);
          if (m + n == 0) rhs += v * (c * frac(m * m * m - m, 12));
          if (lhs != rhs) {
            cert.counterexample = VirasoroCounterexample{m, n, v, lhs - rhs};
            return cert;
          }
        }
      }
    }
  }
  cert.checks.push_back("[L_m, L_n] = (m-n) L_{m+n} + c (m^3-m)/12 delta_{m,-n} for m, n in [" +
                        std::to_string(-range) + ", " + std::to_string(range) + "] on weight <= " +
                        std::to_string(cutoff));
  cert.certified = true;
  return cert;
}

// ---------------------------------------------------------------------------

void Poly3::add(std::array<int, 3> e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

Poly3 Poly3::operator-(const Poly3& o) const {
  Poly3 r = *this;
  for (const auto& [e, c] : o.terms) r.add(e, -c);
  return r;
}

Poly3 Poly3::monic() const {
  Poly3 r(*field);
  if (terms.empty()) return r;
  const Scalar inv = terms.rbegin()->second.inverse();
  for (const auto& [e, c] : terms) r.add(e, c * inv);
  return r;
}

Scalar Poly3::evaluate(const Scalar& a, const Scalar& b, const Scalar& bbar) const {
  Scalar acc(*field);
  for (const auto& [e, c] : terms)
    acc += c * a.pow(static_cast<unsigned>(e[0])) * b.pow(static_cast<unsigned>(e[1])) * bbar.pow(static_cast<unsigned>(e[2]));
  return acc;
}

std::string Poly3::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  static const char* names[3] = {"a", "b", "bbar"};
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.to_string() << ")";
    for (int i = 0; i < 3; ++i)
      if (it->first[i] > 0) os << "*" << names[i] << (it->first[i] > 1 ? "^" + std::to_string(it->first[i]) : "");
  }
  return os.str();
}

namespace {

void add_to(PolyVector& pv, std::array<int, 3> e, const Vector& v) {
  if (v.is_zero()) return;
  auto it = pv.find(e);
  if (it == pv.end()) pv.emplace(e, v);
  else {
    it->second += v;
    if (it->second.is_zero()) pv.erase(it);
  }
}

std::array<int, 3> operator+(std::array<int, 3> x, const std::array<int, 3>& y) {
  for (int i = 0; i < 3; ++i) x[i] += y[i];
  return x;
}

}  // namespace

std::vector<Scalar> omega_residual(const Field& f, const Scalar& a, const Scalar& b) {
  if (f.lattice_n() != 2) throw ContextError("omega_residual: requires N = 2");
  Vector omega = states::nu(f) * a;
  omega.add_term(BasisMonomial{{}, 1}, b);
  omega.add_term(BasisMonomial{{}, -1}, b.conjugate());
  const Vector diff = vertex_mode(omega, 1, omega) - omega * Rational(2);
  std::vector<Scalar> out;
  for (const auto& [m, c] : diff.terms()) out.push_back(c);
  return out;
}

OmegaConstraintResult solve_omega_constraint(const Field& f) {
  if (f.lattice_n() != 2) throw ContextError("solve_omega_constraint: requires N = 2");
  OmegaConstraintResult res;
  ModeCache cache(f);
  const Vector nu = states::nu(f);
  const Vector ep = states::exponential(f, 1);
  const Vector em = states::exponential(f, -1);
  const Vector zero(f);

  res.c_nu = {cache.mode(ep, 1, nu), cache.mode(em, 1, nu)};
  res.c_e2 = {cache.mode(ep, 1, ep), cache.mode(ep, 1, em) + cache.mode(em, 1, ep), cache.mode(em, 1, em)};
  res.c_nu_matches = res.c_nu[0] == ep * Rational(2) && res.c_nu[1] == em * Rational(2);
  res.c_e2_matches = res.c_e2[0] == zero && res.c_e2[1] == nu * Rational(8) && res.c_e2[2] == zero;

  // omega = a nu + b e^{2J} + bbar e^{-2J}
  const std::vector<std::pair<std::array<int, 3>, Vector>> omega = {{{1, 0, 0}, nu}, {{0, 1, 0}, ep}, {{0, 0, 1}, em}};
  PolyVector product;
  for (const auto& [e1, x] : omega)
    for (const auto& [e2, y] : omega) add_to(product, e1 + e2, cache.mode(x, 1, y));

  PolyVector assembled;
  for (const auto& [e, x] : omega) add_to(assembled, e + std::array<int, 3>{1, 0, 0}, x * Rational(2));
  add_to(assembled, {1, 1, 0}, res.c_nu[0]);
  add_to(assembled, {1, 0, 1}, res.c_nu[1]);
  add_to(assembled, {0, 2, 0}, res.c_e2[0]);
  add_to(assembled, {0, 1, 1}, res.c_e2[1]);
  add_to(assembled, {0, 0, 2}, res.c_e2[2]);
  res.l0_identity = assembled == product;

  PolyVector diff = product;
  for (const auto& [e, x] : omega) add_to(diff, e, x * Rational(-2));
  std::map<BasisMonomial, Poly3> coords;
  for (const auto& [e, v] : diff)
    for (const auto& [mono, c] : v.terms()) coords.try_emplace(mono, f).first->second.add(e, c);
  for (auto& [mono, p] : coords)
    if (!p.is_zero()) res.equations.push_back(p);

  // 2a = 2(a^2 + 4 b bbar), 2b = 4ab and its conjugate 2bbar = 4a bbar
  std::vector<Poly3> expected(3, Poly3(f));
  expected[0].add({1, 0, 0}, Scalar(f, 2L));
  expected[0].add({2, 0, 0}, Scalar(f, -2L));
  expected[0].add({0, 1, 1}, Scalar(f, -8L));
  expected[1].add({0, 1, 0}, Scalar(f, 2L));
  expected[1].add({1, 1, 0}, Scalar(f, -4L));
  expected[2].add({0, 0, 1}, Scalar(f, 2L));
  expected[2].add({1, 0, 1}, Scalar(f, -4L));
  {
    std::vector<Poly3> got, want;
    for (const auto& p : res.equations) got.push_back(p.monic());
    for (const auto& p : expected) want.push_back(p.monic());
    bool match = got.size() == want.size();
    for (const auto& w : want)
      match = match && std::find(got.begin(), got.end(), w) != got.end();
    res.system_matches = match;
  }

  const Scalar half(f, Rational(1, 2));
  const long q = f.conductor();
  for (long p = 0; p < q; ++p) {
    const Scalar b = Scalar::root_of_unity(f, p, q) * Rational(1, 4);
    const Scalar bbar = b.conjugate();
    bool residual_zero = true;
    for (const auto& eq : res.equations) residual_zero = residual_zero && eq.evaluate(half, b, bbar).is_zero();
    Vector w = nu * half;
    w.add_term(BasisMonomial{{}, 1}, b);
    w.add_term(BasisMonomial{{}, -1}, bbar);
    const bool direct = cache.mode(w, 1, w) == w * Rational(2);
    res.samples.push_back({p, q, half, b, residual_zero, direct});
  }

  Report& r = res.report;
  r.check = "omega";
  r.params = {{"N", "2"}, {"conductor", std::to_string(q)}};
  r.add("C_{-2,nu} = 2 e^2", res.c_nu_matches);
  r.add("C_{-2,e^2} = (bbar/b) 8 nu", res.c_e2_matches);
  r.add("L_0 omega = 2a omega + ab C_{-2,nu} + b^2 C_{-2,e^2}", res.l0_identity);
  {
    std::string eqs;
    for (const auto& p : res.equations) eqs += (eqs.empty() ? "" : "; ") + p.to_string() + " = 0";
    r.add("constraint system {2a = 2(a^2+4|b|^2), 2b = 4ab}", res.system_matches, eqs);
  }
  for (const auto& s : res.samples)
    r.add("solution a = 1/2, b = " + s.b.to_string(), s.residual_zero && s.direct_zero,
          "zeta_" + std::to_string(s.q) + "^" + std::to_string(s.p) + " / 4");
  return res;
}

Report verify_w_tensor_split(int cutoff, int range) {
  const Field& f = Field::get(4, 2);
  Report r;
  r.check = "tensor-split";
  r.params = {{"N", "2"}, {"cutoff", std::to_string(cutoff)}};
  const Vector w0 = states::omega_t(f, 0, 1);
  const Vector wpi = states::omega_t(f, 1, 2);
  r.add("omega_0 + omega_pi = nu", w0 + wpi == states::nu(f));

  ModeCache cache(f);
  std::map<int, ModeOperator> a, b;
  for (int m = -range; m <= range; ++m) {
    a.emplace(m, ModeOperator(w0, m + 1, &cache));
    b.emplace(m, ModeOperator(wpi, m + 1, &cache));
  }
  bool commute = true;
  std::string detail;
  for (int w = 0; w <= cutoff && commute; ++w) {
    for (const auto& mono : enumerate_basis(2, w)) {
      const Vector v = Vector::monomial(f, mono);
      for (int m = -range; m <= range && commute; ++m)
        for (int n = -range; n <= range && commute; ++n)
          if (a.at(m)(b.at(n)(v)) != b.at(n)(a.at(m)(v))) {
            commute = false;
            detail = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " v=" + mono.to_string();
          }
      if (!commute) break;
    }
  }
  r.add("[L^{omega_0}_m, L^{omega_pi}_n] = 0", commute, detail);

  const auto half = close_subalgebra({w0}, f, cutoff).dims();
  const auto plus = fixed_point_subspace(GroupSpec{GroupSpec::Kind::Dihedral, 1}, f, cutoff).dims();
  for (int w = 0; w <= cutoff; ++w) {
    long conv = 0;
    for (int i = 0; i <= w; ++i) conv += static_cast<long>(half[i]) * half[w - i];
    r.add_weight(w, plus[w], conv);
  }
  return r;
}

Report sl2_zero_mode_check(const Field& f, int cutoff) {
  if (f.lattice_n() != 1) throw ContextError("sl2_zero_mode_check: requires N = 1");
  Report r;
  r.check = "sl2";
  r.params = {{"N", "1"}, {"cutoff", std::to_string(cutoff)}};
  const std::vector<Vector> gens = {states::exponential(f, 1), states::exponential(f, -1), states::current(f)};
  const std::vector<std::string> label = {"x+", "x-", "h"};
  ModeCache cache(f);

  // structure constants c[i][j][k]: [g_i, g_j] = sum_k c g_k
  std::vector<std::vector<std::vector<Scalar>>> c(3, std::vector<std::vector<Scalar>>(3));
  std::vector<std::vector<Vector>> bracket(3, std::vector<Vector>(3, Vector(f)));
  bool closes = true;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      bracket[i][j] = cache.mode(gens[i], 0, gens[j]);
      auto x = express_in_span(bracket[i][j], gens);
      if (!x) {
        closes = false;
        c[i][j] = std::vector<Scalar>(3, Scalar(f));
      } else {
        c[i][j] = *x;
      }
    }
  }
  r.add("bracket table closes on span{x+, x-, h}", closes);

  const Scalar s2 = Scalar::sqrt_2n(f);
  const Scalar zero(f);
  bool expected = c[2][0] == std::vector<Scalar>{s2, zero, zero} && c[2][1] == std::vector<Scalar>{zero, -s2, zero} &&
                  c[0][1] == std::vector<Scalar>{zero, zero, s2} && c[0][0] == std::vector<Scalar>(3, zero) &&
                  c[1][1] == std::vector<Scalar>(3, zero) && c[2][2] == std::vector<Scalar>(3, zero);
  r.add("[h, x+-] = +-sqrt2 x+-, [x+, x-] = sqrt2 h", expected);

  bool antisym = true;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) antisym = antisym && c[i][j][k] == -c[j][i][k];
  r.add("antisymmetry", antisym);

  bool jacobi = true;
  auto br = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    std::vector<Scalar> out(3, Scalar(f));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) out[k] += x[i] * y[j] * c[i][j][k];
    return out;
  };
  auto unit = [&](int i) {
    std::vector<Scalar> e(3, Scalar(f));
    e[i] = Scalar::one(f);
    return e;
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        auto t1 = br(unit(i), br(unit(j), unit(k)));
        auto t2 = br(unit(j), br(unit(k), unit(i)));
        auto t3 = br(unit(k), br(unit(i), unit(j)));
        for (int l = 0; l < 3; ++l) jacobi = jacobi && (t1[l] + t2[l] + t3[l]).is_zero();
      }
  r.add("Jacobi identity", jacobi);

  Matrix killing(f, 3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Scalar tr(f);
      // ad_i ad_j: e_l -> sum_m c[j][l][m] e_m -> sum_m c[j][l][m] c[i][m][n] e_n
      for (int l = 0; l < 3; ++l)
        for (int m = 0; m < 3; ++m) tr += c[j][l][m] * c[i][m][l];
      killing.at(i, j) = tr;
    }
  r.add("Killing form nondegenerate", !determinant(killing).is_zero());

  std::vector<ModeOperator> zero_modes;
  for (const auto& g : gens) zero_modes.emplace_back(g, 0, &cache);
  bool ops = true;
  std::string detail;
  for (int i = 0; i < 3 && ops; ++i) {
    for (int j = i; j < 3 && ops; ++j) {
      ModeOperator target(bracket[i][j], 0, &cache);
      for (int w = 0; w <= cutoff && ops; ++w)
        for (const auto& mono : enumerate_basis(1, w)) {
          const Vector v = Vector::monomial(f, mono);
          const Vector lhs = zero_modes[i](zero_modes[j](v)) - zero_modes[j](zero_modes[i](v));
          if (lhs != target(v)) {
            ops = false;
            detail = "[" + label[i] + "_(0), " + label[j] + "_(0)] on " + mono.to_string();
            break;
          }
        }
    }
  }
  r.add("[a_(0), b_(0)] = (a_(0) b)_(0) on weight <= " + std::to_string(cutoff), ops, detail);
  return r;
}

}  // namespace voa
