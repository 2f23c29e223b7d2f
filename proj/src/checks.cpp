#include "voa/checks.hpp"

#include <numeric>

namespace voa {

namespace {

std::string ctx(const Field& f) { return "N=" + std::to_string(f.lattice_n()); }

std::vector<Vector> basis_upto(const Field& f, int cutoff) {
  std::vector<Vector> out;
  for (int w = 0; w <= cutoff; ++w)
    for (auto& m : enumerate_basis(f.lattice_n(), w)) out.push_back(Vector::monomial(f, std::move(m)));
  return out;
}

}  // namespace

Report check_creation(const Field& f, int cutoff) {
  Report r;
  r.check = "creation";
  r.params = {{"N", std::to_string(f.lattice_n())}, {"cutoff", std::to_string(cutoff)}};
  const Vector vac = Vector::vacuum(f);
  ModeCache cache(f);
  bool ok = true;
  std::string detail;
  for (const auto& a : basis_upto(f, cutoff)) {
    const auto modes = cache.modes(a, vac, -1, cutoff + 2);
    auto it = modes.find(-1);
    const bool good = it != modes.end() && it->second == a && modes.size() == 1;
    if (!good && ok) detail = a.to_string();
    ok = ok && good;
  }
  r.add("a_(-1) Omega = a, a_(n) Omega = 0 (n >= 0) " + ctx(f), ok, detail);
  return r;
}

Report check_translation(const Field& f, int a_cutoff, int b_cutoff) {
  Report r;
  r.check = "translation";
  r.params = {{"N", std::to_string(f.lattice_n())}, {"a_cutoff", std::to_string(a_cutoff)}, {"b_cutoff", std::to_string(b_cutoff)}};
  ModeCache cache(f);
  bool translation = true, grading = true;
  std::string detail;
  const auto bs = basis_upto(f, b_cutoff);
  for (const auto& a : basis_upto(f, a_cutoff)) {
    const int wa = *a.homogeneous_weight();
    const Vector ta = virasoro_apply(-1, a);
    for (const auto& b : bs) {
      const int wb = *b.homogeneous_weight();
      // results of weight 0..b_cutoff
      const int top = wa + wb;  // for L_{-1} a, weight wa + 1
      const int bottom = wa + wb - b_cutoff;
      const auto lhs = cache.modes(ta, b, bottom, top);
      const auto rhs = cache.modes(a, b, bottom - 1, top - 1);
      for (int n = bottom; n <= top; ++n) {
        auto li = lhs.find(n);
        auto ri = rhs.find(n - 1);
        const Vector l = li == lhs.end() ? Vector(f) : li->second;
        const Vector rv = ri == rhs.end() ? Vector(f) : ri->second * Rational(-n);
        if (l != rv) {
          if (translation) detail = "a=" + a.to_string() + " b=" + b.to_string() + " n=" + std::to_string(n);
          translation = false;
        }
      }
      for (const auto& [n, v] : rhs) {
        const auto w = v.homogeneous_weight();
        if (!w || *w != wa + wb - n - 1) grading = false;
      }
    }
  }
  r.add("(L_{-1} a)_(n) b = -n a_(n-1) b " + ctx(f), translation, detail);
  r.add("wt(a_(n) b) = wt a + wt b - n - 1 " + ctx(f), grading);
  return r;
}

Report check_heisenberg(const Field& f, int cutoff, int range) {
  Report r;
  r.check = "heisenberg";
  r.params = {{"N", std::to_string(f.lattice_n())}, {"cutoff", std::to_string(cutoff)}, {"range", std::to_string(range)}};
  const Vector j1 = states::current(f);
  ModeCache cache(f);
  bool cr = true, field = true;
  for (const auto& v : basis_upto(f, cutoff)) {
    for (int m = -range; m <= range; ++m) {
      const Vector jm = heis_apply(m, v);
      if (cache.mode(j1, m, v) != jm) field = false;
      for (int n = -range; n <= range; ++n) {
        Vector comm = heis_apply(m, heis_apply(n, v)) - heis_apply(n, jm);
        if (m + n == 0) comm -= v * Rational(m);
        if (!comm.is_zero()) cr = false;
      }
    }
  }
  r.add("[J_m, J_n] = m delta_{m,-n} " + ctx(f), cr);
  r.add("(J_{-1} Omega)_(m) = J_m " + ctx(f), field);
  return r;
}

Report check_virasoro(const Field& f, int cutoff, int range) {
  Report r;
  r.check = "virasoro";
  r.params = {{"N", std::to_string(f.lattice_n())}, {"cutoff", std::to_string(cutoff)}, {"range", std::to_string(range)}};
  const Vector nu = states::nu(f);
  ModeCache cache(f);
  bool cr = true, field = true;
  for (const auto& v : basis_upto(f, cutoff)) {
    std::map<int, Vector> single;
    for (int m = -2 * range; m <= 2 * range; ++m) single.emplace(m, virasoro_apply(m, v));
    for (int m = -range; m <= range; ++m) {
      if (cache.mode(nu, m + 1, v) != single.at(m)) field = false;
      for (int n = -range; n <= range; ++n) {
        Vector comm = virasoro_apply(m, single.at(n)) - virasoro_apply(n, single.at(m)) - single.at(m + n) * Rational(m - n);
        if (m + n == 0) comm -= v * frac(m * m * m - m, 12);
        if (!comm.is_zero()) cr = false;
      }
    }
  }
  r.add("[L_m, L_n] = (m-n) L_{m+n} + (m^3-m)/12 delta_{m,-n} " + ctx(f), cr);
  r.add("nu_(m+1) = L_m " + ctx(f), field);
  return r;
}

Report check_mixed(const Field& f, int cutoff, int range) {
  Report r;
  r.check = "mixed";
  r.params = {{"N", std::to_string(f.lattice_n())}, {"cutoff", std::to_string(cutoff)}, {"range", std::to_string(range)}};
  bool ok = true;
  for (const auto& v : basis_upto(f, cutoff))
    for (int m = -range; m <= range; ++m)
      for (int n = -range; n <= range; ++n) {
        const Vector comm = virasoro_apply(m, heis_apply(n, v)) - heis_apply(n, virasoro_apply(m, v));
        if (comm != heis_apply(m + n, v) * Rational(-n)) ok = false;
      }
  r.add("[L_m, J_n] = -n J_{m+n} " + ctx(f), ok);
  return r;
}

Report check_weight4_primary(const Field& f) {
  Report r;
  r.check = "lemma-weight4";
  r.params = {{"N", std::to_string(f.lattice_n())}};
  const Vector u = states::u4(f);
  r.add("wt(u) = 4", u.homogeneous_weight() == 4);
  for (int m = 1; m <= 6; ++m) r.add("L_" + std::to_string(m) + " u = 0", virasoro_apply(m, u).is_zero());

  Vector l2nu(f);
  l2nu.add_term(BasisMonomial{{-1, -1, -1, -1}, 0}, Scalar(f, Rational(1, 4)));
  l2nu.add_term(BasisMonomial{{-3, -1}, 0}, Scalar::one(f));
  r.add("L_{-2} nu = 1/4 J_{-1}^4 + J_{-3} J_{-1}", virasoro_apply(-2, states::nu(f)) == l2nu);

  Vector l4(f);
  l4.add_term(BasisMonomial{{-2, -2}, 0}, Scalar(f, Rational(1, 2)));
  l4.add_term(BasisMonomial{{-3, -1}, 0}, Scalar::one(f));
  r.add("L_{-4} Omega = 1/2 J_{-2}^2 + J_{-3} J_{-1}", virasoro_apply(-4, Vector::vacuum(f)) == l4);

  r.add("L_4 J_{-3} J_{-1} Omega = 3 Omega",
        virasoro_apply(4, Vector::monomial(f, BasisMonomial{{-3, -1}, 0})) == Vector::vacuum(f) * Rational(3));
  return r;
}

Report check_lattice_products(int lattice_n, int m) {
  const Field& f = Field::get(4, lattice_n);
  Report r;
  r.check = "mode-prop";
  r.params = {{"N", std::to_string(lattice_n)}, {"m", std::to_string(m)}};
  const int g2 = 2 * lattice_n * m * m;
  const Scalar g = Scalar::sqrt_2n(f) * Rational(m);
  ModeCache cache(f);
  for (int sign : {1, -1}) {
    const Vector res = cache.mode(states::exponential(f, sign * m), g2 - 2, states::exponential(f, -sign * m));
    const Vector expect = states::current(f) * (g * Rational(sign));
    r.add(std::string("(e^{") + (sign > 0 ? "+" : "-") + "g})_(g^2-2) e^{" + (sign > 0 ? "-" : "+") + "g} = " +
              (sign > 0 ? "+" : "-") + "g J_{-1} Omega",
          res == expect, res.to_string());
  }
  const Vector vg = states::v_g(f, m);
  for (const Scalar& b : {Scalar::one(f), Scalar::imaginary_unit(f)}) {
    const Vector egb = states::e_g_b(f, m, b);
    const Vector res = cache.mode(egb, g2 - 5, egb);
    r.add("(e^g_b)_(g^2-5) e^g_b = b v_g, b = " + b.to_string(), res == vg * b, res.to_string());
  }
  return r;
}

Report check_linear_combination(int lattice_n, int m) {
  const Field& f = Field::get(4, lattice_n);
  Report r;
  r.check = "linear-combination";
  r.params = {{"N", std::to_string(lattice_n)}, {"g^2", std::to_string(2 * lattice_n * m * m)}};
  const Vector u = states::u4(f);
  const std::vector<Vector> span = {virasoro_apply(-2, states::nu(f)), virasoro_apply(-4, Vector::vacuum(f)), states::v_g(f, m)};
  const auto x = express_in_span(u, span);
  if (!x) {
    r.add("u in span{L_{-2} nu, L_{-4} Omega, v_g}", false, "inconsistent system");
    return r;
  }
  Vector residual = u;
  std::string coeffs;
  for (size_t i = 0; i < span.size(); ++i) {
    residual.add_scaled(span[i], -(*x)[i]);
    coeffs += (i ? ", " : "") + (*x)[i].to_string();
  }
  r.add("u in span{L_{-2} nu, L_{-4} Omega, v_g}", residual.is_zero(), "coefficients " + coeffs);
  return r;
}

Report check_quasi_primary_weight2(int lattice_n) {
  const Field& f = Field::get(4, lattice_n);
  Report r;
  r.check = "quasi-primary";
  r.params = {{"N", std::to_string(lattice_n)}};
  const auto qp = quasi_primary_basis(f, 2);
  const long expected = lattice_n == 2 ? 3 : 1;
  r.add_weight(2, static_cast<long>(qp.size()), expected);
  EchelonBasis got(f), want(f);
  for (const auto& v : qp) got.insert(v);
  want.insert(states::nu(f));
  if (lattice_n == 2) {
    want.insert(states::exponential(f, 1));
    want.insert(states::exponential(f, -1));
  }
  bool same = got.rank() == want.rank();
  for (const auto& v : want.basis()) same = same && got.contains(v);
  r.add(lattice_n == 2 ? "ker L_1 = span{nu, e^{2J}, e^{-2J}}" : "ker L_1 = span{nu}", same);
  return r;
}

Report check_fixed_points(int lattice_n, int k, int cutoff) {
  const Field& f = Field::get(std::lcm(4, k), lattice_n);
  Report r;
  r.check = "fixed-points";
  r.params = {{"N", std::to_string(lattice_n)}, {"group", "Z" + std::to_string(k)}, {"cutoff", std::to_string(cutoff)}};
  const auto fixed = fixed_point_subspace(GroupSpec{GroupSpec::Kind::Cyclic, k}, f, cutoff);
  for (int w = 0; w <= cutoff; ++w)
    r.add_weight(w, fixed.dim(w), static_cast<long>(enumerate_basis(lattice_n * k * k, w).size()));
  return r;
}

Report check_plus_generators(int lattice_n, int cutoff) {
  const Field& f = Field::get(4, lattice_n);
  Report r;
  r.check = "plus-generators";
  r.params = {{"N", std::to_string(lattice_n)}, {"cutoff", std::to_string(cutoff)}};
  const auto closed = close_subalgebra({states::nu(f), states::e_g_b(f, 1, Scalar::one(f))}, f, cutoff);
  const auto plus = fixed_point_subspace(GroupSpec{GroupSpec::Kind::Dihedral, 1}, f, cutoff);
  for (int w = 0; w <= cutoff; ++w) r.add_weight(w, closed.dim(w), plus.dim(w));
  bool inside = true;
  for (int w = 0; w <= cutoff; ++w)
    for (const auto& v : closed.basis(w)) inside = inside && apply_flip(v) == v;
  r.add("closure lies in the phi-fixed space", inside);
  return r;
}

Report check_half_virasoro(int cutoff) {
  Report r;
  r.check = "half-virasoro";
  r.params = {{"cutoff", std::to_string(cutoff)}};
  struct Angle {
    long p, q;
    int conductor;
    const char* name;
  };
  const Angle angles[] = {{0, 1, 4, "omega_0"}, {1, 2, 4, "omega_pi"}, {1, 4, 4, "omega_{pi/2}"}, {1, 8, 8, "omega_{pi/4}"}};
  for (const auto& a : angles) {
    const Field& f = Field::get(a.conductor, 2);
    const Vector w = states::omega_t(f, a.p, a.q);
    const auto cert = certify_virasoro_vector(w, Rational(1, 2), cutoff);
    std::string detail;
    if (cert.counterexample)
      detail = "m=" + std::to_string(cert.counterexample->m) + " n=" + std::to_string(cert.counterexample->n) +
               " v=" + cert.counterexample->v.to_string();
    r.add(std::string(a.name) + " is a Virasoro vector with c = 1/2", cert.certified, detail);
    r.add(std::string(a.name) + " = g_t(omega_0)",
          apply_torus(a.p, a.q, states::omega_t(f, 0, 1)) == w);
  }
  const Report split = verify_w_tensor_split(cutoff);
  for (const auto& item : split.items) r.add(item.name, item.ok, item.detail);
  for (const auto& w : split.per_weight) r.add_weight(w.weight, w.lhs, w.rhs);
  return r;
}

}  // namespace voa
