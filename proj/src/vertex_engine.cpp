#include "voa/vertex_engine.hpp"

#include <algorithm>

namespace voa {

namespace {

Rational binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

int floor_div2(int m) { return m >= 0 ? m / 2 : -((-m + 1) / 2); }

Scalar lattice_coefficient(const Field& f, int charge) { return Scalar::sqrt_2n(f) * Rational(charge); }

std::vector<int> merged(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Distinct parts j > 0 with multiplicities, ascending j.
std::vector<std::pair<int, int>> multiplicities(const std::vector<int>& partition) {
  std::vector<std::pair<int, int>> out;
  for (auto it = partition.rbegin(); it != partition.rend(); ++it) {
    const int j = -*it;
    if (!out.empty() && out.back().first == j) ++out.back().second;
    else out.emplace_back(j, 1);
  }
  return out;
}

int max_oscillator_weight(const Vector& v) {
  int w = 0;
  for (const auto& [m, x] : v.terms()) w = std::max(w, m.oscillator_weight());
  return w;
}

// J_m on one monomial for m != 0; returns false when the result vanishes.
bool apply_nonzero_mode(int m, BasisMonomial& mono, Rational& factor) {
  auto& p = mono.partition;
  if (m < 0) {
    p.insert(std::upper_bound(p.begin(), p.end(), m), m);
    factor = 1;
    return true;
  }
  auto range = std::equal_range(p.begin(), p.end(), -m);
  const long mult = range.second - range.first;
  if (mult == 0) return false;
  p.erase(range.first);
  factor = Rational(static_cast<long>(m) * mult);
  return true;
}

struct Term {
  int exponent;
  BasisMonomial mono;
  Scalar coeff;
};

// E_-(g J, z) on a monomial: every sub-multiset of annihilated parts, with
// J_j^r (J_{-j})^mu = j^r mu!/(mu-r)! (J_{-j})^{mu-r}; the (-g/j)^r / r! weights
// collapse to (-g)^r C(mu, r).
void eminus_terms(const BasisMonomial& mono, const Scalar& coeff, const Scalar& g, std::vector<Term>& out) {
  const auto mults = multiplicities(mono.partition);
  const Scalar minus_g = -g;
  std::vector<int> r(mults.size(), 0);
  // iterate the mixed-radix counter r_j in [0, mu_j]
  while (true) {
    int exponent = 0;
    Scalar c = coeff;
    std::vector<int> parts;
    bool zero = false;
    for (size_t i = 0; i < mults.size(); ++i) {
      const auto [j, mu] = mults[i];
      if (r[i] > 0) {
        if (g.is_zero()) {
          zero = true;
          break;
        }
        c = c * minus_g.pow(r[i]) * binomial(mu, r[i]);
        exponent -= j * r[i];
      }
      for (int t = 0; t < mu - r[i]; ++t) parts.push_back(-j);
    }
    if (!zero) {
      std::sort(parts.begin(), parts.end());
      out.push_back(Term{exponent, BasisMonomial{std::move(parts), mono.charge}, c});
    }
    size_t i = 0;
    while (i < mults.size() && r[i] == mults[i].second) r[i++] = 0;
    if (i == mults.size()) break;
    ++r[i];
  }
}

// Y(Omega (x) e^{k alpha}, z) vec = e_alpha z^{alpha_0} E_+ E_- vec, exponents <= zmax.
Series lattice_field(int k, const Vector& vec, int zmax) {
  const Field& f = vec.field();
  Series out;
  if (k == 0) {
    if (zmax >= 0 && !vec.is_zero()) out.emplace(0, vec);
    return out;
  }
  const Scalar g = lattice_coefficient(f, k);
  const int two_n = 2 * f.lattice_n();
  std::vector<std::vector<CreationWord>> eplus;
  std::vector<Term> terms;
  for (const auto& [mono, x] : vec.terms()) {
    terms.clear();
    eminus_terms(mono, x, g, terms);
    for (auto& t : terms) {
      const int e = t.exponent + two_n * k * t.mono.charge;
      if (e > zmax) continue;
      const int budget = zmax - e;
      while (static_cast<int>(eplus.size()) <= budget) eplus.push_back(eplus_coefficient(g, static_cast<int>(eplus.size())));
      const int charge = t.mono.charge + k;
      for (int d = 0; d <= budget; ++d) {
        auto it = out.try_emplace(e + d, f).first;
        for (const auto& w : eplus[d]) it->second.add_term(BasisMonomial{merged(t.mono.partition, w.modes), charge}, t.coeff * w.coeff);
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

// Y(J_{n_1}...J_{n_s} Omega (x) e^{k alpha}, z) vec as the normally ordered
// product of derivative fields d^{(orders[i])} J(z) and the lattice field.
Series apply_field(const std::vector<int>& orders, size_t idx, int k, const Vector& vec, int zmax) {
  if (vec.is_zero()) return {};
  if (idx == orders.size()) return lattice_field(k, vec, zmax);
  const Field& f = vec.field();
  const int d = orders[idx];
  Series result;
  auto accumulate = [&](int e, const Vector& w, const Rational& c) {
    auto it = result.try_emplace(e, f).first;
    it->second.add_scaled(w * c, Scalar::one(f));
  };

  // creation part on the left: sum_{t>=0} C(t+d, d) J_{-(t+d+1)} z^t
  const Series inner = apply_field(orders, idx + 1, k, vec, zmax);
  for (const auto& [e, w] : inner) {
    for (int t = 0; e + t <= zmax; ++t) {
      const Vector jw = heis_apply(-(t + d + 1), w);
      accumulate(e + t, jw, binomial(t + d, d));
    }
  }

  // annihilation part on the right: sum_{m>=0} (-1)^d C(m+d, d) J_m z^{-m-1-d}
  const int maxw = max_oscillator_weight(vec);
  for (int m = 0; m <= maxw; ++m) {
    const Vector vm = heis_apply(m, vec);
    if (vm.is_zero()) continue;
    const int shift = -m - 1 - d;
    Rational c = binomial(m + d, d);
    if (d % 2 == 1) c = -c;
    const Series sub = apply_field(orders, idx + 1, k, vm, zmax - shift);
    for (const auto& [e, w] : sub) accumulate(e + shift, w, c);
  }
  std::erase_if(result, [](const auto& kv) { return kv.second.is_zero(); });
  return result;
}

Series field_of_monomial(const BasisMonomial& a, const Vector& b, int zmax) {
  std::vector<int> orders;
  orders.reserve(a.partition.size());
  for (int n : a.partition) orders.push_back(-n - 1);
  return apply_field(orders, 0, a.charge, b, zmax);
}

}  // namespace

Vector heis_apply(int m, const Vector& v) {
  const Field& f = v.field();
  Vector out(f);
  if (m == 0) {
    for (const auto& [mono, x] : v.terms())
      if (mono.charge != 0) out.add_term(mono, x * lattice_coefficient(f, mono.charge));
    return out;
  }
  Rational factor;
  for (const auto& [mono, x] : v.terms()) {
    BasisMonomial r = mono;
    if (apply_nonzero_mode(m, r, factor)) out.add_term(std::move(r), factor == 1 ? x : x * factor);
  }
  return out;
}

Vector virasoro_apply(int m, const Vector& v) {
  const Field& f = v.field();
  Vector out(f);
  if (m == 0) {
    for (const auto& [mono, x] : v.terms()) {
      const int w = weight_of(mono, f.lattice_n());
      if (w != 0) out.add_term(mono, x * Rational(w));
    }
    return out;
  }
  for (const auto& [mono, x] : v.terms()) {
    const Vector single = Vector::monomial(f, mono, x);
    const int w = mono.oscillator_weight();
    // unordered pairs {i, r} with i + r = m, i < r; the larger mode acts first
    for (int r = floor_div2(m) + 1; r <= w || r <= 0; ++r) {
      const int i = m - r;
      if (i >= r) continue;
      out += heis_apply(i, heis_apply(r, single));
    }
    if (m % 2 == 0) {
      const int r = m / 2;
      out += heis_apply(r, heis_apply(r, single)) * Rational(1, 2);
    }
  }
  return out;
}

std::vector<CreationWord> eplus_coefficient(const Scalar& g, int m) {
  std::vector<CreationWord> out;
  if (m < 0) return out;
  if (m == 0) {
    out.push_back({{}, Scalar::one(g.field())});
    return out;
  }
  if (g.is_zero()) return out;
  // prod_j (g/j)^{r_j} / r_j! = g^{len} / prod_j j^{r_j} r_j!
  for (const auto& p : partitions_of(m)) {
    const Rational norm = monomial_norm_squared(BasisMonomial{p, 0});
    out.push_back({p, g.pow(static_cast<unsigned>(p.size())) * Rational(1 / norm)});
  }
  return out;
}

std::vector<CreationWord> eplus_coefficient(const Field& field, int charge, int m) {
  return eplus_coefficient(lattice_coefficient(field, charge), m);
}

Series eplus_apply(int charge, const Vector& v, int zmax) {
  const Field& f = v.field();
  const Scalar g = lattice_coefficient(f, charge);
  Series out;
  for (int d = 0; d <= zmax; ++d) {
    Vector acc(f);
    for (const auto& w : eplus_coefficient(g, d))
      for (const auto& [mono, x] : v.terms()) acc.add_term(BasisMonomial{merged(mono.partition, w.modes), mono.charge}, x * w.coeff);
    if (!acc.is_zero()) out.emplace(d, std::move(acc));
  }
  return out;
}

std::vector<std::pair<int, Vector>> eminus_apply(int charge, const Vector& v, int zmin, int zmax) {
  const Field& f = v.field();
  const Scalar g = lattice_coefficient(f, charge);
  Series acc;
  std::vector<Term> terms;
  for (const auto& [mono, x] : v.terms()) {
    terms.clear();
    eminus_terms(mono, x, g, terms);
    for (auto& t : terms) {
      if (t.exponent < zmin || t.exponent > zmax) continue;
      acc.try_emplace(t.exponent, f).first->second.add_term(std::move(t.mono), t.coeff);
    }
  }
  std::vector<std::pair<int, Vector>> out;
  for (auto& [e, w] : acc)
    if (!w.is_zero()) out.emplace_back(e, std::move(w));
  return out;
}

Vector lattice_shift(int charge, const Vector& v) {
  Vector out(v.field());
  for (const auto& [mono, x] : v.terms()) out.add_term(BasisMonomial{mono.partition, mono.charge + charge}, x);
  return out;
}

Series z_alpha0_apply(int charge, const Vector& v) {
  const Field& f = v.field();
  Series out;
  for (const auto& [mono, x] : v.terms())
    out.try_emplace(2 * f.lattice_n() * charge * mono.charge, f).first->second.add_term(mono, x);
  return out;
}

// ---------------------------------------------------------------------------

const Series& ModeCache::series(const BasisMonomial& a, const BasisMonomial& b, int zmax) {
  auto key = std::make_pair(a, b);
  auto it = cache_.find(key);
  if (it != cache_.end() && it->second.zmax >= zmax) return it->second.series;
  Series s = field_of_monomial(a, Vector::monomial(*field_, b), zmax);
  if (it == cache_.end()) it = cache_.emplace(std::move(key), Entry{zmax, std::move(s)}).first;
  else it->second = Entry{zmax, std::move(s)};
  return it->second.series;
}

std::map<int, Vector> ModeCache::modes(const Vector& a, const Vector& b, int nmin, int nmax) {
  if (&a.field() != field_ || &b.field() != field_) throw ContextError("mode request: vector field does not match");
  std::map<int, Vector> out;
  if (nmin > nmax) return out;
  const int zmax = -nmin - 1;
  const int zmin = -nmax - 1;
  for (const auto& [ma, xa] : a.terms()) {
    for (const auto& [mb, xb] : b.terms()) {
      const Series& s = series(ma, mb, zmax);
      const Scalar c = xa * xb;
      for (auto it = s.lower_bound(zmin); it != s.end() && it->first <= zmax; ++it)
        out.try_emplace(-it->first - 1, *field_).first->second.add_scaled(it->second, c);
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

Vector ModeCache::mode(const Vector& a, int n, const Vector& b) {
  auto m = modes(a, b, n, n);
  return m.empty() ? Vector(*field_) : std::move(m.begin()->second);
}

Vector vertex_mode(const Vector& a, int n, const Vector& b) {
  if (&a.field() != &b.field()) throw ContextError("vertex_mode: a and b live in different fields");
  Vector out(a.field());
  for (const auto& [ma, xa] : a.terms()) {
    const Series s = field_of_monomial(ma, b, -n - 1);
    auto it = s.find(-n - 1);
    if (it != s.end()) out.add_scaled(it->second, xa);
  }
  return out;
}

std::map<int, Vector> vertex_modes(const Vector& a, const Vector& b, int nmin, int nmax) {
  if (&a.field() != &b.field()) throw ContextError("vertex_modes: a and b live in different fields");
  ModeCache cache(a.field());
  return cache.modes(a, b, nmin, nmax);
}

Vector virasoro_field_of(const Vector& omega, int m, const Vector& v) {
  if (omega.homogeneous_weight().value_or(2) != 2)
    throw DomainError("virasoro_field_of: omega must be homogeneous of weight 2");
  return vertex_mode(omega, m + 1, v);
}

Vector physics_mode(const Vector& a, int n, const Vector& b) {
  const auto w = a.homogeneous_weight();
  if (!w) throw DomainError("physics_mode: state must be nonzero and homogeneous");
  return vertex_mode(a, n + *w - 1, b);
}

Vector ModeOperator::operator()(const Vector& v) {
  Vector out(v.field());
  for (const auto& [mono, x] : v.terms()) {
    auto it = memo_.find(mono);
    if (it == memo_.end()) {
      const Vector basis = Vector::monomial(v.field(), mono);
      Vector image = cache_ ? cache_->mode(a_, n_, basis) : vertex_mode(a_, n_, basis);
      it = memo_.emplace(mono, std::move(image)).first;
    }
    out.add_scaled(it->second, x);
  }
  return out;
}

}  // namespace voa
