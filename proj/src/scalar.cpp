#include "voa/scalar.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

namespace voa {

namespace {

void trim(std::vector<Rational>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

std::vector<Rational> add(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

std::vector<Rational> scale(const std::vector<Rational>& a, const Rational& q) {
  if (q == 0) return {};
  std::vector<Rational> r(a);
  for (auto& c : r) c *= q;
  return r;
}

// Integer polynomial division, exact; divisor monic.
std::vector<long> divide_exact(std::vector<long> num, const std::vector<long>& den) {
  const size_t dn = den.size() - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (size_t i = num.size(); i-- > dn;) {
    const long c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

std::vector<long> cyclotomic(int n) {
  static std::map<int, std::vector<long>> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_exact(p, cyclotomic(d));
  cache[n] = p;
  return p;
}

int legendre(long a, long p) {
  long r = 1, base = a % p, e = (p - 1) / 2;
  if (base < 0) base += p;
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r == 1 ? 1 : (r == 0 ? 0 : -1);
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const Field& Field::get(int conductor, int lattice_n) {
  if (conductor <= 0 || conductor % 4 != 0)
    throw ContextError("conductor must be a positive multiple of 4, got " + std::to_string(conductor));
  if (lattice_n <= 0) throw ContextError("lattice parameter N must be positive, got " + std::to_string(lattice_n));
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<Field>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[{conductor, lattice_n}];
  if (!slot) slot.reset(new Field(conductor, lattice_n));
  return *slot;
}

Field::Field(int conductor, int lattice_n)
    : conductor_(conductor), lattice_n_(lattice_n), degree_(euler_phi(conductor)), phi_(cyclotomic(conductor)) {
  // x^degree = -(phi - x^degree)
  std::vector<Rational> top(degree_);
  for (int i = 0; i < degree_; ++i) top[i] = -phi_[i];
  for (int j = 0; j + 1 < degree_; ++j) {
    reduction_.push_back(top);
    // multiply by x and reduce
    std::vector<Rational> next(degree_);
    const Rational lead = top[degree_ - 1];
    for (int i = degree_ - 1; i > 0; --i) next[i] = top[i - 1];
    for (int i = 0; i < degree_; ++i) next[i] += lead * Rational(-phi_[i]);
    top = std::move(next);
  }
  for (auto& r : reduction_) trim(r);

  // sqrt(2N) = f * sqrt(d), d squarefree; embed sqrt(d) when every prime of d
  // has its quadratic subfield inside Q(zeta_n).
  long two_n = 2L * lattice_n;
  long f = 1, d = 1;
  for (long p = 2; p * p <= two_n; ++p) {
    while (two_n % (p * p) == 0) {
      two_n /= p * p;
      f *= p;
    }
  }
  d = two_n;
  std::vector<long> primes;
  for (long p = 2, rest = d; rest > 1; ++p) {
    if (rest % p == 0) {
      primes.push_back(p);
      rest /= p;
    }
  }
  bool embeddable = true;
  for (long p : primes) {
    if (p == 2 ? conductor % 8 != 0 : conductor % p != 0) embeddable = false;
  }
  if (embeddable) {
    std::vector<Rational> root{Rational(f)};
    for (long p : primes) {
      std::vector<Rational> sp;
      if (p == 2) {
        sp = add(zeta_power(conductor / 8), zeta_power(-conductor / 8));
      } else {
        std::vector<Rational> gauss;
        for (long a = 1; a < p; ++a)
          gauss = add(gauss, scale(zeta_power(a * (conductor / p)), Rational(legendre(a, p))));
        // Gauss sum is sqrt(p) for p = 1 mod 4 and i*sqrt(p) for p = 3 mod 4.
        sp = (p % 4 == 1) ? gauss : mul(scale(zeta_power(conductor / 4), Rational(-1)), gauss);
      }
      root = mul(root, sp);
    }
    radical_in_field_ = root;
  }
}

std::vector<Rational> Field::zeta_power(long e) const {
  long r = e % conductor_;
  if (r < 0) r += conductor_;
  if (r < degree_) {
    std::vector<Rational> v(r + 1);
    v[r] = 1;
    return v;
  }
  std::vector<Rational> v(degree_);
  v[degree_ - 1] = 1;
  for (long k = degree_; k <= r; ++k) {
    std::vector<Rational> next(degree_);
    const Rational lead = v[degree_ - 1];
    for (int i = degree_ - 1; i > 0; --i) next[i] = v[i - 1];
    for (int i = 0; i < degree_; ++i) next[i] += lead * Rational(-phi_[i]);
    v = std::move(next);
  }
  trim(v);
  return v;
}

std::vector<Rational> Field::mul(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> prod(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  }
  if (prod.size() > static_cast<size_t>(degree_)) {
    std::vector<Rational> r(prod.begin(), prod.begin() + degree_);
    for (size_t k = degree_; k < prod.size(); ++k) {
      if (prod[k] == 0) continue;
      const auto& red = reduction_[k - degree_];
      for (size_t i = 0; i < red.size(); ++i) r[i] += prod[k] * red[i];
    }
    prod = std::move(r);
  }
  trim(prod);
  return prod;
}

std::vector<Rational> Field::inv(const std::vector<Rational>& a) const {
  if (a.empty()) throw DomainError("inverse of zero");
  if (a.size() == 1) return {1 / a[0]};
  // Solve (a * c) = 1 through the multiplication matrix.
  const int d = degree_;
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
  std::vector<Rational> col = a;
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) m[i][j] = i < static_cast<int>(col.size()) ? col[i] : Rational(0);
    col = mul(col, {Rational(0), Rational(1)});
  }
  m[0][d] = 1;
  for (int c = 0; c < d; ++c) {
    int piv = c;
    while (piv < d && m[piv][c] == 0) ++piv;
    if (piv == d) throw DomainError("element is not invertible");
    std::swap(m[piv], m[c]);
    const Rational f = 1 / m[c][c];
    for (int k = c; k <= d; ++k) m[c][k] *= f;
    for (int r = 0; r < d; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational g = m[r][c];
      for (int k = c; k <= d; ++k) m[r][k] -= g * m[c][k];
    }
  }
  std::vector<Rational> out(d);
  for (int i = 0; i < d; ++i) out[i] = m[i][d];
  trim(out);
  return out;
}

std::vector<Rational> Field::conj(const std::vector<Rational>& a) const {
  std::vector<Rational> out;
  for (size_t e = 0; e < a.size(); ++e) {
    if (a[e] == 0) continue;
    out = add(out, scale(zeta_power(-static_cast<long>(e)), a[e]));
  }
  return out;
}

// ---------------------------------------------------------------------------

Scalar::Scalar(const Field& field) : field_(&field) {}

Scalar::Scalar(const Field& field, const Rational& q) : field_(&field) {
  if (q != 0) rat_.push_back(q);
}

Scalar::Scalar(const Field& field, std::vector<Rational> rat, std::vector<Rational> rad)
    : field_(&field), rat_(std::move(rat)), rad_(std::move(rad)) {
  for (auto& c : rat_) c.canonicalize();
  for (auto& c : rad_) c.canonicalize();
  auto reduce = [&field](std::vector<Rational>& v) {
    if (v.size() <= static_cast<size_t>(field.degree())) return;
    std::vector<Rational> out;
    for (size_t e = 0; e < v.size(); ++e)
      if (v[e] != 0) out = add(out, scale(field.zeta_power(static_cast<long>(e)), v[e]));
    v = std::move(out);
  };
  reduce(rat_);
  reduce(rad_);
  normalize();
}

void Scalar::normalize() {
  trim(rat_);
  trim(rad_);
  if (!rad_.empty() && field_->radical_folded()) {
    rat_ = add(rat_, field_->mul(rad_, field_->radical_in_field()));
    rad_.clear();
  }
}

Scalar Scalar::imaginary_unit(const Field& f) { return zeta(f, f.conductor() / 4); }

Scalar Scalar::zeta(const Field& f, long exponent) { return Scalar(f, f.zeta_power(exponent), {}); }

Scalar Scalar::sqrt_2n(const Field& f) { return Scalar(f, {}, {Rational(1)}); }

Scalar Scalar::root_of_unity(const Field& f, long p, long q) {
  if (q <= 0) throw DomainError("root of unity order must be positive");
  if (f.conductor() % q != 0) {
    const long l = std::lcm(std::lcm(static_cast<long>(f.conductor()), q), 4L);
    throw ContextError("root of unity of order " + std::to_string(q) + " needs conductor divisible by " +
                       std::to_string(q) + "; rebuild the context with conductor " + std::to_string(l));
  }
  return zeta(f, (f.conductor() / q) * p);
}

bool Scalar::is_one() const { return rad_.empty() && rat_.size() == 1 && rat_[0] == 1; }

std::optional<Rational> Scalar::as_rational() const {
  if (!rad_.empty() || rat_.size() > 1) return std::nullopt;
  return rat_.empty() ? Rational(0) : rat_[0];
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_) {
    throw ContextError("scalar context mismatch: (n=" + std::to_string(field_->conductor()) +
                       ", N=" + std::to_string(field_->lattice_n()) + ") vs (n=" +
                       std::to_string(o.field_->conductor()) + ", N=" + std::to_string(o.field_->lattice_n()) + ")");
  }
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  for (auto& c : r.rat_) c = -c;
  for (auto& c : r.rad_) c = -c;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar r(*field_);
  r.rat_ = add(rat_, o.rat_);
  r.rad_ = add(rad_, o.rad_);
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar r(*field_);
  if (is_zero() || o.is_zero()) return r;
  const Field& f = *field_;
  r.rat_ = f.mul(rat_, o.rat_);
  if (!rad_.empty() && !o.rad_.empty())
    r.rat_ = add(r.rat_, scale(f.mul(rad_, o.rad_), Rational(2L * f.lattice_n())));
  if (!rad_.empty() || !o.rad_.empty()) r.rad_ = add(f.mul(rat_, o.rad_), f.mul(rad_, o.rat_));
  return r;
}

Scalar Scalar::operator*(const Rational& q) const {
  Scalar r(*field_);
  r.rat_ = scale(rat_, q);
  r.rad_ = scale(rad_, q);
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero scalar");
  const Field& f = *field_;
  Scalar r(f);
  if (rad_.empty()) {
    r.rat_ = f.inv(rat_);
    return r;
  }
  // (a + b s)^-1 = (a - b s) / (a^2 - 2N b^2); the norm is nonzero because s is
  // not folded, i.e. s does not lie in Q(zeta_n).
  const auto norm = add(f.mul(rat_, rat_), scale(f.mul(rad_, rad_), Rational(-2L * f.lattice_n())));
  const auto ninv = f.inv(norm);
  r.rat_ = f.mul(rat_, ninv);
  r.rad_ = scale(f.mul(rad_, ninv), Rational(-1));
  return r;
}

Scalar Scalar::conjugate() const {
  Scalar r(*field_);
  r.rat_ = field_->conj(rat_);
  r.rad_ = field_->conj(rad_);
  return r;
}

Scalar Scalar::pow(unsigned e) const {
  Scalar result = one(*field_);
  Scalar base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Scalar Scalar::lifted(int conductor) const {
  if (conductor == field_->conductor()) return *this;
  if (conductor % field_->conductor() != 0)
    throw ContextError("cannot lift conductor " + std::to_string(field_->conductor()) + " to " +
                       std::to_string(conductor));
  const Field& g = Field::get(conductor, field_->lattice_n());
  const long step = conductor / field_->conductor();
  auto lift = [&](const std::vector<Rational>& v) {
    std::vector<Rational> out;
    for (size_t e = 0; e < v.size(); ++e)
      if (v[e] != 0) out = add(out, scale(g.zeta_power(static_cast<long>(e) * step), v[e]));
    return out;
  };
  return Scalar(g, lift(rat_), lift(rad_));
}

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  return rat_ == o.rat_ && rad_ == o.rad_;
}

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  const int n = field_->conductor();
  auto poly = [n](const std::vector<Rational>& v) {
    std::ostringstream os;
    bool first = true;
    for (size_t e = 0; e < v.size(); ++e) {
      if (v[e] == 0) continue;
      Rational c = v[e];
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      if (c < 0) c = -c;
      first = false;
      if (e == 0) {
        os << c.get_str();
        continue;
      }
      if (c != 1) os << c.get_str() << "*";
      if (n == 4) os << "i";
      else os << "z" << n << (e > 1 ? "^" + std::to_string(e) : "");
    }
    return os.str();
  };
  std::string out;
  if (!rat_.empty()) out = poly(rat_);
  if (!rad_.empty()) {
    const std::string r = "(" + poly(rad_) + ")*sqrt(" + std::to_string(2 * field_->lattice_n()) + ")";
    out = out.empty() ? r : out + " + " + r;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace voa
