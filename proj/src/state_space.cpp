#include "voa/state_space.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace voa {

BasisMonomial BasisMonomial::make(std::vector<int> modes, int charge) {
  for (int n : modes)
    if (n >= 0) throw DomainError("basis monomials only contain creation modes J_n with n < 0");
  std::sort(modes.begin(), modes.end());
  return BasisMonomial{std::move(modes), charge};
}

int BasisMonomial::oscillator_weight() const {
  int w = 0;
  for (int n : partition) w -= n;
  return w;
}

int BasisMonomial::multiplicity(int j) const {
  return static_cast<int>(std::count(partition.begin(), partition.end(), -j));
}

std::string BasisMonomial::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < partition.size();) {
    size_t k = i;
    while (k < partition.size() && partition[k] == partition[i]) ++k;
    os << "J(" << partition[i] << ")";
    if (k - i > 1) os << "^" << (k - i);
    i = k;
  }
  os << "|0>";
  if (charge != 0) os << "e^{" << charge << "a}";
  return os.str();
}

int weight_of(const BasisMonomial& m, int lattice_n) {
  return lattice_n * m.charge * m.charge + m.oscillator_weight();
}

Rational monomial_norm_squared(const BasisMonomial& m) {
  mpz_class norm = 1;
  const auto& p = m.partition;
  for (size_t i = 0; i < p.size();) {
    size_t k = i;
    while (k < p.size() && p[k] == p[i]) ++k;
    const unsigned long part = static_cast<unsigned long>(-p[i]);
    const unsigned long mult = k - i;
    mpz_class f, pw;
    mpz_fac_ui(f.get_mpz_t(), mult);
    mpz_ui_pow_ui(pw.get_mpz_t(), part, mult);
    norm *= f * pw;
    i = k;
  }
  return Rational(norm);
}

// ---------------------------------------------------------------------------

Vector Vector::monomial(const Field& field, BasisMonomial m) {
  return monomial(field, std::move(m), Scalar::one(field));
}

Vector Vector::monomial(const Field& field, BasisMonomial m, const Scalar& c) {
  Vector v(field);
  v.add_term(std::move(m), c);
  return v;
}

void Vector::check_field(const Vector& o) const {
  if (field_ != o.field_) {
    throw ContextError("vector context mismatch: (n=" + std::to_string(field_->conductor()) +
                       ", N=" + std::to_string(field_->lattice_n()) + ") vs (n=" +
                       std::to_string(o.field_->conductor()) + ", N=" + std::to_string(o.field_->lattice_n()) + ")");
  }
}

Scalar Vector::coefficient(const BasisMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(*field_) : it->second;
}

void Vector::add_term(const BasisMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  if (&c.field() != field_) throw ContextError("coefficient field does not match vector field");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Vector::add_term(BasisMonomial&& m, const Scalar& c) {
  if (c.is_zero()) return;
  if (&c.field() != field_) throw ContextError("coefficient field does not match vector field");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Vector::add_scaled(const Vector& v, const Scalar& c) {
  check_field(v);
  if (c.is_zero()) return;
  const bool unit = c.is_one();
  for (const auto& [m, x] : v.terms_) add_term(m, unit ? x : x * c);
}

Vector Vector::operator+(const Vector& o) const {
  Vector r(*this);
  r += o;
  return r;
}

Vector& Vector::operator+=(const Vector& o) {
  check_field(o);
  for (const auto& [m, x] : o.terms_) add_term(m, x);
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  check_field(o);
  for (const auto& [m, x] : o.terms_) add_term(m, -x);
  return *this;
}

Vector Vector::operator-(const Vector& o) const {
  Vector r(*this);
  r -= o;
  return r;
}

Vector Vector::operator-() const {
  Vector r(*field_);
  for (const auto& [m, x] : terms_) r.terms_.emplace(m, -x);
  return r;
}

Vector Vector::operator*(const Scalar& c) const {
  Vector r(*field_);
  if (c.is_zero()) return r;
  for (const auto& [m, x] : terms_) r.add_term(m, x * c);
  return r;
}

Vector Vector::operator*(const Rational& q) const {
  Vector r(*field_);
  if (q == 0) return r;
  for (const auto& [m, x] : terms_) r.terms_.emplace(m, x * q);
  return r;
}

bool Vector::operator==(const Vector& o) const {
  check_field(o);
  return terms_ == o.terms_;
}

std::map<int, Vector> Vector::weight_components() const {
  std::map<int, Vector> out;
  for (const auto& [m, x] : terms_) {
    auto it = out.try_emplace(weight_of(m, lattice_n()), *field_).first;
    it->second.terms_.emplace(m, x);
  }
  return out;
}

std::optional<int> Vector::homogeneous_weight() const {
  std::optional<int> w;
  for (const auto& [m, x] : terms_) {
    const int mw = weight_of(m, lattice_n());
    if (w && *w != mw) return std::nullopt;
    w = mw;
  }
  return w;
}

Vector Vector::lifted(int conductor) const {
  const Field& g = Field::get(conductor, lattice_n());
  Vector r(g);
  for (const auto& [m, x] : terms_) r.terms_.emplace(m, x.lifted(conductor));
  return r;
}

std::string Vector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, x] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << x.to_string() << ")" << m.to_string();
  }
  return os.str();
}

// ---------------------------------------------------------------------------

int GradedSubspace::dim(int weight) const {
  auto it = basis_by_weight.find(weight);
  return it == basis_by_weight.end() ? 0 : static_cast<int>(it->second.size());
}

std::vector<int> GradedSubspace::dims() const {
  std::vector<int> d(cutoff + 1, 0);
  for (int w = 0; w <= cutoff; ++w) d[w] = dim(w);
  return d;
}

const std::vector<Vector>& GradedSubspace::basis(int weight) const {
  static const std::vector<Vector> empty;
  auto it = basis_by_weight.find(weight);
  return it == basis_by_weight.end() ? empty : it->second;
}

// ---------------------------------------------------------------------------

Vector EchelonBasis::reduce(const Vector& v) const {
  Vector r = v;
  for (const auto& [pivot, row] : rows_) {
    auto c = r.coefficient(pivot);
    if (!c.is_zero()) r.add_scaled(row, -c);
  }
  return r;
}

bool EchelonBasis::insert(const Vector& v) {
  if (&v.field() != field_) throw ContextError("echelon basis: vector field mismatch");
  Vector r = reduce(v);
  if (r.is_zero()) return false;
  const BasisMonomial pivot = r.terms().begin()->first;
  r = r * r.terms().begin()->second.inverse();
  for (auto& [p, row] : rows_) {
    auto c = row.coefficient(pivot);
    if (!c.is_zero()) row.add_scaled(r, -c);
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

std::vector<Vector> EchelonBasis::basis() const {
  std::vector<Vector> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(row);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void build_partitions(int remaining, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    // cur is descending, so the negated parts are ascending
    std::vector<int> p(cur);
    for (auto& x : p) x = -x;
    out.push_back(std::move(p));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    build_partitions(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

const std::vector<std::vector<int>>& partitions_of(int n) {
  if (n < 0) throw DomainError("partitions of a negative integer");
  static std::mutex mu;
  static std::map<int, std::vector<std::vector<int>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // parts chosen in descending order, stored ascending as negatives
  build_partitions(n, n, cur, out);
  std::sort(out.begin(), out.end());
  return cache.emplace(n, std::move(out)).first->second;
}

long partition_count(int n) { return n < 0 ? 0 : static_cast<long>(partitions_of(n).size()); }

std::vector<BasisMonomial> enumerate_basis(int lattice_n, int weight) {
  if (lattice_n <= 0) throw DomainError("lattice parameter N must be positive");
  std::vector<BasisMonomial> out;
  if (weight < 0) return out;
  int kmax = 0;
  while (lattice_n * (kmax + 1) * (kmax + 1) <= weight) ++kmax;
  for (int k = -kmax; k <= kmax; ++k) {
    const int rest = weight - lattice_n * k * k;
    for (const auto& p : partitions_of(rest)) out.push_back(BasisMonomial{p, k});
  }
  return out;
}

std::map<int, std::vector<BasisMonomial>> enumerate_graded(int lattice_n, int cutoff) {
  std::map<int, std::vector<BasisMonomial>> out;
  for (int w = 0; w <= cutoff; ++w) out[w] = enumerate_basis(lattice_n, w);
  return out;
}

namespace {

Vector flip_impl(const Vector& v, bool antilinear) {
  Vector r(v.field());
  for (const auto& [m, x] : v.terms()) {
    BasisMonomial f{m.partition, -m.charge};
    Scalar c = antilinear ? x.conjugate() : x;
    if (m.partition.size() % 2 == 1) c = -c;
    r.add_term(std::move(f), c);
  }
  return r;
}

}  // namespace

Vector pct(const Vector& v) { return flip_impl(v, true); }

Vector apply_flip(const Vector& v) { return flip_impl(v, false); }

Vector apply_torus(long p, long q, const Vector& v) {
  const Field& f = v.field();
  // validates q | conductor
  Scalar::root_of_unity(f, p, q);
  Vector r(f);
  for (const auto& [m, x] : v.terms()) r.add_term(m, x * Scalar::root_of_unity(f, p * m.charge, q));
  return r;
}

Scalar inner_product(const Vector& u, const Vector& v) {
  if (&u.field() != &v.field()) throw ContextError("inner product of vectors from different fields");
  Scalar acc(u.field());
  const auto& a = u.terms();
  const auto& b = v.terms();
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      acc += i->second.conjugate() * j->second * monomial_norm_squared(i->first);
      ++i;
      ++j;
    }
  }
  return acc;
}

Matrix gram_matrix(const Field& field, int weight, const GradedSubspace* subspace) {
  std::vector<Vector> basis;
  if (subspace) {
    basis = subspace->basis(weight);
  } else {
    for (auto& m : enumerate_basis(field.lattice_n(), weight)) basis.push_back(Vector::monomial(field, m));
  }
  Matrix g(field, basis.size(), basis.size());
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j) g.at(i, j) = inner_product(basis[i], basis[j]);
  return g;
}

}  // namespace voa
