#include "pfmirror/polyalg.hpp"

#include <map>
#include <type_traits>
#include <mutex>
#include <sstream>

namespace pfm {

Monomial::Monomial(const std::array<int, kNumVars>& exps) {
  int total = 0;
  for (int i = 0; i < kNumVars; ++i) {
    if (exps[i] < 0 || exps[i] > 127) throw InvalidInput("exponent out of range");
    total += exps[i];
    bits_ |= static_cast<std::uint64_t>(exps[i]) << (8 * i);
  }
  if (total > 255) throw InvalidInput("monomial degree exceeds 255");
}

Monomial Monomial::var(int i, int power) {
  std::array<int, kNumVars> e{};
  e.at(i) = power;
  return Monomial(e);
}

std::array<int, kNumVars> Monomial::exponents() const {
  std::array<int, kNumVars> e{};
  for (int i = 0; i < kNumVars; ++i) e[i] = exponent(i);
  return e;
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::array<int, kNumVars> e{};
  for (int i = 0; i < kNumVars; ++i) e[i] = std::max(exponent(i), other.exponent(i));
  return Monomial(e);
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kNumVars; ++i) {
    int e = exponent(i);
    if (e == 0) continue;
    if (!first) os << '*';
    os << 'x' << (i + 1);
    if (e > 1) os << '^' << e;
    first = false;
  }
  if (first) os << '1';
  return os.str();
}

Monomial product_of_vars(std::initializer_list<int> vars) {
  std::array<int, kNumVars> e{};
  for (int v : vars) e.at(v) += 1;
  return Monomial(e);
}

std::size_t graded_dimension(int degree) {
  if (degree < 0) return 0;
  std::size_t r = 1;
  for (int k = 1; k <= 5; ++k) r = r * static_cast<std::size_t>(degree + k) / k;
  return r;
}

namespace {

void enumerate(int var, int remaining, std::array<int, kNumVars>& e,
               std::vector<Monomial>& out) {
  if (var == kNumVars - 1) {
    e[var] = remaining;
    out.emplace_back(e);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    e[var] = k;
    enumerate(var + 1, remaining - k, e, out);
  }
}

struct DegreeTables {
  std::mutex mu;
  std::map<int, std::vector<Monomial>> by_degree;
};

DegreeTables& tables() {
  static DegreeTables t;
  return t;
}

}  // namespace

const std::vector<Monomial>& monomials_of_degree(int degree) {
  if (degree < 0 || degree > 120) throw InvalidInput("degree out of range");
  auto& t = tables();
  std::lock_guard<std::mutex> lock(t.mu);
  auto it = t.by_degree.find(degree);
  if (it != t.by_degree.end()) return it->second;
  std::vector<Monomial> out;
  std::array<int, kNumVars> e{};
  enumerate(0, degree, e, out);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return b < a; });
  return t.by_degree.emplace(degree, std::move(out)).first->second;
}

namespace {

constexpr int kMaxBinom = 300;

struct BinomialTable {
  // c[n][k] for k <= 5
  std::vector<std::array<std::size_t, 6>> c;
  BinomialTable() : c(kMaxBinom) {
    for (int n = 0; n < kMaxBinom; ++n) {
      c[n][0] = 1;
      for (int k = 1; k < 6; ++k) c[n][k] = n == 0 ? 0 : c[n - 1][k - 1] + c[n - 1][k];
    }
  }
};

const BinomialTable& binomials() {
  static const BinomialTable t;
  return t;
}

}  // namespace

std::size_t monomial_rank(const Monomial& m) {
  // Descending degrevlex lists monomials lexicographically by
  // (e6, e5, e4, e3, e2) ascending; count the predecessors level by level
  // with the hockey-stick identity.
  const auto& c = binomials().c;
  int rem = m.degree();
  std::size_t rank = 0;
  for (int var = kNumVars - 1, j = 4; var >= 1; --var, --j) {
    int e = m.exponent(var);
    rank += c[rem + j + 1][j + 1] - c[rem - e + j + 1][j + 1];
    rem -= e;
  }
  return rank;
}

template <class Scalar>
Polynomial<Scalar> Polynomial<Scalar>::from_terms(std::vector<Term<Scalar>> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term<Scalar>& a, const Term<Scalar>& b) {
    return b.mono < a.mono;
  });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && scalar_is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && scalar_is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
  return p;
}

template <class Scalar>
int Polynomial<Scalar>::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

template <class Scalar>
bool Polynomial<Scalar>::is_homogeneous() const {
  if (terms_.empty()) return true;
  // Descending degrevlex order puts the largest degree first and the
  // smallest last.
  return terms_.front().mono.degree() == terms_.back().mono.degree();
}

template <class Scalar>
Scalar Polynomial<Scalar>::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  if (terms_.empty()) return Scalar();
  return scalar_times(terms_.front().coeff, 0);
}

template <class Scalar>
Polynomial<Scalar> Polynomial<Scalar>::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

template <class Scalar>
Polynomial<Scalar> Polynomial<Scalar>::combine(const Polynomial& a, const Polynomial& b,
                                               bool subtract) {
  Polynomial r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && j->mono < i->mono)) {
      r.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || i->mono < j->mono) {
      r.terms_.push_back({j->mono, subtract ? Scalar(-j->coeff) : j->coeff});
      ++j;
    } else {
      Scalar c = subtract ? Scalar(i->coeff - j->coeff) : Scalar(i->coeff + j->coeff);
      if (!scalar_is_zero(c)) r.terms_.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return r;
}

template <class Scalar>
Polynomial<Scalar>& Polynomial<Scalar>::operator+=(const Polynomial& o) {
  *this = combine(*this, o, false);
  return *this;
}

template <class Scalar>
Polynomial<Scalar>& Polynomial<Scalar>::operator-=(const Polynomial& o) {
  *this = combine(*this, o, true);
  return *this;
}

template <class Scalar>
Polynomial<Scalar> Polynomial<Scalar>::scaled(const Scalar& c) const {
  Polynomial r;
  if (scalar_is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Scalar v = t.coeff * c;
    if (!scalar_is_zero(v)) r.terms_.push_back({t.mono, std::move(v)});
  }
  return r;
}

template <class Scalar>
Polynomial<Scalar> Polynomial<Scalar>::shifted(const Monomial& m) const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

template <class Scalar>
Polynomial<Scalar> Polynomial<Scalar>::derivative(int var) const {
  if (var < 0 || var >= kNumVars) throw InvalidInput("variable index out of range");
  std::vector<Term<Scalar>> out;
  const Monomial v = Monomial::var(var);
  for (const auto& t : terms_) {
    int e = t.mono.exponent(var);
    if (e == 0) continue;
    Scalar c = scalar_times(t.coeff, e);
    if (!scalar_is_zero(c)) out.push_back({v.quotient_of(t.mono), std::move(c)});
  }
  return from_terms(std::move(out));
}

template <class Scalar>
std::string Polynomial<Scalar>::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    os << '(' << scalar_string(terms_[i].coeff) << ")*" << terms_[i].mono.to_string();
  }
  return os.str();
}

template <class Scalar>
Polynomial<Scalar> poly_mul(const Polynomial<Scalar>& f, const Polynomial<Scalar>& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<Term<Scalar>> out;
  out.reserve(f.size() * g.size());
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) out.push_back({a.mono * b.mono, a.coeff * b.coeff});
  }
  return Polynomial<Scalar>::from_terms(std::move(out));
}

template <class Scalar>
Polynomial<Scalar> divergence(const PolyVector<Scalar>& a) {
  if (a.size() != static_cast<std::size_t>(kNumVars)) {
    throw InvalidInput("divergence needs a 6-vector, got length " + std::to_string(a.size()));
  }
  Polynomial<Scalar> r;
  for (int k = 0; k < kNumVars; ++k) r += a[k].derivative(k);
  return r;
}

template <class Scalar>
int vector_degree(const PolyVector<Scalar>& v) {
  int d = -1;
  for (const auto& p : v) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) throw InvalidInput("inhomogeneous component");
    int pd = p.degree();
    if (d >= 0 && pd != d) throw InvalidInput("component degrees differ");
    d = pd;
  }
  return d;
}

template <class Scalar>
CubicPair<Scalar> build_family(const Scalar& lambda) {
  using P = Polynomial<Scalar>;
  CubicPair<Scalar> fam;
  fam.lambda = lambda;
  auto unit = [&](std::int64_t k) -> Scalar {
    if constexpr (std::is_same_v<Scalar, FieldElement>) {
      return FieldElement::from_int(k, lambda.modulus());
    } else {
      return BigRational(static_cast<long>(k));
    }
  };
  const Scalar minus3lam = unit(-3) * lambda;
  fam.q1 = P::term(Monomial::var(0, 3), unit(1)) + P::term(Monomial::var(1, 3), unit(1)) +
           P::term(Monomial::var(2, 3), unit(1)) + P::term(product_of_vars({3, 4, 5}), minus3lam);
  fam.q2 = P::term(Monomial::var(3, 3), unit(1)) + P::term(Monomial::var(4, 3), unit(1)) +
           P::term(Monomial::var(5, 3), unit(1)) + P::term(product_of_vars({0, 1, 2}), minus3lam);
  for (int k = 0; k < kNumVars; ++k) {
    fam.j1.push_back(fam.q1.derivative(k));
    fam.j2.push_back(fam.q2.derivative(k));
  }
  return fam;
}

FpPoly reduce_mod(const QPoly& f, std::uint64_t p) {
  std::vector<Term<FieldElement>> out;
  for (const auto& t : f.terms()) {
    out.push_back({t.mono, FieldElement::from_rational(t.coeff, p)});
  }
  return FpPoly::from_terms(std::move(out));
}

template class Polynomial<FieldElement>;
template class Polynomial<BigRational>;
template FpPoly poly_mul(const FpPoly&, const FpPoly&);
template QPoly poly_mul(const QPoly&, const QPoly&);
template FpPoly divergence(const FpVector&);
template QPoly divergence(const QVector&);
template int vector_degree(const FpVector&);
template int vector_degree(const QVector&);
template CubicPair<FieldElement> build_family(const FieldElement&);
template CubicPair<BigRational> build_family(const BigRational&);

}  // namespace pfm
