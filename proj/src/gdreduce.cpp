#include "pfmirror/gdreduce.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace pfm {

namespace {

FieldElement fe(std::int64_t v, std::uint64_t p) { return FieldElement::from_int(v, p); }

Monomial power(const Monomial& m, int e) { return Monomial::from_bits(m.bits() * e); }

void check_order(int n) {
  if (n < 2) throw InvalidInput("pole order must be at least 2, got " + std::to_string(n));
}

std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

PolePresentation omega_generic(int n, const FieldElement& lambda, bool chain) {
  if (n < 2 || n > 6) throw InvalidInput("omega_n is defined here for 2 <= n <= 6");
  const std::uint64_t p = lambda.modulus();
  FieldElement c = fe(n % 2 == 0 ? factorial(n - 2) : -factorial(n - 2), p) *
                   lambda.pow(static_cast<std::uint64_t>(n));
  if (chain) c = c / fe(std::int64_t{1} << (n - 2), p);
  const Monomial v = product_of_vars({0, 1, 2});
  const Monomial u = product_of_vars({3, 4, 5});
  PolePresentation out;
  out.pole_order = n;
  out.lambda = lambda;
  for (int i = 1; i <= n - 1; ++i) {
    Monomial m = chain ? power(u, i - 1) * power(v, n - i - 1)
                       : power(v, i - 1) * power(u, n - i - 1);
    out.numerators.push_back(FpPoly::term(m, c));
  }
  return out;
}

}  // namespace

PolePresentation PolePresentation::from_all_components(int n, const FpVector& all,
                                                       std::optional<FieldElement> lambda) {
  check_order(n);
  if (all.size() != static_cast<std::size_t>(n + 1)) {
    throw InvalidInput("expected " + std::to_string(n + 1) + " numerators");
  }
  PolePresentation out;
  out.pole_order = n;
  out.numerators.assign(all.begin() + 1, all.end() - 1);
  out.lambda = lambda;
  return out;
}

PolePresentation PolePresentation::raised(const CubicPair<FieldElement>& fam) const {
  PolePresentation out = *this;
  out.pole_order += 1;
  for (auto& num : out.numerators) num = num * fam.q2;
  out.numerators.emplace_back();
  return out;
}

PolePresentation PolePresentation::scaled(const FieldElement& c) const {
  PolePresentation out = *this;
  for (auto& num : out.numerators) num = num.scaled(c);
  return out;
}

PolePresentation PolePresentation::operator+(const PolePresentation& o) const {
  if (pole_order != o.pole_order) throw InvalidInput("pole orders differ");
  PolePresentation out = *this;
  for (std::size_t k = 0; k < numerators.size(); ++k) out.numerators[k] += o.numerators[k];
  if (!out.lambda) out.lambda = o.lambda;
  return out;
}

bool StandardForm::is_zero() const {
  return std::all_of(components.begin(), components.end(),
                     [](const auto& kv) { return vector_is_zero(kv.second); });
}

StandardForm StandardForm::scaled(const FieldElement& c) const {
  StandardForm out = *this;
  for (auto& [k, v] : out.components) {
    for (auto& poly : v) poly = poly.scaled(c);
  }
  return out;
}

StandardForm StandardForm::operator+(const StandardForm& o) const {
  StandardForm out = *this;
  for (const auto& [k, v] : o.components) {
    auto it = out.components.find(k);
    if (it == out.components.end()) {
      out.components.emplace(k, v);
      continue;
    }
    for (std::size_t r = 0; r < v.size(); ++r) it->second[r] += v[r];
  }
  return out;
}

bool operator==(const StandardForm& a, const StandardForm& b) {
  return a.coordinates() == b.coordinates();
}

std::map<std::tuple<int, std::size_t, std::uint64_t>, std::uint64_t> StandardForm::coordinates()
    const {
  std::map<std::tuple<int, std::size_t, std::uint64_t>, std::uint64_t> out;
  for (const auto& [k, v] : components) {
    for (std::size_t r = 0; r < v.size(); ++r) {
      for (const auto& t : v[r].terms()) out[{k, r, t.mono.bits()}] = t.coeff.value();
    }
  }
  return out;
}

std::vector<FpVector> build_kn(int n, const FieldElement& lambda) {
  check_order(n);
  const std::uint64_t p = lambda.modulus();
  const auto fam = build_family(lambda);
  const std::size_t rows = static_cast<std::size_t>(n - 1);
  std::vector<FpVector> cols;
  for (int c = 1; c <= n - 2; ++c) {
    for (int k = 0; k < kNumVars; ++k) {
      FpVector v(rows);
      v[c - 1] = fam.j1[k].scaled(fe(n - 1 - c, p));
      v[c] = fam.j2[k].scaled(fe(c, p));
      cols.push_back(std::move(v));
    }
  }
  for (const FpPoly* q : {&fam.q1, &fam.q2}) {
    for (std::size_t r = 0; r < rows; ++r) {
      FpVector v(rows);
      v[r] = *q;
      cols.push_back(std::move(v));
    }
  }
  return cols;
}

PolePresentation omega_form(int n, const FieldElement& lambda) {
  return omega_generic(n, lambda, false);
}

PolePresentation omega_chain_form(int n, const FieldElement& lambda) {
  return omega_generic(n, lambda, true);
}

ReductionBases prepare_bases(int max_order, const FieldElement& lambda) {
  check_order(max_order);
  ReductionBases out{lambda, build_family(lambda), {}, {}};
  for (int n = 2; n <= max_order; ++n) {
    auto cols = build_kn(n, lambda);
    // Only degree 3(n-2) normal forms are ever requested.
    out.bases.emplace(n, buchberger(cols, {3 * (n - 2)}));
    out.columns.emplace(n, std::move(cols));
  }
  return out;
}

StandardForm reduce_class(const PolePresentation& omega, const ReductionBases& bases,
                          std::vector<ReductionStage>* trace) {
  const int n = omega.pole_order;
  check_order(n);
  if (omega.numerators.size() != static_cast<std::size_t>(n - 1)) {
    throw InvalidInput("pole order " + std::to_string(n) + " needs " + std::to_string(n - 1) +
                       " numerators");
  }
  if (omega.lambda && !(*omega.lambda == bases.lambda)) {
    throw DomainMismatch("form built at lambda = " + omega.lambda->to_string() +
                         ", bases at lambda = " + bases.lambda.to_string());
  }
  if (!bases.bases.count(n)) {
    throw InvalidInput("no basis prepared for pole order " + std::to_string(n));
  }

  // Row r of K_n carries the numerator over Q1^(n-r) Q2^r, i.e. P_(n-r).
  FpVector p(n - 1);
  for (int k = 1; k <= n - 1; ++k) p[n - k - 1] = omega.numerators[k - 1];

  StandardForm out;
  for (int order = n;; --order) {
    const int deg = vector_degree(p);
    if (deg >= 0 && deg != 3 * (order - 2)) {
      throw InvalidInput("numerators at pole order " + std::to_string(order) +
                         " must have degree " + std::to_string(3 * (order - 2)));
    }
    const auto& columns = bases.columns.at(order);
    auto [m, rec] = normal_form(p, bases.bases.at(order));
    if (!certificate_holds(p, rec, columns)) {
      throw VerificationFailure("certificate_failure",
                                "p != m + K A at pole order " + std::to_string(order));
    }
    out.components[order] = m;
    if (trace) trace->push_back({order, p, rec});
    if (order == 2) break;

    // Lower to pole order - 1: the B-block for row r contributes its
    // divergence, Q1 multipliers keep the row, Q2 multipliers move up one
    // row; the pure-power leftovers are exact and dropped.
    const auto& a = rec.quotients;
    const std::size_t q1_base = 6 * static_cast<std::size_t>(order - 2);
    const std::size_t q2_base = q1_base + static_cast<std::size_t>(order - 1);
    FpVector next(order - 2);
    for (int r = 1; r <= order - 2; ++r) {
      FpVector block(a.begin() + 6 * (r - 1), a.begin() + 6 * r);
      next[r - 1] = divergence(block) + a[q1_base + r - 1] + a[q2_base + r];
    }
    p = std::move(next);
  }
  return out;
}

PointRelation solve_relation_at_point(std::uint64_t p, const FieldElement& lambda,
                                      OmegaKind kind) {
  if (!is_admissible_prime(p)) throw InvalidInput(std::to_string(p) + " is not an admissible prime");
  if (lambda.modulus() != p) throw DomainMismatch("lambda is not an element of F_" + std::to_string(p));
  if (lambda.is_zero()) throw BadSpecialization("lambda = 0");
  const FieldElement z = lambda.pow(6).inverse();
  if (z == fe(1, p)) throw BadSpecialization("z0 = lambda^-6 = 1");

  const auto bases = prepare_bases(6, lambda);
  std::vector<std::map<std::tuple<int, std::size_t, std::uint64_t>, std::uint64_t>> coords;
  for (int n = 2; n <= 6; ++n) {
    auto form = kind == OmegaKind::Chain ? omega_chain_form(n, lambda) : omega_form(n, lambda);
    coords.push_back(reduce_class(form, bases).coordinates());
  }

  // Augmented system: columns omega_2..omega_5 | omega_6.
  std::set<std::tuple<int, std::size_t, std::uint64_t>> keys;
  for (const auto& c : coords) {
    for (const auto& kv : c) keys.insert(kv.first);
  }
  std::vector<std::array<std::uint64_t, 5>> rows;
  for (const auto& key : keys) {
    std::array<std::uint64_t, 5> row{};
    for (int j = 0; j < 5; ++j) {
      auto it = coords[j].find(key);
      if (it != coords[j].end()) row[j] = it->second;
    }
    rows.push_back(row);
  }
  std::size_t rank = 0;
  for (int col = 0; col < 4; ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) {
      throw BadSpecialization("omega_2..omega_5 are dependent at lambda = " + lambda.to_string());
    }
    std::swap(rows[rank], rows[piv]);
    const std::uint64_t inv = modarith::inv(rows[rank][col], p);
    for (auto& x : rows[rank]) x = modarith::mul(x, inv, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const std::uint64_t f = rows[r][col];
      for (int j = 0; j < 5; ++j) {
        rows[r][j] = modarith::sub(rows[r][j], modarith::mul(f, rows[rank][j], p), p);
      }
    }
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (rows[r][4] != 0) {
      throw VerificationFailure("relation_inconsistent",
                                "omega_6 is not in the span of omega_2..omega_5 at lambda = " +
                                    lambda.to_string() + " mod " + std::to_string(p));
    }
  }
  PointRelation out{z, {}};
  for (int i = 0; i < 4; ++i) out.h[i] = FieldElement(rows[i][4], p);
  return out;
}

RelationResidues fit_relation(const std::vector<PointRelation>& samples) {
  if (samples.size() < 3) throw InvalidInput("fit_relation needs at least 3 samples");
  const std::uint64_t p = samples.front().z.modulus();
  std::set<std::uint64_t> zs;
  for (const auto& s : samples) {
    if (s.z.modulus() != p) throw DomainMismatch("samples over different primes");
    if (!zs.insert(s.z.value()).second) throw InvalidInput("repeated sample point z0");
  }
  const FieldElement one = fe(1, p);
  RelationResidues out;
  out.prime = p;
  for (int i = 0; i < 4; ++i) {
    auto y = [&](const PointRelation& s) { return s.h[i] * (s.z - one); };
    const auto& s0 = samples[0];
    const auto& s1 = samples[1];
    const FieldElement a = (y(s0) - y(s1)) / (s0.z - s1.z);
    const FieldElement b = y(s0) - a * s0.z;
    for (std::size_t k = 2; k < samples.size(); ++k) {
      if (!(y(samples[k]) == a * samples[k].z + b)) {
        throw VerificationFailure("ansatz_violation",
                                  "h_" + std::to_string(i + 2) + " is not (a z + b)/(z - 1) mod " +
                                      std::to_string(p) + " at z0 = " +
                                      samples[k].z.to_string());
      }
    }
    out.a[i] = a.value();
    out.b[i] = b.value();
  }
  return out;
}

RelationCoeffs lift_relation(const std::vector<RelationResidues>& per_prime) {
  if (per_prime.size() < 2) throw InvalidInput("lifting needs at least two primes");
  auto lift = [&](auto pick, const std::string& name) {
    ResidueSystem rs;
    for (const auto& r : per_prime) {
      rs.push_back({BigInt(std::to_string(pick(r))), BigInt(std::to_string(r.prime))});
    }
    const auto crt = crt_combine(rs);
    auto q = rational_reconstruct(crt.value, crt.modulus);
    if (!q) {
      throw ReconstructionFailure(name + " does not reconstruct modulo " + crt.modulus.get_str() +
                                  "; add primes");
    }
    BigInt d = q->get_den();
    for (unsigned long f : {2UL, 3UL}) {
      while (mpz_divisible_ui_p(d.get_mpz_t(), f)) d /= f;
    }
    if (d != 1) {
      throw VerificationFailure("unexpected_denominator",
                                name + " = " + to_string(*q) + " has a denominator prime other than 2, 3");
    }
    return *q;
  };
  RelationCoeffs out;
  for (int i = 0; i < 4; ++i) {
    out.a[i] = lift([i](const RelationResidues& r) { return r.a[i]; }, "a_" + std::to_string(i + 2));
    out.b[i] = lift([i](const RelationResidues& r) { return r.b[i]; }, "b_" + std::to_string(i + 2));
  }
  return out;
}

std::array<FieldElement, 4> evaluate_relation(const RelationCoeffs& rel, const FieldElement& z) {
  const std::uint64_t p = z.modulus();
  const FieldElement den = (z - fe(1, p)).inverse();
  std::array<FieldElement, 4> out;
  for (int i = 0; i < 4; ++i) {
    out[i] = (FieldElement::from_rational(rel.a[i], p) * z + FieldElement::from_rational(rel.b[i], p)) * den;
  }
  return out;
}

namespace {

using QSeq = std::vector<BigRational>;

void trim(QSeq& v) {
  while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
}

void normalize(PFOperator& op) {
  for (auto& c : op.coefficients) trim(c);
  while (!op.coefficients.empty() && op.coefficients.back().empty()) op.coefficients.pop_back();
}

QSeq mul_linear(const QSeq& f, const BigRational& r) {  // f * (Theta + r)
  QSeq out(f.size() + 1);
  for (std::size_t k = 0; k < f.size(); ++k) {
    out[k + 1] += f[k];
    out[k] += f[k] * r;
  }
  return out;
}

void axpy(QSeq& y, const BigRational& a, const QSeq& x) {
  if (y.size() < x.size()) y.resize(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) y[k] += a * x[k];
}

BigRational eval(const QSeq& f, const BigRational& t) {
  BigRational acc = 0;
  for (std::size_t k = f.size(); k-- > 0;) acc = acc * t + f[k];
  return acc;
}

std::string theta_poly(const QSeq& f) {
  std::string s;
  for (std::size_t k = f.size(); k-- > 0;) {
    if (sgn(f[k]) == 0) continue;
    BigRational c = f[k];
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    const bool unit = c == 1 && k > 0;
    if (!unit) s += to_string(c);
    if (k > 0) {
      if (!unit) s += "*";
      s += "theta";
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s.empty() ? "0" : s;
}

// Positive divisors by trial division; inputs here are small.
std::vector<BigInt> divisors(BigInt n) {
  if (n < 0) n = -n;
  if (n > BigInt("1000000000000")) throw InvalidInput("coefficient too large for rational roots");
  std::vector<BigInt> out;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

}  // namespace

int PFOperator::theta_degree() const {
  int d = -1;
  for (const auto& c : coefficients) d = std::max(d, static_cast<int>(c.size()) - 1);
  return d;
}

int PFOperator::z_degree() const { return static_cast<int>(coefficients.size()) - 1; }

BigRational PFOperator::coefficient(int theta_power, int z_power) const {
  if (z_power < 0 || z_power >= static_cast<int>(coefficients.size())) return 0;
  const auto& c = coefficients[z_power];
  if (theta_power < 0 || theta_power >= static_cast<int>(c.size())) return 0;
  return c[theta_power];
}

std::string PFOperator::to_string() const {
  if (coefficients.empty()) return "0";
  std::string s;
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    if (coefficients[j].empty()) continue;
    if (j == 0) {
      s += theta_poly(coefficients[j]);
      continue;
    }
    QSeq c = coefficients[j];
    const bool neg = sgn(c.back()) < 0;
    if (neg) {
      for (auto& x : c) x = -x;
    }
    if (!s.empty()) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    s += "z";
    if (j > 1) s += "^" + std::to_string(j);
    s += "*(" + theta_poly(c) + ")";
  }
  return s;
}

bool operator==(const PFOperator& a, const PFOperator& b) {
  PFOperator x = a, y = b;
  normalize(x);
  normalize(y);
  return x.coefficients == y.coefficients;
}

std::vector<BigRational> theta_product(const std::vector<BigRational>& roots) {
  QSeq f{BigRational(1)};
  for (const auto& r : roots) f = mul_linear(f, r);
  return f;
}

PFOperator assemble_pf(const RelationCoeffs& rel) {
  std::array<QSeq, 7> d;
  d[2] = {BigRational(1)};
  for (int i = 2; i < 6; ++i) {
    BigRational shift(i, 6);
    shift.canonicalize();
    d[i + 1] = mul_linear(d[i], shift);
  }
  PFOperator op;
  op.coefficients.assign(2, QSeq{});
  axpy(op.coefficients[0], -1, d[6]);
  axpy(op.coefficients[1], 1, d[6]);
  for (int i = 2; i <= 5; ++i) {
    axpy(op.coefficients[0], -rel.b[i - 2], d[i]);
    axpy(op.coefficients[1], -rel.a[i - 2], d[i]);
  }
  const BigRational lead = op.coefficients[0][4];
  for (auto& c : op.coefficients) {
    for (auto& x : c) x /= lead;
  }
  normalize(op);
  return op;
}

std::vector<BigRational> indicial_exponents(const PFOperator& op) {
  QSeq f = op.coefficients.empty() ? QSeq{} : op.coefficients[0];
  trim(f);
  if (f.size() != 5) throw InvalidInput("indicial polynomial must have degree 4");
  std::vector<BigRational> roots;
  while (sgn(f.front()) == 0) {
    roots.emplace_back(0);
    f.erase(f.begin());
  }
  // Integer coefficients for the rational root test.
  BigInt l = 1;
  for (const auto& c : f) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<BigInt> ints;
  for (const auto& c : f) ints.push_back(BigInt(c * l));
  std::vector<BigRational> cands;
  if (f.size() > 1) {
    for (const auto& num : divisors(ints.front())) {
      for (const auto& den : divisors(ints.back())) {
        BigRational r(num, den);
        r.canonicalize();
        cands.push_back(r);
        cands.push_back(-r);
      }
    }
  }
  for (const auto& r : cands) {
    while (f.size() > 1 && sgn(eval(f, r)) == 0) {
      // Synthetic division by (Theta - r).
      QSeq q(f.size() - 1);
      BigRational carry = 0;
      for (std::size_t k = f.size(); k-- > 1;) {
        carry = f[k] + carry * r;
        q[k - 1] = carry;
      }
      f = std::move(q);
      roots.push_back(r);
    }
  }
  if (f.size() > 1) throw InvalidInput("indicial polynomial does not split over Q");
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<BigRational> apply_operator(const PFOperator& op, const std::vector<BigRational>& f) {
  std::vector<BigRational> out(f.size());
  for (std::size_t m = 0; m < f.size(); ++m) {
    for (std::size_t j = 0; j < op.coefficients.size() && j <= m; ++j) {
      const std::size_t src = m - j;
      if (sgn(f[src]) == 0) continue;
      const BigRational t(static_cast<long>(src));
      out[m] += eval(op.coefficients[j], t) * f[src];
    }
  }
  return out;
}

PfDiscovery discover_relation(const std::vector<std::uint64_t>& primes_in, int lambda_count,
                              std::uint64_t seed, OmegaKind kind) {
  if (primes_in.size() < 2) throw InvalidInput("at least two primes are required");
  if (lambda_count < 4) throw InvalidInput("lambda_count must be at least 4");
  std::vector<std::uint64_t> primes = primes_in;
  std::sort(primes.begin(), primes.end());
  if (std::adjacent_find(primes.begin(), primes.end()) != primes.end()) {
    throw InvalidInput("primes must be distinct");
  }
  for (auto p : primes) {
    if (!is_admissible_prime(p)) throw InvalidInput(std::to_string(p) + " is not an admissible prime");
  }

  const int max_attempts = 20 * lambda_count + 50;
  auto draw = [](std::mt19937_64& rng, std::uint64_t p) {
    return FieldElement(2 + rng() % (p - 3), p);
  };

  PfDiscovery out;
  std::vector<RelationResidues> residues;
  for (auto p : primes) {
    std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                     static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(p >> 32)};
    std::mt19937_64 rng(sq);
    PrimeRun run{p, {}, {}};
    std::vector<PointRelation> accepted;
    std::set<std::uint64_t> seen_z;
    for (int attempt = 0; static_cast<int>(accepted.size()) < lambda_count; ++attempt) {
      if (attempt >= max_attempts) {
        throw BadSpecialization("too many rejected lambda samples mod " + std::to_string(p));
      }
      LambdaSample s{draw(rng, p), std::nullopt, ""};
      const FieldElement z = s.lambda.pow(6).inverse();
      if (!seen_z.insert(z.value()).second) {
        s.rejected = "repeated z0";
      } else {
        try {
          s.relation = solve_relation_at_point(p, s.lambda, kind);
          accepted.push_back(*s.relation);
        } catch (const BadSpecialization& e) {
          s.rejected = e.what();
        }
      }
      run.samples.push_back(std::move(s));
    }
    run.residues = fit_relation(accepted);
    residues.push_back(run.residues);
    out.runs.push_back(std::move(run));
  }
  out.relation = lift_relation(residues);

  for (auto p : vetted_primes()) {
    if (p < (std::uint64_t{1} << 30) || std::binary_search(primes.begin(), primes.end(), p)) {
      continue;
    }
    out.check_prime = p;
    break;
  }
  if (out.check_prime == 0) throw InvalidInput("no unused prime left for verification");
  {
    std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(out.check_prime)};
    std::mt19937_64 rng(sq);
    for (int attempt = 0;; ++attempt) {
      if (attempt >= max_attempts) throw BadSpecialization("no usable lambda at the check prime");
      const FieldElement lam = draw(rng, out.check_prime);
      try {
        const auto pr = solve_relation_at_point(out.check_prime, lam, kind);
        const auto expect = evaluate_relation(out.relation, pr.z);
        for (int i = 0; i < 4; ++i) {
          if (!(expect[i] == pr.h[i])) {
            throw VerificationFailure("fresh_prime_mismatch",
                                      "lifted h_" + std::to_string(i + 2) + " disagrees mod " +
                                          std::to_string(out.check_prime));
          }
        }
        out.check_lambda = lam;
        break;
      } catch (const BadSpecialization&) {
      }
    }
  }
  out.op = assemble_pf(out.relation);
  out.exponents = indicial_exponents(out.op);
  out.maximally_unipotent = std::all_of(out.exponents.begin(), out.exponents.end(),
                                        [](const BigRational& r) { return sgn(r) == 0; });
  return out;
}

}  // namespace pfm
