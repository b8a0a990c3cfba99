#include "pfmirror/groebner.hpp"

#include <algorithm>
#include <numeric>

namespace pfm {

using gbdetail::Element;
using gbdetail::Node;
using gbdetail::SparseTerm;
using gbdetail::Step;

namespace {

// Dense coefficient vector over all (position, monomial) pairs of one degree,
// indexed so that increasing index means decreasing module order.
struct DenseSpace {
  int degree;
  std::size_t rank;
  std::size_t width;
  const std::vector<Monomial>* mons;

  DenseSpace(int d, std::size_t r)
      : degree(d), rank(r), width(graded_dimension(d)), mons(&monomials_of_degree(d)) {}

  std::size_t size() const { return rank * width; }
  std::size_t index(std::uint32_t pos, const Monomial& m) const {
    return pos * width + monomial_rank(m);
  }
  std::uint32_t pos_of(std::size_t idx) const { return static_cast<std::uint32_t>(idx / width); }
  const Monomial& mono_of(std::size_t idx) const { return (*mons)[idx % width]; }
};

struct Pair {
  int degree;
  int i;  // basis index, or column index for generators
  int j;  // -1 for generators
  Monomial lcm;
  std::uint32_t pos;
  bool dead = false;
};

}  // namespace

// Internal machinery with access to GroebnerBasis private state.
class GbEngine {
 public:
  explicit GbEngine(GroebnerBasis& gb) : gb_(gb), p_(gb.modulus_) {}

  std::vector<std::int32_t> reducer_table(const DenseSpace& sp) const {
    std::vector<std::int32_t> table(sp.size(), -1);
    for (std::size_t j = 0; j < gb_.elements_.size(); ++j) {
      const Element& e = gb_.elements_[j];
      if (e.degree > sp.degree) continue;
      const SparseTerm& lead = e.terms.front();
      for (const Monomial& t : monomials_of_degree(sp.degree - e.degree)) {
        std::size_t idx = sp.index(lead.pos, t * lead.mono);
        if (table[idx] < 0) table[idx] = static_cast<std::int32_t>(j);
      }
    }
    return table;
  }

  void add_shifted(std::vector<std::uint64_t>& dense, const DenseSpace& sp,
                   const std::vector<SparseTerm>& terms, const Monomial& shift,
                   std::uint64_t scale) const {
    for (const SparseTerm& t : terms) {
      std::size_t idx = sp.index(t.pos, shift * t.mono);
      dense[idx] = modarith::add(dense[idx], modarith::mul(t.coeff, scale, p_), p_);
    }
  }

  /// Full reduction of `dense` from index `start` on.  Each step subtracts
  /// c * t * g_r and is logged as (node_r, t, -c).
  void reduce(std::vector<std::uint64_t>& dense, const DenseSpace& sp,
              const std::vector<std::int32_t>& table, std::size_t start,
              std::vector<Step>& steps) const {
    for (std::size_t idx = start; idx < dense.size(); ++idx) {
      const std::uint64_t c = dense[idx];
      if (c == 0) continue;
      const std::int32_t r = table[idx];
      if (r < 0) continue;
      const Element& g = gb_.elements_[r];
      const Monomial t = g.terms.front().mono.quotient_of(sp.mono_of(idx));
      add_shifted(dense, sp, g.terms, t, p_ - c);
      steps.push_back({g.node, t, p_ - c});
    }
  }

  std::vector<SparseTerm> extract(const std::vector<std::uint64_t>& dense,
                                  const DenseSpace& sp) const {
    std::vector<SparseTerm> out;
    for (std::size_t idx = 0; idx < dense.size(); ++idx) {
      if (dense[idx] != 0) out.push_back({sp.pos_of(idx), sp.mono_of(idx), dense[idx]});
    }
    return out;
  }

  /// Pushes quotient seeds on derivation nodes down to the original columns.
  /// `seeds` holds (node, shift, coeff) meaning coeff * shift * node; target
  /// is the total degree of the represented vector.
  std::vector<FpPoly> backpropagate(const std::vector<Step>& seeds, int target) const {
    const auto& nodes = gb_.nodes_;
    std::vector<std::vector<std::uint64_t>> q(nodes.size());
    auto slot = [&](std::uint32_t id) -> std::vector<std::uint64_t>& {
      if (q[id].empty()) q[id].assign(graded_dimension(target - nodes[id].degree), 0);
      return q[id];
    };
    for (const Step& s : seeds) {
      auto& dst = slot(s.src);
      std::size_t idx = monomial_rank(s.shift);
      dst[idx] = modarith::add(dst[idx], s.coeff, p_);
    }
    const std::size_t ncols = gb_.columns_.size();
    for (std::size_t id = nodes.size(); id-- > ncols;) {
      if (q[id].empty()) continue;
      const int e = target - nodes[id].degree;
      const auto& mons = monomials_of_degree(e);
      std::vector<std::uint64_t> mine = std::move(q[id]);
      q[id].clear();
      for (const Step& s : nodes[id].steps) {
        auto& dst = slot(s.src);
        for (std::size_t k = 0; k < mine.size(); ++k) {
          if (mine[k] == 0) continue;
          std::size_t idx = monomial_rank(s.shift * mons[k]);
          dst[idx] = modarith::add(dst[idx], modarith::mul(mine[k], s.coeff, p_), p_);
        }
      }
    }
    std::vector<FpPoly> out(ncols);
    for (std::size_t k = 0; k < ncols; ++k) {
      if (q[k].empty()) continue;
      const auto& mons = monomials_of_degree(target - nodes[k].degree);
      std::vector<Term<FieldElement>> terms;
      for (std::size_t i = 0; i < q[k].size(); ++i) {
        if (q[k][i] != 0) terms.push_back({mons[i], FieldElement(q[k][i], p_)});
      }
      out[k] = FpPoly::from_terms(std::move(terms));
    }
    return out;
  }

  void run(const std::vector<std::vector<SparseTerm>>& cols, const std::vector<int>& col_deg,
           std::optional<int> bound) {
    std::vector<Pair> pending;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (cols[k].empty()) continue;
      pending.push_back({col_deg[k], static_cast<int>(k), -1, Monomial(), cols[k].front().pos});
    }
    std::vector<std::uint64_t> dense;
    while (true) {
      int d = -1;
      for (const Pair& pr : pending) {
        if (!pr.dead && (d < 0 || pr.degree < d)) d = pr.degree;
      }
      if (d < 0) break;
      if (bound && d > *bound) break;

      std::vector<Pair> batch;
      std::vector<Pair> rest;
      for (Pair& pr : pending) {
        if (pr.dead) continue;
        (pr.degree == d ? batch : rest).push_back(pr);
      }
      pending = std::move(rest);
      std::stable_sort(batch.begin(), batch.end(), [](const Pair& a, const Pair& b) {
        return (a.j < 0) > (b.j < 0);  // generators first
      });

      const DenseSpace sp(d, gb_.rank_);
      auto table = reducer_table(sp);
      for (const Pair& pr : batch) {
        ++gb_.stats_.pairs_considered;
        dense.assign(sp.size(), 0);
        std::vector<Step> steps;
        if (pr.j < 0) {
          add_shifted(dense, sp, cols[pr.i], Monomial(), 1);
          steps.push_back({static_cast<std::uint32_t>(pr.i), Monomial(), 1});
        } else {
          const Element& gi = gb_.elements_[pr.i];
          const Element& gj = gb_.elements_[pr.j];
          const Monomial ti = gi.terms.front().mono.quotient_of(pr.lcm);
          const Monomial tj = gj.terms.front().mono.quotient_of(pr.lcm);
          add_shifted(dense, sp, gi.terms, ti, 1);
          add_shifted(dense, sp, gj.terms, tj, p_ - 1);
          steps.push_back({gi.node, ti, 1});
          steps.push_back({gj.node, tj, p_ - 1});
          ++gb_.stats_.pairs_reduced;
        }
        reduce(dense, sp, table, 0, steps);
        auto terms = extract(dense, sp);
        if (terms.empty()) {
          ++gb_.stats_.zero_reductions;
          continue;
        }
        const std::uint64_t inv = modarith::inv(terms.front().coeff, p_);
        for (auto& t : terms) t.coeff = modarith::mul(t.coeff, inv, p_);
        for (auto& s : steps) s.coeff = modarith::mul(s.coeff, inv, p_);
        gb_.nodes_.push_back({d, std::move(steps)});
        const auto h = static_cast<std::int32_t>(gb_.elements_.size());
        gb_.elements_.push_back(
            {std::move(terms), d, static_cast<std::uint32_t>(gb_.nodes_.size() - 1)});
        table[sp.index(gb_.elements_[h].terms.front().pos, gb_.elements_[h].terms.front().mono)] = h;
        update_pairs(h, pending);
      }
    }
    interreduce();
  }

  // Gebauer-Moeller style pruning, chain criterion only: the product
  // criterion does not hold for module elements.
  void update_pairs(std::int32_t h, std::vector<Pair>& pending) {
    const SparseTerm& lh = gb_.elements_[h].terms.front();
    for (Pair& pr : pending) {
      if (pr.dead || pr.j < 0 || pr.pos != lh.pos) continue;
      if (!lh.mono.divides(pr.lcm)) continue;
      const Monomial li = gb_.elements_[pr.i].terms.front().mono;
      const Monomial lj = gb_.elements_[pr.j].terms.front().mono;
      if (li.lcm(lh.mono) == pr.lcm || lj.lcm(lh.mono) == pr.lcm) continue;
      pr.dead = true;
      ++gb_.stats_.chain_pruned;
    }
    std::vector<Pair> cands;
    for (std::int32_t g = 0; g < h; ++g) {
      const SparseTerm& lg = gb_.elements_[g].terms.front();
      if (lg.pos != lh.pos) continue;
      Monomial l = lg.mono.lcm(lh.mono);
      cands.push_back({l.degree(), g, h, l, lh.pos});
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Pair& a, const Pair& b) { return a.degree < b.degree; });
    std::vector<Pair> kept;
    for (const Pair& c : cands) {
      bool redundant = std::any_of(kept.begin(), kept.end(),
                                   [&](const Pair& k) { return k.lcm.divides(c.lcm); });
      if (redundant) {
        ++gb_.stats_.chain_pruned;
      } else {
        kept.push_back(c);
      }
    }
    pending.insert(pending.end(), kept.begin(), kept.end());
  }

  void interreduce() {
    std::vector<int> degrees;
    for (const Element& e : gb_.elements_) degrees.push_back(e.degree);
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    std::vector<std::uint64_t> dense;
    for (int d : degrees) {
      const DenseSpace sp(d, gb_.rank_);
      const auto table = reducer_table(sp);
      for (Element& e : gb_.elements_) {
        if (e.degree != d) continue;
        dense.assign(sp.size(), 0);
        add_shifted(dense, sp, e.terms, Monomial(), 1);
        std::vector<Step> steps{{e.node, Monomial(), 1}};
        const std::size_t lead_idx = sp.index(e.terms.front().pos, e.terms.front().mono);
        reduce(dense, sp, table, lead_idx + 1, steps);
        if (steps.size() == 1) continue;
        e.terms = extract(dense, sp);
        gb_.nodes_.push_back({d, std::move(steps)});
        e.node = static_cast<std::uint32_t>(gb_.nodes_.size() - 1);
      }
    }
  }

  std::pair<std::vector<SparseTerm>, std::vector<Step>> normal_form(
      const std::vector<SparseTerm>& v, int degree) const {
    const DenseSpace sp(degree, gb_.rank_);
    const auto table = reducer_table(sp);
    std::vector<std::uint64_t> dense(sp.size(), 0);
    add_shifted(dense, sp, v, Monomial(), 1);
    std::vector<Step> steps;
    reduce(dense, sp, table, 0, steps);
    // v = remainder + sum c * t * g_r, and each step logged -c.
    for (auto& s : steps) s.coeff = s.coeff == 0 ? 0 : p_ - s.coeff;
    return {extract(dense, sp), std::move(steps)};
  }

  std::size_t standard_count(int degree) const {
    const DenseSpace sp(degree, gb_.rank_);
    const auto table = reducer_table(sp);
    return static_cast<std::size_t>(std::count(table.begin(), table.end(), -1));
  }

 private:
  GroebnerBasis& gb_;
  std::uint64_t p_;
};

namespace {

std::uint64_t detect_modulus(std::span<const FpVector> vecs) {
  std::uint64_t p = 0;
  for (const auto& v : vecs) {
    for (const auto& poly : v) {
      for (const auto& t : poly.terms()) {
        if (p == 0) {
          p = t.coeff.modulus();
        } else if (t.coeff.modulus() != p) {
          throw DomainMismatch("columns mix F_" + std::to_string(p) + " and F_" +
                               std::to_string(t.coeff.modulus()));
        }
      }
    }
  }
  return p;
}

std::vector<SparseTerm> to_sparse(const FpVector& v) {
  std::vector<SparseTerm> out;
  for (std::size_t pos = 0; pos < v.size(); ++pos) {
    for (const auto& t : v[pos].terms()) {
      out.push_back({static_cast<std::uint32_t>(pos), t.mono, t.coeff.value()});
    }
  }
  // Position-major with each component already descending.
  return out;
}

FpVector to_vector(const std::vector<SparseTerm>& terms, std::size_t rank, std::uint64_t p) {
  std::vector<std::vector<Term<FieldElement>>> comps(rank);
  for (const auto& t : terms) comps[t.pos].push_back({t.mono, FieldElement(t.coeff, p)});
  FpVector out;
  for (auto& c : comps) out.push_back(FpPoly::from_terms(std::move(c)));
  return out;
}

}  // namespace

struct NormalFormAccess {
  static const std::vector<Element>& elements(const GroebnerBasis& gb) { return gb.elements_; }
};

FpVector GroebnerBasis::element(std::size_t j) const {
  return to_vector(elements_.at(j).terms, rank_, modulus_);
}

std::pair<std::size_t, Monomial> GroebnerBasis::leading(std::size_t j) const {
  const auto& t = elements_.at(j).terms.front();
  return {t.pos, t.mono};
}

std::vector<FpPoly> GroebnerBasis::expression(std::size_t j) const {
  const Element& e = elements_.at(j);
  GbEngine eng(const_cast<GroebnerBasis&>(*this));
  return eng.backpropagate({{e.node, Monomial(), 1}}, e.degree);
}

GroebnerBasis buchberger(std::span<const FpVector> columns, BuchbergerOptions opts) {
  GroebnerBasis gb;
  gb.modulus_ = detect_modulus(columns);
  gb.bound_ = opts.max_degree;
  gb.columns_.assign(columns.begin(), columns.end());
  if (!columns.empty()) gb.rank_ = columns.front().size();
  std::vector<std::vector<SparseTerm>> cols;
  std::vector<int> col_deg;
  for (const auto& c : columns) {
    if (c.size() != gb.rank_) throw InvalidInput("columns have different lengths");
    col_deg.push_back(vector_degree(c));
    cols.push_back(to_sparse(c));
    gb.nodes_.push_back({std::max(col_deg.back(), 0), {}});
  }
  GbEngine(gb).run(cols, col_deg, opts.max_degree);
  return gb;
}

std::pair<FpVector, DivisionRecord> normal_form(const FpVector& v, const GroebnerBasis& gb) {
  if (v.size() != gb.rank()) throw InvalidInput("vector length does not match module rank");
  const std::uint64_t vp = detect_modulus(std::span<const FpVector>(&v, 1));
  if (vp != 0 && gb.modulus() != 0 && vp != gb.modulus()) {
    throw DomainMismatch("vector over F_" + std::to_string(vp) + ", basis over F_" +
                         std::to_string(gb.modulus()));
  }
  DivisionRecord rec;
  rec.quotients.resize(gb.columns().size());
  const int d = vector_degree(v);
  if (d < 0) {
    rec.remainder = v;
    return {v, rec};
  }
  if (gb.degree_bound() && d > *gb.degree_bound()) {
    throw InvalidInput("normal form requested in degree " + std::to_string(d) +
                       " above basis bound " + std::to_string(*gb.degree_bound()));
  }
  const std::uint64_t p = gb.modulus() != 0 ? gb.modulus() : vp;
  GbEngine eng(const_cast<GroebnerBasis&>(gb));
  auto [rem, steps] = eng.normal_form(to_sparse(v), d);
  rec.remainder = to_vector(rem, gb.rank(), p);
  if (!steps.empty()) rec.quotients = eng.backpropagate(steps, d);
  return {rec.remainder, rec};
}

std::size_t graded_piece_dim(const GroebnerBasis& gb, int degree) {
  if (degree < 0) throw InvalidInput("negative degree");
  if (gb.degree_bound() && degree > *gb.degree_bound()) {
    throw InvalidInput("degree above basis bound");
  }
  return GbEngine(const_cast<GroebnerBasis&>(gb)).standard_count(degree);
}

FpVector combine_columns(std::span<const FpVector> columns, std::span<const FpPoly> coeffs) {
  if (columns.size() != coeffs.size()) throw InvalidInput("coefficient count mismatch");
  FpVector out;
  if (!columns.empty()) out.resize(columns.front().size());
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    for (std::size_t r = 0; r < out.size(); ++r) {
      if (!columns[k][r].is_zero()) out[r] += coeffs[k] * columns[k][r];
    }
  }
  return out;
}

bool certificate_holds(const FpVector& input, const DivisionRecord& rec,
                       std::span<const FpVector> columns) {
  FpVector rhs = combine_columns(columns, rec.quotients);
  if (rhs.empty()) rhs.resize(input.size());
  if (rhs.size() != input.size() || rec.remainder.size() != input.size()) return false;
  for (std::size_t r = 0; r < input.size(); ++r) {
    if (!(input[r] - rec.remainder[r] - rhs[r]).is_zero()) return false;
  }
  return true;
}

}  // namespace pfm
