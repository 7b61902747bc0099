#include "gsw/calculus.hpp"

#include <algorithm>
#include <map>

#include "gsw/errors.hpp"

namespace gsw {

std::optional<Grade> group_weight(const GroupWord& w, const WeightSpec& spec,
                                  const Grade& floor, ExecPolicy policy) {
  return word_to_series(w, spec, floor, policy).minus_one().valuation();
}

std::optional<int> zassenhaus_degree(const GroupWord& w, int p, int kmax,
                                     ExecPolicy policy) {
  GroupWord r = reduce(w);
  if (r.is_identity()) return std::nullopt;  // d(1) is infinite
  if (kmax < 1) throw input_error("kmax must be positive");
  int ngens = 0;
  for (auto& [g, e] : r.letters) ngens = std::max(ngens, g + 1);
  Grade beta(Rat(1, 2));
  // iterative deepening: most words have small degree, so probe cheap
  // floors first
  for (int k = std::min(kmax, 6);; k = std::min(kmax, 2 * k)) {
    WeightSpec spec = make_uniform_spec(p, ngens, beta, k);
    auto val = group_weight(r, spec, beta.pow(k + 1), policy);
    if (val) {
      // uniform weights: grade beta^d determines the degree d
      Grade g = beta;
      for (int d = 1; d <= k; ++d, g = g * beta)
        if (g == *val) return d;
      throw std::logic_error("valuation is not a power of beta");
    }
    if (k >= kmax) return std::nullopt;
  }
}

GroupWord PCFactorization::factor_word(size_t i) const {
  const PCFactor& f = factors.at(i);
  long long e = f.coeff;
  for (int j = 0; j < f.k; ++j) e *= hall->spec().p;
  return word_pow(hall->word(f.node), e);
}

PCFactorization collect(const GroupWord& w, const WeightSpec& spec,
                        const Grade& floor, ExecPolicy policy) {
  auto hall = std::make_shared<HallSet>(spec, floor);
  PCFactorization out{hall, {}, floor};

  std::map<int, TruncatedSeries> comm_series;
  auto series_of = [&](auto&& self, int node) -> const TruncatedSeries& {
    auto it = comm_series.find(node);
    if (it != comm_series.end()) return it->second;
    const auto& n = hall->nodes()[node];
    TruncatedSeries s = n.left < 0
        ? TruncatedSeries::one_plus_gen(spec, floor, n.gen)
        : [&] {
            const TruncatedSeries& l = self(self, n.left);
            const TruncatedSeries& r = self(self, n.right);
            return l.invert_unit(policy)
                .mul(r.invert_unit(policy), policy)
                .mul(l.mul(r, policy), policy);
          }();
    return comm_series.emplace(node, std::move(s)).first->second;
  };

  TruncatedSeries residual = word_to_series(w, spec, floor, policy);
  while (true) {
    TruncatedSeries d = residual.minus_one();
    auto val = d.valuation();
    if (!val) break;
    auto coords = express_in_hall_basis(d.leading_form(), *val, *hall);
    TruncatedSeries g = TruncatedSeries::one(spec, floor);
    for (auto& [pair, coeff] : coords) {
      out.factors.push_back({pair.first, pair.second, coeff, *val});
      long long e = coeff;
      for (int j = 0; j < pair.second; ++j) e *= spec.p;
      g = g.mul(series_of(series_of, pair.first).pow(e, policy), policy);
    }
    TruncatedSeries next = g.invert_unit(policy).mul(residual, policy);
    auto next_val = next.minus_one().valuation();
    if (next_val && !(*next_val < *val))
      throw std::logic_error("collection failed to reduce the residual");
    residual = std::move(next);
  }

  // emission is already grade-descending with in-grade basis order; the
  // sort is a guard for the PCFactorization invariant
  std::stable_sort(out.factors.begin(), out.factors.end(),
                   [](const PCFactor& a, const PCFactor& b) {
                     if (!(a.grade_pk == b.grade_pk))
                       return a.grade_pk > b.grade_pk;
                     if (a.node != b.node) return a.node < b.node;
                     return a.k < b.k;
                   });
  return out;
}

Grade weight_via_factorization(const PCFactorization& f) {
  if (f.factors.empty())
    throw input_error("weight_via_factorization: empty factorization");
  Grade best = f.factors.front().grade_pk;
  for (auto& x : f.factors) best = std::max(best, x.grade_pk);
  return best;
}

}  // namespace gsw
