#include "gsw/weighted.hpp"

#include <algorithm>
#include <cmath>

#include "gsw/calculus.hpp"
#include "gsw/errors.hpp"

namespace gsw {

WeightedGenSet make_weighted_set(const WeightSpec& spec, const Grade& floor,
                                 const std::vector<GroupWord>& words,
                                 ExecPolicy policy) {
  WeightedGenSet x{spec, floor, {}};
  for (auto& w : words) {
    auto g = group_weight(w, spec, floor, policy);
    if (!g)
      throw computation_limit_error(
          "cannot certify entry weight above the floor");
    x.entries.push_back({reduce(w), *g});
  }
  return x;
}

Rat rank_w(const WeightedGenSet& x) {
  Rat r = 0;
  for (auto& e : x.entries) r += e.grade.rat();
  return r;
}

static Rat index_factor(const Grade& alpha, int p) {
  Rat a = alpha.rat();
  return (1 - rat_pow(a, p)) / (1 - a);
}

Rat w_index(const std::map<Grade, long long, GradeDesc>& c_diffs, int p) {
  Rat out = 1;
  for (auto& [g, d] : c_diffs) {
    if (d == 0) continue;
    out *= rat_pow(index_factor(g, p), d);
  }
  return out;
}

/* Minimal-grade entry with nonzero character value, ties by position. */
static int descent_choice(const WeightedGenSet& x, const std::vector<int>& chi) {
  const int p = x.spec.p;
  if (chi.size() != x.entries.size())
    throw input_error("character length does not match generating set size");
  int xi = -1;
  for (size_t i = 0; i < chi.size(); ++i) {
    if (chi[i] % p == 0) continue;
    if (xi < 0 || x.entries[i].grade < x.entries[xi].grade)
      xi = static_cast<int>(i);
  }
  if (xi < 0) throw input_error("zero character");
  return xi;
}

WeightedGenSet descend_subgroup(const WeightedGenSet& x,
                                const std::vector<int>& chi,
                                ExecPolicy policy) {
  const int p = x.spec.p;
  int xi = descent_choice(x, chi);

  auto mod = [&](long long v) {
    return static_cast<unsigned>(((v % p) + p) % p);
  };
  unsigned cx = mod(chi[xi]);
  unsigned cx_inv = 1;
  for (unsigned t = 1; t < static_cast<unsigned>(p); ++t)
    if (t * cx % p == 1) cx_inv = t;

  const GroupWord& xw = x.entries[xi].word;
  WeightedGenSet out{x.spec, x.floor, {}};
  for (size_t i = 0; i < x.entries.size(); ++i) {
    if (static_cast<int>(i) == xi) continue;
    GroupWord y = x.entries[i].word;
    if (mod(chi[i]) != 0) {
      // y * x^j with chi(y) + j*chi(x) = 0 mod p
      unsigned j = mod(-static_cast<long long>(mod(chi[i]) * cx_inv));
      y = concat(y, word_pow(xw, j));
      auto g = group_weight(y, x.spec, x.floor, policy);
      if (!g || !(*g == x.entries[i].grade))
        throw input_error(
            "weight assertion failure: input set is not W-optimal");
    }
    // y, [y,x], [y,x,x], ..., (p-1 brackets)
    GroupWord c = y;
    for (int k = 0; k < p; ++k) {
      auto g = group_weight(c, x.spec, x.floor, policy);
      if (!g)
        throw computation_limit_error(
            "descended generator weight fell below the floor");
      out.entries.push_back({c, *g});
      if (k + 1 < p) c = commutator(c, xw);
    }
  }
  GroupWord xp = word_pow(xw, p);
  auto g = group_weight(xp, x.spec, x.floor, policy);
  if (!g)
    throw computation_limit_error("x^p weight fell below the floor");
  out.entries.push_back({xp, *g});
  return out;
}

SchreierReport schreier_check(const WeightedGenSet& x,
                              const std::vector<std::vector<int>>& chain,
                              ExecPolicy policy) {
  SchreierReport rep;
  rep.final_set = x;
  const int p = x.spec.p;
  for (auto& chi : chain) {
    const WeightedGenSet& cur = rep.final_set;
    int xi = descent_choice(cur, chi);
    WeightedGenSet next = descend_subgroup(cur, chi, policy);
    SchreierStep st;
    st.alpha = cur.entries.at(xi).grade;
    st.factor = index_factor(st.alpha, p);
    st.rank_before = rank_w(cur);
    st.rank_after = rank_w(next);
    st.lhs = st.rank_after - 1;
    st.rhs = st.factor * (st.rank_before - 1);
    st.equal = st.lhs == st.rhs;
    rep.total_index *= st.factor;
    rep.all_equal = rep.all_equal && st.equal;
    rep.steps.push_back(std::move(st));
    rep.final_set = std::move(next);
  }
  return rep;
}

DeficiencyReport deficiency(const Presentation& pres, ExecPolicy policy) {
  DeficiencyReport rep;
  rep.weight_x = 0;
  for (auto& w : pres.spec.weights) rep.weight_x += w.rat();
  rep.weight_r = 0;
  for (auto& r : pres.relators) {
    auto g = group_weight(r, pres.spec, pres.floor, policy);
    if (!g)
      throw computation_limit_error(
          "relator weight cannot be certified above the floor: " +
          format_word(r, pres.gen_names));
    rep.relator_weights.emplace_back(r, *g);
    rep.weight_r += g->rat();
  }
  rep.def = rep.weight_x - rep.weight_r - 1;
  return rep;
}

UniformOpt optimize_uniform(int n, const std::vector<int>& relator_degrees) {
  if (n < 1) throw input_error("need at least one generator");
  for (int d : relator_degrees)
    if (d < 1) throw input_error("relator degrees must be >= 1");

  auto f = [&](double t) {
    double v = n * t - 1;
    for (int d : relator_degrees) v -= std::pow(t, d);
    return v;
  };

  UniformOpt out;
  long long degsum = 0;
  for (int d : relator_degrees) degsum += d;
  if (degsum <= n) {
    // f' = n - sum d_i t^(d_i-1) > 0 on (0,1): supremum at the boundary
    out.attained = false;
    out.t = 1.0;
    out.def = static_cast<double>(n) -
              static_cast<double>(relator_degrees.size()) - 1.0;
    out.t_exact = Rat(1);
    out.def_exact = Rat(n) - Rat(relator_degrees.size()) - 1;
    return out;
  }

  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-13) {
    double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
    if (f(m1) < f(m2))
      lo = m1;
    else
      hi = m2;
  }
  out.attained = true;
  out.t = (lo + hi) / 2;
  out.def = f(out.t);

  // small-denominator reconstruction; re-certify exactly when it hits
  auto reconstruct = [](double v) -> std::optional<Rat> {
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double x = v;
    for (int it = 0; it < 64; ++it) {
      long long a = static_cast<long long>(std::floor(x));
      long long p2 = a * p1 + p0, q2 = a * q1 + q0;
      if (q2 > 1000000) break;
      p0 = p1; q0 = q1; p1 = p2; q1 = q2;
      double frac = x - static_cast<double>(a);
      if (std::abs(static_cast<double>(p1) / q1 - v) < 1e-9)
        return Rat(static_cast<long>(p1), static_cast<long>(q1));
      if (frac < 1e-12) break;
      x = 1.0 / frac;
    }
    return std::nullopt;
  };
  if (auto tr = reconstruct(out.t)) {
    Rat def = Rat(n) * *tr - 1;
    for (int d : relator_degrees) def -= rat_pow(*tr, d);
    // accept only if the exact point is at least as good as the float one
    double defd = def.get_d();
    if (defd >= out.def - 1e-9) {
      out.t_exact = *tr;
      out.def_exact = def;
      out.t = tr->get_d();
      out.def = defd;
    }
  }
  return out;
}

WeightSpec contract(const WeightSpec& spec, const Rat& c) {
  if (c < 1) throw input_error("contraction constant must be >= 1");
  WeightSpec out = spec;
  for (auto& w : out.weights) w = Grade(w.rat() / c);
  return out;
}

/* Upper bound for an entry's weight when the series kernel reports
 * BelowFloor: both the floor and the valuation-axiom product bound hold. */
static Rat capped_weight(const std::optional<Grade>& certified,
                         const Grade& floor, const Rat& product_bound) {
  if (certified) return certified->rat();
  return std::min(floor.rat(), product_bound);
}

GolodSet golod_relator_set(const WeightedGenSet& y, int m, ExecPolicy policy) {
  if (m < 2) throw input_error("golod_relator_set needs m >= 2");
  const int p = y.spec.p;
  const size_t n = y.entries.size();
  GolodSet out;
  out.exact_weight = 0;

  Rat wy = 0;
  Rat delta = 0;
  for (auto& e : y.entries) {
    wy += e.grade.rat();
    delta = std::max(delta, e.grade.rat());
  }
  out.paper_bound = rat_pow(wy, m) + Rat(static_cast<long>(n)) * rat_pow(delta, m);

  if (n == 0) return out;

  // all |Y|^m left-normed commutators, tuples in lexicographic order
  std::vector<size_t> tuple(m, 0);
  while (true) {
    GroupWord c = y.entries[tuple[0]].word;
    Rat bound = y.entries[tuple[0]].grade.rat();
    for (int j = 1; j < m; ++j) {
      c = commutator(c, y.entries[tuple[j]].word);
      bound *= y.entries[tuple[j]].grade.rat();
    }
    out.relators.push_back(c);
    out.exact_weight +=
        capped_weight(group_weight(c, y.spec, y.floor, policy), y.floor, bound);
    int j = m - 1;
    while (j >= 0 && ++tuple[j] == n) tuple[j--] = 0;
    if (j < 0) break;
  }

  long long pm = 1;
  for (int j = 0; j < m; ++j) {
    if (pm > (1LL << 56) / p)
      throw computation_limit_error("p^m exponent too large");
    pm *= p;
  }
  for (auto& e : y.entries) {
    GroupWord r = word_pow(e.word, pm);
    out.relators.push_back(r);
    out.exact_weight += capped_weight(
        group_weight(r, y.spec, y.floor, policy), y.floor,
        rat_pow(e.grade.rat(), m));  // W(y)^(p^m) <= W(y)^m = the paper's bound
  }

  if (out.exact_weight > out.paper_bound)
    throw std::logic_error("golod_relator_set: bound violated");
  return out;
}

Rat budget_apply(const Rat& def, long long index_gu, const Rat& weight_s) {
  if (index_gu < 1) throw input_error("index must be >= 1");
  return def - Rat(static_cast<long>(index_gu)) * weight_s;
}

DescendedRelators descend_relators(const std::vector<GroupWord>& r,
                                   const GroupWord& x, const WeightSpec& spec,
                                   const Grade& floor, ExecPolicy policy) {
  const int p = spec.p;
  DescendedRelators out;
  out.certified_weight = 0;
  auto wx = group_weight(x, spec, floor, policy);
  if (!wx)
    throw computation_limit_error("weight of x not certifiable above floor");
  Rat wr = 0;
  for (auto& rel : r) {
    auto g = group_weight(rel, spec, floor, policy);
    if (!g)
      throw computation_limit_error(
          "relator weight not certifiable above floor");
    wr += g->rat();
    GroupWord c = rel;
    Rat bound = g->rat();
    for (int k = 0; k < p; ++k) {
      out.words.push_back(c);
      out.certified_weight += capped_weight(
          group_weight(c, spec, floor, policy), floor, bound);
      if (k + 1 < p) {
        c = commutator(c, x);
        bound *= wx->rat();
      }
    }
  }
  out.bound = index_factor(*wx, p) * wr;
  if (out.certified_weight > out.bound)
    throw std::logic_error("descend_relators: bound violated");
  return out;
}

GolodStageResult golod_stage(const Presentation& pres, const Rat& eps,
                             int count, ExecPolicy policy) {
  if (eps <= 0) throw input_error("epsilon must be positive");
  if (count < 0) throw input_error("count must be nonnegative");
  GolodStageResult out{pres, {}, Rat(0)};
  if (count == 0) return out;

  const int p = pres.p();
  const int n = pres.ngens();
  // length-lex enumeration of nontrivial reduced words over the alphabet
  // x1 < x1^-1 < x2 < x2^-1 < ...
  std::vector<GroupWord> words;
  std::vector<std::vector<int>> level;  // letter strings, letter = 2g or 2g+1
  for (int len = 1; static_cast<int>(words.size()) < count; ++len) {
    std::vector<std::vector<int>> next;
    if (len == 1) {
      for (int l = 0; l < 2 * n; ++l) next.push_back({l});
    } else {
      for (auto& s : level)
        for (int l = 0; l < 2 * n; ++l) {
          if ((s.back() ^ 1) == l) continue;  // cancellation
          auto t = s;
          t.push_back(l);
          next.push_back(std::move(t));
        }
    }
    if (next.empty()) break;  // n = 0
    for (auto& s : next) {
      if (static_cast<int>(words.size()) >= count) break;
      GroupWord w;
      for (int l : s)
        w = concat(w, GroupWord{{{l / 2, l % 2 ? -1LL : 1LL}}});
      words.push_back(w);
    }
    level = std::move(next);
  }

  for (size_t i = 0; i < words.size(); ++i) {
    Rat threshold = eps / rat_pow(Rat(2), static_cast<long>(i) + 1);
    long long pm = 1;
    for (int m = 0;; ++m) {
      GroupWord rel = word_pow(words[i], pm);
      auto g = group_weight(rel, pres.spec, pres.floor, policy);
      if (g && g->rat() < threshold) {
        out.pres.relators.push_back(rel);
        out.appended.push_back(rel);
        out.total_weight += g->rat();
        break;
      }
      if (!g) {
        if (Rat(pres.floor.rat()) < threshold) {
          // weight <= floor < threshold: certified small enough
          out.pres.relators.push_back(rel);
          out.appended.push_back(rel);
          out.total_weight += pres.floor.rat();
          break;
        }
        throw computation_limit_error(
            "golod_stage: required weight below the floor, cannot certify");
      }
      if (m > 62 || pm > (1LL << 56) / p)
        throw computation_limit_error("golod_stage: exponent overflow");
      pm *= p;
    }
  }
  return out;
}

}  // namespace gsw
