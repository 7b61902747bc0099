#ifndef GSW_WEIGHTED_HPP
#define GSW_WEIGHTED_HPP

#include <map>
#include <optional>
#include <vector>

#include "gsw/presentation.hpp"
#include "gsw/rational.hpp"
#include "gsw/series.hpp"
#include "gsw/word.hpp"

namespace gsw {

struct WeightedEntry {
  GroupWord word;
  Grade grade;  // certified: equals group_weight(word)
};

/* A weighted generating set inside the ambient free pro-p group of `spec`.
 * Treated as W-optimal for the subgroup it generates; entries built by
 * descend_subgroup are W-free by construction. */
struct WeightedGenSet {
  WeightSpec spec;
  Grade floor;
  std::vector<WeightedEntry> entries;
};

/* Certifies every grade via the series kernel. */
WeightedGenSet make_weighted_set(const WeightSpec& spec, const Grade& floor,
                                 const std::vector<GroupWord>& words,
                                 ExecPolicy policy = ExecPolicy::parallel);

/* Sum of entry grades. */
Rat rank_w(const WeightedGenSet& x);

/* prod over grades of ((1-a^p)/(1-a))^(c_a(G)-c_a(H)). */
Rat w_index(const std::map<Grade, long long, GradeDesc>& c_diffs, int p);

/* One index-p descent step along a nonzero character: pick x = the minimal-
 * grade entry with chi(x) != 0 (ties by position), fold the character into
 * the other entries, and emit
 *   X' = union over y of {y, [y,x], ..., [y,x,...,x (p-1)]} u {x^p},
 * all grades recomputed and certified by the series kernel. */
WeightedGenSet descend_subgroup(const WeightedGenSet& x,
                                const std::vector<int>& chi,
                                ExecPolicy policy = ExecPolicy::parallel);

struct SchreierStep {
  Grade alpha;      // grade of the chosen x
  Rat factor;       // (1-alpha^p)/(1-alpha)
  Rat rank_before, rank_after;
  Rat lhs;          // rank_after - 1
  Rat rhs;          // factor * (rank_before - 1)
  bool equal;
};

struct SchreierReport {
  std::vector<SchreierStep> steps;
  Rat total_index = 1;  // product of the step factors
  bool all_equal = true;
  WeightedGenSet final_set;
};

SchreierReport schreier_check(const WeightedGenSet& x,
                              const std::vector<std::vector<int>>& chain,
                              ExecPolicy policy = ExecPolicy::parallel);

struct DeficiencyReport {
  Rat weight_x, weight_r, def;  // def = weight_x - weight_r - 1
  std::vector<std::pair<GroupWord, Grade>> relator_weights;
};

DeficiencyReport deficiency(const Presentation& pres,
                            ExecPolicy policy = ExecPolicy::parallel);

struct UniformOpt {
  double t = 0, def = 0;
  bool attained = false;
  std::optional<Rat> t_exact, def_exact;  // small-denominator reconstruction
};

/* Maximize n*t - sum t^d_i - 1 over t in (0,1); concave, ternary search. */
UniformOpt optimize_uniform(int n, const std::vector<int>& relator_degrees);

/* Divide every base weight by c >= 1. */
WeightSpec contract(const WeightSpec& spec, const Rat& c);

struct GolodSet {
  std::vector<GroupWord> relators;
  Rat exact_weight;  // certified upper bound, see below
  Rat paper_bound;   // W(Y)^m + |Y| * delta^m
};

/* Y^(m): all |Y|^m left-normed degree-m commutators plus {y^(p^m)}.
 * Entries that fall below the floor are kept, counted at
 * min(floor, product bound) so the total stays a sound upper bound. */
GolodSet golod_relator_set(const WeightedGenSet& y, int m,
                           ExecPolicy policy = ExecPolicy::parallel);

/* def - index * weight_s: lower bound for the quotient's deficiency. */
Rat budget_apply(const Rat& def, long long index_gu, const Rat& weight_s);

struct DescendedRelators {
  std::vector<GroupWord> words;      // {r, [r,x], ..., [r,x,...,x (p-1)]}
  Rat certified_weight;              // sound upper bound for W(R')
  Rat bound;                         // ((1-W(x)^p)/(1-W(x))) * W(R)
};

DescendedRelators descend_relators(const std::vector<GroupWord>& r,
                                   const GroupWord& x, const WeightSpec& spec,
                                   const Grade& floor,
                                   ExecPolicy policy = ExecPolicy::parallel);

struct GolodStageResult {
  Presentation pres;                  // input plus the appended relators
  std::vector<GroupWord> appended;
  Rat total_weight;                   // sound upper bound, < eps
};

/* Appends, for each of the first `count` nontrivial reduced words g_i in
 * length-lex order, the relator g_i^(p^m_i) with m_i minimal such that the
 * certified weight drops below eps/2^(i+1). */
GolodStageResult golod_stage(const Presentation& pres, const Rat& eps,
                             int count,
                             ExecPolicy policy = ExecPolicy::parallel);

}  // namespace gsw

#endif
