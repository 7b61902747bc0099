#ifndef GSW_CALCULUS_HPP
#define GSW_CALCULUS_HPP

#include <memory>
#include <optional>
#include <vector>

#include "gsw/hall.hpp"
#include "gsw/series.hpp"
#include "gsw/word.hpp"

namespace gsw {

/* W(w) = w(image of w - 1); nullopt = BelowFloor, meaning W(w) <= floor
 * (w may even be trivial; the kernel cannot certify triviality). */
std::optional<Grade> group_weight(const GroupWord& w, const WeightSpec& spec,
                                  const Grade& floor,
                                  ExecPolicy policy = ExecPolicy::parallel);

/* The unique d with w in D_d F \ D_{d+1} F, as the minimal total degree of
 * a nonzero monomial of (image of w) - 1 under uniform weights. nullopt =
 * AboveKmax (every monomial of degree <= Kmax vanishes). */
std::optional<int> zassenhaus_degree(const GroupWord& w, int p, int kmax,
                                     ExecPolicy policy = ExecPolicy::parallel);

struct PCFactor {
  int node;        // standard commutator, index into the HallSet
  int k;           // p-power exponent
  unsigned coeff;  // 1..p-1
  Grade grade_pk;  // grade(node)^(p^k)
};

/* Ordered power-commutator factorization: the product of node^(p^k * coeff)
 * over `factors` differs from the represented element by an element of
 * weight <= residual_floor. Factors appear in the fixed total order
 * (grade descending, ties by commutator order). */
struct PCFactorization {
  std::shared_ptr<const HallSet> hall;
  std::vector<PCFactor> factors;
  Grade residual_floor;

  GroupWord factor_word(size_t i) const;  // node^(p^k * coeff) as a word
};

/* Grade-by-grade collection: repeatedly expresses the residual's leading
 * form in the restricted Hall basis, divides the factors off, stops when
 * the residual weight drops to or below the floor. */
PCFactorization collect(const GroupWord& w, const WeightSpec& spec,
                        const Grade& floor,
                        ExecPolicy policy = ExecPolicy::parallel);

/* max over factors of grade(c)^(p^k); equals group_weight of the
 * represented word whenever that clears the residual floor. */
Grade weight_via_factorization(const PCFactorization& f);

}  // namespace gsw

#endif
