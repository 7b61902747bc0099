#ifndef GSW_SIEVE_HPP
#define GSW_SIEVE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "gsw/graded_dims.hpp"
#include "gsw/presentation.hpp"
#include "gsw/rational.hpp"
#include "gsw/series.hpp"
#include "gsw/word.hpp"

namespace gsw {

struct SieveResult {
  GradedDims dims;  // graded dims of the quotient algebra, unit grade included
  std::map<Grade, long long, GradeDesc> pivots_per_grade;
  long long rows_processed = 0;
};

/* Exact graded dimensions of F_p<<Q>>/I for the ideal I generated by the
 * relator images r-1.
 *
 * Every ideal component above the floor is a combination of the rows
 * m*(r-1)*m' with weight(m)*W(r)*weight(m') > floor, because multiplication
 * only lowers weight: each component of m*(r-1)*m' has weight at most that
 * product, so rows outside the enumeration cannot reach above the floor.
 * The rows are echelonized over GF(p) with pivots at the highest-grade
 * monomial (canonical order); dims per grade = monomial count - pivot
 * count. The echelon is kept fully inter-reduced, which makes it the RREF
 * of the row space — canonical, hence deterministic under any processing
 * order. */
class Sieve {
 public:
  explicit Sieve(const Presentation& pres,
                 ExecPolicy policy = ExecPolicy::parallel,
                 long long row_budget = 4000000);

  const SieveResult& result() const { return result_; }
  const Presentation& presentation() const { return pres_; }

  /* Full reduction against the echelon; a projection (idempotent). */
  TruncatedSeries reduce_series(const TruncatedSeries& s) const;
  /* reduce_series(word_to_series(w) - 1): the quotient image of w-1 above
   * the floor. Zero means w-1 lies in the ideal up to floor precision. */
  TruncatedSeries normal_form(const GroupWord& w) const;

 private:
  Presentation pres_;
  ExecPolicy policy_;

  std::vector<Monomial> col_mon_;
  std::vector<Grade> col_w_;
  std::map<Monomial, std::uint32_t, std::less<>> col_id_;

  /* Pivot rows in RREF; terms packed (col<<8)|coeff, ascending column, so
   * row[0] is the lead. Lead coefficients are 1. */
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::int32_t> pivot_of_col_;
  std::vector<std::vector<std::uint32_t>> users_;  // col -> rows touching it

  SieveResult result_;

  std::map<std::uint32_t, unsigned> nf(
      const std::map<std::uint32_t, unsigned>& row) const;
  void insert_pivot(const std::map<std::uint32_t, unsigned>& row);
};

/* Number of monomials at each grade above the floor (unit included). */
std::map<Grade, long long, GradeDesc> count_monomials_by_grade(
    const WeightSpec& spec, const Grade& floor);

inline SieveResult quotient_graded_dims(
    const Presentation& pres, ExecPolicy policy = ExecPolicy::parallel,
    long long row_budget = 4000000) {
  return Sieve(pres, policy, row_budget).result();
}

/* dims keyed by beta^k for a uniform sieve -> the degree sequence b_k.
 * input_error if any grade is not a power of beta. */
std::vector<long long> uniform_degree_dims(const GradedDims& dims,
                                           const Grade& beta);

struct GrowthReport {
  std::vector<long long> b;             // b_k by degree, starting at k = 0
  std::vector<double> roots;            // b_k^(1/k) for k >= 1
  std::vector<std::pair<int, int>> violations;  // b_{k+l} > b_k b_l (bug flag)
  double growth_root = 1.0;  // last root: a truncation estimate, not a limit
};

GrowthReport growth_estimate(const std::vector<long long>& b);

struct GsRow {
  int k;
  long long coeff;  // coefficient of t^k in H(t)(1 - n t + sum t^d_i)
  bool pass;        // k = 0: coeff == 1; k >= 1: coeff >= 0
};
struct GsTable {
  std::vector<GsRow> rows;
  bool all_pass = true;
};

GsTable gs_series_check(const std::vector<long long>& b, int n,
                        const std::vector<int>& relator_degrees);

/* Partial products of prod ((1-a^p)/(1-a))^(c_a(G)-c_a(H)) by descending
 * grade. Requires a common floor. */
std::vector<std::pair<Grade, Rat>> windex_partial(const GradedDims& dims_g,
                                                  const GradedDims& dims_h,
                                                  int p);

}  // namespace gsw

#endif
