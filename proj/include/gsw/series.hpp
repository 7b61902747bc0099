#ifndef GSW_SERIES_HPP
#define GSW_SERIES_HPP

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsw/rational.hpp"
#include "gsw/word.hpp"

namespace gsw {

/* Which implementation of a data-parallel kernel to run. Results are
 * bit-identical either way; tests/test_parallel.cpp holds us to that. */
enum class ExecPolicy { serial, parallel };

inline constexpr int kDefaultDegreeCap = 24;

/* Prime and per-generator base weights; determines the weight of every
 * monomial multiplicatively. Base weights lie strictly in (0,1). */
struct WeightSpec {
  int p = 2;
  std::vector<Grade> weights;
  int degree_cap = kDefaultDegreeCap;

  int ngens() const { return static_cast<int>(weights.size()); }
  bool operator==(const WeightSpec&) const = default;
};

WeightSpec make_uniform_spec(int p, int ngens, const Grade& beta,
                             int degree_cap = kDefaultDegreeCap);
void validate_spec(const WeightSpec& spec);

/* A monic monomial q_{i1} q_{i2} ... (possibly empty = unit). Indices are
 * stored one generator per byte. */
struct Monomial {
  std::string idx;

  int degree() const { return static_cast<int>(idx.size()); }
  bool is_unit() const { return idx.empty(); }
  static Monomial unit() { return {}; }
  static Monomial gen(int i) { return {std::string(1, static_cast<char>(i))}; }
  Monomial operator*(const Monomial& o) const { return {idx + o.idx}; }
  bool operator==(const Monomial&) const = default;
};

/* Plain lexicographic order, used for lookup tables; the canonical
 * weight-aware order is canonical_less below. */
inline bool operator<(const Monomial& a, const Monomial& b) {
  return a.idx < b.idx;
}

Grade monomial_weight(const Monomial& m, const WeightSpec& spec);

/* Canonical monomial order: descending weight, ties by degree ascending,
 * then lexicographic by index sequence. */
bool canonical_less(const Monomial& a, const Grade& wa, const Monomial& b,
                    const Grade& wb);

struct Term {
  Monomial mon;
  Grade w;      // cached monomial weight
  unsigned c;   // residue in 1..p-1
};

/* An element of F_p<<Q>> known exactly on all monomials of weight strictly
 * above `floor`. Nothing is asserted at or below the floor. Terms are kept
 * in canonical order with nonzero coefficients only. */
class TruncatedSeries {
 public:
  TruncatedSeries(WeightSpec spec, Grade floor);  // the zero series

  static TruncatedSeries zero(const WeightSpec& spec, const Grade& floor);
  static TruncatedSeries one(const WeightSpec& spec, const Grade& floor);
  /* 1 + q_i */
  static TruncatedSeries one_plus_gen(const WeightSpec& spec,
                                      const Grade& floor, int i);

  const WeightSpec& spec() const { return spec_; }
  const Grade& floor() const { return floor_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  unsigned constant_coeff() const;  // 0 if no unit term

  TruncatedSeries add(const TruncatedSeries& g) const;
  TruncatedSeries sub(const TruncatedSeries& g) const;
  TruncatedSeries mul(const TruncatedSeries& g,
                      ExecPolicy policy = ExecPolicy::parallel) const;
  /* Geometric-series inverse; requires constant coefficient 1. */
  TruncatedSeries invert_unit(ExecPolicy policy = ExecPolicy::parallel) const;
  TruncatedSeries pow(long long e,
                      ExecPolicy policy = ExecPolicy::parallel) const;

  /* f - 1 (drops/flips the unit term). */
  TruncatedSeries minus_one() const;

  /* Max weight among stored monomials; nullopt = BelowFloor (the true
   * valuation is <= floor and unknown). */
  std::optional<Grade> valuation() const;
  /* All terms at exactly the valuation grade; requires a valuation. */
  std::vector<std::pair<Monomial, unsigned>> leading_form() const;

  /* Re-truncate to a coarser floor (drops terms at or below it). */
  TruncatedSeries with_floor(const Grade& coarser) const;

  /* "c*q_i q_j ..." terms joined by " + " in canonical order; "0" if zero. */
  std::string render() const;

  /* Terms must be canonical, weights consistent; used by kernels. */
  static TruncatedSeries from_terms(WeightSpec spec, Grade floor,
                                    std::vector<Term> terms);

 private:
  WeightSpec spec_;
  Grade floor_;
  std::vector<Term> terms_;
};

/* Image of a word under the canonical embedding x -> 1+q, extended by
 * products and unit inversion. Requires floor < every base weight. */
TruncatedSeries word_to_series(const GroupWord& w, const WeightSpec& spec,
                               const Grade& floor,
                               ExecPolicy policy = ExecPolicy::parallel);

}  // namespace gsw

#endif
