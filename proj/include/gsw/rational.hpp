#ifndef GSW_RATIONAL_HPP
#define GSW_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "gsw/errors.hpp"

namespace gsw {

/* Exact rational, canonicalized. Ranks, deficiencies, index factors and
 * budgets all live here; grades get the stronger type below. */
using Rat = mpq_class;

/* Parse "num/den" or a plain integer. */
Rat rat_from_string(const std::string& s);

/* Always "num/den", denominator explicit ("3" renders as "3/1"). */
std::string rat_str(const Rat& r);

Rat rat_pow(const Rat& base, long exp);

/* An element of the weight semigroup: an exact rational in (0,1].
 * Closed under multiplication; 1 is the grade of the unit monomial. */
class Grade {
 public:
  Grade() : v_(1) {}
  explicit Grade(Rat v) : v_(std::move(v)) {
    if (v_ <= 0 || v_ > 1) throw input_error("grade must lie in (0,1]");
  }

  const Rat& rat() const { return v_; }
  bool is_one() const { return v_ == 1; }

  Grade operator*(const Grade& o) const { return Grade(v_ * o.v_); }
  Grade pow(unsigned long e) const;

  auto operator<=>(const Grade& o) const { return cmp(v_, o.v_) <=> 0; }
  bool operator==(const Grade& o) const { return v_ == o.v_; }

  std::string str() const { return rat_str(v_); }

 private:
  Rat v_;
};

/* Comparator making std::map iterate grades from the highest down, the
 * natural processing order for everything graded in this codebase. */
struct GradeDesc {
  bool operator()(const Grade& a, const Grade& b) const { return a > b; }
};

}  // namespace gsw

#endif
