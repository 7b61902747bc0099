#ifndef GSW_GRADED_DIMS_HPP
#define GSW_GRADED_DIMS_HPP

#include <map>
#include <optional>
#include <string>

#include "gsw/rational.hpp"

namespace gsw {

/* A finitely supported map grade -> nonnegative dimension. Grades at or
 * below the floor are unknown, absent grades above it are zero. Iteration
 * runs from the highest grade down. */
struct GradedDims {
  std::map<Grade, long long, GradeDesc> dims;
  Grade floor;

  long long at(const Grade& g) const {
    auto it = dims.find(g);
    return it == dims.end() ? 0 : it->second;
  }
};

/* Enveloping-algebra dimensions from restricted-Lie dimensions via the
 * Dirichlet/PBW identity: sum a_g g^s = prod ((1-g^(p s))/(1-g^s))^(c_g),
 * each factor expanding to (1 + g^s + ... + g^((p-1)s))^(c_g). The unit
 * grade (dimension 1) is left implicit on both sides. */
GradedDims envelope_dims_from_lie(const GradedDims& c, int p);

/* Inverse of the above, peeling factors from the highest grade down.
 * Throws input_error if the input is not the envelope of any nonnegative c. */
GradedDims lie_dims_from_envelope(const GradedDims& a, int p);

/* CSV: "# floor=<num>/<den>" header line, then "grade_num,grade_den,dim"
 * rows sorted by descending grade. */
std::string graded_dims_csv(const GradedDims& d);
GradedDims graded_dims_from_csv(const std::string& text,
                                std::optional<Grade> floor_override);

}  // namespace gsw

#endif
