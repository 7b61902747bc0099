#ifndef GSW_PRESENTATION_HPP
#define GSW_PRESENTATION_HPP

#include <string>
#include <vector>

#include "gsw/series.hpp"
#include "gsw/word.hpp"

namespace gsw {

/* A finite weighted pro-p presentation plus the truncation floor all
 * computations on it run at. */
struct Presentation {
  std::vector<std::string> gen_names;
  WeightSpec spec;  // spec.weights aligned with gen_names
  std::vector<GroupWord> relators;
  Grade floor;

  int p() const { return spec.p; }
  int ngens() const { return spec.ngens(); }
  bool is_uniform() const;
};

/* Line-based key=value document; '#' starts a comment.
 *
 *   p = 2
 *   generators = x:1/2 y:1/2        (or: generators = x y z
 *   relators = [x,y]^2 ; x^4         plus  weights = uniform 1/2)
 *   floor = 1/4096                  (or: floor = degree 12)
 *
 * "floor = degree K" means floor = (max weight)^(K+1). Relators may be
 * omitted for a free presentation. */
Presentation parse_presentation(const std::string& text);

std::string format_presentation(const Presentation& pres);

}  // namespace gsw

#endif
