#ifndef GSW_HALL_HPP
#define GSW_HALL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gsw/rational.hpp"
#include "gsw/series.hpp"
#include "gsw/word.hpp"

namespace gsw {

struct not_in_lie_span : input_error {
  not_in_lie_span() : input_error("component is not in the Lie span") {}
};

/* All standard commutators of grade > min_grade, in the fixed order: degree
 * ascending, then construction order (left index, right index ascending).
 * Node i with left=-1 is the generator leaf `gen`; otherwise [nodes[left],
 * nodes[right]] with left > right, and when left is itself a bracket
 * [v1,v2], right >= v2. Grades multiply over the leaves, so pruning at
 * min_grade is closed under subtrees. */
class HallSet {
 public:
  struct Node {
    int left = -1, right = -1;  // children indices, or -1 for a leaf
    int gen = -1;               // generator index when a leaf
    int degree = 1;
    Grade grade;
  };

  HallSet(WeightSpec spec, Grade min_grade);

  const WeightSpec& spec() const { return spec_; }
  const Grade& min_grade() const { return min_grade_; }
  const std::vector<Node>& nodes() const { return nodes_; }

  GroupWord word(int i) const;
  std::string bracket(int i, const std::vector<std::string>& names) const;

  /* Expansion of the commutator in the free associative algebra, coeffs
   * mod p; homogeneous of degree nodes()[i].degree. */
  std::map<Monomial, unsigned, std::less<>> lie_poly(int i) const;

  /* Restricted basis: all (node, k) with grade(node)^(p^k) > min_grade,
   * ordered by (node, k). */
  const std::vector<std::pair<int, int>>& restricted_basis() const {
    return restricted_;
  }
  /* Restricted basis elements at exactly this grade, in basis order. */
  std::vector<std::pair<int, int>> basis_at(const Grade& g) const;

  /* Associative image of c^(p^k). */
  std::map<Monomial, unsigned, std::less<>> assoc_image(int node, int k) const;

 private:
  WeightSpec spec_;
  Grade min_grade_;
  std::vector<Node> nodes_;
  std::vector<std::pair<int, int>> restricted_;
};

/* Dimensions of the free restricted Lie algebra on generators of the given
 * base weights, per grade above min_grade (= restricted Hall basis counts). */
std::map<Grade, long long, GradeDesc> restricted_hall_dims(
    const WeightSpec& spec, const Grade& min_grade);

/* Coordinates of a nonzero homogeneous component (all monomials of one
 * grade) over the associative images of the restricted Hall basis at that
 * grade. Throws not_in_lie_span if the component is outside the span. */
std::vector<std::pair<std::pair<int, int>, unsigned>> express_in_hall_basis(
    const std::vector<std::pair<Monomial, unsigned>>& component,
    const Grade& grade, const HallSet& hall);

}  // namespace gsw

#endif
