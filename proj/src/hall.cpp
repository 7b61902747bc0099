#include "gsw/hall.hpp"

#include <algorithm>

#include "gsw/errors.hpp"

namespace gsw {

HallSet::HallSet(WeightSpec spec, Grade min_grade)
    : spec_(std::move(spec)), min_grade_(std::move(min_grade)) {
  validate_spec(spec_);
  if (min_grade_.rat() <= 0) throw input_error("min_grade must be positive");

  for (int g = 0; g < spec_.ngens(); ++g)
    if (spec_.weights[g] > min_grade_)
      nodes_.push_back({-1, -1, g, 1, spec_.weights[g]});

  if (!nodes_.empty()) {
    Grade max_w = *std::max_element(spec_.weights.begin(),
                                    spec_.weights.end());
    // nodes_ stays sorted by degree; a degree-d commutator has grade at
    // most max_w^d, so the grade bar also bounds the degree.
    for (int deg = 2; max_w.pow(deg) > min_grade_; ++deg) {
      size_t before = nodes_.size();
      for (size_t u1 = 0; u1 < before; ++u1) {
        if (nodes_[u1].degree >= deg) break;
        int d2 = deg - nodes_[u1].degree;
        for (size_t u2 = 0; u2 < u1; ++u2) {
          if (nodes_[u2].degree != d2) continue;
          if (nodes_[u1].left >= 0 &&
              static_cast<int>(u2) < nodes_[u1].right)
            continue;  // need u2 >= v2 when u1 = [v1, v2]
          Grade g = nodes_[u1].grade * nodes_[u2].grade;
          if (!(g > min_grade_)) continue;
          nodes_.push_back({static_cast<int>(u1), static_cast<int>(u2), -1,
                            deg, g});
        }
      }
    }
  }

  for (size_t i = 0; i < nodes_.size(); ++i) {
    Grade gp = nodes_[i].grade;
    for (int k = 0; gp > min_grade_; ++k) {
      restricted_.emplace_back(static_cast<int>(i), k);
      gp = gp.pow(static_cast<unsigned long>(spec_.p));
    }
  }
}

GroupWord HallSet::word(int i) const {
  const Node& n = nodes_.at(i);
  if (n.left < 0) return GroupWord{{{n.gen, 1}}};
  return commutator(word(n.left), word(n.right));
}

std::string HallSet::bracket(int i,
                             const std::vector<std::string>& names) const {
  const Node& n = nodes_.at(i);
  if (n.left < 0) return names.at(n.gen);
  return "[" + bracket(n.left, names) + "," + bracket(n.right, names) + "]";
}

using Poly = std::map<Monomial, unsigned, std::less<>>;

static Poly poly_mul(const Poly& a, const Poly& b, int p) {
  Poly out;
  for (auto& [ma, ca] : a)
    for (auto& [mb, cb] : b) {
      unsigned& c = out[ma * mb];
      c = (c + ca * cb) % p;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

static Poly poly_sub(Poly a, const Poly& b, int p) {
  for (auto& [m, c] : b) {
    unsigned& x = a[m];
    x = (x + p - c) % p;
  }
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

Poly HallSet::lie_poly(int i) const {
  const Node& n = nodes_.at(i);
  if (n.left < 0) return Poly{{Monomial::gen(n.gen), 1}};
  Poly l = lie_poly(n.left), r = lie_poly(n.right);
  return poly_sub(poly_mul(l, r, spec_.p), poly_mul(r, l, spec_.p), spec_.p);
}

Poly HallSet::assoc_image(int node, int k) const {
  Poly img = lie_poly(node);
  for (int j = 0; j < k; ++j) {
    // p-th associative power, one binary powering per step
    Poly acc{{Monomial::unit(), 1}};
    Poly base = img;
    int e = spec_.p;
    while (e) {
      if (e & 1) acc = poly_mul(acc, base, spec_.p);
      e >>= 1;
      if (e) base = poly_mul(base, base, spec_.p);
    }
    img = std::move(acc);
  }
  return img;
}

std::vector<std::pair<int, int>> HallSet::basis_at(const Grade& g) const {
  std::vector<std::pair<int, int>> out;
  for (auto& [node, k] : restricted_) {
    Grade gp = nodes_[node].grade;
    for (int j = 0; j < k; ++j) gp = gp.pow(spec_.p);
    if (gp == g) out.emplace_back(node, k);
  }
  return out;
}

std::map<Grade, long long, GradeDesc> restricted_hall_dims(
    const WeightSpec& spec, const Grade& min_grade) {
  HallSet hall(spec, min_grade);
  std::map<Grade, long long, GradeDesc> dims;
  for (auto& [node, k] : hall.restricted_basis()) {
    Grade gp = hall.nodes()[node].grade;
    for (int j = 0; j < k; ++j) gp = gp.pow(spec.p);
    ++dims[gp];
  }
  return dims;
}

static unsigned inv_mod(unsigned a, int p) {
  unsigned r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::vector<std::pair<std::pair<int, int>, unsigned>> express_in_hall_basis(
    const std::vector<std::pair<Monomial, unsigned>>& component,
    const Grade& grade, const HallSet& hall) {
  if (component.empty())
    throw input_error("express_in_hall_basis: empty component");
  const int p = hall.spec().p;
  auto pairs = hall.basis_at(grade);
  std::vector<Poly> images;
  images.reserve(pairs.size());
  std::map<Monomial, int, std::less<>> row_of;
  for (auto& pr : pairs) {
    images.push_back(hall.assoc_image(pr.first, pr.second));
    for (auto& [m, c] : images.back())
      row_of.emplace(m, static_cast<int>(row_of.size()));
  }
  for (auto& [m, c] : component)
    row_of.emplace(m, static_cast<int>(row_of.size()));

  const size_t nrows = row_of.size(), ncols = pairs.size();
  std::vector<std::vector<unsigned>> a(nrows,
                                       std::vector<unsigned>(ncols + 1, 0));
  for (size_t j = 0; j < images.size(); ++j)
    for (auto& [m, c] : images[j]) a[row_of[m]][j] = c;
  for (auto& [m, c] : component) a[row_of[m]][ncols] = c;

  // Gauss-Jordan over F_p on [A | b]
  size_t rank = 0;
  std::vector<int> pivot_row(ncols, -1);
  for (size_t j = 0; j < ncols && rank < nrows; ++j) {
    size_t piv = rank;
    while (piv < nrows && a[piv][j] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(a[piv], a[rank]);
    unsigned inv = inv_mod(a[rank][j], p);
    for (auto& x : a[rank]) x = x * inv % p;
    for (size_t r = 0; r < nrows; ++r) {
      if (r == rank || a[r][j] == 0) continue;
      unsigned f = a[r][j];
      for (size_t k = 0; k <= ncols; ++k)
        a[r][k] = (a[r][k] + (p - f) * a[rank][k]) % p;
    }
    pivot_row[j] = static_cast<int>(rank);
    ++rank;
  }
  for (size_t r = rank; r < nrows; ++r)
    if (a[r][ncols] != 0) throw not_in_lie_span();

  std::vector<std::pair<std::pair<int, int>, unsigned>> coords;
  for (size_t j = 0; j < ncols; ++j) {
    unsigned c = pivot_row[j] < 0 ? 0u : a[pivot_row[j]][ncols];
    if (c) coords.emplace_back(pairs[j], c);
  }
  return coords;
}

}  // namespace gsw
