#include "gsw/graded_dims.hpp"

#include <sstream>
#include <vector>

#include "gsw/errors.hpp"

namespace gsw {

namespace {

using Poly = std::map<Grade, long long, GradeDesc>;  // grade -> coefficient

/* poly *= (1 + g + g^2 + ... + g^(p-1)) (grade exponents), truncated to
 * grades strictly above floor. */
void mul_factor(Poly& poly, const Grade& g, int p, const Grade& floor) {
  Poly out;
  for (auto& [gr, n] : poly) {
    Grade acc = gr;
    out[gr] += n;
    for (int j = 1; j < p; ++j) {
      acc = acc * g;
      if (!(acc > floor)) break;  // further powers only get smaller
      out[acc] += n;
    }
  }
  poly = std::move(out);
}

}  // namespace

GradedDims envelope_dims_from_lie(const GradedDims& c, int p) {
  Poly poly{{Grade(), 1}};  // the unit
  for (auto& [g, n] : c.dims) {
    if (g.is_one()) throw input_error("Lie dims cannot live at the unit grade");
    if (n < 0) throw input_error("negative Lie dimension");
    if (!(g > c.floor)) throw input_error("Lie dims grade at or below floor");
    for (long long i = 0; i < n; ++i) mul_factor(poly, g, p, c.floor);
  }
  GradedDims a;
  a.floor = c.floor;
  for (auto& [g, n] : poly)
    if (!g.is_one() && n != 0) a.dims[g] = n;
  return a;
}

GradedDims lie_dims_from_envelope(const GradedDims& a, int p) {
  for (auto& [g, n] : a.dims) {
    if (g.is_one())
      throw input_error("envelope dims at the unit grade are implicit");
    if (!(g > a.floor)) throw input_error("dims grade at or below floor");
  }
  Poly partial{{Grade(), 1}};  // product of the factors already peeled
  GradedDims c;
  c.floor = a.floor;

  // Work queue of candidate grades, highest first: every grade where either
  // the target or the partial product has support.
  std::map<Grade, bool, GradeDesc> pending;
  for (auto& [g, n] : a.dims) pending.emplace(g, true);

  while (!pending.empty()) {
    Grade g = pending.begin()->first;
    pending.erase(pending.begin());
    auto it = partial.find(g);
    long long have = it == partial.end() ? 0 : it->second;
    long long want = a.at(g);
    long long cg = want - have;
    if (cg < 0)
      throw input_error("inconsistent envelope dims: negative dimension at " +
                        g.str());
    if (cg == 0) continue;
    c.dims[g] = cg;
    for (long long i = 0; i < cg; ++i) mul_factor(partial, g, p, a.floor);
    // factor products may create support at new grades below g
    for (auto& [gr, n] : partial)
      if (gr < g && !gr.is_one() && !c.dims.count(gr)) pending.emplace(gr, true);
  }
  return c;
}

std::string graded_dims_csv(const GradedDims& d) {
  std::ostringstream os;
  os << "# floor=" << d.floor.str() << "\n";
  for (auto& [g, n] : d.dims)
    os << g.rat().get_num().get_str() << "," << g.rat().get_den().get_str()
       << "," << n << "\n";
  return os.str();
}

GradedDims graded_dims_from_csv(const std::string& text,
                                std::optional<Grade> floor_override) {
  GradedDims d;
  std::optional<Grade> floor = floor_override;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto eq = line.find("floor=");
      if (eq != std::string::npos && !floor_override)
        floor = Grade(rat_from_string(line.substr(eq + 6)));
      continue;
    }
    std::istringstream ls(line);
    std::string num, den, dim;
    if (!std::getline(ls, num, ',') || !std::getline(ls, den, ',') ||
        !std::getline(ls, dim, ','))
      throw input_error("bad GradedDims CSV line: " + line);
    Rat g(rat_from_string(num + "/" + den));
    long long n = 0;
    try {
      n = std::stoll(dim);
    } catch (...) {
      throw input_error("bad dimension in CSV line: " + line);
    }
    if (n < 0) throw input_error("negative dimension in CSV");
    if (n > 0) d.dims[Grade(g)] += n;
  }
  if (!floor)
    throw input_error(
        "GradedDims CSV has no '# floor=' line; pass an explicit floor");
  d.floor = *floor;
  for (auto& [g, n] : d.dims)
    if (!(g > d.floor) && !g.is_one())
      throw input_error("CSV grade at or below floor");
  return d;
}

}  // namespace gsw
