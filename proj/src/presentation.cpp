#include "gsw/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "gsw/errors.hpp"

namespace gsw {

bool Presentation::is_uniform() const {
  for (auto& w : spec.weights)
    if (!(w == spec.weights.front())) return false;
  return !spec.weights.empty();
}

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = strip(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw input_error("presentation line without '=': " + line);
    std::string key = strip(line.substr(0, eq));
    std::string val = strip(line.substr(eq + 1));
    if (kv.count(key)) throw input_error("duplicate key '" + key + "'");
    kv[key] = val;
  }

  Presentation pres;

  if (!kv.count("p")) throw input_error("missing prime: p = ...");
  try {
    pres.spec.p = std::stoi(kv["p"]);
  } catch (...) {
    throw input_error("invalid prime '" + kv["p"] + "'");
  }

  if (!kv.count("generators"))
    throw input_error("missing generators = ...");
  bool uniform_mode = kv.count("weights") > 0;
  Grade uniform_weight;
  if (uniform_mode) {
    auto toks = split_ws(kv["weights"]);
    if (toks.size() != 2 || toks[0] != "uniform")
      throw input_error("weights must read: weights = uniform <num>/<den>");
    Rat w = rat_from_string(toks[1]);
    if (w <= 0 || w >= 1) throw input_error("weight must lie in (0,1)");
    uniform_weight = Grade(w);
  }
  for (auto& tok : split_ws(kv["generators"])) {
    auto colon = tok.find(':');
    std::string name = colon == std::string::npos ? tok : tok.substr(0, colon);
    if (name.empty()) throw input_error("empty generator name");
    if (std::count(pres.gen_names.begin(), pres.gen_names.end(), name))
      throw input_error("duplicate generator '" + name + "'");
    pres.gen_names.push_back(name);
    if (colon == std::string::npos) {
      if (!uniform_mode)
        throw input_error("generator '" + name +
                          "' has no weight and no uniform weights line");
      pres.spec.weights.push_back(uniform_weight);
    } else {
      if (uniform_mode)
        throw input_error("per-generator weights conflict with uniform mode");
      Rat w = rat_from_string(tok.substr(colon + 1));
      if (w <= 0 || w >= 1) throw input_error("weight must lie in (0,1)");
      pres.spec.weights.push_back(Grade(w));
    }
  }
  validate_spec(pres.spec);

  if (!kv.count("floor")) throw input_error("missing floor = ...");
  Grade max_w = *std::max_element(pres.spec.weights.begin(),
                                  pres.spec.weights.end());
  Grade min_w = *std::min_element(pres.spec.weights.begin(),
                                  pres.spec.weights.end());
  {
    auto toks = split_ws(kv["floor"]);
    if (toks.size() == 2 && toks[0] == "degree") {
      int K;
      try {
        K = std::stoi(toks[1]);
      } catch (...) {
        throw input_error("invalid floor degree");
      }
      if (K < 0) throw input_error("floor degree must be nonnegative");
      pres.floor = max_w.pow(static_cast<unsigned long>(K) + 1);
    } else if (toks.size() == 1) {
      Rat f = rat_from_string(toks[0]);
      if (f <= 0 || f >= 1) throw input_error("floor must lie in (0,1)");
      pres.floor = Grade(f);
    } else {
      throw input_error("floor must read: floor = <num>/<den> | degree <K>");
    }
  }
  if (!(pres.floor < min_w))
    throw input_error("floor must be strictly below the minimum weight");

  if (kv.count("relators") && !strip(kv["relators"]).empty()) {
    std::string rel = kv["relators"];
    size_t start = 0;
    while (start <= rel.size()) {
      size_t semi = rel.find(';', start);
      std::string piece = strip(
          semi == std::string::npos ? rel.substr(start)
                                    : rel.substr(start, semi - start));
      if (!piece.empty()) {
        GroupWord w = parse_word(piece, pres.gen_names);
        if (w.is_identity())
          throw input_error("identity relator '" + piece + "'");
        pres.relators.push_back(w);
      }
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
  }
  return pres;
}

std::string format_presentation(const Presentation& pres) {
  std::ostringstream os;
  os << "p = " << pres.p() << "\n";
  os << "generators =";
  if (pres.is_uniform()) {
    for (auto& n : pres.gen_names) os << " " << n;
    os << "\nweights = uniform " << pres.spec.weights.front().str() << "\n";
  } else {
    for (int i = 0; i < pres.ngens(); ++i)
      os << " " << pres.gen_names[i] << ":" << pres.spec.weights[i].str();
    os << "\n";
  }
  if (!pres.relators.empty()) {
    os << "relators = ";
    for (size_t i = 0; i < pres.relators.size(); ++i) {
      if (i) os << " ; ";
      os << format_word(pres.relators[i], pres.gen_names);
    }
    os << "\n";
  }
  os << "floor = " << pres.floor.str() << "\n";
  return os.str();
}

}  // namespace gsw
