#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gsw/calculus.hpp"
#include "gsw/errors.hpp"
#include "gsw/graded_dims.hpp"
#include "gsw/hall.hpp"
#include "gsw/presentation.hpp"
#include "gsw/sieve.hpp"
#include "gsw/weighted.hpp"

using json = nlohmann::ordered_json;
using namespace gsw;

namespace {

struct Common {
  std::string file;
  std::string emit;        // "", "csv", "json", "pres"
  std::string floor;       // override, "num/den"
  int degree_cap = -1;
  bool force_cap = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("file", c.file, "presentation file ('-' for stdin)")
      ->required();
  sub->add_option("--emit", c.emit, "output format: csv or json");
  sub->add_option("--floor", c.floor, "override the truncation floor (num/den)");
  sub->add_option("--degree-cap", c.degree_cap, "monomial degree cap");
  sub->add_flag("--force-cap", c.force_cap,
                "acknowledge a degree cap above the default");
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw input_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int default_sieve_cap(int ngens) {
  if (ngens <= 1) return 24;
  if (ngens == 2) return 14;
  if (ngens == 3) return 10;
  return 8;
}

int needed_cap(const WeightSpec& spec, const Grade& floor) {
  Grade max_w =
      *std::max_element(spec.weights.begin(), spec.weights.end());
  for (int c = 1; c <= 64; ++c)
    if (!(max_w.pow(static_cast<unsigned long>(c) + 1) > floor)) return c;
  throw computation_limit_error("floor needs a degree cap above 64");
}

Presentation load_pres(const Common& c, bool sieve_mode,
                       int extra_needed_degree = 0) {
  Presentation pres = parse_presentation(read_input(c.file));
  if (!c.floor.empty()) {
    Grade f(rat_from_string(c.floor));
    Grade min_w = *std::min_element(pres.spec.weights.begin(),
                                    pres.spec.weights.end());
    if (!(f < min_w))
      throw input_error("floor must be strictly below the minimum weight");
    pres.floor = f;
  }
  int def_cap = sieve_mode ? default_sieve_cap(pres.ngens()) : kDefaultDegreeCap;
  int cap = c.degree_cap > 0 ? c.degree_cap : def_cap;
  if (sieve_mode && c.degree_cap > def_cap && !c.force_cap)
    throw input_error(
        "--degree-cap " + std::to_string(c.degree_cap) +
        " is above the default " + std::to_string(def_cap) +
        " for this generator count; pass --force-cap to acknowledge");
  if (sieve_mode) {
    int needed = std::max(needed_cap(pres.spec, pres.floor), extra_needed_degree);
    if (needed > cap) {
      if (needed <= def_cap)
        cap = needed;
      else
        throw input_error("this floor needs --degree-cap " +
                          std::to_string(needed) + " --force-cap");
    }
  }
  pres.spec.degree_cap = cap;
  return pres;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string emit_or(const Common& c, const char* dflt) {
  return c.emit.empty() ? dflt : c.emit;
}

[[noreturn]] void bad_emit(const std::string& emit) {
  throw input_error("unsupported --emit '" + emit + "' for this subcommand");
}

json dims_to_json(const GradedDims& d) {
  json rows = json::array();
  for (auto& [g, n] : d.dims)
    rows.push_back({{"grade", g.str()}, {"dim", n}});
  return rows;
}

std::vector<std::vector<int>> parse_chain(const std::string& s) {
  std::vector<std::vector<int>> chain;
  std::istringstream is(s);
  std::string step;
  while (std::getline(is, step, ';')) {
    std::vector<int> chi;
    std::istringstream ss(step);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        chi.push_back(std::stoi(tok));
      } catch (...) {
        throw input_error("bad character entry '" + tok + "'");
      }
    }
    if (!chi.empty()) chain.push_back(std::move(chi));
  }
  return chain;
}

std::vector<int> relator_zassenhaus_degrees(const Presentation& pres) {
  std::vector<int> degs;
  for (auto& r : pres.relators) {
    auto d = zassenhaus_degree(r, pres.p(), pres.spec.degree_cap);
    if (!d)
      throw computation_limit_error(
          "relator Zassenhaus degree exceeds the degree cap: " +
          format_word(r, pres.gen_names));
    degs.push_back(*d);
  }
  return degs;
}

int cmd_parse(const Common& c) {
  if (emit_or(c, "json") != "json") bad_emit(c.emit);
  Presentation pres = load_pres(c, false);
  json gens = json::array();
  for (int i = 0; i < pres.ngens(); ++i)
    gens.push_back({{"name", pres.gen_names[i]},
                    {"weight", pres.spec.weights[i].str()}});
  json rels = json::array();
  for (auto& r : pres.relators) rels.push_back(format_word(r, pres.gen_names));
  json out{{"p", pres.p()},
           {"generators", gens},
           {"relators", rels},
           {"floor", pres.floor.str()},
           {"uniform", pres.is_uniform()}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_weigh(const Common& c, const std::string& word) {
  Presentation pres = load_pres(c, false);
  GroupWord w = parse_word(word, pres.gen_names);
  auto g = group_weight(w, pres.spec, pres.floor);
  std::string weight = g ? g->str() : "BelowFloor";
  std::string canon = format_word(w, pres.gen_names);
  std::string emit = emit_or(c, "json");
  if (emit == "json") {
    json out{{"word", canon}, {"weight", weight}, {"floor", pres.floor.str()}};
    std::cout << out.dump(2) << "\n";
  } else if (emit == "csv") {
    std::cout << "word,weight\n" << canon << "," << weight << "\n";
  } else {
    bad_emit(emit);
  }
  return 0;
}

int cmd_zdeg(const Common& c, const std::string& word, int kmax) {
  Presentation pres = load_pres(c, false);
  GroupWord w = parse_word(word, pres.gen_names);
  auto d = zassenhaus_degree(w, pres.p(), kmax);
  std::string canon = format_word(w, pres.gen_names);
  std::string emit = emit_or(c, "json");
  if (emit == "json") {
    json out{{"word", canon}, {"p", pres.p()}, {"kmax", kmax}};
    if (d)
      out["degree"] = *d;
    else
      out["degree"] = "AboveKmax";
    std::cout << out.dump(2) << "\n";
  } else if (emit == "csv") {
    std::cout << "word,degree\n"
              << canon << "," << (d ? std::to_string(*d) : "AboveKmax")
              << "\n";
  } else {
    bad_emit(emit);
  }
  return 0;
}

int cmd_collect(const Common& c, const std::string& word) {
  Presentation pres = load_pres(c, false);
  GroupWord w = parse_word(word, pres.gen_names);
  PCFactorization f = collect(w, pres.spec, pres.floor);
  std::string emit = emit_or(c, "json");
  if (emit == "json") {
    json factors = json::array();
    for (auto& x : f.factors)
      factors.push_back({{"commutator", f.hall->bracket(x.node, pres.gen_names)},
                         {"k", x.k},
                         {"coeff", x.coeff},
                         {"grade", x.grade_pk.str()}});
    json out{{"word", format_word(w, pres.gen_names)},
             {"factors", factors},
             {"residual_floor", f.residual_floor.str()}};
    if (!f.factors.empty())
      out["weight"] = weight_via_factorization(f).str();
    std::cout << out.dump(2) << "\n";
  } else if (emit == "csv") {
    std::cout << "commutator,k,coeff,grade\n";
    for (auto& x : f.factors)
      std::cout << f.hall->bracket(x.node, pres.gen_names) << "," << x.k << ","
                << x.coeff << "," << x.grade_pk.str() << "\n";
  } else {
    bad_emit(emit);
  }
  return 0;
}

int cmd_halldims(const Common& c, int max_degree) {
  Presentation pres = load_pres(c, false);
  Grade min_grade = pres.floor;
  if (max_degree > 0) {
    if (!pres.is_uniform())
      throw input_error("--max-degree needs a uniform presentation");
    min_grade = pres.spec.weights[0].pow(
        static_cast<unsigned long>(max_degree) + 1);
  }
  GradedDims d;
  d.floor = min_grade;
  d.dims = restricted_hall_dims(pres.spec, min_grade);
  std::string emit = emit_or(c, "csv");
  if (emit == "csv") {
    std::cout << graded_dims_csv(d);
  } else if (emit == "json") {
    json out{{"floor", d.floor.str()}, {"dims", dims_to_json(d)}};
    std::cout << out.dump(2) << "\n";
  } else {
    bad_emit(emit);
  }
  return 0;
}

int cmd_witt_invert(const Common& c, int p) {
  std::optional<Grade> fl;
  if (!c.floor.empty()) fl = Grade(rat_from_string(c.floor));
  GradedDims a = graded_dims_from_csv(read_input(c.file), fl);
  WeightSpec dummy;  // reuse the standard prime validation
  dummy.p = p;
  dummy.weights = {Grade(Rat(1, 2))};
  validate_spec(dummy);
  GradedDims lie = lie_dims_from_envelope(a, p);
  std::string emit = emit_or(c, "csv");
  if (emit == "csv") {
    std::cout << graded_dims_csv(lie);
  } else if (emit == "json") {
    // algebra-derived; not asserted to equal the group's c_alpha
    json out{{"floor", lie.floor.str()},
             {"envelope_derived_lie_dims", dims_to_json(lie)}};
    std::cout << out.dump(2) << "\n";
  } else {
    bad_emit(emit);
  }
  return 0;
}

int cmd_deficiency(const Common& c, bool optimize) {
  Presentation pres = load_pres(c, false);
  DeficiencyReport rep = deficiency(pres);
  json rels = json::array();
  for (auto& [w, g] : rep.relator_weights)
    rels.push_back(
        {{"word", format_word(w, pres.gen_names)}, {"weight", g.str()}});
  json out{{"p", pres.p()},
           {"W_X", rat_str(rep.weight_x)},
           {"W_R", rat_str(rep.weight_r)},
           {"def", rat_str(rep.def)},
           {"relators", rels}};
  if (optimize) {
    auto degs = relator_zassenhaus_degrees(pres);
    UniformOpt opt = optimize_uniform(pres.ngens(), degs);
    json j{{"t", fmt_double(opt.t)},
           {"def", fmt_double(opt.def)},
           {"attained", opt.attained}};
    if (opt.t_exact) j["t_exact"] = rat_str(*opt.t_exact);
    if (opt.def_exact) j["def_exact"] = rat_str(*opt.def_exact);
    out["optimize_uniform"] = j;
  }
  std::string emit = emit_or(c, "json");
  if (emit == "json") {
    std::cout << out.dump(2) << "\n";
  } else if (emit == "csv") {
    std::cout << "key,value\n";
    std::cout << "W_X," << rat_str(rep.weight_x) << "\n";
    std::cout << "W_R," << rat_str(rep.weight_r) << "\n";
    std::cout << "def," << rat_str(rep.def) << "\n";
  } else {
    bad_emit(emit);
  }
  return 0;
}

int cmd_schreier(const Common& c, const std::string& chain_str) {
  Presentation pres = load_pres(c, false);
  std::vector<GroupWord> words;
  for (int i = 0; i < pres.ngens(); ++i) words.push_back(GroupWord{{{i, 1}}});
  WeightedGenSet x = make_weighted_set(pres.spec, pres.floor, words);
  SchreierReport rep = schreier_check(x, parse_chain(chain_str));
  std::string emit = emit_or(c, "json");
  if (emit == "json") {
    json steps = json::array();
    for (auto& st : rep.steps)
      steps.push_back({{"alpha", st.alpha.str()},
                       {"factor", rat_str(st.factor)},
                       {"rank_before", rat_str(st.rank_before)},
                       {"rank_after", rat_str(st.rank_after)},
                       {"lhs", rat_str(st.lhs)},
                       {"rhs", rat_str(st.rhs)},
                       {"equal", st.equal}});
    json gens = json::array();
    for (auto& e : rep.final_set.entries)
      gens.push_back({{"word", format_word(e.word, pres.gen_names)},
                      {"grade", e.grade.str()}});
    json out{{"steps", steps},
             {"total_index", rat_str(rep.total_index)},
             {"all_equal", rep.all_equal},
             {"final_generators", gens}};
    std::cout << out.dump(2) << "\n";
  } else if (emit == "csv") {
    std::cout << "step,alpha,factor,rank_before,rank_after,lhs,rhs,equal\n";
    for (size_t i = 0; i < rep.steps.size(); ++i) {
      auto& st = rep.steps[i];
      std::cout << i + 1 << "," << st.alpha.str() << "," << rat_str(st.factor)
                << "," << rat_str(st.rank_before) << ","
                << rat_str(st.rank_after) << "," << rat_str(st.lhs) << ","
                << rat_str(st.rhs) << "," << (st.equal ? "true" : "false")
                << "\n";
    }
  } else {
    bad_emit(emit);
  }
  return 0;
}

int cmd_contract(const Common& c, const std::string& c_str) {
  Presentation pres = load_pres(c, false);
  Rat cc = rat_from_string(c_str);
  pres.spec = contract(pres.spec, cc);
  Grade min_w = *std::min_element(pres.spec.weights.begin(),
                                  pres.spec.weights.end());
  if (!(pres.floor < min_w))
    throw input_error(
        "contraction pushed the minimum weight to or below the floor");
  std::string emit = emit_or(c, "pres");
  if (emit == "pres") {
    std::cout << format_presentation(pres);
  } else if (emit == "json") {
    json out{{"c", rat_str(cc)}, {"presentation", format_presentation(pres)}};
    std::cout << out.dump(2) << "\n";
  } else {
    bad_emit(emit);
  }
  return 0;
}

int cmd_golod_set(const Common& c, int m) {
  if (emit_or(c, "json") != "json") bad_emit(c.emit);
  Presentation pres = load_pres(c, false);
  std::vector<GroupWord> words;
  for (int i = 0; i < pres.ngens(); ++i) words.push_back(GroupWord{{{i, 1}}});
  WeightedGenSet y = make_weighted_set(pres.spec, pres.floor, words);
  GolodSet gs = golod_relator_set(y, m);
  json rels = json::array();
  for (auto& r : gs.relators) rels.push_back(format_word(r, pres.gen_names));
  json out{{"m", m},
           {"relators", rels},
           {"exact_weight", rat_str(gs.exact_weight)},
           {"paper_bound", rat_str(gs.paper_bound)}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_golod_stage(const Common& c, const std::string& eps_str, int count) {
  Presentation pres = load_pres(c, false);
  Rat eps = rat_from_string(eps_str);
  GolodStageResult res = golod_stage(pres, eps, count);
  std::string emit = emit_or(c, "pres");
  if (emit == "pres") {
    std::cout << "# golod-stage: appended " << res.appended.size()
              << " relators, total weight <= " << rat_str(res.total_weight)
              << " < " << rat_str(eps) << "\n";
    std::cout << format_presentation(res.pres);
  } else if (emit == "json") {
    DeficiencyReport before = deficiency(pres);
    json app = json::array();
    for (auto& r : res.appended)
      app.push_back(format_word(r, pres.gen_names));
    json out{{"epsilon", rat_str(eps)},
             {"count", count},
             {"appended", app},
             {"total_weight", rat_str(res.total_weight)},
             {"def_before", rat_str(before.def)},
             {"def_lower_bound",
              rat_str(budget_apply(before.def, 1, res.total_weight))},
             {"presentation", format_presentation(res.pres)}};
    std::cout << out.dump(2) << "\n";
  } else {
    bad_emit(emit);
  }
  return 0;
}

int cmd_growth(const Common& c, int max_degree, bool gs_check) {
  Presentation pres = load_pres(c, true, max_degree);
  if (max_degree > 0) {
    if (!pres.is_uniform())
      throw input_error("--max-degree needs a uniform presentation");
    pres.floor = pres.spec.weights[0].pow(
        static_cast<unsigned long>(max_degree) + 1);
  }
  if (!pres.is_uniform())
    throw input_error("growth needs a uniform presentation");
  SieveResult res = quotient_graded_dims(pres);
  std::vector<long long> b = uniform_degree_dims(res.dims, pres.spec.weights[0]);
  GrowthReport rep = growth_estimate(b);
  GsTable gs;
  if (gs_check)
    gs = gs_series_check(b, pres.ngens(), relator_zassenhaus_degrees(pres));

  std::string emit = emit_or(c, "csv");
  if (emit == "csv") {
    std::cout << "k,b_k,root\n";
    for (size_t k = 0; k < rep.b.size(); ++k) {
      std::cout << k << "," << rep.b[k] << ",";
      if (k >= 1) std::cout << fmt_double(rep.roots[k - 1]);
      std::cout << "\n";
    }
    for (auto& [k, l] : rep.violations)
      std::cout << "# submultiplicativity violation at k=" << k << ",l=" << l
                << "\n";
    std::cout << "# growth_root=" << fmt_double(rep.growth_root)
              << " (truncation estimate, not a limit)\n";
    if (gs_check) {
      std::cout << "\nk,gs_coeff,pass\n";
      for (auto& row : gs.rows)
        std::cout << row.k << "," << row.coeff << ","
                  << (row.pass ? "true" : "false") << "\n";
    }
  } else if (emit == "json") {
    json out{{"b", rep.b},
             {"roots", json::array()},
             {"violations", json::array()},
             {"growth_root", fmt_double(rep.growth_root)},
             {"note", "growth_root is a truncation estimate, not a limit"}};
    for (double r : rep.roots) out["roots"].push_back(fmt_double(r));
    for (auto& [k, l] : rep.violations)
      out["violations"].push_back({{"k", k}, {"l", l}});
    if (gs_check) {
      json rows = json::array();
      for (auto& row : gs.rows)
        rows.push_back({{"k", row.k}, {"coeff", row.coeff}, {"pass", row.pass}});
      out["gs_check"] = {{"rows", rows}, {"all_pass", gs.all_pass}};
    }
    std::cout << out.dump(2) << "\n";
  } else {
    bad_emit(emit);
  }
  return 0;
}

int cmd_normal_form(const Common& c, const std::string& word) {
  Presentation pres = load_pres(c, true);
  GroupWord w = parse_word(word, pres.gen_names);
  Sieve sieve(pres);
  TruncatedSeries nf = sieve.normal_form(w);
  auto val = nf.valuation();
  std::string emit = emit_or(c, "json");
  if (emit == "json") {
    json out{{"word", format_word(w, pres.gen_names)},
             {"normal_form", nf.render()},
             {"valuation", val ? val->str() : "BelowFloor"},
             {"floor", pres.floor.str()}};
    std::cout << out.dump(2) << "\n";
  } else if (emit == "csv") {
    std::cout << "word,valuation,normal_form\n"
              << format_word(w, pres.gen_names) << ","
              << (val ? val->str() : "BelowFloor") << "," << nf.render()
              << "\n";
  } else {
    bad_emit(emit);
  }
  return 0;
}

int cmd_windex_partial(const Common& c, const std::string& file_h, int p) {
  std::optional<Grade> fl;
  if (!c.floor.empty()) fl = Grade(rat_from_string(c.floor));
  GradedDims g = graded_dims_from_csv(read_input(c.file), fl);
  GradedDims h = graded_dims_from_csv(read_input(file_h), fl);
  WeightSpec dummy;
  dummy.p = p;
  dummy.weights = {Grade(Rat(1, 2))};
  validate_spec(dummy);
  auto partials = windex_partial(g, h, p);
  std::string emit = emit_or(c, "csv");
  if (emit == "csv") {
    std::cout << "grade_num,grade_den,partial\n";
    for (auto& [gr, v] : partials)
      std::cout << gr.rat().get_num().get_str() << ","
                << gr.rat().get_den().get_str() << "," << rat_str(v) << "\n";
  } else if (emit == "json") {
    json rows = json::array();
    for (auto& [gr, v] : partials)
      rows.push_back({{"grade", gr.str()}, {"partial", rat_str(v)}});
    json out{{"p", p}, {"partials", rows}};
    std::cout << out.dump(2) << "\n";
  } else {
    bad_emit(emit);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gsw: exact weighted-deficiency workbench for pro-p groups"};
  app.require_subcommand(1);

  Common c;
  std::string word, chain, contract_c, epsilon;
  std::string windex_h;
  int kmax = 16, max_degree = 0, m = 2, count = 0, p = 2;
  bool optimize = false, gs_check = false;

  auto* s_parse = app.add_subcommand("parse", "validate and echo a presentation");
  add_common(s_parse, c);

  auto* s_weigh = app.add_subcommand("weigh", "certified weight of a word");
  add_common(s_weigh, c);
  s_weigh->add_option("--word", word, "word in the presentation's generators")
      ->required();

  auto* s_zdeg = app.add_subcommand("zdeg", "Zassenhaus degree of a word");
  add_common(s_zdeg, c);
  s_zdeg->add_option("--word", word)->required();
  s_zdeg->add_option("--kmax", kmax, "search depth (default 16)");

  auto* s_collect =
      app.add_subcommand("collect", "power-commutator factorization");
  add_common(s_collect, c);
  s_collect->add_option("--word", word)->required();

  auto* s_hall = app.add_subcommand(
      "halldims", "restricted Hall basis dimensions per grade");
  add_common(s_hall, c);
  s_hall->add_option("--max-degree", max_degree,
                     "count up to this degree (uniform weights)");

  auto* s_witt = app.add_subcommand(
      "witt-invert", "Lie dims from envelope dims (GradedDims CSV input)");
  add_common(s_witt, c);
  s_witt->add_option("--p", p, "the prime")->required();

  auto* s_def = app.add_subcommand("deficiency", "W-deficiency report");
  add_common(s_def, c);
  s_def->add_flag("--optimize-uniform", optimize,
                  "also maximize deficiency over uniform weights");

  auto* s_schreier =
      app.add_subcommand("schreier", "weighted Schreier formula along a chain");
  add_common(s_schreier, c);
  s_schreier
      ->add_option("--chain", chain,
                   "characters as comma-separated residues, steps joined by ';'")
      ->required();

  auto* s_contract = app.add_subcommand("contract", "c-contraction of weights");
  add_common(s_contract, c);
  s_contract->add_option("--c", contract_c, "contraction constant >= 1")
      ->required();

  auto* s_golod = app.add_subcommand(
      "golod-set", "left-normed commutator relator set Y^(m)");
  add_common(s_golod, c);
  s_golod->add_option("--m", m, "commutator degree (>= 2)")->required();

  auto* s_stage = app.add_subcommand(
      "golod-stage", "append torsion relators with weight budget epsilon");
  add_common(s_stage, c);
  s_stage->add_option("--epsilon", epsilon, "weight budget (num/den)")
      ->required();
  s_stage->add_option("--count", count, "how many words to kill")->required();

  auto* s_growth =
      app.add_subcommand("growth", "graded dims of the quotient algebra");
  add_common(s_growth, c);
  s_growth->add_option("--max-degree", max_degree, "compute b_k for k <= K");
  s_growth->add_flag("--gs-check", gs_check,
                     "Golod-Shafarevich series cross-check");

  auto* s_nf = app.add_subcommand("normal-form",
                                  "reduce a word against the relator ideal");
  add_common(s_nf, c);
  s_nf->add_option("--word", word)->required();

  auto* s_windex = app.add_subcommand(
      "windex-partial", "partial W-index products from two GradedDims CSVs");
  add_common(s_windex, c);
  s_windex->add_option("file_h", windex_h, "subgroup dims CSV ('-' for stdin)")
      ->required();
  s_windex->add_option("--p", p, "the prime")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::cout << (app.get_subcommands().empty()
                        ? app.help()
                        : app.get_subcommands().front()->help());
      return 0;
    }
    std::cerr << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    if (s_parse->parsed()) return cmd_parse(c);
    if (s_weigh->parsed()) return cmd_weigh(c, word);
    if (s_zdeg->parsed()) return cmd_zdeg(c, word, kmax);
    if (s_collect->parsed()) return cmd_collect(c, word);
    if (s_hall->parsed()) return cmd_halldims(c, max_degree);
    if (s_witt->parsed()) return cmd_witt_invert(c, p);
    if (s_def->parsed()) return cmd_deficiency(c, optimize);
    if (s_schreier->parsed()) return cmd_schreier(c, chain);
    if (s_contract->parsed()) return cmd_contract(c, contract_c);
    if (s_golod->parsed()) return cmd_golod_set(c, m);
    if (s_stage->parsed()) return cmd_golod_stage(c, epsilon, count);
    if (s_growth->parsed()) return cmd_growth(c, max_degree, gs_check);
    if (s_nf->parsed()) return cmd_normal_form(c, word);
    if (s_windex->parsed()) return cmd_windex_partial(c, windex_h, p);
    std::cerr << app.help();
    return 1;
  } catch (const computation_limit_error& e) {
    std::cerr << "computation limit: " << e.what() << "\n";
    return 2;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
