#include "gsw/series.hpp"

#include <algorithm>
#include <cstdint>

#include "gsw/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gsw {

WeightSpec make_uniform_spec(int p, int ngens, const Grade& beta,
                             int degree_cap) {
  WeightSpec s;
  s.p = p;
  s.weights.assign(ngens, beta);
  s.degree_cap = degree_cap;
  validate_spec(s);
  return s;
}

static bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void validate_spec(const WeightSpec& spec) {
  if (!is_prime(spec.p)) throw input_error("p must be prime");
  if (spec.p > 251) throw input_error("p too large (max supported 251)");
  if (spec.weights.size() > 255) throw input_error("too many generators");
  for (auto& w : spec.weights)
    if (w.rat() >= 1) throw input_error("weight must lie in (0,1)");
  if (spec.degree_cap < 1) throw input_error("degree cap must be positive");
}

Grade monomial_weight(const Monomial& m, const WeightSpec& spec) {
  Grade w;
  for (unsigned char i : m.idx) {
    if (i >= spec.weights.size())
      throw input_error("monomial index out of range");
    w = w * spec.weights[i];
  }
  return w;
}

bool canonical_less(const Monomial& a, const Grade& wa, const Monomial& b,
                    const Grade& wb) {
  auto c = wa <=> wb;
  if (c != 0) return c > 0;  // higher weight first
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.idx < b.idx;
}

static bool term_less(const Term& x, const Term& y) {
  return canonical_less(x.mon, x.w, y.mon, y.w);
}

/* Sort, merge equal monomials mod p, drop zeros. The normalization step that
 * makes every kernel deterministic regardless of generation order. */
static void combine_terms(std::vector<Term>& t, int p) {
  std::sort(t.begin(), t.end(), term_less);
  size_t out = 0;
  for (size_t i = 0; i < t.size();) {
    size_t j = i;
    unsigned long long acc = 0;
    while (j < t.size() && t[j].mon == t[i].mon) acc += t[j++].c;
    unsigned c = static_cast<unsigned>(acc % p);
    if (c) {
      t[out] = std::move(t[i]);
      t[out].c = c;
      ++out;
    }
    i = j;
  }
  t.resize(out);
}

TruncatedSeries::TruncatedSeries(WeightSpec spec, Grade floor)
    : spec_(std::move(spec)), floor_(std::move(floor)) {
  validate_spec(spec_);
  if (floor_.rat() >= 1) throw input_error("floor must lie in (0,1)");
}

TruncatedSeries TruncatedSeries::zero(const WeightSpec& spec,
                                      const Grade& floor) {
  return TruncatedSeries(spec, floor);
}

TruncatedSeries TruncatedSeries::one(const WeightSpec& spec,
                                     const Grade& floor) {
  TruncatedSeries s(spec, floor);
  s.terms_.push_back({Monomial::unit(), Grade(), 1});
  return s;
}

TruncatedSeries TruncatedSeries::one_plus_gen(const WeightSpec& spec,
                                              const Grade& floor, int i) {
  TruncatedSeries s = one(spec, floor);
  if (i < 0 || i >= spec.ngens()) throw input_error("generator out of range");
  if (spec.weights[i] > floor)
    s.terms_.push_back({Monomial::gen(i), spec.weights[i], 1});
  return s;
}

TruncatedSeries TruncatedSeries::from_terms(WeightSpec spec, Grade floor,
                                            std::vector<Term> terms) {
  TruncatedSeries s(std::move(spec), std::move(floor));
  combine_terms(terms, s.spec_.p);
  s.terms_ = std::move(terms);
  return s;
}

unsigned TruncatedSeries::constant_coeff() const {
  for (auto& t : terms_)
    if (t.mon.is_unit()) return t.c;
  return 0;
}

static void check_same_spec(const TruncatedSeries& f,
                            const TruncatedSeries& g) {
  if (!(f.spec() == g.spec())) throw input_error("weight spec mismatch");
}

TruncatedSeries TruncatedSeries::add(const TruncatedSeries& g) const {
  check_same_spec(*this, g);
  Grade floor = std::max(floor_, g.floor());
  std::vector<Term> t;
  t.reserve(terms_.size() + g.terms().size());
  for (auto& x : terms_)
    if (x.w > floor) t.push_back(x);
  for (auto& x : g.terms())
    if (x.w > floor) t.push_back(x);
  return from_terms(spec_, floor, std::move(t));
}

TruncatedSeries TruncatedSeries::sub(const TruncatedSeries& g) const {
  check_same_spec(*this, g);
  Grade floor = std::max(floor_, g.floor());
  std::vector<Term> t;
  t.reserve(terms_.size() + g.terms().size());
  for (auto& x : terms_)
    if (x.w > floor) t.push_back(x);
  for (auto& x : g.terms())
    if (x.w > floor)
      t.push_back({x.mon, x.w, static_cast<unsigned>(spec_.p) - x.c});
  return from_terms(spec_, floor, std::move(t));
}

TruncatedSeries TruncatedSeries::minus_one() const {
  return sub(one(spec_, floor_));
}

/* Convolution restricted to result monomials of weight > floor. Both inputs
 * are canonically sorted (weight descending), so for each left term only a
 * prefix of the right factor can contribute; `cut` finds that prefix.
 *
 * A product whose weight clears the floor but whose degree exceeds the cap
 * is a hard error: silently dropping it would corrupt coefficients above
 * the floor. */
TruncatedSeries TruncatedSeries::mul(const TruncatedSeries& g,
                                     ExecPolicy policy) const {
  check_same_spec(*this, g);
  Grade floor = std::max(floor_, g.floor());
  const auto& a = terms_;
  const auto& b = g.terms();

  auto cut = [&](const Grade& wa) {
    // first index in b with wa*w(b[i]) <= floor, i.e. w(b[i]) <= floor/wa
    Rat bound = floor.rat() / wa.rat();
    size_t lo = 0, hi = b.size();
    while (lo < hi) {
      size_t mid = (lo + hi) / 2;
      if (b[mid].w.rat() > bound)
        lo = mid + 1;
      else
        hi = mid;
    }
    return lo;
  };

  const int cap = spec_.degree_cap;
  const int p = spec_.p;
  auto emit_range = [&](size_t i0, size_t i1, std::vector<Term>& out) {
    for (size_t i = i0; i < i1; ++i) {
      size_t n = cut(a[i].w);
      for (size_t j = 0; j < n; ++j) {
        if (a[i].mon.degree() + b[j].mon.degree() > cap)
          throw computation_limit_error(
              "degree cap exceeded in series multiplication");
        out.push_back({a[i].mon * b[j].mon, a[i].w * b[j].w,
                       (a[i].c * b[j].c) % static_cast<unsigned>(p)});
      }
    }
  };

  std::vector<Term> prod;
#ifdef _OPENMP
  if (policy == ExecPolicy::parallel && a.size() * b.size() > 4096) {
    int nthreads = omp_get_max_threads();
    std::vector<std::vector<Term>> chunks(nthreads);
    std::exception_ptr err;
#pragma omp parallel num_threads(nthreads)
    {
      int tid = omp_get_thread_num();
      size_t lo = a.size() * tid / nthreads;
      size_t hi = a.size() * (tid + 1) / nthreads;
      try {
        emit_range(lo, hi, chunks[tid]);
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
    size_t total = 0;
    for (auto& c : chunks) total += c.size();
    prod.reserve(total);
    for (auto& c : chunks)
      prod.insert(prod.end(), std::make_move_iterator(c.begin()),
                  std::make_move_iterator(c.end()));
  } else
#endif
  {
    (void)policy;
    emit_range(0, a.size(), prod);
  }
  return from_terms(spec_, floor, std::move(prod));
}

TruncatedSeries TruncatedSeries::invert_unit(ExecPolicy policy) const {
  if (constant_coeff() != 1)
    throw input_error("invert_unit requires constant term 1");
  // u = 1 - f has all weights < 1, so the geometric series terminates
  // once u^k falls below the floor.
  TruncatedSeries u = one(spec_, floor_).sub(*this);
  TruncatedSeries acc = one(spec_, floor_);
  TruncatedSeries powu = u;
  while (!powu.is_zero()) {
    acc = acc.add(powu);
    powu = powu.mul(u, policy);
  }
  return acc;
}

TruncatedSeries TruncatedSeries::pow(long long e, ExecPolicy policy) const {
  TruncatedSeries base = e < 0 ? invert_unit(policy) : *this;
  unsigned long long n =
      e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1
            : static_cast<unsigned long long>(e);
  TruncatedSeries acc = one(spec_, floor_);
  while (n) {
    if (n & 1) acc = acc.mul(base, policy);
    n >>= 1;
    if (n) base = base.mul(base, policy);
  }
  return acc;
}

std::optional<Grade> TruncatedSeries::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().w;  // canonical order: max weight first
}

std::vector<std::pair<Monomial, unsigned>> TruncatedSeries::leading_form()
    const {
  auto v = valuation();
  if (!v) throw input_error("leading_form of a series with no certified valuation");
  std::vector<std::pair<Monomial, unsigned>> out;
  for (auto& t : terms_) {
    if (t.w != *v) break;
    out.emplace_back(t.mon, t.c);
  }
  return out;
}

TruncatedSeries TruncatedSeries::with_floor(const Grade& coarser) const {
  if (coarser < floor_)
    throw input_error("with_floor can only coarsen the floor");
  TruncatedSeries s(spec_, coarser);
  for (auto& t : terms_)
    if (t.w > coarser) s.terms_.push_back(t);
  return s;
}

std::string TruncatedSeries::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += std::to_string(t.c);
    for (size_t k = 0; k < t.mon.idx.size(); ++k) {
      out += k == 0 ? "*" : " ";
      out += 'q';
      out += std::to_string(
          static_cast<int>(static_cast<unsigned char>(t.mon.idx[k])));
    }
  }
  return out;
}

TruncatedSeries word_to_series(const GroupWord& w, const WeightSpec& spec,
                               const Grade& floor, ExecPolicy policy) {
  for (auto& bw : spec.weights)
    if (!(floor < bw)) throw input_error("floor must be below every weight");
  TruncatedSeries acc = TruncatedSeries::one(spec, floor);
  for (auto& [g, e] : reduce(w).letters) {
    TruncatedSeries gen = TruncatedSeries::one_plus_gen(spec, floor, g);
    acc = acc.mul(gen.pow(e, policy), policy);
  }
  return acc;
}

}  // namespace gsw
