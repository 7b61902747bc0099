#include "gsw/sieve.hpp"

#include <algorithm>
#include <cmath>

#include "gsw/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gsw {

namespace {

struct RawTerm {
  Monomial mon;
  Grade w;
  unsigned c;
};
using RawRow = std::vector<RawTerm>;

unsigned inv_mod(unsigned a, int p) {
  unsigned r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

/* All monomials m (DFS, lexicographic) with weight(m) > bound. */
void enumerate_monomials(const WeightSpec& spec, const Rat& bound,
                         Monomial cur, const Grade& cur_w,
                         std::vector<std::pair<Monomial, Grade>>& out) {
  out.emplace_back(cur, cur_w);
  if (cur.degree() >= spec.degree_cap) return;
  for (int g = 0; g < spec.ngens(); ++g) {
    Grade w = cur_w * spec.weights[g];
    if (w.rat() > bound)
      enumerate_monomials(spec, bound, cur * Monomial::gen(g), w, out);
  }
}

}  // namespace

std::map<Grade, long long, GradeDesc> count_monomials_by_grade(
    const WeightSpec& spec, const Grade& floor) {
  std::map<Grade, long long, GradeDesc> total, level;
  level[Grade()] = 1;
  total[Grade()] = 1;
  while (!level.empty()) {
    std::map<Grade, long long, GradeDesc> next;
    for (auto& [g, n] : level)
      for (auto& w : spec.weights) {
        Grade gw = g * w;
        if (gw > floor) next[gw] += n;
      }
    for (auto& [g, n] : next) total[g] += n;
    level = std::move(next);
  }
  return total;
}

Sieve::Sieve(const Presentation& pres, ExecPolicy policy, long long row_budget)
    : pres_(pres), policy_(policy) {
  const WeightSpec& spec = pres_.spec;
  const Grade& floor = pres_.floor;

  // The monomial space above the floor must fit under the degree cap, or
  // rows (and the grade-by-grade counts) would be silently incomplete.
  Grade max_w =
      *std::max_element(spec.weights.begin(), spec.weights.end());
  if (max_w.pow(static_cast<unsigned long>(spec.degree_cap) + 1) > floor)
    throw computation_limit_error(
        "degree cap too small for this floor; raise the cap");

  /* Pass 1: raw rows m*(r-1)*m'. */
  std::vector<RawRow> raw;
  for (auto& rel : pres_.relators) {
    TruncatedSeries sr =
        word_to_series(rel, spec, floor, policy_).minus_one();
    auto wr = sr.valuation();
    if (!wr)
      throw computation_limit_error(
          "relator weight not certifiable above the floor: " +
          format_word(rel, pres_.gen_names));

    std::vector<std::pair<Monomial, Grade>> lefts;
    enumerate_monomials(spec, floor.rat() / wr->rat(), Monomial::unit(),
                        Grade(), lefts);

    auto build_range = [&](size_t lo, size_t hi, std::vector<RawRow>& out) {
      for (size_t li = lo; li < hi; ++li) {
        auto& [lm, lw] = lefts[li];
        std::vector<std::pair<Monomial, Grade>> rights;
        enumerate_monomials(spec, floor.rat() / (lw.rat() * wr->rat()),
                            Monomial::unit(), Grade(), rights);
        for (auto& [rm, rw] : rights) {
          RawRow row;
          for (auto& t : sr.terms()) {
            Grade w = lw * t.w * rw;
            if (!(w > floor)) continue;
            Monomial m = lm * t.mon * rm;
            if (m.degree() > spec.degree_cap)
              throw computation_limit_error(
                  "degree cap exceeded while building sieve rows");
            row.push_back({std::move(m), std::move(w), t.c});
          }
          if (!row.empty()) out.push_back(std::move(row));
        }
      }
    };

#ifdef _OPENMP
    if (policy_ == ExecPolicy::parallel && lefts.size() > 64) {
      int nthreads = omp_get_max_threads();
      std::vector<std::vector<RawRow>> chunks(nthreads);
      std::exception_ptr err;
#pragma omp parallel num_threads(nthreads)
      {
        int tid = omp_get_thread_num();
        size_t lo = lefts.size() * tid / nthreads;
        size_t hi = lefts.size() * (tid + 1) / nthreads;
        try {
          build_range(lo, hi, chunks[tid]);
        } catch (...) {
#pragma omp critical
          if (!err) err = std::current_exception();
        }
      }
      if (err) std::rethrow_exception(err);
      for (auto& c : chunks)
        raw.insert(raw.end(), std::make_move_iterator(c.begin()),
                   std::make_move_iterator(c.end()));
    } else
#endif
    {
      build_range(0, lefts.size(), raw);
    }
    if (static_cast<long long>(raw.size()) > row_budget)
      throw computation_limit_error("sieve row budget exceeded");
  }

  /* Pass 2: column table in canonical order. */
  {
    std::vector<std::pair<Monomial, Grade>> cols;
    for (auto& row : raw)
      for (auto& t : row) cols.emplace_back(t.mon, t.w);
    std::sort(cols.begin(), cols.end(), [](const auto& a, const auto& b) {
      return canonical_less(a.first, a.second, b.first, b.second);
    });
    cols.erase(std::unique(cols.begin(), cols.end(),
                           [](const auto& a, const auto& b) {
                             return a.first == b.first;
                           }),
               cols.end());
    if (cols.size() >= (1u << 24))
      throw computation_limit_error("too many sieve columns");
    col_mon_.reserve(cols.size());
    col_w_.reserve(cols.size());
    for (auto& [m, w] : cols) {
      col_id_.emplace(m, static_cast<std::uint32_t>(col_mon_.size()));
      col_mon_.push_back(m);
      col_w_.push_back(w);
    }
    pivot_of_col_.assign(col_mon_.size(), -1);
    users_.assign(col_mon_.size(), {});
  }

  /* Pass 3: pack rows and sort them into a fixed processing order. */
  std::vector<std::vector<std::uint32_t>> packed;
  packed.reserve(raw.size());
  for (auto& row : raw) {
    std::vector<std::uint32_t> pr;
    pr.reserve(row.size());
    for (auto& t : row)
      pr.push_back((col_id_.find(t.mon)->second << 8) | t.c);
    std::sort(pr.begin(), pr.end());
    packed.push_back(std::move(pr));
  }
  raw.clear();
  raw.shrink_to_fit();
  std::sort(packed.begin(), packed.end());

  /* Pass 4: echelonize. Batches are pre-reduced in parallel against the
   * pivot snapshot, then finished serially in order; full reduction modulo
   * a distinct-leads set has a unique normal form, so this matches the
   * serial result exactly. */
  auto to_map = [](const std::vector<std::uint32_t>& r) {
    std::map<std::uint32_t, unsigned> m;
    for (auto t : r) m.emplace(t >> 8, t & 0xffu);
    return m;
  };

  const size_t batch = 256;
  for (size_t start = 0; start < packed.size(); start += batch) {
    size_t end = std::min(packed.size(), start + batch);
    std::vector<std::map<std::uint32_t, unsigned>> pre(end - start);
#ifdef _OPENMP
    if (policy_ == ExecPolicy::parallel && end - start > 16) {
#pragma omp parallel for schedule(dynamic)
      for (size_t i = start; i < end; ++i)
        pre[i - start] = nf(to_map(packed[i]));
    } else
#endif
    {
      for (size_t i = start; i < end; ++i)
        pre[i - start] = nf(to_map(packed[i]));
    }
    for (auto& row : pre) {
      ++result_.rows_processed;
      auto r = nf(row);
      if (!r.empty()) insert_pivot(r);
    }
  }

  /* Dims: monomial counts minus pivots, per grade. */
  result_.dims.floor = floor;
  result_.dims.dims = count_monomials_by_grade(spec, floor);
  for (std::uint32_t c = 0; c < pivot_of_col_.size(); ++c) {
    if (pivot_of_col_[c] < 0) continue;
    ++result_.pivots_per_grade[col_w_[c]];
    long long& d = result_.dims.dims[col_w_[c]];
    if (--d < 0) throw std::logic_error("sieve dims went negative");
  }
  std::erase_if(result_.dims.dims,
                [](const auto& kv) { return kv.second == 0; });
}

std::map<std::uint32_t, unsigned> Sieve::nf(
    const std::map<std::uint32_t, unsigned>& row) const {
  std::map<std::uint32_t, unsigned> m = row;
  const int p = pres_.spec.p;
  auto it = m.begin();
  while (it != m.end()) {
    std::int32_t pid = pivot_of_col_[it->first];
    if (pid < 0) {
      ++it;
      continue;
    }
    std::uint32_t cur = it->first;
    unsigned f = it->second;  // pivot lead coeff is 1
    for (auto t : rows_[pid]) {
      std::uint32_t c = t >> 8;
      unsigned pc = t & 0xffu;
      auto [jt, inserted] = m.emplace(c, 0u);
      jt->second = (jt->second + (p - f % p) * pc) % p;
      if (jt->second == 0) m.erase(jt);
    }
    it = m.upper_bound(cur);
  }
  return m;
}

void Sieve::insert_pivot(const std::map<std::uint32_t, unsigned>& row) {
  const int p = pres_.spec.p;
  std::uint32_t lead = row.begin()->first;
  unsigned scale = inv_mod(row.begin()->second, p);
  std::vector<std::uint32_t> pr;
  pr.reserve(row.size());
  for (auto& [c, coeff] : row) pr.push_back((c << 8) | (coeff * scale % p));
  std::uint32_t pid = static_cast<std::uint32_t>(rows_.size());
  rows_.push_back(pr);
  pivot_of_col_[lead] = static_cast<std::int32_t>(pid);
  for (size_t i = 1; i < pr.size(); ++i) users_[pr[i] >> 8].push_back(pid);

  /* Back-reduce: keep the echelon fully inter-reduced. */
  for (std::uint32_t uid : users_[lead]) {
    auto& urow = rows_[uid];
    auto pos = std::lower_bound(urow.begin(), urow.end(), lead << 8,
                                [](std::uint32_t t, std::uint32_t key) {
                                  return (t >> 8) < (key >> 8);
                                });
    if (pos == urow.end() || (*pos >> 8) != lead) continue;  // stale entry
    unsigned f = *pos & 0xffu;
    std::vector<std::uint32_t> merged;
    merged.reserve(urow.size() + pr.size());
    size_t i = 0, j = 0;
    while (i < urow.size() || j < pr.size()) {
      std::uint32_t ci = i < urow.size() ? urow[i] >> 8 : 0xffffffffu;
      std::uint32_t cj = j < pr.size() ? pr[j] >> 8 : 0xffffffffu;
      if (ci < cj) {
        merged.push_back(urow[i++]);
      } else if (cj < ci) {
        unsigned c = (p - f) * (pr[j] & 0xffu) % p;
        if (c) {
          merged.push_back((cj << 8) | c);
          users_[cj].push_back(uid);
        }
        ++j;
      } else {
        unsigned c = ((urow[i] & 0xffu) + (p - f) * (pr[j] & 0xffu)) % p;
        if (c) merged.push_back((ci << 8) | c);
        ++i;
        ++j;
      }
    }
    urow = std::move(merged);
  }
  users_[lead].clear();
}

TruncatedSeries Sieve::reduce_series(const TruncatedSeries& s) const {
  std::map<std::uint32_t, unsigned> known;
  std::vector<Term> foreign;
  for (auto& t : s.terms()) {
    auto it = col_id_.find(t.mon);
    if (it != col_id_.end())
      known.emplace(it->second, t.c);
    else
      foreign.push_back(t);  // untouched by any row: irreducible
  }
  auto red = nf(known);
  std::vector<Term> terms = std::move(foreign);
  for (auto& [c, coeff] : red)
    terms.push_back({col_mon_[c], col_w_[c], coeff});
  return TruncatedSeries::from_terms(s.spec(), s.floor(), std::move(terms));
}

TruncatedSeries Sieve::normal_form(const GroupWord& w) const {
  return reduce_series(
      word_to_series(w, pres_.spec, pres_.floor, policy_).minus_one());
}

std::vector<long long> uniform_degree_dims(const GradedDims& dims,
                                           const Grade& beta) {
  std::vector<long long> b;
  Grade g;
  for (int k = 0;; ++k) {
    if (k > 0 && !(g > dims.floor)) break;
    b.push_back(dims.at(g));
    g = g * beta;
  }
  for (auto& [gr, n] : dims.dims) {
    bool is_pow = false;
    Grade t;
    for (size_t k = 0; k < b.size(); ++k, t = t * beta)
      if (t == gr) is_pow = true;
    if (!is_pow)
      throw input_error("dims are not uniform powers of the base weight");
  }
  return b;
}

GrowthReport growth_estimate(const std::vector<long long>& b) {
  GrowthReport rep;
  rep.b = b;
  for (size_t k = 1; k < b.size(); ++k)
    rep.roots.push_back(
        std::pow(static_cast<double>(b[k]), 1.0 / static_cast<double>(k)));
  for (size_t k = 1; k < b.size(); ++k)
    for (size_t l = k; k + l < b.size(); ++l)
      if (b[k + l] > b[k] * b[l])
        rep.violations.emplace_back(static_cast<int>(k), static_cast<int>(l));
  if (!rep.roots.empty()) rep.growth_root = rep.roots.back();
  return rep;
}

GsTable gs_series_check(const std::vector<long long>& b, int n,
                        const std::vector<int>& relator_degrees) {
  GsTable table;
  for (size_t k = 0; k < b.size(); ++k) {
    long long c = b[k];
    if (k >= 1) c -= static_cast<long long>(n) * b[k - 1];
    for (int d : relator_degrees)
      if (static_cast<size_t>(d) <= k) c += b[k - d];
    bool pass = k == 0 ? c == 1 : c >= 0;
    table.all_pass = table.all_pass && pass;
    table.rows.push_back({static_cast<int>(k), c, pass});
  }
  return table;
}

std::vector<std::pair<Grade, Rat>> windex_partial(const GradedDims& dims_g,
                                                  const GradedDims& dims_h,
                                                  int p) {
  if (!(dims_g.floor == dims_h.floor))
    throw input_error("windex_partial requires a common floor");
  std::map<Grade, long long, GradeDesc> diffs;
  for (auto& [g, n] : dims_g.dims)
    if (!g.is_one()) diffs[g] += n;
  for (auto& [g, n] : dims_h.dims)
    if (!g.is_one()) diffs[g] -= n;
  std::vector<std::pair<Grade, Rat>> out;
  Rat partial = 1;
  for (auto& [g, d] : diffs) {
    Rat a = g.rat();
    partial *= rat_pow((1 - rat_pow(a, p)) / (1 - a), d);
    out.emplace_back(g, partial);
  }
  return out;
}

}  // namespace gsw
