#include <algorithm>
#include <set>

#include "mcmd/reductions.hpp"

namespace mcmd::reductions {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::kMalformed, what); }

[[noreturn]] void invalid_rep(const std::string& what) {
  throw Error(ErrorCode::kInvalidRepresentation, what);
}

bool inside(const Interval& span, const Rational& x) { return span.lo <= x && x <= span.hi; }

bool overlap(const Interval& a, const Interval& b) { return a.lo <= b.hi && b.lo <= a.hi; }

long side(long row) { return row > 0 ? 1 : -1; }

// Index of the variable segment containing x, or -1.
int variable_at(const RectilinearRep& rep, const Rational& x) {
  for (std::size_t v = 0; v < rep.variable_segments.size(); ++v)
    if (inside(rep.variable_segments[v], x)) return static_cast<int>(v);
  return -1;
}

Rational floor_of(const Rational& q) {
  Integer z;
  mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(z);
}

Rational ceil_of(const Rational& q) {
  Integer z;
  mpz_cdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(z);
}

}  // namespace

void MonotoneFormula::validate() const {
  if (num_variables < 0) malformed("negative variable count");
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    const auto& lits = clauses[c].literals;
    if (lits.empty() || lits.size() > 3)
      malformed("clause " + std::to_string(c + 1) + " must have 1 to 3 literals");
    std::set<int> seen;
    for (int v : lits) {
      if (v < 1 || v > num_variables)
        malformed("clause " + std::to_string(c + 1) + " uses unknown variable " + std::to_string(v));
      if (!seen.insert(v).second)
        malformed("clause " + std::to_string(c + 1) + " repeats variable " + std::to_string(v));
    }
  }
}

bool MonotoneFormula::satisfied_by(const std::vector<bool>& values) const {
  if (values.size() != static_cast<std::size_t>(num_variables))
    throw Error(ErrorCode::kIdMismatch, "value count does not match variable count");
  for (const auto& clause : clauses) {
    bool want = clause.polarity == Polarity::kPositive;
    bool sat = std::any_of(clause.literals.begin(), clause.literals.end(),
                           [&](int v) { return values[v - 1] == want; });
    if (!sat) return false;
  }
  return true;
}

std::vector<std::vector<bool>> satisfying_assignments(const MonotoneFormula& formula) {
  formula.validate();
  if (formula.num_variables > 20) throw Error(ErrorCode::kTooLarge, "more than 20 variables");
  std::vector<std::vector<bool>> out;
  const unsigned long total = 1UL << formula.num_variables;
  std::vector<bool> values(formula.num_variables);
  for (unsigned long mask = 0; mask < total; ++mask) {
    for (int v = 0; v < formula.num_variables; ++v) values[v] = (mask >> v) & 1;
    if (formula.satisfied_by(values)) out.push_back(values);
  }
  return out;
}

void validate(const RectilinearRep& rep) {
  const auto& vars = rep.variable_segments;
  for (const auto& seg : vars)
    if (seg.lo > seg.hi) invalid_rep("variable segment with lo > hi");
  for (std::size_t a = 0; a < vars.size(); ++a)
    for (std::size_t b = a + 1; b < vars.size(); ++b)
      if (overlap(vars[a], vars[b]))
        invalid_rep("variable segments " + std::to_string(a + 1) + " and " +
                    std::to_string(b + 1) + " overlap");

  const auto& clauses = rep.clause_segments;
  if (clauses.size() != rep.legs.size()) invalid_rep("one leg list per clause required");
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    const auto name = "clause " + std::to_string(c + 1);
    if (clauses[c].row == 0) invalid_rep(name + " lies on the variable axis");
    if (clauses[c].span.lo > clauses[c].span.hi) invalid_rep(name + " has lo > hi");
    if (rep.legs[c].empty()) invalid_rep(name + " has no legs");
    for (const auto& x : rep.legs[c]) {
      if (!inside(clauses[c].span, x)) invalid_rep(name + " has a leg outside its span");
      if (variable_at(rep, x) < 0) invalid_rep(name + " has a leg that misses every variable");
    }
  }

  for (std::size_t c = 0; c < clauses.size(); ++c) {
    for (std::size_t d = 0; d < clauses.size(); ++d) {
      if (side(clauses[c].row) != side(clauses[d].row)) continue;
      const auto pair = std::to_string(c + 1) + " and " + std::to_string(d + 1);
      if (c < d && clauses[c].row == clauses[d].row && overlap(clauses[c].span, clauses[d].span))
        invalid_rep("clauses " + pair + " overlap on one row");
      for (std::size_t l = 0; l < rep.legs[c].size(); ++l) {
        const auto& x = rep.legs[c][l];
        if (c == d) {
          for (std::size_t k = l + 1; k < rep.legs[c].size(); ++k)
            if (rep.legs[c][k] == x) invalid_rep("clause " + std::to_string(c + 1) + " repeats a leg");
          continue;
        }
        if (std::find(rep.legs[d].begin(), rep.legs[d].end(), x) != rep.legs[d].end())
          invalid_rep("clauses " + pair + " share a leg position");
        if (std::abs(clauses[d].row) < std::abs(clauses[c].row) && inside(clauses[d].span, x))
          invalid_rep("a leg of clause " + std::to_string(c + 1) + " crosses clause " +
                      std::to_string(d + 1));
      }
    }
  }
}

void validate(const MonotoneFormula& formula, const RectilinearRep& rep) {
  try {
    formula.validate();
  } catch (const Error& e) {
    invalid_rep(e.what());
  }
  validate(rep);
  if (rep.variable_segments.size() != static_cast<std::size_t>(formula.num_variables))
    invalid_rep("variable count differs from the formula");
  if (rep.clause_segments.size() != formula.clauses.size())
    invalid_rep("clause count differs from the formula");
  for (std::size_t c = 0; c < formula.clauses.size(); ++c) {
    const auto& clause = formula.clauses[c];
    const auto name = "clause " + std::to_string(c + 1);
    if ((clause.polarity == Polarity::kPositive) != (rep.clause_segments[c].row > 0))
      invalid_rep(name + " is drawn on the wrong side");
    if (rep.legs[c].size() != clause.literals.size())
      invalid_rep(name + " has a different number of legs than literals");
    for (std::size_t l = 0; l < clause.literals.size(); ++l)
      if (variable_at(rep, rep.legs[c][l]) != clause.literals[l] - 1)
        invalid_rep(name + " leg " + std::to_string(l + 1) + " does not land on its variable");
  }
}

GridExtent grid_extent(const RectilinearRep& rep) {
  GridExtent ext;
  long up = 0, down = 0;
  for (const auto& seg : rep.clause_segments) {
    if (seg.row > 0) up = std::max(up, seg.row);
    else down = std::max(down, -seg.row);
  }
  ext.rows = up + down + 1;
  std::vector<Rational> xs;
  for (const auto& seg : rep.variable_segments) {
    xs.push_back(seg.lo);
    xs.push_back(seg.hi);
  }
  for (const auto& seg : rep.clause_segments) {
    xs.push_back(seg.span.lo);
    xs.push_back(seg.span.hi);
  }
  if (!xs.empty()) {
    auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
    Rational span = ceil_of(*hi) - floor_of(*lo) + 1;
    ext.columns = span.get_num().get_si();
  }
  return ext;
}

RectilinearRep grid_embed(const RectilinearRep& rep) {
  validate(rep);
  const std::size_t nv = rep.variable_segments.size();

  std::vector<std::vector<Rational>> legs_on(nv);
  for (const auto& legs : rep.legs)
    for (const auto& x : legs) legs_on[variable_at(rep, x)].push_back(x);

  std::vector<Rational> columns;
  for (std::size_t v = 0; v < nv; ++v) {
    if (legs_on[v].empty()) columns.push_back(rep.variable_segments[v].lo);
    else columns.insert(columns.end(), legs_on[v].begin(), legs_on[v].end());
  }
  std::sort(columns.begin(), columns.end());
  columns.erase(std::unique(columns.begin(), columns.end()), columns.end());
  auto column = [&](const Rational& x) {
    auto it = std::lower_bound(columns.begin(), columns.end(), x);
    return Rational(static_cast<long>(it - columns.begin()));
  };

  std::vector<long> up, down;
  for (const auto& seg : rep.clause_segments) (seg.row > 0 ? up : down).push_back(std::abs(seg.row));
  for (auto* rows : {&up, &down}) {
    std::sort(rows->begin(), rows->end());
    rows->erase(std::unique(rows->begin(), rows->end()), rows->end());
  }
  auto row = [&](long r) {
    const auto& rows = r > 0 ? up : down;
    long k = std::lower_bound(rows.begin(), rows.end(), std::abs(r)) - rows.begin() + 1;
    return r > 0 ? k : -k;
  };

  RectilinearRep out;
  for (std::size_t v = 0; v < nv; ++v) {
    if (legs_on[v].empty()) {
      auto c = column(rep.variable_segments[v].lo);
      out.variable_segments.push_back({c, c});
    } else {
      auto [lo, hi] = std::minmax_element(legs_on[v].begin(), legs_on[v].end());
      out.variable_segments.push_back({column(*lo), column(*hi)});
    }
  }
  for (std::size_t c = 0; c < rep.clause_segments.size(); ++c) {
    std::vector<Rational> legs;
    for (const auto& x : rep.legs[c]) legs.push_back(column(x));
    auto [lo, hi] = std::minmax_element(legs.begin(), legs.end());
    out.clause_segments.push_back({{*lo, *hi}, row(rep.clause_segments[c].row)});
    out.legs.push_back(std::move(legs));
  }
  return out;
}

namespace {

Clause clause(Polarity p, std::vector<int> lits) { return {p, std::move(lits)}; }

Interval iv(long lo, long hi) { return {Rational(lo), Rational(hi)}; }

std::vector<Rational> xs(std::initializer_list<long> values) {
  std::vector<Rational> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

ClauseSegment row_seg(const std::vector<Rational>& legs, long row) {
  auto [lo, hi] = std::minmax_element(legs.begin(), legs.end());
  return {{*lo, *hi}, row};
}

Fixture make(std::string name, int nv, std::vector<Clause> clauses, std::vector<Interval> vars,
             std::vector<std::pair<std::vector<Rational>, long>> legs) {
  Fixture f;
  f.name = std::move(name);
  f.formula.num_variables = nv;
  f.formula.clauses = std::move(clauses);
  f.rep.variable_segments = std::move(vars);
  for (auto& [l, row] : legs) {
    f.rep.clause_segments.push_back(row_seg(l, row));
    f.rep.legs.push_back(l);
  }
  return f;
}

}  // namespace

std::vector<Fixture> builtin_fixtures() {
  const auto P = Polarity::kPositive;
  const auto N = Polarity::kNegative;
  std::vector<Fixture> out;

  // Axis order v2 v4 v1 v3; the second clause nests between the first
  // clause's legs on v2 and v1.
  out.push_back(make("three-clause", 4,
                     {clause(P, {1, 2, 3}), clause(P, {1, 2, 4}), clause(N, {1, 2, 4})},
                     {iv(7, 10), iv(0, 3), iv(11, 13), iv(4, 6)},
                     {{xs({8, 1, 12}), 5}, {xs({7, 2, 5}), 2}, {xs({9, 0, 4}), -3}}));

  out.push_back(make("single-positive", 3, {clause(P, {1, 2, 3})}, {iv(0, 0), iv(2, 2), iv(4, 4)},
                     {{xs({0, 2, 4}), 1}}));

  out.push_back(make("single-negative", 3, {clause(N, {1, 2, 3})}, {iv(0, 0), iv(2, 2), iv(4, 4)},
                     {{xs({0, 2, 4}), -2}}));

  out.push_back(make("both-sides", 3, {clause(P, {1, 2, 3}), clause(N, {1, 2, 3})},
                     {iv(0, 2), iv(3, 5), iv(6, 8)},
                     {{xs({1, 4, 7}), 1}, {xs({1, 4, 7}), -1}}));

  out.push_back(make("nested-positive", 5,
                     {clause(P, {1, 3, 5}), clause(P, {1, 2, 3}), clause(N, {2, 4, 5})},
                     {iv(0, 2), iv(3, 3), iv(4, 6), iv(7, 7), iv(8, 9)},
                     {{xs({0, 6, 9}), 3}, {xs({2, 3, 4}), 1}, {xs({3, 7, 8}), -1}}));

  out.push_back(make("unused-variable", 5, {clause(P, {1, 2, 4}), clause(N, {2, 4, 5})},
                     {iv(0, 1), iv(2, 4), iv(5, 5), iv(6, 8), iv(9, 10)},
                     {{xs({0, 3, 7}), 1}, {xs({2, 8, 10}), -1}}));

  out.push_back(make("four-clause", 6,
                     {clause(P, {1, 2, 3}), clause(P, {4, 5, 6}), clause(N, {1, 3, 6}),
                      clause(N, {3, 4, 5})},
                     {iv(0, 1), iv(2, 2), iv(3, 5), iv(6, 7), iv(8, 9), iv(10, 12)},
                     {{xs({1, 2, 3}), 1},
                      {xs({6, 8, 11}), 1},
                      {xs({0, 4, 12}), -2},
                      {xs({5, 7, 9}), -1}}));
  return out;
}

}  // namespace mcmd::reductions
