#include "omn/rieffel.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "omn/errors.hpp"

namespace omn {

namespace {

PiecewiseFunction one() { return PiecewiseFunction::constant(Polynomial(Rational(1))); }

PiecewiseFunction power(const PiecewiseFunction& f, int k) {
  PiecewiseFunction acc = one();
  for (int i = 0; i < k; ++i) acc = acc * f;
  return acc;
}

IdentityCheck zero_check(std::string name, const PiecewiseFunction& f) {
  IdentityCheck check;
  check.name = std::move(name);
  check.witness = nonzero_witness(f);
  check.pass = !check.witness.has_value();
  return check;
}

IdentityCheck equal_check(std::string name, const PiecewiseFunction& lhs, const PiecewiseFunction& rhs) {
  return zero_check(std::move(name), lhs - rhs);
}

/// Exact check that f >= 0 on [0,1); pieces of degree <= 2 are decided through
/// their endpoint and vertex values.
IdentityCheck nonnegative_check(std::string name, const PiecewiseFunction& f) {
  IdentityCheck check;
  check.name = std::move(name);
  check.pass = true;
  for (std::size_t i = 0; i < f.size() && check.pass; ++i) {
    const Polynomial& p = f.pieces()[i];
    const Rational lo = f.breakpoints()[i], hi = f.interval_end(i);
    std::vector<Rational> probes{lo, (lo + hi) / 2};
    // the right end is excluded from the piece, but continuity of p makes the
    // limit there relevant for the infimum
    probes.push_back(hi);
    if (p.degree() == 2) {
      const Rational vertex = -p.coefficient(1) / (2 * p.coefficient(2));
      if (lo < vertex && vertex < hi) probes.push_back(vertex);
    } else if (p.degree() > 2) {
      for (int k = 1; k < 64; ++k) probes.push_back(lo + (hi - lo) * Rational(k, 64));
    }
    for (const auto& t : probes) {
      if (sgn(p(t)) < 0) {
        check.pass = false;
        check.witness = t;
        break;
      }
    }
  }
  return check;
}

std::vector<Word> words_of_length(std::size_t len) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (int letter = 1; letter <= 2; ++letter) {
        Word v = w;
        v.push_back(letter);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

Word slice(const Word& w, std::size_t from) { return Word(w.begin() + static_cast<std::ptrdiff_t>(from), w.end()); }

}  // namespace

ProjectionData derive_data(const PiecewiseFunction& a0, const PiecewiseFunction& b0) {
  ProjectionData d;
  d.a0 = a0;
  d.b0 = b0;
  d.delta1 = PiecewiseFunction::on_interval(Rational(3, 4), Rational(7, 8), Polynomial(Rational(1)));
  d.delta2 = PiecewiseFunction::on_interval(Rational(1, 4), Rational(3, 8), Polynomial(Rational(1)));
  const PiecewiseFunction gap = phi(a0) - phi(a0 * a0);
  d.a1sq = gap * d.delta1;
  d.b1sq = gap * d.delta2;
  return d;
}

ProjectionData build_canonical_data() {
  const PiecewiseFunction a0(
      {Rational(0), Rational(1, 2), Rational(3, 4), Rational(7, 8)},
      {Polynomial(), Polynomial::linear(4, -2), Polynomial::linear(-8, 7), Polynomial()});
  const PiecewiseFunction b0(
      {Rational(0), Rational(1, 4), Rational(3, 8), Rational(1, 2), Rational(3, 4)},
      {Polynomial(Rational(1)), Polynomial::linear(-8, 3), Polynomial(), Polynomial::linear(4, -2),
       Polynomial(Rational(1))});
  return derive_data(a0, b0);
}

bool ConditionReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

ConditionReport check_conditions(const ProjectionData& d) {
  ConditionReport r;
  const PiecewiseFunction& a1sq = d.a1sq;
  const PiecewiseFunction& b1sq = d.b1sq;
  const PiecewiseFunction id = one();
  auto sq = [](const PiecewiseFunction& f) { return f * f; };

  r.checks.push_back(nonnegative_check("a1^2 >= 0", a1sq));
  r.checks.push_back(nonnegative_check("b1^2 >= 0", b1sq));
  r.checks.push_back(zero_check("supp(a1^2) in [3/4,7/8]", a1sq * (id - d.delta1)));
  r.checks.push_back(zero_check("supp(b1^2) in [1/4,3/8]", b1sq * (id - d.delta2)));

  r.checks.push_back(equal_check("(1a) phi(a0) - phi(a0^2) = a1^2 + b1^2 + phi(a1^2)",
                                 phi(d.a0) - phi(d.a0 * d.a0), a1sq + b1sq + phi(a1sq)));
  r.checks.push_back(zero_check("(2a) a1^2 (a0 + phi(a0) - 1)^2 = 0", a1sq * sq(d.a0 + phi(d.a0) - id)));
  r.checks.push_back(zero_check("(3a) a1^2 phi(a1^2) = 0", a1sq * phi(a1sq)));
  r.checks.push_back(zero_check("(3a) a1^2 phi(b1^2) = 0", a1sq * phi(b1sq)));

  r.checks.push_back(equal_check("(1b) phi(b0) - phi(b0^2) = a1^2 + b1^2 + phi(b1^2)",
                                 phi(d.b0) - phi(d.b0 * d.b0), a1sq + b1sq + phi(b1sq)));
  r.checks.push_back(zero_check("(2b) b1^2 (b0 + phi(b0) - 1)^2 = 0", b1sq * sq(d.b0 + phi(d.b0) - id)));
  r.checks.push_back(zero_check("(3b) b1^2 phi(b1^2) = 0", b1sq * phi(b1sq)));
  r.checks.push_back(zero_check("(3b) b1^2 phi(a1^2) = 0", b1sq * phi(a1sq)));

  r.checks.push_back(zero_check("a0 + phi(b0) = 1 on supp(a1)", a1sq * sq(d.a0 + phi(d.b0) - id)));
  r.checks.push_back(zero_check("phi(a0) + b0 = 1 on supp(b1)", b1sq * sq(phi(d.a0) + d.b0 - id)));
  r.checks.push_back(zero_check("a1^2 b1^2 = 0", a1sq * b1sq));

  for (int m = 2; m <= 5; ++m) {
    PiecewiseFunction lhs_a, lhs_b;
    for (int k = 0; k <= m - 2; ++k) {
      lhs_a = lhs_a + power(d.a0, k) * a1sq;
      lhs_b = lhs_b + power(d.b0, k) * b1sq;
    }
    r.checks.push_back(equal_check("sum_{k<=" + std::to_string(m - 2) + "} a0^k a1^2 = (a0 - a0^" +
                                       std::to_string(m) + ") delta1",
                                   lhs_a, (d.a0 - power(d.a0, m)) * d.delta1));
    r.checks.push_back(equal_check("sum_{k<=" + std::to_string(m - 2) + "} b0^k b1^2 = (b0 - b0^" +
                                       std::to_string(m) + ") delta2",
                                   lhs_b, (d.b0 - power(d.b0, m)) * d.delta2));
  }
  return r;
}

std::vector<std::pair<std::string, ProjectionData>> perturbations(const ProjectionData& data) {
  std::vector<std::pair<std::string, ProjectionData>> out;
  const Polynomial bump(Rational(1, 100));
  auto perturb = [&](const std::string& label, PiecewiseFunction ProjectionData::*field) {
    const PiecewiseFunction& f = data.*field;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const Rational lo = f.breakpoints()[i], hi = f.interval_end(i);
      ProjectionData d = data;
      d.*field = f + PiecewiseFunction::on_interval(lo, hi, bump);
      out.emplace_back(label + " +1/100 on [" + pretty_rational(lo) + "," + pretty_rational(hi) + ")", d);
    }
  };
  perturb("a0", &ProjectionData::a0);
  perturb("b0", &ProjectionData::b0);
  perturb("a1^2", &ProjectionData::a1sq);
  perturb("b1^2", &ProjectionData::b1sq);
  return out;
}

NumericFunction contract(const Word& v, const NumericFunction& h, const Word& w) {
  if (v.size() != w.size()) throw InvalidInput("contract needs words of equal length");
  NumericFunction out = h;
  for (std::size_t i = 0; i < v.size(); ++i) out = transfer(out, v[i], w[i]);
  return out;
}

FuncElement operator+(const FuncElement& a, const FuncElement& b) {
  std::vector<FuncTerm> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return FuncElement(std::move(terms));
}

FuncElement operator-(const FuncElement& a, const FuncElement& b) {
  std::vector<FuncTerm> terms = a.terms_;
  for (const auto& t : b.terms_) terms.push_back({t.mu, scale(t.f, -1.0), t.nu});
  return FuncElement(std::move(terms));
}

FuncElement operator*(const FuncElement& a, const FuncElement& b) {
  std::vector<FuncTerm> out;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      const std::size_t common = std::min(x.nu.size(), y.mu.size());
      if (!std::equal(x.nu.begin(), x.nu.begin() + static_cast<std::ptrdiff_t>(common), y.mu.begin())) continue;
      if (x.nu.size() <= y.mu.size()) {
        // f1 S_r = sum_v S_v (S_v^* f1 S_r)
        const Word r = slice(y.mu, x.nu.size());
        for (const auto& v : words_of_length(r.size())) {
          NumericFunction f = contract(v, x.f, r) * y.f;
          if (!f.is_zero()) out.push_back({concat(x.mu, v), std::move(f), y.nu});
        }
      } else {
        // S_r^* f2 = sum_v (S_r^* f2 S_v) S_v^*
        const Word r = slice(x.nu, y.mu.size());
        for (const auto& v : words_of_length(r.size())) {
          NumericFunction f = x.f * contract(r, y.f, v);
          if (!f.is_zero()) out.push_back({x.mu, std::move(f), concat(y.nu, v)});
        }
      }
    }
  }
  return FuncElement(std::move(out));
}

FuncElement adjoint(const FuncElement& x) {
  std::vector<FuncTerm> out;
  for (const auto& t : x.terms()) out.push_back({t.nu, t.f.conj(), t.mu});
  return FuncElement(std::move(out));
}

std::vector<FuncTerm> canonical_terms(const FuncElement& x) {
  std::map<std::int64_t, std::size_t> depth;
  for (const auto& t : x.terms()) {
    const std::int64_t d = static_cast<std::int64_t>(t.mu.size()) - static_cast<std::int64_t>(t.nu.size());
    depth[d] = std::max(depth[d], t.mu.size());
  }
  std::map<std::pair<Word, Word>, NumericFunction> grouped;
  for (const auto& t : x.terms()) {
    const std::int64_t d = static_cast<std::int64_t>(t.mu.size()) - static_cast<std::int64_t>(t.nu.size());
    const std::size_t extra = depth[d] - t.mu.size();
    const auto words = words_of_length(extra);
    for (const auto& w : words) {
      for (const auto& v : words) {
        auto key = std::make_pair(concat(t.mu, w), concat(t.nu, v));
        auto it = grouped.find(key);
        NumericFunction f = contract(w, t.f, v);
        if (it == grouped.end()) grouped.emplace(std::move(key), std::move(f));
        else it->second = it->second + f;
      }
    }
  }
  std::vector<FuncTerm> out;
  for (auto& [key, f] : grouped)
    if (!f.is_zero()) out.push_back({key.first, std::move(f), key.second});
  return out;
}

double max_abs_on_grid(const FuncElement& x, std::size_t grid) {
  double worst = 0.0;
  for (const auto& t : canonical_terms(x)) {
    for (std::size_t j = 0; j < grid; ++j) {
      const Rational s(static_cast<long>(j), static_cast<unsigned long>(grid));
      worst = std::max(worst, std::abs(t.f(s)));
    }
  }
  return worst;
}

FuncMatrix assemble(const ProjectionData& data) {
  const NumericFunction a1 = numeric_sqrt(data.a1sq);
  const NumericFunction b1 = numeric_sqrt(data.b1sq);
  const NumericFunction pa0 = to_numeric(phi(data.a0));
  const NumericFunction pb0 = to_numeric(phi(data.b0));
  const Word e{}, s1{1}, s2{2};
  FuncMatrix p(2, std::vector<FuncElement>(2));
  p[0][0] = FuncElement({{s1, a1, e}, {e, pa0, e}, {e, a1, s1}});
  p[0][1] = FuncElement({{s2, a1, e}, {e, b1, s2}});
  p[1][0] = FuncElement({{s2, b1, e}, {e, a1, s2}});
  p[1][1] = FuncElement({{s1, b1, e}, {e, pb0, e}, {e, b1, s1}});
  return p;
}

SquareReport assemble_and_square(const ProjectionData& data, std::size_t grid, const AlgebraParams& params) {
  if (params.m() != 1 || params.n() != 2)
    throw Unsupported("the projection is defined only for (m,n) = (1,2)");
  if (grid == 0) throw InvalidInput("grid must be positive");
  const FuncMatrix p = assemble(data);
  SquareReport report;
  report.grid = grid;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const FuncElement diff = p[i][0] * p[0][j] + p[i][1] * p[1][j] - p[i][j];
      report.residual = std::max(report.residual, max_abs_on_grid(diff, grid));
      report.residual_doubled = std::max(report.residual_doubled, max_abs_on_grid(diff, 2 * grid));
      report.adjoint_residual =
          std::max(report.adjoint_residual, max_abs_on_grid(p[i][j] - adjoint(p[j][i]), grid));
    }
  }
  return report;
}

Rational kms_trace(const ProjectionData& data) { return (integrate(data.a0) + integrate(data.b0)) / 2; }

BigInt k0_class(const ProjectionData& data) {
  return winding(phi(data.a0 * data.delta1)) + winding(phi(data.b0 * data.delta2));
}

}  // namespace omn
