#include "omn/element.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <unordered_map>

#include "omn/errors.hpp"
#include "omn/shift_rep.hpp"

namespace omn {

Element::Element(const Monomial& mon, Scalar coeff) { add_term(mon, coeff); }

Scalar Element::coefficient(const Monomial& mon) const {
  auto it = terms_.find(mon);
  return it == terms_.end() ? Scalar() : it->second;
}

void Element::add_term(const Monomial& mon, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mon, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

Element& Element::operator+=(const Element& other) {
  for (const auto& [mon, c] : other.terms_) add_term(mon, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  for (const auto& [mon, c] : other.terms_) add_term(mon, -c);
  return *this;
}

Element operator*(const Scalar& c, const Element& a) {
  Element out;
  if (c.is_zero()) return out;
  for (const auto& [mon, coeff] : a.terms_) out.terms_.emplace(mon, c * coeff);
  return out;
}

std::string to_string(const Element& x) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mon, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    if (!(c == Scalar(1))) os << to_string(c) << " ";
    os << to_string(mon);
  }
  return os.str();
}

void validate(const Element& x, const AlgebraParams& params) {
  for (const auto& [mon, c] : x.terms()) validate(mon, params);
}

Element mul(const Element& a, const Element& b, const AlgebraParams& params) {
  Element out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      if (auto prod = mul_monomials(ma, mb, params)) out.add_term(*prod, ca * cb);
  return out;
}

Element adjoint(const Element& a) {
  Element out;
  for (const auto& [mon, c] : a.terms()) out.add_term(adjoint(mon), c.conj());
  return out;
}

Element product(const std::vector<Element>& factors, const AlgebraParams& params) {
  Element acc = Element::one();
  for (const auto& f : factors) acc = mul(acc, f, params);
  return acc;
}

Element cuntz_sum(const AlgebraParams& params) {
  Element out;
  for (int i = 1; i <= params.n(); ++i) out.add_term({{i}, 0, {i}}, Scalar(1));
  return out;
}

Element canonical_endo(const Element& x, const AlgebraParams& params) {
  Element out;
  for (const auto& [mon, c] : x.terms()) {
    for (int i = 1; i <= params.n(); ++i) {
      Monomial image{concat({i}, mon.mu), mon.k, concat({i}, mon.nu)};
      out.add_term(image, c);
    }
  }
  return out;
}

Element canonical_endo_power(const Element& x, int l, const AlgebraParams& params) {
  if (l < 0) throw InvalidInput("canonical_endo_power needs l >= 0");
  Element out = x;
  for (int i = 0; i < l; ++i) out = canonical_endo(out, params);
  return out;
}

Element homogeneous_part(const Element& x, std::int64_t degree) {
  Element out;
  for (const auto& [mon, c] : x.terms())
    if (gauge_degree(mon) == degree) out.add_term(mon, c);
  return out;
}

Element expectation(const Element& x) { return homogeneous_part(x, 0); }

Scalar kms_state(const Element& x, const AlgebraParams& params) {
  Scalar total;
  for (const auto& [mon, c] : x.terms()) {
    if (mon.k != 0 || mon.mu != mon.nu) continue;
    BigInt den = 1;
    for (std::size_t i = 0; i < mon.mu.size(); ++i) den *= params.n();
    total += c * Scalar(Rational(1, den));
  }
  total.re.canonicalize();
  total.im.canonicalize();
  return total;
}

namespace {

/// Restriction of a family of elements to the cells of the index set.
///
/// The ranges of S_V for the words V = W i (W a prefix of some nu, W i not)
/// partition Z[1/m]. On the cell of V every term whose nu is a prefix of V
/// acts as e_{g_V(p)} -> e_{h(p)} with h a total affine map of p, and every
/// other term vanishes. Distinct affine maps agree at most at one p, so at a
/// single p avoiding all those points the output indices separate the maps and
/// the coefficient attached to each index is the sum over one affine class.
/// A family restricted to a cell is therefore determined by that one sample.
class CellSampler {
 public:
  struct Entry {
    std::size_t element;
    std::size_t column;
    Scalar value;
  };

  CellSampler(const std::vector<const Element*>& elements, const AlgebraParams& params)
      : params_(params) {
    if (params.n() == 1)
      throw Unsupported("zero-test unsupported; representation faithfulness not guaranteed (n = 1)");
    for (std::size_t e = 0; e < elements.size(); ++e) {
      for (const auto& [mon, c] : elements[e]->terms()) {
        validate(mon, params);
        auto [it, inserted] = term_index_.try_emplace(mon, terms_.size());
        if (inserted) terms_.push_back({mon, word_map(mon.mu, Variant::A, params), {}});
        terms_[it->second].uses.emplace_back(e, c);
      }
    }
    for (std::size_t t = 0; t < terms_.size(); ++t) {
      const Word& nu = terms_[t].mon.nu;
      by_nu_[nu].push_back(t);
      for (std::size_t len = 0; len <= nu.size(); ++len) nodes_.insert(Word(nu.begin(), nu.begin() + len));
    }
    nodes_.insert(Word{});
  }

  std::size_t term_count() const { return terms_.size(); }

  template <class Visit>
  void for_each_entry(Visit&& visit) const {
    std::size_t column_base = 0;
    for (const Word& w : nodes_) {
      for (int letter = 1; letter <= params_.n(); ++letter) {
        Word v = w;
        v.push_back(letter);
        if (nodes_.count(v)) continue;
        column_base = sample_cell(w, v, column_base, visit);
      }
    }
  }

 private:
  struct Term {
    Monomial mon;
    AffineMap mu_map;
    std::vector<std::pair<std::size_t, Scalar>> uses;
  };

  template <class Visit>
  std::size_t sample_cell(const Word& w, const Word& v, std::size_t column_base, Visit& visit) const {
    std::vector<std::pair<std::size_t, AffineMap>> active;
    for (std::size_t len = 0; len <= w.size(); ++len) {
      auto it = by_nu_.find(Word(w.begin(), w.begin() + len));
      if (it == by_nu_.end()) continue;
      const AffineMap rest = word_map(Word(v.begin() + len, v.end()), Variant::A, params_);
      for (std::size_t t : it->second) {
        AffineMap shift;
        shift.offset = Rational(terms_[t].mon.k);
        active.emplace_back(t, compose(terms_[t].mu_map, compose(shift, rest)));
      }
    }
    if (active.empty()) return column_base;

    std::vector<AffineMap> distinct;
    for (const auto& [t, h] : active)
      if (std::find(distinct.begin(), distinct.end(), h) == distinct.end()) distinct.push_back(h);
    std::set<Rational, RationalLess> avoid;
    for (std::size_t a = 0; a < distinct.size(); ++a)
      for (std::size_t b = a + 1; b < distinct.size(); ++b)
        if (distinct[a].scale != distinct[b].scale)
          avoid.insert((distinct[b].offset - distinct[a].offset) / (distinct[a].scale - distinct[b].scale));
    Rational p = 0;
    while (avoid.count(p)) p += 1;

    std::map<Rational, std::size_t, RationalLess> columns;
    for (const auto& [t, h] : active) {
      auto [it, inserted] = columns.try_emplace(h(p), column_base + columns.size());
      for (const auto& [e, c] : terms_[t].uses) visit(Entry{e, it->second, c});
    }
    return column_base + columns.size();
  }

  const AlgebraParams& params_;
  std::map<Monomial, std::size_t> term_index_;
  std::vector<Term> terms_;
  std::map<Word, std::vector<std::size_t>> by_nu_;
  std::set<Word> nodes_;
};

using SparseRow = std::map<std::size_t, Scalar>;

/// Incremental row echelon form over Q(i).
class SparseRank {
 public:
  bool insert(SparseRow row) {
    drop_zeros(row);
    while (!row.empty()) {
      auto it = row.begin();
      auto pivot = pivots_.find(it->first);
      if (pivot == pivots_.end()) break;
      const Scalar factor = it->second;
      for (const auto& [col, value] : rows_[pivot->second]) {
        Scalar& slot = row[col];
        slot -= factor * value;
        if (slot.is_zero()) row.erase(col);
      }
    }
    if (row.empty()) return false;
    const Scalar lead_inv = row.begin()->second.inverse();
    for (auto& [col, value] : row) value = lead_inv * value;
    pivots_.emplace(row.begin()->first, rows_.size());
    rows_.push_back(std::move(row));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  static void drop_zeros(SparseRow& row) {
    for (auto it = row.begin(); it != row.end();) it = it->second.is_zero() ? row.erase(it) : std::next(it);
  }

  std::vector<SparseRow> rows_;
  std::map<std::size_t, std::size_t> pivots_;
};

}  // namespace

bool is_zero(const Element& x, const AlgebraParams& params) {
  if (params.n() == 1)
    throw Unsupported("zero-test unsupported; representation faithfulness not guaranteed (n = 1)");
  if (x.empty()) return true;
  const CellSampler sampler({&x}, params);
  std::map<std::size_t, Scalar> sums;
  sampler.for_each_entry([&](const CellSampler::Entry& e) { sums[e.column] += e.value; });
  return std::all_of(sums.begin(), sums.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

std::size_t span_dimension(const std::vector<Element>& elements, const AlgebraParams& params,
                           std::size_t max_terms) {
  std::vector<const Element*> ptrs;
  for (const auto& e : elements) ptrs.push_back(&e);
  const CellSampler sampler(ptrs, params);
  if (sampler.term_count() > max_terms)
    throw BoundExceeded("span_dimension: " + std::to_string(sampler.term_count()) + " distinct terms exceed bound " +
                        std::to_string(max_terms));
  std::vector<SparseRow> rows(elements.size());
  sampler.for_each_entry([&](const CellSampler::Entry& e) { rows[e.element][e.column] += e.value; });
  SparseRank rank;
  for (auto& row : rows) rank.insert(std::move(row));
  return rank.rank();
}

namespace {

Word parse_word(const std::string& text, const std::string& token) {
  Word w;
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw InvalidInput("unbalanced braces in '" + token + "'");
    std::stringstream ss(text.substr(1, text.size() - 2));
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit))
        throw InvalidInput("bad letter in '" + token + "'");
      w.push_back(std::stoi(part));
    }
    return w;
  }
  if (text.empty()) throw InvalidInput("empty word in '" + token + "'");
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw InvalidInput("bad letter in '" + token + "'");
    w.push_back(ch - '0');
  }
  return w;
}

}  // namespace

Element parse_expression(const std::string& text, const AlgebraParams& params) {
  std::istringstream is(text);
  std::string token;
  Element acc = Element::one();
  bool any = false;
  while (is >> token) {
    any = true;
    Monomial factor;
    if (token == "1") {
      factor = Monomial::one();
    } else if (token == "z") {
      factor = Monomial::z(1);
    } else if (token.rfind("z^", 0) == 0) {
      std::string exp = token.substr(2);
      if (exp.size() >= 2 && exp.front() == '{' && exp.back() == '}') exp = exp.substr(1, exp.size() - 2);
      try {
        std::size_t used = 0;
        factor = Monomial::z(std::stoll(exp, &used));
        if (used != exp.size()) throw InvalidInput("");
      } catch (const std::exception&) {
        throw InvalidInput("bad exponent in '" + token + "'");
      }
    } else if (token.rfind("S_", 0) == 0) {
      std::string body = token.substr(2);
      bool star = false;
      if (body.size() >= 2 && body.compare(body.size() - 2, 2, "^*") == 0) {
        star = true;
        body.resize(body.size() - 2);
      } else if (!body.empty() && body.back() == '*') {
        star = true;
        body.pop_back();
      }
      const Word w = parse_word(body, token);
      factor = star ? Monomial{{}, 0, w} : Monomial{w, 0, {}};
    } else {
      throw InvalidInput("unrecognized factor '" + token + "' (expected 1, z, z^k, S_w or S_w*)");
    }
    validate(factor, params);
    acc = mul(acc, Element(factor), params);
  }
  if (!any) throw InvalidInput("empty expression");
  return acc;
}

}  // namespace omn
