#include "synq/ncalg.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <tuple>

namespace synq {

int TensorWord::degree() const {
  int d = 0;
  for (const Letters& leg : legs) d += static_cast<int>(leg.size());
  return d;
}

bool TensorWord::is_identity() const { return degree() == 0; }

bool TensorWord::operator<(const TensorWord& o) const {
  int da = degree(), db = o.degree();
  if (da != db) return da < db;
  return legs < o.legs;
}

NCElement::NCElement(int leg_count) : leg_count_(leg_count) {
  if (leg_count < 1) throw Error("ncalg: leg count must be at least 1");
}

NCElement NCElement::zero(int leg_count) { return NCElement(leg_count); }

NCElement NCElement::one(int leg_count) {
  NCElement e(leg_count);
  TensorWord w;
  w.legs.resize(static_cast<size_t>(leg_count));
  e.terms_.emplace(std::move(w), Scalar(1));
  return e;
}

NCElement NCElement::generator(Generator g) {
  NCElement e(1);
  TensorWord w;
  w.legs.push_back({g});
  e.terms_.emplace(std::move(w), Scalar(1));
  return e;
}

NCElement NCElement::from_word(TensorWord w, Scalar coeff) {
  if (w.legs.empty()) throw Error("ncalg: word must have at least one leg");
  NCElement e(w.leg_count());
  if (coeff != 0) e.terms_.emplace(std::move(w), std::move(coeff));
  return e;
}

NCElement NCElement::tensor(const NCElement& a, const NCElement& b) {
  NCElement e(a.leg_count_ + b.leg_count_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      TensorWord w = wa;
      w.legs.insert(w.legs.end(), wb.legs.begin(), wb.legs.end());
      e.add_term(std::move(w), ca * cb);
    }
  return e;
}

int NCElement::degree() const {
  int d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.degree());
  return d;
}

void NCElement::add_term(TensorWord w, Scalar c) {
  if (w.leg_count() != leg_count_)
    throw Error("ncalg: leg-count mismatch in add_term");
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(std::move(w), std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NCElement& NCElement::operator+=(const NCElement& o) {
  if (o.leg_count_ != leg_count_)
    throw Error("ncalg: leg-count mismatch in addition");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCElement& NCElement::operator-=(const NCElement& o) {
  if (o.leg_count_ != leg_count_)
    throw Error("ncalg: leg-count mismatch in subtraction");
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCElement& NCElement::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

NCElement NCElement::operator-() const {
  NCElement e(*this);
  for (auto& [w, c] : e.terms_) c = -c;
  return e;
}

NCElement operator*(const NCElement& a, const NCElement& b) {
  if (a.leg_count() != b.leg_count())
    throw Error("ncalg: leg-count mismatch in multiplication");
  NCElement e(a.leg_count());
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      TensorWord w = wa;
      for (size_t leg = 0; leg < w.legs.size(); ++leg)
        w.legs[leg].insert(w.legs[leg].end(), wb.legs[leg].begin(),
                           wb.legs[leg].end());
      e.add_term(std::move(w), ca * cb);
    }
  return e;
}

NCElement NCElement::adjoint() const {
  NCElement e(leg_count_);
  for (const auto& [w, c] : terms_) {
    TensorWord r = w;
    for (Letters& leg : r.legs) std::reverse(leg.begin(), leg.end());
    e.add_term(std::move(r), c);  // rational coefficients are self-conjugate
  }
  return e;
}

namespace {

// Letter-level rewrite of one leg word under R1/R2/(R3), leftmost-innermost.
// Returns nullopt when the word rewrites to zero.
std::optional<Letters> reduce_word(Letters w, const GameSpec& spec,
                                   Variant variant) {
  size_t i = 0;
  while (w.size() >= 2 && i + 1 < w.size()) {
    const Generator& g1 = w[i];
    const Generator& g2 = w[i + 1];
    if (g1.row == g2.row) {
      if (g1.col != g2.col) return std::nullopt;  // R1, a != b
      w.erase(w.begin() + static_cast<long>(i) + 1);  // R1, projection
      if (i > 0) --i;
      continue;
    }
    if (!spec.allows(g1.col, g2.col, g1.row, g2.row))
      return std::nullopt;  // R2
    if (variant == Variant::bistochastic && g1.col == g2.col)
      return std::nullopt;  // R3, x != y
    ++i;
  }
  return w;
}

bool letter_in_range(const Generator& g, const GameSpec& spec) {
  return g.row >= 0 && g.row < spec.inputs && g.col >= 0 &&
         g.col < spec.outputs;
}

// Rewrites every leg of every term; drops killed terms, merges collisions.
std::map<TensorWord, Scalar> rule_reduce_terms(const NCElement& e,
                                               const GameSpec& spec,
                                               Variant variant) {
  std::map<TensorWord, Scalar> out;
  for (const auto& [w, c] : e.terms()) {
    TensorWord r;
    r.legs.reserve(w.legs.size());
    bool killed = false;
    for (const Letters& leg : w.legs) {
      for (const Generator& g : leg)
        if (!letter_in_range(g, spec))
          throw Error("ncalg: generator index out of range for the game");
      auto red = reduce_word(leg, spec, variant);
      if (!red) {
        killed = true;
        break;
      }
      r.legs.push_back(std::move(*red));
    }
    if (killed) continue;
    auto it = out.find(r);
    if (it == out.end())
      out.emplace(std::move(r), c);
    else {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

// Key of a sum-collapse candidate: one letter slot in one leg, everything
// else fixed. Row sweeps vary the column over O, column sweeps (bistochastic
// only) vary the row over I.
struct SweepKey {
  bool column = false;
  int leg = 0;
  std::vector<Letters> other_legs;
  Letters prefix;
  Letters suffix;
  int fixed = 0;  // row for a row sweep, column for a column sweep

  auto operator<=>(const SweepKey&) const = default;
};

struct SweepMember {
  Scalar coeff;
  TensorWord word;
};

// Applies the first (in SweepKey order) complete equal-coefficient sweep,
// replacing the family by coeff * (word with the letter removed), rule-
// reduced. Returns false when no sweep applies.
bool apply_one_sum_collapse(std::map<TensorWord, Scalar>& terms,
                            const GameSpec& spec, Variant variant) {
  std::map<SweepKey, std::map<int, SweepMember>> groups;
  for (const auto& [w, c] : terms) {
    for (size_t leg = 0; leg < w.legs.size(); ++leg) {
      const Letters& word = w.legs[leg];
      std::vector<Letters> others;
      others.reserve(w.legs.size() - 1);
      for (size_t m = 0; m < w.legs.size(); ++m)
        if (m != leg) others.push_back(w.legs[m]);
      for (size_t pos = 0; pos < word.size(); ++pos) {
        Letters prefix(word.begin(), word.begin() + static_cast<long>(pos));
        Letters suffix(word.begin() + static_cast<long>(pos) + 1, word.end());
        const Generator& g = word[pos];
        groups[SweepKey{false, static_cast<int>(leg), others, prefix, suffix,
                        g.row}]
            .insert({g.col, {c, w}});
        if (variant == Variant::bistochastic)
          groups[SweepKey{true, static_cast<int>(leg), others, prefix, suffix,
                          g.col}]
              .insert({g.row, {c, w}});
      }
    }
  }

  for (const auto& [key, members] : groups) {
    const int family = key.column ? spec.inputs : spec.outputs;
    if (static_cast<int>(members.size()) != family) continue;
    const Scalar& c = members.begin()->second.coeff;
    bool equal = true;
    for (const auto& [idx, m] : members)
      if (m.coeff != c) {
        equal = false;
        break;
      }
    if (!equal) continue;

    for (const auto& [idx, m] : members) terms.erase(m.word);
    Letters merged = key.prefix;
    merged.insert(merged.end(), key.suffix.begin(), key.suffix.end());
    auto red = reduce_word(std::move(merged), spec, variant);
    if (red) {
      TensorWord nw;
      size_t oi = 0;
      for (int m = 0; m < static_cast<int>(key.other_legs.size()) + 1; ++m) {
        if (m == key.leg)
          nw.legs.push_back(*red);
        else
          nw.legs.push_back(key.other_legs[oi++]);
      }
      auto it = terms.find(nw);
      if (it == terms.end())
        terms.emplace(std::move(nw), c);
      else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
      }
    }
    return true;
  }
  return false;
}

}  // namespace

NCElement normalize(const NCElement& e, const GameSpec& spec,
                    Variant variant) {
  if (variant == Variant::bistochastic && spec.inputs != spec.outputs)
    throw Error("ncalg: bistochastic variant requires |O| = |I|");
  std::map<TensorWord, Scalar> terms = rule_reduce_terms(e, spec, variant);
  while (apply_one_sum_collapse(terms, spec, variant)) {
  }
  NCElement out(e.leg_count());
  for (auto& [w, c] : terms) out.add_term(w, c);
  return out;
}

namespace {

// R-irreducible single-leg words up to max_len, grouped by length. The
// cap aborts the enumeration (caller reports unresolved).
std::optional<std::vector<std::vector<Letters>>> reduced_words_by_length(
    const GameSpec& spec, Variant variant, int max_len, size_t cap) {
  std::vector<std::vector<Letters>> by_len(1, {Letters{}});
  size_t total = 1;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Letters> next;
    for (const Letters& w : by_len.back()) {
      for (int x = 0; x < spec.inputs; ++x)
        for (int a = 0; a < spec.outputs; ++a) {
          Generator g{x, a};
          if (!w.empty()) {
            const Generator& p = w.back();
            if (p.row == g.row) continue;
            if (!spec.allows(p.col, g.col, p.row, g.row)) continue;
            if (variant == Variant::bistochastic && p.col == g.col) continue;
          }
          Letters n = w;
          n.push_back(g);
          next.push_back(std::move(n));
          if (++total > cap) return std::nullopt;
        }
    }
    by_len.push_back(std::move(next));
  }
  return by_len;
}

using SparseVec = std::map<TensorWord, Scalar>;

void axpy(SparseVec& v, const Scalar& c, const SparseVec& row) {
  for (const auto& [w, rc] : row) {
    auto it = v.find(w);
    if (it == v.end()) {
      v.emplace(w, c * rc);
    } else {
      it->second += c * rc;
      if (it->second == 0) v.erase(it);
    }
  }
}

// Reduces v against the monic pivot rows (keyed by leading = largest word).
void eliminate(SparseVec& v, const std::map<TensorWord, SparseVec>& pivots) {
  while (!v.empty()) {
    bool reduced = false;
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
      auto p = pivots.find(it->first);
      if (p != pivots.end()) {
        axpy(v, -it->second, p->second);
        reduced = true;
        break;
      }
    }
    if (!reduced) return;
  }
}

SparseVec rule_reduced_vec(const NCElement& e, const GameSpec& spec,
                           Variant variant) {
  return rule_reduce_terms(e, spec, variant);
}

// One contexted sum relation u*(sum_g letter - 1)*v placed at `leg`, with
// fixed words on the other legs; rule-reduced term by term.
SparseVec contexted_sum_relation(const GameSpec& spec, Variant variant,
                                 int legs, int leg,
                                 const std::vector<Letters>& others,
                                 const Letters& u, const Letters& v,
                                 bool column, int fixed) {
  NCElement e(legs);
  const int family = column ? spec.inputs : spec.outputs;
  auto make_word = [&](const Letters& mid) {
    TensorWord w;
    size_t oi = 0;
    for (int m = 0; m < legs; ++m) {
      if (m == leg) {
        Letters full = u;
        full.insert(full.end(), mid.begin(), mid.end());
        full.insert(full.end(), v.begin(), v.end());
        w.legs.push_back(std::move(full));
      } else {
        w.legs.push_back(others[oi++]);
      }
    }
    return w;
  };
  for (int idx = 0; idx < family; ++idx) {
    Generator g = column ? Generator{idx, fixed} : Generator{fixed, idx};
    e.add_term(make_word({g}), 1);
  }
  e.add_term(make_word({}), -1);
  return rule_reduced_vec(e, spec, variant);
}

}  // namespace

EqualityResult equal_mod_relations(const NCElement& lhs, const NCElement& rhs,
                                   const GameSpec& spec, Variant variant,
                                   int degree_bound) {
  if (lhs.leg_count() != rhs.leg_count())
    throw Error("ncalg: leg-count mismatch in equal_mod_relations");
  if (degree_bound < 1) throw Error("ncalg: degree bound must be positive");
  NCElement diff = lhs - rhs;
  if (diff.degree() > degree_bound)
    throw Error("ncalg: degree_bound too small to contain the inputs");
  NCElement d = normalize(diff, spec, variant);
  if (d.is_zero()) return {EqualityStatus::proved_equal};

  const int legs = lhs.leg_count();
  constexpr size_t kWordCap = 20000;
  constexpr size_t kRowCap = 50000;

  auto words = reduced_words_by_length(spec, variant, degree_bound - 1,
                                       kWordCap);
  if (!words) return {EqualityStatus::unresolved};
  std::vector<Letters> flat;
  for (const auto& bucket : *words)
    flat.insert(flat.end(), bucket.begin(), bucket.end());

  std::map<TensorWord, SparseVec> pivots;
  size_t rows = 0;

  auto insert_relation = [&](SparseVec vec) {
    eliminate(vec, pivots);
    if (vec.empty()) return;
    const auto& lead = *vec.rbegin();
    Scalar inv = Scalar(1) / lead.second;
    SparseVec monic;
    for (const auto& [w, c] : vec) monic.emplace(w, c * inv);
    TensorWord lw = lead.first;
    pivots.emplace(std::move(lw), std::move(monic));
  };

  // Other-leg word tuples with total degree <= budget, in canonical order.
  auto for_other_tuples = [&](int budget, auto&& fn) {
    std::vector<Letters> tuple(static_cast<size_t>(legs - 1));
    auto rec = [&](auto&& self, int slot, int left) -> bool {
      if (slot == legs - 1) return fn(tuple);
      for (const Letters& w : flat) {
        if (static_cast<int>(w.size()) > left) continue;
        tuple[static_cast<size_t>(slot)] = w;
        if (!self(self, slot + 1, left - static_cast<int>(w.size())))
          return false;
      }
      return true;
    };
    return rec(rec, 0, budget);
  };

  std::vector<std::pair<bool, int>> sums;
  for (int x = 0; x < spec.inputs; ++x) sums.push_back({false, x});
  if (variant == Variant::bistochastic)
    for (int a = 0; a < spec.outputs; ++a) sums.push_back({true, a});

  bool capped = false;
  for (int leg = 0; leg < legs && !capped; ++leg) {
    for (const auto& [column, fixed] : sums) {
      for (const Letters& u : flat) {
        for (const Letters& v : flat) {
          int used = static_cast<int>(u.size() + v.size()) + 1;
          if (used > degree_bound) continue;
          bool ok = for_other_tuples(degree_bound - used,
                                     [&](const std::vector<Letters>& others) {
            if (++rows > kRowCap) return false;
            insert_relation(contexted_sum_relation(
                spec, variant, legs, leg, others, u, v, column, fixed));
            return true;
          });
          if (!ok) {
            capped = true;
            break;
          }
        }
        if (capped) break;
      }
      if (capped) break;
    }
  }
  if (capped) return {EqualityStatus::unresolved};

  SparseVec target(d.terms());
  eliminate(target, pivots);
  return {target.empty() ? EqualityStatus::proved_equal
                         : EqualityStatus::unresolved};
}

std::vector<BigInt> reduced_word_counts(const GameSpec& spec,
                                        int max_degree) {
  if (max_degree < 0) throw Error("ncalg: max_degree must be nonnegative");
  if (make_easiest(spec.inputs, spec.outputs) != spec)
    throw Error("ncalg: reduced_word_counts requires an easiest game");
  const BigInt I = spec.inputs, O = spec.outputs;
  std::vector<BigInt> counts;
  counts.push_back(1);
  for (int k = 1; k <= max_degree; ++k) {
    BigInt c = I;
    for (int t = 1; t < k; ++t) c *= I - 1;
    for (int t = 0; t < k; ++t) c *= O - 1;
    counts.push_back(c);
  }
  return counts;
}

std::string render_scalar(const Scalar& c) {
  std::ostringstream os;
  os << numerator(c) << "/" << denominator(c);
  return os.str();
}

std::string render_element(const NCElement& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    if (!first) os << " + ";
    first = false;
    os << render_scalar(c);
    for (size_t leg = 0; leg < w.legs.size(); ++leg) {
      os << (leg == 0 ? " " : " (x) ");
      if (w.legs[leg].empty()) {
        os << "1";
      } else {
        for (const Generator& g : w.legs[leg])
          os << "p[" << g.row << "," << g.col << "]";
      }
    }
  }
  return os.str();
}

namespace {

std::vector<std::string> split_on(const std::string& s,
                                  const std::string& sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t next = s.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(s.substr(pos));
      return out;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + sep.size();
  }
}

Letters parse_leg(const std::string& text) {
  if (text == "1") return {};
  Letters leg;
  size_t pos = 0;
  while (pos < text.size()) {
    if (text.compare(pos, 2, "p[") != 0)
      throw Error("ncalg: bad letter in element text: " + text);
    size_t comma = text.find(',', pos + 2);
    size_t close = text.find(']', pos + 2);
    if (comma == std::string::npos || close == std::string::npos ||
        comma > close)
      throw Error("ncalg: bad letter in element text: " + text);
    int row = std::stoi(text.substr(pos + 2, comma - pos - 2));
    int col = std::stoi(text.substr(comma + 1, close - comma - 1));
    leg.push_back({row, col});
    pos = close + 1;
  }
  return leg;
}

}  // namespace

NCElement parse_element(const std::string& text) {
  if (text == "0") return NCElement::zero(1);
  std::optional<NCElement> out;
  for (const std::string& term : split_on(text, " + ")) {
    std::vector<std::string> fields = split_on(term, " ");
    if (fields.size() < 2) throw Error("ncalg: bad term: " + term);
    std::vector<std::string> frac = split_on(fields[0], "/");
    if (frac.size() != 2) throw Error("ncalg: bad coefficient: " + fields[0]);
    Scalar c(BigInt(frac[0]), BigInt(frac[1]));
    TensorWord w;
    for (size_t i = 1; i < fields.size(); ++i) {
      if (fields[i] == "(x)") continue;
      w.legs.push_back(parse_leg(fields[i]));
    }
    if (!out) out = NCElement(w.leg_count());
    out->add_term(std::move(w), std::move(c));
  }
  if (!out) throw Error("ncalg: empty element text");
  return *out;
}

}  // namespace synq
