#include "synq/presentation.hpp"

#include <sstream>

namespace synq {

std::vector<Generator> Presentation::generators() const {
  std::vector<Generator> out;
  for (int x = 0; x < inputs; ++x)
    for (int a = 0; a < outputs; ++a) out.push_back({x, a});
  return out;
}

std::vector<NCElement> Presentation::projection_relations() const {
  std::vector<NCElement> out;
  for (Generator g : generators()) {
    NCElement e = NCElement::generator(g);
    out.push_back(e * e - e);
  }
  return out;
}

std::vector<Generator> Presentation::self_adjoint_family() const {
  return generators();
}

std::vector<NCElement> Presentation::row_sum_relations() const {
  std::vector<NCElement> out;
  for (int x = 0; x < inputs; ++x) {
    NCElement e = NCElement::zero(1);
    for (int a = 0; a < outputs; ++a) e += NCElement::generator({x, a});
    out.push_back(e - NCElement::one(1));
  }
  return out;
}

std::vector<NCElement> Presentation::column_sum_relations() const {
  std::vector<NCElement> out;
  if (variant != Variant::bistochastic) return out;
  for (int a = 0; a < outputs; ++a) {
    NCElement e = NCElement::zero(1);
    for (int x = 0; x < inputs; ++x) e += NCElement::generator({x, a});
    out.push_back(e - NCElement::one(1));
  }
  return out;
}

std::vector<NCElement> Presentation::orthogonality_relations() const {
  std::vector<NCElement> out;
  for (const RuleTuple& t : orthogonality) {
    auto [a, b, x, y] = t;
    out.push_back(NCElement::generator({x, a}) * NCElement::generator({y, b}));
  }
  return out;
}

std::vector<NCElement> Presentation::all_relations() const {
  std::vector<NCElement> out = projection_relations();
  auto rows = row_sum_relations();
  out.insert(out.end(), rows.begin(), rows.end());
  auto cols = column_sum_relations();
  out.insert(out.end(), cols.begin(), cols.end());
  auto orth = orthogonality_relations();
  out.insert(out.end(), orth.begin(), orth.end());
  return out;
}

Presentation present(const GameSpec& spec, Variant variant) {
  if (variant == Variant::bistochastic && spec.inputs != spec.outputs)
    throw Error("presentation: bistochastic variant requires |O| = |I|");
  Presentation p;
  p.inputs = spec.inputs;
  p.outputs = spec.outputs;
  p.variant = variant;
  p.orthogonality.assign(spec.forbidden.begin(), spec.forbidden.end());
  return p;
}

std::string to_string(TheoremReport::Status s) {
  switch (s) {
    case TheoremReport::Status::verified:
      return "verified";
    case TheoremReport::Status::failed:
      return "failed";
    case TheoremReport::Status::unresolved:
      return "unresolved";
  }
  return "?";
}

NCElement delta_on_generator(int size, int i, int j) {
  if (i < 0 || j < 0 || i >= size || j >= size)
    throw Error("delta_on_generator: index out of range");
  NCElement e = NCElement::zero(2);
  for (int k = 0; k < size; ++k)
    e += NCElement::tensor(NCElement::generator({i, k}),
                           NCElement::generator({k, j}));
  return e;
}

namespace {

// Certifies e = 0 modulo the relations: normalizer fast path, then the
// bounded ideal-membership oracle. Unresolved instances are recorded,
// never dropped.
void certify_zero(TheoremReport& rep, const NCElement& e, const GameSpec& spec,
                  Variant variant, const std::string& what) {
  NCElement n = normalize(e, spec, variant);
  if (!n.is_zero()) {
    int bound = std::max(4, n.degree());
    auto res = equal_mod_relations(n, NCElement::zero(n.leg_count()), spec,
                                   variant, bound);
    if (!res.proved()) {
      ++rep.unresolved_count;
      if (rep.status != TheoremReport::Status::failed)
        rep.status = TheoremReport::Status::unresolved;
      if (!rep.witness)
        rep.witness = what + " not certified; normal form: " +
                      render_element(n);
      return;
    }
  }
  ++rep.checked;
  rep.certified.push_back(e);
}

void add_family(TheoremReport& rep, const std::string& name, long count) {
  rep.family_counts.push_back({name, count});
}

NCElement q_element(const GameSpec& spec, int k, int i) {
  NCElement q = NCElement::zero(2);
  for (int r = 0; r < spec.inputs; ++r)
    q += NCElement::tensor(NCElement::generator({k, r}),
                           NCElement::generator({r, i}));
  return q;
}

// Evaluates one leg of every term under the counit character δ and drops
// the leg; terms whose leg word evaluates to 0 vanish.
NCElement slice_counit(const NCElement& e, int leg) {
  NCElement out(e.leg_count() - 1);
  for (const auto& [w, c] : e.terms()) {
    bool nonzero = true;
    for (const Generator& g : w.legs[static_cast<size_t>(leg)])
      if (g.row != g.col) {
        nonzero = false;
        break;
      }
    if (!nonzero) continue;
    TensorWord r;
    for (size_t m = 0; m < w.legs.size(); ++m)
      if (static_cast<int>(m) != leg) r.legs.push_back(w.legs[m]);
    out.add_term(std::move(r), c);
  }
  return out;
}

}  // namespace

TheoremReport verify_delta_well_defined(const GameSpec& spec,
                                        Variant variant) {
  TheoremReport rep;
  rep.claim = "delta-well-defined";
  if (spec.inputs != spec.outputs)
    throw Error("verify_delta_well_defined requires |O| = |I|");
  if (auto w = check_star(spec)) {
    rep.status = TheoremReport::Status::failed;
    rep.witness = "condition (*) fails with witness " + to_string(*w);
    return rep;
  }
  const int n = spec.inputs;
  std::vector<NCElement> q;
  q.reserve(static_cast<size_t>(n) * n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) q.push_back(q_element(spec, k, i));
  auto Q = [&](int k, int i) -> const NCElement& {
    return q[static_cast<size_t>(k) * n + i];
  };

  long base = rep.checked;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      std::ostringstream what;
      what << "Q[" << k << "," << i << "]^2 - Q[" << k << "," << i << "]";
      certify_zero(rep, Q(k, i) * Q(k, i) - Q(k, i), spec, variant,
                   what.str());
    }
  add_family(rep, "idempotent", rep.checked - base);

  base = rep.checked;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      std::ostringstream what;
      what << "Q[" << k << "," << i << "]* - Q[" << k << "," << i << "]";
      certify_zero(rep, Q(k, i).adjoint() - Q(k, i), spec, variant,
                   what.str());
    }
  add_family(rep, "self-adjoint", rep.checked - base);

  base = rep.checked;
  for (int k = 0; k < n; ++k) {
    NCElement sum = NCElement::zero(2);
    for (int i = 0; i < n; ++i) sum += Q(k, i);
    std::ostringstream what;
    what << "sum_i Q[" << k << ",i] - 1(x)1";
    certify_zero(rep, sum - NCElement::one(2), spec, variant, what.str());
  }
  add_family(rep, "row-sum", rep.checked - base);

  base = rep.checked;
  for (const RuleTuple& t : spec.forbidden) {
    auto [i, j, k, l] = t;
    std::ostringstream what;
    what << "Q[" << k << "," << i << "]Q[" << l << "," << j
         << "] on forbidden (" << i << "," << j << "," << k << "," << l
         << ")";
    certify_zero(rep, Q(k, i) * Q(l, j), spec, variant, what.str());
  }
  add_family(rep, "orthogonality", rep.checked - base);

  if (variant == Variant::bistochastic) {
    base = rep.checked;
    for (int i = 0; i < n; ++i) {
      NCElement sum = NCElement::zero(2);
      for (int k = 0; k < n; ++k) sum += Q(k, i);
      std::ostringstream what;
      what << "sum_k Q[k," << i << "] - 1(x)1";
      certify_zero(rep, sum - NCElement::one(2), spec, variant, what.str());
    }
    add_family(rep, "column-sum", rep.checked - base);
  }
  return rep;
}

TheoremReport verify_coassociativity(const GameSpec& spec, Variant variant) {
  (void)variant;  // the formal triple sums do not depend on the relations
  TheoremReport rep;
  rep.claim = "coassociativity";
  if (spec.inputs != spec.outputs)
    throw Error("verify_coassociativity requires |O| = |I|");
  const int n = spec.inputs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      NCElement left = NCElement::zero(3);
      NCElement right = NCElement::zero(3);
      for (int k = 0; k < n; ++k) {
        left += NCElement::tensor(delta_on_generator(n, i, k),
                                  NCElement::generator({k, j}));
        right += NCElement::tensor(NCElement::generator({i, k}),
                                   delta_on_generator(n, k, j));
      }
      if (left == right) {
        ++rep.checked;
        rep.certified.push_back(left - right);
      } else {
        rep.status = TheoremReport::Status::failed;
        if (!rep.witness) {
          std::ostringstream what;
          what << "generator (" << i << "," << j
               << "): difference " << render_element(left - right);
          rep.witness = what.str();
        }
      }
    }
  add_family(rep, "generators", rep.checked);
  return rep;
}

TheoremReport verify_counit_identity(const GameSpec& spec, Variant variant) {
  TheoremReport rep;
  rep.claim = "counit";
  if (spec.inputs != spec.outputs)
    throw Error("verify_counit_identity requires |O| = |I|");
  if (auto w = check_counit_condition(spec)) {
    rep.status = TheoremReport::Status::failed;
    std::ostringstream os;
    os << "lambda(" << w->first << "," << w->second << "," << w->first << ","
       << w->second << ") = 0: no counit character";
    rep.witness = os.str();
    return rep;
  }
  const int n = spec.inputs;

  long base = rep.checked;
  for (int x = 0; x < n; ++x) {
    int sum = 0;
    for (int a = 0; a < n; ++a) sum += (x == a) ? 1 : 0;
    if (sum == 1) ++rep.checked;
  }
  if (variant == Variant::bistochastic)
    for (int a = 0; a < n; ++a) {
      int sum = 0;
      for (int x = 0; x < n; ++x) sum += (x == a) ? 1 : 0;
      if (sum == 1) ++rep.checked;
    }
  add_family(rep, "unit-sums", rep.checked - base);

  base = rep.checked;
  for (const RuleTuple& t : spec.forbidden) {
    auto [a, b, x, y] = t;
    if (x == a && y == b) {
      rep.status = TheoremReport::Status::failed;
      if (!rep.witness)
        rep.witness = "epsilon breaks orthogonality relation on (" +
                      std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(x) + "," + std::to_string(y) + ")";
    } else {
      ++rep.checked;
    }
  }
  add_family(rep, "orthogonality", rep.checked - base);

  base = rep.checked;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      NCElement d = delta_on_generator(n, i, j);
      NCElement g = NCElement::generator({i, j});
      if (slice_counit(d, 0) == g && slice_counit(d, 1) == g) {
        ++rep.checked;
        rep.certified.push_back(d);
      } else {
        rep.status = TheoremReport::Status::failed;
        if (!rep.witness)
          rep.witness = "slice identity fails on generator (" +
                        std::to_string(i) + "," + std::to_string(j) + ")";
      }
    }
  add_family(rep, "slice-identities", rep.checked - base);
  return rep;
}

TheoremReport verify_group_identities(const GameSpec& spec) {
  TheoremReport rep;
  rep.claim = "group-identities";
  if (spec.inputs != spec.outputs)
    throw Error("verify_group_identities requires |O| = |I|");
  if (auto w = check_star(spec)) {
    rep.status = TheoremReport::Status::failed;
    rep.witness = "condition (*) fails with witness " + to_string(*w);
    return rep;
  }
  const int n = spec.inputs;
  const Variant variant = Variant::bistochastic;

  long base = rep.checked;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      NCElement lhs = NCElement::zero(2);
      for (int k = 0; k < n; ++k)
        lhs += delta_on_generator(n, i, k) *
               NCElement::tensor(NCElement::one(1),
                                 NCElement::generator({j, k}));
      NCElement rhs =
          NCElement::tensor(NCElement::generator({i, j}), NCElement::one(1));
      std::ostringstream what;
      what << "right density at (" << i << "," << j << ")";
      certify_zero(rep, lhs - rhs, spec, variant, what.str());
    }
  add_family(rep, "right-density", rep.checked - base);

  base = rep.checked;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      NCElement lhs = NCElement::zero(2);
      for (int k = 0; k < n; ++k)
        lhs += NCElement::tensor(NCElement::generator({k, i}),
                                 NCElement::one(1)) *
               delta_on_generator(n, k, j);
      NCElement rhs =
          NCElement::tensor(NCElement::one(1), NCElement::generator({i, j}));
      std::ostringstream what;
      what << "left density at (" << i << "," << j << ")";
      certify_zero(rep, lhs - rhs, spec, variant, what.str());
    }
  add_family(rep, "left-density", rep.checked - base);

  base = rep.checked;
  for (int x = 0; x < n; ++x)
    for (int i = 0; i < n; ++i) {
      NCElement lhs = NCElement::zero(1);
      for (int j = 0; j < n; ++j)
        lhs += NCElement::generator({x, j}) * NCElement::generator({i, j});
      NCElement rhs = (x == i) ? NCElement::one(1) : NCElement::zero(1);
      std::ostringstream what;
      what << "invertibility slice at (" << x << "," << i << ")";
      certify_zero(rep, lhs - rhs, spec, variant, what.str());
    }
  add_family(rep, "invertibility", rep.checked - base);
  return rep;
}

}  // namespace synq
