#pragma once

#include <map>
#include <optional>
#include <set>

#include "kurepa/condition.hpp"

namespace kurepa {

// Finite strictly increasing partial map on labels, with declared bounds:
// keys below source_bound, values below target_bound.
struct OrderMap {
  Label source_bound = 0;
  Label target_bound = 0;
  std::map<Label, Label> map;

  void validate() const;
  std::optional<Label> apply(Label x) const;

  static OrderMap identity(Label bound);

  bool operator==(const OrderMap&) const = default;
};

// f2 after f1; keeps the keys of f1 whose image f2 covers.
OrderMap compose(const OrderMap& f2, const OrderMap& f1);

// The labels a condition mentions.
std::set<Label> rlm(const Condition& p);

// Does every label of p sit below alpha?
bool in_P_alpha(const Condition& p, Label alpha);

// Pure relabelling: tree and f-map are untouched, g is rekeyed through f.
// Requires rlm(p) inside dom(f) and p inside P_{source_bound}.
Condition sigma(const Condition& p, const OrderMap& f, const Config& cfg);

// leq(p, q) implies leq(sigma(p,f), sigma(q,f)).
bool check_law_3(const Condition& p, const Condition& q, const OrderMap& f, const Config& cfg);

// Under the compatibility hypotheses (f identity below beta, f(beta)
// clearing alpha, p in P_alpha, target bound below label_w) p and
// sigma(p,f) admit a verified common extension with small labels.
bool check_law_5(const Condition& p, const OrderMap& f, Label beta, Label alpha,
                 const Config& cfg);

// sigma(p, f2 after f1) coincides with sigma(sigma(p, f1), f2) exactly.
bool check_law_6(const Condition& p, const OrderMap& f1, const OrderMap& f2, const Config& cfg);

}  // namespace kurepa
