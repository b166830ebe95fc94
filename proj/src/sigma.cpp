#include "kurepa/sigma.hpp"

#include <sstream>

#include "kurepa/json_io.hpp"

namespace kurepa {

void OrderMap::validate() const {
  std::optional<Label> prev_to;
  for (const auto& [from, to] : map) {
    if (from >= source_bound) {
      std::ostringstream os;
      os << "order map key " << from << " at or above source bound " << source_bound;
      throw malformed_error(os.str());
    }
    if (to >= target_bound) {
      std::ostringstream os;
      os << "order map value " << to << " at or above target bound " << target_bound;
      throw malformed_error(os.str());
    }
    if (prev_to && to <= *prev_to) {
      std::ostringstream os;
      os << "order map is not strictly increasing at key " << from;
      throw malformed_error(os.str());
    }
    prev_to = to;
  }
}

std::optional<Label> OrderMap::apply(Label x) const {
  auto it = map.find(x);
  if (it == map.end()) return std::nullopt;
  return it->second;
}

OrderMap OrderMap::identity(Label bound) {
  OrderMap f;
  f.source_bound = bound;
  f.target_bound = bound;
  for (Label x = 0; x < bound; ++x) f.map[x] = x;
  return f;
}

OrderMap compose(const OrderMap& f2, const OrderMap& f1) {
  f1.validate();
  f2.validate();
  if (f1.target_bound > f2.source_bound)
    throw malformed_error("order maps do not compose: inner target bound exceeds outer source bound");
  OrderMap g;
  g.source_bound = f1.source_bound;
  g.target_bound = f2.target_bound;
  for (const auto& [from, mid] : f1.map) {
    auto to = f2.apply(mid);
    if (to) g.map[from] = *to;
  }
  g.validate();
  return g;
}

std::set<Label> rlm(const Condition& p) {
  std::set<Label> out;
  for (const auto& [xi, node] : p.g) out.insert(xi);
  return out;
}

bool in_P_alpha(const Condition& p, Label alpha) {
  for (const auto& [xi, node] : p.g)
    if (xi >= alpha) return false;
  return true;
}

Condition sigma(const Condition& p, const OrderMap& f, const Config& cfg) {
  f.validate();
  if (!in_P_alpha(p, f.source_bound))
    throw malformed_error("condition has labels at or above the map's source bound");
  if (f.target_bound > cfg.label_max)
    throw malformed_error("order map target bound exceeds the label ceiling");
  Condition q;
  q.tree = p.tree;
  q.alpha = p.alpha;
  q.f = p.f;
  for (const auto& [xi, node] : p.g) {
    auto to = f.apply(xi);
    if (!to) {
      std::ostringstream os;
      os << "realm not covered by f: label " << xi;
      throw malformed_error(os.str());
    }
    q.g[*to] = node;
  }
  return q;
}

bool check_law_3(const Condition& p, const Condition& q, const OrderMap& f, const Config& cfg) {
  Condition sp = sigma(p, f, cfg);
  Condition sq = sigma(q, f, cfg);
  if (!leq(p, q, cfg).ok) return true;
  return leq(sp, sq, cfg).ok;
}

bool check_law_5(const Condition& p, const OrderMap& f, Label beta, Label alpha,
                 const Config& cfg) {
  f.validate();
  for (const auto& [from, to] : f.map) {
    if (from < beta && to != from) {
      std::ostringstream os;
      os << "map moves label " << from << " below beta";
      throw malformed_error(os.str());
    }
  }
  auto at_beta = f.apply(beta);
  if (!at_beta)
    throw malformed_error("beta is outside the map's domain");
  if (*at_beta < alpha)
    throw malformed_error("map value at beta falls short of alpha");
  if (!in_P_alpha(p, alpha))
    throw malformed_error("condition has labels at or above alpha");
  if (f.target_bound >= cfg.label_w)
    throw malformed_error("order map target bound reaches the working-realm ceiling");
  Condition sp = sigma(p, f, cfg);
  auto r = common_extension(p, sp, cfg);
  if (!r) return false;
  if (!check_condition(*r, cfg).empty()) return false;
  if (!leq(*r, p, cfg).ok || !leq(*r, sp, cfg).ok) return false;
  return in_P_alpha(*r, cfg.label_w);
}

bool check_law_6(const Condition& p, const OrderMap& f1, const OrderMap& f2, const Config& cfg) {
  OrderMap f21 = compose(f2, f1);
  Condition once = sigma(p, f21, cfg);
  Condition twice = sigma(sigma(p, f1, cfg), f2, cfg);
  return canonical_dump(to_json(once)) == canonical_dump(to_json(twice));
}

}  // namespace kurepa
