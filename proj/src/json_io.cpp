#include "kurepa/json_io.hpp"

#include <fstream>
#include <initializer_list>
#include <limits>

namespace kurepa {

namespace {

void require_object(const json& j, const char* what) {
  if (!j.is_object()) throw malformed_error(std::string(what) + " must be a JSON object");
}

const json& need(const json& j, const char* key, const char* what) {
  require_object(j, what);
  auto it = j.find(key);
  if (it == j.end()) throw malformed_error(std::string(what) + " is missing \"" + key + "\"");
  return *it;
}

void no_extras(const json& j, std::initializer_list<const char*> keys, const char* what) {
  require_object(j, what);
  for (const auto& [k, v] : j.items()) {
    (void)v;
    bool known = false;
    for (const char* key : keys)
      if (k == key) known = true;
    if (!known) throw malformed_error(std::string(what) + " has unknown key \"" + k + "\"");
  }
}

std::uint64_t nat64(const json& v, const char* what) {
  if (!v.is_number_unsigned())
    throw malformed_error(std::string(what) + " must be a non-negative integer");
  return v.get<std::uint64_t>();
}

std::uint32_t nat32(const json& v, const char* what) {
  std::uint64_t x = nat64(v, what);
  if (x > std::numeric_limits<std::uint32_t>::max())
    throw malformed_error(std::string(what) + " is out of range");
  return static_cast<std::uint32_t>(x);
}

const json& need_array(const json& j, const char* key, const char* what) {
  const json& v = need(j, key, what);
  if (!v.is_array())
    throw malformed_error(std::string(what) + " field \"" + key + "\" must be an array");
  return v;
}

std::vector<std::uint32_t> strictly_ascending(const json& arr, const char* what) {
  std::vector<std::uint32_t> out;
  for (const auto& v : arr) {
    std::uint32_t x = nat32(v, what);
    if (!out.empty() && x <= out.back())
      throw malformed_error(std::string(what) + " must be strictly ascending");
    out.push_back(x);
  }
  return out;
}

}  // namespace

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw malformed_error("input is not valid JSON");
  return j;
}

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw malformed_error("cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return parse_text(text);
  } catch (const malformed_error&) {
    throw malformed_error(path + " is not valid JSON");
  }
}

void write_canonical(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << canonical_dump(j);
  if (!out) throw std::runtime_error("write failed: " + path);
}

json to_json(const Tree& t) {
  json nodes = json::array();
  for (const TreeNode& n : t.all_nodes()) {
    json e;
    e["id"] = n.id;
    e["level"] = n.level;
    if (n.parent)
      e["parent"] = *n.parent;
    else
      e["parent"] = nullptr;
    nodes.push_back(std::move(e));
  }
  json j;
  j["nodes"] = std::move(nodes);
  return j;
}

Tree tree_from_json(const json& j) {
  const json& nodes = need_array(j, "nodes", "tree");
  no_extras(j, {"nodes"}, "tree");
  std::vector<TreeNode> out;
  for (const auto& e : nodes) {
    no_extras(e, {"id", "level", "parent"}, "tree node");
    TreeNode n;
    n.id = nat32(need(e, "id", "tree node"), "tree node id");
    n.level = nat32(need(e, "level", "tree node"), "tree node level");
    const json& p = need(e, "parent", "tree node");
    if (!p.is_null()) n.parent = nat32(p, "tree node parent");
    out.push_back(n);
  }
  return Tree::from_nodes(out);
}

json to_json(const Condition& p) {
  json j;
  j["tree"] = to_json(p.tree);
  j["alpha"] = p.alpha;
  json g = json::array();
  for (const auto& [label, node] : p.g) {
    json e;
    e["label"] = label;
    e["node"] = node;
    g.push_back(std::move(e));
  }
  j["g"] = std::move(g);
  json f = json::array();
  for (const auto& [node, to] : p.f) {
    json e;
    e["node"] = node;
    e["to"] = to;
    f.push_back(std::move(e));
  }
  j["f"] = std::move(f);
  return j;
}

Condition condition_from_json(const json& j) {
  no_extras(j, {"tree", "alpha", "g", "f"}, "condition");
  Condition p;
  p.tree = tree_from_json(need(j, "tree", "condition"));
  p.alpha = nat32(need(j, "alpha", "condition"), "condition alpha");
  for (const auto& e : need_array(j, "g", "condition")) {
    no_extras(e, {"label", "node"}, "g entry");
    Label label = nat32(need(e, "label", "g entry"), "g label");
    NodeId node = nat32(need(e, "node", "g entry"), "g node");
    if (!p.g.empty() && label <= p.g.rbegin()->first)
      throw malformed_error("condition g must be sorted by label with no repeats");
    p.g[label] = node;
  }
  for (const auto& e : need_array(j, "f", "condition")) {
    no_extras(e, {"node", "to"}, "f entry");
    NodeId node = nat32(need(e, "node", "f entry"), "f node");
    NodeId to = nat32(need(e, "to", "f entry"), "f target");
    if (!p.f.empty() && node <= p.f.rbegin()->first)
      throw malformed_error("condition f must be sorted by node with no repeats");
    p.f[node] = to;
  }
  return p;
}

json to_json(const Chain& chain) {
  json arr = json::array();
  for (const Condition& c : chain.conditions) arr.push_back(to_json(c));
  json j;
  j["conditions"] = std::move(arr);
  return j;
}

Chain chain_from_json(const json& j) {
  no_extras(j, {"conditions"}, "chain");
  Chain chain;
  for (const auto& e : need_array(j, "conditions", "chain"))
    chain.conditions.push_back(condition_from_json(e));
  return chain;
}

json to_json(const Schedule& s) {
  json j;
  j["seed_labels"] = s.seed_labels;
  json tasks = json::array();
  for (const DenseTask& t : s.tasks) {
    json e;
    switch (t.kind) {
      case TaskKind::absorb:
        e["kind"] = "absorb";
        e["label"] = t.label;
        break;
      case TaskKind::raise:
        e["kind"] = "raise";
        e["lambda"] = t.lambda;
        break;
      case TaskKind::window:
        e["kind"] = "window";
        e["lambda"] = t.lambda;
        break;
    }
    tasks.push_back(std::move(e));
  }
  j["tasks"] = std::move(tasks);
  j["rng_seed"] = s.rng_seed;
  return j;
}

Schedule schedule_from_json(const json& j) {
  no_extras(j, {"seed_labels", "tasks", "rng_seed"}, "schedule");
  Schedule s;
  for (const auto& v : need_array(j, "seed_labels", "schedule"))
    s.seed_labels.push_back(nat32(v, "seed label"));
  for (const auto& e : need_array(j, "tasks", "schedule")) {
    const json& kind = need(e, "kind", "task");
    if (!kind.is_string()) throw malformed_error("task kind must be a string");
    std::string k = kind.get<std::string>();
    if (k == "absorb") {
      no_extras(e, {"kind", "label"}, "absorb task");
      s.tasks.push_back(DenseTask::absorb(nat32(need(e, "label", "absorb task"), "task label")));
    } else if (k == "raise") {
      no_extras(e, {"kind", "lambda"}, "raise task");
      s.tasks.push_back(DenseTask::raise(nat32(need(e, "lambda", "raise task"), "task lambda")));
    } else if (k == "window") {
      no_extras(e, {"kind", "lambda"}, "window task");
      s.tasks.push_back(DenseTask::window(nat32(need(e, "lambda", "window task"), "task lambda")));
    } else {
      throw malformed_error("unknown task kind \"" + k + "\"");
    }
  }
  s.rng_seed = nat64(need(j, "rng_seed", "schedule"), "rng_seed");
  return s;
}

json to_json(const Club& c) {
  json j;
  j["levels"] = c.levels;
  return j;
}

Club club_from_json(const json& j) {
  no_extras(j, {"levels"}, "club");
  Club c;
  c.levels = strictly_ascending(need_array(j, "levels", "club"), "club levels");
  return c;
}

json to_json(const OrderMap& f) {
  json pairs = json::array();
  for (const auto& [from, to] : f.map) pairs.push_back(json::array({from, to}));
  json j;
  j["source_bound"] = f.source_bound;
  j["target_bound"] = f.target_bound;
  j["map"] = std::move(pairs);
  return j;
}

OrderMap ordermap_from_json(const json& j) {
  no_extras(j, {"source_bound", "target_bound", "map"}, "order map");
  OrderMap f;
  f.source_bound = nat32(need(j, "source_bound", "order map"), "source_bound");
  f.target_bound = nat32(need(j, "target_bound", "order map"), "target_bound");
  for (const auto& e : need_array(j, "map", "order map")) {
    if (!e.is_array() || e.size() != 2)
      throw malformed_error("order map entries must be [from, to] pairs");
    Label from = nat32(e[0], "order map key");
    Label to = nat32(e[1], "order map value");
    if (f.map.count(from)) throw malformed_error("order map repeats a key");
    f.map[from] = to;
  }
  f.validate();
  return f;
}

json to_json(const PrunedTree& p, const std::string& source_tree) {
  json j;
  j["kept"] = p.kept;
  j["source_tree"] = source_tree;
  return j;
}

PrunedTree pruned_from_json(const json& j, std::string* source_tree) {
  no_extras(j, {"kept", "source_tree"}, "pruned tree");
  PrunedTree p;
  p.kept = strictly_ascending(need_array(j, "kept", "pruned tree"), "kept nodes");
  const json& src = need(j, "source_tree", "pruned tree");
  if (!src.is_string()) throw malformed_error("pruned tree source_tree must be a string");
  if (source_tree) *source_tree = src.get<std::string>();
  return p;
}

json to_json(const BuildReport& r) {
  json j;
  j["desk_normal"] = r.desk_normal;
  j["regressive_ok"] = r.regressive_ok;
  j["branch_count"] = r.branch_count;
  j["labels_absorbed"] = r.labels_absorbed;
  j["same_label_ok"] = r.same_label_ok;
  j["origin_regressive_ok"] = r.origin_regressive_ok;
  j["uniqueness_ok"] = r.uniqueness_ok;
  json samples = json::array();
  for (const AntichainSample& s : r.antichain_samples) {
    json e;
    e["size"] = s.size;
    e["injective"] = s.injective;
    samples.push_back(std::move(e));
  }
  j["antichain_samples"] = std::move(samples);
  return j;
}

json to_json(const Config& cfg) {
  json j;
  j["max_height"] = cfg.max_height;
  j["limit_modulus"] = cfg.limit_modulus;
  j["split_arity"] = cfg.split_arity;
  j["max_width"] = cfg.max_width;
  j["label_max"] = cfg.label_max;
  j["label_w"] = cfg.label_w;
  j["rng_seed"] = cfg.rng_seed;
  return j;
}

Config config_from_json(const json& j) {
  no_extras(j,
            {"max_height", "limit_modulus", "split_arity", "max_width", "label_max", "label_w",
             "rng_seed"},
            "config");
  Config cfg;
  if (j.contains("max_height")) cfg.max_height = nat32(j["max_height"], "max_height");
  if (j.contains("limit_modulus")) cfg.limit_modulus = nat32(j["limit_modulus"], "limit_modulus");
  if (j.contains("split_arity")) cfg.split_arity = nat32(j["split_arity"], "split_arity");
  if (j.contains("max_width")) cfg.max_width = nat32(j["max_width"], "max_width");
  if (j.contains("label_max")) cfg.label_max = nat32(j["label_max"], "label_max");
  if (j.contains("label_w")) cfg.label_w = nat32(j["label_w"], "label_w");
  if (j.contains("rng_seed")) cfg.rng_seed = nat64(j["rng_seed"], "rng_seed");
  cfg.validate();
  return cfg;
}

}  // namespace kurepa
