#pragma once

#include <string>

#include "json.hpp"
#include "kurepa/sigma.hpp"
#include "kurepa/verify.hpp"

namespace kurepa {

using json = nlohmann::ordered_json;

// Canonical text: two-space indent, fixed key order, trailing newline.
std::string canonical_dump(const json& j);

json parse_text(const std::string& text);
json parse_file(const std::string& path);
void write_canonical(const std::string& path, const json& j);

json to_json(const Tree& t);
json to_json(const Condition& p);
json to_json(const Chain& chain);
json to_json(const Schedule& s);
json to_json(const Club& c);
json to_json(const OrderMap& f);
json to_json(const PrunedTree& p, const std::string& source_tree);
json to_json(const BuildReport& r);
json to_json(const Config& cfg);

Tree tree_from_json(const json& j);
Condition condition_from_json(const json& j);
Chain chain_from_json(const json& j);
Schedule schedule_from_json(const json& j);
Club club_from_json(const json& j);
OrderMap ordermap_from_json(const json& j);
PrunedTree pruned_from_json(const json& j, std::string* source_tree = nullptr);
Config config_from_json(const json& j);

}  // namespace kurepa
