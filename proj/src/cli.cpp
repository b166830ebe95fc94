#include "kurepa/cli.hpp"

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kurepa/json_io.hpp"

namespace kurepa {

namespace {

Config load_config(const std::string& path) {
  if (path.empty()) {
    Config cfg;
    cfg.validate();
    return cfg;
  }
  return config_from_json(parse_file(path));
}

// sec3 reads the club off the limit points of the stage heights; sec2
// shoots one through the continuous stage heights.
Club club_for_route(const Chain& chain, Route route, const Config& cfg) {
  if (route == Route::sec3) return limit_points(stage_set_all(chain), cfg);
  auto cont = stage_set_continuous(chain);
  if (cont.empty()) return Club{};
  std::vector<Level> targets(cont.begin(), cont.end());
  return shoot_club(cont, targets);
}

PrunedTree keep_everything(const Tree& t) {
  PrunedTree all;
  for (NodeId i = 0; i < t.size(); ++i) all.kept.push_back(i);
  return all;
}

std::string out_path(const std::string& dir, const char* name) {
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / name).string();
}

void require_valid(const Condition& p, const Config& cfg) {
  auto viol = check_condition(p, cfg);
  if (!viol.empty()) throw malformed_error("invalid condition: " + viol.front().detail);
}

int report_and_exit(const BuildReport& rep, const std::string& dir) {
  write_canonical(out_path(dir, "report.json"), to_json(rep));
  std::cout << canonical_dump(to_json(rep));
  return rep.all_ok() ? 0 : 1;
}

int cmd_build(const std::string& schedule_path, const std::string& config_path,
              bool seed_given, std::uint64_t seed, const std::string& dir) {
  Config cfg = load_config(config_path);
  Schedule sched = schedule_from_json(parse_file(schedule_path));
  if (seed_given) sched.rng_seed = seed;
  Condition start = make_seed(sched.seed_labels, cfg);
  Chain chain = run_schedule(start, sched.tasks, sched.rng_seed, cfg);
  GenericTree gt = assemble(chain, cfg);
  Club club = club_for_route(chain, Route::sec3, cfg);
  BuildReport rep = full_report(chain, gt, Route::sec3, club, cfg);
  write_canonical(out_path(dir, "chain.json"), to_json(chain));
  write_canonical(out_path(dir, "tree.json"), to_json(gt.tree));
  return report_and_exit(rep, dir);
}

int cmd_prune(const std::string& chain_path, const std::string& config_path,
              const std::string& route_str, const std::string& dir) {
  Config cfg = load_config(config_path);
  Chain chain = chain_from_json(parse_file(chain_path));
  GenericTree gt = assemble(chain, cfg);
  Route route = route_from_string(route_str);
  Club club = club_for_route(chain, route, cfg);
  PrunedTree pt =
      route == Route::sec3 ? prune(gt, chain, club, cfg) : keep_everything(gt.tree);
  BuildReport rep = full_report(chain, gt, route, club, cfg);
  write_canonical(out_path(dir, "tree.json"), to_json(gt.tree));
  write_canonical(out_path(dir, "pruned.json"), to_json(pt, "tree.json"));
  write_canonical(out_path(dir, "club.json"), to_json(club));
  return report_and_exit(rep, dir);
}

int cmd_club(const std::string& chain_path, const std::string& config_path,
             const std::string& route_str, const std::string& dir) {
  Config cfg = load_config(config_path);
  Chain chain = chain_from_json(parse_file(chain_path));
  validate_chain(chain, cfg);
  Club club = club_for_route(chain, route_from_string(route_str), cfg);
  write_canonical(out_path(dir, "club.json"), to_json(club));
  std::cout << canonical_dump(to_json(club));
  return 0;
}

int cmd_sigma(const std::string& cond_path, const std::string& map_path,
              const std::string& config_path, bool laws, const std::string& dir) {
  Config cfg = load_config(config_path);
  Condition p = condition_from_json(parse_file(cond_path));
  require_valid(p, cfg);
  OrderMap f = ordermap_from_json(parse_file(map_path));
  Condition q = sigma(p, f, cfg);
  write_canonical(out_path(dir, "sigma.json"), to_json(q));
  std::cout << canonical_dump(to_json(q));
  if (!laws) return 0;

  bool all_ok = true;
  auto line = [&all_ok](const char* name, bool ok) {
    all_ok = all_ok && ok;
    std::cout << name << ": " << (ok ? "ok" : "FAILED") << "\n";
  };

  line("law 3 (order preservation, reflexive)", check_law_3(p, p, f, cfg));
  try {
    Condition up = extend_to(p, p.alpha + 1, cfg);
    line("law 3 (order preservation, one step)", check_law_3(up, p, f, cfg));
  } catch (const capacity_error&) {
    std::cout << "law 3 (order preservation, one step): skipped, no headroom\n";
  } catch (const malformed_error&) {
    std::cout << "law 3 (order preservation, one step): skipped, no headroom\n";
  }

  std::set<Label> image;
  for (Label xi : rlm(p)) image.insert(*f.apply(xi));
  line("law 4 (realm image)", rlm(q) == image);

  line("law 6 (functoriality)", check_law_6(p, f, OrderMap::identity(f.target_bound), cfg));

  std::optional<Label> beta;
  for (const auto& [from, to] : f.map)
    if (to != from) {
      beta = from;
      break;
    }
  if (!beta && !f.map.empty()) beta = f.map.rbegin()->first;
  Label alpha = rlm(p).empty() ? 0 : *rlm(p).rbegin() + 1;
  bool hyp = beta && f.apply(*beta) && *f.apply(*beta) >= alpha && f.target_bound < cfg.label_w;
  if (hyp)
    line("law 5 (compatibility)", check_law_5(p, f, *beta, alpha, cfg));
  else
    std::cout << "law 5 (compatibility): skipped, hypotheses not met\n";

  return all_ok ? 0 : 1;
}

int cmd_verify(const std::string& chain_path, const std::string& pruned_path,
               const std::string& config_path, const std::string& route_str,
               const std::string& dir) {
  Config cfg = load_config(config_path);
  Chain chain = chain_from_json(parse_file(chain_path));
  GenericTree gt = assemble_lenient(chain);
  bool chain_ok = true;
  try {
    validate_chain(chain, cfg);
  } catch (const malformed_error& e) {
    chain_ok = false;
    std::cout << "chain check failed: " << e.what() << "\n";
  }
  Route route = route_from_string(route_str);
  Club club = club_for_route(chain, route, cfg);
  BuildReport rep = full_report(chain, gt, route, club, cfg);
  int code = report_and_exit(rep, dir);
  if (!chain_ok && code == 0) code = 1;
  if (!pruned_path.empty()) {
    PrunedTree expect =
        route == Route::sec3 ? prune(gt, chain, club, cfg) : keep_everything(gt.tree);
    PrunedTree got = pruned_from_json(parse_file(pruned_path));
    if (!(got == expect)) {
      std::cout << "pruned file does not match the chain\n";
      code = code == 0 ? 1 : code;
    }
  }
  return code;
}

int cmd_oracle() {
  OracleSuiteReport rep = oracle_agreement_suite(8);
  json j;
  j["trees_checked"] = rep.trees_checked;
  j["failures"] = rep.failures;
  j["first_failure"] = rep.first_failure;
  std::cout << canonical_dump(j);
  return rep.failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"finite laboratory for labelled-tree forcing runs", "kurepa"};
  app.require_subcommand(1);

  std::string schedule_path, chain_path, cond_path, map_path, pruned_path;
  std::string config_path, dir = ".", route_str = "sec3";
  std::uint64_t seed = 0;
  bool laws = false;

  auto* build = app.add_subcommand("build", "run a schedule into a chain and a tree");
  build->add_option("schedule", schedule_path, "schedule JSON file")->required();
  build->add_option("--config", config_path, "config JSON file");
  auto* seed_opt = build->add_option("--seed", seed, "override the schedule rng seed");
  build->add_option("--out", dir, "output directory");

  auto* prune_cmd = app.add_subcommand("prune", "prune a built chain at its club levels");
  prune_cmd->add_option("chain", chain_path, "chain JSON file")->required();
  prune_cmd->add_option("--config", config_path, "config JSON file");
  prune_cmd->add_option("--route", route_str, "sec2 or sec3")
      ->check(CLI::IsMember({"sec2", "sec3"}));
  prune_cmd->add_option("--out", dir, "output directory");

  auto* club_cmd = app.add_subcommand("club", "extract the club of a built chain");
  club_cmd->add_option("chain", chain_path, "chain JSON file")->required();
  club_cmd->add_option("--config", config_path, "config JSON file");
  club_cmd->add_option("--route", route_str, "sec2 or sec3")
      ->check(CLI::IsMember({"sec2", "sec3"}));
  club_cmd->add_option("--out", dir, "output directory");

  auto* sigma_cmd = app.add_subcommand("sigma", "relabel a condition through an order map");
  sigma_cmd->add_option("condition", cond_path, "condition JSON file")->required();
  sigma_cmd->add_option("ordermap", map_path, "order map JSON file")->required();
  sigma_cmd->add_option("--config", config_path, "config JSON file");
  sigma_cmd->add_flag("--laws", laws, "also check the functor laws");
  sigma_cmd->add_option("--out", dir, "output directory");

  auto* verify_cmd = app.add_subcommand("verify", "re-verify built artifacts");
  verify_cmd->add_option("chain", chain_path, "chain JSON file")->required();
  verify_cmd->add_option("pruned", pruned_path, "pruned JSON file to cross-check");
  verify_cmd->add_option("--config", config_path, "config JSON file");
  verify_cmd->add_option("--route", route_str, "sec2 or sec3")
      ->check(CLI::IsMember({"sec2", "sec3"}));
  verify_cmd->add_option("--out", dir, "output directory");

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive small-tree agreement suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (*build) return cmd_build(schedule_path, config_path, seed_opt->count() > 0, seed, dir);
    if (*prune_cmd) return cmd_prune(chain_path, config_path, route_str, dir);
    if (*club_cmd) return cmd_club(chain_path, config_path, route_str, dir);
    if (*sigma_cmd) return cmd_sigma(cond_path, map_path, config_path, laws, dir);
    if (*verify_cmd) return cmd_verify(chain_path, pruned_path, config_path, route_str, dir);
    if (*oracle_cmd) return cmd_oracle();
  } catch (const capacity_error& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 2;
  } catch (const malformed_error& e) {
    std::cerr << "malformed: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}

}  // namespace kurepa
