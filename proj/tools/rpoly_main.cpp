#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "rpoly/verify.hpp"

namespace {

using namespace rpoly;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct JobConfig {
  std::string type;
  int rank = 0;
  std::string order = "default";
  std::string y;
  std::string w;
  int radius = 1;
  std::string format = "human";
  bool list_paths = false;
  std::string suite = "all";
};

class UsageError : public Error {
 public:
  using Error::Error;
};

bool supported(const CartanDatum& d) {
  const int n = d.rank();
  switch (d.family()) {
    case Family::A:
      return n <= 4;
    case Family::B:
    case Family::C:
      return n <= 3;
    case Family::D:
      return n == 4;
    case Family::G:
      return true;
    default:
      return false;
  }
}

CartanDatum resolve_type(const JobConfig& cfg) {
  std::string label = cfg.type;
  if (label.size() == 1 && cfg.rank > 0) label += std::to_string(cfg.rank);
  const CartanDatum d = CartanDatum::parse(label);
  if (cfg.rank > 0 && d.rank() != cfg.rank)
    throw UsageError("--rank " + std::to_string(cfg.rank) + " contradicts --type " + cfg.type);
  if (!supported(d))
    throw UsageError("type " + d.label() +
                     " is outside the supported set "
                     "(A1-A4, B2-B3, C2-C3, D4, G2)");
  return d;
}

std::vector<ReflectionOrder> resolve_orders(const JobConfig& cfg, const WeylGroup& group) {
  if (cfg.order == "all") return all_reflection_orders(group);
  return {parse_order(cfg.order, group)};
}

json order_json(const RootSystem& rs, const ReflectionOrder& order) {
  json out = json::array();
  for (int beta : order.sequence()) out.push_back(root_name(rs, beta));
  return out;
}

int cmd_finite_r(const JobConfig& cfg) {
  const Setup setup = make_setup(resolve_type(cfg));
  const WeylGroup& group = *setup.group;
  const AffineWeylGroup& aff = *setup.affine;
  const AffineElem y = parse_element(cfg.y, aff);
  const AffineElem w = parse_element(cfg.w, aff);
  if (!y.wt.isZero() || !w.wt.isZero()) throw UsageError("finite-r needs elements of W (wt = 0)");
  const LaurentPoly rec = r_recursive(group, y.cl, w.cl);
  const bool comparable = group.bruhat_leq(y.cl, w.cl);
  json runs = json::array();
  bool agree = true;
  for (const auto& order : resolve_orders(cfg, group)) {
    const LaurentPoly dyer = r_dyer(group, y.cl, w.cl, order);
    agree = agree && dyer == rec;
    json run{{"order", order_json(group.roots(), order)},
             {"dyer", to_json(dyer)},
             {"dyer_human", dyer.to_string()}};
    if (cfg.list_paths) {
      json chains = json::array();
      for (const auto& chain : enumerate_bruhat_chains(group, y.cl, w.cl, order)) {
        json labels = json::array();
        for (int beta : chain.labels) labels.push_back(root_name(group.roots(), beta));
        chains.push_back(labels);
      }
      run["chains"] = chains;
    }
    runs.push_back(run);
  }
  if (cfg.format == "json") {
    std::cout << json{{"type", group.roots().datum().label()},
                      {"y", format_word(group.reduced_word(y.cl))},
                      {"w", format_word(group.reduced_word(w.cl))},
                      {"comparable", comparable},
                      {"recursive", to_json(rec)},
                      {"orders", runs},
                      {"agree", agree}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "type " << group.roots().datum().label() << ", y = " << format_weyl(group, y.cl)
              << ", w = " << format_weyl(group, w.cl) << "\n";
    std::cout << "recursion: " << rec << "\n";
    for (const auto& run : runs) {
      std::string names;
      for (const auto& n : run["order"])
        names += (names.empty() ? "" : " < ") + n.get<std::string>();
      std::cout << "chains (" << names << "): " << run["dyer_human"].get<std::string>() << "\n";
      if (run.contains("chains"))
        for (const auto& chain : run["chains"]) std::cout << "  chain " << chain.dump() << "\n";
    }
    std::cout << "agree: " << (agree ? "yes" : "no") << "\n";
    if (!comparable) std::cout << "note: y is not below w in the Bruhat order\n";
  }
  return agree ? kExitOk : kExitFailed;
}

int cmd_periodic_r(const JobConfig& cfg) {
  const Setup setup = make_setup(resolve_type(cfg));
  const AffineWeylGroup& aff = *setup.affine;
  const AffineElem y = parse_element(cfg.y, aff);
  const AffineElem w = parse_element(cfg.w, aff);
  const bool reachable = all_nonnegative(w.wt - y.wt);
  json runs = json::array();
  bool agree = true;
  std::optional<LaurentPoly> first;
  for (const auto& order : resolve_orders(cfg, *setup.group)) {
    PeriodicEngine engine(setup.affine, order);
    const LaurentPoly paths = engine.periodic_r_paths(y, w);
    const LaurentPoly dbg = engine.periodic_r_dbg(y, w);
    agree = agree && paths == dbg && (!first || *first == paths);
    if (!first) first = paths;
    json run{{"order", order_json(aff.roots(), order)},
             {"paths", to_json(paths)},
             {"double_bruhat", to_json(dbg)},
             {"paths_human", paths.to_string()},
             {"double_bruhat_human", dbg.to_string()}};
    if (cfg.list_paths) {
      json si = json::array(), db = json::array(), si_text = json::array(), db_text = json::array();
      for (const auto& p : engine.enumerate_si_paths(y, w)) {
        si.push_back(to_json(engine, p));
        si_text.push_back(describe(engine, p) + "  [deg " + std::to_string(path_deg(aff, p)) +
                          ", length " + std::to_string(p.length()) + "]");
      }
      for (const auto& p : engine.enumerate_dbp(y, w)) {
        db.push_back(to_json(engine, p));
        db_text.push_back(describe(engine, p) + "  [deg " + std::to_string(dbp_deg(p)) +
                          ", length' " + std::to_string(dbp_len_prime(p)) + "]");
      }
      run["path_list"] = si;
      run["double_bruhat_path_list"] = db;
      run["path_text"] = si_text;
      run["double_bruhat_text"] = db_text;
    }
    runs.push_back(run);
  }
  if (cfg.format == "json") {
    for (auto& run : runs) {
      run.erase("path_text");
      run.erase("double_bruhat_text");
    }
    std::cout << json{{"type", aff.roots().datum().label()},
                      {"y", format_element(aff, y)},
                      {"w", format_element(aff, w)},
                      {"semi_infinite_gap", aff.si_length_diff(y, w)},
                      {"orders", runs},
                      {"agree", agree}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "type " << aff.roots().datum().label() << ", y = " << format_element(aff, y)
              << ", w = " << format_element(aff, w) << "\n";
    for (const auto& run : runs) {
      std::string names;
      for (const auto& n : run["order"])
        names += (names.empty() ? "" : " < ") + n.get<std::string>();
      std::cout << "order " << names << "\n";
      std::cout << "  paths:         " << run["paths_human"].get<std::string>() << "\n";
      std::cout << "  double Bruhat: " << run["double_bruhat_human"].get<std::string>() << "\n";
      if (run.contains("path_text")) {
        for (const auto& t : run["path_text"])
          std::cout << "  path " << t.get<std::string>() << "\n";
        for (const auto& t : run["double_bruhat_text"])
          std::cout << "  dbp  " << t.get<std::string>() << "\n";
      }
    }
    std::cout << "agree: " << (agree ? "yes" : "no") << "\n";
    if (!reachable) std::cout << "note: wt(w) - wt(y) has a negative coordinate, so R = 0\n";
  }
  return agree ? kExitOk : kExitFailed;
}

int cmd_dbg_export(const JobConfig& cfg) {
  const Setup setup = make_setup(resolve_type(cfg));
  const auto edges = build_dbg(*setup.group);
  if (cfg.format == "json")
    std::cout << dbg_to_json(*setup.group, edges).dump(2) << "\n";
  else
    std::cout << dbg_to_dot(*setup.group, edges);
  return kExitOk;
}

int cmd_verify(const JobConfig& cfg) {
  const Setup setup = make_setup(resolve_type(cfg));
  const std::string& suite = cfg.suite;
  auto wants = [&](const char* name) { return suite == "all" || suite == name; };
  VerifyReport report;
  for (const auto& order : resolve_orders(cfg, *setup.group)) {
    PeriodicEngine engine(setup.affine, order);
    if (wants("r-identities")) report.append(check_identity_suite(engine, cfg.radius));
    if (wants("decomposition")) report.append(check_decomposition_suite(engine, cfg.radius));
    if (wants("model-equiv")) report.append(check_model_equivalence(engine, cfg.radius));
  }
  if (wants("finite")) report.append(check_finite_suite(setup));
  if (wants("interval")) report.append(check_interval_suite(*setup.affine, cfg.radius));
  if (suite == "all") {
    report.append(check_order_independence(setup, cfg.radius));
    report.append(check_si_order(*setup.affine, cfg.radius, 1000, 1));
  }
  if (cfg.format == "json") {
    json checks = json::array();
    for (const auto& c : report.checks)
      checks.push_back({{"name", c.name},
                        {"instances", c.instances},
                        {"passed", c.passed},
                        {"seconds", c.seconds},
                        {"failure", c.failure}});
    std::cout << json{{"type", setup.group->roots().datum().label()},
                      {"radius", cfg.radius},
                      {"passed", report.passed()},
                      {"checks", checks}}
                     .dump(2)
              << "\n";
  } else {
    for (const auto& c : report.checks) {
      std::printf("%s  %-36s instances=%-9zu %.3fs\n", c.passed ? "PASS" : "FAIL", c.name.c_str(),
                  c.instances, c.seconds);
      if (!c.passed) std::printf("      first counterexample: %s\n", c.failure.c_str());
    }
    std::printf("%s\n", report.passed() ? "all checks passed" : "verification FAILED");
  }
  return report.passed() ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordinary and periodic R-polynomials of Weyl groups"};
  app.require_subcommand(1);
  JobConfig cfg;

  auto add_type = [&](CLI::App* sub) {
    sub->add_option("--type", cfg.type,
                    "Cartan type, e.g. A2, B3, G2 (or a family letter with --rank)")
        ->required();
    sub->add_option("--rank", cfg.rank, "Rank, when --type is a bare family letter");
  };
  auto add_order = [&](CLI::App* sub) {
    sub->add_option("--order", cfg.order, "Reduced word of w_0 (e.g. 1,2,1), 'default', or 'all'");
  };

  auto* finite = app.add_subcommand("finite-r", "R-polynomial of a pair in W");
  add_type(finite);
  add_order(finite);
  finite->add_option("--y", cfg.y, "Element of W as a word, e.g. 1,2")->required();
  finite->add_option("--w", cfg.w, "Element of W as a word")->required();
  finite->add_option("--format", cfg.format)->check(CLI::IsMember({"human", "json"}));
  finite->add_flag("--list-paths", cfg.list_paths, "List the Bruhat chains");

  auto* periodic = app.add_subcommand("periodic-r", "Periodic R-polynomial of a pair in W_af");
  add_type(periodic);
  add_order(periodic);
  periodic->add_option("--y", cfg.y, "Element 'cl=<word>;wt=<coords>'")->required();
  periodic->add_option("--w", cfg.w, "Element 'cl=<word>;wt=<coords>'")->required();
  periodic->add_option("--format", cfg.format)->check(CLI::IsMember({"human", "json"}));
  periodic->add_flag("--list-paths", cfg.list_paths, "List paths of both models");

  auto* dbg = app.add_subcommand("dbg-export", "Export the double Bruhat graph");
  add_type(dbg);
  cfg.format = "human";
  dbg->add_option("--format", cfg.format, "dot or json")
      ->check(CLI::IsMember({"human", "dot", "json"}));

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  add_type(verify);
  add_order(verify);
  verify->add_option("--radius", cfg.radius, "Bound on |wt| coordinates")->check(CLI::Range(0, 4));
  verify->add_option("--format", cfg.format)->check(CLI::IsMember({"human", "json"}));
  verify->add_option("--suite", cfg.suite)
      ->check(CLI::IsMember(
          {"all", "r-identities", "decomposition", "model-equiv", "finite", "interval"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*finite) return cmd_finite_r(cfg);
    if (*periodic) return cmd_periodic_r(cfg);
    if (*dbg) return cmd_dbg_export(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidCartanError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}
