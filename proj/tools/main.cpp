#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "large_atlas/bounds.hpp"
#include "large_atlas/catalog.hpp"
#include "large_atlas/largeness.hpp"
#include "large_atlas/orders.hpp"
#include "large_atlas/sweep.hpp"
#include "large_atlas/tables.hpp"

#ifndef LARGE_ATLAS_DEFAULT_GOLDEN_DIR
#define LARGE_ATLAS_DEFAULT_GOLDEN_DIR "goldens"
#endif

using namespace large_atlas;
using json = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, diff = 1, usage = 2, unsupported = 3, unresolved = 4, no_goldens = 5 };

// Selector failure: no entry or several entries match.
struct Unresolved : std::runtime_error {
  std::vector<SubgroupEntry> candidates;
  Unresolved(std::string msg, std::vector<SubgroupEntry> c) : std::runtime_error(std::move(msg)), candidates(std::move(c)) {}
};

struct Selector {
  std::string cls, type, id, params, exceptional, item;
};

std::string golden_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("LARGE_ATLAS_GOLDEN_DIR"); env && *env) return env;
  return LARGE_ATLAS_DEFAULT_GOLDEN_DIR;
}

Params parse_params(const std::string& text) {
  Params p;
  std::istringstream in(text);
  std::string kv;
  while (std::getline(in, kv, ',')) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--params", "expected key=value, got '" + kv + "'");
    const std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
    auto sign = [&]() -> int {
      if (v == "+") return 1;
      if (v == "-") return -1;
      if (v == "o" || v == "0") return 0;
      return std::stoi(v);
    };
    if (k == "m") p.m = std::stoi(v);
    else if (k == "t") p.t = std::stoi(v);
    else if (k == "r" || k == "s") p.r = std::stoi(v);
    else if (k == "k") p.k = std::stoi(v);
    else if (k == "n1") p.n1 = std::stoi(v);
    else if (k == "n2") p.n2 = std::stoi(v);
    else if (k == "e1") p.e1 = sign();
    else if (k == "e2") p.e2 = sign();
    else if (k == "q0") p.q0 = std::stol(v);
    else if (k == "variant") p.variant = std::stoi(v);
    else throw CLI::ValidationError("--params", "unknown parameter '" + k + "'");
  }
  return p;
}

bool has_selector(const Selector& s) {
  return !s.cls.empty() || !s.type.empty() || !s.id.empty() || !s.params.empty() || !s.exceptional.empty();
}

SubgroupEntry resolve(const GroupId& g, const Selector& s) {
  std::vector<SubgroupEntry> pool;
  if (!s.exceptional.empty()) {
    pool = exceptional_candidates(g, parse_graph_aut(s.exceptional));
  } else if (!s.cls.empty()) {
    pool = candidates(g, parse_aclass(s.cls));
  } else {
    pool = candidates(g);
  }
  std::optional<Params> want;
  if (!s.params.empty()) want = parse_params(s.params);
  if (want && !s.id.empty()) {
    // Explicit record and parameters: instantiate directly so constraint failures are reported.
    const std::string why = constraint_violation(g, s.id, *want);
    if (!why.empty()) throw Unresolved("selector does not apply to " + to_string(g) + ": " + why, pool);
    return instantiate(g, s.id, *want);
  }
  std::vector<SubgroupEntry> hit;
  for (auto& e : pool) {
    if (!s.type.empty() && e.type != s.type) continue;
    if (!s.id.empty() && e.id != s.id) continue;
    if (want && !(e.params == *want)) continue;
    if (!s.item.empty()) {
      const std::string it = e.item();
      if (it != s.item && it.rfind(s.item + ".", 0) != 0) continue;
    }
    hit.push_back(e);
  }
  if (hit.size() == 1) return hit.front();
  if (hit.empty()) throw Unresolved("no catalog entry of " + to_string(g) + " matches the selector", pool);
  throw Unresolved("selector is ambiguous for " + to_string(g), hit);
}

std::string describe(const SubgroupEntry& e) {
  std::string s = e.id;
  if (!e.item().empty()) s += " [" + e.item() + "]";
  s += "  " + to_string(e.cls) + "  " + e.type;
  const std::string p = to_string(e.params);
  if (!p.empty()) s += "  (" + p + ")";
  return s;
}

json verdict_json(const LargenessVerdict& v) {
  json j;
  j["is_large"] = v.is_large;
  j["lhs"] = to_string(v.lhs);
  j["rhs"] = to_string(v.rhs);
  j["margin"] = to_string(v.margin);
  j["margin_decimal"] = to_decimal(v.margin, 6);
  j["mode"] = to_string(v.mode);
  j["g0_order"] = to_string(v.g0_order);
  j["h0_order"] = to_string(v.h0_order);
  j["o_order"] = to_string(v.o_order);
  if (!v.warnings.empty()) j["warnings"] = v.warnings;
  return j;
}

void print_kv(const std::vector<std::pair<std::string, std::string>>& rows) {
  size_t w = 0;
  for (const auto& [k, v] : rows) w = std::max(w, k.size());
  for (const auto& [k, v] : rows) std::cout << std::left << std::setw(static_cast<int>(w) + 2) << k << v << "\n";
}

void print_table(const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> w(head.size());
  for (size_t i = 0; i < head.size(); ++i) w[i] = head[i].size();
  for (const auto& r : rows)
    for (size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
  auto line = [&](const std::vector<std::string>& r) {
    for (size_t i = 0; i < r.size(); ++i) {
      std::cout << (i ? "  " : "");
      if (i + 1 < r.size()) std::cout << std::left << std::setw(static_cast<int>(w[i])) << r[i];
      else std::cout << r[i];
    }
    std::cout << "\n";
  };
  line(head);
  std::vector<std::string> sep;
  for (auto x : w) sep.push_back(std::string(x, '-'));
  line(sep);
  for (const auto& r : rows) line(r);
}

void print_verdict(const LargenessVerdict& v, const std::string& what) {
  std::vector<std::pair<std::string, std::string>> rows;
  if (!what.empty()) rows.push_back({"subgroup", what});
  rows.push_back({"is_large", v.is_large ? "true" : "false"});
  rows.push_back({"lhs |G0|", to_string(v.lhs)});
  rows.push_back({"rhs |H0|^3 |O|^2", to_string(v.rhs)});
  rows.push_back({"|H0|", to_string(v.h0_order)});
  rows.push_back({"|O|", to_string(v.o_order)});
  rows.push_back({"margin rhs/lhs", to_decimal(v.margin, 6)});
  rows.push_back({"mode", to_string(v.mode)});
  for (const auto& w : v.warnings) rows.push_back({"warning", w});
  print_kv(rows);
}

json report_json(const SweepReport& r) {
  json j;
  j["case_id"] = r.case_id;
  j["members"] = r.members;
  j["missing"] = r.missing;
  j["extra"] = r.extra;
  j["elapsed_ms"] = r.elapsed_ms;
  if (!r.alarms.empty()) j["alarms"] = r.alarms;
  return j;
}

json row_json(const TableRow& r) {
  json j;
  j["g0"] = r.g0_printed;
  j["h0"] = r.h0_name;
  j["condition"] = r.condition;
  j["g0_order"] = to_string(r.g0_order);
  j["h0_order"] = to_string(r.h0_order);
  j["out"] = to_string(r.out);
  j["remark"] = r.remark == Remark::h0_not_large ? "h0_not_large" : "";
  j["h0_large"] = r.h0_large;
  j["h1_large"] = r.h1_large;
  j["flagged"] = r.flagged;
  if (r.flagged) j["flag_reason"] = r.flag_reason;
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"Large maximal subgroups of almost simple classical groups: orders, checks and sweeps"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string group;
  Selector sel;
  std::string h0_text;
  long o_value = 0;
  auto add_selector = [&](CLI::App* c) {
    c->add_option("--class", sel.cls, "Aschbacher class C1..C8");
    c->add_option("--type", sel.type, "subgroup type as printed by 'subgroups'");
    c->add_option("--id", sel.id, "catalog record id");
    c->add_option("--params", sel.params, "parameter tuple, e.g. m=1,t=4");
    c->add_option("--exceptional", sel.exceptional, "graph automorphism list: sp4 or o8");
    c->add_option("--item", sel.item, "item of the exceptional list, e.g. viii");
  };

  auto* c_order = app.add_subcommand("order", "exact order of a group");
  c_order->add_option("group", group, "e.g. PSU(5,2)")->required();

  auto* c_out = app.add_subcommand("out", "order of the outer automorphism group");
  c_out->add_option("group", group)->required();

  auto* c_sub = app.add_subcommand("subgroups", "catalogued maximal subgroup types with largeness verdicts");
  c_sub->add_option("group", group)->required();
  c_sub->add_option("--class", sel.cls, "restrict to one Aschbacher class");
  c_sub->add_option("--exceptional", sel.exceptional, "graph automorphism list: sp4 or o8");

  auto* c_check = app.add_subcommand("check", "largeness check for one subgroup");
  c_check->add_option("group", group)->required();
  add_selector(c_check);
  auto* h0_opt = c_check->add_option("--h0-order", h0_text, "explicit |H0| instead of a catalog entry");
  auto* o_opt = c_check->add_option("--o", o_value, "|O|, overriding the catalog value")->check(CLI::PositiveNumber);

  auto* c_explain = app.add_subcommand("explain", "formula, anchor and substituted values for a catalog entry");
  c_explain->add_option("group", group)->required();
  add_selector(c_explain);

  std::string case_id, family, gdir, report_dir;
  bool all = false, list = false;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  SweepOptions sopt;

  auto* c_sweep = app.add_subcommand("sweep", "compute a sweep case without golden comparison");
  c_sweep->add_option("case", case_id, "sweep case id");
  c_sweep->add_flag("--list", list, "list registered cases");
  c_sweep->add_option("--q-factor", sopt.q_factor, "multiplier on q bounds")->check(CLI::PositiveNumber);
  c_sweep->add_option("--extra", sopt.extra, "increment on small-integer bounds")->check(CLI::NonNegativeNumber);

  auto* c_repro = app.add_subcommand("reproduce", "run sweeps and diff against golden lists");
  c_repro->add_option("case", case_id, "sweep case id");
  c_repro->add_flag("--all", all, "every registered case");
  c_repro->add_option("--family", family, "only cases tagged psl, psu, psp, pso, s or exceptional");
  c_repro->add_option("--golden-dir", gdir, "golden directory (else LARGE_ATLAS_GOLDEN_DIR, else the built-in path)");
  c_repro->add_option("--report-dir", report_dir, "write one <case>.json report per case here");
  c_repro->add_option("-j,--jobs", jobs, "parallel cases")->check(CLI::PositiveNumber);

  std::string which;
  auto* c_tables = app.add_subcommand("tables", "re-emit a table with recomputed verdicts");
  c_tables->add_option("which", which, "A, B or A0")->required()->check(CLI::IsMember({"A", "B", "A0"}));

  for (auto* c : app.get_subcommands({})) c->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  if (c_order->parsed()) {
    const GroupId g = parse_group(group);
    const Int n = order(g);
    if (as_json) std::cout << json{{"group", to_string(g)}, {"order", to_string(n)}}.dump() << "\n";
    else std::cout << n.get_str() << "\n";
    return ok;
  }

  if (c_out->parsed()) {
    const GroupId g = parse_group(group);
    validate(g);
    const Int n = out_order(g);
    if (as_json) std::cout << json{{"group", to_string(g)}, {"out", to_string(n)}}.dump() << "\n";
    else std::cout << n.get_str() << "\n";
    return ok;
  }

  if (c_sub->parsed()) {
    const GroupId g = parse_group(group);
    validate(g);
    std::vector<SubgroupEntry> es;
    if (!sel.exceptional.empty()) es = exceptional_candidates(g, parse_graph_aut(sel.exceptional));
    else if (!sel.cls.empty()) es = candidates(g, parse_aclass(sel.cls));
    else es = candidates(g);
    json arr = json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : es) {
      const auto v = is_large_h1(g, e);
      json j;
      j["id"] = e.id;
      if (!e.item().empty()) j["item"] = e.item();
      j["class"] = to_string(e.cls);
      j["type"] = e.type;
      j["params"] = to_string(e.params);
      j["verdict"] = verdict_json(v);
      arr.push_back(j);
      rows.push_back({e.id + (e.item().empty() ? "" : " [" + e.item() + "]"), to_string(e.cls), e.type, to_string(e.params),
                      to_string(v.h0_order), to_string(v.o_order), v.is_large ? "large" : "not large", to_string(v.mode)});
    }
    if (as_json) std::cout << json{{"group", to_string(g)}, {"order", to_string(order(g))}, {"subgroups", arr}}.dump(2) << "\n";
    else {
      std::cout << to_string(g) << "  |G0| = " << order(g).get_str() << "  |Out| = " << out_order(g).get_str() << "\n";
      print_table({"entry", "class", "type", "params", "|H0|", "|O1|", "verdict", "mode"}, rows);
    }
    return ok;
  }

  if (c_check->parsed()) {
    const GroupId g = parse_group(group);
    validate(g);
    LargenessVerdict v;
    std::string what;
    if (h0_opt->count()) {
      if (has_selector(sel)) throw CLI::ValidationError("--h0-order", "cannot be combined with a catalog selector");
      Int h0;
      if (h0.set_str(h0_text, 10) != 0) throw CLI::ValidationError("--h0-order", "not a decimal integer: " + h0_text);
      v = is_large(g, h0, o_opt->count() ? Int(o_value) : Int(1));
    } else {
      if (!has_selector(sel)) throw CLI::ValidationError("check", "give a catalog selector or --h0-order");
      SubgroupEntry e = resolve(g, sel);
      what = describe(e);
      if (o_opt->count()) {
        v = is_large(g, e.h0_order, Int(o_value));
        if (e.bound_only) {
          v.mode = LargenessMode::bound_only;
          if (v.is_large) v.warnings.push_back("|H0| is an upper bound: largeness is not certified");
        }
      } else {
        v = is_large_h1(g, e);
      }
    }
    if (as_json) {
      json j = verdict_json(v);
      if (!what.empty()) j["subgroup"] = what;
      std::cout << j.dump(2) << "\n";
    } else {
      print_verdict(v, what);
    }
    return ok;
  }

  if (c_explain->parsed()) {
    const GroupId g = parse_group(group);
    validate(g);
    const SubgroupEntry e = resolve(g, sel);
    const auto v = is_large_h1(g, e);
    const CatalogRecord& rec = catalog_record(e.id);
    if (as_json) {
      json j;
      j["group"] = to_string(g);
      j["record"] = e.id;
      j["class"] = to_string(e.cls);
      j["type"] = e.type;
      j["type_pattern"] = rec.type_pattern;
      j["params"] = to_string(e.params);
      j["constraints"] = rec.constraints;
      j["formula"] = e.formula;
      j["anchor"] = e.anchor;
      j["h0_order"] = to_string(e.h0_order);
      j["h0_bound_only"] = e.bound_only;
      j["o1_order"] = to_string(e.o1_order);
      j["o1_bound"] = e.o1_bound;
      j["c"] = to_string(e.c);
      j["out"] = to_string(out_order(g));
      j["notes"] = e.notes;
      j["verdict"] = verdict_json(v);
      std::cout << j.dump(2) << "\n";
    } else {
      std::vector<std::pair<std::string, std::string>> rows = {
          {"group", to_string(g)},
          {"record", e.id + (e.item().empty() ? "" : " [" + e.item() + "]")},
          {"class", to_string(e.cls)},
          {"type", e.type + "   (" + rec.type_pattern + ")"},
          {"params", to_string(e.params)},
          {"constraints", rec.constraints},
          {"anchor", e.anchor},
          {"|H0| formula", e.formula},
          {"|H0|", to_string(e.h0_order) + (e.bound_only ? "  (upper bound)" : "")},
          {"|G0|", to_string(order(g))},
          {"|Out(G0)|", to_string(out_order(g))},
          {"|O1|", to_string(e.o1_order) + (e.o1_bound ? "  (upper bound)" : "")},
          {"c = |Out|/|O1|", to_string(e.c)},
          {"|H0|^3 |O1|^2", to_string(v.rhs)},
          {"verdict", std::string(v.is_large ? "large" : "not large") + " (" + to_string(v.mode) + ")"},
      };
      for (const auto& n : e.notes) rows.push_back({"note", n});
      print_kv(rows);
    }
    return ok;
  }

  if (c_sweep->parsed()) {
    if (list || case_id.empty()) {
      std::vector<std::vector<std::string>> rows;
      json arr = json::array();
      for (const auto& c : sweep_cases()) {
        rows.push_back({c.id, c.family, c.fields, c.description});
        arr.push_back({{"case_id", c.id}, {"family", c.family}, {"fields", c.fields}, {"description", c.description},
                       {"anchor", c.anchor}});
      }
      if (as_json) std::cout << arr.dump(2) << "\n";
      else print_table({"case", "tag", "fields", "description"}, rows);
      return ok;
    }
    const SweepReport r = compute_case(case_id, sopt);
    if (as_json) {
      json j = report_json(r);
      j.erase("missing");
      j.erase("extra");
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "# " << r.case_id << " (" << r.fields << "), " << r.members.size() << " members, " << r.elapsed_ms
                << " ms\n";
      for (const auto& m : r.members) std::cout << m << "\n";
      for (const auto& a : r.alarms) std::cout << "alarm: " << a << "\n";
    }
    return r.alarms.empty() ? ok : diff;
  }

  if (c_repro->parsed()) {
    const std::string dir = golden_dir(gdir);
    std::vector<SweepReport> reports;
    if (!case_id.empty()) {
      if (all || !family.empty()) throw CLI::ValidationError("reproduce", "give a case id, --all or --family, not several");
      reports.push_back(run_case(case_id, dir));
    } else if (all || !family.empty()) {
      if (!family.empty()) {
        bool known = false;
        for (const auto& c : sweep_cases()) known = known || c.family == family;
        if (!known) throw CLI::ValidationError("--family", "no sweep case is tagged '" + family + "'");
      }
      reports = run_all(dir, family, {}, jobs);
    } else {
      throw CLI::ValidationError("reproduce", "give a case id, --all or --family");
    }
    if (!report_dir.empty()) {
      std::filesystem::create_directories(report_dir);
      for (const auto& r : reports) std::ofstream(report_dir + "/" + r.case_id + ".json") << report_json(r).dump(2) << "\n";
    }
    bool good = true;
    for (const auto& r : reports) good = good && r.ok();
    if (as_json) {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(report_json(r));
      std::cout << (reports.size() == 1 ? arr[0] : arr).dump(2) << "\n";
    } else {
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : reports) {
        std::string detail;
        for (const auto& m : r.missing) detail += " -" + m;
        for (const auto& x : r.extra) detail += " +" + x;
        if (!r.alarms.empty()) detail += " alarms:" + std::to_string(r.alarms.size());
        rows.push_back({r.case_id, r.ok() ? "ok" : "DIFF", std::to_string(r.members.size()), std::to_string(r.elapsed_ms),
                        detail.empty() ? "" : detail.substr(1)});
      }
      print_table({"case", "status", "members", "ms", "diff (-missing +extra)"}, rows);
      if (reports.size() == 1 && good)
        for (const auto& m : reports[0].members) std::cout << m << "\n";
    }
    return good ? ok : diff;
  }

  if (c_tables->parsed()) {
    if (which == "A0") {
      json arr = json::array();
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : table_a0()) {
        arr.push_back({{"d", r.d_condition}, {"p", r.p_condition}, {"host", r.host}});
        rows.push_back({r.d_condition, r.p_condition, r.host});
      }
      if (as_json) std::cout << arr.dump(2) << "\n";
      else {
        print_table({"d", "p", "G0"}, rows);
        std::cout << "e = + iff (-1)^(n/2) disc is a square mod p, disc = d when p does not divide d, else -1\n";
      }
      return ok;
    }
    const auto& rows = which == "A" ? table_a() : table_b();
    if (as_json) {
      json arr = json::array();
      for (const auto& r : rows) arr.push_back(row_json(r));
      std::cout << arr.dump(2) << "\n";
    } else {
      std::vector<std::vector<std::string>> out;
      for (const auto& r : rows)
        out.push_back({r.g0_printed, r.h0_name, r.condition, r.remark == Remark::h0_not_large ? "H0 not large" : "",
                       r.h0_large ? "yes" : "no", r.h1_large ? "yes" : "no", r.flagged ? "FLAG: " + r.flag_reason : ""});
      print_table({"G0", "H0", "condition", "remark", "H0 large", "large with Out", "check"}, out);
    }
    return ok;
  }
  return usage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const Unresolved& e) {
    std::cerr << "error: " << e.what() << "\ncandidates:\n";
    for (const auto& c : e.candidates) std::cerr << "  " << describe(c) << "\n";
    return unresolved;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const UnknownSweepCase& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const GoldenMissing& e) {
    std::cerr << "error: " << e.what() << "\n";
    return no_goldens;
  } catch (const UnsupportedGroup& e) {
    std::cerr << "error: " << e.what() << "\n";
    return unsupported;
  } catch (const UnknownGroup& e) {
    std::cerr << "error: " << e.what() << "\n";
    return unsupported;
  } catch (const WrongHost& e) {
    std::cerr << "error: " << e.what() << "\n";
    return unsupported;
  } catch (const OutOfDomain& e) {
    std::cerr << "error: " << e.what() << "\n";
    return unsupported;
  } catch (const UnsupportedFamily& e) {
    std::cerr << "error: " << e.what() << "\n";
    return unsupported;
  } catch (const ConstraintViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return unresolved;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return unsupported;
  }
}
