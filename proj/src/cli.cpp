#include "proofinfo/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "proofinfo/fixture.hpp"
#include "proofinfo/inference/checker.hpp"
#include "proofinfo/inference/kformula.hpp"
#include "proofinfo/inference/world.hpp"
#include "proofinfo/measure.hpp"
#include "proofinfo/profile.hpp"
#include "proofinfo/report.hpp"
#include "proofinfo/weight.hpp"

namespace proofinfo::cli {
namespace {

using json = nlohmann::ordered_json;
using report::fixed6;

/// Leaves `run` with a given exit code and message.
struct Exit {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kInputFailure, "cannot read '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

nlohmann::json parse_json(const std::string& text, const std::string& path) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Exit{kInputFailure, path + ": " + e.what()};
  }
}

// Separators inside parentheses belong to the formula.
std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')' && depth > 0) --depth;
    if (c == sep && depth == 0) {
      out.push_back(std::move(current));
      current.clear();
      continue;
    }
    current += c;
  }
  out.push_back(std::move(current));
  return out;
}

json violations_json(const std::vector<Violation>& vs) {
  json arr = json::array();
  for (const auto& v : vs) {
    arr.push_back({{"code", std::string(to_string(v.code))}, {"message", v.message}});
  }
  return arr;
}

KnowledgeSystem load_system(const std::string& path, const std::string& text) {
  auto outcome = try_parse_knowledge_system(parse_json(text, path));
  if (!outcome.system) {
    std::string msg;
    for (const auto& v : outcome.violations) {
      msg += fmt::format("{}: {}\n", to_string(v.code), v.message);
    }
    msg.pop_back();
    throw Exit{kDomainViolation, msg};
  }
  return std::move(*outcome.system);
}

json envelope(const std::string& command, const std::vector<std::string>& args,
              const std::string& digest_input) {
  json r;
  r["tool"] = report::kToolName;
  r["version"] = report::kToolVersion;
  r["schema"] = report::kSchemaVersion;
  r["command"] = command;
  r["arguments"] = args;
  r["input_digest"] = "sha256:" + report::sha256_hex(digest_input);
  return r;
}

json class_sizes(const KnowledgeSystem& ks) {
  json sizes;
  for (std::size_t g = 0; g < ks.goal_count(); ++g) {
    sizes[ks.goals()[g].text()] = ks.class_members(g).size();
  }
  return sizes;
}

json texts(std::span<const Formula> fs) {
  json arr = json::array();
  for (const auto& f : fs) arr.push_back(f.text());
  return arr;
}

json weight_json(const KnowledgeSystem& ks, const ProbabilityMeasure& measure,
                 std::span<const Formula> subset) {
  auto w = weight(ks, measure, subset);
  auto s = support(ks, measure, subset);
  json j;
  j["subset"] = texts(subset);
  j["value"] = w.value;
  json ids = json::array();
  for (auto p : s.proofs) ids.push_back(ks.proofs()[p].id);
  j["support"] = ids;
  json masses;
  for (std::size_t g = 0; g < ks.goal_count(); ++g) {
    masses[ks.goals()[g].text()] = format_rational(w.per_goal_terms[g]);
  }
  j["per_goal_mass"] = masses;
  j["total_mass"] = format_rational(s.total_mass);
  j["certain"] = w.certain;
  j["empty_support"] = w.empty_support;
  return j;
}

json profile_json(const WeightProfile& p) {
  json j;
  j["proof"] = p.proof_id;
  j["size"] = p.deltas.size() - 1;
  j["deltas"] = p.deltas;
  json ws = json::array();
  for (const auto& w : p.witnesses) ws.push_back(texts(w));
  j["witnesses"] = ws;
  j["zeta"] = p.zeta;
  j["average_weight"] = p.average_weight;
  j["average_speed"] = p.average_speed;
  j["average_speed_convention"] = p.speed_by_convention;
  return j;
}

// ---- table rendering -------------------------------------------------------

std::string join(const json& arr, std::string_view sep = ", ") {
  std::string out;
  for (const auto& e : arr) {
    if (!out.empty()) out += sep;
    out += e.is_string() ? e.get<std::string>() : e.dump();
  }
  return out;
}

void weight_table(const json& w, std::string& out) {
  out += fmt::format("  S = {{{}}}\n", join(w["subset"]));
  out += fmt::format("    D(S)      {}\n", fixed6(w["value"].get<double>()));
  out += fmt::format("    E(S)      {{{}}}\n", join(w["support"]));
  out += fmt::format("    Pr(E(S))  {}\n", w["total_mass"].get<std::string>());
  for (const auto& [goal, mass] : w["per_goal_mass"].items()) {
    out += fmt::format("      {:<24} {}\n", goal, mass.get<std::string>());
  }
  std::string flag = w["empty_support"].get<bool>() ? "empty support (weight 0 by convention)"
                     : w["certain"].get<bool>()     ? "certain"
                                                    : "uncertain";
  out += fmt::format("    status    {}\n", flag);
}

void profile_table(const json& p, std::string& out) {
  out += fmt::format("  proof {} (|Q|={})\n", p["proof"].get<std::string>(), p["size"].dump());
  for (std::size_t k = 0; k < p["deltas"].size(); ++k) {
    out += fmt::format("    k={:<3} delta={}  witness={{{}}}\n", k,
                       fixed6(p["deltas"][k].get<double>()), join(p["witnesses"][k]));
  }
  out += fmt::format("    zeta={}  average_weight={}  average_speed={}{}\n", p["zeta"].dump(),
                     fixed6(p["average_weight"].get<double>()),
                     fixed6(p["average_speed"].get<double>()),
                     p["average_speed_convention"].get<bool>() ? " (zeta=1 convention)" : "");
}

std::string render_table(const json& r) {
  std::string out = fmt::format("{} {} | {} | {}\n", r["tool"].get<std::string>(),
                                r["version"].get<std::string>(), r["command"].get<std::string>(),
                                r["input_digest"].get<std::string>());
  const auto& res = r["results"];
  const auto command = r["command"].get<std::string>();
  if (command == "demo") {
    out += fmt::format("system: M={}, proofs={}\n", res["system"]["M"].dump(),
                       res["system"]["proofs"].dump());
    out += "measure:\n";
    for (const auto& m : res["measure"]) {
      out += fmt::format("  {:<6} {:<12} {}\n", m["proof"].get<std::string>(),
                         m["goal"].get<std::string>(), m["mass"].get<std::string>());
    }
    out += "weights:\n";
    for (const auto& w : res["weights"]) weight_table(w, out);
    out += "profiles:\n";
    for (const auto& p : res["profiles"]) profile_table(p, out);
  } else if (command == "validate") {
    if (res["valid"].get<bool>()) {
      out += res["summary"].get<std::string>() + "\n";
      for (const auto& [goal, n] : res["class_sizes"].items()) {
        out += fmt::format("  {:<24} {}\n", goal, n.dump());
      }
    } else {
      for (const auto& v : res["violations"]) {
        out += fmt::format("  {}: {}\n", v["code"].get<std::string>(),
                           v["message"].get<std::string>());
      }
    }
  } else if (command == "weight") {
    weight_table(res, out);
  } else if (command == "profile") {
    for (const auto& p : res["profiles"]) profile_table(p, out);
  } else if (command == "entropy") {
    out += fmt::format("  H({}) = {} bits\n", join(res["distribution"]),
                       fixed6(res["entropy_bits"].get<double>()));
  } else if (command == "check") {
    for (const auto& p : res["proofs"]) {
      out += fmt::format("  {} {}\n", p["id"].get<std::string>(),
                         p["valid"].get<bool>() ? "valid" : "INVALID");
      for (const auto& s : p["steps"]) {
        std::string via = s["rule"].is_null() ? "unjustified" : s["rule"].get<std::string>();
        if (s.contains("implicit")) {
          via += fmt::format(" via {} [{}]", s["implicit"]["formula"].get<std::string>(),
                             s["implicit"]["rule"].get<std::string>());
        }
        out += fmt::format("    {:>2}. {:<22} {} {}\n", s["index"].dump(),
                           s["formula"].get<std::string>(), via,
                           s["premises"].empty() ? "" : "(" + join(s["premises"]) + ")");
      }
      for (const auto& v : p["violations"]) {
        out += fmt::format("    step {}: {}\n", v["step"].dump(), v["reason"].get<std::string>());
      }
    }
  }
  return out;
}

// ---- commands ----------------------------------------------------------------

json demo_results() {
  const auto ks = builtin_example();
  const auto measure = proof_measure(ks);
  json res;
  res["system"] = {{"M", ks.goal_count()}, {"proofs", ks.proofs().size()}};
  res["system"]["class_sizes"] = class_sizes(ks);
  json m = json::array();
  for (std::size_t p = 0; p < ks.proofs().size(); ++p) {
    m.push_back({{"proof", ks.proofs()[p].id},
                 {"goal", ks.proofs()[p].goal.text()},
                 {"mass", format_rational(measure.per_proof[p])}});
  }
  res["measure"] = m;

  auto f = [](std::string_view s) { return Formula::normalize(s); };
  const std::vector<std::pair<std::string, std::vector<Formula>>> subsets{
      {"empty", {}},
      {"U1", {f("Day=Fri")}},
      {"S1", {f("Brd(R2,Dok)")}},
      {"S2", {f("Day≠Fri"), f("Brd(R2,Dok)")}},
      {"S3", {f("Day≠Fri"), f("Brd(R2,Dok)"), f("Win(Bok)∨Win(Fok)")}},
  };
  json ws = json::array();
  for (const auto& [label, subset] : subsets) {
    json w;
    w["label"] = label;
    const auto computed = weight_json(ks, measure, subset);
    for (const auto& [k, v] : computed.items()) w[k] = v;
    ws.push_back(w);
  }
  res["weights"] = ws;
  json ps = json::array();
  for (const auto& p : profile_all(ks, measure)) ps.push_back(profile_json(p));
  res["profiles"] = ps;
  return res;
}

std::vector<inference::KFormula> kformulas(std::span<const Formula> fs,
                                           const inference::WorldSpec& world,
                                           const std::string& where) {
  std::vector<inference::KFormula> out;
  for (const auto& f : fs) {
    try {
      out.push_back(inference::parse_kformula(f.text(), world));
    } catch (const Error& e) {
      throw Exit{kInputFailure, where + ": " + e.what()};
    }
  }
  return out;
}

json check_json(const inference::CheckedProof& c) {
  json j;
  j["id"] = c.proof_id;
  j["valid"] = c.valid;
  json steps = json::array();
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const auto& s = c.steps[i];
    json step;
    step["index"] = i;
    step["formula"] = inference::to_string(s.conclusion);
    step["rule"] = s.rule ? json(std::string(inference::to_string(*s.rule))) : json(nullptr);
    step["premises"] = s.premises;
    if (s.implicit) {
      step["implicit"] = {{"formula", inference::to_string(s.implicit->conclusion)},
                          {"rule", std::string(inference::to_string(s.implicit->rule))},
                          {"premises", s.implicit->premises}};
    }
    steps.push_back(step);
  }
  j["steps"] = steps;
  json vs = json::array();
  for (const auto& v : c.violations) vs.push_back({{"step", v.step}, {"reason", v.reason}});
  j["violations"] = vs;
  j["unused"] = c.unused;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entropic weight and convergence profiles of proofs in finite knowledge systems",
               "proofinfo"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  auto* demo = app.add_subcommand("demo", "Reproduce the competition-winner example");

  std::string ks_path;
  auto* validate = app.add_subcommand("validate", "Validate a knowledge-system document");
  validate->add_option("path", ks_path, "Knowledge-system JSON")->required();

  auto* weight_cmd = app.add_subcommand("weight", "Entropic weight of a formula subset");
  weight_cmd->add_option("path", ks_path, "Knowledge-system JSON")->required();
  std::string subset_flag;
  std::string subset_file;
  auto* subset_opt = weight_cmd->add_option("--subset", subset_flag, "Comma-separated formulas");
  auto* subset_file_opt =
      weight_cmd->add_option("--subset-file", subset_file, "File with one formula per line");
  subset_opt->excludes(subset_file_opt);

  auto* profile_cmd = app.add_subcommand("profile", "Convergence profile of proofs");
  profile_cmd->add_option("path", ks_path, "Knowledge-system JSON")->required();
  std::string proof_id;
  bool all = false;
  bool allow_large = false;
  auto* proof_opt = profile_cmd->add_option("--proof", proof_id, "Proof id");
  auto* all_opt = profile_cmd->add_flag("--all", all, "Profile every proof");
  proof_opt->excludes(all_opt);
  profile_cmd->add_flag("--allow-large", allow_large, "Lift the 30-formula search guard");

  auto* entropy_cmd = app.add_subcommand("entropy", "Shannon entropy of a distribution");
  std::string dist;
  entropy_cmd->add_option("--dist", dist, "Comma-separated rationals p/q")->required();

  auto* check_cmd = app.add_subcommand("check", "Check proofs against a world");
  std::string world_path;
  std::string listing;
  bool strict = false;
  check_cmd->add_option("world", world_path, "World JSON")->required();
  auto* ks_opt = check_cmd->add_option("proofs", ks_path, "Knowledge-system JSON");
  auto* listing_opt =
      check_cmd->add_option("--listing", listing, "Semicolon-separated proof formulas");
  ks_opt->excludes(listing_opt);
  check_cmd->add_flag("--strict", strict, "Require fully explicit derivations");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInputFailure;
  }

  try {
    json r;
    int code = kOk;
    auto sub = app.get_subcommands().front();
    const std::string name = sub->get_name();

    if (sub == demo) {
      r = envelope(name, args, builtin_example_document());
      r["results"] = demo_results();
    } else if (sub == validate) {
      const auto text = read_file(ks_path);
      r = envelope(name, args, text);
      auto outcome = try_parse_knowledge_system(parse_json(text, ks_path));
      json res;
      res["valid"] = outcome.system.has_value();
      if (outcome.system) {
        const auto& ks = *outcome.system;
        res["summary"] = fmt::format("M={}, proofs={}", ks.goal_count(), ks.proofs().size());
        res["M"] = ks.goal_count();
        res["proofs"] = ks.proofs().size();
        res["class_sizes"] = class_sizes(ks);
      } else {
        res["violations"] = violations_json(outcome.violations);
        code = kDomainViolation;
      }
      r["results"] = res;
    } else if (sub == weight_cmd) {
      const auto text = read_file(ks_path);
      const auto ks = load_system(ks_path, text);
      std::vector<std::string> raw = subset_file.empty() ? split(subset_flag, ',') : [&] {
        std::vector<std::string> lines;
        std::istringstream in(read_file(subset_file));
        for (std::string line; std::getline(in, line);) {
          if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
        }
        return lines;
      }();
      std::vector<Formula> subset;
      for (const auto& s : raw) subset.push_back(Formula::normalize(s));
      r = envelope(name, args, text);
      r["results"] = weight_json(ks, proof_measure(ks), subset);
    } else if (sub == profile_cmd) {
      if (proof_id.empty() && !all) throw Exit{kInputFailure, "profile needs --proof or --all"};
      const auto text = read_file(ks_path);
      const auto ks = load_system(ks_path, text);
      const auto measure = proof_measure(ks);
      SearchOptions options;
      options.allow_large = allow_large;
      json ps = json::array();
      if (all) {
        for (const auto& p : profile_all(ks, measure, options)) ps.push_back(profile_json(p));
      } else {
        ps.push_back(profile_json(profile(ks, measure, ks.proof(proof_id), options)));
      }
      r = envelope(name, args, text);
      r["results"]["profiles"] = ps;
    } else if (sub == entropy_cmd) {
      std::vector<Rational> ps;
      for (const auto& s : split(dist, ',')) {
        try {
          ps.push_back(parse_rational(s));
        } catch (const std::invalid_argument& e) {
          throw Exit{kInputFailure, "--dist: " + std::string(e.what())};
        }
      }
      const double h = shannon_entropy(ps);
      r = envelope(name, args, dist);
      json d = json::array();
      for (const auto& p : ps) d.push_back(format_rational(p));
      r["results"] = {{"distribution", d}, {"entropy_bits", h}};
    } else if (sub == check_cmd) {
      const auto world_text = read_file(world_path);
      inference::WorldSpec world;
      try {
        world = inference::parse_world_text(world_text);
      } catch (const Error& e) {
        throw Exit{kInputFailure, world_path + ": " + e.what()};
      }
      std::vector<std::pair<std::string, std::vector<inference::KFormula>>> proofs;
      std::vector<inference::KFormula> goals;
      std::string digest_input = world_text + "\n";
      if (!ks_path.empty()) {
        const auto text = read_file(ks_path);
        digest_input += text;
        const auto ks = load_system(ks_path, text);
        goals = kformulas(ks.goals(), world, ks_path);
        for (const auto& p : ks.proofs()) {
          proofs.emplace_back(p.id, kformulas(p.formulas, world, ks_path + " proof " + p.id));
        }
      } else if (!listing.empty()) {
        digest_input += listing;
        std::vector<Formula> fs;
        for (const auto& s : split(listing, ';')) fs.push_back(Formula::normalize(s));
        proofs.emplace_back("listing", kformulas(fs, world, "--listing"));
        for (const auto& p : world.participants) goals.push_back(inference::KFormula::win(p));
      } else {
        throw Exit{kInputFailure, "check needs a proofs file or --listing"};
      }
      inference::CheckOptions options;
      options.strict = strict;
      json res;
      res["strict"] = strict;
      json checked = json::array();
      bool all_valid = true;
      for (const auto& [id, formulas] : proofs) {
        auto c = inference::check_proof(world, formulas, goals, options, id);
        all_valid = all_valid && c.valid;
        checked.push_back(check_json(c));
      }
      res["all_valid"] = all_valid;
      res["proofs"] = checked;
      r = envelope(name, args, digest_input);
      r["results"] = res;
      if (!all_valid) code = kDomainViolation;
    }

    out << (format == "table" ? render_table(r) : report::dump(r));
    return code;
  } catch (const Exit& e) {
    err << e.message << "\n";
    return e.code;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kDomainViolation;
  }
}

}  // namespace proofinfo::cli
