#include "digitop/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "digitop/audit.hpp"
#include "digitop/compat.hpp"
#include "digitop/contraction.hpp"
#include "digitop/enumerate.hpp"
#include "digitop/freezing.hpp"
#include "digitop/io.hpp"
#include "digitop/metric.hpp"

namespace digitop::cli {

namespace {

std::uint64_t default_budget() {
  if (const char* env = std::getenv("DIGITOP_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("DIGITOP_BUDGET is not an integer");
    }
  }
  return 10'000'000;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::string points_str(const std::vector<Point>& pts) {
  if (pts.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ',';
    s += to_string(pts[i]);
  }
  return s;
}

std::string pair_str(const std::optional<std::pair<Point, Point>>& p) {
  if (!p) return "-";
  return "(" + to_string(p->first) + "," + to_string(p->second) + ")";
}

Adjacency parse_adjacency(const std::string& s, int n) {
  if (s.size() >= 2 && s[0] == 'c') {
    const int u = std::stoi(s.substr(1));
    Adjacency a = Adjacency::cu(u);
    a.validate_for_dimension(n);
    return a;
  }
  throw std::invalid_argument("bad --adj value '" + s + "'; expected c<u>");
}

std::string verdict_str(const AssertionRecord& rec) {
  std::string v = to_string(rec.verdict);
  if (rec.also) v += "+" + to_string(*rec.also);
  return v;
}

// ---------------------------------------------------------------------------

struct ImageGenArgs {
  std::vector<std::int64_t> extents;
  std::string adj;
  std::string out_path;
};

int run_image_gen_rect(const ImageGenArgs& a, std::ostream& out) {
  DigitalImage img = a.adj.empty()
                         ? rectangle(a.extents)
                         : rectangle(a.extents, parse_adjacency(
                                                    a.adj,
                                                    static_cast<int>(a.extents.size())));
  if (a.out_path.empty()) {
    write_digimg(out, img);
  } else {
    save_digimg(a.out_path, img);
    out << "wrote " << a.out_path << " points=" << img.size() << "\n";
  }
  return kExitVerified;
}

int run_image_validate(const std::string& path, std::ostream& out,
                       std::ostream& err) {
  try {
    const DigitalImage img = load_digimg(path);
    out << "ok dim=" << img.dimension() << " points=" << img.size()
        << " adjacency=" << img.adjacency().describe() << "\n";
    return kExitVerified;
  } catch (const ParseError& e) {
    err << path << ": " << e.what() << "\n";
    return kExitUsage;
  }
}

struct EnumerateArgs {
  std::string image_path;
  bool continuous = false;
  bool count_only = false;
  std::uint64_t budget = 0;
  int jobs = 1;
};

int run_maps_enumerate(const EnumerateArgs& a, std::ostream& out) {
  auto X = share(load_digimg(a.image_path));
  EnumerationConstraints c;
  c.require_continuous = a.continuous;
  c.node_budget = a.budget;
  MapVisitor visit;
  if (!a.count_only) {
    visit = [&](const SelfMap& m) {
      out << "map " << m.describe() << "\n";
      return true;
    };
  }
  const EnumerationResult r =
      a.jobs > 1 ? enumerate_maps_parallel(X, c, a.jobs, visit)
                 : enumerate_maps(X, c, visit);
  out << "count=" << r.count << "\n";
  out << "nodes=" << r.nodes << "\n";
  return r.status == EnumerationStatus::BudgetExceeded ? kExitBudget
                                                       : kExitVerified;
}

struct FreezingArgs {
  std::string image_path;
  std::string set_path;
  bool minimal = false;
  std::uint64_t budget = 0;
  std::string witness_out;
};

void print_witness(const SelfMap& w, const FreezingArgs& a, std::ostream& out) {
  if (a.witness_out.empty()) {
    out << "witness=inline\n";
    write_digmap(out, w);
  } else {
    save_digmap(a.witness_out, w);
    out << "witness=" << a.witness_out << "\n";
  }
}

int run_freezing_verify(const FreezingArgs& a, std::ostream& out) {
  auto X = share(load_digimg(a.image_path));
  const std::vector<Point> A = load_point_set(a.set_path, X->dimension());
  if (a.minimal) {
    const MinimalityReport r = is_minimal_freezing_set(X, A, a.budget);
    switch (r.verdict) {
      case MinimalityReport::Verdict::BudgetExceeded:
        out << "verdict=BUDGET_EXCEEDED\n";
        out << "nodes=" << r.nodes_explored << "\n";
        out << "ms=" << r.elapsed.count() << "\n";
        return kExitBudget;
      case MinimalityReport::Verdict::NotFreezing:
        out << "verdict=NOT_FREEZING minimal=false\n";
        if (r.base.witness) print_witness(*r.base.witness, a, out);
        break;
      case MinimalityReport::Verdict::NotMinimal:
        out << "verdict=FREEZING minimal=false removable="
            << to_string(*r.removable) << "\n";
        break;
      case MinimalityReport::Verdict::Minimal:
        out << "verdict=FREEZING minimal=true\n";
        break;
    }
    out << "nodes=" << r.nodes_explored << "\n";
    out << "ms=" << r.elapsed.count() << "\n";
    return r.verdict == MinimalityReport::Verdict::Minimal ? kExitVerified
                                                           : kExitRefuted;
  }
  const FreezingReport r = is_freezing_set(X, A, a.budget);
  out << "verdict=" << to_string(r.verdict) << "\n";
  if (r.witness) print_witness(*r.witness, a, out);
  out << "nodes=" << r.nodes_explored << "\n";
  out << "ms=" << r.elapsed.count() << "\n";
  switch (r.verdict) {
    case FreezingReport::Verdict::Freezing: return kExitVerified;
    case FreezingReport::Verdict::NotFreezing: return kExitRefuted;
    case FreezingReport::Verdict::BudgetExceeded: return kExitBudget;
  }
  return kExitUsage;
}

struct ClassifyArgs {
  std::string image_path;
  std::string map_path;
  std::string metric = "lp:2";
  std::string classes = "contraction,quasi,theta";
};

int run_classify(const ClassifyArgs& a, std::ostream& out) {
  auto X = share(load_digimg(a.image_path));
  const SelfMap f = load_digmap(a.map_path, X);
  const Metric d = Metric::from_selector(a.metric, X);

  bool all_satisfied = true;
  std::istringstream cs(a.classes);
  std::string cls;
  while (std::getline(cs, cls, ',')) {
    if (cls == "contraction" || cls == "quasi") {
      const ContractionReport r = cls == "contraction"
                                      ? digital_contraction_coefficient(f, d)
                                      : is_quasi_contraction(f, d);
      out << "class=" << r.class_name << " satisfied=" << bool_str(r.satisfied)
          << " qstar=" << (r.best_coefficient ? r.best_coefficient->str() : "-")
          << " witness=" << pair_str(r.witness_pair);
      if (r.indeterminate) out << " indeterminate=true";
      out << "\n";
      all_satisfied = all_satisfied && r.satisfied;
    } else if (cls == "theta") {
      const ThetaReport r = admits_theta_contraction(f, d);
      out << "class=theta satisfied=" << bool_str(r.admits)
          << " qstar=- witness=" << pair_str(r.failing_pair);
      if (r.indeterminate) out << " indeterminate=true";
      out << "\n";
      all_satisfied = all_satisfied && r.admits;
    } else {
      throw std::invalid_argument("unknown class '" + cls +
                                  "'; expected contraction, quasi, theta");
    }
  }
  return all_satisfied ? kExitVerified : kExitRefuted;
}

struct CompatArgs {
  std::string image_path;
  std::string s_path;
  std::string t_path;
  std::string metric = "lp:2";
};

int run_compat(const CompatArgs& a, std::ostream& out) {
  auto X = share(load_digimg(a.image_path));
  const SelfMap S = load_digmap(a.s_path, X);
  const SelfMap T = load_digmap(a.t_path, X);
  const Metric d = Metric::from_selector(a.metric, X);
  const CompatibilityReport r = compatibility_report(S, T, d);
  out << "wc=" << bool_str(r.weakly_compatible) << " compat="
      << bool_str(r.compatible) << " typeA=" << bool_str(r.type_A)
      << " typeP=" << bool_str(r.type_P) << " owc="
      << bool_str(r.occasionally_weakly_compatible)
      << " coincidence=" << points_str(r.coincidence_points);
  if (r.vacuous) out << " vacuous=true";
  out << "\n";
  return r.compatible ? kExitVerified : kExitRefuted;
}

int run_audit_list(std::ostream& out) {
  for (const AssertionRecord& rec : list_assertions()) {
    out << rec.id << " verdict=" << verdict_str(rec) << " evidence=";
    for (std::size_t i = 0; i < rec.evidence.size(); ++i) {
      if (i) out << ',';
      out << to_string(rec.evidence[i].kind);
    }
    out << " source=" << rec.source << "\n";
  }
  return kExitVerified;
}

struct AuditRunArgs {
  std::string id;
  bool json = false;
  std::uint64_t budget = 0;
};

int run_audit_run(const AuditRunArgs& a, std::ostream& out) {
  const AssertionRecord* rec = find_assertion(a.id);
  if (!rec) throw std::invalid_argument("unknown assertion id " + a.id);
  AuditOptions opts;
  opts.budget = a.budget;
  const AuditReport rep = run_audit(a.id, opts);

  if (a.json) {
    nlohmann::json j;
    j["id"] = rep.id;
    j["verdict"] = verdict_str(*rec);
    j["status"] = to_string(rep.status);
    j["checks"] = nlohmann::json::array();
    for (const AuditCheck& c : rep.checks) {
      j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    out << j.dump(2) << "\n";
  } else {
    out << "id=" << rep.id << " verdict=" << verdict_str(*rec)
        << " status=" << to_string(rep.status) << "\n";
    for (const AuditCheck& c : rep.checks) {
      out << "- [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
      if (!c.detail.empty()) out << ": " << c.detail;
      out << "\n";
    }
  }
  return rep.status == AuditStatus::Failed ? kExitRefuted : kExitVerified;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"digitop: fixed points, rigidity, and audits on digital images"};
  app.require_subcommand(1);

  std::uint64_t budget = 0;  // resolved after parse so the env var can apply

  // image ------------------------------------------------------------------
  auto* image = app.add_subcommand("image", "generate and validate DIGIMG files");
  image->require_subcommand(1);
  auto* gen = image->add_subcommand("gen", "generate images");
  gen->require_subcommand(1);
  ImageGenArgs gen_args;
  auto* rect = gen->add_subcommand("rect", "grid product of intervals [0,m_j]");
  rect->add_option("extents", gen_args.extents, "extents m_1 ... m_n")
      ->required()
      ->expected(-1);
  rect->add_option("--adj", gen_args.adj, "adjacency c<u> (default c<n>)");
  rect->add_option("-o,--out", gen_args.out_path, "output path (default stdout)");

  std::string validate_path;
  auto* validate = image->add_subcommand("validate", "parse and check a DIGIMG file");
  validate->add_option("file", validate_path, "DIGIMG file")->required();

  // maps ---------------------------------------------------------------
  auto* maps = app.add_subcommand("maps", "self-map enumeration");
  maps->require_subcommand(1);
  EnumerateArgs enum_args;
  auto* enumerate = maps->add_subcommand("enumerate", "enumerate self-maps");
  enumerate->add_option("image", enum_args.image_path, "DIGIMG file")->required();
  enumerate->add_flag("--continuous", enum_args.continuous,
                      "only digitally continuous maps");
  enumerate->add_flag("--count-only", enum_args.count_only, "suppress map listing");
  enumerate->add_option("--budget", budget, "search-node budget");
  enumerate->add_option("--jobs", enum_args.jobs,
                        "parallel partitions (deterministic; default serial)");

  // freezing -----------------------------------------------------------
  auto* freezing = app.add_subcommand("freezing", "freezing-set verification");
  freezing->require_subcommand(1);
  FreezingArgs fr_args;
  auto* verify = freezing->add_subcommand("verify", "verify a freezing set");
  verify->add_option("image", fr_args.image_path, "DIGIMG file")->required();
  verify->add_option("--set", fr_args.set_path, "point-set file")->required();
  verify->add_flag("--minimal", fr_args.minimal, "also certify minimality");
  verify->add_option("--budget", budget, "search-node budget");
  verify->add_option("--witness-out", fr_args.witness_out,
                     "write a NOT_FREEZING witness to this DIGMAP file");

  // classify -------------------------------------------------------------
  ClassifyArgs cl_args;
  auto* classify = app.add_subcommand("classify", "contraction-type classifiers");
  classify->add_option("image", cl_args.image_path, "DIGIMG file")->required();
  classify->add_option("map", cl_args.map_path, "DIGMAP file")->required();
  classify->add_option("--metric", cl_args.metric, "lp:<p> or spath (default lp:2)");
  classify->add_option("--classes", cl_args.classes,
                       "comma list of contraction,quasi,theta");

  // compat ---------------------------------------------------------------
  CompatArgs co_args;
  auto* compat = app.add_subcommand("compat", "compatibility report for a map pair");
  compat->add_option("image", co_args.image_path, "DIGIMG file")->required();
  compat->add_option("smap", co_args.s_path, "DIGMAP file for S")->required();
  compat->add_option("tmap", co_args.t_path, "DIGMAP file for T")->required();
  compat->add_option("--metric", co_args.metric, "lp:<p> or spath (default lp:2)");

  // audit ------------------------------------------------------------------
  auto* audit = app.add_subcommand("audit", "assertion registry");
  audit->require_subcommand(1);
  auto* alist = audit->add_subcommand("list", "list all registry records");
  AuditRunArgs au_args;
  auto* arun = audit->add_subcommand("run", "execute a record's evidence");
  arun->add_option("id", au_args.id, "assertion id, e.g. SUG-3.1")->required();
  arun->add_flag("--json", au_args.json, "emit a JSON report");
  arun->add_option("--budget", budget, "search-node budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitVerified : kExitUsage;
  }

  try {
    if (budget == 0) budget = default_budget();
    enum_args.budget = budget;
    fr_args.budget = budget;
    au_args.budget = budget;

    if (rect->parsed()) return run_image_gen_rect(gen_args, out);
    if (validate->parsed()) return run_image_validate(validate_path, out, err);
    if (enumerate->parsed()) return run_maps_enumerate(enum_args, out);
    if (verify->parsed()) return run_freezing_verify(fr_args, out);
    if (classify->parsed()) return run_classify(cl_args, out);
    if (compat->parsed()) return run_compat(co_args, out);
    if (alist->parsed()) return run_audit_list(out);
    if (arun->parsed()) return run_audit_run(au_args, out);
    err << "no subcommand selected\n";
    return kExitUsage;
  } catch (const BudgetExceededError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace digitop::cli
