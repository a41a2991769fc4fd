#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "loopforge/abelian.hpp"
#include "loopforge/catalog.hpp"
#include "loopforge/conjecture.hpp"
#include "loopforge/folder.hpp"
#include "loopforge/frobenius.hpp"
#include "loopforge/group_io.hpp"
#include "loopforge/numeric.hpp"
#include "loopforge/search.hpp"
#include "loopforge/version.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace loopforge;

namespace {

struct RunConfig {
  std::size_t maxGroupOrder = kDefaultMaxOrder;
  std::uint64_t searchNodeBudget = kDefaultNodeBudget;
  std::uint64_t randomSeed = 1;
  std::string out;  // report path; stdout when empty
  std::string format = "json";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json config_json(const RunConfig& c) {
  return json{{"maxGroupOrder", c.maxGroupOrder},
              {"searchNodeBudget", c.searchNodeBudget},
              {"randomSeed", c.randomSeed}};
}

// Leaf values keyed by their dotted path, in document order.
void flatten(const json& j, const std::string& path,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, rows);
  } else if (j.is_array() && !j.empty() &&
             std::any_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "." + std::to_string(i), rows);
  } else if (j.is_string()) {
    rows.emplace_back(path, j.get<std::string>());
  } else if (j.is_array()) {
    std::string list;
    for (const auto& x : j) list += (list.empty() ? "" : " ") + x.dump();
    rows.emplace_back(path, list);
  } else {
    rows.emplace_back(path, j.dump());
  }
}

std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string q = "\"";
  for (char ch : v) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

void emit_report(const RunConfig& c, const std::string& command, json result) {
  json report{{"tool", "loopforge"},
              {"version", kVersion},
              {"command", command},
              {"config", config_json(c)},
              {"result", std::move(result)}};
  std::string text;
  if (c.format == "json") {
    text = report.dump(2) + "\n";
  } else {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(report, "", rows);
    std::ostringstream os;
    if (c.format == "csv") os << "key,value\n";
    for (const auto& [k, v] : rows) {
      if (c.format == "csv")
        os << k << "," << csv_field(v) << "\n";
      else
        os << k << ": " << v << "\n";
    }
    text = os.str();
  }
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + c.out);
  f << text;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path.string());
  f << text;
}

fs::path prepare_dir(const std::string& dir) {
  fs::path p(dir);
  fs::create_directories(p);
  return p;
}

GroupPtr load_group(const std::string& path, const RunConfig& c) {
  BuildOptions o;
  o.maxOrder = c.maxGroupOrder;
  return read_group_file(path, o);
}

ElementSet parse_subgroup(const GroupPtr& g, const std::string& text) {
  std::vector<Elem> members = parse_index_list(text);
  for (Elem x : members)
    if (x >= g->order()) throw UsageError("element index " + std::to_string(x) + " out of range");
  // The members given are treated as generators, so "1" means <1>.
  return generated_subgroup(g, members);
}

// Emits one .folder per transversal next to a copy of the group table.
std::vector<std::string> emit_folders(const fs::path& dir, const std::vector<LoopFolder>& folders,
                                      const std::string& stem) {
  std::vector<std::string> files;
  if (folders.empty()) return files;
  write_file(dir / "group.grp", format_group_table(*folders.front().group()));
  for (std::size_t i = 0; i < folders.size(); ++i) {
    std::string name = stem + "_" + std::to_string(i) + ".folder";
    write_file(dir / name, format_folder(folders[i], "group.grp"));
    files.push_back(name);
  }
  return files;
}

json folder_json(const LoopFolder& f) {
  return json{{"subgroup", f.subgroup().members()},
              {"transversal", f.transversal()},
              {"order", f.order()},
              {"rcc", f.is_rcc()},
              {"faithful", f.is_faithful()},
              {"generating", f.is_generating()}};
}

std::string sanitize(const std::string& name) {
  std::string s;
  for (char ch : name) s += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
  return s;
}

// ---- subcommands ------------------------------------------------------------

int run_catalog(const RunConfig& c, std::size_t maxOrder, bool nonAbelian, const std::string& emit) {
  CatalogOptions o;
  o.maxOrder = maxOrder;
  o.nonAbelianOnly = nonAbelian;
  auto entries = small_group_catalog(o);
  json groups = json::array();
  std::optional<fs::path> dir;
  if (!emit.empty()) dir = prepare_dir(emit);
  json index = json::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    json item{{"name", e.name},
              {"order", e.group->order()},
              {"constructor", e.constructor},
              {"parameters", e.parameters}};
    if (dir) {
      char prefix[16];
      std::snprintf(prefix, sizeof prefix, "%03zu_", i);
      std::string file = prefix + sanitize(e.name) + ".grp";
      write_file(*dir / file, format_group_table(*e.group));
      item["file"] = file;
      index.push_back(item);
    }
    groups.push_back(std::move(item));
  }
  if (dir) write_file(*dir / "index.json", index.dump(2) + "\n");
  json coverage = json::array();
  for (std::size_t n = 1; n <= maxOrder; ++n) {
    std::size_t have = 0;
    for (const auto& e : entries) have += e.group->order() == n;
    std::size_t known = known_group_count(n);
    if (nonAbelian) known -= abelian_group_count(n);
    if (known == 0 && have == 0) continue;
    coverage.push_back({{"order", n}, {"catalogued", have}, {"known", known}});
  }
  emit_report(c, "catalog", {{"count", entries.size()}, {"groups", groups}, {"coverage", coverage}});
  return 0;
}

int run_enumerate(const RunConfig& c, const std::string& groupPath, const std::string& subgroup,
                  bool center, std::size_t limit, bool requireGenerating, const std::string& emit) {
  GroupPtr g = load_group(groupPath, c);
  ElementSet h = center ? loopforge::center(g) : parse_subgroup(g, subgroup);
  SearchOptions so;
  so.limit = limit;
  so.nodeBudget = c.searchNodeBudget;
  TransversalSearch s = enumerate_invariant_transversals(h, so);
  std::vector<LoopFolder> folders;
  for (const auto& t : s.transversals) {
    LoopFolder f = validate_folder(h, t);
    if (!requireGenerating || f.is_generating()) folders.push_back(std::move(f));
  }
  json result{{"group", groupPath},
              {"subgroup", h.members()},
              {"count", s.count},
              {"emitted", folders.size()},
              {"requireGenerating", requireGenerating},
              {"limit", limit},
              {"nodes", s.nodes},
              {"nodeBudget", so.nodeBudget},
              {"complete", s.complete}};
  json list = json::array();
  for (const auto& f : folders) list.push_back(folder_json(f));
  result["folders"] = list;
  if (!emit.empty()) result["files"] = emit_folders(prepare_dir(emit), folders, "transversal");
  emit_report(c, "enumerate", result);
  return 0;
}

int run_folder(const RunConfig& c, const std::string& path, const std::string& emitLoop) {
  LoopFolder f = read_folder_file(path);
  json result = folder_json(f);
  result["flagsConsistent"] = f.flags_consistent();
  if (f.is_rcc()) result["derivedForm"] = is_derived_form(f);
  result["normalizerFactorization"] = normalizer_factorization_check(f);
  if (f.is_faithful() && f.is_generating()) {
    RoundtripResult rt = envelope_roundtrip(f);
    result["envelopeRoundtrip"] = rt.ok;
    if (!rt.ok) result["roundtripFailure"] = rt.failure;
  }
  LoopTable l = loop_from_folder(f);
  result["loopAssociative"] = is_associative(l);
  result["loopRcc"] = is_rcc_loop(l).rcc;
  if (!emitLoop.empty()) write_file(emitLoop, format_loop(l));
  emit_report(c, "folder", result);
  return 0;
}

int run_loop(const RunConfig& c, const std::string& path, const std::string& emitDir) {
  LoopTable l = parse_loop_text(read_text_file(path));
  RccCheck rcc = is_rcc_loop(l);
  json result{{"order", l.order()}, {"associative", is_associative(l)}, {"rcc", rcc.rcc}};
  if (rcc.witness) result["rccWitness"] = {rcc.witness->first, rcc.witness->second};
  LoopFolder env = envelope(l, c.maxGroupOrder);
  result["rightMultiplicationGroupOrder"] = env.group()->order();
  result["stabilizerOrder"] = env.subgroup().size();
  result["envelope"] = folder_json(env);
  if (!emitDir.empty()) result["files"] = emit_folders(prepare_dir(emitDir), {env}, "envelope");
  emit_report(c, "loop", result);
  return 0;
}

int run_frobenius(const RunConfig& c, const std::string& groupPath, const std::string& subgroup,
                  const std::string& emit) {
  GroupPtr g = load_group(groupPath, c);
  auto fs = detect_frobenius(g);
  json result{{"group", groupPath}, {"frobenius", fs.has_value()}};
  if (!fs) {
    emit_report(c, "frobenius", result);
    return 0;
  }
  result["kernel"] = fs->kernel.members();
  result["complement"] = fs->complement.members();
  result["complementAbelian"] = fs->complementAbelian;
  IsaacsConditions ic = isaacs_criteria(fs->kernel, fs->complement);
  result["isaacs"] = {{"a", ic.a}, {"b", ic.b}, {"c", ic.c}, {"d", ic.d}, {"e", ic.e}, {"f", ic.f}};
  KernelDerivedCheck kd = kernel_derived_check(*fs);
  result["kernelIsDerived"] = kd.kernelIsDerived;
  result["kernelDerivedConsistent"] = kd.consistent();
  bool ok = ic.agree() && ic.f && kd.consistent();
  if (fs->complementAbelian) {
    bool cosets = classes_outside_kernel_are_cosets(*fs);
    result["classesOutsideKernelAreCosets"] = cosets;
    ok = ok && cosets;
  }
  if (!subgroup.empty()) {
    ElementSet h = parse_subgroup(g, subgroup);
    if (!h.subset_of(fs->complement)) throw UsageError("the subgroup must lie inside the complement");
    if (!fs->complementAbelian) throw UsageError("transversal lifting needs an abelian complement");
    SearchOptions so;
    so.nodeBudget = c.searchNodeBudget;
    TransversalSearch s = enumerate_invariant_transversals(h, so);
    auto lifts = lift_frobenius_transversals(*fs, h);
    const std::size_t index = fs->complement.size() / h.size();
    std::uint64_t predicted = 1;
    for (std::size_t i = 0; i + 1 < index; ++i) predicted *= h.size();
    std::vector<std::vector<Elem>> liftSets;
    for (const auto& f : lifts) liftSets.push_back(f.transversal());
    std::sort(liftSets.begin(), liftSets.end());
    bool same = s.complete && liftSets == s.transversals;
    json shapes = json::array();
    for (const auto& t : s.transversals) shapes.push_back(transversal_shape(*fs, h, t).tauReps);
    auto envs = frobenius_rcc_envelopes(*fs, h);
    json envList = json::array();
    std::vector<LoopFolder> emitted;
    for (const auto& e : envs) {
      json item = folder_json(e.folder);
      item["envelopeRoundtrip"] = e.roundtrip;
      envList.push_back(item);
      ok = ok && e.roundtrip;
    }
    for (const auto& f : lifts) emitted.push_back(f);
    result["subgroup"] = h.members();
    result["counting"] = {{"enumerated", s.count},
                          {"lifted", lifts.size()},
                          {"predicted", predicted},
                          {"searchComplete", s.complete},
                          {"liftsMatchEnumeration", same}};
    result["tauReps"] = shapes;
    result["envelopes"] = envList;
    ok = ok && same && s.count == predicted && lifts.size() == predicted;
    if (!emit.empty()) result["files"] = emit_folders(prepare_dir(emit), emitted, "lift");
  }
  result["consistent"] = ok;
  emit_report(c, "frobenius", result);
  return ok ? 0 : 1;
}

int run_abelian(const RunConfig& c, const std::string& groupPath, const std::string& subgroup,
                const std::string& quotientLift, const std::string& emit) {
  GroupPtr g = load_group(groupPath, c);
  ElementSet h = parse_subgroup(g, subgroup);
  json result{{"group", groupPath}, {"subgroup", h.members()}};
  if (!quotientLift.empty()) {
    ElementSet q = parse_subgroup(g, quotientLift);
    QuotientLift lift = lift_generating_transversal_from_quotient(h, q);
    result["quotient"] = q.members();
    result["folder"] = folder_json(lift.folder);
    result["centralizerTrivial"] = lift.centralizerTrivial;
    if (lift.centralizerTrivial) result["envelopeRoundtrip"] = lift.roundtrip;
    if (!emit.empty()) result["files"] = emit_folders(prepare_dir(emit), {lift.folder}, "lift");
    emit_report(c, "abelian-transversal", result);
    return !lift.centralizerTrivial || lift.roundtrip ? 0 : 1;
  }
  if (!g->is_abelian()) throw UsageError("G is not abelian; use --quotient-lift");
  AbelianDecomposition d = invariant_factor_decomposition(g);
  const std::size_t rk = abelian_rank(g);
  result["invariantFactors"] = d.orders;
  result["factorGenerators"] = d.factorGenerators;
  result["rank"] = rk;
  const std::size_t index = g->order() / h.size();
  std::vector<Elem> t;
  std::string method;
  ElementSet whole = ElementSet::whole(g);
  if (g->order() == 1 || prime_of_power(g->order()) != 0) {
    if (index > rk) {
      t = generating_transversal_p_group(whole, h);
      method = "p-group-generating";
    } else {
      t = minimal_transversal_p_group(whole, h);
      method = "p-group-minimal";
    }
  } else {
    t = generating_transversal_abelian(whole, h);
    method = "abelian-generating";
  }
  LoopFolder f = validate_folder(h, t);
  result["method"] = method;
  result["folder"] = folder_json(f);
  if (method == "p-group-minimal") {
    std::vector<Elem> rest(t.begin() + 1, t.end());
    result["rankOfGenerated"] = abelian_rank(generated_subgroup(g, rest));
  }
  if (!emit.empty()) result["files"] = emit_folders(prepare_dir(emit), {f}, "abelian");
  emit_report(c, "abelian-transversal", result);
  return 0;
}

int run_verify(const RunConfig& c, std::size_t catalogMax, bool full) {
  ConjectureOptions o;
  o.nodeBudget = c.searchNodeBudget;
  o.fullEnumeration = full;
  ConjectureSweep sweep = conjecture_sweep(catalogMax, o);
  json groups = json::array();
  for (const auto& r : sweep.reports) {
    json ces = json::array();
    for (const auto& ce : r.counterexamples)
      ces.push_back({{"subgroup", ce.h}, {"transversal", ce.t}, {"witness", ce.witness}});
    json inc = json::array();
    for (const auto& s : r.skippedIncomplete) inc.push_back({{"subgroup", s.h}, {"budget", s.budget}});
    groups.push_back({{"group", r.groupName},
                      {"order", r.order},
                      {"subgroupsTested", r.abelianSubgroupsTested},
                      {"foldersFound", r.foldersFound},
                      {"transversalsExamined", r.transversalsExamined},
                      {"derivedFormTransversals", r.derivedFormTransversals},
                      {"counterexamples", ces},
                      {"incomplete", inc}});
  }
  json coverage = json::array();
  for (const auto& cv : sweep.coverage)
    coverage.push_back({{"order", cv.order}, {"catalogued", cv.catalogued}, {"known", cv.known}});
  json result{{"catalogMaxExclusive", catalogMax},
              {"fullEnumeration", full},
              {"note", "exhaustive check over the catalog; evidence for the conjecture, not a proof"},
              {"groupsTested", sweep.reports.size()},
              {"counterexamples", sweep.counterexampleCount()},
              {"coverage", coverage},
              {"groups", groups}};
  emit_report(c, "verify-conjecture", result);
  return sweep.counterexampleCount() == 0 ? 0 : 1;
}

int run_analyze_pq(const RunConfig& c, const std::string& folderPath, std::size_t p, std::size_t q) {
  LoopFolder f = read_folder_file(folderPath);
  PqReport r = pq_structure_analysis(f, p, q);
  json list = json::array();
  bool ok = true;
  for (const auto& a : r.analyses) {
    list.push_back({{"K", a.k},
                    {"T1", a.t1},
                    {"K1", a.k1},
                    {"H1", a.h1},
                    {"C", a.c},
                    {"lemmaHolds", a.lemmaHolds()},
                    {"kNormal", a.kNormal},
                    {"k1ProperInCentralizer", a.k1ProperInCentralizer},
                    {"verdict", pq_verdict_name(a.verdict)},
                    {"conclusionConfirmed", a.conclusionConfirmed}});
    ok = ok && a.lemmaHolds() && (a.verdict == PqVerdict::Unclassified || a.conclusionConfirmed);
  }
  emit_report(c, "analyze-pq", {{"folder", folderPath}, {"p", r.p}, {"q", r.q}, {"analyses", list}});
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariant transversals, RCC loop folders and related group constructions"};
  app.require_subcommand(1);
  RunConfig cfg;
  if (const char* env = std::getenv("LOOPFORGE_BUDGET")) {
    try {
      cfg.searchNodeBudget = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: LOOPFORGE_BUDGET must be a positive integer\n";
      return 2;
    }
  }
  app.add_option("--max-group-order", cfg.maxGroupOrder, "Largest group order accepted")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.searchNodeBudget, "Search node budget (overrides LOOPFORGE_BUDGET)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.randomSeed, "Seed recorded in reports");
  app.add_option("--out", cfg.out, "Write the report here instead of stdout");
  app.add_option("--format", cfg.format, "Report format")
      ->check(CLI::IsMember({"json", "text", "csv"}));

  std::size_t catMax = 40;
  bool catNonAbelian = false;
  std::string catEmit;
  auto* cat = app.add_subcommand("catalog", "List the small-group catalog");
  cat->add_option("--max-order", catMax, "Largest order (at most 64)")->check(CLI::Range(1, 64));
  cat->add_flag("--non-abelian", catNonAbelian, "Only non-abelian groups");
  cat->add_option("--emit", catEmit, "Directory for .grp files and index.json");

  std::string enGroup, enSub, enEmit;
  bool enCenter = false, enGen = false;
  std::size_t enLimit = 0;
  auto* en = app.add_subcommand("enumerate", "Enumerate G-invariant transversals containing 1");
  en->add_option("--group", enGroup, "Group file")->required()->check(CLI::ExistingFile);
  auto* enSubOpt = en->add_option("--subgroup", enSub, "Generators of H, by element index");
  auto* enCenterOpt = en->add_flag("--subgroup-center", enCenter, "Take H = Z(G)");
  enSubOpt->excludes(enCenterOpt);
  en->add_option("--limit", enLimit, "Stop after this many transversals (0: all)");
  en->add_flag("--require-generating", enGen, "Only emit transversals generating G");
  en->add_option("--emit", enEmit, "Directory for .folder files");

  std::string foFile, foLoop;
  auto* fo = app.add_subcommand("folder", "Validate a loop folder and check its envelope");
  fo->add_option("--file", foFile, "Folder file")->required()->check(CLI::ExistingFile);
  fo->add_option("--emit-loop", foLoop, "Write the folder's loop here");

  std::string loFile, loEmit;
  auto* lo = app.add_subcommand("loop", "Inspect a loop and build its envelope");
  lo->add_option("--file", loFile, "Loop file")->required()->check(CLI::ExistingFile);
  lo->add_option("--emit", loEmit, "Directory for the envelope folder");

  std::string frGroup, frSub, frEmit;
  auto* fr = app.add_subcommand("frobenius", "Frobenius structure, Isaacs conditions, lifted transversals");
  fr->add_option("--group", frGroup, "Group file")->required()->check(CLI::ExistingFile);
  fr->add_option("--subgroup", frSub, "Generators of H <= C");
  fr->add_option("--emit", frEmit, "Directory for lifted .folder files");

  std::string abGroup, abSub, abQ, abEmit;
  auto* ab = app.add_subcommand("abelian-transversal", "Generating transversals in abelian groups");
  ab->add_option("--group", abGroup, "Group file")->required()->check(CLI::ExistingFile);
  ab->add_option("--subgroup", abSub, "Generators of H")->required();
  ab->add_option("--quotient-lift", abQ, "Generators of a normal Q with G/Q abelian");
  ab->add_option("--emit", abEmit, "Directory for the .folder file");

  std::size_t vcMax = 40;
  bool vcFull = false;
  auto* vc = app.add_subcommand("verify-conjecture", "Check G' ∩ H = 1 over the catalog");
  vc->add_option("--catalog-max", vcMax, "Exclusive bound on group order")->check(CLI::Range(2, 65));
  vc->add_flag("--full-enumeration", vcFull, "Count all invariant transversals");

  std::string pqFolder;
  std::size_t pqP = 0, pqQ = 0;
  auto* pq = app.add_subcommand("analyze-pq", "Structure of an envelope of an RCC loop of order pq");
  pq->add_option("--folder", pqFolder, "Folder file")->required()->check(CLI::ExistingFile);
  pq->add_option("--p", pqP, "Prime p")->required();
  pq->add_option("--q", pqQ, "Prime q")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (en->parsed() && enSub.empty() && !enCenter)
      throw UsageError("enumerate needs --subgroup or --subgroup-center");
    if (cat->parsed()) return run_catalog(cfg, catMax, catNonAbelian, catEmit);
    if (en->parsed()) return run_enumerate(cfg, enGroup, enSub, enCenter, enLimit, enGen, enEmit);
    if (fo->parsed()) return run_folder(cfg, foFile, foLoop);
    if (lo->parsed()) return run_loop(cfg, loFile, loEmit);
    if (fr->parsed()) return run_frobenius(cfg, frGroup, frSub, frEmit);
    if (ab->parsed()) return run_abelian(cfg, abGroup, abSub, abQ, abEmit);
    if (vc->parsed()) return run_verify(cfg, vcMax, vcFull);
    if (pq->parsed()) return run_analyze_pq(cfg, pqFolder, pqP, pqQ);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::ParseError:
      case Errc::InvalidArgument:
      case Errc::NotSubgroup:
      case Errc::NotLatinSquare:
      case Errc::NotAssociative:
      case Errc::NoIdentity:
      case Errc::NoInverse:
        return 2;
      default:
        return 1;
    }
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
