#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "dglab/audit.hpp"
#include "dglab/examples.hpp"

namespace fs = std::filesystem;
using namespace dglab;

namespace {

// Exit codes: 0 done/holds, 1 property fails, 2 not-applicable,
// 3 input/format error, 4 budget exceeded.
constexpr int kOk = 0;
constexpr int kFails = 1;
constexpr int kNotApplicable = 2;
constexpr int kInputError = 3;
constexpr int kBudget = 4;

CayleyTable load_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str());
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file '" + path + "'");
  out << content;
}

int exit_of(const CheckResult& r) {
  switch (r.verdict) {
    case Verdict::holds: return kOk;
    case Verdict::counterexample: return kFails;
    default: return kNotApplicable;
  }
}

void print_check(const std::string& label, const CheckResult& r) {
  std::cout << label << ": ";
  switch (r.verdict) {
    case Verdict::holds: std::cout << "yes"; break;
    case Verdict::counterexample: std::cout << "no"; break;
    default: std::cout << "not-applicable"; break;
  }
  if (!r.witness.empty()) std::cout << "  (" << r.witness << ")";
  std::cout << "\n";
}

int cmd_classify(const std::string& file, const std::string& mode_token) {
  CayleyTable t = load_table(file);
  ClassificationReport r = classify(t);
  std::cout << render_report(t, r);
  CheckMode mode = mode_from_token(mode_token);
  std::cout << "disguised(" << to_token(mode) << "): " << (r.disguised(mode) ? "yes" : "no")
            << "\n";
  return kOk;
}

int cmd_elements(const std::string& file) {
  CayleyTable t = load_table(file);
  auto render = [&](const std::vector<int>& xs) {
    std::string out = "[";
    for (size_t i = 0; i < xs.size(); ++i) {
      if (i) out += ' ';
      out += t.name(xs[static_cast<size_t>(i)]);
    }
    return out + "]";
  };
  for (int g = 0; g < t.order(); ++g) {
    ElementProfile p = element_profile(t, g);
    std::cout << t.name(g) << ": right-ids=" << render(p.rightIdentities)
              << " left-ids=" << render(p.leftIdentities)
              << " identities=" << render(p.identities)
              << " inverses=" << render(p.def21Inverses)
              << " d-inverses=" << render(p.dInverses) << " order=";
    if (p.order)
      std::cout << *p.order;
    else
      std::cout << "infinite";
    std::cout << "\n";
  }
  std::cout << "global-identities: " << render(global_identities(t)) << "\n";
  return kOk;
}

int cmd_subgroups(const std::string& file, int max_size, const std::string& mode_token) {
  CayleyTable t = load_table(file);
  StructureView view(t);
  CheckMode mode = mode_from_token(mode_token);
  if (!view.report().disguised(mode)) {
    std::cout << "not-applicable: table is not disguised-" << to_token(mode) << "\n";
    return kNotApplicable;
  }
  int limit = max_size > 0 ? max_size : t.order();
  auto subs = enumerate_disguised_subgroups(view, mode, limit);
  for (Subset s : subs) std::cout << subset_to_string(t, s) << "\n";
  std::cout << "count: " << subs.size() << "\n";
  return kOk;
}

int cmd_normal(const std::string& file, const std::string& subset_csv,
               const std::string& method, const std::string& mode_token) {
  CayleyTable t = load_table(file);
  StructureView view(t);
  CheckMode mode = mode_from_token(mode_token);
  Subset q = subset_from_csv(t, subset_csv);
  std::cout << "subset: " << subset_to_string(t, q) << "\n";
  CheckResult r;
  if (method == "def")
    r = is_normal_def(view, q, mode);
  else if (method == "conj")
    r = is_normal_conjugation(view, q);
  else if (method == "comm")
    r = is_normal_commutation(view, q, mode);
  else
    throw std::invalid_argument("unknown method '" + method + "'");
  print_check("normal(" + method + ")", r);
  print_check("disguised-normal", is_disguised_normal(view, q, mode));
  return exit_of(r);
}

int cmd_quotient(const std::string& file, const std::string& subset_csv,
                 const std::string& emit_path, const std::string& mode_token) {
  CayleyTable t = load_table(file);
  StructureView view(t);
  CheckMode mode = mode_from_token(mode_token);
  Subset q = subset_from_csv(t, subset_csv);
  QuotientResult res = build_quotient(view, q, mode);
  if (!res.partition.status.ok()) {
    std::cout << "not-applicable: " << res.partition.status.witness << "\n";
    return kNotApplicable;
  }
  std::cout << "blocks:";
  for (size_t i = 0; i < res.partition.blocks.size(); ++i) {
    std::cout << " [" << t.name(res.partition.representatives[i]) << "]={";
    for (size_t j = 0; j < res.partition.blocks[i].size(); ++j) {
      if (j) std::cout << ' ';
      std::cout << t.name(res.partition.blocks[i][j]);
    }
    std::cout << "}";
  }
  std::cout << "\n";
  std::cout << "cosets-partition: " << (res.partition.wellDefined ? "yes" : "no") << "\n";
  if (!res.partition.wellDefined) {
    std::cout << "violation: " << res.partition.violation << "\n";
    return kFails;
  }
  std::cout << "induced-op-well-defined: " << (res.inducedOpWellDefined ? "yes" : "no")
            << "\n";
  if (!res.inducedOpWellDefined) {
    std::cout << "violation: " << res.violation << "\n";
    return kFails;
  }
  std::cout << "quotient-order: " << res.table->order() << "\n";
  std::cout << "quotient-is-group: " << (res.groupReport->isGroup ? "yes" : "no") << "\n";
  std::cout << emit_table(*res.table);
  if (!emit_path.empty()) write_file(emit_path, emit_table(*res.table));
  return kOk;
}

int cmd_hom(const std::string& dom_file, const std::string& cod_file,
            const std::string& map_text) {
  CayleyTable dom = load_table(dom_file);
  CayleyTable cod = load_table(cod_file);
  if (!classify(cod).isGroup) {
    std::cout << "not-applicable: codomain is not a group\n";
    return kNotApplicable;
  }
  Morphism h = morphism_from_string(dom, cod, map_text);
  MorphismReport rep = check_morphism(h);
  std::cout << "homomorphism: " << (rep.isHomomorphism ? "yes" : "no");
  if (!rep.homWitness.empty()) std::cout << "  (" << rep.homWitness << ")";
  std::cout << "\n";
  std::cout << "disguised-injective: " << (rep.isDisguisedInjective ? "yes" : "no");
  if (!rep.injWitness.empty()) std::cout << "  (" << rep.injWitness << ")";
  std::cout << "\n";
  std::cout << "surjective: " << (rep.isSurjective ? "yes" : "no");
  if (!rep.surWitness.empty()) std::cout << "  (" << rep.surWitness << ")";
  std::cout << "\n";
  std::cout << "kernel: " << subset_to_string(dom, rep.kernel) << "\n";
  std::cout << "image: " << subset_to_string(cod, rep.image) << "\n";
  print_check("identities-to-e", rep.identityToE);
  print_check("inverse-compatible", rep.inverseCompat);
  return rep.isHomomorphism ? kOk : kFails;
}

int cmd_enumerate(int order, const std::string& filter_token, const std::string& out_dir,
                  int workers) {
  TableClass filter = table_class_from_token(filter_token);
  auto tables = enumerate_tables(order, filter, workers);
  std::set<std::string> classes;
  for (const auto& t : tables) classes.insert(canonical_form(t));
  std::cout << "order: " << order << "\n";
  std::cout << "filter: " << to_token(filter) << "\n";
  std::cout << "tables: " << tables.size() << "\n";
  std::cout << "classes: " << classes.size() << "\n";
  if (!out_dir.empty()) {
    fs::path dir = fs::path(out_dir) / ("order-" + std::to_string(order));
    fs::create_directories(dir);
    for (const auto& enc : classes)
      write_file((dir / (enc + ".tbl")).string(), emit_table(table_from_encoding(enc)));
    std::cout << "written: " << classes.size() << " files\n";
  }
  return kOk;
}

int cmd_audit(int order, const std::string& mode_token, const std::string& claims_csv,
              const std::string& out_dir, int workers) {
  AuditOptions opts;
  opts.order = order;
  opts.mode = mode_from_token(mode_token);
  opts.workers = workers;
  if (!claims_csv.empty()) {
    size_t pos = 0;
    while (pos <= claims_csv.size()) {
      size_t comma = claims_csv.find(',', pos);
      std::string item = comma == std::string::npos
                             ? claims_csv.substr(pos)
                             : claims_csv.substr(pos, comma - pos);
      if (!item.empty()) {
        auto id = claim_from_token(item);
        if (!id) throw std::invalid_argument("unknown claim '" + item + "'");
        opts.claims.push_back(*id);
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  AuditResult res = audit_corpus(opts);
  std::string manifest = manifest_to_text(res.manifest);
  std::string findings = findings_to_text(res.findings);
  std::cout << "== manifest ==\n" << manifest << "== findings ==\n" << findings;
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    write_file((fs::path(out_dir) / "manifest.txt").string(), manifest);
    write_file((fs::path(out_dir) / "findings.tsv").string(), findings);
  }
  return kOk;
}

int cmd_example(const std::string& name, const std::string& emit_path) {
  CayleyTable t = builtin_example(name);
  std::string text = emit_table(t);
  std::cout << text;
  if (!emit_path.empty()) write_file(emit_path, text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Cayley-table laboratory: classification, subgroup and quotient "
               "analysis, morphism checks, enumeration, and claim audits"};
  app.require_subcommand(1);

  std::string file, file2, mode = "literal", subset, method = "def", map_text, emit_path,
              out_dir, filter = "all", claims, name;
  int order = 2, workers = 1, max_size = 0;

  auto* classify_cmd = app.add_subcommand("classify", "classify a table file");
  classify_cmd->add_option("file", file)->required();
  classify_cmd->add_option("--mode", mode);

  auto* elements_cmd = app.add_subcommand("elements", "per-element profiles");
  elements_cmd->add_option("file", file)->required();

  auto* subgroups_cmd = app.add_subcommand("subgroups", "enumerate disguised-subgroups");
  subgroups_cmd->add_option("file", file)->required();
  subgroups_cmd->add_option("--max-size", max_size);
  subgroups_cmd->add_option("--mode", mode);

  auto* normal_cmd = app.add_subcommand("normal", "normality of a subset");
  normal_cmd->add_option("file", file)->required();
  normal_cmd->add_option("--subset", subset)->required();
  normal_cmd->add_option("--method", method);
  normal_cmd->add_option("--mode", mode);

  auto* quotient_cmd = app.add_subcommand("quotient", "build the coset quotient");
  quotient_cmd->add_option("file", file)->required();
  quotient_cmd->add_option("--subset", subset)->required();
  quotient_cmd->add_option("--emit", emit_path);
  quotient_cmd->add_option("--mode", mode);

  auto* hom_cmd = app.add_subcommand("hom", "check a map into a group");
  hom_cmd->add_option("domain", file)->required();
  hom_cmd->add_option("codomain", file2)->required();
  hom_cmd->add_option("--map", map_text)->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "enumerate tables of one order");
  enum_cmd->add_option("--order", order)->required();
  enum_cmd->add_option("--filter", filter);
  enum_cmd->add_option("--out", out_dir);
  enum_cmd->add_option("--workers", workers);

  auto* audit_cmd = app.add_subcommand("audit", "run claim audits over the corpus");
  audit_cmd->add_option("--order", order)->required();
  audit_cmd->add_option("--mode", mode)->required();
  audit_cmd->add_option("--claims", claims);
  audit_cmd->add_option("--out", out_dir);
  audit_cmd->add_option("--workers", workers);

  auto* example_cmd = app.add_subcommand("example", "emit a built-in table");
  example_cmd->add_option("name", name)->required();
  example_cmd->add_option("--emit", emit_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(file, mode);
    if (elements_cmd->parsed()) return cmd_elements(file);
    if (subgroups_cmd->parsed()) return cmd_subgroups(file, max_size, mode);
    if (normal_cmd->parsed()) return cmd_normal(file, subset, method, mode);
    if (quotient_cmd->parsed()) return cmd_quotient(file, subset, emit_path, mode);
    if (hom_cmd->parsed()) return cmd_hom(file, file2, map_text);
    if (enum_cmd->parsed()) return cmd_enumerate(order, filter, out_dir, workers);
    if (audit_cmd->parsed()) return cmd_audit(order, mode, claims, out_dir, workers);
    if (example_cmd->parsed()) return cmd_example(name, emit_path);
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
