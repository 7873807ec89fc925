#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gpi/algebra_io.hpp"
#include "gpi/catalog.hpp"
#include "gpi/report.hpp"
#include "gpi/verify.hpp"

namespace {

using namespace gpi;

LabelMap load_labels(const GroupSpec& g, const std::string& path) {
  LabelMap lm{g, {}};
  if (path.empty()) return lm;
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open label map file: " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  for (auto& [name, residues] : j.at("labels").items()) {
    auto r = residues.get<std::vector<int>>();
    auto [it, fresh] = lm.labels.emplace(name, g.reduce(std::move(r)));
    if (!fresh) throw std::invalid_argument("duplicate label: " + name);
  }
  // Injectivity of the declared map.
  for (const auto& [n1, e1] : lm.labels)
    for (const auto& [n2, e2] : lm.labels)
      if (n1 < n2 && e1 == e2)
        throw std::invalid_argument("label map is not injective: '" + n1 + "' and '" + n2 + "'");
  return lm;
}

void write_out(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_file);
  if (!out) throw std::runtime_error("cannot write report file: " + out_file);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gpi: exact polynomial-identity computations on graded algebras"};
  app.require_subcommand(1);

  std::string algebra, out_format = "json", out_file, labels_file, poly_text;
  int n = 4, max_degree = 6, jobs = 1;
  unsigned long seed = 0;
  std::string mode = "template", suite;

  auto* cat = app.add_subcommand("catalog", "list or emit catalog algebras");
  auto* cat_list = cat->add_subcommand("list", "print ids, signatures and dimensions");
  auto* cat_emit = cat->add_subcommand("emit", "emit a catalog algebra as a JSON document");
  cat_emit->add_option("--algebra", algebra, "catalog spec, e.g. catalog:A6(g,1,g)@Z2")
      ->required();
  cat_emit->add_option("--out-file", out_file, "write to file instead of stdout");

  auto* codim = app.add_subcommand("codim", "codimension sequence of an algebra");
  codim->add_option("--algebra", algebra, "algebra file or catalog:SPEC")->required();
  codim->add_option("--n", n, "maximal degree")->check(CLI::PositiveNumber);
  codim->add_option("--out", out_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  codim->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  codim->add_option("--seed", seed, "seed recorded for reproducibility");
  codim->add_option("--out-file", out_file, "write to file instead of stdout");

  auto* expo = app.add_subcommand("exponent", "admissible-search exponent report");
  expo->add_option("--algebra", algebra, "algebra file or catalog:SPEC")->required();
  bool delta = false;
  expo->add_flag("--delta", delta, "search for centrally admissible certificates");
  expo->add_option("--max-degree", max_degree, "witness search degree bound")
      ->check(CLI::PositiveNumber);
  expo->add_option("--mode", mode, "full|template")->check(CLI::IsMember({"full", "template"}));
  expo->add_option("--out-file", out_file, "write to file instead of stdout");

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("--suite", suite, "lemma3.2|lemma3.3|prop3.5|remark3.6|section4|prop5.4|thm5.1")
      ->required();
  ver->add_option("--max-degree", max_degree, "degree bound (clamped per suite)")
      ->check(CLI::PositiveNumber);
  ver->add_option("--out", out_format, "json|text")->check(CLI::IsMember({"json", "text"}));
  ver->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  ver->add_option("--seed", seed, "seed for randomized spot checks");
  ver->add_option("--out-file", out_file, "write to file instead of stdout");

  auto* pol = app.add_subcommand("poly", "classify a polynomial on an algebra");
  pol->add_option("--algebra", algebra, "algebra file or catalog:SPEC")->required();
  pol->add_option("--poly", poly_text, "polynomial text")->required();
  pol->add_option("--labels", labels_file, "JSON degree-label map");

  auto* val = app.add_subcommand("algebra", "algebra file utilities");
  auto* val_check = val->add_subcommand("validate", "validate an algebra document");
  val_check->add_option("--algebra", algebra, "algebra file or catalog:SPEC")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    BudgetGuard guard = BudgetGuard::from_env();
    if (cat_list->parsed()) {
      std::ostringstream out;
      for (const auto& info : catalog_list())
        out << info.id << "  " << info.signature << "  dim(" << info.sample
            << ") = " << info.sample_dim << "  -- " << info.description << "\n";
      write_out(out.str(), "");
      return 0;
    }
    if (cat_emit->parsed()) {
      CatalogEntry entry = catalog_build(algebra);
      write_out(algebra_to_json(entry.body), out_file);
      return 0;
    }
    if (codim->parsed()) {
      GradedAlgebra a = resolve_algebra(algebra);
      EnvelopeContext ctx(a);
      std::vector<CodimReport> reports = codim_sequence(ctx, n, jobs, guard);
      write_out(out_format == "csv" ? codim_csv(a.group, reports)
                                    : codim_json(a.group, algebra, reports),
                out_file);
      return 0;
    }
    if (expo->parsed()) {
      GradedAlgebra a = resolve_algebra(algebra);
      if (!a.wedderburn) {
        std::cerr << "error: exponent computation needs Wedderburn data\n";
        return 1;
      }
      std::optional<int> declared;
      if (algebra.rfind("catalog:", 0) == 0) declared = catalog_build(algebra).declared_delta;
      ExponentReport rep = exponent_report(
          a, delta ? max_degree : 0,
          mode == "full" ? WitnessMode::Full : WitnessMode::Template, declared, guard);
      write_out(exponent_json(a, rep), out_file);
      return 0;
    }
    if (ver->parsed()) {
      SuiteResult r = run_suite(suite, max_degree, seed, jobs, guard);
      write_out(out_format == "text" ? suite_text(r) : suite_json(r), out_file);
      return r.pass ? 0 : 1;
    }
    if (pol->parsed()) {
      GradedAlgebra a = resolve_algebra(algebra);
      EnvelopeContext ctx(a);
      LabelMap lm = load_labels(a.group, labels_file);
      GradedPoly f = parse_poly(poly_text, lm);
      std::cout << central_class_name(classify_poly(ctx, f)) << "\n";
      return 0;
    }
    if (val_check->parsed()) {
      GradedAlgebra a = resolve_algebra(algebra);
      ValidationReport rep = validate_algebra(a);
      std::cout << (rep.ok ? "valid" : ("invalid: " + rep.message)) << "\n";
      if (rep.ok && a.wedderburn) {
        ValidationReport w = verify_wedderburn(a);
        std::cout << (w.ok ? "wedderburn: verified" : ("wedderburn: failed: " + w.message))
                  << "\n";
        if (!w.ok) return 1;
      }
      return rep.ok ? 0 : 1;
    }
  } catch (const BudgetError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
