#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qls/catalog.hpp"
#include "qls/constructions.hpp"
#include "qls/errors.hpp"
#include "qls/io.hpp"
#include "qls/latin.hpp"
#include "qls/qls_core.hpp"

namespace {

// Exit codes: 0 success; 2 verification failure; 3 unachievable;
// 4 unknown achievability; 5 ambiguous numerics; 1 other errors.
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitVerifyFail = 2;
constexpr int kExitUnachievable = 3;
constexpr int kExitUnknown = 4;
constexpr int kExitAmbiguous = 5;

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6e", x);
  return buf;
}

std::string plan_parameters(const qls::ConstructionPlan& plan) {
  std::ostringstream out;
  switch (plan.method) {
    case qls::Method::classical:
    case qls::Method::maximal:
    case qls::Method::catalog:
      out << "v=" << plan.v;
      break;
    case qls::Method::direct_product:
      out << "m=" << plan.m << " t=" << plan.t;
      break;
    case qls::Method::wilson1:
      out << "m=" << plan.m << " t=" << plan.t;
      break;
    case qls::Method::wilson:
      out << "m=" << plan.m << " t=" << plan.t << " s=" << plan.s;
      break;
  }
  return out.str();
}

void print_verification(const qls::VerificationReport& rep) {
  std::cout << "verification: " << (rep.pass ? "pass" : "FAIL")
            << " (worst deviation " << format_double(rep.worst_deviation())
            << ")\n";
  if (rep.first_failure) {
    const auto& f = *rep.first_failure;
    std::cout << "first failure: " << f.kind << " at (" << f.i << "," << f.j
              << "," << f.k << ")\n";
  }
}

void print_cardinality(const qls::CardinalityReport& rep) {
  std::cout << "measured cardinality: " << rep.c << "\n";
  // Histogram: class-size -> number of classes of that size.
  std::vector<std::size_t> sizes;
  for (const auto& g : rep.groups) sizes.push_back(g.size());
  std::sort(sizes.begin(), sizes.end());
  std::cout << "class sizes:";
  std::size_t i = 0;
  while (i < sizes.size()) {
    std::size_t j = i;
    while (j < sizes.size() && sizes[j] == sizes[i]) ++j;
    std::cout << " " << (j - i) << "x" << sizes[i];
    i = j;
  }
  std::cout << "\n";
  std::cout << "margin: max cross-class overlap "
            << format_double(rep.max_cross_overlap)
            << ", min intra-class overlap "
            << format_double(rep.min_intra_overlap) << "\n";
}

void maybe_save(const qls::QLS& phi, const std::string& out_path,
                const std::string& method, const std::string& parameters,
                std::size_t claimed_c) {
  if (out_path.empty()) return;
  qls::DocumentMetadata meta;
  meta.method = method;
  meta.parameters = parameters;
  meta.claimed_cardinality = claimed_c;
  qls::save_qls(phi, out_path, meta);
  std::cout << "written: " << out_path << "\n";
}

// Condenses a sorted integer list into "a", "a-b" range strings.
std::string condense(const std::vector<std::size_t>& values) {
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < values.size()) {
    std::size_t j = i;
    while (j + 1 < values.size() && values[j + 1] == values[j] + 1) ++j;
    if (!first) out << ",";
    first = false;
    if (j == i)
      out << values[i];
    else
      out << values[i] << "-" << values[j];
    i = j + 1;
  }
  return out.str();
}

int report_and_exit_code(const qls::QLS& phi, const std::string& method,
                         const std::string& parameters, std::size_t claimed_c,
                         const std::string& out_path) {
  const qls::VerificationReport ver = qls::verify_qls(phi);
  print_verification(ver);
  if (!ver.pass) return kExitVerifyFail;
  const qls::CardinalityReport card = qls::qls_cardinality(phi);
  print_cardinality(card);
  maybe_save(phi, out_path, method, parameters, claimed_c);
  return kExitOk;
}

int cmd_construct(std::size_t order, std::size_t cardinality,
                  const std::string& out_path) {
  const qls::ConstructionPlan plan = qls::plan_cardinality(order, cardinality);
  std::cout << "order: " << order << "\n";
  std::cout << "target cardinality: " << cardinality << "\n";
  std::cout << "method: " << qls::method_name(plan.method) << "\n";
  std::cout << "parameters: " << plan_parameters(plan) << "\n";
  std::cout << "predicted cardinality: " << plan.accounting.predicted_c
            << "\n";
  const qls::QLS phi = qls::realize_plan(plan);
  return report_and_exit_code(phi, qls::method_name(plan.method),
                              plan_parameters(plan), cardinality, out_path);
}

int cmd_construct_maximal(std::size_t order, const std::string& out_path) {
  const qls::QLS phi = qls::maximal_qls(order);
  std::cout << "order: " << order << "\n";
  std::cout << "method: maximal\n";
  std::cout << "predicted cardinality: " << order * order << "\n";
  return report_and_exit_code(phi, "maximal", "v=" + std::to_string(order),
                              order * order, out_path);
}

int cmd_construct_classical(std::size_t order, const std::string& latin,
                            const std::string& out_path) {
  qls::LatinSquare L;
  if (latin == "cyclic") {
    L = qls::cyclic_ls(order);
  } else if (latin == "idempotent") {
    L = qls::idempotent_ls(order);
  } else if (latin.rfind("file:", 0) == 0) {
    L = qls::load_latin_square(latin.substr(5));
    if (L.order != order)
      throw qls::InvalidParameters(
          "construct-classical: file order " + std::to_string(L.order) +
          " does not match --order " + std::to_string(order));
  } else {
    throw qls::InvalidParameters(
        "construct-classical: --latin must be cyclic, idempotent, or "
        "file:PATH");
  }
  const qls::QLS phi = qls::classical_qls(L);
  std::cout << "order: " << order << "\n";
  std::cout << "method: classical (" << latin << ")\n";
  std::cout << "predicted cardinality: " << order << "\n";
  return report_and_exit_code(phi, "classical", "latin=" + latin, order,
                              out_path);
}

int cmd_verify(const std::string& path, double tol_unit, double tau_same,
               bool machine) {
  // Parse leniently, then verify against the requested tolerance so a
  // failing grid still yields a full report.
  qls::Tolerance lax = qls::default_tolerance();
  lax.eps_unit = 1e300;
  const qls::QLSDocument doc = qls::load_qls(path, lax);
  qls::Tolerance tol = qls::default_tolerance();
  tol.eps_unit = tol_unit;
  tol.tau_same = tau_same;
  const qls::VerificationReport ver = qls::verify_qls(doc.qls, tol);
  if (machine) {
    std::cout << "pass=" << (ver.pass ? 1 : 0)
              << " worst_row=" << format_double(ver.worst_row_deviation)
              << " worst_col=" << format_double(ver.worst_col_deviation)
              << " worst_norm=" << format_double(ver.worst_norm_deviation)
              << "\n";
  } else {
    std::cout << "order: " << doc.qls.order << "\n";
    print_verification(ver);
  }
  if (!ver.pass) return kExitVerifyFail;
  const qls::CardinalityReport card = qls::qls_cardinality(doc.qls, tol);
  if (machine)
    std::cout << "cardinality=" << card.c << "\n";
  else
    print_cardinality(card);
  return kExitOk;
}

int cmd_cardinality(const std::string& path) {
  const qls::QLSDocument doc = qls::load_qls(path);
  const qls::CardinalityReport card = qls::qls_cardinality(doc.qls);
  std::cout << "order: " << doc.qls.order << "\n";
  print_cardinality(card);
  return kExitOk;
}

int cmd_plan(std::size_t order) {
  const auto table = qls::achievable_set(order);
  std::cout << "order " << order << " cardinality plan:\n";
  for (const auto& entry : table) {
    std::cout << "  c=" << entry.c << "  ";
    switch (entry.status) {
      case qls::Achievability::achievable:
        std::cout << "achievable  ";
        break;
      case qls::Achievability::excluded:
        std::cout << "excluded    ";
        break;
      case qls::Achievability::unknown:
        std::cout << "unknown     ";
        break;
    }
    std::cout << entry.provenance << "\n";
  }
  return kExitOk;
}

int cmd_catalog(std::size_t order, std::size_t cardinality,
                const std::string& out_path) {
  if (order != 8)
    throw qls::NotInCatalog("catalog: only order 8 is catalogued");
  const qls::QLS phi = qls::catalog_qls8(cardinality);
  std::cout << "order: 8\n";
  std::cout << "cardinality claim: " << cardinality << "\n";
  const auto& explicit_list = qls::catalog8_explicit_cardinalities();
  const bool is_explicit =
      std::find(explicit_list.begin(), explicit_list.end(), cardinality) !=
      explicit_list.end();
  if (is_explicit)
    std::cout << "catalog case: " << qls::catalog_case_id(cardinality)
              << "\n";
  else
    std::cout << "catalog case: delegated to a parameterized construction\n";
  for (const std::string& note : qls::catalog_audit(cardinality))
    std::cout << "audit: " << note << "\n";
  return report_and_exit_code(phi, "catalog",
                              "v=8 c=" + std::to_string(cardinality),
                              cardinality, out_path);
}

int cmd_table(std::size_t max_order, const std::string& format) {
  struct Row {
    std::size_t order;
    std::string achievable, unknown, excluded;
  };
  std::vector<Row> rows;
  for (std::size_t v = 2; v <= max_order; ++v) {
    std::vector<std::size_t> ach, unk, exc;
    for (const auto& e : qls::achievable_set(v)) {
      if (e.status == qls::Achievability::achievable)
        ach.push_back(e.c);
      else if (e.status == qls::Achievability::unknown)
        unk.push_back(e.c);
      else
        exc.push_back(e.c);
    }
    rows.push_back({v, condense(ach), condense(unk), condense(exc)});
  }
  if (format == "csv") {
    std::cout << "order,achievable,unknown,excluded\n";
    for (const auto& r : rows)
      std::cout << r.order << ",\"" << r.achievable << "\",\"" << r.unknown
                << "\",\"" << r.excluded << "\"\n";
  } else {
    std::cout << "| order | achievable | unknown | excluded |\n";
    std::cout << "|-------|------------|---------|----------|\n";
    for (const auto& r : rows)
      std::cout << "| " << r.order << " | " << r.achievable << " | "
                << r.unknown << " | " << r.excluded << " |\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum Latin square construction and verification tool"};
  app.require_subcommand(1);

  std::size_t order = 0, cardinality = 0, max_order = 8;
  std::string out_path, latin = "cyclic", file_path, format = "md";
  double tol_unit = qls::default_tolerance().eps_unit;
  double tau_same = qls::default_tolerance().tau_same;
  bool machine = false;

  auto* construct = app.add_subcommand(
      "construct", "Plan and build a QLS with a prescribed cardinality");
  construct->add_option("--order", order, "Order v")->required();
  construct->add_option("--cardinality", cardinality, "Target cardinality c")
      ->required();
  construct->add_option("--out", out_path, "Write the grid as JSON");

  auto* cmax = app.add_subcommand("construct-maximal",
                                  "Build the maximal-cardinality QLS");
  cmax->add_option("--order", order, "Order v (>= 4)")->required();
  cmax->add_option("--out", out_path, "Write the grid as JSON");

  auto* cclass = app.add_subcommand("construct-classical",
                                    "Build a classical (basis-vector) QLS");
  cclass->add_option("--order", order, "Order v")->required();
  cclass->add_option("--latin", latin, "cyclic | idempotent | file:PATH");
  cclass->add_option("--out", out_path, "Write the grid as JSON");

  auto* verify = app.add_subcommand("verify", "Verify a QLS document");
  verify->add_option("file", file_path, "QLS JSON document")->required();
  verify->add_option("--tol-unit", tol_unit, "Orthonormality tolerance");
  verify->add_option("--tau-same", tau_same, "Same-phase overlap threshold");
  verify->add_flag("--machine", machine, "Machine-readable key=value output");

  auto* card = app.add_subcommand("cardinality",
                                  "Measure the cardinality of a QLS document");
  card->add_option("file", file_path, "QLS JSON document")->required();

  auto* plan = app.add_subcommand(
      "plan", "Tabulate achievable cardinalities for an order");
  plan->add_option("--order", order, "Order v")->required();

  auto* catalog = app.add_subcommand("catalog", "Build an order-8 fixture");
  catalog->add_option("--order", order, "Order (must be 8)")->required();
  catalog->add_option("--cardinality", cardinality, "Cardinality claim")
      ->required();
  catalog->add_option("--out", out_path, "Write the grid as JSON");

  auto* table = app.add_subcommand(
      "table", "Summarize achievable ranges for orders 2..N");
  table->add_option("--max-order", max_order, "Largest order");
  table->add_option("--format", format, "csv | md")
      ->check(CLI::IsMember({"csv", "md"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed()) return cmd_construct(order, cardinality, out_path);
    if (cmax->parsed()) return cmd_construct_maximal(order, out_path);
    if (cclass->parsed())
      return cmd_construct_classical(order, latin, out_path);
    if (verify->parsed())
      return cmd_verify(file_path, tol_unit, tau_same, machine);
    if (card->parsed()) return cmd_cardinality(file_path);
    if (plan->parsed()) return cmd_plan(order);
    if (catalog->parsed()) return cmd_catalog(order, cardinality, out_path);
    if (table->parsed()) return cmd_table(max_order, format);
  } catch (const qls::Unachievable& e) {
    std::cerr << "unachievable: " << e.what() << "\n";
    return kExitUnachievable;
  } catch (const qls::UnknownAchievability& e) {
    std::cerr << "unknown achievability: " << e.what() << "\n";
    return kExitUnknown;
  } catch (const qls::NotInCatalog& e) {
    std::cerr << "not in catalog: " << e.what() << "\n";
    return kExitUnknown;
  } catch (const qls::AmbiguousPhase& e) {
    std::cerr << "ambiguous numerics: " << e.what() << "\n";
    return kExitAmbiguous;
  } catch (const qls::InconsistentGrouping& e) {
    std::cerr << "ambiguous numerics: " << e.what() << "\n";
    return kExitAmbiguous;
  } catch (const qls::InconsistentCardinality& e) {
    std::cerr << "ambiguous numerics: " << e.what() << "\n";
    return kExitAmbiguous;
  } catch (const qls::InvalidQLS& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerifyFail;
  } catch (const qls::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitOk;
}
