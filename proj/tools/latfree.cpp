// Command-line front end: enumerate the 3D classification, enumerate maximal
// axis-aligned simplices, and check / canonicalize / compare user simplices.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <latfree/classify.hpp>
#include <latfree/enumerate.hpp>
#include <latfree/equivalence.hpp>
#include <latfree/errors.hpp>
#include <latfree/simplex.hpp>
#include <latfree/simplex_io.hpp>
#include <latfree/version.hpp>

namespace {

using nlohmann::json;
using namespace latfree;

json to_doc(const Simplex& s) {
  return json{{"dim", s.dim()}, {"vertices", s.vertices()}};
}

json to_doc(const CanonicalForm& form) {
  json rows = json::array();
  for (int i = 0; i < form.hnf.rows(); ++i) rows.push_back(form.hnf.row(i));
  return json{{"dim", form.dim}, {"hnf", rows}};
}

json to_doc(const FacetIneq& f) {
  return json{{"normal", f.normal}, {"rhs", f.rhs}};
}

json report(const std::string& command, json inputs, json results) {
  return json{{"tool", "latfree"},
              {"version", kVersion},
              {"command", command},
              {"inputs", std::move(inputs)},
              {"results", std::move(results)}};
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

std::string vertices_text(const Simplex& s) {
  std::string out;
  for (const Point& v : s.vertices()) {
    if (!out.empty()) out += ' ';
    out += '(';
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(v[j]);
    }
    out += ')';
  }
  return out;
}

std::string hnf_text(const IntMatrix& m) {
  std::string out = "[";
  for (int i = 0; i < m.rows(); ++i) {
    if (i) out += "; ";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += std::to_string(m(i, j));
    }
  }
  return out + "]";
}

std::string inequality_text(const FacetIneq& f) {
  std::string out;
  for (std::size_t j = 0; j < f.normal.size(); ++j) {
    if (!out.empty()) out += " + ";
    if (f.normal[j] != 1) out += std::to_string(f.normal[j]) + " ";
    out += "x" + std::to_string(j + 1);
  }
  return out + " <= " + std::to_string(f.rhs);
}

int run_enumerate3d(const std::string& format, int jobs) {
  ClassificationResult result = enumerate_3d(jobs);
  if (format == "json") {
    json classes = json::array();
    for (const auto& entry : result.classes)
      classes.push_back(json{{"canonical_form", to_doc(entry.form)},
                             {"representative", to_doc(entry.representative)},
                             {"multiplicity", entry.multiplicity}});
    emit(report("enumerate3d", json::object(),
                json{{"dim", 3},
                     {"class_count", result.classes.size()},
                     {"classes", std::move(classes)}}));
  } else {
    std::cout << "integral maximal lattice-free simplex classes in dimension 3: "
              << result.classes.size() << "\n\n";
    int idx = 0;
    for (const auto& entry : result.classes) {
      std::cout << "class " << ++idx << "  multiplicity " << entry.multiplicity << "\n"
                << "  representative: " << vertices_text(entry.representative) << "\n"
                << "  canonical hnf:  " << hnf_text(entry.form.hnf) << "\n";
    }
  }
  return 0;
}

int run_enumerate_axis(int dim, const std::string& format) {
  std::vector<AxisLambda> solutions = enumerate_axis(dim);
  std::vector<Int> bounds = sylvester_bounds(dim);
  if (format == "json") {
    json sols = json::array();
    for (const AxisLambda& l : solutions)
      sols.push_back(json{{"lambda", l.lambdas()}, {"facet", to_doc(axis_facet(l))}});
    emit(report("enumerate-axis", json{{"dim", dim}},
                json{{"dim", dim},
                     {"sylvester_bounds", bounds},
                     {"count", solutions.size()},
                     {"solutions", std::move(sols)}}));
  } else {
    std::cout << "maximal axis-aligned simplices in dimension " << dim << ": "
              << solutions.size() << "\n";
    std::cout << "extremal intercepts:";
    for (Int b : bounds) std::cout << ' ' << b;
    std::cout << "\n\n";
    for (const AxisLambda& l : solutions) {
      std::string lam;
      for (std::size_t j = 0; j < l.lambdas().size(); ++j) {
        if (j) lam += ',';
        lam += std::to_string(l.lambdas()[j]);
      }
      std::cout << "(" << lam << ")";
      for (std::size_t pad = lam.size(); pad < 24; ++pad) std::cout << ' ';
      std::cout << inequality_text(axis_facet(l)) << "\n";
    }
  }
  return 0;
}

int run_check(const std::string& file, const std::string& format, std::uint64_t budget) {
  Simplex s = read_simplex_file(file);
  bool lattice_free = is_lattice_free(s, budget);
  FacetLatticeReport facet_report = facet_lattice_report(s, budget);
  bool maximal = lattice_free;
  for (const auto& entry : facet_report.facets)
    if (entry.interior_point_count == 0) maximal = false;
  int full_rank = 0;
  for (const auto& entry : facet_report.facets)
    if (entry.sublattice_rank && *entry.sublattice_rank == s.dim() - 1) ++full_rank;
  bool observation = full_rank <= 1;

  if (format == "json") {
    json ranks = json::array();
    for (std::size_t k = 0; k < facet_report.facets.size(); ++k) {
      const auto& entry = facet_report.facets[k];
      json row{{"opposite_vertex", k}, {"interior_points", entry.interior_point_count}};
      row["rank"] = entry.sublattice_rank ? json(*entry.sublattice_rank) : json(nullptr);
      ranks.push_back(std::move(row));
    }
    emit(report("check", json{{"file", file}},
                json{{"lattice_free", lattice_free},
                     {"maximal", maximal},
                     {"facet_ranks", std::move(ranks)},
                     {"observation_holds", observation}}));
  } else {
    std::cout << "file: " << file << "\n"
              << "lattice_free: " << (lattice_free ? "true" : "false") << "\n"
              << "maximal: " << (maximal ? "true" : "false") << "\n"
              << "observation_holds: " << (observation ? "true" : "false") << "\n"
              << "facet ranks (by opposite vertex):\n";
    for (std::size_t k = 0; k < facet_report.facets.size(); ++k) {
      const auto& entry = facet_report.facets[k];
      std::cout << "  facet " << k << ": interior_points=" << entry.interior_point_count
                << " rank=";
      if (entry.sublattice_rank)
        std::cout << *entry.sublattice_rank;
      else
        std::cout << "none";
      std::cout << "\n";
    }
  }
  return maximal ? 0 : 1;
}

int run_canon(const std::string& file) {
  Simplex s = read_simplex_file(file);
  std::cout << to_json(canonical_form(s)) << '\n';
  return 0;
}

int run_equiv(const std::string& file_a, const std::string& file_b, const std::string& format) {
  Simplex a = read_simplex_file(file_a);
  Simplex b = read_simplex_file(file_b);
  if (a.dim() != b.dim())
    throw UsageError("simplices have different dimensions (" + std::to_string(a.dim()) + " vs " +
                     std::to_string(b.dim()) + ")");
  auto witness = find_witness(a, b);
  if (format == "json") {
    json results{{"equivalent", witness.has_value()}};
    if (witness) {
      json m = json::array();
      for (int i = 0; i < witness->m.rows(); ++i) m.push_back(witness->m.row(i));
      results["witness"] =
          json{{"m", std::move(m)}, {"v", witness->v}, {"sigma", witness->sigma}};
    }
    emit(report("equiv", json{{"file_a", file_a}, {"file_b", file_b}}, std::move(results)));
  } else {
    std::cout << "equivalent: " << (witness ? "true" : "false") << "\n";
    if (witness) {
      std::cout << "witness m: " << hnf_text(witness->m) << "\n";
      std::cout << "witness v: (";
      for (std::size_t j = 0; j < witness->v.size(); ++j) {
        if (j) std::cout << ',';
        std::cout << witness->v[j];
      }
      std::cout << ")\nwitness sigma:";
      for (int x : witness->sigma) std::cout << ' ' << x;
      std::cout << "\n";
    }
  }
  return witness ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classification of integral maximal lattice-free simplices"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string format = "text";
  int jobs = 1;
  int dim = 0;
  std::uint64_t budget = kDefaultPointBudget;
  std::string file_a, file_b;

  auto* cmd_enum3d = app.add_subcommand("enumerate3d", "classify dimension-3 simplices");
  cmd_enum3d->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  cmd_enum3d->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

  auto* cmd_axis = app.add_subcommand("enumerate-axis", "classify axis-aligned simplices");
  cmd_axis->add_option("--dim", dim, "dimension")->required()->check(CLI::Range(2, 6));
  cmd_axis->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* cmd_check = app.add_subcommand("check", "check a simplex file for maximality");
  cmd_check->add_option("file", file_a, "simplex JSON file")->required();
  cmd_check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  cmd_check->add_option("--point-budget", budget, "max box points per scan")
      ->check(CLI::PositiveNumber);

  auto* cmd_canon = app.add_subcommand("canon", "print the canonical form of a simplex file");
  cmd_canon->add_option("file", file_a, "simplex JSON file")->required();

  auto* cmd_equiv = app.add_subcommand("equiv", "decide unimodular equivalence of two files");
  cmd_equiv->add_option("file_a", file_a, "simplex JSON file")->required();
  cmd_equiv->add_option("file_b", file_b, "simplex JSON file")->required();
  cmd_equiv->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (app.got_subcommand(cmd_enum3d))
      code = run_enumerate3d(format, jobs);
    else if (app.got_subcommand(cmd_axis))
      code = run_enumerate_axis(dim, format);
    else if (app.got_subcommand(cmd_check))
      code = run_check(file_a, format, budget);
    else if (app.got_subcommand(cmd_canon))
      code = run_canon(file_a);
    else if (app.got_subcommand(cmd_equiv))
      code = run_equiv(file_a, file_b, format);
  } catch (const BudgetExceededError& e) {
    std::cerr << "latfree: point budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInputError& e) {
    std::cerr << "latfree: invalid input: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "latfree: usage error: " << e.what() << "\n";
    return 2;
  } catch (const OverflowError& e) {
    std::cerr << "latfree: arithmetic overflow: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "latfree: internal error: " << e.what() << "\n";
    return 3;
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  std::cerr << "latfree: " << app.get_subcommands().front()->get_name() << " finished in "
            << elapsed.count() << " ms\n";
  return code;
}
