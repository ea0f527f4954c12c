// foxhom - knot group invariants via Fox calculus and homomorphism counting
//
// Command-line front end.
//
//   foxhom parse FILE
//   foxhom alex FILE [--matrix]
//   foxhom count FILE --group SPEC [--pin g=PERM]... [--marker NAME=PERM]
//                [--mode naive|backtrack] [--list] [--jobs N] [--budget N]
//   foxhom family --m M [--out FILE]
//   foxhom verify-paper [--deep] [--override FILE] [--jobs N]
//
// `--json` (anywhere on the line) switches stdout to a JSON report.
// Exit codes: 0 success, 1 check failure, 2 input error, 3 budget/overflow.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <foxhom/foxhom.hpp>
#include <foxhom/verification.hpp>

namespace {

  using json = nlohmann::json;

  constexpr int exit_ok           = 0;
  constexpr int exit_check_failed = 1;
  constexpr int exit_input_error  = 2;
  constexpr int exit_budget       = 3;

  class InputError : public std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  int exit_code_for(foxhom::ErrorKind kind) {
    switch (kind) {
      case foxhom::ErrorKind::overflow:
      case foxhom::ErrorKind::too_large:
      case foxhom::ErrorKind::budget_exceeded: return exit_budget;
      default: return exit_input_error;
    }
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InputError("cannot read `" + path + "`");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  foxhom::Presentation load(std::string const& path) {
    return foxhom::parse_presentation(read_file(path));
  }

  std::pair<std::string, std::string> split_binding(std::string const& text) {
    auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw InputError("expected NAME=PERM, got `" + text + "`");
    }
    return {text.substr(0, eq), text.substr(eq + 1)};
  }

  json matrix_json(foxhom::AlexanderMatrix const& m) {
    json rows = json::array();
    for (auto const& row : m.entries) {
      json r = json::array();
      for (auto const& e : row) {
        r.push_back(foxhom::to_string(e));
      }
      rows.push_back(std::move(r));
    }
    return rows;
  }

  json assignment_json(foxhom::Presentation const& p, foxhom::Assignment const& a) {
    json out = json::object();
    for (std::size_t i = 0; i < p.generator_count(); ++i) {
      out[p.generators()[i]] = foxhom::to_string(a[i]);
    }
    return out;
  }

  struct Globals {
    bool json = false;
  };

  void emit(Globals const& g, json report, std::string const& text) {
    if (g.json) {
      std::cout << report.dump(2) << '\n';
    } else {
      std::cout << text;
    }
  }

  unsigned default_jobs() { return std::max(1U, std::thread::hardware_concurrency()); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"foxhom: Alexander polynomials and homomorphism counts of knot groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_flag("--json", globals.json, "Print a JSON report on stdout");

  std::string file;

  auto* parse_cmd = app.add_subcommand("parse", "Parse a presentation file and echo it");
  parse_cmd->add_option("file", file, "Presentation file")->required();

  bool  with_matrix = false;
  auto* alex_cmd    = app.add_subcommand("alex", "Alexander polynomial via Fox calculus");
  alex_cmd->add_option("file", file, "Presentation file")->required();
  alex_cmd->add_flag("--matrix", with_matrix, "Also print the Alexander matrix");

  std::string              group_spec;
  std::vector<std::string> pins;
  std::string              marker;
  std::string              mode = "backtrack";
  bool                     list = false;
  unsigned                 jobs = default_jobs();
  std::uint64_t            budget = foxhom::SearchOptions{}.node_budget;
  auto* count_cmd = app.add_subcommand("count", "Count homomorphisms into a finite group");
  count_cmd->add_option("file", file, "Presentation file")->required();
  count_cmd->add_option("--group", group_spec, "Target group: S4, A5, gen:5:[(1,2,3),(1,2)]")
      ->required();
  count_cmd->add_option("--pin", pins, "Pin a generator image, e.g. x=(1,5,4,3,2)");
  count_cmd->add_option("--marker", marker, "Pin a marker word image, e.g. meridian_B=(1,2,3)");
  count_cmd->add_option("--mode", mode, "naive or backtrack")
      ->check(CLI::IsMember({"naive", "backtrack"}));
  count_cmd->add_flag("--list", list, "List every homomorphism");
  count_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  count_cmd->add_option("--budget", budget, "Search budget in nodes");

  std::int64_t family_m = 0;
  std::string  out_path;
  auto* family_cmd = app.add_subcommand("family", "Write the presentation F_m");
  family_cmd->add_option("--m", family_m, "Family parameter m >= 1")->required();
  family_cmd->add_option("--out", out_path, "Output file (default stdout)");

  bool        deep = false;
  std::string override_path;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the reference-value checks");
  verify_cmd->add_flag("--deep", deep, "Also check m = 121 and m = 181");
  verify_cmd->add_option("--override", override_path,
                         "Presentation file used in place of F_1");
  verify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_input_error;
  }

  auto const start  = std::chrono::steady_clock::now();
  int        status = exit_ok;
  json       report;
  std::string const command = app.get_subcommands().front()->get_name();
  report["command"]         = command;

  try {
    if (parse_cmd->parsed()) {
      auto p            = load(file);
      report["inputs"]  = {{"file", file}};
      report["results"] = {{"presentation", foxhom::render(p)},
                           {"generators", p.generators()},
                           {"relators", p.relators().size()}};
      emit(globals, report, foxhom::render(p));
    } else if (alex_cmd->parsed()) {
      auto p            = load(file);
      auto poly         = foxhom::alexander_polynomial(p);
      report["inputs"]  = {{"file", file}, {"matrix", with_matrix}};
      report["results"] = {{"alexander_polynomial", foxhom::to_string(poly)},
                           {"breadth", foxhom::breadth(poly)}};
      std::string text  = foxhom::to_string(poly) + "\n";
      if (with_matrix) {
        auto m                      = matrix_json(foxhom::alexander_matrix(p));
        report["results"]["matrix"] = m;
        text += m.dump() + "\n";
      }
      emit(globals, report, text);
    } else if (count_cmd->parsed()) {
      auto p   = load(file);
      auto grp = foxhom::build(foxhom::parse_group_spec(group_spec));

      foxhom::Constraint c;
      json               pin_json = json::object();
      for (auto const& binding : pins) {
        auto [name, perm] = split_binding(binding);
        auto value        = foxhom::parse_permutation(perm, grp.degree());
        c.pins.insert_or_assign(p.generator_id(name), value);
        pin_json[name] = foxhom::to_string(value);
      }
      json marker_json = nullptr;
      if (!marker.empty()) {
        auto [name, perm] = split_binding(marker);
        auto value        = foxhom::parse_permutation(perm, grp.degree());
        auto mc           = foxhom::marker_constraint(p, name, value);
        for (auto& [g, v] : mc.pins) {
          c.pins.insert_or_assign(g, v);
        }
        for (auto& t : mc.word_targets) {
          c.word_targets.push_back(t);
        }
        marker_json = {{"name", name}, {"value", foxhom::to_string(value)}};
      }

      foxhom::SearchOptions opts;
      opts.mode        = mode == "naive" ? foxhom::SearchMode::naive
                                         : foxhom::SearchMode::backtrack;
      opts.materialize = list;
      opts.jobs        = jobs;
      opts.node_budget = budget;
      auto result      = foxhom::count_homs(p, grp, c, opts);

      report["inputs"] = {{"file", file},   {"group", group_spec}, {"group_order", grp.order()},
                          {"pins", pin_json}, {"marker", marker_json}, {"mode", mode}};
      report["results"] = {{"count", result.count}};
      report["stats"]   = {{"nodes", result.stats.nodes},
                           {"relator_checks", result.stats.relator_checks}};
      std::string text  = std::to_string(result.count) + "\n";
      if (result.assignments) {
        json all = json::array();
        for (auto const& a : *result.assignments) {
          all.push_back(assignment_json(p, a));
          std::string line;
          for (std::size_t i = 0; i < p.generator_count(); ++i) {
            line += (i == 0 ? "" : " ") + p.generators()[i] + "=" + foxhom::to_string(a[i]);
          }
          text += line + "\n";
        }
        report["results"]["assignments"] = std::move(all);
      }
      emit(globals, report, text);
    } else if (family_cmd->parsed()) {
      auto p    = foxhom::family_Fm(family_m);
      auto text = foxhom::render(p);
      if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out || !(out << text)) {
          throw InputError("cannot write `" + out_path + "`");
        }
      }
      json syllables = json::array();
      for (auto const& r : p.relators()) {
        syllables.push_back(r.syllable_count());
      }
      report["inputs"]  = {{"m", family_m}, {"out", out_path.empty() ? json(nullptr) : json(out_path)}};
      report["results"] = {{"presentation", text}, {"relator_syllables", syllables}};
      emit(globals, report, out_path.empty() ? text : "wrote " + out_path + "\n");
    } else if (verify_cmd->parsed()) {
      foxhom::verify::Options opts;
      opts.deep = deep;
      opts.jobs = jobs;
      if (!override_path.empty()) {
        opts.family_override = load(override_path);
      }
      auto        checks = foxhom::verify::run_all(opts);
      json        rows   = json::array();
      std::string text;
      for (auto const& c : checks) {
        status = c.passed ? status : exit_check_failed;
        rows.push_back({{"id", c.expectation.id},
                        {"title", c.expectation.title},
                        {"basis", foxhom::verify::to_string(c.expectation.basis)},
                        {"time_limit_seconds", c.expectation.time_limit_seconds},
                        {"passed", c.passed},
                        {"failures", c.failures},
                        {"notes", c.notes}});
        std::ostringstream line;
        line << (c.passed ? "PASS " : "FAIL ") << c.expectation.id << " ["
             << foxhom::verify::to_string(c.expectation.basis) << "] " << c.seconds << " s\n";
        for (auto const& f : c.failures) {
          line << "    " << f << "\n";
        }
        text += line.str();
      }
      report["inputs"]  = {{"deep", deep},
                           {"override", override_path.empty() ? json(nullptr) : json(override_path)},
                           {"expectations_version", foxhom::verify::expectations_version}};
      report["results"] = {{"checks", rows}, {"all_passed", status == exit_ok}};
      emit(globals, report, text);
    }
  } catch (foxhom::Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (InputError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input_error;
  }

  if (globals.json) {
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                  .count();
    std::cerr << "wall time: " << ms << " ms\n";
  }
  return status;
}
