#include "commands.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "castelnuovo/brill_noether.hpp"
#include "castelnuovo/errors.hpp"
#include "castelnuovo/experiment.hpp"
#include "castelnuovo/finite_field_count.hpp"
#include "castelnuovo/instance_io.hpp"
#include "castelnuovo/partitions.hpp"
#include "castelnuovo/schubert.hpp"

namespace castelnuovo::cli {

namespace {

using nlohmann::json;

CommandResult failure(const std::string& command, const std::string& message, int exit_code = 2) {
  CommandResult result;
  result.status = Status::error;
  result.payload = {{"command", command}, {"error", message}};
  result.human_text = "error: " + message + "\n";
  result.exit_code = exit_code;
  return result;
}

const char* bool_text(bool value) { return value ? "true" : "false"; }

struct RouteCounts {
  BigInt formula;
  BigInt schubert;
  BigInt tableaux;
  bool enumerated = false;

  bool agree() const { return formula == schubert && schubert == tableaux; }
};

RouteCounts all_routes(const BNProblem& problem) {
  RouteCounts counts;
  counts.formula = castelnuovo_number(problem);
  counts.schubert = castelnuovo_number_via_schubert(problem);
  const TableauRouteResult tableaux = castelnuovo_number_via_tableaux(problem);
  counts.tableaux = tableaux.count;
  counts.enumerated = tableaux.enumerated;
  return counts;
}

}  // namespace

Method parse_method(const std::string& name) {
  if (name == "formula") return Method::formula;
  if (name == "schubert") return Method::schubert;
  if (name == "tableaux") return Method::tableaux;
  if (name == "all") return Method::all;
  throw InvalidArgument("unknown method '" + name + "'");
}

CommandResult cmd_rho(int g, int r, int d) {
  try {
    const BNProblem problem(g, r, d);
    const long long rho = brill_noether_number(problem);
    CommandResult result;
    result.payload = {{"command", "rho"}, {"g", g}, {"r", r}, {"d", d},
                      {"rho", rho}, {"castelnuovo_case", rho == 0}};
    std::ostringstream text;
    text << "g=" << g << " r=" << r << " d=" << d << "\n"
         << "rho=" << rho << "\n"
         << "castelnuovo-case=" << bool_text(rho == 0) << "\n";
    result.human_text = text.str();
    return result;
  } catch (const Error& e) {
    return failure("rho", e.what());
  }
}

CommandResult cmd_count(int g, int r, int d, Method method) {
  try {
    const BNProblem problem(g, r, d);
    if (const long long rho = brill_noether_number(problem); rho != 0) {
      throw RhoNonzero(rho);
    }
    CommandResult result;
    json counts = json::object();
    std::ostringstream text;
    text << "g=" << g << " r=" << r << " d=" << d << " rho=0\n";
    if (method == Method::all) {
      const RouteCounts routes = all_routes(problem);
      counts = {{"formula", routes.formula.str()},
                {"schubert", routes.schubert.str()},
                {"tableaux", routes.tableaux.str()}};
      text << "formula: " << routes.formula << "\n"
           << "schubert: " << routes.schubert << "\n"
           << "tableaux: " << routes.tableaux
           << (routes.enumerated ? " (enumerated)" : " (hook-length)") << "\n"
           << "agree: " << bool_text(routes.agree()) << "\n";
      result.payload["agree"] = routes.agree();
      result.payload["tableaux_enumerated"] = routes.enumerated;
      if (!routes.agree()) {
        result.status = Status::error;
        result.exit_code = 1;
      }
    } else if (method == Method::formula) {
      const BigInt count = castelnuovo_number(problem);
      counts["formula"] = count.str();
      text << "formula: " << count << "\n";
    } else if (method == Method::schubert) {
      const BigInt count = castelnuovo_number_via_schubert(problem);
      counts["schubert"] = count.str();
      text << "schubert: " << count << "\n";
    } else {
      const TableauRouteResult tableaux = castelnuovo_number_via_tableaux(problem);
      counts["tableaux"] = tableaux.count.str();
      result.payload["tableaux_enumerated"] = tableaux.enumerated;
      text << "tableaux: " << tableaux.count
           << (tableaux.enumerated ? " (enumerated)" : " (hook-length)") << "\n";
    }
    result.payload["command"] = "count";
    result.payload["g"] = g;
    result.payload["r"] = r;
    result.payload["d"] = d;
    result.payload["rho"] = 0;
    result.payload["counts"] = std::move(counts);
    result.human_text = text.str();
    return result;
  } catch (const Error& e) {
    return failure("count", e.what());
  }
}

CommandResult cmd_degree(int h, int k) {
  try {
    const BigInt formula = castelnuovo_factorial(h, k).value;
    CommandResult result;
    std::ostringstream text;
    text << "h=" << h << " k=" << k << "\n" << "formula: " << formula << "\n";
    result.payload = {{"command", "degree"}, {"h", h}, {"k", k}, {"formula", formula.str()}};
    if (h >= 2) {
      const BigInt schubert = castelnuovo_schubert_count(h, k);
      const bool agree = schubert == formula;
      text << "schubert: " << schubert << "\n" << "agree: " << bool_text(agree) << "\n";
      result.payload["schubert"] = schubert.str();
      result.payload["agree"] = agree;
      if (!agree) {
        result.status = Status::error;
        result.exit_code = 1;
      }
    } else {
      text << "schubert: skipped (h=1 has no conditions)\n";
      result.payload["schubert"] = "skipped";
    }
    result.human_text = text.str();
    return result;
  } catch (const Error& e) {
    return failure("degree", e.what());
  }
}

CommandResult cmd_verify_g13(std::uint64_t seed, int trials) {
  if (trials < 1) {
    return failure("verify-g13", "--trials must be at least 1");
  }
  const std::vector<PencilSolutionReport> reports = conservation_experiment(seed, trials);
  const BigInt expected = castelnuovo_number(BNProblem(4, 1, 3));

  CommandResult result;
  std::ostringstream text;
  json trial_list = json::array();
  int generic = 0;
  bool all_two = true;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const PencilSolutionReport& report = reports[i];
    json entry = to_json(report);
    entry["trial"] = i + 1;
    trial_list.push_back(std::move(entry));

    text << "trial " << (i + 1) << ": params";
    for (const auto& t : report.parameters) {
      text << ' ' << t;
    }
    if (report.degenerate && report.count_with_multiplicity != 2) {
      text << " degenerate (" << report.reason << ")\n";
      continue;
    }
    if (!report.degenerate) {
      ++generic;
      if (report.count_with_multiplicity != expected || !report.certified) {
        all_two = false;
      }
    }
    text << " count=" << report.count_with_multiplicity
         << " discriminant=" << report.discriminant;
    if (report.extension) {
      text << " roots in " << report.extension->name();
    } else {
      text << " rational roots=" << report.solutions.size();
    }
    text << " certified=" << bool_text(report.certified);
    if (report.degenerate) {
      text << " degenerate (" << report.reason << ")";
    }
    text << "\n";
  }
  text << "generic trials: " << generic << "/" << trials << "\n"
       << "expected count: " << expected << "\n"
       << "all generic trials agree: " << bool_text(all_two) << "\n";
  result.payload = {{"command", "verify-g13"},  {"seed", seed},
                    {"trials", std::move(trial_list)}, {"generic_trials", generic},
                    {"expected", expected.str()}, {"agree", all_two}};
  result.human_text = text.str();
  if (!all_two) {
    result.status = Status::error;
    result.exit_code = 1;
  }
  return result;
}

CommandResult cmd_table(int g_max) {
  if (g_max < 1 || g_max > 30) {
    return failure("table", "g_max must lie in [1, 30], got " + std::to_string(g_max));
  }
  CommandResult result;
  std::ostringstream text;
  json rows = json::array();
  bool all_agree = true;
  text << std::setw(4) << "g" << std::setw(4) << "r" << std::setw(4) << "d" << "  count  agree\n";
  for (int g = 1; g <= g_max; ++g) {
    for (const BNProblem& problem : enumerate_rho_zero(g)) {
      const RouteCounts routes = all_routes(problem);
      all_agree = all_agree && routes.agree();
      text << std::setw(4) << problem.g() << std::setw(4) << problem.r() << std::setw(4)
           << problem.d() << "  " << routes.formula << "  " << bool_text(routes.agree());
      if (!routes.agree()) {
        text << " (schubert=" << routes.schubert << " tableaux=" << routes.tableaux << ")";
      }
      text << "\n";
      rows.push_back({{"g", problem.g()},
                      {"r", problem.r()},
                      {"d", problem.d()},
                      {"count", routes.formula.str()},
                      {"formula", routes.formula.str()},
                      {"schubert", routes.schubert.str()},
                      {"tableaux", routes.tableaux.str()},
                      {"tableaux_enumerated", routes.enumerated},
                      {"agree", routes.agree()}});
    }
  }
  text << "agree: " << bool_text(all_agree) << "\n";
  result.payload = {{"command", "table"}, {"g_max", g_max}, {"rows", std::move(rows)},
                    {"agree", all_agree}};
  result.human_text = text.str();
  if (!all_agree) {
    result.status = Status::error;
    result.exit_code = 1;
  }
  return result;
}

CommandResult cmd_syt(const std::vector<int>& parts) {
  try {
    const Partition shape(parts);
    const BigInt hooks = hook_length_count(shape).value;
    CommandResult result;
    std::ostringstream text;
    text << "shape " << shape.to_string() << ", " << shape.size() << " cells\n"
         << "hook-length: " << hooks << "\n";
    result.payload = {{"command", "syt"}, {"shape", parts}, {"hook_length", hooks.str()}};
    if (shape.size() <= kDefaultTableauCap) {
      const BigInt enumerated = enumerate_standard_tableaux(shape).value;
      const bool agree = enumerated == hooks;
      text << "enumerated: " << enumerated << "\n" << "agree: " << bool_text(agree) << "\n";
      result.payload["enumerated"] = enumerated.str();
      result.payload["agree"] = agree;
      if (!agree) {
        result.status = Status::error;
        result.exit_code = 1;
      }
    } else {
      text << "enumerated: skipped (more than " << kDefaultTableauCap << " cells)\n";
      result.payload["enumerated"] = "skipped";
    }
    result.human_text = text.str();
    return result;
  } catch (const Error& e) {
    return failure("syt", e.what());
  }
}

CommandResult cmd_schubert_power(int a, int N, int c, int repetitions) {
  try {
    const SchubertProblemInstance problem{GrassmannianSpec(a, N), c, repetitions};
    const BigInt number = intersection_number(problem);
    CommandResult result;
    result.payload = {{"command", "schubert-power"}, {"a", a}, {"N", N}, {"c", c},
                      {"repetitions", repetitions}, {"intersection_number", number.str()}};
    std::ostringstream text;
    text << "G(" << a << "," << N << ") sigma_" << c << "^" << repetitions << " = " << number
         << " points\n";
    result.human_text = text.str();
    return result;
  } catch (const Error& e) {
    return failure("schubert-power", e.what());
  }
}

namespace {

template <FiniteField F>
std::uint64_t count_over(const F& field, const LineInstance& instance, auto&& embed) {
  std::vector<LinearSubspace<F>> conditions;
  for (const auto& row : instance.conditions) {
    Matrix<F> basis(2, instance.N);
    for (int j = 0; j < instance.N; ++j) {
      basis(0, j) = embed(row[static_cast<std::size_t>(j)]);
      basis(1, j) = embed(row[static_cast<std::size_t>(instance.N + j)]);
    }
    conditions.push_back(LinearSubspace<F>::span(field, basis));
  }
  return finite_field_count<F>(field, instance.a, instance.N, conditions);
}

}  // namespace

CommandResult cmd_solve(const std::string& path) {
  try {
    std::ifstream in(path);
    if (!in) {
      throw InvalidArgument("cannot open " + path);
    }
    const LineInstance instance = parse_line_instance(in);
    CommandResult result;
    std::ostringstream text;
    if (instance.field == "Q") {
      const auto conditions = rational_conditions(instance);
      if (instance.a != 2 || instance.N != 4 || conditions.size() != 4) {
        throw InvalidArgument("the rational solver handles 2-planes of Q^4 and four lines");
      }
      PencilSolutionReport report;
      try {
        report = solve_four_lines({conditions[0], conditions[1], conditions[2], conditions[3]});
      } catch (const DegenerateConfiguration& e) {
        report.degenerate = true;
        report.reason = std::string("degenerate configuration: ") + e.what();
      } catch (const NonReducedPencil& e) {
        report.degenerate = true;
        report.infinite = true;
        report.reason = std::string("infinitely many solutions: ") + e.what();
      }
      result.payload = to_json(report);
      text << "count: " << (report.infinite ? std::string("inf")
                                            : std::to_string(report.count_with_multiplicity))
           << "\n"
           << "discriminant: " << report.discriminant << "\n";
      for (const auto& solution : report.solutions) {
        text << "solution:";
        for (Eigen::Index i = 0; i < solution.dim(); ++i) {
          text << " [";
          for (Eigen::Index j = 0; j < solution.ambient_dim(); ++j) {
            text << (j > 0 ? " " : "") << solution.basis()(i, j);
          }
          text << "]";
        }
        text << "\n";
      }
      if (report.extension) {
        text << "conjugate solutions over " << report.extension->name() << "\n";
      }
      if (report.degenerate) {
        text << "degenerate: " << report.reason << "\n";
      }
    } else if (instance.field.size() > 1 && instance.field[0] == 'F') {
      const bool extension = instance.field.ends_with("^2");
      const std::string digits =
          instance.field.substr(1, instance.field.size() - 1 - (extension ? 2 : 0));
      const std::uint64_t p = std::stoull(digits);
      std::uint64_t count = 0;
      if (extension) {
        const QuadraticExtensionField field(p);
        count = count_over(field, instance, [&](const BigInt& x) {
          return field.embed(field.base().from_big(x));
        });
      } else {
        const PrimeField field(p);
        count = count_over(field, instance, [&](const BigInt& x) { return field.from_big(x); });
      }
      result.payload = {{"count", count}, {"field", instance.field}, {"a", instance.a},
                        {"N", instance.N}};
      text << "subspaces meeting every condition over " << instance.field << ": " << count << "\n";
    } else {
      throw InvalidArgument("unknown field '" + instance.field + "'");
    }
    result.payload["command"] = "solve";
    result.human_text = text.str();
    return result;
  } catch (const Error& e) {
    return failure("solve", e.what());
  } catch (const std::invalid_argument& e) {
    return failure("solve", std::string("bad field specification: ") + e.what());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts linear series on general curves in the rho = 0 case"};
  app.require_subcommand(1);

  bool as_json = false;
  std::uint64_t seed = 1;
  int trials = 20;
  std::string method = "all";
  app.add_flag("--json", as_json, "Emit canonical JSON");
  app.add_option("--seed", seed, "Seed for verify-g13");
  app.add_option("--trials", trials, "Trial count for verify-g13");
  app.add_option("--method", method, "formula, schubert, tableaux or all")
      ->check(CLI::IsMember({"formula", "schubert", "tableaux", "all"}));

  int g = 0, r = 0, d = 0;
  auto* rho = app.add_subcommand("rho", "Brill-Noether number of (g, r, d)");
  auto* count = app.add_subcommand("count", "Number of g^r_d's when rho = 0");
  for (auto* sub : {rho, count}) {
    sub->add_option("g", g)->required();
    sub->add_option("r", r)->required();
    sub->add_option("d", d)->required();
  }

  int h = 0, k = 0;
  auto* degree = app.add_subcommand("degree", "Factorial formula vs Schubert count for (h, k)");
  degree->set_help_flag("--help", "Print this help message and exit");
  degree->add_option("h", h)->required();
  degree->add_option("k", k)->required();

  auto* verify = app.add_subcommand("verify-g13", "Four chords of the twisted cubic, exactly");

  int g_max = 0;
  auto* table = app.add_subcommand("table", "All rho = 0 counts up to genus g_max");
  table->add_option("g_max", g_max)->required();

  std::vector<int> parts;
  auto* syt = app.add_subcommand("syt", "Standard Young tableaux of a shape");
  syt->add_option("parts", parts)->required();

  int a = 0, n = 0, c = 0, reps = 0;
  auto* power = app.add_subcommand("schubert-power", "Point-class coefficient of sigma_c^reps");
  power->add_option("a", a)->required();
  power->add_option("N", n)->required();
  power->add_option("c", c)->required();
  power->add_option("reps", reps)->required();

  std::string path;
  auto* solve = app.add_subcommand("solve", "Solve a line-incidence instance file");
  solve->add_option("file", path)->required();

  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  CommandResult result;
  if (rho->parsed()) {
    result = cmd_rho(g, r, d);
  } else if (count->parsed()) {
    result = cmd_count(g, r, d, parse_method(method));
  } else if (degree->parsed()) {
    result = cmd_degree(h, k);
  } else if (verify->parsed()) {
    result = cmd_verify_g13(seed, trials);
  } else if (table->parsed()) {
    result = cmd_table(g_max);
  } else if (syt->parsed()) {
    result = cmd_syt(parts);
  } else if (power->parsed()) {
    result = cmd_schubert_power(a, n, c, reps);
  } else {
    result = cmd_solve(path);
  }

  if (as_json) {
    out << result.payload.dump() << "\n";
  } else if (result.status == Status::error && result.exit_code == 2) {
    err << result.human_text;
  } else {
    out << result.human_text;
  }
  return result.exit_code;
}

}  // namespace castelnuovo::cli
