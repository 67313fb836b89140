#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <functional>
#include <fstream>
#include <regex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "commands.hpp"

using castelnuovo::cli::run;
using nlohmann::json;

namespace {

struct Invocation {
  int exit_code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args) {
  args.push_back("--json");
  const auto result = invoke(args);
  REQUIRE(result.exit_code == 0);
  return json::parse(result.out);
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::filesystem::path write_instance(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("rho") {
  const auto zero = invoke({"rho", "4", "1", "3"});
  CHECK(zero.exit_code == 0);
  CHECK(contains(zero.out, "rho=0"));
  CHECK(contains(zero.out, "castelnuovo-case=true"));
  const auto two = invoke_json({"rho", "4", "1", "4"});
  CHECK(two["rho"] == 2);
  CHECK(two["castelnuovo_case"] == false);
  const auto bad = invoke({"rho", "4", "0", "3"});
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());
  CHECK(invoke({"rho", "x", "1", "3"}).exit_code == 2);
  CHECK(invoke({"rho", "4", "1"}).exit_code == 2);
}

TEST_CASE("count") {
  const auto all = invoke({"count", "4", "1", "3", "--method", "all"});
  CHECK(all.exit_code == 0);
  CHECK(contains(all.out, "formula: 2"));
  CHECK(contains(all.out, "schubert: 2"));
  CHECK(contains(all.out, "tableaux: 2"));
  CHECK(contains(all.out, "agree: true"));

  const auto j = invoke_json({"count", "8", "1", "5"});
  CHECK(j["counts"]["formula"] == "14");
  CHECK(j["counts"]["schubert"] == "14");
  CHECK(j["counts"]["tableaux"] == "14");
  CHECK(j["agree"] == true);

  const auto single = invoke_json({"count", "8", "1", "5", "--method", "schubert"});
  CHECK(single["counts"].size() == 1);
  CHECK(single["counts"]["schubert"] == "14");

  const auto nonzero = invoke({"count", "5", "1", "4"});
  CHECK(nonzero.exit_code == 2);
  CHECK(contains(nonzero.err, "rho=1"));
  CHECK(invoke({"count", "4", "1", "3", "--method", "guess"}).exit_code == 2);

  // Counts beyond 64 bits are printed as full decimal strings.
  const auto big = invoke_json({"count", "30", "1", "16", "--method", "formula"});
  CHECK(big["counts"]["formula"] == "9694845");
  const auto huge = invoke_json({"count", "30", "5", "30", "--method", "formula"});
  const std::string digits = huge["counts"]["formula"];
  CHECK(std::regex_match(digits, std::regex("[1-9][0-9]*")));
}

TEST_CASE("degree") {
  const auto two = invoke_json({"degree", "2", "2"});
  CHECK(two["formula"] == "2");
  CHECK(two["schubert"] == "2");
  CHECK(two["agree"] == true);
  const auto five = invoke({"degree", "3", "2"});
  CHECK(five.exit_code == 0);
  CHECK(contains(five.out, "formula: 5"));
  CHECK(contains(five.out, "schubert: 5"));
  const auto skipped = invoke_json({"degree", "1", "7"});
  CHECK(skipped["formula"] == "1");
  CHECK(skipped["schubert"] == "skipped");
  CHECK(invoke({"degree", "0", "2"}).exit_code == 2);
}

TEST_CASE("verify-g13") {
  const std::vector<std::string> args{"verify-g13", "--seed", "1", "--trials", "5"};
  const auto first = invoke(args);
  const auto second = invoke(args);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  const auto j = invoke_json(args);
  REQUIRE(j["trials"].size() == 5);
  for (const auto& trial : j["trials"]) {
    CHECK(trial["count"] == 2);
    CHECK(trial["certified"] == true);
  }
  CHECK(j["agree"] == true);
  CHECK(invoke({"verify-g13", "--trials", "0"}).exit_code == 2);
  CHECK(invoke({"verify-g13", "--seed", "2", "--trials", "3"}).out != invoke({"verify-g13", "--seed", "3", "--trials", "3"}).out);
}

TEST_CASE("table") {
  const auto four = invoke({"table", "4"});
  CHECK(four.exit_code == 0);
  CHECK(std::regex_search(four.out, std::regex(R"(\b4\s+1\s+3\s+2\b)")));
  const auto six = invoke_json({"table", "6"});
  bool row_614 = false;
  bool row_626 = false;
  for (const auto& row : six["rows"]) {
    CHECK(row["agree"] == true);
    if (row["g"] == 6 && row["r"] == 1 && row["d"] == 4) row_614 = row["count"] == "5";
    if (row["g"] == 6 && row["r"] == 2 && row["d"] == 6) row_626 = row["count"] == "5";
  }
  CHECK(row_614);
  CHECK(row_626);
  CHECK(invoke({"table", "0"}).exit_code == 2);
  CHECK(invoke({"table", "31"}).exit_code == 2);
}

TEST_CASE("syt and schubert-power") {
  const auto syt = invoke_json({"syt", "3", "2", "1"});
  CHECK(syt["hook_length"] == "16");
  CHECK(syt["enumerated"] == "16");
  CHECK(invoke({"syt", "2", "3"}).exit_code == 2);
  const auto power = invoke_json({"schubert-power", "2", "4", "1", "4"});
  CHECK(power["intersection_number"] == "2");
  CHECK(invoke({"schubert-power", "2", "4", "1", "3"}).exit_code == 2);
}

TEST_CASE("solve") {
  const auto q = write_instance("castelnuovo_cli_q.txt",
                                "# coordinate lines\n2 4 Q\n"
                                "1 0 0 0 0 1 0 0\n0 0 1 0 0 0 0 1\n"
                                "1 0 0 0 0 0 1 0\n0 1 0 0 0 0 0 1\n");
  const auto j = invoke_json({"solve", q.string()});
  CHECK(j["count"] == 2);
  CHECK(j["certified"] == true);
  CHECK(j["solutions"].size() == 2);

  const auto f5 = write_instance("castelnuovo_cli_f5.txt",
                                 "2 4 F5\n"
                                 "1 0 0 0 0 1 0 0\n0 0 1 0 0 0 0 1\n"
                                 "1 0 0 0 0 0 1 0\n0 1 0 0 0 0 0 1\n");
  const auto finite = invoke({"solve", f5.string()});
  CHECK(finite.exit_code == 0);
  CHECK(contains(finite.out, ": 2"));

  const auto broken = write_instance("castelnuovo_cli_bad.txt", "2 4 Q\n1 2 3\n");
  CHECK(invoke({"solve", broken.string()}).exit_code == 2);
  CHECK(invoke({"solve", "/nonexistent/instance.txt"}).exit_code == 2);
  CHECK(invoke({}).exit_code == 2);
  CHECK(invoke({"bogus"}).exit_code == 2);
}

TEST_CASE("JSON output is canonical and matches the human output") {
  const std::vector<std::vector<std::string>> commands{
      {"rho", "6", "2", "6"},          {"count", "9", "2", "8"},
      {"degree", "4", "3"},            {"table", "9"},
      {"syt", "4", "4", "2"},          {"schubert-power", "3", "6", "1", "9"},
      {"verify-g13", "--trials", "3"}};
  for (const auto& args : commands) {
    auto with_json = args;
    with_json.push_back("--json");
    const auto out = invoke(with_json).out;
    REQUIRE_FALSE(out.empty());
    CHECK(out.back() == '\n');
    const auto parsed = json::parse(out);
    CHECK(parsed.dump() + "\n" == out);
    CHECK(invoke(with_json).out == out);

    // Every decimal number in the JSON also appears in the human output.
    const auto human = invoke(args).out;
    std::vector<std::string> numbers;
    std::function<void(const json&)> collect = [&](const json& v) {
      if (v.is_string() && std::regex_match(v.get<std::string>(), std::regex("-?[0-9]+"))) {
        numbers.push_back(v.get<std::string>());
      } else if (v.is_number_integer()) {
        numbers.push_back(std::to_string(v.get<long long>()));
      } else if (v.is_array()) {
        for (const auto& child : v) collect(child);
      } else if (v.is_object()) {
        // Solution bases are only listed in JSON; the human text summarizes them.
        for (const auto& [key, child] : v.items()) {
          if (key != "solutions" && key != "conjugate_solutions") collect(child);
        }
      }
    };
    collect(parsed);
    for (const auto& n : numbers) {
      CHECK_MESSAGE(std::regex_search(human, std::regex("(^|[^0-9])" + n + "([^0-9]|$)")),
                    args[0] << " missing " << n);
    }
  }
  const auto nine = invoke_json({"count", "9", "2", "8"});
  CHECK(nine["counts"]["formula"] == "42");
}
