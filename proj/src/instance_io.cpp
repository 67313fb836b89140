#include "castelnuovo/instance_io.hpp"

#include <istream>
#include <sstream>

namespace castelnuovo {

namespace {

template <Field F>
nlohmann::json basis_json(const LinearSubspace<F>& subspace) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < subspace.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < subspace.ambient_dim(); ++j) {
      row.push_back(subspace.field().format(subspace.basis()(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string rational_string(const Rational& x) { return x.str(); }

LineInstance parse_line_instance(std::istream& in) {
  LineInstance instance;
  bool have_header = false;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) {
      continue;
    }
    tokens.clear();
    tokens.str(line);
    if (!have_header) {
      if (!(tokens >> instance.a >> instance.N >> instance.field)) {
        throw ParseError("line " + std::to_string(line_number) + ": expected header 'a N field'");
      }
      if (instance.a < 1 || instance.N <= instance.a) {
        throw ParseError("header needs 1 <= a < N");
      }
      have_header = true;
      continue;
    }
    std::vector<BigInt> entries;
    std::string token;
    while (tokens >> token) {
      try {
        entries.emplace_back(token);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_number) + ": bad integer '" + token + "'");
      }
    }
    if (entries.size() != static_cast<std::size_t>(2 * instance.N)) {
      throw ParseError("line " + std::to_string(line_number) + ": expected " +
                       std::to_string(2 * instance.N) + " integers, got " +
                       std::to_string(entries.size()));
    }
    instance.conditions.push_back(std::move(entries));
  }
  if (!have_header) {
    throw ParseError("missing header line");
  }
  return instance;
}

std::vector<RationalSubspace> rational_conditions(const LineInstance& instance) {
  std::vector<RationalSubspace> out;
  for (const auto& row : instance.conditions) {
    Matrix<RationalField> basis(2, instance.N);
    for (int j = 0; j < instance.N; ++j) {
      basis(0, j) = Rational(row[static_cast<std::size_t>(j)]);
      basis(1, j) = Rational(row[static_cast<std::size_t>(instance.N + j)]);
    }
    out.push_back(RationalSubspace::span(RationalField{}, basis));
  }
  return out;
}

nlohmann::json to_json(const PencilSolutionReport& report) {
  nlohmann::json out;
  out["count"] = report.infinite ? nlohmann::json("inf") : nlohmann::json(report.count_with_multiplicity);
  out["infinite"] = report.infinite;
  out["degenerate"] = report.degenerate;
  out["reason"] = report.reason;
  out["discriminant"] = rational_string(report.discriminant);
  out["certified"] = report.certified;
  nlohmann::json solutions = nlohmann::json::array();
  for (const auto& solution : report.solutions) {
    solutions.push_back(basis_json(solution));
  }
  out["solutions"] = std::move(solutions);
  nlohmann::json conjugates = nlohmann::json::array();
  for (const auto& solution : report.conjugate_solutions) {
    conjugates.push_back(basis_json(solution));
  }
  out["conjugate_solutions"] = std::move(conjugates);
  out["extension"] = report.extension ? nlohmann::json(report.extension->name()) : nlohmann::json();
  if (!report.parameters.empty()) {
    nlohmann::json parameters = nlohmann::json::array();
    for (const auto& t : report.parameters) {
      parameters.push_back(rational_string(t));
    }
    out["parameters"] = std::move(parameters);
  }
  return out;
}

}  // namespace castelnuovo
