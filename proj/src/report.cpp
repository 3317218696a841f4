#include "mckibben/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "mckibben/units.hpp"

namespace mckibben {

namespace {

std::string csv_field(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(double v) const { return units::repr(v); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
      std::string quoted = "\"";
      for (const char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      return quoted + '"';
    }
  };
  return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json json_value(const Cell& cell) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(double v) const { return v; }
    nlohmann::ordered_json operator()(long long v) const { return v; }
    nlohmann::ordered_json operator()(bool v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json json_object(const std::vector<std::pair<std::string, Cell>>& entries) {
  nlohmann::ordered_json object = nlohmann::ordered_json::object();
  for (const auto& [key, cell] : entries) object[key] = json_value(cell);
  return object;
}

}  // namespace

std::string to_csv(const Report& report) {
  std::ostringstream os;
  for (std::size_t i = 0; i < report.columns.size(); ++i) {
    os << (i ? "," : "") << csv_field(report.columns[i]);
  }
  os << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << '\n';
  }
  return os.str();
}

std::string to_json(const Report& report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json object = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < report.columns.size(); ++i) {
      object[report.columns[i]] = json_value(row[i]);
    }
    rows.push_back(std::move(object));
  }

  nlohmann::ordered_json doc;
  doc["command"] = report.command;
  doc["inputs"] = json_object(report.inputs);
  doc["outputs"] = {{"columns", report.columns}, {"rows", std::move(rows)}};
  doc["verdicts"] = json_object(report.verdicts);
  return doc.dump(2) + '\n';
}

}  // namespace mckibben
