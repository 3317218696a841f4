#pragma once

// Structured command output. A report is one table of rows plus the inputs
// and verdicts that produced it; CSV carries the table, JSON carries all
// three, and pretty mode uses text composed by the command itself.

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace mckibben {

using Cell = std::variant<std::monostate, double, long long, bool, std::string>;

struct Report {
  std::string command;
  std::vector<std::pair<std::string, Cell>> inputs;
  // Column names carry their unit, e.g. "pack_N_per_kPa".
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> verdicts;
  std::string pretty;
};

// Header row plus one line per row. Numbers use the shortest round-trip
// form with '.' as the decimal separator; empty cells stay empty.
std::string to_csv(const Report& report);

// {"command", "inputs", "outputs": {"columns", "rows"}, "verdicts"}; rows
// are objects keyed by column name.
std::string to_json(const Report& report);

}  // namespace mckibben
