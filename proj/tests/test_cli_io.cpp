#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "mckibben/cli.hpp"
#include "mckibben/config.hpp"
#include "mckibben/errors.hpp"
#include "mckibben/report.hpp"
#include "mckibben/units.hpp"
#include "oracles.hpp"

namespace {

using namespace mckibben;
using units::Dimension;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, sep)) parts.push_back(piece);
  return parts;
}

TEST(Units, ParsesSupportedUnits) {
  EXPECT_DOUBLE_EQ(units::parse("145 mm", Dimension::kLength), 0.145);
  EXPECT_DOUBLE_EQ(units::parse("145mm", Dimension::kLength), 0.145);
  EXPECT_DOUBLE_EQ(units::parse("0.866728 m", Dimension::kLength), 0.866728);
  EXPECT_DOUBLE_EQ(units::parse("90 deg", Dimension::kAngle), oracle::kPi / 2.0);
  EXPECT_DOUBLE_EQ(units::parse("1.2rad", Dimension::kAngle), 1.2);
  EXPECT_DOUBLE_EQ(units::parse("1 kPa", Dimension::kPressure), 1000.0);
  EXPECT_DOUBLE_EQ(units::parse("250 Pa", Dimension::kPressure), 250.0);
  EXPECT_DOUBLE_EQ(units::parse("16", Dimension::kDimensionless), 16.0);
  EXPECT_DOUBLE_EQ(units::parse_degrees("80.369 deg"), 80.369);
  EXPECT_NEAR(units::parse_degrees("1 rad"), 180.0 / oracle::kPi, 1e-13);
}

TEST(Units, RejectsMissingOrWrongUnits) {
  EXPECT_THROW(units::parse("145", Dimension::kLength), DomainError);
  EXPECT_THROW(units::parse("145 in", Dimension::kLength), DomainError);
  EXPECT_THROW(units::parse("16 mm", Dimension::kDimensionless), DomainError);
  EXPECT_THROW(units::parse("1 kPa", Dimension::kAngle), DomainError);
  EXPECT_THROW(units::parse("mm", Dimension::kLength), DomainError);
  EXPECT_THROW(units::parse("", Dimension::kDimensionless), DomainError);
  EXPECT_THROW(units::parse("1,5 mm", Dimension::kLength), DomainError);
}

TEST(Units, FormatRoundTrips) {
  oracle::Sampler s(51);
  for (int i = 0; i < 1000; ++i) {
    const double v = s.uniform(1e-6, 10.0);
    for (Dimension d : {Dimension::kLength, Dimension::kAngle, Dimension::kPressure,
                        Dimension::kDimensionless}) {
      EXPECT_EQ(units::parse(units::format_si(v, d), d), v);
    }
  }
}

TEST(Config, ParsesKeysCommentsAndUnits) {
  const RunConfig c = parse_config(
      "# fascicle\n"
      "L = 100 mm\n"
      "D = 10 mm   # measured\n"
      "\n"
      "N = 8\n"
      "t_hat = 0.1\n"
      "pressure = 50 kPa\n"
      "n = 1, 2,3\n"
      "policy = absolute\n"
      "theta2 = 60 deg\n");
  EXPECT_DOUBLE_EQ(c.length, 0.1);
  EXPECT_DOUBLE_EQ(c.diameter, 0.01);
  EXPECT_DOUBLE_EQ(c.turns, 8.0);
  EXPECT_FALSE(c.wall_thickness);
  EXPECT_DOUBLE_EQ(*c.relative_wall_thickness, 0.1);
  EXPECT_DOUBLE_EQ(c.pressure, 5e4);
  EXPECT_EQ(c.counts, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(c.policy, ThicknessPolicy::kAbsolute);
  EXPECT_DOUBLE_EQ(c.stroke_theta_2, oracle::deg(60.0));
}

TEST(Config, StrictAboutKeys) {
  EXPECT_THROW(parse_config("lenght = 1 mm\n"), DomainError);
  EXPECT_THROW(parse_config("L = 1 mm\nL = 2 mm\n"), DomainError);
  EXPECT_THROW(parse_config("L 1 mm\n"), DomainError);
  EXPECT_THROW(parse_config("policy = sideways\n"), DomainError);
  try {
    parse_config("L = 1 mm\n\nN = 3 mm\n");
    FAIL() << "expected an error";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("config line 3"), std::string::npos) << e.what();
  }
}

TEST(Config, TextRoundTrip) {
  oracle::Sampler s(52);
  for (int i = 0; i < 200; ++i) {
    RunConfig c;
    c.length = s.uniform(0.01, 1.0);
    c.diameter = s.uniform(0.001, 0.1);
    c.turns = s.uniform(1.0, 64.0);
    c.measured_theta = s.angle_deg(1.0, 89.0);
    c.reference_theta = s.angle_deg(1.0, 89.0);
    if (i % 2) {
      c.wall_thickness.reset();
      c.relative_wall_thickness = s.uniform(0.0, 0.5);
    } else {
      c.wall_thickness = s.uniform(0.0, 0.005);
    }
    c.pressure = s.uniform(0.0, 1e6);
    c.counts = {s.integer(1, 9), s.integer(10, 99)};
    c.policy = i % 3 ? ThicknessPolicy::kRelative : ThicknessPolicy::kAbsolute;
    c.stroke_theta_1 = s.angle_deg(1.0, 89.0);
    c.stroke_theta_2 = s.angle_deg(1.0, 89.0);
    c.sweep.theta_min_deg = s.uniform(1.0, 40.0);
    c.sweep.theta_step_deg = s.uniform(0.1, 5.0);
    c.sweep.theta_count.reset();
    c.tolerance = s.uniform(1e-9, 1e-2);
    c.strict = i % 5 == 0;
    c.format = i % 2 ? OutputFormat::kCsv : OutputFormat::kJson;

    const RunConfig back = parse_config(c.to_text());
    EXPECT_EQ(back.to_text(), c.to_text());
    EXPECT_NEAR(back.length, c.length, 1e-15 * c.length);
    EXPECT_NEAR(*back.reference_theta, *c.reference_theta, 1e-15);
    EXPECT_NEAR(back.pressure, c.pressure, 1e-15 * c.pressure);
    EXPECT_EQ(back.counts, c.counts);
    EXPECT_EQ(back.policy, c.policy);
    EXPECT_EQ(back.strict, c.strict);
    EXPECT_EQ(back.format, c.format);
    EXPECT_EQ(back.wall(), c.wall());
  }
}

TEST(Config, EveryDocumentedKeyIsAccepted) {
  RunConfig c;
  const std::map<std::string_view, std::string> sample{
      {"L", "1 m"},         {"D", "1 mm"},        {"N", "3"},
      {"theta", "1 rad"},   {"theta_ref", "1 rad"}, {"t_k", "1 mm"},
      {"t_hat", "0.1"},     {"pressure", "1 Pa"}, {"n", "2"},
      {"policy", "relative"}, {"theta1", "1 rad"}, {"theta2", "1 rad"},
      {"theta_min", "10 deg"}, {"theta_max", "80 deg"}, {"theta_count", "3"},
      {"theta_step", "1 deg"}, {"t_hat_min", "0"}, {"t_hat_max", "0.4"},
      {"t_hat_count", "3"}, {"t_hat_step", "0.1"}, {"format", "csv"},
      {"out", "x.csv"},     {"strict", "true"},   {"tolerance", "1e-6"},
      {"replicate_original_error", "false"}};
  for (std::string_view key : config_keys()) {
    ASSERT_TRUE(sample.count(key)) << key;
    EXPECT_NO_THROW(c.set(key, sample.at(key))) << key;
  }
}

TEST(Sweep, GridAxes) {
  SweepGrid g;
  g.theta_min_deg = 30;
  g.theta_max_deg = 90;
  g.theta_count.reset();
  g.theta_step_deg = 7.5;
  const auto th = g.theta_values_deg();
  ASSERT_EQ(th.size(), 9u);
  EXPECT_EQ(th.back(), 90.0);
  const auto t = g.t_hat_values();
  ASSERT_EQ(t.size(), 11u);
  EXPECT_EQ(t.front(), 0.0);
  EXPECT_EQ(t.back(), 0.5);
  g.theta_max_deg = 95;
  EXPECT_THROW(g.theta_values_deg(), DomainError);
}

TEST(Cli, ResolvePrintsResolvedFascicle) {
  const CliResult r = run_cli({"resolve", "--L", "145mm", "--D", "17mm", "--N", "16"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("866.728"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("80.369"), std::string::npos) << r.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"resolve", "--theta", "75.2deg"}).code, cli::kExitOk);
  EXPECT_EQ(run_cli({"--strict", "resolve", "--theta", "75.2deg"}).code,
            cli::kExitVerificationFailed);
  EXPECT_EQ(run_cli({"--strict", "resolve", "--theta", "80.3693712115deg"}).code, cli::kExitOk);
  EXPECT_EQ(run_cli({"resolve", "--L", "0mm"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"resolve", "--L", "145"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"teleport"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"--format", "xml", "compare"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"compare", "--n", "1,0"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"force", "--t-k", "9mm"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"--config", "/nonexistent/cfg"}).code, cli::kExitUsage);
  const CliResult help = run_cli({"--help"});
  EXPECT_EQ(help.code, cli::kExitOk);
  EXPECT_NE(help.out.find("compare"), std::string::npos);
}

TEST(Cli, CompareMatchesGoldenTable) {
  const CliResult r = run_cli({"compare"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, read_file(std::filesystem::path(MCKIBBEN_GOLDEN_DIR) / "table3.txt"));
}

TEST(Cli, CsvAndJsonAgree) {
  for (const char* cmd : {"resolve", "force", "compare", "sweep", "energy"}) {
    const CliResult csv = run_cli({"--format", "csv", cmd});
    const CliResult json = run_cli({"--format", "json", cmd});
    ASSERT_EQ(csv.code, cli::kExitOk) << cmd << csv.err;
    ASSERT_EQ(json.code, cli::kExitOk) << cmd << json.err;
    const auto doc = nlohmann::json::parse(json.out);
    EXPECT_EQ(doc["command"], cmd);
    const auto& columns = doc["outputs"]["columns"];
    const auto& rows = doc["outputs"]["rows"];
    const auto lines = split(csv.out, '\n');
    ASSERT_EQ(lines.size(), rows.size() + 1) << cmd;
    const auto header = split(lines[0], ',');
    ASSERT_EQ(header.size(), columns.size());
    for (std::size_t c = 0; c < header.size(); ++c) EXPECT_EQ(header[c], columns[c]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto cells = split(lines[r + 1], ',');
      cells.resize(header.size());
      for (std::size_t c = 0; c < header.size(); ++c) {
        const auto& v = rows[r][header[c]];
        if (v.is_null()) {
          EXPECT_EQ(cells[c], "");
        } else if (v.is_boolean()) {
          EXPECT_EQ(cells[c], v.get<bool>() ? "true" : "false");
        } else if (v.is_number()) {
          EXPECT_EQ(std::stod(cells[c]), v.get<double>()) << cmd << " " << header[c];
        } else {
          EXPECT_EQ(cells[c], v.get<std::string>());
        }
      }
    }
  }
}

TEST(Cli, SweepAnchors) {
  const CliResult r = run_cli({"--format", "json", "sweep", "--theta-min", "30deg", "--theta-max",
                         "90deg", "--theta-count", "61", "--t-hat-count", "11"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  bool found_piston = false;
  for (const auto& row : doc["outputs"]["rows"]) {
    const double th = row["theta_deg"];
    const double t = row["t_hat"];
    if (th == 90.0 && t == 0.0) {
      EXPECT_EQ(row["F_hat"].get<double>(), -1.0);
      found_piston = true;
    }
    if (t == 0.0) {
      EXPECT_NEAR(row["zero_force_theta_deg"].get<double>(), 54.73561031724535, 1e-9);
    }
    if (t == 0.5) {
      EXPECT_TRUE(row["zero_force_theta_deg"].is_null());
      EXPECT_NEAR(row["F_hat"].get<double>(), 0.0, 1e-12);
    }
  }
  EXPECT_TRUE(found_piston);
  EXPECT_EQ(doc["verdicts"]["zero_force_angle_increases_with_t_hat"], true);
}

TEST(Cli, FlagsOverrideConfigFile) {
  const auto path = std::filesystem::temp_directory_path() / "mckibben_test.cfg";
  std::ofstream(path) << "L = 100 mm\nD = 10 mm\nN = 8\nformat = json\n";
  const CliResult from_file = run_cli({"--config", path.string(), "resolve"});
  ASSERT_EQ(from_file.code, cli::kExitOk) << from_file.err;
  const auto doc = nlohmann::json::parse(from_file.out);
  EXPECT_NEAR(doc["outputs"]["rows"][0]["b_mm"].get<double>(), 270.4911609775297, 1e-10);
  const CliResult flagged = run_cli({"--config", path.string(), "resolve", "--N", "16"});
  const auto doc2 = nlohmann::json::parse(flagged.out);
  EXPECT_DOUBLE_EQ(doc2["inputs"]["N"].get<double>(), 16.0);
  std::filesystem::remove(path);
}

TEST(Cli, WritesToOutFile) {
  const auto path = std::filesystem::temp_directory_path() / "mckibben_table.txt";
  const CliResult r = run_cli({"--out", path.string(), "compare"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(read_file(path), read_file(std::filesystem::path(MCKIBBEN_GOLDEN_DIR) / "table3.txt"));
  std::filesystem::remove(path);
}

TEST(Cli, ReplicateOriginalErrorFlagsEveryPackedRow) {
  const CliResult r = run_cli({"--format", "json", "compare", "--replicate-original-error"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  for (const auto& row : doc["outputs"]["rows"]) {
    EXPECT_EQ(row["original_eq_consistent"].get<bool>(), row["n"].get<double>() == 1.0);
  }
}

TEST(Report, CsvQuoting) {
  Report rep;
  rep.columns = {"a", "b"};
  rep.rows = {{std::string("x,y"), std::monostate{}}, {std::string("say \"hi\""), 1.5}};
  EXPECT_EQ(to_csv(rep), "a,b\n\"x,y\",\n\"say \"\"hi\"\"\",1.5\n");
}

}  // namespace
