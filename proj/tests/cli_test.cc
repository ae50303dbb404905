//
// Copyright 2026 The gaussdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "gaussdp/cli/commands.h"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "json.hpp"
#include "gaussdp/calib.h"
#include "gaussdp/categorical.h"
#include "gaussdp/errors.h"

namespace gaussdp::cli {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "gaussdp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = Run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

using Row = std::map<std::string, std::string>;

// Minimal reader for the CLI's own CSV (quoted fields without newlines).
std::vector<Row> ReadCsv(const std::string& text) {
  std::istringstream in(text);
  const auto table = ParseCategoricalCsv(in);
  std::vector<Row> rows;
  for (const auto& r : table.rows) {
    Row row;
    for (std::size_t j = 0; j < r.size(); ++j) row[table.header[j]] = r[j];
    rows.push_back(row);
  }
  return rows;
}

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

TEST(GridTest, Forms) {
  EXPECT_EQ(ParseGrid("0.1,1,5"), std::vector<double>({0.1, 1, 5}));
  const auto lg = ParseGrid("log:1e-8:1e-1:8");
  ASSERT_EQ(lg.size(), 8u);
  EXPECT_EQ(lg.front(), 1e-8);
  EXPECT_EQ(lg.back(), 1e-1);
  EXPECT_NEAR(lg[3], 1e-5, 1e-18);
  const auto ln = ParseGrid("lin:0:1:5");
  EXPECT_EQ(ln, std::vector<double>({0, 0.25, 0.5, 0.75, 1}));
  EXPECT_EQ(ParseGrid("lin:2:3:1"), std::vector<double>({2}));
  EXPECT_THROW(ParseGrid(""), ParseError);
  EXPECT_THROW(ParseGrid("1,,2"), ParseError);
  EXPECT_THROW(ParseGrid("log:0:1:3"), ParseError);
  EXPECT_THROW(ParseGrid("lin:0:1"), ParseError);
  EXPECT_THROW(ParseGrid("lin:0:1:2.5"), ParseError);
  EXPECT_THROW(ParseGrid("abc"), ParseError);
}

TEST(TermTest, Forms) {
  const auto t = ParseTerm("2:3.5");
  EXPECT_EQ(t.sensitivity.l2(), 2.0);
  EXPECT_EQ(t.sigma, 3.5);
  EXPECT_THROW(ParseTerm("2"), ParseError);
  EXPECT_THROW(ParseTerm("2:3:4"), ParseError);
  EXPECT_THROW(ParseTerm("a:1"), ParseError);
  EXPECT_THROW(ParseTerm("1:0"), ParseError);
  EXPECT_THROW(ParseTerm("-1:1"), ParseError);
}

TEST(CalibrateCommandTest, DpOpt) {
  const auto r = Invoke({"calibrate", "--mech", "dp-opt", "--eps", "10",
                         "--delta", "0.01", "--sens", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = ReadCsv(r.out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_NEAR(std::stod(rows[0].at("sigma")), 0.3501, 5e-4);
  EXPECT_EQ(rows[0].at("mechanism"), "dp-opt");
  EXPECT_EQ(rows[0].at("warning"), "");
  for (const char* key : {"epsilon", "delta", "sensitivity", "iterations",
                          "residual", "root"}) {
    EXPECT_TRUE(rows[0].count(key)) << key;
  }
}

TEST(CalibrateCommandTest, Dwork2014Warning) {
  const auto r = Invoke({"calibrate", "--mech", "dwork2014", "--eps", "10",
                         "--delta", "0.01", "--sens", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = ReadCsv(r.out);
  EXPECT_NEAR(std::stod(rows[0].at("sigma")), 0.3108, 1e-4);
  EXPECT_NE(rows[0].at("warning").find("epsilon > 1"), std::string::npos);
}

TEST(CalibrateCommandTest, Mech2DomainError) {
  const auto r = Invoke({"calibrate", "--mech", "mech2", "--eps", "1",
                         "--delta", "0.6", "--sens", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("delta < 0.5"), std::string::npos);
}

TEST(CalibrateCommandTest, UsageErrors) {
  EXPECT_EQ(Invoke({}).code, 2);
  EXPECT_EQ(Invoke({"calibrate", "--eps", "1"}).code, 2);
  EXPECT_EQ(Invoke({"calibrate", "--eps", "1", "--delta", "2"}).code, 2);
  EXPECT_EQ(Invoke({"calibrate", "--eps", "x", "--delta", "0.1"}).code, 2);
  EXPECT_EQ(Invoke({"calibrate", "--eps", "1", "--delta", "0.1", "--mech",
                    "bogus"}).code, 2);
  EXPECT_EQ(Invoke({"calibrate", "--eps", "1", "--delta", "0.1", "--format",
                    "xml"}).code, 2);
  EXPECT_EQ(Invoke({"--help"}).code, 0);
}

TEST(CompareCommandTest, RowOrderAndMinimum) {
  const auto r = Invoke({"compare", "--eps", "0.1,1,5,10,15,20", "--delta",
                         "log:1e-8:1e-1:8"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = ReadCsv(r.out);
  ASSERT_EQ(rows.size(), 6u * 8u * 9u);
  std::size_t i = 0;
  for (double eps : {0.1, 1.0, 5.0, 10.0, 15.0, 20.0}) {
    for (int k = 0; k < 8; ++k) {
      double opt = 0.0, min_dp = INFINITY;
      for (Mechanism m : kAllMechanisms) {
        const Row& row = rows[i++];
        EXPECT_EQ(std::stod(row.at("epsilon")), eps);
        EXPECT_EQ(row.at("mechanism"), MechanismName(m));
        const double s = std::stod(row.at("sigma"));
        if (m == Mechanism::kDpOpt) opt = s;
        if (row.at("achieves_dp") == "true") min_dp = std::min(min_dp, s);
        if (m == Mechanism::kDpOpt || m == Mechanism::kMech1 ||
            m == Mechanism::kMech2) {
          EXPECT_EQ(row.at("achieves_dp"), "true");
        }
      }
      EXPECT_EQ(opt, min_dp);
    }
  }
}

TEST(CompareCommandTest, Dwork2014FailsAtFifteen) {
  const auto r = Invoke({"compare", "--eps", "15", "--delta", "1e-4"});
  ASSERT_EQ(r.code, 0);
  for (const auto& row : ReadCsv(r.out)) {
    if (row.at("mechanism") == "dwork2014") {
      EXPECT_EQ(row.at("achieves_dp"), "false");
    }
  }
}

TEST(CompareCommandTest, SingleCellMatchesCalibrate) {
  const auto cmp = ReadCsv(Invoke({"compare", "--eps", "0.7", "--delta", "1e-3"}).out);
  const auto cal =
      ReadCsv(Invoke({"calibrate", "--eps", "0.7", "--delta", "1e-3"}).out);
  ASSERT_EQ(cmp.size(), 9u);
  ASSERT_EQ(cal.size(), 9u);
  for (std::size_t i = 0; i < 9; ++i) {
    EXPECT_EQ(cmp[i].at("mechanism"), cal[i].at("mechanism"));
    EXPECT_EQ(cmp[i].at("sigma"), cal[i].at("sigma"));
  }
}

TEST(CompareCommandTest, UndefinedCellIsEmpty) {
  const auto rows = ReadCsv(Invoke({"compare", "--eps", "1", "--delta", "0.7"}).out);
  for (const auto& row : rows) {
    if (row.at("mechanism") == "mech2") {
      EXPECT_EQ(row.at("sigma"), "");
    } else {
      EXPECT_NE(row.at("sigma"), "");
    }
  }
}

TEST(RegionCommandTest, Frontier) {
  const auto r = Invoke({"region", "--delta", "1e-3,1e-4,1e-5,1e-6"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = ReadCsv(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_NEAR(std::stod(rows[0].at("G_dwork2014")), 7.47, 0.01);
  EXPECT_NEAR(std::stod(rows[0].at("G_dwork2006")), 8.51, 0.01);
  EXPECT_NEAR(std::stod(rows[2].at("G_dwork2006")), 9.39, 0.01);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_GT(std::stod(rows[i].at("G_dwork2006")),
              std::stod(rows[i].at("G_dwork2014")));
    if (i > 0) {
      EXPECT_GT(std::stod(rows[i].at("G_dwork2014")),
                std::stod(rows[i - 1].at("G_dwork2014")));
      EXPECT_GT(std::stod(rows[i].at("G_dwork2006")),
                std::stod(rows[i - 1].at("G_dwork2006")));
    }
  }
}

TEST(ProfileCommandTest, Rows) {
  const double s = SolveDpOpt(PrivacyBudget(1, 1e-4), Sensitivity(1)).noise.sigma;
  const auto r = Invoke({"profile", "--eps", "1", "--sigma",
                         "0.5,1,2," + FormatDouble(s) + ",5,10"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = ReadCsv(r.out);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_NEAR(std::stod(rows[3].at("dp_delta")), 1e-4, 1e-9);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_GE(std::stod(rows[i].at("pdp_delta")), std::stod(rows[i].at("dp_delta")));
    if (i > 0) {
      EXPECT_LT(std::stod(rows[i].at("dp_delta")),
                std::stod(rows[i - 1].at("dp_delta")));
      EXPECT_LT(std::stod(rows[i].at("pdp_delta")),
                std::stod(rows[i - 1].at("pdp_delta")));
    }
  }
  EXPECT_EQ(ReadCsv(Invoke({"profile", "--eps", "1", "--sigma", "2"}).out).size(),
            1u);
}

TEST(ComposeCommandTest, Values) {
  auto r = Invoke({"compose", "--term", "1:1", "--term", "2:2", "--term", "3:3",
                   "--eps", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(std::stod(ReadCsv(r.out)[0].at("sigma_star")), 1 / std::sqrt(3.0),
              1e-12);
  r = Invoke({"compose", "--term", "1:2", "--term", "1:2", "--term", "1:2",
              "--term", "1:2", "--eps", "1"});
  EXPECT_EQ(std::stod(ReadCsv(r.out)[0].at("sigma_star")), 1.0);
  const double s = SolveDpOpt(PrivacyBudget(1, 1e-4), Sensitivity(1)).noise.sigma;
  r = Invoke({"compose", "--term", "1:" + FormatDouble(s), "--eps", "1"});
  EXPECT_NEAR(std::stod(ReadCsv(r.out)[0].at("dp_delta")), 1e-4, 1e-9);
}

TEST(ComposeCommandTest, MalformedTerm) {
  EXPECT_EQ(Invoke({"compose", "--term", "1-1", "--eps", "1"}).code, 2);
  EXPECT_EQ(Invoke({"compose", "--term", "1:x", "--eps", "1"}).code, 2);
  EXPECT_EQ(Invoke({"compose", "--eps", "1"}).code, 2);
}

TEST(ExperimentCommandTest, MeanOrdering) {
  const auto r = Invoke({"experiment", "mean", "--n", "1000", "--d", "10",
                         "--eps", "0.1", "--delta", "1e-4", "--trials", "200",
                         "--seed", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = ReadCsv(r.out);
  ASSERT_EQ(rows.size(), 9u);
  double opt = 0.0, others = INFINITY;
  for (const auto& row : rows) {
    const auto m = ParseMechanism(row.at("mechanism"));
    if (!IsPdpCalibration(*m) && *m != Mechanism::kCdpRoute) {
      const double v = std::stod(row.at("metric"));
      if (*m == Mechanism::kDpOpt) {
        opt = v;
      } else {
        others = std::min(others, v);
      }
    }
  }
  EXPECT_LT(opt, others);
  EXPECT_EQ(Invoke({"experiment", "mean", "--n", "1000", "--d", "10", "--eps",
                    "0.1", "--delta", "1e-4", "--trials", "200", "--seed", "1"})
                .out,
            r.out);
}

TEST(ExperimentCommandTest, HistogramFromSynthFile) {
  const std::string path = TempPath("gaussdp_cli_synth.csv");
  ASSERT_EQ(Invoke({"synth", "--rows", "3000", "--seed", "2", "--output", path})
                .code,
            0);
  const auto r = Invoke({"experiment", "hist", "--csv", path, "--eps", "0.1",
                         "--delta", "1e-6", "--trials", "200"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = ReadCsv(r.out);
  std::string worst;
  double worst_metric = -1;
  for (const auto& row : rows) {
    const double v = std::stod(row.at("metric"));
    if (v > worst_metric) {
      worst_metric = v;
      worst = row.at("mechanism");
    }
  }
  EXPECT_EQ(worst, "dwork2006");
  std::remove(path.c_str());
}

TEST(ExperimentCommandTest, HistogramNeedsValidCsv) {
  EXPECT_EQ(Invoke({"experiment", "hist", "--eps", "0.1", "--delta", "1e-6"}).code,
            2);
  EXPECT_EQ(Invoke({"experiment", "hist", "--csv", "/nonexistent.csv", "--eps",
                    "0.1", "--delta", "1e-6"})
                .code,
            2);
  const std::string path = TempPath("gaussdp_cli_bad.csv");
  {
    std::ofstream f(path);
    f << "a,b\n1\n";
  }
  EXPECT_EQ(Invoke({"experiment", "hist", "--csv", path, "--eps", "0.1",
                    "--delta", "1e-6"})
                .code,
            2);
  std::remove(path.c_str());
}

TEST(OutputTest, JsonLines) {
  const auto r = Invoke({"calibrate", "--eps", "1", "--delta", "1e-5",
                         "--format", "json"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    const auto obj = nlohmann::json::parse(line);
    EXPECT_TRUE(obj.contains("sigma"));
    EXPECT_TRUE(obj.contains("warning"));
    ++n;
  }
  EXPECT_EQ(n, 9);
}

TEST(OutputTest, CsvRoundTripsExactly) {
  const auto r = Invoke({"compare", "--eps", "log:0.01:30:7", "--delta",
                         "log:1e-9:0.3:5"});
  for (const auto& row : ReadCsv(r.out)) {
    if (row.at("sigma").empty()) continue;
    const double eps = std::stod(row.at("epsilon"));
    const double delta = std::stod(row.at("delta"));
    const double sigma = std::stod(row.at("sigma"));
    EXPECT_EQ(FormatDouble(sigma), row.at("sigma"));
    const auto m = *ParseMechanism(row.at("mechanism"));
    if (m == Mechanism::kDpOpt) {
      EXPECT_EQ(sigma,
                SolveDpOpt(PrivacyBudget(eps, delta), Sensitivity(1)).noise.sigma);
    }
  }
}

TEST(OutputTest, FileOutput) {
  const std::string path = TempPath("gaussdp_cli_out.csv");
  ASSERT_EQ(Invoke({"region", "--delta", "1e-3", "--output", path}).code, 0);
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  EXPECT_EQ(buf.str(), Invoke({"region", "--delta", "1e-3"}).out);
  std::remove(path.c_str());
  EXPECT_EQ(Invoke({"region", "--delta", "1e-3", "--output",
                    "/nonexistent/dir/x.csv"})
                .code,
            2);
}

TEST(BinaryTest, ExitCodes) {
  const std::string bin = GAUSSDP_CLI_PATH;
  EXPECT_EQ(std::system((bin + " calibrate --eps 1 --delta 1e-3 >/dev/null").c_str()), 0);
  const int status =
      std::system((bin + " calibrate --mech mech2 --eps 1 --delta 0.6 2>/dev/null").c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
}

}  // namespace
}  // namespace gaussdp::cli
