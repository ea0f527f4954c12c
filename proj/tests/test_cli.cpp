// Runs the built `foxhom` executable and checks its output and exit codes.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include <foxhom/foxhom.hpp>

namespace fs = std::filesystem;
using json   = nlohmann::json;

namespace {

  struct Run {
    int         code = -1;
    std::string out;
    std::string err;
  };

  std::string data(std::string const& name) { return std::string(FOXHOM_DATA) + "/" + name; }

  fs::path scratch() {
    fs::path dir(FOXHOM_SCRATCH);
    fs::create_directories(dir);
    return dir;
  }

  std::string slurp(fs::path const& p) {
    std::ifstream      in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  Run run(std::string const& args) {
    auto const err_file = scratch() / ("stderr_" + std::to_string(::getpid()) + ".txt");
    std::string cmd = std::string("'") + FOXHOM_CLI + "' " + args + " 2>'" + err_file.string() + "'";
    Run         r;
    FILE*       pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
      return r;
    }
    std::array<char, 4096> buf{};
    std::size_t            n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
      r.out.append(buf.data(), n);
    }
    int status = ::pclose(pipe);
    r.code     = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err      = slurp(err_file);
    return r;
  }

  fs::path write_scratch(std::string const& name, std::string const& text) {
    auto p = scratch() / name;
    std::ofstream(p) << text;
    return p;
  }

}  // namespace

TEST(CliParse, EchoesCanonicalForm) {
  auto r = run("parse '" + data("f1_rotated.pres") + "'");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "< x, y, a | x^-1*y*x*y*x^-1*y^-1, x^-1*a*x*a^-1*x^-1*y*a*y^-1 >\n"
            "meridian meridian_B: x\n"
            "meridian meridian_G: a\n");
  // The echo parses back to itself.
  auto again = run("parse '" + write_scratch("echo.pres", r.out).string() + "'");
  EXPECT_EQ(again.out, r.out);
}

TEST(CliParse, UndeclaredGenerator) {
  auto r = run("parse '" + data("undeclared.pres") + "'");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("UnknownGenerator"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(CliParse, EmptyFile) {
  auto r = run("parse '" + write_scratch("empty.pres", "").string() + "'");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("SyntaxError"), std::string::npos) << r.err;
}

TEST(CliParse, MissingFileAndBadUsage) {
  EXPECT_EQ(run("parse '" + data("no_such_file.pres") + "'").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("count '" + data("f1.pres") + "'").code, 2);  // --group is required
  EXPECT_EQ(run("--help").code, 0);
}

TEST(CliAlex, Examples) {
  auto f1 = run("alex '" + data("f1.pres") + "'");
  EXPECT_EQ(f1.code, 0) << f1.err;
  EXPECT_EQ(f1.out, "1 - t + t^2\n");
  EXPECT_EQ(run("alex '" + data("unknot.pres") + "'").out, "1\n");
  EXPECT_EQ(run("alex '" + data("trefoil.pres") + "'").out, "1 - t + t^2\n");
  EXPECT_EQ(run("alex '" + data("figure_eight.pres") + "'").out, "1 - 3*t + t^2\n");
}

TEST(CliAlex, FamilyFormulaThroughFiles) {
  for (int m = 1; m <= 5; ++m) {
    auto file = scratch() / ("f" + std::to_string(m) + ".pres");
    ASSERT_EQ(run("family --m " + std::to_string(m) + " --out '" + file.string() + "'").code, 0);
    auto r = run("alex '" + file.string() + "'");
    ASSERT_EQ(r.code, 0) << r.err;
    foxhom::LaurentPoly want;
    for (int k = 0; k <= 2 * m; ++k) {
      want.add_term(k % 2 == 0 ? 1 : -1, k);
    }
    EXPECT_EQ(r.out, foxhom::to_string(want) + "\n");
    auto p = foxhom::parse_laurent(r.out.substr(0, r.out.size() - 1));
    EXPECT_EQ(foxhom::breadth(p), 2 * m);
  }
}

TEST(CliAlex, MatrixAsJsonArray) {
  auto r = run("alex --matrix '" + data("f1.pres") + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  auto nl = r.out.find('\n');
  EXPECT_EQ(r.out.substr(0, nl), "1 - t + t^2");
  auto m = json::parse(r.out.substr(nl + 1));
  EXPECT_EQ(m, json::parse(R"([["-1 + t - t^2","1 - t + t^2","0"],)"
                           R"(["-2*t^-1 + 1","t^-1 - 1","t^-1"]])"));

  auto j = run("--json alex --matrix '" + data("f1.pres") + "'");
  ASSERT_EQ(j.code, 0);
  auto report = json::parse(j.out);
  EXPECT_EQ(report["command"], "alex");
  EXPECT_EQ(report["results"]["alexander_polynomial"], "1 - t + t^2");
  EXPECT_EQ(report["results"]["breadth"], 2);
  EXPECT_EQ(report["results"]["matrix"], m);
}

TEST(CliAlex, InputErrors) {
  auto torsion = write_scratch("z2.pres", "< x | x^2 >\n");
  auto r       = run("alex '" + torsion.string() + "'");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("NotInfiniteCyclicH1"), std::string::npos);
  EXPECT_EQ(run("alex '" + write_scratch("f2.pres", "< x, y | >\n").string() + "'").code, 2);
}

TEST(CliCount, ReferenceCounts) {
  auto f1 = data("f1.pres");
  EXPECT_EQ(run("count '" + f1 + "' --group A5 --pin 'x=(1,5,4,3,2)'").out, "6\n");
  EXPECT_EQ(run("count '" + f1 + "' --group A5 --pin 'a=(1,5,4,3,2)'").out, "1\n");
  EXPECT_EQ(run("count '" + f1 + "' --group A5 --marker 'meridian_B=(1,5,4,3,2)'").out, "6\n");
  EXPECT_EQ(run("count '" + f1 + "' --group A5 --marker 'meridian_G=(1,5,4,3,2)' --mode naive")
                .out,
            "1\n");
  EXPECT_EQ(run("count '" + data("unknot.pres") + "' --group A5 --pin 'x=()'").out, "1\n");
  EXPECT_EQ(run("count '" + write_scratch("z2c.pres", "< x | x^2 >").string() + "' --group S3")
                .out,
            "4\n");
}

TEST(CliCount, ListPrintsAssignments) {
  auto r = run("count '" + data("f1.pres") + "' --group A5 --pin 'x=(1,5,4,3,2)' --list");
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string        line;
  std::getline(in, line);
  EXPECT_EQ(line, "6");
  int n = 0;
  bool saw_explicit = false;
  while (std::getline(in, line)) {
    ++n;
    EXPECT_EQ(line.rfind("x=(1,5,4,3,2) y=", 0), 0U) << line;
    saw_explicit = saw_explicit || line == "x=(1,5,4,3,2) y=(1,2,4,5,3) a=(2,4,5)";
  }
  EXPECT_EQ(n, 6);
  EXPECT_TRUE(saw_explicit);
}

TEST(CliCount, JsonStableAcrossJobs) {
  auto const args = "--json count '" + data("f1.pres") + "' --group A5 --list --jobs ";
  auto       one  = run(args + "1");
  ASSERT_EQ(one.code, 0) << one.err;
  for (int jobs : {2, 4}) {
    auto many = run(args + std::to_string(jobs));
    EXPECT_EQ(many.out, one.out);
  }
  EXPECT_EQ(run(args + "1").out, one.out);
  auto report = json::parse(one.out);
  EXPECT_EQ(report["results"]["count"], report["results"]["assignments"].size());
  EXPECT_TRUE(report["stats"].contains("nodes"));
  EXPECT_TRUE(report["stats"].contains("relator_checks"));
  EXPECT_NE(one.err.find("wall time"), std::string::npos);
  // Keys are emitted in sorted order.
  std::vector<std::string> keys;
  for (auto const& [k, v] : report.items()) {
    keys.push_back(k);
  }
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
}

TEST(CliCount, InputAndBudgetErrors) {
  auto f1 = data("f1.pres");
  auto unknown = run("count '" + f1 + "' --group A5 --pin 'z=()'");
  EXPECT_EQ(unknown.code, 2);
  EXPECT_NE(unknown.err.find("UnknownGenerator"), std::string::npos);
  EXPECT_EQ(run("count '" + f1 + "' --group A5 --pin 'x=(1,2)'").code, 2);  // odd
  EXPECT_EQ(run("count '" + f1 + "' --group A5 --pin 'x=(1,2'").code, 2);
  EXPECT_EQ(run("count '" + f1 + "' --group A5 --pin x").code, 2);
  EXPECT_EQ(run("count '" + f1 + "' --group Q8").code, 2);
  EXPECT_EQ(run("count '" + f1 + "' --group A5 --marker 'nope=()'").code, 2);
  EXPECT_EQ(run("count '" + f1 + "' --group A5 --mode sideways").code, 2);
  EXPECT_EQ(run("count '" + f1 + "' --group A5 --jobs 0").code, 2);
  EXPECT_EQ(run("count '" + f1 + "' --group S10").code, 3);
  EXPECT_EQ(run("count '" + f1 + "' --group A5 --mode naive --budget 1000").code, 3);
  auto budget = run("count '" + f1 + "' --group A5 --budget 2000");
  EXPECT_EQ(budget.code, 3);
  EXPECT_NE(budget.err.find("BudgetExceeded"), std::string::npos);
}

TEST(CliFamily, WritesParseableFile) {
  auto out = scratch() / "family1.pres";
  auto r   = run("family --m 1 --out '" + out.string() + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  auto written = foxhom::parse_presentation(slurp(out));
  auto rotated = foxhom::parse_presentation(slurp(data("f1_rotated.pres")));
  EXPECT_EQ(written.generators(), rotated.generators());
  EXPECT_TRUE(foxhom::cyclically_equivalent(written.relators()[0], rotated.relators()[0]));
  EXPECT_EQ(written.relators()[1], rotated.relators()[1]);
  EXPECT_EQ(written.markers(), rotated.markers());
  EXPECT_EQ(written, foxhom::family_Fm(1));
}

TEST(CliFamily, InvalidParameter) {
  auto r = run("family --m 0");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("InvalidParameter"), std::string::npos);
}

TEST(CliFamily, LargeMIsLinearInSyllables) {
  auto r = run("--json family --m 61");
  ASSERT_EQ(r.code, 0);
  auto report = json::parse(r.out);
  EXPECT_EQ(report["results"]["relator_syllables"][0], 4 * 61 + 2);
  EXPECT_EQ(report["results"]["relator_syllables"][1], 8);
  auto p = foxhom::parse_presentation(report["results"]["presentation"].get<std::string>());
  EXPECT_EQ(p, foxhom::family_Fm(61));
  auto text = run("family --m 61").out;
  EXPECT_EQ(text, report["results"]["presentation"].get<std::string>());
}

TEST(CliVerify, DefaultRunPasses) {
  auto r = run("verify-paper");
  EXPECT_EQ(r.code, 0) << r.out;
  for (auto id : {"alexander_formula", "alexander_matrix", "meridian_counts", "oracle_parity",
                  "explicit_homomorphism", "periodicity", "distinct_breadths", "properties"}) {
    EXPECT_NE(r.out.find(std::string("PASS ") + id), std::string::npos) << id;
  }
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(CliVerify, JsonReportStableAcrossJobs) {
  auto a = run("--json verify-paper --jobs 1");
  auto b = run("--json verify-paper --jobs 4");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto report = json::parse(a.out);
  EXPECT_EQ(report["results"]["all_passed"], true);
  EXPECT_EQ(report["results"]["checks"].size(), 8U);
  EXPECT_EQ(report["inputs"]["expectations_version"], "1");
}

TEST(CliVerify, CorruptedOverrideFailsNamedCheck) {
  auto r = run("verify-paper --override '" + data("corrupted_f1.pres") + "'");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL alexander_formula"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("FAIL alexander_matrix"), std::string::npos) << r.out;
  // Checks that never look at F_1 still pass.
  EXPECT_NE(r.out.find("PASS oracle_parity"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("FAIL distinct_breadths"), std::string::npos) << r.out;

  auto ok = run("verify-paper --override '" + data("f1.pres") + "'");
  EXPECT_EQ(ok.code, 0) << ok.out;
}
