#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "commands.hpp"
#include "json.hpp"
#include "examples.hpp"
#include "support.hpp"

using namespace csg;
using namespace csg::test;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFiles {
 public:
  TempFiles() {
    dir_ = std::filesystem::temp_directory_path() /
           ("csg_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  ~TempFiles() { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  std::filesystem::path dir_;
};

json points(const PointSet& s) {
  json j = json::array();
  for (const auto& p : s) j.push_back(p.coords());
  return j;
}

json points(const std::vector<Point>& v) { return points(PointSet(v.begin(), v.end())); }

json invariants_json(TempFiles& tmp, const json& doc) {
  const auto path = tmp.write("doc.json", doc.dump());
  const auto r = run_cli({"invariants", "--input", path, "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  return json::parse(r.out);
}

json construct_json(const std::vector<std::string>& args) {
  std::vector<std::string> full{"construct"};
  full.insert(full.end(), args.begin(), args.end());
  full.push_back("--format");
  full.push_back("json");
  const auto r = run_cli(full);
  EXPECT_EQ(r.code, 0) << r.err;
  return json::parse(r.out);
}

}  // namespace

TEST(CliInvariants, ConeInN3) {
  TempFiles tmp;
  const auto rep = invariants_json(tmp, json{{"generators", points(cone3d_generators())}});
  const json four = points(PointSet{Point{2, 2, 1}, Point{2, 3, 2}, Point{4, 1, 2}, Point{8, 4, 7}});
  EXPECT_EQ(rep.at("gaps"), points(cone3d_gaps()));
  EXPECT_EQ(rep.at("pf"), four);
  EXPECT_EQ(rep.at("sg"), four);
  EXPECT_EQ(rep.at("max_gaps_cone"), four);
  EXPECT_EQ(rep.at("fa"), json::array({json::array({8, 4, 7})}));
  EXPECT_EQ(rep.at("type"), 4);
}

TEST(CliInvariants, NumericalAgainstSieve) {
  TempFiles tmp;
  const std::vector<Coord> gens{12, 15, 20, 23};
  Sieve sv(gens, 200);
  const auto rep = invariants_json(tmp, json{{"numerical", gens}});
  EXPECT_EQ(rep.at("type"), sv.pf(gens).size());
  EXPECT_EQ(rep.at("numerical").at("pf"), sv.pf(gens));
  EXPECT_EQ(rep.at("numerical").at("reduced_type"), sv.window(12));
  EXPECT_EQ(rep.at("numerical").at("frobenius"), sv.frobenius());
  EXPECT_EQ(rep.at("type"), 5);
  EXPECT_EQ(rep.at("numerical").at("reduced_type"), 2);
}

TEST(CliInvariants, NonCModelReportsApery) {
  TempFiles tmp;
  const auto rep = invariants_json(tmp, json{{"generators", points(apery_small_generators())}});
  EXPECT_FALSE(rep.at("c_semigroup").get<bool>());
  EXPECT_EQ(rep.at("apery_wrt_E").size(), 8u);
  EXPECT_FALSE(rep.contains("pf"));
}

TEST(CliInvariants, ValidationErrorsExitTwo) {
  TempFiles tmp;
  const std::vector<std::pair<std::string, std::string>> bad{
      {"{\"generators\": [[1,0],[0,1,2]]}", "DimensionMismatch"},
      {"{\"generators\": [[1.5,0],[0,1]]}", "InvalidInput"},
      {"{\"generators\": [[1,0]], \"numerical\": [3,5]}", "InvalidInput"},
      {"{\"numerical\": [3,5], \"extra\": 1}", "InvalidInput"},
      {"{\"generators\": [[1,0],[0,1]]", "InvalidInput"},
      {"{\"cone_rays\": [[1,0],[0,1]], \"gaps\": [[0,0]]}", "InvalidInput"},
  };
  for (const auto& [text, name] : bad) {
    const auto path = tmp.write("bad.json", text);
    const auto r = run_cli({"invariants", "--input", path});
    EXPECT_EQ(r.code, cli::kInputError) << text;
    EXPECT_NE(r.err.find(name), std::string::npos) << r.err;
    EXPECT_TRUE(r.out.empty());
  }
  const auto path = tmp.write("dim.json", "{\"generators\": [[1,0],[0,1,2]]}");
  const auto r = run_cli({"invariants", "--input", path});
  EXPECT_NE(r.err.find("witness: (0,1,2)"), std::string::npos) << r.err;
  EXPECT_EQ(run_cli({"invariants", "--input", "/nonexistent/x.json"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"invariants"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"nonsense"}).code, cli::kInputError);
}

TEST(CliInvariants, JsonIsByteStable) {
  TempFiles tmp;
  auto gens = cone3d_generators();
  const auto a = tmp.write("a.json", json{{"generators", points(gens)}}.dump());
  std::reverse(gens.begin(), gens.end());
  json shuffled = json::array();
  for (const auto& g : gens) shuffled.push_back(g.coords());
  const auto b = tmp.write("b.json", json{{"generators", shuffled}}.dump());
  const auto r1 = run_cli({"invariants", "--input", a, "--format", "json"});
  const auto r2 = run_cli({"invariants", "--input", a, "--format", "json"});
  const auto r3 = run_cli({"invariants", "--input", b, "--format", "json"});
  EXPECT_EQ(r1.out, r2.out);
  EXPECT_EQ(r1.out, r3.out);
}

TEST(CliConstruct, Bresinsky) {
  const auto j = construct_json({"bresinsky", "--h", "3"});
  EXPECT_EQ(j.at("document").at("numerical").size(), 4u);
  EXPECT_EQ(j.at("report").at("pf").size(), 9u);
  EXPECT_EQ(j.at("details").at("reduced_type"), 3);
  EXPECT_EQ(run_cli({"construct", "bresinsky", "--h", "1"}).code, cli::kInputError);
}

TEST(CliConstruct, SFamilyReportsBound) {
  const auto j = construct_json({"sfamily", "--a", "8", "--r", "1", "--d", "2"});
  EXPECT_EQ(j.at("details").at("type_lower_bound"), 6);
  EXPECT_GE(j.at("report").at("type").get<int>(), 6);
  EXPECT_EQ(j.at("details").at("embedding_dimension"), 4);
}

TEST(CliConstruct, ThickenMatchesShiftedPF) {
  const auto j = construct_json({"thicken", "--s", "5,7,8", "--k", "4", "--axis", "2"});
  Sieve sv({5, 7, 8}, 100);
  json expected = json::array();
  for (Coord f : sv.pf({5, 7, 8})) expected.push_back(json::array({f, 4}));
  EXPECT_EQ(j.at("report").at("pf"), expected);
}

TEST(CliConstruct, OutputRoundTrips) {
  TempFiles tmp;
  const std::vector<std::vector<std::string>> cases{
      {"glue", "--s1", "3,5", "--s2", "2,7", "--lambda", "9", "--mu", "8"},
      {"nice-extension", "--s", "3,5", "--a", "2,1", "--p", "3"},
      {"bresinsky", "--h", "2"},
      {"tgraded", "--t", "5,6,7", "--d", "2"},
      {"thicken", "--s", "5,7,8", "--k", "2", "--axis", "1"},
      {"sfamily", "--a", "6", "--r", "1", "--d", "3"},
      {"antichain", "--rays", "1,0;0,1", "--points", "1,3;3,1;2,2"},
  };
  for (const auto& args : cases) {
    const auto j = construct_json(args);
    EXPECT_EQ(invariants_json(tmp, j.at("document")), j.at("report")) << args.front();
  }
}

TEST(CliConstruct, InvalidFamilyParameters) {
  EXPECT_EQ(run_cli({"construct", "glue", "--s1", "3,5", "--s2", "2,7", "--lambda", "9", "--mu", "7"}).code,
            cli::kInputError);
  EXPECT_EQ(run_cli({"construct", "nice-extension", "--s", "3,5", "--a", "1,1", "--p", "3"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"construct", "antichain", "--rays", "1,0;0,1", "--points", "1,1;2,2"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"construct", "tgraded", "--t", "5,6,7", "--d", "1"}).code, cli::kInputError);
}

TEST(CliDecompose, TwoSpecialGaps) {
  TempFiles tmp;
  const auto path =
      tmp.write("s.json", json{{"cone_rays", {{1, 0}, {0, 1}}}, {"gaps", points(two_special_gaps())}}.dump());
  const auto r = run_cli({"decompose", "--input", path, "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j.at("components").size(), 2u);
  EXPECT_TRUE(j.at("verified").get<bool>());
  std::set<json> comps;
  for (const auto& c : j.at("components")) comps.insert(c.at("gaps"));
  EXPECT_EQ(comps, (std::set<json>{points(PointSet{Point{0, 1}, Point{1, 0}, Point{1, 2}}),
                                   points(PointSet{Point{0, 1}, Point{1, 0}, Point{2, 1}})}));
}

TEST(CliDecompose, IrreducibleAntichainAndNoGaps) {
  TempFiles tmp;
  const auto irr = tmp.write("i.json", json{{"numerical", {3, 5}}}.dump());
  auto r = run_cli({"decompose", "--input", irr, "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out).at("components").size(), 1u);

  const auto anti = construct_json({"antichain", "--rays", "1,0;0,1", "--points", "1,5;2,4;3,3;4,2;5,1"});
  const auto a = tmp.write("a.json", anti.at("document").dump());
  r = run_cli({"decompose", "--input", a, "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_GE(json::parse(r.out).at("components").size(), 5u);

  const auto full = tmp.write("f.json", json{{"cone_rays", {{1, 0}, {0, 1}}}, {"gaps", json::array()}}.dump());
  r = run_cli({"decompose", "--input", full});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_NE(r.err.find("NoGaps"), std::string::npos) << r.err;
}

TEST(CliVerifyPaper, OnlyFilter) {
  auto r = run_cli({"verify-paper", "--only", "cone3d-pf", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.out;
  const auto j = json::parse(r.out);
  ASSERT_EQ(j.at("rows").size(), 1u);
  EXPECT_EQ(j.at("rows")[0].at("status"), "pass");
  EXPECT_EQ(run_cli({"verify-paper", "--only", "no-such-row"}).code, cli::kInputError);
}

TEST(CliVerifyPaper, CorruptedGoldenFails) {
  TempFiles tmp;
  std::ifstream in(CSG_GOLDEN_FILE);
  json golden = json::parse(in);
  for (auto& row : golden.at("rows"))
    if (row.at("id") == "bresinsky-h2-frobenius") row["expected"] = 48;
  const auto path = tmp.write("golden.json", golden.dump());
  auto r = run_cli({"verify-paper", "--golden", path, "--only", "bresinsky-h2-frobenius"});
  EXPECT_EQ(r.code, cli::kVerificationFailed);
  EXPECT_NE(r.out.find("FAIL  bresinsky-h2-frobenius"), std::string::npos) << r.out;
  r = run_cli({"verify-paper", "--golden", tmp.write("broken.json", "{\"rows\": [")});
  EXPECT_EQ(r.code, cli::kInputError);
}

// The stated values for the 13-generator Apery set and the <5,7,8>
// thickenings are wrong; those rows, and only those, fail.
TEST(CliVerifyPaper, FullRunFailsExactlyOnPublishedErrata) {
  const auto r = run_cli({"verify-paper", "--format", "json"});
  EXPECT_EQ(r.code, cli::kVerificationFailed);
  const auto j = json::parse(r.out);
  std::set<std::string> failing;
  for (const auto& row : j.at("rows"))
    if (row.at("status") == "fail") failing.insert(row.at("id").get<std::string>());
  EXPECT_EQ(failing, (std::set<std::string>{"apery-empty-set", "thicken-578-pf", "thicken-578-5-pf"}));
  EXPECT_GE(j.at("rows").size(), 40u);
}

// Gap sets of GNS in N^2 with 1..3 gaps, by brute force over subsets of the
// triangle x + y <= 5 (every gap has norm at most 2g - 1).
std::size_t count_gns_2d(std::size_t max_gaps) {
  std::vector<Point> cand;
  for (Coord x = 0; x <= 5; ++x)
    for (Coord y = 0; x + y <= 5; ++y)
      if (x + y > 0) cand.push_back(Point{x, y});
  std::size_t count = 0;
  std::function<void(std::size_t, PointSet&)> rec = [&](std::size_t from, PointSet& h) {
    if (!h.empty()) {
      bool closed = true;
      for (const auto& g : h)
        for (Coord a = 0; a <= g[0] && closed; ++a)
          for (Coord b = 0; b <= g[1] && closed; ++b) {
            const Point x{a, b}, y{g[0] - a, g[1] - b};
            if (x == Point{0, 0} || y == Point{0, 0}) continue;
            closed = h.count(x) || h.count(y);
          }
      count += closed ? 1 : 0;
    }
    if (h.size() == max_gaps) return;
    for (std::size_t i = from; i < cand.size(); ++i) {
      h.insert(cand[i]);
      rec(i + 1, h);
      h.erase(cand[i]);
    }
  };
  PointSet h;
  rec(0, h);
  return count;
}

TEST(CliSweep, CountsMatchBruteForce) {
  const auto r = run_cli({"sweep", "--dim", "2", "--max-gaps", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  std::size_t total = 0;
  for (const auto& row : j.at("rows")) total += row.at("count").get<std::size_t>();
  EXPECT_EQ(total, count_gns_2d(3));
}
