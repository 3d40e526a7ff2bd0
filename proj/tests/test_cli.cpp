#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "ptlattice/error.hpp"
#include "ptlattice/lattice.hpp"
#include "ptlattice_cli/commands.hpp"
#include "ptlattice_cli/quiver_file.hpp"
#include "ptlattice_cli/report.hpp"
#include "test_support.hpp"

using namespace ptl;
using namespace ptl::cli;
using ptl::testing::fixture_path;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ptlattice");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  args.push_back("-");
  const CliRun r = run_cli(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return Json::parse(r.out);
}

Errc parse_error(std::string_view text) {
  try {
    parse_quiver_file(text, "t.toml");
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvariantBreach;
}

std::string parse_message(std::string_view text) {
  try {
    parse_quiver_file(text, "t.toml");
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

Json read_json(const std::string& path) {
  std::ifstream f(path);
  return Json::parse(f);
}

// Hasse diagram of a lattice report as labelled cover pairs.
std::set<std::pair<std::string, std::string>> labelled_edges(const Json& j) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& e : j["edges"]) {
    out.emplace(j["elements"][e[0].get<std::size_t>()]["label"].get<std::string>(),
                j["elements"][e[1].get<std::size_t>()]["label"].get<std::string>());
  }
  return out;
}

std::set<std::string> labels_where(const Json& j, const char* flag) {
  std::set<std::string> out;
  for (const auto& e : j["elements"])
    if (e[flag].get<bool>()) out.insert(e["label"].get<std::string>());
  return out;
}

// Lattice of principal down-sets of a poset given by its cover pairs.
FiniteLattice lattice_from_covers(const std::vector<std::string>& elements,
                                  const std::vector<std::pair<std::string, std::string>>& covers) {
  const std::size_t n = elements.size();
  auto idx = [&](const std::string& s) {
    return static_cast<std::size_t>(std::find(elements.begin(), elements.end(), s) - elements.begin());
  };
  std::vector<IndexSet> down(n, IndexSet(n));
  for (std::size_t i = 0; i < n; ++i) down[i].set(i);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [lo, hi] : covers) {
      const IndexSet merged = down[idx(hi)] | down[idx(lo)];
      if (merged != down[idx(hi)]) {
        down[idx(hi)] = merged;
        changed = true;
      }
    }
  }
  return FiniteLattice::from_family(n, down);
}

}  // namespace

TEST(QuiverFile, ParsesFixtures) {
  const QuiverFile f = load_quiver_file(fixture_path("loop-plus-arrow"));
  EXPECT_EQ(f.name, "loop-plus-arrow");
  EXPECT_EQ(f.vertices, (std::vector<std::string>{"1", "2"}));
  ASSERT_EQ(f.arrows.size(), 2u);
  EXPECT_EQ(f.arrows[1].name, "e");
  EXPECT_EQ(f.relations, (std::vector<std::vector<std::string>>{{"e", "e"}}));
  EXPECT_EQ(f.algebra()->dimension(), 5u);
}

TEST(QuiverFile, EveryFixtureDocumentsTheConvention) {
  for (const auto& entry : std::filesystem::directory_iterator(PTLATTICE_FIXTURE_DIR)) {
    std::ifstream in(entry.path());
    std::string first;
    std::getline(in, first);
    std::string second;
    std::getline(in, second);
    EXPECT_NE((first + second).find("left to right"), std::string::npos) << entry.path();
    EXPECT_NO_THROW(load_quiver_file(entry.path().string()).algebra()) << entry.path();
  }
}

TEST(QuiverFile, OptionsTable) {
  const QuiverFile f = parse_quiver_file(R"(
vertices = ["x"]
arrows = []
[options]
field = "gf"
prime = 3
dim_bound = 4
)");
  EXPECT_EQ(f.options.field, "gf");
  EXPECT_EQ(f.options.prime, 3);
  EXPECT_EQ(f.options.dim_bound, 4u);
}

TEST(QuiverFile, ErrorsCarryPosition) {
  EXPECT_EQ(parse_error("vertices = [\"1\"\n"), Errc::ParseError);
  EXPECT_EQ(parse_error("vertices = [\"1\"]\nbogus = 1\n"), Errc::ParseError);
  EXPECT_EQ(parse_error("vertices = [\"1\"]\nvertices = [\"2\"]\n"), Errc::ParseError);
  EXPECT_EQ(parse_error("arrows = []\n"), Errc::ParseError);
  EXPECT_EQ(parse_error("vertices = [\"1\"]\n[options]\nfield = \"r\"\n"), Errc::ParseError);
  const std::string msg = parse_message("vertices = [\"1\"]\nbogus = 1\n");
  EXPECT_NE(msg.find("t.toml:2:"), std::string::npos) << msg;
}

TEST(QuiverFile, StructuralErrors) {
  const auto dup = parse_quiver_file("vertices = [\"1\", \"1\"]\narrows = []\n");
  EXPECT_THROW((void)dup.algebra(), Error);
  const auto loop = parse_quiver_file("vertices = [\"1\"]\narrows = [{ name = \"e\", source = \"1\", target = \"1\" }]\n");
  try {
    (void)loop.algebra();
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotAdmissible);
  }
}

TEST(Cli, ClassifyExamples) {
  const Json a3 = run_json({"classify", fixture_path("a3-linear")});
  EXPECT_TRUE(a3["distributive"]["holds"].get<bool>());
  EXPECT_TRUE(a3["lrd"]["holds"].get<bool>());
  const Json k = run_json({"classify", fixture_path("kronecker")});
  EXPECT_EQ(k["band"], "a b^-1");
  EXPECT_TRUE(k["lattice_refused"].get<bool>());
  const Json d4 = run_json({"classify", fixture_path("d4-subspace")});
  EXPECT_FALSE(d4["distributive"]["holds"].get<bool>());
  EXPECT_EQ(d4["distributive"]["witness"]["kind"], "ii");
}

TEST(Cli, LatticeExamples) {
  const Json a2 = run_json({"lattice", fixture_path("a2")});
  EXPECT_EQ(a2["size"], 6);
  EXPECT_EQ(a2["join_irreducibles"].size(), 3u);
  const Json src = run_json({"lattice", fixture_path("a3-source")});
  EXPECT_EQ(src["size"], 24);
  EXPECT_TRUE(src["distributive"].get<bool>());
  const Json loop = run_json({"lattice", fixture_path("loop-eps2"), "--kind", "torsion"});
  EXPECT_EQ(loop["size"], 2);
  const Json sink = run_json({"lattice", fixture_path("a3-sink"), "--kind", "birkhoff-of-tors"});
  EXPECT_EQ(sink["size"], 26);
}

TEST(Cli, GoldenA2Diagrams) {
  for (const char* kind : {"pretorsion", "pretorsionfree"}) {
    const Json golden = read_json(ptl::testing::golden_path(std::string("a2-") + kind + ".json"));
    const Json got = run_json({"lattice", fixture_path("a2"), "--kind", kind});
    std::set<std::pair<std::string, std::string>> want_edges;
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& e : golden["covers"]) {
      want_edges.emplace(e[0].get<std::string>(), e[1].get<std::string>());
      covers.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    EXPECT_EQ(labelled_edges(got), want_edges) << kind;
    const auto ji = golden["join_irreducible"].get<std::vector<std::string>>();
    EXPECT_EQ(labels_where(got, "join_irreducible"), std::set<std::string>(ji.begin(), ji.end())) << kind;
    const auto framed = golden["framed"].get<std::vector<std::string>>();
    EXPECT_EQ(labels_where(got, "framed"), std::set<std::string>(framed.begin(), framed.end())) << kind;
    const auto& d = ptl::testing::fixture_data("a2");
    const FiniteLattice& built = std::string(kind) == "pretorsion" ? *d.pretorsion : *d.pretorsionfree;
    EXPECT_TRUE(lattice_isomorphic(built, lattice_from_covers(golden["elements"].get<std::vector<std::string>>(), covers))
                    .has_value());
  }
}

TEST(Cli, TheoriesExamples) {
  const Json a2 = run_json({"theories", fixture_path("a2"), "--audit"});
  EXPECT_EQ(a2["count"], 17);
  EXPECT_EQ(a2["groups"]["full_side"], 11);
  EXPECT_TRUE(a2["audit"].get<bool>());
  const Json one = run_json({"theories", fixture_path("single-vertex-no-loop")});
  EXPECT_EQ(one["count"], 3);
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& t : one["theories"]) pairs.emplace(t["torsion"], t["free"]);
  EXPECT_TRUE(pairs.count({"0", "mod A"}));
  EXPECT_TRUE(pairs.count({"mod A", "0"}));
  EXPECT_EQ(run_json({"theories", fixture_path("a3-sink")})["count"], 163);
}

TEST(Cli, IndecsExamples) {
  const Json a2 = run_json({"indecs", fixture_path("a2")});
  ASSERT_EQ(a2["modules"].size(), 3u);
  for (const auto& m : a2["modules"]) EXPECT_TRUE(m["brick"].get<bool>());
  const Json loop = run_json({"indecs", fixture_path("loop-eps2")});
  ASSERT_EQ(loop["modules"].size(), 2u);
  EXPECT_TRUE(loop["modules"][0]["brick"].get<bool>());
  EXPECT_FALSE(loop["modules"][0]["tau_rigid"].get<bool>());
  EXPECT_FALSE(loop["modules"][1]["brick"].get<bool>());
  EXPECT_TRUE(loop["modules"][1]["tau_rigid"].get<bool>());
  EXPECT_EQ(run_json({"indecs", fixture_path("d4-subspace")})["modules"].size(), 12u);
  const Json gf = run_json({"indecs", fixture_path("a2"), "--field", "gf", "--prime", "3"});
  EXPECT_EQ(gf["field"], "GF(3)");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"lattice", fixture_path("kronecker")}).code, kExitInfinite);
  const CliRun k = run_cli({"lattice", fixture_path("kronecker")});
  EXPECT_NE(k.err.find("hint:"), std::string::npos);
  const CliRun bound = run_cli({"indecs", fixture_path("loop-two-exits")});
  EXPECT_EQ(bound.code, kExitInfinite);
  EXPECT_NE(bound.err.find("DimBoundReached"), std::string::npos);
  EXPECT_NE(bound.err.find("hint:"), std::string::npos);
  EXPECT_EQ(run_cli({"classify", "/nonexistent.toml"}).code, kExitInput);
  EXPECT_EQ(run_cli({"lattice", fixture_path("a2"), "--kind", "nope"}).code, kExitInput);
  EXPECT_EQ(run_cli({}).code, kExitInput);
  EXPECT_EQ(run_cli({"indecs", fixture_path("a2"), "--field", "gf", "--prime", "4"}).code, kExitInput);
  EXPECT_EQ(exit_code_for(Errc::NotAdmissible), kExitInput);
  EXPECT_EQ(exit_code_for(Errc::BandPresent), kExitInfinite);
  EXPECT_EQ(exit_code_for(Errc::InvariantBreach), kExitInternal);
}

TEST(Cli, ExecutableExitCodes) {
  const std::string bin = PTLATTICE_CLI_BINARY;
  const auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  EXPECT_EQ(status("classify " + fixture_path("a2")), 0);
  EXPECT_EQ(status("lattice " + fixture_path("two-loops")), 3);
  EXPECT_EQ(status("classify /nonexistent.toml"), 2);
}

TEST(Cli, DeterministicJson) {
  for (const char* cmd : {"lattice", "theories", "indecs", "classify"}) {
    const CliRun a = run_cli({cmd, fixture_path("a3-sink"), "--json", "-"});
    const CliRun b = run_cli({cmd, fixture_path("a3-sink"), "--json", "-"});
    EXPECT_EQ(a.out, b.out) << cmd;
    // Round trip through the parser is lossless.
    EXPECT_EQ(Json::parse(a.out).dump(2) + "\n", a.out) << cmd;
  }
}

TEST(Cli, JsonAndDotFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "ptlattice_cli_test";
  std::filesystem::create_directories(dir);
  const auto json = (dir / "a3.json").string();
  const auto dot = (dir / "a3.dot").string();
  const CliRun r = run_cli({"lattice", fixture_path("a3-linear"), "--json", json, "--dot", dot});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("24 elements"), std::string::npos);
  const Json j = read_json(json);
  std::ifstream in(dot);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text.rfind("graph ", 0), 0u);
  // Exactly the Hasse edges, one "--" line each.
  const std::regex edge(R"(n(\d+) -- n(\d+);)");
  std::set<std::pair<std::size_t, std::size_t>> dot_edges;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), edge); it != std::sregex_iterator(); ++it) {
    dot_edges.emplace(std::stoul((*it)[1]), std::stoul((*it)[2]));
  }
  std::set<std::pair<std::size_t, std::size_t>> json_edges;
  for (const auto& e : j["edges"]) json_edges.emplace(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  EXPECT_EQ(dot_edges, json_edges);
  const auto& d = ptl::testing::fixture_data("a3-linear");
  EXPECT_EQ(json_edges.size(), hasse_edges(*d.pretorsion).size());
  std::filesystem::remove_all(dir);
}

TEST(Cli, DotOnStdoutReplacesTextReport) {
  const CliRun r = run_cli({"lattice", fixture_path("a2"), "--dot", "-"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("graph ", 0), 0u);
  EXPECT_EQ(r.out.find("elements"), std::string::npos);
  const CliRun both = run_cli({"lattice", fixture_path("a2"), "--dot", "-", "--json", "-"});
  EXPECT_EQ(both.code, kExitInput);
}
