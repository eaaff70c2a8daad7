#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "large_atlas/sweep.hpp"

using namespace large_atlas;
namespace fs = std::filesystem;

namespace {

const std::string kGoldens = LARGE_ATLAS_TEST_GOLDEN_DIR;

fs::path copy_goldens(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("large_atlas_goldens_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (const auto& e : fs::directory_iterator(kGoldens)) fs::copy_file(e.path(), dir / e.path().filename());
  return dir;
}

}  // namespace

TEST_CASE("registry") {
  const auto& cs = sweep_cases();
  CHECK(cs.size() >= 25);
  std::set<std::string> ids;
  for (const auto& c : cs) {
    CHECK(ids.insert(c.id).second);
    CHECK(fs::exists(fs::path(kGoldens) / (c.id + ".txt")));
    CHECK_FALSE(c.fields.empty());
  }
  CHECK_THROWS_AS(sweep_case("no-such-case"), UnknownSweepCase);
  CHECK_THROWS_AS(compute_case("no-such-case"), UnknownSweepCase);
}

TEST_CASE("psl-c2-t3 members") {
  const auto r = compute_case("psl-c2-t3");
  CHECK(r.members == std::vector<std::string>{"3", "4", "5", "7", "8", "9", "11", "13", "16", "17", "19", "23", "25",
                                              "27", "32", "49", "64", "81", "128"});
}

TEST_CASE("other case members") {
  CHECK(compute_case("psl-c3-r5").members == std::vector<std::string>{"2,5"});
  CHECK(compute_case("psp-c2-t5").members == std::vector<std::string>{"3,2,5", "4,2,5"});
  CHECK(compute_case("pso-c6").members == std::vector<std::string>{"3,8"});
  CHECK(compute_case("psp-c7").members.empty());
  CHECK(compute_case("pso-c4-large-n").members.empty());
  CHECK(compute_case("psu-c2-t4plus").members.size() == 17);
  CHECK(compute_case("tableA-cutoff").members == std::vector<std::string>{"2,24", "odd,12"});
}

TEST_CASE("determinism") {
  for (const char* id : {"psl-c3-r3", "psu-c6", "o8-triality"}) {
    const auto a = compute_case(id), b = compute_case(id);
    CHECK(a.members == b.members);
    CHECK(a.alarms == b.alarms);
  }
}

TEST_CASE("grid widening keeps member lists") {
  const SweepOptions narrow{1, 0}, wide{3, 6};
  for (const char* id : {"psl-c2-t3", "psl-c3-r3", "psp-c6", "pso-c2-o1p", "psl-c6", "psu-c2-t4plus"}) {
    CAPTURE(id);
    CHECK(compute_case(id, narrow).members == compute_case(id, wide).members);
  }
}

TEST_CASE("members are canonically sorted") {
  for (const auto& c : sweep_cases()) {
    if (c.family == "psu" || c.family == "pso") continue;  // the large grids are covered by the acceptance run
    const auto r = compute_case(c.id, SweepOptions{1, 0});
    std::set<std::string> uniq(r.members.begin(), r.members.end());
    CHECK(uniq.size() == r.members.size());
  }
}

TEST_CASE("golden parsing and diff") {
  const auto g = parse_golden("# header\n# more\n2,5\n\n3,7\n");
  CHECK(g == std::vector<std::string>{"2,5", "3,7"});
  SweepReport r;
  r.members = {"2,5", "4,9"};
  diff_against(r, g);
  CHECK(r.missing == std::vector<std::string>{"3,7"});
  CHECK(r.extra == std::vector<std::string>{"4,9"});
  CHECK_FALSE(r.ok());
}

TEST_CASE("run_case against pristine goldens") {
  for (const char* id : {"psl-c2-t3", "psl-c3-r3", "psp-c6", "s-liebeck-n-bound", "psl-c4"}) {
    const auto r = run_case(id, kGoldens);
    CAPTURE(id);
    CHECK(r.ok());
  }
}

TEST_CASE("filter selects one family") {
  const auto dir = copy_goldens("filter");
  const auto reps = run_all(dir.string(), "psl", SweepOptions{1, 0}, 2);
  REQUIRE_FALSE(reps.empty());
  std::size_t n = 0;
  for (const auto& c : sweep_cases()) n += c.family == "psl";
  CHECK(reps.size() == n);
  for (const auto& r : reps) CHECK(sweep_case(r.case_id).family == "psl");
}

TEST_CASE("a perturbed golden gives exactly one diff") {
  const auto dir = copy_goldens("perturb");
  {
    std::ofstream f(dir / "psl-c3-r3.txt", std::ios::app);
    f << "1024\n";
  }
  const auto reps = run_all(dir.string(), "psl", SweepOptions{1, 0}, 1);
  int bad = 0;
  for (const auto& r : reps)
    if (!r.missing.empty() || !r.extra.empty()) {
      ++bad;
      CHECK(r.case_id == "psl-c3-r3");
      CHECK(r.missing == std::vector<std::string>{"1024"});
      CHECK(r.extra.empty());
    }
  CHECK(bad == 1);
  fs::remove_all(dir);
}

TEST_CASE("missing golden") {
  const auto dir = copy_goldens("missing");
  fs::remove(dir / "psl-c6.txt");
  CHECK_THROWS_AS(load_golden(dir.string(), "psl-c6"), GoldenMissing);
  CHECK_THROWS_AS(run_case("psl-c6", dir.string()), GoldenMissing);
  CHECK_THROWS_AS(run_all(dir.string(), "psl"), GoldenMissing);
  fs::remove_all(dir);
}
