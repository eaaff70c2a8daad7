#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace large_atlas {

struct UnknownSweepCase : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct GoldenMissing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Grid widening: q bounds are multiplied by q_factor, small integer bounds (m, t, r, d) grow by extra.
struct SweepOptions {
  int q_factor = 2;
  int extra = 4;
};

struct SweepCaseInfo {
  std::string id;
  std::string family;  // filter tag: psl, psu, psp, pso, s, exceptional
  std::string fields;  // column names of a member tuple
  std::string description;
  std::string anchor;
};

const std::vector<SweepCaseInfo>& sweep_cases();
const SweepCaseInfo& sweep_case(std::string_view id);

struct SweepReport {
  std::string case_id;
  std::string fields;
  std::vector<std::string> members;  // canonical order, comma separated fields
  std::vector<std::string> missing;  // in the golden list, not computed
  std::vector<std::string> extra;    // computed, not in the golden list
  std::vector<std::string> alarms;   // decisive sandwich verdicts contradicting the exact check
  long long elapsed_ms = 0;

  bool ok() const { return missing.empty() && extra.empty() && alarms.empty(); }
};

// Members only, no golden comparison.
SweepReport compute_case(std::string_view id, const SweepOptions& opt = {});

// Golden lists: <dir>/<case_id>.txt, one tuple per line, '#' starts a header line.
std::vector<std::string> load_golden(const std::string& dir, std::string_view id);
std::vector<std::string> parse_golden(std::string_view text);
void diff_against(SweepReport& r, const std::vector<std::string>& golden);

// compute_case + diff against the golden list; GoldenMissing if the file is absent.
SweepReport run_case(std::string_view id, const std::string& golden_dir, const SweepOptions& opt = {});

// All cases whose family tag matches filter (empty = all), in registry order.
std::vector<SweepReport> run_all(const std::string& golden_dir, const std::string& filter = "",
                                 const SweepOptions& opt = {}, int jobs = 1);

}  // namespace large_atlas
