#pragma once

#include <string>
#include <vector>

#include "large_atlas/arith.hpp"
#include "large_atlas/orders.hpp"

namespace large_atlas {

struct TableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Host map for the fully deleted permutation module, one line per rule.
struct TableA0Rule {
  std::string d_condition;
  std::string p_condition;
  std::string host;
};
const std::vector<TableA0Rule>& table_a0();

enum class Remark { none, h0_not_large };

// One instantiated table row with its verdict recomputed.
struct TableRow {
  std::string table;  // "A" or "B"
  GroupId g0;         // canonical host
  std::string g0_printed;
  std::string h0_name;
  Int h0_order;
  Int g0_order;
  Int out;
  std::string condition;
  Remark remark = Remark::none;
  bool h0_large = false;  // |G0| <= |H0|^3
  bool h1_large = false;  // |G0| <= |H0|^3 |Out|^2
  bool flagged = false;   // recomputation contradicts the table
  std::string flag_reason;
};

// Rows are parsed and cross-checked against the orders module on first use; TableError on failure.
const std::vector<TableRow>& table_a();
const std::vector<TableRow>& table_b();

std::vector<TableRow> load_table_a(std::string_view text);
std::vector<TableRow> load_table_b(std::string_view text);

}  // namespace large_atlas
