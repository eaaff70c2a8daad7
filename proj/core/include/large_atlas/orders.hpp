#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "large_atlas/arith.hpp"

namespace large_atlas {

enum class Family {
  PSL, PSU, PSp, POmega,
  SL, SU, Sp, GL, GU, SO, GO, Omega, PGL, PGU,
  Alt, Sym, Sz, G2, TriD4, Sporadic
};

enum class Sign { plus, minus, circ, none };

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UnsupportedGroup : std::domain_error {
  using std::domain_error::domain_error;
};
struct UnknownGroup : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct GroupId {
  Family family = Family::PSL;
  int n = 0;
  long q = 0;
  Sign eps = Sign::none;
  std::string name;  // sporadic/constant name
  int copies = 1;    // >1 only for the non-simple PSL(2,q)^2 image of POmega+(4,q)

  static GroupId psl(int n, long q) { return {Family::PSL, n, q, Sign::none, {}, 1}; }
  static GroupId psu(int n, long q) { return {Family::PSU, n, q, Sign::none, {}, 1}; }
  static GroupId psp(int n, long q) { return {Family::PSp, n, q, Sign::none, {}, 1}; }
  static GroupId pomega(int n, long q, Sign eps) { return {Family::POmega, n, q, eps, {}, 1}; }
  static GroupId classical(Family f, int n, long q, Sign eps = Sign::none) { return {f, n, q, eps, {}, 1}; }
  static GroupId alt(int d) { return {Family::Alt, d, 0, Sign::none, {}, 1}; }
  static GroupId sym(int d) { return {Family::Sym, d, 0, Sign::none, {}, 1}; }
  static GroupId sporadic(std::string nm) { return {Family::Sporadic, 0, 0, Sign::none, std::move(nm), 1}; }

  friend bool operator==(const GroupId&, const GroupId&) = default;
};

GroupId parse_group(std::string_view text);
std::string to_string(const GroupId& g);
std::string to_string(Family f);
std::string to_string(Sign s);
int sign_value(Sign s);  // +1, -1, 0

// Throws UnsupportedGroup unless g lies in the simplicity domain used by the classification.
void validate(const GroupId& g);
bool in_simple_domain(const GroupId& g);

Int order(const GroupId& g);
GroupId canonicalize(const GroupId& g);
Int out_order(const GroupId& g);
// d as in the order table: (n,q-1), (n,q+1), (2,q-1), (4,q^m - eps) or (2,q-1) for odd n.
long center_d(const GroupId& g);

Int sporadic_order(std::string_view name);
const std::vector<std::pair<std::string, Int>>& sporadic_table();

// Formula layer.
Int gl_order(int n, long q);
Int sl_order(int n, long q);
Int psl_order(int n, long q);
Int gu_order(int n, long q);
Int su_order(int n, long q);
Int psu_order(int n, long q);
Int sp_order(int n, long q);
Int psp_order(int n, long q);
Int omega_order(int n, long q, Sign eps);
Int so_order(int n, long q, Sign eps);
Int go_order(int n, long q, Sign eps);
Int pomega_order(int n, long q, Sign eps);
Int sz_order(long q);
Int g2_order(long q);
Int trid4_order(long q);

}  // namespace large_atlas
