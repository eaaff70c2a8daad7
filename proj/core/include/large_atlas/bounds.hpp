#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "large_atlas/arith.hpp"
#include "large_atlas/orders.hpp"

namespace large_atlas {

struct OutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};
struct UnknownCase : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class BoundFamily { GL, GU, Sp, SOcirc, SOplus, SOminus };

BoundFamily parse_bound_family(std::string_view s);
std::string to_string(BoundFamily f);
const std::vector<BoundFamily>& all_bound_families();

// lower (<|<=) actual (<|<=) upper, all absolute values (not coefficients).
struct OrderBounds {
  ExactRatio lower;
  ExactRatio upper;
  bool lower_strict = true;
  bool upper_strict = false;
  Int actual;           // the bounded quantity; |SO^+-(n,q)|/(2,q) for the even orthogonal lines
  ExactRatio lower_coef;  // lower / q^N
  ExactRatio upper_coef;
  unsigned long exponent = 0;  // N
  std::string formula;

  bool holds() const;
  // The same comparison with both inequalities forced strict on the lower side
  // and non-strict on the upper side.
  bool holds_lt_le() const;
};

OrderBounds order_bounds(BoundFamily f, int n, long q);
OrderBounds simple_order_bounds(const GroupId& g);
// q^{n(n-1)/2}/8, a floor valid for every simple classical group of dimension n.
ExactRatio classical_floor(int n, long q);

// e^2 <= q for q = p^e, false only at q = 8.
bool log_square_bound(const PrimePower& pp);
// t! < ((t+1)/2)^t as integers: 2^t t! < (t+1)^t.
bool factorial_bound(unsigned long t);

enum class RatioCase { PSL_C2_t3, PSL_C3_r3, PSL_C5_r3, PSU_C2_t3, PSU_C3_r3, PO_C5_r3, O8_triality_3D4 };
enum class Verdict { CertainlyLarge, CertainlyNotLarge, Undetermined };

RatioCase parse_ratio_case(std::string_view s);
std::string to_string(RatioCase c);
std::string to_string(Verdict v);
const std::vector<RatioCase>& all_ratio_cases();

// dim is the block dimension m for the C2/C3 cases and n for the C5 cases (0 = case default).
// For the C5 and triality cases q is the subfield size q0 and the host lives over q0^3.
// o overrides |O1| in the triality case (default 3).
struct SandwichParams {
  int dim = 0;
  Sign eps = Sign::none;
  long o = 0;
};

struct BoundTriple {
  RatioCase rcase{};
  long q = 0;
  int dim = 0;
  Sign eps = Sign::none;
  ExactRatio lower;      // f
  ExactRatio upper;      // g
  ExactRatio threshold;  // h
  Verdict verdict = Verdict::Undetermined;
  ExactRatio exact;      // the ratio bracketed by f and g
  GroupId g0;
  Int g0_order, h0_order, o1_order;
  std::optional<ExactRatio> printed_lower, printed_upper;
  std::optional<ExactRatio> closed_threshold;  // h in closed form, where one exists

  bool brackets() const { return lower <= exact && exact <= upper; }
  bool exact_large() const { return exact >= threshold; }
};

bool sandwich_applies(RatioCase c, long q, const SandwichParams& p = {});
BoundTriple sandwich(RatioCase c, long q, const SandwichParams& p = {});

}  // namespace large_atlas
