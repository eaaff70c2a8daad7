#pragma once

#include <string>
#include <vector>

#include "large_atlas/arith.hpp"
#include "large_atlas/catalog.hpp"
#include "large_atlas/orders.hpp"

namespace large_atlas {

enum class LargenessMode { exact, bound_only };
std::string to_string(LargenessMode m);

struct LargenessVerdict {
  Int g0_order;
  Int h0_order;
  Int o_order;
  Int lhs;  // |G0|
  Int rhs;  // |H0|^3 |O|^2
  bool is_large = false;
  ExactRatio margin;  // rhs / lhs
  LargenessMode mode = LargenessMode::exact;
  std::vector<std::string> warnings;
};

// |G0| <= |H0|^3 |O|^2. A value of o not dividing |Out(G0)| only produces a warning.
LargenessVerdict is_large(const GroupId& g0, const Int& h0_order, const Int& o_order);

// The same check with O = O1 of the entry. When either order is only an upper bound the
// mode is bound_only and is_large is false exactly when the bounds already force it.
LargenessVerdict is_large_h1(const GroupId& g0, const SubgroupEntry& entry);
LargenessVerdict is_large_h1(const GroupId& g0, std::string_view record_id, const Params& p);

}  // namespace large_atlas
