#include "large_atlas/largeness.hpp"

namespace large_atlas {

std::string to_string(LargenessMode m) { return m == LargenessMode::exact ? "exact" : "bound_only"; }

namespace {

LargenessVerdict compare(const Int& g0_order, const Int& h0, const Int& o) {
  LargenessVerdict v;
  v.g0_order = g0_order;
  v.h0_order = h0;
  v.o_order = o;
  v.lhs = g0_order;
  v.rhs = h0 * h0 * h0 * o * o;
  v.is_large = v.lhs <= v.rhs;
  v.margin = ratio(v.rhs, v.lhs);
  return v;
}

}  // namespace

LargenessVerdict is_large(const GroupId& g0, const Int& h0_order, const Int& o_order) {
  if (h0_order < 1 || o_order < 1) throw std::invalid_argument("subgroup order and |O| must be positive");
  LargenessVerdict v = compare(order(g0), h0_order, o_order);
  if (in_simple_domain(g0)) {
    const Int out = out_order(g0);
    if (out % o_order != 0)
      v.warnings.push_back("|O| = " + o_order.get_str() + " does not divide |Out(G0)| = " + out.get_str());
  }
  return v;
}

LargenessVerdict is_large_h1(const GroupId& g0, const SubgroupEntry& entry) {
  if (!(entry.host == g0))
    throw ConstraintViolation("entry " + entry.id + " was instantiated for " + to_string(entry.host) + ", not " + to_string(g0));
  LargenessVerdict v = compare(order(g0), entry.h0_order, entry.o1_order);
  if (entry.bound_only || entry.o1_bound) v.mode = LargenessMode::bound_only;
  return v;
}

LargenessVerdict is_large_h1(const GroupId& g0, std::string_view record_id, const Params& p) {
  return is_large_h1(g0, instantiate(g0, record_id, p));
}

}  // namespace large_atlas
