#pragma once

#include <functional>
#include <string>
#include <vector>

#include "large_atlas/catalog.hpp"

namespace large_atlas::detail {

struct Ctx {
  GroupId g;
  int n = 0;
  long q = 0, p = 0;
  int e = 0;
  long d = 0;
  Int out;
};

Ctx make_ctx(const GroupId& g);

struct Eval {
  Int h0;
  Int o1;
  bool bound = false;
  bool o1_bound = false;
  std::string type;
  std::string formula;
  std::vector<std::string> notes;
};

struct Rule {
  std::string formula_id;
  Family family;
  AClass cls;
  std::string params;
  std::function<std::vector<Params>(const Ctx&)> enumerate;
  std::function<std::string(const Ctx&, const Params&)> check;
  std::function<Eval(const Ctx&, const Params&)> eval;
};

const std::vector<Rule>& rules();
const Rule* find_rule(std::string_view formula_id);
void add_exceptional_rules(std::vector<Rule>& out);

// Orders over fields whose size may not fit in a machine word.
Int qpow(long q, long k);
Int gl_big(int n, const Int& Q);
Int gu_big(int n, const Int& Q);
Int sp_big(int n, const Int& Q);
Int omega_big(int n, const Int& Q, Sign eps);

std::vector<long> prime_divisors(long n);
std::vector<int> divisors(int n);
// q0 with q0^r = q, or 0.
long root_of(long q, int r);

std::string str(long v);
std::string str(const Int& v);

}  // namespace large_atlas::detail
