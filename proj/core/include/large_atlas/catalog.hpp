#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "large_atlas/arith.hpp"
#include "large_atlas/orders.hpp"

namespace large_atlas {

enum class AClass { C1, C2, C3, C4, C5, C6, C7, C8, S, A, Exceptional };

std::string to_string(AClass c);
AClass parse_aclass(std::string_view s);

struct ConstraintViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UnsupportedFamily : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct WrongHost : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct OutOfDomain : std::domain_error {
  using std::domain_error::domain_error;
};
struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameters of one instantiation. Unused fields stay zero.
struct Params {
  int m = 0, t = 0, r = 0, k = 0;
  int n1 = 0, n2 = 0;
  int e1 = 0;   // sign of the block form (+1 / -1, 0 when unsigned)
  int e2 = 0;   // second sign (tensor factors, Sp4/O8 lists)
  long q0 = 0;  // subfield size for C5-type entries
  int variant = 0;

  friend bool operator==(const Params&, const Params&) = default;
};

std::string to_string(const Params& p);

// One record of the catalog file.
struct CatalogRecord {
  std::string id;
  Family family = Family::PSL;
  AClass cls = AClass::C1;
  std::string type_pattern;
  std::string formula_id;
  std::string params;       // parameter names, comma separated
  std::string constraints;  // human-readable predicate list
  std::string anchor;
};

// An instantiated catalog entry for a concrete G0.
struct SubgroupEntry {
  std::string id;
  GroupId host;
  AClass cls = AClass::C1;
  std::string type;
  Params params;
  Int h0_order;
  Int o1_order;
  Int c;
  bool bound_only = false;  // h0_order is only an upper bound
  bool o1_bound = false;    // o1_order is only an upper bound
  std::string formula;
  std::string anchor;
  std::vector<std::string> notes;

  // The list item for exceptional entries ("viii", "i.1", ...); empty otherwise.
  std::string item() const;
};

const std::vector<CatalogRecord>& catalog_records();
const CatalogRecord& catalog_record(std::string_view id);

// Parses and validates catalog text; throws CatalogError naming the offending record.
std::vector<CatalogRecord> load_catalog(std::string_view text);

// Every catalogued instantiation accepted for g0.
std::vector<SubgroupEntry> candidates(const GroupId& g0);
std::vector<SubgroupEntry> candidates(const GroupId& g0, AClass cls);

// Empty when params are admissible for g0, otherwise the violated condition.
std::string constraint_violation(const GroupId& g0, std::string_view record_id, const Params& p);
SubgroupEntry instantiate(const GroupId& g0, std::string_view record_id, const Params& p);

// The host of the fully deleted permutation module of A_d over F_p.
// For even dimension over odd p the sign follows from the discriminant unless a hint overrides it.
GroupId collection_a_host(int d, long p, std::optional<Sign> epsilon_hint = std::nullopt);

enum class GraphAut { sp4_graph, o8_triality };
std::string to_string(GraphAut g);
GraphAut parse_graph_aut(std::string_view s);

std::vector<SubgroupEntry> exceptional_candidates(const GroupId& g0, GraphAut which);

}  // namespace large_atlas
