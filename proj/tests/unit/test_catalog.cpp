#include <doctest.h>

#include <algorithm>

#include "large_atlas/catalog.hpp"
#include "large_atlas/tables.hpp"

using namespace large_atlas;

namespace {

std::vector<GroupId> host_grid() {
  std::vector<GroupId> v;
  for (const auto& pp : prime_powers_upto(27)) {
    const long q = pp.q;
    for (int n = 2; n <= 9; ++n) v.push_back(GroupId::psl(n, q));
    for (int n = 3; n <= 8; ++n) v.push_back(GroupId::psu(n, q));
    for (int n = 4; n <= 10; n += 2) v.push_back(GroupId::psp(n, q));
    for (int n = 7; n <= 12; ++n) {
      if (n % 2) v.push_back(GroupId::pomega(n, q, Sign::circ));
      else v.insert(v.end(), {GroupId::pomega(n, q, Sign::plus), GroupId::pomega(n, q, Sign::minus)});
    }
  }
  std::erase_if(v, [](const GroupId& g) { return !in_simple_domain(g); });
  return v;
}

const SubgroupEntry* find_type(const std::vector<SubgroupEntry>& es, std::string_view needle) {
  for (const auto& e : es)
    if (e.type.find(needle) != std::string::npos) return &e;
  return nullptr;
}

void check_entry(const GroupId& g, const SubgroupEntry& e) {
  CAPTURE(to_string(g));
  CAPTURE(e.id);
  CAPTURE(e.type);
  const Int out = out_order(g);
  if (e.o1_bound) CHECK(e.c * e.o1_order >= out);
  else CHECK(e.c * e.o1_order == out);
  CHECK(e.h0_order >= 1);
  if (!e.bound_only) CHECK(order(g) % e.h0_order == 0);
}

}  // namespace

TEST_CASE("catalog records load and resolve") {
  const auto& recs = catalog_records();
  CHECK(recs.size() >= 40);
  CHECK(catalog_record("psl-c2-wr").cls == AClass::C2);
  CHECK_THROWS(catalog_record("psl-c99"));
}

TEST_CASE("malformed catalog text names the record") {
  const std::string bad = "[broken-entry]\nfamily = PSL\nclass = C2\ntype = X\nformula = no_such_formula\nparams = m\n"
                          "constraints = none\nanchor = nowhere\n";
  try {
    load_catalog(bad);
    FAIL("no error");
  } catch (const CatalogError& e) {
    CHECK(std::string(e.what()).find("broken-entry") != std::string::npos);
  }
}

TEST_CASE("|Out| = c |O1| and Lagrange over a host grid") {
  std::size_t n = 0;
  for (const auto& g : host_grid()) {
    for (const auto& e : candidates(g)) {
      check_entry(g, e);
      ++n;
    }
  }
  CHECK(n >= 200);
}

TEST_CASE("exceptional lists satisfy the same invariants") {
  for (long q : {4L, 8L, 16L, 32L, 64L})
    for (const auto& e : exceptional_candidates(GroupId::psp(4, q), GraphAut::sp4_graph))
      check_entry(GroupId::psp(4, q), e);
  for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L})
    for (const auto& e : exceptional_candidates(GroupId::pomega(8, q, Sign::plus), GraphAut::o8_triality)) {
      CAPTURE(q);
      CHECK(e.h0_order >= 1);
      if (!e.bound_only) CHECK(order(GroupId::pomega(8, q, Sign::plus)) % e.h0_order == 0);
    }
}

TEST_CASE("candidate examples") {
  const SubgroupEntry c2 = instantiate(GroupId::psl(4, 5), "psl-c2-wr", Params{.m = 1, .t = 4});
  CHECK(c2.h0_order == 384);
  CHECK(c2.o1_order == 8);
  CHECK(c2.cls == AClass::C2);

  const SubgroupEntry c3 = instantiate(GroupId::psu(5, 2), "psu-c3", Params{.m = 1, .r = 5});
  CHECK(c3.h0_order == 55);

  const auto c6 = candidates(GroupId::psp(8, 3), AClass::C6);
  const SubgroupEntry* e = find_type(c6, "Omega-(6,2)");
  REQUIRE(e != nullptr);
  CHECK(e->params.m == 3);
  CHECK(order(GroupId::psp(8, 3)) % e->h0_order == 0);

  CHECK_THROWS_AS(candidates(GroupId::alt(7)), UnsupportedFamily);
}

TEST_CASE("constraint predicates") {
  CHECK(constraint_violation(GroupId::psl(2, 5), "psl-c2-wr", Params{.m = 1, .t = 2}).empty());
  CHECK_FALSE(constraint_violation(GroupId::psl(2, 4), "psl-c2-wr", Params{.m = 1, .t = 2}).empty());
  CHECK_THROWS_AS(instantiate(GroupId::psl(2, 4), "psl-c2-wr", Params{.m = 1, .t = 2}), ConstraintViolation);
  CHECK_FALSE(constraint_violation(GroupId::psp(6, 2), "psp-c2-wr", Params{.m = 2, .t = 3}).empty());
  CHECK(constraint_violation(GroupId::psp(6, 3), "psp-c2-wr", Params{.m = 2, .t = 3}).empty());
  CHECK_FALSE(constraint_violation(GroupId::psl(6, 5), "psl-c2-wr", Params{.m = 4, .t = 2}).empty());
}

TEST_CASE("collection A host map") {
  CHECK(collection_a_host(10, 2) == GroupId::psp(8, 2));
  CHECK(collection_a_host(17, 2) == GroupId::pomega(16, 2, Sign::plus));
  CHECK(collection_a_host(9, 3) == GroupId::pomega(7, 3, Sign::circ));
  CHECK_THROWS_AS(collection_a_host(4, 3), OutOfDomain);
  CHECK_THROWS_AS(collection_a_host(9, 4), OutOfDomain);
  // every host is simple (PSp(4,2) = S6 aside) and contains A_d
  for (long p : {2L, 3L, 5L, 7L})
    for (int d = 5; d <= 28; ++d) {
      const GroupId g = collection_a_host(d, p);
      CAPTURE(d);
      CAPTURE(p);
      if (d != 6 || p != 2) CHECK(in_simple_domain(canonicalize(g)));
      CHECK(order(g) % (factorial(static_cast<unsigned long>(d)) / 2) == 0);
    }
}

TEST_CASE("exceptional candidate examples") {
  const auto sp = exceptional_candidates(GroupId::psp(4, 8), GraphAut::sp4_graph);
  const SubgroupEntry* sz = find_type(sp, "Sz");
  REQUIRE(sz != nullptr);
  CHECK(sz->h0_order == 29120);

  const auto o8 = exceptional_candidates(GroupId::pomega(8, 2, Sign::plus), GraphAut::o8_triality);
  bool viii = false;
  for (const auto& e : o8)
    if (e.item() == "viii") {
      viii = true;
      CHECK(e.h0_order == 400);
    }
  CHECK(viii);

  const auto o88 = exceptional_candidates(GroupId::pomega(8, 8, Sign::plus), GraphAut::o8_triality);
  const SubgroupEntry* d4 = find_type(o88, "3D4");
  REQUIRE(d4 != nullptr);
  CHECK(d4->h0_order == trid4_order(2));

  CHECK_THROWS_AS(exceptional_candidates(GroupId::psl(3, 4), GraphAut::sp4_graph), WrongHost);
  CHECK_THROWS_AS(exceptional_candidates(GroupId::psp(4, 3), GraphAut::sp4_graph), WrongHost);
  CHECK_THROWS_AS(exceptional_candidates(GroupId::pomega(10, 2, Sign::plus), GraphAut::o8_triality), WrongHost);
}

TEST_CASE("table A rows") {
  const auto& a = table_a();
  REQUIRE_FALSE(a.empty());
  bool sp8 = false;
  for (const auto& r : a) {
    CAPTURE(r.g0_printed);
    CHECK(r.g0_order == order(r.g0));
    CHECK(r.g0_order % r.h0_order == 0);
    CHECK(r.h1_large);
    if (r.g0 == GroupId::psp(8, 2) && r.h0_order == factorial(10)) sp8 = true;
  }
  CHECK(sp8);
  CHECK_FALSE(table_a0().empty());
  CHECK_THROWS_AS(load_table_a("10 | 2 | PSp(8,3) | Sym(10)\n"), TableError);
}

TEST_CASE("table B rows") {
  bool j3 = false;
  for (const auto& r : table_b()) {
    CAPTURE(r.g0_printed);
    CAPTURE(r.h0_name);
    CHECK(r.g0_order == order(r.g0));
    CHECK(r.g0_order % r.h0_order == 0);
    if (r.h0_name == "J3") {
      j3 = true;
      CHECK_FALSE(r.h0_large);
      CHECK(r.h1_large);
      CHECK(r.remark == Remark::h0_not_large);
    }
  }
  CHECK(j3);
  CHECK_THROWS_AS(load_table_b("PSU(9,{q}) | J3 | Sporadic(J3) | | | x=2\n"), TableError);
}
