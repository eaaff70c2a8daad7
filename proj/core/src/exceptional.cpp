#include "rules.hpp"

namespace large_atlas::detail {

namespace {

using V = std::vector<Params>;

bool sp4_host(const Ctx& c) { return c.g.family == Family::PSp && c.n == 4 && c.p == 2 && c.q >= 4; }
bool o8_host(const Ctx& c) { return c.g.family == Family::POmega && c.n == 8 && c.g.eps == Sign::plus; }

Eval mk(Int h0, Int o1, std::string type, std::string formula, bool bound = false, bool o1_bound = false) {
  Eval e;
  e.h0 = std::move(h0);
  e.o1 = std::move(o1);
  e.type = std::move(type);
  e.formula = std::move(formula);
  e.bound = bound;
  e.o1_bound = o1_bound;
  return e;
}

using Cond = std::function<std::string(const Ctx&)>;
using Body = std::function<Eval(const Ctx&)>;

// A single-instance item: one empty parameter tuple whenever the host and condition accept.
Rule single(std::string id, Family f, bool (*host)(const Ctx&), Cond cond, Body body) {
  Rule r;
  r.formula_id = std::move(id);
  r.family = f;
  r.cls = AClass::Exceptional;
  r.params = "";
  r.check = [host, cond](const Ctx& c, const Params& p) -> std::string {
    if (!host(c)) return "wrong host group";
    if (!(p == Params{})) return "takes no parameters";
    return cond ? cond(c) : "";
  };
  r.enumerate = [chk = r.check](const Ctx& c) { return chk(c, Params{}).empty() ? V{Params{}} : V{}; };
  r.eval = [body](const Ctx& c, const Params&) { return body(c); };
  return r;
}

// Subfield item: q = q0^r for prime r.
Rule subfield(std::string id, Family f, bool (*host)(const Ctx&), std::function<Eval(const Ctx&, const Params&)> body) {
  Rule r;
  r.formula_id = std::move(id);
  r.family = f;
  r.cls = AClass::Exceptional;
  r.params = "r,q0";
  r.check = [host](const Ctx& c, const Params& p) -> std::string {
    if (!host(c)) return "wrong host group";
    if (!is_prime(p.r) || p.q0 < 2 || root_of(c.q, p.r) != p.q0) return "requires q = q0^r, r prime";
    return "";
  };
  r.enumerate = [](const Ctx& c) {
    V v;
    for (long r : prime_divisors(c.e)) {
      Params p;
      p.r = static_cast<int>(r);
      p.q0 = root_of(c.q, p.r);
      v.push_back(p);
    }
    return v;
  };
  r.eval = std::move(body);
  return r;
}

Int sq(const Int& x) { return x * x; }

void add_sp4(std::vector<Rule>& R) {
  const Family f = Family::PSp;
  R.push_back(single("sp4_graph_borel", f, sp4_host, nullptr, [](const Ctx& c) {
    return mk(qpow(c.q, 4) * sq(Int(c.q - 1)), c.out, "[q^4]:(q-1)^2", "q^4 (q-1)^2");
  }));
  R.push_back(single("sp4_graph_split_torus", f, sp4_host, nullptr, [](const Ctx& c) {
    return mk(8 * sq(Int(c.q - 1)), c.out, "(q-1)^2:D8", "8 (q-1)^2");
  }));
  R.push_back(single("sp4_graph_nonsplit_torus", f, sp4_host, nullptr, [](const Ctx& c) {
    return mk(8 * sq(Int(c.q + 1)), c.out, "(q+1)^2:D8", "8 (q+1)^2");
  }));
  R.push_back(single("sp4_graph_singer", f, sp4_host, nullptr, [](const Ctx& c) {
    return mk(4 * (Int(c.q) * c.q + 1), c.out, "(q^2+1):4", "4 (q^2+1)");
  }));
  R.push_back(subfield("sp4_graph_subfield", f, sp4_host, [](const Ctx& c, const Params& p) {
    return mk(sp_order(4, p.q0), c.out, "Sp(4," + str(p.q0) + ")", "|Sp(4,q0)|");
  }));
  R.push_back(single(
      "sp4_graph_sz", f, sp4_host, [](const Ctx& c) -> std::string { return c.e % 2 ? "" : "requires q an odd power of 2"; },
      [](const Ctx& c) { return mk(sz_order(c.q), c.out, "Sz(" + str(c.q) + ")", "q^2 (q^2+1) (q-1)"); }));
}

void add_o8(std::vector<Rule>& R) {
  const Family f = Family::POmega;
  auto dd = [](const Ctx& c) { return Int(c.d); };
  R.push_back(single("o8_triality_parabolic_a1", f, o8_host, nullptr, [dd](const Ctx& c) {
    Int q = c.q;
    return mk(qpow(c.q, 12) * (q * q - 1) * ipow(q - 1, 3) / dd(c), c.out, "P[A1(q)]", "q^12 (q^2-1) (q-1)^3 / d", false, true);
  }));
  R.push_back(single("o8_triality_parabolic_a1cubed", f, o8_host, nullptr, [dd](const Ctx& c) {
    Int q = c.q;
    return mk(qpow(c.q, 12) * ipow(q * q - 1, 3) * (q - 1) / dd(c), c.out, "P[A1(q)^3]", "q^12 (q^2-1)^3 (q-1) / d", false, true);
  }));
  R.push_back(single("o8_triality_g2", f, o8_host, nullptr, [](const Ctx& c) {
    return mk(g2_order(c.q), c.out, "G2(" + str(c.q) + ")", "|G2(q)|", false, true);
  }));
  R.push_back(single("o8_triality_o2o6_plus", f, o8_host, nullptr, [](const Ctx& c) {
    return mk(go_order(2, c.q, Sign::plus) * go_order(6, c.q, Sign::plus), c.out, "GO+(2,q) perp GO+(6,q)",
              "<= |GO+(2,q)| |GO+(6,q)|", true, true);
  }));
  R.push_back(single("o8_triality_o2o6_minus", f, o8_host, nullptr, [](const Ctx& c) {
    return mk(go_order(2, c.q, Sign::minus) * go_order(6, c.q, Sign::minus), c.out, "GO-(2,q) perp GO-(6,q)",
              "<= |GO-(2,q)| |GO-(6,q)|", true, true);
  }));
  R.push_back(single(
      "o8_triality_2_3_6_l32", f, o8_host, [](const Ctx& c) -> std::string { return (c.e == 1 && c.p != 2) ? "" : "requires q = p odd"; },
      [](const Ctx& c) { return mk(86016, c.out, "2^3.2^6.PSL(3,2)", "2^9 |PSL(3,2)|", false, true); }));
  auto torus_wr = [](const Ctx& c, Sign s) -> Int {
    const long d = gcd(2L, c.q - 1);
    Int om = (s == Sign::minus ? Int(c.q + 1) : Int(c.q - 1)) / d;
    return ipow(om, 4) * ipow(Int(2 * d), 3) * 24 / d;
  };
  R.push_back(single("o8_triality_o2minus_wr_s4", f, o8_host, nullptr, [torus_wr](const Ctx& c) {
    return mk(torus_wr(c, Sign::minus), c.out, "GO-(2,q) wr S4", "|Omega-(2,q)|^4 (2d)^3 4! / d,  d = (2,q-1)", false, true);
  }));
  R.push_back(single(
      "o8_triality_o2plus_wr_s4", f, o8_host, [](const Ctx& c) -> std::string { return c.q >= 5 ? "" : "requires q >= 5"; },
      [torus_wr](const Ctx& c) {
        return mk(torus_wr(c, Sign::plus), c.out, "GO+(2,q) wr S4", "|Omega+(2,q)|^4 (2d)^3 4! / d,  d = (2,q-1)", false, true);
      }));
  R.push_back(single(
      "o8_triality_o4_wr_s2", f, o8_host, [](const Ctx& c) -> std::string { return c.q >= 3 ? "" : "requires q >= 3"; },
      [](const Ctx& c) {
        return mk(2 * sq(go_order(4, c.q, Sign::plus)), c.out, "GO+(4,q) wr S2", "<= 2 |GO+(4,q)|^2", true, true);
      }));
  R.push_back(single("o8_triality_dihedral", f, o8_host, nullptr, [](const Ctx& c) {
    const long d = gcd(2L, c.q - 1);
    return mk(16 * sq(Int(c.q) * c.q + 1) / d, c.out, "(D" + str(2 * (c.q * c.q + 1) / d) + ")^2.[" + str(2 * d) + "].S2",
              "16 (q^2+1)^2 / d,  d = (2,q-1)", false, true);
  }));
  R.push_back(subfield("o8_triality_subfield", f, o8_host, [](const Ctx& c, const Params& p) {
    return mk(pomega_order(8, p.q0, Sign::plus), c.out, "GO+(8," + str(p.q0) + ")", "|POmega+(8,q0)|", false, true);
  }));
  R.push_back(single(
      "o8_triality_l3u3", f, o8_host,
      [](const Ctx& c) -> std::string {
        if (c.q % 3 == 1 || (c.q % 3 == 2 && c.q != 2)) return "";
        return "requires q = 1 mod 3, or q = 2 mod 3 with q != 2";
      },
      [](const Ctx& c) {
        if (c.q % 3 == 1) return mk(3 * psl_order(3, c.q), 6 * c.e, "PSL(3," + str(c.q) + ").3", "3 |PSL(3,q)|");
        return mk(3 * psu_order(3, c.q), 6 * c.e, "PSU(3," + str(c.q) + ").3", "3 |PSU(3,q)|");
      }));
  R.push_back(single(
      "o8_triality_trid4", f, o8_host, [](const Ctx& c) -> std::string { return root_of(c.q, 3) ? "" : "requires q = q0^3"; },
      [](const Ctx& c) {
        const long q0 = root_of(c.q, 3);
        return mk(trid4_order(q0), c.out, "3D4(" + str(q0) + ")", "|3D4(q0)|", false, true);
      }));
  R.push_back(single(
      "o8_triality_o8_2", f, o8_host, [](const Ctx& c) -> std::string { return (c.e == 1 && c.p != 2) ? "" : "requires q = p odd"; },
      [](const Ctx& c) { return mk(pomega_order(8, 2, Sign::plus), c.out, "POmega+(8,2)", "|POmega+(8,2)|", false, true); }));
  R.push_back(single(
      "o8_triality_sz8", f, o8_host, [](const Ctx& c) -> std::string { return c.q == 5 ? "" : "requires q = 5"; },
      [](const Ctx& c) { return mk(sz_order(8), c.out, "Sz(8)", "|Sz(8)|", false, true); }));
}

}  // namespace

void add_exceptional_rules(std::vector<Rule>& out) {
  add_sp4(out);
  add_o8(out);
}

}  // namespace large_atlas::detail
