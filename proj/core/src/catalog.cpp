#include "large_atlas/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "embedded_data.hpp"
#include "rules.hpp"

namespace large_atlas {

namespace detail {

std::string str(long v) { return std::to_string(v); }
std::string str(const Int& v) { return v.get_str(); }

Int qpow(long q, long k) { return ipow(q, static_cast<unsigned long>(k)); }

Int gl_big(int n, const Int& Q) {
  if (n <= 0) return 1;
  Int r = ipow(Q, static_cast<unsigned long>(n) * (n - 1) / 2);
  Int qi = 1;
  for (int i = 1; i <= n; ++i) {
    qi *= Q;
    r *= qi - 1;
  }
  return r;
}

Int gu_big(int n, const Int& Q) {
  if (n <= 0) return 1;
  Int r = ipow(Q, static_cast<unsigned long>(n) * (n - 1) / 2);
  Int qi = 1;
  for (int i = 1; i <= n; ++i) {
    qi *= Q;
    r *= (i % 2) ? Int(qi + 1) : Int(qi - 1);
  }
  return r;
}

Int sp_big(int n, const Int& Q) {
  const int m = n / 2;
  Int r = ipow(Q, static_cast<unsigned long>(m) * m);
  Int q2 = Q * Q, qi = 1;
  for (int i = 1; i <= m; ++i) {
    qi *= q2;
    r *= qi - 1;
  }
  return r;
}

Int omega_big(int n, const Int& Q, Sign eps) {
  const Int two_q = (Q % 2 == 0) ? Int(1) : Int(2);
  if (n == 1) return 1;
  if (n % 2 == 1) return sp_big(n - 1, Q) / two_q;
  const int m = n / 2;
  const int s = eps == Sign::plus ? 1 : -1;
  Int r = ipow(Q, static_cast<unsigned long>(m) * (m - 1)) * (ipow(Q, m) - s);
  Int q2 = Q * Q, qi = 1;
  for (int i = 1; i < m; ++i) {
    qi *= q2;
    r *= qi - 1;
  }
  return r / two_q;
}

std::vector<long> prime_divisors(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (n % i == 0) out.push_back(i);
  return out;
}

long root_of(long q, int r) {
  const auto pp = try_prime_power(q);
  if (!pp || r <= 0 || pp->e % r) return 0;
  long q0 = 1;
  for (int i = 0; i < pp->e / r; ++i) q0 *= pp->p;
  return q0;
}

Ctx make_ctx(const GroupId& g) {
  validate(g);
  const PrimePower pp = parse_prime_power(g.q);
  Ctx c;
  c.g = g;
  c.n = g.n;
  c.q = g.q;
  c.p = pp.p;
  c.e = pp.e;
  c.d = center_d(g);
  c.out = out_order(g);
  return c;
}

namespace {

using V = std::vector<Params>;

Int F(long t) { return factorial(static_cast<unsigned long>(t)); }
Int P(const Int& b, long k) { return ipow(b, static_cast<unsigned long>(k)); }

std::string sgn(int s) { return s > 0 ? "+" : s < 0 ? "-" : ""; }
Sign to_sign(int s) { return s > 0 ? Sign::plus : s < 0 ? Sign::minus : Sign::circ; }

// Block dimensions m with n = m t, t >= 2.
V wreath_params(int n, int mmin, bool even_m) {
  V v;
  for (int m : divisors(n)) {
    if (m < mmin || n / m < 2 || (even_m && m % 2)) continue;
    Params p;
    p.m = m;
    p.t = n / m;
    v.push_back(p);
  }
  return v;
}

V prime_r_params(int n, bool odd_only) {
  V v;
  for (long r : prime_divisors(n)) {
    if (odd_only && r == 2) continue;
    Params p;
    p.r = static_cast<int>(r);
    p.m = n / static_cast<int>(r);
    v.push_back(p);
  }
  return v;
}

V subfield_params(const Ctx& c, bool odd_only) {
  V v;
  for (long r : prime_divisors(c.e)) {
    if (odd_only && r == 2) continue;
    Params p;
    p.r = static_cast<int>(r);
    p.q0 = root_of(c.q, p.r);
    v.push_back(p);
  }
  return v;
}

// n = m^t with t >= 2.
V power_params(int n, int mmin) {
  V v;
  for (int m = mmin; m * m <= n; ++m) {
    long x = m;
    int t = 1;
    while (x < n) {
      x *= m;
      ++t;
    }
    if (x == n) {
      Params p;
      p.m = m;
      p.t = t;
      v.push_back(p);
    }
  }
  return v;
}

std::string need_wreath(const Ctx& c, const Params& p) {
  if (p.m < 1 || p.t < 2 || p.m * p.t != c.n) return "requires n = m t with t >= 2";
  return "";
}

std::string need_subfield(const Ctx& c, const Params& p) {
  if (!is_prime(p.r)) return "r must be prime";
  if (p.q0 < 2 || root_of(c.q, p.r) != p.q0) return "requires q = q0^r";
  return "";
}

std::string need_power(const Ctx& c, const Params& p) {
  if (p.t < 2 || p.m < 2) return "requires n = m^t with t >= 2";
  if (ipow(static_cast<long>(p.m), p.t) != c.n) return "requires n = m^t";
  return "";
}

std::string need_prime_field(const Ctx& c) {
  if (c.e != 1) return "requires q = p prime";
  if (c.p == 2) return "requires p odd";
  return "";
}

std::string first(std::initializer_list<std::string> msgs) {
  for (const auto& m : msgs)
    if (!m.empty()) return m;
  return "";
}

Eval ev(Int h0, Int o1, std::string type, std::string formula) {
  Eval e;
  e.h0 = std::move(h0);
  e.o1 = std::move(o1);
  e.type = std::move(type);
  e.formula = std::move(formula);
  return e;
}

Eval bound(Eval e) {
  e.bound = true;
  e.o1_bound = true;
  return e;
}

// |Out| without the Sp4(2^e) graph automorphism, which the geometric lists assume absent.
Int psp_base_out(const Ctx& c) { return (c.n == 4 && c.p == 2) ? c.out / 2 : c.out; }

// |Out| without the triality factor for POmega+(8,q).
Int pso_base_out(const Ctx& c) { return (c.n == 8 && c.g.eps == Sign::plus) ? c.out / 3 : c.out; }

void add_psl(std::vector<Rule>& R) {
  const Family f = Family::PSL;
  R.push_back({"psl_c1_pk", f, AClass::C1, "k",
               [](const Ctx& c) {
                 V v;
                 for (int k = 1; 2 * k <= c.n; ++k) v.push_back(Params{.k = k});
                 return v;
               },
               [](const Ctx& c, const Params& p) -> std::string {
                 return (p.k >= 1 && 2 * p.k <= c.n) ? "" : "requires 1 <= k <= n/2";
               },
               [](const Ctx& c, const Params& p) {
                 const long cc = (c.n >= 3 && 2 * p.k != c.n) ? 2 : 1;
                 Int h = qpow(c.q, p.k * (c.n - p.k)) * gl_order(p.k, c.q) * gl_order(c.n - p.k, c.q) / ((c.q - 1) * c.d);
                 auto e = ev(h, c.out / cc, "P" + str(p.k), "q^(k(n-k)) |GL(k,q)| |GL(n-k,q)| / ((q-1) d)");
                 if (cc == 2) e.notes.push_back("P_k and P_(n-k) are swapped by the inverse-transpose automorphism");
                 return e;
               }});
  R.push_back({"psl_c2_wr", f, AClass::C2, "m,t", [](const Ctx& c) { return wreath_params(c.n, 1, false); },
               [](const Ctx& c, const Params& p) {
                 return first({need_wreath(c, p), (p.m == 1 && c.q < 5) ? "q >= 5 if m = 1" : "",
                               (p.m == 2 && c.q < 3) ? "q >= 3 if m = 2" : ""});
               },
               [](const Ctx& c, const Params& p) {
                 Int h = P(gl_order(p.m, c.q), p.t) * F(p.t) / ((c.q - 1) * c.d);
                 return ev(h, c.out, "GL(" + str(p.m) + "," + str(c.q) + ") wr S" + str(p.t),
                           "|GL(m,q)|^t t! / ((q-1) d)");
               }});
  R.push_back({"psl_c3", f, AClass::C3, "r,m", [](const Ctx& c) { return prime_r_params(c.n, false); },
               [](const Ctx& c, const Params& p) -> std::string {
                 if (!is_prime(p.r) || c.n % p.r || p.m * p.r != c.n) return "requires r prime, n = m r";
                 return "";
               },
               [](const Ctx& c, const Params& p) {
                 Int h = p.r * gl_big(p.m, qpow(c.q, p.r)) / ((c.q - 1) * c.d);
                 return ev(h, c.out, "GL(" + str(p.m) + "," + str(c.q) + "^" + str(p.r) + ")",
                           "r |GL(m,q^r)| / ((q-1) d)");
               }});
  R.push_back({"psl_c4", f, AClass::C4, "n1,n2",
               [](const Ctx& c) {
                 V v;
                 for (int a = 2; a * a < c.n; ++a)
                   if (c.n % a == 0) v.push_back(Params{.n1 = a, .n2 = c.n / a});
                 return v;
               },
               [](const Ctx& c, const Params& p) -> std::string {
                 if (p.n1 < 2 || p.n1 >= p.n2 || p.n1 * p.n2 != c.n) return "requires n = n1 n2, 2 <= n1 < n2";
                 return "";
               },
               [](const Ctx& c, const Params& p) {
                 const long g = gcd(gcd(c.q - 1, p.n1), p.n2);
                 Int h = sl_order(p.n1, c.q) * sl_order(p.n2, c.q) * g / c.d;
                 return ev(h, c.out / g, "GL(" + str(p.n1) + "," + str(c.q) + ") tensor GL(" + str(p.n2) + "," + str(c.q) + ")",
                           "|SL(n1,q)| |SL(n2,q)| (q-1,n1,n2) / d");
               }});
  R.push_back({"psl_c5", f, AClass::C5, "r,q0", [](const Ctx& c) { return subfield_params(c, false); },
               [](const Ctx& c, const Params& p) {
                 return first({need_subfield(c, p), (c.n == 2 && p.q0 == 2) ? "q0 > 2 when n = 2" : ""});
               },
               [](const Ctx& c, const Params& p) {
                 const long cc = (c.q - 1) / lcm(p.q0 - 1, (c.q - 1) / c.d);
                 Int h = sl_order(c.n, p.q0) * cc / c.d;
                 auto e = ev(h, c.out / cc, "GL(" + str(c.n) + "," + str(p.q0) + ")",
                             "|SL(n,q0)| c / d,  c = (q-1)/lcm(q0-1, (q-1)/d)");
                 if (p.r == 3) e.notes.push_back("no closed-form largeness condition; decided per (n,q0)");
                 return e;
               }});
  R.push_back({"psl_c6", f, AClass::C6, "variant",
               [](const Ctx& c) {
                 V v;
                 if (!need_prime_field(c).empty()) return v;
                 const long p = c.p;
                 if ((c.n == 3 && p % 3 == 1) || (c.n == 4 && p % 4 == 1) || (c.n == 8 && p % 4 == 1) ||
                     (c.n == 2 && p >= 5))
                   v.push_back(Params{.variant = c.n});
                 return v;
               },
               [](const Ctx& c, const Params& p) -> std::string {
                 if (auto m = need_prime_field(c); !m.empty()) return m;
                 if (p.variant != c.n) return "variant must equal n";
                 switch (c.n) {
                   case 2: return c.p >= 5 ? "" : "requires p >= 5";
                   case 3: return c.p % 3 == 1 ? "" : "requires p = 1 mod 3";
                   case 4:
                   case 8: return c.p % 4 == 1 ? "" : "requires p = 1 mod 4";
                   default: return "requires n in {2,3,4,8}";
                 }
               },
               [](const Ctx& c, const Params&) {
                 const long p = c.p;
                 switch (c.n) {
                   case 2:
                     if (p % 8 == 1 || p % 8 == 7) return ev(24, 1, "S4", "24");
                     return ev(12, 2, "A4", "12");
                   case 3: {
                     const long k = gcd(9L, p - 1) / 3;
                     auto e = ev(72 * k, 2, k == 1 ? "3^2.Q8" : "3^2.SL(2,3)", "72 (9,p-1)/3");
                     return e;
                   }
                   case 4:
                     if (p % 8 == 5) return ev(16 * 360, 4, "2^4.A6", "2^4 |A6|");
                     return ev(16 * 720, 2, "2^4.S6", "2^4 |S6|");
                   default:
                     return ev(Int(64) * sporadic_order("S6(2)"), 2, "2^6.Sp(6,2)", "2^6 |Sp(6,2)|");
                 }
               }});
  R.push_back({"psl_c7", f, AClass::C7, "m,t", [](const Ctx& c) { return power_params(c.n, 3); },
               [](const Ctx& c, const Params& p) { return first({need_power(c, p), p.m < 3 ? "m >= 3" : ""}); },
               [](const Ctx& c, const Params& p) {
                 return bound(ev(P(sl_order(p.m, c.q), p.t) * F(p.t), c.out,
                                 "GL(" + str(p.m) + "," + str(c.q) + ") tensor-wr S" + str(p.t), "< |SL(m,q)|^t t!"));
               }});
}

void add_psu(std::vector<Rule>& R) {
  const Family f = Family::PSU;
  R.push_back({"psu_c1_pk", f, AClass::C1, "k",
               [](const Ctx& c) {
                 V v;
                 for (int k = 1; 2 * k <= c.n; ++k) v.push_back(Params{.k = k});
                 return v;
               },
               [](const Ctx& c, const Params& p) -> std::string {
                 return (p.k >= 1 && 2 * p.k <= c.n) ? "" : "requires 1 <= k <= n/2";
               },
               [](const Ctx& c, const Params& p) {
                 Int h = qpow(c.q, p.k * (2 * c.n - 3 * p.k)) * gl_big(p.k, Int(c.q) * c.q) * gu_order(c.n - 2 * p.k, c.q) /
                         ((c.q + 1) * c.d);
                 return ev(h, c.out, "P" + str(p.k), "q^(k(2n-3k)) |GL(k,q^2)| |GU(n-2k,q)| / ((q+1) d)");
               }});
  R.push_back({"psu_c1_nk", f, AClass::C1, "k",
               [](const Ctx& c) {
                 V v;
                 for (int k = 1; 2 * k < c.n; ++k) v.push_back(Params{.k = k});
                 return v;
               },
               [](const Ctx& c, const Params& p) -> std::string {
                 return (p.k >= 1 && 2 * p.k < c.n) ? "" : "requires 1 <= k < n/2";
               },
               [](const Ctx& c, const Params& p) {
                 Int h = gu_order(p.k, c.q) * gu_order(c.n - p.k, c.q) / ((c.q + 1) * c.d);
                 return ev(h, c.out, "N" + str(p.k), "|GU(k,q)| |GU(n-k,q)| / ((q+1) d)");
               }});
  R.push_back({"psu_c2_wr", f, AClass::C2, "m,t", [](const Ctx& c) { return wreath_params(c.n, 1, false); },
               [](const Ctx& c, const Params& p) { return need_wreath(c, p); },
               [](const Ctx& c, const Params& p) {
                 Int h = P(gu_order(p.m, c.q), p.t) * F(p.t) / ((c.q + 1) * c.d);
                 return ev(h, c.out, "GU(" + str(p.m) + "," + str(c.q) + ") wr S" + str(p.t),
                           "|GU(m,q)|^t t! / ((q+1) d)");
               }});
  R.push_back({"psu_c2_gl", f, AClass::C2, "",
               [](const Ctx& c) { return c.n % 2 ? V{} : V{Params{}}; },
               [](const Ctx& c, const Params&) -> std::string { return c.n % 2 ? "requires n even" : ""; },
               [](const Ctx& c, const Params&) {
                 Int h = 2 * gl_big(c.n / 2, Int(c.q) * c.q) / ((c.q + 1) * c.d);
                 return ev(h, c.out, "GL(" + str(c.n / 2) + "," + str(c.q) + "^2).2", "2 |GL(n/2,q^2)| / ((q+1) d)");
               }});
  R.push_back({"psu_c3", f, AClass::C3, "r,m", [](const Ctx& c) { return prime_r_params(c.n, true); },
               [](const Ctx& c, const Params& p) -> std::string {
                 if (!is_prime(p.r) || p.r == 2 || p.m * p.r != c.n) return "requires r odd prime, n = m r";
                 return "";
               },
               [](const Ctx& c, const Params& p) {
                 Int h = p.r * gu_big(p.m, qpow(c.q, p.r)) / ((c.q + 1) * c.d);
                 return ev(h, c.out, "GU(" + str(p.m) + "," + str(c.q) + "^" + str(p.r) + ")",
                           "r |GU(m,q^r)| / ((q+1) d)");
               }});
  R.push_back({"psu_c4", f, AClass::C4, "n1,n2",
               [](const Ctx& c) {
                 V v;
                 for (int a = 2; a * a < c.n; ++a)
                   if (c.n % a == 0) v.push_back(Params{.n1 = a, .n2 = c.n / a});
                 return v;
               },
               [](const Ctx& c, const Params& p) -> std::string {
                 if (p.n1 < 2 || p.n1 >= p.n2 || p.n1 * p.n2 != c.n) return "requires n = n1 n2, 2 <= n1 < n2";
                 if (p.n1 == 2 && p.n2 == 4 && c.q == 2) return "no such maximal subgroup for (n1,n2,q) = (2,4,2)";
                 return "";
               },
               [](const Ctx& c, const Params& p) {
                 const long g = gcd(gcd(c.q + 1, p.n1), p.n2);
                 Int h = su_order(p.n1, c.q) * su_order(p.n2, c.q) * g / c.d;
                 return ev(h, c.out / g, "GU(" + str(p.n1) + "," + str(c.q) + ") tensor GU(" + str(p.n2) + "," + str(c.q) + ")",
                           "|SU(n1,q)| |SU(n2,q)| (q+1,n1,n2) / d");
               }});
  R.push_back({"psu_c5", f, AClass::C5, "r,q0", [](const Ctx& c) { return subfield_params(c, true); },
               [](const Ctx& c, const Params& p) {
                 return first({need_subfield(c, p), p.r == 2 ? "r must be odd" : ""});
               },
               [](const Ctx& c, const Params& p) {
                 const long cc = (c.q + 1) / lcm(p.q0 + 1, (c.q + 1) / c.d);
                 Int h = su_order(c.n, p.q0) * cc / c.d;
                 auto e = ev(h, c.out / cc, "GU(" + str(c.n) + "," + str(p.q0) + ")",
                             "|SU(n,q0)| c / d,  c = (q+1)/lcm(q0+1, (q+1)/d)");
                 if (p.r == 3) e.notes.push_back("no closed-form largeness condition; decided per (n,q0)");
                 return e;
               }});
  R.push_back({"psu_c6", f, AClass::C6, "variant",
               [](const Ctx& c) {
                 V v;
                 if (!need_prime_field(c).empty()) return v;
                 const long p = c.p;
                 if ((c.n == 3 && p % 3 == 2) || (c.n == 4 && p % 4 == 3) || (c.n == 8 && p % 4 == 3))
                   v.push_back(Params{.variant = c.n});
                 return v;
               },
               [](const Ctx& c, const Params& p) -> std::string {
                 if (auto m = need_prime_field(c); !m.empty()) return m;
                 if (p.variant != c.n) return "variant must equal n";
                 switch (c.n) {
                   case 3: return c.p % 3 == 2 ? "" : "requires p = 2 mod 3";
                   case 4:
                   case 8: return c.p % 4 == 3 ? "" : "requires p = 3 mod 4";
                   default: return "requires n in {3,4,8}";
                 }
               },
               [](const Ctx& c, const Params&) {
                 const long p = c.p;
                 switch (c.n) {
                   case 3: {
                     const long k = gcd(9L, p + 1) / 3;
                     return ev(72 * k, 2 * gcd(3L, p + 1) / k, k == 1 ? "3^2.Q8" : "3^2.SL(2,3)", "72 (9,p+1)/3");
                   }
                   case 4:
                     if (p % 8 == 3) return ev(16 * 360, 4, "2^4.A6", "2^4 |A6|");
                     return ev(16 * 720, 2, "2^4.S6", "2^4 |S6|");
                   default:
                     return ev(Int(64) * sporadic_order("S6(2)"), 2, "2^6.Sp(6,2)", "2^6 |Sp(6,2)|");
                 }
               }});
  R.push_back({"psu_c7", f, AClass::C7, "m,t", [](const Ctx& c) { return power_params(c.n, 3); },
               [](const Ctx& c, const Params& p) {
                 return first({need_power(c, p), p.m < 3 ? "m >= 3" : "",
                               (p.m == 3 && c.q == 2) ? "(m,q) != (3,2)" : ""});
               },
               [](const Ctx& c, const Params& p) {
                 return bound(ev(P(su_order(p.m, c.q), p.t) * F(p.t), c.out,
                                 "GU(" + str(p.m) + "," + str(c.q) + ") tensor-wr S" + str(p.t), "< |SU(m,q)|^t t!"));
               }});
}

void add_psp(std::vector<Rule>& R) {
  const Family f = Family::PSp;
  R.push_back({"psp_c1_pk", f, AClass::C1, "k",
               [](const Ctx& c) {
                 V v;
                 for (int k = 1; 2 * k <= c.n; ++k) v.push_back(Params{.k = k});
                 return v;
               },
               [](const Ctx& c, const Params& p) -> std::string {
                 return (p.k >= 1 && 2 * p.k <= c.n) ? "" : "requires 1 <= k <= n/2";
               },
               [](const Ctx& c, const Params& p) {
                 const int k = p.k;
                 Int h = qpow(c.q, k * (k + 1) / 2 + k * (c.n - 2 * k)) * gl_order(k, c.q) * sp_big(c.n - 2 * k, c.q) / c.d;
                 return ev(h, psp_base_out(c), "P" + str(k), "q^(k(k+1)/2 + k(n-2k)) |GL(k,q)| |Sp(n-2k,q)| / d");
               }});
  R.push_back({"psp_c1_nk", f, AClass::C1, "k",
               [](const Ctx& c) {
                 V v;
                 for (int k = 2; 2 * k < c.n; k += 2) v.push_back(Params{.k = k});
                 return v;
               },
               [](const Ctx& c, const Params& p) -> std::string {
                 return (p.k >= 2 && p.k % 2 == 0 && 2 * p.k < c.n) ? "" : "requires k even, 2 <= k < n/2";
               },
               [](const Ctx& c, const Params& p) {
                 Int h = sp_order(p.k, c.q) * sp_order(c.n - p.k, c.q) / c.d;
                 return ev(h, psp_base_out(c), "N" + str(p.k), "|Sp(k,q)| |Sp(n-k,q)| / d");
               }});
  R.push_back({"psp_c2_wr", f, AClass::C2, "m,t", [](const Ctx& c) { return wreath_params(c.n, 2, true); },
               [](const Ctx& c, const Params& p) {
                 return first({need_wreath(c, p), p.m % 2 ? "m must be even" : "",
                               (p.m == 2 && c.q == 2) ? "(m,q) != (2,2)" : ""});
               },
               [](const Ctx& c, const Params& p) {
                 Int h = P(sp_order(p.m, c.q), p.t) * F(p.t) / c.d;
                 return ev(h, psp_base_out(c), "Sp(" + str(p.m) + "," + str(c.q) + ") wr S" + str(p.t), "|Sp(m,q)|^t t! / d");
               }});
  R.push_back({"psp_c2_gl", f, AClass::C2, "",
               [](const Ctx& c) { return c.q % 2 ? V{Params{}} : V{}; },
               [](const Ctx& c, const Params&) -> std::string { return c.q % 2 ? "" : "requires q odd"; },
               [](const Ctx& c, const Params&) {
                 Int h = 2 * gl_order(c.n / 2, c.q) / c.d;
                 return ev(h, psp_base_out(c), "GL(" + str(c.n / 2) + "," + str(c.q) + ").2", "2 |GL(n/2,q)| / d");
               }});
  R.push_back({"psp_c3", f, AClass::C3, "r,m",
               [](const Ctx& c) {
                 V v;
                 for (auto& p : prime_r_params(c.n, false))
                   if (p.m % 2 == 0) v.push_back(p);
                 return v;
               },
               [](const Ctx& c, const Params& p) -> std::string {
                 if (!is_prime(p.r) || p.m * p.r != c.n || p.m % 2) return "requires r prime, n = m r, m even";
                 return "";
               },
               [](const Ctx& c, const Params& p) {
                 Int h = p.r * sp_big(p.m, qpow(c.q, p.r)) / c.d;
                 return ev(h, psp_base_out(c), "Sp(" + str(p.m) + "," + str(c.q) + "^" + str(p.r) + ")", "r |Sp(m,q^r)| / d");
               }});
  R.push_back({"psp_c3_gu", f, AClass::C3, "",
               [](const Ctx& c) { return c.q % 2 ? V{Params{}} : V{}; },
               [](const Ctx& c, const Params&) -> std::string { return c.q % 2 ? "" : "requires q odd"; },
               [](const Ctx& c, const Params&) {
                 Int h = 2 * gu_order(c.n / 2, c.q) / c.d;
                 return ev(h, psp_base_out(c), "GU(" + str(c.n / 2) + "," + str(c.q) + ").2", "2 |GU(n/2,q)| / d");
               }});
  R.push_back({"psp_c4", f, AClass::C4, "n1,n2,e2",
               [](const Ctx& c) {
                 V v;
                 if (c.q % 2 == 0) return v;
                 for (int a = 2; a <= c.n; a += 2) {
                   if (c.n % a || c.n / a < 3) continue;
                   const int b = c.n / a;
                   if (b % 2)
                     v.push_back(Params{.n1 = a, .n2 = b});
                   else
                     for (int s : {1, -1}) v.push_back(Params{.n1 = a, .n2 = b, .e2 = s});
                 }
                 return v;
               },
               [](const Ctx& c, const Params& p) -> std::string {
                 if (c.q % 2 == 0) return "requires q odd";
                 if (p.n1 < 2 || p.n1 % 2 || p.n2 < 3 || p.n1 * p.n2 != c.n) return "requires n = n1 n2, n1 even, n2 >= 3";
                 if ((p.n2 % 2 == 1) != (p.e2 == 0)) return "sign must be given exactly when n2 is even";
                 if (p.n2 == 4 && p.e2 == 1) return "n2 = 4 requires minus type";
                 if (p.n1 == 2 && p.n2 == 3 && c.q == 3) return "no such maximal subgroup for (n1,n2,q) = (2,3,3)";
                 return "";
               },
               [](const Ctx& c, const Params& p) {
                 Int h = sp_order(p.n1, c.q) / c.d * so_order(p.n2, c.q, to_sign(p.e2)) * gcd(2L, static_cast<long>(p.n2));
                 return ev(h, psp_base_out(c),
                           "Sp(" + str(p.n1) + "," + str(c.q) + ") tensor GO" + sgn(p.e2) + "(" + str(p.n2) + "," + str(c.q) + ")",
                           "|PSp(n1,q)| |SO(n2,q)| (2,n2)");
               }});
  R.push_back({"psp_c5", f, AClass::C5, "r,q0", [](const Ctx& c) { return subfield_params(c, false); },
               [](const Ctx& c, const Params& p) { return need_subfield(c, p); },
               [](const Ctx& c, const Params& p) {
                 const long cc = gcd(gcd(2L, c.q - 1), static_cast<long>(p.r));
                 Int h = sp_order(c.n, p.q0) / gcd(2L, p.q0 - 1) * cc;
                 return ev(h, psp_base_out(c) / cc, "Sp(" + str(c.n) + "," + str(p.q0) + ")", "|PSp(n,q0)| (2,q-1,r)");
               }});
  R.push_back({"psp_c6", f, AClass::C6, "m",
               [](const Ctx& c) {
                 V v;
                 if (!need_prime_field(c).empty()) return v;
                 int m = 0;
                 while ((1 << m) < c.n) ++m;
                 if ((1 << m) == c.n) v.push_back(Params{.m = m});
                 return v;
               },
               [](const Ctx& c, const Params& p) -> std::string {
                 if (auto m = need_prime_field(c); !m.empty()) return m;
                 if (p.m < 2 || p.m > 30 || (1 << p.m) != c.n) return "requires n = 2^m";
                 return "";
               },
               [](const Ctx& c, const Params& p) {
                 const bool pm1 = c.p % 8 == 1 || c.p % 8 == 7;
                 Int h = qpow(2, 2 * p.m) * omega_order(2 * p.m, 2, Sign::minus) * (pm1 ? 2 : 1);
                 auto e = ev(h, pm1 ? 1 : 2,
                             "2^" + str(2 * p.m) + (pm1 ? ".SO-(" : ".Omega-(") + str(2 * p.m) + ",2)",
                             pm1 ? "2^(2m) |SO-(2m,2)|" : "2^(2m) |Omega-(2m,2)|");
                 if (c.n == 4 && c.q == 7) e.notes.push_back("anomaly: this pair appears in the symplectic list under the name PSU(4,7)");
                 return e;
               }});
  R.push_back({"psp_c7", f, AClass::C7, "m,t", [](const Ctx& c) { return power_params(c.n, 2); },
               [](const Ctx& c, const Params& p) {
                 return first({need_power(c, p), p.m % 2 ? "m must be even" : "",
                               (c.q % 2 == 0 || p.t % 2 == 0) ? "requires q t odd" : "",
                               (p.m == 2 && c.q == 3) ? "(m,q) != (2,3)" : ""});
               },
               [](const Ctx& c, const Params& p) {
                 return bound(ev(P(sp_order(p.m, c.q), p.t) * F(p.t) / c.d, psp_base_out(c),
                                 "Sp(" + str(p.m) + "," + str(c.q) + ") tensor-wr S" + str(p.t), "<= |Sp(m,q)|^t t! / d"));
               }});
}

// Sign of the form for GO(m,q)^e1 wr S_t sitting in dimension n = m t.
int go_wr_sign(int m, int t, long q, int e1) {
  const int n = m * t;
  if (m % 2 == 0) return (t % 2 == 0) ? 1 : e1;
  if (n % 2) return 0;
  return ((q - 1) * n / 4) % 2 ? -1 : 1;
}

void add_pso(std::vector<Rule>& R) {
  const Family f = Family::POmega;
  R.push_back({"pso_c2_o1p", f, AClass::C2, "",
               [](const Ctx& c) { return need_prime_field(c).empty() ? V{Params{}} : V{}; },
               [](const Ctx& c, const Params&) -> std::string {
                 if (auto m = need_prime_field(c); !m.empty()) return m;
                 if (c.n % 2 == 0) {
                   const bool plus = c.p % 4 == 1 || c.n % 4 == 0;
                   if ((c.g.eps == Sign::plus) != plus) return "form sign is fixed by the discriminant of the standard basis";
                 }
                 return "";
               },
               [](const Ctx& c, const Params&) {
                 const bool pm3 = c.p % 8 == 3 || c.p % 8 == 5;
                 Int h = qpow(2, c.n - (pm3 ? 2 : 1)) * F(c.n);
                 if (c.n % 2 == 0) h /= Int(gcd(Int(4), qpow(c.p, c.n / 2) - sign_value(c.g.eps))).get_si() / 2;
                 Int o1 = c.n % 2 ? Int(pm3 ? 2 : 1) : Int(pm3 ? 4 : 2);
                 return ev(h, o1, "GO(1," + str(c.p) + ") wr S" + str(c.n),
                           c.n % 2 ? "2^(n-2) n! (p = +-3 mod 8) or 2^(n-1) n!"
                                   : "(2^(n-2) n! or 2^(n-1) n!) / ((4, p^(n/2) - eps)/2)");
               }});
  R.push_back({"pso_c2_go_wr", f, AClass::C2, "m,t,e1",
               [](const Ctx& c) {
                 V v;
                 for (auto& w : wreath_params(c.n, 2, false)) {
                   if (w.m % 2) {
                     if (c.q % 2 == 0) continue;
                     w.e1 = 0;
                     v.push_back(w);
                   } else {
                     for (int s : {1, -1}) {
                       w.e1 = s;
                       v.push_back(w);
                     }
                   }
                 }
                 return v;
               },
               [](const Ctx& c, const Params& p) -> std::string {
                 if (auto m = need_wreath(c, p); !m.empty()) return m;
                 if (p.m < 2) return "m >= 2";
                 if ((p.m % 2 == 1) != (p.e1 == 0)) return "block sign must be given exactly when m is even";
                 if (p.m % 2 && c.q % 2 == 0) return "odd m requires q odd";
                 if (p.m == 2 && p.e1 == 1 && c.q < 5) return "q >= 5 when the blocks are GO+(2,q)";
                 if (to_sign(go_wr_sign(p.m, p.t, c.q, p.e1)) != c.g.eps) return "form sign does not match the decomposition";
                 return "";
               },
               [](const Ctx& c, const Params& p) {
                 const Sign s1 = to_sign(p.e1);
                 const Int om = omega_big(p.m, Int(c.q), s1);
                 Int h;
                 if (c.q % 2 == 0) {
                   h = P(om, p.t) * qpow(2, p.t - 1) * F(p.t);
                 } else {
                   h = P(om, p.t) * qpow(4, p.t - 1) * F(p.t);
                   if (c.n % 2 == 0) h /= Int(gcd(Int(4), qpow(c.q, c.n / 2) - sign_value(c.g.eps))).get_si() / 2;
                 }
                 auto e = bound(ev(h, pso_base_out(c),
                                   "GO" + sgn(p.e1) + "(" + str(p.m) + "," + str(c.q) + ") wr S" + str(p.t),
                                   c.q % 2 ? "<= |Omega(m,q)|^t 4^(t-1) t! / ((4, q^(n/2) - eps)/2)"
                                           : "<= |Omega(m,q)|^t 2^(t-1) t!"));
                 return e;
               }});
  R.push_back({"pso_c3_extra", f, AClass::C3, "r,m",
               [](const Ctx& c) {
                 V v;
                 for (auto& p : prime_r_params(c.n, true))
                   if (p.m >= 3) v.push_back(p);
                 return v;
               },
               [](const Ctx& c, const Params& p) -> std::string {
                 if (!is_prime(p.r) || p.r < 3 || p.m < 3 || p.m * p.r != c.n) return "requires s odd prime, m >= 3, n = m s";
                 return "";
               },
               [](const Ctx& c, const Params& p) {
                 const Sign s = p.m % 2 ? Sign::circ : c.g.eps;
                 Int h = p.r * omega_big(p.m, qpow(c.q, p.r), s);
                 return bound(ev(h, c.out, "GO" + to_string(s == Sign::circ ? Sign::none : s) + "(" + str(p.m) + "," + str(c.q) + "^" + str(p.r) + ")",
                                 "<= s |Omega(m,q^s)|"));
               }});
  R.push_back({"pso_c4_sp", f, AClass::C4, "n1,n2",
               [](const Ctx& c) {
                 V v;
                 if (c.g.eps != Sign::plus) return v;
                 for (int a = 2; a * a < c.n; a += 2)
                   if (c.n % a == 0 && (c.n / a) % 2 == 0) v.push_back(Params{.n1 = a, .n2 = c.n / a});
                 return v;
               },
               [](const Ctx& c, const Params& p) -> std::string {
                 if (c.g.eps != Sign::plus) return "requires plus type";
                 if (p.n1 < 2 || p.n1 % 2 || p.n2 % 2 || p.n1 >= p.n2 || p.n1 * p.n2 != c.n)
                   return "requires n = n1 n2, n1 < n2 both even";
                 return "";
               },
               [](const Ctx& c, const Params& p) {
                 // preimage in Omega: (Sp(n1,q) o Sp(n2,q)).(2,q-1,n/4)
                 const long d2 = gcd(2L, c.q - 1);
                 const long z = center_d(c.g) / d2;
                 Int h = sp_order(p.n1, c.q) * sp_order(p.n2, c.q) * gcd(d2, static_cast<long>(c.n / 4)) / (d2 * z);
                 return ev(h, c.out, "Sp(" + str(p.n1) + "," + str(c.q) + ") tensor Sp(" + str(p.n2) + "," + str(c.q) + ")",
                           "|Sp(n1,q)| |Sp(n2,q)| (2,q-1,n/4) / ((2,q-1) |Z(Omega)|)");
               }});
  R.push_back({"pso_c5", f, AClass::C5, "r,q0", [](const Ctx& c) { return subfield_params(c, true); },
               [](const Ctx& c, const Params& p) {
                 return first({need_subfield(c, p), p.r == 2 ? "r must be odd" : ""});
               },
               [](const Ctx& c, const Params& p) {
                 Int h = pomega_order(c.n, p.q0, c.g.eps);
                 return ev(h, c.out, "GO" + to_string(c.g.eps == Sign::circ ? Sign::none : c.g.eps) + "(" + str(c.n) + "," + str(p.q0) + ")",
                           "|POmega(n,q0)|");
               }});
  R.push_back({"pso_c6", f, AClass::C6, "m",
               [](const Ctx& c) {
                 V v;
                 if (!need_prime_field(c).empty() || c.g.eps != Sign::plus) return v;
                 int m = 0;
                 while ((1 << m) < c.n) ++m;
                 if ((1 << m) == c.n) v.push_back(Params{.m = m});
                 return v;
               },
               [](const Ctx& c, const Params& p) -> std::string {
                 if (auto m = need_prime_field(c); !m.empty()) return m;
                 if (c.g.eps != Sign::plus) return "requires plus type";
                 if (p.m < 3 || p.m > 30 || (1 << p.m) != c.n) return "requires n = 2^m";
                 return "";
               },
               [](const Ctx& c, const Params& p) {
                 const bool pm1 = c.p % 8 == 1 || c.p % 8 == 7;
                 Int h = qpow(2, 2 * p.m) * omega_order(2 * p.m, 2, Sign::plus) * (pm1 ? 2 : 1);
                 return ev(h, pm1 ? 1 : 2, "2^" + str(2 * p.m) + (pm1 ? ".SO+(" : ".Omega+(") + str(2 * p.m) + ",2)",
                           pm1 ? "2^(2m) |SO+(2m,2)|" : "2^(2m) |Omega+(2m,2)|");
               }});
  R.push_back({"pso_c7_sp", f, AClass::C7, "m,t",
               [](const Ctx& c) { return c.g.eps == Sign::plus ? power_params(c.n, 2) : V{}; },
               [](const Ctx& c, const Params& p) {
                 return first({c.g.eps != Sign::plus ? "requires plus type" : "", need_power(c, p),
                               p.m % 2 ? "m must be even" : "", (c.q % 2 && p.t % 2) ? "requires q t even" : "",
                               (p.m == 2 && c.q <= 3) ? "(m,q) not in {(2,2),(2,3)}" : "",
                               (p.m == 2 && p.t == 3) ? "(m,t) != (2,3)" : ""});
               },
               [](const Ctx& c, const Params& p) {
                 Int h = P(sp_order(p.m, c.q) / gcd(2L, c.q - 1), p.t) * qpow(2, p.t - 1) * F(p.t);
                 return bound(ev(h, c.out, "Sp(" + str(p.m) + "," + str(c.q) + ") tensor-wr S" + str(p.t),
                                 "<= |PSp(m,q)|^t 2^(t-1) t!"));
               }});
  R.push_back({"pso_c7_go", f, AClass::C7, "m,t",
               [](const Ctx& c) { return c.g.eps == Sign::circ ? power_params(c.n, 3) : V{}; },
               [](const Ctx& c, const Params& p) {
                 return first({c.g.eps != Sign::circ ? "requires odd dimension" : "", need_power(c, p),
                               p.m % 2 == 0 ? "m must be odd" : "", p.m < 3 ? "m >= 3" : "",
                               (p.m == 3 && c.q == 3) ? "(m,q) != (3,3)" : ""});
               },
               [](const Ctx& c, const Params& p) {
                 Int h = P(omega_order(p.m, c.q, Sign::circ), p.t) * qpow(2, p.t - 1) * F(p.t);
                 return ev(h, c.out, "GO(" + str(p.m) + "," + str(c.q) + ") tensor-wr S" + str(p.t),
                           "|Omega(m,q)|^t 2^(t-1) t!");
               }});
  R.push_back({"pso_c7_so", f, AClass::C7, "m,t,e1",
               [](const Ctx& c) {
                 V v;
                 if (c.g.eps != Sign::plus || c.q % 2 == 0) return v;
                 for (auto w : power_params(c.n, 4)) {
                   if (w.m % 2) continue;
                   for (int s : {1, -1}) {
                     w.e1 = s;
                     if (s == -1 && w.m < 6) continue;
                     v.push_back(w);
                   }
                 }
                 return v;
               },
               [](const Ctx& c, const Params& p) {
                 return first({c.g.eps != Sign::plus ? "requires plus type" : "", c.q % 2 == 0 ? "requires q odd" : "",
                               need_power(c, p), p.m % 2 ? "m must be even" : "",
                               (p.e1 == 1 && p.m < 4) ? "m >= 4 for plus blocks" : "",
                               (p.e1 == -1 && p.m < 6) ? "m >= 6 for minus blocks" : "",
                               (p.e1 == 0) ? "block sign required" : ""});
               },
               [](const Ctx& c, const Params& p) {
                 Int h = P(so_order(p.m, c.q, to_sign(p.e1)), p.t) * qpow(2, p.t - 1) * F(p.t);
                 return bound(ev(h, c.out, "GO" + sgn(p.e1) + "(" + str(p.m) + "," + str(c.q) + ") tensor-wr S" + str(p.t),
                                 "<= |SO(m,q)|^t 2^(t-1) t!"));
               }});
}

std::vector<Rule> build_rules() {
  std::vector<Rule> R;
  add_psl(R);
  add_psu(R);
  add_psp(R);
  add_pso(R);
  add_exceptional_rules(R);
  return R;
}

}  // namespace

const std::vector<Rule>& rules() {
  static const std::vector<Rule> r = build_rules();
  return r;
}

const Rule* find_rule(std::string_view id) {
  for (const auto& r : rules())
    if (r.formula_id == id) return &r;
  return nullptr;
}

}  // namespace detail

using detail::Ctx;
using detail::Rule;

std::string to_string(AClass c) {
  switch (c) {
    case AClass::C1: return "C1";
    case AClass::C2: return "C2";
    case AClass::C3: return "C3";
    case AClass::C4: return "C4";
    case AClass::C5: return "C5";
    case AClass::C6: return "C6";
    case AClass::C7: return "C7";
    case AClass::C8: return "C8";
    case AClass::S: return "S";
    case AClass::A: return "A";
    case AClass::Exceptional: return "Exceptional";
  }
  return "?";
}

AClass parse_aclass(std::string_view s) {
  for (AClass c : {AClass::C1, AClass::C2, AClass::C3, AClass::C4, AClass::C5, AClass::C6, AClass::C7, AClass::C8,
                   AClass::S, AClass::A, AClass::Exceptional})
    if (to_string(c) == s) return c;
  throw std::invalid_argument("unknown class '" + std::string(s) + "'");
}

std::string to_string(const Params& p) {
  std::vector<std::string> parts;
  auto add = [&](const char* k, long v) {
    if (v) parts.push_back(std::string(k) + "=" + std::to_string(v));
  };
  add("m", p.m);
  add("t", p.t);
  add("r", p.r);
  add("k", p.k);
  add("n1", p.n1);
  add("n2", p.n2);
  if (p.e1) parts.push_back(std::string("e1=") + (p.e1 > 0 ? "+" : "-"));
  if (p.e2) parts.push_back(std::string("e2=") + (p.e2 > 0 ? "+" : "-"));
  add("q0", p.q0);
  add("variant", p.variant);
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
  return s;
}

std::string SubgroupEntry::item() const {
  for (const char* pre : {"o8-triality-", "sp4-graph-"})
    if (id.rfind(pre, 0) == 0) return id.substr(std::string_view(pre).size());
  return "";
}

namespace {

std::string trim(std::string_view s) {
  size_t a = 0, b = s.size();
  while (a < b && (s[a] == ' ' || s[a] == '\t' || s[a] == '\r')) ++a;
  while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t' || s[b - 1] == '\r')) --b;
  return std::string(s.substr(a, b - a));
}

Family parse_family(std::string_view s) {
  for (Family f : {Family::PSL, Family::PSU, Family::PSp, Family::POmega})
    if (to_string(f) == s) return f;
  throw std::invalid_argument("unknown family '" + std::string(s) + "'");
}

void validate_record(const CatalogRecord& r) {
  auto fail = [&](const std::string& why) { throw CatalogError("catalog record '" + r.id + "': " + why); };
  if (r.id.empty()) fail("missing id");
  const Rule* rule = detail::find_rule(r.formula_id);
  if (!rule) fail("unknown formula '" + r.formula_id + "'");
  if (rule->family != r.family) fail("family does not match formula " + r.formula_id);
  if (rule->cls != r.cls) fail("class does not match formula " + r.formula_id);
  if (rule->params != r.params) fail("parameter list '" + r.params + "' does not match formula (" + rule->params + ")");
  if (r.type_pattern.empty()) fail("missing type");
  if (r.anchor.empty()) fail("missing anchor");
}

}  // namespace

std::vector<CatalogRecord> load_catalog(std::string_view text) {
  std::vector<CatalogRecord> out;
  std::set<std::string> ids;
  CatalogRecord cur;
  bool open = false;
  std::set<std::string> seen_keys;
  auto close = [&]() {
    if (!open) return;
    for (const char* k : {"family", "class", "type", "formula", "params", "constraints", "anchor"})
      if (!seen_keys.count(k)) throw CatalogError("catalog record '" + cur.id + "': missing field '" + k + "'");
    validate_record(cur);
    if (!ids.insert(cur.id).second) throw CatalogError("catalog record '" + cur.id + "': duplicate id");
    out.push_back(cur);
    open = false;
  };
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[' && t.back() == ']') {
      close();
      cur = CatalogRecord{};
      cur.id = trim(std::string_view(t).substr(1, t.size() - 2));
      seen_keys.clear();
      open = true;
      continue;
    }
    if (!open) throw CatalogError("catalog: field outside a record: " + t);
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw CatalogError("catalog record '" + cur.id + "': malformed line: " + t);
    const std::string key = trim(std::string_view(t).substr(0, eq));
    const std::string val = trim(std::string_view(t).substr(eq + 1));
    seen_keys.insert(key);
    try {
      if (key == "family") cur.family = parse_family(val);
      else if (key == "class") cur.cls = parse_aclass(val);
      else if (key == "type") cur.type_pattern = val;
      else if (key == "formula") cur.formula_id = val;
      else if (key == "params") cur.params = val;
      else if (key == "constraints") cur.constraints = val;
      else if (key == "anchor") cur.anchor = val;
      else throw CatalogError("unknown field '" + key + "'");
    } catch (const std::exception& e) {
      throw CatalogError("catalog record '" + cur.id + "': " + e.what());
    }
  }
  close();
  std::set<std::string> used;
  for (const auto& r : out) used.insert(r.formula_id);
  for (const auto& rule : detail::rules())
    if (!used.count(rule.formula_id)) throw CatalogError("catalog: formula '" + rule.formula_id + "' has no record");
  return out;
}

const std::vector<CatalogRecord>& catalog_records() {
  static const std::vector<CatalogRecord> recs = load_catalog(data::catalog_txt);
  return recs;
}

const CatalogRecord& catalog_record(std::string_view id) {
  for (const auto& r : catalog_records())
    if (r.id == id) return r;
  throw std::out_of_range("no catalog record '" + std::string(id) + "'");
}

namespace {

bool is_geometric_family(Family f) {
  return f == Family::PSL || f == Family::PSU || f == Family::PSp || f == Family::POmega;
}

SubgroupEntry build(const Ctx& c, const CatalogRecord& rec, const Rule& rule, const Params& p) {
  detail::Eval ev = rule.eval(c, p);
  SubgroupEntry e;
  e.id = rec.id;
  e.host = c.g;
  e.cls = rec.cls;
  e.type = ev.type;
  e.params = p;
  e.h0_order = ev.h0;
  e.o1_order = ev.o1;
  if (ev.o1 <= 0 || c.out % ev.o1 != 0)
    throw CatalogError("catalog record '" + rec.id + "': |O1| = " + ev.o1.get_str() + " does not divide |Out| for " + to_string(c.g));
  e.c = c.out / ev.o1;
  e.bound_only = ev.bound;
  e.o1_bound = ev.o1_bound;
  e.formula = ev.formula;
  e.anchor = rec.anchor;
  e.notes = ev.notes;
  return e;
}

Ctx ctx_for(const GroupId& g0) {
  if (!is_geometric_family(g0.family)) throw UnsupportedFamily(to_string(g0) + " is not a simple classical group");
  return detail::make_ctx(g0);
}

}  // namespace

std::vector<SubgroupEntry> candidates(const GroupId& g0) {
  const Ctx c = ctx_for(g0);
  std::vector<SubgroupEntry> out;
  for (const auto& rec : catalog_records()) {
    if (rec.family != g0.family || rec.cls == AClass::Exceptional) continue;
    const Rule& rule = *detail::find_rule(rec.formula_id);
    for (const Params& p : rule.enumerate(c))
      if (rule.check(c, p).empty()) out.push_back(build(c, rec, rule, p));
  }
  return out;
}

std::vector<SubgroupEntry> candidates(const GroupId& g0, AClass cls) {
  std::vector<SubgroupEntry> out;
  for (auto& e : candidates(g0))
    if (e.cls == cls) out.push_back(std::move(e));
  return out;
}

std::string constraint_violation(const GroupId& g0, std::string_view record_id, const Params& p) {
  const Ctx c = ctx_for(g0);
  const CatalogRecord& rec = catalog_record(record_id);
  if (rec.family != g0.family) return "record " + rec.id + " applies to " + to_string(rec.family) + ", not " + to_string(g0);
  return detail::find_rule(rec.formula_id)->check(c, p);
}

SubgroupEntry instantiate(const GroupId& g0, std::string_view record_id, const Params& p) {
  const Ctx c = ctx_for(g0);
  const CatalogRecord& rec = catalog_record(record_id);
  if (rec.family != g0.family)
    throw ConstraintViolation("record " + rec.id + " applies to " + to_string(rec.family) + ", not " + to_string(g0));
  const Rule& rule = *detail::find_rule(rec.formula_id);
  if (auto why = rule.check(c, p); !why.empty())
    throw ConstraintViolation(rec.id + " with (" + to_string(p) + ") in " + to_string(g0) + ": " + why);
  return build(c, rec, rule, p);
}

std::string to_string(GraphAut g) { return g == GraphAut::sp4_graph ? "sp4" : "o8"; }

GraphAut parse_graph_aut(std::string_view s) {
  if (s == "sp4" || s == "sp4_graph") return GraphAut::sp4_graph;
  if (s == "o8" || s == "o8_triality") return GraphAut::o8_triality;
  throw std::invalid_argument("unknown graph automorphism '" + std::string(s) + "' (expected sp4 or o8)");
}

std::vector<SubgroupEntry> exceptional_candidates(const GroupId& g0, GraphAut which) {
  const bool sp4 = which == GraphAut::sp4_graph;
  const bool ok = sp4 ? (g0.family == Family::PSp && g0.n == 4 && g0.q % 2 == 0 && g0.q >= 4)
                      : (g0.family == Family::POmega && g0.n == 8 && g0.eps == Sign::plus);
  if (!ok) throw WrongHost(to_string(g0) + (sp4 ? " is not PSp(4,q) with q even >= 4" : " is not POmega+(8,q)"));
  const Ctx c = detail::make_ctx(g0);
  const std::string prefix = sp4 ? "sp4-graph-" : "o8-triality-";
  std::vector<SubgroupEntry> out;
  for (const auto& rec : catalog_records()) {
    if (rec.cls != AClass::Exceptional || rec.id.rfind(prefix, 0) != 0) continue;
    const Rule& rule = *detail::find_rule(rec.formula_id);
    for (const Params& p : rule.enumerate(c))
      if (rule.check(c, p).empty()) out.push_back(build(c, rec, rule, p));
  }
  return out;
}

}  // namespace large_atlas
