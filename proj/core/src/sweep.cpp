#include "large_atlas/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <future>
#include <set>
#include <sstream>

#include "large_atlas/bounds.hpp"
#include "large_atlas/catalog.hpp"
#include "large_atlas/largeness.hpp"

namespace large_atlas {

namespace {

struct Member {
  std::vector<long> key;  // q, m, t, r, n, then tie-breakers
  std::string text;

  bool operator<(const Member& o) const { return key != o.key ? key < o.key : text < o.text; }
  bool operator==(const Member& o) const { return key == o.key && text == o.text; }
};

struct Out {
  std::vector<Member> members;
  std::vector<std::string> alarms;

  void add(std::vector<long> key, std::string text) { members.push_back({std::move(key), std::move(text)}); }
};

using Runner = std::function<void(const SweepOptions&, Out&)>;

struct Case {
  SweepCaseInfo info;
  Runner run;
};

std::string S(long v) { return std::to_string(v); }
std::string sgn(Sign s) { return s == Sign::plus ? "+" : s == Sign::minus ? "-" : "o"; }
std::string sgn(int s) { return s > 0 ? "+" : s < 0 ? "-" : "o"; }

std::string join(std::initializer_list<std::string> parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : ",") + p;
  return s;
}

long wq(long base, const SweepOptions& o) { return base * o.q_factor; }
int wi(int base, const SweepOptions& o) { return base + o.extra; }

std::vector<long> qs_upto(long qmax) {
  std::vector<long> v;
  for (const auto& pp : prime_powers_upto(qmax)) v.push_back(pp.q);
  return v;
}

std::vector<long> odd_primes_upto(long pmax) {
  std::vector<long> v;
  for (long p : primes_upto(pmax))
    if (p > 2) v.push_back(p);
  return v;
}

// Exact largeness of the catalog entry; false when the host or the parameters are inadmissible.
// Bound-only entries count as members unless the bound excludes them.
std::optional<SubgroupEntry> entry(const GroupId& g, const char* rec, const Params& p) {
  if (!in_simple_domain(g)) return std::nullopt;
  if (!constraint_violation(g, rec, p).empty()) return std::nullopt;
  return instantiate(g, rec, p);
}

bool large(const GroupId& g, const char* rec, const Params& p) {
  auto e = entry(g, rec, p);
  return e && is_large_h1(g, *e).is_large;
}

// Compare a decisive sandwich verdict with the exact check for the same subgroup.
void cross_check(Out& out, RatioCase rc, long q, int dim, bool exact_large) {
  SandwichParams sp;
  sp.dim = dim;
  if (!sandwich_applies(rc, q, sp)) return;
  const BoundTriple b = sandwich(rc, q, sp);
  const bool contradiction = (b.verdict == Verdict::CertainlyLarge && !exact_large) ||
                             (b.verdict == Verdict::CertainlyNotLarge && exact_large);
  if (contradiction)
    out.alarms.push_back(to_string(rc) + " q=" + S(q) + " m=" + S(dim) + ": sandwich says " + to_string(b.verdict) +
                         ", exact check says " + (exact_large ? "large" : "not large"));
}

// Block-dimension sweeps with t = 3 (or r = 3): q is a member when some m makes the entry large.
void t3_sweep(Out& out, const SweepOptions& o, long qbase, Family fam, const char* rec, bool field_ext, RatioCase rc) {
  for (long q : qs_upto(wq(qbase, o))) {
    bool any = false;
    for (int m = 1; m <= wi(4, o); ++m) {
      const GroupId g = GroupId::classical(fam, 3 * m, q);
      Params p;
      p.m = m;
      if (field_ext) p.r = 3;
      else p.t = 3;
      if (!in_simple_domain(g)) continue;
      const bool l = large(g, rec, p);
      any = any || l;
      if (entry(g, rec, p)) cross_check(out, rc, q, m, l);
    }
    if (any) out.add({q}, S(q));
  }
}

std::vector<Case> build_cases() {
  std::vector<Case> C;
  auto add = [&](std::string id, std::string fam, std::string fields, std::string desc, std::string anchor, Runner r) {
    C.push_back({{std::move(id), std::move(fam), std::move(fields), std::move(desc), std::move(anchor)}, std::move(r)});
  };

  add("psl-c2-t3", "psl", "q", "PSL(3m,q) with GL(m,q) wr S3 large for some m", "linear groups, C2 lemma, t = 3",
      [](const SweepOptions& o, Out& out) { t3_sweep(out, o, 256, Family::PSL, "psl-c2-wr", false, RatioCase::PSL_C2_t3); });
  add("psl-c3-r3", "psl", "q", "PSL(3m,q) with GL(m,q^3) large for some m", "linear groups, C3 lemma, r = 3",
      [](const SweepOptions& o, Out& out) { t3_sweep(out, o, 256, Family::PSL, "psl-c3", true, RatioCase::PSL_C3_r3); });
  add("psl-c3-r5", "psl", "q,n", "PSL(n,q) with GL(n/r,q^r) large, r >= 5 prime", "linear groups, C3 lemma, r >= 5",
      [](const SweepOptions& o, Out& out) {
        for (long r : primes_upto(wi(7, o))) {
          if (r < 5) continue;
          for (long q : qs_upto(wq(32, o)))
            for (int m = 1; m <= wi(3, o); ++m) {
              const int n = static_cast<int>(r) * m;
              if (large(GroupId::psl(n, q), "psl-c3", Params{.m = m, .r = static_cast<int>(r)}))
                out.add({q, m, 0, r, n}, join({S(q), S(n)}));
            }
        }
      });
  add("psu-c2-t3", "psu", "q", "PSU(3m,q) with GU(m,q) wr S3 large for some m", "unitary groups, C2 lemma, t = 3",
      [](const SweepOptions& o, Out& out) { t3_sweep(out, o, 200, Family::PSU, "psu-c2-wr", false, RatioCase::PSU_C2_t3); });
  add("psu-c2-t4plus", "psu", "q,m,t", "PSU(mt,q) with GU(m,q) wr St large, t >= 4", "unitary groups, C2 lemma, t >= 4",
      [](const SweepOptions& o, Out& out) {
        for (long q : qs_upto(wq(32, o)))
          for (int m = 1; m <= wi(4, o); ++m)
            for (int t = 4; t <= wi(16, o); ++t)
              if (large(GroupId::psu(m * t, q), "psu-c2-wr", Params{.m = m, .t = t}))
                out.add({q, m, t}, join({S(q), S(m), S(t)}));
      });
  add("psu-c3-r3", "psu", "q", "PSU(3m,q) with GU(m,q^3) large for some m", "unitary groups, C3 lemma, r = 3",
      [](const SweepOptions& o, Out& out) { t3_sweep(out, o, 256, Family::PSU, "psu-c3", true, RatioCase::PSU_C3_r3); });
  add("psp-c2-t5", "psp", "q,m,t", "PSp(mt,q) with Sp(m,q) wr St large, t >= 4, (m,t) != (2,4)",
      "symplectic groups, C2 lemma, t >= 4",
      [](const SweepOptions& o, Out& out) {
        for (long q : qs_upto(wq(32, o)))
          for (int m = 2; m <= wi(6, o); m += 2)
            for (int t = 4; t <= wi(12, o); ++t) {
              if (m == 2 && t == 4) continue;
              if (large(GroupId::psp(m * t, q), "psp-c2-wr", Params{.m = m, .t = t}))
                out.add({q, m, t}, join({S(q), S(m), S(t)}));
            }
      });
  add("psp-c6", "psp", "p,n", "PSp(2^m,p) with 2^(1+2m).Omega-(2m,2) large", "symplectic groups, C6 lemma",
      [](const SweepOptions& o, Out& out) {
        for (long p : odd_primes_upto(wq(64, o)))
          for (int m = 2; m <= std::min(wi(4, o), 8); ++m) {
            const int n = 1 << m;
            if (large(GroupId::psp(n, p), "psp-c6", Params{.m = m})) out.add({p, 0, 0, 0, n}, join({S(p), S(n)}));
          }
      });
  add("psl-c6", "psl", "p,n,H0", "PSL(n,p) with a C6 normaliser large", "linear groups, C6 lemma",
      [](const SweepOptions& o, Out& out) {
        for (long p : odd_primes_upto(wq(128, o)))
          for (int n : {2, 3, 4, 8}) {
            const GroupId g = GroupId::psl(n, p);
            auto e = entry(g, "psl-c6", Params{.variant = n});
            if (e && is_large_h1(g, *e).is_large) out.add({p, 0, 0, 0, n}, join({S(p), S(n), e->type}));
          }
      });
  add("psu-c6", "psu", "p,n,H0", "PSU(n,p) with a C6 normaliser large", "unitary groups, C6 lemma",
      [](const SweepOptions& o, Out& out) {
        for (long p : odd_primes_upto(wq(128, o)))
          for (int n : {3, 4, 8}) {
            const GroupId g = GroupId::psu(n, p);
            auto e = entry(g, "psu-c6", Params{.variant = n});
            if (e && is_large_h1(g, *e).is_large) out.add({p, 0, 0, 0, n}, join({S(p), S(n), e->type}));
          }
      });
  add("pso-c2-o1p", "pso", "p,n,eps", "POmega(n,p) with GO(1,p) wr Sn large", "orthogonal groups, C2 lemma, one-dimensional blocks",
      [](const SweepOptions& o, Out& out) {
        for (long p : odd_primes_upto(wq(13, o)))
          for (int n = 7; n <= wi(20, o); ++n)
            for (Sign s : n % 2 ? std::vector<Sign>{Sign::circ} : std::vector<Sign>{Sign::plus, Sign::minus})
              if (large(GroupId::pomega(n, p, s), "pso-c2-o1p", Params{}))
                out.add({p, 0, 0, 0, n}, join({S(p), S(n), sgn(s)}));
      });
  add("pso-c2-go-wr", "pso", "q,m,t,eps,e1", "POmega(mt,q) with GO(m,q) wr St large, m >= 2, t >= 3",
      "orthogonal groups, C2 lemma, blocks of dimension m >= 2",
      [](const SweepOptions& o, Out& out) {
        for (long q : qs_upto(wq(9, o)))
          for (int m = 2; m <= wi(6, o); ++m)
            for (int t = 3; t <= wi(6, o); ++t) {
              const int n = m * t;
              for (Sign s : n % 2 ? std::vector<Sign>{Sign::circ} : std::vector<Sign>{Sign::plus, Sign::minus})
                for (int e1 : m % 2 ? std::vector<int>{0} : std::vector<int>{1, -1})
                  if (large(GroupId::pomega(n, q, s), "pso-c2-go-wr", Params{.m = m, .t = t, .e1 = e1}))
                    out.add({q, m, t, 0, n, -sign_value(s), -e1}, join({S(q), S(m), S(t), sgn(s), sgn(e1)}));
            }
      });
  add("pso-c6", "pso", "p,n", "POmega+(2^m,p) with 2^(1+2m).Omega+(2m,2) large", "orthogonal groups, C6 lemma",
      [](const SweepOptions& o, Out& out) {
        for (long p : odd_primes_upto(wq(64, o)))
          for (int m = 3; m <= std::min(wi(4, o), 8); ++m) {
            const int n = 1 << m;
            if (large(GroupId::pomega(n, p, Sign::plus), "pso-c6", Params{.m = m}))
              out.add({p, 0, 0, 0, n}, join({S(p), S(n)}));
          }
      });

  // Cases the analysis proves empty.
  add("psl-c4", "psl", "q,n1,n2", "PSL(n1 n2,q) with a tensor product subgroup large", "linear groups, C4 lemma",
      [](const SweepOptions& o, Out& out) {
        for (long q : qs_upto(wq(64, o)))
          for (int a = 2; a <= wi(6, o); ++a)
            for (int b = a + 1; b <= wi(12, o); ++b)
              if (large(GroupId::psl(a * b, q), "psl-c4", Params{.n1 = a, .n2 = b}))
                out.add({q, 0, 0, 0, a * b}, join({S(q), S(a), S(b)}));
      });
  add("psu-c4", "psu", "q,n1,n2", "PSU(n1 n2,q) with a tensor product subgroup large", "unitary groups, C4 lemma",
      [](const SweepOptions& o, Out& out) {
        for (long q : qs_upto(wq(64, o)))
          for (int a = 2; a <= wi(6, o); ++a)
            for (int b = a + 1; b <= wi(12, o); ++b)
              if (large(GroupId::psu(a * b, q), "psu-c4", Params{.n1 = a, .n2 = b}))
                out.add({q, 0, 0, 0, a * b}, join({S(q), S(a), S(b)}));
      });
  auto tensor_power = [](Family fam, const char* rec, int mmin, int mstep, bool odd_t_only) {
    return [=](const SweepOptions& o, Out& out) {
      for (long q : qs_upto(wq(32, o)))
        for (int m = mmin; m <= wi(6, o); m += mstep)
          for (int t = 2; t <= wi(6, o); ++t) {
            if (odd_t_only && t % 2 == 0) continue;
            long n = 1;
            for (int i = 0; i < t; ++i) n *= m;
            if (n > 256) break;
            if (large(GroupId::classical(fam, static_cast<int>(n), q), rec, Params{.m = m, .t = t}))
              out.add({q, m, t, 0, n}, join({S(q), S(m), S(t)}));
          }
    };
  };
  add("psl-c7", "psl", "q,m,t", "PSL(m^t,q) with GL(m,q) tensor-wr St not excluded by the order bound",
      "linear groups, C7 lemma", tensor_power(Family::PSL, "psl-c7", 3, 1, false));
  add("psu-c7", "psu", "q,m,t", "PSU(m^t,q) with GU(m,q) tensor-wr St not excluded by the order bound",
      "unitary groups, C7 lemma", tensor_power(Family::PSU, "psu-c7", 3, 1, false));
  add("psp-c7", "psp", "q,m,t", "PSp(m^t,q) with Sp(m,q) tensor-wr St not excluded by the order bound",
      "symplectic groups, C7 lemma", tensor_power(Family::PSp, "psp-c7", 2, 2, true));
  add("psp-c4", "psp", "q,n1,n2,e2", "PSp(n1 n2,q) with Sp(n1,q) tensor GO(n2,q) large", "symplectic groups, C4 lemma",
      [](const SweepOptions& o, Out& out) {
        for (long q : qs_upto(wq(64, o))) {
          if (q % 2 == 0) continue;
          for (int a = 2; a <= wi(8, o); a += 2)
            for (int b = 3; b <= wi(12, o); ++b)
              for (int s : b % 2 ? std::vector<int>{0} : std::vector<int>{1, -1})
                if (large(GroupId::psp(a * b, q), "psp-c4", Params{.n1 = a, .n2 = b, .e2 = s}))
                  out.add({q, 0, 0, 0, a * b}, join({S(q), S(a), S(b), sgn(s)}));
        }
      });
  add("psp-c3-r5", "psp", "q,m,r", "PSp(mr,q) with Sp(m,q^r) large, r >= 5 prime", "symplectic groups, C3 lemma, r >= 5",
      [](const SweepOptions& o, Out& out) {
        for (long r : primes_upto(wi(7, o))) {
          if (r < 5) continue;
          for (long q : qs_upto(wq(32, o)))
            for (int m = 2; m <= wi(6, o); m += 2)
              if (large(GroupId::psp(m * static_cast<int>(r), q), "psp-c3", Params{.m = m, .r = static_cast<int>(r)}))
                out.add({q, m, 0, r}, join({S(q), S(m), S(r)}));
        }
      });
  add("pso-c7", "pso", "q,n,type", "POmega(m^t,q) with a C7 subgroup not excluded", "orthogonal groups, C7 lemma",
      [](const SweepOptions& o, Out& out) {
        for (long q : qs_upto(wq(16, o)))
          for (int m = 2; m <= wi(6, o); ++m)
            for (int t = 2; t <= wi(4, o); ++t) {
              long n = 1;
              for (int i = 0; i < t; ++i) n *= m;
              if (n > 256) break;
              if (n < 7) continue;
              for (Sign s : n % 2 ? std::vector<Sign>{Sign::circ} : std::vector<Sign>{Sign::plus, Sign::minus}) {
                const GroupId g = GroupId::pomega(static_cast<int>(n), q, s);
                if (!in_simple_domain(g)) continue;
                for (const auto& e : candidates(g, AClass::C7))
                  if (e.params.m == m && e.params.t == t && is_large_h1(g, e).is_large)
                    out.add({q, m, t, 0, n}, join({S(q), S(n), e.type}));
              }
            }
      });
  add("pso-c3-extra", "pso", "q,n,s", "POmega(ms,q) with GO(m,q^s) large, s odd prime, m >= 3", "orthogonal groups, C3 lemma",
      [](const SweepOptions& o, Out& out) {
        for (long s : primes_upto(wi(7, o))) {
          if (s < 3) continue;
          for (long q : qs_upto(wq(16, o)))
            for (int m = 3; m <= wi(8, o); ++m) {
              const int n = m * static_cast<int>(s);
              for (Sign e : n % 2 ? std::vector<Sign>{Sign::circ} : std::vector<Sign>{Sign::plus, Sign::minus})
                if (large(GroupId::pomega(n, q, e), "pso-c3-extra", Params{.m = m, .r = static_cast<int>(s)}))
                  out.add({q, m, 0, s, n}, join({S(q), S(n), S(s)}));
            }
        }
      });
  add("pso-c4-large-n", "pso", "q,n1,n2", "POmega+(n1 n2,q) with Sp(n1,q) tensor Sp(n2,q), n >= 16", "orthogonal groups, C4 lemma",
      [](const SweepOptions& o, Out& out) {
        for (long q : qs_upto(wq(16, o)))
          for (int a = 2; a <= wi(6, o); a += 2)
            for (int b = a + 2; b <= wi(16, o); b += 2) {
              if (a * b < 16) continue;
              if (large(GroupId::pomega(a * b, q, Sign::plus), "pso-c4-sp", Params{.n1 = a, .n2 = b}))
                out.add({q, 0, 0, 0, a * b}, join({S(q), S(a), S(b)}));
            }
      });

  // Collection S.
  add("tableA-cutoff", "s", "p,dmax", "largest d with (d!)^3 >= |G0| for the fully deleted module host, p = 2 and p odd",
      "alternating socle lemma, d <= 28 computation",
      [](const SweepOptions& o, Out& out) {
        long best2 = 0, best_odd = 0;
        for (long p : primes_upto(wq(13, o)))
          for (int d = 5; d <= 28 + o.extra * 7; ++d) {
            const Int f = factorial(d);
            if (f * f * f < order(canonicalize(collection_a_host(d, p)))) continue;
            long& b = p == 2 ? best2 : best_odd;
            b = std::max<long>(b, d);
          }
        if (best2) out.add({0, 0, 0, 0, best2}, "2," + S(best2));
        if (best_odd) out.add({1, 0, 0, 0, best_odd}, "odd," + S(best_odd));
      });
  add("s-collection-n-bound", "s", "d", "(d-2)(d-3)/2 - 3 < 3d log2((d+1)/2)", "alternating socle lemma, a-priori frontier",
      [](const SweepOptions& o, Out& out) {
        for (int d = 5; d <= 28 + o.extra * 8; ++d) {
          const long e2 = static_cast<long>(d - 2) * (d - 3) / 2 - 3 + 3L * d;
          if (ipow(Int(2), static_cast<unsigned long>(e2)) < ipow(Int(d + 1), static_cast<unsigned long>(3 * d)))
            out.add({0, 0, 0, 0, d}, S(d));
        }
      });
  add("s-liebeck-n-bound", "s", "n", "18n >= n(n-1) - 6", "non-alternating socle lemma, general bound",
      [](const SweepOptions& o, Out& out) {
        for (long n = 2; n <= 20 + 8L * o.extra; ++n)
          if (18 * n >= n * (n - 1) - 6) out.add({0, 0, 0, 0, n}, S(n));
      });
  add("s-small-n-bound", "s", "n", "12n + 24 > n(n-1) - 6", "non-alternating socle lemma, small-subgroup bound",
      [](const SweepOptions& o, Out& out) {
        for (long n = 2; n <= 14 + 8L * o.extra; ++n)
          if (12 * n + 24 > n * (n - 1) - 6) out.add({0, 0, 0, 0, n}, S(n));
      });

  // Graph automorphism cases.
  add("sp4-graph", "exceptional", "q,item", "Sp(4,q), q = 2^e, 2 <= e <= 8, graph automorphism: candidates with H1 large",
      "Sp(4,2^e) graph automorphism lemma",
      [](const SweepOptions&, Out& out) {  // the lemma covers every q; the grid stays fixed
        for (int e = 2; e <= 8; ++e) {
          const long q = 1L << e;
          const GroupId g = GroupId::psp(4, q);
          for (const auto& x : exceptional_candidates(g, GraphAut::sp4_graph))
            if (is_large_h1(g, x).is_large) out.add({q, 0, 0, 0, std::stol(x.item())}, join({S(q), x.item()}));
        }
      });
  add("o8-triality", "exceptional", "q,item", "POmega+(8,q) with triality: items (iv)-(xiii) not excluded with O1 = Out",
      "POmega+(8,q) triality lemma",
      [](const SweepOptions& o, Out& out) {
        static const std::set<std::string> items = {"iv", "v", "vi", "viii", "x", "xii", "xiii"};
        for (long q : qs_upto(wq(32, o))) {
          const GroupId g = GroupId::pomega(8, q, Sign::plus);
          for (const auto& x : exceptional_candidates(g, GraphAut::o8_triality))
            if (items.count(x.item()) && is_large_h1(g, x).is_large) out.add({q}, join({S(q), x.item()}));
        }
      });
  return C;
}

const std::vector<Case>& cases() {
  static const std::vector<Case> c = build_cases();
  return c;
}

const Case& find_case(std::string_view id) {
  for (const auto& c : cases())
    if (c.info.id == id) return c;
  throw UnknownSweepCase("unknown sweep case '" + std::string(id) + "'");
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

}  // namespace

const std::vector<SweepCaseInfo>& sweep_cases() {
  static const std::vector<SweepCaseInfo> v = [] {
    std::vector<SweepCaseInfo> out;
    for (const auto& c : cases()) out.push_back(c.info);
    return out;
  }();
  return v;
}

const SweepCaseInfo& sweep_case(std::string_view id) { return find_case(id).info; }

SweepReport compute_case(std::string_view id, const SweepOptions& opt) {
  const Case& c = find_case(id);
  const auto t0 = std::chrono::steady_clock::now();
  Out out;
  c.run(opt, out);
  std::sort(out.members.begin(), out.members.end());
  out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
  SweepReport r;
  r.case_id = c.info.id;
  r.fields = c.info.fields;
  for (auto& m : out.members) r.members.push_back(std::move(m.text));
  r.alarms = std::move(out.alarms);
  r.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<std::string> parse_golden(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

std::vector<std::string> load_golden(const std::string& dir, std::string_view id) {
  const std::string path = dir + "/" + std::string(id) + ".txt";
  std::ifstream f(path);
  if (!f) throw GoldenMissing("golden file not found: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_golden(ss.str());
}

void diff_against(SweepReport& r, const std::vector<std::string>& golden) {
  const std::set<std::string> have(r.members.begin(), r.members.end());
  const std::set<std::string> want(golden.begin(), golden.end());
  r.missing.clear();
  r.extra.clear();
  for (const auto& g : golden)
    if (!have.count(g)) r.missing.push_back(g);
  for (const auto& m : r.members)
    if (!want.count(m)) r.extra.push_back(m);
}

SweepReport run_case(std::string_view id, const std::string& golden_dir, const SweepOptions& opt) {
  find_case(id);
  const auto golden = load_golden(golden_dir, id);
  SweepReport r = compute_case(id, opt);
  diff_against(r, golden);
  return r;
}

std::vector<SweepReport> run_all(const std::string& golden_dir, const std::string& filter, const SweepOptions& opt,
                                 int jobs) {
  std::vector<std::string> ids;
  for (const auto& c : cases())
    if (filter.empty() || c.info.family == filter) ids.push_back(c.info.id);
  for (const auto& id : ids) load_golden(golden_dir, id);  // fail early on a missing file
  std::vector<SweepReport> out(ids.size());
  if (jobs <= 1) {
    for (size_t i = 0; i < ids.size(); ++i) out[i] = run_case(ids[i], golden_dir, opt);
    return out;
  }
  std::vector<std::future<SweepReport>> fut;
  size_t next = 0;
  while (next < ids.size() || !fut.empty()) {
    while (next < ids.size() && fut.size() < static_cast<size_t>(jobs)) {
      fut.push_back(std::async(std::launch::async, [&, i = next] { return run_case(ids[i], golden_dir, opt); }));
      ++next;
    }
    // Collect in submission order so the output order matches the registry.
    const size_t done = next - fut.size();
    out[done] = fut.front().get();
    fut.erase(fut.begin());
  }
  return out;
}

}  // namespace large_atlas
