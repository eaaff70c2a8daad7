#include "large_atlas/bounds.hpp"

namespace large_atlas {

namespace {

ExactRatio one() { return ExactRatio(1); }
ExactRatio iq(long q, unsigned long k) { return inv_pow(q, k); }
ExactRatio qpow(long q, unsigned long k) { return ExactRatio(ipow(q, k)); }

ExactRatio pow_ratio(const ExactRatio& r, unsigned k) {
  ExactRatio out = 1;
  for (unsigned i = 0; i < k; ++i) out *= r;
  return out;
}

OrderBounds make(const ExactRatio& lo, const ExactRatio& up, unsigned long n_exp, long q, Int actual,
                 bool lo_strict, bool up_strict, std::string formula) {
  OrderBounds b;
  b.lower_coef = lo;
  b.upper_coef = up;
  b.exponent = n_exp;
  b.lower = lo * qpow(q, n_exp);
  b.upper = up * qpow(q, n_exp);
  b.lower_strict = lo_strict;
  b.upper_strict = up_strict;
  b.actual = std::move(actual);
  b.formula = std::move(formula);
  return b;
}

// Coefficient pair (lower, upper) of the GL / GU lines, used by the sandwich brackets.
ExactRatio gl_lo(long q) { return one() - iq(q, 1) - iq(q, 2); }
ExactRatio gl_up(long q) { return (one() - iq(q, 1)) * (one() - iq(q, 2)); }

Sign orth_sign(int n, Sign eps) { return n % 2 ? Sign::circ : eps; }

BoundFamily so_family(Sign eps) {
  switch (eps) {
    case Sign::plus: return BoundFamily::SOplus;
    case Sign::minus: return BoundFamily::SOminus;
    default: return BoundFamily::SOcirc;
  }
}

}  // namespace

bool OrderBounds::holds() const {
  const ExactRatio a(actual);
  const bool lo = lower_strict ? lower < a : lower <= a;
  const bool up = upper_strict ? a < upper : a <= upper;
  return lo && up;
}

bool OrderBounds::holds_lt_le() const {
  const ExactRatio a(actual);
  return lower < a && a <= upper;
}

BoundFamily parse_bound_family(std::string_view s) {
  for (auto f : all_bound_families())
    if (to_string(f) == s) return f;
  throw OutOfRange("unknown bound family: " + std::string(s));
}

std::string to_string(BoundFamily f) {
  switch (f) {
    case BoundFamily::GL: return "GL";
    case BoundFamily::GU: return "GU";
    case BoundFamily::Sp: return "Sp";
    case BoundFamily::SOcirc: return "SOcirc";
    case BoundFamily::SOplus: return "SOplus";
    case BoundFamily::SOminus: return "SOminus";
  }
  return "?";
}

const std::vector<BoundFamily>& all_bound_families() {
  static const std::vector<BoundFamily> v{BoundFamily::GL,     BoundFamily::GU,     BoundFamily::Sp,
                                          BoundFamily::SOcirc, BoundFamily::SOplus, BoundFamily::SOminus};
  return v;
}

OrderBounds order_bounds(BoundFamily f, int n, long q) {
  q = parse_prime_power(q).q;
  const std::string where = to_string(f) + "(" + std::to_string(n) + "," + std::to_string(q) + ")";
  const unsigned long nn = static_cast<unsigned long>(n);
  switch (f) {
    case BoundFamily::GL:
      if (n < 2) throw OutOfRange(where + ": needs n >= 2");
      return make(gl_lo(q), gl_up(q), nn * nn, q, gl_order(n, q), true, false,
                  "(1 - q^-1 - q^-2) q^(n^2) < |GL(n,q)| <= (1 - q^-1)(1 - q^-2) q^(n^2)");
    case BoundFamily::GU:
      if (n < 2) throw OutOfRange(where + ": needs n >= 2");
      return make((one() + iq(q, 1)) * (one() - iq(q, 2)),
                  (one() + iq(q, 1)) * (one() - iq(q, 2)) * (one() + iq(q, 3)), nn * nn, q, gu_order(n, q),
                  true, false,
                  "(1 + q^-1)(1 - q^-2) q^(n^2) < |GU(n,q)| <= (1 + q^-1)(1 - q^-2)(1 + q^-3) q^(n^2)");
    case BoundFamily::Sp:
      if (n < 4 || n % 2) throw OutOfRange(where + ": needs even n >= 4");
      return make(one() - iq(q, 2) - iq(q, 4), (one() - iq(q, 2)) * (one() - iq(q, 4)), nn * (nn + 1) / 2, q,
                  sp_order(n, q), true, false,
                  "(1 - q^-2 - q^-4) q^(n(n+1)/2) < |Sp(n,q)| <= (1 - q^-2)(1 - q^-4) q^(n(n+1)/2)");
    case BoundFamily::SOcirc:
      if (n < 5 || n % 2 == 0) throw OutOfRange(where + ": needs odd n >= 5");
      return make(one() - iq(q, 2) - iq(q, 4), (one() - iq(q, 2)) * (one() - iq(q, 4)), nn * (nn - 1) / 2, q,
                  so_order(n, q, Sign::circ), true, true,
                  "(1 - q^-2 - q^-4) q^(n(n-1)/2) < |SO(n,q)| < (1 - q^-2)(1 - q^-4) q^(n(n-1)/2)");
    case BoundFamily::SOplus:
    case BoundFamily::SOminus: {
      if (n < 6 || n % 2) throw OutOfRange(where + ": needs even n >= 6");
      const bool plus = f == BoundFamily::SOplus;
      const Sign s = plus ? Sign::plus : Sign::minus;
      const Int actual = so_order(n, q, s) / gcd(2L, q);
      const ExactRatio base_lo = one() - iq(q, 2) - iq(q, 4);
      const ExactRatio base_up = (one() - iq(q, 2)) * (one() - iq(q, 4));
      const unsigned long h = nn / 2;
      if (plus)
        return make(base_lo * (one() - iq(q, h)), base_up, nn * (nn - 1) / 2, q, actual, true, true,
                    "(1 - q^-2 - q^-4)(1 - q^-(n/2)) q^(n(n-1)/2) < |SO+(n,q)|/(2,q) < (1 - q^-2)(1 - q^-4) q^(n(n-1)/2)");
      return make(base_lo, base_up * (one() + iq(q, h)), nn * (nn - 1) / 2, q, actual, true, true,
                  "(1 - q^-2 - q^-4) q^(n(n-1)/2) < |SO-(n,q)|/(2,q) < (1 - q^-2)(1 - q^-4)(1 + q^-(n/2)) q^(n(n-1)/2)");
    }
  }
  throw OutOfRange(where);
}

OrderBounds simple_order_bounds(const GroupId& g) {
  validate(g);
  const long q = g.q;
  const unsigned long n = static_cast<unsigned long>(g.n);
  const Int actual = order(g);
  switch (g.family) {
    case Family::PSL:
      return make(ExactRatio(1, q * q), one() - iq(q, 2), n * n, q, actual, true, false,
                  "q^(n^2-2) < |PSL(n,q)| <= (1 - q^-2) q^(n^2-1)");
    case Family::PSU:
      return make((one() - iq(q, 1)) / (q * q), (one() - iq(q, 2)) * (one() + iq(q, 3)) / q, n * n, q, actual,
                  true, false, "(1 - q^-1) q^(n^2-2) < |PSU(n,q)| <= (1 - q^-2)(1 + q^-3) q^(n^2-1)");
    case Family::PSp:
      return make(ratio(1L, 2 * gcd(2L, q - 1)), one(), n * (n + 1) / 2, q, actual, true, true,
                  "q^(n(n+1)/2) / (2 (2,q-1)) < |PSp(n,q)| < q^(n(n+1)/2)");
    case Family::POmega:
      return make(ratio(1L, 4 * gcd(2L, static_cast<long>(n))), one(), n * (n - 1) / 2, q, actual, true, true,
                  "q^(n(n-1)/2) / (4 (2,n)) < |POmega(n,q)| < q^(n(n-1)/2)");
    default: break;
  }
  throw OutOfRange("no simple-group bound for " + to_string(g));
}

ExactRatio classical_floor(int n, long q) {
  return ExactRatio(ipow(q, static_cast<unsigned long>(n) * (n - 1) / 2)) / 8;
}

bool log_square_bound(const PrimePower& pp) { return static_cast<long>(pp.e) * pp.e <= pp.q; }

bool factorial_bound(unsigned long t) {
  return ipow(Int(2), t) * factorial(t) < ipow(Int(static_cast<long>(t) + 1), t);
}

RatioCase parse_ratio_case(std::string_view s) {
  for (auto c : all_ratio_cases())
    if (to_string(c) == s) return c;
  throw UnknownCase("unknown ratio case: " + std::string(s));
}

std::string to_string(RatioCase c) {
  switch (c) {
    case RatioCase::PSL_C2_t3: return "PSL-C2-t3";
    case RatioCase::PSL_C3_r3: return "PSL-C3-r3";
    case RatioCase::PSL_C5_r3: return "PSL-C5-r3";
    case RatioCase::PSU_C2_t3: return "PSU-C2-t3";
    case RatioCase::PSU_C3_r3: return "PSU-C3-r3";
    case RatioCase::PO_C5_r3: return "PO-C5-r3";
    case RatioCase::O8_triality_3D4: return "O8-triality-3D4";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::CertainlyLarge: return "CertainlyLarge";
    case Verdict::CertainlyNotLarge: return "CertainlyNotLarge";
    case Verdict::Undetermined: return "Undetermined";
  }
  return "?";
}

const std::vector<RatioCase>& all_ratio_cases() {
  static const std::vector<RatioCase> v{RatioCase::PSL_C2_t3, RatioCase::PSL_C3_r3, RatioCase::PSL_C5_r3,
                                        RatioCase::PSU_C2_t3, RatioCase::PSU_C3_r3, RatioCase::PO_C5_r3,
                                        RatioCase::O8_triality_3D4};
  return v;
}

namespace {

int default_dim(RatioCase c) {
  switch (c) {
    case RatioCase::PSL_C2_t3: return 2;
    case RatioCase::PSL_C5_r3: return 2;
    case RatioCase::PO_C5_r3: return 8;
    case RatioCase::O8_triality_3D4: return 8;
    default: return 1;
  }
}

Sign default_eps(RatioCase c, int dim) {
  if (c == RatioCase::PO_C5_r3) return dim % 2 ? Sign::circ : Sign::plus;
  if (c == RatioCase::O8_triality_3D4) return Sign::plus;
  return Sign::none;
}

std::string why_not(RatioCase c, long q, const SandwichParams& p) {
  const auto pp = try_prime_power(q);
  if (!pp) return std::to_string(q) + " is not a prime power";
  const int dim = p.dim ? p.dim : default_dim(c);
  const Sign eps = p.eps != Sign::none ? p.eps : default_eps(c, dim);
  switch (c) {
    case RatioCase::PSL_C2_t3:
      if (dim < 2) return "the GL bracket needs block dimension m >= 2";
      return "";
    case RatioCase::PSL_C3_r3:
      return dim >= 1 ? "" : "m >= 1";
    case RatioCase::PSU_C2_t3:
    case RatioCase::PSU_C3_r3:
      if (dim < 1) return "m >= 1";
      if (dim == 1 && q == 2) return "PSU(3,2) is not simple";
      return "";
    case RatioCase::PSL_C5_r3:
      return dim >= 2 ? "" : "n >= 2";
    case RatioCase::PO_C5_r3:
      if (dim < 7) return "n >= 7";
      if (dim % 2 == 1 && q % 2 == 0) return "odd n needs odd q";
      if ((dim % 2 == 1) != (eps == Sign::circ)) return "sign does not match the parity of n";
      return "";
    case RatioCase::O8_triality_3D4:
      if (dim != 8 || eps != Sign::plus) return "host is POmega+(8, q0^3)";
      if (q % 2) return "q0 must be even";
      return "";
  }
  return "unknown case";
}

}  // namespace

bool sandwich_applies(RatioCase c, long q, const SandwichParams& p) { return why_not(c, q, p).empty(); }

BoundTriple sandwich(RatioCase c, long q, const SandwichParams& p) {
  if (auto msg = why_not(c, q, p); !msg.empty()) throw OutOfRange(to_string(c) + " at q=" + std::to_string(q) + ": " + msg);
  const PrimePower pp = parse_prime_power(q);
  BoundTriple b;
  b.rcase = c;
  b.q = q;
  b.dim = p.dim ? p.dim : default_dim(c);
  b.eps = p.eps != Sign::none ? p.eps : default_eps(c, b.dim);
  const int m = b.dim;
  const long e = pp.e;
  const ExactRatio i1 = iq(q, 1), i2 = iq(q, 2), i3 = iq(q, 3), i6 = iq(q, 6);
  const long q3 = q * q * q;
  switch (c) {
    case RatioCase::PSL_C2_t3: {
      b.g0 = GroupId::psl(3 * m, q);
      const long d = center_d(b.g0);
      b.h0_order = ipow(gl_order(m, q), 3) * 6 / ((q - 1) * d);
      b.o1_order = out_order(b.g0);
      b.exact = ratio(ipow(gl_order(m, q), 9), gl_order(3 * m, q));
      b.lower = pow_ratio(gl_lo(q), 9) / gl_up(q);
      b.upper = pow_ratio(gl_up(q), 9) / gl_lo(q);
      b.closed_threshold = ratio((q - 1) * (q - 1), 864 * e * e);
      break;
    }
    case RatioCase::PSL_C3_r3: {
      b.g0 = GroupId::psl(3 * m, q);
      const long d = center_d(b.g0);
      b.h0_order = 3 * gl_order(m, q3) / ((q - 1) * d);
      b.o1_order = out_order(b.g0);
      b.exact = ratio(ipow(gl_order(m, q3), 3), gl_order(3 * m, q));
      b.lower = pow_ratio(one() - i3 - i6, 3) / gl_up(q);
      b.upper = pow_ratio((one() - i3) * (one() - i6), 3) / gl_lo(q);
      b.closed_threshold = ratio((q - 1) * (q - 1), 108 * e * e);
      break;
    }
    case RatioCase::PSU_C2_t3: {
      b.g0 = GroupId::psu(3 * m, q);
      const long d = center_d(b.g0);
      b.h0_order = ipow(gu_order(m, q), 3) * 6 / ((q + 1) * d);
      b.o1_order = out_order(b.g0);
      b.exact = ratio(ipow(gu_order(m, q), 9), gu_order(3 * m, q));
      b.lower = pow_ratio((one() + i1) * (one() - i2), 9) / (one() + i1);
      b.upper = pow_ratio(one() + i1, 9) / ((one() + i1) * (one() - i2));
      b.closed_threshold = ratio((q + 1) * (q + 1), 864 * e * e);
      break;
    }
    case RatioCase::PSU_C3_r3: {
      b.g0 = GroupId::psu(3 * m, q);
      const long d = center_d(b.g0);
      b.h0_order = 3 * gu_order(m, q3) / ((q + 1) * d);
      b.o1_order = out_order(b.g0);
      b.exact = ratio(ipow(gu_order(m, q3), 3), gu_order(3 * m, q));
      b.lower = pow_ratio((one() + i3) * (one() - i6), 3) / (one() + i1);
      b.upper = pow_ratio(one() + i3, 3) / ((one() + i1) * (one() - i2));
      b.closed_threshold = ratio((q + 1) * (q + 1), 108 * e * e);
      break;
    }
    case RatioCase::PSL_C5_r3: {
      const int n = m;
      b.g0 = GroupId::psl(n, q3);
      const long d = center_d(b.g0);
      const long cc = (q3 - 1) / lcm(q - 1, (q3 - 1) / d);
      b.h0_order = sl_order(n, q) * cc / d;
      b.o1_order = out_order(b.g0) / cc;
      b.exact = ratio(ipow(gl_order(n, q), 3), gl_order(n, q3));
      b.lower = pow_ratio(gl_lo(q), 3) / ((one() - i3) * (one() - i6));
      b.upper = pow_ratio(gl_up(q), 3) / (one() - i3 - i6);
      break;
    }
    case RatioCase::PO_C5_r3: {
      const int n = m;
      b.g0 = GroupId::pomega(n, q3, b.eps);
      b.h0_order = pomega_order(n, q, b.eps);
      b.o1_order = out_order(b.g0);
      const Sign s = orth_sign(n, b.eps);
      const Int num = so_order(n, q, s) / (n % 2 ? 1 : gcd(2L, q));
      const Int den = so_order(n, q3, s) / (n % 2 ? 1 : gcd(2L, q3));
      b.exact = ratio(num * num * num, den);
      const OrderBounds sub = order_bounds(so_family(s), n, q);
      const OrderBounds top = order_bounds(so_family(s), n, q3);
      b.lower = pow_ratio(sub.lower_coef, 3) / top.upper_coef;
      b.upper = pow_ratio(sub.upper_coef, 3) / top.lower_coef;
      const ExactRatio j2 = iq(q, 2), j4 = iq(q, 4), j12 = iq(q, 12);
      b.printed_lower = pow_ratio(one() - j2 - j4, 3) / (one() - i6);
      b.printed_upper = pow_ratio(one() - j2, 3) / (one() - i6 - j12);
      break;
    }
    case RatioCase::O8_triality_3D4: {
      b.g0 = GroupId::pomega(8, q3, Sign::plus);
      b.h0_order = trid4_order(q);
      b.o1_order = p.o ? p.o : 3;
      b.exact = ratio(b.h0_order * b.h0_order * b.h0_order, order(b.g0));
      const ExactRatio a = one() - iq(q, 12), bb = one() - i6, cc = one() + i2;
      const ExactRatio head = pow_ratio(a, 3) * pow_ratio(bb, 3) / pow_ratio(cc, 3);
      b.lower = head / (bb * a);
      b.upper = head / ((one() - i6 - iq(q, 12)) * a);
      b.closed_threshold = ratio(Int(1), Int(b.o1_order * b.o1_order));
      break;
    }
  }
  b.g0_order = order(b.g0);
  // exact |H0|^3 |O1|^2 / |G0| = exact / threshold
  const ExactRatio full = ratio(b.h0_order * b.h0_order * b.h0_order * b.o1_order * b.o1_order, b.g0_order);
  b.threshold = b.exact / full;
  if (b.threshold < b.lower) b.verdict = Verdict::CertainlyLarge;
  else if (b.threshold > b.upper) b.verdict = Verdict::CertainlyNotLarge;
  else b.verdict = Verdict::Undetermined;
  return b;
}

}  // namespace large_atlas
