#include "large_atlas/orders.hpp"

#include <mutex>
#include <regex>
#include <sstream>

namespace large_atlas {

namespace data {
extern const std::string_view constants_txt;
}

namespace {

long require_q(long q) { return parse_prime_power(q).q; }

int eps_sign(Sign s) { return sign_value(s); }

void check_eps(const GroupId& g) {
  const bool orth = g.family == Family::POmega || g.family == Family::Omega ||
                    g.family == Family::SO || g.family == Family::GO;
  if (!orth) {
    if (g.eps != Sign::none) throw UnsupportedGroup(to_string(g) + ": sign only applies to orthogonal groups");
    return;
  }
  if (g.n % 2 == 1 && g.eps != Sign::circ)
    throw UnsupportedGroup("odd-dimensional orthogonal groups take the circ sign");
  if (g.n % 2 == 0 && g.eps != Sign::plus && g.eps != Sign::minus)
    throw UnsupportedGroup("even-dimensional orthogonal groups take sign + or -");
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<std::pair<std::string, Int>> load_constants() {
  std::istringstream in{std::string(data::constants_txt)};
  std::string line, body, expected;
  std::vector<std::pair<std::string, Int>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string tag = "# checksum fnv1a64 ";
      if (line.rfind(tag, 0) == 0) expected = line.substr(tag.size());
      continue;
    }
    body += line + "\n";
    std::istringstream ls(line);
    std::string name, value;
    ls >> name >> value;
    rows.emplace_back(name, Int(value));
  }
  std::ostringstream hex;
  hex << std::hex << fnv1a(body);
  if (expected.empty() || hex.str() != expected)
    throw std::runtime_error("constants table checksum mismatch: have " + hex.str() + ", header says " + expected);
  return rows;
}

}  // namespace

int sign_value(Sign s) {
  switch (s) {
    case Sign::plus: return 1;
    case Sign::minus: return -1;
    default: return 0;
  }
}

std::string to_string(Sign s) {
  switch (s) {
    case Sign::plus: return "+";
    case Sign::minus: return "-";
    case Sign::circ: return "o";
    case Sign::none: return "";
  }
  return "";
}

std::string to_string(Family f) {
  switch (f) {
    case Family::PSL: return "PSL";
    case Family::PSU: return "PSU";
    case Family::PSp: return "PSp";
    case Family::POmega: return "POmega";
    case Family::SL: return "SL";
    case Family::SU: return "SU";
    case Family::Sp: return "Sp";
    case Family::GL: return "GL";
    case Family::GU: return "GU";
    case Family::SO: return "SO";
    case Family::GO: return "GO";
    case Family::Omega: return "Omega";
    case Family::PGL: return "PGL";
    case Family::PGU: return "PGU";
    case Family::Alt: return "Alt";
    case Family::Sym: return "Sym";
    case Family::Sz: return "Sz";
    case Family::G2: return "G2";
    case Family::TriD4: return "3D4";
    case Family::Sporadic: return "Sporadic";
  }
  return "?";
}

std::string to_string(const GroupId& g) {
  std::string s;
  switch (g.family) {
    case Family::Alt:
    case Family::Sym:
      return to_string(g.family) + "(" + std::to_string(g.n) + ")";
    case Family::Sz:
    case Family::G2:
    case Family::TriD4:
      return to_string(g.family) + "(" + std::to_string(g.q) + ")";
    case Family::Sporadic:
      return "Sporadic(" + g.name + ")";
    case Family::POmega:
    case Family::Omega:
    case Family::SO:
    case Family::GO:
      s = to_string(g.family) + (g.eps == Sign::circ ? "" : to_string(g.eps));
      break;
    default:
      s = to_string(g.family);
  }
  s += "(" + std::to_string(g.n) + "," + std::to_string(g.q) + ")";
  if (g.copies > 1) s += "^" + std::to_string(g.copies);
  return s;
}

GroupId parse_group(std::string_view text) {
  static const std::regex classical(R"(^(PSL|PSU|PSp|SL|SU|Sp|GL|GU|PGL|PGU)\((\d+),(\d+)\)$)");
  static const std::regex orthogonal(R"(^(POmega|Omega|SO|GO)([+-]?)\((\d+),(\d+)\)$)");
  static const std::regex perm(R"(^(Alt|Sym)\((\d+)\)$)");
  static const std::regex exc(R"(^(Sz|G2|3D4)\((\d+)\)$)");
  static const std::regex spor(R"(^Sporadic\((.+)\)$)");
  const std::string s(text);
  std::smatch m;
  auto num = [](const std::string& v) {
    if (v.size() > 9) throw ParseError("number too large: " + v);
    return std::stol(v);
  };
  GroupId g;
  if (std::regex_match(s, m, classical)) {
    static const std::pair<const char*, Family> names[] = {
        {"PSL", Family::PSL}, {"PSU", Family::PSU}, {"PSp", Family::PSp}, {"SL", Family::SL},
        {"SU", Family::SU},   {"Sp", Family::Sp},   {"GL", Family::GL},   {"GU", Family::GU},
        {"PGL", Family::PGL}, {"PGU", Family::PGU}};
    for (auto& [nm, f] : names)
      if (m[1] == nm) g.family = f;
    g.n = static_cast<int>(num(m[2]));
    g.q = num(m[3]);
  } else if (std::regex_match(s, m, orthogonal)) {
    g.family = m[1] == "POmega" ? Family::POmega
             : m[1] == "Omega"  ? Family::Omega
             : m[1] == "SO"     ? Family::SO
                                : Family::GO;
    g.n = static_cast<int>(num(m[3]));
    g.q = num(m[4]);
    if (m[2] == "+") g.eps = Sign::plus;
    else if (m[2] == "-") g.eps = Sign::minus;
    else if (g.n % 2 == 1) g.eps = Sign::circ;
    else throw ParseError("even-dimensional orthogonal group needs a sign: " + s);
  } else if (std::regex_match(s, m, perm)) {
    g.family = m[1] == "Alt" ? Family::Alt : Family::Sym;
    g.n = static_cast<int>(num(m[2]));
  } else if (std::regex_match(s, m, exc)) {
    g.family = m[1] == "Sz" ? Family::Sz : m[1] == "G2" ? Family::G2 : Family::TriD4;
    g.q = num(m[2]);
  } else if (std::regex_match(s, m, spor)) {
    g.family = Family::Sporadic;
    g.name = m[1];
  } else {
    throw ParseError("cannot parse group name: " + s);
  }
  if (g.q != 0 && !try_prime_power(g.q)) throw ParseError("field size is not a prime power: " + s);
  if (g.n % 2 == 1 && (g.eps == Sign::plus || g.eps == Sign::minus))
    throw ParseError("odd-dimensional orthogonal group takes no sign: " + s);
  return g;
}

const std::vector<std::pair<std::string, Int>>& sporadic_table() {
  static const std::vector<std::pair<std::string, Int>> table = load_constants();
  return table;
}

Int sporadic_order(std::string_view name) {
  for (const auto& [nm, ord] : sporadic_table())
    if (nm == name) return ord;
  throw UnknownGroup("no stored order for " + std::string(name));
}

Int gl_order(int n, long q) {
  Int r = ipow(q, static_cast<unsigned long>(n) * (n - 1) / 2);
  for (int i = 1; i <= n; ++i) r *= ipow(q, i) - 1;
  return r;
}

Int sl_order(int n, long q) { return gl_order(n, q) / (q - 1); }

Int psl_order(int n, long q) { return sl_order(n, q) / gcd(static_cast<long>(n), q - 1); }

Int gu_order(int n, long q) {
  Int r = ipow(q, static_cast<unsigned long>(n) * (n - 1) / 2);
  for (int i = 1; i <= n; ++i) r *= (i % 2 == 0) ? Int(ipow(q, i) - 1) : Int(ipow(q, i) + 1);
  return r;
}

Int su_order(int n, long q) { return gu_order(n, q) / (q + 1); }

Int psu_order(int n, long q) { return su_order(n, q) / gcd(static_cast<long>(n), q + 1); }

Int sp_order(int n, long q) {
  const unsigned long m = static_cast<unsigned long>(n / 2);
  Int r = ipow(q, m * m);
  for (unsigned long i = 1; i <= m; ++i) r *= ipow(q, 2 * i) - 1;
  return r;
}

Int psp_order(int n, long q) { return sp_order(n, q) / gcd(2L, q - 1); }

Int omega_order(int n, long q, Sign eps) {
  const long d2 = gcd(2L, q - 1);
  if (n == 1) return 1;
  if (n % 2 == 1) return sp_order(n - 1, q) / d2;
  const unsigned long m = static_cast<unsigned long>(n / 2);
  Int r = ipow(q, m * (m - 1)) * (ipow(q, m) - eps_sign(eps));
  for (unsigned long i = 1; i < m; ++i) r *= ipow(q, 2 * i) - 1;
  return r / d2;
}

Int so_order(int n, long q, Sign eps) {
  if (n == 1) return 1;
  if (n % 2 == 1) return omega_order(n, q, eps) * gcd(2L, q - 1);
  return 2 * omega_order(n, q, eps);
}

Int go_order(int n, long q, Sign eps) {
  if (n == 1) return q % 2 == 1 ? 2 : 1;
  return so_order(n, q, eps) * gcd(2L, q - 1);
}

Int pomega_order(int n, long q, Sign eps) {
  if (n % 2 == 1) return omega_order(n, q, eps);
  const unsigned long m = static_cast<unsigned long>(n / 2);
  Int qm = ipow(q, m) - eps_sign(eps);
  Int z = gcd(Int(4), qm);
  return omega_order(n, q, eps) * gcd(2L, q - 1) / z;
}

Int sz_order(long q) {
  Int q2 = Int(q) * q;
  return q2 * (q2 + 1) * (q - 1);
}

Int g2_order(long q) { return ipow(q, 6) * (ipow(q, 6) - 1) * (Int(q) * q - 1); }

Int trid4_order(long q) {
  return ipow(q, 12) * (ipow(q, 8) + ipow(q, 4) + 1) * (ipow(q, 6) - 1) * (Int(q) * q - 1);
}

bool in_simple_domain(const GroupId& g) {
  try {
    validate(g);
    return true;
  } catch (const UnsupportedGroup&) {
    return false;
  } catch (const NotAPrimePower&) {
    return false;
  }
}

void validate(const GroupId& g) {
  check_eps(g);
  const std::string nm = to_string(g);
  switch (g.family) {
    case Family::PSL:
      require_q(g.q);
      if (g.n < 2 || (g.n == 2 && g.q <= 3)) throw UnsupportedGroup(nm + " is not simple");
      return;
    case Family::PSU:
      require_q(g.q);
      if (g.n < 3 || (g.n == 3 && g.q == 2)) throw UnsupportedGroup(nm + " is outside the unitary domain (n >= 3, not PSU(3,2))");
      return;
    case Family::PSp:
      require_q(g.q);
      if (g.n < 4 || g.n % 2 || (g.n == 4 && g.q == 2)) throw UnsupportedGroup(nm + " is outside the symplectic domain");
      return;
    case Family::POmega:
      require_q(g.q);
      if (g.n < 7 || (g.n % 2 == 1 && g.q % 2 == 0)) throw UnsupportedGroup(nm + " is outside the orthogonal domain");
      return;
    default:
      throw UnsupportedGroup(nm + " is not a simple classical group");
  }
}

long center_d(const GroupId& g) {
  switch (g.family) {
    case Family::PSL: return gcd(static_cast<long>(g.n), g.q - 1);
    case Family::PSU: return gcd(static_cast<long>(g.n), g.q + 1);
    case Family::PSp: return gcd(2L, g.q - 1);
    case Family::POmega: {
      if (g.n % 2 == 1) return gcd(2L, g.q - 1);
      Int qm = ipow(g.q, static_cast<unsigned long>(g.n / 2)) - eps_sign(g.eps);
      return gcd(Int(4), qm).get_si();
    }
    default:
      throw UnsupportedGroup("no d for " + to_string(g));
  }
}

Int order(const GroupId& g) {
  check_eps(g);
  const std::string nm = to_string(g);
  auto need = [&](bool ok) {
    if (!ok) throw UnsupportedGroup(nm + " is outside the supported parameter range");
  };
  switch (g.family) {
    case Family::Alt: need(g.n >= 1); return g.n <= 1 ? Int(1) : Int(factorial(g.n) / 2);
    case Family::Sym: need(g.n >= 1); return factorial(g.n);
    case Family::Sporadic: return sporadic_order(g.name);
    default: break;
  }
  const PrimePower pp = parse_prime_power(g.q);
  const long q = pp.q;
  switch (g.family) {
    case Family::GL: need(g.n >= 1); return gl_order(g.n, q);
    case Family::SL: need(g.n >= 1); return sl_order(g.n, q);
    case Family::PGL: need(g.n >= 1); return sl_order(g.n, q);
    case Family::PSL: {
      need(g.n >= 2);
      Int r = psl_order(g.n, q);
      return g.copies > 1 ? Int(ipow(r, static_cast<unsigned long>(g.copies))) : r;
    }
    case Family::GU: need(g.n >= 1); return gu_order(g.n, q);
    case Family::SU: need(g.n >= 1); return su_order(g.n, q);
    case Family::PGU: need(g.n >= 1); return su_order(g.n, q);
    case Family::PSU: need(g.n >= 3); return psu_order(g.n, q);
    case Family::Sp: need(g.n >= 2 && g.n % 2 == 0); return sp_order(g.n, q);
    case Family::PSp: need(g.n >= 2 && g.n % 2 == 0); return psp_order(g.n, q);
    case Family::Omega: need(g.n >= 1); return omega_order(g.n, q, g.eps);
    case Family::SO: need(g.n >= 1); return so_order(g.n, q, g.eps);
    case Family::GO: need(g.n >= 1); return go_order(g.n, q, g.eps);
    case Family::POmega: need(g.n >= 3); return pomega_order(g.n, q, g.eps);
    case Family::Sz: need(pp.p == 2 && pp.e % 2 == 1); return sz_order(q);
    case Family::G2: return g2_order(q);
    case Family::TriD4: return trid4_order(q);
    default: break;
  }
  throw UnsupportedGroup(nm);
}

GroupId canonicalize(const GroupId& g) {
  if (g.family == Family::PSp && g.n == 2) return GroupId::psl(2, g.q);
  if (g.family != Family::POmega) return g;
  const long q = g.q;
  switch (g.n) {
    case 3: return GroupId::psl(2, q);
    case 4:
      if (g.eps == Sign::minus) return GroupId::psl(2, q * q);
      return GroupId{Family::PSL, 2, q, Sign::none, "", 2};
    case 5: return GroupId::psp(4, q);
    case 6: return g.eps == Sign::plus ? GroupId::psl(4, q) : GroupId::psu(4, q);
    default: break;
  }
  if (g.n % 2 == 1 && q % 2 == 0) return GroupId::psp(g.n - 1, q);
  return g;
}

Int out_order(const GroupId& g) {
  validate(g);
  const PrimePower pp = parse_prime_power(g.q);
  const long d = center_d(g);
  const long e = pp.e;
  switch (g.family) {
    case Family::PSL: return g.n >= 3 ? 2 * d * e : d * e;
    case Family::PSU: return 2 * d * e;
    case Family::PSp:
      if (g.n == 4 && pp.p == 2) return 2 * e;
      return d * e;
    case Family::POmega:
      if (g.n % 2 == 1) return 2 * e;
      if (g.n == 8 && g.eps == Sign::plus) return 6 * d * e;
      return 2 * d * e;
    default: break;
  }
  throw UnsupportedGroup(to_string(g));
}

}  // namespace large_atlas
