#include "large_atlas/tables.hpp"

#include <map>
#include <regex>
#include <sstream>

#include "embedded_data.hpp"
#include "large_atlas/catalog.hpp"

namespace large_atlas {

namespace {

// Euler's criterion; a is taken mod p, p an odd prime.
bool is_square_mod(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return true;
  Int r;
  mpz_powm_ui(r.get_mpz_t(), Int(a).get_mpz_t(), static_cast<unsigned long>((p - 1) / 2), Int(p).get_mpz_t());
  return r == 1;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size()) s.replace(pos, from.size(), to);
  return s;
}

Int host_out(const GroupId& g) { return in_simple_domain(g) ? out_order(g) : Int(1); }

void evaluate(TableRow& r) {
  r.g0_order = order(r.g0);
  r.out = host_out(r.g0);
  if (r.g0_order % r.h0_order != 0)
    throw TableError("table " + r.table + ": |" + r.h0_name + "| = " + r.h0_order.get_str() + " does not divide |" +
                     r.g0_printed + "| = " + r.g0_order.get_str());
  const Int cube = r.h0_order * r.h0_order * r.h0_order;
  r.h0_large = r.g0_order <= cube;
  r.h1_large = r.g0_order <= cube * r.out * r.out;
  if (!r.h1_large) {
    r.flagged = true;
    r.flag_reason = "not large even with the full outer automorphism group";
  } else if (r.remark == Remark::h0_not_large && r.h0_large) {
    r.flagged = true;
    r.flag_reason = "remark says H0 is not large, but |H0|^3 >= |G0|";
  } else if (r.remark == Remark::none && !r.h0_large) {
    r.flagged = true;
    r.flag_reason = "H0 is not large in G0 and no remark says so";
  }
}

}  // namespace

GroupId collection_a_host(int d, long p, std::optional<Sign> epsilon_hint) {
  if (d < 5) throw OutOfDomain("d must be at least 5");
  if (!is_prime(p)) throw OutOfDomain(std::to_string(p) + " is not prime");
  if (p == 2) {
    const int r = d % 8;
    if (d % 4 == 2) return GroupId::psp(d - 2, 2);
    if (r == 0) return GroupId::pomega(d - 2, 2, Sign::plus);
    if (r == 4) return GroupId::pomega(d - 2, 2, Sign::minus);
    if (r == 1 || r == 7) return GroupId::pomega(d - 1, 2, Sign::plus);
    return GroupId::pomega(d - 1, 2, Sign::minus);
  }
  const bool coprime = d % p != 0;
  const int n = coprime ? d - 1 : d - 2;
  if (n % 2) return GroupId::pomega(n, p, Sign::circ);
  if (epsilon_hint && (*epsilon_hint == Sign::plus || *epsilon_hint == Sign::minus))
    return GroupId::pomega(n, p, *epsilon_hint);
  // Gram matrix I + J on the sum-zero vectors e_i - e_d: determinant d, or d - 1 after the quotient.
  const long disc = coprime ? d : -1;
  const long m = n / 2;
  const bool plus = is_square_mod((m % 2 ? -1 : 1) * disc, p);
  return GroupId::pomega(n, p, plus ? Sign::plus : Sign::minus);
}

const std::vector<TableA0Rule>& table_a0() {
  static const std::vector<TableA0Rule> rules = {
      {"d = 2 mod 4", "2", "Sp(d-2,2)"},
      {"d = 0 mod 8", "2", "POmega+(d-2,2)"},
      {"d = 4 mod 8", "2", "POmega-(d-2,2)"},
      {"d = +-1 mod 8", "2", "POmega+(d-1,2)"},
      {"d = +-3 mod 8", "2", "POmega-(d-1,2)"},
      {"(d,p) = 1", "odd", "POmega^e(d-1,p)"},
      {"(d,p) != 1", "odd", "POmega^e(d-2,p)"},
  };
  return rules;
}

std::vector<TableRow> load_table_a(std::string_view text) {
  std::vector<TableRow> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto f = split(line, '|');
    const std::string where = "table A line " + std::to_string(lineno);
    if (f.size() != 4) throw TableError(where + ": expected 4 fields");
    TableRow r;
    r.table = "A";
    try {
      const int d = std::stoi(f[0]);
      const long p = std::stol(f[1]);
      r.g0_printed = f[2];
      const GroupId printed = parse_group(f[2]);
      r.g0 = canonicalize(printed);
      const GroupId expect = canonicalize(collection_a_host(d, p));
      if (!(expect == r.g0))
        throw TableError(where + ": host " + f[2] + " disagrees with the rule table (" + to_string(expect) + ")");
      const GroupId h = parse_group(f[3]);
      if ((h.family != Family::Alt && h.family != Family::Sym) || h.n != d)
        throw TableError(where + ": subgroup must be Alt(d) or Sym(d)");
      r.h0_name = (h.family == Family::Alt ? "A" : "S") + std::to_string(d);
      r.h0_order = order(h);
      r.condition = "d = " + std::to_string(d) + ", p = " + std::to_string(p);
    } catch (const TableError&) {
      throw;
    } catch (const std::exception& e) {
      throw TableError(where + ": " + e.what());
    }
    evaluate(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<TableRow> load_table_b(std::string_view text) {
  std::vector<TableRow> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  static const std::regex when_re(R"(^h0_not_large when (.+)$)");
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto f = split(line, '|');
    const std::string where = "table B line " + std::to_string(lineno);
    if (f.size() != 6) throw TableError(where + ": expected 6 fields");
    const auto eq = f[5].find('=');
    if (eq == std::string::npos) throw TableError(where + ": samples must read q=... or q0=...");
    const std::string var = trim(f[5].substr(0, eq));
    if (var != "q" && var != "q0") throw TableError(where + ": unknown sample variable " + var);
    for (const auto& sv : split(f[5].substr(eq + 1), ',')) {
      TableRow r;
      r.table = "B";
      try {
        const long v = std::stol(sv);
        long q = v;
        std::string host = f[0], h0 = f[2];
        if (var == "q0") {
          host = replace_all(host, "{q0^2}", std::to_string(v * v));
          host = replace_all(host, "{q0^3}", std::to_string(v * v * v));
          host = replace_all(host, "{q0}", std::to_string(v));
          h0 = replace_all(h0, "{q0}", std::to_string(v));
          q = (f[0].find("{q0^3}") != std::string::npos) ? v * v * v : (f[0].find("{q0^2}") != std::string::npos) ? v * v : v;
        }
        host = replace_all(host, "{q}", std::to_string(q));
        h0 = replace_all(h0, "{q}", std::to_string(q));
        r.g0_printed = host;
        r.g0 = canonicalize(parse_group(host));
        r.h0_name = replace_all(replace_all(f[1], "q0", std::to_string(v)), "(q)", "(" + std::to_string(q) + ")");
        r.h0_order = order(parse_group(h0));
        r.condition = f[3];
        std::smatch m;
        if (f[4].empty()) {
          r.remark = Remark::none;
        } else if (f[4] == "h0_not_large") {
          r.remark = Remark::h0_not_large;
        } else if (std::regex_match(f[4], m, when_re)) {
          const std::string c = m[1];
          bool applies;
          if (c == "q even") applies = q % 2 == 0;
          else if (c.rfind("q = ", 0) == 0) applies = q == std::stol(c.substr(4));
          else throw TableError(where + ": unknown remark condition '" + c + "'");
          r.remark = applies ? Remark::h0_not_large : Remark::none;
        } else {
          throw TableError(where + ": unknown remark '" + f[4] + "'");
        }
      } catch (const TableError&) {
        throw;
      } catch (const std::exception& e) {
        throw TableError(where + ": " + e.what());
      }
      evaluate(r);
      out.push_back(std::move(r));
    }
  }
  return out;
}

const std::vector<TableRow>& table_a() {
  static const std::vector<TableRow> rows = load_table_a(data::table_a_txt);
  return rows;
}

const std::vector<TableRow>& table_b() {
  static const std::vector<TableRow> rows = load_table_b(data::table_b_txt);
  return rows;
}

}  // namespace large_atlas
