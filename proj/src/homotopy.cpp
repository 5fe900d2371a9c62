#include "towercalc/homotopy.hpp"

#include <array>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace towercalc {

namespace {

// pi_i(O(n)) for n = 1..9 (rows), i = 0..7 (cols).  Entries right of the
// stable column repeat the boxed stable value, so row 9 is stable for every
// tabulated degree.
constexpr std::array<std::array<const char*, 8>, 9> kOTable = {{
    {"Z/2", "0", "0", "0", "0", "0", "0", "0"},
    {"Z/2", "Z", "0", "0", "0", "0", "0", "0"},
    {"Z/2", "Z/2", "0", "Z", "Z/2", "Z/2", "Z/12", "Z/2"},
    {"Z/2", "Z/2", "0", "Z x Z", "Z/2 x Z/2", "Z/2 x Z/2", "Z/12 x Z/12",
     "Z/2 x Z/2"},
    {"Z/2", "Z/2", "0", "Z", "Z/2", "Z/2", "0", "Z"},
    {"Z/2", "Z/2", "0", "Z", "0", "Z", "0", "Z"},
    {"Z/2", "Z/2", "0", "Z", "0", "0", "0", "Z"},
    {"Z/2", "Z/2", "0", "Z", "0", "0", "0", "Z x Z"},
    {"Z/2", "Z/2", "0", "Z", "0", "0", "0", "Z"},
}};

// pi_i(U(n)) for n = 1..6 (rows), i = 1..7 (cols); pi_0 vanishes.  Row 6 is
// stable for every tabulated degree (2n - 1 = 11 > 7).
constexpr std::array<std::array<const char*, 7>, 6> kUTable = {{
    {"Z", "0", "0", "0", "0", "0", "0"},
    {"Z", "0", "Z", "Z/2", "Z/2", "Z/12", "Z/2"},
    {"Z", "0", "Z", "0", "Z", "Z/6", "0"},
    {"Z", "0", "Z", "0", "Z", "0", "Z"},
    {"Z", "0", "Z", "0", "Z", "0", "Z"},
    {"Z", "0", "Z", "0", "Z", "0", "Z"},
}};

HomotopyAnswer table_unknown(const char* family, int n, int i) {
  std::ostringstream note;
  note << "pi_" << i << "(" << family << "(" << n
       << ")) is outside the tabulated range";
  return HomotopyAnswer::unknown(note.str());
}

// Spin(n) factor inside an indefinite product, for i >= 2: the groups of
// rank <= 2 are a point and a circle up to homotopy, so their higher
// homotopy vanishes instead of being unknown.
HomotopyAnswer spin_factor_pi(int n, int i) {
  if (n <= 2) return HomotopyAnswer::known(FgAbGroup());
  return pi_spin_definite(n, i);
}

HomotopyAnswer product(const HomotopyAnswer& a, const HomotopyAnswer& b) {
  if (!a.is_known()) return a;
  if (!b.is_known()) return b;
  return HomotopyAnswer::known(direct_sum(a.group(), b.group()));
}

HomotopyAnswer definite_pi(Family family, int n, int i);

int parse_count(const std::string& token) {
  if (token.empty()) throw ParseError("missing rank in descriptor");
  for (char c : token)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("bad rank '" + token + "' in descriptor");
  return std::stoi(token);
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::O:
      return "O";
    case Family::SO:
      return "SO";
    case Family::Spin:
      return "Spin";
    case Family::String:
      return "String";
    case Family::U:
      return "U";
    case Family::SU:
      return "SU";
    case Family::Sp:
      return "Sp";
  }
  return "?";
}

const FgAbGroup& HomotopyAnswer::group() const {
  if (!known_)
    throw std::logic_error("homotopy answer is unknown: " + note_);
  return group_;
}

HomotopyAnswer pi_o(int n, int i) {
  if (n <= 0) throw std::invalid_argument("empty signature");
  if (i < 0) throw std::invalid_argument("negative homotopy degree");
  if (i == 0) return HomotopyAnswer::known(FgAbGroup::cyclic(2));
  if (n <= 9 && i <= 7)
    return HomotopyAnswer::known(parse_group(kOTable[n - 1][i]));
  if (n > 9 && i <= 7 && i <= n - 2)
    return HomotopyAnswer::known(parse_group(kOTable[8][i]));
  return table_unknown("O", n, i);
}

HomotopyAnswer pi_so(int n, int i) {
  if (i == 0) {
    if (n <= 0) throw std::invalid_argument("empty signature");
    return HomotopyAnswer::known(FgAbGroup());
  }
  return pi_o(n, i);
}

HomotopyAnswer pi_spin_definite(int n, int i) {
  if (i < 0) throw std::invalid_argument("negative homotopy degree");
  if (n < 2)
    return HomotopyAnswer::unknown(
        "Spin(n) is only defined here for n >= 2");
  if (n == 2)
    return HomotopyAnswer::known(i == 1 ? FgAbGroup::free(1) : FgAbGroup());
  if (i <= 2) return HomotopyAnswer::known(FgAbGroup());
  return pi_o(n, i);
}

FgAbGroup pi1_spin_indefinite(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("negative signature");
  const int a = p >= q ? p : q;
  const int b = p >= q ? q : p;
  if (a + b == 0) throw std::invalid_argument("empty signature");
  if (a <= 1) return {};
  if (a == 2) return b == 2 ? FgAbGroup::free(2) : FgAbGroup::free(1);
  if (b <= 1) return {};
  if (b == 2) return FgAbGroup::free(1);
  return FgAbGroup::cyclic(2);
}

HomotopyAnswer pi_u(int n, int i) {
  if (n <= 0) throw std::invalid_argument("empty signature");
  if (i < 0) throw std::invalid_argument("negative homotopy degree");
  if (i == 0) return HomotopyAnswer::known(FgAbGroup());
  if (n <= 6 && i <= 7)
    return HomotopyAnswer::known(parse_group(kUTable[n - 1][i - 1]));
  if (n > 6 && i <= 7 && i <= 2 * n - 1)
    return HomotopyAnswer::known(parse_group(kUTable[5][i - 1]));
  return table_unknown("U", n, i);
}

HomotopyAnswer pi_sp(int n, int i) {
  if (n <= 0) throw std::invalid_argument("empty signature");
  if (i < 0) throw std::invalid_argument("negative homotopy degree");
  if (i <= 2) return HomotopyAnswer::known(FgAbGroup());
  if (i == 3) return HomotopyAnswer::known(FgAbGroup::free(1));
  return table_unknown("Sp", n, i);
}

namespace {

HomotopyAnswer definite_pi(Family family, int n, int i) {
  switch (family) {
    case Family::O:
      return pi_o(n, i);
    case Family::SO:
      return pi_so(n, i);
    case Family::Spin: {
      if (i == 1) {
        // The signature case list covers q = 0; cross-check it against the
        // covering-space rule wherever both apply.
        const FgAbGroup from_cases = pi1_spin_indefinite(n, 0);
        const HomotopyAnswer direct = pi_spin_definite(n, 1);
        if (direct.is_known() && !(direct.group() == from_cases))
          throw std::logic_error(
              "pi_1(Spin) tables disagree for the definite signature");
        return HomotopyAnswer::known(from_cases);
      }
      return pi_spin_definite(n, i);
    }
    case Family::String: {
      if (i <= 3) return HomotopyAnswer::known(FgAbGroup());
      return pi_o(n, i);
    }
    case Family::U:
      return pi_u(n, i);
    case Family::SU:
      return HomotopyAnswer::unknown(
          "SU homotopy groups are not tabulated here");
    case Family::Sp:
      return pi_sp(n, i);
  }
  throw std::logic_error("unhandled family");
}

}  // namespace

HomotopyAnswer pi_indefinite(const GroupDescriptor& d, int i) {
  if (d.p <= 0 || d.q <= 0)
    throw std::invalid_argument("pi_indefinite needs p, q >= 1");
  if (i < 0) throw std::invalid_argument("negative homotopy degree");
  switch (d.family) {
    case Family::O:
    case Family::SO:
    case Family::U:
    case Family::Sp:
      return product(definite_pi(d.family, d.p, i),
                     definite_pi(d.family, d.q, i));
    case Family::SU:
      return HomotopyAnswer::unknown(
          "SU homotopy groups are not tabulated here");
    case Family::Spin: {
      if (i == 0) return HomotopyAnswer::known(FgAbGroup());
      if (i == 1)
        return HomotopyAnswer::known(pi1_spin_indefinite(d.p, d.q));
      return product(spin_factor_pi(d.p, i), spin_factor_pi(d.q, i));
    }
    case Family::String: {
      if (i <= 3) return HomotopyAnswer::known(FgAbGroup());
      return product(pi_o(d.p, i), pi_o(d.q, i));
    }
  }
  throw std::logic_error("unhandled family");
}

HomotopyAnswer pi(const GroupDescriptor& d, int i) {
  if (d.p > 0 && d.q > 0) return pi_indefinite(d, i);
  return definite_pi(d.family, d.p + d.q, i);
}

HomotopyAnswer connected_cover_pi(const GroupDescriptor& d, int level,
                                  int i) {
  if (i <= level) return HomotopyAnswer::known(FgAbGroup());
  return pi(d, i);
}

GroupDescriptor parse_descriptor(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end &&
         std::isspace(static_cast<unsigned char>(text[begin])))
    ++begin;
  while (end > begin &&
         std::isspace(static_cast<unsigned char>(text[end - 1])))
    --end;
  const std::string s(text.substr(begin, end - begin));

  const std::size_t open = s.find('(');
  if (open == std::string::npos || s.back() != ')')
    throw ParseError("descriptor must look like O(p) or O(p,q): '" + s +
                     "'");
  const std::string name = s.substr(0, open);
  GroupDescriptor d;
  if (name == "O")
    d.family = Family::O;
  else if (name == "SO")
    d.family = Family::SO;
  else if (name == "Spin")
    d.family = Family::Spin;
  else if (name == "String")
    d.family = Family::String;
  else if (name == "U")
    d.family = Family::U;
  else if (name == "SU")
    d.family = Family::SU;
  else if (name == "Sp")
    d.family = Family::Sp;
  else
    throw ParseError("unknown group family '" + name + "'");

  const std::string inner = s.substr(open + 1, s.size() - open - 2);
  if (inner.find('(') != std::string::npos ||
      inner.find(')') != std::string::npos)
    throw ParseError("descriptor must look like O(p) or O(p,q): '" + s +
                     "'");
  const std::size_t comma = inner.find(',');
  if (comma == std::string::npos) {
    d.p = parse_count(inner);
    d.q = 0;
    d.two_arg = false;
  } else {
    d.p = parse_count(inner.substr(0, comma));
    d.q = parse_count(inner.substr(comma + 1));
    d.two_arg = true;
  }
  if (d.p + d.q <= 0) throw ParseError("empty signature");
  return d;
}

std::string descriptor_str(const GroupDescriptor& d) {
  std::ostringstream out;
  out << family_name(d.family) << "(" << d.p;
  if (d.two_arg) out << "," << d.q;
  out << ")";
  return out.str();
}

}  // namespace towercalc
