#pragma once

#include <string>
#include <string_view>

#include "towercalc/abgroup.hpp"

namespace towercalc {

enum class Family { O, SO, Spin, String, U, SU, Sp };

[[nodiscard]] std::string_view family_name(Family f);

/// A (possibly indefinite) classical group G(p, q); q == 0 means the
/// definite group of rank p.  Signature symmetry G(p, q) ~ G(q, p) is
/// honored by every computation, but the user's order is kept for display.
struct GroupDescriptor {
  Family family = Family::O;
  int p = 0;
  int q = 0;
  bool two_arg = false;  // written with an explicit ", q" by the user

  bool operator==(const GroupDescriptor& rhs) const {
    return family == rhs.family && p == rhs.p && q == rhs.q;
  }
};

/// Parses "O(7)", "O(3,4)", "Spin(2,2)", "U(1,5)", "Sp(1,1)", "String(4,4)".
[[nodiscard]] GroupDescriptor parse_descriptor(std::string_view text);
[[nodiscard]] std::string descriptor_str(const GroupDescriptor& d);

/// A homotopy-group query result: a definite group, or an explicit
/// Unknown marker with a short reason.  No operation ever guesses a value
/// the tables plus the stated stability rules do not determine.
class HomotopyAnswer {
 public:
  [[nodiscard]] static HomotopyAnswer known(FgAbGroup g) {
    HomotopyAnswer a;
    a.known_ = true;
    a.group_ = std::move(g);
    return a;
  }
  [[nodiscard]] static HomotopyAnswer unknown(std::string note) {
    HomotopyAnswer a;
    a.note_ = std::move(note);
    return a;
  }

  [[nodiscard]] bool is_known() const { return known_; }
  [[nodiscard]] const FgAbGroup& group() const;
  [[nodiscard]] const std::string& note() const { return note_; }

 private:
  bool known_ = false;
  FgAbGroup group_;
  std::string note_;
};

/// pi_i(O(n)).  Low ranks come from the fixed table (n <= 9, i <= 7);
/// higher ranks use pi_i(O(n)) = pi_i(O(n+1)) for 0 < i <= n-2 plus
/// pi_0 = Z/2 for every n; everything else is Unknown.
[[nodiscard]] HomotopyAnswer pi_o(int n, int i);

/// pi_i(SO(n)): pi_0 = 0, otherwise identical to O(n).
[[nodiscard]] HomotopyAnswer pi_so(int n, int i);

/// pi_i(Spin(n)) for n >= 2: zero through degree 2 (degree 1 excepted for
/// Spin(2), a circle), and the O(n) groups from degree 3 on.
[[nodiscard]] HomotopyAnswer pi_spin_definite(int n, int i);

/// pi_1(Spin(p, q)) by the six-signature case split; symmetric in p, q.
[[nodiscard]] FgAbGroup pi1_spin_indefinite(int p, int q);

/// pi_i(U(n)) from the fixed table (n <= 6, i <= 7) and the stable range
/// i <= 2n - 1 beyond it; pi_0 = 0 always.
[[nodiscard]] HomotopyAnswer pi_u(int n, int i);

/// pi_i(Sp(n)): 0 through degree 2 and Z in degree 3; Unknown above.
[[nodiscard]] HomotopyAnswer pi_sp(int n, int i);

/// Indefinite groups via the maximal-compact product
/// pi_i(G(p, q)) = pi_i(K(p)) x pi_i(K(q)), with the Spin degree-0/1
/// special cases and String vanishing through degree 3.
[[nodiscard]] HomotopyAnswer pi_indefinite(const GroupDescriptor& d, int i);

/// Dispatch over definite and indefinite signatures.
[[nodiscard]] HomotopyAnswer pi(const GroupDescriptor& d, int i);

/// pi_i of the connected cover G<level>: zero for i <= level, pi_i(G) above.
[[nodiscard]] HomotopyAnswer connected_cover_pi(const GroupDescriptor& d,
                                                int level, int i);

}  // namespace towercalc
