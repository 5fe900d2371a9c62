#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "towercalc/abgroup.hpp"

namespace towercalc {

/// Characteristic classes the tower machinery can refer to.  Each name has
/// a fixed degree and coefficient group (the Euler class degree depends on
/// the rank, so it gets its own factory).
enum class ClassName { w1, w2, sqrt_p1, half_p1, p1, c1, c2, p1H, e };

[[nodiscard]] std::string_view class_name_str(ClassName n);

struct ClassRef {
  ClassName name = ClassName::w1;
  int degree = 1;
  FgAbGroup coefficient;
  int factor = 0;  // 1-based group-factor attribution; 0 = unattributed
  int sub = 0;     // 1-based index into a rank-4 pair split; 0 = none

  /// Display label: "w2", "half_p1#1".
  [[nodiscard]] std::string label() const;
  /// Profile key: "<name>.<factor>" plus ".<sub>" for pair splits.
  [[nodiscard]] std::string id() const;

  bool operator==(const ClassRef& rhs) const = default;
};

/// Catalog lookup (throws for the Euler class; use make_euler_class).
[[nodiscard]] ClassRef make_class(ClassName name, int factor = 0, int sub = 0);
[[nodiscard]] ClassRef make_euler_class(int n, int factor = 0);

/// Homology groups indexed by degree, 0..max_degree.  Queries past the
/// tabulated range are refused rather than guessed.
struct GradedGroupList {
  std::vector<FgAbGroup> groups;

  [[nodiscard]] int max_degree() const {
    return static_cast<int>(groups.size()) - 1;
  }
  [[nodiscard]] const FgAbGroup& at(int k) const;
};

/// H_k(BSO(n); Z) for k <= 2.
[[nodiscard]] FgAbGroup homology_bso(int n, int k);
/// H_k(BSpin(n); Z) for k <= 4.
[[nodiscard]] FgAbGroup homology_bspin(int n, int k);
[[nodiscard]] GradedGroupList bso_homology(int n);
[[nodiscard]] GradedGroupList bspin_homology(int n);

/// H_k(X x Y) = sum_{r+s=k} H_r(X) ⊗ H_s(Y) + sum_{r+s=k-1} Tor(H_r, H_s).
[[nodiscard]] FgAbGroup kunneth_homology(const GradedGroupList& hx,
                                         const GradedGroupList& hy, int k);

/// H^n(X; A) = Hom(H_n(X), A) + Ext(H_{n-1}(X), A).
[[nodiscard]] FgAbGroup uct_cohomology(const FgAbGroup& h_n,
                                       const FgAbGroup& h_n_minus_1,
                                       const FgAbGroup& coeff);

/// H^2 of the indefinite classifying space through the full
/// Kunneth-then-universal-coefficients pipeline; requires p, q >= 2.
[[nodiscard]] FgAbGroup h2_bso_indefinite(int p, int q);

struct H4Result {
  FgAbGroup group;
  std::vector<ClassRef> generators;
};

/// H^4(BSpin(n); Z) with its generator(s): a single half_p1 for n = 3 or
/// n >= 5, the split pair for n = 4.
[[nodiscard]] H4Result h4_bspin(int n);

/// Free rank of H^k(BSpin(n); Q), i.e. the coefficient of t^k in the
/// rank-n generating product of geometric series; exact and truncated.
[[nodiscard]] Int betti_bspin(int n, int k);

/// Degreewise Kunneth splitting test in degree n with coefficients A.
/// Condition 1 (chain-level flatness) is an assumption supplied by the
/// caller; 2-4 are computed.  Returns the failed condition ids.
struct SplitCheck {
  bool split = false;
  std::vector<int> failed_conditions;
};

[[nodiscard]] SplitCheck kunneth_split_check(const GradedGroupList& hx,
                                             const GradedGroupList& hy, int n,
                                             const FgAbGroup& coeff,
                                             bool chain_flat = true);

enum class RingFamily { BU, BSU, BSp, BSOQ };

struct RingGenerator {
  std::string name;
  int degree = 0;
  bool operator==(const RingGenerator& rhs) const = default;
};

/// Polynomial generators of H^*(B-; Z) (BU, BSU, BSp) or H^*(BSO(n); Q)
/// with the even-rank Euler relation p_{n/2} = e^2 reported alongside.
struct RingPresentation {
  std::vector<RingGenerator> generators;
  std::string relation;  // empty when the presentation is free
};

[[nodiscard]] RingPresentation ring_generators(RingFamily family, int n);

}  // namespace towercalc
