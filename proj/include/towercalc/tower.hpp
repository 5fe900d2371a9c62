#pragma once

#include <optional>
#include <string>
#include <vector>

#include "towercalc/abgroup.hpp"
#include "towercalc/cohomology.hpp"
#include "towercalc/homotopy.hpp"

namespace towercalc {

/// One stage of a connected-cover tower: passing from source to target
/// kills pi_{killed_pi}, and the obstruction against lifting a map into
/// the source lives in H^{killed_pi + 1}(X; coefficient).
struct TowerStage {
  int index = 0;
  std::string source_name;
  std::string target_name;
  int killed_pi = 0;
  std::vector<ClassRef> obstructions;
  FgAbGroup coefficient;  // direct sum of the obstruction coefficients
  bool skippable = false;  // stage callers may start above (U pi_1 kill)
};

struct Tower {
  GroupDescriptor descriptor;
  std::vector<TowerStage> stages;
};

/// Builds the cover tower for O(p, q), U(p, q) or Sp(p, q); each factor
/// contributes its own obstruction classes, with rank <= 1 factors
/// dropping out of the pi_1/pi_3 stages and rank-4 factors splitting
/// their degree-4 class into a pair.
[[nodiscard]] Tower build_tower(const GroupDescriptor& d);

/// Resolves a CLI-facing target-stage name ("SO", "Spin", "String" for the
/// O family; "cover", "String" for U; "String" for Sp) to a stage index.
[[nodiscard]] int target_stage_index(const Tower& tower,
                                     const std::string& name);

/// One line per stage:
///   stage 1: kill pi_1, obstruction w2 x w2 in H^2(X; Z/2 x Z/2)
[[nodiscard]] std::string render_stage(const TowerStage& stage,
                                       bool unicode = false);
[[nodiscard]] std::string render_tower(const Tower& tower,
                                       bool unicode = false);

enum class TwistKind { SO, Spin, String };

/// A twisted-structure condition: maps f1, f2 admit a common twisted lift
/// iff f1*(left) - hom(f2*(right)) = 0.  Sides are singleton class lists
/// except for the (4,4) String case, which pairs both halves of each
/// rank-4 split over Z x Z.
struct TwistSpec {
  TwistKind kind = TwistKind::SO;
  std::vector<ClassRef> left;
  std::vector<ClassRef> right;
  FgAbGroup left_coefficient;
  FgAbGroup right_coefficient;
  /// Optional coordinate matrix sending right-coefficient elements to
  /// left-coefficient elements; absent means both sides must already
  /// share a coefficient group (compared by identity).
  std::optional<IntMatrix> hom;
};

/// The finitely many twisted covering comparisons: w1 = w1 for SO at any
/// signature; sqrt_p1 = sqrt_p1 at (2,2) and w2 = w2 at p, q >= 3 for
/// Spin (no other Spin case exists); half_p1 = half_p1 away from rank 4
/// and the paired (4,4) comparison for String.
[[nodiscard]] TwistSpec twisted_descriptor(TwistKind kind, int p, int q);

/// The anomaly-cancellation comparison half_p1 = c2 over Z with the
/// identity hom.
[[nodiscard]] TwistSpec green_schwarz_spec();

}  // namespace towercalc
