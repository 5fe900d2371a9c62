#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "towercalc/abgroup.hpp"
#include "towercalc/tower.hpp"

namespace towercalc {

/// What a profile knows about one pulled-back class: definitely zero,
/// definitely nonzero (without coordinates), an explicit element, or
/// nothing at all.
enum class ClassValueKind { Zero, Nonzero, Element, Unknown };

struct ClassValue {
  ClassValueKind kind = ClassValueKind::Unknown;
  std::optional<GroupElement> element;  // set iff kind == Element
};

struct ProfileEntry {
  std::string id;
  int degree = 0;
  FgAbGroup coefficient;
  ClassValue value;
};

/// User-supplied knowledge about H^*(X): one entry per class id.
struct CohomologyProfile {
  std::string space_name;
  std::vector<ProfileEntry> entries;

  [[nodiscard]] const ProfileEntry* find(const std::string& id) const;
};

/// Parses the line-oriented profile format:
///   # comment
///   space M
///   class w2.1 degree 2 coeff Z/2 value zero
///   class half_p1.1 degree 4 coeff Z value (3)
/// Values are zero | nonzero | unknown | an explicit element.
[[nodiscard]] CohomologyProfile parse_profile(std::string_view text);

enum class LiftStatus { Lifts, Obstructed, Undetermined };

struct LiftVerdict {
  LiftStatus status = LiftStatus::Undetermined;
  int stage_index = -1;               // stage that decided the verdict
  std::vector<std::string> class_ids;  // blockers or indeterminates
  std::optional<GroupElement> difference;  // twisted comparisons only
};

/// Walks stages 0..target_stage.  A stage with any definitely nonzero
/// obstruction decides Obstructed (all of that stage's blockers listed);
/// otherwise any missing/unknown class decides Undetermined; a stage whose
/// classes are all zero passes.  Every stage passing means the lift exists.
[[nodiscard]] LiftVerdict evaluate_lift(const CohomologyProfile& profile,
                                        const Tower& tower, int target_stage);

/// Decides a twisted comparison: both sides must be pinned down (zero or
/// an explicit element); then the verdict is Lifts exactly when
/// left - hom(right) vanishes, and Obstructed carries the difference.
[[nodiscard]] LiftVerdict evaluate_twisted(const CohomologyProfile& profile,
                                           const TwistSpec& spec);

}  // namespace towercalc
