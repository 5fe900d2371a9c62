#include "towercalc/lift.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "towercalc/errors.hpp"

namespace towercalc {

namespace {

std::vector<std::string> split_whitespace(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

int parse_degree(int line_no, const std::string& text) {
  if (text.empty()) throw ParseError(line_no, "missing degree");
  std::size_t pos = text[0] == '-' ? 1 : 0;
  if (pos == text.size()) throw ParseError(line_no, "missing degree");
  for (; pos < text.size(); ++pos)
    if (text[pos] < '0' || text[pos] > '9')
      throw ParseError(line_no, "'" + text + "' is not an integer degree");
  return std::stoi(text);
}

std::string join_tokens(const std::vector<std::string>& tokens,
                        std::size_t begin, std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (i > begin) out += " ";
    out += tokens[i];
  }
  return out;
}

ProfileEntry parse_class_line(int line_no,
                              const std::vector<std::string>& tokens) {
  if (tokens.size() < 2) throw ParseError(line_no, "missing class id");
  if (tokens.size() < 4 || tokens[2] != "degree")
    throw ParseError(line_no, "expected 'degree <int>' after the class id");
  if (tokens.size() < 5 || tokens[4] != "coeff")
    throw ParseError(line_no, "expected 'coeff <group>' after the degree");
  std::size_t value_pos = 5;
  while (value_pos < tokens.size() && tokens[value_pos] != "value")
    ++value_pos;
  if (value_pos == tokens.size())
    throw ParseError(line_no, "expected 'value <zero|nonzero|unknown|(...)>'");
  if (value_pos == 5)
    throw ParseError(line_no, "missing coefficient group");
  if (value_pos + 1 == tokens.size())
    throw ParseError(line_no, "missing value after 'value'");

  ProfileEntry entry;
  entry.id = tokens[1];
  entry.degree = parse_degree(line_no, tokens[3]);
  try {
    entry.coefficient = parse_group(join_tokens(tokens, 5, value_pos));
  } catch (const std::exception& e) {
    throw ParseError(line_no, e.what());
  }

  const std::string value = join_tokens(tokens, value_pos + 1, tokens.size());
  if (value == "zero") {
    entry.value.kind = ClassValueKind::Zero;
  } else if (value == "nonzero") {
    entry.value.kind = ClassValueKind::Nonzero;
  } else if (value == "unknown") {
    entry.value.kind = ClassValueKind::Unknown;
  } else if (!value.empty() && value.front() == '(') {
    entry.value.kind = ClassValueKind::Element;
    try {
      entry.value.element = parse_element(entry.coefficient, value);
    } catch (const std::exception& e) {
      throw ParseError(line_no, e.what());
    }
  } else {
    throw ParseError(line_no, "unrecognized value '" + value + "'");
  }
  return entry;
}

}  // namespace

const ProfileEntry* CohomologyProfile::find(const std::string& id) const {
  for (const ProfileEntry& entry : entries)
    if (entry.id == id) return &entry;
  return nullptr;
}

CohomologyProfile parse_profile(std::string_view text) {
  CohomologyProfile profile;
  bool have_space = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::vector<std::string> tokens = split_whitespace(raw);
    if (tokens.empty()) continue;
    if (!have_space) {
      if (tokens[0] != "space")
        throw ParseError(line_no, "the first directive must be 'space'");
      if (tokens.size() != 2)
        throw ParseError(line_no, "'space' takes exactly one name");
      profile.space_name = tokens[1];
      have_space = true;
      continue;
    }
    if (tokens[0] == "space")
      throw ParseError(line_no, "duplicate 'space' directive");
    if (tokens[0] != "class")
      throw ParseError(line_no, "unknown directive '" + tokens[0] + "'");
    ProfileEntry entry = parse_class_line(line_no, tokens);
    if (profile.find(entry.id) != nullptr)
      throw ParseError(line_no, "duplicate class id '" + entry.id + "'");
    profile.entries.push_back(std::move(entry));
  }
  if (!have_space)
    throw ParseError(1, "empty profile: expected a 'space' directive");
  return profile;
}

namespace {

void check_vocabulary(const ProfileEntry& entry, const ClassRef& ref) {
  if (entry.degree != ref.degree)
    throw std::invalid_argument(
        "profile entry '" + entry.id + "' declares degree " +
        std::to_string(entry.degree) + " but the class has degree " +
        std::to_string(ref.degree));
  if (!(entry.coefficient == ref.coefficient))
    throw std::invalid_argument("profile entry '" + entry.id +
                                "' declares coefficient group " +
                                entry.coefficient.str() +
                                " but the class takes " +
                                ref.coefficient.str());
}

struct SideValue {
  std::vector<std::string> unresolved;  // unknown, nonzero or missing ids
  std::vector<Int> coords;
};

SideValue resolve_side(const CohomologyProfile& profile,
                       const std::vector<ClassRef>& refs) {
  SideValue side;
  for (const ClassRef& ref : refs) {
    const ProfileEntry* entry = profile.find(ref.id());
    if (entry == nullptr) entry = profile.find(ref.label());
    if (entry == nullptr) {
      side.unresolved.push_back(ref.id());
      continue;
    }
    check_vocabulary(*entry, ref);
    if (entry->value.kind == ClassValueKind::Zero) {
      for (std::size_t i = 0; i < ref.coefficient.coord_count(); ++i)
        side.coords.emplace_back(0);
    } else if (entry->value.kind == ClassValueKind::Element) {
      for (const Int& c : entry->value.element->coords())
        side.coords.push_back(c);
    } else {
      side.unresolved.push_back(ref.id());
    }
  }
  return side;
}

}  // namespace

LiftVerdict evaluate_lift(const CohomologyProfile& profile, const Tower& tower,
                          int target_stage) {
  if (target_stage < 0 ||
      target_stage >= static_cast<int>(tower.stages.size()))
    throw std::invalid_argument(
        "target stage " + std::to_string(target_stage) +
        " is outside the tower (stages 0.." +
        std::to_string(tower.stages.size() - 1) + ")");
  for (int s = 0; s <= target_stage; ++s) {
    const TowerStage& stage = tower.stages[s];
    std::vector<std::string> blockers;
    std::vector<std::string> indeterminate;
    for (const ClassRef& ref : stage.obstructions) {
      const std::string id = ref.id();
      const ProfileEntry* entry = profile.find(id);
      if (entry == nullptr) {
        indeterminate.push_back(id);
        continue;
      }
      check_vocabulary(*entry, ref);
      switch (entry->value.kind) {
        case ClassValueKind::Zero:
          break;
        case ClassValueKind::Element:
          if (!entry->value.element->is_zero()) blockers.push_back(id);
          break;
        case ClassValueKind::Nonzero:
          blockers.push_back(id);
          break;
        case ClassValueKind::Unknown:
          indeterminate.push_back(id);
          break;
      }
    }
    if (!blockers.empty()) {
      LiftVerdict verdict;
      verdict.status = LiftStatus::Obstructed;
      verdict.stage_index = s;
      verdict.class_ids = std::move(blockers);
      return verdict;
    }
    if (!indeterminate.empty()) {
      LiftVerdict verdict;
      verdict.status = LiftStatus::Undetermined;
      verdict.stage_index = s;
      verdict.class_ids = std::move(indeterminate);
      return verdict;
    }
  }
  LiftVerdict verdict;
  verdict.status = LiftStatus::Lifts;
  return verdict;
}

LiftVerdict evaluate_twisted(const CohomologyProfile& profile,
                             const TwistSpec& spec) {
  SideValue left = resolve_side(profile, spec.left);
  SideValue right = resolve_side(profile, spec.right);
  if (!left.unresolved.empty() || !right.unresolved.empty()) {
    LiftVerdict verdict;
    verdict.status = LiftStatus::Undetermined;
    verdict.class_ids = std::move(left.unresolved);
    for (std::string& id : right.unresolved)
      verdict.class_ids.push_back(std::move(id));
    return verdict;
  }

  std::vector<Int> rhs_coords;
  if (spec.hom.has_value()) {
    const IntMatrix& h = *spec.hom;
    if (h.rows() != spec.left_coefficient.coord_count() ||
        h.cols() != right.coords.size())
      throw std::invalid_argument(
          "hom matrix shape does not match the coefficient groups");
    rhs_coords.assign(h.rows(), Int(0));
    for (std::size_t i = 0; i < h.rows(); ++i)
      for (std::size_t j = 0; j < h.cols(); ++j)
        rhs_coords[i] += h.at(i, j) * right.coords[j];
  } else {
    if (!(spec.left_coefficient == spec.right_coefficient))
      throw std::invalid_argument("incomparable classes");
    rhs_coords = std::move(right.coords);
  }

  const GroupElement lhs(spec.left_coefficient, std::move(left.coords));
  const GroupElement rhs(spec.left_coefficient, std::move(rhs_coords));
  const GroupElement diff = lhs - rhs;

  LiftVerdict verdict;
  verdict.difference = diff;
  if (diff.is_zero()) {
    verdict.status = LiftStatus::Lifts;
    return verdict;
  }
  verdict.status = LiftStatus::Obstructed;
  for (const ClassRef& ref : spec.left) verdict.class_ids.push_back(ref.id());
  for (const ClassRef& ref : spec.right)
    verdict.class_ids.push_back(ref.id());
  return verdict;
}

}  // namespace towercalc
