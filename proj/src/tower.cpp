#include "towercalc/tower.hpp"

#include <stdexcept>

#include "towercalc/errors.hpp"

namespace towercalc {

namespace {

std::vector<int> tower_factors(const GroupDescriptor& d) {
  if (d.p > 0 && d.q > 0) return {d.p, d.q};
  return {d.p + d.q};
}

FgAbGroup stage_coefficient(const std::vector<ClassRef>& obstructions) {
  FgAbGroup sum;
  for (const ClassRef& c : obstructions) sum = direct_sum(sum, c.coefficient);
  return sum;
}

TowerStage make_stage(int index, std::string source, std::string target,
                      int killed_pi, std::vector<ClassRef> obstructions,
                      bool skippable = false) {
  TowerStage stage;
  stage.index = index;
  stage.source_name = std::move(source);
  stage.target_name = std::move(target);
  stage.killed_pi = killed_pi;
  stage.coefficient = stage_coefficient(obstructions);
  stage.obstructions = std::move(obstructions);
  stage.skippable = skippable;
  return stage;
}

}  // namespace

Tower build_tower(const GroupDescriptor& d) {
  if (d.p + d.q <= 0) throw std::invalid_argument("empty signature");
  if (d.family != Family::O && d.family != Family::U &&
      d.family != Family::Sp)
    throw std::invalid_argument("towers are built only for O, U and Sp; '" +
                                descriptor_str(d) +
                                "' already names a cover level");

  Tower tower;
  tower.descriptor = d;
  const std::vector<int> factors = tower_factors(d);
  const std::string base = descriptor_str(d);

  if (d.family == Family::O) {
    std::vector<ClassRef> kill_pi0;
    std::vector<ClassRef> kill_pi1;
    std::vector<ClassRef> kill_pi3;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      const int n = factors[f];
      const int idx = static_cast<int>(f) + 1;
      kill_pi0.push_back(make_class(ClassName::w1, idx));
      if (n == 2)
        kill_pi1.push_back(make_class(ClassName::sqrt_p1, idx));
      else if (n >= 3)
        kill_pi1.push_back(make_class(ClassName::w2, idx));
      if (n == 4) {
        kill_pi3.push_back(make_class(ClassName::half_p1, idx, 1));
        kill_pi3.push_back(make_class(ClassName::half_p1, idx, 2));
      } else if (n >= 3) {
        kill_pi3.push_back(make_class(ClassName::half_p1, idx));
      }
    }
    const std::string so_level =
        factors.size() == 2 ? "SO(" + std::to_string(d.p) + "," +
                                  std::to_string(d.q) + ")^0"
                            : "SO(" + std::to_string(d.p + d.q) + ")";
    tower.stages.push_back(make_stage(0, base, so_level, 0, kill_pi0));
    tower.stages.push_back(
        make_stage(1, so_level, "Spin-cover", 1, kill_pi1));
    tower.stages.push_back(
        make_stage(2, "Spin-cover", "String-cover", 3, kill_pi3));
    return tower;
  }

  if (d.family == Family::U) {
    std::vector<ClassRef> kill_pi1;
    std::vector<ClassRef> kill_pi3;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      const int n = factors[f];
      const int idx = static_cast<int>(f) + 1;
      kill_pi1.push_back(make_class(ClassName::c1, idx));
      if (n >= 2) kill_pi3.push_back(make_class(ClassName::c2, idx));
    }
    tower.stages.push_back(
        make_stage(0, base, "universal-cover", 1, kill_pi1, true));
    tower.stages.push_back(
        make_stage(1, "universal-cover", "String-cover", 3, kill_pi3));
    return tower;
  }

  std::vector<ClassRef> kill_pi3;
  for (std::size_t f = 0; f < factors.size(); ++f)
    kill_pi3.push_back(
        make_class(ClassName::p1H, static_cast<int>(f) + 1));
  tower.stages.push_back(make_stage(0, base, "String-cover", 3, kill_pi3));
  return tower;
}

int target_stage_index(const Tower& tower, const std::string& name) {
  switch (tower.descriptor.family) {
    case Family::O:
      if (name == "SO") return 0;
      if (name == "Spin") return 1;
      if (name == "String") return 2;
      break;
    case Family::U:
      if (name == "cover") return 0;
      if (name == "String") return 1;
      break;
    case Family::Sp:
      if (name == "String") return 0;
      break;
    default:
      break;
  }
  throw std::invalid_argument("'" + name +
                              "' does not name a stage of the " +
                              descriptor_str(tower.descriptor) + " tower");
}

std::string render_stage(const TowerStage& stage, bool unicode) {
  std::string line = "stage " + std::to_string(stage.index) + ": kill pi_" +
                     std::to_string(stage.killed_pi) + ", obstruction ";
  if (stage.obstructions.empty()) {
    line += "none";
  } else {
    for (std::size_t i = 0; i < stage.obstructions.size(); ++i) {
      if (i > 0) line += " x ";
      line += stage.obstructions[i].label();
    }
  }
  line += " in H^" + std::to_string(stage.killed_pi + 1) + "(X; " +
          stage.coefficient.str(unicode) + ")";
  if (stage.skippable) line += " [skippable]";
  return line;
}

std::string render_tower(const Tower& tower, bool unicode) {
  std::string out;
  for (const TowerStage& stage : tower.stages)
    out += render_stage(stage, unicode) + "\n";
  return out;
}

TwistSpec twisted_descriptor(TwistKind kind, int p, int q) {
  if (p < 1 || q < 1)
    throw std::invalid_argument(
        "twisted coverings need both factor ranks positive");
  TwistSpec spec;
  spec.kind = kind;
  switch (kind) {
    case TwistKind::SO:
      spec.left = {make_class(ClassName::w1, 1)};
      spec.right = {make_class(ClassName::w1, 2)};
      break;
    case TwistKind::Spin:
      if (p == 2 && q == 2) {
        spec.left = {make_class(ClassName::sqrt_p1, 1)};
        spec.right = {make_class(ClassName::sqrt_p1, 2)};
      } else if (p >= 3 && q >= 3) {
        spec.left = {make_class(ClassName::w2, 1)};
        spec.right = {make_class(ClassName::w2, 2)};
      } else {
        throw OutsideTable("no twisted covering case for Spin(" +
                           std::to_string(p) + "," + std::to_string(q) + ")");
      }
      break;
    case TwistKind::String:
      if (p != 4 && q != 4) {
        spec.left = {make_class(ClassName::half_p1, 1)};
        spec.right = {make_class(ClassName::half_p1, 2)};
      } else if (p == 4 && q == 4) {
        spec.left = {make_class(ClassName::half_p1, 1, 1),
                     make_class(ClassName::half_p1, 1, 2)};
        spec.right = {make_class(ClassName::half_p1, 2, 1),
                      make_class(ClassName::half_p1, 2, 2)};
      } else {
        throw OutsideTable("no twisted covering case for String(" +
                           std::to_string(p) + "," + std::to_string(q) +
                           "): a lone rank-4 factor splits while the other "
                           "does not");
      }
      break;
  }
  spec.left_coefficient = stage_coefficient(spec.left);
  spec.right_coefficient = stage_coefficient(spec.right);
  return spec;
}

TwistSpec green_schwarz_spec() {
  TwistSpec spec;
  spec.kind = TwistKind::String;
  spec.left = {make_class(ClassName::half_p1, 1)};
  spec.right = {make_class(ClassName::c2, 2)};
  spec.left_coefficient = spec.left[0].coefficient;
  spec.right_coefficient = spec.right[0].coefficient;
  spec.hom = IntMatrix::identity(1);
  return spec;
}

}  // namespace towercalc
