#include "towercalc/lift.hpp"

#include <string>
#include <vector>

#include "doctest.h"

using namespace towercalc;

namespace {

const char* kAllZeroO33 =
    "# everything vanishes\n"
    "space M6\n"
    "class w1.1 degree 1 coeff Z/2 value zero\n"
    "class w1.2 degree 1 coeff Z/2 value zero\n"
    "class w2.1 degree 2 coeff Z/2 value zero\n"
    "class w2.2 degree 2 coeff Z/2 value zero\n"
    "class half_p1.1 degree 4 coeff Z value zero\n"
    "class half_p1.2 degree 4 coeff Z value zero\n";

CohomologyProfile profile_for_o33(
    const std::vector<std::pair<std::string, std::string>>& overrides) {
  std::string text = "space M6\n";
  const std::vector<std::pair<std::string, std::string>> base = {
      {"w1.1", "degree 1 coeff Z/2 value zero"},
      {"w1.2", "degree 1 coeff Z/2 value zero"},
      {"w2.1", "degree 2 coeff Z/2 value zero"},
      {"w2.2", "degree 2 coeff Z/2 value zero"},
      {"half_p1.1", "degree 4 coeff Z value zero"},
      {"half_p1.2", "degree 4 coeff Z value zero"},
  };
  for (const auto& [id, rest] : base) {
    std::string line = rest;
    for (const auto& [oid, orest] : overrides)
      if (oid == id) line = orest;
    if (line == "omit") continue;
    text += "class " + id + " " + line + "\n";
  }
  return parse_profile(text);
}

}  // namespace

TEST_SUITE("lift") {
  TEST_CASE("profile parsing") {
    const CohomologyProfile p = parse_profile(kAllZeroO33);
    CHECK(p.space_name == "M6");
    CHECK(p.entries.size() == 6);
    REQUIRE(p.find("w2.1") != nullptr);
    CHECK(p.find("w2.1")->degree == 2);
    CHECK(p.find("w2.1")->coefficient == parse_group("Z/2"));
    CHECK(p.find("w2.1")->value.kind == ClassValueKind::Zero);
    CHECK(p.find("nope") == nullptr);

    const CohomologyProfile q = parse_profile(
        "space X\n"
        "class half_p1.1 degree 4 coeff Z value (3)\n"
        "class w2.1 degree 2 coeff Z/2 value nonzero\n"
        "class e.1 degree 4 coeff Z x Z value (1, -2)\n"
        "class c2.2 degree 4 coeff Z value unknown\n");
    CHECK(q.find("half_p1.1")->value.kind == ClassValueKind::Element);
    CHECK(q.find("half_p1.1")->value.element->str() == "(3)");
    CHECK(q.find("w2.1")->value.kind == ClassValueKind::Nonzero);
    CHECK(q.find("e.1")->coefficient == parse_group("Z x Z"));
    CHECK(q.find("e.1")->value.element->str() == "(1, -2)");
    CHECK(q.find("c2.2")->value.kind == ClassValueKind::Unknown);
  }

  TEST_CASE("profile parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS((void)parse_profile("class w1.1 degree 1\n"),
                         doctest::Contains("line 1"), ParseError);
    CHECK_THROWS_WITH_AS(
        (void)parse_profile("space X\nclss w1.1 degree 1 coeff Z/2 value "
                            "zero\n"),
        doctest::Contains("line 2"), ParseError);
    // Shape mismatch: Z takes exactly one coordinate, "(3,)" supplies two
    // slots.
    CHECK_THROWS_WITH_AS(
        (void)parse_profile(
            "space X\nclass c2.2 degree 4 coeff Z value (3,)\n"),
        doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_AS(
        (void)parse_profile(
            "space X\nclass c2.2 degree 4 coeff Z value (3,)\n"),
        ParseError);
    // Duplicate ids are rejected.
    CHECK_THROWS_WITH_AS(
        (void)parse_profile("space X\n"
                            "class w1.1 degree 1 coeff Z/2 value zero\n"
                            "class w1.1 degree 1 coeff Z/2 value zero\n"),
        doctest::Contains("line 3"), ParseError);
    CHECK_THROWS_AS((void)parse_profile(""), ParseError);
    CHECK_THROWS_AS((void)parse_profile("space X\nspace Y\n"), ParseError);
    CHECK_THROWS_AS(
        (void)parse_profile("space X\nclass a degree x coeff Z value zero\n"),
        ParseError);
    CHECK_THROWS_AS(
        (void)parse_profile("space X\nclass a degree 4 coeff Z\n"),
        ParseError);
  }

  TEST_CASE("lift verdicts along the orthogonal tower") {
    const Tower t = build_tower(parse_descriptor("O(3,3)"));

    const LiftVerdict all_zero =
        evaluate_lift(parse_profile(kAllZeroO33), t, 2);
    CHECK(all_zero.status == LiftStatus::Lifts);

    // A definitely nonzero w2 blocks at the spin stage; both blockers in
    // the stage are reported.
    const LiftVerdict blocked = evaluate_lift(
        profile_for_o33({{"w2.1", "degree 2 coeff Z/2 value nonzero"}}), t, 2);
    CHECK(blocked.status == LiftStatus::Obstructed);
    CHECK(blocked.stage_index == 1);
    CHECK(blocked.class_ids == std::vector<std::string>{"w2.1"});

    const LiftVerdict blocked2 = evaluate_lift(
        profile_for_o33({{"w2.1", "degree 2 coeff Z/2 value nonzero"},
                         {"w2.2", "degree 2 coeff Z/2 value (1)"}}),
        t, 2);
    CHECK(blocked2.status == LiftStatus::Obstructed);
    CHECK(blocked2.class_ids ==
          std::vector<std::string>{"w2.1", "w2.2"});

    // Nonzero elements that reduce to zero in the coefficient group pass.
    const LiftVerdict even = evaluate_lift(
        profile_for_o33({{"w2.1", "degree 2 coeff Z/2 value (2)"}}), t, 2);
    CHECK(even.status == LiftStatus::Lifts);

    // Missing or unknown entries leave the verdict undetermined at the
    // first affected stage.
    const LiftVerdict missing = evaluate_lift(
        profile_for_o33({{"half_p1.2", "omit"}}), t, 2);
    CHECK(missing.status == LiftStatus::Undetermined);
    CHECK(missing.stage_index == 2);
    CHECK(missing.class_ids == std::vector<std::string>{"half_p1.2"});

    const LiftVerdict unk = evaluate_lift(
        profile_for_o33({{"w1.1", "degree 1 coeff Z/2 value unknown"}}), t, 2);
    CHECK(unk.status == LiftStatus::Undetermined);
    CHECK(unk.stage_index == 0);

    // An undetermined stage hides later definite blockers...
    const LiftVerdict veiled = evaluate_lift(
        profile_for_o33({{"w1.1", "degree 1 coeff Z/2 value unknown"},
                         {"w2.1", "degree 2 coeff Z/2 value nonzero"}}),
        t, 2);
    CHECK(veiled.status == LiftStatus::Undetermined);
    CHECK(veiled.stage_index == 0);

    // ...but a blocker in the same stage as an unknown wins.
    const LiftVerdict both = evaluate_lift(
        profile_for_o33({{"w1.1", "degree 1 coeff Z/2 value unknown"},
                         {"w1.2", "degree 1 coeff Z/2 value nonzero"}}),
        t, 2);
    CHECK(both.status == LiftStatus::Obstructed);
    CHECK(both.stage_index == 0);
    CHECK(both.class_ids == std::vector<std::string>{"w1.2"});

    // Restricting the target stage ignores deeper obstructions.
    const LiftVerdict shallow = evaluate_lift(
        profile_for_o33({{"half_p1.1", "degree 4 coeff Z value (7)"}}), t, 1);
    CHECK(shallow.status == LiftStatus::Lifts);
    const LiftVerdict deep = evaluate_lift(
        profile_for_o33({{"half_p1.1", "degree 4 coeff Z value (7)"}}), t, 2);
    CHECK(deep.status == LiftStatus::Obstructed);
    CHECK(deep.stage_index == 2);

    // Obstructed verdicts are stable under deepening the target.
    const LiftVerdict at1 = evaluate_lift(
        profile_for_o33({{"w2.1", "degree 2 coeff Z/2 value nonzero"}}), t, 1);
    CHECK(at1.status == LiftStatus::Obstructed);
    CHECK(at1.stage_index == blocked.stage_index);
    CHECK(at1.class_ids == blocked.class_ids);

    CHECK_THROWS_AS(
        (void)evaluate_lift(parse_profile(kAllZeroO33), t, 3),
        std::invalid_argument);
  }

  TEST_CASE("vocabulary mismatches are errors, not unknowns") {
    const Tower t = build_tower(parse_descriptor("O(3,3)"));
    CHECK_THROWS_WITH_AS(
        (void)evaluate_lift(
            profile_for_o33({{"w2.1", "degree 3 coeff Z/2 value zero"}}), t,
            2),
        doctest::Contains("w2.1"), std::invalid_argument);
    CHECK_THROWS_AS(
        (void)evaluate_lift(
            profile_for_o33({{"w2.1", "degree 2 coeff Z value zero"}}), t, 2),
        std::invalid_argument);
  }

  TEST_CASE("zero literal and zero element are interchangeable") {
    const Tower t = build_tower(parse_descriptor("O(3,3)"));
    const LiftVerdict a = evaluate_lift(
        profile_for_o33({{"w1.1", "degree 1 coeff Z/2 value (0)"},
                         {"half_p1.1", "degree 4 coeff Z value (0)"}}),
        t, 2);
    CHECK(a.status == LiftStatus::Lifts);
  }

  TEST_CASE("unitary tower lift with skippable first stage") {
    const Tower t = build_tower(parse_descriptor("U(2,2)"));
    const LiftVerdict v = evaluate_lift(
        parse_profile("space X\n"
                      "class c1.1 degree 2 coeff Z value zero\n"
                      "class c1.2 degree 2 coeff Z value zero\n"
                      "class c2.1 degree 4 coeff Z value zero\n"
                      "class c2.2 degree 4 coeff Z value zero\n"),
        t, 1);
    CHECK(v.status == LiftStatus::Lifts);
  }

  TEST_CASE("green-schwarz twisted comparison") {
    const TwistSpec gs = green_schwarz_spec();
    const LiftVerdict eq = evaluate_twisted(
        parse_profile("space X\n"
                      "class half_p1 degree 4 coeff Z value (3)\n"
                      "class c2 degree 4 coeff Z value (3)\n"),
        gs);
    CHECK(eq.status == LiftStatus::Lifts);

    // Fully qualified side keys work identically.
    const LiftVerdict eq2 = evaluate_twisted(
        parse_profile("space X\n"
                      "class half_p1.1 degree 4 coeff Z value (3)\n"
                      "class c2.2 degree 4 coeff Z value (3)\n"),
        gs);
    CHECK(eq2.status == LiftStatus::Lifts);

    const LiftVerdict ne = evaluate_twisted(
        parse_profile("space X\n"
                      "class half_p1 degree 4 coeff Z value (3)\n"
                      "class c2 degree 4 coeff Z value (5)\n"),
        gs);
    CHECK(ne.status == LiftStatus::Obstructed);
    REQUIRE(ne.difference.has_value());
    CHECK(ne.difference->str() == "(-2)");
    CHECK(ne.class_ids ==
          std::vector<std::string>{"half_p1.1", "c2.2"});

    const LiftVerdict und = evaluate_twisted(
        parse_profile("space X\n"
                      "class half_p1 degree 4 coeff Z value nonzero\n"
                      "class c2 degree 4 coeff Z value (5)\n"),
        gs);
    CHECK(und.status == LiftStatus::Undetermined);
    CHECK(und.class_ids == std::vector<std::string>{"half_p1.1"});

    const LiftVerdict missing = evaluate_twisted(
        parse_profile("space X\n"
                      "class c2 degree 4 coeff Z value (5)\n"),
        gs);
    CHECK(missing.status == LiftStatus::Undetermined);
  }

  TEST_CASE("twisted spin comparison over Z/2") {
    const TwistSpec w2twist = twisted_descriptor(TwistKind::Spin, 3, 5);
    const LiftVerdict v = evaluate_twisted(
        parse_profile("space X\n"
                      "class w2.1 degree 2 coeff Z/2 value zero\n"
                      "class w2.2 degree 2 coeff Z/2 value (1)\n"),
        w2twist);
    CHECK(v.status == LiftStatus::Obstructed);
    CHECK(v.difference->str() == "(1)");

    const LiftVerdict same = evaluate_twisted(
        parse_profile("space X\n"
                      "class w2.1 degree 2 coeff Z/2 value (1)\n"
                      "class w2.2 degree 2 coeff Z/2 value (1)\n"),
        w2twist);
    CHECK(same.status == LiftStatus::Lifts);
  }

  TEST_CASE("paired rank-4 twisted comparison") {
    const TwistSpec st44 = twisted_descriptor(TwistKind::String, 4, 4);
    const LiftVerdict eq = evaluate_twisted(
        parse_profile("space X\n"
                      "class half_p1.1.1 degree 4 coeff Z value (1)\n"
                      "class half_p1.1.2 degree 4 coeff Z value (2)\n"
                      "class half_p1.2.1 degree 4 coeff Z value (1)\n"
                      "class half_p1.2.2 degree 4 coeff Z value (2)\n"),
        st44);
    CHECK(eq.status == LiftStatus::Lifts);

    const LiftVerdict ne = evaluate_twisted(
        parse_profile("space X\n"
                      "class half_p1.1.1 degree 4 coeff Z value (1)\n"
                      "class half_p1.1.2 degree 4 coeff Z value (2)\n"
                      "class half_p1.2.1 degree 4 coeff Z value (1)\n"
                      "class half_p1.2.2 degree 4 coeff Z value (3)\n"),
        st44);
    CHECK(ne.status == LiftStatus::Obstructed);
    CHECK(ne.difference->str() == "(0, -1)");
  }

  TEST_CASE("twisted comparison through an explicit hom") {
    TwistSpec spec = green_schwarz_spec();
    IntMatrix doubling(1, 1);
    doubling.at(0, 0) = 2;
    spec.hom = doubling;
    const LiftVerdict v = evaluate_twisted(
        parse_profile("space X\n"
                      "class half_p1 degree 4 coeff Z value (6)\n"
                      "class c2 degree 4 coeff Z value (3)\n"),
        spec);
    CHECK(v.status == LiftStatus::Lifts);
  }

  TEST_CASE("incomparable coefficients without a hom") {
    TwistSpec spec = green_schwarz_spec();
    spec.hom.reset();
    spec.right_coefficient = parse_group("Z/2");
    spec.right[0].coefficient = parse_group("Z/2");
    CHECK_THROWS_WITH_AS(
        (void)evaluate_twisted(
            parse_profile("space X\n"
                          "class half_p1 degree 4 coeff Z value (3)\n"
                          "class c2 degree 4 coeff Z/2 value (1)\n"),
            spec),
        "incomparable classes", std::invalid_argument);
  }
}
