#include "towercalc/tower.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"

using namespace towercalc;

namespace {

Tower make_tower(const char* descriptor) {
  return build_tower(parse_descriptor(descriptor));
}

std::vector<std::string> stage_labels(const TowerStage& st) {
  std::vector<std::string> out;
  for (const ClassRef& c : st.obstructions) out.push_back(c.label());
  return out;
}

}  // namespace

TEST_SUITE("tower") {
  TEST_CASE("orthogonal towers, definite") {
    const Tower t = make_tower("O(7)");
    REQUIRE(t.stages.size() == 3);
    CHECK(t.stages[0].killed_pi == 0);
    CHECK(stage_labels(t.stages[0]) == std::vector<std::string>{"w1"});
    CHECK(t.stages[0].coefficient == parse_group("Z/2"));
    CHECK(t.stages[1].killed_pi == 1);
    CHECK(stage_labels(t.stages[1]) == std::vector<std::string>{"w2"});
    CHECK(t.stages[2].killed_pi == 3);
    CHECK(stage_labels(t.stages[2]) == std::vector<std::string>{"half_p1"});
    CHECK(t.stages[2].coefficient == parse_group("Z"));
    for (const TowerStage& st : t.stages) {
      FgAbGroup sum;
      for (const ClassRef& c : st.obstructions)
        sum = direct_sum(sum, c.coefficient);
      CHECK(st.coefficient == sum);
      for (const ClassRef& c : st.obstructions)
        CHECK(c.degree == st.killed_pi + 1);
    }
  }

  TEST_CASE("orthogonal tower case matrix") {
    // (3,3): two of everything.
    const Tower t33 = make_tower("O(3,3)");
    CHECK(stage_labels(t33.stages[0]) ==
          std::vector<std::string>{"w1", "w1"});
    CHECK(stage_labels(t33.stages[1]) ==
          std::vector<std::string>{"w2", "w2"});
    CHECK(stage_labels(t33.stages[2]) ==
          std::vector<std::string>{"half_p1", "half_p1"});
    CHECK(t33.stages[2].coefficient == parse_group("Z x Z"));

    // (1,n): the rank-1 factor only contributes its w1.
    const Tower t15 = make_tower("O(1,5)");
    CHECK(stage_labels(t15.stages[0]) ==
          std::vector<std::string>{"w1", "w1"});
    CHECK(stage_labels(t15.stages[1]) == std::vector<std::string>{"w2"});
    CHECK(stage_labels(t15.stages[2]) ==
          std::vector<std::string>{"half_p1"});

    // (2,2): rank-2 factors swap w2 for sqrt_p1 and kill no pi_3.
    const Tower t22 = make_tower("O(2,2)");
    CHECK(stage_labels(t22.stages[1]) ==
          std::vector<std::string>{"sqrt_p1", "sqrt_p1"});
    CHECK(t22.stages[1].coefficient == parse_group("Z x Z"));
    CHECK(t22.stages[2].obstructions.empty());
    CHECK(t22.stages[2].coefficient.is_trivial());

    // (2,q>=3): mixed coefficient Z x Z/2 at the spin stage.
    const Tower t25 = make_tower("O(2,5)");
    CHECK(stage_labels(t25.stages[1]) ==
          std::vector<std::string>{"sqrt_p1", "w2"});
    CHECK(t25.stages[1].coefficient == parse_group("Z x Z/2"));
    CHECK(stage_labels(t25.stages[2]) ==
          std::vector<std::string>{"half_p1"});

    // Rank 4 splits its degree-4 class.
    const Tower t45 = make_tower("O(4,5)");
    CHECK(stage_labels(t45.stages[2]) ==
          std::vector<std::string>{"half_p1#1", "half_p1#2", "half_p1"});
    CHECK(t45.stages[2].coefficient == parse_group("Z x Z x Z"));
    std::vector<std::string> ids;
    for (const ClassRef& c : t45.stages[2].obstructions)
      ids.push_back(c.id());
    CHECK(ids == std::vector<std::string>{"half_p1.1.1", "half_p1.1.2",
                                          "half_p1.2"});

    const Tower t44 = make_tower("O(4,4)");
    CHECK(stage_labels(t44.stages[2]) ==
          std::vector<std::string>{"half_p1#1", "half_p1#2", "half_p1#1",
                                   "half_p1#2"});
    CHECK(t44.stages[2].coefficient == parse_group("Z x Z x Z x Z"));

    const Tower t55 = make_tower("O(5,5)");
    CHECK(stage_labels(t55.stages[2]) ==
          std::vector<std::string>{"half_p1", "half_p1"});

    // Degenerate absorption: O(1,n) above matches O(n) except for the
    // extra w1.
    const Tower t5 = make_tower("O(5)");
    CHECK(stage_labels(t15.stages[1]) == stage_labels(t5.stages[1]));
    CHECK(stage_labels(t15.stages[2]) == stage_labels(t5.stages[2]));
  }

  TEST_CASE("factor symmetry as multisets per stage") {
    const char* pairs[][2] = {{"O(2,5)", "O(5,2)"},
                              {"O(4,5)", "O(5,4)"},
                              {"O(1,3)", "O(3,1)"},
                              {"U(1,4)", "U(4,1)"},
                              {"Sp(1,2)", "Sp(2,1)"}};
    for (const auto& pr : pairs) {
      const Tower a = make_tower(pr[0]);
      const Tower b = make_tower(pr[1]);
      REQUIRE(a.stages.size() == b.stages.size());
      for (std::size_t s = 0; s < a.stages.size(); ++s) {
        auto la = stage_labels(a.stages[s]);
        auto lb = stage_labels(b.stages[s]);
        std::sort(la.begin(), la.end());
        std::sort(lb.begin(), lb.end());
        CAPTURE(pr[0]);
        CHECK(la == lb);
        CHECK(a.stages[s].coefficient == b.stages[s].coefficient);
      }
    }
  }

  TEST_CASE("spin-stage coefficient tracks the degree-2 pipeline") {
    for (int p = 2; p <= 6; ++p)
      for (int q = 2; q <= 6; ++q) {
        const Tower t = make_tower(
            ("O(" + std::to_string(p) + "," + std::to_string(q) + ")")
                .c_str());
        const TowerStage& spin = t.stages[1];
        const FgAbGroup h2 = h2_bso_indefinite(p, q);
        std::size_t z_classes = 0, z2_classes = 0;
        for (const ClassRef& c : spin.obstructions) {
          if (c.coefficient == FgAbGroup::free(1)) ++z_classes;
          if (c.coefficient == FgAbGroup::cyclic(2)) ++z2_classes;
        }
        CAPTURE(p);
        CAPTURE(q);
        // Free classes match the free rank of integral H^2; mod-2 classes
        // appear once per rank >= 3 factor.
        CHECK(z_classes == h2.rank());
        CHECK(z2_classes == static_cast<std::size_t>((p >= 3) + (q >= 3)));
      }
  }

  TEST_CASE("unitary towers") {
    const Tower t = make_tower("U(1,4)");
    REQUIRE(t.stages.size() == 2);
    CHECK(t.stages[0].killed_pi == 1);
    CHECK(stage_labels(t.stages[0]) == std::vector<std::string>{"c1", "c1"});
    CHECK(t.stages[0].coefficient == parse_group("Z x Z"));
    CHECK(t.stages[0].skippable);
    CHECK(t.stages[1].killed_pi == 3);
    CHECK(stage_labels(t.stages[1]) == std::vector<std::string>{"c2"});
    CHECK_FALSE(t.stages[1].skippable);

    const Tower t23 = make_tower("U(2,3)");
    CHECK(stage_labels(t23.stages[1]) == std::vector<std::string>{"c2", "c2"});
    CHECK(t23.stages[1].coefficient == parse_group("Z x Z"));

    const Tower t1 = make_tower("U(1)");
    REQUIRE(t1.stages.size() == 2);
    CHECK(stage_labels(t1.stages[0]) == std::vector<std::string>{"c1"});
    CHECK(t1.stages[1].obstructions.empty());
  }

  TEST_CASE("symplectic towers") {
    const Tower t = make_tower("Sp(1,1)");
    REQUIRE(t.stages.size() == 1);
    CHECK(t.stages[0].killed_pi == 3);
    CHECK(stage_labels(t.stages[0]) ==
          std::vector<std::string>{"p1H", "p1H"});
    CHECK(t.stages[0].coefficient == parse_group("Z x Z"));
    CHECK(stage_labels(make_tower("Sp(3)").stages[0]) ==
          std::vector<std::string>{"p1H"});
  }

  TEST_CASE("tower construction errors") {
    CHECK_THROWS_AS((void)make_tower("Spin(3,3)"), std::invalid_argument);
    CHECK_THROWS_AS((void)make_tower("SO(3,3)"), std::invalid_argument);
    CHECK_THROWS_AS((void)make_tower("String(5,5)"), std::invalid_argument);
  }

  TEST_CASE("stage rendering") {
    const Tower t = make_tower("O(3,3)");
    CHECK(render_stage(t.stages[0]) ==
          "stage 0: kill pi_0, obstruction w1 x w1 in H^1(X; Z/2 x Z/2)");
    CHECK(render_stage(t.stages[1]) ==
          "stage 1: kill pi_1, obstruction w2 x w2 in H^2(X; Z/2 x Z/2)");
    CHECK(render_stage(t.stages[2]) ==
          "stage 2: kill pi_3, obstruction half_p1 x half_p1 in H^4(X; Z^2)");
    CHECK(render_stage(make_tower("O(2,2)").stages[2]) ==
          "stage 2: kill pi_3, obstruction none in H^4(X; 0)");
    CHECK(render_stage(make_tower("O(4,5)").stages[2]) ==
          "stage 2: kill pi_3, obstruction half_p1#1 x half_p1#2 x half_p1 "
          "in H^4(X; Z^3)");
    const std::string all = render_tower(t);
    CHECK(all ==
          "stage 0: kill pi_0, obstruction w1 x w1 in H^1(X; Z/2 x Z/2)\n"
          "stage 1: kill pi_1, obstruction w2 x w2 in H^2(X; Z/2 x Z/2)\n"
          "stage 2: kill pi_3, obstruction half_p1 x half_p1 in H^4(X; "
          "Z^2)\n");
  }

  TEST_CASE("target stage names") {
    const Tower to = make_tower("O(3,4)");
    CHECK(target_stage_index(to, "SO") == 0);
    CHECK(target_stage_index(to, "Spin") == 1);
    CHECK(target_stage_index(to, "String") == 2);
    const Tower tu = make_tower("U(2,2)");
    CHECK(target_stage_index(tu, "cover") == 0);
    CHECK(target_stage_index(tu, "String") == 1);
    const Tower tsp = make_tower("Sp(2)");
    CHECK(target_stage_index(tsp, "String") == 0);
    CHECK_THROWS_AS((void)target_stage_index(to, "cover"),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)target_stage_index(tsp, "Spin"),
                    std::invalid_argument);
  }

  TEST_CASE("twisted covering descriptors") {
    const TwistSpec so = twisted_descriptor(TwistKind::SO, 3, 4);
    CHECK(so.left.size() == 1);
    CHECK(so.left[0].name == ClassName::w1);
    CHECK(so.right[0].name == ClassName::w1);
    CHECK(so.left[0].id() == "w1.1");
    CHECK(so.right[0].id() == "w1.2");
    CHECK(so.left_coefficient == parse_group("Z/2"));
    CHECK_FALSE(so.hom.has_value());

    const TwistSpec sp22 = twisted_descriptor(TwistKind::Spin, 2, 2);
    CHECK(sp22.left[0].name == ClassName::sqrt_p1);
    CHECK(sp22.left_coefficient == parse_group("Z"));

    const TwistSpec sp35 = twisted_descriptor(TwistKind::Spin, 3, 5);
    CHECK(sp35.left[0].name == ClassName::w2);
    CHECK(sp35.left_coefficient == parse_group("Z/2"));

    CHECK_THROWS_AS((void)twisted_descriptor(TwistKind::Spin, 2, 3),
                    OutsideTable);
    CHECK_THROWS_AS((void)twisted_descriptor(TwistKind::Spin, 1, 5),
                    OutsideTable);

    const TwistSpec st = twisted_descriptor(TwistKind::String, 3, 5);
    CHECK(st.left[0].name == ClassName::half_p1);
    CHECK(st.left_coefficient == parse_group("Z"));

    const TwistSpec st44 = twisted_descriptor(TwistKind::String, 4, 4);
    REQUIRE(st44.left.size() == 2);
    REQUIRE(st44.right.size() == 2);
    CHECK(st44.left[0].id() == "half_p1.1.1");
    CHECK(st44.left[1].id() == "half_p1.1.2");
    CHECK(st44.right[0].id() == "half_p1.2.1");
    CHECK(st44.right[1].id() == "half_p1.2.2");
    CHECK(st44.left_coefficient == parse_group("Z x Z"));

    CHECK_THROWS_AS((void)twisted_descriptor(TwistKind::String, 4, 5),
                    OutsideTable);
    CHECK_THROWS_AS((void)twisted_descriptor(TwistKind::SO, 0, 3),
                    std::invalid_argument);
  }

  TEST_CASE("green-schwarz comparison spec") {
    const TwistSpec gs = green_schwarz_spec();
    CHECK(gs.left[0].name == ClassName::half_p1);
    CHECK(gs.right[0].name == ClassName::c2);
    CHECK(gs.left_coefficient == FgAbGroup::free(1));
    CHECK(gs.right_coefficient == FgAbGroup::free(1));
    REQUIRE(gs.hom.has_value());
    CHECK(*gs.hom == IntMatrix::identity(1));
  }
}
