// Development aid: verifies the base relations on small surfaces and pins the
// global sign conventions and traced-pair assignments.

#include <cstdio>
#include <string>

#include "mcg/stdcurves.hpp"
#include "mcg/twist.hpp"

using namespace mcg;

static TwistWord chainWord(Engine& eng, int from, int to) {
  TwistWord w;
  w.surface = eng.registry().model.spec;
  for (int k = from; k <= to; ++k)
    w *= eng.letter("c" + std::to_string(k));
  return w;
}

static void check(const char* tag, bool ok) { std::printf("%-44s %s\n", tag, ok ? "ok" : "FAIL"); }

int main() {
  {
    std::printf("== Sigma_1^1 ==\n");
    Registry reg({1, 1});
    Engine eng(reg);
    check("braid(c1,c2)", eng.equalExact(eng.word({{"c1", 1}, {"c2", 1}, {"c1", 1}}),
                                         eng.word({{"c2", 1}, {"c1", 1}, {"c2", 1}})));
    check("t_delta = (t_a t_b)^6",
          eng.equalExact(eng.letter("delta1"), eng.word({{"a", 1}, {"b", 1}}).pow(6)));
  }
  {
    std::printf("== Sigma_1^2 ==\n");
    Registry reg({1, 2});
    Engine eng(reg);
    check("t_d t_e = (c1 c2 c3)^4",
          eng.equalExact(eng.word({{"d", 1}, {"e", 1}}), chainWord(eng, 1, 3).pow(4)));
  }
  {
    std::printf("== Sigma_2^2 ==\n");
    Registry reg({2, 2});
    Engine eng(reg);
    for (int i = 1; i <= 4; ++i) {
      std::string a = "c" + std::to_string(i), b = "c" + std::to_string(i + 1);
      check(("braid(" + a + "," + b + ")").c_str(),
            eng.equalExact(eng.word({{a.c_str(), 1}, {b.c_str(), 1}, {a.c_str(), 1}}),
                           eng.word({{b.c_str(), 1}, {a.c_str(), 1}, {b.c_str(), 1}})));
    }
    check("t_d t_e = (c1 c2 c3)^4",
          eng.equalExact(eng.word({{"d", 1}, {"e", 1}}), chainWord(eng, 1, 3).pow(4)));
    check("t_d1 t_d2 = (c1..c5)^6",
          eng.equalExact(eng.word({{"delta1", 1}, {"delta2", 1}}), chainWord(eng, 1, 5).pow(6)));
    check("degenerate daisy t_d1 t_c5 = t_x1 t_beta",
          eng.equalExact(eng.word({{"delta1", 1}, {"c5", 1}}),
                         eng.word({{"x1", 1}, {"beta", 1}})));
    // phi_12 sends d -> c3 and c3 -> e; pins the d/e naming
    TwistWord phi12 = eng.word({{"c4", 1}, {"c3", 1}, {"c2", 1}, {"c1", 1},
                                {"c1", 1}, {"c2", 1}, {"c3", 1}, {"c4", 1},
                                {"c4", 1}, {"d", 1},  {"c3", 1}, {"c4", 1}});
    TwistWord tcd = eng.letter("d"), tc3 = eng.letter("c3"), tce = eng.letter("e");
    check("phi12(d) = c3",
          eng.equalExact(phi12 * tcd * phi12.inverse(), tc3));
    check("phi12(c3) = e",
          eng.equalExact(phi12 * tc3 * phi12.inverse(), tce));
  }
  {
    std::printf("== Sigma_2^3 (daisy l = 2) ==\n");
    Registry reg({2, 3});
    Engine eng(reg);
    TwistWord lhs = eng.word({{"d", 1}, {"delta1", 1}, {"delta2", 1}, {"c5", 1}});
    check("t_d t_d1 t_d2 t_c5 = t_x1 t_x2 t_beta",
          eng.equalExact(lhs, eng.word({{"x1", 1}, {"x2", 1}, {"beta", 1}})));
    check("  (other order x2 x1)",
          eng.equalExact(lhs, eng.word({{"x2", 1}, {"x1", 1}, {"beta", 1}})));
  }
  {
    std::printf("== Sigma_3^2 ==\n");
    Registry reg({3, 2});
    Engine eng(reg);
    for (int i = 1; i <= 6; ++i) {
      std::string a = "c" + std::to_string(i), b = "c" + std::to_string(i + 1);
      check(("braid(" + a + "," + b + ")").c_str(),
            eng.equalExact(eng.word({{a.c_str(), 1}, {b.c_str(), 1}, {a.c_str(), 1}}),
                           eng.word({{b.c_str(), 1}, {a.c_str(), 1}, {b.c_str(), 1}})));
    }
    check("t_d t_e = (c1 c2 c3)^4",
          eng.equalExact(eng.word({{"d", 1}, {"e", 1}}), chainWord(eng, 1, 3).pow(4)));
    check("t_a t_b = (c1..c5)^6",
          eng.equalExact(eng.word({{"a", 1}, {"b", 1}}), chainWord(eng, 1, 5).pow(6)));
    check("t_dp t_ep = (c5 c6 c7)^4",
          eng.equalExact(eng.word({{"dp", 1}, {"ep", 1}}), chainWord(eng, 5, 7).pow(4)));
    check("t_d1 t_d2 = (c1..c7)^8",
          eng.equalExact(eng.word({{"delta1", 1}, {"delta2", 1}}), chainWord(eng, 1, 7).pow(8)));
    check("degenerate daisy t_d1 t_dp = t_x1 t_beta",
          eng.equalExact(eng.word({{"delta1", 1}, {"dp", 1}}),
                         eng.word({{"x1", 1}, {"beta", 1}})));
  }
  {
    std::printf("== Sigma_0^4 lantern, Sigma_0^5 daisy ==\n");
    Registry reg({0, 4});
    Engine eng(reg);
    check("lantern", eng.equalExact(
                         eng.word({{"delta1", 1}, {"delta2", 1}, {"delta3", 1}, {"delta4", 1}}),
                         eng.word({{"x1", 1}, {"x2", 1}, {"x3", 1}})));
    Registry reg5({0, 5});
    Engine eng5(reg5);
    TwistWord lhs = eng5.letter("delta1").pow(2) *
                    eng5.word({{"delta2", 1}, {"delta3", 1}, {"delta4", 1}, {"delta5", 1}});
    check("daisy p=3", eng5.equalExact(
                           lhs, eng5.word({{"x1", 1}, {"x2", 1}, {"x3", 1}, {"x4", 1}})));
  }
  return 0;
}
