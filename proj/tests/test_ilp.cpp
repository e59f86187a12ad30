#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "vglcs/exact.hpp"
#include "vglcs/ilp.hpp"

using namespace vglcs;

namespace {

Instance demo_instance() {
  return Instance::make({"ABCA", "ACAB"}, {{1, 1, 1, 1}, {1, 1, 1, 1}});
}

Instance random_instance(std::mt19937& rng, int n, int sigma, int gmax) {
  std::uniform_int_distribution<int> ch(0, sigma - 1), gp(0, gmax);
  std::vector<std::string> seqs(2);
  std::vector<std::vector<int>> gaps(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < n; ++j) {
      seqs[i].push_back(static_cast<char>('A' + ch(rng)));
      gaps[i].push_back(gp(rng));
    }
  return Instance::make(seqs, gaps);
}

const IlpConstraint& find_constraint(const IlpModel& mod,
                                     const std::string& name) {
  for (const auto& c : mod.constraints)
    if (c.name == name) return c;
  FAIL("missing constraint " + name);
  return mod.constraints.front();
}

int var_index(const IlpModel& mod, const std::string& name) {
  for (int v = 0; v < mod.num_vars(); ++v)
    if (mod.var_names[v] == name) return v;
  return -1;
}

bool term_present(const IlpConstraint& c, int var, int coef) {
  for (const auto& t : c.terms)
    if (t.var == var && t.coef == coef) return true;
  return false;
}

bool assignment_feasible(const IlpModel& mod, const std::vector<int>& val) {
  for (const auto& c : mod.constraints) {
    int lhs = 0;
    for (const auto& t : c.terms) lhs += t.coef * val[t.var];
    if (lhs > c.bound) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("demo model layout") {
  const auto inst = demo_instance();
  const auto mod = build_ilp_model(inst);

  const std::vector<std::string> xs = {"x_1_1", "x_1_3", "x_2_4",
                                       "x_3_2", "x_4_1", "x_4_3"};
  REQUIRE(mod.num_vars() == 12);
  for (int k = 0; k < 6; ++k) {
    CHECK(mod.var_names[k] == xs[k]);
    CHECK(mod.var_names[6 + k] == "s" + xs[k].substr(1));
    CHECK(mod.objective[k] == 1);
    CHECK(mod.objective[6 + k] == 0);
  }

  REQUIRE(mod.constraints.size() == 23);
  for (int k = 0; k < 6; ++k)
    CHECK(mod.constraints[k].name == "act" + xs[k].substr(1));
  CHECK(mod.constraints[6].name == "start");
  int conflicts = 0;
  for (const auto& c : mod.constraints)
    if (c.name.rfind("conf_", 0) == 0) {
      ++conflicts;
      REQUIRE(c.terms.size() == 2);
      CHECK(c.bound == 1);
    }
  CHECK(conflicts == 10);
  for (int k = 0; k < 6; ++k)
    CHECK(mod.constraints[17 + k].name == "region" + xs[k].substr(1));
}

TEST_CASE("demo activation rows carry the windowed predecessors") {
  const auto mod = build_ilp_model(demo_instance());

  const auto& a24 = find_constraint(mod, "act_2_4");
  REQUIRE(a24.terms.size() == 3);
  CHECK(term_present(a24, var_index(mod, "x_2_4"), 1));
  CHECK(term_present(a24, var_index(mod, "x_1_3"), -1));
  CHECK(term_present(a24, var_index(mod, "s_2_4"), -1));
  CHECK(a24.bound == 0);

  const auto& a32 = find_constraint(mod, "act_3_2");
  REQUIRE(a32.terms.size() == 3);
  CHECK(term_present(a32, var_index(mod, "x_1_1"), -1));

  const auto& a43 = find_constraint(mod, "act_4_3");
  REQUIRE(a43.terms.size() == 3);
  CHECK(term_present(a43, var_index(mod, "x_3_2"), -1));

  for (const char* n : {"act_1_1", "act_1_3", "act_4_1"}) {
    const auto& c = find_constraint(mod, n);
    CHECK(c.terms.size() == 2);  // no predecessor fits the windows
  }
}

TEST_CASE("demo start region rows forbid selections south-west of a start") {
  const auto mod = build_ilp_model(demo_instance());

  const auto& r43 = find_constraint(mod, "region_4_3");
  REQUIRE(r43.terms.size() == 3);
  CHECK(term_present(r43, var_index(mod, "x_1_1"), 1));
  CHECK(term_present(r43, var_index(mod, "x_3_2"), 1));
  CHECK(term_present(r43, var_index(mod, "s_4_3"), 2));
  CHECK(r43.bound == 2);

  const auto& r24 = find_constraint(mod, "region_2_4");
  REQUIRE(r24.terms.size() == 3);
  CHECK(term_present(r24, var_index(mod, "x_1_1"), 1));
  CHECK(term_present(r24, var_index(mod, "x_1_3"), 1));
  CHECK(term_present(r24, var_index(mod, "s_2_4"), 2));
  CHECK(r24.bound == 2);

  const auto& r32 = find_constraint(mod, "region_3_2");
  REQUIRE(r32.terms.size() == 2);
  CHECK(term_present(r32, var_index(mod, "x_1_1"), 1));
  CHECK(term_present(r32, var_index(mod, "s_3_2"), 1));
  CHECK(r32.bound == 1);

  for (const char* n : {"region_1_1", "region_1_3", "region_4_1"}) {
    const auto& c = find_constraint(mod, n);
    REQUIRE(c.terms.size() == 1);  // empty region, the row degenerates
    CHECK(c.terms[0].coef == 1);
    CHECK(c.bound == 1);
  }
}

TEST_CASE("demo optimum matches the lattice dp") {
  const auto inst = demo_instance();
  const auto mod = build_ilp_model(inst);
  CHECK(brute_force_ilp(mod) == 3);
  CHECK(brute_force_ilp(mod) ==
        static_cast<int>(dp_basic(inst).text.size()));
}

TEST_CASE("disjoint alphabets give an empty model") {
  const auto inst = Instance::make({"AB", "CD"}, {{1, 1}, {1, 1}});
  const auto mod = build_ilp_model(inst);
  CHECK(mod.num_vars() == 0);
  REQUIRE(mod.constraints.size() == 1);
  CHECK(mod.constraints[0].name == "start");
  CHECK(mod.constraints[0].terms.empty());
  CHECK(brute_force_ilp(mod) == 0);
}

TEST_CASE("model rejects arities other than two") {
  CHECK_THROWS_AS(build_ilp_model(Instance::make({"AB"}, {{0, 0}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      build_ilp_model(Instance::make({"AB", "AB", "AB"},
                                     {{0, 0}, {0, 0}, {0, 0}})),
      std::invalid_argument);
}

TEST_CASE("brute force cap guards the variable count") {
  const auto mod = build_ilp_model(demo_instance());
  CHECK_THROWS_AS(brute_force_ilp(mod, 11), std::invalid_argument);
  CHECK(brute_force_ilp(mod, 12) == 3);
}

TEST_CASE("lp text is deterministic and pins the demo rows") {
  const auto a = write_lp_text(build_ilp_model(demo_instance()));
  const auto b = write_lp_text(build_ilp_model(demo_instance()));
  CHECK(a == b);

  CHECK(a.find("Maximize\n obj: x_1_1 + x_1_3 + x_2_4 + x_3_2 + x_4_1 + "
               "x_4_3\n") != std::string::npos);
  CHECK(a.find(" act_2_4: x_2_4 - x_1_3 - s_2_4 <= 0\n") != std::string::npos);
  CHECK(a.find(" start: s_1_1 + s_1_3 + s_2_4 + s_3_2 + s_4_1 + s_4_3 <= 1\n") !=
        std::string::npos);
  CHECK(a.find(" conf_1_1_1_3: x_1_1 + x_1_3 <= 1\n") != std::string::npos);
  CHECK(a.find(" region_4_3: x_1_1 + x_3_2 + 2 s_4_3 <= 2\n") !=
        std::string::npos);
  CHECK(a.find(" region_1_1: s_1_1 <= 1\n") != std::string::npos);
  CHECK(a.substr(a.size() - 4) == "End\n");

  const auto empty =
      write_lp_text(build_ilp_model(Instance::make({"A", "B"}, {{0}, {0}})));
  CHECK(empty.find(" obj: 0\n") != std::string::npos);
  CHECK(empty.find(" start: 0 <= 1\n") != std::string::npos);
}

TEST_CASE("every feasible demo assignment decodes to a windowed chain") {
  const auto inst = demo_instance();
  const auto mod = build_ilp_model(inst);
  const auto matches = detail::match_pairs(inst);
  const int m = static_cast<int>(matches.size());
  REQUIRE(mod.num_vars() == 2 * m);

  int feasible = 0;
  for (int mask = 0; mask < (1 << (2 * m)); ++mask) {
    std::vector<int> val(2 * m);
    for (int v = 0; v < 2 * m; ++v) val[v] = (mask >> v) & 1;
    if (!assignment_feasible(mod, val)) continue;
    ++feasible;

    std::vector<int> sel;
    for (int k = 0; k < m; ++k)
      if (val[k]) sel.push_back(k);
    for (std::size_t t = 1; t < sel.size(); ++t) {
      auto [pi, pj] = matches[sel[t - 1]];
      auto [i, j] = matches[sel[t]];
      REQUIRE(pi < i);
      REQUIRE(pj < j);
      CHECK(i - pi <= inst.gap(0, i) + 1);
      CHECK(j - pj <= inst.gap(1, j) + 1);
    }
    int starts = 0;
    for (int k = 0; k < m; ++k) starts += val[m + k];
    if (!sel.empty()) {
      REQUIRE(starts == 1);
      CHECK(val[m + sel.front()] == 1);
    } else {
      CHECK(starts <= 1);
    }
  }
  CHECK(feasible > 10);
}

TEST_CASE("ilp optimum equals the dp value on random pairs") {
  std::mt19937 rng(9203);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const int sigma = 2 + static_cast<int>(rng() % 2);
    const int gmax = static_cast<int>(rng() % 3);
    const auto inst = random_instance(rng, n, sigma, gmax);
    const auto mod = build_ilp_model(inst);
    INFO("rep " << rep << " n " << n << " sigma " << sigma << " vars "
                << mod.num_vars());
    CHECK(brute_force_ilp(mod, 260) ==
          static_cast<int>(dp_basic(inst).text.size()));
  }
}
