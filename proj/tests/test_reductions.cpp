#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "iris/det_solver.hpp"
#include "iris/io.hpp"
#include "iris/oracle.hpp"
#include "iris/reductions.hpp"

using namespace iris;
using iris::test::xl;
using iris::test::yl;

namespace {

int max_independent_set(const Graph& g) {
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
    bool ok = true;
    for (auto [u, v] : g.edges) ok = ok && !(((mask >> u) & 1u) && ((mask >> v) & 1u));
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

// Locates an item by role and assignment, e.g. ("Y", {{0,false},{1,true}}).
int find_item(const DnfReduction& red, int set, ItemRole role, std::vector<VarValue> assignment) {
  const auto& tags = red.roles[set];
  for (std::size_t j = 0; j < tags.size(); ++j)
    if (tags[j].role == role && tags[j].assignment == assignment) return static_cast<int>(j);
  return -1;
}

bool exists_forall(const QuantifiedDnf& phi) {
  for (std::uint32_t xm = 0; xm < (1u << phi.x_vars); ++xm) {
    std::vector<bool> x(phi.x_vars);
    for (int v = 0; v < phi.x_vars; ++v) x[v] = (xm >> v) & 1u;
    bool all = true;
    for (std::uint32_t ym = 0; ym < (1u << phi.y_vars) && all; ++ym) {
      std::vector<bool> y(phi.y_vars);
      for (int v = 0; v < phi.y_vars; ++v) y[v] = (ym >> v) & 1u;
      all = check_dnf(phi, x, y);
    }
    if (all) return true;
  }
  return false;
}

}  // namespace

TEST(IndependentSet, Triangle) {
  const auto g = make_graph(3, {{0, 1}, {2, 1}, {0, 2}});
  const auto yes = independent_set_to_ris(g, 1);
  EXPECT_EQ(yes.threshold, 2);
  EXPECT_EQ(brute_force_ris(yes.instance, lower_scenario(yes.instance)).value, 2);
  const auto no = independent_set_to_ris(g, 2);
  EXPECT_EQ(no.threshold, 1);
  EXPECT_GT(solve_ris(no.instance, lower_scenario(no.instance)).value, no.threshold);
}

TEST(IndependentSet, Shape) {
  const auto red = independent_set_to_ris(make_graph(4, {{0, 1}, {1, 2}}), 2);
  EXPECT_TRUE(validate(red.instance).empty());
  EXPECT_TRUE(red.instance.degenerate());
  EXPECT_EQ(red.instance.num_sets(), 4);
  for (int v = 0; v < 4; ++v) {
    EXPECT_EQ(red.instance.quota(v), 1);
    EXPECT_EQ(red.instance.sets()[v].items[0], (CostInterval{0, 0}));
    EXPECT_EQ(red.instance.sets()[v].items[1], (CostInterval{1, 1}));
  }
  EXPECT_EQ(red.instance.forbidden().size(), 2u);
}

TEST(IndependentSet, Edgeless) {
  const auto red = independent_set_to_ris(make_graph(5, {}), 5);
  EXPECT_EQ(red.threshold, 0);
  EXPECT_EQ(solve_ris(red.instance, lower_scenario(red.instance)).value, 0);
}

TEST(IndependentSet, SoundOnAllSmallGraphs) {
  // every graph on 4 vertices, every k
  std::vector<std::pair<int, int>> all;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) all.push_back({u, v});
  for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t e = 0; e < all.size(); ++e)
      if ((mask >> e) & 1u) edges.push_back(all[e]);
    const auto g = make_graph(4, edges);
    const int alpha = max_independent_set(g);
    for (int k = 1; k <= 4; ++k) {
      const auto red = independent_set_to_ris(g, k);
      const Cost opt = solve_ris(red.instance, lower_scenario(red.instance)).value;
      EXPECT_EQ(alpha >= k, opt <= red.threshold);
      EXPECT_EQ(opt, 4 - alpha);
    }
  }
}

TEST(IndependentSet, BadInput) {
  EXPECT_THROW(make_graph(3, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(make_graph(3, {{0, 3}}), std::invalid_argument);
  EXPECT_EQ(make_graph(3, {{1, 0}, {0, 1}}).edges.size(), 1u);
  EXPECT_THROW(independent_set_to_ris(make_graph(3, {}), 0), std::invalid_argument);
  EXPECT_THROW(independent_set_to_ris(make_graph(3, {}), 4), std::invalid_argument);
}

TEST(Dnf, CheckFormula) {
  const auto phi = iris::test::example_two();
  EXPECT_NO_THROW(check_formula(phi));
  EXPECT_TRUE(check_dnf(phi, {true, true, false}, {false, false}));
  QuantifiedDnf one{1, 2, {{xl(0), yl(0), yl(1)}}};
  EXPECT_FALSE(check_dnf(one, {false}, {false, false}));
  EXPECT_TRUE(check_dnf(one, {true}, {true, true}));

  QuantifiedDnf wide{1, 2, {{xl(0), yl(0)}}};
  EXPECT_THROW(check_formula(wide), std::invalid_argument);
  QuantifiedDnf repeat{1, 2, {{xl(0), yl(0), yl(0, false)}}};
  EXPECT_THROW(check_formula(repeat), std::invalid_argument);
  QuantifiedDnf range{1, 1, {{xl(0), yl(0), yl(1)}}};
  EXPECT_THROW(check_formula(range), std::invalid_argument);
  EXPECT_THROW(check_dnf(one, {true, true}, {true, true}), std::invalid_argument);
}

TEST(Dnf, ExampleTwoIsPositive) { EXPECT_TRUE(exists_forall(iris::test::example_two())); }

TEST(Dnf, ExampleTwoItems) {
  const auto red = dnf_to_iris(iris::test::example_two(), 5);
  const auto& inst = red.instance;
  EXPECT_EQ(red.B, 5);
  EXPECT_EQ(red.Z, 18);
  EXPECT_TRUE(validate(inst).empty());
  ASSERT_EQ(inst.num_sets(), 4);
  const int sizes[] = {3, 5, 3, 5};
  for (int i = 0; i < 4; ++i) {
    ASSERT_EQ(inst.set_size(i), sizes[i]);
    EXPECT_EQ(inst.quota(i), 1);
    for (int j = 0; j < inst.set_size(i); ++j) {
      const auto& c = inst.sets()[i].items[j];
      switch (red.roles[i][j].role) {
        case ItemRole::XItem: EXPECT_EQ(c, (CostInterval{0, 5})); break;
        case ItemRole::YItem: EXPECT_EQ(c, (CostInterval{0, 25})); break;
        case ItemRole::Special: EXPECT_EQ(c, (CostInterval{6, 6})); break;
      }
    }
  }
  // X-items as drawn
  EXPECT_GE(find_item(red, 0, ItemRole::XItem, {{0, true}, {1, true}}), 0);
  EXPECT_GE(find_item(red, 1, ItemRole::XItem, {{0, true}}), 0);
  EXPECT_GE(find_item(red, 2, ItemRole::XItem, {{1, true}, {2, false}}), 0);
  EXPECT_GE(find_item(red, 3, ItemRole::XItem, {{2, true}}), 0);
  // Y-items as drawn (set 2 holds 00, 11, 10; set 4 holds 11, 10, 01)
  EXPECT_GE(find_item(red, 0, ItemRole::YItem, {{0, false}}), 0);
  for (auto [a, b] : {std::pair{false, false}, {true, true}, {true, false}})
    EXPECT_GE(find_item(red, 1, ItemRole::YItem, {{0, a}, {1, b}}), 0);
  EXPECT_GE(find_item(red, 2, ItemRole::YItem, {{1, true}}), 0);
  for (auto [a, b] : {std::pair{true, true}, {true, false}, {false, true}})
    EXPECT_GE(find_item(red, 3, ItemRole::YItem, {{0, a}, {1, b}}), 0);
  // counting order inside set 2: 00, 10, 11
  EXPECT_EQ(find_item(red, 1, ItemRole::YItem, {{0, false}, {1, false}}), 1);
  EXPECT_EQ(find_item(red, 1, ItemRole::YItem, {{0, true}, {1, false}}), 2);
  EXPECT_EQ(find_item(red, 1, ItemRole::YItem, {{0, true}, {1, true}}), 3);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(red.roles[i].back().role, ItemRole::Special);
}

TEST(Dnf, ExampleTwoPairs) {
  const auto red = dnf_to_iris(iris::test::example_two(), 5);
  auto y = [&](int set, std::vector<VarValue> a) {
    return ItemRef{set, find_item(red, set, ItemRole::YItem, std::move(a))};
  };
  auto x = [&](int set, std::vector<VarValue> a) {
    return ItemRef{set, find_item(red, set, ItemRole::XItem, std::move(a))};
  };
  const VarValue y1_0{0, false}, y1_1{0, true}, y2_0{1, false}, y2_1{1, true};
  const auto Y11 = y(0, {y1_0});
  const auto Y21 = y(1, {y1_0, y2_0}), Y22 = y(1, {y1_1, y2_1}), Y23 = y(1, {y1_1, y2_0});
  const auto Y31 = y(2, {y2_1});
  const auto Y41 = y(3, {y1_1, y2_1}), Y42 = y(3, {y1_1, y2_0}), Y43 = y(3, {y1_0, y2_1});
  const auto X3 = x(2, {{1, true}, {2, false}}), X4 = x(3, {{2, true}});

  std::set<ForbiddenPair> built(red.instance.forbidden().begin(), red.instance.forbidden().end());
  const std::vector<ForbiddenPair> drawn = {
      {Y11, Y41}, {Y11, Y42}, {Y21, Y41}, {Y21, Y42}, {Y22, Y43}, {Y23, Y41}, {Y23, Y43},
      {X3, X4},   {Y11, Y22}, {Y11, Y23}, {Y21, Y31}, {Y23, Y31}, {Y31, Y42}};
  for (const auto& p : drawn) EXPECT_TRUE(built.count(p.canonical())) << p.a.set << p.a.item << "-" << p.b.set << p.b.item;
  // The conflict rule also forbids these two, which the drawn list leaves out.
  EXPECT_TRUE(built.count(ForbiddenPair{Y21, Y43}.canonical()));
  EXPECT_TRUE(built.count(ForbiddenPair{Y22, Y42}.canonical()));
  EXPECT_EQ(built.size(), drawn.size() + 2);
}

TEST(Dnf, PairRuleMatchesAssignments) {
  // independent recomputation of the conflict rule from the role tags
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    QuantifiedDnf phi;
    phi.x_vars = 3;
    phi.y_vars = 3;
    const int m = 1 + static_cast<int>(rng() % 4);
    for (int c = 0; c < m; ++c) {
      std::vector<int> vars{0, 1, 2, 3, 4, 5};
      std::shuffle(vars.begin(), vars.end(), rng);
      Clause clause;
      bool has_y = false;
      for (int k = 0; k < 3; ++k) {
        const int v = vars[k];
        clause.push_back({v < 3 ? VarKind::X : VarKind::Y, v % 3, (rng() & 1u) != 0});
        has_y = has_y || v >= 3;
      }
      if (!has_y) clause[2] = yl(0, rng() & 1u);
      phi.clauses.push_back(clause);
    }
    bool repeats = false;
    for (const auto& c : phi.clauses)
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
          repeats = repeats || (c[a].kind == c[b].kind && c[a].var == c[b].var);
    if (repeats) continue;
    const auto red = dnf_to_iris(phi);
    EXPECT_EQ(red.B, m + 1);
    std::set<ForbiddenPair> expect;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        for (std::size_t a = 0; a < red.roles[i].size(); ++a)
          for (std::size_t b = 0; b < red.roles[j].size(); ++b) {
            const auto& ta = red.roles[i][a];
            const auto& tb = red.roles[j][b];
            if (ta.role != tb.role || ta.role == ItemRole::Special) continue;
            bool clash = false;
            for (const auto& u : ta.assignment)
              for (const auto& w : tb.assignment) clash = clash || (u.var == w.var && u.value != w.value);
            if (clash) expect.insert(ForbiddenPair{{i, int(a)}, {j, int(b)}});
          }
    std::set<ForbiddenPair> built(red.instance.forbidden().begin(), red.instance.forbidden().end());
    EXPECT_EQ(built, expect);
  }
}

TEST(Dnf, ExampleTwoPaperSolution) {
  const auto red = dnf_to_iris(iris::test::example_two(), 5);
  const auto& inst = red.instance;
  Selection x(inst.num_items());
  for (int i = 0; i < 3; ++i) x.set(inst.flat({i, 0}), true);  // X-items come first
  x.set(inst.flat({3, inst.set_size(3) - 1}), true);          // special item
  ASSERT_TRUE(is_feasible(inst, x));
  EXPECT_EQ(evaluate_regret(inst, x).regret, 3 * 5 + 1);
  EXPECT_LE(brute_force_minmax_regret(inst).regret, red.Z);
}

TEST(Dnf, SingleClauseNegative) {
  const QuantifiedDnf phi{1, 2, {{xl(0), yl(0), yl(1)}}};
  EXPECT_FALSE(exists_forall(phi));
  const auto red = dnf_to_iris(phi, 5);
  EXPECT_EQ(red.Z, 0);
  EXPECT_GE(brute_force_minmax_regret(red.instance).regret, 5);
}

TEST(Dnf, NoXLiteralMeansNoXItem) {
  const QuantifiedDnf phi{0, 3, {{yl(0), yl(1), yl(2, false)}}};
  const auto red = dnf_to_iris(phi, 2);
  ASSERT_EQ(red.instance.num_sets(), 1);
  EXPECT_EQ(red.instance.set_size(0), 7 + 1);
  for (const auto& tag : red.roles[0]) EXPECT_NE(tag.role, ItemRole::XItem);
}

TEST(Dnf, Rejections) {
  const QuantifiedDnf no_y{3, 1, {{xl(0), xl(1), xl(2)}}};
  EXPECT_THROW(dnf_to_iris(no_y, 5), std::invalid_argument);
  EXPECT_THROW(dnf_to_iris(iris::test::example_two(), 4), std::invalid_argument);
}

TEST(Parsers, Graph) {
  const auto g = parse_graph("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  EXPECT_EQ(g.n, 3);
  EXPECT_EQ(g.edges.size(), 3u);
  EXPECT_EQ(g.edges[0], (std::pair<int, int>{0, 1}));
  EXPECT_THROW(parse_graph("e 1 2\n"), ParseError);
  EXPECT_THROW(parse_graph("p edge 2 1\ne 1 3\n"), ParseError);
  EXPECT_THROW(parse_graph("p edge 2 1\nq 1 2\n"), ParseError);
}

TEST(Parsers, Dnf) {
  const auto phi = parse_dnf(
      "# example\n+x1 +x2 +y1\nx1 -y1 y2\nx2 -x3 -y2\n+x3 -y1 -y2  # last\n");
  const auto ref = iris::test::example_two();
  EXPECT_EQ(phi.x_vars, 3);
  EXPECT_EQ(phi.y_vars, 2);
  ASSERT_EQ(phi.clauses.size(), ref.clauses.size());
  for (std::size_t c = 0; c < ref.clauses.size(); ++c) EXPECT_EQ(phi.clauses[c], ref.clauses[c]);
  EXPECT_THROW(parse_dnf("x1 y1 z1\n"), ParseError);
  EXPECT_THROW(parse_dnf("x0 y1 y2\n"), ParseError);
  EXPECT_THROW(parse_dnf("x1 y1\n"), ParseError);
  EXPECT_THROW(parse_dnf("x1 y1 y1q\n"), ParseError);
}
