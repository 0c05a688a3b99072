#pragma once

// Hardness constructions turned into instance factories:
//  - independent set -> deterministic selection (one set per vertex, p = 1)
//  - quantified 3-DNF (exists X forall Y) -> interval min-max regret

#include <string>
#include <utility>
#include <vector>

#include "iris/model.hpp"

namespace iris {

struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, no duplicates
};

// Normalizes edge orientation and drops duplicates; throws on self-loops or
// out-of-range vertices.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

struct IndependentSetReduction {
  Instance instance;
  Cost threshold = 0;  // n - k
};

// Vertex v becomes set v with item 0 (the vertex, cost 0) and item 1 (a
// dummy, cost 1). Each edge forbids its two vertex items together.
IndependentSetReduction independent_set_to_ris(const Graph& g, int k);

enum class VarKind { X, Y };

struct Literal {
  VarKind kind = VarKind::X;
  int var = 0;  // 0-based within its kind
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;  // conjunction of exactly three literals

struct QuantifiedDnf {
  int x_vars = 0;
  int y_vars = 0;
  std::vector<Clause> clauses;
};

// Throws std::invalid_argument for malformed formulas: clause width other
// than 3, repeated variable inside a clause, out-of-range variable.
void check_formula(const QuantifiedDnf& phi);

bool check_dnf(const QuantifiedDnf& phi, const std::vector<bool>& x,
               const std::vector<bool>& y);

struct VarValue {
  int var = 0;
  bool value = false;

  friend bool operator==(const VarValue&, const VarValue&) = default;
};

enum class ItemRole { XItem, YItem, Special };

struct ItemTag {
  ItemRole role = ItemRole::Special;
  std::vector<VarValue> assignment;  // empty for special items
};

struct DnfReduction {
  Instance instance;
  Cost B = 0;
  Cost Z = 0;  // (m - 1) B + m - 1
  std::vector<std::vector<ItemTag>> roles;  // [set][item]
};

// One set per clause: the X-item (present iff the clause has an x-literal,
// interval [0, B]), one Y-item per falsifying assignment of the clause's
// y-variables (binary counting, lowest-index variable most significant,
// interval [0, B^2]) and the special item [B + 1, B + 1]. X-items (Y-items)
// of different sets conflict when their assignments disagree on a shared
// variable. Requires B > number of clauses and a y-literal in every clause.
DnfReduction dnf_to_iris(const QuantifiedDnf& phi, Cost B);
DnfReduction dnf_to_iris(const QuantifiedDnf& phi);  // B = m + 1

// Text formats. Graph: DIMACS-style "p edge N M" then "e u v" lines with
// 1-based vertices, "c" comments. Formula: one clause per line, literals
// like "+x1 -y2 y3" (1-based variable names), "#" comments.
Graph parse_graph(const std::string& text);
QuantifiedDnf parse_dnf(const std::string& text);

}  // namespace iris
