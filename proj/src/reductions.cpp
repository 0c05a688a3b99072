#include "iris/reductions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "iris/io.hpp"

namespace iris {

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph{n, std::move(edges)};
}

IndependentSetReduction independent_set_to_ris(const Graph& g, int k) {
  if (k < 1 || k > g.n) throw std::invalid_argument("independent_set_to_ris: need 1 <= k <= n");
  std::vector<ItemSet> sets(g.n, ItemSet{1, {{0, 0}, {1, 1}}});
  std::vector<ForbiddenPair> pairs;
  for (const auto& [u, v] : g.edges) pairs.push_back({{u, 0}, {v, 0}});
  return {Instance(std::move(sets), std::move(pairs)), static_cast<Cost>(g.n - k)};
}

void check_formula(const QuantifiedDnf& phi) {
  for (std::size_t c = 0; c < phi.clauses.size(); ++c) {
    const auto& clause = phi.clauses[c];
    const std::string name = "clause " + std::to_string(c + 1);
    if (clause.size() != 3) throw std::invalid_argument(name + " does not have 3 literals");
    for (std::size_t a = 0; a < clause.size(); ++a) {
      const int limit = clause[a].kind == VarKind::X ? phi.x_vars : phi.y_vars;
      if (clause[a].var < 0 || clause[a].var >= limit)
        throw std::invalid_argument(name + " uses an undeclared variable");
      for (std::size_t b = a + 1; b < clause.size(); ++b)
        if (clause[a].kind == clause[b].kind && clause[a].var == clause[b].var)
          throw std::invalid_argument(name + " repeats a variable");
    }
  }
}

bool check_dnf(const QuantifiedDnf& phi, const std::vector<bool>& x,
               const std::vector<bool>& y) {
  if (static_cast<int>(x.size()) != phi.x_vars || static_cast<int>(y.size()) != phi.y_vars)
    throw std::invalid_argument("check_dnf: assignment length mismatch");
  for (const auto& clause : phi.clauses) {
    const bool sat = std::all_of(clause.begin(), clause.end(), [&](const Literal& l) {
      const bool v = l.kind == VarKind::X ? x[l.var] : y[l.var];
      return v == l.positive;
    });
    if (sat) return true;
  }
  return false;
}

namespace {

bool disagree(const std::vector<VarValue>& a, const std::vector<VarValue>& b) {
  for (const auto& va : a)
    for (const auto& vb : b)
      if (va.var == vb.var && va.value != vb.value) return true;
  return false;
}

}  // namespace

DnfReduction dnf_to_iris(const QuantifiedDnf& phi, Cost B) {
  check_formula(phi);
  const int m = static_cast<int>(phi.clauses.size());
  if (B <= m) throw std::invalid_argument("dnf_to_iris: B must exceed the number of clauses");

  DnfReduction out;
  out.B = B;
  out.Z = (m - 1) * B + m - 1;
  std::vector<ItemSet> sets(m);
  out.roles.resize(m);

  for (int j = 0; j < m; ++j) {
    std::vector<VarValue> x_sat;
    std::vector<Literal> y_lits;
    for (const auto& lit : phi.clauses[j]) {
      if (lit.kind == VarKind::X)
        x_sat.push_back({lit.var, lit.positive});
      else
        y_lits.push_back(lit);
    }
    if (y_lits.empty())
      throw std::invalid_argument("dnf_to_iris: clause " + std::to_string(j + 1) +
                                  " has no y-variable");
    std::sort(x_sat.begin(), x_sat.end(),
              [](const VarValue& a, const VarValue& b) { return a.var < b.var; });
    std::sort(y_lits.begin(), y_lits.end(),
              [](const Literal& a, const Literal& b) { return a.var < b.var; });

    auto& set = sets[j];
    set.quota = 1;
    if (!x_sat.empty()) {
      set.items.push_back({0, B});
      out.roles[j].push_back({ItemRole::XItem, x_sat});
    }
    const int t = static_cast<int>(y_lits.size());
    for (int code = 0; code < (1 << t); ++code) {
      std::vector<VarValue> assign;
      bool satisfies = true;
      for (int b = 0; b < t; ++b) {
        const bool value = (code >> (t - 1 - b)) & 1;
        assign.push_back({y_lits[b].var, value});
        satisfies = satisfies && value == y_lits[b].positive;
      }
      if (satisfies) continue;
      set.items.push_back({0, B * B});
      out.roles[j].push_back({ItemRole::YItem, std::move(assign)});
    }
    set.items.push_back({B + 1, B + 1});
    out.roles[j].push_back({ItemRole::Special, {}});
  }

  std::vector<ForbiddenPair> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (std::size_t k = 0; k < out.roles[i].size(); ++k)
        for (std::size_t l = 0; l < out.roles[j].size(); ++l) {
          const auto& a = out.roles[i][k];
          const auto& b = out.roles[j][l];
          if (a.role == ItemRole::Special || a.role != b.role) continue;
          if (disagree(a.assignment, b.assignment))
            pairs.push_back({{i, static_cast<int>(k)}, {j, static_cast<int>(l)}});
        }
  out.instance = Instance(std::move(sets), std::move(pairs));
  return out;
}

DnfReduction dnf_to_iris(const QuantifiedDnf& phi) {
  return dnf_to_iris(phi, static_cast<Cost>(phi.clauses.size()) + 1);
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      int m = 0;
      if (!(ls >> kind >> n >> m) || n < 0)
        throw ParseError("graph line " + std::to_string(lineno) + ": bad problem line");
    } else if (tag == "e") {
      int u = 0, v = 0;
      if (!(ls >> u >> v))
        throw ParseError("graph line " + std::to_string(lineno) + ": bad edge line");
      edges.push_back({u - 1, v - 1});
    } else {
      throw ParseError("graph line " + std::to_string(lineno) + ": unknown tag '" + tag + "'");
    }
  }
  if (n < 0) throw ParseError("graph: missing 'p edge N M' line");
  try {
    return make_graph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

QuantifiedDnf parse_dnf(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  QuantifiedDnf phi;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    Clause clause;
    while (ls >> tok) {
      Literal lit;
      std::size_t pos = 0;
      if (tok[pos] == '+' || tok[pos] == '-') lit.positive = tok[pos++] == '+';
      if (pos >= tok.size() || (tok[pos] != 'x' && tok[pos] != 'y'))
        throw ParseError("formula line " + std::to_string(lineno) + ": bad literal '" + tok + "'");
      lit.kind = tok[pos++] == 'x' ? VarKind::X : VarKind::Y;
      int index = 0;
      try {
        std::size_t used = 0;
        index = std::stoi(tok.substr(pos), &used);
        if (used != tok.size() - pos) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError("formula line " + std::to_string(lineno) + ": bad literal '" + tok + "'");
      }
      if (index < 1)
        throw ParseError("formula line " + std::to_string(lineno) + ": variables are 1-based");
      lit.var = index - 1;
      auto& count = lit.kind == VarKind::X ? phi.x_vars : phi.y_vars;
      count = std::max(count, index);
      clause.push_back(lit);
    }
    if (!clause.empty()) phi.clauses.push_back(std::move(clause));
  }
  try {
    check_formula(phi);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return phi;
}

}  // namespace iris
