#include "astlab/matchings.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace astlab {

DiamondGraph build_qn(int n) {
  if (n < 1) throw ShapeMismatch("order must be positive");
  DiamondGraph g;
  g.n = n;
  std::map<std::pair<int, int>, int> index;
  auto vertex = [&](int x, int y) {
    auto it = index.find({x, y});
    if (it != index.end()) return it->second;
    int id = static_cast<int>(g.coords.size());
    index.emplace(std::make_pair(x, y), id);
    g.coords.emplace_back(x, y);
    g.adj.emplace_back();
    return id;
  };
  std::map<std::pair<int, int>, int> edge_index;
  auto edge = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    auto it = edge_index.find({a, b});
    if (it != edge_index.end()) return it->second;
    int id = static_cast<int>(g.edges.size());
    edge_index.emplace(std::make_pair(a, b), id);
    g.edges.emplace_back(a, b);
    g.adj[static_cast<size_t>(a)].push_back(b);
    g.adj[static_cast<size_t>(b)].push_back(a);
    return id;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= 2 * n - i; ++j) {
      int top = vertex(2 * j, -2 * i + 1);
      int bottom = vertex(2 * j, -2 * i - 1);
      int left = vertex(2 * j - 1, -2 * i);
      int right = vertex(2 * j + 1, -2 * i);
      g.diamonds[{i, j}] = {edge(top, left), edge(top, right), edge(bottom, left),
                            edge(bottom, right)};
    }
  for (int j = 1; j <= 2 * n - 1; ++j) {
    if (j == n) continue;
    int depth = std::min(j, 2 * n - j);
    g.labeled[j] = index.at({2 * j, -2 * depth - 1});
  }
  return g;
}

namespace {

std::uint64_t active_mask(const DiamondGraph& g, const std::set<int>& removed_labels) {
  if (g.coords.size() > 64) throw CapExceeded("diamond graph too large for bitmask counting");
  std::uint64_t mask = g.coords.size() == 64 ? ~0ull : (1ull << g.coords.size()) - 1;
  for (int label : removed_labels) {
    auto it = g.labeled.find(label);
    if (it == g.labeled.end()) throw UnknownIdentifier("not a labeled vertex");
    mask &= ~(1ull << it->second);
  }
  return mask;
}

}  // namespace

unsigned long long count_perfect_matchings(const DiamondGraph& g,
                                           const std::set<int>& removed_labels) {
  std::uint64_t active = active_mask(g, removed_labels);
  if (__builtin_popcountll(active) % 2 != 0) return 0;
  std::unordered_map<std::uint64_t, unsigned long long> memo;
  std::function<unsigned long long(std::uint64_t)> rec = [&](std::uint64_t rem) {
    if (rem == 0) return 1ull;
    auto it = memo.find(rem);
    if (it != memo.end()) return it->second;
    int v = __builtin_ctzll(rem);
    unsigned long long total = 0;
    for (int w : g.adj[static_cast<size_t>(v)])
      if (rem & (1ull << w)) total += rec(rem & ~(1ull << v) & ~(1ull << w));
    memo.emplace(rem, total);
    return total;
  };
  return rec(active);
}

std::vector<std::vector<int>> enumerate_perfect_matchings(const DiamondGraph& g,
                                                          const std::set<int>& removed_labels) {
  std::uint64_t active = active_mask(g, removed_labels);
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::map<std::pair<int, int>, int> edge_of;
  for (size_t e = 0; e < g.edges.size(); ++e) edge_of[g.edges[e]] = static_cast<int>(e);
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t rem) {
    if (rem == 0) {
      out.push_back(current);
      return;
    }
    int v = __builtin_ctzll(rem);
    for (int w : g.adj[static_cast<size_t>(v)]) {
      if (!(rem & (1ull << w))) continue;
      current.push_back(edge_of.at({std::min(v, w), std::max(v, w)}));
      rec(rem & ~(1ull << v) & ~(1ull << w));
      current.pop_back();
    }
  };
  if (__builtin_popcountll(active) % 2 == 0) rec(active);
  return out;
}

MatchingReport matching_identities(int n, int cap) {
  if (n > cap)
    throw CapExceeded("matching identities order " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  MatchingReport rep;
  rep.n = n;
  DiamondGraph g = build_qn(n);
  std::vector<int> labels;
  for (const auto& [label, v] : g.labeled) labels.push_back(label);

  // all (n-1)-subsets of the labeled vertices
  std::vector<std::set<int>> removals;
  std::vector<int> pick;
  std::function<void(size_t)> choose = [&](size_t start) {
    if (static_cast<int>(pick.size()) == n - 1) {
      removals.emplace_back(pick.begin(), pick.end());
      return;
    }
    for (size_t k = start; k < labels.size(); ++k) {
      pick.push_back(labels[k]);
      choose(k + 1);
      pick.pop_back();
    }
  };
  choose(0);

  rep.total = 0;
  bool fibers_ok = true;
  for (const auto& removal : removals) {
    auto pms = enumerate_perfect_matchings(g, removal);
    rep.total += pms.size();
    // group matchings by the sign triangle they induce
    std::map<std::string, std::pair<SignTriangle, unsigned long long>> fibers;
    for (const auto& pm : pms) {
      std::vector<char> in_pm(g.edges.size(), 0);
      for (int e : pm) in_pm[static_cast<size_t>(e)] = 1;
      SignTriangle t(Family::Ast, n);
      for (const auto& [ij, es] : g.diamonds) {
        int cnt = 0;
        for (int e : es) cnt += in_pm[static_cast<size_t>(e)];
        t.set(ij.first, ij.second, cnt - 1);
      }
      auto [it, inserted] = fibers.emplace(to_text(t), std::make_pair(t, 0ull));
      ++it->second.second;
    }
    std::set<std::string> images;
    for (const auto& [key, tc] : fibers) {
      const SignTriangle& t = tc.first;
      if (!validate(t).ok) fibers_ok = false;
      unsigned long long ones = 0;
      for (int i = 1; i <= n; ++i)
        for (int j = t.row_begin(i); j <= t.row_end(i); ++j) ones += t.at(i, j) == 1;
      if (tc.second != (1ull << ones)) fibers_ok = false;
      std::set<int> zero_cols;
      for (int j = 1; j <= 2 * n - 1; ++j)
        if (t.column_sum(j) == 0) zero_cols.insert(j);
      if (zero_cols != removal) fibers_ok = false;
      images.insert(key);
    }
    // surjectivity onto the ASTs with exactly these zero columns
    unsigned long long expected = 0;
    for (const auto& t : enumerate_sign_triangles(Family::Ast, n, std::max(cap, n))) {
      std::set<int> zero_cols;
      for (int j = 1; j <= 2 * n - 1; ++j)
        if (t.column_sum(j) == 0) zero_cols.insert(j);
      if (zero_cols == removal) ++expected;
    }
    if (images.size() != expected) fibers_ok = false;
  }
  rep.fiber_audit = fibers_ok;
  rep.sum_identity = rep.total == (1ull << (static_cast<unsigned>(n) * (n + 1) / 2));

  unsigned long long two_enum = 0;
  for (const auto& t : enumerate_sign_triangles(Family::Ast, n, std::max(cap, n))) {
    unsigned long long ones = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = t.row_begin(i); j <= t.row_end(i); ++j) ones += t.at(i, j) == 1;
    two_enum += 1ull << ones;
  }
  rep.two_enum_identity = rep.total == two_enum;
  return rep;
}

std::string adjacency_text(const DiamondGraph& g) {
  std::ostringstream os;
  os << "qn " << g.n << '\n';
  for (size_t v = 0; v < g.coords.size(); ++v) {
    os << v << " (" << g.coords[v].first << ',' << g.coords[v].second << "):";
    std::vector<int> nb = g.adj[v];
    std::sort(nb.begin(), nb.end());
    for (int w : nb) os << ' ' << w;
    os << '\n';
  }
  for (const auto& [label, v] : g.labeled) os << "label " << label << " -> " << v << '\n';
  return os.str();
}

}  // namespace astlab
