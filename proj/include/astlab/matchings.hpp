#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "astlab/objects.hpp"

namespace astlab {

// The diamond graph: n rows of 2(n-i)+1 tilted squares, diamond (i,j)
// matching AST entry (i,j); the bottom vertex of every non-central column
// carries the column label.
struct DiamondGraph {
  int n = 0;
  std::vector<std::pair<int, int>> coords;           // planar vertex coordinates
  std::vector<std::vector<int>> adj;                 // adjacency lists
  std::vector<std::pair<int, int>> edges;            // v < w pairs
  std::map<int, int> labeled;                        // column label -> vertex id
  std::map<std::pair<int, int>, std::vector<int>> diamonds;  // (i,j) -> 4 edge ids
};

DiamondGraph build_qn(int n);

// Exact perfect-matching count of the graph minus the given labeled vertices.
unsigned long long count_perfect_matchings(const DiamondGraph& g,
                                           const std::set<int>& removed_labels);

// All perfect matchings as sets of edge ids (for fiber audits).
std::vector<std::vector<int>> enumerate_perfect_matchings(const DiamondGraph& g,
                                                          const std::set<int>& removed_labels);

struct MatchingReport {
  int n = 0;
  unsigned long long total = 0;          // sum over all (n-1)-subsets of labels
  bool sum_identity = false;             // total == 2^{binom(n+1,2)}
  bool two_enum_identity = false;        // total == sum over AST(n) of 2^{# of 1 entries}
  bool fiber_audit = false;              // matchings -> ASTs with fibers 2^{# of 1 entries}
};

MatchingReport matching_identities(int n, int cap = 4);

std::string adjacency_text(const DiamondGraph& g);

}  // namespace astlab
