#pragma once

#include <string>
#include <vector>

#include "bfp/interval_set.hpp"
#include "bfp/rational.hpp"
#include "bfp/rectilinear.hpp"
#include "bfp/tree.hpp"

namespace bfp {

// One interval J_{n,m} of a singular cover, with provenance.
struct CoverInterval {
  Rat lo, hi;
  size_t branch;     // 1-based index of the generating cell root
  size_t m;          // tail index >= 1
  std::string node;  // bits of the generating cell root
};

// A node of the tree generating one dyadic coverage cell [B/2^l, (B+1)/2^l).
// Either a live node with both children dead (a maximal finite branch, which
// merges the two dead sibling cells) or a dead node with a live parent and a
// live sibling (a lone dead cell; required so the family covers every
// computable point).
struct CellRoot {
  BitString node;
  bool merged_pair;  // true: maximal branch; false: lone dead child
};

struct CoverSpec {
  TreePtr source_tree;
  size_t branch_depth = 0;
  size_t tail_depth = 0;
  std::vector<CellRoot> roots;
  std::vector<CoverInterval> intervals;  // root-major, m ascending
};

// J_{n,m} = [(B+1-2^(1-m))/2^l, (B+1-2^(-m))/2^l]; at m=1 this is the
// half-cell [B/2^l, (B+1/2)/2^l], consecutive tails share one endpoint and
// the union over m <= T is [B/2^l, (B+1-2^(-T))/2^l].
Interval branch_interval(const BitString& node, size_t m);
std::vector<CoverInterval> intervals_from_branch(const MaximalBranch& b, size_t tail_depth);

// cell roots of the tree with |node| <= depth_limit, parent-BFS-lex order
std::vector<CellRoot> cell_roots(const TreePredicate& t, size_t depth_limit);

CoverSpec cover_from_tree(TreePtr t, size_t branch_depth, size_t tail_depth);

// 1-dimensional union of the first n intervals
IntervalSet cover_prefix_union(const CoverSpec& cover, size_t n);

// C_n: normalized union of the n^2 products J_k x J_l, k,l <= n
RectSet c_n(const CoverSpec& cover, size_t n);

// C_n as a disjoint block decomposition: products of the maximal merged
// intervals of the 1-d prefix union (equal to c_n as a point set)
std::vector<Box2> c_n_blocks(const CoverSpec& cover, size_t n);

struct TargetPoint {
  size_t n;
  Rat v;
  Point2 t;
};

// v_n = inf { x : (x,x) not in C_n }, t_n = (v_n, v_n)
TargetPoint target_point(const CoverSpec& cover, size_t n);

// Lemma-2 style verification report.
struct CoverReport {
  bool disjoint_ok = false;        // (i) pairwise intersections of <= 1 point
  std::string disjoint_detail;
  bool chaining_ok = false;        // (ii) endpoint chaining
  size_t chain_exact = 0;          // endpoints matched by another endpoint
  size_t chain_limit = 0;          // cell-boundary endpoints matched by an
                                   // enumerated cell's sup/inf (the exact
                                   // match is the limit of the tail family)
  std::string chaining_detail;
  bool coverage_ok = false;        // (iii) all dyadics k/2^depth covered
  std::string coverage_detail;
  bool all_ok() const { return disjoint_ok && chaining_ok && coverage_ok; }
};

// Verifies (i) exactly on the enumerated intervals; (ii) and (iii) may extend
// the enumeration (deeper cell roots and tails) within `budget` units to find
// witnesses. Failures are report entries, never exceptions.
CoverReport verify_cover(const CoverSpec& cover, size_t dyadic_depth, size_t budget);

// fault-injection entry point: verify a raw interval family without a tree
// (no budget extension witnesses beyond the given intervals)
CoverReport verify_intervals(const std::vector<CoverInterval>& intervals,
                             size_t dyadic_depth);

}  // namespace bfp
