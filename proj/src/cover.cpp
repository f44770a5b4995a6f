#include "bfp/cover.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "bfp/errors.hpp"

namespace bfp {

Interval branch_interval(const BitString& node, size_t m) {
  if (m < 1) throw ArgumentError("branch_interval: m >= 1");
  const size_t lam = node.length();
  // [(B+1-2^(1-m))/2^lam, (B+1-2^(-m))/2^lam] over a common power-of-two base
  BigInt B = node.value();
  BigInt hi_num = ((B + 1) << m) - 1;          // / 2^(lam+m)
  BigInt lo_num = ((B + 1) << (m - 1)) - 1;    // / 2^(lam+m-1)
  Rat lo(lo_num, BigInt(1) << (lam + m - 1));
  Rat hi(hi_num, BigInt(1) << (lam + m));
  return {lo, hi};
}

std::vector<CoverInterval> intervals_from_branch(const MaximalBranch& b, size_t tail_depth) {
  if (tail_depth < 1) throw ArgumentError("intervals_from_branch: tail_depth >= 1");
  std::vector<CoverInterval> out;
  for (size_t m = 1; m <= tail_depth; ++m) {
    Interval iv = branch_interval(b.node, m);
    out.push_back({iv.lo, iv.hi, 0, m, b.node.bits});
  }
  return out;
}

std::vector<CellRoot> cell_roots(const TreePredicate& t, size_t depth_limit) {
  if (depth_limit < 1) throw ArgumentError("cell_roots: depth_limit >= 1");
  std::vector<CellRoot> out;
  std::vector<BitString> frontier;
  if (t.decide(BitString{})) frontier.push_back(BitString{});
  else {
    out.push_back({BitString{}, false});  // degenerate: everything dead
    return out;
  }
  for (size_t depth = 0; depth <= depth_limit && !frontier.empty(); ++depth) {
    std::vector<BitString> next;
    for (const auto& s : frontier) {
      BitString c0 = s.child(0), c1 = s.child(1);
      bool a0 = t.decide(c0), a1 = t.decide(c1);
      if (!a0 && !a1) {
        out.push_back({s, true});  // maximal finite branch, merged cell
      } else {
        if (!a0 && s.length() + 1 <= depth_limit) out.push_back({c0, false});
        if (!a1 && s.length() + 1 <= depth_limit) out.push_back({c1, false});
        if (depth < depth_limit) {
          if (a0) next.push_back(std::move(c0));
          if (a1) next.push_back(std::move(c1));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

CoverSpec cover_from_tree(TreePtr t, size_t branch_depth, size_t tail_depth) {
  if (branch_depth < 1 || tail_depth < 1)
    throw ArgumentError("cover_from_tree: limits >= 1");
  CoverSpec cs;
  cs.source_tree = t;
  cs.branch_depth = branch_depth;
  cs.tail_depth = tail_depth;
  cs.roots = cell_roots(*t, branch_depth);
  for (size_t i = 0; i < cs.roots.size(); ++i) {
    for (size_t m = 1; m <= tail_depth; ++m) {
      Interval iv = branch_interval(cs.roots[i].node, m);
      cs.intervals.push_back({iv.lo, iv.hi, i + 1, m, cs.roots[i].node.bits});
    }
  }
  return cs;
}

IntervalSet cover_prefix_union(const CoverSpec& cover, size_t n) {
  if (n < 1 || n > cover.intervals.size())
    throw ArgumentError("cover prefix: n out of range");
  std::vector<Interval> parts;
  for (size_t i = 0; i < n; ++i)
    parts.push_back({cover.intervals[i].lo, cover.intervals[i].hi});
  return IntervalSet(std::move(parts));
}

RectSet c_n(const CoverSpec& cover, size_t n) {
  if (n < 1 || n > cover.intervals.size())
    throw ArgumentError("c_n: n out of range");
  std::vector<Box2> boxes;
  for (size_t k = 0; k < n; ++k)
    for (size_t l = 0; l < n; ++l)
      boxes.push_back({cover.intervals[k].lo, cover.intervals[k].hi,
                       cover.intervals[l].lo, cover.intervals[l].hi});
  return RectSet(std::move(boxes));
}

std::vector<Box2> c_n_blocks(const CoverSpec& cover, size_t n) {
  IntervalSet s = cover_prefix_union(cover, n);
  std::vector<Box2> blocks;
  for (const auto& a : s.parts())
    for (const auto& b : s.parts())
      blocks.push_back({a.lo, a.hi, b.lo, b.hi});
  return blocks;
}

TargetPoint target_point(const CoverSpec& cover, size_t n) {
  IntervalSet s = cover_prefix_union(cover, n);
  Rat v(0);
  if (!s.parts().empty() && s.parts().front().lo <= Rat(0)) {
    v = s.parts().front().hi;
    if (v >= Rat(1))
      throw ConstructionError("target_point: diagonal fully covered");
  }
  return {n, v, Point2{v, v}};
}

namespace {

// extended endpoint tables for chaining witnesses: exact endpoints of the
// enumerated family plus one extra tail per root, and cell sups/infs of roots
// enumerated down to `extend_depth`
struct ChainTables {
  std::set<Rat> rights, lefts;
  std::set<Rat> cell_sups, cell_infs;
};

ChainTables chain_tables(const CoverSpec& cover, size_t extend_depth, size_t budget) {
  ChainTables t;
  for (const auto& iv : cover.intervals) {
    t.lefts.insert(iv.lo);
    t.rights.insert(iv.hi);
  }
  // one tail beyond the truncation chains every last right endpoint
  for (const auto& r : cover.roots) {
    Interval iv = branch_interval(r.node, cover.tail_depth + 1);
    t.lefts.insert(iv.lo);
    t.rights.insert(iv.hi);
  }
  size_t used = 0;
  if (cover.source_tree) {
    auto deep = cell_roots(*cover.source_tree,
                           std::min(extend_depth, kMaxExhaustiveDepth));
    for (const auto& r : deep) {
      if (++used > budget) break;
      size_t lam = r.node.length();
      BigInt B = r.node.value();
      t.cell_infs.insert(Rat(B, BigInt(1) << lam));
      t.cell_sups.insert(Rat(B + 1, BigInt(1) << lam));
    }
  }
  return t;
}

bool check_disjoint(const std::vector<CoverInterval>& intervals, std::string& detail) {
  std::vector<size_t> idx(intervals.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    return intervals[a].lo < intervals[b].lo ||
           (intervals[a].lo == intervals[b].lo && intervals[a].hi < intervals[b].hi);
  });
  for (size_t k = 0; k + 1 < idx.size(); ++k) {
    const auto& a = intervals[idx[k]];
    const auto& b = intervals[idx[k + 1]];
    if (b.lo < a.hi) {  // shared segment, not just a point
      std::ostringstream os;
      os << "intervals overlap: [" << a.lo.str() << "," << a.hi.str() << "] (" << a.node
         << ",m=" << a.m << ") and [" << b.lo.str() << "," << b.hi.str() << "] (" << b.node
         << ",m=" << b.m << ")";
      detail = os.str();
      return false;
    }
  }
  return true;
}

}  // namespace

CoverReport verify_cover(const CoverSpec& cover, size_t dyadic_depth, size_t budget) {
  CoverReport rep;

  rep.disjoint_ok = check_disjoint(cover.intervals, rep.disjoint_detail);

  // (ii) endpoint chaining: a_n != 0 must be another interval's right
  // endpoint; for a cell inf the exact match is the sup of the abutting cell
  // (the tails approach it), found by enumerating deeper cell roots.
  size_t extend_depth = std::min<size_t>(cover.branch_depth + 8, kMaxExhaustiveDepth);
  ChainTables tabs = chain_tables(cover, extend_depth, budget);
  rep.chaining_ok = true;
  for (const auto& iv : cover.intervals) {
    if (iv.lo != Rat(0)) {
      if (tabs.rights.count(iv.lo)) ++rep.chain_exact;
      else if (tabs.cell_sups.count(iv.lo)) ++rep.chain_limit;
      else {
        rep.chaining_ok = false;
        rep.chaining_detail = "left endpoint " + iv.lo.str() + " of (" + iv.node +
                              ",m=" + std::to_string(iv.m) + ") does not chain";
        break;
      }
    }
    if (iv.hi != Rat(1)) {
      if (tabs.lefts.count(iv.hi)) ++rep.chain_exact;
      else if (tabs.cell_infs.count(iv.hi)) ++rep.chain_limit;
      else {
        rep.chaining_ok = false;
        rep.chaining_detail = "right endpoint " + iv.hi.str() + " of (" + iv.node +
                              ",m=" + std::to_string(iv.m) + ") does not chain";
        break;
      }
    }
  }

  // (iii) every dyadic k/2^depth is covered; witnesses may need cell roots
  // deeper than the cover's truncation (the point's all-zero continuation
  // exits the tree at some finite depth) and deeper tails within a cell.
  rep.coverage_ok = true;
  IntervalSet enumerated = cover_prefix_union(cover, cover.intervals.size());
  size_t spent = 0;
  for (BigInt k = 0; k <= (BigInt(1) << dyadic_depth); ++k) {
    Rat q(k, BigInt(1) << dyadic_depth);
    if (enumerated.contains(q)) continue;
    bool covered = false;
    if (cover.source_tree) {
      // walk the terminating (all-zero tail) expansion of q until it leaves
      // the tree; the exit node or its parent is the covering cell root
      const TreePredicate& t = *cover.source_tree;
      std::string bits;
      BitString cur;
      bool alive_root = t.decide(cur);
      if (alive_root) {
        for (size_t d = 0; d < kMaxExhaustiveDepth && spent < budget; ++d, ++spent) {
          BigInt num = q.num() << (d + 1);
          int bit = ((num / q.den()) & 1) != 0 ? 1 : 0;
          BitString child = cur.child(bit);
          if (t.decide(child)) { cur = child; continue; }
          // cell root: child if its sibling is alive, else cur
          BitString sib = cur.child(1 - bit);
          BitString root = t.decide(sib) ? child : cur;
          // q is inside [B,B+1)/2^lam; find the tail interval containing it
          for (size_t m = 1; m <= budget; ++m) {
            Interval iv = branch_interval(root, m);
            if (iv.lo <= q && q <= iv.hi) { covered = true; break; }
            if (q < iv.lo) break;
          }
          break;
        }
      }
    }
    if (!covered) {
      rep.coverage_ok = false;
      rep.coverage_detail = "dyadic " + q.str() + " not covered";
      break;
    }
  }
  return rep;
}

CoverReport verify_intervals(const std::vector<CoverInterval>& intervals,
                             size_t dyadic_depth) {
  CoverReport rep;
  rep.disjoint_ok = check_disjoint(intervals, rep.disjoint_detail);
  std::set<Rat> lefts, rights;
  for (const auto& iv : intervals) {
    lefts.insert(iv.lo);
    rights.insert(iv.hi);
  }
  rep.chaining_ok = true;
  for (const auto& iv : intervals) {
    if (iv.lo != Rat(0) && !rights.count(iv.lo)) {
      rep.chaining_ok = false;
      rep.chaining_detail = "left endpoint " + iv.lo.str() + " does not chain";
      break;
    }
    if (iv.hi != Rat(1) && !lefts.count(iv.hi)) {
      rep.chaining_ok = false;
      rep.chaining_detail = "right endpoint " + iv.hi.str() + " does not chain";
      break;
    }
    ++rep.chain_exact;
  }
  std::vector<Interval> parts;
  for (const auto& iv : intervals) parts.push_back({iv.lo, iv.hi});
  IntervalSet s{std::move(parts)};
  rep.coverage_ok = true;
  for (BigInt k = 0; k <= (BigInt(1) << dyadic_depth); ++k) {
    Rat q(k, BigInt(1) << dyadic_depth);
    if (!s.contains(q)) {
      rep.coverage_ok = false;
      rep.coverage_detail = "dyadic " + q.str() + " not covered";
      break;
    }
  }
  return rep;
}

}  // namespace bfp
