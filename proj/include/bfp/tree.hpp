#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bfp/machine.hpp"
#include "bfp/rational.hpp"

namespace bfp {

// Finite bit string over {0,1}; doubles as a node address in a binary tree.
struct BitString {
  std::string bits;  // '0'/'1' characters, most significant first

  BitString() = default;
  explicit BitString(std::string b) : bits(std::move(b)) {}

  size_t length() const { return bits.size(); }
  bool empty() const { return bits.empty(); }
  int bit(size_t i) const { return bits[i] == '1' ? 1 : 0; }
  BitString child(int b) const { return BitString(bits + (b ? '1' : '0')); }
  BitString prefix(size_t len) const { return BitString(bits.substr(0, len)); }

  // value of the string read as a binary numeral (empty string is 0)
  BigInt value() const {
    BigInt v = 0;
    for (char c : bits) { v <<= 1; if (c == '1') v += 1; }
    return v;
  }

  friend bool operator==(const BitString& a, const BitString& b) { return a.bits == b.bits; }
  friend bool operator<(const BitString& a, const BitString& b) {
    if (a.bits.size() != b.bits.size()) return a.bits.size() < b.bits.size();
    return a.bits < b.bits;  // breadth-first lexicographic
  }
};

// Total decidable predicate on bit strings satisfying the tree condition:
// decide(a) = 0 forces decide(ab) = 0 for every extension. The memo cache is
// write-once; every fill of a positive node asserts its parent is positive.
class TreePredicate {
public:
  virtual ~TreePredicate() = default;

  bool decide(const BitString& s) const;

  virtual std::string kind() const = 0;
  // serialization payload; see serialize.cpp
  virtual std::string parameters_json() const = 0;

protected:
  virtual bool decide_raw(const BitString& s) const = 0;

private:
  mutable std::mutex mu_;
  mutable std::map<std::string, bool> memo_;
};

using TreePtr = std::shared_ptr<const TreePredicate>;

// tree that is 1 everywhere
class FullTree : public TreePredicate {
public:
  std::string kind() const override { return "full"; }
  std::string parameters_json() const override { return "{}"; }

protected:
  bool decide_raw(const BitString&) const override { return true; }
};

// explicit finite alive-set; everything not listed is dead
class TableTree : public TreePredicate {
public:
  explicit TableTree(std::vector<std::string> alive);
  std::string kind() const override { return "table"; }
  std::string parameters_json() const override;

protected:
  bool decide_raw(const BitString& s) const override;

private:
  std::vector<std::string> alive_;
};

// The canonical Kleene tree over the register machine numbering:
// decide(s) = 1 iff for every e < |s|, the diagonal run of program e within
// |s| steps does not contradict bit e (output 0 demands bit 1, output 1
// demands bit 0). Computable, satisfies the tree condition, has arbitrarily
// deep survivors but no computable infinite branch.
class KleeneTree : public TreePredicate {
public:
  KleeneTree();
  std::string kind() const override { return "kleene"; }
  std::string parameters_json() const override;

protected:
  bool decide_raw(const BitString& s) const override;

private:
  std::optional<HaltInfo> halt_info(uint64_t e, uint64_t budget) const;
  mutable std::mutex mu_;
  mutable std::map<uint64_t, std::pair<uint64_t, std::optional<HaltInfo>>> halt_cache_;
};

TreePtr kleene_tree();

// node with both children off the tree
struct MaximalBranch {
  BitString node;
  size_t length() const { return node.length(); }
};

inline constexpr size_t kMaxExhaustiveDepth = 24;

// all depth-d survivors in lexicographic order; throws ResourceError past the
// exhaustive bound
std::vector<BitString> survivors(const TreePredicate& t, size_t d);

// all maximal branches of length <= depth_limit, breadth-first lexicographic
std::vector<MaximalBranch> maximal_branches(const TreePredicate& t, size_t depth_limit);

}  // namespace bfp
