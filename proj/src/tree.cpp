#include "bfp/tree.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "bfp/errors.hpp"

namespace bfp {

bool TreePredicate::decide(const BitString& s) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = memo_.find(s.bits);
    if (it != memo_.end()) return it->second;
  }
  bool v = decide_raw(s);
  if (v && !s.empty()) {
    // tree condition probe on every cache fill: a live node has a live parent
    bool parent = decide(s.prefix(s.length() - 1));
    assert(parent && "tree condition violated");
    if (!parent) throw ConstructionError("tree condition violated at " + s.bits);
  }
  std::lock_guard<std::mutex> lk(mu_);
  memo_.emplace(s.bits, v);  // write-once: same key always receives same value
  return v;
}

TableTree::TableTree(std::vector<std::string> alive) : alive_(std::move(alive)) {
  std::sort(alive_.begin(), alive_.end());
}

bool TableTree::decide_raw(const BitString& s) const {
  return std::binary_search(alive_.begin(), alive_.end(), s.bits);
}

std::string TableTree::parameters_json() const {
  std::ostringstream os;
  os << "{\"alive\":[";
  for (size_t i = 0; i < alive_.size(); ++i)
    os << (i ? "," : "") << "\"" << alive_[i] << "\"";
  os << "]}";
  return os.str();
}

KleeneTree::KleeneTree() = default;

std::string KleeneTree::parameters_json() const {
  return std::string("{\"numbering_version\":\"") + kNumberingVersion + "\"}";
}

std::optional<HaltInfo> KleeneTree::halt_info(uint64_t e, uint64_t budget) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = halt_cache_.find(e);
    if (it != halt_cache_.end()) {
      if (it->second.second) return it->second.second;       // halt step known
      if (it->second.first >= budget) return std::nullopt;   // searched further already
    }
  }
  auto info = diagonal_halt_info(e, budget);
  std::lock_guard<std::mutex> lk(mu_);
  auto& slot = halt_cache_[e];
  if (info) slot.second = info;
  slot.first = std::max(slot.first, budget);
  return info;
}

bool KleeneTree::decide_raw(const BitString& s) const {
  const uint64_t budget = s.length();
  for (uint64_t e = 0; e < budget; ++e) {
    auto info = halt_info(e, budget);
    if (!info || info->step > budget) continue;
    if (info->output == 0 && s.bit(e) == 0) return false;
    if (info->output == 1 && s.bit(e) == 1) return false;
  }
  return true;
}

TreePtr kleene_tree() { return std::make_shared<KleeneTree>(); }

std::vector<BitString> survivors(const TreePredicate& t, size_t d) {
  if (d > kMaxExhaustiveDepth)
    throw ResourceError("survivors: depth beyond exhaustive bound");
  std::vector<BitString> frontier;
  if (t.decide(BitString{})) frontier.push_back(BitString{});
  for (size_t depth = 0; depth < d; ++depth) {
    std::vector<BitString> next;
    next.reserve(frontier.size() * 2);
    for (const auto& s : frontier)
      for (int b = 0; b < 2; ++b) {
        BitString c = s.child(b);
        if (t.decide(c)) next.push_back(std::move(c));
      }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return frontier;
}

std::vector<MaximalBranch> maximal_branches(const TreePredicate& t, size_t depth_limit) {
  if (depth_limit < 1) throw ArgumentError("maximal_branches: depth_limit >= 1");
  std::vector<MaximalBranch> out;
  std::vector<BitString> frontier;
  if (t.decide(BitString{})) frontier.push_back(BitString{});
  for (size_t depth = 0; depth <= depth_limit && !frontier.empty(); ++depth) {
    std::vector<BitString> next;
    for (const auto& s : frontier) {
      BitString c0 = s.child(0), c1 = s.child(1);
      bool a0 = t.decide(c0), a1 = t.decide(c1);
      if (!a0 && !a1) {
        if (s.length() >= 1) out.push_back({s});
      } else {
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

}  // namespace bfp
