#pragma once

#include <bitset>
#include <stdexcept>
#include <string>
#include <vector>

#include "ltc/root_system.hpp"

namespace ltc {

/// Largest ambient rank supported by the fixed-width root bitmask.
inline constexpr int kMaxRank = 12;

/// An indexed subset of the positive roots of C_n, stored as a bitmask
/// over the positive_roots(n) order.  Set algebra is exact; all values
/// are immutable in spirit (mutating helpers return new sets).
class RootSet {
public:
  RootSet() = default;
  explicit RootSet(int n) : n_(check_rank(n)) {}

  static RootSet from_indices(int n, const std::vector<int>& indices) {
    RootSet s(n);
    for (int idx : indices) s.insert(idx);
    return s;
  }

  int rank() const { return n_; }
  int universe_size() const { return n_ * n_; }
  int count() const { return static_cast<int>(bits_.count()); }
  bool empty() const { return bits_.none(); }

  bool contains(int index) const {
    check_index(index);
    return bits_.test(static_cast<std::size_t>(index));
  }

  void insert(int index) {
    check_index(index);
    bits_.set(static_cast<std::size_t>(index));
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 0; i < universe_size(); ++i)
      if (bits_.test(static_cast<std::size_t>(i))) out.push_back(i);
    return out;
  }

  bool subset_of(const RootSet& other) const {
    require_same_rank(other);
    return (bits_ & ~other.bits_).none();
  }

  RootSet set_union(const RootSet& other) const {
    require_same_rank(other);
    RootSet s(n_);
    s.bits_ = bits_ | other.bits_;
    return s;
  }

  RootSet set_intersection(const RootSet& other) const {
    require_same_rank(other);
    RootSet s(n_);
    s.bits_ = bits_ & other.bits_;
    return s;
  }

  /// Complement within the full positive system of rank n.
  RootSet complement() const {
    RootSet s(n_);
    s.bits_ = ~bits_;
    for (int i = universe_size(); i < static_cast<int>(kBits); ++i)
      s.bits_.reset(static_cast<std::size_t>(i));
    return s;
  }

  friend bool operator==(const RootSet& a, const RootSet& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const RootSet& a, const RootSet& b) { return !(a == b); }

  /// Comma-separated textual roots, e.g. "e1+e2,2e2".
  std::string to_string() const {
    const std::vector<Root> roots = positive_roots(n_);
    std::string out;
    for (int idx : indices()) {
      if (!out.empty()) out += ",";
      out += roots[static_cast<std::size_t>(idx)].to_string();
    }
    return out;
  }

private:
  static constexpr std::size_t kBits = static_cast<std::size_t>(kMaxRank) * kMaxRank;

  static int check_rank(int n) {
    if (n < 1 || n > kMaxRank)
      throw std::invalid_argument("RootSet: rank out of range");
    return n;
  }
  void check_index(int index) const {
    if (index < 0 || index >= universe_size())
      throw std::out_of_range("RootSet: root index out of range");
  }
  void require_same_rank(const RootSet& other) const {
    if (n_ != other.n_) throw std::invalid_argument("RootSet: rank mismatch");
  }

  int n_ = 0;
  std::bitset<kBits> bits_;
};

/// The set of all positive roots of rank n.
inline RootSet full_root_set(int n) {
  RootSet s(n);
  for (int i = 0; i < n * n; ++i) s.insert(i);
  return s;
}

/// The noncompact positive roots: the weights of sym(n).
inline RootSet noncompact_root_set(int n) {
  RootSet s(n);
  const std::vector<Root> roots = positive_roots(n);
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i].noncompact()) s.insert(static_cast<int>(i));
  return s;
}

} // namespace ltc
