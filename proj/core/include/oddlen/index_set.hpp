#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace oddlen {

// Type A is the symmetric group S_n with generator indices 1..n-1,
// type B the hyperoctahedral group B_n with generator indices 0..n-1.
enum class GroupKind { A, B };

char kind_letter(GroupKind kind);

// Closed integer interval [lo, hi].
struct Interval {
  int lo = 0;
  int hi = 0;
  int size() const { return hi - lo + 1; }
  bool operator==(const Interval&) const = default;
};

// Subset of the generator indices of S_n or B_n. Immutable value type;
// members are kept sorted and unique.
class IndexSet {
 public:
  IndexSet(GroupKind kind, int n, std::vector<int> members);

  static IndexSet empty_set(GroupKind kind, int n) { return IndexSet(kind, n, {}); }
  static IndexSet full_set(GroupKind kind, int n);
  static IndexSet from_mask(GroupKind kind, int n, std::uint64_t mask);
  // Comma separated indices, "" for the empty set.
  static IndexSet parse(GroupKind kind, int n, std::string_view text);

  GroupKind kind() const { return kind_; }
  int n() const { return n_; }
  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(int index) const;

  // Smallest and largest legal generator index for this kind and rank.
  int min_index() const { return kind_ == GroupKind::A ? 1 : 0; }
  int max_index() const { return n_ - 1; }

  std::uint64_t mask() const;
  IndexSet with(int index) const;
  IndexSet without(int index) const;

  bool operator==(const IndexSet&) const = default;

  std::string str() const;

 private:
  GroupKind kind_;
  int n_;
  std::vector<int> members_;
};

// Maximal intervals separated by gaps greater than one, in increasing order.
struct IntervalDecomposition {
  std::vector<Interval> intervals;
  bool operator==(const IntervalDecomposition&) const = default;
};

IntervalDecomposition connected_components(const IndexSet& set);

// The component containing index 0 when present (kind B); nullptr otherwise.
// Points into the decomposition, valid as long as it lives.
const Interval* zero_component(GroupKind kind, const IntervalDecomposition& comps);

// floor((|I_k|+1)/2) per component, skipping the 0-component for kind B.
std::vector<int> multinomial_parts(const IndexSet& set);

// Sum of the multinomial parts.
int m_tilde(const IndexSet& set);

// Type A only: I = [1, a_s - 1] minus even cut points a_1 < ... < a_{s-1},
// all a_i even. The empty set is not compressed.
bool is_compressed(const IndexSet& set);

enum class ShiftDirection { Left, Right };

// Moves an odd-size connected component of the set one slot left or right:
// right replaces lo by hi+1, left replaces hi by lo-1. The vacated/entered
// slots must keep the component maximal and inside the generator range.
IndexSet shifted_set(const IndexSet& set, Interval component, ShiftDirection direction);

}  // namespace oddlen
