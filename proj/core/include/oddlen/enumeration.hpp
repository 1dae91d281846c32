#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "oddlen/index_set.hpp"
#include "oddlen/odd_length.hpp"
#include "oddlen/polynomial.hpp"

namespace oddlen {

// Hard caps for full-group sweeps; operations refuse past them instead of
// degrading. Overridable per call.
struct EnumerationLimits {
  int max_n_a = 11;
  int max_n_b = 8;
  int cap(GroupKind kind) const { return kind == GroupKind::A ? max_n_a : max_n_b; }
};

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check_rank(GroupKind kind, int n, const EnumerationLimits& limits);

// n! for A, 2^n n! for B.
std::uint64_t group_order(GroupKind kind, int n);

// Sweeps are parallelized by partitioning on the first window entry:
// n partitions for A, 2n for B, indexed in ascending first-entry order.
int partition_count(GroupKind kind, int n);

// Lexicographically ordered windows with a fixed first entry. The buffer is
// reused across calls; the visitor sees each window exactly once.
template <typename Fn>
void for_each_window_a_partition(int n, int partition, std::vector<int>& buf, Fn&& fn) {
  buf.resize(static_cast<std::size_t>(n));
  buf[0] = partition + 1;
  int next = 1;
  for (int v = 1; v <= n; ++v)
    if (v != buf[0]) buf[static_cast<std::size_t>(next++)] = v;
  do {
    fn(std::span<const int>(buf));
  } while (std::next_permutation(buf.begin() + 1, buf.end()));
}

namespace detail {

template <typename Fn>
void b_windows_rec(int n, int pos, std::uint32_t used, std::vector<int>& buf, Fn& fn) {
  if (pos == n) {
    fn(std::span<const int>(buf));
    return;
  }
  for (int a = n; a >= 1; --a) {
    if (used >> a & 1u) continue;
    buf[static_cast<std::size_t>(pos)] = -a;
    b_windows_rec(n, pos + 1, used | (std::uint32_t(1) << a), buf, fn);
  }
  for (int a = 1; a <= n; ++a) {
    if (used >> a & 1u) continue;
    buf[static_cast<std::size_t>(pos)] = a;
    b_windows_rec(n, pos + 1, used | (std::uint32_t(1) << a), buf, fn);
  }
}

}  // namespace detail

// Partitions are ordered by first entry: -n, ..., -1, 1, ..., n.
template <typename Fn>
void for_each_window_b_partition(int n, int partition, std::vector<int>& buf, Fn&& fn) {
  buf.resize(static_cast<std::size_t>(n));
  const int first = partition < n ? -(n - partition) : partition - n + 1;
  buf[0] = first;
  detail::b_windows_rec(n, 1, std::uint32_t(1) << std::abs(first), buf, fn);
}

template <typename Fn>
void for_each_window_a(int n, Fn&& fn) {
  std::vector<int> buf;
  for (int p = 0; p < n; ++p) for_each_window_a_partition(n, p, buf, fn);
}

template <typename Fn>
void for_each_window_b(int n, Fn&& fn) {
  std::vector<int> buf;
  for (int p = 0; p < 2 * n; ++p) for_each_window_b_partition(n, p, buf, fn);
}

// Checked, type-erased streaming enumeration in lexicographic window order.
void enumerate_group(GroupKind kind, int n,
                     const std::function<void(std::span<const int>)>& fn,
                     const EnumerationLimits& limits = {});

// Everything a sweep needs per element, from one fused O(n^2) pass.
struct ElementStats {
  std::uint32_t descent_mask = 0;  // bit i set iff generator index i is a right descent
  ChessboardClass cls = ChessboardClass::Plus;
  int length_parity = 0;  // Coxeter length mod 2
  int odd_length = 0;
};

ElementStats element_stats_a(std::span<const int> window);
ElementStats element_stats_b(std::span<const int> window);

// Largest odd length attained on the group, used to size accumulators.
int max_odd_length(GroupKind kind, int n);

// Which elements to sum over and whether to weight by the chessboard
// character.
enum class Restriction { All, Chessboard, Plus, Minus };

struct WeightSpec {
  Restriction restrict_to = Restriction::All;
  bool apply_chi = false;
  void validate() const {
    if (apply_chi && restrict_to == Restriction::All)
      throw std::invalid_argument("WeightSpec: chi requires a chessboard restriction");
  }
};

Restriction restriction_from_name(std::string_view name);
const char* restriction_name(Restriction r);

// Signed generating function accumulators indexed by (right descent set,
// chessboard class), one full-group sweep per table. Immutable once built;
// quotient queries sum the cells whose descent set avoids I.
class DescentClassTable {
 public:
  struct Cell {
    IntPolynomial poly;  // sum of (-1)^length x^odd_length over the cell
    std::uint64_t count = 0;
  };

  GroupKind kind() const { return kind_; }
  int n() const { return n_; }
  std::uint32_t mask_limit() const { return std::uint32_t(1) << n_; }
  const Cell& cell(std::uint32_t descent_mask, ChessboardClass cls) const {
    return cells_[descent_mask * 3 + static_cast<std::uint32_t>(cls)];
  }
  std::uint64_t total_count() const;

  IntPolynomial quotient_poly(const IndexSet& I, const WeightSpec& spec) const;
  std::uint64_t quotient_count(const IndexSet& I) const;

 private:
  friend DescentClassTable build_descent_class_table(GroupKind, int, int,
                                                     const EnumerationLimits&);
  GroupKind kind_ = GroupKind::A;
  int n_ = 0;
  std::vector<Cell> cells_;  // (1 << n) * 3 entries
};

DescentClassTable build_descent_class_table(GroupKind kind, int n, int threads = 1,
                                            const EnumerationLimits& limits = {});

// Type A refinement by (descent set, position, value), enabling the
// position-restricted quotient sums without per-query sweeps.
class PositionValueTable {
 public:
  int n() const { return n_; }
  const IntPolynomial& cell(std::uint32_t descent_mask, int position, int value) const {
    return cells_[(descent_mask * static_cast<std::uint32_t>(n_) +
                   static_cast<std::uint32_t>(position - 1)) *
                      static_cast<std::uint32_t>(n_) +
                  static_cast<std::uint32_t>(value - 1)];
  }
  // Sum over sigma in the quotient with sigma(position) = value.
  IntPolynomial quotient_poly(const IndexSet& I, int position, int value) const;

 private:
  friend PositionValueTable build_position_value_table(int, int, const EnumerationLimits&);
  int n_ = 0;
  std::vector<IntPolynomial> cells_;
};

PositionValueTable build_position_value_table(int n, int threads = 1,
                                              const EnumerationLimits& limits = {});

// Direct filtered sweep (the reference path; the table paths must agree).
IntPolynomial gf_quotient(GroupKind kind, int n, const IndexSet& I, const WeightSpec& spec,
                          const EnumerationLimits& limits = {});
// Table path.
IntPolynomial gf_quotient(const DescentClassTable& table, const IndexSet& I,
                          const WeightSpec& spec);

// Sum restricted to sigma(position) = value, type A.
IntPolynomial gf_quotient_filtered(int n, const IndexSet& I, const WeightSpec& spec,
                                   int position, int value,
                                   const EnumerationLimits& limits = {});

}  // namespace oddlen
