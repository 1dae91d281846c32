#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "oddlen/index_set.hpp"

namespace oddlen {

// Element of S_n in window (one-line) notation: window[i-1] = sigma(i).
class PermutationA {
 public:
  explicit PermutationA(std::vector<int> window);

  static PermutationA identity(int n);
  // Adjacent transposition s_i, 1 <= i <= n-1.
  static PermutationA generator(int n, int i);
  static PermutationA parse(std::string_view text);

  int n() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }
  int operator()(int i) const { return window_[static_cast<std::size_t>(i) - 1]; }

  bool operator==(const PermutationA&) const = default;
  bool operator<(const PermutationA& rhs) const { return window_ < rhs.window_; }

  std::string str() const;

 private:
  std::vector<int> window_;
};

// Element of B_n: window[i-1] = sigma(i), nonzero, absolute values a
// permutation of 1..n. The full map on [-n,n] is sigma(-i) = -sigma(i),
// sigma(0) = 0, derived on demand.
class PermutationB {
 public:
  explicit PermutationB(std::vector<int> window);

  static PermutationB identity(int n);
  // s_0 negates the first value; s_i (i >= 1) is the adjacent transposition.
  static PermutationB generator(int n, int i);
  static PermutationB parse(std::string_view text);
  // Embeds a type A element as an all-positive signed window.
  static PermutationB embed(const PermutationA& sigma);

  int n() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }
  int operator()(int i) const { return window_[static_cast<std::size_t>(i) - 1]; }
  // sigma(i) for any i in [-n, n].
  int extended(int i) const;

  bool operator==(const PermutationB&) const = default;
  bool operator<(const PermutationB& rhs) const { return window_ < rhs.window_; }

  std::string str() const;

 private:
  std::vector<int> window_;
};

PermutationA compose(const PermutationA& u, const PermutationA& v);
PermutationB compose(const PermutationB& u, const PermutationB& v);

PermutationA inverse(const PermutationA& w);
PermutationB inverse(const PermutationB& w);

// Coxeter length: inversions of the window (type A), half the inversions of
// the extended window over [-n,n] (type B).
int length(const PermutationA& w);
int length(const PermutationB& w);

IndexSet right_descents(const PermutationA& w);
IndexSet right_descents(const PermutationB& w);
IndexSet left_descents(const PermutationA& w);
IndexSet left_descents(const PermutationB& w);

// w = first * second with first in the parabolic subgroup W_J and second the
// minimal representative (no left descent in J); lengths add.
std::pair<PermutationA, PermutationA> left_parabolic_decompose(const PermutationA& w,
                                                               const IndexSet& J);
std::pair<PermutationB, PermutationB> left_parabolic_decompose(const PermutationB& w,
                                                               const IndexSet& J);

enum class Side { Left, Right };

bool is_minimal_coset_rep(const PermutationA& w, const IndexSet& I, Side side);
bool is_minimal_coset_rep(const PermutationB& w, const IndexSet& I, Side side);

}  // namespace oddlen
