#include "oddlen/odd_length.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace oddlen {

int odd_length_a(const PermutationA& w) {
  const auto& win = w.window();
  int count = 0;
  for (std::size_t i = 0; i < win.size(); ++i)
    for (std::size_t j = i + 1; j < win.size(); ++j)
      if (((i ^ j) & 1) != 0 && win[i] > win[j]) ++count;
  return count;
}

int odd_length_a_alternating(const PermutationA& w) {
  const int n = w.n();
  // The summand is the length of the minimal representative of the coset
  // w W_I (no right descent in I), obtained by left-decomposing the inverse.
  // Doubled weights 2^{n-1-|I|} keep the sum integral even at |I| = n-1.
  const PermutationA w_inv = inverse(w);
  std::int64_t doubled = 0;
  const std::uint32_t subsets = std::uint32_t(1) << (n - 1);
  for (std::uint32_t bits = 0; bits < subsets; ++bits) {
    std::vector<int> members;
    for (int i = 1; i <= n - 1; ++i)
      if (bits >> (i - 1) & 1u) members.push_back(i);
    const IndexSet I(GroupKind::A, n, std::move(members));
    const auto [part, quotient] = left_parabolic_decompose(w_inv, I);
    const int size = std::popcount(bits);
    const std::int64_t weight = std::int64_t(1) << (n - 1 - size);
    doubled += (size % 2 == 0 ? weight : -weight) * length(quotient);
  }
  if (doubled % 2 != 0)
    throw std::logic_error("odd_length_a_alternating: doubled sum is odd");
  const std::int64_t value = doubled / 2;
  if (value < 0) throw std::logic_error("odd_length_a_alternating: negative value");
  return static_cast<int>(value);
}

int odd_length_b(const PermutationB& w) {
  const int n = w.n();
  int count = 0;
  for (int i = -n; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (((i ^ j) & 1) != 0 && w.extended(i) > w.extended(j)) ++count;
  if (count % 2 != 0) throw std::logic_error("odd_length_b: odd pair count");
  return count / 2;
}

OddStatsB odd_stats_b(const PermutationB& w) {
  const auto& win = w.window();
  OddStatsB s;
  for (std::size_t i = 0; i < win.size(); ++i) {
    if (win[i] < 0 && i % 2 == 0) ++s.oneg;  // position i+1 is odd
    for (std::size_t j = i + 1; j < win.size(); ++j) {
      if (((i ^ j) & 1) == 0) continue;
      if (win[i] > win[j]) ++s.oinv;
      if (win[i] + win[j] < 0) ++s.onsp;
    }
  }
  return s;
}

namespace {

ChessboardClass class_of_window(const std::vector<int>& win) {
  bool all_even = true;
  bool all_odd = true;
  for (std::size_t i = 0; i < win.size(); ++i) {
    // parity of i+1 + sigma(i+1); signs do not affect parity
    if (((static_cast<int>(i) + 1 + win[i]) & 1) == 0) {
      all_odd = false;
    } else {
      all_even = false;
    }
  }
  if (all_even) return ChessboardClass::Plus;
  if (all_odd) return ChessboardClass::Minus;
  return ChessboardClass::NotChessboard;
}

int chi_of_class(ChessboardClass c) {
  switch (c) {
    case ChessboardClass::Plus:
      return 1;
    case ChessboardClass::Minus:
      return -1;
    case ChessboardClass::NotChessboard:
      break;
  }
  throw std::domain_error("chi: not a chessboard element");
}

}  // namespace

ChessboardClass chessboard_class(const PermutationA& w) { return class_of_window(w.window()); }

ChessboardClass chessboard_class(const PermutationB& w) { return class_of_window(w.window()); }

int chi(const PermutationA& w) { return chi_of_class(chessboard_class(w)); }

int chi(const PermutationB& w) { return chi_of_class(chessboard_class(w)); }

const char* chessboard_class_name(ChessboardClass c) {
  switch (c) {
    case ChessboardClass::Plus:
      return "plus";
    case ChessboardClass::Minus:
      return "minus";
    case ChessboardClass::NotChessboard:
      return "none";
  }
  return "none";
}

}  // namespace oddlen
