#pragma once

#include "oddlen/permutation.hpp"

namespace oddlen {

// Number of inversions (i,j), i < j, sigma(i) > sigma(j) whose positions have
// opposite parity.
int odd_length_a(const PermutationA& w);

// The same statistic via the alternating sum over all parabolic quotients:
// sum over I of (-1)^|I| 2^{n-2-|I|} length of the minimal left coset
// representative. Evaluated as a doubled integer sum (weights 2^{n-1-|I|}),
// which must come out even.
int odd_length_a_alternating(const PermutationA& w);

// Half the number of opposite-parity inversions of the extended window over
// [-n, n].
int odd_length_b(const PermutationB& w);

struct OddStatsB {
  int oinv = 0;  // opposite-parity inversions of the window
  int oneg = 0;  // odd positions carrying a negative value
  int onsp = 0;  // opposite-parity pairs i < j with sigma(i) + sigma(j) < 0
  int total() const { return oinv + oneg + onsp; }
  bool operator==(const OddStatsB&) const = default;
};

OddStatsB odd_stats_b(const PermutationB& w);

enum class ChessboardClass { Plus, Minus, NotChessboard };

// Plus when i + sigma(i) is even for every position, Minus when always odd.
ChessboardClass chessboard_class(const PermutationA& w);
ChessboardClass chessboard_class(const PermutationB& w);

// +1 on the Plus class, -1 on Minus; undefined elsewhere (throws).
int chi(const PermutationA& w);
int chi(const PermutationB& w);

const char* chessboard_class_name(ChessboardClass c);

}  // namespace oddlen
