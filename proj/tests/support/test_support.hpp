#pragma once

// Brute-force oracles for the tests. These deliberately avoid the sweep
// kernels and tables in enumeration.hpp: windows are generated locally and
// statistics come from the definitional single-element operations, so table
// and closed-form results are checked against an independent route.

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <vector>

#include "oddlen/enumeration.hpp"
#include "oddlen/odd_length.hpp"
#include "oddlen/permutation.hpp"
#include "oddlen/polynomial.hpp"

namespace oddlen::test {

template <typename Fn>
void windows_a(int n, Fn&& fn) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    fn(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

namespace detail {
template <typename Fn>
void windows_b_rec(int n, std::size_t pos, std::vector<int>& w, std::vector<bool>& used,
                   Fn& fn) {
  if (pos == w.size()) {
    fn(w);
    return;
  }
  for (int a = 1; a <= n; ++a) {
    if (used[static_cast<std::size_t>(a)]) continue;
    used[static_cast<std::size_t>(a)] = true;
    for (int sign : {-1, 1}) {
      w[pos] = sign * a;
      windows_b_rec(n, pos + 1, w, used, fn);
    }
    used[static_cast<std::size_t>(a)] = false;
  }
}
}  // namespace detail

template <typename Fn>
void windows_b(int n, Fn&& fn) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  detail::windows_b_rec(n, 0, w, used, fn);
}

inline bool class_admitted(ChessboardClass cls, Restriction r) {
  switch (r) {
    case Restriction::All:
      return true;
    case Restriction::Chessboard:
      return cls != ChessboardClass::NotChessboard;
    case Restriction::Plus:
      return cls == ChessboardClass::Plus;
    case Restriction::Minus:
      return cls == ChessboardClass::Minus;
  }
  return true;
}

inline IntPolynomial from_terms(const std::map<int, long long>& terms) {
  std::vector<BigInt> cs;
  for (const auto& [deg, coeff] : terms) {
    if (cs.size() <= static_cast<std::size_t>(deg)) cs.resize(static_cast<std::size_t>(deg) + 1);
    cs[static_cast<std::size_t>(deg)] = coeff;
  }
  return IntPolynomial(std::move(cs));
}

// Signed generating function over {sigma in S_n : D(sigma) cap I = empty},
// optionally restricted by chessboard class, chi-weighted, or pinned to
// sigma(position) = value (position 0 = no pin).
inline IntPolynomial brute_gf_a(int n, const IndexSet& I, Restriction r = Restriction::All,
                                bool apply_chi = false, int position = 0, int value = 0) {
  std::map<int, long long> terms;
  windows_a(n, [&](const std::vector<int>& win) {
    if (position > 0 && win[static_cast<std::size_t>(position) - 1] != value) return;
    const PermutationA sigma(win);
    const ChessboardClass cls = chessboard_class(sigma);
    if (!class_admitted(cls, r)) return;
    const IndexSet d = right_descents(sigma);
    for (int i : I.members())
      if (d.contains(i)) return;
    long long sign = length(sigma) % 2 == 0 ? 1 : -1;
    if (apply_chi) sign *= chi(sigma);
    terms[odd_length_a(sigma)] += sign;
  });
  return from_terms(terms);
}

inline IntPolynomial brute_gf_b(int n, const IndexSet& J, Restriction r = Restriction::All,
                                bool apply_chi = false) {
  std::map<int, long long> terms;
  windows_b(n, [&](const std::vector<int>& win) {
    const PermutationB sigma(win);
    const ChessboardClass cls = chessboard_class(sigma);
    if (!class_admitted(cls, r)) return;
    const IndexSet d = right_descents(sigma);
    for (int j : J.members())
      if (d.contains(j)) return;
    long long sign = length(sigma) % 2 == 0 ? 1 : -1;
    if (apply_chi) sign *= chi(sigma);
    terms[odd_length_b(sigma)] += sign;
  });
  return from_terms(terms);
}

// Word length over the Cayley graph, breadth first from the identity.
template <typename Perm>
std::map<Perm, int> bfs_word_lengths(int n, const std::vector<Perm>& generators) {
  std::map<Perm, int> dist;
  std::queue<Perm> queue;
  const Perm id = Perm::identity(n);
  dist[id] = 0;
  queue.push(id);
  while (!queue.empty()) {
    const Perm w = queue.front();
    queue.pop();
    for (const Perm& s : generators) {
      Perm next = compose(w, s);
      if (dist.emplace(next, dist[w] + 1).second) queue.push(std::move(next));
    }
  }
  return dist;
}

// Membership oracle for the standard parabolic subgroup W_J, from the block
// structure of J: positions inside a component block [lo, hi+1] stay inside
// it, everything else is fixed. For kind B only the block containing 0 may
// carry signs.
inline bool in_parabolic_subgroup_a(const PermutationA& w, const IndexSet& J) {
  std::vector<int> block(static_cast<std::size_t>(w.n()) + 1, 0);
  int id = 0;
  for (const Interval& c : connected_components(J).intervals) {
    ++id;
    for (int pos = c.lo; pos <= c.hi + 1; ++pos) block[static_cast<std::size_t>(pos)] = id;
  }
  for (int i = 1; i <= w.n(); ++i) {
    if (block[static_cast<std::size_t>(i)] == 0) {
      if (w(i) != i) return false;
    } else if (block[static_cast<std::size_t>(w(i))] != block[static_cast<std::size_t>(i)]) {
      return false;
    }
  }
  return true;
}

inline bool in_parabolic_subgroup_b(const PermutationB& w, const IndexSet& J) {
  std::vector<int> block(static_cast<std::size_t>(w.n()) + 1, 0);
  int id = 0;
  bool block_signed[17] = {};
  for (const Interval& c : connected_components(J).intervals) {
    ++id;
    const int lo = c.lo == 0 ? 1 : c.lo;
    for (int pos = lo; pos <= c.hi + 1; ++pos) block[static_cast<std::size_t>(pos)] = id;
    block_signed[id] = c.lo == 0;
  }
  for (int i = 1; i <= w.n(); ++i) {
    const int b = block[static_cast<std::size_t>(i)];
    const int v = w(i);
    if (b == 0) {
      if (v != i) return false;
    } else {
      if (v < 0 && !block_signed[b]) return false;
      if (block[static_cast<std::size_t>(std::abs(v))] != b) return false;
    }
  }
  return true;
}

}  // namespace oddlen::test
