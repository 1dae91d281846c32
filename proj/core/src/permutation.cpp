#include "oddlen/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace oddlen {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

std::vector<int> parse_csv_ints(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  if (text.empty()) bad("parse_window: empty window");
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty()) bad("parse_window: empty entry");
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      bad("parse_window: not an integer: \"" + std::string(tok) + "\"");
    values.push_back(value);
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  return values;
}

void validate_window_a(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  if (n == 0) bad("PermutationA: empty window");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : w) {
    if (v < 1 || v > n)
      bad("PermutationA: value " + std::to_string(v) + " out of range for n=" +
          std::to_string(n));
    if (seen[static_cast<std::size_t>(v)]) bad("PermutationA: duplicate value " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

void validate_window_b(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  if (n == 0) bad("PermutationB: empty window");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : w) {
    if (v == 0) bad("PermutationB: zero entry");
    const int a = std::abs(v);
    if (a > n)
      bad("PermutationB: value " + std::to_string(v) + " out of range for n=" +
          std::to_string(n));
    if (seen[static_cast<std::size_t>(a)])
      bad("PermutationB: duplicate absolute value " + std::to_string(a));
    seen[static_cast<std::size_t>(a)] = true;
  }
}

std::string window_str(const std::vector<int>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

void check_same_group(int nu, int nv, const char* what) {
  if (nu != nv) bad(std::string(what) + ": rank mismatch");
}

}  // namespace

PermutationA::PermutationA(std::vector<int> window) : window_(std::move(window)) {
  validate_window_a(window_);
}

PermutationA PermutationA::identity(int n) {
  if (n < 1) bad("PermutationA: rank must be positive");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return PermutationA(std::move(w));
}

PermutationA PermutationA::generator(int n, int i) {
  if (i < 1 || i > n - 1) bad("PermutationA: generator index out of range");
  auto w = identity(n).window_;
  std::swap(w[static_cast<std::size_t>(i) - 1], w[static_cast<std::size_t>(i)]);
  return PermutationA(std::move(w));
}

PermutationA PermutationA::parse(std::string_view text) {
  return PermutationA(parse_csv_ints(text));
}

std::string PermutationA::str() const { return window_str(window_); }

PermutationB::PermutationB(std::vector<int> window) : window_(std::move(window)) {
  validate_window_b(window_);
}

PermutationB PermutationB::identity(int n) {
  if (n < 1) bad("PermutationB: rank must be positive");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return PermutationB(std::move(w));
}

PermutationB PermutationB::generator(int n, int i) {
  if (i < 0 || i > n - 1) bad("PermutationB: generator index out of range");
  auto w = identity(n).window_;
  if (i == 0) {
    w[0] = -1;
  } else {
    std::swap(w[static_cast<std::size_t>(i) - 1], w[static_cast<std::size_t>(i)]);
  }
  return PermutationB(std::move(w));
}

PermutationB PermutationB::parse(std::string_view text) {
  return PermutationB(parse_csv_ints(text));
}

PermutationB PermutationB::embed(const PermutationA& sigma) {
  return PermutationB(sigma.window());
}

int PermutationB::extended(int i) const {
  if (i == 0) return 0;
  if (i > 0) return window_[static_cast<std::size_t>(i) - 1];
  return -window_[static_cast<std::size_t>(-i) - 1];
}

std::string PermutationB::str() const { return window_str(window_); }

PermutationA compose(const PermutationA& u, const PermutationA& v) {
  check_same_group(u.n(), v.n(), "compose");
  std::vector<int> w(static_cast<std::size_t>(u.n()));
  for (int i = 1; i <= u.n(); ++i) w[static_cast<std::size_t>(i) - 1] = u(v(i));
  return PermutationA(std::move(w));
}

PermutationB compose(const PermutationB& u, const PermutationB& v) {
  check_same_group(u.n(), v.n(), "compose");
  std::vector<int> w(static_cast<std::size_t>(u.n()));
  for (int i = 1; i <= u.n(); ++i) w[static_cast<std::size_t>(i) - 1] = u.extended(v(i));
  return PermutationB(std::move(w));
}

PermutationA inverse(const PermutationA& w) {
  std::vector<int> inv(static_cast<std::size_t>(w.n()));
  for (int i = 1; i <= w.n(); ++i) inv[static_cast<std::size_t>(w(i)) - 1] = i;
  return PermutationA(std::move(inv));
}

PermutationB inverse(const PermutationB& w) {
  std::vector<int> inv(static_cast<std::size_t>(w.n()));
  for (int i = 1; i <= w.n(); ++i) {
    const int v = w(i);
    if (v > 0) {
      inv[static_cast<std::size_t>(v) - 1] = i;
    } else {
      inv[static_cast<std::size_t>(-v) - 1] = -i;
    }
  }
  return PermutationB(std::move(inv));
}

int length(const PermutationA& w) {
  int inv = 0;
  const auto& win = w.window();
  for (std::size_t i = 0; i < win.size(); ++i)
    for (std::size_t j = i + 1; j < win.size(); ++j)
      if (win[i] > win[j]) ++inv;
  return inv;
}

int length(const PermutationB& w) {
  const int n = w.n();
  int count = 0;
  int diagonal = 0;
  for (int i = -n; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w.extended(i) > w.extended(j)) ++count;
  // The mirror map (i,j) -> (-j,-i) double counts every inversion except
  // its fixed points (-j,j), which occur once per negative entry. Dropping
  // those leaves exactly twice the length (checked against the Cayley-graph
  // word length and the window formula in the tests).
  for (int i = 1; i <= n; ++i)
    if (w(i) < 0) ++diagonal;
  if ((count - diagonal) % 2 != 0)
    throw std::logic_error("length(B): mirror pairing violated");
  return (count - diagonal) / 2;
}

IndexSet right_descents(const PermutationA& w) {
  std::vector<int> d;
  for (int i = 1; i <= w.n() - 1; ++i)
    if (w(i) > w(i + 1)) d.push_back(i);
  return IndexSet(GroupKind::A, w.n(), std::move(d));
}

IndexSet right_descents(const PermutationB& w) {
  std::vector<int> d;
  if (w(1) < 0) d.push_back(0);
  for (int i = 1; i <= w.n() - 1; ++i)
    if (w(i) > w(i + 1)) d.push_back(i);
  return IndexSet(GroupKind::B, w.n(), std::move(d));
}

IndexSet left_descents(const PermutationA& w) { return right_descents(inverse(w)); }

IndexSet left_descents(const PermutationB& w) { return right_descents(inverse(w)); }

namespace {

// Shared greedy stripping loop: left-multiplies by generators from J while
// some j in J is a left descent, smallest j first. The product of the used
// generators (in application order) is the W_J part.
template <typename Perm>
std::pair<Perm, Perm> decompose_impl(const Perm& w, const IndexSet& J) {
  if (J.n() != w.n()) bad("left_parabolic_decompose: rank mismatch");
  Perm part = Perm::identity(w.n());
  Perm rest = w;
  for (;;) {
    const IndexSet ld = left_descents(rest);
    int j = -1;
    for (int cand : J.members()) {
      if (ld.contains(cand)) {
        j = cand;
        break;
      }
    }
    if (j < 0) break;
    const Perm s = Perm::generator(w.n(), j);
    rest = compose(s, rest);
    part = compose(part, s);
  }
  return {part, rest};
}

}  // namespace

std::pair<PermutationA, PermutationA> left_parabolic_decompose(const PermutationA& w,
                                                               const IndexSet& J) {
  if (J.kind() != GroupKind::A) bad("left_parabolic_decompose: index set kind mismatch");
  return decompose_impl(w, J);
}

std::pair<PermutationB, PermutationB> left_parabolic_decompose(const PermutationB& w,
                                                               const IndexSet& J) {
  if (J.kind() != GroupKind::B) bad("left_parabolic_decompose: index set kind mismatch");
  return decompose_impl(w, J);
}

namespace {

template <typename Perm>
bool minimal_impl(const Perm& w, const IndexSet& I, Side side) {
  if (I.n() != w.n()) bad("is_minimal_coset_rep: rank mismatch");
  const IndexSet d = side == Side::Right ? right_descents(w) : left_descents(w);
  for (int i : I.members())
    if (d.contains(i)) return false;
  return true;
}

}  // namespace

bool is_minimal_coset_rep(const PermutationA& w, const IndexSet& I, Side side) {
  if (I.kind() != GroupKind::A) bad("is_minimal_coset_rep: index set kind mismatch");
  return minimal_impl(w, I, side);
}

bool is_minimal_coset_rep(const PermutationB& w, const IndexSet& I, Side side) {
  if (I.kind() != GroupKind::B) bad("is_minimal_coset_rep: index set kind mismatch");
  return minimal_impl(w, I, side);
}

}  // namespace oddlen
