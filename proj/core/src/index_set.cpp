#include "oddlen/index_set.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace oddlen {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

char kind_letter(GroupKind kind) { return kind == GroupKind::A ? 'A' : 'B'; }

IndexSet::IndexSet(GroupKind kind, int n, std::vector<int> members)
    : kind_(kind), n_(n), members_(std::move(members)) {
  if (n_ < 1) bad("IndexSet: rank must be positive");
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0 && members_[i] == members_[i - 1]) bad("IndexSet: duplicate index");
    if (members_[i] < min_index() || members_[i] > max_index())
      bad("IndexSet: index " + std::to_string(members_[i]) + " out of range for kind " +
          std::string(1, kind_letter(kind_)) + ", n=" + std::to_string(n_));
  }
}

IndexSet IndexSet::full_set(GroupKind kind, int n) {
  std::vector<int> m;
  for (int i = (kind == GroupKind::A ? 1 : 0); i <= n - 1; ++i) m.push_back(i);
  return IndexSet(kind, n, std::move(m));
}

IndexSet IndexSet::from_mask(GroupKind kind, int n, std::uint64_t mask) {
  std::vector<int> m;
  for (int i = 0; i < 64; ++i)
    if (mask >> i & 1u) m.push_back(i);
  return IndexSet(kind, n, std::move(m));
}

IndexSet IndexSet::parse(GroupKind kind, int n, std::string_view text) {
  std::vector<int> m;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    // tolerate surrounding blanks
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty()) bad("IndexSet: empty entry in \"" + std::string(text) + "\"");
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      bad("IndexSet: not an integer: \"" + std::string(tok) + "\"");
    m.push_back(value);
    pos = comma + 1;
  }
  return IndexSet(kind, n, std::move(m));
}

bool IndexSet::contains(int index) const {
  return std::binary_search(members_.begin(), members_.end(), index);
}

std::uint64_t IndexSet::mask() const {
  std::uint64_t m = 0;
  for (int i : members_) m |= std::uint64_t(1) << i;
  return m;
}

IndexSet IndexSet::with(int index) const {
  if (contains(index)) return *this;
  auto m = members_;
  m.push_back(index);
  return IndexSet(kind_, n_, std::move(m));
}

IndexSet IndexSet::without(int index) const {
  auto m = members_;
  std::erase(m, index);
  return IndexSet(kind_, n_, std::move(m));
}

std::string IndexSet::str() const {
  std::string out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(members_[i]);
  }
  return out;
}

IntervalDecomposition connected_components(const IndexSet& set) {
  IntervalDecomposition d;
  const auto& m = set.members();
  std::size_t i = 0;
  while (i < m.size()) {
    Interval iv{m[i], m[i]};
    while (i + 1 < m.size() && m[i + 1] == m[i] + 1) {
      ++i;
      iv.hi = m[i];
    }
    d.intervals.push_back(iv);
    ++i;
  }
  return d;
}

const Interval* zero_component(GroupKind kind, const IntervalDecomposition& comps) {
  if (kind != GroupKind::B) return nullptr;
  if (!comps.intervals.empty() && comps.intervals.front().lo == 0)
    return &comps.intervals.front();
  return nullptr;
}

std::vector<int> multinomial_parts(const IndexSet& set) {
  const auto comps = connected_components(set);
  const Interval* j0 = zero_component(set.kind(), comps);
  std::vector<int> parts;
  for (const auto& c : comps.intervals) {
    if (j0 && c == *j0) continue;
    parts.push_back((c.size() + 1) / 2);
  }
  return parts;
}

int m_tilde(const IndexSet& set) {
  int sum = 0;
  for (int p : multinomial_parts(set)) sum += p;
  return sum;
}

bool is_compressed(const IndexSet& set) {
  if (set.kind() != GroupKind::A) bad("is_compressed: type A sets only");
  const auto comps = connected_components(set).intervals;
  if (comps.empty()) return false;
  // Cut points a_i sit one past each component end; all must be even, which
  // means every component ends at an odd index, the first starts at 1, and
  // consecutive components are separated by exactly one cut point.
  if (comps.front().lo != 1) return false;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    if (comps[k].hi % 2 != 1) return false;
    if (k + 1 < comps.size() && comps[k + 1].lo != comps[k].hi + 2) return false;
  }
  return true;
}

IndexSet shifted_set(const IndexSet& set, Interval component, ShiftDirection direction) {
  const auto comps = connected_components(set).intervals;
  if (std::find(comps.begin(), comps.end(), component) == comps.end())
    bad("shifted_set: not a connected component of the set");
  if (component.size() % 2 == 0) bad("shifted_set: component has even cardinality");
  if (set.kind() == GroupKind::B && component.lo == 0)
    bad("shifted_set: cannot shift the component containing 0");

  if (direction == ShiftDirection::Right) {
    const int entering = component.hi + 1;
    if (entering > set.max_index() || set.contains(entering + 1))
      bad("shifted_set: right slot blocked");
    return set.without(component.lo).with(entering);
  }
  const int entering = component.lo - 1;
  if (entering < std::max(set.min_index(), 1) || (entering - 1 >= 0 && set.contains(entering - 1)))
    bad("shifted_set: left slot blocked");
  return set.without(component.hi).with(entering);
}

}  // namespace oddlen
