#include "oddlen/enumeration.hpp"

#include <array>
#include <cstdlib>
#include <thread>

namespace oddlen {

void check_rank(GroupKind kind, int n, const EnumerationLimits& limits) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  if (n > limits.cap(kind))
    throw ResourceLimitError("rank " + std::to_string(n) + " exceeds the kind " +
                             std::string(1, kind_letter(kind)) + " limit of " +
                             std::to_string(limits.cap(kind)));
}

std::uint64_t group_order(GroupKind kind, int n) {
  std::uint64_t order = 1;
  for (int i = 2; i <= n; ++i) order *= static_cast<std::uint64_t>(i);
  if (kind == GroupKind::B) order <<= n;
  return order;
}

int partition_count(GroupKind kind, int n) { return kind == GroupKind::A ? n : 2 * n; }

void enumerate_group(GroupKind kind, int n,
                     const std::function<void(std::span<const int>)>& fn,
                     const EnumerationLimits& limits) {
  check_rank(kind, n, limits);
  if (kind == GroupKind::A) {
    for_each_window_a(n, fn);
  } else {
    for_each_window_b(n, fn);
  }
}

ElementStats element_stats_a(std::span<const int> w) {
  const int n = static_cast<int>(w.size());
  ElementStats s;
  int inv = 0, oinv = 0;
  bool all_even = true, all_odd = true;
  for (int i = 0; i < n; ++i) {
    if (((i + 1 + w[i]) & 1) == 0) {
      all_odd = false;
    } else {
      all_even = false;
    }
    for (int j = i + 1; j < n; ++j) {
      if (w[i] > w[j]) {
        ++inv;
        oinv += (i ^ j) & 1;
      }
    }
  }
  for (int i = 1; i < n; ++i)
    if (w[i - 1] > w[i]) s.descent_mask |= std::uint32_t(1) << i;
  s.cls = all_even  ? ChessboardClass::Plus
          : all_odd ? ChessboardClass::Minus
                    : ChessboardClass::NotChessboard;
  s.length_parity = inv & 1;
  s.odd_length = oinv;
  return s;
}

ElementStats element_stats_b(std::span<const int> w) {
  const int n = static_cast<int>(w.size());
  ElementStats s;
  int inv = 0, nsp = 0, neg = 0;
  int oinv = 0, onsp = 0, oneg = 0;
  bool all_even = true, all_odd = true;
  for (int i = 0; i < n; ++i) {
    const int wi = w[i];
    if (((i + 1 + wi) & 1) == 0) {
      all_odd = false;
    } else {
      all_even = false;
    }
    if (wi < 0) {
      ++neg;
      if ((i & 1) == 0) ++oneg;  // odd position i+1
    }
    for (int j = i + 1; j < n; ++j) {
      const int wj = w[j];
      const int par = (i ^ j) & 1;
      if (wi > wj) {
        ++inv;
        oinv += par;
      }
      if (wi + wj < 0) {
        ++nsp;
        onsp += par;
      }
    }
  }
  if (w[0] < 0) s.descent_mask |= 1u;
  for (int i = 1; i < n; ++i)
    if (w[i - 1] > w[i]) s.descent_mask |= std::uint32_t(1) << i;
  s.cls = all_even  ? ChessboardClass::Plus
          : all_odd ? ChessboardClass::Minus
                    : ChessboardClass::NotChessboard;
  // length = inv + neg + nsp, the window form of the extended-window count;
  // cross-validated against the literal definition in the tests
  s.length_parity = (inv + neg + nsp) & 1;
  s.odd_length = oinv + oneg + onsp;
  return s;
}

int max_odd_length(GroupKind kind, int n) {
  const int pairs = ((n + 1) / 2) * (n / 2);
  if (kind == GroupKind::A) return pairs;
  return 2 * pairs + (n + 1) / 2;
}

Restriction restriction_from_name(std::string_view name) {
  if (name == "all") return Restriction::All;
  if (name == "chess" || name == "chessboard") return Restriction::Chessboard;
  if (name == "plus") return Restriction::Plus;
  if (name == "minus") return Restriction::Minus;
  throw std::invalid_argument("unknown restriction: " + std::string(name));
}

const char* restriction_name(Restriction r) {
  switch (r) {
    case Restriction::All:
      return "all";
    case Restriction::Chessboard:
      return "chess";
    case Restriction::Plus:
      return "plus";
    case Restriction::Minus:
      return "minus";
  }
  return "all";
}

namespace {

// Per-class term weights implied by a WeightSpec, indexed Plus, Minus, None.
std::array<int, 3> class_weights(const WeightSpec& spec) {
  spec.validate();
  switch (spec.restrict_to) {
    case Restriction::All:
      return {1, 1, 1};
    case Restriction::Chessboard:
      return {1, spec.apply_chi ? -1 : 1, 0};
    case Restriction::Plus:
      return {1, 0, 0};
    case Restriction::Minus:
      return {0, spec.apply_chi ? -1 : 1, 0};
  }
  return {1, 1, 1};
}

std::uint32_t full_generator_mask(GroupKind kind, int n) {
  const std::uint32_t all = (std::uint32_t(1) << n) - 1;
  return kind == GroupKind::A ? all & ~1u : all;
}

std::uint64_t index_set_mask(const IndexSet& I) { return I.mask(); }

void validate_query_set(const IndexSet& I, GroupKind kind, int n) {
  if (I.kind() != kind || I.n() != n)
    throw std::invalid_argument("index set does not match the table/group");
}

// Raw signed accumulation buffers used during a sweep; coefficients are
// bounded by the group order, far inside int64 range.
struct Accumulator {
  std::vector<std::int64_t> coeffs;  // cell-major, (max_len + 1) per cell
  std::vector<std::uint64_t> counts;
  int width = 0;

  Accumulator(std::size_t cells, int max_len)
      : coeffs(cells * static_cast<std::size_t>(max_len + 1), 0),
        counts(cells, 0),
        width(max_len + 1) {}

  void add(std::size_t cell, const ElementStats& st) {
    coeffs[cell * static_cast<std::size_t>(width) + static_cast<std::size_t>(st.odd_length)] +=
        st.length_parity ? -1 : 1;
    ++counts[cell];
  }

  void merge(const Accumulator& other) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += other.coeffs[i];
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
  }

  IntPolynomial poly(std::size_t cell) const {
    std::vector<BigInt> cs(static_cast<std::size_t>(width));
    for (int k = 0; k < width; ++k)
      cs[static_cast<std::size_t>(k)] = coeffs[cell * static_cast<std::size_t>(width) +
                                               static_cast<std::size_t>(k)];
    return IntPolynomial(std::move(cs));
  }
};

// Runs fn(partition, accumulator) over all partitions, round-robin across
// threads, then merges in partition-independent order. Sums of integers are
// exact, so the merged result is identical for every thread count.
template <typename Body>
Accumulator parallel_sweep(GroupKind kind, int n, int threads, std::size_t cells, int max_len,
                           Body body) {
  const int parts = partition_count(kind, n);
  threads = std::clamp(threads, 1, parts);
  std::vector<Accumulator> acc(static_cast<std::size_t>(threads), Accumulator(cells, max_len));
  if (threads == 1) {
    for (int p = 0; p < parts; ++p) body(p, acc[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (int p = t; p < parts; p += threads) body(p, acc[static_cast<std::size_t>(t)]);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (int t = 1; t < threads; ++t) acc[0].merge(acc[static_cast<std::size_t>(t)]);
  return std::move(acc[0]);
}

}  // namespace

std::uint64_t DescentClassTable::total_count() const {
  std::uint64_t total = 0;
  for (const auto& c : cells_) total += c.count;
  return total;
}

IntPolynomial DescentClassTable::quotient_poly(const IndexSet& I, const WeightSpec& spec) const {
  validate_query_set(I, kind_, n_);
  const auto weights = class_weights(spec);
  const std::uint32_t avoid = static_cast<std::uint32_t>(index_set_mask(I));
  const std::uint32_t comp = full_generator_mask(kind_, n_) & ~avoid;
  std::vector<BigInt> out(static_cast<std::size_t>(max_odd_length(kind_, n_)) + 1, BigInt(0));
  // all submasks of comp, empty set included
  std::uint32_t m = comp;
  for (;;) {
    for (int cls = 0; cls < 3; ++cls) {
      if (weights[static_cast<std::size_t>(cls)] == 0) continue;
      const auto& poly =
          cell(m, static_cast<ChessboardClass>(cls)).poly;
      const auto& cs = poly.coefficients();
      if (weights[static_cast<std::size_t>(cls)] > 0) {
        for (std::size_t k = 0; k < cs.size(); ++k) out[k] += cs[k];
      } else {
        for (std::size_t k = 0; k < cs.size(); ++k) out[k] -= cs[k];
      }
    }
    if (m == 0) break;
    m = (m - 1) & comp;
  }
  return IntPolynomial(std::move(out));
}

std::uint64_t DescentClassTable::quotient_count(const IndexSet& I) const {
  validate_query_set(I, kind_, n_);
  const std::uint32_t avoid = static_cast<std::uint32_t>(index_set_mask(I));
  const std::uint32_t comp = full_generator_mask(kind_, n_) & ~avoid;
  std::uint64_t total = 0;
  std::uint32_t m = comp;
  for (;;) {
    for (int cls = 0; cls < 3; ++cls)
      total += cell(m, static_cast<ChessboardClass>(cls)).count;
    if (m == 0) break;
    m = (m - 1) & comp;
  }
  return total;
}

DescentClassTable build_descent_class_table(GroupKind kind, int n, int threads,
                                            const EnumerationLimits& limits) {
  check_rank(kind, n, limits);
  const int max_len = max_odd_length(kind, n);
  const std::size_t cells = (std::size_t(1) << n) * 3;

  auto body = [&](int p, Accumulator& acc) {
    std::vector<int> buf;
    if (kind == GroupKind::A) {
      for_each_window_a_partition(n, p, buf, [&](std::span<const int> w) {
        const ElementStats st = element_stats_a(w);
        acc.add(st.descent_mask * 3 + static_cast<std::uint32_t>(st.cls), st);
      });
    } else {
      for_each_window_b_partition(n, p, buf, [&](std::span<const int> w) {
        const ElementStats st = element_stats_b(w);
        acc.add(st.descent_mask * 3 + static_cast<std::uint32_t>(st.cls), st);
      });
    }
  };
  const Accumulator acc = parallel_sweep(kind, n, threads, cells, max_len, body);

  DescentClassTable table;
  table.kind_ = kind;
  table.n_ = n;
  table.cells_.resize(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    table.cells_[c].poly = acc.poly(c);
    table.cells_[c].count = acc.counts[c];
  }
  return table;
}

IntPolynomial PositionValueTable::quotient_poly(const IndexSet& I, int position,
                                                int value) const {
  validate_query_set(I, GroupKind::A, n_);
  if (position < 1 || position > n_ || value < 1 || value > n_)
    throw std::invalid_argument("gf_quotient_filtered: position or value out of range");
  const std::uint32_t avoid = static_cast<std::uint32_t>(index_set_mask(I));
  const std::uint32_t comp = full_generator_mask(GroupKind::A, n_) & ~avoid;
  std::vector<BigInt> out(static_cast<std::size_t>(max_odd_length(GroupKind::A, n_)) + 1,
                          BigInt(0));
  std::uint32_t m = comp;
  for (;;) {
    const auto& cs = cell(m, position, value).coefficients();
    for (std::size_t k = 0; k < cs.size(); ++k) out[k] += cs[k];
    if (m == 0) break;
    m = (m - 1) & comp;
  }
  return IntPolynomial(std::move(out));
}

PositionValueTable build_position_value_table(int n, int threads,
                                              const EnumerationLimits& limits) {
  check_rank(GroupKind::A, n, limits);
  const int max_len = max_odd_length(GroupKind::A, n);
  const std::size_t nn = static_cast<std::size_t>(n);
  const std::size_t cells = (std::size_t(1) << n) * nn * nn;

  auto body = [&](int p, Accumulator& acc) {
    std::vector<int> buf;
    for_each_window_a_partition(n, p, buf, [&](std::span<const int> w) {
      const ElementStats st = element_stats_a(w);
      const std::size_t base = st.descent_mask * nn * nn;
      for (std::size_t pos = 0; pos < nn; ++pos) {
        const std::size_t cell = base + pos * nn + static_cast<std::size_t>(w[pos] - 1);
        acc.add(cell, st);
      }
    });
  };
  const Accumulator acc = parallel_sweep(GroupKind::A, n, threads, cells, max_len, body);

  PositionValueTable table;
  table.n_ = n;
  table.cells_.resize(cells);
  for (std::size_t c = 0; c < cells; ++c) table.cells_[c] = acc.poly(c);
  return table;
}

IntPolynomial gf_quotient(GroupKind kind, int n, const IndexSet& I, const WeightSpec& spec,
                          const EnumerationLimits& limits) {
  check_rank(kind, n, limits);
  validate_query_set(I, kind, n);
  const auto weights = class_weights(spec);
  const std::uint32_t avoid = static_cast<std::uint32_t>(index_set_mask(I));
  std::vector<std::int64_t> out(static_cast<std::size_t>(max_odd_length(kind, n)) + 1, 0);
  auto take = [&](const ElementStats& st) {
    if ((st.descent_mask & avoid) != 0) return;
    const int weight = weights[static_cast<std::size_t>(st.cls)];
    if (weight == 0) return;
    out[static_cast<std::size_t>(st.odd_length)] += st.length_parity ? -weight : weight;
  };
  if (kind == GroupKind::A) {
    for_each_window_a(n, [&](std::span<const int> w) { take(element_stats_a(w)); });
  } else {
    for_each_window_b(n, [&](std::span<const int> w) { take(element_stats_b(w)); });
  }
  std::vector<BigInt> cs(out.size());
  for (std::size_t k = 0; k < out.size(); ++k) cs[k] = out[k];
  return IntPolynomial(std::move(cs));
}

IntPolynomial gf_quotient(const DescentClassTable& table, const IndexSet& I,
                          const WeightSpec& spec) {
  return table.quotient_poly(I, spec);
}

IntPolynomial gf_quotient_filtered(int n, const IndexSet& I, const WeightSpec& spec,
                                   int position, int value, const EnumerationLimits& limits) {
  check_rank(GroupKind::A, n, limits);
  validate_query_set(I, GroupKind::A, n);
  if (position < 1 || position > n || value < 1 || value > n)
    throw std::invalid_argument("gf_quotient_filtered: position or value out of range");
  const auto weights = class_weights(spec);
  const std::uint32_t avoid = static_cast<std::uint32_t>(index_set_mask(I));
  std::vector<std::int64_t> out(static_cast<std::size_t>(max_odd_length(GroupKind::A, n)) + 1,
                                0);
  for_each_window_a(n, [&](std::span<const int> w) {
    if (w[static_cast<std::size_t>(position - 1)] != value) return;
    const ElementStats st = element_stats_a(w);
    if ((st.descent_mask & avoid) != 0) return;
    const int weight = weights[static_cast<std::size_t>(st.cls)];
    if (weight == 0) return;
    out[static_cast<std::size_t>(st.odd_length)] += st.length_parity ? -weight : weight;
  });
  std::vector<BigInt> cs(out.size());
  for (std::size_t k = 0; k < out.size(); ++k) cs[k] = out[k];
  return IntPolynomial(std::move(cs));
}

}  // namespace oddlen
