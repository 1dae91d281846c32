#include "oddlen/verifier.hpp"

#include <array>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "oddlen/permutation.hpp"

namespace oddlen {

namespace {

struct IdentityMeta {
  IdentityId id;
  const char* name;
  RankCaps caps;
};

constexpr std::array<IdentityMeta, 23> kIdentities{{
    {IdentityId::prop2_1_additivity, "prop2_1_additivity", {9, 7}},
    {IdentityId::prop2_7_ascending, "prop2_7_ascending", {0, 7}},
    {IdentityId::lemma2_8_chessB, "lemma2_8_chessB", {0, 7}},
    {IdentityId::prop2_9_fact2, "prop2_9_fact2", {0, 7}},
    {IdentityId::prop2_10_zero_removal, "prop2_10_zero_removal", {0, 7}},
    {IdentityId::lemma3_1_chessA, "lemma3_1_chessA", {9, 0}},
    {IdentityId::eq_chessA0, "eq_chessA0", {9, 0}},
    {IdentityId::lemma3_2_zero, "lemma3_2_zero", {9, 0}},
    {IdentityId::prop3_3_scr, "prop3_3_scr", {9, 0}},
    {IdentityId::prop3_4_scl, "prop3_4_scl", {9, 0}},
    {IdentityId::prop3_5_scrr, "prop3_5_scrr", {9, 0}},
    {IdentityId::prop3_6_sclr, "prop3_6_sclr", {9, 0}},
    {IdentityId::thm4_1_plus, "thm4_1_plus", {10, 0}},
    {IdentityId::thm4_1_minus, "thm4_1_minus", {10, 0}},
    {IdentityId::thm4_2_conjA, "thm4_2_conjA", {10, 0}},
    {IdentityId::cor4_3_sn, "cor4_3_sn", {10, 0}},
    {IdentityId::cor4_4_full, "cor4_4_full", {10, 0}},
    {IdentityId::prop5_1_decomp, "prop5_1_decomp", {0, 6}},
    {IdentityId::prop5_2_shiftB, "prop5_2_shiftB", {0, 7}},
    {IdentityId::prop5_3_inflateB, "prop5_3_inflateB", {0, 7}},
    {IdentityId::thm5_4_conjB, "thm5_4_conjB", {0, 8}},
    {IdentityId::defA_equivalence, "defA_equivalence", {7, 0}},
    {IdentityId::compressed_iff_m_eq_mtilde, "compressed_iff_m_eq_mtilde", {9, 0}},
}};

const IdentityMeta& meta(IdentityId id) { return kIdentities[static_cast<std::size_t>(id)]; }

std::string set_desc(const IndexSet& s) { return "{" + s.str() + "}"; }

std::string window_desc(std::span<const int> w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out + "]";
}

// Serial instance loop support: filter matching, counting, exact comparison
// of two-or-more polynomial routes, first-failure capture.
class Runner {
 public:
  explicit Runner(const CheckParams& params)
      : filter_(params.only_instance ? &*params.only_instance : nullptr) {}

  bool stopped() const { return failure_.has_value(); }
  std::uint64_t instances() const { return instances_; }
  std::optional<Counterexample> take_failure() { return std::move(failure_); }

  template <typename DescFn, typename EvalFn>
  void instance(DescFn&& desc_fn, EvalFn&& eval_fn) {
    if (stopped()) return;
    if (filter_ && *filter_ != desc_fn()) return;
    ++instances_;
    const std::vector<IntPolynomial> values = eval_fn();
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (values[i] != values[0]) {
        failure_ = Counterexample{desc_fn(), values[0], values[i]};
        return;
      }
    }
  }

  // Integer-valued structural claims, encoded as constant polynomials.
  template <typename DescFn>
  void instance_ints(DescFn&& desc_fn, long long lhs, long long rhs) {
    instance(std::forward<DescFn>(desc_fn), [&] {
      return std::vector<IntPolynomial>{IntPolynomial::constant(lhs),
                                        IntPolynomial::constant(rhs)};
    });
  }

 private:
  const std::string* filter_;
  std::uint64_t instances_ = 0;
  std::optional<Counterexample> failure_;
};

struct CheckContext {
  TableCache& cache;
  const CheckParams& params;
  int cap_a = 0;
  int cap_b = 0;
  Runner runner;
  std::string range_desc;

  CheckContext(TableCache& c, const CheckParams& p, RankCaps caps)
      : cache(c), params(p), runner(p) {
    cap_a = caps.a > 0 ? p.max_n_a.value_or(caps.a) : 0;
    cap_b = caps.b > 0 ? p.max_n_b.value_or(caps.b) : 0;
    std::ostringstream os;
    if (cap_a > 0) os << "A: n<=" << cap_a;
    if (cap_a > 0 && cap_b > 0) os << ", ";
    if (cap_b > 0) os << "B: n<=" << cap_b;
    os << ", exhaustive";
    range_desc = os.str();
  }

  IntPolynomial gf(GroupKind kind, int n, const IndexSet& I, Restriction r,
                   bool chi = false) {
    return cache.descent_table(kind, n).quotient_poly(I, WeightSpec{r, chi});
  }
};

template <typename Fn>
void for_each_subset(GroupKind kind, int n, Fn&& fn) {
  if (kind == GroupKind::A) {
    const std::uint32_t count = std::uint32_t(1) << (n - 1);
    for (std::uint32_t u = 0; u < count; ++u) fn(IndexSet::from_mask(kind, n, u << 1));
  } else {
    const std::uint32_t count = std::uint32_t(1) << n;
    for (std::uint32_t u = 0; u < count; ++u) fn(IndexSet::from_mask(kind, n, u));
  }
}

bool complement_all_even(const IndexSet& set, int from) {
  for (int i = from; i <= set.max_index(); ++i)
    if (!set.contains(i) && i % 2 != 0) return false;
  return true;
}

// ---- per-identity checks ------------------------------------------------

void check_prop2_7(CheckContext& ctx) {
  for (int n = 1; n <= ctx.cap_b && !ctx.runner.stopped(); ++n) {
    std::vector<int> asc;
    for (int i = 1; i <= n - 1; ++i) asc.push_back(i);
    const IndexSet J(GroupKind::B, n, std::move(asc));
    ctx.runner.instance([&] { return "n=" + std::to_string(n); },
                        [&] {
                          return std::vector<IntPolynomial>{
                              ctx.gf(GroupKind::B, n, J, Restriction::All),
                              closed_b_ascending(n)};
                        });
  }
}

void check_lemma2_8(CheckContext& ctx) {
  for (int n = 1; n <= ctx.cap_b && !ctx.runner.stopped(); ++n) {
    for_each_subset(GroupKind::B, n, [&](const IndexSet& J) {
      ctx.runner.instance(
          [&] { return "n=" + std::to_string(n) + " J=" + set_desc(J); },
          [&] {
            return std::vector<IntPolynomial>{
                ctx.gf(GroupKind::B, n, J, Restriction::All),
                ctx.gf(GroupKind::B, n, J, Restriction::Plus)};
          });
    });
  }
}

void check_prop2_9(CheckContext& ctx) {
  for (int n = 1; n <= ctx.cap_b && !ctx.runner.stopped(); ++n) {
    // J ranges over subsets of [1, n-1]; the hypothesis asks n odd, or every
    // omitted index in [1, n-1] even.
    for_each_subset(GroupKind::A, n, [&](const IndexSet& JA) {
      if (n % 2 == 0 && !complement_all_even(JA, 1)) return;
      const IndexSet JB(GroupKind::B, n, JA.members());
      const IndexSet asc = [&] {
        std::vector<int> m;
        for (int i = 1; i <= n - 1; ++i) m.push_back(i);
        return IndexSet(GroupKind::B, n, std::move(m));
      }();
      ctx.runner.instance(
          [&] { return "n=" + std::to_string(n) + " J=" + set_desc(JB); },
          [&] {
            return std::vector<IntPolynomial>{
                ctx.gf(GroupKind::B, n, JB, Restriction::All),
                ctx.gf(GroupKind::B, n, asc, Restriction::All) *
                    ctx.gf(GroupKind::A, n, JA, Restriction::All)};
          });
    });
  }
}

void check_prop2_10(CheckContext& ctx) {
  for (int n = 2; n <= ctx.cap_b && !ctx.runner.stopped(); ++n) {
    if (n % 2 != 0) continue;
    for_each_subset(GroupKind::B, n, [&](const IndexSet& J) {
      if (!complement_all_even(J, 0)) return;
      int i = 0;
      while (i <= n - 1 && J.contains(i)) ++i;
      ctx.runner.instance(
          [&] { return "n=" + std::to_string(n) + " J=" + set_desc(J); },
          [&] {
            IntPolynomial factor = IntPolynomial::one();
            if (i >= 1) {
              std::vector<int> asc;
              for (int t = 1; t <= i - 1; ++t) asc.push_back(t);
              factor = ctx.gf(GroupKind::B, i, IndexSet(GroupKind::B, i, std::move(asc)),
                              Restriction::All);
            }
            return std::vector<IntPolynomial>{
                ctx.gf(GroupKind::B, n, J.without(0), Restriction::All),
                ctx.gf(GroupKind::B, n, J, Restriction::All) * factor};
          });
    });
  }
}

void check_lemma3_1(CheckContext& ctx) {
  for (int n = 1; n <= ctx.cap_a && !ctx.runner.stopped(); ++n) {
    for_each_subset(GroupKind::A, n, [&](const IndexSet& I) {
      if (n % 2 == 0 && !complement_all_even(I, 1)) return;
      ctx.runner.instance(
          [&] { return "n=" + std::to_string(n) + " I=" + set_desc(I); },
          [&] {
            return std::vector<IntPolynomial>{
                ctx.gf(GroupKind::A, n, I, Restriction::All),
                ctx.gf(GroupKind::A, n, I, Restriction::Plus)};
          });
    });
  }
}

void check_chessA0(CheckContext& ctx) {
  for (int n = 1; n <= ctx.cap_a && !ctx.runner.stopped(); ++n) {
    for_each_subset(GroupKind::A, n, [&](const IndexSet& I) {
      ctx.runner.instance(
          [&] { return "n=" + std::to_string(n) + " I=" + set_desc(I); },
          [&] {
            return std::vector<IntPolynomial>{
                ctx.gf(GroupKind::A, n, I, Restriction::All),
                ctx.gf(GroupKind::A, n, I, Restriction::Chessboard)};
          });
    });
  }
}

void check_lemma3_2(CheckContext& ctx) {
  for (int n = 3; n <= ctx.cap_a && !ctx.runner.stopped(); ++n) {
    const PositionValueTable& table = ctx.cache.position_table(n);
    for (int a = 2; a <= n - 1 && !ctx.runner.stopped(); ++a) {
      for_each_subset(GroupKind::A, n, [&](const IndexSet& I) {
        for (int t = std::max(1, a - 2); t <= std::min(n - 1, a + 1); ++t)
          if (I.contains(t)) return;
        ctx.runner.instance(
            [&] {
              return "n=" + std::to_string(n) + " I=" + set_desc(I) +
                     " a=" + std::to_string(a);
            },
            [&] {
              return std::vector<IntPolynomial>{table.quotient_poly(I, a, n),
                                                table.quotient_poly(I, a, 1),
                                                IntPolynomial::zero()};
            });
      });
    }
  }
}

// Odd-size component [lo,hi] with a free slot to the indicated side.
struct ShiftInstance {
  IndexSet shifted;
  IndexSet fattened;
  Interval component;
};

template <typename Fn>
void for_each_shift_instance(const IndexSet& I, ShiftDirection dir, Fn&& fn) {
  for (const Interval& comp : connected_components(I).intervals) {
    if (comp.size() % 2 == 0) continue;
    if (I.kind() == GroupKind::B && comp.lo == 0) continue;
    if (dir == ShiftDirection::Right) {
      if (comp.hi + 1 > I.max_index() || I.contains(comp.hi + 2)) continue;
      fn(ShiftInstance{shifted_set(I, comp, dir), I.with(comp.hi + 1), comp});
    } else {
      if (comp.lo - 1 < 1 || I.contains(comp.lo - 2)) continue;
      fn(ShiftInstance{shifted_set(I, comp, dir), I.with(comp.lo - 1), comp});
    }
  }
}

void check_shift(CheckContext& ctx, GroupKind kind, ShiftDirection dir) {
  const int cap = kind == GroupKind::A ? ctx.cap_a : ctx.cap_b;
  for (int n = 1; n <= cap && !ctx.runner.stopped(); ++n) {
    for_each_subset(kind, n, [&](const IndexSet& I) {
      for_each_shift_instance(I, dir, [&](const ShiftInstance& inst) {
        ctx.runner.instance(
            [&] {
              return "n=" + std::to_string(n) + " I=" + set_desc(I) + " comp=[" +
                     std::to_string(inst.component.lo) + "," +
                     std::to_string(inst.component.hi) + "]";
            },
            [&] {
              return std::vector<IntPolynomial>{
                  ctx.gf(kind, n, I, Restriction::All),
                  ctx.gf(kind, n, inst.fattened, Restriction::All),
                  ctx.gf(kind, n, inst.shifted, Restriction::All)};
            });
      });
    });
  }
}

void check_shift_restricted(CheckContext& ctx, ShiftDirection dir) {
  for (int n = 1; n <= ctx.cap_a && !ctx.runner.stopped(); ++n) {
    const PositionValueTable* table = nullptr;
    for_each_subset(GroupKind::A, n, [&](const IndexSet& I) {
      for_each_shift_instance(I, dir, [&](const ShiftInstance& inst) {
        // excluded zone around the moving component, either side
        const int zone_lo = dir == ShiftDirection::Right ? inst.component.lo - 1
                                                         : inst.component.lo - 2;
        const int zone_hi = dir == ShiftDirection::Right ? inst.component.hi + 2
                                                         : inst.component.hi + 1;
        for (int a = 1; a <= n; ++a) {
          if (ctx.runner.stopped()) return;
          if (I.contains(a) || (a >= zone_lo && a <= zone_hi)) continue;
          if (table == nullptr) table = &ctx.cache.position_table(n);
          ctx.runner.instance(
              [&] {
                return "n=" + std::to_string(n) + " I=" + set_desc(I) + " comp=[" +
                       std::to_string(inst.component.lo) + "," +
                       std::to_string(inst.component.hi) + "] a=" + std::to_string(a);
              },
              [&] {
                return std::vector<IntPolynomial>{
                    table->quotient_poly(I, a, n),
                    table->quotient_poly(inst.fattened, a, n),
                    table->quotient_poly(inst.shifted, a, n)};
              });
        }
      });
    });
  }
}

void check_thm4_1_plus(CheckContext& ctx) {
  for (int n = 1; n <= ctx.cap_a && !ctx.runner.stopped(); ++n) {
    for_each_subset(GroupKind::A, n, [&](const IndexSet& I) {
      ctx.runner.instance(
          [&] { return "n=" + std::to_string(n) + " I=" + set_desc(I); },
          [&] {
            return std::vector<IntPolynomial>{
                ctx.gf(GroupKind::A, n, I, Restriction::Plus),
                closed_chessboard_plus(n, I)};
          });
    });
  }
}

void check_thm4_1_minus(CheckContext& ctx) {
  for (int n = 2; n <= ctx.cap_a && !ctx.runner.stopped(); ++n) {
    if (n % 2 != 0) continue;
    for_each_subset(GroupKind::A, n, [&](const IndexSet& I) {
      ctx.runner.instance(
          [&] { return "n=" + std::to_string(n) + " I=" + set_desc(I); },
          [&] {
            return std::vector<IntPolynomial>{
                ctx.gf(GroupKind::A, n, I, Restriction::Minus),
                closed_chessboard_minus(n, I)};
          });
    });
  }
}

void check_thm4_2(CheckContext& ctx) {
  for (int n = 1; n <= ctx.cap_a && !ctx.runner.stopped(); ++n) {
    for_each_subset(GroupKind::A, n, [&](const IndexSet& I) {
      ctx.runner.instance(
          [&] { return "n=" + std::to_string(n) + " I=" + set_desc(I); },
          [&] {
            return std::vector<IntPolynomial>{
                ctx.gf(GroupKind::A, n, I, Restriction::Chessboard, true),
                closed_conj_a(n, I)};
          });
    });
  }
}

void check_cor4_3(CheckContext& ctx) {
  for (int n = 1; n <= ctx.cap_a && !ctx.runner.stopped(); ++n) {
    for_each_subset(GroupKind::A, n, [&](const IndexSet& I) {
      ctx.runner.instance(
          [&] { return "n=" + std::to_string(n) + " I=" + set_desc(I); },
          [&] {
            return std::vector<IntPolynomial>{
                ctx.gf(GroupKind::A, n, I, Restriction::All),
                closed_sn_quotient(n, I)};
          });
    });
  }
}

void check_cor4_4(CheckContext& ctx) {
  for (int n = 1; n <= ctx.cap_a && !ctx.runner.stopped(); ++n) {
    ctx.runner.instance(
        [&] { return "n=" + std::to_string(n); },
        [&] {
          return std::vector<IntPolynomial>{
              ctx.gf(GroupKind::A, n, IndexSet::empty_set(GroupKind::A, n),
                     Restriction::All),
              closed_sn_full(n)};
        });
  }
}

void check_prop5_1(CheckContext& ctx) {
  for (int n = 1; n <= ctx.cap_b && !ctx.runner.stopped(); ++n) {
    for_each_window_b(n, [&](std::span<const int> w) {
      if (ctx.runner.stopped()) return;
      const PermutationB sigma{std::vector<int>(w.begin(), w.end())};
      ctx.runner.instance_ints(
          [&] { return "n=" + std::to_string(n) + " w=" + window_desc(w); },
          odd_length_b(sigma), odd_stats_b(sigma).total());
    });
  }
}

void check_inflateB(CheckContext& ctx) {
  for (int n = 1; n <= ctx.cap_b && !ctx.runner.stopped(); ++n) {
    for_each_subset(GroupKind::B, n, [&](const IndexSet& J) {
      for (int a = 0; a <= n - 1; ++a) {
        if (ctx.runner.stopped()) return;
        if (J.contains(a) || (a + 1 <= n - 1 && J.contains(a + 1))) continue;
        bool prefix = true;
        for (int t = 0; t < a; ++t)
          if (!J.contains(t)) {
            prefix = false;
            break;
          }
        if (!prefix) continue;
        ctx.runner.instance(
            [&] {
              return "n=" + std::to_string(n) + " J=" + set_desc(J) +
                     " a=" + std::to_string(a);
            },
            [&] {
              return std::vector<IntPolynomial>{
                  ctx.gf(GroupKind::B, n, J, Restriction::All),
                  IntPolynomial::one_minus_power(a + 1) *
                      ctx.gf(GroupKind::B, n, J.with(a), Restriction::All)};
            });
      }
    });
  }
}

void check_thm5_4(CheckContext& ctx) {
  for (int n = 1; n <= ctx.cap_b && !ctx.runner.stopped(); ++n) {
    for_each_subset(GroupKind::B, n, [&](const IndexSet& J) {
      ctx.runner.instance(
          [&] { return "n=" + std::to_string(n) + " J=" + set_desc(J); },
          [&] {
            return std::vector<IntPolynomial>{
                ctx.gf(GroupKind::B, n, J, Restriction::All), closed_conj_b(n, J)};
          });
    });
  }
}

void check_defA(CheckContext& ctx) {
  for (int n = 1; n <= ctx.cap_a && !ctx.runner.stopped(); ++n) {
    for_each_window_a(n, [&](std::span<const int> w) {
      if (ctx.runner.stopped()) return;
      const PermutationA sigma{std::vector<int>(w.begin(), w.end())};
      ctx.runner.instance_ints(
          [&] { return "n=" + std::to_string(n) + " w=" + window_desc(w); },
          odd_length_a(sigma), odd_length_a_alternating(sigma));
    });
  }
}

void check_compressed_iff(CheckContext& ctx) {
  for (int n = 2; n <= ctx.cap_a && !ctx.runner.stopped(); ++n) {
    if (n % 2 != 0) continue;
    const int m = n / 2;
    for_each_subset(GroupKind::A, n, [&](const IndexSet& I) {
      ctx.runner.instance_ints(
          [&] { return "n=" + std::to_string(n) + " I=" + set_desc(I); },
          m_tilde(I) == m ? 1 : 0,
          (is_compressed(I) && I.contains(n - 1)) ? 1 : 0);
    });
  }
}

// ---- parabolic decomposition, fused fast path ----------------------------
//
// For every element and every J the greedy strip runs on raw windows with a
// maintained value->position map; lengths are recomputed from scratch and
// the recomposition is checked, so the claim is not assumed anywhere.

int inversions(const int* w, int n) {
  int inv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

int length_b_window(const int* w, int n) {
  int inv = 0, neg = 0, nsp = 0;
  for (int i = 0; i < n; ++i) {
    if (w[i] < 0) ++neg;
    for (int j = i + 1; j < n; ++j) {
      if (w[i] > w[j]) ++inv;
      if (w[i] + w[j] < 0) ++nsp;
    }
  }
  return inv + neg + nsp;
}

struct SweepOutcome {
  std::uint64_t instances = 0;
  int fail_partition = -1;
  std::optional<Counterexample> failure;
};

void merge_outcomes(SweepOutcome& into, const SweepOutcome& from) {
  into.instances += from.instances;
  if (from.failure &&
      (!into.failure || from.fail_partition < into.fail_partition)) {
    into.failure = from.failure;
    into.fail_partition = from.fail_partition;
  }
}

template <typename Body>
SweepOutcome parallel_partition_sweep(GroupKind kind, int n, int threads, Body body) {
  const int parts = partition_count(kind, n);
  threads = std::clamp(threads, 1, parts);
  std::vector<SweepOutcome> outs(static_cast<std::size_t>(threads));
  if (threads == 1) {
    for (int p = 0; p < parts; ++p) body(p, outs[0]);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back(
          [&, t] { for (int p = t; p < parts; p += threads) body(p, outs[static_cast<std::size_t>(t)]); });
    for (auto& th : pool) th.join();
  }
  SweepOutcome result;
  for (const auto& o : outs) merge_outcomes(result, o);
  return result;
}

std::string additivity_desc(GroupKind kind, int n, std::uint32_t jmask,
                            std::span<const int> w) {
  std::string js;
  for (int i = 0; i < n; ++i)
    if (jmask >> i & 1u) {
      if (!js.empty()) js += ',';
      js += std::to_string(i);
    }
  return std::string(1, kind_letter(kind)) + " n=" + std::to_string(n) + " J={" + js +
         "} w=" + window_desc(w);
}

void additivity_sweep_a(int n, int threads, const CheckParams& params, SweepOutcome& total) {
  const std::string* filter = params.only_instance ? &*params.only_instance : nullptr;
  const std::uint32_t jcount = std::uint32_t(1) << (n - 1);
  auto body = [&](int part, SweepOutcome& out) {
    std::vector<int> buf;
    int pos0[16], vw[16], vpos[16], uw[16];
    for_each_window_a_partition(n, part, buf, [&](std::span<const int> w) {
      if (out.failure) return;
      for (int i = 0; i < n; ++i) pos0[w[i]] = i;
      const int lw = inversions(w.data(), n);
      for (std::uint32_t u = 0; u < jcount; ++u) {
        const std::uint32_t jmask = u << 1;
        if (filter && *filter != additivity_desc(GroupKind::A, n, jmask, w)) continue;
        ++out.instances;
        for (int i = 0; i < n; ++i) {
          vw[i] = w[i];
          vpos[w[i]] = i;
          uw[i] = i + 1;
        }
        for (;;) {
          int j = 0;
          for (std::uint32_t mm = jmask; mm; mm &= mm - 1) {
            const int cand = std::countr_zero(mm);
            if (vpos[cand] > vpos[cand + 1]) {
              j = cand;
              break;
            }
          }
          if (j == 0) break;
          vw[vpos[j]] = j + 1;
          vw[vpos[j + 1]] = j;
          std::swap(vpos[j], vpos[j + 1]);
          std::swap(uw[j - 1], uw[j]);
        }
        const int lu = inversions(uw, n);
        const int lv = inversions(vw, n);
        bool ok = lw == lu + lv;
        for (int i = 0; ok && i < n; ++i) ok = uw[vw[i] - 1] == w[i];
        for (std::uint32_t mm = jmask; ok && mm; mm &= mm - 1) {
          const int cand = std::countr_zero(mm);
          ok = vpos[cand] < vpos[cand + 1];
        }
        if (!ok) {
          out.failure = Counterexample{additivity_desc(GroupKind::A, n, jmask, w),
                                       IntPolynomial::constant(lw),
                                       IntPolynomial::constant(lu + lv)};
          out.fail_partition = part;
          return;
        }
      }
    });
  };
  merge_outcomes(total, parallel_partition_sweep(GroupKind::A, n, threads, body));
}

void additivity_sweep_b(int n, int threads, const CheckParams& params, SweepOutcome& total) {
  const std::string* filter = params.only_instance ? &*params.only_instance : nullptr;
  const std::uint32_t jcount = std::uint32_t(1) << n;
  auto body = [&](int part, SweepOutcome& out) {
    std::vector<int> buf;
    int vw[16], vpos[16], uw[16];  // vpos[v]: signed 1-based position of value v
    for_each_window_b_partition(n, part, buf, [&](std::span<const int> w) {
      if (out.failure) return;
      const int lw = length_b_window(w.data(), n);
      for (std::uint32_t jmask = 0; jmask < jcount; ++jmask) {
        if (filter && *filter != additivity_desc(GroupKind::B, n, jmask, w)) continue;
        ++out.instances;
        for (int i = 0; i < n; ++i) {
          vw[i] = w[i];
          vpos[std::abs(w[i])] = w[i] > 0 ? i + 1 : -(i + 1);
          uw[i] = i + 1;
        }
        for (;;) {
          int j = -1;
          for (std::uint32_t mm = jmask; mm; mm &= mm - 1) {
            const int cand = std::countr_zero(mm);
            const bool descent =
                cand == 0 ? vpos[1] < 0 : vpos[cand] > vpos[cand + 1];
            if (descent) {
              j = cand;
              break;
            }
          }
          if (j < 0) break;
          if (j == 0) {
            const int p = std::abs(vpos[1]) - 1;
            vw[p] = -vw[p];
            vpos[1] = -vpos[1];
            uw[0] = -uw[0];
          } else {
            const int p1 = std::abs(vpos[j]) - 1;
            const int p2 = std::abs(vpos[j + 1]) - 1;
            vw[p1] = vw[p1] > 0 ? j + 1 : -(j + 1);
            vw[p2] = vw[p2] > 0 ? j : -j;
            std::swap(vpos[j], vpos[j + 1]);
            std::swap(uw[j - 1], uw[j]);
          }
        }
        const int lu = length_b_window(uw, n);
        const int lv = length_b_window(vw, n);
        bool ok = lw == lu + lv;
        for (int i = 0; ok && i < n; ++i) {
          const int x = vw[i];
          const int composed = x > 0 ? uw[x - 1] : -uw[-x - 1];
          ok = composed == w[i];
        }
        for (std::uint32_t mm = jmask; ok && mm; mm &= mm - 1) {
          const int cand = std::countr_zero(mm);
          ok = cand == 0 ? vpos[1] > 0 : vpos[cand] < vpos[cand + 1];
        }
        if (!ok) {
          out.failure = Counterexample{additivity_desc(GroupKind::B, n, jmask, w),
                                       IntPolynomial::constant(lw),
                                       IntPolynomial::constant(lu + lv)};
          out.fail_partition = part;
          return;
        }
      }
    });
  };
  merge_outcomes(total, parallel_partition_sweep(GroupKind::B, n, threads, body));
}

CheckReport check_additivity(CheckContext& ctx) {
  SweepOutcome total;
  for (int n = 1; n <= ctx.cap_a && !total.failure; ++n)
    additivity_sweep_a(n, ctx.params.threads, ctx.params, total);
  for (int n = 1; n <= ctx.cap_b && !total.failure; ++n)
    additivity_sweep_b(n, ctx.params.threads, ctx.params, total);
  CheckReport report;
  report.instances = total.instances;
  report.pass = !total.failure && total.instances > 0;
  report.counterexample = std::move(total.failure);
  return report;
}

}  // namespace

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> v;
    for (const auto& m : kIdentities) v.push_back(m.id);
    return v;
  }();
  return ids;
}

const char* identity_name(IdentityId id) { return meta(id).name; }

std::optional<IdentityId> identity_from_name(std::string_view name) {
  for (const auto& m : kIdentities)
    if (name == m.name) return m.id;
  return std::nullopt;
}

RankCaps default_caps(IdentityId id) { return meta(id).caps; }

TableCache::TableCache(int threads, EnumerationLimits limits)
    : threads_(threads), limits_(limits) {}

const DescentClassTable& TableCache::descent_table(GroupKind kind, int n) {
  std::lock_guard lock(mu_);
  const auto key = std::make_pair(static_cast<int>(kind), n);
  auto it = descent_.find(key);
  if (it == descent_.end()) {
    auto table = std::make_unique<DescentClassTable>(
        build_descent_class_table(kind, n, threads_, limits_));
    it = descent_.emplace(key, std::move(table)).first;
  }
  return *it->second;
}

const PositionValueTable& TableCache::position_table(int n) {
  std::lock_guard lock(mu_);
  auto it = position_.find(n);
  if (it == position_.end()) {
    auto table =
        std::make_unique<PositionValueTable>(build_position_value_table(n, threads_, limits_));
    it = position_.emplace(n, std::move(table)).first;
  }
  return *it->second;
}

CheckReport check_identity(IdentityId id, const CheckParams& params, TableCache& cache) {
  const auto start = std::chrono::steady_clock::now();
  CheckContext ctx(cache, params, default_caps(id));

  CheckReport report;
  switch (id) {
    case IdentityId::prop2_1_additivity:
      report = check_additivity(ctx);
      break;
    case IdentityId::prop2_7_ascending:
      check_prop2_7(ctx);
      break;
    case IdentityId::lemma2_8_chessB:
      check_lemma2_8(ctx);
      break;
    case IdentityId::prop2_9_fact2:
      check_prop2_9(ctx);
      break;
    case IdentityId::prop2_10_zero_removal:
      check_prop2_10(ctx);
      break;
    case IdentityId::lemma3_1_chessA:
      check_lemma3_1(ctx);
      break;
    case IdentityId::eq_chessA0:
      check_chessA0(ctx);
      break;
    case IdentityId::lemma3_2_zero:
      check_lemma3_2(ctx);
      break;
    case IdentityId::prop3_3_scr:
      check_shift(ctx, GroupKind::A, ShiftDirection::Right);
      break;
    case IdentityId::prop3_4_scl:
      check_shift(ctx, GroupKind::A, ShiftDirection::Left);
      break;
    case IdentityId::prop3_5_scrr:
      check_shift_restricted(ctx, ShiftDirection::Right);
      break;
    case IdentityId::prop3_6_sclr:
      check_shift_restricted(ctx, ShiftDirection::Left);
      break;
    case IdentityId::thm4_1_plus:
      check_thm4_1_plus(ctx);
      break;
    case IdentityId::thm4_1_minus:
      check_thm4_1_minus(ctx);
      break;
    case IdentityId::thm4_2_conjA:
      check_thm4_2(ctx);
      break;
    case IdentityId::cor4_3_sn:
      check_cor4_3(ctx);
      break;
    case IdentityId::cor4_4_full:
      check_cor4_4(ctx);
      break;
    case IdentityId::prop5_1_decomp:
      check_prop5_1(ctx);
      break;
    case IdentityId::prop5_2_shiftB:
      check_shift(ctx, GroupKind::B, ShiftDirection::Right);
      break;
    case IdentityId::prop5_3_inflateB:
      check_inflateB(ctx);
      break;
    case IdentityId::thm5_4_conjB:
      check_thm5_4(ctx);
      break;
    case IdentityId::defA_equivalence:
      check_defA(ctx);
      break;
    case IdentityId::compressed_iff_m_eq_mtilde:
      check_compressed_iff(ctx);
      break;
  }

  if (id != IdentityId::prop2_1_additivity) {
    report.instances = ctx.runner.instances();
    report.counterexample = ctx.runner.take_failure();
    report.pass = !report.counterexample && report.instances > 0;
  }
  report.id = id;
  report.params = ctx.range_desc;
  if (report.instances == 0 && !report.counterexample) {
    report.pass = false;
    report.error = "no hypothesis-satisfying instances in the configured range";
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

std::vector<CheckReport> run_suite(const SuiteConfig& config, TableCache& cache) {
  std::vector<IdentityId> ids = config.ids;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<CheckReport> reports;
  reports.reserve(ids.size());
  for (IdentityId id : ids) {
    try {
      reports.push_back(check_identity(id, config.params, cache));
    } catch (const std::exception& e) {
      CheckReport r;
      r.id = id;
      r.pass = false;
      r.error = e.what();
      reports.push_back(std::move(r));
    }
  }
  return reports;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return !reports.empty();
}

std::string report_line(const CheckReport& report) {
  std::ostringstream os;
  os << identity_name(report.id) << ": " << (report.pass ? "pass" : "FAIL") << " ("
     << report.instances << " instances, " << report.params << ", " << report.elapsed_ms
     << " ms)";
  if (report.error) os << " error: " << *report.error;
  if (report.counterexample) {
    os << "\n  counterexample " << report.counterexample->instance << ": "
       << report.counterexample->lhs.str() << " != " << report.counterexample->rhs.str();
  }
  return os.str();
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json j;
    j["identity"] = identity_name(r.id);
    j["params"] = r.params;
    j["status"] = r.pass ? "pass" : "fail";
    j["instances"] = r.instances;
    j["elapsed_ms"] = r.elapsed_ms;
    if (r.counterexample) {
      j["counterexample"] = {
          {"instance", r.counterexample->instance},
          {"lhs", nlohmann::json::parse(to_json_string(r.counterexample->lhs))},
          {"rhs", nlohmann::json::parse(to_json_string(r.counterexample->rhs))}};
    }
    if (r.error) j["error"] = *r.error;
    arr.push_back(std::move(j));
  }
  return arr.dump();
}

}  // namespace oddlen
