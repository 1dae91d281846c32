#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oddlen/closed_forms.hpp"
#include "oddlen/enumeration.hpp"

namespace oddlen {

// One entry per verified identity; enumeration order is report order.
enum class IdentityId {
  prop2_1_additivity,
  prop2_7_ascending,
  lemma2_8_chessB,
  prop2_9_fact2,
  prop2_10_zero_removal,
  lemma3_1_chessA,
  eq_chessA0,
  lemma3_2_zero,
  prop3_3_scr,
  prop3_4_scl,
  prop3_5_scrr,
  prop3_6_sclr,
  thm4_1_plus,
  thm4_1_minus,
  thm4_2_conjA,
  cor4_3_sn,
  cor4_4_full,
  prop5_1_decomp,
  prop5_2_shiftB,
  prop5_3_inflateB,
  thm5_4_conjB,
  defA_equivalence,
  compressed_iff_m_eq_mtilde,
};

const std::vector<IdentityId>& all_identities();
const char* identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(std::string_view name);

// Per-identity rank ceilings; 0 marks a kind the check does not enumerate.
struct RankCaps {
  int a = 0;
  int b = 0;
};
RankCaps default_caps(IdentityId id);

struct CheckParams {
  std::optional<int> max_n_a;  // override the default type A cap
  std::optional<int> max_n_b;  // override the default type B cap
  int threads = 1;
  // Replay hook: when set, only the instance with this exact description is
  // evaluated (the description format is what counterexamples carry).
  std::optional<std::string> only_instance;
};

struct Counterexample {
  std::string instance;
  IntPolynomial lhs;
  IntPolynomial rhs;
};

struct CheckReport {
  IdentityId id{};
  std::string params;
  bool pass = false;
  std::uint64_t instances = 0;
  std::optional<Counterexample> counterexample;  // present on identity failure
  std::optional<std::string> error;              // vacuous range, resource refusal, ...
  std::int64_t elapsed_ms = 0;
};

// Lazily built, shared sweep tables. Thread safe; each table is built once.
class TableCache {
 public:
  explicit TableCache(int threads = 1, EnumerationLimits limits = {});

  const DescentClassTable& descent_table(GroupKind kind, int n);
  const PositionValueTable& position_table(int n);

  int threads() const { return threads_; }
  const EnumerationLimits& limits() const { return limits_; }

 private:
  int threads_;
  EnumerationLimits limits_;
  std::mutex mu_;
  std::map<std::pair<int, int>, std::unique_ptr<DescentClassTable>> descent_;
  std::map<int, std::unique_ptr<PositionValueTable>> position_;
};

// Enumerates every hypothesis-satisfying instance within the caps and
// compares exactly; zero instances is reported as an error, not a pass.
CheckReport check_identity(IdentityId id, const CheckParams& params, TableCache& cache);

struct SuiteConfig {
  std::vector<IdentityId> ids;  // empty = nothing to run
  CheckParams params;
};

// One report per configured identity, in catalog order; per-check
// exceptions are captured as report errors rather than thrown.
std::vector<CheckReport> run_suite(const SuiteConfig& config, TableCache& cache);

bool all_passed(const std::vector<CheckReport>& reports);

std::string report_line(const CheckReport& report);
std::string reports_to_json(const std::vector<CheckReport>& reports);

}  // namespace oddlen
