#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oddlen/closed_forms.hpp"
#include "oddlen/verifier.hpp"
#include "test_support.hpp"

using namespace oddlen;

// Heavier exhaustive invariants; the per-module unit tests cover the same
// ground at smaller ranks.

TEST_CASE("table path equals direct filtered re-enumeration up to rank 7") {
  for (int n = 1; n <= 7; ++n) {
    const DescentClassTable t = build_descent_class_table(GroupKind::A, n, 2);
    for (std::uint32_t u = 0; u < (std::uint32_t(1) << (n - 1)); ++u) {
      const IndexSet I = IndexSet::from_mask(GroupKind::A, n, u << 1);
      REQUIRE(t.quotient_poly(I, WeightSpec{}) == gf_quotient(GroupKind::A, n, I, WeightSpec{}));
    }
  }
  for (int n = 1; n <= 7; ++n) {
    const DescentClassTable t = build_descent_class_table(GroupKind::B, n, 2);
    for (std::uint32_t u = 0; u < (std::uint32_t(1) << n); ++u) {
      const IndexSet J = IndexSet::from_mask(GroupKind::B, n, u);
      REQUIRE(t.quotient_poly(J, WeightSpec{}) == gf_quotient(GroupKind::B, n, J, WeightSpec{}));
    }
  }
}

TEST_CASE("sweep statistics agree with the definitional operations, rank 6") {
  test::windows_b(6, [](const std::vector<int>& win) {
    const ElementStats st = element_stats_b(win);
    const PermutationB w(win);
    REQUIRE(st.odd_length == odd_length_b(w));
    REQUIRE(st.length_parity == length(w) % 2);
    REQUIRE(st.cls == chessboard_class(w));
    REQUIRE(st.descent_mask == right_descents(w).mask());
  });
}

TEST_CASE("both odd-length definitions agree on all of S_7") {
  for (int n = 1; n <= 7; ++n)
    test::windows_a(n, [](const std::vector<int>& win) {
      const PermutationA w(win);
      REQUIRE(odd_length_a_alternating(w) == odd_length_a(w));
    });
}

TEST_CASE("odd length splits into oinv + oneg + onsp on all of B_6") {
  for (int n = 1; n <= 6; ++n)
    test::windows_b(n, [](const std::vector<int>& win) {
      const PermutationB w(win);
      REQUIRE(odd_stats_b(w).total() == odd_length_b(w));
    });
}

TEST_CASE("the signed statistic restricts to the unsigned one on all of S_6") {
  for (int n = 1; n <= 6; ++n)
    test::windows_a(n, [](const std::vector<int>& win) {
      const PermutationA a(win);
      REQUIRE(odd_length_b(PermutationB::embed(a)) == odd_length_a(a));
    });
}

TEST_CASE("quotient sums collapse onto chessboard elements up to rank 8") {
  TableCache cache(2);
  for (int n = 1; n <= 8; ++n) {
    const DescentClassTable& t = cache.descent_table(GroupKind::A, n);
    for (std::uint32_t u = 0; u < (std::uint32_t(1) << (n - 1)); ++u) {
      const IndexSet I = IndexSet::from_mask(GroupKind::A, n, u << 1);
      REQUIRE(t.quotient_poly(I, WeightSpec{}) ==
              t.quotient_poly(I, WeightSpec{Restriction::Chessboard}));
    }
  }
  for (int n = 1; n <= 6; ++n) {
    const DescentClassTable& t = cache.descent_table(GroupKind::B, n);
    for (std::uint32_t u = 0; u < (std::uint32_t(1) << n); ++u) {
      const IndexSet J = IndexSet::from_mask(GroupKind::B, n, u);
      REQUIRE(t.quotient_poly(J, WeightSpec{}) ==
              t.quotient_poly(J, WeightSpec{Restriction::Plus}));
    }
  }
}

TEST_CASE("closed forms match enumeration at mid scale") {
  TableCache cache(2);
  for (int n = 6; n <= 8; ++n) {
    const DescentClassTable& t = cache.descent_table(GroupKind::A, n);
    for (std::uint32_t u = 0; u < (std::uint32_t(1) << (n - 1)); ++u) {
      const IndexSet I = IndexSet::from_mask(GroupKind::A, n, u << 1);
      REQUIRE(t.quotient_poly(I, WeightSpec{Restriction::Plus}) ==
              closed_chessboard_plus(n, I));
      REQUIRE(t.quotient_poly(I, WeightSpec{}) == closed_sn_quotient(n, I));
    }
  }
  for (int n = 5; n <= 6; ++n) {
    const DescentClassTable& t = cache.descent_table(GroupKind::B, n);
    for (std::uint32_t u = 0; u < (std::uint32_t(1) << n); ++u) {
      const IndexSet J = IndexSet::from_mask(GroupKind::B, n, u);
      REQUIRE(t.quotient_poly(J, WeightSpec{}) == closed_conj_b(n, J));
    }
  }
}
