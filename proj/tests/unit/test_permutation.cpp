#include <doctest.h>

#include "oddlen/permutation.hpp"
#include "test_support.hpp"

using namespace oddlen;

TEST_CASE("window parsing") {
  const PermutationA a = PermutationA::parse("4,2,1,5,3");
  CHECK(a.n() == 5);
  CHECK(a.window() == std::vector<int>{4, 2, 1, 5, 3});
  const PermutationB b = PermutationB::parse("-2,4,3,-1");
  CHECK(b.n() == 4);
  CHECK(b(1) == -2);
  CHECK(b.extended(-1) == 2);
  CHECK(b.extended(0) == 0);

  CHECK_THROWS_AS(PermutationA::parse("1,1,2"), std::invalid_argument);
  CHECK_THROWS_AS(PermutationA::parse("3,1"), std::invalid_argument);
  CHECK_THROWS_AS(PermutationA::parse("-1,2"), std::invalid_argument);
  CHECK_THROWS_AS(PermutationA::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(PermutationA::parse("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(PermutationB::parse("0,1"), std::invalid_argument);
  CHECK_THROWS_AS(PermutationB::parse("1,-1"), std::invalid_argument);
  CHECK_THROWS_AS(PermutationB::parse("3,-1"), std::invalid_argument);
}

TEST_CASE("composition and inverse") {
  const PermutationA u({2, 1, 3});
  const PermutationA v({1, 3, 2});
  CHECK(compose(u, v) == PermutationA({2, 3, 1}));
  CHECK(compose(u, PermutationA::identity(3)) == u);
  CHECK(compose(PermutationA::identity(3), u) == u);
  CHECK(compose(u, inverse(u)) == PermutationA::identity(3));
  CHECK(inverse(PermutationA({2, 3, 1})) == PermutationA({3, 1, 2}));
  CHECK(inverse(PermutationA::identity(4)) == PermutationA::identity(4));
  CHECK_THROWS_AS(compose(u, PermutationA::identity(4)), std::invalid_argument);

  CHECK(inverse(PermutationB({-1, 2})) == PermutationB({-1, 2}));
  test::windows_b(3, [](const std::vector<int>& w) {
    const PermutationB sigma(w);
    CHECK(compose(sigma, inverse(sigma)) == PermutationB::identity(3));
    CHECK(compose(inverse(sigma), sigma) == PermutationB::identity(3));
  });
  // associativity spot check
  const PermutationB x = PermutationB::generator(3, 0);
  const PermutationB y = PermutationB::generator(3, 1);
  const PermutationB z = PermutationB::generator(3, 2);
  CHECK(compose(compose(x, y), z) == compose(x, compose(y, z)));
}

TEST_CASE("length examples") {
  CHECK(length(PermutationA({4, 2, 1, 5, 3})) == 5);
  CHECK(length(PermutationA::identity(5)) == 0);
  CHECK(length(PermutationB::identity(4)) == 0);
  CHECK(length(PermutationB({1, -2})) == 3);
  CHECK(length(PermutationB({-1, 2})) == 1);
  CHECK(length(PermutationB({-2, 4, 3, -1})) == 6);
  for (int i = 0; i <= 3; ++i) CHECK(length(PermutationB::generator(4, i)) == 1);
}

TEST_CASE("length equals minimal word length over the Cayley graph") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<PermutationA> gens;
    for (int i = 1; i <= n - 1; ++i) gens.push_back(PermutationA::generator(n, i));
    const auto dist = test::bfs_word_lengths(n, gens);
    CHECK(dist.size() == group_order(GroupKind::A, n));
    for (const auto& [w, d] : dist) CHECK(length(w) == d);
  }
  for (int n = 1; n <= 4; ++n) {
    std::vector<PermutationB> gens;
    for (int i = 0; i <= n - 1; ++i) gens.push_back(PermutationB::generator(n, i));
    const auto dist = test::bfs_word_lengths(n, gens);
    CHECK(dist.size() == group_order(GroupKind::B, n));
    for (const auto& [w, d] : dist) CHECK(length(w) == d);
  }
}

TEST_CASE("descent sets") {
  CHECK(right_descents(PermutationA({4, 2, 1, 5, 3})).members() == std::vector<int>{1, 2, 4});
  CHECK(right_descents(PermutationA::identity(5)).empty());
  CHECK(right_descents(PermutationB({-1, 2})).members() == std::vector<int>{0});
  CHECK(right_descents(PermutationB({-2, 4, 3, -1})).members() == std::vector<int>{0, 2, 3});
  CHECK(left_descents(PermutationA({2, 3, 1})).members() == std::vector<int>{1});
  CHECK(left_descents(PermutationA::identity(4)).empty());
}

TEST_CASE("left descents equal right descents of the inverse, both kinds") {
  for (int n = 1; n <= 5; ++n)
    test::windows_a(n, [&](const std::vector<int>& win) {
      const PermutationA w(win);
      CHECK(left_descents(w) == right_descents(inverse(w)));
    });
  for (int n = 1; n <= 4; ++n)
    test::windows_b(n, [&](const std::vector<int>& win) {
      const PermutationB w(win);
      CHECK(left_descents(w) == right_descents(inverse(w)));
    });
}

TEST_CASE("left descents match the length drop characterization") {
  test::windows_a(4, [](const std::vector<int>& win) {
    const PermutationA w(win);
    const IndexSet ld = left_descents(w);
    for (int i = 1; i <= 3; ++i) {
      const bool drops = length(compose(PermutationA::generator(4, i), w)) < length(w);
      CHECK(ld.contains(i) == drops);
    }
  });
  test::windows_b(3, [](const std::vector<int>& win) {
    const PermutationB w(win);
    const IndexSet ld = left_descents(w);
    for (int i = 0; i <= 2; ++i) {
      const bool drops = length(compose(PermutationB::generator(3, i), w)) < length(w);
      CHECK(ld.contains(i) == drops);
    }
  });
}

TEST_CASE("involutions have equal left and right descents") {
  test::windows_a(5, [](const std::vector<int>& win) {
    const PermutationA w(win);
    if (compose(w, w) == PermutationA::identity(5))
      CHECK(left_descents(w) == right_descents(w));
  });
}

TEST_CASE("parabolic decomposition basics") {
  const PermutationA w({2, 1, 3});
  const auto [part_empty, rest_empty] =
      left_parabolic_decompose(w, IndexSet::empty_set(GroupKind::A, 3));
  CHECK(part_empty == PermutationA::identity(3));
  CHECK(rest_empty == w);

  const auto [part_full, rest_full] =
      left_parabolic_decompose(w, IndexSet::full_set(GroupKind::A, 3));
  CHECK(part_full == w);
  CHECK(rest_full == PermutationA::identity(3));

  const auto [part, rest] = left_parabolic_decompose(w, IndexSet(GroupKind::A, 3, {2}));
  CHECK(part == PermutationA::identity(3));
  CHECK(rest == w);

  CHECK_THROWS_AS(left_parabolic_decompose(w, IndexSet(GroupKind::B, 3, {0})),
                  std::invalid_argument);
}

TEST_CASE("parabolic decomposition exhaustive, type A") {
  for (int n = 1; n <= 5; ++n) {
    const std::uint32_t subsets = std::uint32_t(1) << (n - 1);
    test::windows_a(n, [&](const std::vector<int>& win) {
      const PermutationA w(win);
      for (std::uint32_t u = 0; u < subsets; ++u) {
        const IndexSet J = IndexSet::from_mask(GroupKind::A, n, u << 1);
        const auto [part, rest] = left_parabolic_decompose(w, J);
        CHECK(compose(part, rest) == w);
        CHECK(length(part) + length(rest) == length(w));
        CHECK(is_minimal_coset_rep(rest, J, Side::Left));
        CHECK(test::in_parabolic_subgroup_a(part, J));
      }
    });
  }
}

TEST_CASE("parabolic decomposition exhaustive, type B") {
  for (int n = 1; n <= 4; ++n) {
    const std::uint32_t subsets = std::uint32_t(1) << n;
    test::windows_b(n, [&](const std::vector<int>& win) {
      const PermutationB w(win);
      for (std::uint32_t u = 0; u < subsets; ++u) {
        const IndexSet J = IndexSet::from_mask(GroupKind::B, n, u);
        const auto [part, rest] = left_parabolic_decompose(w, J);
        CHECK(compose(part, rest) == w);
        CHECK(length(part) + length(rest) == length(w));
        CHECK(is_minimal_coset_rep(rest, J, Side::Left));
        CHECK(test::in_parabolic_subgroup_b(part, J));
      }
    });
  }
}

TEST_CASE("minimal coset representative predicate") {
  CHECK(is_minimal_coset_rep(PermutationA::identity(4), IndexSet(GroupKind::A, 4, {1, 3}),
                             Side::Right));
  CHECK(!is_minimal_coset_rep(PermutationA({2, 1, 3}), IndexSet(GroupKind::A, 3, {1}),
                              Side::Right));
  CHECK(is_minimal_coset_rep(PermutationA({1, 3, 2}), IndexSet(GroupKind::A, 3, {1}),
                             Side::Right));
  CHECK(!is_minimal_coset_rep(PermutationB({-1, 2}), IndexSet(GroupKind::B, 2, {0}),
                              Side::Right));
}

TEST_CASE("type B length agrees with the window formula") {
  for (int n = 1; n <= 5; ++n)
    test::windows_b(n, [&](const std::vector<int>& win) {
      const PermutationB w(win);
      int inv = 0, neg = 0, nsp = 0;
      for (std::size_t i = 0; i < win.size(); ++i) {
        if (win[i] < 0) ++neg;
        for (std::size_t j = i + 1; j < win.size(); ++j) {
          if (win[i] > win[j]) ++inv;
          if (win[i] + win[j] < 0) ++nsp;
        }
      }
      CHECK(length(w) == inv + neg + nsp);
    });
}
