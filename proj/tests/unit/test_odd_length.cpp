#include <doctest.h>

#include "oddlen/odd_length.hpp"
#include "test_support.hpp"

using namespace oddlen;

TEST_CASE("odd length, type A") {
  CHECK(odd_length_a(PermutationA({4, 2, 1, 5, 3})) == 3);
  CHECK(odd_length_a(PermutationA::identity(6)) == 0);
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> rev(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rev[static_cast<std::size_t>(i)] = n - i;
    CHECK(odd_length_a(PermutationA(rev)) == ((n + 1) / 2) * (n / 2));
  }
}

TEST_CASE("alternating quotient-sum definition agrees, small ranks") {
  CHECK(odd_length_a_alternating(PermutationA({4, 2, 1, 5, 3})) == 3);
  CHECK(odd_length_a_alternating(PermutationA::identity(5)) == 0);
  CHECK(odd_length_a_alternating(PermutationA({2, 4, 1, 3})) == 1);
  for (int n = 1; n <= 5; ++n)
    test::windows_a(n, [](const std::vector<int>& win) {
      const PermutationA w(win);
      CHECK(odd_length_a_alternating(w) == odd_length_a(w));
    });
}

TEST_CASE("odd length, type B") {
  CHECK(odd_length_b(PermutationB({-2, 4, 3, -1})) == 4);
  CHECK(odd_length_b(PermutationB::identity(5)) == 0);
  for (int n = 1; n <= 5; ++n)
    for (int i = 0; i <= n - 1; ++i) CHECK(odd_length_b(PermutationB::generator(n, i)) == 1);
}

TEST_CASE("odd statistics decomposition") {
  CHECK(odd_stats_b(PermutationB({-2, 4, 3, -1})) == OddStatsB{2, 1, 1});
  CHECK(odd_stats_b(PermutationB::identity(4)) == OddStatsB{0, 0, 0});
  CHECK(odd_stats_b(PermutationB({1, -2})) == OddStatsB{1, 0, 1});
  CHECK(odd_length_b(PermutationB({1, -2})) == 2);
  for (int n = 1; n <= 4; ++n)
    test::windows_b(n, [](const std::vector<int>& win) {
      const PermutationB w(win);
      CHECK(odd_stats_b(w).total() == odd_length_b(w));
    });
}

TEST_CASE("type A statistic is the restriction of the type B one") {
  for (int n = 1; n <= 5; ++n)
    test::windows_a(n, [](const std::vector<int>& win) {
      const PermutationA a(win);
      CHECK(odd_length_b(PermutationB::embed(a)) == odd_length_a(a));
    });
}

TEST_CASE("chessboard classes") {
  CHECK(chessboard_class(PermutationA::identity(4)) == ChessboardClass::Plus);
  CHECK(chessboard_class(PermutationA({2, 1})) == ChessboardClass::Minus);
  CHECK(chessboard_class(PermutationA({2, 1, 3})) == ChessboardClass::NotChessboard);
  CHECK(chessboard_class(PermutationB({-1})) == ChessboardClass::Plus);
  CHECK(chessboard_class(PermutationB({-2, 1})) == ChessboardClass::Minus);
  CHECK(chessboard_class(PermutationB({-2, 4, 3, -1})) == ChessboardClass::NotChessboard);
}

TEST_CASE("no odd-rank element is in the minus class") {
  for (int n : {1, 3, 5}) {
    test::windows_a(n, [](const std::vector<int>& win) {
      CHECK(chessboard_class(PermutationA(win)) != ChessboardClass::Minus);
    });
    if (n <= 3)
      test::windows_b(n, [](const std::vector<int>& win) {
        CHECK(chessboard_class(PermutationB(win)) != ChessboardClass::Minus);
      });
  }
}

TEST_CASE("chi values and homomorphism") {
  CHECK(chi(PermutationA::identity(4)) == 1);
  CHECK(chi(PermutationA({2, 1})) == -1);
  CHECK(chi(compose(PermutationA({2, 1}), PermutationA({2, 1}))) == 1);
  CHECK_THROWS_AS(chi(PermutationA({2, 1, 3})), std::domain_error);
  CHECK_THROWS_AS(chi(PermutationB({-2, 4, 3, -1})), std::domain_error);

  // chessboard elements form a group and chi is multiplicative on it
  for (int n = 1; n <= 4; ++n) {
    std::vector<PermutationA> chessboard;
    test::windows_a(n, [&](const std::vector<int>& win) {
      const PermutationA w(win);
      if (chessboard_class(w) != ChessboardClass::NotChessboard) chessboard.push_back(w);
    });
    for (const auto& u : chessboard) {
      CHECK(chessboard_class(inverse(u)) != ChessboardClass::NotChessboard);
      CHECK(chi(inverse(u)) == chi(u));
      if (chessboard_class(u) == ChessboardClass::Plus)
        CHECK(chessboard_class(inverse(u)) == ChessboardClass::Plus);
      for (const auto& v : chessboard) {
        const PermutationA uv = compose(u, v);
        CHECK(chessboard_class(uv) != ChessboardClass::NotChessboard);
        CHECK(chi(uv) == chi(u) * chi(v));
        if (chessboard_class(u) == ChessboardClass::Plus &&
            chessboard_class(v) == ChessboardClass::Plus)
          CHECK(chessboard_class(uv) == ChessboardClass::Plus);
      }
    }
  }
  // same closure on the signed side, smaller rank
  std::vector<PermutationB> chessboard_b;
  test::windows_b(3, [&](const std::vector<int>& win) {
    const PermutationB w(win);
    if (chessboard_class(w) != ChessboardClass::NotChessboard) chessboard_b.push_back(w);
  });
  for (const auto& u : chessboard_b)
    for (const auto& v : chessboard_b) {
      const PermutationB uv = compose(u, v);
      CHECK(chessboard_class(uv) != ChessboardClass::NotChessboard);
      CHECK(chi(uv) == chi(u) * chi(v));
    }
}
