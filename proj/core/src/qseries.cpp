#include "oddlen/qseries.hpp"

#include <numeric>
#include <stdexcept>

namespace oddlen {

IntPolynomial q_bracket(int n) {
  if (n < 0) throw std::invalid_argument("q_bracket: negative argument");
  std::vector<BigInt> cs(static_cast<std::size_t>(n), BigInt(1));
  return IntPolynomial(std::move(cs));
}

IntPolynomial q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
  IntPolynomial acc = IntPolynomial::one();
  for (int i = 1; i <= n; ++i) acc *= q_bracket(i);
  return acc;
}

IntPolynomial q_binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("q_binomial: negative n");
  if (k < 0 || k > n) return IntPolynomial::zero();
  if (k > n - k) k = n - k;
  // row[j] holds [i, j] while i sweeps 1..n
  std::vector<IntPolynomial> row(static_cast<std::size_t>(k) + 1);
  row[0] = IntPolynomial::one();
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      if (j == i) {
        row[j] = IntPolynomial::one();
      } else {
        row[j] = row[j - 1] + row[j].times_power(j);
      }
    }
  }
  return row[k];
}

IntPolynomial q_multinomial(int n, const std::vector<int>& parts) {
  long long sum = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("q_multinomial: negative part");
    sum += p;
  }
  if (sum != n) throw std::invalid_argument("q_multinomial: parts do not sum to n");
  IntPolynomial acc = IntPolynomial::one();
  int prefix = 0;
  for (int p : parts) {
    prefix += p;
    acc *= q_binomial(prefix, p);
  }
  return acc;
}

}  // namespace oddlen
