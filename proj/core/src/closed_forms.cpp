#include "oddlen/closed_forms.hpp"

#include <stdexcept>

#include "oddlen/qseries.hpp"

namespace oddlen {

namespace {

void require_set(const IndexSet& set, GroupKind kind, int n, const char* what) {
  if (set.kind() != kind || set.n() != n)
    throw std::invalid_argument(std::string(what) + ": index set kind or rank mismatch");
}

IntPolynomial multinomial_x2(const IndexSet& set) {
  const auto parts = multinomial_parts(set);
  int sum = 0;
  for (int p : parts) sum += p;
  return q_multinomial(sum, parts).stretched(2);
}

IntPolynomial even_power_product(int from_k, int to_k) {
  IntPolynomial acc = IntPolynomial::one();
  for (int k = from_k; k <= to_k; ++k) acc *= IntPolynomial::one_minus_power(2 * k);
  return acc;
}

}  // namespace

IntPolynomial closed_chessboard_plus(int n, const IndexSet& I) {
  require_set(I, GroupKind::A, n, "closed_chessboard_plus");
  const int mt = m_tilde(I);
  return multinomial_x2(I) * even_power_product(mt + 1, (n - 1) / 2);
}

IntPolynomial closed_chessboard_minus(int n, const IndexSet& I) {
  require_set(I, GroupKind::A, n, "closed_chessboard_minus");
  if (n % 2 != 0)
    throw std::invalid_argument("closed_chessboard_minus: rank must be even");
  const int m = n / 2;
  if (is_compressed(I) && I.contains(n - 1)) return IntPolynomial::zero();
  return -(closed_chessboard_plus(n, I).times_power(m));
}

IntPolynomial closed_conj_a(int n, const IndexSet& I) {
  require_set(I, GroupKind::A, n, "closed_conj_a");
  const int mt = m_tilde(I);
  const int m = n / 2;
  if (n % 2 == 1) return multinomial_x2(I) * even_power_product(mt + 1, m);
  if (m == mt) return multinomial_x2(I);
  return (IntPolynomial::one() + IntPolynomial::monomial(static_cast<std::size_t>(m))) *
         multinomial_x2(I) * even_power_product(mt + 1, m - 1);
}

IntPolynomial closed_sn_quotient(int n, const IndexSet& I) {
  require_set(I, GroupKind::A, n, "closed_sn_quotient");
  const int mt = m_tilde(I);
  const IntPolynomial base = multinomial_x2(I) * even_power_product(mt + 1, (n - 1) / 2);
  if (n % 2 == 1 || n == 2 * mt) return base;
  // even n with m > m~ carries the extra (1 - x^m) factor
  return IntPolynomial::one_minus_power(n / 2) * base;
}

IntPolynomial closed_sn_full(int n) {
  if (n < 1) throw std::invalid_argument("closed_sn_full: rank must be positive");
  const int m = n / 2;
  if (n % 2 == 1) return even_power_product(1, m);
  return IntPolynomial::one_minus_power(m) * even_power_product(1, m - 1);
}

IntPolynomial closed_b_ascending(int n) {
  if (n < 1) throw std::invalid_argument("closed_b_ascending: rank must be positive");
  IntPolynomial acc = IntPolynomial::one();
  for (int j = 1; j <= (n + 1) / 2; ++j) acc *= IntPolynomial::one_minus_power(2 * j - 1);
  return acc;
}

IntPolynomial closed_conj_b(int n, const IndexSet& J) {
  require_set(J, GroupKind::B, n, "closed_conj_b");
  int a = 0;
  while (a <= n - 1 && J.contains(a)) ++a;  // min of [0,n] \ J, so a = n for the full set
  const int mt = m_tilde(J);
  IntPolynomial numerator = multinomial_x2(J);
  for (int j = a + 1; j <= n; ++j) numerator *= IntPolynomial::one_minus_power(j);
  return IntPolynomial::divide_exact(numerator, even_power_product(1, mt));
}

}  // namespace oddlen
