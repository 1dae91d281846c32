#pragma once

#include <vector>

#include "oddlen/polynomial.hpp"

namespace oddlen {

// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
IntPolynomial q_bracket(int n);

// [n]_q! = [1]_q [2]_q ... [n]_q; [0]_q! = 1.
IntPolynomial q_factorial(int n);

// Gaussian binomial, computed by the Pascal recurrence
// [n,k] = [n-1,k-1] + q^k [n-1,k]; zero when k < 0 or k > n.
IntPolynomial q_binomial(int n, int k);

// [n; parts]_q = [n]_q! / prod [part]_q!, computed as a product of
// q-binomials (division-free). Requires parts >= 0 summing to n.
IntPolynomial q_multinomial(int n, const std::vector<int>& parts);

}  // namespace oddlen
