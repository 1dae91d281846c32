#pragma once

#include "oddlen/index_set.hpp"
#include "oddlen/polynomial.hpp"

namespace oddlen {

// Closed product / q-multinomial evaluations of the signed odd-length
// generating functions. All take the quotient-defining index set of the
// matching kind and rank and return exact polynomials.

// Sum over the even chessboard part of the quotient S_n^I:
// [m~; parts]_{x^2} * prod_{k=m~+1}^{floor((n-1)/2)} (1 - x^{2k}).
IntPolynomial closed_chessboard_plus(int n, const IndexSet& I);

// Sum over the odd chessboard part, n = 2m even: zero when I is compressed
// with 2m-1 in I, otherwise -x^m times the plus sum.
IntPolynomial closed_chessboard_minus(int n, const IndexSet& I);

// chi-weighted sum over all chessboard elements of the quotient.
IntPolynomial closed_conj_a(int n, const IndexSet& I);

// Sum over the full quotient S_n^I. For even n = 2m this carries the factor
// (1 - x^m) unless m equals m~.
IntPolynomial closed_sn_quotient(int n, const IndexSet& I);

// Whole-group specialization: prod (1-x^{2j}) for odd n, with the extra
// (1-x^m) factor replacing the top term for even n.
IntPolynomial closed_sn_full(int n);

// Sum over the ascending quotient B_n^{[n-1]}: prod (1 - x^{2j-1}).
IntPolynomial closed_b_ascending(int n);

// Sum over B_n^J:
// prod_{j=a+1}^{n} (1-x^j) / prod_{i=1}^{m~} (1-x^{2i}) * [m~; parts]_{x^2},
// with a = min([0,n] \ J) and the 0-component excluded from the parts.
// The division is exact in Z[x]; a nonzero remainder throws.
IntPolynomial closed_conj_b(int n, const IndexSet& J);

}  // namespace oddlen
