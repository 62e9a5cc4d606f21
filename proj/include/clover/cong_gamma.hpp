#pragma once

#include <gmpxx.h>

namespace clover {

/**
 * Congruence Gamma product over the class of k mod m:
 *
 *   G_m(0, k) = 1,   G_m(1, 0) = 1,   G_m(n+1, k) = (m*n + k) * G_m(n, k).
 *
 * For k >= 1 this unrolls to k(m+k)(2m+k)...((n-1)m+k), the product of the
 * first n members of the congruence class; for k = 0 the base case skips the
 * would-be zero factor, so G_m(n, 0) = m^(n-1) * (n-1)!. In particular
 * G_1(n, 0) = (n-1)!.
 *
 * Requires modulus >= 1, residue < modulus, and modulus*count <= 10^6
 * (cost guard).
 */
mpz_class cong_gamma(unsigned long modulus, unsigned long count, unsigned long residue);

/**
 * Closed form m^n * Gamma(n + k/m) / Gamma(k/m), evaluated with the
 * independent real-Gamma implementation. Defined for residue >= 1 (k/m = 0
 * sits on the Gamma pole); residues >= modulus are legal, the identity with
 * the product holds for any k >= 1. Agrees with cong_gamma to better than
 * 1e-12 relative for modulus*count + residue <= 300.
 */
double cong_gamma_closed_form(unsigned long modulus, unsigned long count, unsigned long residue);

namespace detail {
// Recursion unrolled without the residue < modulus restriction; the moment
// and limit formulas use residue = m + 2 with modulus 2m, which exceeds the
// modulus when m <= 2.
mpz_class cong_gamma_product(unsigned long modulus, unsigned long count, unsigned long residue);
}  // namespace detail

}  // namespace clover
