#ifndef ABREC_POLY_VERIFY_HPP
#define ABREC_POLY_VERIFY_HPP

#include "abrec/number_field.hpp"

#include <string>
#include <vector>

namespace abrec {

struct IntegerPolynomial {
    std::vector<Int> coeffs; // low to high, normalized (no trailing zeros)

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }
    std::string to_string() const; // human form, e.g. "x^2 + x - 1"

    bool operator==(const IntegerPolynomial& o) const = default;
};

IntegerPolynomial cyclotomic_polynomial(long n);

// Minimal polynomial of the Gaussian period sum_{h in H} zeta_n^h, expanded
// exactly in Z[x] mod the n-th cyclotomic polynomial. Requires a normalized
// spec; degree_cap_error when the field degree exceeds the cap.
IntegerPolynomial min_poly(const AbelianFieldSpec& spec, long degree_cap = 12);

// Degrees of the irreducible factors over F_p, ascending, via distinct-degree
// factorization. ramified_prime_error when p divides the discriminant of the
// polynomial (callers skip those primes).
std::vector<long> factor_degrees_mod_p(const IntegerPolynomial& poly, long p);

// Splitting of p read off the minimal polynomial versus the localize route:
// all factor degrees equal, equal to f, and g = degree/f of them.
bool frobenius_crosscheck(const AbelianFieldSpec& spec, long p);

// |disc K| by conductor-discriminant: product of the character conductors.
Int discriminant(const AbelianFieldSpec& spec);

} // namespace abrec

#endif
