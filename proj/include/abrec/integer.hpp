#ifndef ABREC_INTEGER_HPP
#define ABREC_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace abrec {

// All structural arithmetic (group orders, matrix entries, polynomial
// coefficients) runs on unbounded integers; machine words are used only
// for residues and primes, which stay small by construction.
using Int = mpz_class;
using Rat = mpq_class;

long to_ll(const Int& x);
Int int_pow(const Int& base, unsigned long exp);

long mod_pow(long base, long exp, long mod);
long mod_inv(long a, long mod);

bool is_prime(long n);
std::vector<long> primes_up_to(long bound);

// (prime, exponent) pairs, ascending.
std::vector<std::pair<long, int>> factorize(long n);

long euler_phi(long n);

// Multiplicative order of a mod n; requires gcd(a, n) = 1.
long multiplicative_order(long a, long n);

// x with x = r1 mod m1, x = r2 mod m2 for coprime m1, m2.
long crt_pair(long r1, long m1, long r2, long m2);

long p_adic_valuation(long n, long p);

} // namespace abrec

#endif
