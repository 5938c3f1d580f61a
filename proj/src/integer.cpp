#include "abrec/integer.hpp"

#include "abrec/errors.hpp"

#include <numeric>

namespace abrec {

long to_ll(const Int& x)
{
    if (!x.fits_slong_p())
        throw error("integer too large for machine word: " + x.get_str());
    return x.get_si();
}

Int int_pow(const Int& base, unsigned long exp)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

long mod_pow(long base, long exp, long mod)
{
    if (mod <= 0)
        throw error("mod_pow: nonpositive modulus");
    if (mod == 1)
        return 0;
    unsigned __int128 acc = 1;
    unsigned __int128 b = ((base % mod) + mod) % mod;
    while (exp > 0) {
        if (exp & 1)
            acc = acc * b % static_cast<unsigned long>(mod);
        b = b * b % static_cast<unsigned long>(mod);
        exp >>= 1;
    }
    return static_cast<long>(acc);
}

long mod_inv(long a, long mod)
{
    long t = 0, new_t = 1;
    long r = mod, new_r = ((a % mod) + mod) % mod;
    while (new_r != 0) {
        long q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1)
        throw error("mod_inv: element not invertible");
    return ((t % mod) + mod) % mod;
}

bool is_prime(long n)
{
    if (n < 2)
        return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<long> primes_up_to(long bound)
{
    std::vector<long> out;
    if (bound < 2)
        return out;
    std::vector<bool> sieve(static_cast<size_t>(bound) + 1, true);
    for (long i = 2; i <= bound; ++i) {
        if (!sieve[static_cast<size_t>(i)])
            continue;
        out.push_back(i);
        for (long j = i * i; j <= bound; j += i)
            sieve[static_cast<size_t>(j)] = false;
    }
    return out;
}

std::vector<std::pair<long, int>> factorize(long n)
{
    if (n <= 0)
        throw error("factorize: argument must be positive");
    std::vector<std::pair<long, int>> out;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

long euler_phi(long n)
{
    long phi = 1;
    for (auto [p, e] : factorize(n)) {
        long pe = 1;
        for (int i = 1; i < e; ++i)
            pe *= p;
        phi *= pe * (p - 1);
    }
    return n == 1 ? 1 : phi;
}

long multiplicative_order(long a, long n)
{
    if (n == 1)
        return 1;
    a = ((a % n) + n) % n;
    if (std::gcd(a, n) != 1)
        throw error("multiplicative_order: not a unit");
    long x = a % n, ord = 1;
    while (x != 1) {
        x = static_cast<long>(static_cast<unsigned __int128>(x) * a % n);
        ++ord;
    }
    return ord;
}

long crt_pair(long r1, long m1, long r2, long m2)
{
    if (m1 == 1)
        return ((r2 % m2) + m2) % m2;
    if (m2 == 1)
        return ((r1 % m1) + m1) % m1;
    long inv = mod_inv(m1 % m2, m2);
    long diff = ((r2 - r1) % m2 + m2) % m2;
    unsigned __int128 k = static_cast<unsigned __int128>(diff) * inv % m2;
    return static_cast<long>(r1 + static_cast<long>(k) * m1);
}

long p_adic_valuation(long n, long p)
{
    if (n == 0)
        throw error("p_adic_valuation of zero");
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

} // namespace abrec
