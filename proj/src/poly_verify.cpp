#include "abrec/poly_verify.hpp"

#include "abrec/errors.hpp"
#include "abrec/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace abrec {

namespace {

using ZPoly = std::vector<Int>; // low to high

void trim(ZPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    ZPoly out(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

// Exact division by a monic divisor.
ZPoly zdiv_exact(ZPoly num, const ZPoly& den)
{
    if (den.empty() || den.back() != 1)
        throw error("polynomial division requires a monic divisor");
    trim(num);
    if (num.size() < den.size())
        throw error("inexact polynomial division");
    ZPoly q(num.size() - den.size() + 1, Int(0));
    for (size_t i = q.size(); i-- > 0;) {
        Int c = num[i + den.size() - 1];
        q[i] = c;
        if (c == 0)
            continue;
        for (size_t j = 0; j < den.size(); ++j)
            num[i + j] -= c * den[j];
    }
    trim(num);
    if (!num.empty())
        throw error("inexact polynomial division");
    return q;
}

// ---- arithmetic in Z[zeta_n] = Z[x]/Phi_n ----

struct CyclotomicRing {
    long n;
    ZPoly phi;          // Phi_n
    size_t dim;         // phi(n)
    std::vector<ZPoly> zeta_power; // x^a mod Phi_n for 0 <= a < n

    explicit CyclotomicRing(long modulus) : n(modulus), phi(cyclotomic_polynomial(modulus).coeffs)
    {
        dim = phi.size() - 1;
        ZPoly cur{Int(1)};
        for (long a = 0; a < n; ++a) {
            zeta_power.push_back(cur);
            // multiply by x, reduce one step
            cur.insert(cur.begin(), Int(0));
            if (cur.size() == dim + 1) {
                Int c = cur.back();
                for (size_t j = 0; j < dim + 1; ++j)
                    cur[j] -= c * phi[j];
                trim(cur);
            }
        }
        for (ZPoly& z : zeta_power)
            z.resize(dim, Int(0));
    }

    std::vector<Int> zero() const { return std::vector<Int>(dim, Int(0)); }

    void add_into(std::vector<Int>& a, const std::vector<Int>& b) const
    {
        for (size_t i = 0; i < dim; ++i)
            a[i] += b[i];
    }

    std::vector<Int> mul(const std::vector<Int>& a, const std::vector<Int>& b) const
    {
        ZPoly prod = zmul(ZPoly(a.begin(), a.end()), ZPoly(b.begin(), b.end()));
        // reduce mod phi
        for (size_t i = prod.size(); i-- > dim;) {
            Int c = prod[i];
            if (c == 0)
                continue;
            for (size_t j = 0; j <= dim; ++j)
                prod[i - dim + j] -= c * phi[j];
        }
        prod.resize(dim, Int(0));
        return std::vector<Int>(prod.begin(), prod.end());
    }
};

// ---- arithmetic in F_p[x] ----

using PPoly = std::vector<long>; // low to high, coefficients in [0, p)

void ptrim(PPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, long p)
{
    if (a.empty() || b.empty())
        return {};
    PPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<long>(
                (out[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p);
    }
    ptrim(out);
    return out;
}

PPoly pmod(PPoly a, const PPoly& m, long p)
{
    ptrim(a);
    long lead_inv = mod_inv(m.back(), p);
    while (a.size() >= m.size()) {
        long c = static_cast<long>(static_cast<unsigned __int128>(a.back()) * lead_inv % p);
        size_t shift = a.size() - m.size();
        for (size_t j = 0; j < m.size(); ++j) {
            long sub = static_cast<long>(static_cast<unsigned __int128>(c) * m[j] % p);
            a[shift + j] = ((a[shift + j] - sub) % p + p) % p;
        }
        ptrim(a);
        if (a.empty())
            break;
    }
    return a;
}

PPoly pgcd(PPoly a, PPoly b, long p)
{
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        PPoly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) { // make monic
        long inv = mod_inv(a.back(), p);
        for (long& c : a)
            c = static_cast<long>(static_cast<unsigned __int128>(c) * inv % p);
    }
    return a;
}

PPoly ppowmod(PPoly base, Int exp, const PPoly& m, long p)
{
    PPoly acc{1};
    base = pmod(std::move(base), m, p);
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t()))
            acc = pmod(pmul(acc, base, p), m, p);
        base = pmod(pmul(base, base, p), m, p);
        exp >>= 1;
    }
    return acc;
}

PPoly pderivative(const PPoly& a, long p)
{
    PPoly out;
    for (size_t i = 1; i < a.size(); ++i)
        out.push_back(static_cast<long>(static_cast<unsigned __int128>(a[i]) * (i % p) % p));
    ptrim(out);
    return out;
}

PPoly pdiv_exact(PPoly num, const PPoly& den, long p)
{
    ptrim(num);
    PPoly q(num.size() - den.size() + 1, 0);
    long lead_inv = mod_inv(den.back(), p);
    for (size_t i = q.size(); i-- > 0;) {
        long c = static_cast<long>(static_cast<unsigned __int128>(num[i + den.size() - 1]) *
                                   lead_inv % p);
        q[i] = c;
        if (c == 0)
            continue;
        for (size_t j = 0; j < den.size(); ++j) {
            long sub = static_cast<long>(static_cast<unsigned __int128>(c) * den[j] % p);
            num[i + j] = ((num[i + j] - sub) % p + p) % p;
        }
    }
    return q;
}

} // namespace

std::string IntegerPolynomial::to_string() const
{
    if (coeffs.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = coeffs.size(); i-- > 0;) {
        const Int& c = coeffs[i];
        if (c == 0)
            continue;
        Int a = abs(c);
        if (first) {
            if (c < 0)
                out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1)
            out << a.get_str();
        if (i >= 1) {
            out << "x";
            if (i >= 2)
                out << "^" << i;
        }
    }
    return out.str();
}

IntegerPolynomial cyclotomic_polynomial(long n)
{
    if (n < 1)
        throw error("cyclotomic polynomial index must be positive");
    // x^n - 1 divided by the proper cyclotomic divisors
    ZPoly num(static_cast<size_t>(n) + 1, Int(0));
    num[0] = -1;
    num[static_cast<size_t>(n)] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0)
            continue;
        num = zdiv_exact(std::move(num), cyclotomic_polynomial(d).coeffs);
    }
    return IntegerPolynomial{std::move(num)};
}

IntegerPolynomial min_poly(const AbelianFieldSpec& spec, long degree_cap)
{
    if (!is_normalized(spec))
        throw non_normalized_error("min_poly requires a normalized field spec");
    Int deg = spec.degree();
    if (deg > degree_cap)
        throw degree_cap_error("field degree " + deg.get_str() + " exceeds the cap " +
                               std::to_string(degree_cap));

    const long n = spec.modulus();
    CyclotomicRing ring(n);
    const UnitGroup& u = spec.units();
    std::vector<long> subgroup = u.subgroup_residues(spec.fixing_subgroup());

    // Coset representatives of H in U(n).
    std::set<long> seen;
    std::vector<long> reps;
    for (long r : u.residues()) {
        if (seen.count(r))
            continue;
        reps.push_back(r);
        for (long h : subgroup)
            seen.insert(n == 1 ? 0 : r * h % n);
    }

    // Conjugate periods eta^sigma = sum_h zeta^{sigma h}.
    std::vector<std::vector<Int>> periods;
    for (long r : reps) {
        std::vector<Int> eta = ring.zero();
        for (long h : subgroup)
            ring.add_into(eta, ring.zeta_power[n == 1 ? 0 : r * h % n]);
        periods.push_back(std::move(eta));
    }
    for (size_t i = 0; i < periods.size(); ++i)
        for (size_t j = i + 1; j < periods.size(); ++j)
            if (periods[i] == periods[j])
                throw error("degenerate Gaussian period: conjugates collide");

    // Expand prod (x - eta) with coefficients in Z[zeta].
    std::vector<std::vector<Int>> poly{std::vector<Int>(ring.zero())};
    poly[0][0] = 1; // constant polynomial 1
    for (const std::vector<Int>& eta : periods) {
        std::vector<std::vector<Int>> next(poly.size() + 1, ring.zero());
        for (size_t i = 0; i < poly.size(); ++i) {
            // x * poly
            ring.add_into(next[i + 1], poly[i]);
            // - eta * poly
            std::vector<Int> prod = ring.mul(eta, poly[i]);
            for (size_t t = 0; t < ring.dim; ++t)
                next[i][t] -= prod[t];
        }
        poly = std::move(next);
    }

    IntegerPolynomial out;
    for (const std::vector<Int>& c : poly) {
        for (size_t t = 1; t < ring.dim; ++t)
            if (c[t] != 0)
                throw error("period polynomial has a non-rational coefficient");
        out.coeffs.push_back(ring.dim == 0 ? Int(0) : c[0]);
    }
    return out;
}

std::vector<long> factor_degrees_mod_p(const IntegerPolynomial& poly, long p)
{
    if (!is_prime(p))
        throw not_prime_error("factor_degrees_mod_p: modulus must be prime");
    if (poly.degree() < 1)
        throw error("factor_degrees_mod_p: polynomial must be nonconstant");

    PPoly f;
    for (const Int& c : poly.coeffs) {
        Int r;
        mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p));
        f.push_back(to_ll(r));
    }
    ptrim(f);
    if (static_cast<long>(f.size()) - 1 != poly.degree())
        throw ramified_prime_error("leading coefficient vanishes mod p");

    // p | disc(f) iff f is not squarefree mod p.
    PPoly g = pgcd(f, pderivative(f, p), p);
    if (g.size() > 1)
        throw ramified_prime_error("polynomial is not squarefree mod " + std::to_string(p));

    std::vector<long> degrees;
    PPoly rest = f;
    PPoly x{0, 1};
    PPoly w = pmod(x, rest, p);
    long d = 0;
    while (static_cast<long>(rest.size()) - 1 > 2 * d) {
        ++d;
        w = ppowmod(std::move(w), Int(p), rest, p);
        PPoly diff = w;
        // w - x
        if (diff.size() < 2)
            diff.resize(2, 0);
        diff[1] = ((diff[1] - 1) % p + p) % p;
        ptrim(diff);
        PPoly factor = pgcd(rest, diff, p);
        if (factor.size() > 1) {
            long count = (static_cast<long>(factor.size()) - 1) / d;
            for (long i = 0; i < count; ++i)
                degrees.push_back(d);
            rest = pdiv_exact(std::move(rest), factor, p);
            w = pmod(std::move(w), rest, p);
        }
    }
    if (rest.size() > 1)
        degrees.push_back(static_cast<long>(rest.size()) - 1);
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

bool frobenius_crosscheck(const AbelianFieldSpec& spec, long p)
{
    if (conductor(spec) % p == 0)
        throw ramified_prime_error("frobenius_crosscheck needs an unramified prime");
    std::vector<long> degrees = factor_degrees_mod_p(min_poly(spec), p);
    Localization loc = localize(spec, p);
    long f = to_ll(loc.f);
    if (degrees.size() != static_cast<size_t>(to_ll(loc.g)))
        return false;
    return std::all_of(degrees.begin(), degrees.end(), [f](long d) { return d == f; });
}

Int discriminant(const AbelianFieldSpec& spec)
{
    Int disc = 1;
    for (const DirichletCharacter& chi : character_group(spec).characters)
        disc *= chi.conductor;
    return disc;
}

} // namespace abrec
