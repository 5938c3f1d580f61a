#include "abrec/local_field.hpp"

#include "abrec/errors.hpp"

#include <algorithm>
#include <numeric>

namespace abrec {

namespace {

void validate_level(const LocalCyclotomicLevel& level)
{
    if (!is_prime(level.p))
        throw not_prime_error("local level: " + std::to_string(level.p) + " is not prime");
    if (level.unramified_exponent < 1)
        throw error("local level: unramified exponent must be >= 1");
    if (level.wild_exponent < 0)
        throw error("local level: wild exponent must be >= 0");
}

std::vector<Int> level_orders(long F, const UnitGroup& wild)
{
    std::vector<Int> orders{Int(F)};
    for (const Int& d : wild.group().invariant_factors())
        orders.push_back(d);
    return orders;
}

std::vector<Int> encode_pair(const CyclicPresentation& pres, const UnitGroup& wild, long c,
                             long residue)
{
    std::vector<Int> old{Int(c)};
    for (const Int& x : wild.element(residue))
        old.push_back(x);
    return pres.encode(old);
}

std::pair<long, long> decode_pair(const CyclicPresentation& pres, const UnitGroup& wild, long F,
                                  const Element& x)
{
    std::vector<Int> old = pres.decode(x);
    long c = to_ll(old[0]) % F;
    Element unit_coords(old.begin() + 1, old.end());
    return {c, wild.residue(unit_coords)};
}

// Residues of U(p^k) congruent to 1 mod p^i (all units for i <= 0).
std::vector<long> congruence_residues(long pk, long i, long p)
{
    std::vector<long> out;
    if (pk == 1)
        return out;
    long step = 1;
    for (long t = 0; t < i; ++t) {
        step *= p;
        if (step >= pk)
            return out; // only the trivial residue is left
    }
    for (long r = 1; r < pk; r += step)
        if (std::gcd(r, pk) == 1)
            out.push_back(r);
    return out;
}

} // namespace

long LocalCyclotomicLevel::prime_power() const
{
    long pk = 1;
    for (long t = 0; t < wild_exponent; ++t)
        pk *= p;
    return pk;
}

LocalLevelGroup::LocalLevelGroup(const LocalCyclotomicLevel& level)
    : level_(level), wild_((validate_level(level), level.prime_power())),
      pres_(presentation_from_cyclic_orders(level_orders(level.unramified_exponent, wild_)))
{
}

Element LocalLevelGroup::element(long frobenius_power, long unit_residue) const
{
    return encode_pair(pres_, wild_, frobenius_power, unit_residue);
}

std::pair<long, long> LocalLevelGroup::decode(const Element& x) const
{
    return decode_pair(pres_, wild_, level_.unramified_exponent, x);
}

Subgroup LocalLevelGroup::inertia() const
{
    return congruence_subgroup(0);
}

Subgroup LocalLevelGroup::congruence_subgroup(long i) const
{
    std::vector<Element> gens;
    for (long r : congruence_residues(level_.prime_power(), i, level_.p))
        gens.push_back(element(0, r));
    return Subgroup::from_generators(group(), gens);
}

TruncatedLocalUnits::TruncatedLocalUnits(const LocalCyclotomicLevel& level)
    : level_(level), units_((validate_level(level), level.prime_power())),
      pres_(presentation_from_cyclic_orders(level_orders(level.unramified_exponent, units_)))
{
}

Element TruncatedLocalUnits::element(long valuation, long unit_residue) const
{
    return encode_pair(pres_, units_, valuation, unit_residue);
}

std::pair<long, long> TruncatedLocalUnits::decode(const Element& x) const
{
    return decode_pair(pres_, units_, level_.unramified_exponent, x);
}

Subgroup TruncatedLocalUnits::unit_subgroup() const
{
    return congruence_subgroup(0);
}

Subgroup TruncatedLocalUnits::congruence_subgroup(long i) const
{
    std::vector<Element> gens;
    for (long r : congruence_residues(level_.prime_power(), i, level_.p))
        gens.push_back(element(0, r));
    return Subgroup::from_generators(group(), gens);
}

LocalFieldSpec::LocalFieldSpec(LocalLevelGroup g, Subgroup s)
    : gal(std::move(g)), fixing(std::move(s))
{
    if (fixing.ambient() != gal.group())
        throw ambient_mismatch_error("fixing subgroup does not live in the level group");
}

bool LocalFieldSpec::operator==(const LocalFieldSpec& o) const
{
    return level() == o.level() && fixing == o.fixing;
}

Quotient galois_quotient(const LocalFieldSpec& spec)
{
    return quotient(spec.gal.group(), spec.fixing);
}

Int ramification_index(const LocalFieldSpec& spec)
{
    Quotient q = galois_quotient(spec);
    return q.projection.image_of(spec.gal.inertia()).order();
}

Int residue_degree(const LocalFieldSpec& spec)
{
    return spec.degree() / ramification_index(spec);
}

namespace {

Subgroup upper_at_integer(const LocalFieldSpec& spec, const Quotient& q, long i)
{
    if (i <= 0)
        return q.projection.image_of(spec.gal.inertia());
    return q.projection.image_of(spec.gal.congruence_subgroup(i));
}

} // namespace

Subgroup ramification_upper(const LocalFieldSpec& spec, const Rat& u)
{
    if (u < -1)
        throw error("ramification groups are indexed by u >= -1");
    Quotient q = galois_quotient(spec);
    if (u == -1)
        return Subgroup::full(q.group);
    if (u <= 0)
        return upper_at_integer(spec, q, 0);
    Int i;
    mpz_cdiv_q(i.get_mpz_t(), u.get_num().get_mpz_t(), u.get_den().get_mpz_t());
    return upper_at_integer(spec, q, to_ll(i));
}

std::vector<Int> upper_jump_orders(const LocalFieldSpec& spec)
{
    Quotient q = galois_quotient(spec);
    std::vector<Int> orders;
    for (long i = 0; i <= spec.level().wild_exponent; ++i)
        orders.push_back(upper_at_integer(spec, q, i).order());
    return orders;
}

Rat herbrand_psi(const LocalFieldSpec& spec, const Rat& u)
{
    if (u < -1)
        throw error("psi is defined for u >= -1");
    if (u <= 0)
        return u;
    std::vector<Int> orders = upper_jump_orders(spec);
    auto order_at = [&orders](long i) -> const Int& {
        size_t idx = std::min<size_t>(static_cast<size_t>(i), orders.size() - 1);
        return orders[idx];
    };
    // slope on (t-1, t] is [G^0 : G^t]
    Rat acc(0);
    Int u_floor;
    mpz_fdiv_q(u_floor.get_mpz_t(), u.get_num().get_mpz_t(), u.get_den().get_mpz_t());
    long fl = to_ll(u_floor);
    for (long t = 1; t <= fl; ++t)
        acc += Rat(orders[0] / order_at(t));
    Rat frac = u - Rat(u_floor);
    if (frac > 0)
        acc += frac * Rat(orders[0] / order_at(fl + 1));
    return acc;
}

Subgroup ramification_lower(const LocalFieldSpec& spec, long i)
{
    if (i < -1)
        throw error("ramification groups are indexed by i >= -1");
    Quotient q = galois_quotient(spec);
    if (i == -1)
        return Subgroup::full(q.group);
    if (i == 0)
        return upper_at_integer(spec, q, 0);
    // G_i = G^j for the least integer j with psi(j) >= i.
    for (long j = 0; j <= spec.level().wild_exponent; ++j)
        if (herbrand_psi(spec, Rat(j)) >= Rat(static_cast<long>(i)))
            return upper_at_integer(spec, q, j);
    return upper_at_integer(spec, q, spec.level().wild_exponent); // trivial
}

Rat herbrand_phi(const LocalFieldSpec& spec, const Rat& v)
{
    if (v < -1)
        throw error("phi is defined for v >= -1");
    if (v <= 0)
        return v;
    // Built from the lower filtration so that phi o psi = id is a real check.
    Int g0 = ramification_lower(spec, 0).order();
    Rat acc(0);
    Int v_floor;
    mpz_fdiv_q(v_floor.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
    long fl = to_ll(v_floor);
    for (long t = 1; t <= fl; ++t)
        acc += Rat(ramification_lower(spec, t).order()) / Rat(g0);
    Rat frac = v - Rat(v_floor);
    if (frac > 0)
        acc += frac * Rat(ramification_lower(spec, fl + 1).order()) / Rat(g0);
    return acc;
}

long conductor_exponent(const LocalFieldSpec& spec)
{
    std::vector<Int> orders = upper_jump_orders(spec);
    for (long a = 0; a < static_cast<long>(orders.size()); ++a)
        if (orders[static_cast<size_t>(a)] == 1)
            return a;
    throw level_error("upper filtration does not vanish at the wild exponent");
}

ReciprocityMap reciprocity_map(const LocalCyclotomicLevel& level)
{
    TruncatedLocalUnits units(level);
    LocalLevelGroup gal(level);
    long pk = level.prime_power();
    std::vector<Element> images;
    for (size_t i = 0; i < units.group().rank(); ++i) {
        auto [v, u] = units.decode(units.group().basis_element(i));
        long acting = pk == 1 ? 0 : mod_inv(u, pk);
        images.push_back(gal.element(v, acting));
    }
    GroupHom hom(units.group(), gal.group(), images);
    return ReciprocityMap{std::move(units), std::move(gal), std::move(hom)};
}

Subgroup norm_group(const LocalFieldSpec& spec)
{
    ReciprocityMap rec = reciprocity_map(spec.level());
    return rec.hom.preimage(spec.fixing);
}

Quotient underline_d(const LocalFieldSpec& spec)
{
    ReciprocityMap rec = reciprocity_map(spec.level());
    return quotient(rec.units.group(), norm_group(spec));
}

bool is_abelian_consistency(const LocalFieldSpec& spec)
{
    return is_abelian_consistency(spec, norm_group(spec));
}

bool is_abelian_consistency(const LocalFieldSpec& spec, const Subgroup& claimed_norm_group)
{
    return claimed_norm_group.index() == spec.degree();
}

std::vector<LocalFieldSpec> group_ring_components(long p, long n)
{
    if (!is_prime(p))
        throw not_prime_error("group_ring_components: p must be prime");
    if (n < 1)
        throw error("group_ring_components: n must be >= 1");
    std::vector<LocalFieldSpec> out;
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0)
            continue;
        long j = p_adic_valuation(d, p);
        long dprime = d;
        for (long t = 0; t < j; ++t)
            dprime /= p;
        long f = multiplicative_order(p, dprime);
        long copies = euler_phi(dprime) / f;
        LocalLevelGroup gal(LocalCyclotomicLevel{p, f, j});
        Subgroup triv = Subgroup::trivial(gal.group());
        for (long c = 0; c < copies; ++c)
            out.emplace_back(gal, triv);
    }
    return out;
}

LocalFieldSpec reduce_to_level(const LocalFieldSpec& spec, const LocalCyclotomicLevel& target)
{
    const LocalCyclotomicLevel& from = spec.level();
    if (target.p != from.p || from.unramified_exponent % target.unramified_exponent != 0 ||
        target.wild_exponent > from.wild_exponent)
        throw level_error("target level is not a quotient of the source level");

    LocalLevelGroup small(target);
    long pk = target.prime_power();
    std::vector<Element> images;
    for (size_t i = 0; i < spec.gal.group().rank(); ++i) {
        auto [j, u] = spec.gal.decode(spec.gal.group().basis_element(i));
        images.push_back(small.element(j % target.unramified_exponent, u % pk));
    }
    GroupHom restriction(spec.gal.group(), small.group(), images);
    if (!spec.fixing.contains_subgroup(restriction.kernel()))
        throw level_error("field does not embed in the requested level");
    Subgroup reduced = restriction.image_of(spec.fixing);
    LocalFieldSpec out(std::move(small), std::move(reduced));
    if (out.degree() != spec.degree())
        throw level_error("level reduction changed the degree");
    return out;
}

LocalCyclotomicLevel minimal_level(const LocalFieldSpec& spec)
{
    long F = spec.level().unramified_exponent;
    long fmin = F;
    for (long m = 1; m <= F; ++m) {
        if (F % m != 0)
            continue;
        if (spec.fixing.contains(spec.gal.element(m, 1))) {
            fmin = m;
            break;
        }
    }
    return LocalCyclotomicLevel{spec.level().p, fmin, conductor_exponent(spec)};
}

LocalFieldSpec reduce_to_minimal_level(const LocalFieldSpec& spec)
{
    return reduce_to_level(spec, minimal_level(spec));
}

} // namespace abrec
