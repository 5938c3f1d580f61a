#include "abrec/unit_group.hpp"

#include "abrec/errors.hpp"

#include <algorithm>
#include <numeric>

namespace abrec {

namespace {

long primitive_root(long pe, long p)
{
    // pe = p^e for odd p: search the smallest generator.
    long phi = euler_phi(pe);
    for (long g = 2; g < pe; ++g) {
        if (g % p == 0)
            continue;
        if (multiplicative_order(g, pe) == phi)
            return g;
    }
    throw error("no primitive root found mod " + std::to_string(pe));
}

} // namespace

UnitGroup::UnitGroup(long modulus) : modulus_(modulus)
{
    if (modulus <= 0)
        throw error("unit group modulus must be positive");

    for (auto [p, e] : factorize(modulus == 1 ? 1 : modulus)) {
        long pe = 1;
        for (int i = 0; i < e; ++i)
            pe *= p;
        if (p == 2) {
            if (e == 1)
                continue; // U(2) trivial
            if (e == 2) {
                components_.push_back({pe, 3, 2, {}});
            } else {
                components_.push_back({pe, pe - 1, 2, {}}); // -1
                components_.push_back({pe, 5, pe / 4, {}});
            }
        } else {
            components_.push_back({pe, primitive_root(pe, p), euler_phi(pe), {}});
        }
    }

    // Discrete logs within each component; moduli stay tiny so a full table
    // per component is cheapest. For 2^k (k >= 3) the two components share
    // the modulus: residue = (-1)^a 5^b uniquely.
    for (auto& comp : components_) {
        if (comp.prime_power % 8 == 0)
            continue; // handled jointly below
        long x = 1;
        for (long t = 0; t < comp.order; ++t) {
            comp.dlog[x] = t;
            x = static_cast<long>(static_cast<unsigned __int128>(x) * comp.generator %
                                       comp.prime_power);
        }
    }
    for (size_t i = 0; i < components_.size(); ++i) {
        if (components_[i].prime_power % 8 != 0)
            continue;
        Component& minus = components_[i];
        Component& five = components_[i + 1];
        long pe = minus.prime_power;
        for (long a = 0; a < 2; ++a)
            for (long b = 0; b < five.order; ++b) {
                long x = mod_pow(pe - 1, a, pe);
                x = static_cast<long>(static_cast<unsigned __int128>(x) *
                                           mod_pow(5, b, pe) % pe);
                minus.dlog[x] = a;
                five.dlog[x] = b;
            }
        ++i;
    }

    std::vector<Int> orders;
    for (const auto& comp : components_) {
        long lift = crt_pair(comp.generator, comp.prime_power, 1, modulus / comp.prime_power);
        crt_generators_.push_back(lift);
        orders.emplace_back(comp.order);
    }
    pres_ = presentation_from_cyclic_orders(orders);

    for (size_t i = 0; i < pres_.group.rank(); ++i)
        generator_residues_.push_back(residue(pres_.group.basis_element(i)));
}

Element UnitGroup::element(long r) const
{
    long x = ((r % modulus_) + modulus_) % modulus_;
    if (modulus_ == 1)
        return pres_.group.zero();
    if (std::gcd(x, modulus_) != 1)
        throw invalid_element_error("residue " + std::to_string(r) + " is not a unit mod " +
                                    std::to_string(modulus_));
    std::vector<Int> old;
    for (const auto& comp : components_)
        old.emplace_back(comp.dlog.at(x % comp.prime_power));
    return pres_.encode(old);
}

long UnitGroup::residue(const Element& coords) const
{
    std::vector<Int> old = pres_.decode(coords);
    unsigned __int128 r = 1 % modulus_;
    for (size_t i = 0; i < crt_generators_.size(); ++i)
        r = r * mod_pow(crt_generators_[i], to_ll(old[i]), modulus_) % modulus_;
    long out = static_cast<long>(r);
    return modulus_ == 1 ? 0 : out;
}

std::vector<long> UnitGroup::residues() const
{
    std::vector<long> out;
    if (modulus_ == 1)
        return {0};
    for (long r = 1; r < modulus_; ++r)
        if (std::gcd(r, modulus_) == 1)
            out.push_back(r);
    return out;
}

Subgroup UnitGroup::subgroup_from_residues(const std::vector<long>& rs) const
{
    std::vector<Element> gens;
    gens.reserve(rs.size());
    for (long r : rs)
        gens.push_back(element(r));
    return Subgroup::from_generators(group(), gens);
}

std::vector<long> UnitGroup::subgroup_residues(const Subgroup& s) const
{
    if (s.ambient() != group())
        throw ambient_mismatch_error("subgroup does not live in this unit group");
    std::vector<long> out;
    for (const Element& e : s.elements())
        out.push_back(residue(e));
    std::sort(out.begin(), out.end());
    return out;
}

Subgroup UnitGroup::reduction_kernel(long m) const
{
    if (m <= 0 || modulus_ % m != 0)
        throw error("reduction kernel requires a divisor of the modulus");
    std::vector<Element> gens;
    for (long r : residues())
        if (r % m == 1 % m)
            gens.push_back(element(r));
    return Subgroup::from_generators(group(), gens);
}

GroupHom UnitGroup::reduction_to(const UnitGroup& target) const
{
    if (target.modulus() <= 0 || modulus_ % target.modulus() != 0)
        throw error("reduction requires a divisor modulus");
    std::vector<Element> images;
    for (long g : generator_residues_)
        images.push_back(target.element(g % target.modulus()));
    return GroupHom(group(), target.group(), images);
}

} // namespace abrec
