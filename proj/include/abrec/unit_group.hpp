#ifndef ABREC_UNIT_GROUP_HPP
#define ABREC_UNIT_GROUP_HPP

#include "abrec/abelian_group.hpp"

#include <unordered_map>
#include <vector>

namespace abrec {

// (Z/nZ)^* in invariant-factor form together with an explicit
// residue <-> coordinate dictionary.
class UnitGroup {
public:
    explicit UnitGroup(long modulus);

    long modulus() const { return modulus_; }
    const FinAbGroup& group() const { return pres_.group; }

    // Residues attached to the invariant-factor basis, one per factor.
    const std::vector<long>& generator_residues() const { return generator_residues_; }

    Element element(long residue) const; // invalid_element_error if not a unit
    long residue(const Element& coords) const;

    std::vector<long> residues() const; // all units, ascending

    Subgroup subgroup_from_residues(const std::vector<long>& residues) const;
    std::vector<long> subgroup_residues(const Subgroup& s) const; // ascending

    // ker(U(n) -> U(m)) for m | n: units congruent to 1 mod m.
    Subgroup reduction_kernel(long m) const;

    // Reduction hom U(n) -> U(m) for m | n (surjective).
    GroupHom reduction_to(const UnitGroup& target) const;

private:
    long modulus_;
    // One cyclic component per prime power factor of the modulus (two for
    // 2^k with k >= 3, generated by -1 and 5).
    struct Component {
        long prime_power;
        long generator; // mod prime_power
        long order;
        std::unordered_map<long, long> dlog; // residue mod p^e -> exponent
    };
    std::vector<Component> components_;
    std::vector<long> crt_generators_; // component generators lifted mod n
    CyclicPresentation pres_;
    std::vector<long> generator_residues_;
};

} // namespace abrec

#endif
