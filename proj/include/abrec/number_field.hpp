#ifndef ABREC_NUMBER_FIELD_HPP
#define ABREC_NUMBER_FIELD_HPP

#include "abrec/unit_group.hpp"

#include <string>
#include <vector>

namespace abrec {

// An abelian number field presented as the fixed field of H <= U(n) acting
// on the n-th cyclotomic field. Moduli congruent to 2 mod 4 are collapsed to
// their odd part at construction so each field has one canonical modulus.
class AbelianFieldSpec {
public:
    AbelianFieldSpec(long modulus, const std::vector<long>& subgroup_generator_residues);
    AbelianFieldSpec(long modulus, Subgroup fixing_subgroup);

    static AbelianFieldSpec rationals();

    long modulus() const { return modulus_; }
    const UnitGroup& units() const { return units_; }
    const Subgroup& fixing_subgroup() const { return fixing_; }

    Int degree() const { return fixing_.index(); }
    std::vector<long> subgroup_generator_residues() const;

    bool operator==(const AbelianFieldSpec& o) const;
    bool operator!=(const AbelianFieldSpec& o) const { return !(*this == o); }

private:
    long modulus_;
    UnitGroup units_;
    Subgroup fixing_;
};

// Smallest m with the field contained in the m-th cyclotomic field; found by
// scanning divisors of the modulus for kernels the subgroup swallows.
long conductor(const AbelianFieldSpec& spec);

bool is_normalized(const AbelianFieldSpec& spec);

// Re-express at modulus = conductor. Two specs present the same field iff
// their normalizations are identical.
AbelianFieldSpec normalize(const AbelianFieldSpec& spec);

// Every abelian field of conductor <= bound, exactly once, normalized,
// sorted by (conductor, subgroup generators).
std::vector<AbelianFieldSpec> enumerate_abelian_fields(long conductor_bound);

struct DirichletCharacter {
    GroupHom hom; // U(n) -> Z/e, e the exponent of U(n)/H
    long conductor;
};

struct DirichletCharacterGroup {
    long modulus;
    Int exponent; // e
    std::vector<DirichletCharacter> characters;
};

// The dual of U(n)/H, with per-character conductors.
DirichletCharacterGroup character_group(const AbelianFieldSpec& spec);

// JSON wire format: {"modulus": 12, "subgroup_generators": [11]}
std::string field_spec_to_json(const AbelianFieldSpec& spec);
AbelianFieldSpec field_spec_from_json(const std::string& text); // schema_error on junk

} // namespace abrec

#endif
