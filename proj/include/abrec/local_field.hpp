#ifndef ABREC_LOCAL_FIELD_HPP
#define ABREC_LOCAL_FIELD_HPP

#include "abrec/unit_group.hpp"

#include <utility>
#include <vector>

namespace abrec {

// Finite stage of the local cyclotomic tower over Q_p: the compositum of the
// degree-F unramified extension with Q_p(zeta_{p^k}).
struct LocalCyclotomicLevel {
    long p;
    long unramified_exponent; // F >= 1
    long wild_exponent;       // k >= 0

    long prime_power() const; // p^k
    bool operator==(const LocalCyclotomicLevel& o) const = default;
};

// Gal(level / Q_p) = Z/F x U(p^k). The Z/F coordinate is the power of the
// arithmetic Frobenius; the unit coordinate acts on zeta_{p^k} by its power.
class LocalLevelGroup {
public:
    explicit LocalLevelGroup(const LocalCyclotomicLevel& level);

    const LocalCyclotomicLevel& level() const { return level_; }
    const FinAbGroup& group() const { return pres_.group; }
    const UnitGroup& wild_units() const { return wild_; }

    Element element(long frobenius_power, long unit_residue) const;
    std::pair<long, long> decode(const Element& x) const; // (frob power, residue)

    Element frobenius() const { return element(1, 1); }
    Subgroup inertia() const;
    // {0} x (units congruent to 1 mod p^i); the whole inertia for i <= 0.
    Subgroup congruence_subgroup(long i) const;

private:
    LocalCyclotomicLevel level_;
    UnitGroup wild_;
    CyclicPresentation pres_;
};

// Q_p^x modulo <p^F> (1 + p^k Z_p): the finite quotient of the valuation-
// times-units presentation of the local multiplicative group.
class TruncatedLocalUnits {
public:
    explicit TruncatedLocalUnits(const LocalCyclotomicLevel& level);

    const LocalCyclotomicLevel& level() const { return level_; }
    const FinAbGroup& group() const { return pres_.group; }
    const UnitGroup& unit_part() const { return units_; }

    Element element(long valuation, long unit_residue) const;
    std::pair<long, long> decode(const Element& x) const; // (valuation mod F, residue)

    Element uniformizer() const { return element(1, 1); }
    Subgroup unit_subgroup() const;
    Subgroup congruence_subgroup(long i) const;

private:
    LocalCyclotomicLevel level_;
    UnitGroup units_;
    CyclicPresentation pres_;
};

// Finite abelian extension of Q_p fixed by a subgroup of the level group.
struct LocalFieldSpec {
    LocalLevelGroup gal;
    Subgroup fixing;

    LocalFieldSpec(LocalLevelGroup g, Subgroup s);
    const LocalCyclotomicLevel& level() const { return gal.level(); }
    Int degree() const { return fixing.index(); } // d

    bool operator==(const LocalFieldSpec& o) const;
    bool operator!=(const LocalFieldSpec& o) const { return !(*this == o); }
};

// Gal(L/Q_p) as a quotient of the level group, with the projection.
Quotient galois_quotient(const LocalFieldSpec& spec);

Int ramification_index(const LocalFieldSpec& spec); // e
Int residue_degree(const LocalFieldSpec& spec);     // f

// Upper-numbering ramification subgroup of Gal(L/Q_p) at rational u >= -1,
// computed from the closed-form filtration of the level group pushed through
// the quotient.
Subgroup ramification_upper(const LocalFieldSpec& spec, const Rat& u);

// Lower numbering via the inverse Herbrand transition.
Subgroup ramification_lower(const LocalFieldSpec& spec, long i);

// |G^0|, |G^1|, ..., |G^k| of Gal(L/Q_p).
std::vector<Int> upper_jump_orders(const LocalFieldSpec& spec);

// psi derived from the upper filtration, phi derived from the lower orders;
// the two are mutually inverse exactly when the filtration is consistent.
Rat herbrand_psi(const LocalFieldSpec& spec, const Rat& u);
Rat herbrand_phi(const LocalFieldSpec& spec, const Rat& v);

// Artin conductor exponent: least a >= 0 with trivial upper group at a.
long conductor_exponent(const LocalFieldSpec& spec);

struct ReciprocityMap {
    TruncatedLocalUnits units;
    LocalLevelGroup gal;
    GroupHom hom; // isomorphism: p |-> Frobenius, u |-> (zeta |-> zeta^{u^-1})
};

ReciprocityMap reciprocity_map(const LocalCyclotomicLevel& level);

// Preimage of the fixing subgroup under reciprocity; index = degree.
Subgroup norm_group(const LocalFieldSpec& spec);

// Q_p^x / Nm(L^x) at level, isomorphic to Gal(L/Q_p).
Quotient underline_d(const LocalFieldSpec& spec);

bool is_abelian_consistency(const LocalFieldSpec& spec);
// The same check against externally supplied (possibly corrupted) data.
bool is_abelian_consistency(const LocalFieldSpec& spec, const Subgroup& claimed_norm_group);

// Field components of Q_p[Z/n], one LocalFieldSpec per component; their
// degrees sum to n.
std::vector<LocalFieldSpec> group_ring_components(long p, long n);

// Restriction to a coarser level; level_error if the field does not fit.
LocalFieldSpec reduce_to_level(const LocalFieldSpec& spec, const LocalCyclotomicLevel& target);

// Least level containing the field: F = minimal Frobenius power landing in
// the fixing subgroup, k = conductor exponent.
LocalCyclotomicLevel minimal_level(const LocalFieldSpec& spec);

LocalFieldSpec reduce_to_minimal_level(const LocalFieldSpec& spec);

} // namespace abrec

#endif
