#ifndef ABREC_ORACLE_HPP
#define ABREC_ORACLE_HPP

#include "abrec/local_field.hpp"
#include "abrec/number_field.hpp"

#include <optional>
#include <string>
#include <vector>

namespace abrec {

// Decomposition data of a normalized field at p, phrased on the global side.
struct Localization {
    LocalFieldSpec spec; // the completion, at its minimal level
    Int e, f, g;
    Quotient global_quotient;     // U(n) ->> U(n)/H = Gal(K/Q)
    Subgroup inertia_kernel;      // ker(U(n) -> U(n')) <= U(n)
    Subgroup inertia_image;       // <= U(n)/H
    long frobenius_residue;       // the unit  = p mod n', = 1 mod p^k
    Subgroup decomposition_image; // <inertia_image, frobenius> <= U(n)/H
};

Localization localize(const AbelianFieldSpec& spec, long p);

// One per-prime oracle packet: exactly the local invariants, nothing global.
struct LocalDatum {
    long p;
    Int d, e, f;
    // Frobenius as a coset representative in underline_d coordinates, absent
    // when it is redundant (f = 1).
    std::optional<std::vector<Int>> frobenius;
    std::vector<long> inertia_generators;      // unit residues mod p^k
    std::vector<long> wild_inertia_generators; // residues generating the p-part
    LocalCyclotomicLevel units_level;          // truncation of the local units
    std::vector<Int> underline_invariants;     // invariant factors of Q_p^x/Nm
    std::vector<std::vector<Int>> projection;  // image of each units generator
    std::vector<long> mu_levels;               // wild root-of-unity levels present
};

LocalDatum extract(const AbelianFieldSpec& spec, long p);

struct OracleDump {
    long bound;
    std::vector<LocalDatum> data; // ascending p, every prime <= bound once
};

// Normalizes the spec, then extracts every prime up to the bound.
OracleDump make_dump(const AbelianFieldSpec& spec, long bound);

// Canonical bytes; identical inputs give identical output.
std::string dump_to_json(const OracleDump& dump);

// Strict: unknown keys anywhere (in particular any ground-truth field such
// as "modulus" or "subgroup_generators") raise schema_error.
OracleDump dump_from_json(const std::string& text);

} // namespace abrec

#endif
