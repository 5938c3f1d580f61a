#ifndef ABREC_RECONSTRUCT_HPP
#define ABREC_RECONSTRUCT_HPP

#include "abrec/oracle.hpp"

#include <string>
#include <vector>

namespace abrec {

struct CertificationRecord {
    long p; // 0 for dump-wide checks
    std::string check;
    bool ok;
    std::string detail;
};

struct ReconstructionReport {
    long n_g;
    std::vector<long> subgroup_generators; // of the recovered H <= U(n_g)
    AbelianFieldSpec field;                // normalized
    bool certified;
    std::vector<CertificationRecord> log;
    // "match" / "mismatch" after comparison, "uncertified" when certification
    // failed, empty for an uncompared certified run.
    std::string verdict;
};

// Rebuild the local field from the packet's p and underline_d data alone;
// every redundant field of the packet is cross-checked against the result.
LocalFieldSpec reconstruct_local(const LocalDatum& datum);

// p^(Artin conductor exponent); 1 exactly when unramified.
Int local_conductor_contribution(const LocalFieldSpec& spec);

// Product of the local contributions of the ramified packets.
long compute_n_g(const OracleDump& dump);

struct CyclotomicImage {
    Subgroup subgroup; // <= U(n_g), generated by Frobenius norms p^{f_p}
    bool certified;
    std::vector<CertificationRecord> log;
};

// Generate-then-certify: the subgroup the unramified Frobenius data spans,
// the per-prime order test, and the half-range stabilization check.
CyclotomicImage cyclotomic_image(const OracleDump& dump, long n_g);

ReconstructionReport reconstruct_global(const OracleDump& dump);

// Dump the spec, reconstruct blind, compare normalized specs.
ReconstructionReport roundtrip_check(const AbelianFieldSpec& spec, long bound);

std::string report_to_json(const ReconstructionReport& report);

// Default sampling bound for a given modulus: max(100, 3 n).
long default_prime_bound(long n);

} // namespace abrec

#endif
