#ifndef ABREC_CORPUS_HPP
#define ABREC_CORPUS_HPP

#include "abrec/poly_verify.hpp"
#include "abrec/reconstruct.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace abrec {

struct RoundtripOptions {
    long conductor_max = 60;
    long prime_bound = 0; // 0 = max(100, 3 * conductor_max)
    int jobs = 1;
    bool inject_corruption = false;
};

struct RoundtripRow {
    long conductor = 0;
    std::vector<long> generators;
    long degree = 0;
    long n_g = 0;
    bool certified = false;
    std::string verdict;
};

struct RoundtripSummary {
    std::vector<RoundtripRow> rows;
    bool all_match = false;
};

// Reconstruct every abelian field of conductor <= conductor_max from its
// oracle dump and compare. Deterministic row order regardless of jobs.
RoundtripSummary run_roundtrip(const RoundtripOptions& options);

struct FrobeniusOptions {
    long conductor_max = 40;
    long prime_bound = 200;
    long degree_cap = 6;
    int jobs = 1;
};

struct FrobeniusRow {
    long conductor = 0;
    std::vector<long> generators;
    long degree = 0;
    long primes_checked = 0;
    long primes_skipped = 0; // p dividing disc of the period polynomial
    bool ok = false;
};

struct FrobeniusSummary {
    std::vector<FrobeniusRow> rows;
    bool all_ok = false;
};

// Splitting data from the Gaussian-period polynomial against localize, for
// every unramified prime up to the bound.
FrobeniusSummary run_frobenius(const FrobeniusOptions& options);

void print_roundtrip_table(std::ostream& out, const RoundtripSummary& summary);
void print_frobenius_table(std::ostream& out, const FrobeniusSummary& summary);

} // namespace abrec

#endif
