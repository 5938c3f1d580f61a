#include "abrec/corpus.hpp"

#include "abrec/errors.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

namespace abrec {

namespace {

std::string generators_to_string(const std::vector<long>& gens)
{
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i)
            out << ",";
        out << gens[i];
    }
    out << "]";
    return out.str();
}

// Run fn(i) for i < count on `jobs` threads; exceptions rethrown.
template <typename Fn> void parallel_for(long count, int jobs, Fn fn)
{
    int width = std::max(1, jobs);
    if (width == 1) {
        for (long i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(width));
    for (int w = 0; w < width; ++w)
        workers.emplace_back([&, w]() {
            try {
                for (long i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                    fn(i);
            } catch (...) {
                errors[static_cast<size_t>(w)] = std::current_exception();
            }
        });
    for (std::thread& t : workers)
        t.join();
    for (const std::exception_ptr& e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace

RoundtripSummary run_roundtrip(const RoundtripOptions& options)
{
    long bound = options.prime_bound > 0 ? options.prime_bound
                                         : default_prime_bound(options.conductor_max);
    std::vector<AbelianFieldSpec> fields = enumerate_abelian_fields(options.conductor_max);

    RoundtripSummary summary;
    summary.rows.resize(fields.size());
    parallel_for(static_cast<long>(fields.size()), options.jobs, [&](long i) {
        const AbelianFieldSpec& spec = fields[static_cast<size_t>(i)];
        OracleDump dump = make_dump(spec, bound);
        if (options.inject_corruption) {
            // Bump f on the first packet; certification must notice.
            dump.data.front().f += 1;
        }
        ReconstructionReport rep = reconstruct_global(dump);
        if (rep.certified)
            rep.verdict = rep.field == spec ? "match" : "mismatch";

        RoundtripRow& row = summary.rows[static_cast<size_t>(i)];
        row.conductor = spec.modulus();
        row.generators = spec.subgroup_generator_residues();
        row.degree = to_ll(spec.degree());
        row.n_g = rep.n_g;
        row.certified = rep.certified;
        row.verdict = rep.verdict;
    });
    summary.all_match = std::all_of(summary.rows.begin(), summary.rows.end(),
                                    [](const RoundtripRow& r) { return r.verdict == "match"; });
    return summary;
}

FrobeniusSummary run_frobenius(const FrobeniusOptions& options)
{
    std::vector<AbelianFieldSpec> all = enumerate_abelian_fields(options.conductor_max);
    std::vector<AbelianFieldSpec> fields;
    for (AbelianFieldSpec& spec : all)
        if (spec.degree() <= options.degree_cap)
            fields.push_back(std::move(spec));
    std::vector<long> primes = primes_up_to(options.prime_bound);

    FrobeniusSummary summary;
    summary.rows.resize(fields.size());
    parallel_for(static_cast<long>(fields.size()), options.jobs, [&](long i) {
        const AbelianFieldSpec& spec = fields[static_cast<size_t>(i)];
        FrobeniusRow& row = summary.rows[static_cast<size_t>(i)];
        row.conductor = spec.modulus();
        row.generators = spec.subgroup_generator_residues();
        row.degree = to_ll(spec.degree());
        row.ok = true;
        for (long p : primes) {
            if (spec.modulus() % p == 0)
                continue; // ramified
            try {
                if (!frobenius_crosscheck(spec, p))
                    row.ok = false;
                ++row.primes_checked;
            } catch (const ramified_prime_error&) {
                ++row.primes_skipped;
            }
        }
    });
    summary.all_ok = std::all_of(summary.rows.begin(), summary.rows.end(),
                                 [](const FrobeniusRow& r) { return r.ok; });
    return summary;
}

void print_roundtrip_table(std::ostream& out, const RoundtripSummary& summary)
{
    out << std::left << std::setw(10) << "conductor" << std::setw(24) << "subgroup"
        << std::setw(8) << "degree" << std::setw(8) << "n_g" << std::setw(11) << "certified"
        << "verdict" << "\n";
    for (const RoundtripRow& row : summary.rows)
        out << std::left << std::setw(10) << row.conductor << std::setw(24)
            << generators_to_string(row.generators) << std::setw(8) << row.degree << std::setw(8)
            << row.n_g << std::setw(11) << (row.certified ? "yes" : "no") << row.verdict << "\n";
    long matches = 0;
    for (const RoundtripRow& row : summary.rows)
        matches += row.verdict == "match";
    out << matches << "/" << summary.rows.size() << " fields match\n";
}

void print_frobenius_table(std::ostream& out, const FrobeniusSummary& summary)
{
    out << std::left << std::setw(10) << "conductor" << std::setw(24) << "subgroup"
        << std::setw(8) << "degree" << std::setw(9) << "checked" << std::setw(9) << "skipped"
        << "ok" << "\n";
    for (const FrobeniusRow& row : summary.rows)
        out << std::left << std::setw(10) << row.conductor << std::setw(24)
            << generators_to_string(row.generators) << std::setw(8) << row.degree << std::setw(9)
            << row.primes_checked << std::setw(9) << row.primes_skipped
            << (row.ok ? "yes" : "NO") << "\n";
    out << (summary.all_ok ? "all fields consistent\n" : "INCONSISTENCY FOUND\n");
}

} // namespace abrec
