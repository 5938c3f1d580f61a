// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.
// Every check is exact; there are no tolerances to tune.

#include "abrec/corpus.hpp"
#include "abrec/errors.hpp"

#include <json.hpp>

#include <chrono>
#include <iostream>
#include <set>
#include <thread>
#include <vector>

using namespace abrec;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "")
{
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << name;
    if (!detail.empty())
        std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok)
        ++failures;
}

int suggested_jobs()
{
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::min(8u, hw == 0 ? 1u : hw));
}

// Largest character conductor exponent of Gal(L/Q_p): for each character of
// the quotient, the least i with the character trivial on the upper group.
long max_character_exponent(const LocalFieldSpec& spec)
{
    Quotient q = galois_quotient(spec);
    const std::vector<Int>& d = q.group.invariant_factors();
    Int e = q.group.exponent();
    long k = spec.level().wild_exponent;

    std::vector<std::vector<Element>> upper_gens;
    for (long i = 0; i <= k; ++i)
        upper_gens.push_back(ramification_upper(spec, Rat(i)).canonical_generators());

    long worst = 0;
    for (const Element& t : q.group.all_elements()) {
        auto chi = [&](const Element& x) {
            Int val = 0;
            for (size_t j = 0; j < d.size(); ++j)
                val += t[j] * x[j] * (e / d[j]);
            return val % e == 0;
        };
        long a = 0;
        for (long i = k; i >= 0; --i) {
            bool trivial = true;
            for (const Element& g : upper_gens[static_cast<size_t>(i)])
                if (!chi(g)) {
                    trivial = false;
                    break;
                }
            if (!trivial) {
                a = i + 1;
                break;
            }
        }
        worst = std::max(worst, a);
    }
    return worst;
}

// A locally impeccable unramified packet claiming inertia degree f.
LocalDatum unramified_lie(long p, long f)
{
    LocalCyclotomicLevel level{p, f, 0};
    ReciprocityMap rec = reciprocity_map(level);
    Quotient und = quotient(rec.units.group(), Subgroup::trivial(rec.units.group()));
    LocalDatum datum;
    datum.p = p;
    datum.d = f;
    datum.e = 1;
    datum.f = f;
    if (f > 1)
        datum.frobenius = und.projection.apply(rec.units.uniformizer());
    datum.units_level = level;
    datum.underline_invariants = und.group.invariant_factors();
    for (size_t i = 0; i < rec.units.group().rank(); ++i)
        datum.projection.push_back(und.projection.apply(rec.units.group().basis_element(i)));
    return datum;
}

} // namespace

int main()
{
    auto t0 = std::chrono::steady_clock::now();
    int jobs = suggested_jobs();
    std::vector<AbelianFieldSpec> corpus = enumerate_abelian_fields(60);

    // ---- 1. round-trip reconstruction, conductor <= 60, primes <= 500 ----
    RoundtripOptions rt;
    rt.conductor_max = 60;
    rt.prime_bound = 500;
    rt.jobs = jobs;
    RoundtripSummary summary = run_roundtrip(rt);
    {
        bool ok = !summary.rows.empty();
        long matched = 0;
        for (const RoundtripRow& row : summary.rows) {
            if (row.verdict == "match" && row.certified)
                ++matched;
            else
                ok = false;
        }
        report(1, "round-trip reconstruction of the conductor-60 corpus", ok,
               std::to_string(matched) + "/" + std::to_string(summary.rows.size()) +
                   " certified matches");
    }

    // ---- 2. n_G equals the independently computed conductor ----
    {
        bool ok = true;
        for (const RoundtripRow& row : summary.rows)
            if (row.n_g != row.conductor)
                ok = false;
        report(2, "reconstructed n_G equals the conductor", ok);
    }

    // ---- 3. local reconstruction inverts extraction at ramified places ----
    {
        bool ok = true;
        long count = 0;
        for (const AbelianFieldSpec& spec : corpus)
            for (long p : primes_up_to(60)) {
                if (spec.modulus() % p != 0)
                    continue;
                Localization loc = localize(spec, p);
                LocalFieldSpec rebuilt = reconstruct_local(extract(spec, p));
                if (!(rebuilt == loc.spec) || rebuilt.degree() != loc.e * loc.f ||
                    ramification_index(rebuilt) != loc.e || residue_degree(rebuilt) != loc.f)
                    ok = false;
                ++count;
            }
        report(3, "local reconstruction equals localization", ok,
               std::to_string(count) + " ramified localizations");
    }

    // ---- 4. local class field theory consistency ----
    {
        bool ok = true;
        long count = 0;
        for (const AbelianFieldSpec& spec : corpus)
            for (long p : primes_up_to(20)) {
                Localization loc = localize(spec, p);
                Subgroup norms = norm_group(loc.spec);
                TruncatedLocalUnits units(loc.spec.level());
                if (units.group().order() / norms.order() != loc.spec.degree())
                    ok = false;
                Quotient und = underline_d(loc.spec);
                Quotient gal = galois_quotient(loc.spec);
                if (und.group.invariant_factors() != gal.group.invariant_factors())
                    ok = false;
                ++count;
            }
        report(4, "norm-group index and underline_D match the Galois group", ok,
               std::to_string(count) + " localizations");
    }

    // ---- 5. Hasse-Arf and Herbrand consistency ----
    {
        bool ok = true;
        long jumps_checked = 0;
        for (const AbelianFieldSpec& spec : corpus)
            for (long p : primes_up_to(60)) {
                if (spec.modulus() % p != 0)
                    continue;
                LocalFieldSpec local = localize(spec, p).spec;
                long a = conductor_exponent(local);
                if (max_character_exponent(local) != a)
                    ok = false;
                Rat top_psi = herbrand_psi(local, Rat(a));
                long top = to_ll(Int(top_psi.get_num())) + 1;
                std::vector<Int> lower;
                for (long i = 0; i <= top; ++i)
                    lower.push_back(ramification_lower(local, i).order());
                for (long s = 0; s < top; ++s) {
                    if (lower[static_cast<size_t>(s)] == lower[static_cast<size_t>(s) + 1])
                        continue;
                    Rat phi = herbrand_phi(local, Rat(s));
                    if (phi.get_den() != 1) // Hasse-Arf: integral upper jumps
                        ok = false;
                    if (herbrand_psi(local, phi) != Rat(s)) // phi o psi = id
                        ok = false;
                    if (ramification_upper(local, phi) != ramification_lower(local, s))
                        ok = false;
                    ++jumps_checked;
                }
            }
        report(5, "Hasse-Arf integrality and Herbrand round trip", ok,
               std::to_string(jumps_checked) + " filtration jumps");
    }

    // ---- 6. Frobenius cross-check against the period polynomial ----
    {
        FrobeniusOptions fr;
        fr.conductor_max = 40;
        fr.prime_bound = 200;
        fr.degree_cap = 6;
        fr.jobs = jobs;
        FrobeniusSummary frs = run_frobenius(fr);
        long checked = 0;
        for (const FrobeniusRow& row : frs.rows)
            checked += row.primes_checked;
        report(6, "period-polynomial splitting equals localize splitting", frs.all_ok,
               std::to_string(frs.rows.size()) + " fields, " + std::to_string(checked) +
                   " prime checks");
    }

    // ---- 7. group-ring decomposition degrees ----
    {
        bool ok = true;
        for (long p : primes_up_to(50))
            for (long n = 1; n <= 60; ++n) {
                Int total = 0;
                for (const LocalFieldSpec& c : group_ring_components(p, n))
                    total += c.degree();
                if (total != n)
                    ok = false;
            }
        std::multiset<long> degrees;
        for (const LocalFieldSpec& c : group_ring_components(3, 4))
            degrees.insert(to_ll(c.degree()));
        if (degrees != std::multiset<long>{1, 1, 2})
            ok = false;
        report(7, "group-ring component degrees sum to n (and {1,1,2} at p=3, n=4)", ok);
    }

    // ---- 8. conductor-discriminant spot values ----
    {
        bool ok = discriminant(AbelianFieldSpec(4, {})) == 4 &&
                  discriminant(AbelianFieldSpec(5, {})) == 125 &&
                  discriminant(AbelianFieldSpec(12, {11})) == 12;
        report(8, "discriminant spot values 4, 125, 12", ok);
    }

    // ---- 9. blindness and mutation robustness ----
    {
        bool ok = true;

        // schema-level blindness on a few serialized dumps
        const std::set<std::string> allowed{"bound",       "data",        "p",
                                            "d",           "e",           "f",
                                            "frobenius",   "inertia",     "wild_inertia",
                                            "underline_d", "mu_levels",   "invariant_factors",
                                            "level",       "projection",  "k"};
        for (const AbelianFieldSpec& spec :
             {AbelianFieldSpec(12, {11}), AbelianFieldSpec(40, {}), AbelianFieldSpec(9, {})}) {
            nlohmann::json j = nlohmann::json::parse(dump_to_json(make_dump(spec, 60)));
            std::vector<nlohmann::json> stack{j};
            while (!stack.empty()) {
                nlohmann::json node = stack.back();
                stack.pop_back();
                if (node.is_object())
                    for (const auto& item : node.items()) {
                        if (!allowed.count(item.key()))
                            ok = false;
                        stack.push_back(item.value());
                    }
                else if (node.is_array())
                    for (const auto& v : node)
                        stack.push_back(v);
            }
        }

        // 20 fields of degree > 1, spread over the corpus
        std::vector<AbelianFieldSpec> sample;
        for (size_t i = 0; i < corpus.size() && sample.size() < 20; i += 11)
            if (corpus[i].degree() > 1)
                sample.push_back(corpus[i]);
        for (size_t i = 0; sample.size() < 20 && i < corpus.size(); ++i)
            if (corpus[i].degree() > 1)
                sample.push_back(corpus[i]);

        long mutations = 0, caught = 0;
        for (const AbelianFieldSpec& spec : sample) {
            OracleDump honest = make_dump(spec, 500);
            {
                ReconstructionReport base = reconstruct_global(honest);
                if (!base.certified || !(base.field == spec))
                    ok = false; // baseline must match before mutating
            }

            // (a) corrupt one inertia degree with a coherent unramified packet
            for (LocalDatum& d : honest.data) {
                if (d.e != 1 || spec.modulus() % d.p == 0)
                    continue;
                long f_true = to_ll(d.f);
                LocalDatum lie = unramified_lie(d.p, f_true > 1 ? 1 : 2);
                std::swap(d, lie);
                ReconstructionReport rep = reconstruct_global(honest);
                if (rep.certified)
                    rep.verdict = rep.field == spec ? "match" : "mismatch";
                ++mutations;
                if (rep.verdict != "match")
                    ++caught;
                else
                    ok = false;
                std::swap(d, lie); // restore
                break;
            }

            // (b) corrupt one conductor exponent by swapping in the packet of
            // the one-higher wild level
            for (LocalDatum& d : honest.data) {
                if (d.e == 1)
                    continue;
                long p = d.p;
                long wild_modulus = p; // p^(a+1)
                for (long t = 0; t < p_adic_valuation(spec.modulus(), p); ++t)
                    wild_modulus *= p;
                AbelianFieldSpec wilder(wild_modulus, {});
                LocalDatum lie = extract(wilder, p);
                std::swap(d, lie);
                ReconstructionReport rep = reconstruct_global(honest);
                if (rep.certified)
                    rep.verdict = rep.field == spec ? "match" : "mismatch";
                ++mutations;
                if (rep.verdict != "match")
                    ++caught;
                else
                    ok = false;
                std::swap(d, lie);
                break;
            }
        }
        if (sample.size() < 20)
            ok = false;
        report(9, "mutations never produce a silent match", ok,
               std::to_string(caught) + "/" + std::to_string(mutations) + " mutations caught on " +
                   std::to_string(sample.size()) + " fields");
    }

    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
              << summary.rows.size() << " corpus fields, " << secs << " s)" << std::endl;
    return failures == 0 ? 0 : 1;
}
