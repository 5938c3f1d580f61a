#include "abrec/reconstruct.hpp"

#include "abrec/errors.hpp"

#include <json.hpp>

#include <algorithm>

namespace abrec {

LocalFieldSpec reconstruct_local(const LocalDatum& datum)
{
    if (datum.d != datum.e * datum.f || datum.d < 1)
        throw oracle_corruption_error("packet violates d = e*f");
    if (datum.units_level.p != datum.p)
        throw oracle_corruption_error("packet level prime disagrees with p");

    FinAbGroup dbar;
    try {
        dbar = FinAbGroup(datum.underline_invariants);
    } catch (const error& e) {
        throw oracle_corruption_error(std::string("bad underline_d invariants: ") + e.what());
    }
    if (dbar.order() != datum.d)
        throw oracle_corruption_error("underline_d order disagrees with d");

    ReciprocityMap rec = reciprocity_map(datum.units_level);
    if (datum.projection.size() != rec.units.group().rank())
        throw oracle_corruption_error("projection has the wrong number of columns");
    GroupHom pi = [&]() {
        try {
            return GroupHom(rec.units.group(), dbar, datum.projection);
        } catch (const error& e) {
            throw oracle_corruption_error(std::string("bad projection: ") + e.what());
        }
    }();
    if (!pi.is_surjective())
        throw level_error("units truncation cannot cover underline_d at this level");

    // k(D): fixed field of the reciprocity image of ker(units -> underline_d).
    Subgroup fixing = rec.hom.image_of(pi.kernel());
    LocalFieldSpec spec(rec.gal, std::move(fixing));

    if (spec.degree() != datum.d || ramification_index(spec) != datum.e ||
        residue_degree(spec) != datum.f)
        throw oracle_corruption_error("reconstructed e, f, d disagree with the packet");
    if (!(minimal_level(spec) == datum.units_level))
        throw level_error("packet level is not the minimal level of its own field");

    // The packet's inertia data must describe the inertia of the quotient.
    Subgroup inertia_d = pi.image_of(rec.units.unit_subgroup());
    std::vector<Element> claimed;
    for (long r : datum.inertia_generators)
        claimed.push_back(pi.apply(rec.units.element(0, r)));
    if (Subgroup::from_generators(dbar, claimed) != inertia_d)
        throw oracle_corruption_error("inertia generators disagree with underline_d");

    std::vector<Element> claimed_wild;
    for (long r : datum.wild_inertia_generators)
        claimed_wild.push_back(pi.apply(rec.units.element(0, r)));
    if (Subgroup::from_generators(dbar, claimed_wild) != sylow_subgroup(inertia_d, Int(datum.p)))
        throw oracle_corruption_error("wild inertia generators are not the p-part of inertia");

    if (datum.frobenius) {
        Element diff = dbar.add(pi.apply(rec.units.uniformizer()), dbar.negate(*datum.frobenius));
        if (!inertia_d.contains(diff))
            throw oracle_corruption_error("frobenius coset disagrees with the uniformizer image");
    }
    return spec;
}

Int local_conductor_contribution(const LocalFieldSpec& spec)
{
    return int_pow(Int(spec.level().p), static_cast<unsigned long>(conductor_exponent(spec)));
}

long compute_n_g(const OracleDump& dump)
{
    Int n = 1;
    for (const LocalDatum& datum : dump.data) {
        if (datum.e == 1)
            continue;
        n *= local_conductor_contribution(reconstruct_local(datum));
    }
    return to_ll(n);
}

CyclotomicImage cyclotomic_image(const OracleDump& dump, long n_g)
{
    UnitGroup u(n_g);
    std::vector<Element> all_gens, low_gens;
    std::vector<CertificationRecord> log;
    bool certified = true;
    long low_witnesses = 0;

    for (const LocalDatum& datum : dump.data) {
        if (datum.e != 1)
            continue;
        if (n_g > 1 && n_g % datum.p == 0) {
            log.push_back({datum.p, "unramified-coprime", false,
                           "unramified prime divides the reconstructed modulus"});
            certified = false;
            continue;
        }
        // Frobenius of the base field at a place over p acts on zeta_{n_g}
        // by the residue norm p^{f_p}.
        Element gen = u.element(n_g == 1 ? 0 : mod_pow(datum.p, to_ll(datum.f), n_g));
        all_gens.push_back(gen);
        if (2 * datum.p <= dump.bound) {
            low_gens.push_back(gen);
            ++low_witnesses;
        }
    }

    Subgroup h_full = Subgroup::from_generators(u.group(), all_gens);
    Subgroup h_low = Subgroup::from_generators(u.group(), low_gens);

    // Order test: for the recovered subgroup, the order of p mod H must equal
    // the packet's inertia degree, for every unramified prime in the dump.
    Quotient q = quotient(u.group(), h_full);
    for (const LocalDatum& datum : dump.data) {
        if (datum.e != 1 || (n_g > 1 && n_g % datum.p == 0))
            continue;
        Element cls = q.projection.apply(u.element(n_g == 1 ? 0 : datum.p % n_g));
        bool ok = q.group.element_order(cls) == datum.f;
        if (!ok) {
            log.push_back({datum.p, "frobenius-order", false,
                           "order of p mod H does not match the packet's f"});
            certified = false;
        }
    }
    log.push_back({0, "frobenius-order", certified, "order test over all unramified packets"});

    if (n_g == 1) {
        log.push_back({0, "stabilization", true, "trivial modulus"});
    } else {
        bool stable = low_witnesses > 0 && h_low == h_full;
        log.push_back({0, "stabilization", stable,
                       stable ? "subgroup already spanned by the lower half of the prime range"
                              : "subgroup not stable over the top half of the prime range"});
        certified = certified && stable;
    }
    return CyclotomicImage{std::move(h_full), certified, std::move(log)};
}

ReconstructionReport reconstruct_global(const OracleDump& dump)
{
    std::vector<CertificationRecord> log;
    bool certified = true;

    Int n_acc = 1;
    for (const LocalDatum& datum : dump.data) {
        try {
            LocalFieldSpec ls = reconstruct_local(datum);
            if (datum.e > 1)
                n_acc *= local_conductor_contribution(ls);
        } catch (const error& e) {
            log.push_back({datum.p, "local-consistency", false, e.what()});
            certified = false;
        }
    }
    log.push_back({0, "local-consistency", certified, "per-packet reconstruction"});
    long n_g = to_ll(n_acc);

    CyclotomicImage image = cyclotomic_image(dump, n_g);
    certified = certified && image.certified;
    for (CertificationRecord& r : image.log)
        log.push_back(std::move(r));

    UnitGroup u(n_g);
    AbelianFieldSpec raw(n_g, u.subgroup_residues(image.subgroup));
    AbelianFieldSpec field = normalize(raw);

    // For an honest dump n_g is the conductor of the recovered field; a
    // strictly smaller conductor betrays a corrupted exponent.
    bool cond_ok = conductor(raw) == n_g;
    log.push_back({0, "conductor-identity", cond_ok,
                   cond_ok ? "n_g equals the conductor of the recovered field"
                           : "recovered field has conductor smaller than n_g"});
    certified = certified && cond_ok;

    ReconstructionReport report{n_g,
                                raw.subgroup_generator_residues(),
                                std::move(field),
                                certified,
                                std::move(log),
                                certified ? std::string() : std::string("uncertified")};
    return report;
}

ReconstructionReport roundtrip_check(const AbelianFieldSpec& spec, long bound)
{
    OracleDump dump = make_dump(spec, bound);
    ReconstructionReport report = reconstruct_global(dump);
    if (report.certified)
        report.verdict = report.field == normalize(spec) ? "match" : "mismatch";
    return report;
}

std::string report_to_json(const ReconstructionReport& report)
{
    nlohmann::json j;
    j["n_g"] = report.n_g;
    j["subgroup_generators"] = report.subgroup_generators;
    j["certified"] = report.certified;
    if (report.verdict.empty())
        j["verdict"] = nullptr;
    else
        j["verdict"] = report.verdict;
    j["log"] = nlohmann::json::array();
    for (const CertificationRecord& r : report.log) {
        nlohmann::json entry;
        if (r.p == 0)
            entry["p"] = nullptr;
        else
            entry["p"] = r.p;
        entry["check"] = r.check;
        entry["ok"] = r.ok;
        entry["detail"] = r.detail;
        j["log"].push_back(entry);
    }
    return j.dump(2) + "\n";
}

long default_prime_bound(long n)
{
    return std::max(100L, 3 * n);
}

} // namespace abrec
