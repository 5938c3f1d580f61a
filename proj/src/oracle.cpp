#include "abrec/oracle.hpp"

#include "abrec/errors.hpp"

#include <json.hpp>

#include <algorithm>

namespace abrec {

Localization localize(const AbelianFieldSpec& spec, long p)
{
    if (!is_prime(p))
        throw not_prime_error("localize: " + std::to_string(p) + " is not prime");
    if (!is_normalized(spec))
        throw non_normalized_error("localize requires a normalized field spec");

    const long n = spec.modulus();
    const UnitGroup& u = spec.units();
    const long k = n == 1 ? 0 : p_adic_valuation(n, p);
    long nprime = n;
    for (long t = 0; t < k; ++t)
        nprime /= p;

    Quotient q = quotient(u.group(), spec.fixing_subgroup());
    Subgroup inertia_kernel = u.reduction_kernel(nprime);
    Subgroup inertia_image = q.projection.image_of(inertia_kernel);

    long pk = n / nprime;
    long frobenius_residue = crt_pair(1, pk, p % nprime, nprime);
    Element frob_in_quotient = q.projection.apply(u.element(frobenius_residue));

    Int e = inertia_image.order();
    Quotient unramified_part = quotient(q.group, inertia_image);
    Int f = unramified_part.group.element_order(unramified_part.projection.apply(frob_in_quotient));
    Int d = e * f;
    Int g = spec.degree() / d;

    Subgroup decomposition_image =
        inertia_image.join(Subgroup::from_generators(q.group, {frob_in_quotient}));

    // Gal(Q_p(zeta_n)/Q_p) = Z/ord_{n'}(p) x U(p^k), embedded into U(n) by
    // (frob, u) |-> (p mod n', u mod p^k).
    long F_big = multiplicative_order(p, nprime);
    LocalLevelGroup big(LocalCyclotomicLevel{p, F_big, k});
    std::vector<Element> embed_images;
    for (size_t i = 0; i < big.group().rank(); ++i) {
        auto [j, w] = big.decode(big.group().basis_element(i));
        long residue = crt_pair(w == 0 ? (1 % pk) : w, pk, mod_pow(p, j, nprime), nprime);
        embed_images.push_back(u.element(residue));
    }
    GroupHom embedding(big.group(), u.group(), embed_images);
    Subgroup fixing_big = embedding.preimage(spec.fixing_subgroup());
    LocalFieldSpec completion = reduce_to_minimal_level(LocalFieldSpec(big, fixing_big));

    if (completion.degree() != d || ramification_index(completion) != e ||
        residue_degree(completion) != f)
        throw error("localize: completion invariants disagree with the global picture");

    Localization out{std::move(completion),
                     e,
                     f,
                     g,
                     std::move(q),
                     std::move(inertia_kernel),
                     std::move(inertia_image),
                     frobenius_residue,
                     std::move(decomposition_image)};
    return out;
}

LocalDatum extract(const AbelianFieldSpec& spec, long p)
{
    Localization loc = localize(spec, p);
    const LocalCyclotomicLevel level = loc.spec.level();

    ReciprocityMap rec = reciprocity_map(level);
    Subgroup norms = norm_group(loc.spec);
    Quotient und = quotient(rec.units.group(), norms);

    LocalDatum datum;
    datum.p = p;
    datum.d = loc.e * loc.f;
    datum.e = loc.e;
    datum.f = loc.f;
    if (loc.f > 1)
        datum.frobenius = und.projection.apply(rec.units.uniformizer());
    datum.inertia_generators = rec.units.unit_part().generator_residues();
    {
        const UnitGroup& wild_units = rec.units.unit_part();
        Subgroup wild = sylow(wild_units.group(), Int(p));
        for (const Element& g : wild.canonical_generators())
            datum.wild_inertia_generators.push_back(wild_units.residue(g));
        std::sort(datum.wild_inertia_generators.begin(), datum.wild_inertia_generators.end());
    }
    datum.units_level = level;
    datum.underline_invariants = und.group.invariant_factors();
    for (size_t i = 0; i < rec.units.group().rank(); ++i)
        datum.projection.push_back(und.projection.apply(rec.units.group().basis_element(i)));
    if (level.wild_exponent >= 1)
        datum.mu_levels.push_back(level.prime_power());
    return datum;
}

OracleDump make_dump(const AbelianFieldSpec& spec, long bound)
{
    if (bound < 2)
        throw error("oracle dump needs a prime bound >= 2");
    AbelianFieldSpec normal = normalize(spec);
    OracleDump dump;
    dump.bound = bound;
    for (long p : primes_up_to(bound))
        dump.data.push_back(extract(normal, p));
    return dump;
}

namespace {

using nlohmann::json;

json int_to_json(const Int& x)
{
    return json(to_ll(x));
}

json datum_to_json(const LocalDatum& d)
{
    json j;
    j["p"] = d.p;
    j["d"] = int_to_json(d.d);
    j["e"] = int_to_json(d.e);
    j["f"] = int_to_json(d.f);
    if (d.frobenius) {
        json coords = json::array();
        for (const Int& c : *d.frobenius)
            coords.push_back(int_to_json(c));
        j["frobenius"] = coords;
    } else {
        j["frobenius"] = nullptr;
    }
    j["inertia"] = d.inertia_generators;
    j["wild_inertia"] = d.wild_inertia_generators;
    json und;
    und["invariant_factors"] = json::array();
    for (const Int& x : d.underline_invariants)
        und["invariant_factors"].push_back(int_to_json(x));
    und["level"] = json{{"f", d.units_level.unramified_exponent},
                        {"k", d.units_level.wild_exponent}};
    und["projection"] = json::array();
    for (const std::vector<Int>& col : d.projection) {
        json c = json::array();
        for (const Int& x : col)
            c.push_back(int_to_json(x));
        und["projection"].push_back(c);
    }
    j["underline_d"] = und;
    j["mu_levels"] = d.mu_levels;
    return j;
}

void require_keys(const json& j, const std::vector<std::string>& keys, const std::string& where)
{
    if (!j.is_object())
        throw schema_error(where + " must be a JSON object");
    for (const auto& item : j.items())
        if (std::find(keys.begin(), keys.end(), item.key()) == keys.end())
            throw schema_error("unexpected key \"" + item.key() + "\" in " + where);
    for (const std::string& k : keys)
        if (!j.contains(k))
            throw schema_error("missing key \"" + k + "\" in " + where);
}

long get_long(const json& j, const std::string& key, const std::string& where)
{
    if (!j[key].is_number_integer())
        throw schema_error("\"" + key + "\" in " + where + " must be an integer");
    return j[key].get<long>();
}

std::vector<long> get_long_array(const json& j, const std::string& where)
{
    if (!j.is_array())
        throw schema_error(where + " must be an array");
    std::vector<long> out;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw schema_error(where + " must contain integers");
        out.push_back(v.get<long>());
    }
    return out;
}

LocalDatum datum_from_json(const json& j)
{
    require_keys(j, {"p", "d", "e", "f", "frobenius", "inertia", "wild_inertia", "underline_d",
                     "mu_levels"},
                 "oracle packet");
    LocalDatum d;
    d.p = get_long(j, "p", "packet");
    d.d = get_long(j, "d", "packet");
    d.e = get_long(j, "e", "packet");
    d.f = get_long(j, "f", "packet");
    if (!is_prime(d.p))
        throw schema_error("packet prime " + std::to_string(d.p) + " is not prime");
    if (d.d != d.e * d.f || d.d < 1)
        throw schema_error("packet at p = " + std::to_string(d.p) + " violates d = e*f");
    if (j["frobenius"].is_null()) {
        if (d.f != 1)
            throw schema_error("frobenius may be omitted only when f = 1");
    } else {
        std::vector<long> coords = get_long_array(j["frobenius"], "frobenius");
        d.frobenius = std::vector<Int>(coords.begin(), coords.end());
    }
    d.inertia_generators = get_long_array(j["inertia"], "inertia");
    d.wild_inertia_generators = get_long_array(j["wild_inertia"], "wild_inertia");

    const json& und = j["underline_d"];
    require_keys(und, {"invariant_factors", "level", "projection"}, "underline_d");
    require_keys(und["level"], {"f", "k"}, "underline_d level");
    d.units_level = LocalCyclotomicLevel{d.p, get_long(und["level"], "f", "level"),
                                         get_long(und["level"], "k", "level")};
    for (long x : get_long_array(und["invariant_factors"], "invariant_factors"))
        d.underline_invariants.emplace_back(x);
    if (!und["projection"].is_array())
        throw schema_error("projection must be an array");
    for (const auto& col : und["projection"]) {
        std::vector<long> coords = get_long_array(col, "projection column");
        d.projection.emplace_back(coords.begin(), coords.end());
    }
    d.mu_levels = get_long_array(j["mu_levels"], "mu_levels");
    return d;
}

} // namespace

std::string dump_to_json(const OracleDump& dump)
{
    json j;
    j["bound"] = dump.bound;
    j["data"] = json::array();
    for (const LocalDatum& d : dump.data)
        j["data"].push_back(datum_to_json(d));
    return j.dump(2) + "\n";
}

OracleDump dump_from_json(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw schema_error(std::string("dump is not valid JSON: ") + e.what());
    }
    require_keys(j, {"bound", "data"}, "oracle dump");
    OracleDump dump;
    dump.bound = get_long(j, "bound", "dump");
    if (dump.bound < 2)
        throw schema_error("dump bound must be >= 2");
    if (!j["data"].is_array())
        throw schema_error("dump data must be an array");
    for (const auto& item : j["data"])
        dump.data.push_back(datum_from_json(item));

    std::vector<long> expected = primes_up_to(dump.bound);
    if (dump.data.size() != expected.size())
        throw schema_error("dump must contain every prime up to the bound exactly once");
    for (size_t i = 0; i < expected.size(); ++i)
        if (dump.data[i].p != expected[i])
            throw schema_error("dump primes must be ascending and complete");
    return dump;
}

} // namespace abrec
