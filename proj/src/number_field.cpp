#include "abrec/number_field.hpp"

#include "abrec/errors.hpp"

#include <json.hpp>

#include <algorithm>

namespace abrec {

namespace {

long collapse_modulus(long n)
{
    if (n <= 0)
        throw error("field modulus must be positive");
    if (n % 4 == 2)
        return n / 2; // Q(zeta_{2m}) = Q(zeta_m) for odd m
    return n;
}

std::vector<long> collapse_residues(long n, const std::vector<long>& rs)
{
    long m = collapse_modulus(n);
    if (m == n)
        return rs;
    std::vector<long> out;
    out.reserve(rs.size());
    for (long r : rs)
        out.push_back(((r % m) + m) % m);
    return out;
}

std::vector<long> divisors(long n)
{
    std::vector<long> out;
    for (long d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d)
                out.push_back(n / d);
        }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

AbelianFieldSpec::AbelianFieldSpec(long modulus, const std::vector<long>& gens)
    : modulus_(collapse_modulus(modulus)),
      units_(modulus_),
      fixing_(units_.subgroup_from_residues(collapse_residues(modulus, gens)))
{
}

AbelianFieldSpec::AbelianFieldSpec(long modulus, Subgroup fixing_subgroup)
    : modulus_(modulus), units_(modulus), fixing_(std::move(fixing_subgroup))
{
    if (modulus != collapse_modulus(modulus))
        throw error("subgroup constructor requires a collapsed modulus");
    if (fixing_.ambient() != units_.group())
        throw ambient_mismatch_error("fixing subgroup does not live in U(n)");
}

AbelianFieldSpec AbelianFieldSpec::rationals()
{
    return AbelianFieldSpec(1, std::vector<long>{});
}

std::vector<long> AbelianFieldSpec::subgroup_generator_residues() const
{
    std::vector<long> out;
    for (const Element& g : fixing_.canonical_generators())
        out.push_back(units_.residue(g));
    std::sort(out.begin(), out.end());
    return out;
}

bool AbelianFieldSpec::operator==(const AbelianFieldSpec& o) const
{
    return modulus_ == o.modulus_ && fixing_ == o.fixing_;
}

long conductor(const AbelianFieldSpec& spec)
{
    for (long m : divisors(spec.modulus())) {
        if (m % 4 == 2)
            continue;
        if (spec.fixing_subgroup().contains_subgroup(spec.units().reduction_kernel(m)))
            return m;
    }
    return spec.modulus();
}

bool is_normalized(const AbelianFieldSpec& spec)
{
    return conductor(spec) == spec.modulus();
}

AbelianFieldSpec normalize(const AbelianFieldSpec& spec)
{
    long m = conductor(spec);
    if (m == spec.modulus())
        return spec;
    UnitGroup target(m);
    GroupHom red = spec.units().reduction_to(target);
    Subgroup image = red.image_of(spec.fixing_subgroup());
    return AbelianFieldSpec(m, target.subgroup_residues(image));
}

std::vector<AbelianFieldSpec> enumerate_abelian_fields(long conductor_bound)
{
    if (conductor_bound < 1)
        throw error("conductor bound must be at least 1");
    std::vector<AbelianFieldSpec> out;
    for (long n = 1; n <= conductor_bound; ++n) {
        if (n % 4 == 2)
            continue;
        UnitGroup u(n);

        // All subgroups of U(n) by closing under single-generator joins.
        std::vector<Subgroup> subs{Subgroup::trivial(u.group())};
        auto known = [&subs](const Subgroup& s) {
            return std::any_of(subs.begin(), subs.end(), [&s](const Subgroup& t) { return t == s; });
        };
        std::vector<Element> all = u.group().all_elements();
        for (size_t head = 0; head < subs.size(); ++head) {
            Subgroup base = subs[head];
            for (const Element& x : all) {
                Subgroup bigger = base.join(Subgroup::from_generators(u.group(), {x}));
                if (!known(bigger))
                    subs.push_back(bigger);
            }
        }

        for (const Subgroup& h : subs) {
            AbelianFieldSpec spec(n, h);
            if (conductor(spec) == n)
                out.push_back(std::move(spec));
        }
    }
    std::sort(out.begin(), out.end(), [](const AbelianFieldSpec& a, const AbelianFieldSpec& b) {
        if (a.modulus() != b.modulus())
            return a.modulus() < b.modulus();
        return a.subgroup_generator_residues() < b.subgroup_generator_residues();
    });
    return out;
}

DirichletCharacterGroup character_group(const AbelianFieldSpec& spec)
{
    const UnitGroup& u = spec.units();
    Quotient q = quotient(u.group(), spec.fixing_subgroup());
    const std::vector<Int>& d = q.group.invariant_factors();
    Int e = q.group.exponent();
    FinAbGroup cyclic(e == 1 ? std::vector<Int>{} : std::vector<Int>{e});

    // Kernels of the candidate conductors, smallest first.
    std::vector<long> divs;
    for (long m : divisors(spec.modulus()))
        if (m % 4 != 2)
            divs.push_back(m);
    std::vector<std::vector<Element>> kernel_gens;
    for (long m : divs) {
        std::vector<Element> gens;
        for (const Element& g : u.reduction_kernel(m).canonical_generators())
            gens.push_back(g);
        kernel_gens.push_back(std::move(gens));
    }

    std::vector<Element> basis_images;
    for (size_t i = 0; i < u.group().rank(); ++i)
        basis_images.push_back(q.projection.apply(u.group().basis_element(i)));

    DirichletCharacterGroup out;
    out.modulus = spec.modulus();
    out.exponent = e;
    for (const Element& t : q.group.all_elements()) {
        // chi_t(x) = sum_j t_j * proj(x)_j * (e / d_j)  in Z/e
        std::vector<Element> images;
        for (const Element& bi : basis_images) {
            Int val = 0;
            for (size_t j = 0; j < d.size(); ++j)
                val += t[j] * bi[j] * (e / d[j]);
            images.push_back(cyclic.reduce(e == 1 ? Element{} : Element{val}));
        }
        GroupHom chi(u.group(), cyclic, images);

        long cond = spec.modulus();
        for (size_t mi = 0; mi < divs.size(); ++mi) {
            bool trivial_on_kernel = true;
            for (const Element& g : kernel_gens[mi])
                if (!cyclic.is_zero(chi.apply(g))) {
                    trivial_on_kernel = false;
                    break;
                }
            if (trivial_on_kernel) {
                cond = divs[mi];
                break;
            }
        }
        out.characters.push_back(DirichletCharacter{std::move(chi), cond});
    }
    std::sort(out.characters.begin(), out.characters.end(),
              [](const DirichletCharacter& a, const DirichletCharacter& b) {
                  if (a.conductor != b.conductor)
                      return a.conductor < b.conductor;
                  return a.hom.images() < b.hom.images();
              });
    return out;
}

std::string field_spec_to_json(const AbelianFieldSpec& spec)
{
    nlohmann::json j;
    j["modulus"] = spec.modulus();
    j["subgroup_generators"] = spec.subgroup_generator_residues();
    return j.dump(2) + "\n";
}

AbelianFieldSpec field_spec_from_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw schema_error(std::string("field spec is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw schema_error("field spec must be a JSON object");
    for (const auto& item : j.items())
        if (item.key() != "modulus" && item.key() != "subgroup_generators")
            throw schema_error("unexpected key in field spec: " + item.key());
    if (!j.contains("modulus") || !j["modulus"].is_number_integer())
        throw schema_error("field spec needs an integer \"modulus\"");
    if (!j.contains("subgroup_generators") || !j["subgroup_generators"].is_array())
        throw schema_error("field spec needs a \"subgroup_generators\" array");
    long modulus = j["modulus"].get<long>();
    if (modulus <= 0)
        throw schema_error("modulus must be positive");
    std::vector<long> gens;
    for (const auto& v : j["subgroup_generators"]) {
        if (!v.is_number_integer())
            throw schema_error("subgroup generators must be integers");
        gens.push_back(v.get<long>());
    }
    try {
        return AbelianFieldSpec(modulus, gens);
    } catch (const invalid_element_error& e) {
        throw schema_error(std::string("invalid subgroup generator: ") + e.what());
    }
}

} // namespace abrec
