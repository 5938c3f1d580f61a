#include "abrec/oracle.hpp"
#include "abrec/errors.hpp"

#include <doctest.h>
#include <json.hpp>

#include <set>

using namespace abrec;

TEST_CASE("localize Q(zeta_12) at 2")
{
    AbelianFieldSpec spec(12, {});
    Localization loc = localize(spec, 2);
    CHECK(loc.e == 2);
    CHECK(loc.f == 2);
    CHECK(loc.g == 1);
    CHECK(spec.units().subgroup_residues(loc.inertia_kernel) == std::vector<long>{1, 7});
    // the canonical Frobenius representative is = 1 mod 4 and = 2 mod 3
    CHECK(loc.frobenius_residue == 5);
    CHECK(loc.spec.level() == LocalCyclotomicLevel{2, 2, 2});
}

TEST_CASE("localize Q(sqrt 5) at a split prime")
{
    AbelianFieldSpec spec(5, {4});
    Localization loc = localize(spec, 11); // 11 = 1 mod 5
    CHECK(loc.e == 1);
    CHECK(loc.f == 1);
    CHECK(loc.g == 2);
}

TEST_CASE("primes congruent to 1 mod n split completely")
{
    AbelianFieldSpec spec(7, {});
    Localization loc = localize(spec, 29); // 29 = 1 mod 7
    CHECK(loc.e == 1);
    CHECK(loc.f == 1);
    CHECK(loc.g == 6);
}

TEST_CASE("localize rejects non-normalized specs and composite p")
{
    AbelianFieldSpec redundant(24, {11, 13});
    CHECK_THROWS_AS(localize(redundant, 5), non_normalized_error);
    AbelianFieldSpec ok(12, {11});
    CHECK_THROWS_AS(localize(ok, 6), not_prime_error);
}

TEST_CASE("e*f*g equals the degree across a small corpus")
{
    for (const AbelianFieldSpec& spec : enumerate_abelian_fields(20))
        for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
            Localization loc = localize(spec, p);
            CHECK(loc.e * loc.f * loc.g == spec.degree());
            CHECK(loc.spec.degree() == loc.e * loc.f);
            // ramified exactly at the primes dividing the conductor
            CHECK((loc.e > 1) == (spec.modulus() % p == 0));
        }
}

TEST_CASE("frobenius order property: p^f lands in the fixing subgroup")
{
    for (const AbelianFieldSpec& spec : enumerate_abelian_fields(15)) {
        for (long p : {7L, 11L, 13L, 17L, 19L}) {
            if (spec.modulus() % p == 0)
                continue;
            Localization loc = localize(spec, p);
            long norm = mod_pow(p, to_ll(loc.f), spec.modulus());
            if (spec.modulus() == 1)
                continue;
            CHECK(spec.fixing_subgroup().contains(spec.units().element(norm)));
        }
    }
}

TEST_CASE("extract packet of Q(i) at 2 matches the wire example")
{
    AbelianFieldSpec qi(4, {});
    LocalDatum d = extract(qi, 2);
    CHECK(d.p == 2);
    CHECK(d.d == 2);
    CHECK(d.e == 2);
    CHECK(d.f == 1);
    CHECK(!d.frobenius.has_value());
    CHECK(d.inertia_generators == std::vector<long>{3});
    CHECK(d.wild_inertia_generators == std::vector<long>{3});
    CHECK(d.units_level == LocalCyclotomicLevel{2, 1, 2});
    CHECK(d.underline_invariants == std::vector<Int>{2});
    CHECK(d.mu_levels == std::vector<long>{4});
}

TEST_CASE("extract packet of Q(i) at 5 is split")
{
    LocalDatum d = extract(AbelianFieldSpec(4, {}), 5);
    CHECK(d.d == 1);
    CHECK(d.e == 1);
    CHECK(d.f == 1);
    CHECK(d.underline_invariants.empty());
    CHECK(d.mu_levels.empty());
}

TEST_CASE("extract over Q gives trivial packets")
{
    for (long p : {2L, 3L, 13L}) {
        LocalDatum d = extract(AbelianFieldSpec::rationals(), p);
        CHECK(d.d == 1);
        CHECK(d.units_level == LocalCyclotomicLevel{p, 1, 0});
    }
}

TEST_CASE("dump of Q(i) at bound 2 has one packet")
{
    OracleDump dump = make_dump(AbelianFieldSpec(4, {}), 2);
    CHECK(dump.bound == 2);
    REQUIRE(dump.data.size() == 1);
    CHECK(dump.data[0].p == 2);
}

TEST_CASE("dump serialization round-trips byte-identically")
{
    OracleDump dump = make_dump(AbelianFieldSpec(12, {11}), 50);
    std::string bytes = dump_to_json(dump);
    OracleDump reloaded = dump_from_json(bytes);
    CHECK(dump_to_json(reloaded) == bytes);
    CHECK(reloaded.data.size() == dump.data.size());
}

TEST_CASE("dump with a ground-truth key is rejected")
{
    OracleDump dump = make_dump(AbelianFieldSpec(4, {}), 3);
    nlohmann::json j = nlohmann::json::parse(dump_to_json(dump));
    j["modulus"] = 4;
    CHECK_THROWS_AS(dump_from_json(j.dump()), schema_error);

    nlohmann::json j2 = nlohmann::json::parse(dump_to_json(dump));
    j2["data"][0]["modulus"] = 4;
    CHECK_THROWS_AS(dump_from_json(j2.dump()), schema_error);
}

TEST_CASE("dump must list every prime up to the bound exactly once")
{
    OracleDump dump = make_dump(AbelianFieldSpec(4, {}), 10);
    nlohmann::json j = nlohmann::json::parse(dump_to_json(dump));
    j["data"].erase(1); // drop p = 3
    CHECK_THROWS_AS(dump_from_json(j.dump()), schema_error);
}

TEST_CASE("oracle blindness: only the local schema appears in the bytes")
{
    const std::set<std::string> allowed{"bound",       "data",        "p",
                                        "d",           "e",           "f",
                                        "frobenius",   "inertia",     "wild_inertia",
                                        "underline_d", "mu_levels",   "invariant_factors",
                                        "level",       "projection",  "k"};
    for (const AbelianFieldSpec& spec :
         {AbelianFieldSpec(12, {11}), AbelianFieldSpec(24, {}), AbelianFieldSpec(5, {})}) {
        nlohmann::json j = nlohmann::json::parse(dump_to_json(make_dump(spec, 30)));
        std::vector<nlohmann::json> stack{j};
        while (!stack.empty()) {
            nlohmann::json node = stack.back();
            stack.pop_back();
            if (node.is_object())
                for (const auto& item : node.items()) {
                    CHECK(allowed.count(item.key()) == 1);
                    stack.push_back(item.value());
                }
            else if (node.is_array())
                for (const auto& v : node)
                    stack.push_back(v);
        }
    }
}

TEST_CASE("dumps of isomorphic presentations are identical")
{
    // (24, preimage of {1,11}) and (12, {1,11}) present the same field
    std::string a = dump_to_json(make_dump(AbelianFieldSpec(24, {11, 13}), 40));
    std::string b = dump_to_json(make_dump(AbelianFieldSpec(12, {11}), 40));
    CHECK(a == b);
}
