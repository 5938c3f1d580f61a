#include "abrec/abelian_group.hpp"
#include "abrec/errors.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace abrec;

namespace {

Element el(std::initializer_list<long> v)
{
    return Element(v.begin(), v.end());
}

FinAbGroup grp(std::initializer_list<long> v)
{
    return FinAbGroup(std::vector<Int>(v.begin(), v.end()));
}

// Independent oracle: enumerate the subgroup generated by gens by closing
// under addition, without touching the Hermite machinery.
std::set<Element> closure(const FinAbGroup& g, const std::vector<Element>& gens)
{
    std::set<Element> seen{g.zero()};
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Element& e : std::set<Element>(seen))
            for (const Element& x : gens)
                if (seen.insert(g.add(e, x)).second)
                    changed = true;
    }
    return seen;
}

} // namespace

TEST_CASE("subgroup of Z/12 generated by 4")
{
    FinAbGroup g = grp({12});
    Subgroup h = Subgroup::from_generators(g, {el({4})});
    CHECK(h.order() == 3);
    CHECK(h.contains(el({0})));
    CHECK(h.contains(el({4})));
    CHECK(h.contains(el({8})));
    CHECK(!h.contains(el({2})));
    CHECK(!h.contains(el({6})));
}

TEST_CASE("full subgroup of Z/2 x Z/2")
{
    FinAbGroup g = grp({2, 2});
    Subgroup h = Subgroup::from_generators(g, {el({1, 0}), el({0, 1})});
    CHECK(h.is_full());
    CHECK(h == Subgroup::full(g));
}

TEST_CASE("canonical form does not depend on the generating set")
{
    FinAbGroup g = grp({2, 4, 8});
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> coeff(0, 7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Element> gens;
        for (int i = 0; i < 3; ++i)
            gens.push_back(g.reduce(el({coeff(rng), coeff(rng), coeff(rng)})));
        Subgroup h = Subgroup::from_generators(g, gens);

        // Redundant generating set: sums and scalar multiples added.
        std::vector<Element> fat = gens;
        fat.push_back(g.add(gens[0], gens[1]));
        fat.push_back(g.scale(3, gens[2]));
        fat.push_back(g.zero());
        CHECK(Subgroup::from_generators(g, fat) == h);

        CHECK(closure(g, gens).size() == h.order());
    }
}

TEST_CASE("membership agrees with exhaustive enumeration")
{
    FinAbGroup g = grp({2, 6});
    Subgroup h = Subgroup::from_generators(g, {el({1, 3})});
    std::set<Element> ref = closure(g, {el({1, 3})});
    for (const Element& x : g.all_elements())
        CHECK(h.contains(x) == (ref.count(x) > 0));
    CHECK(h.elements().size() == ref.size());
}

TEST_CASE("quotient of Z/6 by {0,3}")
{
    FinAbGroup g = grp({6});
    Subgroup h = Subgroup::from_generators(g, {el({3})});
    Quotient q = quotient(g, h);
    CHECK(q.group.invariant_factors() == std::vector<Int>{3});
    CHECK(q.projection.is_surjective());
    CHECK(q.projection.kernel() == h);
}

TEST_CASE("quotient of Z/4 by order-2 subgroup is Z/2")
{
    // U(5) is cyclic of order 4; {1,4} corresponds to the index-2 subgroup.
    FinAbGroup g = grp({4});
    Subgroup h = Subgroup::from_generators(g, {el({2})});
    Quotient q = quotient(g, h);
    CHECK(q.group.invariant_factors() == std::vector<Int>{2});
    CHECK(g.order() == h.order() * q.group.order());
}

TEST_CASE("quotient by the trivial subgroup is the group itself")
{
    FinAbGroup g = grp({2, 4});
    Quotient q = quotient(g, Subgroup::trivial(g));
    CHECK(q.group == g);
    CHECK(q.projection.is_injective());
    CHECK(q.projection.is_surjective());
}

TEST_CASE("quotient rejects a subgroup of another group")
{
    FinAbGroup g = grp({4}), g2 = grp({8});
    Subgroup h = Subgroup::trivial(g2);
    CHECK_THROWS_AS(quotient(g, h), ambient_mismatch_error);
}

TEST_CASE("fiber product of identity with identity is the diagonal")
{
    FinAbGroup c = grp({2});
    GroupHom id = GroupHom::identity(c);
    FiberProduct fp = fiber_product(id, id);
    const DirectProduct& p = fp.product;
    CHECK(fp.subgroup.order() == 2);
    // the diagonal: both elements (x, x)
    CHECK(fp.subgroup.contains(
        p.group.add(p.inject_left.apply(el({1})), p.inject_right.apply(el({1})))));
    CHECK(!fp.subgroup.contains(p.inject_left.apply(el({1}))));
}

TEST_CASE("fiber product with a trivial factor is the kernel")
{
    FinAbGroup a = grp({4}), c = grp({2}), b;
    GroupHom f(a, c, {el({1})});
    GroupHom g = GroupHom::zero(b, c);
    FiberProduct fp = fiber_product(f, g);
    Subgroup expected = f.kernel(); // {0, 2} paired with nothing
    CHECK(fp.subgroup.order() == expected.order());
    CHECK(fp.subgroup.order() == 2);
}

TEST_CASE("fiber product matches direct enumeration")
{
    // A = Z/2 x Z/2 (U(12)), C = Z/2 (U(4)), f the reduction, g trivial.
    FinAbGroup a = grp({2, 2}), c = grp({2}), b;
    // convention of the later unit-group encoding: generators 5, 7 of U(12)
    // map to 1, 3 mod 4, i.e. to 1 and 1 in Z/2 coordinates
    GroupHom f(a, c, {el({1}), el({1})});
    GroupHom g = GroupHom::zero(b, c);
    FiberProduct fp = fiber_product(f, g);

    long count = 0;
    for (const Element& x : a.all_elements())
        if (c.is_zero(f.apply(x)))
            ++count;
    CHECK(fp.subgroup.order() == count);
    CHECK(fp.subgroup.order() == 2);
}

TEST_CASE("fiber product rejects mismatched targets")
{
    FinAbGroup a = grp({2});
    GroupHom id = GroupHom::identity(a);
    GroupHom other = GroupHom::identity(grp({4}));
    CHECK_THROWS_AS(fiber_product(id, other), target_mismatch_error);
}

TEST_CASE("sylow subgroups of Z/12")
{
    FinAbGroup g = grp({12});
    CHECK(sylow(g, 2).order() == 4);
    CHECK(sylow(g, 3).order() == 3);
    CHECK(sylow(g, 5).order() == 1);
    CHECK_THROWS_AS(sylow(g, 6), not_prime_error);
}

TEST_CASE("sylow of Z/6 at 3 has the expected elements")
{
    // U(9) is cyclic of order 6; its 3-part has order 3.
    FinAbGroup g = grp({6});
    Subgroup s = sylow(g, 3);
    CHECK(s.order() == 3);
    CHECK(s.contains(el({2})));
    CHECK(s.contains(el({4})));
    CHECK(!s.contains(el({3})));
}

TEST_CASE("hom kernel and image orders multiply to the source order")
{
    std::mt19937 rng(99);
    std::vector<FinAbGroup> groups = {grp({4}), grp({2, 4}), grp({3, 9}), grp({2, 2, 2}), grp({12})};
    std::uniform_int_distribution<size_t> pick(0, groups.size() - 1);
    std::uniform_int_distribution<long> coeff(0, 11);
    for (int trial = 0; trial < 100; ++trial) {
        const FinAbGroup& s = groups[pick(rng)];
        const FinAbGroup& t = groups[pick(rng)];
        std::vector<Element> images;
        for (size_t i = 0; i < s.rank(); ++i) {
            // a valid image of an order-d generator: anything killed by d
            Element img = t.zero();
            for (size_t j = 0; j < t.rank(); ++j) {
                Int dt = t.invariant_factors()[j];
                Int step = dt / gcd(dt, s.invariant_factors()[i]);
                img[j] = step * coeff(rng);
            }
            images.push_back(t.reduce(img));
        }
        GroupHom f(s, t, images);
        CHECK(f.kernel().order() * f.image().order() == s.order());

        // kernel membership agrees with application
        for (const Element& x : f.kernel().canonical_generators())
            CHECK(t.is_zero(f.apply(x)));
    }
}

TEST_CASE("preimage of a subgroup")
{
    FinAbGroup g = grp({12});
    GroupHom id = GroupHom::identity(g);
    Subgroup h = Subgroup::from_generators(g, {el({4})});
    CHECK(id.preimage(h) == h);

    // reduction Z/12 -> Z/4, preimage of {0} is {0,4,8}
    FinAbGroup t = grp({4});
    GroupHom red(g, t, {el({1})});
    Subgroup pre = red.preimage(Subgroup::trivial(t));
    CHECK(pre.order() == 3);
    CHECK(pre.contains(el({4})));
}

TEST_CASE("lagrange holds for every subgroup of small groups")
{
    // exhaustive subgroup enumeration by closure over cyclic extensions
    for (const FinAbGroup& g : {grp({8}), grp({2, 4}), grp({3, 3}), grp({2, 2, 2}), grp({36})}) {
        std::vector<Subgroup> subs{Subgroup::trivial(g)};
        std::vector<Element> all = g.all_elements();
        size_t head = 0;
        auto known = [&](const Subgroup& s) {
            for (const Subgroup& t : subs)
                if (t == s)
                    return true;
            return false;
        };
        while (head < subs.size()) {
            Subgroup base = subs[head++];
            for (const Element& x : all) {
                Subgroup bigger = base.join(Subgroup::from_generators(g, {x}));
                if (!known(bigger))
                    subs.push_back(bigger);
            }
        }
        for (const Subgroup& h : subs) {
            CHECK(h.order() * h.index() == g.order());
            CHECK(h.elements().size() == h.order());
        }
    }
}

TEST_CASE("invalid elements are rejected")
{
    FinAbGroup g = grp({4, 8});
    CHECK_THROWS_AS(Subgroup::from_generators(g, {el({1})}), invalid_element_error);
    CHECK_THROWS_AS(g.reduce(el({1, 2, 3})), invalid_element_error);
}

TEST_CASE("cyclic presentation renormalizes orders")
{
    // Z/2 x Z/3 = Z/6 in invariant form
    CyclicPresentation pres = presentation_from_cyclic_orders({Int(2), Int(3)});
    CHECK(pres.group.invariant_factors() == std::vector<Int>{6});
    // encode/decode round-trip on all old coordinates
    for (long a = 0; a < 2; ++a)
        for (long b = 0; b < 3; ++b) {
            std::vector<Int> old{Int(a), Int(b)};
            CHECK(pres.decode(pres.encode(old)) == old);
        }
    // encoding is a homomorphism
    Element x = pres.encode({Int(1), Int(1)});
    CHECK(pres.group.element_order(x) == 6);
}
