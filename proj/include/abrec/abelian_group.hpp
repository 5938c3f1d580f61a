#ifndef ABREC_ABELIAN_GROUP_HPP
#define ABREC_ABELIAN_GROUP_HPP

#include "abrec/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace abrec {

// Element of a FinAbGroup: coordinate vector w.r.t. the invariant-factor
// basis, entries reduced into [0, d_i).
using Element = std::vector<Int>;

// Finite abelian group in invariant-factor form: Z/d_1 x ... x Z/d_k with
// d_i > 1 and d_i | d_{i+1}. The trivial group has an empty factor list.
class FinAbGroup {
public:
    FinAbGroup() = default; // trivial group
    explicit FinAbGroup(std::vector<Int> invariant_factors,
                        std::vector<std::string> generator_labels = {});

    size_t rank() const { return factors_.size(); }
    const std::vector<Int>& invariant_factors() const { return factors_; }
    const std::vector<std::string>& generator_labels() const { return labels_; }
    Int order() const;
    Int exponent() const { return factors_.empty() ? Int(1) : factors_.back(); }
    bool is_trivial() const { return factors_.empty(); }

    Element zero() const { return Element(rank(), Int(0)); }
    Element basis_element(size_t i) const;
    // Validates arity, reduces entries mod the invariant factors.
    Element reduce(const Element& x) const;
    Element add(const Element& a, const Element& b) const;
    Element negate(const Element& a) const;
    Element scale(const Int& n, const Element& a) const;
    bool is_zero(const Element& a) const;
    Int element_order(const Element& a) const;

    std::vector<Element> all_elements() const; // lexicographic

    bool operator==(const FinAbGroup& g) const { return factors_ == g.factors_; }
    bool operator!=(const FinAbGroup& g) const { return !(*this == g); }

private:
    std::vector<Int> factors_;
    std::vector<std::string> labels_;
};

// Subgroup of a FinAbGroup, held as the canonical Hermite basis of its
// preimage lattice in Z^k. Equal subgroups compare equal regardless of the
// generating set they came from.
class Subgroup {
public:
    static Subgroup from_generators(const FinAbGroup& ambient, const std::vector<Element>& gens);
    static Subgroup trivial(const FinAbGroup& ambient);
    static Subgroup full(const FinAbGroup& ambient);

    const FinAbGroup& ambient() const { return ambient_; }
    const IntMatrix& lattice_basis() const { return basis_; }

    Int order() const;
    Int index() const;
    bool contains(const Element& x) const;
    bool contains_subgroup(const Subgroup& other) const;
    bool is_trivial() const;
    bool is_full() const;

    // Minimal set of canonical basis columns that are nonzero mod the
    // invariant factors; deterministic, suitable for serialization.
    std::vector<Element> canonical_generators() const;
    std::vector<Element> elements() const; // enumeration, lexicographic

    Subgroup join(const Subgroup& other) const; // subgroup generated by both

    bool operator==(const Subgroup& h) const;
    bool operator!=(const Subgroup& h) const { return !(*this == h); }

private:
    Subgroup(FinAbGroup ambient, IntMatrix basis);
    FinAbGroup ambient_;
    IntMatrix basis_; // k x k lower-triangular HNF, contains diag(d)
};

// Homomorphism between finite abelian groups, stored as the images of the
// source invariant-factor basis.
class GroupHom {
public:
    GroupHom(FinAbGroup source, FinAbGroup target, std::vector<Element> images);

    static GroupHom identity(const FinAbGroup& g);
    static GroupHom zero(const FinAbGroup& source, const FinAbGroup& target);

    const FinAbGroup& source() const { return source_; }
    const FinAbGroup& target() const { return target_; }
    const std::vector<Element>& images() const { return images_; }

    Element apply(const Element& x) const;
    Subgroup image() const;
    Subgroup kernel() const;
    Subgroup image_of(const Subgroup& s) const;    // s <= source
    Subgroup preimage(const Subgroup& s) const;    // s <= target
    GroupHom compose(const GroupHom& inner) const; // this o inner
    bool is_surjective() const;
    bool is_injective() const;

private:
    FinAbGroup source_, target_;
    std::vector<Element> images_;
};

struct Quotient {
    FinAbGroup group;
    GroupHom projection;
};

// G/H together with the canonical projection; throws ambient_mismatch_error
// if H does not live in G.
Quotient quotient(const FinAbGroup& g, const Subgroup& h);

struct DirectProduct {
    FinAbGroup group;
    GroupHom inject_left, inject_right;
    GroupHom project_left, project_right;
};

DirectProduct direct_product(const FinAbGroup& a, const FinAbGroup& b);

// {(a, b) : f(a) = g(b)} as a subgroup of the direct product of the sources.
struct FiberProduct {
    DirectProduct product;
    Subgroup subgroup;
};

FiberProduct fiber_product(const GroupHom& f, const GroupHom& g);

Subgroup sylow(const FinAbGroup& g, const Int& p);
Subgroup sylow_subgroup(const Subgroup& h, const Int& p); // p-part of h

// Change of basis from a direct sum of cyclic groups of the given orders to
// invariant-factor form. old coords x |-> group coords old_to_new * x;
// invariant generator i corresponds to the old combination new_to_old col i.
struct CyclicPresentation {
    FinAbGroup group;
    std::vector<Int> cyclic_orders;
    IntMatrix old_to_new; // rank x #orders
    IntMatrix new_to_old; // #orders x rank

    Element encode(const std::vector<Int>& old_coords) const;
    std::vector<Int> decode(const Element& x) const; // reduced mod cyclic orders
};

CyclicPresentation presentation_from_cyclic_orders(const std::vector<Int>& orders);

} // namespace abrec

#endif
