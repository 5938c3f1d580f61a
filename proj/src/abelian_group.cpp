#include "abrec/abelian_group.hpp"

#include "abrec/errors.hpp"

#include <algorithm>
#include <set>

namespace abrec {

namespace {

Int positive_mod(const Int& a, const Int& m)
{
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int p_part(const Int& n, const Int& p)
{
    Int q = n, pp = 1;
    while (q % p == 0) {
        q /= p;
        pp *= p;
    }
    return pp;
}

} // namespace

FinAbGroup::FinAbGroup(std::vector<Int> invariant_factors, std::vector<std::string> generator_labels)
{
    for (size_t i = 0; i < invariant_factors.size(); ++i) {
        const Int& d = invariant_factors[i];
        if (d <= 0)
            throw error("invariant factor must be positive");
        if (d == 1)
            continue;
        if (!factors_.empty() && d % factors_.back() != 0)
            throw error("invariant factors must form a divisibility chain");
        factors_.push_back(d);
        if (i < generator_labels.size())
            labels_.push_back(generator_labels[i]);
    }
    if (labels_.size() != factors_.size())
        labels_.clear();
}

Int FinAbGroup::order() const
{
    Int o = 1;
    for (const Int& d : factors_)
        o *= d;
    return o;
}

Element FinAbGroup::basis_element(size_t i) const
{
    Element e = zero();
    e.at(i) = 1;
    return e;
}

Element FinAbGroup::reduce(const Element& x) const
{
    if (x.size() != rank())
        throw invalid_element_error("element has wrong number of coordinates");
    Element out(rank());
    for (size_t i = 0; i < rank(); ++i)
        out[i] = positive_mod(x[i], factors_[i]);
    return out;
}

Element FinAbGroup::add(const Element& a, const Element& b) const
{
    Element x = reduce(a), y = reduce(b);
    for (size_t i = 0; i < rank(); ++i)
        x[i] = positive_mod(x[i] + y[i], factors_[i]);
    return x;
}

Element FinAbGroup::negate(const Element& a) const
{
    Element x = reduce(a);
    for (size_t i = 0; i < rank(); ++i)
        x[i] = positive_mod(-x[i], factors_[i]);
    return x;
}

Element FinAbGroup::scale(const Int& n, const Element& a) const
{
    Element x = reduce(a);
    for (size_t i = 0; i < rank(); ++i)
        x[i] = positive_mod(n * x[i], factors_[i]);
    return x;
}

bool FinAbGroup::is_zero(const Element& a) const
{
    Element x = reduce(a);
    return std::all_of(x.begin(), x.end(), [](const Int& c) { return c == 0; });
}

Int FinAbGroup::element_order(const Element& a) const
{
    Element x = reduce(a);
    Int ord = 1;
    for (size_t i = 0; i < rank(); ++i) {
        Int g = gcd(factors_[i], x[i]);
        Int o = factors_[i] / g;
        ord = lcm(ord, o);
    }
    return ord;
}

std::vector<Element> FinAbGroup::all_elements() const
{
    std::vector<Element> out;
    out.push_back(zero());
    for (size_t i = 0; i < rank(); ++i) {
        std::vector<Element> next;
        next.reserve(out.size() * static_cast<size_t>(factors_[i].get_ui()));
        for (const Element& e : out)
            for (Int c = 0; c < factors_[i]; ++c) {
                Element x = e;
                x[i] = c;
                next.push_back(std::move(x));
            }
        out = std::move(next);
    }
    return out;
}

Subgroup::Subgroup(FinAbGroup ambient, IntMatrix basis)
    : ambient_(std::move(ambient)), basis_(std::move(basis))
{
}

Subgroup Subgroup::from_generators(const FinAbGroup& ambient, const std::vector<Element>& gens)
{
    const size_t k = ambient.rank();
    IntMatrix m(k, gens.size() + k);
    for (size_t j = 0; j < gens.size(); ++j) {
        Element g = ambient.reduce(gens[j]);
        for (size_t i = 0; i < k; ++i)
            m.at(i, j) = g[i];
    }
    for (size_t i = 0; i < k; ++i)
        m.at(i, gens.size() + i) = ambient.invariant_factors()[i];
    return Subgroup(ambient, hermite_column_basis(m));
}

Subgroup Subgroup::trivial(const FinAbGroup& ambient)
{
    return from_generators(ambient, {});
}

Subgroup Subgroup::full(const FinAbGroup& ambient)
{
    std::vector<Element> gens;
    for (size_t i = 0; i < ambient.rank(); ++i)
        gens.push_back(ambient.basis_element(i));
    return from_generators(ambient, gens);
}

Int Subgroup::order() const
{
    Int covol = 1;
    for (size_t i = 0; i < basis_.rows(); ++i)
        covol *= basis_.at(i, i);
    return ambient_.order() / covol;
}

Int Subgroup::index() const
{
    Int covol = 1;
    for (size_t i = 0; i < basis_.rows(); ++i)
        covol *= basis_.at(i, i);
    return covol;
}

bool Subgroup::contains(const Element& x) const
{
    Element y = ambient_.reduce(x);
    const size_t k = ambient_.rank();
    std::vector<Int> c(k);
    for (size_t i = 0; i < k; ++i) {
        Int r = y[i];
        for (size_t j = 0; j < i; ++j)
            r -= basis_.at(i, j) * c[j];
        if (r % basis_.at(i, i) != 0)
            return false;
        c[i] = r / basis_.at(i, i);
    }
    return true;
}

bool Subgroup::contains_subgroup(const Subgroup& other) const
{
    if (ambient_ != other.ambient_)
        throw ambient_mismatch_error("subgroups live in different groups");
    for (const Element& g : other.canonical_generators())
        if (!contains(g))
            return false;
    return true;
}

bool Subgroup::is_trivial() const
{
    return order() == 1;
}

bool Subgroup::is_full() const
{
    return index() == 1;
}

std::vector<Element> Subgroup::canonical_generators() const
{
    std::vector<Element> out;
    for (size_t j = 0; j < basis_.cols(); ++j) {
        Element g = ambient_.reduce(basis_.column(j));
        if (!ambient_.is_zero(g))
            out.push_back(std::move(g));
    }
    return out;
}

std::vector<Element> Subgroup::elements() const
{
    std::set<Element> seen;
    seen.insert(ambient_.zero());
    std::vector<Element> gens = canonical_generators();
    std::vector<Element> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<Element> next;
        for (const Element& e : frontier)
            for (const Element& g : gens) {
                Element x = ambient_.add(e, g);
                if (seen.insert(x).second)
                    next.push_back(std::move(x));
            }
        frontier = std::move(next);
    }
    return std::vector<Element>(seen.begin(), seen.end());
}

Subgroup Subgroup::join(const Subgroup& other) const
{
    if (ambient_ != other.ambient_)
        throw ambient_mismatch_error("join of subgroups of different groups");
    std::vector<Element> gens = canonical_generators();
    for (const Element& g : other.canonical_generators())
        gens.push_back(g);
    return from_generators(ambient_, gens);
}

bool Subgroup::operator==(const Subgroup& h) const
{
    return ambient_ == h.ambient_ && basis_ == h.basis_;
}

GroupHom::GroupHom(FinAbGroup source, FinAbGroup target, std::vector<Element> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images))
{
    if (images_.size() != source_.rank())
        throw error("homomorphism needs one image per source generator");
    for (size_t i = 0; i < images_.size(); ++i) {
        images_[i] = target_.reduce(images_[i]);
        // The image of an order-d generator must have order dividing d.
        if (!target_.is_zero(target_.scale(source_.invariant_factors()[i], images_[i])))
            throw error("generator image order incompatible with relation");
    }
}

GroupHom GroupHom::identity(const FinAbGroup& g)
{
    std::vector<Element> images;
    for (size_t i = 0; i < g.rank(); ++i)
        images.push_back(g.basis_element(i));
    return GroupHom(g, g, images);
}

GroupHom GroupHom::zero(const FinAbGroup& source, const FinAbGroup& target)
{
    return GroupHom(source, target, std::vector<Element>(source.rank(), target.zero()));
}

Element GroupHom::apply(const Element& x) const
{
    Element y = source_.reduce(x);
    Element out = target_.zero();
    for (size_t i = 0; i < y.size(); ++i)
        out = target_.add(out, target_.scale(y[i], images_[i]));
    return out;
}

Subgroup GroupHom::image() const
{
    return Subgroup::from_generators(target_, images_);
}

Subgroup GroupHom::kernel() const
{
    const size_t ks = source_.rank(), kt = target_.rank();
    // x is in the kernel iff M x lies in the relation lattice of the target,
    // i.e. (x, y) solves [M | diag(d_t)] (x, -y) = 0 for some y.
    IntMatrix a(kt, ks + kt);
    for (size_t j = 0; j < ks; ++j)
        for (size_t i = 0; i < kt; ++i)
            a.at(i, j) = images_[j][i];
    for (size_t i = 0; i < kt; ++i)
        a.at(i, ks + i) = target_.invariant_factors()[i];
    IntMatrix ker = integer_kernel(a);
    std::vector<Element> gens;
    for (size_t j = 0; j < ker.cols(); ++j) {
        Element g(ks);
        for (size_t i = 0; i < ks; ++i)
            g[i] = ker.at(i, j);
        gens.push_back(source_.reduce(g));
    }
    return Subgroup::from_generators(source_, gens);
}

Subgroup GroupHom::image_of(const Subgroup& s) const
{
    if (s.ambient() != source_)
        throw ambient_mismatch_error("subgroup not in hom source");
    std::vector<Element> gens;
    for (const Element& g : s.canonical_generators())
        gens.push_back(apply(g));
    return Subgroup::from_generators(target_, gens);
}

Subgroup GroupHom::preimage(const Subgroup& s) const
{
    if (s.ambient() != target_)
        throw ambient_mismatch_error("subgroup not in hom target");
    Quotient q = quotient(target_, s);
    return q.projection.compose(*this).kernel();
}

GroupHom GroupHom::compose(const GroupHom& inner) const
{
    if (inner.target_ != source_)
        throw target_mismatch_error("composition target/source mismatch");
    std::vector<Element> images;
    for (const Element& img : inner.images_)
        images.push_back(apply(img));
    return GroupHom(inner.source_, target_, images);
}

bool GroupHom::is_surjective() const
{
    return image().is_full();
}

bool GroupHom::is_injective() const
{
    return kernel().is_trivial();
}

Quotient quotient(const FinAbGroup& g, const Subgroup& h)
{
    if (h.ambient() != g)
        throw ambient_mismatch_error("quotient by subgroup of a different group");
    SmithForm f = smith_normal_form(h.lattice_basis());
    std::vector<Int> diag = f.diagonal();

    std::vector<size_t> kept;
    std::vector<Int> factors;
    for (size_t i = 0; i < diag.size(); ++i)
        if (diag[i] > 1) {
            kept.push_back(i);
            factors.push_back(diag[i]);
        }
    FinAbGroup q(factors);

    // New coordinates are U x; rows with invariant factor 1 vanish.
    std::vector<Element> images;
    for (size_t j = 0; j < g.rank(); ++j) {
        Element img(kept.size());
        for (size_t t = 0; t < kept.size(); ++t)
            img[t] = f.u.at(kept[t], j);
        images.push_back(q.reduce(img));
    }
    return Quotient{q, GroupHom(g, q, images)};
}

DirectProduct direct_product(const FinAbGroup& a, const FinAbGroup& b)
{
    std::vector<Int> orders = a.invariant_factors();
    for (const Int& d : b.invariant_factors())
        orders.push_back(d);
    CyclicPresentation pres = presentation_from_cyclic_orders(orders);

    const size_t ka = a.rank(), kb = b.rank();
    std::vector<Element> inj_a, inj_b;
    for (size_t i = 0; i < ka; ++i) {
        std::vector<Int> old(ka + kb, Int(0));
        old[i] = 1;
        inj_a.push_back(pres.encode(old));
    }
    for (size_t i = 0; i < kb; ++i) {
        std::vector<Int> old(ka + kb, Int(0));
        old[ka + i] = 1;
        inj_b.push_back(pres.encode(old));
    }

    std::vector<Element> proj_a, proj_b;
    for (size_t i = 0; i < pres.group.rank(); ++i) {
        std::vector<Int> old = pres.decode(pres.group.basis_element(i));
        proj_a.push_back(a.reduce(Element(old.begin(), old.begin() + ka)));
        proj_b.push_back(b.reduce(Element(old.begin() + ka, old.end())));
    }

    return DirectProduct{pres.group,
                         GroupHom(a, pres.group, inj_a),
                         GroupHom(b, pres.group, inj_b),
                         GroupHom(pres.group, a, proj_a),
                         GroupHom(pres.group, b, proj_b)};
}

FiberProduct fiber_product(const GroupHom& f, const GroupHom& g)
{
    if (f.target() != g.target())
        throw target_mismatch_error("fiber product needs a common target");
    DirectProduct p = direct_product(f.source(), g.source());
    std::vector<Element> images;
    const FinAbGroup& c = f.target();
    for (size_t i = 0; i < p.group.rank(); ++i) {
        Element e = p.group.basis_element(i);
        Element diff = c.add(f.apply(p.project_left.apply(e)),
                             c.negate(g.apply(p.project_right.apply(e))));
        images.push_back(diff);
    }
    GroupHom difference(p.group, c, images);
    Subgroup result = difference.kernel();
    return FiberProduct{std::move(p), std::move(result)};
}

Subgroup sylow(const FinAbGroup& g, const Int& p)
{
    if (!is_prime(to_ll(p)))
        throw not_prime_error("sylow: " + p.get_str() + " is not prime");
    std::vector<Element> gens;
    for (size_t i = 0; i < g.rank(); ++i) {
        const Int& d = g.invariant_factors()[i];
        gens.push_back(g.scale(d / p_part(d, p), g.basis_element(i)));
    }
    return Subgroup::from_generators(g, gens);
}

Subgroup sylow_subgroup(const Subgroup& h, const Int& p)
{
    if (!is_prime(to_ll(p)))
        throw not_prime_error("sylow_subgroup: " + p.get_str() + " is not prime");
    const FinAbGroup& g = h.ambient();
    std::vector<Element> gens;
    for (const Element& x : h.canonical_generators()) {
        Int o = g.element_order(x);
        gens.push_back(g.scale(o / p_part(o, p), x));
    }
    return Subgroup::from_generators(g, gens);
}

Element CyclicPresentation::encode(const std::vector<Int>& old_coords) const
{
    if (old_coords.size() != cyclic_orders.size())
        throw invalid_element_error("encode: wrong arity");
    return group.reduce(old_to_new.apply(old_coords));
}

std::vector<Int> CyclicPresentation::decode(const Element& x) const
{
    std::vector<Int> old = new_to_old.apply(group.reduce(x));
    for (size_t i = 0; i < old.size(); ++i)
        old[i] = positive_mod(old[i], cyclic_orders[i]);
    return old;
}

CyclicPresentation presentation_from_cyclic_orders(const std::vector<Int>& orders)
{
    for (const Int& o : orders)
        if (o <= 0)
            throw error("cyclic order must be positive");
    SmithForm f = smith_normal_form(IntMatrix::diagonal(orders));
    std::vector<Int> diag = f.diagonal();

    std::vector<size_t> kept;
    std::vector<Int> factors;
    for (size_t i = 0; i < diag.size(); ++i)
        if (diag[i] > 1) {
            kept.push_back(i);
            factors.push_back(diag[i]);
        }

    CyclicPresentation pres;
    pres.group = FinAbGroup(factors);
    pres.cyclic_orders = orders;

    const size_t k = orders.size();
    pres.old_to_new = IntMatrix(kept.size(), k);
    for (size_t t = 0; t < kept.size(); ++t)
        for (size_t j = 0; j < k; ++j)
            pres.old_to_new.at(t, j) = f.u.at(kept[t], j);

    IntMatrix uinv = inverse_unimodular(f.u);
    pres.new_to_old = IntMatrix(k, kept.size());
    for (size_t i = 0; i < k; ++i)
        for (size_t t = 0; t < kept.size(); ++t)
            pres.new_to_old.at(i, t) = uinv.at(i, kept[t]);

    return pres;
}

} // namespace abrec
