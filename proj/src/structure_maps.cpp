#include "kseg/structure_maps.hpp"

namespace kseg {

namespace {

// Blade table for a multiplicative map given by signed-blade generator
// images. table[m] for m with one bit set is the generator image; composite
// blades are products of their factors, computed incrementally.
std::vector<SignedBlade> build_blade_table(const Signature& domain,
                                           const Signature& codomain,
                                           const std::vector<SignedBlade>& gen_images) {
    std::vector<SignedBlade> table(domain.dim());
    table[0] = {+1, 0};
    for (std::size_t m = 1; m < table.size(); ++m) {
        const int low = std::countr_zero(m);
        const SignedBlade rest = table[m & (m - 1)];
        const SignedBlade gen = gen_images[low];
        const SignedBlade prod = blade_mul(rest.mask, gen.mask, codomain);
        table[m] = {rest.sign * gen.sign * prod.sign, prod.mask};
    }
    return table;
}

Element apply_blade_table(const Element& u, const Signature& codomain,
                          const std::vector<SignedBlade>& table) {
    ElementBuilder out(codomain);
    for (std::size_t m = 0; m < u.dim(); ++m) {
        const double c = u[static_cast<BladeMask>(m)];
        if (c == 0.0)
            continue;
        out[table[m].mask] += table[m].sign * c;
    }
    return out.take();
}

} // namespace

CanonicalMap::CanonicalMap(Signature source)
    : src_(source), dst_(0, source.n()) {
    if (src_.q < 1)
        throw WrongIsomorphismClass("canonicalize requires q >= 1, got " + src_.str());
    const int p = src_.p;
    const int n = src_.n();
    const BladeMask pivot = BladeMask{1} << p; // g_{p+1} resp. e_{p+1}

    // Forward: e_k -> -g_k g_{p+1} (k <= p), e_k -> g_k (k > p).
    std::vector<SignedBlade> fwd_gens(n);
    for (int k = 1; k <= n; ++k) {
        const BladeMask bit = BladeMask{1} << (k - 1);
        fwd_gens[k - 1] = (k <= p) ? SignedBlade{-1, static_cast<BladeMask>(bit | pivot)}
                                   : SignedBlade{+1, bit};
    }
    fwd_ = build_blade_table(src_, dst_, fwd_gens);

    // Inverse: g_k -> e_k e_{p+1} (k <= p), g_k -> e_k (k > p).
    std::vector<SignedBlade> bwd_gens(n);
    for (int k = 1; k <= n; ++k) {
        const BladeMask bit = BladeMask{1} << (k - 1);
        bwd_gens[k - 1] = (k <= p) ? SignedBlade{+1, static_cast<BladeMask>(bit | pivot)}
                                   : SignedBlade{+1, bit};
    }
    bwd_ = build_blade_table(dst_, src_, bwd_gens);
}

Element CanonicalMap::apply(const Element& u) const {
    if (!(u.sig() == src_))
        throw SignatureMismatch("element lives in " + u.sig().str() +
                                ", map expects " + src_.str());
    return apply_blade_table(u, dst_, fwd_);
}

Element CanonicalMap::apply_inverse(const Element& u) const {
    if (!(u.sig() == dst_))
        throw SignatureMismatch("element lives in " + u.sig().str() +
                                ", map expects " + dst_.str());
    return apply_blade_table(u, src_, bwd_);
}

Element canonicalize(const Element& u) {
    return CanonicalMap(u.sig()).apply(u);
}

Element canonicalize_inverse(const Element& u, Signature target) {
    if (u.sig().p != 0)
        throw WrongIsomorphismClass("canonicalize_inverse expects an element of K(0,n), got " +
                                    u.sig().str());
    if (target.n() != u.sig().n())
        throw DimensionMismatch("target " + target.str() + " has different dimension than " +
                                u.sig().str());
    return CanonicalMap(target).apply_inverse(u);
}

TensorLayout tensor_layout(Signature a, Signature b) {
    TensorLayout layout{Signature(a.p + b.p, a.q + b.q),
                        std::vector<int>(a.n()), std::vector<int>(b.n())};
    for (int k = 1; k <= a.n(); ++k)
        layout.first[k - 1] = (k <= a.p) ? k : a.p + b.p + (k - a.p);
    for (int k = 1; k <= b.n(); ++k)
        layout.second[k - 1] = (k <= b.p) ? a.p + k : a.p + b.p + a.q + (k - b.p);
    return layout;
}

Element tensor_embed(const Element& u, const Element& v) {
    const TensorLayout layout = tensor_layout(u.sig(), v.sig());

    auto blade_image = [](BladeMask m, const std::vector<int>& pos) {
        BladeMask out = 0;
        while (m != 0) {
            const int bit = std::countr_zero(m);
            out |= BladeMask{1} << (pos[bit] - 1);
            m &= m - 1;
        }
        return out;
    };

    std::vector<BladeMask> first_images(u.dim());
    for (std::size_t m = 0; m < u.dim(); ++m)
        first_images[m] = blade_image(static_cast<BladeMask>(m), layout.first);
    std::vector<BladeMask> second_images(v.dim());
    for (std::size_t m = 0; m < v.dim(); ++m)
        second_images[m] = blade_image(static_cast<BladeMask>(m), layout.second);

    // Generator images of the two factors are disjoint, so no signs arise.
    ElementBuilder out(layout.result);
    for (std::size_t a = 0; a < u.dim(); ++a) {
        const double ua = u[static_cast<BladeMask>(a)];
        if (ua == 0.0)
            continue;
        for (std::size_t b = 0; b < v.dim(); ++b)
            out[first_images[a] | second_images[b]] += ua * v[static_cast<BladeMask>(b)];
    }
    return out.take();
}

} // namespace kseg
