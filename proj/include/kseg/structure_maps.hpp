#pragma once

#include "kseg/core.hpp"

namespace kseg {

// The isomorphism K(p,q) -> K(0,n) for q >= 1. Generator images:
//   e_k -> -g_k g_{p+1}  for k <= p,
//   e_k -> g_k           for k >  p,
// extended multiplicatively to blades (each blade lands on a signed
// single blade) and linearly to elements. The signed-blade tables are
// built once per map and immutable afterwards.
class CanonicalMap {
public:
    explicit CanonicalMap(Signature source);

    const Signature& source() const { return src_; }
    const Signature& target() const { return dst_; }

    Element apply(const Element& u) const;
    Element apply_inverse(const Element& u) const;

    SignedBlade blade_image(BladeMask a) const { return fwd_[a]; }

private:
    Signature src_;
    Signature dst_;
    std::vector<SignedBlade> fwd_; // source blade -> signed target blade
    std::vector<SignedBlade> bwd_; // target blade -> signed source blade
};

Element canonicalize(const Element& u);
Element canonicalize_inverse(const Element& u, Signature target);

// Target positions (1-based) of each factor's generators under
// tensor_embed: +1-squaring generators of both factors first, then the
// -1-squaring ones, order preserved within each factor.
struct TensorLayout {
    Signature result;
    std::vector<int> first;  // first[k-1] = target index of factor-1 e_k
    std::vector<int> second; // second[k-1] = target index of factor-2 e_k
};

TensorLayout tensor_layout(Signature a, Signature b);

// Bilinear map K(p1,q1) x K(p2,q2) -> K(p1+p2, q1+q2) realizing the
// tensor-product decomposition: e_A (x) e_B lands on the blade whose
// generators are the relabeled union of A and B.
Element tensor_embed(const Element& u, const Element& v);

} // namespace kseg
