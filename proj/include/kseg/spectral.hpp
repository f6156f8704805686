#pragma once

#include <cstdint>

#include "kseg/core.hpp"

namespace kseg {

enum class SpectrumKind { Real, Complex };

// Image of an element under the direct-sum isomorphism. Real kind: 2^n
// components s[B] = zeta_B(U), indexed by the mask of B. Complex kind:
// 2^{n-1} components s[B] = gamma_B(U) for B a subset of {2..n}, indexed
// by (mask of B) >> 1. Components are stored as separate real and
// imaginary arrays; `im` is empty for the real kind.
struct SpectrumVector {
    SpectrumKind kind;
    Signature sig;
    std::vector<double> re;
    std::vector<double> im;

    std::size_t size() const { return re.size(); }
};

// Sign transform: n butterfly stages (x, y) -> (x+y, x-y), O(n 2^n).
// Agrees with the slow zeta functional on every coordinate.
SpectrumVector forward_real(const Element& u);

// Same butterflies followed by a global 1/2^n rescale.
Element inverse_real(const SpectrumVector& s);

// Fold generator 1 as (x, y) -> x + i y, then complex butterflies
// (x, y) -> (x + i y, x - i y) for generators 2..n. Agrees with gamma.
SpectrumVector forward_complex(const Element& u);

Element inverse_complex(const SpectrumVector& s);

// Dispatch on the isomorphism class; mixed signatures (p,q >= 1) are
// carried through canonicalize to K(0,n) first.
SpectrumVector forward(const Element& u);

// Pointwise-product multiplication through the spectrum, O(n 2^n).
Element mul_fast(const Element& u, const Element& v);

// An element is invertible iff every spectral component has magnitude
// above tol. tol <= 0 selects the scale-relative default
// 1e-12 * max component magnitude.
bool is_invertible(const Element& u, double tol = 0.0);

// Inverse transform of componentwise reciprocals. Throws NotInvertible
// listing the vanishing component indices.
Element invert(const Element& u, double tol = 0.0);

// All solutions of U^2 = U: spectra with every component in {0,1} (real
// class) or {0,1} c C (complex class), in spectrum-bitmask order, so 0
// comes first and 1 last. Throws TooLarge when the output would exceed
// 2^16 elements.
std::vector<Element> enumerate_idempotents(Signature sig);

// Arithmetic-operation counter covering the transform butterflies and
// pointwise spectral work; used to check the O(n 2^n) growth claim.
std::uint64_t spectral_op_count();
void reset_spectral_op_count();

} // namespace kseg
