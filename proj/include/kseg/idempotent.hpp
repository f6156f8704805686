#pragma once

#include <complex>
#include <utility>

#include "kseg/core.hpp"

namespace kseg {

// --- Real class K(n,0) ---------------------------------------------------

// f = (1/2^n) * sum of all 2^n basis blades. Requires q = 0, n >= 1.
Element build_f(Signature sig);

// f_B = <f>_B for B a subset of {1..n}.
Element f_member(Signature sig, ConjugationMask b);

// zeta_B(U) = sum_C (-1)^|B n C| U[C]; the coordinate of U on f_B.
double zeta(const Element& u, ConjugationMask b);

// The family {f_B}. Members are computed on demand; materializing all 2^n
// dense elements costs 4^n reals and is left to callers that need it.
class RealIdempotentFamily {
public:
    explicit RealIdempotentFamily(Signature sig);

    const Signature& sig() const { return sig_; }
    Element member(ConjugationMask b) const { return conjugate(f_, b); }

private:
    Signature sig_;
    Element f_;
};

// Coordinates of u in the f_B basis, indexed by the mask of B.
std::vector<double> expand_in_f_basis(const Element& u);
Element reconstruct_from_f_basis(Signature sig, const std::vector<double>& coords);

// --- Complex class K(0,n) ------------------------------------------------

// E = <f>_0 - <f>_2 + <f>_4 - ...,  O = <f>_1 - <f>_3 + <f>_5 - ...
// with f = (1/2^{n-1}) * sum of all blades. Requires p = 0, n >= 1.
std::pair<Element, Element> build_EO(Signature sig);

struct EOPair {
    Element e;
    Element o;
};

// The family {E_B, O_B}. B ranges over subsets of {1..n} \ {excluded}; the
// default excluded generator is 1, and E_A = E_{A^c} makes the other half
// of the subsets redundant.
class ComplexIdempotentFamily {
public:
    explicit ComplexIdempotentFamily(Signature sig, int excluded_generator = 1);

    const Signature& sig() const { return sig_; }
    int excluded_generator() const { return excluded_; }

    EOPair member(ConjugationMask b) const;

private:
    Signature sig_;
    int excluded_;
    Element e_;
    Element o_;
};

// gamma_B(U) = sum_C (-1)^|B n C| i^|C| U[C] for B a subset of {2..n}.
// Real and imaginary parts are the coordinates of U on (E_B, O_B).
std::complex<double> gamma(const Element& u, ConjugationMask b);

// Coordinates in the {E_B, O_B} basis, indexed by (mask of B) >> 1 since
// generator 1 never appears in B.
std::vector<std::complex<double>> expand_in_EO_basis(const Element& u);
Element reconstruct_from_EO_basis(Signature sig,
                                  const std::vector<std::complex<double>>& coords);

} // namespace kseg
