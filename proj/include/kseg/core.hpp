#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "kseg/errors.hpp"

namespace kseg {

// A blade e_A is a subset A of {1..n} stored as a bitmask: bit (k-1) set
// means generator e_k is a factor. Mask 0 is the scalar blade e_{} = 1.
using BladeMask = std::uint32_t;

// Superposed conjugations <.>_A are indexed the same way.
using ConjugationMask = BladeMask;

inline int grade(BladeMask mask) { return std::popcount(mask); }

// K(p,q): n = p+q commuting generators, e_k^2 = +1 for k <= p and -1 for
// k > p (indices 1-based).
struct Signature {
    int p = 0;
    int q = 0;

    static constexpr int kMaxGenerators = 24; // dense storage bound

    Signature(int p_, int q_) : p(p_), q(q_) {
        if (p < 0 || q < 0)
            throw InvalidArgument("signature counts must be nonnegative");
        if (p + q > kMaxGenerators)
            throw InvalidArgument("signature exceeds the " +
                                  std::to_string(kMaxGenerators) + "-generator cap");
    }

    int n() const { return p + q; }
    std::size_t dim() const { return std::size_t{1} << n(); }

    // 1-based generator index.
    bool squares_to_minus_one(int k) const { return k > p; }

    // Bitmask of generators squaring to -1.
    BladeMask negative_mask() const {
        return static_cast<BladeMask>(((std::uint64_t{1} << n()) - 1) ^ ((std::uint64_t{1} << p) - 1));
    }

    bool operator==(const Signature&) const = default;

    std::string str() const { return "K(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
};

struct SignedBlade {
    int sign; // +1 or -1
    BladeMask mask;
};

// Product of basis blades. Generators commute, so the result blade is the
// symmetric difference and each repeated generator contributes its square.
inline SignedBlade blade_mul(BladeMask a, BladeMask b, const Signature& sig) {
    const BladeMask repeated = a & b;
    const int neg = std::popcount(repeated & sig.negative_mask());
    return {(neg & 1) ? -1 : +1, a ^ b};
}

// Dense element of K(p,q): 2^n real coefficients indexed by blade mask.
// Immutable value type; all operations below are pure.
class Element {
public:
    explicit Element(Signature sig)
        : sig_(sig), coeffs_(sig.dim(), 0.0) {}

    Element(Signature sig, std::vector<double> coeffs);

    static Element unit(Signature sig) { return blade(sig, 0); }
    static Element blade(Signature sig, BladeMask mask, double coeff = 1.0);

    const Signature& sig() const { return sig_; }
    std::size_t dim() const { return coeffs_.size(); }

    double operator[](BladeMask mask) const { return coeffs_[mask]; }
    std::span<const double> coeffs() const { return coeffs_; }

    void set(BladeMask mask, double value);

    bool operator==(const Element&) const = default;

private:
    friend Element add(const Element&, const Element&);
    friend Element sub(const Element&, const Element&);
    friend Element scale(const Element&, double);
    friend Element mul_naive(const Element&, const Element&);
    friend Element grade_project(const Element&, int);
    friend Element conjugate(const Element&, ConjugationMask);
    friend class ElementBuilder;

    Signature sig_;
    std::vector<double> coeffs_;
};

// Unchecked accumulation buffer for module internals; finiteness of the
// result is the caller's concern.
class ElementBuilder {
public:
    explicit ElementBuilder(Signature sig) : out_(sig) {}
    double& operator[](BladeMask mask) { return out_.coeffs_[mask]; }
    Element take() { return std::move(out_); }

private:
    Element out_;
};

Element add(const Element& u, const Element& v);
Element sub(const Element& u, const Element& v);
Element scale(const Element& u, double c);

// Bilinear extension of blade_mul: the O(4^n) double loop over blade pairs.
Element mul_naive(const Element& u, const Element& v);

Element grade_project(const Element& u, int k);

// <U>_A: negates the coefficient of e_C iff |A intersect C| is odd.
Element conjugate(const Element& u, ConjugationMask a);

// Componentwise |delta| <= atol + rtol * max|coeff of either side|.
bool approx_equal(const Element& u, const Element& v,
                  double atol = 1e-12, double rtol = 1e-10);

double max_abs_coeff(const Element& u);

} // namespace kseg
