#include "kseg/core.hpp"

#include <cmath>
#include <cstdlib>

namespace kseg {

namespace {

void require_finite(const std::vector<double>& coeffs) {
    for (double c : coeffs)
        if (!std::isfinite(c))
            throw InvalidArgument("element coefficients must be finite");
}

void require_same_sig(const Element& u, const Element& v) {
    if (!(u.sig() == v.sig()))
        throw SignatureMismatch("operands live in " + u.sig().str() + " and " +
                                v.sig().str());
}

} // namespace

Element::Element(Signature sig, std::vector<double> coeffs)
    : sig_(sig), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != sig_.dim())
        throw DimensionMismatch("expected " + std::to_string(sig_.dim()) +
                                " coefficients, got " + std::to_string(coeffs_.size()));
    require_finite(coeffs_);
}

Element Element::blade(Signature sig, BladeMask mask, double coeff) {
    if (mask >= sig.dim())
        throw IndexOutOfRange("blade mask out of range for " + sig.str());
    if (!std::isfinite(coeff))
        throw InvalidArgument("element coefficients must be finite");
    Element e(sig);
    e.coeffs_[mask] = coeff;
    return e;
}

void Element::set(BladeMask mask, double value) {
    if (mask >= dim())
        throw IndexOutOfRange("blade mask out of range for " + sig_.str());
    if (!std::isfinite(value))
        throw InvalidArgument("element coefficients must be finite");
    coeffs_[mask] = value;
}

Element add(const Element& u, const Element& v) {
    require_same_sig(u, v);
    Element out(u.sig());
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
        out.coeffs_[i] = u.coeffs_[i] + v.coeffs_[i];
    return out;
}

Element sub(const Element& u, const Element& v) {
    require_same_sig(u, v);
    Element out(u.sig());
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
        out.coeffs_[i] = u.coeffs_[i] - v.coeffs_[i];
    return out;
}

Element scale(const Element& u, double c) {
    Element out(u.sig());
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
        out.coeffs_[i] = u.coeffs_[i] * c;
    return out;
}

Element mul_naive(const Element& u, const Element& v) {
    require_same_sig(u, v);
    const Signature sig = u.sig();
    const BladeMask neg = sig.negative_mask();
    Element out(sig);
    const std::size_t dim = sig.dim();
    // Accumulate unordered blade pairs so the sum is symmetric in u and v
    // term by term: commutativity then holds bit-exactly.
    for (std::size_t c = 0; c < dim; ++c) {
        double acc = 0.0;
        for (std::size_t a = 0; a < dim; ++a) {
            const std::size_t b = a ^ c;
            if (b < a)
                continue;
            const int flips = std::popcount(static_cast<BladeMask>(a & b) & neg);
            const double term = a == b ? u.coeffs_[a] * v.coeffs_[a]
                                       : u.coeffs_[a] * v.coeffs_[b] +
                                             u.coeffs_[b] * v.coeffs_[a];
            acc += (flips & 1) ? -term : term;
        }
        out.coeffs_[c] = acc;
    }
    return out;
}

Element grade_project(const Element& u, int k) {
    if (k < 0 || k > u.sig().n())
        throw GradeOutOfRange("grade " + std::to_string(k) + " out of range for " +
                              u.sig().str());
    Element out(u.sig());
    for (std::size_t mask = 0; mask < u.dim(); ++mask)
        if (grade(static_cast<BladeMask>(mask)) == k)
            out.coeffs_[mask] = u.coeffs_[mask];
    return out;
}

Element conjugate(const Element& u, ConjugationMask a) {
    if (a >= u.dim())
        throw IndexOutOfRange("conjugation mask out of range for " + u.sig().str());
    Element out(u.sig());
    for (std::size_t mask = 0; mask < u.dim(); ++mask) {
        const int shared = std::popcount(static_cast<BladeMask>(mask) & a);
        out.coeffs_[mask] = (shared & 1) ? -u.coeffs_[mask] : u.coeffs_[mask];
    }
    return out;
}

double max_abs_coeff(const Element& u) {
    double m = 0.0;
    for (double c : u.coeffs())
        m = std::max(m, std::abs(c));
    return m;
}

bool approx_equal(const Element& u, const Element& v, double atol, double rtol) {
    if (!(u.sig() == v.sig()))
        return false;
    const double scale = std::max(max_abs_coeff(u), max_abs_coeff(v));
    const double bound = atol + rtol * scale;
    for (std::size_t i = 0; i < u.dim(); ++i)
        if (std::abs(u.coeffs()[i] - v.coeffs()[i]) > bound)
            return false;
    return true;
}

} // namespace kseg
