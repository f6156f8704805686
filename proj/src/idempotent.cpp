#include "kseg/idempotent.hpp"

#include <cmath>

namespace kseg {

namespace {

void require_real_class(const Signature& sig, const char* what) {
    if (sig.q != 0 || sig.n() < 1)
        throw WrongIsomorphismClass(std::string(what) + " requires K(n,0) with n >= 1, got " +
                                    sig.str());
}

void require_complex_class(const Signature& sig, const char* what) {
    if (sig.p != 0 || sig.n() < 1)
        throw WrongIsomorphismClass(std::string(what) + " requires K(0,n) with n >= 1, got " +
                                    sig.str());
}

} // namespace

Element build_f(Signature sig) {
    require_real_class(sig, "build_f");
    ElementBuilder out(sig);
    const double c = 1.0 / static_cast<double>(sig.dim());
    for (std::size_t mask = 0; mask < sig.dim(); ++mask)
        out[static_cast<BladeMask>(mask)] = c;
    return out.take();
}

Element f_member(Signature sig, ConjugationMask b) {
    return conjugate(build_f(sig), b);
}

double zeta(const Element& u, ConjugationMask b) {
    require_real_class(u.sig(), "zeta");
    if (b >= u.dim())
        throw IndexOutOfRange("conjugation mask out of range for " + u.sig().str());
    double sum = 0.0;
    for (std::size_t mask = 0; mask < u.dim(); ++mask) {
        const int shared = std::popcount(static_cast<BladeMask>(mask) & b);
        sum += (shared & 1) ? -u[static_cast<BladeMask>(mask)]
                            : u[static_cast<BladeMask>(mask)];
    }
    return sum;
}

RealIdempotentFamily::RealIdempotentFamily(Signature sig)
    : sig_(sig), f_(build_f(sig)) {}

std::vector<double> expand_in_f_basis(const Element& u) {
    require_real_class(u.sig(), "expand_in_f_basis");
    std::vector<double> coords(u.dim());
    for (std::size_t b = 0; b < u.dim(); ++b)
        coords[b] = zeta(u, static_cast<ConjugationMask>(b));
    return coords;
}

Element reconstruct_from_f_basis(Signature sig, const std::vector<double>& coords) {
    require_real_class(sig, "reconstruct_from_f_basis");
    if (coords.size() != sig.dim())
        throw DimensionMismatch("expected " + std::to_string(sig.dim()) +
                                " coordinates, got " + std::to_string(coords.size()));
    Element out(sig);
    const RealIdempotentFamily family(sig);
    for (std::size_t b = 0; b < coords.size(); ++b)
        out = add(out, scale(family.member(static_cast<ConjugationMask>(b)), coords[b]));
    return out;
}

std::pair<Element, Element> build_EO(Signature sig) {
    require_complex_class(sig, "build_EO");
    const double c = 1.0 / static_cast<double>(std::size_t{1} << (sig.n() - 1));
    ElementBuilder e(sig);
    ElementBuilder o(sig);
    for (std::size_t mask = 0; mask < sig.dim(); ++mask) {
        const int g = grade(static_cast<BladeMask>(mask));
        const double v = (g / 2) % 2 ? -c : c; // sign (-1)^floor(g/2)
        if (g % 2 == 0)
            e[static_cast<BladeMask>(mask)] = v;
        else
            o[static_cast<BladeMask>(mask)] = v;
    }
    return {e.take(), o.take()};
}

ComplexIdempotentFamily::ComplexIdempotentFamily(Signature sig, int excluded_generator)
    : sig_(sig), excluded_(excluded_generator),
      e_(Signature(0, 1)), o_(Signature(0, 1)) {
    require_complex_class(sig, "ComplexIdempotentFamily");
    if (excluded_ < 1 || excluded_ > sig.n())
        throw IndexOutOfRange("excluded generator out of range for " + sig.str());
    auto [e, o] = build_EO(sig);
    e_ = std::move(e);
    o_ = std::move(o);
}

EOPair ComplexIdempotentFamily::member(ConjugationMask b) const {
    if (b >= sig_.dim())
        throw IndexOutOfRange("conjugation mask out of range for " + sig_.str());
    if (b & (ConjugationMask{1} << (excluded_ - 1)))
        throw IndexOutOfRange("family mask must not contain the excluded generator " +
                              std::to_string(excluded_));
    return {conjugate(e_, b), conjugate(o_, b)};
}

std::complex<double> gamma(const Element& u, ConjugationMask b) {
    require_complex_class(u.sig(), "gamma");
    if (b >= u.dim())
        throw IndexOutOfRange("conjugation mask out of range for " + u.sig().str());
    if (b & 1)
        throw MaskContainsGeneratorOne("gamma masks range over subsets of {2..n}");
    // i^g cycles (1, i, -1, -i).
    std::complex<double> sum = 0.0;
    for (std::size_t mask = 0; mask < u.dim(); ++mask) {
        const int g = grade(static_cast<BladeMask>(mask));
        const int shared = std::popcount(static_cast<BladeMask>(mask) & b);
        double re = 0.0, im = 0.0;
        switch (g % 4) {
        case 0: re = 1.0; break;
        case 1: im = 1.0; break;
        case 2: re = -1.0; break;
        case 3: im = -1.0; break;
        }
        const double c = (shared & 1) ? -u[static_cast<BladeMask>(mask)]
                                      : u[static_cast<BladeMask>(mask)];
        sum += std::complex<double>(re * c, im * c);
    }
    return sum;
}

std::vector<std::complex<double>> expand_in_EO_basis(const Element& u) {
    require_complex_class(u.sig(), "expand_in_EO_basis");
    const std::size_t half = u.dim() / 2;
    std::vector<std::complex<double>> coords(half);
    for (std::size_t i = 0; i < half; ++i)
        coords[i] = gamma(u, static_cast<ConjugationMask>(i << 1));
    return coords;
}

Element reconstruct_from_EO_basis(Signature sig,
                                  const std::vector<std::complex<double>>& coords) {
    require_complex_class(sig, "reconstruct_from_EO_basis");
    if (coords.size() != sig.dim() / 2)
        throw DimensionMismatch("expected " + std::to_string(sig.dim() / 2) +
                                " coordinates, got " + std::to_string(coords.size()));
    Element out(sig);
    const ComplexIdempotentFamily family(sig);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const auto [e, o] = family.member(static_cast<ConjugationMask>(i << 1));
        out = add(out, add(scale(e, coords[i].real()), scale(o, coords[i].imag())));
    }
    return out;
}

} // namespace kseg
