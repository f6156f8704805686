#include "kseg/spectral.hpp"

#include <cmath>

#include "kseg/structure_maps.hpp"

namespace kseg {

namespace {

thread_local std::uint64_t g_op_count = 0;

void require_real_class(const Signature& sig, const char* what) {
    if (sig.q != 0)
        throw WrongIsomorphismClass(std::string(what) + " requires K(n,0), got " + sig.str());
}

void require_complex_class(const Signature& sig, const char* what) {
    if (sig.p != 0 || sig.n() < 1)
        throw WrongIsomorphismClass(std::string(what) + " requires K(0,n) with n >= 1, got " +
                                    sig.str());
}

// In-place sign-transform butterflies, ascending stride. Self-inverse up
// to a global factor 2^n.
void butterflies_real(std::vector<double>& x) {
    const std::size_t len = x.size();
    for (std::size_t h = 1; h < len; h <<= 1) {
        for (std::size_t i = 0; i < len; i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                const double a = x[j];
                const double b = x[j + h];
                x[j] = a + b;
                x[j + h] = a - b;
            }
        }
        g_op_count += len >> 1;
    }
}

// Complex butterflies (x, y) -> (x + i y, x - i y) for every stage.
void butterflies_complex(std::vector<double>& re, std::vector<double>& im,
                         bool inverse) {
    const std::size_t len = re.size();
    for (std::size_t h = 1; h < len; h <<= 1) {
        for (std::size_t i = 0; i < len; i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                const double ar = re[j], ai = im[j];
                const double br = re[j + h], bi = im[j + h];
                if (!inverse) {
                    // (a + i b, a - i b)
                    re[j] = ar - bi;
                    im[j] = ai + br;
                    re[j + h] = ar + bi;
                    im[j + h] = ai - br;
                } else {
                    // a = (s+ + s-)/2, b = -i (s+ - s-)/2 with s+ at j.
                    re[j] = 0.5 * (ar + br);
                    im[j] = 0.5 * (ai + bi);
                    re[j + h] = 0.5 * (ai - bi);
                    im[j + h] = 0.5 * (br - ar);
                }
            }
        }
        g_op_count += len >> 1;
    }
}

} // namespace

SpectrumVector forward_real(const Element& u) {
    require_real_class(u.sig(), "forward_real");
    std::vector<double> re(u.coeffs().begin(), u.coeffs().end());
    butterflies_real(re);
    return {SpectrumKind::Real, u.sig(), std::move(re), {}};
}

Element inverse_real(const SpectrumVector& s) {
    if (s.kind != SpectrumKind::Real)
        throw KindMismatch("inverse_real expects a real spectrum");
    std::vector<double> x = s.re;
    butterflies_real(x);
    const double norm = 1.0 / static_cast<double>(x.size());
    for (double& v : x)
        v *= norm;
    return Element(s.sig, std::move(x));
}

SpectrumVector forward_complex(const Element& u) {
    require_complex_class(u.sig(), "forward_complex");
    // Fold generator 1: component at compact index m is u[2m] + i u[2m+1].
    const std::size_t half = u.dim() / 2;
    std::vector<double> re(half), im(half);
    for (std::size_t m = 0; m < half; ++m) {
        re[m] = u[static_cast<BladeMask>(2 * m)];
        im[m] = u[static_cast<BladeMask>(2 * m + 1)];
    }
    g_op_count += half;
    butterflies_complex(re, im, /*inverse=*/false);
    return {SpectrumKind::Complex, u.sig(), std::move(re), std::move(im)};
}

Element inverse_complex(const SpectrumVector& s) {
    if (s.kind != SpectrumKind::Complex)
        throw KindMismatch("inverse_complex expects a complex spectrum");
    std::vector<double> re = s.re;
    std::vector<double> im = s.im;
    butterflies_complex(re, im, /*inverse=*/true);
    std::vector<double> coeffs(2 * re.size());
    for (std::size_t m = 0; m < re.size(); ++m) {
        coeffs[2 * m] = re[m];
        coeffs[2 * m + 1] = im[m];
    }
    g_op_count += re.size();
    return Element(s.sig, std::move(coeffs));
}

SpectrumVector forward(const Element& u) {
    if (u.sig().q == 0)
        return forward_real(u);
    if (u.sig().p == 0)
        return forward_complex(u);
    return forward_complex(canonicalize(u));
}

Element mul_fast(const Element& u, const Element& v) {
    if (!(u.sig() == v.sig()))
        throw SignatureMismatch("operands live in " + u.sig().str() + " and " +
                                v.sig().str());
    const Signature sig = u.sig();
    if (sig.q == 0) {
        SpectrumVector a = forward_real(u);
        const SpectrumVector b = forward_real(v);
        for (std::size_t i = 0; i < a.size(); ++i)
            a.re[i] *= b.re[i];
        g_op_count += a.size();
        return inverse_real(a);
    }
    if (sig.p == 0) {
        SpectrumVector a = forward_complex(u);
        const SpectrumVector b = forward_complex(v);
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double ar = a.re[i], ai = a.im[i];
            a.re[i] = ar * b.re[i] - ai * b.im[i];
            a.im[i] = ar * b.im[i] + ai * b.re[i];
        }
        g_op_count += a.size();
        return inverse_complex(a);
    }
    const CanonicalMap map(sig);
    return map.apply_inverse(mul_fast(map.apply(u), map.apply(v)));
}

namespace {

// Component magnitudes of the spectrum plus the resolved tolerance.
struct SingularScan {
    SpectrumVector s;
    std::vector<std::size_t> vanishing;
    double tol;
};

SingularScan scan_spectrum(const Element& u, double tol) {
    SingularScan scan{forward(u), {}, tol};
    double max_mag = 0.0;
    std::vector<double> mags(scan.s.size());
    for (std::size_t i = 0; i < scan.s.size(); ++i) {
        mags[i] = scan.s.kind == SpectrumKind::Real
                      ? std::abs(scan.s.re[i])
                      : std::hypot(scan.s.re[i], scan.s.im[i]);
        max_mag = std::max(max_mag, mags[i]);
    }
    if (scan.tol <= 0.0)
        scan.tol = 1e-12 * max_mag;
    for (std::size_t i = 0; i < mags.size(); ++i)
        if (mags[i] <= scan.tol)
            scan.vanishing.push_back(i);
    return scan;
}

} // namespace

bool is_invertible(const Element& u, double tol) {
    return scan_spectrum(u, tol).vanishing.empty();
}

Element invert(const Element& u, double tol) {
    SingularScan scan = scan_spectrum(u, tol);
    if (!scan.vanishing.empty()) {
        std::string msg = "spectral components vanish at indices";
        for (std::size_t i : scan.vanishing)
            msg += " " + std::to_string(i);
        throw NotInvertible(msg, std::move(scan.vanishing));
    }
    if (scan.s.kind == SpectrumKind::Real) {
        for (double& v : scan.s.re)
            v = 1.0 / v;
        const Element inv = inverse_real(scan.s);
        return u.sig().q == 0 ? inv : canonicalize_inverse(inv, u.sig());
    }
    for (std::size_t i = 0; i < scan.s.size(); ++i) {
        const double d = scan.s.re[i] * scan.s.re[i] + scan.s.im[i] * scan.s.im[i];
        scan.s.re[i] = scan.s.re[i] / d;
        scan.s.im[i] = -scan.s.im[i] / d;
    }
    const Element inv = inverse_complex(scan.s);
    return u.sig().p == 0 ? inv : canonicalize_inverse(inv, u.sig());
}

std::vector<Element> enumerate_idempotents(Signature sig) {
    const bool real_class = sig.q == 0;
    const std::size_t components = real_class ? sig.dim() : sig.dim() / 2;
    if (components > 16)
        throw TooLarge("would enumerate 2^" + std::to_string(components) +
                       " idempotents in " + sig.str());
    const std::size_t count = std::size_t{1} << components;

    std::vector<Element> out;
    out.reserve(count);
    for (std::size_t pattern = 0; pattern < count; ++pattern) {
        SpectrumVector s{real_class ? SpectrumKind::Real : SpectrumKind::Complex,
                         real_class ? sig : Signature(0, sig.n()),
                         std::vector<double>(components, 0.0),
                         real_class ? std::vector<double>{}
                                    : std::vector<double>(components, 0.0)};
        for (std::size_t i = 0; i < components; ++i)
            if (pattern & (std::size_t{1} << i))
                s.re[i] = 1.0;
        Element e = real_class ? inverse_real(s) : inverse_complex(s);
        out.push_back(sig.p == 0 || sig.q == 0 ? std::move(e)
                                               : canonicalize_inverse(e, sig));
    }
    return out;
}

std::uint64_t spectral_op_count() { return g_op_count; }
void reset_spectral_op_count() { g_op_count = 0; }

} // namespace kseg
