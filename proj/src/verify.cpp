#include "kseg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>

#include "kseg/idempotent.hpp"
#include "kseg/spectral.hpp"
#include "kseg/structure_maps.hpp"
#include "kseg/textio.hpp"

namespace kseg {

Element random_element(Signature sig, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> coeffs(sig.dim());
    for (double& c : coeffs)
        c = dist(rng);
    return Element(sig, std::move(coeffs));
}

namespace {

std::vector<Signature> signatures_up_to(int n_max, int n_min = 1) {
    std::vector<Signature> sigs;
    for (int n = n_min; n <= n_max; ++n)
        for (int p = 0; p <= n; ++p)
            sigs.emplace_back(p, n - p);
    return sigs;
}

ConjugationMask random_mask(const Signature& sig, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, sig.dim() - 1);
    return static_cast<ConjugationMask>(dist(rng));
}

struct Runner {
    const VerifyOptions& opt;
    std::vector<CheckResult> results;

    void check(const std::string& label, const std::function<bool()>& body) {
        bool ok = false;
        try {
            ok = body();
        } catch (...) {
            ok = false;
        }
        results.push_back({label, ok});
    }
};

bool conjugation_axioms(const VerifyOptions& opt, int which) {
    std::mt19937_64 rng(opt.seed + 11 * which);
    for (const Signature& sig : signatures_up_to(opt.n_max)) {
        for (int s = 0; s < opt.samples; ++s) {
            const Element u = random_element(sig, rng);
            const Element v = random_element(sig, rng);
            const ConjugationMask a = random_mask(sig, rng);
            const ConjugationMask b = random_mask(sig, rng);
            switch (which) {
            case 0: // involution, exact
                if (!(conjugate(conjugate(u, a), a) == u))
                    return false;
                break;
            case 1: { // linearity, exact
                const Element lhs = conjugate(add(scale(u, 0.5), scale(v, -2.0)), a);
                const Element rhs = add(scale(conjugate(u, a), 0.5),
                                        scale(conjugate(v, a), -2.0));
                if (!(lhs == rhs))
                    return false;
                break;
            }
            case 2: // commutation, exact
                if (!(conjugate(conjugate(u, a), b) == conjugate(conjugate(u, b), a)))
                    return false;
                break;
            case 3: // group law: compose = symmetric difference
                if (!(conjugate(conjugate(u, a), b) == conjugate(u, a ^ b)))
                    return false;
                break;
            case 4: { // distributivity over products
                const Element lhs = conjugate(mul_naive(u, v), a);
                const Element rhs = mul_naive(conjugate(u, a), conjugate(v, a));
                if (!approx_equal(lhs, rhs, 0.0, 1e-10))
                    return false;
                break;
            }
            }
        }
    }
    return true;
}

bool multiplication_laws(const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed + 101);
    for (const Signature& sig : signatures_up_to(std::min(opt.n_max, 6))) {
        for (int s = 0; s < opt.samples; ++s) {
            const Element u = random_element(sig, rng);
            const Element v = random_element(sig, rng);
            const Element w = random_element(sig, rng);
            if (!(mul_naive(u, v) == mul_naive(v, u)))
                return false;
            if (!approx_equal(mul_naive(mul_naive(u, v), w),
                              mul_naive(u, mul_naive(v, w)), 0.0, 1e-12))
                return false;
            if (!(mul_naive(Element::unit(sig), u) == u))
                return false;
        }
    }
    return true;
}

bool grade_reconstruction(const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed + 102);
    for (const Signature& sig : signatures_up_to(opt.n_max)) {
        for (int s = 0; s < opt.samples; ++s) {
            const Element u = random_element(sig, rng);
            Element sum(sig);
            for (int k = 0; k <= sig.n(); ++k)
                sum = add(sum, grade_project(u, k));
            if (!(sum == u))
                return false;
        }
    }
    return true;
}

bool no_square_root_of_minus_one(const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed + 103);
    for (int n = 1; n <= opt.n_max; ++n) {
        const Signature sig(n, 0);
        for (int s = 0; s < opt.samples; ++s) {
            const Element u = random_element(sig, rng);
            if (grade_project(mul_naive(u, u), 0)[0] < 0.0)
                return false;
        }
    }
    return true;
}

bool real_family_products(const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed + 104);
    for (int n = 1; n <= opt.n_max; ++n) {
        const Signature sig(n, 0);
        const RealIdempotentFamily family(sig);
        const Element f = build_f(sig);
        Element sum(sig);
        for (std::size_t b = 0; b < sig.dim(); ++b) {
            const Element fb = family.member(static_cast<ConjugationMask>(b));
            if (!approx_equal(mul_naive(fb, fb), fb, 1e-12, 0.0))
                return false;
            if (b != 0 && !approx_equal(mul_naive(f, fb), Element(sig), 1e-12, 0.0))
                return false;
            for (int k = 1; k <= n; ++k) {
                const Element ek = Element::blade(sig, BladeMask{1} << (k - 1));
                const double sign = (b >> (k - 1)) & 1 ? -1.0 : 1.0;
                if (!approx_equal(mul_naive(ek, fb), scale(fb, sign), 1e-12, 0.0))
                    return false;
            }
            sum = add(sum, fb);
        }
        if (!approx_equal(sum, Element::unit(sig), 1e-12, 0.0))
            return false;
        for (std::size_t a = 0; a < sig.dim(); ++a)
            for (std::size_t b = 0; b < sig.dim(); ++b) {
                if (a == b)
                    continue;
                const Element prod = mul_naive(family.member(static_cast<ConjugationMask>(a)),
                                               family.member(static_cast<ConjugationMask>(b)));
                if (!approx_equal(prod, Element(sig), 1e-12, 0.0))
                    return false;
            }
        for (int s = 0; s < opt.samples; ++s) {
            const Element u = random_element(sig, rng);
            const ConjugationMask b = random_mask(sig, rng);
            const Element fb = family.member(b);
            if (!approx_equal(mul_naive(u, fb), scale(fb, zeta(u, b)), 1e-12, 0.0))
                return false;
        }
    }
    return true;
}

bool complex_family_products(const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed + 105);
    for (int n = 1; n <= opt.n_max; ++n) {
        const Signature sig(0, n);
        const ComplexIdempotentFamily family(sig);
        const auto [e0, o0] = build_EO(sig);
        const std::size_t half = sig.dim() / 2;
        Element sum(sig);
        for (std::size_t i = 0; i < half; ++i) {
            const ConjugationMask b = static_cast<ConjugationMask>(i << 1);
            const auto [eb, ob] = family.member(b);
            if (!approx_equal(mul_naive(eb, eb), eb, 1e-12, 0.0))
                return false;
            if (!approx_equal(mul_naive(ob, ob), scale(eb, -1.0), 1e-12, 0.0))
                return false;
            if (!approx_equal(mul_naive(eb, ob), ob, 1e-12, 0.0))
                return false;
            for (int k = 2; k <= n; ++k) {
                const Element ek = Element::blade(sig, BladeMask{1} << (k - 1));
                const bool in_b = (b >> (k - 1)) & 1;
                if (!approx_equal(mul_naive(ek, ob), scale(eb, in_b ? 1.0 : -1.0),
                                  1e-12, 0.0))
                    return false;
                if (!approx_equal(mul_naive(ek, eb), scale(ob, in_b ? -1.0 : 1.0),
                                  1e-12, 0.0))
                    return false;
            }
            if (i != 0) {
                for (const Element& x : {e0, o0})
                    for (const Element& y : {eb, ob})
                        if (!approx_equal(mul_naive(x, y), Element(sig), 1e-12, 0.0))
                            return false;
            }
            sum = add(sum, eb);
        }
        if (!approx_equal(sum, Element::unit(sig), 1e-12, 0.0))
            return false;
        // E_A equals E of the complement of A, for every A including ones
        // containing generator 1.
        for (std::size_t a = 0; a < sig.dim(); ++a) {
            const ConjugationMask comp =
                static_cast<ConjugationMask>((sig.dim() - 1) ^ a);
            if (!(conjugate(e0, static_cast<ConjugationMask>(a)) == conjugate(e0, comp)))
                return false;
        }
        for (int s = 0; s < opt.samples; ++s) {
            const Element u = random_element(sig, rng);
            const ConjugationMask b =
                static_cast<ConjugationMask>(random_mask(sig, rng) & ~ConjugationMask{1});
            const auto [eb, ob] = family.member(b);
            const std::complex<double> g = gamma(u, b);
            const Element rhs = add(scale(eb, g.real()), scale(ob, g.imag()));
            if (!approx_equal(mul_naive(u, eb), rhs, 1e-12, 0.0))
                return false;
        }
    }
    return true;
}

bool basis_round_trips(const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed + 106);
    for (int n = 1; n <= opt.n_max; ++n) {
        for (int s = 0; s < opt.samples; ++s) {
            const Signature real_sig(n, 0);
            const Element u = random_element(real_sig, rng);
            if (!approx_equal(reconstruct_from_f_basis(real_sig, expand_in_f_basis(u)), u,
                              1e-12, 0.0))
                return false;
            const Signature cplx_sig(0, n);
            const Element v = random_element(cplx_sig, rng);
            if (!approx_equal(reconstruct_from_EO_basis(cplx_sig, expand_in_EO_basis(v)), v,
                              1e-12, 0.0))
                return false;
        }
    }
    return true;
}

bool spectral_round_trips(const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed + 107);
    for (int n = 1; n <= std::max(opt.n_max, 8); ++n) {
        const Signature real_sig(n, 0);
        const Signature cplx_sig(0, n);
        for (int s = 0; s < opt.samples; ++s) {
            const Element u = random_element(real_sig, rng);
            if (!approx_equal(inverse_real(forward_real(u)), u, 1e-12, 0.0))
                return false;
            const Element v = random_element(cplx_sig, rng);
            if (!approx_equal(inverse_complex(forward_complex(v)), v, 1e-12, 0.0))
                return false;
        }
    }
    return true;
}

bool spectrum_matches_functionals(const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed + 108);
    for (int n = 1; n <= opt.n_max; ++n) {
        const Signature real_sig(n, 0);
        const Signature cplx_sig(0, n);
        for (int s = 0; s < opt.samples; ++s) {
            const Element u = random_element(real_sig, rng);
            const SpectrumVector su = forward_real(u);
            for (std::size_t b = 0; b < su.size(); ++b)
                if (std::abs(su.re[b] - zeta(u, static_cast<ConjugationMask>(b))) > 1e-12)
                    return false;
            const Element v = random_element(cplx_sig, rng);
            const SpectrumVector sv = forward_complex(v);
            for (std::size_t i = 0; i < sv.size(); ++i) {
                const std::complex<double> g =
                    gamma(v, static_cast<ConjugationMask>(i << 1));
                if (std::abs(sv.re[i] - g.real()) > 1e-12 ||
                    std::abs(sv.im[i] - g.imag()) > 1e-12)
                    return false;
            }
        }
    }
    return true;
}

bool spectral_homomorphism(const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed + 109);
    for (int n = 1; n <= opt.n_max; ++n) {
        for (const Signature& sig : {Signature(n, 0), Signature(0, n)}) {
            for (int s = 0; s < opt.samples; ++s) {
                const Element u = random_element(sig, rng);
                const Element v = random_element(sig, rng);
                const SpectrumVector su = forward(u);
                const SpectrumVector sv = forward(v);
                const SpectrumVector sp = forward(mul_naive(u, v));
                for (std::size_t i = 0; i < sp.size(); ++i) {
                    if (su.kind == SpectrumKind::Real) {
                        if (std::abs(sp.re[i] - su.re[i] * sv.re[i]) >
                            1e-10 * std::max(1.0, std::abs(sp.re[i])))
                            return false;
                    } else {
                        const std::complex<double> a(su.re[i], su.im[i]);
                        const std::complex<double> b(sv.re[i], sv.im[i]);
                        const std::complex<double> c(sp.re[i], sp.im[i]);
                        if (std::abs(c - a * b) > 1e-10 * std::max(1.0, std::abs(c)))
                            return false;
                    }
                }
            }
        }
    }
    return true;
}

bool conjugation_permutes_spectrum(const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed + 110);
    auto sorted_mags = [](const SpectrumVector& s) {
        std::vector<double> mags(s.size());
        for (std::size_t i = 0; i < s.size(); ++i)
            mags[i] = s.kind == SpectrumKind::Real ? s.re[i]
                                                   : std::hypot(s.re[i], s.im[i]);
        std::sort(mags.begin(), mags.end());
        return mags;
    };
    for (int n = 1; n <= opt.n_max; ++n) {
        for (const Signature& sig : {Signature(n, 0), Signature(0, n)}) {
            for (int s = 0; s < opt.samples; ++s) {
                const Element u = random_element(sig, rng);
                const ConjugationMask a = random_mask(sig, rng);
                const std::vector<double> before = sorted_mags(forward(u));
                const std::vector<double> after = sorted_mags(forward(conjugate(u, a)));
                for (std::size_t i = 0; i < before.size(); ++i)
                    if (std::abs(before[i] - after[i]) > 1e-10)
                        return false;
            }
        }
    }
    return true;
}

bool canonicalize_checks(const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed + 111);
    for (const Signature& sig : signatures_up_to(opt.n_max)) {
        if (sig.q == 0)
            continue;
        const CanonicalMap map(sig);
        // Bijection on blades: both round trips are the identity on every
        // basis blade.
        for (std::size_t m = 0; m < sig.dim(); ++m) {
            const Element blade = Element::blade(sig, static_cast<BladeMask>(m));
            if (!(map.apply_inverse(map.apply(blade)) == blade))
                return false;
            const Element target_blade =
                Element::blade(map.target(), static_cast<BladeMask>(m));
            if (!(map.apply(map.apply_inverse(target_blade)) == target_blade))
                return false;
        }
        for (int s = 0; s < opt.samples; ++s) {
            const Element u = random_element(sig, rng);
            const Element v = random_element(sig, rng);
            if (!approx_equal(map.apply(mul_naive(u, v)),
                              mul_naive(map.apply(u), map.apply(v)), 1e-12, 1e-10))
                return false;
        }
    }
    return true;
}

bool tensor_checks(const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed + 112);
    for (const Signature& a : signatures_up_to(std::min(opt.n_max, 2))) {
        for (const Signature& b : signatures_up_to(std::min(opt.n_max, 2))) {
            for (int s = 0; s < opt.samples; ++s) {
                const Element u1 = random_element(a, rng);
                const Element v1 = random_element(a, rng);
                const Element u2 = random_element(b, rng);
                const Element v2 = random_element(b, rng);
                const Element lhs = tensor_embed(mul_naive(u1, v1), mul_naive(u2, v2));
                const Element rhs = mul_naive(tensor_embed(u1, u2), tensor_embed(v1, v2));
                if (!approx_equal(lhs, rhs, 1e-12, 1e-10))
                    return false;
                if (!(tensor_embed(u1, Element::unit(b)).sig() ==
                      Signature(a.p + b.p, a.q + b.q)))
                    return false;
            }
        }
    }
    return true;
}

bool idempotent_enumeration(const VerifyOptions& opt) {
    for (int n = 1; n <= 2; ++n) {
        for (const Signature& sig : {Signature(n, 0), Signature(0, n)}) {
            const std::size_t components = sig.q == 0 ? sig.dim() : sig.dim() / 2;
            const std::vector<Element> idems = enumerate_idempotents(sig);
            if (idems.size() != (std::size_t{1} << components))
                return false;
            for (const Element& u : idems)
                if (!approx_equal(mul_naive(u, u), u, 1e-12, 0.0))
                    return false;
        }
    }
    return true;
}

bool inversion_round_trip(const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed + 113);
    std::uniform_real_distribution<double> mag(0.1, 10.0);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    std::bernoulli_distribution coin;
    for (const Signature& sig : signatures_up_to(opt.n_max)) {
        for (int s = 0; s < opt.samples; ++s) {
            // Sample a well-conditioned spectrum and pull it back.
            Element u(sig);
            if (sig.q == 0) {
                SpectrumVector sv{SpectrumKind::Real, sig,
                                  std::vector<double>(sig.dim()), {}};
                for (double& x : sv.re)
                    x = (coin(rng) ? 1.0 : -1.0) * mag(rng);
                u = inverse_real(sv);
            } else {
                const Signature canon(0, sig.n());
                SpectrumVector sv{SpectrumKind::Complex, canon,
                                  std::vector<double>(canon.dim() / 2),
                                  std::vector<double>(canon.dim() / 2)};
                for (std::size_t i = 0; i < sv.size(); ++i) {
                    const double m = mag(rng);
                    const double t = angle(rng);
                    sv.re[i] = m * std::cos(t);
                    sv.im[i] = m * std::sin(t);
                }
                const Element v = inverse_complex(sv);
                u = sig.p == 0 ? v : canonicalize_inverse(v, sig);
            }
            if (!approx_equal(mul_naive(u, invert(u)), Element::unit(sig), 1e-8, 0.0))
                return false;
        }
    }
    return true;
}

bool textio_round_trip(const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed + 114);
    for (const Signature& sig : signatures_up_to(opt.n_max)) {
        for (int s = 0; s < opt.samples; ++s) {
            const Element u = random_element(sig, rng);
            if (!(parse_element(print_element(u), sig) == u))
                return false;
            if (!(from_json(to_json(u)) == u))
                return false;
            if (!(from_json(to_json(u, /*sparse=*/true)) == u))
                return false;
        }
    }
    return true;
}

} // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
    Runner r{opt, {}};
    r.check("conjugation is an involution", [&] { return conjugation_axioms(opt, 0); });
    r.check("conjugation is linear", [&] { return conjugation_axioms(opt, 1); });
    r.check("conjugations commute", [&] { return conjugation_axioms(opt, 2); });
    r.check("conjugations compose by symmetric difference",
            [&] { return conjugation_axioms(opt, 3); });
    r.check("conjugation distributes over multiplication",
            [&] { return conjugation_axioms(opt, 4); });
    r.check("multiplication is commutative, associative, unital",
            [&] { return multiplication_laws(opt); });
    r.check("grade projections reconstruct the element",
            [&] { return grade_reconstruction(opt); });
    r.check("no element of K(n,0) squares to -1",
            [&] { return no_square_root_of_minus_one(opt); });
    r.check("real idempotent family product table",
            [&] { return real_family_products(opt); });
    r.check("complex idempotent family product table",
            [&] { return complex_family_products(opt); });
    r.check("idempotent-basis expansions round trip",
            [&] { return basis_round_trips(opt); });
    r.check("fast transforms round trip", [&] { return spectral_round_trips(opt); });
    r.check("fast transforms agree with the slow functionals",
            [&] { return spectrum_matches_functionals(opt); });
    r.check("transforms turn products into pointwise products",
            [&] { return spectral_homomorphism(opt); });
    r.check("conjugation permutes spectral components",
            [&] { return conjugation_permutes_spectrum(opt); });
    r.check("canonicalization is a bijective homomorphism",
            [&] { return canonicalize_checks(opt); });
    r.check("tensor embedding is multiplicative", [&] { return tensor_checks(opt); });
    r.check("idempotent enumeration is exact at small sizes",
            [&] { return idempotent_enumeration(opt); });
    r.check("inversion round trips on well-conditioned elements",
            [&] { return inversion_round_trip(opt); });
    r.check("text and JSON round trips are exact",
            [&] { return textio_round_trip(opt); });
    return r.results;
}

} // namespace kseg
