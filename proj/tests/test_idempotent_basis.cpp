#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kseg/idempotent.hpp"
#include "kseg/verify.hpp"

using namespace kseg;

TEST_CASE("build_f values") {
    CHECK(build_f(Signature(1, 0)) == Element(Signature(1, 0), {0.5, 0.5}));
    CHECK(build_f(Signature(2, 0)) ==
          Element(Signature(2, 0), {0.25, 0.25, 0.25, 0.25}));
    CHECK_THROWS_AS(build_f(Signature(1, 1)), WrongIsomorphismClass);

    const Element f = build_f(Signature(4, 0));
    CHECK(approx_equal(mul_naive(f, f), f, 1e-14, 0.0));
}

TEST_CASE("f family at n=1 and product table at n=3") {
    const Signature s1(1, 0);
    const RealIdempotentFamily fam1(s1);
    CHECK(fam1.member(0) == Element(s1, {0.5, 0.5}));
    CHECK(fam1.member(1) == Element(s1, {0.5, -0.5}));

    const Signature s3(3, 0);
    const RealIdempotentFamily fam3(s3);
    for (std::size_t a = 0; a < s3.dim(); ++a)
        for (std::size_t b = 0; b < s3.dim(); ++b) {
            const Element prod = mul_naive(fam3.member(static_cast<ConjugationMask>(a)),
                                           fam3.member(static_cast<ConjugationMask>(b)));
            const Element want =
                a == b ? fam3.member(static_cast<ConjugationMask>(a)) : Element(s3);
            CHECK(approx_equal(prod, want, 1e-14, 0.0));
        }

    const Signature s4(4, 0);
    const RealIdempotentFamily fam4(s4);
    Element sum(s4);
    for (std::size_t b = 0; b < s4.dim(); ++b)
        sum = add(sum, fam4.member(static_cast<ConjugationMask>(b)));
    CHECK(approx_equal(sum, Element::unit(s4), 1e-14, 0.0));
}

TEST_CASE("generator action on f_B and f f_B = 0") {
    for (int n = 1; n <= 5; ++n) {
        const Signature sig(n, 0);
        const RealIdempotentFamily fam(sig);
        const Element f = build_f(sig);
        for (std::size_t b = 0; b < sig.dim(); ++b) {
            const Element fb = fam.member(static_cast<ConjugationMask>(b));
            for (int k = 1; k <= n; ++k) {
                const Element ek = Element::blade(sig, BladeMask{1} << (k - 1));
                const double sign = (b >> (k - 1)) & 1 ? -1.0 : 1.0;
                CHECK(approx_equal(mul_naive(ek, fb), scale(fb, sign), 1e-14, 0.0));
            }
            if (b != 0)
                CHECK(approx_equal(mul_naive(f, fb), Element(sig), 1e-14, 0.0));
        }
    }
}

TEST_CASE("zeta values and eigenvalue property") {
    const Signature sig(2, 0);
    CHECK(zeta(Element::unit(sig), 0) == 1.0);
    CHECK(zeta(Element::unit(sig), 0b11) == 1.0);
    CHECK(zeta(Element::blade(sig, 0b01), 0b01) == -1.0);
    CHECK_THROWS_AS(zeta(Element::unit(Signature(0, 2)), 0), WrongIsomorphismClass);

    std::mt19937_64 rng(5);
    const Signature s4(4, 0);
    const RealIdempotentFamily fam(s4);
    for (int i = 0; i < 20; ++i) {
        const Element u = random_element(s4, rng);
        for (std::size_t b = 0; b < s4.dim(); ++b) {
            const Element fb = fam.member(static_cast<ConjugationMask>(b));
            CHECK(approx_equal(mul_naive(u, fb),
                               scale(fb, zeta(u, static_cast<ConjugationMask>(b))),
                               1e-13, 0.0));
        }
    }
}

TEST_CASE("build_EO values") {
    const Signature s2(0, 2);
    auto [e2, o2] = build_EO(s2);
    CHECK(e2 == Element(s2, {0.5, 0.0, 0.0, -0.5}));
    CHECK(o2 == Element(s2, {0.0, 0.5, 0.5, 0.0}));

    const Signature s1(0, 1);
    auto [e1, o1] = build_EO(s1);
    CHECK(e1 == Element::unit(s1));
    CHECK(o1 == Element::blade(s1, 1));

    CHECK_THROWS_AS(build_EO(Signature(1, 1)), WrongIsomorphismClass);

    const Signature s4(0, 4);
    auto [e4, o4] = build_EO(s4);
    CHECK(approx_equal(mul_naive(e4, e4), e4, 1e-14, 0.0));
    CHECK(approx_equal(mul_naive(o4, o4), scale(e4, -1.0), 1e-14, 0.0));
    CHECK(approx_equal(mul_naive(e4, o4), o4, 1e-14, 0.0));
}

TEST_CASE("EO family product tables and symmetry") {
    const Signature s2(0, 2);
    const ComplexIdempotentFamily fam2(s2);
    const auto [eb, ob] = fam2.member(0b10);
    CHECK(eb == Element(s2, {0.5, 0.0, 0.0, 0.5}));
    CHECK(ob == Element(s2, {0.0, 0.5, -0.5, 0.0}));
    CHECK_THROWS_AS(fam2.member(0b01), IndexOutOfRange);

    const Signature s3(0, 3);
    const ComplexIdempotentFamily fam3(s3);
    for (std::size_t i = 0; i < s3.dim() / 2; ++i)
        for (std::size_t j = 0; j < s3.dim() / 2; ++j) {
            if (i == j)
                continue;
            const auto a = fam3.member(static_cast<ConjugationMask>(i << 1));
            const auto b = fam3.member(static_cast<ConjugationMask>(j << 1));
            CHECK(approx_equal(mul_naive(a.e, b.e), Element(s3), 1e-14, 0.0));
            CHECK(approx_equal(mul_naive(a.o, b.o), Element(s3), 1e-14, 0.0));
            CHECK(approx_equal(mul_naive(a.e, b.o), Element(s3), 1e-14, 0.0));
        }

    const Signature s4(0, 4);
    const ComplexIdempotentFamily fam4(s4);
    Element sum(s4);
    for (std::size_t i = 0; i < s4.dim() / 2; ++i)
        sum = add(sum, fam4.member(static_cast<ConjugationMask>(i << 1)).e);
    CHECK(approx_equal(sum, Element::unit(s4), 1e-14, 0.0));

    // E_A = E_{A^c} for every A, n <= 5.
    for (int n = 1; n <= 5; ++n) {
        const Signature sig(0, n);
        const Element e = build_EO(sig).first;
        for (std::size_t a = 0; a < sig.dim(); ++a) {
            const ConjugationMask comp = static_cast<ConjugationMask>((sig.dim() - 1) ^ a);
            CHECK(conjugate(e, static_cast<ConjugationMask>(a)) == conjugate(e, comp));
        }
    }
}

TEST_CASE("generator action on E_B, O_B") {
    for (int n = 2; n <= 5; ++n) {
        const Signature sig(0, n);
        const ComplexIdempotentFamily fam(sig);
        for (std::size_t i = 0; i < sig.dim() / 2; ++i) {
            const ConjugationMask b = static_cast<ConjugationMask>(i << 1);
            const auto [eb, ob] = fam.member(b);
            for (int k = 2; k <= n; ++k) {
                const Element ek = Element::blade(sig, BladeMask{1} << (k - 1));
                const bool in_b = (b >> (k - 1)) & 1;
                CHECK(approx_equal(mul_naive(ek, ob), scale(eb, in_b ? 1.0 : -1.0),
                                   1e-14, 0.0));
                CHECK(approx_equal(mul_naive(ek, eb), scale(ob, in_b ? -1.0 : 1.0),
                                   1e-14, 0.0));
            }
        }
    }
}

TEST_CASE("gamma values and eigen relation") {
    const Signature s2(0, 2);
    CHECK(gamma(Element::unit(s2), 0) == std::complex<double>(1.0, 0.0));
    CHECK(gamma(Element::blade(s2, 0b01), 0) == std::complex<double>(0.0, 1.0));
    CHECK_THROWS_AS(gamma(Element::unit(s2), 0b01), MaskContainsGeneratorOne);
    CHECK_THROWS_AS(gamma(Element::unit(Signature(2, 0)), 0), WrongIsomorphismClass);

    std::mt19937_64 rng(9);
    const Signature s4(0, 4);
    const ComplexIdempotentFamily fam(s4);
    for (int i = 0; i < 20; ++i) {
        const Element u = random_element(s4, rng);
        for (std::size_t j = 0; j < s4.dim() / 2; ++j) {
            const ConjugationMask c = static_cast<ConjugationMask>(j << 1);
            const auto [ec, oc] = fam.member(c);
            const std::complex<double> g = gamma(u, c);
            CHECK(approx_equal(mul_naive(u, ec),
                               add(scale(ec, g.real()), scale(oc, g.imag())),
                               1e-13, 0.0));
        }
    }
}

TEST_CASE("basis expansions round trip and hit indicators") {
    // u = 1 has all-ones f coordinates.
    const Signature s3(3, 0);
    for (double c : expand_in_f_basis(Element::unit(s3)))
        CHECK(c == doctest::Approx(1.0).epsilon(1e-14));

    // u = f_B expands to the indicator of B; full rank via round trips.
    const RealIdempotentFamily fam(s3);
    for (std::size_t b = 0; b < s3.dim(); ++b) {
        const auto coords = expand_in_f_basis(fam.member(static_cast<ConjugationMask>(b)));
        for (std::size_t i = 0; i < coords.size(); ++i)
            CHECK(coords[i] == doctest::Approx(i == b ? 1.0 : 0.0).epsilon(1e-13));
    }

    std::mt19937_64 rng(13);
    const Signature s5(5, 0);
    for (int i = 0; i < 10; ++i) {
        const Element u = random_element(s5, rng);
        CHECK(approx_equal(reconstruct_from_f_basis(s5, expand_in_f_basis(u)), u,
                           1e-12, 0.0));
    }

    const Signature c3(0, 3);
    const ComplexIdempotentFamily cfam(c3);
    for (std::size_t i = 0; i < c3.dim() / 2; ++i) {
        const auto [eb, ob] = cfam.member(static_cast<ConjugationMask>(i << 1));
        const auto ce = expand_in_EO_basis(eb);
        const auto co = expand_in_EO_basis(ob);
        for (std::size_t j = 0; j < ce.size(); ++j) {
            CHECK(std::abs(ce[j] - std::complex<double>(i == j ? 1.0 : 0.0, 0.0)) < 1e-13);
            CHECK(std::abs(co[j] - std::complex<double>(0.0, i == j ? 1.0 : 0.0)) < 1e-13);
        }
    }

    const Signature c5(0, 5);
    for (int i = 0; i < 10; ++i) {
        const Element u = random_element(c5, rng);
        CHECK(approx_equal(reconstruct_from_EO_basis(c5, expand_in_EO_basis(u)), u,
                           1e-12, 0.0));
    }
}

TEST_CASE("family with a different excluded generator") {
    const Signature sig(0, 3);
    const ComplexIdempotentFamily fam(sig, 2);
    CHECK_THROWS_AS(fam.member(0b010), IndexOutOfRange);
    const auto [eb, ob] = fam.member(0b101);
    CHECK(approx_equal(mul_naive(eb, eb), eb, 1e-14, 0.0));
    CHECK(approx_equal(mul_naive(ob, ob), scale(eb, -1.0), 1e-14, 0.0));
    CHECK_THROWS_AS(ComplexIdempotentFamily(sig, 4), IndexOutOfRange);
}
