#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "adc/map.hpp"
#include "adc/shapes.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace adc;

TEST_CASE("chain element arithmetic") {
    ChainElement x(1);
    x.add_term(3, 2);
    x.add_term(1, -1);
    x.add_term(3, -2);  // cancels
    CHECK(x.terms().size() == 1);
    CHECK(x.coeff(1) == -1);
    CHECK(x.coeff(3) == 0);

    ChainElement y = ChainElement::basis(1, 1) + ChainElement::basis(1, 2);
    CHECK((x + y).coeff(1) == 0);
    CHECK((y - y).is_zero());
    CHECK(y.scaled(3).coeff(2) == 3);
    CHECK(y.scaled(0).is_zero());
}

TEST_CASE("decompose splits into disjoint nonnegative parts") {
    std::mt19937 rng(20260823);
    std::uniform_int_distribution<int> idx(0, 11), coef(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        ChainElement x(2);
        for (int t = 0; t < 6; ++t) x.add_term(idx(rng), coef(rng));
        auto [plus, minus] = x.decompose();
        CHECK(plus.is_nonnegative());
        CHECK(minus.is_nonnegative());
        CHECK(plus - minus == x);
        for (int i : plus.support()) CHECK(minus.coeff(i) == 0);
    }
}

TEST_CASE("coefficient overflow is a hard error") {
    ChainElement x = ChainElement::basis(0, 0, INT64_MAX);
    CHECK_THROWS_AS(x.add_term(0, 1), OverflowError);
    CHECK_THROWS_AS(x.scaled(2), OverflowError);
}

TEST_CASE("validate catches dd != 0 and eps d != 0") {
    BasedADC a("bad");
    a.add_basis_element("p", 0);
    a.add_basis_element("q", 0);
    a.add_basis_element("e", 1);
    a.add_basis_element("f", 2);
    a.set_augmentation("p", 1);
    a.set_augmentation("q", 1);
    ChainElement de(0);
    de.add_term(0, 1);  // eps(de) = 1, not 0
    a.set_differential("e", de);
    a.set_differential("f", ChainElement::basis(1, 2));  // d(df) = de != 0
    ValidationReport rep = a.validate();
    CHECK(!rep.ok());
    bool saw_dd = false, saw_eps = false;
    for (const auto& v : rep.violations) {
        if (v.code == "dd_nonzero") saw_dd = true;
        if (v.code == "eps_d_nonzero") saw_eps = true;
    }
    CHECK(saw_dd);
    CHECK(saw_eps);
    CHECK(two_loop().validate().ok());  // loops are fine for the chain axioms
}

TEST_CASE("boundary halves of the 2-cube") {
    BasedADC c = cube(2);
    ChainElement top = ChainElement::basis(2, c.index_of("??"));
    ChainElement dplus = c.boundary_pm(top, +1);
    ChainElement dminus = c.boundary_pm(top, -1);
    CHECK(dplus.coeff(c.index_of("0?")) == 1);
    CHECK(dplus.coeff(c.index_of("?1")) == 1);
    CHECK(dplus.terms().size() == 2);
    CHECK(dminus.coeff(c.index_of("1?")) == 1);
    CHECK(dminus.coeff(c.index_of("?0")) == 1);
    CHECK(dplus - dminus == c.boundary(top));
    CHECK(c.epsilon(c.boundary(ChainElement::basis(1, c.index_of("0?")))) == 0);
}

TEST_CASE("format_chain") {
    BasedADC o = oriental(2);
    ChainElement x(1);
    x.add_term(o.index_of("{0,1}"), 2);
    x.add_term(o.index_of("{1,2}"), -1);
    CHECK(format_chain(o, x) == "2·{0,1} - {1,2}");
    CHECK(format_chain(o, ChainElement(1)) == "0");
}

TEST_CASE("map validation, composition, bijections") {
    AdcPtr g = share(globe(1));
    AdcPtr c = share(cube(1));
    ADCMap f = ADCMap::from_basis_images(g, c, [&](const BasisElement& e) {
        if (e.degree == 1) return ChainElement::basis(1, c->index_of("?"));
        return ChainElement::basis(0, c->index_of(g->index_of(e.label) == 0 ? "0" : "1"));
    });
    CHECK(f.validate().ok());
    CHECK(f.is_basis_bijection());
    ADCMap finv = f.inverse_of_bijection();
    CHECK(compose_maps(f, finv) == ADCMap::identity(g));
    CHECK(compose_maps(finv, f) == ADCMap::identity(c));
    CHECK(f.compose_after(ADCMap::identity(g)) == f);

    // collapsing the edge to a vertex breaks the chain condition
    ADCMap bad = ADCMap::from_basis_images(c, c, [&](const BasisElement& e) {
        return ChainElement::basis(e.degree, e.degree == 1 ? c->index_of("?") : c->index_of("0"));
    });
    bad.set_image(c->index_of("1"), ChainElement::basis(0, c->index_of("0")));
    ValidationReport rep = bad.validate();
    CHECK(!rep.ok());
    CHECK(rep.violations[0].code == "chain");
}
