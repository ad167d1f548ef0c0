#include "adc/constructions.hpp"
#include "adc/nerve.hpp"
#include "adc/shapes.hpp"
#include "doctest.h"

using namespace adc;

TEST_CASE("atom tables") {
    BasedADC c = cube(2);
    NerveCell a = atom(c, "??");
    REQUIRE(a.dimension() == 2);
    CHECK(validate_cell(c, a).ok());
    CHECK(a.minus(2) == a.plus(2));
    ChainElement m1(1), p1(1);
    m1.add_term(c.index_of("1?"), 1);
    m1.add_term(c.index_of("?0"), 1);
    p1.add_term(c.index_of("0?"), 1);
    p1.add_term(c.index_of("?1"), 1);
    CHECK(a.minus(1) == m1);
    CHECK(a.plus(1) == p1);
    CHECK(a.minus(0) == ChainElement::basis(0, c.index_of("00")));
    CHECK(a.plus(0) == ChainElement::basis(0, c.index_of("11")));

    BasedADC o = oriental(2);
    NerveCell b = atom(o, "{0,1,2}");
    CHECK(validate_cell(o, b).ok());
    CHECK(b.minus(1) == ChainElement::basis(1, o.index_of("{0,2}")));
    ChainElement two(1);
    two.add_term(o.index_of("{0,1}"), 1);
    two.add_term(o.index_of("{1,2}"), 1);
    CHECK(b.plus(1) == two);

    for (int i = 0; i < c.size(); ++i)
        CHECK(validate_cell(c, atom(c, c.basis(i).label)).ok());
}

TEST_CASE("faces and identities") {
    BasedADC c = cube(2);
    NerveCell a = atom(c, "??");
    NerveCell s = cell_source(a, 1);
    NerveCell t = cell_target(a, 0);
    CHECK(s.dimension() == 1);
    CHECK(validate_cell(c, s).ok());
    CHECK(s.minus(1) == a.minus(1));
    CHECK(s.plus(1) == a.minus(1));  // forced top equality
    CHECK(t.dimension() == 0);
    CHECK(t.minus(0) == ChainElement::basis(0, c.index_of("11")));
    NerveCell id3 = cell_identity(a, 3);
    CHECK(id3.dimension() == 3);
    CHECK(validate_cell(c, id3).ok());
    CHECK(id3.minus(3).is_zero());
    CHECK(cell_source(id3, 2) == a);
}

TEST_CASE("composition glues pasting diagrams") {
    BasedADC w = wedge(oriental(1), oriental(1));
    NerveCell x = atom(w, "{0,1}");
    NerveCell y = atom(w, "r:{0,1}");
    REQUIRE(composable(x, y, 0));
    CHECK(!composable(y, x, 0));
    NerveCell z = compose(x, y, 0);
    CHECK(validate_cell(w, z).ok());
    ChainElement both(1);
    both.add_term(w.index_of("{0,1}"), 1);
    both.add_term(w.index_of("r:{0,1}"), 1);
    CHECK(z.minus(1) == both);
    CHECK(z.minus(0) == x.minus(0));
    CHECK(z.plus(0) == y.plus(0));
    CHECK_THROWS_AS(compose(y, x, 0), InvalidArgument);
}

TEST_CASE("enumeration oracles") {
    CHECK(enumerate_cells(globe(1), 2, 4).counts_by_dim(2) == std::vector<int>{2, 3, 3});
    CHECK(enumerate_cells(globe(2), 3, 4).counts_by_dim(3) == std::vector<int>{2, 4, 5, 5});
    CHECK(enumerate_cells(cube(1), 2, 4).counts_by_dim(2) == std::vector<int>{2, 3, 3});
    CellEnumeration c2 = enumerate_cells(cube(2), 2, 4);
    CHECK(c2.counts_by_dim(2) == std::vector<int>{4, 10, 11});
    CHECK(!c2.truncated);
    // counts are stable once the cap clears the largest coefficient
    CHECK(enumerate_cells(cube(2), 2, 5).counts_by_dim(2) == std::vector<int>{4, 10, 11});
}

TEST_CASE("axiom suite is clean on honest composition") {
    BasedADC c = cube(2);
    CellEnumeration en = enumerate_cells(c, 2, 4);
    CHECK(axiom_suite(c, en.cells).ok());
}

TEST_CASE("axiom suite rejects a composition without the overlap correction") {
    BasedADC c = cube(1);
    CellEnumeration en = enumerate_cells(c, 2, 4);
    // z = x + y with the overlapping q-target of x never subtracted
    ComposeFn no_overlap = [](const NerveCell& x, const NerveCell& y, int) {
        int d = std::max(x.dimension(), y.dimension());
        NerveCell z = cell_identity(x, d);
        NerveCell yy = cell_identity(y, d);
        for (size_t i = 0; i < z.table.size(); ++i) {
            z.table[i].first += yy.table[i].first;
            z.table[i].second += yy.table[i].second;
        }
        return z;
    };
    ValidationReport rep = axiom_suite(c, en.cells, no_overlap);
    CHECK(!rep.ok());
}
