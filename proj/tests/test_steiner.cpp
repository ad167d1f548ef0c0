#include "adc/constructions.hpp"
#include "adc/shapes.hpp"
#include "adc/steiner.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace adc;

TEST_CASE("basis preorder of the interval") {
    BasedADC c = cube(1);
    BasisPreorder p = basis_preorder(c);
    int v0 = c.index_of("0"), v1 = c.index_of("1"), e = c.index_of("?");
    CHECK(p.leq(v0, e));
    CHECK(p.leq(e, v1));
    CHECK(p.leq(v0, v1));
    CHECK(!p.leq(v1, v0));
    CHECK(p.below(v0) == 0);
    CHECK(p.above(v0) == 2);
    CHECK(p.scc_count == 3);
}

TEST_CASE("two-loop complex has a 4-cycle") {
    BasedADC a = two_loop();
    CHECK(a.validate().ok());
    CHECK(unital(a).ok());
    LoopFreeResult lf = strongly_loop_free(a);
    CHECK(!lf.loop_free);
    CHECK(lf.cycle.size() == 4);
    // the witness really is a cycle in the generating digraph's closure
    BasisPreorder p = basis_preorder(a);
    for (size_t i = 0; i < lf.cycle.size(); ++i)
        CHECK(p.leq(lf.cycle[i], lf.cycle[(i + 1) % lf.cycle.size()]));
    CHECK(!is_strong_steiner(a));
}

TEST_CASE("unitality failures are witnessed") {
    BasedADC a("nonunital");
    a.add_basis_element("x", 0);
    a.set_augmentation("x", 1);
    a.add_basis_element("e", 1);
    a.set_differential("e", ChainElement(0));  // d e = 0, so eps(d+ e) = 0 != 1
    CHECK(a.validate().ok());
    UnitalityReport u = unital(a);
    CHECK(!u.ok());
    CHECK(u.failures == std::vector<int>{a.index_of("e")});
}

TEST_CASE("strong steiner shapes") {
    CHECK(is_strong_steiner(unit()));
    CHECK(is_strong_steiner(cube(3)));
    CHECK(is_strong_steiner(oriental(3)));
    CHECK(is_strong_steiner(globe(4)));
    CHECK(is_strong_steiner(theta(parse_theta("s(s(*) v s(*)) v s(*)"))));
}

TEST_CASE("total order detection") {
    CHECK(is_total_order(cube(2)));
    CHECK(is_total_order(oriental(2)));
    CHECK(!is_total_order(direct_sum(cube(1), cube(1))));
}

TEST_CASE("signed lexicographic comparator") {
    CHECK(cube_signed_lex_cmp("0?", "0?") == 0);
    // no '?' below the differing spot: plain 0 < ? < 1
    CHECK(cube_signed_lex_cmp("00", "0?") == -1);
    CHECK(cube_signed_lex_cmp("0?", "01") == -1);
    // one '?' below: the order reverses
    CHECK(cube_signed_lex_cmp("1?", "0?") == -1);
    CHECK(cube_signed_lex_cmp("??", "0?") == -1);
    // antisymmetry on all pairs of the 3-cube
    BasedADC c = cube(3);
    for (int i = 0; i < c.size(); ++i)
        for (int j = 0; j < c.size(); ++j)
            CHECK(cube_signed_lex_cmp(c.basis(i).label, c.basis(j).label) ==
                  -cube_signed_lex_cmp(c.basis(j).label, c.basis(i).label));
}

TEST_CASE("automorphism groups") {
    CHECK(automorphisms(share(cube(2))).isos.size() == 1);
    CHECK(automorphisms(share(oriental(2))).isos.size() == 1);
    CHECK(automorphisms(share(direct_sum(cube(1), cube(1)))).isos.size() == 2);
    AllIsosResult r = automorphisms(share(cube(3)), 1);
    CHECK(r.status == SearchStatus::Inconclusive);
}
