#include "adc/constructions.hpp"
#include "adc/shapes.hpp"
#include "adc/steiner.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace adc;

namespace {

std::string strip_tensor_sign(const std::string& l) {
    std::string out;
    for (size_t i = 0; i < l.size();) {
        if (l.compare(i, 3, "⊗") == 0) {
            i += 3;
        } else {
            out += l[i++];
        }
    }
    return out;
}

}  // namespace

TEST_CASE("tensor of intervals is the square, on the nose") {
    BasedADC t = relabel(tensor(cube(1), cube(1)), strip_tensor_sign, "sq");
    CHECK(t == cube(2));
    BasedADC t3 = relabel(tensor(cube(2), cube(1)), strip_tensor_sign, "c3");
    CHECK(t3 == cube(3));
}

TEST_CASE("tensor ranks and isomorphy") {
    BasedADC t = tensor(cube(1), cube(2));
    CHECK(t.degree_ranks() == std::vector<int>{8, 12, 6, 1});
    CHECK(iso_search(share(t), share(cube(3))).found());
    CHECK(t.validate().ok());
    CHECK(is_strong_steiner(t));

    // monoidal unit
    CHECK(relabel(tensor(unit(), cube(2)),
                  [](const std::string& l) { return l.substr(std::string("*⊗").size()); },
                  "u") == cube(2));
}

TEST_CASE("koszul rule sensitivity") {
    TensorOptions std_rule;
    std_rule.rule = KoszulRule::Standard;
    BasedADC rev = tensor(cube(1), cube(1));
    BasedADC std_t = tensor(cube(1), cube(1), std_rule);
    CHECK(rev != std_t);
    CHECK(std_t.validate().ok());  // still a chain complex, just oriented differently
    int top = std_t.index_of("?⊗?");
    CHECK(std_t.differential(top) != rev.differential(rev.index_of("?⊗?")));
}

TEST_CASE("suspension") {
    CHECK(suspend(unit()) == globe(1));
    BasedADC s = suspend(cube(1));
    CHECK(s.degree_ranks() == std::vector<int>{2, 2, 1});
    CHECK(s.has_label("σ?"));
    CHECK(s.boundary(ChainElement::basis(2, s.index_of("σ?"))) ==
          ChainElement::basis(1, s.index_of("σ1")) - ChainElement::basis(1, s.index_of("σ0")));
    CHECK(is_strong_steiner(s));
}

TEST_CASE("duality is an involution and flips the selected degrees") {
    for (const BasedADC& a : {cube(2), oriental(2), globe(3), theta(parse_theta("s(*) v s(s(*))"))}) {
        for (const DualitySelector& tau :
             {DualitySelector::odd(), DualitySelector::even(), DualitySelector::total()}) {
            CHECK(dual(dual(a, tau), tau) == a);
        }
    }
    BasedADC d = dual(cube(1), DualitySelector::total());
    CHECK(d.differential(d.index_of("?")) ==
          ChainElement::basis(0, d.index_of("0")) - ChainElement::basis(0, d.index_of("1")));
    CHECK(dual(cube(1), DualitySelector::even()) == cube(1));  // no even degrees >= 1 in play

    std::vector<bool> mask{true, false};
    BasedADC m = dual(cube(2), DualitySelector::from_mask(mask));
    CHECK(m == dual(cube(2), DualitySelector::odd()));  // cube(2) has degrees 1, 2; mask flips 1
}

TEST_CASE("wedge and direct sum") {
    BasedADC w = wedge(cube(1), cube(1));
    CHECK(w.degree_ranks() == std::vector<int>{3, 2});
    CHECK(w.bipointed());
    auto [s, t] = w.bipointing();
    CHECK(w.basis(s).label == "0");
    CHECK(w.basis(t).label == "r:1");
    CHECK(is_strong_steiner(w));

    BasedADC d = direct_sum(cube(1), oriental(2));
    CHECK(d.degree_ranks() == std::vector<int>{5, 4, 1});
    CHECK(d.validate().ok());
}

TEST_CASE("degreewise pushout glues intervals") {
    AdcPtr pt = share(unit());
    AdcPtr c1 = share(cube(1));
    auto incl_at = [&](const std::string& v) {
        return ADCMap::from_basis_images(pt, c1, [&, v](const BasisElement&) {
            return ChainElement::basis(0, c1->index_of(v));
        });
    };
    // glue two intervals end to start: a 2-step path
    PushoutResult p = degreewise_pushout({incl_at("1"), incl_at("0")});
    REQUIRE(p.is_based);
    CHECK(!p.has_torsion());
    CHECK(p.free_ranks == std::vector<int>{3, 2});
    CHECK(p.inl.validate().ok());
    CHECK(p.inr.validate().ok());
    CHECK(p.complex->validate().ok());
    CHECK(compose_maps(incl_at("1"), p.inl) == compose_maps(incl_at("0"), p.inr));
    CHECK(iso_search(p.complex, share(wedge(cube(1), cube(1)))).found());
}

TEST_CASE("degreewise pushout reports torsion") {
    AdcPtr pt = share(unit());
    ADCMap dbl(pt, pt), zero(pt, pt);
    dbl.set_image(0, ChainElement::basis(0, 0, 2));
    zero.set_image(0, ChainElement(0));
    PushoutResult p = degreewise_pushout({dbl, zero});
    CHECK(p.has_torsion());
    CHECK(!p.is_based);
    CHECK(p.torsion[0] == std::vector<Coeff>{2});
}

TEST_CASE("iso search and automorphisms") {
    CHECK(iso_search(share(globe(1)), share(cube(1))).found());
    CHECK(iso_search(share(oriental(1)), share(cube(1))).found());
    CHECK(iso_search(share(cube(2)), share(oriental(2))).status == SearchStatus::None);
    IsoResult tight = iso_search(share(cube(3)), share(cube(3)), 1);
    CHECK(tight.status == SearchStatus::Inconclusive);
    AllIsosResult twice = all_basis_isos(share(direct_sum(cube(1), cube(1))),
                                         share(direct_sum(cube(1), cube(1))));
    CHECK(twice.isos.size() == 2);
}
