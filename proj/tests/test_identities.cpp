#include "adc/identities.hpp"
#include "adc/shapes.hpp"
#include "adc/steiner.hpp"
#include "doctest.h"

using namespace adc;

namespace {

void expect_pass(const SuiteReport& rep) {
    INFO(rep.suite << "(" << rep.params << "): " << rep.summary());
    CHECK(rep.pass());
}

}  // namespace

TEST_CASE("cube order and rigidity") {
    for (int n = 1; n <= 3; ++n) {
        expect_pass(verify_cube_order(n));
        expect_pass(verify_cube_aut_trivial(n));
    }
    expect_pass(verify_cube_aut_control());
}

TEST_CASE("retraction suites") {
    for (int n = 1; n <= 3; ++n) expect_pass(verify_oriental_cube_retract(n));
    expect_pass(verify_wedge_retract(1, 1));
    expect_pass(verify_wedge_retract(1, 2));
    expect_pass(verify_wedge_retract(2, 1));
    expect_pass(verify_wedge_retract(2, 2));
    for (int n = 1; n <= 2; ++n) {
        expect_pass(verify_cone_quotient(n));
        expect_pass(verify_suspension_quotient(n));
    }
}

TEST_CASE("pushout suites") {
    expect_pass(verify_sigma_pushout(share(unit())));
    expect_pass(verify_sigma_pushout(share(cube(1))));
    expect_pass(verify_gray_cylinder(share(unit())));
    expect_pass(verify_gray_cylinder(share(cube(1))));
}

TEST_CASE("duality and nerve suites") {
    expect_pass(verify_dual_monoidal(share(cube(1)), share(oriental(1))));
    expect_pass(verify_dual_monoidal(share(unit()), share(cube(2))));
    expect_pass(verify_nerve_globe(1));
    expect_pass(verify_nerve_globe(2));
}

TEST_CASE("flipped homotopy sign breaks the wedge retraction") {
    SuiteReport rep = verify_wedge_retract(1, 1, true);
    CHECK(!rep.pass());
}

TEST_CASE("standard koszul sign breaks the cube order") {
    TensorOptions std_rule;
    std_rule.rule = KoszulRule::Standard;
    BasedADC t = tensor(cube(1), cube(1), std_rule);
    BasisPreorder p = basis_preorder(t);
    auto strip = [](const std::string& l) {
        std::string out;
        for (size_t i = 0; i < l.size();)
            if (l.compare(i, 3, "⊗") == 0)
                i += 3;
            else
                out += l[i++];
        return out;
    };
    bool mismatch = false;
    for (int i = 0; i < t.size() && !mismatch; ++i)
        for (int j = 0; j < t.size(); ++j) {
            int cmp = cube_signed_lex_cmp(strip(t.basis(i).label), strip(t.basis(j).label));
            if (p.leq(i, j) != (cmp <= 0)) {
                mismatch = true;
                break;
            }
        }
    CHECK(mismatch);
}
