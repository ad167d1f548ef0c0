// Acceptance gate: one line per criterion, exit 0 iff all pass.
// Usage: adc_acceptance <cli-binary> <golden-dir>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "adc/identities.hpp"
#include "adc/io.hpp"
#include "adc/nerve.hpp"
#include "adc/shapes.hpp"
#include "adc/steiner.hpp"
#include "helpers.hpp"

using namespace adc;

namespace {

std::string g_cli, g_golden;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    RunResult r;
    FILE* p = popen((g_cli + " " + args + " 2>/dev/null").c_str(), "r");
    if (!p) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

int g_failures = 0;

void criterion(int num, const std::string& what, bool ok) {
    std::cout << "criterion " << num << " (" << what << "): " << (ok ? "PASS" : "FAIL") << "\n";
    if (!ok) ++g_failures;
}

bool suite_ok(const SuiteReport& rep) {
    if (!rep.pass()) std::cerr << "  " << rep.suite << "(" << rep.params << "): " << rep.summary() << "\n";
    return rep.pass();
}

bool axioms_hold(const BasedADC& a) {
    return a.validate().ok() && is_strong_steiner(a);
}

bool check_axioms() {
    bool ok = true;
    for (int n = 1; n <= 5; ++n) ok = ok && axioms_hold(cube(n)) && axioms_hold(oriental(n));
    for (int q = 0; q <= 6; ++q) ok = ok && axioms_hold(globe(q));
    for (const ThetaTree& t : all_theta_trees(6)) ok = ok && axioms_hold(theta(t));
    LoopFreeResult lf = strongly_loop_free(two_loop());
    return ok && !lf.loop_free && lf.cycle.size() == 4;
}

bool check_cube_order() {
    bool ok = true;
    for (int n = 1; n <= 4; ++n) ok = ok && suite_ok(verify_cube_order(n));
    return ok;
}

bool check_rigidity() {
    bool ok = true;
    for (int n = 1; n <= 4; ++n) ok = ok && suite_ok(verify_cube_aut_trivial(n));
    return ok && suite_ok(verify_cube_aut_control());
}

bool check_retractions() {
    bool ok = true;
    for (int n = 1; n <= 4; ++n) ok = ok && suite_ok(verify_oriental_cube_retract(n));
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; n + m <= 5; ++m) ok = ok && suite_ok(verify_wedge_retract(n, m));
    for (int n = 1; n <= 3; ++n)
        ok = ok && suite_ok(verify_cone_quotient(n)) && suite_ok(verify_suspension_quotient(n));
    return ok;
}

bool check_pushouts() {
    bool ok = true;
    for (const BasedADC& a : {unit(), cube(1), cube(2), oriental(2)})
        ok = ok && suite_ok(verify_sigma_pushout(share(a)));
    for (const BasedADC& a : {unit(), cube(1), oriental(1)})
        ok = ok && suite_ok(verify_gray_cylinder(share(a)));
    return ok;
}

bool check_duality() {
    std::vector<BasedADC> shapes{unit(),   cube(1), cube(2), cube(3), oriental(1),
                                 oriental(2), oriental(3), globe(1), globe(2), globe(3)};
    bool ok = true;
    for (const BasedADC& a : shapes)
        for (const DualitySelector& tau :
             {DualitySelector::odd(), DualitySelector::even(), DualitySelector::total()})
            ok = ok && dual(dual(a, tau), tau) == a;
    for (const BasedADC& a : shapes)
        for (const BasedADC& b : shapes)
            if (a.max_degree() + b.max_degree() <= 4)
                ok = ok && suite_ok(verify_dual_monoidal(share(a), share(b)));
    return ok;
}

bool check_nerve() {
    bool ok = true;
    auto counts = [](const BasedADC& a, int max_dim, Coeff cap) {
        return enumerate_cells(a, max_dim, cap).counts_by_dim(max_dim);
    };
    // cap 4 is already stable: cap 5 agrees and both match the oracle
    for (Coeff cap : {4, 5}) {
        ok = ok && counts(globe(1), 2, cap) == std::vector<int>{2, 3, 3};
        ok = ok && counts(globe(2), 3, cap) == std::vector<int>{2, 4, 5, 5};
        ok = ok && counts(cube(1), 2, cap) == std::vector<int>{2, 3, 3};
        ok = ok && counts(cube(2), 2, cap) == std::vector<int>{4, 10, 11};
    }
    for (const BasedADC& a : {cube(2), oriental(2)})
        ok = ok && axiom_suite(a, enumerate_cells(a, 2, 4).cells).ok();

    // mutation battery: each deliberate defect must trip at least one check
    ComposeFn dropped_overlap = [](const NerveCell& x, const NerveCell& y, int) {
        int d = std::max(x.dimension(), y.dimension());
        NerveCell z = cell_identity(x, d);
        NerveCell yy = cell_identity(y, d);
        for (size_t i = 0; i < z.table.size(); ++i) {
            z.table[i].first += yy.table[i].first;
            z.table[i].second += yy.table[i].second;
        }
        return z;
    };
    BasedADC c1 = cube(1);
    ok = ok && !axiom_suite(c1, enumerate_cells(c1, 2, 4).cells, dropped_overlap).ok();

    TensorOptions std_rule;
    std_rule.rule = KoszulRule::Standard;
    // the flipped sign still yields a total order, but not the signed-lex one
    BasedADC flipped = tensor(cube(1), cube(1), std_rule);
    ok = ok && flipped != tensor(cube(1), cube(1));
    BasisPreorder fp = basis_preorder(flipped);
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
    for (int i = 0; i < flipped.size(); ++i)
        for (int j = 0; j < flipped.size(); ++j)
            if (fp.leq(i, j) !=
                (cube_signed_lex_cmp(strip(flipped.basis(i).label), strip(flipped.basis(j).label)) <= 0))
                mismatch = true;
    ok = ok && mismatch;

    ok = ok && !verify_wedge_retract(1, 1, true).pass();
    return ok;
}

bool check_cli() {
    bool ok = true;
    for (const auto& [args, golden] :
         std::vector<std::pair<std::string, std::string>>{{"shape cube 1", "cube1.json"},
                                                          {"shape cube 2", "cube2.json"},
                                                          {"shape globe 2", "globe2.json"},
                                                          {"shape oriental 2", "oriental2.json"},
                                                          {"shape theta \"s(s(*) v s(*))\"", "theta.json"}}) {
        RunResult r = run_cli(args);
        ok = ok && r.exit_code == 0 && r.out == slurp(g_golden + "/" + golden);
        // round trip: parse what the CLI printed and re-serialize
        ok = ok && serialize_adc(parse_adc(r.out)) == r.out;
    }
    RunResult dot = run_cli("export dot " + g_golden + "/cube1.json");
    ok = ok && dot.exit_code == 0 && dot.out == slurp(g_golden + "/cube1.dot");

    ok = ok && run_cli("verify cube-aut 2").exit_code == 0;
    ok = ok && run_cli("check " + g_golden + "/cube2.json").exit_code == 0;

    std::string loops = "/tmp/adc_two_loop.json";
    std::ofstream(loops) << serialize_adc(two_loop());
    ok = ok && run_cli("check " + loops).exit_code == 1;
    ok = ok && run_cli("--budget 1 verify gray-cylinder cube1").exit_code == 2;
    ok = ok && run_cli("frobnicate").exit_code == 64;
    ok = ok && run_cli("check /nonexistent.json").exit_code == 65;
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: adc_acceptance <cli-binary> <golden-dir>\n";
        return 2;
    }
    g_cli = argv[1];
    g_golden = argv[2];

    criterion(1, "axioms on shapes, loop counterexample", check_axioms());
    criterion(2, "cube basis order is signed-lex", check_cube_order());
    criterion(3, "cube rigidity", check_rigidity());
    criterion(4, "retractions r o s = id", check_retractions());
    criterion(5, "suspension and cylinder pushout squares", check_pushouts());
    criterion(6, "duality involutions and monoidality", check_duality());
    criterion(7, "nerve oracle counts, axioms, mutation battery", check_nerve());
    criterion(8, "CLI golden files and exit codes", check_cli());

    return g_failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
