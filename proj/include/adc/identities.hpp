#pragma once

#include <string>
#include <vector>

#include "adc/constructions.hpp"

namespace adc {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string witness;
};

/// Outcome of one verification suite: a list of named exact checks, an
/// overall pass flag, and wall-clock time.
struct SuiteReport {
    std::string suite;
    std::string params;
    std::vector<CheckResult> checks;
    bool inconclusive = false;  // some search hit its budget
    double seconds = 0;

    bool pass() const {
        if (inconclusive) return false;
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    void record(std::string name, bool ok, std::string witness = "") {
        checks.push_back({std::move(name), ok, std::move(witness)});
    }
    std::string summary() const;
};

/// The basis of the n-cube is linearly ordered and the order is the signed
/// lexicographic one (all pairs, exhaustive).
SuiteReport verify_cube_order(int n);

/// Aut of the n-cube is trivial.
SuiteReport verify_cube_aut_trivial(int n);
/// Sensitivity control: the square-free direct sum of two 1-cubes has
/// exactly two automorphisms.
SuiteReport verify_cube_aut_control();

/// The n-oriental is a retract of the n-cube: explicit section s and
/// retraction r, both valid ADC maps, with r o s = id exactly.
SuiteReport verify_oriental_cube_retract(int n);

/// The wedge of an n- and an m-oriental is a retract of the (n+m)-oriental
/// via r = id - dh - hd. flip_h_sign negates the homotopy's sign for
/// sensitivity testing.
SuiteReport verify_wedge_retract(int n, int m, bool flip_h_sign = false);

/// The cone quotient of the 1-cube tensored with the n-oriental is the
/// (n+1)-oriental: quotient map q valid, q o sec = id.
SuiteReport verify_cone_quotient(int n);

/// Collapsing the bottom face of the (n+1)-oriental gives the unreduced
/// suspension of the n-oriental.
SuiteReport verify_suspension_quotient(int n);

/// The suspension square: the pushout of the boundary-inclusion span under
/// the cylinder on A is the suspension of A, with matching cocone.
SuiteReport verify_sigma_pushout(AdcPtr a);

/// The Gray cylinder square: gluing two suspension ends onto long-hom
/// wedges yields (sigma A) tensor the 1-cube.
SuiteReport verify_gray_cylinder(AdcPtr a, long budget = kDefaultSearchBudget);

/// Total duality is monoidal via the identity on labels; the odd duality
/// is antimonoidal up to an isomorphism found by search.
SuiteReport verify_dual_monoidal(AdcPtr a, AdcPtr b, long budget = kDefaultSearchBudget);

/// Nerve cell counts of the q-globe match the closed-form oracle.
SuiteReport verify_nerve_globe(int q);

}  // namespace adc
