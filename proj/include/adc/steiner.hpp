#pragma once

#include <string>
#include <vector>

#include "adc/complex.hpp"
#include "adc/map.hpp"

namespace adc {

struct AllIsosResult;

/// The preorder on the whole basis generated by
///   a -> b  for b with a in supp(d^- b),  and
///   a -> b  for a with b in supp(d^+ a),
/// together with its reachability closure and SCC decomposition.
struct BasisPreorder {
    std::vector<std::vector<int>> edges;     // generating digraph, by basis index
    std::vector<std::vector<bool>> closure;  // reflexive-transitive reachability
    std::vector<int> scc_id;
    int scc_count = 0;

    bool leq(int a, int b) const { return closure[a][b]; }
    int below(int a) const {
        int n = 0;
        for (size_t i = 0; i < closure.size(); ++i)
            if (static_cast<int>(i) != a && closure[i][a]) ++n;
        return n;
    }
    int above(int a) const {
        int n = 0;
        for (size_t i = 0; i < closure.size(); ++i)
            if (static_cast<int>(i) != a && closure[a][i]) ++n;
        return n;
    }
};

struct UnitalityReport {
    std::vector<int> failures;  // basis indices whose iterated boundary misses eps = 1
    bool ok() const { return failures.empty(); }
};

UnitalityReport unital(const BasedADC& a);

BasisPreorder basis_preorder(const BasedADC& a);

struct LoopFreeResult {
    bool loop_free = true;
    std::vector<int> cycle;  // one nontrivial cycle (basis indices) when not loop-free
};

LoopFreeResult strongly_loop_free(const BasedADC& a);

bool is_strong_steiner(const BasedADC& a);

/// Precondition: strongly loop-free.
bool is_total_order(const BasedADC& a);

/// All degree-preserving basis permutations commuting with the differential
/// and augmentation (positivity is automatic for permutations).
AllIsosResult automorphisms(AdcPtr a, long budget = 1'000'000);

/// Signed lexicographic comparison of cube basis strings over {0,?,1}:
/// compare at the lowest (rightmost) differing position, with the order
/// 0 < ? < 1 reversed when the shared lower entries contain an odd number
/// of '?'. Returns -1, 0, or 1.
int cube_signed_lex_cmp(const std::string& u, const std::string& v);

}  // namespace adc
