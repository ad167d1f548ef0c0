#pragma once

#include <memory>
#include <string>
#include <vector>

#include "adc/complex.hpp"

namespace adc {

/// Finite expression tree over {point, suspension, wedge}, one object of
/// Joyal's Theta. Concrete syntax: `*`, `s(E)`, `E v E` (left-associative,
/// whitespace insignificant).
struct ThetaTree {
    enum class Kind { Point, Suspension, Wedge };
    Kind kind = Kind::Point;
    std::shared_ptr<const ThetaTree> left, right;  // Suspension uses left only

    static ThetaTree point() { return {}; }
    static ThetaTree suspension(ThetaTree inner);
    static ThetaTree wedge_of(ThetaTree l, ThetaTree r);

    int node_count() const;
    std::string to_string() const;
};

ThetaTree parse_theta(const std::string& text);

/// The monoidal unit: one degree-0 basis element with eps = 1, bipointed by
/// itself twice.
BasedADC unit();

/// λC_q, the q-fold suspension of the unit. Rank 2 in degrees < q, rank 1
/// in degree q.
BasedADC globe(int q);

/// λ□^n with basis strings over {0,?,1} of length n, bipointed (0...0, 1...1).
/// n is capped at 12.
BasedADC cube(int n);

/// λO^n: nonempty subsets of {0..n} graded by cardinality - 1, with the
/// alternating-sum differential; bipointed ({0}, {n}). n is capped at 12.
BasedADC oriental(int n);

BasedADC theta(const ThetaTree& t);

/// Labels of λO^n: sorted subset strings "{i0,i1,...}".
std::string oriental_label(const std::vector<int>& subset);

/// All theta trees with at most `max_nodes` grammar nodes.
std::vector<ThetaTree> all_theta_trees(int max_nodes);

}  // namespace adc
