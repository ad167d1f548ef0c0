#pragma once

#include <functional>
#include <string>
#include <vector>

#include "adc/complex.hpp"

namespace adc {

/// An n-cell of the nerve of a based ADC: for each 0 <= i <= n a pair
/// (x_i^-, x_i^+) of nonnegative chains of degree i. Valid cells satisfy top
/// equality (x_n^- = x_n^+), boundary compatibility
/// (d x_i^a = x_{i-1}^+ - x_{i-1}^-) and eps(x_0^±) = 1.
struct NerveCell {
    std::vector<std::pair<ChainElement, ChainElement>> table;  // table[i] lives in degree i

    int dimension() const { return static_cast<int>(table.size()) - 1; }
    const ChainElement& minus(int i) const { return table[i].first; }
    const ChainElement& plus(int i) const { return table[i].second; }

    friend bool operator==(const NerveCell&, const NerveCell&) = default;
};

ValidationReport validate_cell(const BasedADC& a, const NerveCell& x);

std::string format_cell(const BasedADC& a, const NerveCell& x);

/// The atomic cell of a basis element: x_q^± = b, then iterated d^-/d^+
/// downward. Valid whenever b is unital.
NerveCell atom(const BasedADC& a, const std::string& label);

/// q-dimensional source/target faces (q <= dim x).
NerveCell cell_source(const NerveCell& x, int q);
NerveCell cell_target(const NerveCell& x, int q);

/// Degenerate (identity) cell on x in dimension p >= dim x.
NerveCell cell_identity(const NerveCell& x, int p);

bool composable(const NerveCell& x, const NerveCell& y, int q);

/// Composite x *_q y (x first): z = x + y - t with t the q-target of x,
/// after promoting both cells to a common dimension. Throws on a
/// non-composable pair.
NerveCell compose(const NerveCell& x, const NerveCell& y, int q);

struct CellEnumeration {
    std::vector<NerveCell> cells;  // deterministic order, by dimension
    bool truncated = false;        // some solver branch was cut only by the cap

    std::vector<int> counts_by_dim(int max_dim) const;
};

/// All valid cells of dimension <= max_dim whose table entries have all
/// coefficients <= cap, by layered nonnegative solving of the boundary
/// equations.
CellEnumeration enumerate_cells(const BasedADC& a, int max_dim, Coeff cap = 8);

using ComposeFn = std::function<NerveCell(const NerveCell&, const NerveCell&, int)>;

/// Exhaustively checks the strict omega-category axioms (cell validity,
/// globularity, units, associativity, interchange) over a finite cell set.
/// A custom composition can be substituted for sensitivity testing.
ValidationReport axiom_suite(const BasedADC& a, const std::vector<NerveCell>& cells,
                             const ComposeFn& comp = {});

}  // namespace adc
