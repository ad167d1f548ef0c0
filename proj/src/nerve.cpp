#include "adc/nerve.hpp"

#include <algorithm>
#include <map>

#include "adc/intlinalg.hpp"

namespace adc {

namespace {

std::vector<Coeff> chain_coords(const BasedADC& a, const ChainElement& x, int degree) {
    const auto& idx = a.indices_of_degree(degree);
    std::vector<Coeff> v(idx.size(), 0);
    for (size_t p = 0; p < idx.size(); ++p) v[p] = x.coeff(idx[p]);
    return v;
}

ChainElement coords_chain(const BasedADC& a, const std::vector<Coeff>& v, int degree) {
    const auto& idx = a.indices_of_degree(degree);
    ChainElement x(degree);
    for (size_t p = 0; p < idx.size(); ++p) x.add_term(idx[p], v[p]);
    return x;
}

// Differential matrix from degree k into degree k-1 in the per-degree bases.
IntMatrix boundary_matrix(const BasedADC& a, int k) {
    const auto& cols = a.indices_of_degree(k);
    const auto& rows = a.indices_of_degree(k - 1);
    std::map<int, int> row_pos;
    for (size_t p = 0; p < rows.size(); ++p) row_pos[rows[p]] = static_cast<int>(p);
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (const auto& [i, c] : a.differential(cols[j]).terms()) m.at(row_pos.at(i), j) = c;
    return m;
}

}  // namespace

ValidationReport validate_cell(const BasedADC& a, const NerveCell& x) {
    ValidationReport report;
    int n = x.dimension();
    if (n < 0) {
        report.add("empty_table", "", "cell table has no entries");
        return report;
    }
    for (int i = 0; i <= n; ++i) {
        for (const ChainElement* side : {&x.minus(i), &x.plus(i)}) {
            if (!side->is_zero() && side->degree() != i) {
                report.add("degree_mismatch", std::to_string(i),
                           "table entry at level " + std::to_string(i) + " has wrong degree");
                return report;
            }
            for (const auto& [idx, c] : side->terms()) {
                if (idx < 0 || idx >= a.size() || a.basis(idx).degree != i) {
                    report.add("degree_mismatch", std::to_string(i),
                               "table entry at level " + std::to_string(i) +
                                   " is not supported in degree " + std::to_string(i));
                    return report;
                }
                if (c < 0)
                    report.add("negative_coefficient", a.basis(idx).label,
                               "negative coefficient at level " + std::to_string(i));
            }
        }
    }
    if (!(x.minus(n) == x.plus(n)))
        report.add("top_inequality", std::to_string(n),
                   "x_n^- != x_n^+: " + format_chain(a, x.minus(n)) + " vs " +
                       format_chain(a, x.plus(n)));
    for (int i = 1; i <= n; ++i) {
        ChainElement want = x.plus(i - 1) - x.minus(i - 1);
        for (const ChainElement* side : {&x.minus(i), &x.plus(i)})
            if (!(a.boundary(*side) == want)) {
                report.add("boundary_mismatch", std::to_string(i),
                           "d x_" + std::to_string(i) + " != x^+ - x^- one level down");
                break;
            }
    }
    for (const ChainElement* side : {&x.minus(0), &x.plus(0)})
        if (a.epsilon(*side) != 1)
            report.add("augmentation", format_chain(a, *side),
                       "eps(x_0) != 1 at " + format_chain(a, *side));
    return report;
}

std::string format_cell(const BasedADC& a, const NerveCell& x) {
    std::string s = "[";
    for (int i = 0; i <= x.dimension(); ++i) {
        if (i) s += " ; ";
        s += format_chain(a, x.minus(i)) + " | " + format_chain(a, x.plus(i));
    }
    return s + "]";
}

NerveCell atom(const BasedADC& a, const std::string& label) {
    int idx = a.index_of(label);
    int q = a.basis(idx).degree;
    NerveCell cell;
    cell.table.assign(q + 1, {});
    ChainElement top = ChainElement::basis(q, idx);
    cell.table[q] = {top, top};
    for (int i = q; i >= 1; --i) {
        auto [plus, minus] = a.boundary(cell.minus(i)).decompose();
        cell.table[i - 1] = {minus, plus};
    }
    return cell;
}

NerveCell cell_source(const NerveCell& x, int q) {
    if (q < 0 || q > x.dimension()) throw InvalidArgument("cell_source: level out of range");
    NerveCell r;
    r.table.assign(x.table.begin(), x.table.begin() + q + 1);
    r.table[q].second = r.table[q].first;
    return r;
}

NerveCell cell_target(const NerveCell& x, int q) {
    if (q < 0 || q > x.dimension()) throw InvalidArgument("cell_target: level out of range");
    NerveCell r;
    r.table.assign(x.table.begin(), x.table.begin() + q + 1);
    r.table[q].first = r.table[q].second;
    return r;
}

NerveCell cell_identity(const NerveCell& x, int p) {
    if (p < x.dimension()) throw InvalidArgument("cell_identity: dimension below the cell's");
    NerveCell r = x;
    for (int i = x.dimension() + 1; i <= p; ++i)
        r.table.emplace_back(ChainElement(i), ChainElement(i));
    return r;
}

bool composable(const NerveCell& x, const NerveCell& y, int q) {
    int n = std::max(x.dimension(), y.dimension());
    if (q < 0 || q >= n) return false;
    return cell_target(cell_identity(x, n), q) == cell_source(cell_identity(y, n), q);
}

NerveCell compose(const NerveCell& x, const NerveCell& y, int q) {
    int n = std::max(x.dimension(), y.dimension());
    if (q < 0 || q >= n) throw InvalidArgument("compose: level must be below the dimension");
    NerveCell xp = cell_identity(x, n), yp = cell_identity(y, n);
    if (!(cell_target(xp, q) == cell_source(yp, q)))
        throw InvalidArgument("compose: cells are not composable at level " + std::to_string(q));
    NerveCell t = cell_identity(cell_target(xp, q), n);
    NerveCell z;
    z.table.reserve(n + 1);
    for (int i = 0; i <= n; ++i)
        z.table.emplace_back(xp.minus(i) + yp.minus(i) - t.minus(i),
                             xp.plus(i) + yp.plus(i) - t.plus(i));
    return z;
}

std::vector<int> CellEnumeration::counts_by_dim(int max_dim) const {
    std::vector<int> counts(max_dim + 1, 0);
    for (const auto& c : cells)
        if (c.dimension() <= max_dim) ++counts[c.dimension()];
    return counts;
}

CellEnumeration enumerate_cells(const BasedADC& a, int max_dim, Coeff cap) {
    CellEnumeration out;
    if (max_dim < 0) return out;

    // Degree-0 seeds: nonnegative chains with eps = 1.
    const auto& deg0 = a.indices_of_degree(0);
    IntMatrix eps_row(1, static_cast<int>(deg0.size()));
    for (size_t p = 0; p < deg0.size(); ++p) eps_row.at(0, p) = a.augmentation_of(deg0[p]);
    NonnegSolutions seeds = solve_nonneg(eps_row, {1}, cap);
    out.truncated = out.truncated || seeds.cap_hit;

    std::vector<ChainElement> points;
    for (const auto& v : seeds.solutions) points.push_back(coords_chain(a, v, 0));
    for (const auto& p : points) {
        NerveCell c;
        c.table.emplace_back(p, p);
        out.cells.push_back(std::move(c));
    }

    // Frames of height k: tables valid up to level k without top equality.
    std::vector<NerveCell> frames;
    for (const auto& u : points)
        for (const auto& v : points) {
            NerveCell f;
            f.table.emplace_back(u, v);
            frames.push_back(std::move(f));
        }

    for (int k = 1; k <= max_dim; ++k) {
        IntMatrix d = boundary_matrix(a, k);
        std::vector<NerveCell> next_frames;
        for (const auto& f : frames) {
            std::vector<Coeff> rhs = chain_coords(a, f.plus(k - 1) - f.minus(k - 1), k - 1);
            NonnegSolutions sols = solve_nonneg(d, rhs, cap);
            out.truncated = out.truncated || sols.cap_hit;
            std::vector<ChainElement> xs;
            for (const auto& v : sols.solutions) xs.push_back(coords_chain(a, v, k));
            for (const auto& x : xs) {
                NerveCell c = f;
                c.table.emplace_back(x, x);
                out.cells.push_back(std::move(c));
            }
            if (k < max_dim)
                for (const auto& u : xs)
                    for (const auto& v : xs) {
                        NerveCell g = f;
                        g.table.emplace_back(u, v);
                        next_frames.push_back(std::move(g));
                    }
        }
        frames = std::move(next_frames);
    }

    std::stable_sort(out.cells.begin(), out.cells.end(),
                     [](const NerveCell& x, const NerveCell& y) {
                         return x.dimension() < y.dimension();
                     });
    return out;
}

ValidationReport axiom_suite(const BasedADC& a, const std::vector<NerveCell>& cells,
                             const ComposeFn& comp_arg) {
    ValidationReport report;
    ComposeFn comp = comp_arg
                         ? comp_arg
                         : [](const NerveCell& x, const NerveCell& y, int q) {
                               return compose(x, y, q);
                           };
    int max_dim = 0;
    for (const auto& c : cells) max_dim = std::max(max_dim, c.dimension());

    for (const auto& c : cells) {
        ValidationReport r = validate_cell(a, c);
        for (auto& v : r.violations)
            report.add("cell_invalid", format_cell(a, c), v.message);
    }

    // Globularity.
    for (const auto& c : cells)
        for (int r = 1; r <= c.dimension(); ++r)
            for (int q = 0; q < r; ++q) {
                NerveCell sr = cell_source(c, r), tr = cell_target(c, r);
                if (!(cell_source(sr, q) == cell_source(c, q)) ||
                    !(cell_source(tr, q) == cell_source(c, q)))
                    report.add("globularity", format_cell(a, c),
                               "s_q s_r / s_q t_r mismatch at q=" + std::to_string(q) +
                                   ", r=" + std::to_string(r));
                if (!(cell_target(sr, q) == cell_target(c, q)) ||
                    !(cell_target(tr, q) == cell_target(c, q)))
                    report.add("globularity", format_cell(a, c),
                               "t_q s_r / t_q t_r mismatch at q=" + std::to_string(q) +
                                   ", r=" + std::to_string(r));
            }

    // Unit laws.
    for (const auto& c : cells)
        for (int q = 0; q < c.dimension(); ++q) {
            NerveCell lid = cell_identity(cell_source(c, q), c.dimension());
            NerveCell rid = cell_identity(cell_target(c, q), c.dimension());
            if (!(comp(lid, c, q) == c))
                report.add("left_unit", format_cell(a, c),
                           "id * x != x at level " + std::to_string(q));
            if (!(comp(c, rid, q) == c))
                report.add("right_unit", format_cell(a, c),
                           "x * id != x at level " + std::to_string(q));
        }

    // Composable pairs per level.
    int n = static_cast<int>(cells.size());
    std::vector<std::vector<std::pair<int, int>>> pairs(max_dim);
    for (int q = 0; q < max_dim; ++q)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (composable(cells[i], cells[j], q)) pairs[q].push_back({i, j});

    // Composite faces and associativity.
    for (int q = 0; q < max_dim; ++q) {
        std::vector<std::vector<int>> by_first(n);
        for (const auto& [i, j] : pairs[q]) by_first[i].push_back(j);
        for (const auto& [i, j] : pairs[q]) {
            NerveCell z = comp(cells[i], cells[j], q);
            if (!validate_cell(a, z).ok())
                report.add("composite_invalid", format_cell(a, z),
                           "composite fails cell validity at level " + std::to_string(q));
            int d = z.dimension();
            if (!(cell_source(z, q) == cell_source(cell_identity(cells[i], d), q)) ||
                !(cell_target(z, q) == cell_target(cell_identity(cells[j], d), q)))
                report.add("composite_faces", format_cell(a, z),
                           "s/t of composite disagree with the factors at level " +
                               std::to_string(q));
            for (int k : by_first[j]) {
                NerveCell lhs = comp(z, cells[k], q);
                NerveCell rhs = comp(cells[i], comp(cells[j], cells[k], q), q);
                if (!(lhs == rhs))
                    report.add("associativity", format_cell(a, cells[j]),
                               "(x*y)*z != x*(y*z) at level " + std::to_string(q));
            }
        }
    }

    // Interchange.
    for (int q = 0; q < max_dim; ++q)
        for (int r = q + 1; r < max_dim; ++r)
            for (const auto& [f, g] : pairs[q])
                for (const auto& [h, k] : pairs[q]) {
                    if (!composable(cells[f], cells[h], r) || !composable(cells[g], cells[k], r))
                        continue;
                    NerveCell fg = comp(cells[f], cells[g], q);
                    NerveCell hk = comp(cells[h], cells[k], q);
                    NerveCell fh = comp(cells[f], cells[h], r);
                    NerveCell gk = comp(cells[g], cells[k], r);
                    if (!composable(fg, hk, r) || !composable(fh, gk, q)) {
                        report.add("interchange", format_cell(a, fg),
                                   "interchange composites are not composable");
                        continue;
                    }
                    if (!(comp(fg, hk, r) == comp(fh, gk, q)))
                        report.add("interchange", format_cell(a, fg),
                                   "interchange law fails at levels " + std::to_string(q) +
                                       "," + std::to_string(r));
                }

    return report;
}

}  // namespace adc
