#include "adc/constructions.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "adc/steiner.hpp"

namespace adc {

namespace {

int parity_sign(int n) { return n % 2 == 0 ? 1 : -1; }

std::string unique_label(const BasedADC& c, std::string label) {
    while (c.has_label(label)) label = "r:" + label;
    return label;
}

}  // namespace

BasedADC tensor(const BasedADC& a, const BasedADC& b, const TensorOptions& opt) {
    BasedADC r(a.name() + opt.separator + b.name());
    const int nb = b.size();
    auto pair_index = [nb](int i, int j) { return i * nb + j; };
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j)
            r.add_basis_element(a.basis(i).label + opt.separator + b.basis(j).label,
                                a.basis(i).degree + b.basis(j).degree);

    for (int i = 0; i < a.size(); ++i) {
        for (int j = 0; j < b.size(); ++j) {
            int da = a.basis(i).degree, db = b.basis(j).degree;
            int deg = da + db;
            if (deg == 0) {
                r.set_augmentation(r.basis(pair_index(i, j)).label,
                                   checked_mul(a.augmentation_of(i), b.augmentation_of(j)));
                continue;
            }
            ChainElement d(deg - 1);
            int left_sign = opt.rule == KoszulRule::Reversed ? parity_sign(db) : 1;
            int right_sign = opt.rule == KoszulRule::Reversed ? 1 : parity_sign(da);
            if (da >= 1)
                for (const auto& [t, c] : a.differential(i).terms())
                    d.add_term(pair_index(t, j), checked_mul(c, left_sign));
            if (db >= 1)
                for (const auto& [t, c] : b.differential(j).terms())
                    d.add_term(pair_index(i, t), checked_mul(c, right_sign));
            r.set_differential(r.basis(pair_index(i, j)).label, d);
        }
    }
    if (a.bipointed() && b.bipointed()) {
        auto [sa, ta] = a.bipointing();
        auto [sb, tb] = b.bipointing();
        r.set_bipointing(r.basis(pair_index(sa, sb)).label, r.basis(pair_index(ta, tb)).label);
    }
    return r;
}

BasedADC suspend(const BasedADC& a) {
    BasedADC r("σ" + a.name());
    r.add_basis_element("⊥", 0);
    r.add_basis_element("⊤", 0);
    r.set_augmentation("⊥", 1);
    r.set_augmentation("⊤", 1);
    for (int i = 0; i < a.size(); ++i)
        r.add_basis_element("σ" + a.basis(i).label, a.basis(i).degree + 1);
    auto shifted = [](int i) { return i + 2; };
    for (int i = 0; i < a.size(); ++i) {
        int q = a.basis(i).degree;
        ChainElement d(q);
        if (q == 0) {
            Coeff e = a.augmentation_of(i);
            d.add_term(1, e);                 // ⊤
            d.add_term(0, checked_neg(e));    // ⊥
        } else {
            for (const auto& [t, c] : a.differential(i).terms()) d.add_term(shifted(t), c);
        }
        r.set_differential(r.basis(shifted(i)).label, d);
    }
    r.set_bipointing("⊥", "⊤");
    return r;
}

BasedADC dual(const BasedADC& a, const DualitySelector& tau) {
    BasedADC r(a.name() + "^τ");
    for (int i = 0; i < a.size(); ++i) r.add_basis_element(a.basis(i).label, a.basis(i).degree);
    for (int i = 0; i < a.size(); ++i) {
        int q = a.basis(i).degree;
        if (q == 0) {
            r.set_augmentation(a.basis(i).label, a.augmentation_of(i));
        } else {
            ChainElement d = a.differential(i);
            if (tau.flips(q)) d = d.scaled(-1);
            r.set_differential(a.basis(i).label, d);
        }
    }
    if (a.bipointed()) {
        auto [s, t] = a.bipointing();
        r.set_bipointing(a.basis(s).label, a.basis(t).label);
    }
    return r;
}

BasedADC wedge(const BasedADC& a, const BasedADC& b) {
    if (!a.bipointed() || !b.bipointed())
        throw InvalidArgument("wedge requires bipointed complexes");
    auto [sa, ta] = a.bipointing();
    auto [sb, tb] = b.bipointing();
    BasedADC r(a.name() + "∨" + b.name());
    for (int i = 0; i < a.size(); ++i) r.add_basis_element(a.basis(i).label, a.basis(i).degree);
    std::vector<int> bmap(b.size(), -1);
    for (int j = 0; j < b.size(); ++j) {
        if (j == sb) { bmap[j] = ta; continue; }
        bmap[j] = r.add_basis_element(unique_label(r, b.basis(j).label), b.basis(j).degree);
    }
    for (int i = 0; i < a.size(); ++i) {
        if (a.basis(i).degree == 0)
            r.set_augmentation(r.basis(i).label, a.augmentation_of(i));
        else
            r.set_differential(r.basis(i).label, a.differential(i));
    }
    for (int j = 0; j < b.size(); ++j) {
        if (j == sb) continue;
        if (b.basis(j).degree == 0) {
            r.set_augmentation(r.basis(bmap[j]).label, b.augmentation_of(j));
        } else {
            ChainElement d(b.basis(j).degree - 1);
            for (const auto& [t, c] : b.differential(j).terms()) d.add_term(bmap[t], c);
            r.set_differential(r.basis(bmap[j]).label, d);
        }
    }
    r.set_bipointing(r.basis(sa).label, r.basis(bmap[tb]).label);
    return r;
}

BasedADC direct_sum(const BasedADC& a, const BasedADC& b) {
    BasedADC r(a.name() + "⊕" + b.name());
    for (int i = 0; i < a.size(); ++i) r.add_basis_element(a.basis(i).label, a.basis(i).degree);
    std::vector<int> bmap(b.size(), -1);
    for (int j = 0; j < b.size(); ++j)
        bmap[j] = r.add_basis_element(unique_label(r, b.basis(j).label), b.basis(j).degree);
    for (int i = 0; i < a.size(); ++i) {
        if (a.basis(i).degree == 0)
            r.set_augmentation(r.basis(i).label, a.augmentation_of(i));
        else
            r.set_differential(r.basis(i).label, a.differential(i));
    }
    for (int j = 0; j < b.size(); ++j) {
        if (b.basis(j).degree == 0) {
            r.set_augmentation(r.basis(bmap[j]).label, b.augmentation_of(j));
        } else {
            ChainElement d(b.basis(j).degree - 1);
            for (const auto& [t, c] : b.differential(j).terms()) d.add_term(bmap[t], c);
            r.set_differential(r.basis(bmap[j]).label, d);
        }
    }
    return r;
}

BasedADC relabel(const BasedADC& a, const std::function<std::string(const std::string&)>& f,
                 const std::string& name) {
    BasedADC r(name);
    for (int i = 0; i < a.size(); ++i) r.add_basis_element(f(a.basis(i).label), a.basis(i).degree);
    for (int i = 0; i < a.size(); ++i) {
        if (a.basis(i).degree == 0)
            r.set_augmentation(r.basis(i).label, a.augmentation_of(i));
        else
            r.set_differential(r.basis(i).label, a.differential(i));
    }
    if (a.bipointed()) {
        auto [s, t] = a.bipointing();
        r.set_bipointing(r.basis(s).label, r.basis(t).label);
    }
    return r;
}

PushoutResult degreewise_pushout(const SpanOfMaps& span) {
    const ADCMap& f = span.left;
    const ADCMap& g = span.right;
    if (!(*f.source() == *g.source()))
        throw InvalidArgument("span legs do not share a source");
    const BasedADC& a = *f.source();
    const BasedADC& b = *f.target();
    const BasedADC& c = *g.target();

    PushoutResult result;
    int max_deg = std::max(b.max_degree(), c.max_degree());

    struct DegreeData {
        std::vector<int> rows_b, rows_c;             // ambient basis indices
        std::vector<std::vector<Coeff>> row_coords;  // per row, coordinates in Q basis
        std::vector<int> q_first_row;                // per Q basis elt, first preimage row
        int q_rank = 0;
    };
    std::vector<DegreeData> data(max_deg + 1);
    bool based = true;

    for (int n = 0; n <= max_deg; ++n) {
        DegreeData& dd = data[n];
        dd.rows_b = b.indices_of_degree(n);
        dd.rows_c = c.indices_of_degree(n);
        const std::vector<int>& cols = a.indices_of_degree(n);
        int rows = static_cast<int>(dd.rows_b.size() + dd.rows_c.size());
        IntMatrix m(rows, static_cast<int>(cols.size()));
        for (int k = 0; k < static_cast<int>(cols.size()); ++k) {
            const ChainElement& fb = f.image(cols[k]);
            for (const auto& [t, coef] : fb.terms()) {
                auto it = std::find(dd.rows_b.begin(), dd.rows_b.end(), t);
                m.at(static_cast<int>(it - dd.rows_b.begin()), k) = coef;
            }
            const ChainElement& gc = g.image(cols[k]);
            for (const auto& [t, coef] : gc.terms()) {
                auto it = std::find(dd.rows_c.begin(), dd.rows_c.end(), t);
                m.at(static_cast<int>(dd.rows_b.size() + (it - dd.rows_c.begin())), k) =
                    checked_neg(coef);
            }
        }
        CokernelPresentation cok = cokernel_presentation(m);
        result.free_ranks.push_back(cok.free_rank);
        result.torsion.push_back(cok.torsion);
        if (!cok.is_free()) { based = false; continue; }

        // Images of the ambient standard basis in the free quotient.
        std::vector<std::vector<Coeff>> images(rows, std::vector<Coeff>(cok.free_rank, 0));
        for (int r = 0; r < rows; ++r)
            for (int k = 0; k < cok.free_rank; ++k) images[r][k] = cok.projection.at(k, r);

        // Candidate positivity basis: distinct nonzero images, first-seen order,
        // pruned of generators that are N-combinations of the others.
        std::vector<std::vector<Coeff>> s_vectors;
        std::vector<int> first_row;
        for (int r = 0; r < rows; ++r) {
            const auto& img = images[r];
            if (std::all_of(img.begin(), img.end(), [](Coeff x) { return x == 0; })) continue;
            if (std::find(s_vectors.begin(), s_vectors.end(), img) == s_vectors.end()) {
                s_vectors.push_back(img);
                first_row.push_back(r);
            }
        }
        for (bool pruned = true; pruned && static_cast<int>(s_vectors.size()) > cok.free_rank;) {
            pruned = false;
            for (size_t v = 0; v < s_vectors.size(); ++v) {
                IntMatrix others(cok.free_rank, static_cast<int>(s_vectors.size()) - 1);
                int col = 0;
                for (size_t w = 0; w < s_vectors.size(); ++w) {
                    if (w == v) continue;
                    for (int i = 0; i < cok.free_rank; ++i) others.at(i, col) = s_vectors[w][i];
                    ++col;
                }
                if (!solve_nonneg(others, s_vectors[v], 8).solutions.empty()) {
                    s_vectors.erase(s_vectors.begin() + v);
                    first_row.erase(first_row.begin() + v);
                    pruned = true;
                    break;
                }
            }
        }
        if (static_cast<int>(s_vectors.size()) != cok.free_rank) { based = false; continue; }
        IntMatrix s_mat(cok.free_rank, cok.free_rank);
        for (int k = 0; k < cok.free_rank; ++k)
            for (int i = 0; i < cok.free_rank; ++i) s_mat.at(i, k) = s_vectors[k][i];
        SmithNormalForm snf = smith_normal_form(s_mat);
        bool unimodular = true;
        for (int i = 0; i < cok.free_rank; ++i)
            if (snf.d.at(i, i) != 1) unimodular = false;
        if (!unimodular) { based = false; continue; }

        dd.q_rank = cok.free_rank;
        dd.q_first_row = first_row;
        dd.row_coords.assign(rows, {});
        for (int r = 0; r < rows; ++r) {
            auto coords = solve_integer(s_mat, images[r]);
            dd.row_coords[r] = *coords;  // always solvable: s_mat is unimodular
            for (Coeff x : dd.row_coords[r])
                if (x < 0) based = false;
        }
    }
    result.is_based = based;
    if (!based) return result;

    // Assemble the based pushout complex and the cocone maps.
    BasedADC q("pushout(" + b.name() + "," + c.name() + ")");
    std::vector<std::vector<int>> q_index(max_deg + 1);  // per degree, Q basis indices
    // B and C may be the same object (a span with aliased targets), so rows
    // are tagged with their side explicitly rather than by address.
    auto ambient_of_row = [&](int n, int r) -> std::pair<bool, int> {
        const DegreeData& dd = data[n];
        if (r < static_cast<int>(dd.rows_b.size())) return {true, dd.rows_b[r]};
        return {false, dd.rows_c[r - dd.rows_b.size()]};
    };
    for (int n = 0; n <= max_deg; ++n) {
        for (int k = 0; k < data[n].q_rank; ++k) {
            auto [in_b, idx] = ambient_of_row(n, data[n].q_first_row[k]);
            const BasedADC& amb = in_b ? b : c;
            int qi = q.add_basis_element(unique_label(q, amb.basis(idx).label), n);
            q_index[n].push_back(qi);
        }
    }
    auto coords_to_chain = [&](int n, const std::vector<Coeff>& coords) {
        ChainElement x(n);
        for (size_t k = 0; k < coords.size(); ++k)
            if (coords[k] != 0) x.add_term(q_index[n][k], coords[k]);
        return x;
    };
    auto push_chain = [&](bool in_b, const ChainElement& x) {
        // Map an ambient chain of B (in_b) or C into Q coordinates.
        int n = x.degree();
        const DegreeData& dd = data[n];
        ChainElement r(n);
        for (const auto& [t, coef] : x.terms()) {
            int row;
            if (in_b) {
                auto it = std::find(dd.rows_b.begin(), dd.rows_b.end(), t);
                row = static_cast<int>(it - dd.rows_b.begin());
            } else {
                auto it = std::find(dd.rows_c.begin(), dd.rows_c.end(), t);
                row = static_cast<int>(dd.rows_b.size() + (it - dd.rows_c.begin()));
            }
            r += coords_to_chain(n, dd.row_coords[row]).scaled(coef);
        }
        return r;
    };
    for (int n = 0; n <= max_deg; ++n) {
        for (int k = 0; k < data[n].q_rank; ++k) {
            auto [in_b, idx] = ambient_of_row(n, data[n].q_first_row[k]);
            const BasedADC& amb = in_b ? b : c;
            const std::string& label = q.basis(q_index[n][k]).label;
            if (n == 0)
                q.set_augmentation(label, amb.augmentation_of(idx));
            else
                q.set_differential(label, push_chain(in_b, amb.differential(idx)));
        }
    }
    AdcPtr qp = share(std::move(q));
    result.complex = qp;
    result.inl = ADCMap::from_basis_images(f.target(), qp, [&](const BasisElement& e) {
        return push_chain(true, ChainElement::basis(e.degree, b.index_of(e.label)));
    });
    result.inr = ADCMap::from_basis_images(g.target(), qp, [&](const BasisElement& e) {
        return push_chain(false, ChainElement::basis(e.degree, c.index_of(e.label)));
    });
    return result;
}

namespace {

struct Profile {
    int degree;
    Coeff eps;
    int supp_plus, supp_minus;
    int below, above;
    auto operator<=>(const Profile&) const = default;
};

std::vector<Profile> profiles_of(const BasedADC& a) {
    BasisPreorder p = basis_preorder(a);
    std::vector<Profile> r(a.size());
    for (int i = 0; i < a.size(); ++i) {
        Profile& pr = r[i];
        pr.degree = a.basis(i).degree;
        pr.eps = pr.degree == 0 ? a.augmentation_of(i) : 0;
        if (pr.degree >= 1) {
            auto [plus, minus] = a.differential(i).decompose();
            pr.supp_plus = static_cast<int>(plus.terms().size());
            pr.supp_minus = static_cast<int>(minus.terms().size());
        } else {
            pr.supp_plus = pr.supp_minus = 0;
        }
        pr.below = p.below(i);
        pr.above = p.above(i);
    }
    return r;
}

struct IsoSearcher {
    const BasedADC& a;
    const BasedADC& b;
    AdcPtr ap, bp;
    bool find_all;
    long budget;
    bool exhausted = false;

    std::vector<Profile> pa, pb;
    std::vector<int> order;        // A indices, degree-ascending
    std::vector<int> assign;       // A index -> B index (-1 unset)
    std::vector<bool> used;        // B indices
    std::vector<std::vector<int>> candidates;  // per order position
    std::vector<ADCMap> found;

    IsoSearcher(AdcPtr a_, AdcPtr b_, long budget_, bool find_all_)
        : a(*a_), b(*b_), ap(std::move(a_)), bp(std::move(b_)), find_all(find_all_),
          budget(budget_) {}

    bool prepare() {
        if (a.size() != b.size()) return false;
        for (int q = 0; q <= std::max(a.max_degree(), b.max_degree()); ++q)
            if (a.rank(q) != b.rank(q)) return false;
        pa = profiles_of(a);
        pb = profiles_of(b);
        {
            auto sa = pa, sb = pb;
            std::sort(sa.begin(), sa.end());
            std::sort(sb.begin(), sb.end());
            if (sa != sb) return false;
        }
        order.resize(a.size());
        for (int i = 0; i < a.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [this](int x, int y) { return a.basis(x).degree < a.basis(y).degree; });
        candidates.resize(a.size());
        for (size_t p = 0; p < order.size(); ++p) {
            int i = order[p];
            for (int j = 0; j < b.size(); ++j)
                if (pa[i] == pb[j]) candidates[p].push_back(j);
            if (candidates[p].empty()) return false;
        }
        assign.assign(a.size(), -1);
        used.assign(b.size(), false);
        return true;
    }

    bool consistent(int i, int j) const {
        if (a.basis(i).degree == 0) return true;  // eps is matched by the profile
        ChainElement mapped(a.basis(i).degree - 1);
        for (const auto& [t, coef] : a.differential(i).terms()) {
            if (assign[t] < 0) return false;  // unreachable with degree ordering
            mapped.add_term(assign[t], coef);
        }
        return mapped == b.differential(j);
    }

    void run(size_t pos) {
        if (exhausted || (!find_all && !found.empty())) return;
        if (pos == order.size()) {
            ADCMap m(ap, bp);
            for (int i = 0; i < a.size(); ++i)
                m.set_image(i, ChainElement::basis(a.basis(i).degree, assign[i]));
            found.push_back(std::move(m));
            return;
        }
        int i = order[pos];
        for (int j : candidates[pos]) {
            if (used[j]) continue;
            if (--budget < 0) { exhausted = true; return; }
            if (!consistent(i, j)) continue;
            assign[i] = j;
            used[j] = true;
            run(pos + 1);
            assign[i] = -1;
            used[j] = false;
            if (exhausted || (!find_all && !found.empty())) return;
        }
    }
};

}  // namespace

IsoResult iso_search(AdcPtr a, AdcPtr b, long budget) {
    IsoSearcher s(std::move(a), std::move(b), budget, false);
    IsoResult r;
    if (!s.prepare()) { r.status = SearchStatus::None; return r; }
    s.run(0);
    if (!s.found.empty()) {
        r.status = SearchStatus::Found;
        r.iso = std::move(s.found.front());
    } else {
        r.status = s.exhausted ? SearchStatus::Inconclusive : SearchStatus::None;
    }
    return r;
}

AllIsosResult all_basis_isos(AdcPtr a, AdcPtr b, long budget) {
    IsoSearcher s(std::move(a), std::move(b), budget, true);
    AllIsosResult r;
    if (!s.prepare()) return r;
    s.run(0);
    r.isos = std::move(s.found);
    if (s.exhausted) r.status = SearchStatus::Inconclusive;
    return r;
}

}  // namespace adc
