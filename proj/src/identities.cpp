#include "adc/identities.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "adc/nerve.hpp"
#include "adc/shapes.hpp"
#include "adc/steiner.hpp"

namespace adc {

namespace {

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

std::vector<int> parse_subset(const std::string& label) {
    if (label.size() < 2 || label.front() != '{' || label.back() != '}')
        throw InvalidArgument("not a subset label: '" + label + "'");
    std::vector<int> out;
    size_t pos = 1;
    while (pos < label.size() - 1) {
        size_t next = label.find(',', pos);
        if (next == std::string::npos || next > label.size() - 1) next = label.size() - 1;
        out.push_back(std::stoi(label.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

// The boundary of the interval as a bare pair of points.
BasedADC interval_boundary() {
    BasedADC r("∂□¹");
    r.add_basis_element("0", 0);
    r.add_basis_element("1", 0);
    r.set_augmentation("0", 1);
    r.set_augmentation("1", 1);
    r.set_bipointing("0", "1");
    return r;
}

}  // namespace

std::string SuiteReport::summary() const {
    std::string head = suite;
    if (!params.empty()) head += "(" + params + ")";
    if (inconclusive) return head + ": inconclusive (budget)";
    for (const auto& c : checks)
        if (!c.passed) {
            std::string s = head + ": FAIL [" + c.name;
            if (!c.witness.empty()) s += " @ " + c.witness;
            return s + "]";
        }
    return head + ": pass (" + std::to_string(checks.size()) + " checks)";
}

SuiteReport verify_cube_order(int n) {
    Stopwatch sw;
    SuiteReport rep;
    rep.suite = "cube_order";
    rep.params = std::to_string(n);
    BasedADC c = cube(n);
    LoopFreeResult lf = strongly_loop_free(c);
    rep.record("strongly_loop_free", lf.loop_free);
    rep.record("total_order", lf.loop_free && is_total_order(c));
    BasisPreorder p = basis_preorder(c);
    bool agree = true;
    std::string witness;
    for (int i = 0; i < c.size() && agree; ++i)
        for (int j = i + 1; j < c.size() && agree; ++j) {
            int cmp = cube_signed_lex_cmp(c.basis(i).label, c.basis(j).label);
            if (cmp == 0 || p.leq(i, j) != (cmp < 0) || p.leq(j, i) != (cmp > 0)) {
                agree = false;
                witness = c.basis(i).label + " vs " + c.basis(j).label;
            }
        }
    rep.record("signed_lex_agreement", agree, witness);
    rep.seconds = sw.elapsed();
    return rep;
}

SuiteReport verify_cube_aut_trivial(int n) {
    Stopwatch sw;
    SuiteReport rep;
    rep.suite = "cube_aut_trivial";
    rep.params = std::to_string(n);
    AdcPtr c = share(cube(n));
    AllIsosResult r = automorphisms(c);
    rep.inconclusive = r.status == SearchStatus::Inconclusive;
    rep.record("exactly_one", r.isos.size() == 1,
               std::to_string(r.isos.size()) + " automorphisms");
    rep.record("is_identity", !r.isos.empty() && r.isos.front() == ADCMap::identity(c));
    rep.seconds = sw.elapsed();
    return rep;
}

SuiteReport verify_cube_aut_control() {
    Stopwatch sw;
    SuiteReport rep;
    rep.suite = "cube_aut_control";
    AdcPtr s = share(direct_sum(cube(1), cube(1)));
    AllIsosResult r = automorphisms(s);
    rep.inconclusive = r.status == SearchStatus::Inconclusive;
    rep.record("exactly_two", r.isos.size() == 2,
               std::to_string(r.isos.size()) + " automorphisms");
    rep.seconds = sw.elapsed();
    return rep;
}

SuiteReport verify_oriental_cube_retract(int n) {
    Stopwatch sw;
    SuiteReport rep;
    rep.suite = "oriental_cube_retract";
    rep.params = std::to_string(n);
    AdcPtr op = share(oriental(n));
    AdcPtr cp = share(cube(n));

    // Section: one string per choice of a '?' position in every block of the
    // subset; within a block the entries run 0..0 ? 1..1 from low to high.
    ADCMap s = ADCMap::from_basis_images(op, cp, [&](const BasisElement& e) {
        std::vector<int> alpha = parse_subset(e.label);
        std::vector<std::pair<int, int>> blocks;  // inclusive position ranges
        for (size_t j = 0; j + 1 < alpha.size(); ++j)
            blocks.push_back({alpha[j] + 1, alpha[j + 1]});
        ChainElement x(e.degree);
        std::vector<int> t;
        for (const auto& b : blocks) t.push_back(b.first);
        for (;;) {
            std::string str(n, '0');
            // Position p runs 1..n from the right of the label string.
            for (int p = 1; p <= n; ++p) {
                char ch;
                if (p <= alpha.front()) {
                    ch = '1';
                } else if (p > alpha.back()) {
                    ch = '0';
                } else {
                    size_t j = 0;
                    while (!(blocks[j].first <= p && p <= blocks[j].second)) ++j;
                    ch = p < t[j] ? '0' : p == t[j] ? '?' : '1';
                }
                str[n - p] = ch;
            }
            x.add_term(cp->index_of(str), 1);
            size_t j = 0;
            while (j < t.size() && t[j] == blocks[j].second) t[j] = blocks[j].first, ++j;
            if (j == t.size()) break;
            ++t[j];
        }
        return x;
    });
    rep.record("section_valid", s.validate().ok());

    // Retraction, peeling the leftmost (highest) coordinate: 0 forgets it,
    // ? adjoins the new top vertex, 1 collapses everything above dimension 0.
    std::function<std::map<std::vector<int>, Coeff>(const std::string&)> rsub =
        [&rsub](const std::string& str) -> std::map<std::vector<int>, Coeff> {
        if (str.empty()) return {{{0}, 1}};
        std::map<std::vector<int>, Coeff> sub = rsub(str.substr(1));
        int v = static_cast<int>(str.size());
        if (str[0] == '0') return sub;
        std::map<std::vector<int>, Coeff> out;
        if (str[0] == '?') {
            for (const auto& [key, c] : sub) {
                std::vector<int> k = key;
                k.push_back(v);
                out[k] = checked_add(out[k], c);
            }
            return out;
        }
        Coeff total = 0;
        bool vertices = true;
        for (const auto& [key, c] : sub) {
            if (key.size() != 1) vertices = false;
            total = checked_add(total, c);
        }
        if (vertices && !sub.empty()) out[{v}] = total;
        return out;
    };
    ADCMap r = ADCMap::from_basis_images(cp, op, [&](const BasisElement& e) {
        ChainElement x(e.degree);
        for (const auto& [key, c] : rsub(e.label)) x.add_term(op->index_of(oriental_label(key)), c);
        return x;
    });
    rep.record("retraction_valid", r.validate().ok());
    rep.record("r_after_s_is_id", compose_maps(s, r) == ADCMap::identity(op));
    rep.seconds = sw.elapsed();
    return rep;
}

SuiteReport verify_wedge_retract(int n, int m, bool flip_h_sign) {
    Stopwatch sw;
    SuiteReport rep;
    rep.suite = "wedge_retract";
    rep.params = std::to_string(n) + "," + std::to_string(m) +
                 (flip_h_sign ? ",flip_h" : "");
    int total = n + m;
    BasedADC on = oriental(n), om = oriental(m);
    AdcPtr op = share(oriental(total));
    AdcPtr wp = share(wedge(on, om));

    // Subset of {0..n+m} carried by each wedge basis element.
    std::vector<std::vector<int>> wsub(wp->size());
    for (int i = 0; i < on.size(); ++i) wsub[i] = parse_subset(on.basis(i).label);
    int sb = om.index_of(oriental_label({0}));
    int widx = on.size();
    for (int j = 0; j < om.size(); ++j) {
        int wi = j == sb ? on.index_of(oriental_label({n})) : widx++;
        std::vector<int> shifted = parse_subset(om.basis(j).label);
        for (int& x : shifted) x += n;
        wsub[wi] = std::move(shifted);
    }
    std::map<std::vector<int>, int> to_w;
    for (int i = 0; i < wp->size(); ++i) to_w[wsub[i]] = i;

    ADCMap s = ADCMap::from_basis_images(wp, op, [&](const BasisElement& e) {
        const auto& sub = wsub[wp->index_of(e.label)];
        return ChainElement::basis(e.degree, op->index_of(oriental_label(sub)));
    });
    rep.record("section_valid", s.validate().ok());

    auto h_basis = [&](int oi) {
        const BasisElement& e = op->basis(oi);
        ChainElement out(e.degree + 1);
        std::vector<int> alpha = parse_subset(e.label);
        int left = 0, right = 0;
        bool has_n = false;
        for (int x : alpha) {
            if (x < n) ++left;
            if (x > n) ++right;
            if (x == n) has_n = true;
        }
        if (has_n || left == 0 || right == 0) return out;
        Coeff sign = left % 2 == 0 ? 1 : -1;
        if (flip_h_sign) sign = -sign;
        std::vector<int> key = alpha;
        key.insert(std::lower_bound(key.begin(), key.end(), n), n);
        out.add_term(op->index_of(oriental_label(key)), sign);
        return out;
    };
    auto h_chain = [&](const ChainElement& x) {
        ChainElement out(x.degree() + 1);
        for (const auto& [i, c] : x.terms()) out += h_basis(i).scaled(c);
        return out;
    };

    ADCMap r = ADCMap::from_basis_images(op, op, [&](const BasisElement& e) {
        int i = op->index_of(e.label);
        ChainElement res = ChainElement::basis(e.degree, i);
        res -= op->boundary(h_basis(i));
        if (e.degree >= 1) res -= h_chain(op->differential(i));
        return res;
    });
    rep.record("retraction_valid", r.validate().ok());

    bool in_span = true;
    std::string witness;
    for (int i = 0; i < op->size() && in_span; ++i)
        for (const auto& [t, c] : r.image(i).terms())
            if (!to_w.count(parse_subset(op->basis(t).label))) {
                in_span = false;
                witness = op->basis(i).label + " -> " + op->basis(t).label;
                break;
            }
    rep.record("image_in_wedge", in_span, witness);

    if (in_span) {
        ADCMap rbar = ADCMap::from_basis_images(op, wp, [&](const BasisElement& e) {
            ChainElement out(e.degree);
            for (const auto& [t, c] : r.image(op->index_of(e.label)).terms())
                out.add_term(to_w.at(parse_subset(op->basis(t).label)), c);
            return out;
        });
        rep.record("r_after_s_is_id", compose_maps(s, rbar) == ADCMap::identity(wp));
    } else {
        rep.record("r_after_s_is_id", false);
    }
    rep.seconds = sw.elapsed();
    return rep;
}

SuiteReport verify_cone_quotient(int n) {
    Stopwatch sw;
    SuiteReport rep;
    rep.suite = "cone_quotient";
    rep.params = std::to_string(n);
    BasedADC on = oriental(n);
    int ob = on.size();
    AdcPtr tp = share(tensor(cube(1), on));
    AdcPtr op1 = share(oriental(n + 1));

    ADCMap q = ADCMap::from_basis_images(tp, op1, [&](const BasisElement& e) {
        int idx = tp->index_of(e.label);
        int i = idx / ob, j = idx % ob;  // i: 0='0', 1='?', 2='1'
        std::vector<int> alpha = parse_subset(on.basis(j).label);
        if (i == 0) return ChainElement::basis(e.degree, op1->index_of(oriental_label(alpha)));
        if (i == 1) {
            alpha.push_back(n + 1);
            return ChainElement::basis(e.degree, op1->index_of(oriental_label(alpha)));
        }
        if (alpha.size() == 1)
            return ChainElement::basis(e.degree, op1->index_of(oriental_label({n + 1})));
        return ChainElement(e.degree);
    });
    rep.record("quotient_valid", q.validate().ok());

    ADCMap sec = ADCMap::from_basis_images(op1, tp, [&](const BasisElement& e) {
        std::vector<int> beta = parse_subset(e.label);
        std::string label;
        if (beta.back() != n + 1) {
            label = "0⊗" + oriental_label(beta);
        } else if (beta.size() > 1) {
            beta.pop_back();
            label = "?⊗" + oriental_label(beta);
        } else {
            label = "1⊗" + oriental_label({n});
        }
        return ChainElement::basis(e.degree, tp->index_of(label));
    });
    rep.record("q_after_sec_is_id", compose_maps(sec, q) == ADCMap::identity(op1));
    rep.seconds = sw.elapsed();
    return rep;
}

SuiteReport verify_suspension_quotient(int n) {
    Stopwatch sw;
    SuiteReport rep;
    rep.suite = "suspension_quotient";
    rep.params = std::to_string(n);
    BasedADC on = oriental(n);
    AdcPtr op1 = share(oriental(n + 1));
    AdcPtr sp = share(suspend(on));

    ADCMap p = ADCMap::from_basis_images(op1, sp, [&](const BasisElement& e) {
        std::vector<int> beta = parse_subset(e.label);
        if (beta.back() == n + 1) {
            if (beta.size() == 1) return ChainElement::basis(0, sp->index_of("⊤"));
            beta.pop_back();
            return ChainElement::basis(e.degree, sp->index_of("σ" + oriental_label(beta)));
        }
        if (beta.size() == 1) return ChainElement::basis(0, sp->index_of("⊥"));
        return ChainElement(e.degree);
    });
    rep.record("quotient_valid", p.validate().ok());

    ADCMap sec = ADCMap::from_basis_images(sp, op1, [&](const BasisElement& e) {
        int i = sp->index_of(e.label);
        if (i == 0) return ChainElement::basis(0, op1->index_of(oriental_label({0})));
        if (i == 1) return ChainElement::basis(0, op1->index_of(oriental_label({n + 1})));
        std::vector<int> beta = parse_subset(on.basis(i - 2).label);
        beta.push_back(n + 1);
        return ChainElement::basis(e.degree, op1->index_of(oriental_label(beta)));
    });
    rep.record("p_after_sec_is_id", compose_maps(sec, p) == ADCMap::identity(sp));
    rep.seconds = sw.elapsed();
    return rep;
}

SuiteReport verify_sigma_pushout(AdcPtr a) {
    Stopwatch sw;
    SuiteReport rep;
    rep.suite = "sigma_pushout";
    rep.params = a->name();
    int na = a->size();
    AdcPtr bnd = share(interval_boundary());
    AdcPtr bp = share(tensor(cube(1), *a));
    AdcPtr sp = share(tensor(*bnd, *a));
    AdcPtr sap = share(suspend(*a));

    ADCMap f = ADCMap::from_basis_images(sp, bp, [&](const BasisElement& e) {
        int idx = sp->index_of(e.label);
        int i = idx / na, j = idx % na;
        return ChainElement::basis(e.degree, (i == 0 ? 0 : 2) * na + j);
    });
    ADCMap g = ADCMap::from_basis_images(sp, bnd, [&](const BasisElement& e) {
        int idx = sp->index_of(e.label);
        int i = idx / na, j = idx % na;
        if (a->basis(j).degree != 0) return ChainElement(e.degree);
        return ChainElement::basis(0, i, a->augmentation_of(j));
    });
    ADCMap u = ADCMap::from_basis_images(bp, sap, [&](const BasisElement& e) {
        int idx = bp->index_of(e.label);
        int i = idx / na, j = idx % na;
        if (i == 1) return ChainElement::basis(e.degree, j + 2);
        if (a->basis(j).degree != 0) return ChainElement(e.degree);
        return ChainElement::basis(0, i == 0 ? 0 : 1, a->augmentation_of(j));
    });
    ADCMap v = ADCMap::from_label_map(bnd, sap, [](const std::string& l) {
        return l == "0" ? "⊥" : "⊤";
    });

    rep.record("top_valid", f.validate().ok());
    rep.record("left_valid", g.validate().ok());
    rep.record("bottom_valid", u.validate().ok());
    rep.record("right_valid", v.validate().ok());
    rep.record("square_commutes", compose_maps(f, u) == compose_maps(g, v));

    PushoutResult p = degreewise_pushout({f, g});
    rep.record("pushout_based", p.is_based);
    rep.record("torsion_free", !p.has_torsion());
    if (!p.is_based) {
        rep.seconds = sw.elapsed();
        return rep;
    }
    std::vector<int> want = sap->degree_ranks();
    std::vector<int> got = p.free_ranks;
    want.resize(std::max(want.size(), got.size()), 0);
    got.resize(want.size(), 0);
    rep.record("ranks_match", want == got);

    ADCMap w(p.complex, sap);
    std::vector<char> assigned(p.complex->size(), 0);
    auto absorb = [&](const ADCMap& in, const ADCMap& cocone) {
        for (int i = 0; i < in.source()->size(); ++i) {
            const auto& t = in.image(i).terms();
            if (t.size() == 1 && t[0].second == 1 && !assigned[t[0].first]) {
                w.set_image(t[0].first, cocone.image(i));
                assigned[t[0].first] = 1;
            }
        }
    };
    absorb(p.inl, u);
    absorb(p.inr, v);
    bool all = std::all_of(assigned.begin(), assigned.end(), [](char c) { return c != 0; });
    rep.record("cocone_induced", all);
    bool iso = all && w.validate().ok() && w.is_basis_bijection() &&
               w.inverse_of_bijection().validate().ok();
    rep.record("cocone_iso", iso);
    rep.record("cocone_matches_bottom", all && compose_maps(p.inl, w) == u);
    rep.record("cocone_matches_right", all && compose_maps(p.inr, w) == v);
    rep.seconds = sw.elapsed();
    return rep;
}

SuiteReport verify_gray_cylinder(AdcPtr a, long budget) {
    Stopwatch sw;
    SuiteReport rep;
    rep.suite = "gray_cylinder";
    rep.params = a->name();
    BasedADC sa = suspend(*a);
    int ns = sa.size();
    AdcPtr sp = share(direct_sum(sa, sa));
    AdcPtr tp = share(suspend(tensor(*a, cube(1))));

    ADCMap left = ADCMap::from_basis_images(sp, tp, [&](const BasisElement& e) {
        int idx = sp->index_of(e.label);
        bool second = idx >= ns;
        int k = second ? idx - ns : idx;
        if (k <= 1) return ChainElement::basis(0, k);
        return ChainElement::basis(e.degree, 2 + ((k - 2) * 3 + (second ? 2 : 0)));
    });

    BasedADC w1 = wedge(sa, cube(1));
    BasedADC w2 = wedge(cube(1), sa);
    int off = w1.size();
    AdcPtr rp = share(direct_sum(w1, w2));
    // Long-hom inclusions: poles land on the far endpoints of each wedge, so
    // degree-1 cells pick up the interval edge (weighted by the augmentation).
    ADCMap right = ADCMap::from_basis_images(sp, rp, [&](const BasisElement& e) {
        int idx = sp->index_of(e.label);
        bool second = idx >= ns;
        int k = second ? idx - ns : idx;
        if (!second) {
            if (k == 0) return ChainElement::basis(0, 0);
            if (k == 1) return ChainElement::basis(0, ns + 1);
            ChainElement x = ChainElement::basis(e.degree, k);
            if (e.degree == 1) x.add_term(ns, a->augmentation_of(k - 2));
            return x;
        }
        if (k == 0) return ChainElement::basis(0, off);
        if (k == 1) return ChainElement::basis(0, off + 3);
        ChainElement x = ChainElement::basis(e.degree, off + k + 2);
        if (e.degree == 1) x.add_term(off + 1, a->augmentation_of(k - 2));
        return x;
    });

    rep.record("left_leg_valid", left.validate().ok());
    rep.record("right_leg_valid", right.validate().ok());

    PushoutResult p = degreewise_pushout({left, right});
    rep.record("pushout_based", p.is_based);
    rep.record("torsion_free", !p.has_torsion());
    if (!p.is_based) {
        rep.seconds = sw.elapsed();
        return rep;
    }
    AdcPtr cyl = share(tensor(sa, cube(1)));
    std::vector<int> want = cyl->degree_ranks();
    std::vector<int> got = p.free_ranks;
    want.resize(std::max(want.size(), got.size()), 0);
    got.resize(want.size(), 0);
    rep.record("ranks_match", want == got);

    IsoResult iso = iso_search(p.complex, cyl, budget);
    rep.inconclusive = iso.status == SearchStatus::Inconclusive;
    rep.record("cylinder_iso_found", iso.found());
    rep.seconds = sw.elapsed();
    return rep;
}

SuiteReport verify_dual_monoidal(AdcPtr a, AdcPtr b, long budget) {
    Stopwatch sw;
    SuiteReport rep;
    rep.suite = "dual_monoidal";
    rep.params = a->name() + "," + b->name();
    BasedADC ab = tensor(*a, *b);
    AdcPtr lhs = share(dual(ab, DualitySelector::total()));
    AdcPtr rhs = share(
        tensor(dual(*a, DualitySelector::total()), dual(*b, DualitySelector::total())));

    bool labels_ok = true;
    std::string witness;
    for (int i = 0; i < lhs->size() && labels_ok; ++i)
        if (!rhs->has_label(lhs->basis(i).label)) {
            labels_ok = false;
            witness = lhs->basis(i).label;
        }
    rep.record("labels_match", labels_ok && lhs->size() == rhs->size(), witness);
    if (labels_ok && lhs->size() == rhs->size()) {
        ADCMap id = ADCMap::from_label_map(lhs, rhs, [](const std::string& l) { return l; });
        rep.record("identity_is_iso", id.is_basis_bijection() && id.validate().ok() &&
                                          id.inverse_of_bijection().validate().ok());
    } else {
        rep.record("identity_is_iso", false);
    }

    AdcPtr lop = share(dual(ab, DualitySelector::odd()));
    AdcPtr rop =
        share(tensor(dual(*b, DualitySelector::odd()), dual(*a, DualitySelector::odd())));
    IsoResult iso = iso_search(lop, rop, budget);
    rep.inconclusive = iso.status == SearchStatus::Inconclusive;
    rep.record("op_antimonoidal_iso_found", iso.found());
    rep.seconds = sw.elapsed();
    return rep;
}

SuiteReport verify_nerve_globe(int q) {
    Stopwatch sw;
    SuiteReport rep;
    rep.suite = "nerve_globe";
    rep.params = std::to_string(q);
    BasedADC g = globe(q);
    CellEnumeration en = enumerate_cells(g, q + 1, 4);
    rep.inconclusive = en.truncated;
    std::vector<int> counts = en.counts_by_dim(q + 1);
    for (int k = 0; k <= q + 1; ++k) {
        int expected = k < q ? 2 * (k + 1) : 2 * q + 1;
        rep.record("count_dim_" + std::to_string(k), counts[k] == expected,
                   std::to_string(counts[k]) + " vs " + std::to_string(expected));
    }
    rep.seconds = sw.elapsed();
    return rep;
}

}  // namespace adc
