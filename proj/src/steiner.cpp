#include "adc/steiner.hpp"

#include <algorithm>
#include <functional>

#include "adc/constructions.hpp"

namespace adc {

UnitalityReport unital(const BasedADC& a) {
    UnitalityReport report;
    for (int idx = 0; idx < a.size(); ++idx) {
        int q = a.basis(idx).degree;
        bool good = true;
        for (int sign : {+1, -1}) {
            ChainElement x = ChainElement::basis(q, idx);
            for (int d = q; d >= 1; --d) x = a.boundary_pm(x, sign);
            if (a.epsilon(x) != 1) { good = false; break; }
        }
        if (!good) report.failures.push_back(idx);
    }
    return report;
}

BasisPreorder basis_preorder(const BasedADC& a) {
    BasisPreorder p;
    int n = a.size();
    p.edges.assign(n, {});
    for (int idx = 0; idx < n; ++idx) {
        if (a.basis(idx).degree == 0) continue;
        auto [plus, minus] = a.differential(idx).decompose();
        for (int t : minus.support()) p.edges[t].push_back(idx);  // t -> idx
        for (int t : plus.support()) p.edges[idx].push_back(t);   // idx -> t
    }
    // Reflexive-transitive closure by BFS from every node.
    p.closure.assign(n, std::vector<bool>(n, false));
    for (int s = 0; s < n; ++s) {
        std::vector<int> stack{s};
        p.closure[s][s] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : p.edges[u])
                if (!p.closure[s][w]) {
                    p.closure[s][w] = true;
                    stack.push_back(w);
                }
        }
    }
    // SCCs straight off the closure (desk scale).
    p.scc_id.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (p.scc_id[i] >= 0) continue;
        int id = p.scc_count++;
        for (int j = i; j < n; ++j)
            if (p.scc_id[j] < 0 && p.closure[i][j] && p.closure[j][i]) p.scc_id[j] = id;
    }
    return p;
}

LoopFreeResult strongly_loop_free(const BasedADC& a) {
    BasisPreorder p = basis_preorder(a);
    int n = a.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p.closure[i][j] && p.closure[j][i]) {
                // Recover a generating cycle through i and j.
                LoopFreeResult r;
                r.loop_free = false;
                auto path = [&p, n](int from, int to) {
                    std::vector<int> prev(n, -1);
                    std::vector<int> stack{from};
                    std::vector<bool> seen(n, false);
                    seen[from] = true;
                    while (!stack.empty()) {
                        int u = stack.back();
                        stack.pop_back();
                        if (u == to) break;
                        for (int w : p.edges[u])
                            if (!seen[w]) {
                                seen[w] = true;
                                prev[w] = u;
                                stack.push_back(w);
                            }
                    }
                    std::vector<int> rev;
                    for (int u = to; u != -1 && u != from; u = prev[u]) rev.push_back(u);
                    std::reverse(rev.begin(), rev.end());
                    return rev;  // nodes after `from` up to and including `to`
                };
                r.cycle.push_back(i);
                for (int u : path(i, j)) r.cycle.push_back(u);
                for (int u : path(j, i)) r.cycle.push_back(u);
                r.cycle.pop_back();  // last equals i
                return r;
            }
    return {};
}

bool is_strong_steiner(const BasedADC& a) {
    return a.validate().ok() && unital(a).ok() && strongly_loop_free(a).loop_free;
}

bool is_total_order(const BasedADC& a) {
    LoopFreeResult lf = strongly_loop_free(a);
    if (!lf.loop_free) throw InvalidArgument("is_total_order requires a strongly loop-free basis");
    BasisPreorder p = basis_preorder(a);
    int n = a.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!p.closure[i][j] && !p.closure[j][i]) return false;
    return true;
}

AllIsosResult automorphisms(AdcPtr a, long budget) { return all_basis_isos(a, a, budget); }

int cube_signed_lex_cmp(const std::string& u, const std::string& v) {
    if (u.size() != v.size()) throw InvalidArgument("cube labels of different length");
    auto rank = [](char c) {
        switch (c) {
            case '0': return 0;
            case '?': return 1;
            case '1': return 2;
        }
        throw InvalidArgument(std::string("invalid cube label character '") + c + "'");
    };
    int n = static_cast<int>(u.size());
    // Position 1 is the rightmost character; scan from the right.
    int qmarks = 0;
    for (int i = n - 1; i >= 0; --i) {
        if (u[i] != v[i]) {
            int c = rank(u[i]) < rank(v[i]) ? -1 : 1;
            return qmarks % 2 == 0 ? c : -c;
        }
        if (u[i] == '?') ++qmarks;
    }
    return 0;
}

}  // namespace adc
