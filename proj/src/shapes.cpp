#include "adc/shapes.hpp"

#include <algorithm>

#include "adc/constructions.hpp"

namespace adc {

ThetaTree ThetaTree::suspension(ThetaTree inner) {
    ThetaTree t;
    t.kind = Kind::Suspension;
    t.left = std::make_shared<const ThetaTree>(std::move(inner));
    return t;
}

ThetaTree ThetaTree::wedge_of(ThetaTree l, ThetaTree r) {
    ThetaTree t;
    t.kind = Kind::Wedge;
    t.left = std::make_shared<const ThetaTree>(std::move(l));
    t.right = std::make_shared<const ThetaTree>(std::move(r));
    return t;
}

int ThetaTree::node_count() const {
    switch (kind) {
        case Kind::Point: return 1;
        case Kind::Suspension: return 1 + left->node_count();
        case Kind::Wedge: return 1 + left->node_count() + right->node_count();
    }
    return 0;
}

std::string ThetaTree::to_string() const {
    switch (kind) {
        case Kind::Point: return "*";
        case Kind::Suspension: return "s(" + left->to_string() + ")";
        case Kind::Wedge: {
            std::string l = left->to_string();
            std::string r = right->to_string();
            if (right->kind == Kind::Wedge) r = "(" + r + ")";
            return l + " v " + r;
        }
    }
    return "";
}

namespace {

struct ThetaParser {
    const std::string& text;
    size_t pos = 0;

    explicit ThetaParser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) { ++pos; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw InvalidArgument("theta syntax error at position " + std::to_string(pos) + ": " + what);
    }

    ThetaTree parse_term() {
        skip_ws();
        if (eat('*')) return ThetaTree::point();
        if (eat('(')) {
            ThetaTree e = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (eat('s')) {
            if (!eat('(')) fail("expected '(' after 's'");
            ThetaTree e = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return ThetaTree::suspension(std::move(e));
        }
        fail("expected '*', 's(...)' or '('");
    }

    ThetaTree parse_expr() {
        ThetaTree e = parse_term();
        for (;;) {
            skip_ws();
            if (pos < text.size() && text[pos] == 'v') {
                ++pos;
                e = ThetaTree::wedge_of(std::move(e), parse_term());
            } else {
                return e;
            }
        }
    }
};

}  // namespace

ThetaTree parse_theta(const std::string& text) {
    ThetaParser p(text);
    ThetaTree t = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return t;
}

BasedADC unit() {
    BasedADC r("unit");
    r.add_basis_element("*", 0);
    r.set_augmentation("*", 1);
    r.set_bipointing("*", "*");
    return r;
}

BasedADC globe(int q) {
    if (q < 0) throw InvalidArgument("globe dimension must be >= 0");
    BasedADC r = unit();
    for (int i = 0; i < q; ++i) r = suspend(r);
    r.set_name("globe" + std::to_string(q));
    return r;
}

BasedADC cube(int n) {
    if (n < 0) throw InvalidArgument("cube dimension must be >= 0");
    if (n > 12) throw InvalidArgument("cube dimension capped at 12");
    if (n == 0) {
        BasedADC r = unit();
        r.set_name("cube0");
        return r;
    }
    BasedADC r("cube" + std::to_string(n));
    // All strings over {0,?,1}, leftmost symbol first.
    std::vector<std::string> strings{""};
    for (int i = 0; i < n; ++i) {
        std::vector<std::string> next;
        next.reserve(strings.size() * 3);
        for (const auto& s : strings)
            for (char c : {'0', '?', '1'}) next.push_back(s + c);
        strings = std::move(next);
    }
    auto degree_of = [](const std::string& s) {
        return static_cast<int>(std::count(s.begin(), s.end(), '?'));
    };
    for (const auto& s : strings) r.add_basis_element(s, degree_of(s));
    for (const auto& s : strings) {
        int deg = degree_of(s);
        if (deg == 0) {
            r.set_augmentation(s, 1);
            continue;
        }
        ChainElement d(deg - 1);
        int qmarks_right = 0;
        for (int i = n - 1; i >= 0; --i) {
            if (s[i] != '?') continue;
            Coeff sign = qmarks_right % 2 == 0 ? 1 : -1;
            std::string s1 = s, s0 = s;
            s1[i] = '1';
            s0[i] = '0';
            d.add_term(r.index_of(s1), sign);
            d.add_term(r.index_of(s0), -sign);
            ++qmarks_right;
        }
        r.set_differential(s, d);
    }
    r.set_bipointing(std::string(n, '0'), std::string(n, '1'));
    return r;
}

std::string oriental_label(const std::vector<int>& subset) {
    std::string s = "{";
    for (size_t i = 0; i < subset.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(subset[i]);
    }
    return s + "}";
}

BasedADC oriental(int n) {
    if (n < 0) throw InvalidArgument("oriental dimension must be >= 0");
    if (n > 12) throw InvalidArgument("oriental dimension capped at 12");
    BasedADC r("oriental" + std::to_string(n));
    // Nonempty subsets of {0..n}, ordered by (cardinality, lexicographic).
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
        std::vector<int> s;
        for (int i = 0; i <= n; ++i)
            if (mask & (1u << i)) s.push_back(i);
        subsets.push_back(std::move(s));
    }
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](const auto& a, const auto& b) {
                         if (a.size() != b.size()) return a.size() < b.size();
                         return a < b;
                     });
    for (const auto& s : subsets)
        r.add_basis_element(oriental_label(s), static_cast<int>(s.size()) - 1);
    for (const auto& s : subsets) {
        if (s.size() == 1) {
            r.set_augmentation(oriental_label(s), 1);
            continue;
        }
        ChainElement d(static_cast<int>(s.size()) - 2);
        for (size_t i = 0; i < s.size(); ++i) {
            std::vector<int> face = s;
            face.erase(face.begin() + i);
            d.add_term(r.index_of(oriental_label(face)), i % 2 == 0 ? 1 : -1);
        }
        r.set_differential(oriental_label(s), d);
    }
    r.set_bipointing(oriental_label({0}), oriental_label({n}));
    return r;
}

BasedADC theta(const ThetaTree& t) {
    switch (t.kind) {
        case ThetaTree::Kind::Point: return unit();
        case ThetaTree::Kind::Suspension: {
            BasedADC r = suspend(theta(*t.left));
            r.set_name("theta(" + t.to_string() + ")");
            return r;
        }
        case ThetaTree::Kind::Wedge: {
            BasedADC r = wedge(theta(*t.left), theta(*t.right));
            r.set_name("theta(" + t.to_string() + ")");
            return r;
        }
    }
    throw InvalidArgument("malformed theta tree");
}

std::vector<ThetaTree> all_theta_trees(int max_nodes) {
    std::vector<std::vector<ThetaTree>> by_count(std::max(max_nodes, 0) + 1);
    for (int k = 1; k <= max_nodes; ++k) {
        if (k == 1) {
            by_count[1].push_back(ThetaTree::point());
            continue;
        }
        for (const auto& inner : by_count[k - 1])
            by_count[k].push_back(ThetaTree::suspension(inner));
        for (int l = 1; l <= k - 2; ++l)
            for (const auto& lt : by_count[l])
                for (const auto& rt : by_count[k - 1 - l])
                    by_count[k].push_back(ThetaTree::wedge_of(lt, rt));
    }
    std::vector<ThetaTree> out;
    for (int k = 1; k <= max_nodes; ++k)
        for (auto& t : by_count[k]) out.push_back(std::move(t));
    return out;
}

}  // namespace adc
