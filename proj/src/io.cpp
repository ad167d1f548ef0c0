#include "adc/io.hpp"

#include <algorithm>
#include <numeric>

#include "adc/steiner.hpp"
#include "json.hpp"

namespace adc {

namespace {

using json = nlohmann::ordered_json;

std::vector<int> serialization_order(const BasedADC& a) {
    std::vector<int> order(a.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&a](int x, int y) {
        return a.basis(x).degree < a.basis(y).degree;
    });
    return order;
}

}  // namespace

std::string serialize_adc(const BasedADC& a) {
    std::vector<int> order = serialization_order(a);
    std::vector<int> pos(a.size());
    for (size_t p = 0; p < order.size(); ++p) pos[order[p]] = static_cast<int>(p);

    json j;
    j["name"] = a.name();
    j["max_degree"] = a.size() == 0 ? 0 : a.max_degree();
    j["basis"] = json::array();
    for (int i : order)
        j["basis"].push_back({{"label", a.basis(i).label}, {"degree", a.basis(i).degree}});
    j["differential"] = json::array();
    for (int i : order) {
        if (a.basis(i).degree == 0) continue;
        json terms = json::array();
        std::vector<std::pair<int, Coeff>> ts(a.differential(i).terms());
        std::sort(ts.begin(), ts.end(),
                  [&pos](const auto& x, const auto& y) { return pos[x.first] < pos[y.first]; });
        for (const auto& [t, c] : ts)
            terms.push_back({{"coef", c}, {"to", a.basis(t).label}});
        j["differential"].push_back({{"from", a.basis(i).label}, {"terms", std::move(terms)}});
    }
    j["augmentation"] = json::array();
    for (int i : order) {
        if (a.basis(i).degree != 0) continue;
        j["augmentation"].push_back({{"from", a.basis(i).label}, {"coef", a.augmentation_of(i)}});
    }
    if (a.bipointed()) {
        auto [s, t] = a.bipointing();
        j["bipointing"] = {{"source", a.basis(s).label}, {"sink", a.basis(t).label}};
    }
    return j.dump(2) + "\n";
}

BasedADC parse_adc(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("invalid JSON: ") + e.what());
    }
    try {
        BasedADC a(j.value("name", ""));
        if (!j.contains("basis") || !j["basis"].is_array())
            throw InvalidArgument("missing or malformed field 'basis'");
        for (const auto& b : j["basis"])
            a.add_basis_element(b.at("label").get<std::string>(), b.at("degree").get<int>());
        for (const auto& d : j.value("differential", json::array())) {
            const std::string from = d.at("from").get<std::string>();
            ChainElement x(a.basis(a.index_of(from)).degree - 1);
            for (const auto& t : d.at("terms"))
                x.add_term(a.index_of(t.at("to").get<std::string>()), t.at("coef").get<Coeff>());
            a.set_differential(from, std::move(x));
        }
        for (const auto& e : j.value("augmentation", json::array()))
            a.set_augmentation(e.at("from").get<std::string>(), e.at("coef").get<Coeff>());
        if (j.contains("bipointing") && !j["bipointing"].is_null())
            a.set_bipointing(j["bipointing"].at("source").get<std::string>(),
                             j["bipointing"].at("sink").get<std::string>());
        return a;
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("schema violation: ") + e.what());
    }
}

BasedADC canonicalize(const BasedADC& a) {
    BasedADC r(a.name());
    std::vector<int> order = serialization_order(a);
    for (int i : order) r.add_basis_element(a.basis(i).label, a.basis(i).degree);
    for (int i : order) {
        const BasisElement& b = a.basis(i);
        if (b.degree == 0) {
            r.set_augmentation(b.label, a.augmentation_of(i));
        } else {
            ChainElement x(b.degree - 1);
            for (const auto& [t, c] : a.differential(i).terms())
                x.add_term(r.index_of(a.basis(t).label), c);
            r.set_differential(b.label, std::move(x));
        }
    }
    if (a.bipointed()) {
        auto [s, t] = a.bipointing();
        r.set_bipointing(a.basis(s).label, a.basis(t).label);
    }
    return r;
}

std::string export_dot(const BasedADC& a) {
    BasisPreorder p = basis_preorder(a);
    int n = a.size();
    bool acyclic = true;
    for (int i = 0; i < n && acyclic; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && p.closure[i][j] && p.closure[j][i]) {
                acyclic = false;
                break;
            }

    std::vector<int> order = serialization_order(a);
    std::string s = "digraph basis_order {\n";
    auto q = [](const std::string& l) {
        std::string out = "\"";
        for (char c : l) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        return out + "\"";
    };
    for (int i : order)
        s += "  " + q(a.basis(i).label) + " [label=" +
             q(a.basis(i).label + " (" + std::to_string(a.basis(i).degree) + ")") + "];\n";
    if (acyclic) {
        for (int i : order)
            for (int j : order) {
                if (i == j || !p.closure[i][j]) continue;
                bool covering = true;
                for (int k = 0; k < n && covering; ++k)
                    if (k != i && k != j && p.closure[i][k] && p.closure[k][j]) covering = false;
                if (covering) s += "  " + q(a.basis(i).label) + " -> " + q(a.basis(j).label) + ";\n";
            }
    } else {
        for (int i : order) {
            std::vector<int> targets = p.edges[i];
            std::sort(targets.begin(), targets.end());
            targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
            for (int j : targets)
                if (i != j) s += "  " + q(a.basis(i).label) + " -> " + q(a.basis(j).label) + ";\n";
        }
    }
    s += "}\n";
    return s;
}

}  // namespace adc
