#include "adc/complex.hpp"

#include <algorithm>

namespace adc {

const std::vector<int> BasedADC::empty_degree_{};
const ChainElement BasedADC::zero_chain_{};

int BasedADC::add_basis_element(const std::string& label, int degree) {
    if (degree < 0) throw InvalidArgument("negative degree for basis element '" + label + "'");
    if (index_.count(label))
        throw InvalidArgument("duplicate basis label '" + label + "'");
    int idx = static_cast<int>(basis_.size());
    basis_.push_back({label, degree});
    index_[label] = idx;
    if (degree >= static_cast<int>(by_degree_.size())) by_degree_.resize(degree + 1);
    by_degree_[degree].push_back(idx);
    max_degree_ = std::max(max_degree_, degree);
    differential_.emplace_back(degree - 1);
    augmentation_.push_back(0);
    return idx;
}

int BasedADC::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw InvalidArgument("unknown basis label '" + label + "'");
    return it->second;
}

const std::vector<int>& BasedADC::indices_of_degree(int degree) const {
    if (degree < 0 || degree >= static_cast<int>(by_degree_.size())) return empty_degree_;
    return by_degree_[degree];
}

std::vector<int> BasedADC::degree_ranks() const {
    std::vector<int> r;
    for (int q = 0; q <= max_degree_; ++q) r.push_back(rank(q));
    return r;
}

void BasedADC::set_differential(const std::string& label, ChainElement value) {
    int idx = index_of(label);
    int q = basis_[idx].degree;
    if (q == 0) throw InvalidArgument("differential set on degree-0 element '" + label + "'");
    if (!value.is_zero() && value.degree() != q - 1)
        throw InvalidArgument("differential of '" + label + "' has wrong degree");
    ChainElement v(q - 1);
    for (const auto& [i, c] : value.terms()) v.add_term(i, c);
    differential_[idx] = std::move(v);
}

void BasedADC::set_augmentation(const std::string& label, Coeff value) {
    int idx = index_of(label);
    if (basis_[idx].degree != 0)
        throw InvalidArgument("augmentation set on positive-degree element '" + label + "'");
    augmentation_[idx] = value;
}

void BasedADC::set_bipointing(const std::string& source, const std::string& sink) {
    int s = index_of(source), t = index_of(sink);
    if (basis_[s].degree != 0 || basis_[t].degree != 0)
        throw InvalidArgument("bipointing must consist of degree-0 elements");
    bipointing_ = {s, t};
}

const ChainElement& BasedADC::differential(int index) const {
    if (basis_[index].degree == 0) return zero_chain_;
    return differential_[index];
}

ChainElement BasedADC::boundary(const ChainElement& x) const {
    ChainElement r(x.degree() - 1);
    for (const auto& [i, c] : x.terms()) r += differential(i).scaled(c);
    return r;
}

ChainElement BasedADC::boundary_pm(const ChainElement& x, int sign) const {
    if (x.degree() < 1) throw InvalidArgument("boundary_pm on degree-0 chain");
    auto [plus, minus] = boundary(x).decompose();
    return sign >= 0 ? plus : minus;
}

Coeff BasedADC::epsilon(const ChainElement& x) const {
    if (x.degree() != 0) throw InvalidArgument("epsilon applied to positive-degree chain");
    Coeff r = 0;
    for (const auto& [i, c] : x.terms()) r = checked_add(r, checked_mul(c, augmentation_[i]));
    return r;
}

Coeff BasedADC::augmentation_of(int index) const { return augmentation_[index]; }

std::pair<int, int> BasedADC::bipointing() const {
    if (!bipointing_) throw InvalidArgument("complex '" + name_ + "' is not bipointed");
    return *bipointing_;
}

ValidationReport BasedADC::validate() const {
    ValidationReport report;
    for (int idx = 0; idx < size(); ++idx) {
        const auto& b = basis_[idx];
        const ChainElement& db = differential(idx);
        if (b.degree >= 1) {
            for (const auto& [i, c] : db.terms()) {
                if (i < 0 || i >= size()) {
                    report.add("dangling_index", b.label, "differential references invalid index");
                    continue;
                }
                if (basis_[i].degree != b.degree - 1)
                    report.add("degree_mismatch", b.label,
                               "differential term '" + basis_[i].label + "' has wrong degree");
            }
        }
        if (b.degree >= 2) {
            if (!boundary(db).is_zero())
                report.add("dd_nonzero", b.label, "dd != 0 at '" + b.label + "'");
        }
        if (b.degree == 1) {
            if (epsilon(db) != 0)
                report.add("eps_d_nonzero", b.label, "eps d != 0 at '" + b.label + "'");
        }
    }
    return report;
}

std::string format_chain(const BasedADC& a, const ChainElement& x) {
    if (x.is_zero()) return "0";
    std::string s;
    for (const auto& [i, c] : x.terms()) {
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        Coeff m = c < 0 ? checked_neg(c) : c;
        if (m != 1) s += std::to_string(m) + "·";
        s += a.basis(i).label;
    }
    return s;
}

}  // namespace adc
