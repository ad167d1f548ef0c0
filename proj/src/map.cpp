#include "adc/map.hpp"

namespace adc {

ADCMap::ADCMap(AdcPtr source, AdcPtr target)
    : source_(std::move(source)), target_(std::move(target)) {
    images_.resize(source_->size());
    for (int i = 0; i < source_->size(); ++i)
        images_[i] = ChainElement(source_->basis(i).degree);
}

ADCMap ADCMap::identity(AdcPtr a) {
    ADCMap f(a, a);
    for (int i = 0; i < a->size(); ++i)
        f.images_[i] = ChainElement::basis(a->basis(i).degree, i);
    return f;
}

ADCMap ADCMap::from_basis_images(AdcPtr source, AdcPtr target,
                                 const std::function<ChainElement(const BasisElement&)>& f) {
    ADCMap m(std::move(source), std::move(target));
    for (int i = 0; i < m.source_->size(); ++i) {
        ChainElement y = f(m.source_->basis(i));
        if (!y.is_zero() && y.degree() != m.source_->basis(i).degree)
            throw InvalidArgument("image of '" + m.source_->basis(i).label + "' changes degree");
        m.images_[i] = std::move(y);
    }
    return m;
}

ADCMap ADCMap::from_label_map(AdcPtr source, AdcPtr target,
                              const std::function<std::string(const std::string&)>& f) {
    AdcPtr tgt = target;
    return from_basis_images(std::move(source), std::move(target),
                             [&f, &tgt](const BasisElement& b) {
                                 return ChainElement::basis(b.degree, tgt->index_of(f(b.label)));
                             });
}

void ADCMap::set_image(int source_index, ChainElement value) {
    int q = source_->basis(source_index).degree;
    if (!value.is_zero() && value.degree() != q)
        throw InvalidArgument("image degree mismatch at '" + source_->basis(source_index).label + "'");
    ChainElement v(q);
    for (const auto& [i, c] : value.terms()) v.add_term(i, c);
    images_[source_index] = std::move(v);
}

ChainElement ADCMap::apply(const ChainElement& x) const {
    ChainElement r(x.degree());
    for (const auto& [i, c] : x.terms()) r += images_[i].scaled(c);
    return r;
}

ValidationReport ADCMap::validate() const {
    ValidationReport report;
    for (int i = 0; i < source_->size(); ++i) {
        const auto& b = source_->basis(i);
        if (!images_[i].is_nonnegative())
            report.add("positivity", b.label, "positivity violated at '" + b.label + "'");
        if (b.degree == 0) {
            Coeff lhs = target_->epsilon(images_[i]);
            Coeff rhs = source_->augmentation_of(i);
            if (lhs != rhs)
                report.add("augmentation", b.label, "augmentation not preserved at '" + b.label + "'");
        } else {
            ChainElement lhs = apply(source_->differential(i));
            ChainElement rhs = target_->boundary(images_[i]);
            if (!(lhs == rhs))
                report.add("chain", b.label, "chain condition fails at '" + b.label + "'");
        }
    }
    return report;
}

ADCMap ADCMap::compose_after(const ADCMap& f) const {
    if (!(*f.target_ == *source_))
        throw InvalidArgument("composition endpoint mismatch");
    ADCMap r(f.source_, target_);
    for (int i = 0; i < f.source_->size(); ++i) r.images_[i] = apply(f.images_[i]);
    return r;
}

ADCMap compose_maps(const ADCMap& f, const ADCMap& g) { return g.compose_after(f); }

bool ADCMap::is_basis_bijection() const {
    if (source_->size() != target_->size()) return false;
    std::vector<bool> hit(target_->size(), false);
    for (int i = 0; i < source_->size(); ++i) {
        const auto& t = images_[i].terms();
        if (t.size() != 1 || t[0].second != 1) return false;
        int j = t[0].first;
        if (target_->basis(j).degree != source_->basis(i).degree) return false;
        if (hit[j]) return false;
        hit[j] = true;
    }
    return true;
}

ADCMap ADCMap::inverse_of_bijection() const {
    if (!is_basis_bijection()) throw InvalidArgument("map is not a basis bijection");
    ADCMap r(target_, source_);
    for (int i = 0; i < source_->size(); ++i) {
        int j = images_[i].terms()[0].first;
        r.images_[j] = ChainElement::basis(source_->basis(i).degree, i);
    }
    return r;
}

}  // namespace adc
