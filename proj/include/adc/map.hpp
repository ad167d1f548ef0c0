#pragma once

#include <functional>
#include <string>
#include <vector>

#include "adc/complex.hpp"

namespace adc {

/// A degree-preserving graded integer map between two based ADCs, stored as
/// the image chain of every source basis element. Whether the chain,
/// augmentation, and positivity conditions hold is decided by validate().
class ADCMap {
public:
    ADCMap() = default;
    ADCMap(AdcPtr source, AdcPtr target);

    static ADCMap identity(AdcPtr a);
    /// Builds the map sending each source basis element through `f`, which
    /// must return a chain of the same degree in the target.
    static ADCMap from_basis_images(AdcPtr source, AdcPtr target,
                                    const std::function<ChainElement(const BasisElement&)>& f);
    /// Basis-to-basis map by label translation.
    static ADCMap from_label_map(AdcPtr source, AdcPtr target,
                                 const std::function<std::string(const std::string&)>& f);

    const AdcPtr& source() const { return source_; }
    const AdcPtr& target() const { return target_; }

    void set_image(int source_index, ChainElement value);
    const ChainElement& image(int source_index) const { return images_[source_index]; }

    ChainElement apply(const ChainElement& x) const;

    /// Chain condition, augmentation condition, positivity; witnesses carry
    /// the offending source basis element.
    ValidationReport validate() const;

    /// Degreewise matrix composition: (g.compose_after(f)) == g o f.
    ADCMap compose_after(const ADCMap& f) const;

    /// True iff every basis element maps to a single basis element with
    /// coefficient 1 and the assignment is a degree-preserving bijection.
    bool is_basis_bijection() const;
    /// Inverse of a basis bijection.
    ADCMap inverse_of_bijection() const;

    friend bool operator==(const ADCMap& a, const ADCMap& b) {
        return *a.source_ == *b.source_ && *a.target_ == *b.target_ && a.images_ == b.images_;
    }

private:
    AdcPtr source_;
    AdcPtr target_;
    std::vector<ChainElement> images_;
};

/// Two maps out of a common source, for pushout computations.
struct SpanOfMaps {
    ADCMap left;   // A -> B
    ADCMap right;  // A -> C
};

ADCMap compose_maps(const ADCMap& f, const ADCMap& g);  // g o f, diagrammatic order

}  // namespace adc
