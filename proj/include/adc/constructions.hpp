#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adc/intlinalg.hpp"
#include "adc/map.hpp"

namespace adc {

/// Which degrees get their differential negated by a duality involution.
class DualitySelector {
public:
    static DualitySelector odd() { return DualitySelector(Kind::Odd); }
    static DualitySelector even() { return DualitySelector(Kind::Even); }
    static DualitySelector total() { return DualitySelector(Kind::Total); }
    static DualitySelector from_mask(std::vector<bool> mask) {
        DualitySelector s(Kind::Mask);
        s.mask_ = std::move(mask);
        return s;
    }

    /// True iff degree n >= 1 has its differential negated.
    bool flips(int n) const {
        switch (kind_) {
            case Kind::Odd: return n % 2 == 1;
            case Kind::Even: return n % 2 == 0;
            case Kind::Total: return true;
            case Kind::Mask:
                return n >= 1 && n <= static_cast<int>(mask_.size()) && mask_[n - 1];
        }
        return false;
    }

private:
    enum class Kind { Odd, Even, Total, Mask };
    explicit DualitySelector(Kind k) : kind_(k) {}
    Kind kind_;
    std::vector<bool> mask_;  // mask_[n-1] flips degree n
};

/// Sign convention for the tensor differential. Reversed is the project-wide
/// default; Standard exists for sensitivity (mutation) testing.
enum class KoszulRule { Reversed, Standard };

struct TensorOptions {
    std::string separator = "⊗";  // label joiner, (x) sign
    KoszulRule rule = KoszulRule::Reversed;
};

BasedADC tensor(const BasedADC& a, const BasedADC& b, const TensorOptions& opt = {});
BasedADC suspend(const BasedADC& a);
BasedADC dual(const BasedADC& a, const DualitySelector& tau);
BasedADC wedge(const BasedADC& a, const BasedADC& b);
BasedADC direct_sum(const BasedADC& a, const BasedADC& b);

struct PushoutResult {
    bool is_based = false;
    std::vector<int> free_ranks;                // per degree
    std::vector<std::vector<Coeff>> torsion;    // per degree, invariant factors > 1
    AdcPtr complex;                             // set iff is_based
    ADCMap inl, inr;                            // cocone maps B -> Q, C -> Q (iff is_based)
    bool has_torsion() const {
        for (const auto& t : torsion)
            if (!t.empty()) return true;
        return false;
    }
};

/// Degreewise pushout of the span B <- A -> C, computed by integer
/// normal-form reduction of the cokernel of (f, -g).
PushoutResult degreewise_pushout(const SpanOfMaps& span);

enum class SearchStatus { Found, None, Inconclusive };

struct IsoResult {
    SearchStatus status = SearchStatus::None;
    std::optional<ADCMap> iso;
    bool found() const { return status == SearchStatus::Found; }
};

inline constexpr long kDefaultSearchBudget = 1'000'000;

/// Backtracking search for a degree-preserving basis bijection inducing an
/// ADC isomorphism; exact and complete within the node budget.
IsoResult iso_search(AdcPtr a, AdcPtr b, long budget = kDefaultSearchBudget);

struct AllIsosResult {
    SearchStatus status = SearchStatus::Found;  // Inconclusive if budget hit
    std::vector<ADCMap> isos;
};

/// All basis-bijection isomorphisms A -> B (used for automorphism groups).
AllIsosResult all_basis_isos(AdcPtr a, AdcPtr b, long budget = kDefaultSearchBudget);

/// Relabels every basis element through `f`; differentials, augmentation,
/// and bipointing carry over unchanged.
BasedADC relabel(const BasedADC& a, const std::function<std::string(const std::string&)>& f,
                 const std::string& name);

}  // namespace adc
