#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "adc/chain.hpp"
#include "adc/common.hpp"

namespace adc {

struct BasisElement {
    std::string label;
    int degree = 0;

    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

struct Violation {
    std::string code;     // e.g. "dd_nonzero", "eps_d_nonzero", "dangling_label"
    std::string witness;  // basis label (or degree info) witnessing the problem
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    void add(std::string code, std::string witness, std::string message) {
        violations.push_back({std::move(code), std::move(witness), std::move(message)});
    }
};

/// A finitely generated, based augmented directed chain complex. The
/// positivity submonoid is implicitly the N-span of the basis in each degree.
/// Values are treated as immutable once built; all operations are pure.
class BasedADC {
public:
    BasedADC() = default;
    explicit BasedADC(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    int add_basis_element(const std::string& label, int degree);

    void set_differential(const std::string& label, ChainElement value);
    void set_augmentation(const std::string& label, Coeff value);
    void set_bipointing(const std::string& source, const std::string& sink);

    int size() const { return static_cast<int>(basis_.size()); }
    int max_degree() const { return max_degree_; }
    const BasisElement& basis(int index) const { return basis_[index]; }
    const std::vector<BasisElement>& all_basis() const { return basis_; }

    bool has_label(const std::string& label) const { return index_.count(label) != 0; }
    int index_of(const std::string& label) const;

    const std::vector<int>& indices_of_degree(int degree) const;
    int rank(int degree) const {
        return static_cast<int>(indices_of_degree(degree).size());
    }
    std::vector<int> degree_ranks() const;

    /// Differential of a single basis element (zero chain for degree 0).
    const ChainElement& differential(int index) const;
    /// Linear extension to chains.
    ChainElement boundary(const ChainElement& x) const;
    /// Positive (sign=+1) or negative (sign=-1) half of the boundary.
    ChainElement boundary_pm(const ChainElement& x, int sign) const;

    Coeff augmentation_of(int index) const;
    /// Linear extension of the augmentation to degree-0 chains.
    Coeff epsilon(const ChainElement& x) const;

    bool bipointed() const { return bipointing_.has_value(); }
    std::pair<int, int> bipointing() const;

    /// Structural well-formedness and the chain-complex axioms (dd = 0,
    /// eps d = 0). Structural malformation is reported distinctly.
    ValidationReport validate() const;

    /// Equality is structural; names are ignored.
    friend bool operator==(const BasedADC& a, const BasedADC& b) {
        return a.basis_ == b.basis_ && a.differential_ == b.differential_ &&
               a.augmentation_ == b.augmentation_ && a.bipointing_ == b.bipointing_;
    }

private:
    std::string name_;
    int max_degree_ = 0;
    std::vector<BasisElement> basis_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> by_degree_;
    std::vector<ChainElement> differential_;  // per basis index
    std::vector<Coeff> augmentation_;         // per basis index (degree 0 only)
    std::optional<std::pair<int, int>> bipointing_;

    static const std::vector<int> empty_degree_;
    static const ChainElement zero_chain_;
};

/// Human-readable rendering, e.g. "2·{0,1} - {1,2}" ("0" for the zero chain).
std::string format_chain(const BasedADC& a, const ChainElement& x);

using AdcPtr = std::shared_ptr<const BasedADC>;

inline AdcPtr share(BasedADC a) { return std::make_shared<const BasedADC>(std::move(a)); }

}  // namespace adc
