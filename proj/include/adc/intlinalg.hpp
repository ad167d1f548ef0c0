#pragma once

#include <optional>
#include <vector>

#include "adc/common.hpp"

namespace adc {

/// Dense exact-integer matrix. Desk-scale sizes only.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, 0) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Coeff& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    Coeff at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    IntMatrix multiply(const IntMatrix& other) const;
    std::vector<Coeff> apply(const std::vector<Coeff>& v) const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Coeff> data_;
};

/// M = U * D * V with U, V unimodular and D diagonal with a divisibility
/// chain. Inverses of U and V come along for free from the reduction.
struct SmithNormalForm {
    IntMatrix u, d, v;
    IntMatrix u_inv, v_inv;
};

/// Exact SNF; pivoting is done in arbitrary precision, the result is
/// converted back with overflow checks.
SmithNormalForm smith_normal_form(const IntMatrix& m);

struct CokernelPresentation {
    int free_rank = 0;
    std::vector<Coeff> torsion;  // invariant factors > 1
    /// Projection of the ambient standard basis onto the free part
    /// (free_rank x rows(M)); only meaningful when torsion is empty.
    IntMatrix projection;
    bool is_free() const { return torsion.empty(); }
};

/// Cokernel of M viewed as a map into Z^rows.
CokernelPresentation cokernel_presentation(const IntMatrix& m);

/// One integer solution of M x = v, if any.
std::optional<std::vector<Coeff>> solve_integer(const IntMatrix& m, const std::vector<Coeff>& v);

struct NonnegSolutions {
    std::vector<std::vector<Coeff>> solutions;  // deterministic (lexicographic) order
    bool cap_hit = false;  // a branch was cut only by the coefficient cap
};

/// All x in [0, cap]^cols with M x = v.
NonnegSolutions solve_nonneg(const IntMatrix& m, const std::vector<Coeff>& v, Coeff cap);

}  // namespace adc
