#include "adc/intlinalg.hpp"

#include <algorithm>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

namespace adc {

namespace {

using Big = boost::multiprecision::cpp_int;

struct BigMat {
    int r = 0, c = 0;
    std::vector<Big> a;
    BigMat() = default;
    BigMat(int rows, int cols) : r(rows), c(cols), a(size_t(rows) * cols) {}
    static BigMat identity(int n) {
        BigMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    Big& at(int i, int j) { return a[size_t(i) * c + j]; }
    const Big& at(int i, int j) const { return a[size_t(i) * c + j]; }
};

IntMatrix to_int_matrix(const BigMat& m) {
    IntMatrix r(m.r, m.c);
    const Big lo = std::numeric_limits<Coeff>::min();
    const Big hi = std::numeric_limits<Coeff>::max();
    for (int i = 0; i < m.r; ++i)
        for (int j = 0; j < m.c; ++j) {
            const Big& x = m.at(i, j);
            if (x < lo || x > hi) throw OverflowError("SNF result exceeds 64-bit range");
            r.at(i, j) = static_cast<Coeff>(x);
        }
    return r;
}

// Row/column operations on A with the bookkeeping for U = R^-1, V = C^-1
// where D = R A C.
struct SnfState {
    BigMat a, u, u_inv, v, v_inv;

    void row_swap(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < a.c; ++k) std::swap(a.at(i, k), a.at(j, k));
        for (int k = 0; k < u.r; ++k) std::swap(u.at(k, i), u.at(k, j));
        for (int k = 0; k < u_inv.c; ++k) std::swap(u_inv.at(i, k), u_inv.at(j, k));
    }
    void row_add(int i, int j, const Big& q) {  // row_i += q * row_j
        for (int k = 0; k < a.c; ++k) a.at(i, k) += q * a.at(j, k);
        for (int k = 0; k < u.r; ++k) u.at(k, j) -= q * u.at(k, i);
        for (int k = 0; k < u_inv.c; ++k) u_inv.at(i, k) += q * u_inv.at(j, k);
    }
    void row_negate(int i) {
        for (int k = 0; k < a.c; ++k) a.at(i, k) = -a.at(i, k);
        for (int k = 0; k < u.r; ++k) u.at(k, i) = -u.at(k, i);
        for (int k = 0; k < u_inv.c; ++k) u_inv.at(i, k) = -u_inv.at(i, k);
    }
    void col_swap(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < a.r; ++k) std::swap(a.at(k, i), a.at(k, j));
        for (int k = 0; k < v.c; ++k) std::swap(v.at(i, k), v.at(j, k));
        for (int k = 0; k < v_inv.r; ++k) std::swap(v_inv.at(k, i), v_inv.at(k, j));
    }
    void col_add(int j, int i, const Big& q) {  // col_j += q * col_i
        for (int k = 0; k < a.r; ++k) a.at(k, j) += q * a.at(k, i);
        for (int k = 0; k < v.c; ++k) v.at(i, k) -= q * v.at(j, k);
        for (int k = 0; k < v_inv.r; ++k) v_inv.at(k, j) += q * v_inv.at(k, i);
    }
    void col_negate(int j) {
        for (int k = 0; k < a.r; ++k) a.at(k, j) = -a.at(k, j);
        for (int k = 0; k < v.c; ++k) v.at(j, k) = -v.at(j, k);
        for (int k = 0; k < v_inv.r; ++k) v_inv.at(k, j) = -v_inv.at(k, j);
    }
};

}  // namespace

IntMatrix IntMatrix::multiply(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw InvalidArgument("matrix shape mismatch in multiply");
    IntMatrix r(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            Coeff aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < other.cols_; ++j)
                r.at(i, j) = checked_add(r.at(i, j), checked_mul(aik, other.at(k, j)));
        }
    return r;
}

std::vector<Coeff> IntMatrix::apply(const std::vector<Coeff>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw InvalidArgument("vector length mismatch");
    std::vector<Coeff> r(rows_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[i] = checked_add(r[i], checked_mul(at(i, j), v[j]));
    return r;
}

SmithNormalForm smith_normal_form(const IntMatrix& m) {
    SnfState s;
    s.a = BigMat(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) s.a.at(i, j) = m.at(i, j);
    s.u = BigMat::identity(m.rows());
    s.u_inv = BigMat::identity(m.rows());
    s.v = BigMat::identity(m.cols());
    s.v_inv = BigMat::identity(m.cols());

    const int n = std::min(m.rows(), m.cols());
    for (int t = 0; t < n; ++t) {
        // Locate a nonzero pivot of minimal absolute value.
        int pi = -1, pj = -1;
        for (int i = t; i < m.rows(); ++i)
            for (int j = t; j < m.cols(); ++j) {
                if (s.a.at(i, j) == 0) continue;
                if (pi < 0 || abs(s.a.at(i, j)) < abs(s.a.at(pi, pj))) { pi = i; pj = j; }
            }
        if (pi < 0) break;
        s.row_swap(t, pi);
        s.col_swap(t, pj);

        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < m.rows(); ++i) {
                if (s.a.at(i, t) == 0) continue;
                Big q = s.a.at(i, t) / s.a.at(t, t);
                s.row_add(i, t, -q);
                if (s.a.at(i, t) != 0) { s.row_swap(t, i); clean = false; }
            }
            for (int j = t + 1; j < m.cols(); ++j) {
                if (s.a.at(t, j) == 0) continue;
                Big q = s.a.at(t, j) / s.a.at(t, t);
                s.col_add(j, t, -q);
                if (s.a.at(t, j) != 0) { s.col_swap(t, j); clean = false; }
            }
            if (!clean) continue;
            // Divisibility fix-up for the trailing block.
            bool fixed = true;
            for (int i = t + 1; i < m.rows() && fixed; ++i)
                for (int j = t + 1; j < m.cols() && fixed; ++j)
                    if (s.a.at(i, j) % s.a.at(t, t) != 0) {
                        s.row_add(t, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (s.a.at(t, t) < 0) s.row_negate(t);
    }

    SmithNormalForm result;
    result.u = to_int_matrix(s.u);
    result.d = to_int_matrix(s.a);
    result.v = to_int_matrix(s.v);
    result.u_inv = to_int_matrix(s.u_inv);
    result.v_inv = to_int_matrix(s.v_inv);
    return result;
}

CokernelPresentation cokernel_presentation(const IntMatrix& m) {
    SmithNormalForm snf = smith_normal_form(m);
    CokernelPresentation p;
    const int n = std::min(m.rows(), m.cols());
    std::vector<int> free_rows;
    for (int i = 0; i < m.rows(); ++i) {
        Coeff d = i < n ? snf.d.at(i, i) : 0;
        if (d == 0)
            free_rows.push_back(i);
        else if (d != 1)
            p.torsion.push_back(d);
    }
    p.free_rank = static_cast<int>(free_rows.size());
    p.projection = IntMatrix(p.free_rank, m.rows());
    for (int k = 0; k < p.free_rank; ++k)
        for (int j = 0; j < m.rows(); ++j) p.projection.at(k, j) = snf.u_inv.at(free_rows[k], j);
    return p;
}

std::optional<std::vector<Coeff>> solve_integer(const IntMatrix& m, const std::vector<Coeff>& v) {
    if (static_cast<int>(v.size()) != m.rows()) throw InvalidArgument("rhs length mismatch");
    SmithNormalForm snf = smith_normal_form(m);
    std::vector<Coeff> w = snf.u_inv.apply(v);
    std::vector<Coeff> y(m.cols(), 0);
    const int n = std::min(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        Coeff d = i < n ? snf.d.at(i, i) : 0;
        if (d == 0) {
            if (w[i] != 0) return std::nullopt;
        } else {
            if (w[i] % d != 0) return std::nullopt;
            y[i] = w[i] / d;
        }
    }
    return snf.v_inv.apply(y);
}

namespace {

struct NonnegSolver {
    const IntMatrix& m;
    Coeff cap;
    std::vector<Coeff> residual;
    std::vector<Coeff> x;
    NonnegSolutions out;
    // Suffix achievable ranges per row for columns >= j, entries in [0, cap].
    std::vector<std::vector<Coeff>> lo, hi;
    // Whether the suffix has a negative / positive entry per row (for
    // unbounded feasibility used by the cap flag).
    std::vector<std::vector<bool>> has_neg, has_pos;

    explicit NonnegSolver(const IntMatrix& mat, const std::vector<Coeff>& v, Coeff c)
        : m(mat), cap(c), residual(v) {
        int rows = m.rows(), cols = m.cols();
        lo.assign(rows, std::vector<Coeff>(cols + 1, 0));
        hi.assign(rows, std::vector<Coeff>(cols + 1, 0));
        has_neg.assign(rows, std::vector<bool>(cols + 1, false));
        has_pos.assign(rows, std::vector<bool>(cols + 1, false));
        for (int i = 0; i < rows; ++i)
            for (int j = cols - 1; j >= 0; --j) {
                Coeff contrib = checked_mul(m.at(i, j), cap);
                lo[i][j] = checked_add(lo[i][j + 1], std::min<Coeff>(0, contrib));
                hi[i][j] = checked_add(hi[i][j + 1], std::max<Coeff>(0, contrib));
                has_neg[i][j] = has_neg[i][j + 1] || m.at(i, j) < 0;
                has_pos[i][j] = has_pos[i][j + 1] || m.at(i, j) > 0;
            }
        x.assign(cols, 0);
    }

    bool feasible(int j) const {
        for (int i = 0; i < m.rows(); ++i)
            if (residual[i] < lo[i][j] || residual[i] > hi[i][j]) return false;
        return true;
    }

    // Could some value t > cap in column j lead to a solution if the
    // remaining columns were unbounded?
    bool value_beyond_cap_feasible(int j) const {
        // Constraints per row i: residual_i - t * m(i,j) must lie in the
        // unbounded suffix range for columns > j.
        // Track the integer interval of admissible t > cap.
        Coeff tmin = checked_add(cap, 1);
        bool tmax_bounded = false;
        Coeff tmax = 0;
        for (int i = 0; i < m.rows(); ++i) {
            Coeff a = m.at(i, j);
            Coeff r = residual[i];
            bool lo_unbounded = has_neg[i][j + 1];
            bool hi_unbounded = has_pos[i][j + 1];
            // Need: lo <= r - t*a <= hi with lo/hi possibly unbounded,
            // bounded side equals 0.
            if (a == 0) {
                if (!lo_unbounded && r < 0) return false;
                if (!hi_unbounded && r > 0) return false;
                continue;
            }
            // r - t*a >= 0 needed when lo bounded; r - t*a <= 0 when hi bounded.
            if (!lo_unbounded) {
                // t*a <= r
                if (a > 0) {
                    Coeff bound = r >= 0 ? r / a : (r - (a - 1)) / a;  // floor(r/a)
                    if (!tmax_bounded || bound < tmax) { tmax = bound; tmax_bounded = true; }
                } else {
                    Coeff na = -a;
                    Coeff bound = (-r) >= 0 ? ((-r) + na - 1) / na : -((r) / na);  // ceil(-r/na)
                    tmin = std::max(tmin, bound);
                }
            }
            if (!hi_unbounded) {
                // t*a >= r
                if (a > 0) {
                    Coeff bound = r >= 0 ? (r + a - 1) / a : r / a;  // ceil(r/a)
                    tmin = std::max(tmin, bound);
                } else {
                    Coeff na = -a;
                    Coeff bound = r <= 0 ? (-r) / na : -((r + na - 1) / na);  // floor(-r/na)
                    if (!tmax_bounded || bound < tmax) { tmax = bound; tmax_bounded = true; }
                }
            }
        }
        return !tmax_bounded || tmin <= tmax;
    }

    void search(int j) {
        if (j == m.cols()) {
            for (Coeff r : residual)
                if (r != 0) return;
            out.solutions.push_back(x);
            return;
        }
        for (Coeff t = 0; t <= cap; ++t) {
            if (t > 0)
                for (int i = 0; i < m.rows(); ++i)
                    residual[i] = checked_sub(residual[i], m.at(i, j));
            x[j] = t;
            if (feasible(j + 1)) search(j + 1);
        }
        for (int i = 0; i < m.rows(); ++i)
            residual[i] = checked_add(residual[i], checked_mul(m.at(i, j), cap));
        x[j] = 0;
        if (!out.cap_hit && value_beyond_cap_feasible(j)) out.cap_hit = true;
    }
};

}  // namespace

NonnegSolutions solve_nonneg(const IntMatrix& m, const std::vector<Coeff>& v, Coeff cap) {
    if (static_cast<int>(v.size()) != m.rows()) throw InvalidArgument("rhs length mismatch");
    if (cap < 0) throw InvalidArgument("negative cap");
    NonnegSolver solver(m, v, cap);
    if (solver.feasible(0)) solver.search(0);
    else {
        // The box may be infeasible while larger values would work.
        bool beyond = false;
        for (int i = 0; i < m.rows() && !beyond; ++i)
            beyond = (v[i] > solver.hi[i][0] && solver.has_pos[i][0]) ||
                     (v[i] < solver.lo[i][0] && solver.has_neg[i][0]);
        solver.out.cap_hit = beyond;
    }
    return solver.out;
}

}  // namespace adc
