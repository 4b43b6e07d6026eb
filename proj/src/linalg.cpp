#include "springer/linalg.hpp"

#include <utility>

namespace springer {

RatMat rat_identity(size_t n) {
    RatMat m(n, RatVec(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RatMat rat_mat_mul(const RatMat& a, const RatMat& b) {
    size_t n = a.size(), k = b.size(), p = k ? b[0].size() : 0;
    RatMat out(n, RatVec(p, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (size_t l = 0; l < p; ++l) out[i][l] += a[i][j] * b[j][l];
        }
    return out;
}

RatVec rat_mat_vec(const RatMat& a, const RatVec& v) {
    RatVec out(a.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

RatMat rat_mat_inverse(const RatMat& a) {
    size_t n = a.size();
    RatMat m = a;
    RatMat inv = rat_identity(n);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) fail(ErrorCode::Internal, "singular matrix in rat_mat_inverse");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = m[col][col];
        for (size_t j = 0; j < n; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

size_t rat_mat_rank(RatMat a) {
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        for (size_t i = rank + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            Rat f = a[i][col] / a[rank][col];
            for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

Rat rat_mat_trace(const RatMat& a) {
    Rat t(0);
    for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

IMat int_identity(size_t n) {
    IMat m(n, IVec(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat int_mat_mul(const IMat& a, const IMat& b) {
    size_t n = a.size(), k = b.size(), p = k ? b[0].size() : 0;
    IMat out(n, IVec(p, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (!a[i][j]) continue;
            for (size_t l = 0; l < p; ++l) out[i][l] += a[i][j] * b[j][l];
        }
    return out;
}

IVec int_mat_vec(const IMat& a, const IVec& v) {
    IVec out(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

RatVec int_mat_ratvec(const IMat& a, const RatVec& v) {
    RatVec out(a.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (a[i][j]) out[i] += Rat(a[i][j]) * v[j];
    return out;
}

RatMat int_to_rat(const IMat& a) {
    RatMat out(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        out[i].reserve(a[i].size());
        for (long x : a[i]) out[i].emplace_back(x);
    }
    return out;
}

namespace {

// Column-echelon reduction over Z by unimodular column operations.
// On return h is in echelon form, u is the transform (input * u = h),
// and pivots record (row, col) of each pivot in column order.
void column_echelon(ZMat& h, ZMat& u, std::vector<size_t>& pivot_rows,
                    std::vector<size_t>& pivot_cols) {
    size_t rows = h.size(), cols = rows ? h[0].size() : 0;
    u.assign(cols, ZVec(cols, 0));
    for (size_t i = 0; i < cols; ++i) u[i][i] = 1;
    auto col_swap = [&](size_t a, size_t b) {
        if (a == b) return;
        for (size_t i = 0; i < rows; ++i) std::swap(h[i][a], h[i][b]);
        for (size_t i = 0; i < cols; ++i) std::swap(u[i][a], u[i][b]);
    };
    auto col_axpy = [&](size_t dst, const mpz_class& q, size_t src) {
        // col_dst -= q * col_src
        for (size_t i = 0; i < rows; ++i) h[i][dst] -= q * h[i][src];
        for (size_t i = 0; i < cols; ++i) u[i][dst] -= q * u[i][src];
    };
    size_t lead = 0;
    for (size_t r = 0; r < rows && lead < cols; ++r) {
        size_t j = lead;
        while (j < cols && h[r][j] == 0) ++j;
        if (j == cols) continue;
        col_swap(lead, j);
        for (size_t k = lead + 1; k < cols; ++k) {
            while (h[r][k] != 0) {
                mpz_class q = h[r][lead] / h[r][k];  // truncated toward zero
                col_axpy(lead, q, k);
                col_swap(lead, k);
            }
        }
        if (h[r][lead] < 0) {
            for (size_t i = 0; i < rows; ++i) h[i][lead] = -h[i][lead];
            for (size_t i = 0; i < cols; ++i) u[i][lead] = -u[i][lead];
        }
        pivot_rows.push_back(r);
        pivot_cols.push_back(lead);
        ++lead;
    }
}

}  // namespace

ZMat integer_kernel_basis(const ZMat& m) {
    ZMat h = m;
    ZMat u;
    std::vector<size_t> pr, pc;
    size_t cols = m.empty() ? 0 : m[0].size();
    if (m.empty()) {
        // no constraints: kernel is everything
        ZMat basis;
        for (size_t i = 0; i < cols; ++i) {
            ZVec e(cols, 0);
            e[i] = 1;
            basis.push_back(e);
        }
        return basis;
    }
    column_echelon(h, u, pr, pc);
    size_t lead = pc.size();
    ZMat basis;
    for (size_t j = lead; j < cols; ++j) {
        ZVec v(cols);
        for (size_t i = 0; i < cols; ++i) v[i] = u[i][j];
        basis.push_back(v);
    }
    return basis;
}

RatLattice::RatLattice(const RatMat& gens) {
    m_ = gens.size();
    n_ = m_ ? gens[0].size() : 0;
    denom_ = 1;
    for (const auto& row : gens)
        for (const auto& x : row) {
            mpz_class d = x.get_den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), denom_.get_mpz_t(), d.get_mpz_t());
            denom_ = denom_ / g * d;
        }
    h_.assign(m_, ZVec(n_, 0));
    for (size_t i = 0; i < m_; ++i)
        for (size_t j = 0; j < n_; ++j) {
            Rat scaled = gens[i][j] * Rat(denom_);
            h_[i][j] = scaled.get_num();
        }
    column_echelon(h_, u_, pivot_rows_, pivot_cols_);
}

bool RatLattice::contains(const RatVec& v, ZVec* coeffs) const {
    if (v.size() != m_) fail(ErrorCode::Internal, "RatLattice dimension mismatch");
    // Solve h * y = denom_ * v by forward substitution on pivot rows.
    RatVec rem(m_);
    for (size_t i = 0; i < m_; ++i) rem[i] = v[i] * Rat(denom_);
    ZVec y(n_, 0);
    for (size_t p = 0; p < pivot_cols_.size(); ++p) {
        size_t r = pivot_rows_[p], c = pivot_cols_[p];
        Rat q = rem[r] / Rat(h_[r][c]);
        if (!is_integer(q)) return false;
        y[c] = q.get_num();
        for (size_t i = 0; i < m_; ++i) rem[i] -= q * Rat(h_[i][c]);
    }
    for (size_t i = 0; i < m_; ++i)
        if (rem[i] != 0) return false;
    if (coeffs) {
        coeffs->assign(n_, 0);
        for (size_t i = 0; i < n_; ++i) {
            mpz_class acc = 0;
            for (size_t j = 0; j < n_; ++j) acc += u_[i][j] * y[j];
            (*coeffs)[i] = acc;
        }
    }
    return true;
}

}  // namespace springer
