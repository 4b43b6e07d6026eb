/*
 * linalg.hpp
 * Dense exact linear algebra on the tiny matrices this library needs
 * (rank <= 8 everywhere): rational inverse/solve/rank, integer matrix
 * products, and column-echelon lattice routines over Z used for the
 * coweight-lattice bookkeeping.
 */
#pragma once

#include <vector>

#include "springer/rational.hpp"

namespace springer {

using IVec = std::vector<long>;
using IMat = std::vector<IVec>;
using RatMat = std::vector<RatVec>;
using ZVec = std::vector<mpz_class>;
using ZMat = std::vector<ZVec>;

RatMat rat_identity(size_t n);
RatMat rat_mat_mul(const RatMat& a, const RatMat& b);
RatVec rat_mat_vec(const RatMat& a, const RatVec& v);
// Gauss-Jordan; throws Internal if singular.
RatMat rat_mat_inverse(const RatMat& a);
size_t rat_mat_rank(RatMat a);
Rat rat_mat_trace(const RatMat& a);

IMat int_identity(size_t n);
IMat int_mat_mul(const IMat& a, const IMat& b);
IVec int_mat_vec(const IMat& a, const IVec& v);
RatVec int_mat_ratvec(const IMat& a, const RatVec& v);
RatMat int_to_rat(const IMat& a);

// Basis of { u in Z^n : M u = 0 } for an integer matrix M (rows x n),
// complete in the sense that every integer solution is a Z-combination.
ZMat integer_kernel_basis(const ZMat& m);

// A finitely generated subgroup of Q^m, given by generator columns.
// Supports exact membership tests and expressing members as integer
// combinations of the original generators.
class RatLattice {
  public:
    RatLattice() = default;
    // gens: m x n rational matrix, generators as columns.
    explicit RatLattice(const RatMat& gens);

    size_t ambient_dim() const { return m_; }
    size_t rank() const { return pivot_cols_.size(); }

    // If v lies in the lattice, returns true and (optionally) integer
    // coefficients c with gens * c = v.
    bool contains(const RatVec& v, ZVec* coeffs = nullptr) const;

  private:
    size_t m_ = 0, n_ = 0;
    mpz_class denom_{1};
    ZMat h_;                        // column echelon of denom_ * gens
    ZMat u_;                        // unimodular transform, gens*denom_*u_ = h_
    std::vector<size_t> pivot_cols_;
    std::vector<size_t> pivot_rows_;
};

}  // namespace springer
