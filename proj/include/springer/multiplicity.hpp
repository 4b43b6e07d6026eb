/*
 * multiplicity.hpp
 * Weight multiplicities by Freudenthal recursion, with the Kostant
 * alternating sum as an independent oracle and the Weyl dimension
 * formula as a sanity cross-check.
 *
 * WeightEngine works on an abstract semisimple system given by a Cartan
 * matrix; weights are integer vectors of fundamental-weight coefficients
 * y_i = <phi, alpha_i^vee>. m_{lambda mu} reads dominant coweights of G
 * as dominant weights of the Langlands dual group: that is WeightEngine
 * on the transposed Cartan matrix, fed coweight x-coordinates. The same
 * engine on the untransposed matrix supplies the weight systems of G's
 * own fundamental representations.
 */
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "springer/root_datum.hpp"

namespace springer {

class WeightEngine {
  public:
    // cartan[i][j] = <alpha_j, alpha_i^vee> for the system the engine models.
    explicit WeightEngine(const IMat& cartan);

    size_t rank() const { return r_; }
    size_t num_positive_roots() const { return pos_root_y_.size(); }

    bool is_dominant(const IVec& y) const;
    IVec reflect(size_t k, const IVec& y) const;
    IVec dominant_rep(IVec y) const;
    // hi - lo as a nonnegative integer combination of simple roots, or
    // nullopt when hi - lo is not in the positive root-lattice cone.
    std::optional<IVec> root_coeffs_of_diff(const IVec& hi, const IVec& lo) const;
    IVec lowest_weight(const IVec& lam) const;  // w0(lam)

    // All dominant weights of V(lam), keyed by y-coordinates, with their
    // multiplicities (Freudenthal recursion, memoized within the table).
    std::map<IVec, long> freudenthal_table(const IVec& lam) const;
    long multiplicity(const IVec& lam, const IVec& mu) const;

    // Independent oracle: sum_w (-1)^{l(w)} P(w(lam+rho) - (mu+rho)).
    long kostant_multiplicity(const IVec& lam, const IVec& mu) const;
    // Number of ways to write the given simple-root coefficient vector as
    // a sum of positive roots.
    mpz_class kostant_partition(const IVec& root_coeffs) const;

    mpz_class weyl_dimension(const IVec& lam) const;

    // Full weight system of V(lam): every weight with its multiplicity,
    // dominant orbits expanded.
    std::vector<std::pair<IVec, long>> weight_system(const IVec& lam) const;

    std::vector<IVec> orbit(const IVec& y) const;
    size_t orbit_size(const IVec& y) const { return orbit(y).size(); }

    size_t weyl_order() const;

  private:
    Rat form(const IVec& a, const IVec& b) const;
    void ensure_weyl() const;

    size_t r_ = 0;
    IMat cartan_;
    RatMat cinv_;            // inverse of the stored cartan matrix
    RatMat gram_;            // invariant form on fundamental weights
    std::vector<IVec> pos_root_y_;
    std::vector<IVec> pos_root_coeffs_;
    mutable bool weyl_built_ = false;
    mutable bool weyl_too_large_ = false;
    mutable std::vector<std::pair<IMat, int>> weyl_;  // (matrix on y, length)
    mutable std::map<IVec, mpz_class> partition_memo_;  // key: [root index | remaining]
};

// m_{lambda mu} for the Langlands dual group: dimension of the mu weight
// space of the irreducible representation of G^ with highest weight
// lambda. Holds one Freudenthal table; use this in scans.
class DualMultiplicities {
  public:
    DualMultiplicities(const RootDatum& datum, const CoweightQ& lam);
    long at(const CoweightQ& mu) const;
    const WeightEngine& engine() const { return engine_; }
    const std::map<IVec, long>& table() const { return table_; }

  private:
    const RootDatum& datum_;
    WeightEngine engine_;
    CoweightQ lam_;
    IVec lam_y_;
    std::map<IVec, long> table_;
};

// One-shot wrappers.
long m_lambda_mu(const RootDatum& datum, const CoweightQ& lam, const CoweightQ& mu);
long kostant_m_lambda_mu(const RootDatum& datum, const CoweightQ& lam, const CoweightQ& mu);
mpz_class weyl_dimension_dual(const RootDatum& datum, const CoweightQ& lam);

// Integer x-coordinates of an integral coweight (its dual-weight coordinates).
IVec dual_weight_coords(const RootDatum& datum, const CoweightQ& c);

// Weight system of the i-th fundamental representation of G itself
// (weights of the full torus, central components included).
std::vector<std::pair<WeightQ, long>> fundamental_weight_system(const RootDatum& datum,
                                                                size_t i);

}  // namespace springer
