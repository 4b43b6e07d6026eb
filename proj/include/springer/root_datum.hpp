/*
 * root_datum.hpp
 * Split root data with simply connected derived group: Cartan matrix,
 * positive roots with coroot partners, fundamental (co)weights, rho,
 * the coweight lattice, and the Weyl group as exact integer matrices.
 *
 * Coordinate conventions used everywhere:
 *   - a coweight is stored as (x_1..x_r | z_1..z_k) where x_i = <alpha_i, c>
 *     (fundamental-coweight coefficients) and z are central coordinates;
 *   - a weight is stored as (y_1..y_r | u_1..u_k) where y_i = <phi, alpha_i^vee>
 *     (fundamental-weight coefficients) and u are coefficients on the
 *     central weight basis;
 *   - cartan()[i][j] = <alpha_j, alpha_i^vee>, so row i lists the pairings
 *     against the i-th simple coroot;
 *   - <phi, c> = y . A^{-1} x + u . z with A_{ij} = <alpha_i, alpha_j^vee>.
 *
 * Weyl matrices act on coweight x-coordinates and fix the central block.
 */
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "springer/linalg.hpp"

namespace springer {

inline constexpr size_t kWeylEnumCap = 2000;
inline constexpr size_t kMaxRank = 8;

struct CoweightQ {
    RatVec coords;  // (x | z)
    bool operator==(const CoweightQ& o) const { return coords == o.coords; }
    bool operator<(const CoweightQ& o) const { return coords < o.coords; }
};

struct WeightQ {
    RatVec coords;  // (y | u)
    bool operator==(const WeightQ& o) const { return coords == o.coords; }
};

CoweightQ operator+(const CoweightQ& a, const CoweightQ& b);
CoweightQ operator-(const CoweightQ& a, const CoweightQ& b);
CoweightQ operator*(const Rat& s, const CoweightQ& a);
WeightQ operator+(const WeightQ& a, const WeightQ& b);
WeightQ operator-(const WeightQ& a, const WeightQ& b);
WeightQ operator*(const Rat& s, const WeightQ& a);
bool is_zero(const RatVec& v);

struct WeylElement {
    IMat mat;               // action on coweight x-coordinates
    IMat wmat;              // contragredient action on weight y-coordinates
    std::vector<int> word;  // canonical reduced word, simple reflection indices

    size_t length() const { return word.size(); }
    bool is_identity() const { return word.empty(); }
    bool operator==(const WeylElement& o) const { return mat == o.mat; }
    bool operator<(const WeylElement& o) const { return mat < o.mat; }
    std::string word_string() const;  // "s1 s3 s2", "e" for the identity
};

struct PosRoot {
    WeightQ root;        // (y | 0)
    CoweightQ coroot;    // (x | 0)
    IVec root_coeffs;    // alpha on the simple roots
    IVec coroot_coeffs;  // alpha^vee on the simple coroots
    long height;         // sum of root_coeffs
};

// Positive roots of a finite-type Cartan matrix as (root_coeffs,
// coroot_coeffs) pairs on the simple (co)roots, sorted by height then
// lexicographically. Validates the Cartan axioms (NonCartan on failure).
std::vector<std::pair<IVec, IVec>> positive_root_closure(const IMat& cartan);

class RootDatum {
  public:
    // Parses the datum-specification grammar: named simple types ("A2",
    // "B3", "G2", "F4", ...), "GLn", "SLn" (= A_{n-1}), and '*'-products.
    static RootDatum from_spec(const std::string& spec);

    // Explicit form. cartan[i][j] = <alpha_j, alpha_i^vee>. The optional
    // basis lists the coweight-lattice basis vectors in internal (x|z)
    // coordinates; default is coroot lattice (+) Z^central_rank.
    static RootDatum from_cartan(const IMat& cartan, size_t central_rank,
                                 const std::optional<RatMat>& coweight_basis = std::nullopt,
                                 const std::string& name = "custom");

    static RootDatum gl(size_t n);
    static RootDatum product(const RootDatum& a, const RootDatum& b);

    // --- shape ---
    size_t semisimple_rank() const { return r_; }
    size_t central_rank() const { return z_; }
    size_t rank() const { return r_ + z_; }
    const IMat& cartan() const { return cartan_; }
    IMat dual_cartan() const;  // transpose: Cartan matrix of the dual root system
    const std::string& name() const { return name_; }
    const std::vector<size_t>& simple_factor_ranks() const { return factor_ranks_; }
    bool is_gl_like() const { return gl_n_ > 0; }

    // --- roots, weights ---
    const std::vector<PosRoot>& positive_roots() const { return positive_roots_; }
    // Index of the positive root with the given simple-root coefficients,
    // or nullopt when no such positive root exists.
    std::optional<size_t> find_positive_root(const IVec& root_coeffs) const;
    WeightQ simple_root(size_t i) const;
    CoweightQ simple_coroot(size_t i) const;
    const WeightQ& fundamental_weight(size_t i) const { return fund_weights_[i]; }
    CoweightQ fundamental_coweight(size_t i) const;
    const WeightQ& rho() const { return rho_; }

    // --- pairing, coordinates, predicates ---
    Rat pair(const WeightQ& w, const CoweightQ& c) const;
    Rat pair_root(size_t root_index, const CoweightQ& c) const;
    RatVec coroot_coords(const CoweightQ& c) const;   // A^{-1} x
    RatVec central_coords(const CoweightQ& c) const;  // the z block
    bool is_dominant(const CoweightQ& c) const;
    bool is_integral(const CoweightQ& c) const;
    bool is_integral_weight(const WeightQ& w) const;
    CoweightQ zero_coweight() const;
    WeightQ zero_weight() const;

    // --- lattice bases ---
    // Coweights enter and leave the library in coordinates on the integral
    // basis of the coweight lattice (for GL_n: the standard Z^n basis).
    CoweightQ coweight_from_lattice(const RatVec& u) const;
    RatVec lattice_coords(const CoweightQ& c) const;
    WeightQ weight_from_lattice(const RatVec& u) const;
    RatVec weight_lattice_coords(const WeightQ& w) const;

    // a - b in the coroot lattice (same det class in Lambda/Lambda_0)?
    bool det_class_equal(const CoweightQ& a, const CoweightQ& b) const;
    // Is there an integral coweight with the same central coordinates?
    bool central_integral(const CoweightQ& c) const;
    // Some integral coweight with the same central coordinates.
    CoweightQ central_base_point(const CoweightQ& c) const;

    // --- Weyl group ---
    WeylElement identity_element() const;
    WeylElement simple_reflection(size_t i) const;
    WeylElement multiply(const WeylElement& a, const WeylElement& b) const;
    WeylElement inverse_element(const WeylElement& w) const;
    WeylElement element_from_word(const std::vector<int>& word) const;
    CoweightQ apply(const WeylElement& w, const CoweightQ& c) const;
    WeightQ apply(const WeylElement& w, const WeightQ& f) const;
    size_t element_order(const WeylElement& w) const;
    size_t inversion_count(const WeylElement& w) const;

    // Unique dominant element in the W-orbit, plus a w with w(c) dominant.
    std::pair<CoweightQ, WeylElement> dominant_representative(const CoweightQ& c) const;
    CoweightQ apply_minus_w0(const CoweightQ& c) const;
    WeightQ apply_minus_w0(const WeightQ& w) const;

    // Full enumeration; throws WeylGroupTooLarge past kWeylEnumCap.
    const std::vector<WeylElement>& weyl_group() const;
    size_t weyl_order() const;
    const WeylElement& longest_element() const;

  private:
    RootDatum() = default;
    void build_roots_and_weights();
    void build_lattice(const std::optional<RatMat>& coweight_basis);
    void enumerate_weyl();
    void validate();
    std::vector<int> reduced_word_from_matrix(const IMat& m) const;
    bool coroot_side_negative(const RatVec& x) const;

    size_t r_ = 0, z_ = 0;
    size_t gl_n_ = 0;  // > 0 when this datum is GL_n with the standard lattice
    IMat cartan_;
    RatMat a_inv_;  // inverse of A_{ij} = <alpha_i, alpha_j^vee>
    std::string name_;
    std::vector<size_t> factor_ranks_;
    std::vector<PosRoot> positive_roots_;
    std::vector<WeightQ> fund_weights_;
    WeightQ rho_;
    RatMat bco_, bco_inv_;  // coweight lattice basis (columns), inverse
    RatMat bwt_, bwt_inv_;  // weight lattice basis (columns), inverse
    RatLattice central_image_;  // z-coordinates of the coweight lattice

    bool weyl_too_large_ = false;
    std::vector<WeylElement> weyl_;
    size_t w0_index_ = 0;
};

}  // namespace springer
