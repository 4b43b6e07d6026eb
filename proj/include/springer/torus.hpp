/*
 * torus.hpp
 * Regular semisimple elements gamma and their numerical invariants:
 * Newton point, valuation profile v_alpha = val(alpha(gamma) - 1),
 * discriminant valuation d(gamma), r(gamma), and the split-rank defect
 * c(gamma).
 *
 * Concrete elements are gamma = w^mu * t0 with t0 in T(O) given by one
 * valuation-0 unit series per coweight-lattice basis coordinate. Ramified
 * elements are abstract descriptors (e, Weyl twist, Newton point,
 * valuation profile); their consistency is validated, not derived.
 */
#pragma once

#include <map>
#include <variant>
#include <vector>

#include "springer/laurent.hpp"
#include "springer/root_datum.hpp"

namespace springer {

struct ValuationProfile {
    // One value per positive root (datum root order); roots pairing
    // positively with the Newton point carry 0.
    RatVec values;
    Rat sum_over_zero_pairing(const RootDatum& d, const CoweightQ& nu) const;
    Rat sum_all() const;
};

class TorusElement {
  public:
    struct Concrete {
        CoweightQ mu;
        std::vector<LaurentSeries> units;  // per coweight-lattice basis coordinate
    };
    struct Abstract {
        long e = 1;                    // ramification degree
        WeylElement twist;             // order e, identity iff e == 1
        CoweightQ nu;                  // dominant, e*nu integral
        std::map<size_t, Rat> profile; // positive-root index -> v_alpha
    };

    static TorusElement concrete(const RootDatum& datum, const CoweightQ& mu,
                                 std::vector<LaurentSeries> units);
    static TorusElement abstract_element(const RootDatum& datum, long e,
                                         const WeylElement& twist, const CoweightQ& nu,
                                         const std::map<size_t, Rat>& profile,
                                         bool allow_ultrametric_violation = false);

    bool is_concrete() const { return std::holds_alternative<Concrete>(data_); }
    const Concrete& concrete_data() const { return std::get<Concrete>(data_); }
    const Abstract& abstract_data() const { return std::get<Abstract>(data_); }
    // false when the ultrametric check was overridden on an abstract input
    bool input_validated() const { return validated_; }

  private:
    std::variant<Concrete, Abstract> data_;
    bool validated_ = true;
};

// chi(gamma) for an integral character chi, as a Laurent series.
// Concrete elements only.
LaurentSeries evaluate_character(const RootDatum& datum, const TorusElement& g,
                                 const WeightQ& chi);

// Dominant representative of the evaluation coweight ev_gamma.
CoweightQ newton_point(const RootDatum& datum, const TorusElement& g);

// val(alpha(gamma)-1) over the positive roots, computed after conjugating
// so the Newton point is dominant. Throws NotRegularSemisimple when some
// alpha(gamma) is identically 1, InconclusiveTruncation when a valuation
// is not visible at the working truncation order.
ValuationProfile valuation_profile(const RootDatum& datum, const TorusElement& g);

// d(gamma), computed along two routes that are asserted equal: the
// profile/Newton split and, for concrete gamma, the direct sum of
// val(1 - alpha(gamma)) over the full root system.
Rat discriminant_valuation(const RootDatum& datum, const TorusElement& g);

// The direct route alone (sum over both root signs); exposed so the
// verification suites can compare the two paths explicitly.
Rat discriminant_direct(const RootDatum& datum, const TorusElement& g);

// r(gamma) = sum of the profile = d/2 + <rho, nu>; both sides computed
// and asserted equal.
Rat r_gamma(const RootDatum& datum, const TorusElement& g);

// rank(G) minus the dimension of the twist-fixed subspace.
long c_gamma(const RootDatum& datum, const TorusElement& g);
// Same value via the averaging projector trace; independent code path.
long c_gamma_by_trace(const RootDatum& datum, const TorusElement& g);

}  // namespace springer
