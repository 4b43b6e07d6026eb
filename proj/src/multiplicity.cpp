#include "springer/multiplicity.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "springer/errors.hpp"

namespace springer {

WeightEngine::WeightEngine(const IMat& cartan) : r_(cartan.size()), cartan_(cartan) {
    auto closure = positive_root_closure(cartan_);
    for (const auto& [rc, cc] : closure) {
        pos_root_coeffs_.push_back(rc);
        IVec y(r_, 0);
        for (size_t j = 0; j < r_; ++j)
            for (size_t k = 0; k < r_; ++k) y[j] += rc[k] * cartan_[j][k];
        pos_root_y_.push_back(y);
    }
    if (r_ > 0) {
        RatMat c(r_, RatVec(r_));
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < r_; ++j) c[i][j] = Rat(cartan_[i][j]);
        cinv_ = rat_mat_inverse(c);
        // Symmetrizer c_i with c_j C[j][i] = c_i C[i][j]; min 1 per component.
        RatVec sym(r_, Rat(0));
        for (size_t start = 0; start < r_; ++start) {
            if (sym[start] != 0) continue;
            std::vector<size_t> comp;
            sym[start] = 1;
            std::deque<size_t> queue{start};
            while (!queue.empty()) {
                size_t i = queue.front();
                queue.pop_front();
                comp.push_back(i);
                for (size_t j = 0; j < r_; ++j) {
                    if (i == j || cartan_[i][j] == 0) continue;
                    Rat need = sym[i] * Rat(cartan_[i][j]) / Rat(cartan_[j][i]);
                    if (sym[j] == 0) {
                        sym[j] = need;
                        queue.push_back(j);
                    }
                }
            }
            Rat mn = sym[comp[0]];
            for (size_t i : comp) mn = std::min(mn, sym[i]);
            for (size_t i : comp) sym[i] /= mn;
        }
        // gram_{ij} = sym_i * (C^{-1})_{ij}
        gram_.assign(r_, RatVec(r_));
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < r_; ++j) gram_[i][j] = sym[i] * cinv_[i][j];
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = i + 1; j < r_; ++j)
                if (gram_[i][j] != gram_[j][i])
                    fail(ErrorCode::Internal, "invariant form is not symmetric");
    }
}

bool WeightEngine::is_dominant(const IVec& y) const {
    for (long v : y)
        if (v < 0) return false;
    return true;
}

IVec WeightEngine::reflect(size_t k, const IVec& y) const {
    IVec out = y;
    for (size_t j = 0; j < r_; ++j) out[j] -= cartan_[j][k] * y[k];
    return out;
}

IVec WeightEngine::dominant_rep(IVec y) const {
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t k = 0; k < r_; ++k)
            if (y[k] < 0) {
                y = reflect(k, y);
                moved = true;
                break;
            }
    }
    return y;
}

std::optional<IVec> WeightEngine::root_coeffs_of_diff(const IVec& hi, const IVec& lo) const {
    RatVec d(r_);
    for (size_t i = 0; i < r_; ++i) d[i] = Rat(hi[i] - lo[i]);
    RatVec c = rat_mat_vec(cinv_, d);
    IVec out(r_);
    for (size_t i = 0; i < r_; ++i) {
        if (!is_integer(c[i]) || c[i] < 0) return std::nullopt;
        out[i] = rat_to_long(c[i]);
    }
    return out;
}

IVec WeightEngine::lowest_weight(const IVec& lam) const {
    IVec neg(r_);
    for (size_t i = 0; i < r_; ++i) neg[i] = -lam[i];
    IVec dom = dominant_rep(neg);  // -w0(lam)
    for (size_t i = 0; i < r_; ++i) dom[i] = -dom[i];
    return dom;
}

Rat WeightEngine::form(const IVec& a, const IVec& b) const {
    Rat acc(0);
    for (size_t i = 0; i < r_; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < r_; ++j)
            if (b[j] != 0) acc += Rat(a[i]) * gram_[i][j] * Rat(b[j]);
    }
    return acc;
}

std::map<IVec, long> WeightEngine::freudenthal_table(const IVec& lam) const {
    if (!is_dominant(lam)) fail(ErrorCode::Internal, "freudenthal_table needs dominant lambda");
    if (r_ == 0) return {{IVec{}, 1}};
    IVec low = lowest_weight(lam);
    auto cmax_opt = root_coeffs_of_diff(lam, low);
    if (!cmax_opt) fail(ErrorCode::Internal, "lowest weight not below lambda");
    const IVec cmax = *cmax_opt;

    // Enumerate dominant weights lam - sum c_i alpha_i inside the box.
    struct Dom {
        IVec y;
        long depth;
    };
    std::vector<Dom> doms;
    IVec c(r_, 0);
    while (true) {
        IVec y = lam;
        long depth = 0;
        for (size_t k = 0; k < r_; ++k) {
            depth += c[k];
            for (size_t j = 0; j < r_; ++j) y[j] -= c[k] * cartan_[j][k];
        }
        if (is_dominant(y)) doms.push_back({y, depth});
        size_t pos = 0;
        while (pos < r_ && c[pos] == cmax[pos]) {
            c[pos] = 0;
            ++pos;
        }
        if (pos == r_) break;
        ++c[pos];
    }
    std::sort(doms.begin(), doms.end(), [](const Dom& a, const Dom& b) {
        if (a.depth != b.depth) return a.depth < b.depth;
        return a.y < b.y;
    });

    std::map<IVec, long> table;
    IVec rho(r_, 1);
    IVec lam_rho(r_);
    for (size_t i = 0; i < r_; ++i) lam_rho[i] = lam[i] + rho[i];
    Rat norm_lam = form(lam_rho, lam_rho);

    for (const Dom& dm : doms) {
        if (dm.depth == 0) {
            table[dm.y] = 1;
            continue;
        }
        const IVec& mu = dm.y;
        Rat num(0);
        for (size_t a = 0; a < pos_root_y_.size(); ++a) {
            const IVec& alpha = pos_root_y_[a];
            IVec cur = mu;
            for (long k = 1;; ++k) {
                for (size_t j = 0; j < r_; ++j) cur[j] += alpha[j];
                if (!root_coeffs_of_diff(lam, cur)) break;
                IVec rep = dominant_rep(cur);
                auto it = table.find(rep);
                if (it == table.end() || it->second == 0) continue;
                num += Rat(2) * Rat(it->second) * form(cur, alpha);
            }
        }
        IVec mu_rho(r_);
        for (size_t i = 0; i < r_; ++i) mu_rho[i] = mu[i] + rho[i];
        Rat den = norm_lam - form(mu_rho, mu_rho);
        if (den == 0) fail(ErrorCode::Internal, "freudenthal denominator vanished");
        Rat m = num / den;
        if (!is_integer(m) || m < 0)
            fail(ErrorCode::Internal, "freudenthal produced non-integer multiplicity");
        long mv = rat_to_long(m);
        if (mv > 0) table[mu] = mv;
    }
    return table;
}

long WeightEngine::multiplicity(const IVec& lam, const IVec& mu) const {
    auto table = freudenthal_table(lam);
    auto it = table.find(dominant_rep(mu));
    return it == table.end() ? 0 : it->second;
}

void WeightEngine::ensure_weyl() const {
    if (weyl_built_) return;
    weyl_built_ = true;
    std::map<IMat, size_t> seen;
    IMat id(r_, IVec(r_, 0));
    for (size_t i = 0; i < r_; ++i) id[i][i] = 1;
    weyl_.push_back({id, 0});
    seen.emplace(id, 0);
    std::vector<IMat> gens;
    for (size_t k = 0; k < r_; ++k) {
        IMat s = id;
        for (size_t j = 0; j < r_; ++j) s[j][k] -= cartan_[j][k];
        gens.push_back(s);
    }
    std::deque<size_t> queue{0};
    while (!queue.empty()) {
        size_t idx = queue.front();
        queue.pop_front();
        for (size_t k = 0; k < r_; ++k) {
            IMat next = int_mat_mul(weyl_[idx].first, gens[k]);
            if (seen.count(next)) continue;
            if (weyl_.size() >= kWeylEnumCap) {
                weyl_too_large_ = true;
                weyl_.clear();
                return;
            }
            seen.emplace(next, weyl_.size());
            weyl_.push_back({next, weyl_[idx].second + 1});
            queue.push_back(weyl_.size() - 1);
        }
    }
}

size_t WeightEngine::weyl_order() const {
    ensure_weyl();
    if (weyl_too_large_)
        fail(ErrorCode::WeylGroupTooLarge, "Weyl group exceeds the enumeration cap");
    return weyl_.size();
}

mpz_class WeightEngine::kostant_partition(const IVec& root_coeffs) const {
    for (long x : root_coeffs)
        if (x < 0) return 0;
    // f(i, v) = #ways to write v using positive roots i..; memo key [i | v]
    std::function<mpz_class(size_t, const IVec&)> rec = [&](size_t i,
                                                            const IVec& v) -> mpz_class {
        bool zero = true;
        for (long x : v)
            if (x != 0) {
                zero = false;
                break;
            }
        if (zero) return 1;
        if (i == pos_root_coeffs_.size()) return 0;
        IVec key;
        key.reserve(v.size() + 1);
        key.push_back(static_cast<long>(i));
        key.insert(key.end(), v.begin(), v.end());
        auto it = partition_memo_.find(key);
        if (it != partition_memo_.end()) return it->second;
        mpz_class total = 0;
        IVec cur = v;
        while (true) {
            total += rec(i + 1, cur);
            bool ok = true;
            for (size_t j = 0; j < cur.size(); ++j) {
                cur[j] -= pos_root_coeffs_[i][j];
                if (cur[j] < 0) ok = false;
            }
            if (!ok) break;
        }
        partition_memo_.emplace(std::move(key), total);
        return total;
    };
    return rec(0, root_coeffs);
}

long WeightEngine::kostant_multiplicity(const IVec& lam, const IVec& mu) const {
    ensure_weyl();
    if (weyl_too_large_)
        fail(ErrorCode::WeylGroupTooLarge,
             "kostant_multiplicity needs full Weyl enumeration (cap exceeded)");
    IVec lam_rho(r_), mu_rho(r_);
    for (size_t i = 0; i < r_; ++i) {
        lam_rho[i] = lam[i] + 1;
        mu_rho[i] = mu[i] + 1;
    }
    mpz_class acc = 0;
    for (const auto& [m, len] : weyl_) {
        IVec img(r_, 0);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < r_; ++j) img[i] += m[i][j] * lam_rho[j];
        // beta = w(lam+rho) - (mu+rho) as root coefficients
        RatVec d(r_);
        for (size_t i = 0; i < r_; ++i) d[i] = Rat(img[i] - mu_rho[i]);
        RatVec c = rat_mat_vec(cinv_, d);
        bool ok = true;
        IVec cc(r_);
        for (size_t i = 0; i < r_; ++i) {
            if (!is_integer(c[i]) || c[i] < 0) {
                ok = false;
                break;
            }
            cc[i] = rat_to_long(c[i]);
        }
        if (!ok) continue;
        mpz_class p = kostant_partition(cc);
        if (len % 2 == 0)
            acc += p;
        else
            acc -= p;
    }
    if (acc < 0 || !acc.fits_slong_p())
        fail(ErrorCode::Internal, "kostant multiplicity out of range: " + acc.get_str());
    return acc.get_si();
}

mpz_class WeightEngine::weyl_dimension(const IVec& lam) const {
    if (!is_dominant(lam)) fail(ErrorCode::Internal, "weyl_dimension needs dominant lambda");
    IVec rho(r_, 1), lam_rho(r_);
    for (size_t i = 0; i < r_; ++i) lam_rho[i] = lam[i] + 1;
    Rat prod(1);
    for (const IVec& alpha : pos_root_y_) prod *= form(lam_rho, alpha) / form(rho, alpha);
    if (!is_integer(prod) || prod <= 0)
        fail(ErrorCode::Internal, "weyl dimension not a positive integer");
    return prod.get_num();
}

std::vector<std::pair<IVec, long>> WeightEngine::weight_system(const IVec& lam) const {
    std::vector<std::pair<IVec, long>> out;
    for (const auto& [dom, mult] : freudenthal_table(lam))
        for (const IVec& w : orbit(dom)) out.emplace_back(w, mult);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IVec> WeightEngine::orbit(const IVec& y) const {
    std::set<IVec> seen{y};
    std::deque<IVec> queue{y};
    while (!queue.empty()) {
        IVec cur = queue.front();
        queue.pop_front();
        for (size_t k = 0; k < r_; ++k) {
            IVec next = reflect(k, cur);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return std::vector<IVec>(seen.begin(), seen.end());
}

// ---------------------------------------------------------------------------

IVec dual_weight_coords(const RootDatum& datum, const CoweightQ& c) {
    IVec y(datum.semisimple_rank());
    for (size_t i = 0; i < y.size(); ++i) {
        if (!is_integer(c.coords[i]))
            fail(ErrorCode::NotIntegral, "coweight has fractional pairing with a simple root");
        y[i] = rat_to_long(c.coords[i]);
    }
    return y;
}

DualMultiplicities::DualMultiplicities(const RootDatum& datum, const CoweightQ& lam)
    : datum_(datum), engine_(datum.dual_cartan()), lam_(lam) {
    if (!datum.is_integral(lam)) fail(ErrorCode::NotIntegral, "lambda must be integral");
    if (!datum.is_dominant(lam)) fail(ErrorCode::MalformedSpec, "lambda must be dominant");
    lam_y_ = dual_weight_coords(datum, lam);
    table_ = engine_.freudenthal_table(lam_y_);
}

long DualMultiplicities::at(const CoweightQ& mu) const {
    if (!datum_.is_integral(mu)) fail(ErrorCode::NotIntegral, "mu must be integral");
    // wrong det class (equivalently lambda - mu not in the coroot lattice) -> 0
    if (!datum_.det_class_equal(lam_, mu)) return 0;
    IVec mu_y = engine_.dominant_rep(dual_weight_coords(datum_, mu));
    auto it = table_.find(mu_y);
    return it == table_.end() ? 0 : it->second;
}

long m_lambda_mu(const RootDatum& datum, const CoweightQ& lam, const CoweightQ& mu) {
    return DualMultiplicities(datum, lam).at(mu);
}

long kostant_m_lambda_mu(const RootDatum& datum, const CoweightQ& lam, const CoweightQ& mu) {
    if (!datum.is_integral(lam) || !datum.is_integral(mu))
        fail(ErrorCode::NotIntegral, "kostant_m_lambda_mu needs integral coweights");
    if (!datum.is_dominant(lam)) fail(ErrorCode::MalformedSpec, "lambda must be dominant");
    if (!datum.det_class_equal(lam, mu)) return 0;
    WeightEngine engine(datum.dual_cartan());
    IVec mu_y = engine.dominant_rep(dual_weight_coords(datum, mu));
    return engine.kostant_multiplicity(dual_weight_coords(datum, lam), mu_y);
}

mpz_class weyl_dimension_dual(const RootDatum& datum, const CoweightQ& lam) {
    WeightEngine engine(datum.dual_cartan());
    return engine.weyl_dimension(dual_weight_coords(datum, lam));
}

std::vector<std::pair<WeightQ, long>> fundamental_weight_system(const RootDatum& datum,
                                                                size_t i) {
    WeightEngine engine(datum.cartan());
    IVec lam_y(datum.semisimple_rank(), 0);
    lam_y[i] = 1;
    const WeightQ& omega = datum.fundamental_weight(i);
    std::vector<std::pair<WeightQ, long>> out;
    for (const auto& [y, mult] : engine.weight_system(lam_y)) {
        RatVec coords(datum.rank(), Rat(0));
        for (size_t j = 0; j < datum.semisimple_rank(); ++j) coords[j] = y[j];
        // central components are constant across the weight system
        for (size_t l = datum.semisimple_rank(); l < datum.rank(); ++l)
            coords[l] = omega.coords[l];
        out.emplace_back(WeightQ{coords}, mult);
    }
    return out;
}

}  // namespace springer
