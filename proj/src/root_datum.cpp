#include "springer/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>

#include "springer/errors.hpp"

namespace springer {

namespace {

RatVec vec_add(const RatVec& a, const RatVec& b) {
    RatVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
    RatVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

RatVec vec_scale(const Rat& s, const RatVec& a) {
    RatVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
    return out;
}

}  // namespace

CoweightQ operator+(const CoweightQ& a, const CoweightQ& b) { return {vec_add(a.coords, b.coords)}; }
CoweightQ operator-(const CoweightQ& a, const CoweightQ& b) { return {vec_sub(a.coords, b.coords)}; }
CoweightQ operator*(const Rat& s, const CoweightQ& a) { return {vec_scale(s, a.coords)}; }
WeightQ operator+(const WeightQ& a, const WeightQ& b) { return {vec_add(a.coords, b.coords)}; }
WeightQ operator-(const WeightQ& a, const WeightQ& b) { return {vec_sub(a.coords, b.coords)}; }
WeightQ operator*(const Rat& s, const WeightQ& a) { return {vec_scale(s, a.coords)}; }

bool is_zero(const RatVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

std::string WeylElement::word_string() const {
    if (word.empty()) return "e";
    std::string out;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) out += " ";
        out += "s" + std::to_string(word[i] + 1);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cartan matrices of the named simple types. cartan[i][j] = <alpha_j, alpha_i^vee>.

namespace {

IMat cartan_chain(size_t n) {
    IMat c(n, IVec(n, 0));
    for (size_t i = 0; i < n; ++i) {
        c[i][i] = 2;
        if (i + 1 < n) {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    }
    return c;
}

IMat named_cartan(char letter, size_t n) {
    switch (letter) {
        case 'A':
            if (n < 1) fail(ErrorCode::MalformedSpec, "A_n needs n >= 1");
            return cartan_chain(n);
        case 'B': {
            if (n < 2) fail(ErrorCode::MalformedSpec, "B_n needs n >= 2");
            IMat c = cartan_chain(n);
            c[n - 1][n - 2] = -2;  // <alpha_{n-1}, alpha_n^vee> = -2, alpha_n short
            return c;
        }
        case 'C': {
            if (n < 2) fail(ErrorCode::MalformedSpec, "C_n needs n >= 2");
            IMat c = cartan_chain(n);
            c[n - 2][n - 1] = -2;
            return c;
        }
        case 'D': {
            if (n < 4) fail(ErrorCode::MalformedSpec, "D_n needs n >= 4");
            IMat c = cartan_chain(n - 1);
            c.resize(n);
            for (auto& row : c) row.resize(n, 0);
            c[n - 1][n - 1] = 2;
            c[n - 2][n - 1] = 0;
            c[n - 1][n - 2] = 0;
            c[n - 3][n - 1] = -1;
            c[n - 1][n - 3] = -1;
            return c;
        }
        case 'E': {
            if (n < 6 || n > 8) fail(ErrorCode::MalformedSpec, "E_n needs n in {6,7,8}");
            // Bourbaki numbering: node 2 hangs off node 4 of the A-chain 1-3-4-5-...
            IMat c(n, IVec(n, 0));
            for (size_t i = 0; i < n; ++i) c[i][i] = 2;
            auto link = [&](size_t a, size_t b) {
                c[a - 1][b - 1] = -1;
                c[b - 1][a - 1] = -1;
            };
            link(1, 3);
            link(3, 4);
            link(2, 4);
            link(4, 5);
            if (n >= 6) link(5, 6);
            if (n >= 7) link(6, 7);
            if (n >= 8) link(7, 8);
            return c;
        }
        case 'F': {
            if (n != 4) fail(ErrorCode::MalformedSpec, "F_n needs n = 4");
            return {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
        }
        case 'G': {
            if (n != 2) fail(ErrorCode::MalformedSpec, "G_n needs n = 2");
            // alpha_1 short, alpha_2 long
            return {{2, -3}, {-1, 2}};
        }
        default:
            fail(ErrorCode::MalformedSpec, std::string("unknown type letter '") + letter + "'");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction

RootDatum RootDatum::from_cartan(const IMat& cartan, size_t central_rank,
                                 const std::optional<RatMat>& coweight_basis,
                                 const std::string& name) {
    RootDatum d;
    d.r_ = cartan.size();
    d.z_ = central_rank;
    d.cartan_ = cartan;
    d.name_ = name;
    if (d.r_ + d.z_ == 0) fail(ErrorCode::MalformedSpec, "empty root datum");
    if (d.r_ + d.z_ > kMaxRank)
        fail(ErrorCode::RankTooLarge,
             "total rank " + std::to_string(d.r_ + d.z_) + " exceeds cap " +
                 std::to_string(kMaxRank));
    d.build_roots_and_weights();
    d.build_lattice(coweight_basis);
    d.enumerate_weyl();
    d.validate();
    return d;
}

std::vector<std::pair<IVec, IVec>> positive_root_closure(const IMat& cartan) {
    const size_t r = cartan.size();
    // Cartan axioms.
    for (size_t i = 0; i < r; ++i) {
        if (cartan[i].size() != r) fail(ErrorCode::NonCartan, "cartan matrix not square");
        if (cartan[i][i] != 2) fail(ErrorCode::NonCartan, "cartan diagonal must be 2");
        for (size_t j = 0; j < r; ++j) {
            if (i == j) continue;
            if (cartan[i][j] > 0) fail(ErrorCode::NonCartan, "positive off-diagonal entry");
            if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
                fail(ErrorCode::NonCartan, "zero pattern not symmetric");
        }
    }
    if (r > 0) {
        // Symmetrizer d with d_i C_{ij} = d_j C_{ji}, then positive definiteness
        // of the symmetrized matrix (finite type check).
        RatVec dvec(r, Rat(0));
        for (size_t start = 0; start < r; ++start) {
            if (dvec[start] != 0) continue;
            dvec[start] = 1;
            std::deque<size_t> queue{start};
            while (!queue.empty()) {
                size_t i = queue.front();
                queue.pop_front();
                for (size_t j = 0; j < r; ++j) {
                    if (i == j || cartan[i][j] == 0) continue;
                    Rat need = dvec[i] * Rat(cartan[i][j]) / Rat(cartan[j][i]);
                    if (dvec[j] == 0) {
                        dvec[j] = need;
                        queue.push_back(j);
                    } else if (dvec[j] != need) {
                        fail(ErrorCode::NonCartan, "cartan matrix is not symmetrizable");
                    }
                }
            }
        }
        RatMat s(r, RatVec(r, Rat(0)));
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < r; ++j) s[i][j] = dvec[i] * Rat(cartan[i][j]);
        // Sylvester: all leading principal minors positive.
        for (size_t k = 1; k <= r; ++k) {
            RatMat mk(k, RatVec(k));
            for (size_t i = 0; i < k; ++i)
                for (size_t j = 0; j < k; ++j) mk[i][j] = s[i][j];
            Rat det(1);
            for (size_t col = 0; col < k; ++col) {
                size_t piv = col;
                while (piv < k && mk[piv][col] == 0) ++piv;
                if (piv == k) {
                    det = 0;
                    break;
                }
                if (piv != col) {
                    std::swap(mk[piv], mk[col]);
                    det = -det;
                }
                det *= mk[col][col];
                for (size_t i = col + 1; i < k; ++i) {
                    if (mk[i][col] == 0) continue;
                    Rat f = mk[i][col] / mk[col][col];
                    for (size_t j = col; j < k; ++j) mk[i][j] -= f * mk[col][j];
                }
            }
            if (det <= 0) fail(ErrorCode::NonCartan, "cartan matrix is not of finite type");
        }
    }

    std::map<IVec, IVec> seen;  // root_coeffs -> coroot_coeffs
    struct Seed {
        IVec rc, cc;
    };
    std::deque<Seed> queue;
    for (size_t i = 0; i < r; ++i) {
        IVec rc(r, 0), cc(r, 0);
        rc[i] = 1;
        cc[i] = 1;
        seen.emplace(rc, cc);
        queue.push_back({rc, cc});
    }
    while (!queue.empty()) {
        Seed cur = queue.front();
        queue.pop_front();
        for (size_t k = 0; k < r; ++k) {
            // <alpha, alpha_k^vee> = sum_j rc_j * cartan[k][j]
            long yk = 0, xk = 0;
            for (size_t j = 0; j < r; ++j) {
                yk += cur.rc[j] * cartan[k][j];
                xk += cur.cc[j] * cartan[j][k];
            }
            IVec rc = cur.rc, cc = cur.cc;
            rc[k] -= yk;
            cc[k] -= xk;
            bool positive = true;
            for (long v : rc)
                if (v < 0) positive = false;
            if (!positive) continue;
            if (seen.emplace(rc, cc).second) queue.push_back({rc, cc});
        }
        if (seen.size() > 10000) fail(ErrorCode::NonCartan, "root closure does not terminate");
    }
    std::vector<std::pair<IVec, IVec>> out(seen.begin(), seen.end());
    // height first; within a height, larger leading coefficients first so
    // the simple roots come out in index order
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        long ha = 0, hb = 0;
        for (long v : a.first) ha += v;
        for (long v : b.first) hb += v;
        if (ha != hb) return ha < hb;
        return a.first > b.first;
    });
    return out;
}

void RootDatum::build_roots_and_weights() {
    const size_t r = r_, n = r_ + z_;
    auto closure = positive_root_closure(cartan_);

    // A^{-1} with A_{ij} = <alpha_i, alpha_j^vee> = cartan_[j][i].
    if (r > 0) {
        RatMat a(r, RatVec(r));
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < r; ++j) a[i][j] = Rat(cartan_[j][i]);
        a_inv_ = rat_mat_inverse(a);
    }

    positive_roots_.clear();
    for (const auto& [rc, cc] : closure) {
        PosRoot pr;
        pr.root_coeffs = rc;
        pr.coroot_coeffs = cc;
        pr.height = 0;
        for (long v : rc) pr.height += v;
        RatVec y(n, Rat(0)), x(n, Rat(0));
        for (size_t j = 0; j < r; ++j) {
            long yj = 0, xj = 0;
            for (size_t k = 0; k < r; ++k) {
                yj += rc[k] * cartan_[j][k];  // <alpha, alpha_j^vee>
                xj += cc[k] * cartan_[k][j];  // <alpha_j, alpha^vee>
            }
            y[j] = yj;
            x[j] = xj;
        }
        pr.root = WeightQ{y};
        pr.coroot = CoweightQ{x};
        positive_roots_.push_back(std::move(pr));
    }

    fund_weights_.clear();
    for (size_t i = 0; i < r; ++i) {
        RatVec y(n, Rat(0));
        y[i] = 1;
        fund_weights_.push_back(WeightQ{y});
    }
    RatVec rho(n, Rat(0));
    for (size_t i = 0; i < r; ++i) rho[i] = 1;
    rho_ = WeightQ{rho};

    // Simple factors = connected components of the Dynkin diagram.
    factor_ranks_.clear();
    std::vector<bool> visited(r, false);
    for (size_t i = 0; i < r; ++i) {
        if (visited[i]) continue;
        size_t count = 0;
        std::deque<size_t> comp{i};
        visited[i] = true;
        while (!comp.empty()) {
            size_t a = comp.front();
            comp.pop_front();
            ++count;
            for (size_t b = 0; b < r; ++b)
                if (!visited[b] && cartan_[a][b] != 0) {
                    visited[b] = true;
                    comp.push_back(b);
                }
        }
        factor_ranks_.push_back(count);
    }
}

void RootDatum::build_lattice(const std::optional<RatMat>& coweight_basis) {
    const size_t r = r_, z = z_, n = r + z;
    if (coweight_basis) {
        bco_ = *coweight_basis;
        if (bco_.size() != n || (n && bco_[0].size() != n))
            fail(ErrorCode::MalformedSpec, "coweight basis must be a square rank-sized matrix");
    } else {
        // coroot lattice (+) Z^z
        bco_.assign(n, RatVec(n, Rat(0)));
        for (size_t j = 0; j < r; ++j)
            for (size_t i = 0; i < r; ++i) bco_[i][j] = Rat(cartan_[j][i]);  // alpha_j^vee
        for (size_t l = 0; l < z; ++l) bco_[r + l][r + l] = 1;
    }
    bco_inv_ = rat_mat_inverse(bco_);  // throws if singular

    // Every simple coroot must lie in the lattice, and the lattice must not
    // meet the coroot span in anything beyond the coroot lattice (the
    // simply-connected assumption on the derived group).
    for (size_t j = 0; j < r; ++j) {
        RatVec cr(n, Rat(0));
        for (size_t i = 0; i < r; ++i) cr[i] = Rat(cartan_[j][i]);
        RatVec u = rat_mat_vec(bco_inv_, cr);
        for (const auto& q : u)
            if (!is_integer(q))
                fail(ErrorCode::MalformedSpec, "simple coroot not in the coweight lattice");
    }
    if (z > 0) {
        // Integer kernel of the central block of the basis: lattice vectors
        // inside the coroot span. Each must have integral coroot coordinates.
        mpz_class denom = 1;
        for (size_t i = r; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                mpz_class dd = bco_[i][j].get_den();
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), denom.get_mpz_t(), dd.get_mpz_t());
                denom = denom / g * dd;
            }
        ZMat zblock(z, ZVec(n));
        for (size_t i = 0; i < z; ++i)
            for (size_t j = 0; j < n; ++j) {
                Rat s = bco_[r + i][j] * Rat(denom);
                zblock[i][j] = s.get_num();
            }
        for (const ZVec& k : integer_kernel_basis(zblock)) {
            RatVec v(n, Rat(0));
            for (size_t j = 0; j < n; ++j)
                for (size_t i = 0; i < n; ++i) v[i] += bco_[i][j] * Rat(k[j]);
            RatVec t = coroot_coords(CoweightQ{v});
            for (const auto& q : t)
                if (!is_integer(q))
                    fail(ErrorCode::NotSimplyConnected,
                         "derived-group coweight lattice exceeds the coroot lattice");
        }
    } else {
        // No central directions: the lattice must equal the coroot lattice.
        for (size_t j = 0; j < n; ++j) {
            RatVec col(n);
            for (size_t i = 0; i < n; ++i) col[i] = bco_[i][j];
            RatVec t = coroot_coords(CoweightQ{col});
            for (const auto& q : t)
                if (!is_integer(q))
                    fail(ErrorCode::NotSimplyConnected,
                         "derived-group coweight lattice exceeds the coroot lattice");
        }
    }

    // Dual (weight) lattice basis: Bwt^T * P * Bco = I with P = the pairing
    // matrix blockdiag(A^{-1}, I).
    RatMat p(n, RatVec(n, Rat(0)));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) p[i][j] = a_inv_[i][j];
    for (size_t l = 0; l < z; ++l) p[r + l][r + l] = 1;
    RatMat pb = rat_mat_mul(p, bco_);
    RatMat pb_inv = rat_mat_inverse(pb);
    bwt_.assign(n, RatVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) bwt_[i][j] = pb_inv[j][i];
    bwt_inv_ = rat_mat_inverse(bwt_);

    // Image of the coweight lattice in the central coordinates.
    RatMat zgens(z, RatVec(n));
    for (size_t i = 0; i < z; ++i)
        for (size_t j = 0; j < n; ++j) zgens[i][j] = bco_[r + i][j];
    central_image_ = RatLattice(zgens);
}

void RootDatum::enumerate_weyl() {
    const size_t r = r_;
    weyl_.clear();
    weyl_too_large_ = false;
    std::map<IMat, size_t> seen;
    std::deque<size_t> queue;
    weyl_.push_back(identity_element());
    seen.emplace(weyl_[0].mat, 0);
    queue.push_back(0);
    std::vector<WeylElement> gens;
    for (size_t i = 0; i < r; ++i) gens.push_back(simple_reflection(i));
    while (!queue.empty()) {
        size_t idx = queue.front();
        queue.pop_front();
        for (size_t i = 0; i < r; ++i) {
            WeylElement next;
            next.mat = int_mat_mul(weyl_[idx].mat, gens[i].mat);
            if (seen.count(next.mat)) continue;
            next.wmat = int_mat_mul(weyl_[idx].wmat, gens[i].wmat);
            next.word = weyl_[idx].word;
            next.word.push_back(static_cast<int>(i));
            if (weyl_.size() >= kWeylEnumCap) {
                weyl_too_large_ = true;
                weyl_.clear();
                return;
            }
            seen.emplace(next.mat, weyl_.size());
            weyl_.push_back(next);
            queue.push_back(weyl_.size() - 1);
        }
    }
    w0_index_ = 0;
    for (size_t i = 0; i < weyl_.size(); ++i)
        if (weyl_[i].length() > weyl_[w0_index_].length()) w0_index_ = i;
}

void RootDatum::validate() {
    // Construction-time self checks; violations are library bugs.
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < r_; ++j) {
            Rat v = pair(simple_root(j), simple_coroot(i));
            if (v != cartan_[i][j])
                fail(ErrorCode::Internal, "pairing inconsistent with cartan matrix");
        }
    for (size_t i = 0; i < r_; ++i) {
        if (pair(rho_, simple_coroot(i)) != 1)
            fail(ErrorCode::Internal, "rho pairing broken");
        for (size_t j = 0; j < r_; ++j)
            if (pair(fund_weights_[i], simple_coroot(j)) != ((i == j) ? 1 : 0))
                fail(ErrorCode::Internal, "fundamental weight duality broken");
    }
    // rho is half the sum of the positive roots
    WeightQ sum = zero_weight();
    for (const auto& pr : positive_roots_) sum = sum + pr.root;
    if (!(Rat(1, 2) * sum == rho_)) fail(ErrorCode::Internal, "rho != half sum of positive roots");
    // lattice bases are dual under the pairing
    const size_t n = rank();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            RatVec wi(n), cj(n);
            for (size_t k = 0; k < n; ++k) {
                wi[k] = bwt_[k][i];
                cj[k] = bco_[k][j];
            }
            if (pair(WeightQ{wi}, CoweightQ{cj}) != ((i == j) ? 1 : 0))
                fail(ErrorCode::Internal, "lattice bases are not dual");
        }
}

// ---------------------------------------------------------------------------
// Spec parsing

namespace {

std::string strip(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

RootDatum parse_factor(const std::string& tok) {
    std::string t = strip(tok);
    if (t.empty()) fail(ErrorCode::MalformedSpec, "empty type name");
    auto parse_rank = [&](size_t from) -> size_t {
        if (from >= t.size()) fail(ErrorCode::MalformedSpec, "missing rank in '" + t + "'");
        for (size_t i = from; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                fail(ErrorCode::MalformedSpec, "bad rank in '" + t + "'");
        return static_cast<size_t>(std::stoul(t.substr(from)));
    };
    if (t.size() >= 3 && (t.compare(0, 2, "GL") == 0 || t.compare(0, 2, "gl") == 0)) {
        size_t n = parse_rank(2);
        if (n < 1) fail(ErrorCode::MalformedSpec, "GL_n needs n >= 1");
        return RootDatum::gl(n);
    }
    if (t.size() >= 3 && (t.compare(0, 2, "SL") == 0 || t.compare(0, 2, "sl") == 0)) {
        size_t n = parse_rank(2);
        if (n < 2) fail(ErrorCode::MalformedSpec, "SL_n needs n >= 2");
        return RootDatum::from_cartan(named_cartan('A', n - 1), 0, std::nullopt, t);
    }
    char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
    size_t n = parse_rank(1);
    return RootDatum::from_cartan(named_cartan(letter, n), 0, std::nullopt,
                                  std::string(1, letter) + std::to_string(n));
}

}  // namespace

RootDatum RootDatum::from_spec(const std::string& spec) {
    std::string s = strip(spec);
    if (s.empty()) fail(ErrorCode::MalformedSpec, "empty datum specification");
    std::vector<std::string> parts;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == '*') {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    RootDatum out = parse_factor(parts[0]);
    for (size_t i = 1; i < parts.size(); ++i) out = product(out, parse_factor(parts[i]));
    return out;
}

RootDatum RootDatum::gl(size_t n) {
    const size_t r = n - 1;
    RatMat basis(n, RatVec(n, Rat(0)));
    // column k = standard coweight e_k: x_i = delta_{i,k} - delta_{i+1,k}, z = 1
    for (size_t k = 0; k < n; ++k) {
        for (size_t i = 0; i < r; ++i) {
            long v = 0;
            if (i == k) v += 1;
            if (i + 1 == k) v -= 1;
            basis[i][k] = v;
        }
        basis[r][k] = 1;
    }
    RootDatum d = from_cartan(r > 0 ? named_cartan('A', r) : IMat{}, 1, basis,
                              "GL" + std::to_string(n));
    d.gl_n_ = n;
    // Fundamental representations are the exterior powers of the standard
    // representation; their highest weights pick up the central coordinate
    // u = k/n on top of the canonical semisimple extension.
    for (size_t k = 0; k < r; ++k)
        d.fund_weights_[k].coords[r] =
            Rat(static_cast<long>(k + 1)) / Rat(static_cast<long>(n));
    return d;
}

RootDatum RootDatum::product(const RootDatum& a, const RootDatum& b) {
    const size_t r = a.r_ + b.r_, z = a.z_ + b.z_, n = r + z;
    IMat cartan(r, IVec(r, 0));
    for (size_t i = 0; i < a.r_; ++i)
        for (size_t j = 0; j < a.r_; ++j) cartan[i][j] = a.cartan_[i][j];
    for (size_t i = 0; i < b.r_; ++i)
        for (size_t j = 0; j < b.r_; ++j) cartan[a.r_ + i][a.r_ + j] = b.cartan_[i][j];
    // Embed internal coordinates: x-blocks first, then z-blocks.
    auto embed = [&](const RatMat& m, size_t rr, size_t zz, bool first) {
        // returns an n x (rr+zz) slab of columns
        RatMat out(n, RatVec(m.empty() ? 0 : m[0].size(), Rat(0)));
        size_t xoff = first ? 0 : a.r_;
        size_t zoff = first ? r : r + a.z_;
        for (size_t j = 0; j < (m.empty() ? 0 : m[0].size()); ++j) {
            for (size_t i = 0; i < rr; ++i) out[xoff + i][j] = m[i][j];
            for (size_t i = 0; i < zz; ++i) out[zoff + i][j] = m[rr + i][j];
        }
        return out;
    };
    RatMat ba = embed(a.bco_, a.r_, a.z_, true);
    RatMat bb = embed(b.bco_, b.r_, b.z_, false);
    RatMat basis(n, RatVec(n, Rat(0)));
    for (size_t j = 0; j < a.rank(); ++j)
        for (size_t i = 0; i < n; ++i) basis[i][j] = ba[i][j];
    for (size_t j = 0; j < b.rank(); ++j)
        for (size_t i = 0; i < n; ++i) basis[i][a.rank() + j] = bb[i][j];
    RootDatum d = from_cartan(cartan, z, basis, a.name_ + "*" + b.name_);
    // carry over the factors' central extensions of the fundamental weights
    for (size_t k = 0; k < a.r_; ++k)
        for (size_t l = 0; l < a.z_; ++l)
            d.fund_weights_[k].coords[r + l] = a.fund_weights_[k].coords[a.r_ + l];
    for (size_t k = 0; k < b.r_; ++k)
        for (size_t l = 0; l < b.z_; ++l)
            d.fund_weights_[a.r_ + k].coords[r + a.z_ + l] = b.fund_weights_[k].coords[b.r_ + l];
    return d;
}

// ---------------------------------------------------------------------------
// Coordinates and pairings

IMat RootDatum::dual_cartan() const {
    IMat t(r_, IVec(r_, 0));
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < r_; ++j) t[i][j] = cartan_[j][i];
    return t;
}

std::optional<size_t> RootDatum::find_positive_root(const IVec& root_coeffs) const {
    for (size_t i = 0; i < positive_roots_.size(); ++i)
        if (positive_roots_[i].root_coeffs == root_coeffs) return i;
    return std::nullopt;
}

WeightQ RootDatum::simple_root(size_t i) const {
    RatVec y(rank(), Rat(0));
    for (size_t j = 0; j < r_; ++j) y[j] = cartan_[j][i];  // <alpha_i, alpha_j^vee>
    return WeightQ{y};
}

CoweightQ RootDatum::simple_coroot(size_t i) const {
    RatVec x(rank(), Rat(0));
    for (size_t j = 0; j < r_; ++j) x[j] = cartan_[i][j];  // <alpha_j, alpha_i^vee>
    return CoweightQ{x};
}

CoweightQ RootDatum::fundamental_coweight(size_t i) const {
    RatVec x(rank(), Rat(0));
    x[i] = 1;
    return CoweightQ{x};
}

Rat RootDatum::pair(const WeightQ& w, const CoweightQ& c) const {
    const size_t n = rank();
    if (w.coords.size() != n || c.coords.size() != n)
        fail(ErrorCode::DimensionMismatch, "weight/coweight size does not match the datum");
    Rat acc(0);
    for (size_t i = 0; i < r_; ++i) {
        if (w.coords[i] == 0) continue;
        Rat t(0);
        for (size_t j = 0; j < r_; ++j) t += a_inv_[i][j] * c.coords[j];
        acc += w.coords[i] * t;
    }
    for (size_t l = 0; l < z_; ++l) acc += w.coords[r_ + l] * c.coords[r_ + l];
    return acc;
}

Rat RootDatum::pair_root(size_t root_index, const CoweightQ& c) const {
    // <alpha, c> = sum_j rc_j * x_j(c); cheaper than the generic pairing
    const PosRoot& pr = positive_roots_[root_index];
    Rat acc(0);
    for (size_t j = 0; j < r_; ++j)
        if (pr.root_coeffs[j]) acc += Rat(pr.root_coeffs[j]) * c.coords[j];
    return acc;
}

RatVec RootDatum::coroot_coords(const CoweightQ& c) const {
    RatVec t(r_, Rat(0));
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < r_; ++j) t[i] += a_inv_[i][j] * c.coords[j];
    return t;
}

RatVec RootDatum::central_coords(const CoweightQ& c) const {
    return RatVec(c.coords.begin() + static_cast<long>(r_), c.coords.end());
}

bool RootDatum::is_dominant(const CoweightQ& c) const {
    for (size_t i = 0; i < r_; ++i)
        if (c.coords[i] < 0) return false;
    return true;
}

bool RootDatum::is_integral(const CoweightQ& c) const {
    RatVec u = rat_mat_vec(bco_inv_, c.coords);
    for (const auto& q : u)
        if (!is_integer(q)) return false;
    return true;
}

bool RootDatum::is_integral_weight(const WeightQ& w) const {
    RatVec u = rat_mat_vec(bwt_inv_, w.coords);
    for (const auto& q : u)
        if (!is_integer(q)) return false;
    return true;
}

CoweightQ RootDatum::zero_coweight() const { return CoweightQ{RatVec(rank(), Rat(0))}; }
WeightQ RootDatum::zero_weight() const { return WeightQ{RatVec(rank(), Rat(0))}; }

CoweightQ RootDatum::coweight_from_lattice(const RatVec& u) const {
    if (u.size() != rank())
        fail(ErrorCode::DimensionMismatch,
             "expected " + std::to_string(rank()) + " lattice coordinates");
    return CoweightQ{rat_mat_vec(bco_, u)};
}

RatVec RootDatum::lattice_coords(const CoweightQ& c) const {
    return rat_mat_vec(bco_inv_, c.coords);
}

WeightQ RootDatum::weight_from_lattice(const RatVec& u) const {
    if (u.size() != rank())
        fail(ErrorCode::DimensionMismatch,
             "expected " + std::to_string(rank()) + " lattice coordinates");
    return WeightQ{rat_mat_vec(bwt_, u)};
}

RatVec RootDatum::weight_lattice_coords(const WeightQ& w) const {
    return rat_mat_vec(bwt_inv_, w.coords);
}

bool RootDatum::det_class_equal(const CoweightQ& a, const CoweightQ& b) const {
    CoweightQ d = a - b;
    for (size_t l = 0; l < z_; ++l)
        if (d.coords[r_ + l] != 0) return false;
    for (const auto& q : coroot_coords(d))
        if (!is_integer(q)) return false;
    return true;
}

bool RootDatum::central_integral(const CoweightQ& c) const {
    if (z_ == 0) return true;
    return central_image_.contains(central_coords(c));
}

CoweightQ RootDatum::central_base_point(const CoweightQ& c) const {
    if (z_ == 0) return zero_coweight();
    ZVec coeffs;
    if (!central_image_.contains(central_coords(c), &coeffs))
        fail(ErrorCode::NoIntegralDominator,
             "no integral coweight has central coordinates " +
                 ratvec_to_string(central_coords(c)));
    RatVec v(rank(), Rat(0));
    for (size_t j = 0; j < rank(); ++j) {
        if (coeffs[j] == 0) continue;
        for (size_t i = 0; i < rank(); ++i) v[i] += bco_[i][j] * Rat(coeffs[j]);
    }
    return CoweightQ{v};
}

// ---------------------------------------------------------------------------
// Weyl group

WeylElement RootDatum::identity_element() const {
    WeylElement w;
    w.mat = int_identity(r_);
    w.wmat = int_identity(r_);
    return w;
}

WeylElement RootDatum::simple_reflection(size_t i) const {
    WeylElement w = identity_element();
    // s_i on coweights: x_j -> x_j - <alpha_j, alpha_i^vee> x_i
    for (size_t j = 0; j < r_; ++j) w.mat[j][i] -= cartan_[i][j];
    // s_i on weights: y_j -> y_j - <alpha_i, alpha_j^vee> y_i
    for (size_t j = 0; j < r_; ++j) w.wmat[j][i] -= cartan_[j][i];
    w.word = {static_cast<int>(i)};
    return w;
}

WeylElement RootDatum::multiply(const WeylElement& a, const WeylElement& b) const {
    WeylElement w;
    w.mat = int_mat_mul(a.mat, b.mat);
    w.wmat = int_mat_mul(a.wmat, b.wmat);
    w.word = reduced_word_from_matrix(w.mat);
    return w;
}

WeylElement RootDatum::inverse_element(const WeylElement& w) const {
    WeylElement inv;
    inv.word.assign(w.word.rbegin(), w.word.rend());
    inv.mat = int_identity(r_);
    inv.wmat = int_identity(r_);
    for (int i : inv.word) {
        WeylElement s = simple_reflection(static_cast<size_t>(i));
        inv.mat = int_mat_mul(inv.mat, s.mat);
        inv.wmat = int_mat_mul(inv.wmat, s.wmat);
    }
    return inv;
}

WeylElement RootDatum::element_from_word(const std::vector<int>& word) const {
    WeylElement w = identity_element();
    for (int i : word) {
        if (i < 0 || static_cast<size_t>(i) >= r_)
            fail(ErrorCode::MalformedSpec, "reflection index out of range in word");
        WeylElement s = simple_reflection(static_cast<size_t>(i));
        w.mat = int_mat_mul(w.mat, s.mat);
        w.wmat = int_mat_mul(w.wmat, s.wmat);
    }
    w.word = reduced_word_from_matrix(w.mat);
    return w;
}

CoweightQ RootDatum::apply(const WeylElement& w, const CoweightQ& c) const {
    RatVec out = c.coords;
    for (size_t i = 0; i < r_; ++i) {
        Rat acc(0);
        for (size_t j = 0; j < r_; ++j)
            if (w.mat[i][j]) acc += Rat(w.mat[i][j]) * c.coords[j];
        out[i] = acc;
    }
    return CoweightQ{out};
}

WeightQ RootDatum::apply(const WeylElement& w, const WeightQ& f) const {
    RatVec out = f.coords;
    for (size_t i = 0; i < r_; ++i) {
        Rat acc(0);
        for (size_t j = 0; j < r_; ++j)
            if (w.wmat[i][j]) acc += Rat(w.wmat[i][j]) * f.coords[j];
        out[i] = acc;
    }
    return WeightQ{out};
}

size_t RootDatum::element_order(const WeylElement& w) const {
    IMat id = int_identity(r_);
    IMat acc = w.mat;
    size_t order = 1;
    while (acc != id) {
        acc = int_mat_mul(acc, w.mat);
        ++order;
        if (order > 10000) fail(ErrorCode::Internal, "element order runaway");
    }
    return order;
}

bool RootDatum::coroot_side_negative(const RatVec& x) const {
    // x = coordinates of a coroot image; negative iff its simple-coroot
    // coefficients are all <= 0 with at least one < 0
    RatVec t(r_, Rat(0));
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < r_; ++j) t[i] += a_inv_[i][j] * x[j];
    bool some_neg = false;
    for (const auto& q : t) {
        if (q > 0) return false;
        if (q < 0) some_neg = true;
    }
    return some_neg;
}

std::vector<int> RootDatum::reduced_word_from_matrix(const IMat& m) const {
    IMat cur = m;
    IMat id = int_identity(r_);
    std::vector<int> suffix;
    while (cur != id) {
        bool found = false;
        for (size_t i = 0; i < r_ && !found; ++i) {
            // w(alpha_i) negative <=> w(alpha_i^vee) negative
            RatVec x(r_, Rat(0));
            for (size_t row = 0; row < r_; ++row) {
                long acc = 0;
                for (size_t j = 0; j < r_; ++j) acc += cur[row][j] * cartan_[i][j];
                x[row] = acc;
            }
            if (coroot_side_negative(x)) {
                suffix.push_back(static_cast<int>(i));
                cur = int_mat_mul(cur, simple_reflection(i).mat);
                found = true;
            }
        }
        if (!found) fail(ErrorCode::Internal, "descent search failed; matrix not in W?");
        if (suffix.size() > 10000) fail(ErrorCode::Internal, "reduced word runaway");
    }
    return std::vector<int>(suffix.rbegin(), suffix.rend());
}

size_t RootDatum::inversion_count(const WeylElement& w) const {
    size_t count = 0;
    for (const auto& pr : positive_roots_) {
        CoweightQ img = apply(w, pr.coroot);
        RatVec x(r_);
        for (size_t i = 0; i < r_; ++i) x[i] = img.coords[i];
        if (coroot_side_negative(x)) ++count;
    }
    return count;
}

std::pair<CoweightQ, WeylElement> RootDatum::dominant_representative(const CoweightQ& c) const {
    CoweightQ cur = c;
    IMat acc = int_identity(r_);
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t i = 0; i < r_; ++i) {
            if (cur.coords[i] < 0) {
                WeylElement s = simple_reflection(i);
                cur = apply(s, cur);
                acc = int_mat_mul(s.mat, acc);
                moved = true;
                break;
            }
        }
    }
    WeylElement w;
    w.mat = acc;
    w.word = reduced_word_from_matrix(acc);
    w.wmat = int_identity(r_);
    for (int i : w.word) w.wmat = int_mat_mul(w.wmat, simple_reflection(static_cast<size_t>(i)).wmat);
    return {cur, w};
}

const std::vector<WeylElement>& RootDatum::weyl_group() const {
    if (weyl_too_large_)
        fail(ErrorCode::WeylGroupTooLarge,
             "Weyl group of " + name_ + " exceeds the enumeration cap " +
                 std::to_string(kWeylEnumCap));
    return weyl_;
}

size_t RootDatum::weyl_order() const { return weyl_group().size(); }

const WeylElement& RootDatum::longest_element() const { return weyl_group()[w0_index_]; }

CoweightQ RootDatum::apply_minus_w0(const CoweightQ& c) const {
    CoweightQ out = apply(longest_element(), c);
    for (auto& q : out.coords) q = -q;
    return out;
}

WeightQ RootDatum::apply_minus_w0(const WeightQ& w) const {
    WeightQ out = apply(longest_element(), w);
    for (auto& q : out.coords) q = -q;
    return out;
}

}  // namespace springer
