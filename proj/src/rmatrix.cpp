#include "uvtsw/rmatrix.hpp"

#include <algorithm>

namespace uvtsw {

namespace {

long pow_checked(int n, int k, long cap) {
    long dim = 1;
    for (int i = 0; i < k; ++i) {
        dim *= n;
        if (dim > cap) throw std::length_error("tensor space dimension exceeds cap");
    }
    return dim;
}

}  // namespace

SparseMat rtilde(const VarSet& vars, int n) {
    RatFunc v = RatFunc::variable(vars, "v");
    RatFunc t = RatFunc::variable(vars, "t");
    RatFunc one = RatFunc::one(vars);
    SparseMat m(vars, n * n, n * n);
    auto at = [n](int a, int b) { return (a - 1) * n + (b - 1); };
    for (int i = 1; i <= n; ++i) m.set(at(i, i), at(i, i), one);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            m.set(at(j, i), at(i, j), v * t);                       // E_ji x E_ij
            m.set(at(i, j), at(j, i), v * t.inv());                 // E_ij x E_ji
            m.set(at(j, i), at(j, i), t.inv() * (one - v * v));     // E_jj x E_ii
        }
    return m;
}

SparseMat r_matrix(const VarSet& vars, int n) {
    RatFunc v = RatFunc::variable(vars, "v");
    RatFunc t = RatFunc::variable(vars, "t");
    RatFunc one = RatFunc::one(vars);
    SparseMat m(vars, n * n, n * n);
    auto at = [n](int a, int b) { return (a - 1) * n + (b - 1); };
    for (int i = 1; i <= n; ++i) m.set(at(i, i), at(i, i), v.inv() * t);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            m.set(at(j, i), at(i, j), t * t);                       // E_ji x E_ij
            m.set(at(i, j), at(j, i), one);                         // E_ij x E_ji
            m.set(at(j, i), at(j, i), (v.inv() - v) * t);           // E_jj x E_ii
        }
    return m;
}

SparseMat rtilde_braided(const VarSet& vars, int n) {
    RatFunc v = RatFunc::variable(vars, "v");
    RatFunc t = RatFunc::variable(vars, "t");
    return r_matrix(vars, n) * (v * t.inv());
}

SparseMat weight_gauge(const VarSet& vars, int n) {
    RatFunc t = RatFunc::variable(vars, "t");
    SparseMat s(vars, n, n);
    for (int a = 0; a < n; ++a) s.set(a, a, t.pow(-a));
    return s;
}

SparseMat r_matrix_commutant(const VarSet& vars, int n) {
    RatFunc t = RatFunc::variable(vars, "t");
    SparseMat m = r_matrix(vars, n);
    SparseMat out(vars, n * n, n * n);
    for (const auto& [rc, val] : m.entries()) {
        int ra = rc.first / n, ca = rc.second / n;
        out.set(rc.first, rc.second, val * t.pow(ca - ra));
    }
    return out;
}

SparseMat lift(int i, const SparseMat& base, int n, int k) {
    if (i < 1 || i >= k) throw std::out_of_range("lift position out of range");
    const VarSet& vars = base.vars();
    SparseMat id = SparseMat::identity(vars, n);
    SparseMat out(vars, 1, 1);
    out.set(0, 0, RatFunc::one(vars));
    for (int pos = 1; pos <= k;) {
        if (pos == i) {
            out = SparseMat::kron(out, base);
            pos += 2;
        } else {
            out = SparseMat::kron(out, id);
            pos += 1;
        }
    }
    return out;
}

std::vector<RelationCheck> check_braid(const SparseMat& base, int n, int k) {
    std::vector<SparseMat> R;
    for (int i = 1; i < k; ++i) R.push_back(lift(i, base, n, k));
    std::vector<RelationCheck> out;
    bool pass = true;
    std::string detail;
    for (int i = 0; i + 1 < k - 1 && pass; ++i)
        if (R[i] * R[i + 1] * R[i] != R[i + 1] * R[i] * R[i + 1]) {
            pass = false;
            detail = "i=" + std::to_string(i + 1);
        }
    out.push_back({"braid", pass, detail});
    pass = true;
    detail.clear();
    for (int i = 0; i < k - 1 && pass; ++i)
        for (int j = i + 2; j < k - 1 && pass; ++j)
            if (R[i] * R[j] != R[j] * R[i]) {
                pass = false;
                detail = "i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1);
            }
    out.push_back({"distant commutation", pass, detail});
    return out;
}

RelationCheck check_hecke_quadratic(const SparseMat& base, const std::string& name) {
    const VarSet& vars = base.vars();
    RatFunc v = RatFunc::variable(vars, "v");
    RatFunc t = RatFunc::variable(vars, "t");
    SparseMat id = SparseMat::identity(vars, base.rows());
    SparseMat q = (base - id * (v.inv() * t)) * (base + id * (v * t));
    return {"hecke quadratic (" + name + ")", q.is_zero(),
            q.is_zero() ? "" : "nonzero residue"};
}

namespace {

// Basis-element image cache keyed by (n, k).
std::map<std::pair<int, int>, std::map<Permutation, SparseMat>>& delta_cache() {
    static std::map<std::pair<int, int>, std::map<Permutation, SparseMat>> cache;
    return cache;
}

const SparseMat& delta_basis(const Permutation& w, int n, int k, long dim,
                             const VarSet& vars) {
    auto& per_nk = delta_cache()[{n, k}];
    auto it = per_nk.find(w);
    if (it != per_nk.end()) return it->second;
    SparseMat img = SparseMat::identity(vars, static_cast<int>(dim));
    if (k >= 2) {
        SparseMat base = r_matrix(vars, n);
        for (int i : w.reduced_word()) img = img * lift(i, base, n, k);
    }
    return per_nk.emplace(w, std::move(img)).first->second;
}

}  // namespace

SparseMat delta_n(const HeckeElement& h, int n, int k, long cap) {
    if (h.rank() != k) throw std::invalid_argument("rank mismatch");
    long dim = pow_checked(n, k, cap);
    const VarSet& vars = h.vars();
    SparseMat out(vars, static_cast<int>(dim), static_cast<int>(dim));
    for (const auto& [w, c] : h.coeffs())
        out = out + delta_basis(w, n, k, dim, vars) * c;
    return out;
}

std::vector<RelationCheck> commutant_check(const VarSet& vars, int n, int k,
                                           long cap) {
    pow_checked(n, k, cap);
    GeneratorImages g = tensor_rep(vars, n, k, cap);
    SparseMat base = r_matrix_commutant(vars, n);
    std::vector<RelationCheck> out;
    for (int i = 1; i < k; ++i) {
        SparseMat Ri = lift(i, base, n, k);
        bool pass = true;
        std::string detail;
        auto test = [&](const SparseMat& m, const std::string& gname) {
            if (pass && Ri * m != m * Ri) {
                pass = false;
                detail = gname;
            }
        };
        for (int j = 0; j < n - 1; ++j) {
            std::string js = std::to_string(j + 1);
            test(g.E[j], "E_" + js);
            test(g.F[j], "F_" + js);
            test(g.K[j], "K_" + js);
            test(g.Kp[j], "K'_" + js);
        }
        out.push_back({"R_" + std::to_string(i) + " commutes", pass, detail});
    }
    return out;
}

long span_rank(std::vector<std::vector<RatFunc>> rows,
               std::vector<std::vector<RatFunc>>* reduced) {
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const std::vector<RatFunc>& r) {
                                  for (const auto& x : r)
                                      if (!x.is_zero()) return false;
                                  return true;
                              }),
               rows.end());
    if (rows.empty()) {
        if (reduced) reduced->clear();
        return 0;
    }
    const VarSet& vars = rows[0][0].vars();
    std::vector<Rational> point;
    for (const auto& name : vars.names())
        point.push_back(name == "v" ? Rational(3, 2)
                        : name == "t" ? Rational(5, 7)
                                      : Rational(2));
    std::size_t cols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        // Pivot pre-pass: prefer a row whose entry is visibly nonzero at a
        // rational point; fall back to any symbolically nonzero entry.
        std::size_t pivot = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r) {
            if (rows[r][c].is_zero()) continue;
            if (pivot == rows.size()) pivot = r;
            try {
                if (rows[r][c].eval_rational(point) != 0) {
                    pivot = r;
                    break;
                }
            } catch (const pole_error&) {
            }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        RatFunc inv = rows[rank][c].inv();
        for (std::size_t j = c; j < cols; ++j) rows[rank][j] *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c].is_zero()) continue;
            RatFunc f = rows[r][c];
            for (std::size_t j = c; j < cols; ++j)
                rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    if (reduced) {
        reduced->assign(rows.begin(), rows.begin() + rank);
    }
    return static_cast<long>(rank);
}

Projection project(const HeckeElement& E, int n, int k, long cap) {
    if (E * E != E) throw std::invalid_argument("input is not idempotent");
    SparseMat m = delta_n(E, n, k, cap);
    // Column space: transpose the entry list into row vectors per column.
    std::vector<std::vector<RatFunc>> cols(
        m.cols(), std::vector<RatFunc>(m.rows(), RatFunc::zero(E.vars())));
    for (const auto& [rc, val] : m.entries()) cols[rc.second][rc.first] = val;
    Projection out;
    out.rank = span_rank(std::move(cols), &out.basis);
    return out;
}

DecompositionReport decompose(const VarSet& vars, int n, int k, long cap) {
    DecompositionReport rep;
    rep.n = n;
    rep.k = k;
    rep.expected = pow_checked(n, k, cap);
    for (const Partition& shape : all_partitions(k)) {
        if (shape.num_rows() > n) continue;
        StandardTableau T = standard_tableaux(shape).front();
        Projection p = project(idempotent_inductive(vars, T), n, k, cap);
        long syt = static_cast<long>(standard_tableaux(shape).size());
        rep.components.push_back({shape, syt, p.rank});
        rep.total += syt * p.rank;
    }
    return rep;
}

}  // namespace uvtsw
