#include "uvtsw/uvt_rep.hpp"

#include <sstream>

namespace uvtsw {

// ---------------------------------------------------------------------------
// SparseMat

SparseMat SparseMat::identity(const VarSet& vars, int n) {
    SparseMat m(vars, n, n);
    RatFunc one = RatFunc::one(vars);
    for (int i = 0; i < n; ++i) m.entries_.emplace(std::make_pair(i, i), one);
    return m;
}

SparseMat SparseMat::unit(const VarSet& vars, int n, int i, int j) {
    SparseMat m(vars, n, n);
    m.entries_.emplace(std::make_pair(i - 1, j - 1), RatFunc::one(vars));
    return m;
}

RatFunc SparseMat::entry(int r, int c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? RatFunc::zero(vars_) : it->second;
}

void SparseMat::set(int r, int c, const RatFunc& value) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of range");
    if (value.is_zero()) entries_.erase({r, c});
    else entries_[{r, c}] = value;
}

void SparseMat::add(int r, int c, const RatFunc& value) {
    if (value.is_zero()) return;
    auto [it, inserted] = entries_.emplace(std::make_pair(r, c), value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

SparseMat SparseMat::operator+(const SparseMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch");
    SparseMat out = *this;
    for (const auto& [rc, val] : o.entries_) out.add(rc.first, rc.second, val);
    return out;
}

SparseMat SparseMat::operator-(const SparseMat& o) const { return *this + (-o); }

SparseMat SparseMat::operator-() const {
    SparseMat out(vars_, rows_, cols_);
    for (const auto& [rc, val] : entries_) out.entries_.emplace(rc, -val);
    return out;
}

SparseMat SparseMat::operator*(const RatFunc& c) const {
    SparseMat out(vars_, rows_, cols_);
    if (c.is_zero()) return out;
    for (const auto& [rc, val] : entries_) out.entries_.emplace(rc, val * c);
    return out;
}

SparseMat SparseMat::operator*(const SparseMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    // Row-major sparse product: group the right factor's entries by row.
    std::vector<std::vector<std::pair<int, const RatFunc*>>> rows_of_o(o.rows_);
    for (const auto& [rc, val] : o.entries_)
        rows_of_o[rc.first].emplace_back(rc.second, &val);
    SparseMat out(vars_, rows_, o.cols_);
    for (const auto& [rc, val] : entries_)
        for (const auto& [c2, val2] : rows_of_o[rc.second])
            out.add(rc.first, c2, val * *val2);
    return out;
}

bool SparseMat::operator==(const SparseMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

SparseMat SparseMat::kron(const SparseMat& a, const SparseMat& b) {
    SparseMat out(a.vars_, a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (const auto& [rca, va] : a.entries_)
        for (const auto& [rcb, vb] : b.entries_)
            out.entries_.emplace(std::make_pair(rca.first * b.rows_ + rcb.first,
                                                rca.second * b.cols_ + rcb.second),
                                 va * vb);
    return out;
}

std::string SparseMat::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [rc, val] : entries_) {
        if (!first) os << "; ";
        os << "(" << rc.first << "," << rc.second << "): " << val.str();
        first = false;
    }
    return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------
// Cartan datum

CartanDatum::CartanDatum(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("rank must be at least 2");
}

int CartanDatum::bracket(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_)
        throw std::out_of_range("bracket index out of range");
    if (j == n_) return i == n_ ? 1 : 0;            // <i,n> = delta_{in}
    if (i == n_) return j == n_ - 1 ? -1 : 0;       // <n,j>, j < n
    if (i == j) return 1;
    if (i == j + 1) return -1;
    return 0;
}

// ---------------------------------------------------------------------------
// Representations

GeneratorImages natural_rep(const VarSet& vars, int n) {
    if (n < 2) throw std::invalid_argument("rank must be at least 2");
    RatFunc v = RatFunc::variable(vars, "v");
    RatFunc tinv = RatFunc::variable(vars, "t").inv();
    GeneratorImages g;
    g.n = n;
    g.k = 1;
    for (int i = 1; i < n; ++i) {
        g.E.push_back(SparseMat::unit(vars, n, i, i + 1));
        g.F.push_back(SparseMat::unit(vars, n, i + 1, i));
        SparseMat k = SparseMat::identity(vars, n) * tinv;
        k.set(i - 1, i - 1, v);
        k.set(i, i, v.inv());
        SparseMat kp = SparseMat::identity(vars, n) * tinv;
        kp.set(i - 1, i - 1, v.inv());
        kp.set(i, i, v);
        // diagonal inverses
        SparseMat kinv(vars, n, n), kpinv(vars, n, n);
        for (int d = 0; d < n; ++d) {
            kinv.set(d, d, k.entry(d, d).inv());
            kpinv.set(d, d, kp.entry(d, d).inv());
        }
        g.K.push_back(std::move(k));
        g.Kp.push_back(std::move(kp));
        g.Kinv.push_back(std::move(kinv));
        g.Kpinv.push_back(std::move(kpinv));
    }
    return g;
}

RatFunc weight_eigenvalue(const VarSet& vars, const CartanDatum& cd,
                          const Weight& lambda, int i, bool primed) {
    int n = cd.n();
    if (static_cast<int>(lambda.size()) != n)
        throw std::invalid_argument("weight has wrong length");
    if (i < 1 || i >= n) throw std::out_of_range("index out of range");
    long ve = 0, te = -1;
    for (int j = 1; j <= n; ++j) {
        ve += static_cast<long>(lambda[j - 1]) * cd.dot(i, j);
        te += static_cast<long>(lambda[j - 1]) * (cd.bracket(i, j) - cd.bracket(j, i));
    }
    if (primed) ve = -ve;
    return RatFunc::variable(vars, "v").pow(ve) * RatFunc::variable(vars, "t").pow(te);
}

Weight natural_weight(int n, int j) {
    Weight w(n, 0);
    for (int m = j; m <= n; ++m) w[m - 1] = 1;
    return w;
}

GeneratorImages tensor_rep(const VarSet& vars, int n, int k, long cap) {
    if (k < 1) throw std::invalid_argument("tensor level must be positive");
    long dim = 1;
    for (int i = 0; i < k; ++i) {
        dim *= n;
        if (dim > cap) throw std::length_error("tensor space dimension exceeds cap");
    }
    GeneratorImages base = natural_rep(vars, n);
    if (k == 1) return base;
    GeneratorImages g;
    g.n = n;
    g.k = k;
    SparseMat id1 = SparseMat::identity(vars, n);
    for (int j = 1; j < n; ++j) {
        int d = static_cast<int>(dim);
        SparseMat e(vars, d, d), f(vars, d, d);
        for (int pos = 1; pos <= k; ++pos) {
            // E_j at slot pos with K_j to its left and 1 to its right;
            // F_j at slot pos with 1 to its left and K_j' to its right.
            SparseMat eterm = pos == 1 ? base.E[j - 1] : base.K[j - 1];
            SparseMat fterm = pos == 1 ? base.F[j - 1] : id1;
            for (int s = 2; s <= k; ++s) {
                eterm = SparseMat::kron(eterm, s < pos    ? base.K[j - 1]
                                               : s == pos ? base.E[j - 1]
                                                          : id1);
                fterm = SparseMat::kron(fterm, s < pos    ? id1
                                               : s == pos ? base.F[j - 1]
                                                          : base.Kp[j - 1]);
            }
            e = e + eterm;
            f = f + fterm;
        }
        auto power = [&](const SparseMat& m) {
            SparseMat out = m;
            for (int s = 2; s <= k; ++s) out = SparseMat::kron(out, m);
            return out;
        };
        g.E.push_back(std::move(e));
        g.F.push_back(std::move(f));
        g.K.push_back(power(base.K[j - 1]));
        g.Kinv.push_back(power(base.Kinv[j - 1]));
        g.Kp.push_back(power(base.Kp[j - 1]));
        g.Kpinv.push_back(power(base.Kpinv[j - 1]));
    }
    return g;
}

// ---------------------------------------------------------------------------
// Relation checker

namespace {

void record(std::vector<RelationCheck>& out, const std::string& name, bool pass,
            const std::string& detail) {
    out.push_back({name, pass, pass ? "" : detail});
}

}  // namespace

std::vector<RelationCheck> check_relations(const GeneratorImages& g) {
    const VarSet& vars = g.E.at(0).vars();
    CartanDatum cd(g.n);
    RatFunc v = RatFunc::variable(vars, "v");
    RatFunc t = RatFunc::variable(vars, "t");
    int m = g.n - 1;
    std::vector<RelationCheck> out;

    // (R1): torus elements commute, K_i K_i^{-1} = 1
    {
        bool pass = true;
        std::string detail;
        int dim = g.K[0].rows();
        SparseMat id = SparseMat::identity(vars, dim);
        for (int i = 0; i < m && pass; ++i)
            for (int j = 0; j < m && pass; ++j) {
                if (g.K[i] * g.K[j] != g.K[j] * g.K[i]) {
                    pass = false;
                    detail = "K_" + std::to_string(i + 1) + " K_" + std::to_string(j + 1);
                } else if (g.Kp[i] * g.Kp[j] != g.Kp[j] * g.Kp[i]) {
                    pass = false;
                    detail = "K'_" + std::to_string(i + 1) + " K'_" + std::to_string(j + 1);
                } else if (g.K[i] * g.Kp[j] != g.Kp[j] * g.K[i]) {
                    pass = false;
                    detail = "K_" + std::to_string(i + 1) + " K'_" + std::to_string(j + 1);
                }
            }
        for (int i = 0; i < m && pass; ++i)
            if (g.K[i] * g.Kinv[i] != id || g.Kp[i] * g.Kpinv[i] != id) {
                pass = false;
                detail = "K_" + std::to_string(i + 1) + " inverse";
            }
        record(out, "R1", pass, detail);
    }

    // (R2): torus conjugation scales E_j, F_j by Cartan-datum v,t powers
    {
        bool pass = true;
        std::string detail;
        for (int i = 1; i <= m && pass; ++i)
            for (int j = 1; j <= m && pass; ++j) {
                RatFunc scale = v.pow(cd.dot(i, j)) *
                                t.pow(cd.bracket(i, j) - cd.bracket(j, i));
                if (g.K[i - 1] * g.E[j - 1] * g.Kinv[i - 1] != g.E[j - 1] * scale) {
                    pass = false;
                    detail = "K E conjugation at i=" + std::to_string(i) +
                             " j=" + std::to_string(j);
                } else if (g.Kp[i - 1] * g.E[j - 1] * g.Kpinv[i - 1] !=
                           g.E[j - 1] * (v.pow(-cd.dot(i, j)) *
                                         t.pow(cd.bracket(i, j) - cd.bracket(j, i)))) {
                    pass = false;
                    detail = "K' E conjugation at i=" + std::to_string(i) +
                             " j=" + std::to_string(j);
                } else if (g.K[i - 1] * g.F[j - 1] * g.Kinv[i - 1] !=
                           g.F[j - 1] * (v.pow(-cd.dot(i, j)) *
                                         t.pow(cd.bracket(j, i) - cd.bracket(i, j)))) {
                    pass = false;
                    detail = "K F conjugation at i=" + std::to_string(i) +
                             " j=" + std::to_string(j);
                } else if (g.Kp[i - 1] * g.F[j - 1] * g.Kpinv[i - 1] !=
                           g.F[j - 1] * (v.pow(cd.dot(i, j)) *
                                         t.pow(cd.bracket(j, i) - cd.bracket(i, j)))) {
                    pass = false;
                    detail = "K' F conjugation at i=" + std::to_string(i) +
                             " j=" + std::to_string(j);
                }
            }
        record(out, "R2", pass, detail);
    }

    // (R3): E_i F_j - F_j E_i = delta_ij (K_i - K_i')/(v - v^{-1})
    {
        bool pass = true;
        std::string detail;
        RatFunc denom = (v - v.inv()).inv();
        for (int i = 0; i < m && pass; ++i)
            for (int j = 0; j < m && pass; ++j) {
                SparseMat lhs = g.E[i] * g.F[j] - g.F[j] * g.E[i];
                SparseMat rhs = i == j ? (g.K[i] - g.Kp[i]) * denom
                                       : SparseMat(vars, lhs.rows(), lhs.cols());
                if (lhs != rhs) {
                    pass = false;
                    detail = "i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1);
                }
            }
        record(out, "R3", pass, detail);
    }

    // (R4): distant E's and F's commute
    {
        bool pass = true;
        std::string detail;
        for (int i = 0; i < m && pass; ++i)
            for (int j = i + 2; j < m && pass; ++j)
                if (g.E[i] * g.E[j] != g.E[j] * g.E[i] ||
                    g.F[i] * g.F[j] != g.F[j] * g.F[i]) {
                    pass = false;
                    detail = "i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1);
                }
        record(out, "R4", pass, detail);
    }

    // (R5)/(R6): Serre relations with coefficients t(v+v^{-1}), t^{-1}(v+v^{-1})
    RatFunc ce = t * (v + v.inv());
    RatFunc cf = t.inv() * (v + v.inv());
    {
        bool pass = true;
        std::string detail;
        for (int i = 0; i + 1 < m && pass; ++i) {
            const SparseMat &a = g.E[i], &b = g.E[i + 1];
            if (!(a * a * b - a * b * a * ce + b * a * a * (t * t)).is_zero() ||
                !(a * b * b - b * a * b * ce + b * b * a * (t * t)).is_zero()) {
                pass = false;
                detail = "i=" + std::to_string(i + 1);
            }
        }
        record(out, "R5", pass, detail);
    }
    {
        bool pass = true;
        std::string detail;
        for (int i = 0; i + 1 < m && pass; ++i) {
            const SparseMat &a = g.F[i], &b = g.F[i + 1];
            RatFunc t2inv = t.pow(-2);
            if (!(a * a * b - a * b * a * cf + b * a * a * t2inv).is_zero() ||
                !(a * b * b - b * a * b * cf + b * b * a * t2inv).is_zero()) {
                pass = false;
                detail = "i=" + std::to_string(i + 1);
            }
        }
        record(out, "R6", pass, detail);
    }
    return out;
}

bool all_pass(const std::vector<RelationCheck>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Weight decomposition

std::map<Weight, std::vector<int>> weight_decomposition(int n, int k) {
    long dim = 1;
    for (int i = 0; i < k; ++i) dim *= n;
    std::map<Weight, std::vector<int>> out;
    for (long idx = 0; idx < dim; ++idx) {
        // idx encodes (i_1, ..., i_k) base n, last factor fastest.
        Weight w(n, 0);
        long rest = idx;
        for (int s = k - 1; s >= 0; --s) {
            int factor = static_cast<int>(rest % n) + 1;
            rest /= n;
            for (int m = factor; m <= n; ++m) w[m - 1] += 1;
        }
        out[w].push_back(static_cast<int>(idx));
    }
    return out;
}

}  // namespace uvtsw
