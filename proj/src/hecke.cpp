#include "uvtsw/hecke.hpp"

#include <sstream>

namespace uvtsw {

HeckeElement HeckeElement::zero(const VarSet& vars, int k) {
    return HeckeElement(vars, k);
}

HeckeElement HeckeElement::one(const VarSet& vars, int k) {
    return basis(vars, Permutation::identity(k));
}

HeckeElement HeckeElement::basis(const VarSet& vars, const Permutation& w) {
    HeckeElement e(vars, w.size());
    e.coeffs_.emplace(w, RatFunc::one(vars));
    return e;
}

RatFunc HeckeElement::coeff(const Permutation& w) const {
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? RatFunc::zero(vars_) : it->second;
}

void HeckeElement::add_term(const Permutation& w, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
    if (k_ != o.k_) throw std::invalid_argument("rank mismatch");
    HeckeElement out = *this;
    for (const auto& [w, c] : o.coeffs_) out.add_term(w, c);
    return out;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const { return *this + (-o); }

HeckeElement HeckeElement::operator-() const {
    HeckeElement out(vars_, k_);
    for (const auto& [w, c] : coeffs_) out.coeffs_.emplace(w, -c);
    return out;
}

HeckeElement HeckeElement::operator*(const RatFunc& c) const {
    HeckeElement out(vars_, k_);
    if (c.is_zero()) return out;
    for (const auto& [w, cw] : coeffs_) out.coeffs_.emplace(w, cw * c);
    return out;
}

HeckeElement HeckeElement::times_generator(int i) const {
    // T_w T_i = T_{w s_i} when the length goes up, else
    // (v^{-1} - v) t T_w + t^2 T_{w s_i}.
    RatFunc v = RatFunc::variable(vars_, "v");
    RatFunc t = RatFunc::variable(vars_, "t");
    RatFunc quad = (v.inv() - v) * t;   // coefficient of the stay term
    RatFunc tsq = t * t;
    Permutation si = Permutation::simple(k_, i);
    HeckeElement out(vars_, k_);
    for (const auto& [w, c] : coeffs_) {
        Permutation wsi = w * si;
        if (wsi.length() > w.length()) {
            out.add_term(wsi, c);
        } else {
            out.add_term(w, c * quad);
            out.add_term(wsi, c * tsq);
        }
    }
    return out;
}

HeckeElement HeckeElement::operator*(const HeckeElement& o) const {
    if (k_ != o.k_) throw std::invalid_argument("rank mismatch");
    HeckeElement out(vars_, k_);
    for (const auto& [w, c] : o.coeffs_) {
        HeckeElement part = *this;
        for (int i : w.reduced_word()) part = part.times_generator(i);
        out = out + part * c;
    }
    return out;
}

bool HeckeElement::operator==(const HeckeElement& o) const {
    return k_ == o.k_ && coeffs_ == o.coeffs_;
}

HeckeElement HeckeElement::to_vars(const VarSet& target) const {
    HeckeElement out(target, k_);
    for (const auto& [w, c] : coeffs_) out.coeffs_.emplace(w, c.to_vars(target));
    return out;
}

HeckeElement HeckeElement::substitute(const std::string& name, const RatFunc& value) const {
    HeckeElement out(vars_.without(name), k_);
    for (const auto& [w, c] : coeffs_) out.add_term(w, c.substitute(name, value));
    return out;
}

std::string HeckeElement::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : coeffs_) {
        if (!first) os << "; ";
        os << w.str() << ": " << c.str();
        first = false;
    }
    return os.str();
}

HeckeElement hecke_generator(const VarSet& vars, int k, int i) {
    return HeckeElement::basis(vars, Permutation::simple(k, i));
}

HeckeElement hecke_generator_inverse(const VarSet& vars, int k, int i) {
    RatFunc v = RatFunc::variable(vars, "v");
    RatFunc t = RatFunc::variable(vars, "t");
    return hecke_generator(vars, k, i) * t.pow(-2) +
           HeckeElement::one(vars, k) * ((v - v.inv()) * t.inv());
}

HeckeElement invert_basis_element(const VarSet& vars, const Permutation& w) {
    int k = w.size();
    HeckeElement out = HeckeElement::one(vars, k);
    std::vector<int> word = w.reduced_word();
    // (T_{i_1} ... T_{i_l})^{-1} = T_{i_l}^{-1} ... T_{i_1}^{-1}
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        out = out * hecke_generator_inverse(vars, k, *it);
    return out;
}

HeckeElement jm_element(const VarSet& vars, int k, int i) {
    if (i < 1 || i > k) throw std::out_of_range("JM index out of range");
    RatFunc t2inv = RatFunc::variable(vars, "t").pow(-2);
    HeckeElement y = HeckeElement::one(vars, k);
    for (int m = 1; m < i; ++m) {
        HeckeElement tm = hecke_generator(vars, k, m);
        y = (tm * y * tm) * t2inv;
    }
    return y;
}

HeckeElement jm_expanded(const VarSet& vars, int k, int i) {
    if (i < 1 || i > k) throw std::out_of_range("JM index out of range");
    RatFunc v = RatFunc::variable(vars, "v");
    RatFunc t = RatFunc::variable(vars, "t");
    // Each transposition enters with weight t^{-l((m i))}, l((m i)) = 2(i-m)-1.
    RatFunc coef = v.inv() - v;
    HeckeElement y = HeckeElement::one(vars, k);
    for (int m = 1; m < i; ++m)
        y.add_term(Permutation::transposition(k, m, i),
                   coef * t.pow(-(2L * (i - m) - 1)));
    return y;
}

HeckeElement t_longest(const VarSet& vars, int k, int i) {
    return HeckeElement::basis(vars, Permutation::longest_element(k, i));
}

HeckeElement baxterized(const VarSet& vars, int k, int i, const RatFunc& x,
                        const RatFunc& y) {
    if (x == y) throw division_by_zero_error("baxterized factor at x = y");
    RatFunc v = RatFunc::variable(vars, "v");
    RatFunc t = RatFunc::variable(vars, "t");
    return hecke_generator(vars, k, i) * t.inv() +
           HeckeElement::one(vars, k) * ((v.inv() - v) * x / (y - x));
}

HeckeElement psi(int k) {
    // Tableau-independent; cache per rank (the dominant cost of the fusion
    // construction).
    static std::map<int, HeckeElement> cache;
    if (auto it = cache.find(k); it != cache.end()) return it->second;
    VarSet vars = VarSet::vt_u(k);
    auto u = [&](int j) { return RatFunc::variable(vars, "u" + std::to_string(j)); };
    HeckeElement out = HeckeElement::one(vars, k);
    for (int i = 1; i <= k - 1; ++i)
        for (int j = i; j >= 1; --j)
            out = out * baxterized(vars, k, j, u(i - j + 1), u(i + 1));
    out = out * invert_basis_element(vars, Permutation::longest_element(k, k));
    return cache.emplace(k, std::move(out)).first->second;
}

HeckeElement idempotent_inductive(const VarSet& vars, const StandardTableau& T) {
    int k = T.size();
    if (k == 1) return HeckeElement::one(vars, 1);
    StandardTableau U = T.remove_top();
    Partition mu = U.shape();
    Cell alpha = T.cell_of(k);
    RatFunc sigma = cell_content(vars, alpha);
    HeckeElement e = idempotent_inductive(vars, U);
    // Embed E_U into H_k (S_{k-1} < S_k fixing k).
    HeckeElement embedded(vars, k);
    for (const auto& [w, c] : e.coeffs()) {
        std::vector<int> img = w.images();
        img.push_back(k);
        embedded.add_term(Permutation(std::move(img)), c);
    }
    HeckeElement yk = jm_element(vars, k, k);
    HeckeElement out = embedded;
    RatFunc denom = RatFunc::one(vars);
    for (Cell c : mu.addable_cells()) {
        if (c == alpha) continue;
        RatFunc rho = cell_content(vars, c);
        out = out * (yk - HeckeElement::one(vars, k) * rho);
        denom *= sigma - rho;
    }
    return out * denom.inv();
}

HeckeElement idempotent_fusion(const VarSet& vars, const StandardTableau& T) {
    int k = T.size();
    HeckeElement e = psi(k);
    // Evaluate u_1, ..., u_k consecutively at the contents of T, fully
    // reducing after each substitution.
    for (int j = 1; j <= k; ++j) {
        const VarSet& cur = e.vars();
        std::string name = "u" + std::to_string(j);
        RatFunc sigma = cell_content(cur.without(name), T.cell_of(j));
        e = e.substitute(name, sigma);
    }
    return e.to_vars(vars) * f_lambda(vars, T.shape());
}

}  // namespace uvtsw
