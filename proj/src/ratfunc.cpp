#include "uvtsw/ratfunc.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace uvtsw {

// ---------------------------------------------------------------------------
// VarSet

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw std::invalid_argument("empty variable name");
        if (!seen.insert(n).second)
            throw std::invalid_argument("duplicate variable name: " + n);
    }
}

VarSet VarSet::vt() { return VarSet({"v", "t"}); }

VarSet VarSet::vt_u(int k) {
    std::vector<std::string> names = {"v", "t"};
    for (int i = 1; i <= k; ++i) names.push_back("u" + std::to_string(i));
    return VarSet(names);
}

int VarSet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

bool VarSet::contains_all(const VarSet& other) const {
    for (const auto& n : other.names_)
        if (!contains(n)) return false;
    return true;
}

VarSet VarSet::without(const std::string& name) const {
    std::vector<std::string> out;
    for (const auto& n : names_)
        if (n != name) out.push_back(n);
    return VarSet(std::move(out));
}

namespace {

void require_same_vars(const VarSet& a, const VarSet& b) {
    if (!(a == b)) throw var_mismatch_error("variable-set mismatch");
}

}  // namespace

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly MultiPoly::constant(const VarSet& vars, const Rational& c) {
    MultiPoly p(vars);
    p.add_term(Monomial(vars.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const VarSet& vars, const std::string& name, int exp) {
    int idx = vars.index_of(name);
    if (idx < 0) throw var_mismatch_error("unknown variable: " + name);
    if (exp < 0) throw std::invalid_argument("MultiPoly::variable: negative exponent");
    MultiPoly p(vars);
    Monomial m(vars.size(), 0);
    m[idx] = exp;
    p.add_term(m, 1);
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Monomial& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

int MultiPoly::degree(std::size_t var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

int MultiPoly::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
    return d;
}

const std::pair<const Monomial, Rational>& MultiPoly::leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return *terms_.rbegin();
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (m.size() != vars_.size())
        throw std::invalid_argument("monomial arity mismatch");
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    require_same_vars(vars_, o.vars_);
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    require_same_vars(vars_, o.vars_);
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    require_same_vars(vars_, o.vars_);
    MultiPoly r(vars_);
    Monomial m(vars_.size());
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly r(vars_);
    if (c == 0) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::divexact(const MultiPoly& d) const {
    require_same_vars(vars_, d.vars_);
    if (d.is_zero()) throw division_by_zero_error("division by zero polynomial");
    MultiPoly q(vars_);
    MultiPoly r = *this;
    const auto& [md, cd] = d.leading();
    Monomial m(vars_.size());
    while (!r.is_zero()) {
        const auto& [mr, cr] = r.leading();
        for (std::size_t i = 0; i < m.size(); ++i) {
            m[i] = mr[i] - md[i];
            if (m[i] < 0) throw std::logic_error("divexact: not divisible");
        }
        Rational qc = cr / cd;
        q.add_term(m, qc);
        MultiPoly piece(vars_);
        piece.add_term(m, qc);
        r = r - piece * d;
    }
    return q;
}

Rational MultiPoly::content_signed() const {
    if (is_zero()) throw std::logic_error("content of zero polynomial");
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    if (leading().second < 0) content = -content;
    return content;
}

namespace {

// View of a polynomial as univariate in variable `x` with MultiPoly
// coefficients (of x-degree zero, over the same VarSet).
std::map<int, MultiPoly> coeffs_in(const MultiPoly& p, std::size_t x) {
    std::map<int, MultiPoly> out;
    for (const auto& [m, c] : p.terms()) {
        Monomial rest = m;
        int d = rest[x];
        rest[x] = 0;
        auto it = out.find(d);
        if (it == out.end()) it = out.emplace(d, MultiPoly(p.vars())).first;
        it->second.add_term(rest, c);
    }
    return out;
}

MultiPoly from_coeffs(const VarSet& vars, std::size_t x, const std::map<int, MultiPoly>& cs) {
    MultiPoly out(vars);
    for (const auto& [d, coeff] : cs) {
        for (const auto& [m, c] : coeff.terms()) {
            Monomial mm = m;
            mm[x] += d;
            out.add_term(mm, c);
        }
    }
    return out;
}

MultiPoly x_power(const VarSet& vars, std::size_t x, int d) {
    MultiPoly p(vars);
    Monomial m(vars.size(), 0);
    m[x] = d;
    p.add_term(m, 1);
    return p;
}

// Pseudo-remainder of a by b in variable x: lc(b)^(da-db+1) * a mod b.
MultiPoly prem(MultiPoly a, const MultiPoly& b, std::size_t x) {
    int db = b.degree(x);
    auto bc = coeffs_in(b, x);
    const MultiPoly& lb = bc.at(db);
    int da = a.degree(x);
    while (!a.is_zero() && (da = a.degree(x)) >= db) {
        auto ac = coeffs_in(a, x);
        const MultiPoly& la = ac.at(da);
        a = a * lb - b * (la * x_power(a.vars(), x, da - db));
    }
    return a;
}

}  // namespace

namespace {

// Integer content (gcd of coefficients) of an integer-coefficient polynomial.
mpz_class content_z(const MultiPoly& p) {
    mpz_class g = 0;
    for (const auto& [m, c] : p.terms())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    return g;
}

mpz_class maxnorm_z(const MultiPoly& p) {
    mpz_class n = 0;
    for (const auto& [m, c] : p.terms()) {
        mpz_class a = abs(c.get_num());
        if (a > n) n = a;
    }
    return n;
}

bool try_divexact(const MultiPoly& p, const MultiPoly& d, MultiPoly* q_out) {
    MultiPoly q(p.vars());
    MultiPoly r = p;
    const auto& [md, cd] = d.leading();
    Monomial m(p.vars().size());
    while (!r.is_zero()) {
        const auto& [mr, cr] = r.leading();
        for (std::size_t i = 0; i < m.size(); ++i) {
            m[i] = mr[i] - md[i];
            if (m[i] < 0) return false;
        }
        Rational qc = cr / cd;
        q.add_term(m, qc);
        MultiPoly piece(p.vars());
        piece.add_term(m, qc);
        r = r - piece * d;
    }
    if (q_out) *q_out = std::move(q);
    return true;
}

// Substitute an integer for variable x (exact, Horner by degree).
MultiPoly eval_var_z(const MultiPoly& p, std::size_t x, const mpz_class& xi) {
    MultiPoly out(p.vars());
    for (const auto& [m, c] : p.terms()) {
        mpz_class scale;
        mpz_pow_ui(scale.get_mpz_t(), xi.get_mpz_t(), m[x]);
        Monomial mm = m;
        mm[x] = 0;
        out.add_term(mm, c * Rational(scale));
    }
    return out;
}

// Heuristic gcd (integer evaluation + balanced xi-adic reconstruction) on
// integer-coefficient polynomials. Returns false when the evaluation point
// fails; callers retry with a larger point or fall back to the PRS route.
bool gcdheu(const MultiPoly& a, const MultiPoly& b, MultiPoly* out, int depth = 0) {
    const VarSet& vars = a.vars();
    if (a.is_zero() || b.is_zero()) {
        *out = a.is_zero() ? b : a;
        return true;
    }
    // First variable of positive degree in both; gcd is free of all others.
    int x = -1;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (a.degree(i) > 0 && b.degree(i) > 0) {
            x = static_cast<int>(i);
            break;
        }
    }
    if (x < 0) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), content_z(a).get_mpz_t(), content_z(b).get_mpz_t());
        *out = MultiPoly::constant(vars, Rational(g));
        return true;
    }
    if (depth > 12) return false;

    mpz_class na = maxnorm_z(a), nb = maxnorm_z(b);
    mpz_class xi = 2 * (na < nb ? na : nb) + 2;
    int max_deg = std::min(a.degree(x), b.degree(x));
    for (int attempt = 0; attempt < 7; ++attempt, xi = xi * 73794 / 27011) {
        MultiPoly A = eval_var_z(a, x, xi);
        MultiPoly B = eval_var_z(b, x, xi);
        MultiPoly gamma(vars);
        if (!gcdheu(A, B, &gamma, depth + 1)) continue;
        // Balanced xi-adic reconstruction of the gcd in x.
        MultiPoly g(vars);
        mpz_class half = xi / 2;
        int deg = 0;
        bool ok = true;
        MultiPoly e = std::move(gamma);
        while (!e.is_zero()) {
            if (deg > max_deg) {
                ok = false;
                break;
            }
            MultiPoly digit(vars);
            MultiPoly next(vars);
            for (const auto& [m, c] : e.terms()) {
                mpz_class r;
                mpz_fdiv_r(r.get_mpz_t(), c.get_num().get_mpz_t(), xi.get_mpz_t());
                if (r > half) r -= xi;
                if (r != 0) digit.add_term(m, Rational(r));
                mpz_class q = (c.get_num() - r) / xi;
                if (q != 0) next.add_term(m, Rational(q));
            }
            for (const auto& [m, c] : digit.terms()) {
                Monomial mm = m;
                mm[x] = deg;
                g.add_term(mm, c);
            }
            e = std::move(next);
            ++deg;
        }
        if (!ok || g.is_zero()) continue;
        // Do not strip integer content here: for the enclosing level the
        // content of an image encodes the lower variables.
        if (try_divexact(a, g, nullptr) && try_divexact(b, g, nullptr)) {
            *out = std::move(g);
            return true;
        }
    }
    return false;
}

// Primitive PRS gcd, the fallback route.
MultiPoly gcd_prs(const MultiPoly& a, const MultiPoly& b) {
    const VarSet& vars = a.vars();
    std::size_t x = 0;
    while (a.degree(x) == 0 && b.degree(x) == 0) ++x;

    auto content_of = [&](const MultiPoly& p) {
        auto cs = coeffs_in(p, x);
        MultiPoly g(vars);
        for (const auto& [d, c] : cs) g = MultiPoly::gcd(g, c);
        return g;
    };

    MultiPoly ca = content_of(a), cb = content_of(b);
    MultiPoly cont = MultiPoly::gcd(ca, cb);
    if (a.degree(x) == 0 || b.degree(x) == 0) return cont;

    MultiPoly r0 = a.divexact(ca), r1 = b.divexact(cb);
    if (r0.degree(x) < r1.degree(x)) std::swap(r0, r1);
    while (!r1.is_zero()) {
        MultiPoly r2 = prem(r0, r1, x);
        if (!r2.is_zero()) r2 = r2.divexact(content_of(r2));
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    if (r0.degree(x) > 0) r0 = r0.divexact(content_of(r0));
    return cont * r0;
}

}  // namespace

MultiPoly MultiPoly::gcd(const MultiPoly& a, const MultiPoly& b) {
    require_same_vars(a.vars_, b.vars_);
    const VarSet& vars = a.vars_;
    auto canonical = [](const MultiPoly& p) {
        return p * (Rational(1) / p.content_signed());
    };
    if (a.is_zero() && b.is_zero()) return MultiPoly(vars);
    if (a.is_zero()) return canonical(b);
    if (b.is_zero()) return canonical(a);
    if (a.is_constant() || b.is_constant()) return constant(vars, 1);

    MultiPoly pa = canonical(a), pb = canonical(b);
    if (pa == pb) return pa;

    // Split off the monomial content (per-variable minimum exponents) first;
    // it is the dominant common factor in practice and keeps the recursive
    // work on content-free parts.
    auto min_exps = [&](const MultiPoly& p) {
        Monomial m(vars.size(), 0);
        bool first = true;
        for (const auto& [mm, c] : p.terms()) {
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] = first ? mm[i] : std::min(m[i], mm[i]);
            first = false;
        }
        return m;
    };
    Monomial ma = min_exps(pa), mb = min_exps(pb);
    Monomial mg(vars.size());
    bool shift = false;
    for (std::size_t i = 0; i < mg.size(); ++i) {
        mg[i] = std::min(ma[i], mb[i]);
        if (ma[i] || mb[i]) shift = true;
    }
    if (shift) {
        auto strip = [&](const MultiPoly& p, const Monomial& m) {
            MultiPoly out(vars);
            for (const auto& [mm, c] : p.terms()) {
                Monomial s = mm;
                for (std::size_t i = 0; i < s.size(); ++i) s[i] -= m[i];
                out.add_term(s, c);
            }
            return out;
        };
        MultiPoly mono(vars);
        mono.add_term(mg, 1);
        return mono * gcd(strip(pa, ma), strip(pb, mb));
    }

    // One of the inputs often divides the other outright (shared structured
    // denominators); a single trial division is far cheaper than the
    // evaluation route.
    if (pa.terms().size() <= pb.terms().size()) {
        if (try_divexact(pb, pa, nullptr)) return pa;
    } else if (try_divexact(pa, pb, nullptr)) {
        return pb;
    }

    MultiPoly g(vars);
    if (!gcdheu(pa, pb, &g)) g = gcd_prs(pa, pb);
    return canonical(g);
}

MultiPoly MultiPoly::subst(std::size_t var, const MultiPoly& value) const {
    require_same_vars(vars_, value.vars());
    auto cs = coeffs_in(*this, var);
    // Horner from the top degree down.
    MultiPoly acc(vars_);
    int prev = -1;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        if (prev >= 0)
            for (int i = 0; i < prev - it->first; ++i) acc = acc * value;
        acc = acc + it->second;
        prev = it->first;
    }
    if (prev > 0)
        for (int i = 0; i < prev; ++i) acc = acc * value;
    return acc;
}

MultiPoly MultiPoly::to_vars(const VarSet& target) const {
    MultiPoly out(target);
    std::vector<int> map_idx(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i)
        map_idx[i] = target.index_of(vars_.name(i));
    for (const auto& [m, c] : terms_) {
        Monomial mm(target.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (map_idx[i] < 0)
                throw var_mismatch_error("variable " + vars_.name(i) +
                                         " not present in target VarSet");
            mm[map_idx[i]] = m[i];
        }
        out.add_term(mm, c);
    }
    return out;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size())
        throw std::invalid_argument("evaluation point arity mismatch");
    Rational out = 0;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (int e = 0; e < m[i]; ++e) term *= point[i];
        }
        out += term;
    }
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending lex order, leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_.name(i);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) {
            os << ac.get_str();
        } else if (ac == 1) {
            os << mono;
        } else {
            os << ac.get_str() << "*" << mono;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(MultiPoly num)
    : num_(std::move(num)), den_(MultiPoly::constant(num_.vars(), 1)) {
    reduce();
}

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    require_same_vars(num_.vars(), den_.vars());
    if (den_.is_zero()) throw division_by_zero_error("zero denominator");
    reduce();
}

RatFunc RatFunc::zero(const VarSet& vars) { return RatFunc(MultiPoly(vars)); }

RatFunc RatFunc::one(const VarSet& vars) { return constant(vars, 1); }

RatFunc RatFunc::constant(const VarSet& vars, const Rational& c) {
    return RatFunc(MultiPoly::constant(vars, c));
}

RatFunc RatFunc::variable(const VarSet& vars, const std::string& name, int exp) {
    if (exp < 0) return RatFunc(MultiPoly::constant(vars, 1),
                                MultiPoly::variable(vars, name, -exp));
    return RatFunc(MultiPoly::variable(vars, name, exp));
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(num_.vars(), 1);
        return;
    }
    MultiPoly g = MultiPoly::gcd(num_, den_);
    if (!g.is_constant() || g.constant_value() != 1) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    Rational c = den_.content_signed();
    if (c != 1) {
        Rational ic = Rational(1) / c;
        num_ = num_ * ic;
        den_ = den_ * ic;
    }
}

bool RatFunc::is_one() const { return num_.is_constant() && den_.is_constant() &&
                                      !num_.is_zero() && num_.constant_value() == den_.constant_value(); }

RatFunc RatFunc::operator+(const RatFunc& o) const {
    require_same_vars(vars(), o.vars());
    // Work with the denominator cofactors so the final reduction only has to
    // cancel against the shared part.
    MultiPoly d = MultiPoly::gcd(den_, o.den_);
    MultiPoly da = den_.divexact(d), db = o.den_.divexact(d);
    return RatFunc(num_ * db + o.num_ * da, da * db * d);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    require_same_vars(vars(), o.vars());
    if (is_zero() || o.is_zero()) return zero(vars());
    MultiPoly g1 = MultiPoly::gcd(num_, o.den_);
    MultiPoly g2 = MultiPoly::gcd(o.num_, den_);
    return RatFunc(num_.divexact(g1) * o.num_.divexact(g2),
                   den_.divexact(g2) * o.den_.divexact(g1));
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw division_by_zero_error("division by zero");
    return *this * o.inv();
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw division_by_zero_error("inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    RatFunc acc = one(vars());
    RatFunc base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool RatFunc::operator==(const RatFunc& o) const {
    // Canonical forms make this structural.
    return num_ == o.num_ && den_ == o.den_;
}

bool RatFunc::operator<(const RatFunc& o) const {
    if (num_.terms() != o.num_.terms())
        return num_.terms() < o.num_.terms();
    return den_.terms() < o.den_.terms();
}

RatFunc RatFunc::substitute(const std::string& name, const RatFunc& value) const {
    int idx = vars().index_of(name);
    if (idx < 0) throw var_mismatch_error("substitute: unknown variable " + name);
    VarSet target = vars().without(name);
    if (!target.contains_all(value.vars()))
        throw var_mismatch_error("substitute: value uses variables outside the target set");
    RatFunc val = value.to_vars(target);

    auto specialize = [&](const MultiPoly& p) {
        auto cs = coeffs_in(p, static_cast<std::size_t>(idx));
        RatFunc acc = RatFunc::zero(target);
        RatFunc power = RatFunc::one(target);
        int prev = 0;
        for (const auto& [d, coeff] : cs) {
            for (int i = prev; i < d; ++i) power = power * val;
            prev = d;
            // coeff has zero exponent in idx; drop that slot
            MultiPoly cp(target);
            for (const auto& [m, c] : coeff.terms()) {
                Monomial mm;
                mm.reserve(m.size() - 1);
                for (std::size_t i = 0; i < m.size(); ++i)
                    if (static_cast<int>(i) != idx) mm.push_back(m[i]);
                cp.add_term(mm, c);
            }
            acc += RatFunc(cp) * power;
        }
        return acc;
    };

    RatFunc n = specialize(num_);
    RatFunc d = specialize(den_);
    if (d.is_zero()) throw pole_error("pole: denominator vanishes under substitution of " + name);
    return n / d;
}

RatFunc RatFunc::to_vars(const VarSet& target) const {
    return RatFunc(num_.to_vars(target), den_.to_vars(target));
}

Rational RatFunc::eval_rational(const std::vector<Rational>& point) const {
    Rational d = den_.eval(point);
    if (d == 0) throw pole_error("pole at evaluation point");
    return num_.eval(point) / d;
}

std::string RatFunc::str() const {
    if (den_.is_constant() && den_.constant_value() == 1) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------------------
// Parser: expr := term (('+'|'-') term)* ; term := factor (('*'|'/') factor)* ;
// factor := '-'* primary ('^' signed-int)? ; primary := name | int | '(' expr ')'

namespace {

struct Parser {
    const VarSet& vars;
    const std::string& s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }

    RatFunc expr() {
        RatFunc r = term();
        for (;;) {
            if (eat('+')) r += term();
            else if (eat('-')) r -= term();
            else return r;
        }
    }

    RatFunc term() {
        RatFunc r = factor();
        for (;;) {
            if (eat('*')) r *= factor();
            else if (eat('/')) r = r / factor();
            else return r;
        }
    }

    RatFunc factor() {
        bool neg = false;
        while (eat('-')) neg = !neg;
        RatFunc r = primary();
        if (eat('^')) r = r.pow(integer());
        return neg ? -r : r;
    }

    long integer() {
        skip();
        bool neg = eat('-');
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw parse_error("expected integer at position " + std::to_string(pos));
        long x = std::stol(s.substr(start, pos - start));
        return neg ? -x : x;
    }

    RatFunc primary() {
        char c = peek();
        if (c == '(') {
            eat('(');
            RatFunc r = expr();
            if (!eat(')')) throw parse_error("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return RatFunc::constant(vars, Rational(s.substr(start, pos - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            if (!vars.contains(name)) throw parse_error("unknown variable: " + name);
            return RatFunc::variable(vars, name);
        }
        throw parse_error("unexpected character at position " + std::to_string(pos));
    }
};

}  // namespace

RatFunc RatFunc::parse(const VarSet& vars, const std::string& text) {
    Parser p{vars, text};
    RatFunc r = p.expr();
    p.skip();
    if (p.pos != text.size()) throw parse_error("trailing input at position " + std::to_string(p.pos));
    return r;
}

}  // namespace uvtsw
