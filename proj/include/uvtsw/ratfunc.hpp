#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

// Exact arithmetic in Q(x_1,...,x_m): multivariate polynomials with
// arbitrary-precision rational coefficients and reduced fractions thereof.
// Values are immutable after construction and safe to share across threads.

namespace uvtsw {

using Rational = mpq_class;

struct var_mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct division_by_zero_error : std::domain_error {
    using std::domain_error::domain_error;
};
struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};
struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Ordered set of distinct variable names. The order is fixed at construction
// and induces the canonical (lexicographic) monomial order used everywhere.
class VarSet {
  public:
    VarSet() = default;
    explicit VarSet(std::vector<std::string> names);

    static VarSet vt();           // {v, t}
    static VarSet vt_u(int k);    // {v, t, u1, ..., uk}

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    // Index of a variable, or -1 if absent.
    int index_of(const std::string& name) const;
    bool contains(const std::string& name) const { return index_of(name) >= 0; }
    bool contains_all(const VarSet& other) const;
    VarSet without(const std::string& name) const;

    bool operator==(const VarSet&) const = default;

  private:
    std::vector<std::string> names_;
};

// Exponent vector, one entry per variable of the owning VarSet.
using Monomial = std::vector<int>;

// Multivariate polynomial over Q. Terms are kept in a map ordered by the
// canonical lex order on exponent vectors; zero coefficients are never stored.
class MultiPoly {
  public:
    MultiPoly() = default;
    explicit MultiPoly(VarSet vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(const VarSet& vars, const Rational& c);
    static MultiPoly variable(const VarSet& vars, const std::string& name, int exp = 1);

    const VarSet& vars() const { return vars_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Value of a constant polynomial (zero polynomial gives 0).
    Rational constant_value() const;

    int degree(std::size_t var) const;
    int total_degree() const;

    // Leading term in lex order. Polynomial must be nonzero.
    const std::pair<const Monomial, Rational>& leading() const;

    void add_term(const Monomial& m, const Rational& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const Rational& c) const;

    bool operator==(const MultiPoly& o) const;

    // Exact division; throws division_by_zero_error on zero divisor and
    // std::logic_error when the division is not exact.
    MultiPoly divexact(const MultiPoly& d) const;

    // gcd up to a rational unit; the result is primitive over Z with positive
    // leading coefficient (gcd with 0 returns the other argument normalized).
    static MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

    // Rational c such that (*this)/c has coprime integer coefficients and a
    // positive leading one. Polynomial must be nonzero.
    Rational content_signed() const;

    // Substitute one variable by a polynomial over the same VarSet.
    MultiPoly subst(std::size_t var, const MultiPoly& value) const;

    // Re-express over another VarSet; every used variable must exist there.
    MultiPoly to_vars(const VarSet& target) const;

    Rational eval(const std::vector<Rational>& point) const;

    std::string str() const;

  private:
    VarSet vars_;
    std::map<Monomial, Rational> terms_;
};

// Reduced fraction of two MultiPoly over one VarSet. Invariants: den != 0,
// gcd(num, den) is a unit, den is primitive over Z with positive leading
// coefficient; zero is 0/1.
class RatFunc {
  public:
    RatFunc() = default;
    explicit RatFunc(MultiPoly num);
    RatFunc(MultiPoly num, MultiPoly den);

    static RatFunc zero(const VarSet& vars);
    static RatFunc one(const VarSet& vars);
    static RatFunc constant(const VarSet& vars, const Rational& c);
    static RatFunc variable(const VarSet& vars, const std::string& name, int exp = 1);

    const VarSet& vars() const { return num_.vars(); }
    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc inv() const;
    RatFunc pow(long e) const;

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }
    // Total order for use as a map key; consistent with ==.
    bool operator<(const RatFunc& o) const;

    // Exact specialization of one variable. The result lives over the VarSet
    // with `name` removed; `value` must be expressible over that VarSet.
    // Throws pole_error when the (reduced) denominator vanishes.
    RatFunc substitute(const std::string& name, const RatFunc& value) const;

    // Re-express over another VarSet containing all used variables.
    RatFunc to_vars(const VarSet& target) const;

    // Exact evaluation at a total rational point, in VarSet order.
    Rational eval_rational(const std::vector<Rational>& point) const;

    // Canonical text form, e.g. "(v^2+1)/(v*t)".
    std::string str() const;

    // Parse the same grammar (+, -, *, /, ^, parentheses, integers, names).
    static RatFunc parse(const VarSet& vars, const std::string& text);

  private:
    void reduce();

    MultiPoly num_, den_;
};

}  // namespace uvtsw
