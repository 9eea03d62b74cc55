#pragma once

#include "uvtsw/combinatorics.hpp"
#include "uvtsw/ratfunc.hpp"

#include <map>
#include <string>

// The two-parameter Hecke algebra H_k(v,t) in the T_w basis, with its
// Jucys-Murphy elements, longest-element elements, Baxterized generators and
// primitive orthogonal idempotents (inductive and fusion constructions).

namespace uvtsw {

// Finitely supported linear combination of basis elements T_w, w in S_k.
// Coefficients all live over one shared VarSet; zero coefficients are never
// stored.
class HeckeElement {
  public:
    HeckeElement(VarSet vars, int k) : vars_(std::move(vars)), k_(k) {}

    static HeckeElement zero(const VarSet& vars, int k);
    static HeckeElement one(const VarSet& vars, int k);
    // The basis element T_w (coefficient 1 at w).
    static HeckeElement basis(const VarSet& vars, const Permutation& w);

    const VarSet& vars() const { return vars_; }
    int rank() const { return k_; }
    const std::map<Permutation, RatFunc>& coeffs() const { return coeffs_; }
    RatFunc coeff(const Permutation& w) const;

    bool is_zero() const { return coeffs_.empty(); }

    void add_term(const Permutation& w, const RatFunc& c);

    HeckeElement operator+(const HeckeElement& o) const;
    HeckeElement operator-(const HeckeElement& o) const;
    HeckeElement operator-() const;
    HeckeElement operator*(const HeckeElement& o) const;
    HeckeElement operator*(const RatFunc& c) const;

    bool operator==(const HeckeElement& o) const;
    bool operator!=(const HeckeElement& o) const { return !(*this == o); }

    // Re-express every coefficient over another VarSet.
    HeckeElement to_vars(const VarSet& target) const;
    // Specialize one variable in every coefficient (result drops it).
    HeckeElement substitute(const std::string& name, const RatFunc& value) const;

    // "(2,1): v*t; (1,2): 1" style listing, basis words in map order.
    std::string str() const;

  private:
    // this * T_i, via the length rule.
    HeckeElement times_generator(int i) const;

    VarSet vars_;
    int k_ = 0;
    std::map<Permutation, RatFunc> coeffs_;
};

// T_{s_i}, 1 <= i < k.
HeckeElement hecke_generator(const VarSet& vars, int k, int i);
// T_i^{-1} = t^{-2} T_i + (v - v^{-1}) t^{-1}.
HeckeElement hecke_generator_inverse(const VarSet& vars, int k, int i);
// T_w^{-1} as a product of generator inverses along a reduced word.
HeckeElement invert_basis_element(const VarSet& vars, const Permutation& w);

// Jucys-Murphy element y_i from the recursion y_1 = 1, y_{i+1} = t^{-2} T_i y_i T_i.
HeckeElement jm_element(const VarSet& vars, int k, int i);
// Closed form y_i = 1 + (v^{-1}-v) sum_{m<i} t^{-l((m i))} T_{(m i)} where
// l((m i)) = 2(i-m)-1 is the Coxeter length of the transposition.
HeckeElement jm_expanded(const VarSet& vars, int k, int i);

// T_{w_i}, the basis element of the longest word of S_i inside S_k.
HeckeElement t_longest(const VarSet& vars, int k, int i);

// Baxterized generator T_i(x,y) = t^{-1} T_i + ((v^{-1}-v) x/(y-x)) 1.
// x, y must be distinct rational functions over `vars` (which contains v,t).
HeckeElement baxterized(const VarSet& vars, int k, int i, const RatFunc& x,
                        const RatFunc& y);

// Fusion element Psi(u_1..u_k) over Q(v,t,u_1..u_k):
//   prod_{i=1..k-1} ( T_i(u_1,u_{i+1}) T_{i-1}(u_2,u_{i+1}) ... T_1(u_i,u_{i+1}) )
//   * T_{w_k}^{-1},  product taken left to right in i.
HeckeElement psi(int k);

// Primitive idempotent E^lambda_T by the content-quotient recursion on the
// tableau with its top entry removed.
HeckeElement idempotent_inductive(const VarSet& vars, const StandardTableau& T);
// The same idempotent as f(lambda) * Psi evaluated consecutively at
// u_j = content of the cell of j in T, j = 1..k in order.
HeckeElement idempotent_fusion(const VarSet& vars, const StandardTableau& T);

}  // namespace uvtsw
