#pragma once

#include "uvtsw/hecke.hpp"
#include "uvtsw/uvt_rep.hpp"

// Both R-matrices on V_n x V_n, their lifts R_i to V_n^{otimes k}, the induced
// Hecke-algebra action, commutant verification against the quantum-group
// action, and the Schur-Weyl decomposition via idempotent projectors.

namespace uvtsw {

// Rtilde = sum_{i<j} vt E_ji x E_ij + vt^{-1} E_ij x E_ji
//        + t^{-1}(1-v^2) E_jj x E_ii + sum_i E_ii x E_ii.
SparseMat rtilde(const VarSet& vars, int n);

// R = sum_{i<j} t^2 E_ji x E_ij + E_ij x E_ji + (v^{-1}-v)t E_jj x E_ii
//   + v^{-1}t sum_i E_ii x E_ii.
SparseMat r_matrix(const VarSet& vars, int n);

// vt^{-1} R: the unit-diagonal rescaling of r_matrix.  It agrees with rtilde
// except in the lower-diagonal correction, (1-v^2) instead of t^{-1}(1-v^2),
// and unlike rtilde it satisfies the braid relations (scalar multiples of
// r_matrix inherit them).
SparseMat rtilde_braided(const VarSet& vars, int n);

// Diagonal weight gauge S = diag(1, t^{-1}, ..., t^{1-n}) on V_n.
SparseMat weight_gauge(const VarSet& vars, int n);

// (S x 1) R (S x 1)^{-1}: sum_{i<j} t^{2-(j-i)} E_ji x E_ij
//   + t^{j-i} E_ij x E_ji + (v^{-1}-v)t E_jj x E_ii + v^{-1}t sum E_ii x E_ii.
// Same braid relations and Hecke quadratic as r_matrix; this is the member of
// the conjugacy class that commutes with the tensor quantum-group action.
SparseMat r_matrix_commutant(const VarSet& vars, int n);

// base acting on tensor factors (i, i+1) of V_n^{otimes k}, identity elsewhere.
SparseMat lift(int i, const SparseMat& base, int n, int k);

// Yang-Baxter braid relations and distant commutation for the lifted family.
std::vector<RelationCheck> check_braid(const SparseMat& base, int n, int k);

// (M - v^{-1}t I)(M + vt I) = 0 for the given k=2 operator.
RelationCheck check_hecke_quadratic(const SparseMat& base, const std::string& name);

// Algebra map T_i -> R_i extended linearly; basis images cached per (n, k).
SparseMat delta_n(const HeckeElement& h, int n, int k, long cap = 256);

// The lifts of r_matrix_commutant commute with every generator image of
// tensor_rep(n, k).  The lifts of r_matrix itself do not (they differ by the
// diagonal gauge S^{x k}, which rescales the tensor basis but not the ranks).
std::vector<RelationCheck> commutant_check(const VarSet& vars, int n, int k,
                                           long cap = 256);

// Image of the projector delta_n(E) for an idempotent E: exact rank and a
// row-reduced spanning set of the column space.
struct Projection {
    long rank = 0;
    std::vector<std::vector<RatFunc>> basis;
};
Projection project(const HeckeElement& E, int n, int k, long cap = 256);

// Rank of the span of the given vectors over Q(v,t) (exact elimination with a
// rational-specialization pivot pre-pass).
long span_rank(std::vector<std::vector<RatFunc>> rows,
               std::vector<std::vector<RatFunc>>* reduced = nullptr);

struct DecompositionComponent {
    Partition shape;
    long syt_count = 0;
    long dim = 0;
};
struct DecompositionReport {
    int n = 0, k = 0;
    std::vector<DecompositionComponent> components;
    long total = 0;      // sum syt_count * dim
    long expected = 0;   // n^k
    bool pass() const { return total == expected; }
};

// One projector rank per shape with l(shape) <= n, first tableau per shape.
DecompositionReport decompose(const VarSet& vars, int n, int k, long cap = 256);

}  // namespace uvtsw
