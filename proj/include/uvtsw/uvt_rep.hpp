#pragma once

#include "uvtsw/ratfunc.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

// The type A_{n-1} Cartan datum with its extended index, the natural
// representation of the two-parameter quantum group, tensor-power
// representations via the iterated coproduct, and an exact checker for the
// defining relations (R1)-(R6).

namespace uvtsw {

// Sparse matrix over RatFunc; entries are 0-based and zeros are never stored.
class SparseMat {
  public:
    SparseMat(VarSet vars, int rows, int cols)
        : vars_(std::move(vars)), rows_(rows), cols_(cols) {}

    static SparseMat identity(const VarSet& vars, int n);
    // Matrix unit E_{ij} (1-based indices, entry 1 at row i, column j).
    static SparseMat unit(const VarSet& vars, int n, int i, int j);

    const VarSet& vars() const { return vars_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::map<std::pair<int, int>, RatFunc>& entries() const { return entries_; }

    RatFunc entry(int r, int c) const;
    void set(int r, int c, const RatFunc& value);
    void add(int r, int c, const RatFunc& value);

    bool is_zero() const { return entries_.empty(); }

    SparseMat operator+(const SparseMat& o) const;
    SparseMat operator-(const SparseMat& o) const;
    SparseMat operator*(const SparseMat& o) const;
    SparseMat operator*(const RatFunc& c) const;
    SparseMat operator-() const;

    bool operator==(const SparseMat& o) const;
    bool operator!=(const SparseMat& o) const { return !(*this == o); }

    static SparseMat kron(const SparseMat& a, const SparseMat& b);

    std::string str() const;   // "(r,c): value" triplets, row-major

  private:
    VarSet vars_;
    int rows_ = 0, cols_ = 0;
    std::map<std::pair<int, int>, RatFunc> entries_;
};

// Bracket values <i,j> for 1 <= i,j <= n: the unipotent-like matrix of type
// A_{n-1} on i,j < n (1 on the diagonal, -1 just below), extended by
// <i,n> = delta_{in} and <n,i> = 0 (i < n-1), -1 (i = n-1), 1 (i = n).
class CartanDatum {
  public:
    explicit CartanDatum(int n);

    int n() const { return n_; }
    int bracket(int i, int j) const;
    int dot(int i, int j) const { return bracket(i, j) + bracket(j, i); }

  private:
    int n_;
};

// Integer coordinates (lambda_1, ..., lambda_n) in the weight lattice.
using Weight = std::vector<int>;

// Images of E_i, F_i, K_i^{+-1}, K_i'^{+-1} (i = 1..n-1) on the k-th tensor
// power of the natural module; matrices are n^k-dimensional.
struct GeneratorImages {
    int n = 0, k = 0;
    std::vector<SparseMat> E, F, K, Kinv, Kp, Kpinv;
};

// The natural n-dimensional representation (k = 1).
GeneratorImages natural_rep(const VarSet& vars, int n);

// Eigenvalue of K_i (or K_i' when primed) on a weight vector:
//   v^{+-sum_j lambda_j i.j} t^{sum_j lambda_j(<i,j> - <j,i>) - 1}.
RatFunc weight_eigenvalue(const VarSet& vars, const CartanDatum& cd,
                          const Weight& lambda, int i, bool primed);

// Weight of the basis vector v_j of the natural module: e_j + ... + e_n.
Weight natural_weight(int n, int j);

// Level-k images via the iterated coproduct:
//   E_j -> sum_i K_j^(i-1) x E_j x 1^(k-i),
//   F_j -> sum_i 1^(k-i) x F_j x K_j'^(i-1),  K, K' group-like.
// Throws std::length_error when n^k exceeds the cap.
GeneratorImages tensor_rep(const VarSet& vars, int n, int k, long cap = 4096);

// One exact relation check; detail names the first failing matrix identity.
struct RelationCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Exact verification of (R1)-(R6) on the given images, one entry per relation.
std::vector<RelationCheck> check_relations(const GeneratorImages& g);
bool all_pass(const std::vector<RelationCheck>& checks);

// Basis indices of V_n^{otimes k} grouped by weight (simultaneous
// K-eigenvalue); keys are weight coordinates.
std::map<Weight, std::vector<int>> weight_decomposition(int n, int k);

}  // namespace uvtsw
