#pragma once

#include "uvtsw/uvt_rep.hpp"

#include <array>

// Hopf pairing between the lower (F, K') and upper (E, K) halves, computed on
// normal-ordered free words via iterated coproducts; Gram matrices and dual
// bases per graded component; the truncated quasi-R-matrix Theta and the
// reconstruction of rtilde from it; generator-level double cross relations.

namespace uvtsw {

enum class Side { plus_side, minus_side };

// Normal-ordered word: torus monomial on the left, simple-root letters on the
// right.  torus has n slots: exponents of K_1..K_{n-1} (or K'_1..K'_{n-1})
// and, in the last slot, of the adjoined group-like A_n (or B_n).
struct HalfWord {
    Side side = Side::plus_side;
    std::vector<int> torus;
    std::vector<int> letters;  // values in 1..n-1; E_i on the plus side, F_i on minus
    auto operator<=>(const HalfWord&) const = default;
};

std::string to_string(const HalfWord& w);

// Finitely supported RatFunc-combination of same-side words.
class HalfElement {
  public:
    HalfElement(const VarSet& vars, int n, Side side);
    static HalfElement zero(const VarSet& vars, int n, Side side);
    static HalfElement one(const VarSet& vars, int n, Side side);
    static HalfElement letter(const VarSet& vars, int n, Side side, int i);
    static HalfElement torus_monomial(const VarSet& vars, int n, Side side,
                                      const std::vector<int>& exps);
    static HalfElement word(const VarSet& vars, int n, Side side,
                            const std::vector<int>& letters);

    const VarSet& vars() const { return vars_; }
    int n() const { return n_; }
    Side side() const { return side_; }
    const std::map<HalfWord, RatFunc>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    void add_term(const HalfWord& w, const RatFunc& c);

    HalfElement operator+(const HalfElement& o) const;
    HalfElement operator-(const HalfElement& o) const;
    HalfElement operator*(const HalfElement& o) const;  // normal-ordering product
    HalfElement operator*(const RatFunc& c) const;

    bool operator==(const HalfElement& o) const { return coeffs_ == o.coeffs_; }

    std::string str() const;

  private:
    VarSet vars_;
    int n_;
    Side side_;
    std::map<HalfWord, RatFunc> coeffs_;
};

// Anti-homomorphism S: E_i -> -K_i^{-1}E_i, F_i -> -F_iK_i'^{-1}, torus
// monomials inverted.
HalfElement antipode(const HalfElement& x);

// Coproduct expansion of a word into normal-ordered tensor terms; the minus
// side uses the opposite coproduct (F_i -> F_i x 1 + K_i' x F_i).
struct TensorTerm {
    HalfWord a, b;
    RatFunc coef;
};
std::vector<TensorTerm> coproduct(const VarSet& vars, const HalfWord& w);

// Pairing of torus monomials extended multiplicatively from the generator
// table, including the adjoined A_n/B_n values.
RatFunc group_like_pairing(const VarSet& vars, int n,
                           const std::vector<int>& primed,
                           const std::vector<int>& plain);

// (K'_{wt(v_i)}, K_{wt(v_j)})^{-1} for natural-module weights; the scalar
// multiplying the flipped input in the Theta reconstruction of rtilde.
RatFunc f_factor(const VarSet& vars, int n, int i, int j);

// Full pairing by recursion: peel one letter of the F-word (from the chosen
// end) against the coproduct of the E-side; grading shortcuts mismatched
// contents to zero.
enum class PeelOrder { left, right };
RatFunc pair_words(const HalfElement& f, const HalfElement& e,
                   PeelOrder order = PeelOrder::left);

// Relation suite: generator table values, torus exchange consistency, Serre
// elements of both halves pair to zero against every word of matching content
// (heights <= height_cap), antipode compatibility, peel-order independence.
std::vector<RelationCheck> verify_pairing_relations(const VarSet& vars, int n,
                                                    int height_cap = 3);

// Basis of the graded component of the given letter content (counts of each
// simple index 1..n-1) modulo the pairing radical, with the dual basis of the
// opposite half obtained by Gram inversion.
struct DualBasis {
    std::vector<int> content;
    std::vector<HalfElement> basis;  // plus side
    std::vector<HalfElement> dual;   // minus side, (dual[a], basis[b]) = delta_ab
    bool degenerate = false;         // free-word Gram rank < quotient dimension
};
DualBasis dual_basis(const VarSet& vars, int n, const std::vector<int>& content);

// Theta truncated to letter heights 0..max_height: list of (minus, plus)
// dual-basis pairs across all graded components.
std::vector<std::pair<HalfElement, HalfElement>> theta(const VarSet& vars, int n,
                                                       int max_height);

// n x n matrix of a torus-free element acting on the natural module.
SparseMat act_natural(const HalfElement& x);

// v_i x v_j -> f_factor(i, j) * Theta(v_j x v_i), Theta truncated as above.
SparseMat rtilde_from_theta(const VarSet& vars, int n, int max_height);

// Formal element of the double: sum of (plus word) x (minus word).
using DoubleElement = std::map<std::pair<HalfWord, HalfWord>, RatFunc>;
std::string to_string(const DoubleElement& x);

// (1 x F_j)(E_i x 1) expanded through the double multiplication formula with
// iterated coproducts.  The antipode variant entering the formula is chosen
// so the expansion closes the commutator [E_i, F_j] onto
// delta_ij (K_i - K_j')/(v - v^{-1}), matching the defining relation.
DoubleElement double_cross(const VarSet& vars, int n, int i, int j);

}  // namespace uvtsw
