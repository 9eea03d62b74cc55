#pragma once

#include "uvtsw/ratfunc.hpp"

#include <string>
#include <vector>

// Permutations, partitions, Young diagrams and standard tableaux: the
// indexing layer for the Hecke-algebra and Schur-Weyl machinery. All values
// are immutable and cheap to copy.

namespace uvtsw {

// A permutation of {1..k} in one-line notation.
class Permutation {
  public:
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int k);
    static Permutation simple(int k, int i);          // s_i = (i, i+1)
    static Permutation transposition(int k, int a, int b);
    // Longest element of S_i embedded in S_k: reverses {1..i}, fixes the rest.
    static Permutation longest_element(int k, int i);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }     // 1-based
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    // Coxeter length = inversion count.
    int length() const;
    // One reduced word, as simple-reflection indices; w = s_{i_1}...s_{i_l}.
    std::vector<int> reduced_word() const;

    // Composition: (a*b)(i) = a(b(i)).
    Permutation operator*(const Permutation& o) const;
    Permutation inverse() const;

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

    // One-line notation, e.g. "(2,1,3)".
    std::string str() const;

  private:
    std::vector<int> images_;
};

std::vector<Permutation> all_permutations(int k);

// 1-based (row, col) cell of a Young diagram.
struct Cell {
    int row = 0;
    int col = 0;
    bool operator==(const Cell&) const = default;
    bool operator<(const Cell& o) const {
        return row != o.row ? row < o.row : col < o.col;
    }
};

// Weakly decreasing positive parts; the empty partition is allowed.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                 // |lambda|
    int num_rows() const { return static_cast<int>(parts_.size()); }
    int row_length(int row) const;    // 1-based; 0 beyond the diagram
    bool contains(Cell c) const;
    std::vector<Cell> cells() const;

    Partition conjugate() const;
    int hook(Cell c) const;
    std::vector<Cell> addable_cells() const;
    // Partition with one corner cell removed; the cell must be removable.
    Partition remove_cell(Cell c) const;

    // b(lambda) = sum_i lambda_i (lambda_i - 1)
    long b_stat() const;

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string str() const;          // "(2,1)"

  private:
    std::vector<int> parts_;
};

std::vector<Partition> all_partitions(int k);

// Standard Young tableau: bijective filling, increasing along rows and down
// columns.
class StandardTableau {
  public:
    // Rows of entries, e.g. {{1,2},{3}}.
    explicit StandardTableau(std::vector<std::vector<int>> rows);

    const Partition& shape() const { return shape_; }
    int size() const { return shape_.size(); }
    Cell cell_of(int entry) const;    // cell containing a given entry
    int entry_at(Cell c) const;

    // Tableau of shape mu obtained by removing the cell of the top entry.
    StandardTableau remove_top() const;

    bool operator==(const StandardTableau&) const = default;
    bool operator<(const StandardTableau& o) const { return rows_ < o.rows_; }

    std::string str() const;          // "[[1,2],[3]]"

  private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

// All standard tableaux of the given shape, in a deterministic order
// (lexicographic on the row sequences).
std::vector<StandardTableau> standard_tableaux(const Partition& shape);

// (v, v^-1)-content of a cell: v^{-2(col-row)} over the given VarSet.
RatFunc cell_content(const VarSet& vars, Cell c);

// The fusion normalization scalar
//   f(lambda) = v^{-b} t^{k(k-1)/2} (1-v^-2)^k prod_cells (1-v^{-2h})^{-1}.
RatFunc f_lambda(const VarSet& vars, const Partition& shape);

}  // namespace uvtsw
