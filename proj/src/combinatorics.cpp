#include "uvtsw/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace uvtsw {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
        if (x < 1 || x > static_cast<int>(images_.size()) || seen[x - 1])
            throw std::invalid_argument("not a permutation of {1..k}");
        seen[x - 1] = true;
    }
}

Permutation Permutation::identity(int k) {
    std::vector<int> img(k);
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::simple(int k, int i) {
    if (i < 1 || i >= k) throw std::out_of_range("simple reflection index out of range");
    return transposition(k, i, i + 1);
}

Permutation Permutation::transposition(int k, int a, int b) {
    if (a < 1 || b < 1 || a > k || b > k || a == b)
        throw std::out_of_range("invalid transposition");
    std::vector<int> img(k);
    std::iota(img.begin(), img.end(), 1);
    std::swap(img[a - 1], img[b - 1]);
    return Permutation(std::move(img));
}

Permutation Permutation::longest_element(int k, int i) {
    if (i < 1 || i > k) throw std::out_of_range("longest_element index out of range");
    std::vector<int> img(k);
    std::iota(img.begin(), img.end(), 1);
    std::reverse(img.begin(), img.begin() + i);
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (images_[i] > images_[j]) ++inv;
    return inv;
}

std::vector<int> Permutation::reduced_word() const {
    // Bubble the one-line notation to the identity; each adjacent swap at a
    // descent strips one simple reflection from the right.
    std::vector<int> a = images_;
    std::vector<int> word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i + 1 < static_cast<int>(a.size()); ++i) {
            if (a[i] > a[i + 1]) {
                std::swap(a[i], a[i + 1]);
                word.push_back(i + 1);
                moved = true;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

Permutation Permutation::operator*(const Permutation& o) const {
    if (size() != o.size()) throw std::invalid_argument("size mismatch");
    std::vector<int> img(size());
    for (int i = 1; i <= size(); ++i) img[i - 1] = (*this)(o(i));
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(size());
    for (int i = 1; i <= size(); ++i) img[(*this)(i)-1] = i;
    return Permutation(std::move(img));
}

std::string Permutation::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < size(); ++i) os << (i ? "," : "") << images_[i];
    os << ")";
    return os.str();
}

std::vector<Permutation> all_permutations(int k) {
    std::vector<int> img(k);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::row_length(int row) const {
    return (row >= 1 && row <= num_rows()) ? parts_[row - 1] : 0;
}

bool Partition::contains(Cell c) const {
    return c.row >= 1 && c.col >= 1 && c.col <= row_length(c.row);
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    for (int r = 1; r <= num_rows(); ++r)
        for (int c = 1; c <= parts_[r - 1]; ++c) out.push_back({r, c});
    return out;
}

Partition Partition::conjugate() const {
    std::vector<int> parts;
    for (int j = 1; parts_.size() && j <= parts_[0]; ++j) {
        int count = 0;
        for (int p : parts_)
            if (p >= j) ++count;
        parts.push_back(count);
    }
    return Partition(std::move(parts));
}

int Partition::hook(Cell c) const {
    if (!contains(c)) throw std::out_of_range("cell outside diagram");
    Partition conj = conjugate();
    return parts_[c.row - 1] + conj.parts()[c.col - 1] - c.row - c.col + 1;
}

std::vector<Cell> Partition::addable_cells() const {
    std::vector<Cell> out;
    for (int r = 1; r <= num_rows() + 1; ++r) {
        int len = row_length(r);
        if (r == 1 || row_length(r - 1) > len) out.push_back({r, len + 1});
    }
    return out;
}

Partition Partition::remove_cell(Cell c) const {
    std::vector<int> parts = parts_;
    if (!contains(c) || c.col != parts[c.row - 1])
        throw std::invalid_argument("cell is not a removable corner");
    if (c.row < num_rows() && parts[c.row] == parts[c.row - 1])
        throw std::invalid_argument("cell is not a removable corner");
    parts[c.row - 1] -= 1;
    if (parts[c.row - 1] == 0) parts.erase(parts.begin() + (c.row - 1));
    return Partition(std::move(parts));
}

long Partition::b_stat() const {
    long b = 0;
    for (int p : parts_) b += static_cast<long>(p) * (p - 1);
    return b;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> all_partitions(int k) {
    std::vector<Partition> out;
    std::vector<int> acc;
    partitions_rec(k, k, acc, out);
    return out;
}

// ---------------------------------------------------------------------------
// StandardTableau

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    std::vector<int> parts;
    for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
    shape_ = Partition(parts);
    int k = shape_.size();
    std::vector<bool> seen(k, false);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            int e = rows_[r][c];
            if (e < 1 || e > k || seen[e - 1])
                throw std::invalid_argument("entries must be a bijection onto {1..k}");
            seen[e - 1] = true;
            if (c > 0 && rows_[r][c - 1] >= e)
                throw std::invalid_argument("rows must strictly increase");
            if (r > 0 && rows_[r - 1][c] >= e)
                throw std::invalid_argument("columns must strictly increase");
        }
    }
}

Cell StandardTableau::cell_of(int entry) const {
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t c = 0; c < rows_[r].size(); ++c)
            if (rows_[r][c] == entry) return {static_cast<int>(r + 1), static_cast<int>(c + 1)};
    throw std::out_of_range("entry not present");
}

int StandardTableau::entry_at(Cell c) const {
    if (!shape_.contains(c)) throw std::out_of_range("cell outside diagram");
    return rows_[c.row - 1][c.col - 1];
}

StandardTableau StandardTableau::remove_top() const {
    int k = size();
    if (k <= 1) throw std::logic_error("cannot remove from a tableau of size <= 1");
    Cell c = cell_of(k);
    std::vector<std::vector<int>> rows = rows_;
    rows[c.row - 1].pop_back();
    if (rows[c.row - 1].empty()) rows.pop_back();
    return StandardTableau(std::move(rows));
}

std::string StandardTableau::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) os << ",";
        os << "[";
        for (std::size_t c = 0; c < rows_[r].size(); ++c)
            os << (c ? "," : "") << rows_[r][c];
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

void tableaux_rec(const Partition& shape, std::vector<std::vector<int>>& rows, int next,
                  std::vector<StandardTableau>& out) {
    int k = shape.size();
    if (next > k) {
        out.emplace_back(rows);
        return;
    }
    for (int r = 1; r <= shape.num_rows(); ++r) {
        int filled = static_cast<int>(rows[r - 1].size());
        if (filled >= shape.row_length(r)) continue;
        // Placement is valid when the row above is already longer.
        if (r > 1 && static_cast<int>(rows[r - 2].size()) <= filled) continue;
        rows[r - 1].push_back(next);
        tableaux_rec(shape, rows, next + 1, out);
        rows[r - 1].pop_back();
    }
}

}  // namespace

std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
    std::vector<std::vector<int>> rows(shape.num_rows());
    std::vector<StandardTableau> out;
    tableaux_rec(shape, rows, 1, out);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Contents and the fusion scalar

RatFunc cell_content(const VarSet& vars, Cell c) {
    return RatFunc::variable(vars, "v", 1).pow(-2L * (c.col - c.row));
}

RatFunc f_lambda(const VarSet& vars, const Partition& shape) {
    long k = shape.size();
    RatFunc v = RatFunc::variable(vars, "v");
    RatFunc t = RatFunc::variable(vars, "t");
    RatFunc one = RatFunc::one(vars);
    RatFunc f = v.pow(-shape.b_stat()) * t.pow(k * (k - 1) / 2) *
                (one - v.pow(-2)).pow(k);
    for (Cell c : shape.cells())
        f = f / (one - v.pow(-2L * shape.hook(c)));
    return f;
}

}  // namespace uvtsw
