#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace eck {

// Thrown by homology_rank when d_out . d_in != 0.
struct CompositionNotZero : std::runtime_error {
  CompositionNotZero() : std::runtime_error("composition of differentials is not zero") {}
};

// Bit-packed F2 vector, 64 entries per word.
using BitVec = std::vector<std::uint64_t>;

BitVec bv_make(int n);
bool bv_get(const BitVec& v, int i);
void bv_set(BitVec& v, int i);
void bv_flip(BitVec& v, int i);
void bv_xor(BitVec& a, const BitVec& b);
bool bv_is_zero(const BitVec& v);

// Sparse F2 matrix: set of (row, col) positions holding coefficient 1.
// Duplicates cancel, so add() toggles.
struct BitMatrix {
  int rows = 0;
  int cols = 0;
  std::set<std::pair<int, int>> entries;

  BitMatrix() = default;
  BitMatrix(int r, int c) : rows(r), cols(c) {}

  void add(int r, int c);
  bool at(int r, int c) const;
  BitMatrix transpose() const;

  // Dense bit-packed rows, for elimination.
  std::vector<BitVec> packed_rows() const;

  // Matrix-vector product over F2; v has length cols, result length rows.
  BitVec apply(const BitVec& v) const;
};

int rank(const BitMatrix& m);

// Basis of ker(m) as column vectors of length m.cols; size = cols - rank.
// Deterministic (first-nonzero pivots in column order).
std::vector<BitVec> kernel_basis(const BitMatrix& m);

// dim ker(d_out) - rank(d_in) for a three-term piece  . --d_in--> . --d_out--> .
int homology_rank(const BitMatrix& d_in, const BitMatrix& d_out);

// Incremental F2 span for membership tests: reduce() returns the residue of v
// against the vectors added so far; add() inserts the residue if nonzero.
struct F2Span {
  std::vector<BitVec> basis;  // rows in echelon form (not reduced)
  std::vector<int> pivots;

  // Residue of v modulo the span.
  BitVec reduce(BitVec v) const;
  // Adds v; returns true if it enlarged the span.
  bool add(BitVec v);
  bool contains(const BitVec& v) const;
  int dim() const { return static_cast<int>(basis.size()); }
};

}  // namespace eck
