#include "eck/f2linalg.hpp"

namespace eck {

BitVec bv_make(int n) { return BitVec((n + 63) / 64, 0); }

bool bv_get(const BitVec& v, int i) {
  return (v[i / 64] >> (i % 64)) & 1u;
}

void bv_set(BitVec& v, int i) { v[i / 64] |= std::uint64_t{1} << (i % 64); }

void bv_flip(BitVec& v, int i) { v[i / 64] ^= std::uint64_t{1} << (i % 64); }

void bv_xor(BitVec& a, const BitVec& b) {
  for (std::size_t w = 0; w < b.size(); ++w) a[w] ^= b[w];
}

bool bv_is_zero(const BitVec& v) {
  for (auto w : v)
    if (w) return false;
  return true;
}

void BitMatrix::add(int r, int c) {
  auto it = entries.find({r, c});
  if (it != entries.end())
    entries.erase(it);
  else
    entries.insert({r, c});
}

bool BitMatrix::at(int r, int c) const { return entries.count({r, c}) != 0; }

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols, rows);
  for (auto& [r, c] : entries) t.entries.insert({c, r});
  return t;
}

std::vector<BitVec> BitMatrix::packed_rows() const {
  std::vector<BitVec> out(rows, bv_make(cols));
  for (auto& [r, c] : entries) bv_set(out[r], c);
  return out;
}

BitVec BitMatrix::apply(const BitVec& v) const {
  BitVec out = bv_make(rows);
  for (auto& [r, c] : entries)
    if (bv_get(v, c)) bv_flip(out, r);
  return out;
}

namespace {

// Row echelon form in place; returns pivot columns in order. Pivots are chosen
// as the first nonzero entry scanning columns left to right.
std::vector<int> echelon(std::vector<BitVec>& rows, int cols) {
  std::vector<int> pivot_cols;
  std::size_t next = 0;
  for (int c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t sel = next;
    while (sel < rows.size() && !bv_get(rows[sel], c)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[next], rows[sel]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != next && bv_get(rows[r], c)) bv_xor(rows[r], rows[next]);
    pivot_cols.push_back(c);
    ++next;
  }
  return pivot_cols;
}

}  // namespace

int rank(const BitMatrix& m) {
  auto rows = m.packed_rows();
  return static_cast<int>(echelon(rows, m.cols).size());
}

std::vector<BitVec> kernel_basis(const BitMatrix& m) {
  auto rows = m.packed_rows();
  auto pivot_cols = echelon(rows, m.cols);

  std::vector<int> pivot_of_col(m.cols, -1);
  for (std::size_t r = 0; r < pivot_cols.size(); ++r)
    pivot_of_col[pivot_cols[r]] = static_cast<int>(r);

  std::vector<BitVec> basis;
  for (int c = 0; c < m.cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;  // pivot column: not free
    BitVec v = bv_make(m.cols);
    bv_set(v, c);
    // The pivot variables solve against the free column c.
    for (std::size_t r = 0; r < pivot_cols.size(); ++r)
      if (bv_get(rows[r], c)) bv_flip(v, pivot_cols[r]);
    basis.push_back(std::move(v));
  }
  return basis;
}

int homology_rank(const BitMatrix& d_in, const BitMatrix& d_out) {
  if (d_in.rows != d_out.cols) throw CompositionNotZero();
  // Check d_out . d_in = 0 column by column.
  for (int j = 0; j < d_in.cols; ++j) {
    BitVec col = bv_make(d_in.rows);
    for (auto& [r, c] : d_in.entries)
      if (c == j) bv_flip(col, r);
    if (!bv_is_zero(d_out.apply(col))) throw CompositionNotZero();
  }
  int ker = d_out.cols - rank(d_out);
  return ker - rank(d_in);
}

BitVec F2Span::reduce(BitVec v) const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (bv_get(v, pivots[i])) bv_xor(v, basis[i]);
  return v;
}

bool F2Span::add(BitVec v) {
  v = reduce(std::move(v));
  if (bv_is_zero(v)) return false;
  int p = 0;
  for (int i = 0; i < static_cast<int>(v.size()) * 64; ++i)
    if (bv_get(v, i)) {
      p = i;
      break;
    }
  basis.push_back(std::move(v));
  pivots.push_back(p);
  return true;
}

bool F2Span::contains(const BitVec& v) const { return bv_is_zero(reduce(v)); }

}  // namespace eck
