#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schur/abelian.hpp"
#include "schur/error.hpp"

namespace schur {

using BigInt = boost::multiprecision::cpp_int;

// Column-major sparse integer matrix. Each column is sorted by row and holds
// no zeros and no duplicate rows.
struct SparseIntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, BigInt>>> columns;

  SparseIntMatrix() = default;
  SparseIntMatrix(int r, int c) : rows(r), cols(c), columns(static_cast<size_t>(c)) {}

  // Accumulates v into (r, c).
  void add(int r, int c, const BigInt& v);
  BigInt at(int r, int c) const;
  long long nnz() const;

  // Text form: "rows cols nnz" header, then one "row col value" line per
  // entry, sorted by (row, col).
  std::string dump() const;
  static SparseIntMatrix parse_dump(const std::string& text);
};

struct DenseIntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> a;

  DenseIntMatrix() = default;
  DenseIntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c)) {}

  BigInt& at(int r, int c) { return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }
  const BigInt& at(int r, int c) const { return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }

  static DenseIntMatrix identity(int n);
};

struct SnfOptions {
  bool want_u = false;
  bool want_v = false;
};

struct SnfResult {
  // Nonzero diagonal entries d_1 | d_2 | ... | d_r, all positive.
  std::vector<BigInt> invariants;
  int rank = 0;
  // When requested: unimodular U (rows x rows) and V (cols x cols) with
  // U * A * V diagonal, invariants at (k, k).
  std::optional<DenseIntMatrix> u, v;
};

// Pivot choice is deterministic: smallest absolute value, ties broken by
// (row, col).
SnfResult smith_normal_form(const SparseIntMatrix& m, SnfOptions opts = {});

// Incremental column echelon form over Z. Feed columns one at a time; keeps
// a fully back-reduced pivot basis of the lattice they span.
class LatticeReducer {
 public:
  using Column = std::vector<std::pair<int, BigInt>>;

  explicit LatticeReducer(int rows);

  void add(Column w);
  int rank() const { return static_cast<int>(pivot_of_row_.size()); }

  // Pivot columns, ordered by pivot row. Spans the same lattice as the
  // columns fed in.
  SparseIntMatrix basis() const;

 private:
  struct Slot {
    Column col;
    bool live;
  };

  int rows_;
  std::vector<int> slot_of_row_;            // row -> slot index or -1
  std::vector<std::vector<int>> row_users_; // row -> slots with a non-lead entry there
  std::vector<Slot> slots_;
  std::vector<int> pivot_of_row_;           // sorted pivot rows

  void normalize_against_pivots(Column& w, int from_row);
  void insert_pivot(Column w);
  void back_reduce_row(int row);
  void attach(int slot);
  void detach(int slot);
};

struct HomologyResult {
  AbelianInvariants torsion;
  long long free_rank = 0;
};

// Homology at the middle of  C_in --d_in--> C_mid --d_out--> C_out,
// i.e. ker(d_out) / im(d_in).
HomologyResult homology(const SparseIntMatrix& d_out, const SparseIntMatrix& d_in);

// Same result, restricted to complexes where the cokernel torsion of both
// maps is p-primary of exponent dividing p^e (true for the chain complex of
// a group of order p^e, whose homology |G| annihilates). Every nonzero
// invariant factor is then a power of p at most p^e, so working over
// Z/p^{e+1} is exact and the arithmetic never leaves machine words.
HomologyResult homology_p_primary(const SparseIntMatrix& d_out, const SparseIntMatrix& d_in,
                                  long long p, int e);

}  // namespace schur
