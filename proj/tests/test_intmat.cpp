#include <string>
#include <vector>

#include "doctest.h"
#include "intmat_suite.hpp"
#include "oracles.hpp"
#include "schur/intmat.hpp"

using namespace schur;

namespace {

SparseIntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  SparseIntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) {
      if (rows[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) {
        m.add(i, j, rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
      }
    }
  }
  return m;
}

std::vector<long long> small_invariants(const SnfResult& snf) {
  std::vector<long long> out;
  for (const BigInt& d : snf.invariants) out.push_back(d.convert_to<long long>());
  return out;
}

}  // namespace

TEST_CASE("smith normal form of known matrices") {
  CHECK(small_invariants(smith_normal_form(from_rows({{2, 0}, {0, 3}}))) ==
        std::vector<long long>{1, 6});
  CHECK(small_invariants(smith_normal_form(from_rows({{2, 4}, {6, 8}}))) ==
        std::vector<long long>{2, 4});
  CHECK(small_invariants(smith_normal_form(from_rows({{1, 0}, {0, 1}}))) ==
        std::vector<long long>{1, 1});
  CHECK(small_invariants(smith_normal_form(from_rows({{6}}))) == std::vector<long long>{6});
  const SnfResult zero = smith_normal_form(SparseIntMatrix(3, 2));
  CHECK(zero.invariants.empty());
  CHECK(zero.rank == 0);
}

TEST_CASE("sparse matrix accumulation and dump round trip") {
  SparseIntMatrix m(2, 2);
  m.add(0, 0, 3);
  m.add(0, 0, -3);  // cancels away
  m.add(1, 1, 5);
  CHECK(m.at(0, 0) == 0);
  CHECK(m.at(1, 1) == 5);
  CHECK(m.nnz() == 1);
  const SparseIntMatrix back = SparseIntMatrix::parse_dump(m.dump());
  CHECK(back.rows == 2);
  CHECK(back.cols == 2);
  CHECK(back.at(1, 1) == 5);
  CHECK(back.nnz() == 1);
}

TEST_CASE("lattice reducer spans the same lattice as its input") {
  std::mt19937 rng(777u);
  std::uniform_int_distribution<int> dim(1, 5);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int iter = 0; iter < 50; ++iter) {
    const int r = dim(rng);
    const int c = dim(rng);
    SparseIntMatrix m(r, c);
    LatticeReducer red(r);
    for (int j = 0; j < c; ++j) {
      LatticeReducer::Column col;
      for (int i = 0; i < r; ++i) {
        const int v = entry(rng);
        if (v != 0) {
          m.add(i, j, v);
          col.push_back({i, BigInt(v)});
        }
      }
      red.add(std::move(col));
    }
    const SnfResult direct = smith_normal_form(m);
    const SnfResult reduced = smith_normal_form(red.basis());
    CHECK(direct.invariants == reduced.invariants);
    CHECK(direct.rank == red.rank());
  }
}

TEST_CASE("homology of tiny complexes") {
  // both maps zero on a rank-2 middle term
  HomologyResult free2 = homology(SparseIntMatrix(1, 2), SparseIntMatrix(2, 0));
  CHECK(free2.free_rank == 2);
  CHECK(free2.torsion.trivial());

  // multiplication by 2 into a rank-1 kernel
  SparseIntMatrix din(1, 1);
  din.add(0, 0, 2);
  HomologyResult z2 = homology(SparseIntMatrix(1, 1), din);
  CHECK(z2.free_rank == 0);
  CHECK(z2.torsion.factors == std::vector<long long>{2});

  // d_out kills the middle term completely
  SparseIntMatrix dout(1, 1);
  dout.add(0, 0, 1);
  HomologyResult none = homology(dout, SparseIntMatrix(1, 0));
  CHECK(none.free_rank == 0);
  CHECK(none.torsion.trivial());
}

TEST_CASE("randomized smith normal form property suite") {
  const std::vector<std::string> fails = schur_test::intmat_suite_failures();
  for (const std::string& f : fails) MESSAGE(f);
  CHECK(fails.empty());
}
