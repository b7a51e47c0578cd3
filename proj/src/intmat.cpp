#include "schur/intmat.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>

namespace schur {

void SparseIntMatrix::add(int r, int c, const BigInt& v) {
  if (r < 0 || r >= rows || c < 0 || c >= cols)
    fail(Errc::malformed_table, "entry (" + std::to_string(r) + "," + std::to_string(c) + ") out of bounds");
  if (v == 0) return;
  auto& col = columns[static_cast<size_t>(c)];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const auto& e, int row) { return e.first < row; });
  if (it != col.end() && it->first == r) {
    it->second += v;
    if (it->second == 0) col.erase(it);
  } else {
    col.insert(it, {r, v});
  }
}

BigInt SparseIntMatrix::at(int r, int c) const {
  const auto& col = columns[static_cast<size_t>(c)];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const auto& e, int row) { return e.first < row; });
  if (it != col.end() && it->first == r) return it->second;
  return 0;
}

long long SparseIntMatrix::nnz() const {
  long long n = 0;
  for (const auto& col : columns) n += static_cast<long long>(col.size());
  return n;
}

std::string SparseIntMatrix::dump() const {
  std::ostringstream os;
  os << rows << " " << cols << " " << nnz() << "\n";
  std::vector<std::tuple<int, int, BigInt>> entries;
  for (int c = 0; c < cols; ++c)
    for (const auto& [r, v] : columns[static_cast<size_t>(c)]) entries.emplace_back(r, c, v);
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  for (const auto& [r, c, v] : entries) os << r << " " << c << " " << v << "\n";
  return os.str();
}

SparseIntMatrix SparseIntMatrix::parse_dump(const std::string& text) {
  std::istringstream is(text);
  long long rows = 0, cols = 0, nnz = 0;
  if (!(is >> rows >> cols >> nnz) || rows < 0 || cols < 0 || nnz < 0)
    fail(Errc::parse_error, "bad matrix dump header");
  SparseIntMatrix m(static_cast<int>(rows), static_cast<int>(cols));
  for (long long i = 0; i < nnz; ++i) {
    long long r = 0, c = 0;
    BigInt v;
    if (!(is >> r >> c >> v)) fail(Errc::parse_error, "bad matrix dump entry " + std::to_string(i));
    m.add(static_cast<int>(r), static_cast<int>(c), v);
  }
  return m;
}

DenseIntMatrix DenseIntMatrix::identity(int n) {
  DenseIntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

namespace {

BigInt big_abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// q such that a - q*b lies in [0, b); b > 0.
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt m = a % b;
  if (m < 0) m += b;
  return (a - m) / b;
}

void ext_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& x, BigInt& y) {
  BigInt r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt t = r0 - q * r1; r0 = r1; r1 = t;
    t = x0 - q * x1; x0 = x1; x1 = t;
    t = y0 - q * y1; y0 = y1; y1 = t;
  }
  if (r0 < 0) { r0 = -r0; x0 = -x0; y0 = -y0; }
  g = r0; x = x0; y = y0;
}

// In-place elimination working on column maps with a row occupancy index and
// a lazily validated min-heap of pivot candidates.
class SnfEngine {
 public:
  SnfEngine(const SparseIntMatrix& m, SnfOptions opts)
      : rows_(m.rows), cols_(m.cols), opts_(opts),
        data_(static_cast<size_t>(m.cols)), row_occ_(static_cast<size_t>(m.rows)),
        row_done_(static_cast<size_t>(m.rows), 0), col_done_(static_cast<size_t>(m.cols), 0) {
    if (opts_.want_u) u_ = DenseIntMatrix::identity(rows_);
    if (opts_.want_v) v_ = DenseIntMatrix::identity(cols_);
    for (int c = 0; c < cols_; ++c)
      for (const auto& [r, v] : m.columns[static_cast<size_t>(c)]) {
        data_[static_cast<size_t>(c)][r] = v;
        row_occ_[static_cast<size_t>(r)].insert(c);
        heap_.emplace(big_abs(v), r, c);
      }
  }

  SnfResult run();

 private:
  struct Pivot { int r, c; BigInt d; };

  int rows_, cols_;
  SnfOptions opts_;
  std::vector<std::map<int, BigInt>> data_;
  std::vector<std::set<int>> row_occ_;
  std::vector<char> row_done_, col_done_;
  std::optional<DenseIntMatrix> u_, v_;
  using HeapItem = std::tuple<BigInt, int, int>;
  std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<HeapItem>> heap_;
  std::vector<Pivot> pivots_;

  BigInt get(int r, int c) const {
    const auto& col = data_[static_cast<size_t>(c)];
    auto it = col.find(r);
    return it == col.end() ? BigInt(0) : it->second;
  }

  void set(int r, int c, const BigInt& v) {
    auto& col = data_[static_cast<size_t>(c)];
    if (v == 0) {
      if (col.erase(r)) row_occ_[static_cast<size_t>(r)].erase(c);
      return;
    }
    auto [it, inserted] = col.insert_or_assign(r, v);
    (void)it;
    if (inserted) row_occ_[static_cast<size_t>(r)].insert(c);
    heap_.emplace(big_abs(v), r, c);
  }

  // col dst -= q * col src
  void col_axpy(int dst, int src, const BigInt& q) {
    if (q == 0) return;
    std::vector<std::pair<int, BigInt>> srccol(data_[static_cast<size_t>(src)].begin(),
                                               data_[static_cast<size_t>(src)].end());
    for (const auto& [r, v] : srccol) set(r, dst, get(r, dst) - q * v);
    if (v_)
      for (int i = 0; i < cols_; ++i) v_->at(i, dst) -= q * v_->at(i, src);
  }

  // row dst -= q * row src
  void row_axpy(int dst, int src, const BigInt& q) {
    if (q == 0) return;
    std::vector<int> srccols(row_occ_[static_cast<size_t>(src)].begin(),
                             row_occ_[static_cast<size_t>(src)].end());
    for (int c : srccols) set(dst, c, get(dst, c) - q * get(src, c));
    if (u_)
      for (int j = 0; j < rows_; ++j) u_->at(dst, j) -= q * u_->at(src, j);
  }

  void negate_row(int r) {
    std::vector<int> cs(row_occ_[static_cast<size_t>(r)].begin(), row_occ_[static_cast<size_t>(r)].end());
    for (int c : cs) {
      BigInt v = get(r, c);
      data_[static_cast<size_t>(c)][r] = -v;
      heap_.emplace(big_abs(v), r, c);
    }
    if (u_)
      for (int j = 0; j < rows_; ++j) u_->at(r, j) = -u_->at(r, j);
  }

  bool select(int& r_out, int& c_out) {
    while (!heap_.empty()) {
      auto [av, r, c] = heap_.top();
      heap_.pop();
      if (row_done_[static_cast<size_t>(r)] || col_done_[static_cast<size_t>(c)]) continue;
      auto it = data_[static_cast<size_t>(c)].find(r);
      if (it == data_[static_cast<size_t>(c)].end() || big_abs(it->second) != av) continue;
      r_out = r;
      c_out = c;
      return true;
    }
    return false;
  }

  void eliminate(int r, int c);
  void fix_chain();
};

void SnfEngine::eliminate(int r, int c) {
  // Shrink the pivot until it divides everything in its row and column; the
  // pivot position drifts toward the smaller remainders it creates.
  for (;;) {
    BigInt v = get(r, c);
    int bad_r = -1;
    for (const auto& [i, val] : data_[static_cast<size_t>(c)])
      if (i != r && val % v != 0) { bad_r = i; break; }
    if (bad_r >= 0) {
      row_axpy(bad_r, r, get(bad_r, c) / v);
      r = bad_r;
      continue;
    }
    int bad_c = -1;
    for (int j : row_occ_[static_cast<size_t>(r)])
      if (j != c && get(r, j) % v != 0) { bad_c = j; break; }
    if (bad_c >= 0) {
      col_axpy(bad_c, c, get(r, bad_c) / v);
      c = bad_c;
      continue;
    }
    break;
  }

  BigInt v = get(r, c);
  // Clear the pivot row with exact column operations, then the pivot column
  // with row operations; the latter touch nothing else because the pivot row
  // is a singleton by then.
  {
    std::vector<int> cs(row_occ_[static_cast<size_t>(r)].begin(), row_occ_[static_cast<size_t>(r)].end());
    for (int j : cs)
      if (j != c) col_axpy(j, c, get(r, j) / v);
  }
  {
    std::vector<std::pair<int, BigInt>> rows_in_col(data_[static_cast<size_t>(c)].begin(),
                                                    data_[static_cast<size_t>(c)].end());
    for (const auto& [i, val] : rows_in_col)
      if (i != r) row_axpy(i, r, val / v);
  }
  if (get(r, c) < 0) negate_row(r);
  row_done_[static_cast<size_t>(r)] = 1;
  col_done_[static_cast<size_t>(c)] = 1;
  pivots_.push_back({r, c, get(r, c)});
}

void SnfEngine::fix_chain() {
  // diag(a, b) -> diag(gcd, lcm) sweeps until the divisibility chain holds.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < pivots_.size(); ++i) {
      for (size_t j = i + 1; j < pivots_.size(); ++j) {
        BigInt a = pivots_[i].d, b = pivots_[j].d;
        if (b % a == 0) continue;
        changed = true;
        BigInt g, x, y;
        ext_gcd(a, b, g, x, y);
        BigInt l = (a / g) * b;
        int ri = pivots_[i].r, ci = pivots_[i].c;
        int rj = pivots_[j].r, cj = pivots_[j].c;
        if (u_)
          for (int t = 0; t < rows_; ++t) u_->at(ri, t) += u_->at(rj, t);
        if (v_) {
          for (int t = 0; t < cols_; ++t) {
            BigInt vi = v_->at(t, ci), vj = v_->at(t, cj);
            v_->at(t, ci) = x * vi + y * vj;
            v_->at(t, cj) = -(b / g) * vi + (a / g) * vj;
          }
        }
        if (u_) {
          BigInt q = (y * b) / g;
          for (int t = 0; t < rows_; ++t) u_->at(rj, t) -= q * u_->at(ri, t);
        }
        pivots_[i].d = g;
        pivots_[j].d = l;
      }
    }
  }
}

SnfResult SnfEngine::run() {
  int r = 0, c = 0;
  while (select(r, c)) eliminate(r, c);
  fix_chain();

  SnfResult out;
  out.rank = static_cast<int>(pivots_.size());
  for (const auto& p : pivots_) out.invariants.push_back(p.d);

  // Permute pivot k to position (k, k).
  if (u_) {
    DenseIntMatrix pu(rows_, rows_);
    std::vector<char> used(static_cast<size_t>(rows_), 0);
    int k = 0;
    for (const auto& p : pivots_) {
      for (int j = 0; j < rows_; ++j) pu.at(k, j) = u_->at(p.r, j);
      used[static_cast<size_t>(p.r)] = 1;
      ++k;
    }
    for (int i = 0; i < rows_; ++i)
      if (!used[static_cast<size_t>(i)]) {
        for (int j = 0; j < rows_; ++j) pu.at(k, j) = u_->at(i, j);
        ++k;
      }
    out.u = std::move(pu);
  }
  if (v_) {
    DenseIntMatrix pv(cols_, cols_);
    std::vector<char> used(static_cast<size_t>(cols_), 0);
    int k = 0;
    for (const auto& p : pivots_) {
      for (int i = 0; i < cols_; ++i) pv.at(i, k) = v_->at(i, p.c);
      used[static_cast<size_t>(p.c)] = 1;
      ++k;
    }
    for (int j = 0; j < cols_; ++j)
      if (!used[static_cast<size_t>(j)]) {
        for (int i = 0; i < cols_; ++i) pv.at(i, k) = v_->at(i, j);
        ++k;
      }
    out.v = std::move(pv);
  }
  return out;
}

}  // namespace

SnfResult smith_normal_form(const SparseIntMatrix& m, SnfOptions opts) {
  return SnfEngine(m, opts).run();
}

LatticeReducer::LatticeReducer(int rows)
    : rows_(rows), slot_of_row_(static_cast<size_t>(rows), -1),
      row_users_(static_cast<size_t>(rows)) {}

void LatticeReducer::attach(int slot) {
  const Column& col = slots_[static_cast<size_t>(slot)].col;
  for (size_t i = 1; i < col.size(); ++i)
    row_users_[static_cast<size_t>(col[i].first)].push_back(slot);
}

void LatticeReducer::detach(int slot) {
  const Column& col = slots_[static_cast<size_t>(slot)].col;
  for (size_t i = 1; i < col.size(); ++i) {
    auto& users = row_users_[static_cast<size_t>(col[i].first)];
    users.erase(std::find(users.begin(), users.end(), slot));
  }
}

namespace {

// dst -= q * src, both sorted by row.
void col_submul(LatticeReducer::Column& dst, const LatticeReducer::Column& src, const BigInt& q) {
  if (q == 0) return;
  LatticeReducer::Column out;
  out.reserve(dst.size() + src.size());
  size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(std::move(dst[i++]));
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, -q * src[j].second);
      ++j;
    } else {
      BigInt v = dst[i].second - q * src[j].second;
      if (v != 0) out.emplace_back(dst[i].first, std::move(v));
      ++i, ++j;
    }
  }
  dst = std::move(out);
}

}  // namespace

// Reduces trailing entries of w (strictly below `from_row`) into [0, lead)
// for every pivot row they touch.
void LatticeReducer::normalize_against_pivots(Column& w, int from_row) {
  size_t i = 0;
  while (i < w.size()) {
    int row = w[i].first;
    if (row <= from_row) { ++i; continue; }
    int slot = slot_of_row_[static_cast<size_t>(row)];
    if (slot < 0) { ++i; continue; }
    const Column& p = slots_[static_cast<size_t>(slot)].col;
    const BigInt& lead = p.front().second;
    BigInt q = floor_div(w[i].second, lead);
    if (q == 0) { ++i; continue; }
    col_submul(w, p, q);
    // The entry at `row` shrank into range (or vanished); re-examine it.
  }
}

void LatticeReducer::insert_pivot(Column w) {
  int lead_row = w.front().first;
  normalize_against_pivots(w, lead_row);
  int slot = static_cast<int>(slots_.size());
  slots_.push_back({std::move(w), true});
  slot_of_row_[static_cast<size_t>(lead_row)] = slot;
  pivot_of_row_.insert(std::lower_bound(pivot_of_row_.begin(), pivot_of_row_.end(), lead_row),
                       lead_row);
  attach(slot);
  back_reduce_row(lead_row);
}

void LatticeReducer::back_reduce_row(int row) {
  const Column& p = slots_[static_cast<size_t>(slot_of_row_[static_cast<size_t>(row)])].col;
  const BigInt& lead = p.front().second;
  std::vector<int> users = row_users_[static_cast<size_t>(row)];
  for (int s : users) {
    Column& col = slots_[static_cast<size_t>(s)].col;
    auto it = std::lower_bound(col.begin(), col.end(), row,
                               [](const auto& e, int r) { return e.first < r; });
    if (it == col.end() || it->first != row) continue;
    BigInt q = floor_div(it->second, lead);
    if (q == 0) continue;
    detach(s);
    col_submul(col, p, q);
    attach(s);
  }
}

void LatticeReducer::add(Column w) {
  // Normalize the incoming column: sorted, duplicate rows merged.
  std::sort(w.begin(), w.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Column merged;
  for (auto& e : w) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(std::move(e));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const auto& e) { return e.second == 0; }),
               merged.end());
  w = std::move(merged);

  while (!w.empty()) {
    int r = w.front().first;
    BigInt& b = w.front().second;
    int slot = slot_of_row_[static_cast<size_t>(r)];
    if (slot < 0) {
      if (b < 0)
        for (auto& e : w) e.second = -e.second;
      insert_pivot(std::move(w));
      return;
    }
    Column& p = slots_[static_cast<size_t>(slot)].col;
    const BigInt a = p.front().second;  // > 0
    BigInt q = floor_div(b, a);
    BigInt rem = b - q * a;
    if (rem == 0) {
      col_submul(w, p, q);
      continue;
    }
    // gcd improvement: replace the pivot, keep reducing the remainder.
    BigInt g, x, y;
    ext_gcd(a, b, g, x, y);
    Column newp;
    newp.reserve(p.size() + w.size());
    {
      size_t i = 0, j = 0;
      while (i < p.size() || j < w.size()) {
        if (j == w.size() || (i < p.size() && p[i].first < w[j].first)) {
          BigInt v = x * p[i].second;
          if (v != 0) newp.emplace_back(p[i].first, std::move(v));
          ++i;
        } else if (i == p.size() || w[j].first < p[i].first) {
          BigInt v = y * w[j].second;
          if (v != 0) newp.emplace_back(w[j].first, std::move(v));
          ++j;
        } else {
          BigInt v = x * p[i].second + y * w[j].second;
          if (v != 0) newp.emplace_back(p[i].first, std::move(v));
          ++i, ++j;
        }
      }
    }
    Column neww;
    neww.reserve(p.size() + w.size());
    {
      BigInt ca = a / g, cb = b / g;
      size_t i = 0, j = 0;
      while (i < p.size() || j < w.size()) {
        if (j == w.size() || (i < p.size() && p[i].first < w[j].first)) {
          BigInt v = -cb * p[i].second;
          if (v != 0) neww.emplace_back(p[i].first, std::move(v));
          ++i;
        } else if (i == p.size() || w[j].first < p[i].first) {
          BigInt v = ca * w[j].second;
          if (v != 0) neww.emplace_back(w[j].first, std::move(v));
          ++j;
        } else {
          BigInt v = ca * w[j].second - cb * p[i].second;
          if (v != 0) neww.emplace_back(w[j].first, std::move(v));
          ++i, ++j;
        }
      }
    }
    assert(!newp.empty() && newp.front().first == r && newp.front().second == g);
    detach(slot);
    slots_[static_cast<size_t>(slot)].col = std::move(newp);
    attach(slot);
    back_reduce_row(r);
    w = std::move(neww);
    assert(w.empty() || w.front().first > r);
  }
}

SparseIntMatrix LatticeReducer::basis() const {
  SparseIntMatrix m(rows_, rank());
  int k = 0;
  for (int row : pivot_of_row_) {
    const Column& col = slots_[static_cast<size_t>(slot_of_row_[static_cast<size_t>(row)])].col;
    m.columns[static_cast<size_t>(k)].assign(col.begin(), col.end());
    ++k;
  }
  return m;
}

namespace {

void require_complex(const SparseIntMatrix& d_out, const SparseIntMatrix& d_in) {
  if (d_out.cols != d_in.rows)
    fail(Errc::not_a_complex, "dimension mismatch: d_out has " + std::to_string(d_out.cols) +
                                  " columns, d_in has " + std::to_string(d_in.rows) + " rows");

  // d_out * d_in must vanish.
  std::vector<std::pair<int, BigInt>> acc;
  for (int j = 0; j < d_in.cols; ++j) {
    acc.clear();
    for (const auto& [r, v] : d_in.columns[static_cast<size_t>(j)])
      for (const auto& [rr, vv] : d_out.columns[static_cast<size_t>(r)])
        acc.emplace_back(rr, v * vv);
    std::sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    BigInt sum = 0;
    for (size_t i = 0; i < acc.size(); ++i) {
      sum += acc[i].second;
      if (i + 1 == acc.size() || acc[i + 1].first != acc[i].first) {
        if (sum != 0)
          fail(Errc::not_a_complex, "d_out * d_in nonzero at column " + std::to_string(j));
        sum = 0;
      }
    }
  }
}

}  // namespace

HomologyResult homology(const SparseIntMatrix& d_out, const SparseIntMatrix& d_in) {
  require_complex(d_out, d_in);

  LatticeReducer ker_rank(d_out.rows);
  for (const auto& col : d_out.columns) ker_rank.add({col.begin(), col.end()});
  long long nullity = static_cast<long long>(d_out.cols) - ker_rank.rank();

  LatticeReducer image(d_in.rows);
  for (const auto& col : d_in.columns) image.add({col.begin(), col.end()});

  SnfResult snf = smith_normal_form(image.basis());

  HomologyResult out;
  out.free_rank = nullity - snf.rank;
  assert(out.free_rank >= 0);
  const BigInt ll_max = std::numeric_limits<long long>::max();
  for (auto it = snf.invariants.rbegin(); it != snf.invariants.rend(); ++it) {
    if (*it == 1) continue;
    if (*it > ll_max) fail(Errc::unsupported_order, "torsion coefficient too large");
    out.torsion.factors.push_back(it->convert_to<long long>());
  }
  return out;
}

namespace {

long long mod_inverse(long long a, long long m) {
  long long r0 = a % m, r1 = m, x0 = 1, x1 = 0;
  while (r1 != 0) {
    const long long q = r0 / r1;
    long long t = r0 - q * r1; r0 = r1; r1 = t;
    t = x0 - q * x1; x0 = x1; x1 = t;
  }
  x0 %= m;
  return x0 < 0 ? x0 + m : x0;
}

// Streaming column echelon over Z/p^B that pivots on units only. A column
// with no unit entry left is set aside; once the whole level is fed, the
// survivors are divided by p and run again one level down. Each pivot found
// at level j certifies an invariant factor p^j, because the pivot columns
// stay triangular across levels: a column is always clean at every pivot row
// that existed when it was inserted, same-level back-reduction cleans the
// earlier columns of its own level, and an entry a later level leaves in an
// earlier column sits below that column's own valuation floor.
class PPrimaryEchelon {
 public:
  using Entry = std::pair<int, long long>;
  using Col = std::vector<Entry>;

  PPrimaryEchelon(int rows, long long p, int levels)
      : p_(p), levels_(levels), pivot_slot_(static_cast<size_t>(rows), -1),
        level_slots_(static_cast<size_t>(levels)), level_count_(static_cast<size_t>(levels), 0) {
    modulus_ = 1;
    for (int i = 0; i < levels; ++i) modulus_ *= p;
  }

  void consume(const SparseIntMatrix& m) {
    std::vector<Col> deferred;
    Col w;
    for (const auto& sparse_col : m.columns) {
      w.clear();
      for (const auto& [r, v] : sparse_col) {
        long long val = (v % modulus_).convert_to<long long>();
        if (val < 0) val += modulus_;
        if (val != 0) w.emplace_back(r, val);
      }
      feed(w, deferred);
    }
    while (!deferred.empty() && modulus_ > p_) {
      modulus_ /= p_;
      ++level_;
      std::vector<Col> next;
      for (Col& c : deferred) {
        for (auto& e : c) e.second = (e.second / p_) % modulus_;
        c.erase(std::remove_if(c.begin(), c.end(), [](const Entry& e) { return e.second == 0; }),
                c.end());
        feed(c, next);
      }
      deferred = std::move(next);
    }
  }

  int rank() const {
    int r = 0;
    for (long long c : level_count_) r += static_cast<int>(c);
    return r;
  }

  const std::vector<long long>& level_count() const { return level_count_; }

 private:
  struct Slot {
    Col col;
    int lead_row;
    int level;
  };

  long long p_;
  int levels_;
  long long modulus_ = 1;
  int level_ = 0;
  std::vector<int> pivot_slot_;
  std::vector<std::vector<int>> level_slots_;  // pivots made at each level
  std::vector<Slot> slots_;
  std::vector<long long> level_count_;
  std::vector<int> hits_;
  Col scratch_;

  static long long value_at(const Col& c, int row) {
    const auto it = std::lower_bound(c.begin(), c.end(), row,
                                     [](const Entry& e, int r) { return e.first < r; });
    return it != c.end() && it->first == row ? it->second : 0;
  }

  // dst -= q * src modulo the current level's modulus; both sorted by row.
  void submul(Col& dst, const Col& src, long long q) {
    if (q == 0) return;
    scratch_.clear();
    scratch_.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
      if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
        scratch_.push_back(dst[i++]);
      } else if (i == dst.size() || src[j].first < dst[i].first) {
        long long v = (-q * (src[j].second % modulus_)) % modulus_;
        if (v < 0) v += modulus_;
        if (v != 0) scratch_.emplace_back(src[j].first, v);
        ++j;
      } else {
        long long v = (dst[i].second - q * (src[j].second % modulus_)) % modulus_;
        if (v < 0) v += modulus_;
        if (v != 0) scratch_.emplace_back(dst[i].first, v);
        ++i, ++j;
      }
    }
    dst.swap(scratch_);
  }

  void feed(Col& w, std::vector<Col>& deferred) {
    // One pass per pivot level, shallowest first. A pivot column holds no
    // entry at any other pivot row of its own or a shallower level, so an
    // elimination only ever spills onto rows pivoted at deeper levels and a
    // single ascending sweep clears every pivot row from w.
    for (int lv = 0; lv <= level_ && !w.empty(); ++lv) {
      hits_.clear();
      for (const auto& [r, v] : w) {
        const int slot = pivot_slot_[static_cast<size_t>(r)];
        if (slot >= 0 && slots_[static_cast<size_t>(slot)].level == lv) hits_.push_back(slot);
      }
      for (const int s : hits_) {
        const Slot& sl = slots_[static_cast<size_t>(s)];
        submul(w, sl.col, value_at(w, sl.lead_row));
      }
    }
    if (w.empty()) return;

    int lead = -1;
    for (const auto& [r, v] : w)
      if (v % p_ != 0) { lead = r; break; }
    if (lead < 0) {
      deferred.push_back(std::move(w));
      return;
    }

    const long long inv = mod_inverse(value_at(w, lead), modulus_);
    for (auto& e : w) e.second = (e.second * inv) % modulus_;

    const int slot = static_cast<int>(slots_.size());
    slots_.push_back(Slot{std::move(w), lead, level_});
    pivot_slot_[static_cast<size_t>(lead)] = slot;
    ++level_count_[static_cast<size_t>(level_)];

    // Clear the new lead row out of this level's other columns so same-level
    // pivot columns stay mutually clean.
    auto& mates = level_slots_[static_cast<size_t>(level_)];
    const Col& fresh = slots_[static_cast<size_t>(slot)].col;
    for (const int s : mates) {
      Slot& other = slots_[static_cast<size_t>(s)];
      submul(other.col, fresh, value_at(other.col, lead));
    }
    mates.push_back(slot);
  }
};

}  // namespace

HomologyResult homology_p_primary(const SparseIntMatrix& d_out, const SparseIntMatrix& d_in,
                                  long long p, int e) {
  if (p < 2 || e < 0) fail(Errc::semantic_error, "p-primary homology needs p >= 2 and e >= 0");
  require_complex(d_out, d_in);

  PPrimaryEchelon out_rank(d_out.rows, p, e + 1);
  out_rank.consume(d_out);
  const long long nullity = static_cast<long long>(d_out.cols) - out_rank.rank();

  PPrimaryEchelon image(d_in.rows, p, e + 1);
  image.consume(d_in);

  HomologyResult out;
  out.free_rank = nullity - image.rank();
  const std::vector<long long>& levels = image.level_count();
  for (int lv = static_cast<int>(levels.size()) - 1; lv >= 1; --lv) {
    long long d = 1;
    for (int i = 0; i < lv; ++i) d *= p;
    for (long long i = 0; i < levels[static_cast<size_t>(lv)]; ++i) out.torsion.factors.push_back(d);
  }
  return out;
}

}  // namespace schur
