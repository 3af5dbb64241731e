#include "ordpart/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

namespace ordpart {

std::vector<BigInt> SmithResult::nontrivial_factors() const {
  std::vector<BigInt> out;
  for (const BigInt& d : invariant_factors) {
    if (d != 1) out.push_back(d);
  }
  return out;
}

namespace {

// Quotient rounded to nearest, so the remainder satisfies |r| <= |b|/2.
BigInt round_div(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  BigInt r2 = 2 * abs(r);
  if (r2 > abs(b)) {
    q += (sgn(r) == sgn(b)) ? 1 : -1;
  }
  return q;
}

class Eliminator {
 public:
  Eliminator(const SparseIntMatrix& m)
      : rows_(m.rows), cols_(m.cols), row_(m.rows), col_rows_(m.cols) {
    for (const auto& [r, c, v] : m.entries) {
      if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
        throw std::out_of_range("matrix entry out of range");
      }
      if (v != 0) row_[r][c] += static_cast<long>(v);
    }
    for (int r = 0; r < rows_; ++r) {
      std::erase_if(row_[r], [](const auto& e) { return e.second == 0; });
      for (const auto& [c, v] : row_[r]) col_rows_[c].insert(r);
    }
  }

  std::vector<BigInt> run() {
    std::vector<BigInt> diagonal;
    while (true) {
      int c = pick_column();
      if (c < 0) break;
      auto [r, cc] = isolate_pivot(c);
      diagonal.push_back(abs(row_[r].at(cc)));
      row_[r].clear();
      col_rows_[cc].clear();
    }
    return diagonal;
  }

 private:
  // Active column with the fewest entries.
  int pick_column() const {
    int best = -1;
    std::size_t best_size = 0;
    for (int c = 0; c < cols_; ++c) {
      std::size_t size = col_rows_[c].size();
      if (size > 0 && (best < 0 || size < best_size)) {
        best = c;
        best_size = size;
      }
    }
    return best;
  }

  // row_[dst] -= q * row_[src]
  void row_axpy(int dst, int src, const BigInt& q) {
    for (const auto& [c, v] : row_[src]) {
      auto it = row_[dst].find(c);
      if (it == row_[dst].end()) {
        row_[dst].emplace(c, -q * v);
        col_rows_[c].insert(dst);
      } else {
        it->second -= q * v;
        if (it->second == 0) {
          row_[dst].erase(it);
          col_rows_[c].erase(dst);
        }
      }
    }
  }

  // col dst -= q * col src; column src must be {pivot_row} or general.
  void col_axpy(int dst, int src, const BigInt& q) {
    std::vector<int> src_rows(col_rows_[src].begin(), col_rows_[src].end());
    for (int r : src_rows) {
      const BigInt& v = row_[r].at(src);
      auto it = row_[r].find(dst);
      if (it == row_[r].end()) {
        row_[r].emplace(dst, -q * v);
        col_rows_[dst].insert(r);
      } else {
        it->second -= q * v;
        if (it->second == 0) {
          row_[r].erase(it);
          col_rows_[dst].erase(r);
        }
      }
    }
  }

  // Reduce column c to one entry by Euclidean row operations.
  int reduce_column(int c) {
    while (col_rows_[c].size() > 1) {
      int pivot_row = -1;
      const BigInt* pivot = nullptr;
      for (int r : col_rows_[c]) {
        const BigInt& v = row_[r].at(c);
        if (!pivot || abs(v) < abs(*pivot) ||
            (abs(v) == abs(*pivot) &&
             row_[r].size() < row_[pivot_row].size())) {
          pivot = &v;
          pivot_row = r;
        }
      }
      std::vector<int> others;
      for (int r : col_rows_[c]) {
        if (r != pivot_row) others.push_back(r);
      }
      const BigInt pivot_value = *pivot;
      for (int r : others) {
        BigInt q = round_div(row_[r].at(c), pivot_value);
        if (q != 0) row_axpy(r, pivot_row, q);
      }
    }
    return *col_rows_[c].begin();
  }

  // Reduce row r to one entry by Euclidean column operations.
  int reduce_row(int r) {
    while (row_[r].size() > 1) {
      int pivot_col = -1;
      const BigInt* pivot = nullptr;
      for (const auto& [c, v] : row_[r]) {
        if (!pivot || abs(v) < abs(*pivot) ||
            (abs(v) == abs(*pivot) &&
             col_rows_[c].size() < col_rows_[pivot_col].size())) {
          pivot = &v;
          pivot_col = c;
        }
      }
      std::vector<int> others;
      for (const auto& [c, v] : row_[r]) {
        if (c != pivot_col) others.push_back(c);
      }
      const BigInt pivot_value = *pivot;
      for (int c : others) {
        BigInt q = round_div(row_[r].at(c), pivot_value);
        if (q != 0) col_axpy(c, pivot_col, q);
      }
    }
    return row_[r].begin()->first;
  }

  // Alternate row/column reduction until a pivot sits alone in its row and
  // column. Terminates: every remainder strictly shrinks the pivot.
  std::pair<int, int> isolate_pivot(int c) {
    while (true) {
      int r = reduce_column(c);
      if (row_[r].size() == 1) return {r, c};
      c = reduce_row(r);
      if (col_rows_[c].size() == 1) return {*col_rows_[c].begin(), c};
    }
  }

  int rows_, cols_;
  std::vector<std::map<int, BigInt>> row_;
  std::vector<std::set<int>> col_rows_;
};

}  // namespace

SmithResult smith_normal_form(const SparseIntMatrix& m) {
  Eliminator elim(m);
  std::vector<BigInt> diagonal = elim.run();

  SmithResult out;
  out.rank = static_cast<int>(diagonal.size());

  // diag(a, b) is equivalent to diag(gcd(a,b), lcm(a,b)); normalizing the
  // few nontrivial entries pairwise yields the divisibility chain.
  std::vector<BigInt> nontrivial;
  int ones = 0;
  for (BigInt& d : diagonal) {
    if (d == 1) {
      ++ones;
    } else {
      nontrivial.push_back(std::move(d));
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < nontrivial.size(); ++i) {
      for (std::size_t j = i + 1; j < nontrivial.size(); ++j) {
        if (nontrivial[j] % nontrivial[i] != 0) {
          BigInt g = gcd(nontrivial[i], nontrivial[j]);
          BigInt l = nontrivial[i] / g * nontrivial[j];
          nontrivial[i] = std::move(g);
          nontrivial[j] = std::move(l);
          changed = true;
        }
      }
    }
  }
  std::sort(nontrivial.begin(), nontrivial.end());
  out.invariant_factors.assign(ones, BigInt(1));
  for (BigInt& d : nontrivial) {
    out.invariant_factors.push_back(std::move(d));
  }
  return out;
}

}  // namespace ordpart
