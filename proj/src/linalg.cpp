#include "jacobi/linalg.hpp"

#include <algorithm>

#include "jacobi/error.hpp"

namespace jacobi {

namespace {

void make_primitive(std::vector<std::pair<int, BigInt>>& row) {
  if (row.empty()) return;
  BigInt g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  bool negate = row.back().second < 0;
  if (g != 1 || negate) {
    if (negate) g = -g;
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace

Eliminator::Eliminator(int columns) : columns_(columns), pivots_(columns) {}

Eliminator::IntRow Eliminator::reduce(IntRow row) const {
  IntRow next;
  while (!row.empty()) {
    int lead = row.back().first;
    const auto& piv = pivots_[lead];
    if (!piv) break;
    // row <- p * row - r * piv, with p the pivot's lead and r the row's lead.
    BigInt g;
    mpz_gcd(g.get_mpz_t(), piv->back().second.get_mpz_t(), row.back().second.get_mpz_t());
    BigInt p = piv->back().second / g;
    BigInt r = row.back().second / g;
    next.clear();
    size_t i = 0, j = 0;
    while (i < row.size() || j < piv->size()) {
      if (j == piv->size() || (i < row.size() && row[i].first < (*piv)[j].first)) {
        next.emplace_back(row[i].first, p * row[i].second);
        ++i;
      } else if (i == row.size() || (*piv)[j].first < row[i].first) {
        next.emplace_back((*piv)[j].first, -r * (*piv)[j].second);
        ++j;
      } else {
        BigInt v = p * row[i].second - r * (*piv)[j].second;
        if (v != 0) next.emplace_back(row[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    make_primitive(next);
    row.swap(next);
  }
  return row;
}

bool Eliminator::add(const SparseRow& row) {
  if (finalized_) throw Error("eliminator already finalized");
  BigInt l = 1;
  for (const auto& [c, q] : row) {
    if (c < 0 || c >= columns_) throw Error("column out of range");
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  IntRow ir;
  ir.reserve(row.size());
  for (const auto& [c, q] : row) {
    if (q == 0) continue;
    BigInt v = q.get_num() * (l / q.get_den());
    ir.emplace_back(c, std::move(v));
  }
  std::sort(ir.begin(), ir.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  // Merge repeated columns.
  IntRow merged;
  for (auto& e : ir) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(std::move(e));
  }
  std::erase_if(merged, [](const auto& e) { return e.second == 0; });
  make_primitive(merged);
  merged = reduce(std::move(merged));
  if (merged.empty()) return false;
  int lead = merged.back().first;
  pivots_[lead] = std::move(merged);
  ++rank_;
  return true;
}

void Eliminator::finalize() {
  if (finalized_) return;
  free_.clear();
  for (int c = 0; c < columns_; ++c)
    if (!pivots_[c]) free_.push_back(c);
  const size_t dim = free_.size();
  coords_.assign(columns_, Coordinates());
  size_t next_free = 0;
  for (int c = 0; c < columns_; ++c) {
    Coordinates v(dim);
    if (!pivots_[c]) {
      v[next_free++] = 1;
    } else {
      const auto& row = *pivots_[c];
      Rational lead(row.back().second);
      for (size_t k = 0; k + 1 < row.size(); ++k) {
        Rational f(row[k].second);
        f /= lead;
        const auto& sub = coords_[row[k].first];
        for (size_t i = 0; i < dim; ++i)
          if (sub[i] != 0) v[i] -= f * sub[i];
      }
    }
    coords_[c] = std::move(v);
  }
  pivots_.clear();
  pivots_.shrink_to_fit();
  finalized_ = true;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(std::vector<Coordinates>& m, int cols) {
  std::vector<int> pivots;
  size_t r = 0;
  for (int c = 0; c < cols && r < m.size(); ++c) {
    size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (int k = 0; k < cols; ++k)
        if (m[r][k] != 0) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int matrix_rank(std::vector<Coordinates> rows) {
  if (rows.empty()) return 0;
  int cols = static_cast<int>(rows[0].size());
  return static_cast<int>(rref(rows, cols).size());
}

std::vector<Coordinates> null_space(const std::vector<Coordinates>& a, int cols) {
  std::vector<Coordinates> m = a;
  auto piv = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<Coordinates> out;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Coordinates x(cols);
    x[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -m[r][f];
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<Coordinates> solve(const std::vector<Coordinates>& a, const Coordinates& b, int cols) {
  std::vector<Coordinates> m;
  m.reserve(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    Coordinates row = a[i];
    row.resize(cols);
    row.push_back(b[i]);
    m.push_back(std::move(row));
  }
  auto piv = rref(m, cols + 1);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  Coordinates x(cols);
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = m[r][cols];
  return x;
}

}  // namespace jacobi
