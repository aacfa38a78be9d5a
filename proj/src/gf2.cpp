#include "contact/gf2.hpp"

#include <algorithm>

namespace contact::gf2 {

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint64_t w) { return w == 0; });
}

namespace {
// Row echelon form of an augmented system; returns pivot column per pivot row.
struct Echelon {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
};

Echelon eliminate(std::vector<Vec> rows, std::size_t cols) {
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !get(rows[p], c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (k != r && get(rows[k], c)) add_into(rows[k], rows[r]);
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}
}  // namespace

std::size_t Matrix::rank() const { return eliminate(data_, cols_).pivots.size(); }

std::optional<Vec> Matrix::solve(const Vec& b) const {
  // Augment with b as column cols_.
  std::vector<Vec> aug(rows_, Vec(words(cols_ + 1), 0));
  for (std::size_t r = 0; r < rows_; ++r) {
    std::copy(data_[r].begin(), data_[r].end(), aug[r].begin());
    if (gf2::get(b, r)) gf2::set(aug[r], cols_);
  }
  Echelon e = eliminate(std::move(aug), cols_ + 1);
  Vec x(words(cols_), 0);
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    if (e.pivots[k] == cols_) return std::nullopt;
    if (gf2::get(e.rows[k], cols_)) gf2::set(x, e.pivots[k]);
  }
  return x;
}

std::vector<Vec> Matrix::nullspace() const {
  Echelon e = eliminate(data_, cols_);
  std::vector<char> is_pivot(cols_, 0);
  for (auto c : e.pivots) is_pivot[c] = 1;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Vec x(words(cols_), 0);
    gf2::set(x, f);
    for (std::size_t k = 0; k < e.pivots.size(); ++k)
      if (gf2::get(e.rows[k], f)) gf2::set(x, e.pivots[k]);
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Vec> complement_basis(const std::vector<Vec>& base, const std::vector<Vec>& pool, std::size_t bits) {
  // Incremental echelon basis keyed by leading bit.
  std::vector<Vec> basis;
  std::vector<std::size_t> lead;
  auto reduce = [&](Vec v) {
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (get(v, lead[k])) add_into(v, basis[k]);
    return v;
  };
  auto insert = [&](const Vec& v) {
    Vec r = reduce(v);
    for (std::size_t c = 0; c < bits; ++c)
      if (get(r, c)) {
        for (auto& b : basis)
          if (get(b, c)) add_into(b, r);
        basis.push_back(r);
        lead.push_back(c);
        return true;
      }
    return false;
  };
  for (const auto& v : base) insert(v);
  std::vector<Vec> out;
  for (const auto& v : pool)
    if (insert(v)) out.push_back(v);
  return out;
}

}  // namespace contact::gf2
