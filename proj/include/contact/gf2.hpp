#pragma once
// Dense bit-packed matrices over the field of two elements.

#include <cstdint>
#include <optional>
#include <vector>

namespace contact::gf2 {

using Vec = std::vector<std::uint64_t>;

inline std::size_t words(std::size_t bits) { return (bits + 63) / 64; }
inline bool get(const Vec& v, std::size_t i) { return (v[i >> 6] >> (i & 63)) & 1u; }
inline void flip(Vec& v, std::size_t i) { v[i >> 6] ^= std::uint64_t{1} << (i & 63); }
inline void set(Vec& v, std::size_t i) { v[i >> 6] |= std::uint64_t{1} << (i & 63); }
inline void add_into(Vec& a, const Vec& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] ^= b[k];
}
bool is_zero(const Vec& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, Vec(words(cols), 0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return gf2::get(data_[r], c); }
  void flip(std::size_t r, std::size_t c) { gf2::flip(data_[r], c); }
  void set(std::size_t r, std::size_t c) { gf2::set(data_[r], c); }
  const Vec& row(std::size_t r) const { return data_[r]; }
  Vec& row(std::size_t r) { return data_[r]; }

  std::size_t rank() const;
  // Some x with A x = b, or nullopt. b has rows() bits.
  std::optional<Vec> solve(const Vec& b) const;
  // Basis of {x : A x = 0}.
  std::vector<Vec> nullspace() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Vec> data_;
};

// Vectors of `pool` spanning a complement of span(`base`) inside span(base + pool).
std::vector<Vec> complement_basis(const std::vector<Vec>& base, const std::vector<Vec>& pool, std::size_t bits);

}  // namespace contact::gf2
