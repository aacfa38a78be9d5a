#pragma once
// The GF(2) algebra R_{n,e}: basis pairs of tight basic dividing sets, the quiver, products.

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "contact/divset.hpp"

namespace contact {

// Basic sets of C_{n,e} with their tightness table; shared and immutable once built.
struct TightTable {
  int n = 0, e = 0;
  std::vector<std::uint32_t> masks;  // ascending
  std::vector<std::vector<char>> tight;
  int index_of(std::uint32_t mask) const;
};
const TightTable& tight_table(int n, int e);

struct BasisElem {
  DividingSet src, dst;
  friend bool operator<(const BasisElem& a, const BasisElem& b) {
    return a.src < b.src || (a.src == b.src && a.dst < b.dst);
  }
  friend bool operator==(const BasisElem& a, const BasisElem& b) { return a.src == b.src && a.dst == b.dst; }
};

struct AlgebraElement {
  std::set<BasisElem> terms;

  static AlgebraElement idempotent(const DividingSet& g);
  // Throws NotBasic / InvariantViolation when (src|dst) is not a basis element.
  static AlgebraElement generator(const DividingSet& src, const DividingSet& dst);
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
// a·b is the composite b∘a.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

int algebra_dimension(int n, int e);
// Quiver arrows Γ →s Γ': s ∈ Γ_*, s+1 ∉ Γ_*, Γ'_* = Γ_* with s replaced by s+1.
std::vector<std::pair<int, DividingSet>> arrows_from(const DividingSet& g);

struct PresentationReport {
  bool ok = true;
  int basis_size = 0;
  int arrows = 0;
  std::vector<std::string> failures;
};
PresentationReport verify_presentation(int n, int e);

std::string quiver_dot(int n, int e);
// Label string "P(s1,...,se)" naming a basic set by its non-zero based labels.
std::string basic_name(const DividingSet& g);

}  // namespace contact
