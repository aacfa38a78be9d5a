#pragma once
// Bounded complexes of shifted projectives P(Γ) over R_{n,e} and their homotopy category.
//
// A summand sits at cohomological position h; differentials raise h by one. Matrix entries
// are single basis elements (γ_i|γ_j) or zero, so every matrix is a set of index pairs.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "contact/divset.hpp"

namespace contact {

struct ShapeMismatch : Error { using Error::Error; };

struct ProjSummand {
  DividingSet gamma;  // basic
  int h = 0;
  friend bool operator==(const ProjSummand& a, const ProjSummand& b) { return a.gamma == b.gamma && a.h == b.h; }
};

using Entries = std::set<std::pair<int, int>>;

struct Complex {
  int n = 0, e = 0;
  std::vector<ProjSummand> summands;
  Entries d;

  int size() const { return static_cast<int>(summands.size()); }
  std::vector<std::uint32_t> masks() const;
  friend bool operator==(const Complex& a, const Complex& b) {
    return a.n == b.n && a.e == b.e && a.summands == b.summands && a.d == b.d;
  }
};

// Degree-k map: entry (i,j) needs tight(γ_i, γ'_j) and h'_j = h_i + k.
struct ChainMap {
  Complex src, dst;
  int k = 0;
  Entries f;
};
// Same shape as a map of degree k-1; no chain-map law.
using Homotopy = ChainMap;

Complex projective(const DividingSet& g, int h = 0);

// Empty string when C is a complex; otherwise the first defect found.
std::string complex_defect(const Complex& c);
bool verify_complex(const Complex& c);
std::string chain_map_defect(const ChainMap& f);
bool is_chain_map(const ChainMap& f);

// C[s]: the summand at position h moves to h - s.
Complex shift(const Complex& c, int s);
// f then g, i.e. g∘f; degrees add.
ChainMap compose(const ChainMap& f, const ChainMap& g);
ChainMap add(const ChainMap& f, const ChainMap& g);
ChainMap identity(const Complex& c);
ChainMap zero_map(const Complex& c, const Complex& d, int k);
// The degree-k map C -> D viewed as a degree-0 map C -> D[k].
ChainMap as_degree_zero(const ChainMap& f);
// C_src[1] ⊕ C_dst with the block differential. Needs k = 0.
Complex cone(const ChainMap& f);

// Composite of entry sets a: A -> B, b: B -> C under the tightness gate.
Entries compose_entries(const std::vector<std::uint32_t>& ma, const Entries& a, const Entries& b,
                        const std::vector<std::uint32_t>& mc);

// D(h) = d'∘h + h∘d for a degree-k map h.
ChainMap boundary(const Homotopy& h);
int hom_dim(const Complex& c, const Complex& d, int k);
// Σ_k hom_dim over all degrees where maps can exist.
int hom_total(const Complex& c, const Complex& d);
// Cocycle representatives of a basis of H^k Hom(C, D).
std::vector<ChainMap> hom_basis(const Complex& c, const Complex& d, int k);

std::optional<Homotopy> find_homotopy(const ChainMap& f, const ChainMap& g);
bool is_nullhomotopic(const ChainMap& f);
bool is_contractible(const Complex& c);
bool is_homotopy_equivalence(const ChainMap& f);
// Degree-0 equivalence search over H^0 combinations; capped at 2^kEquivalenceSearchBits.
inline constexpr int kEquivalenceSearchBits = 12;
std::optional<ChainMap> find_equivalence(const Complex& c, const Complex& d);
bool equivalent(const Complex& c, const Complex& d);
// Equivalence in the ungraded category: the s with c ≃ shift(d, s), if any.
std::optional<int> equivalent_up_to_shift(const Complex& c, const Complex& d);

// Cancels every identity entry (γ_s = γ_t) by Gaussian elimination; homotopy equivalent to the input.
Complex minimize(const Complex& c);
// Class in K0 = Z^{B_{n,e}}, keyed by based mask.
std::map<std::uint32_t, int> euler_char(const Complex& c);

// Projective resolution of the Serre image of P(Γ). Throws NotBasic.
Complex serre_resolution(const DividingSet& g);
// Total complex after replacing every summand by its Serre resolution; returned minimized.
Complex serre_transform(const Complex& c);

std::string describe(const Complex& c);

}  // namespace contact
