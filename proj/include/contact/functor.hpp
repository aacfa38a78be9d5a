#pragma once
// The functor F: dividing sets to complexes of projectives, bypasses to chain maps.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "contact/bypass.hpp"
#include "contact/divset.hpp"
#include "contact/kom.hpp"

namespace contact {

struct IndexNotApplicable : Error { using Error::Error; };

// One entry i_v ∈ {0..l_v} per v ∈ TPV(Γ).
struct OmittingIndex {
  std::map<NestVector, int> entries;
  int at(const NestVector& v) const { return entries.at(v); }
  friend bool operator==(const OmittingIndex&, const OmittingIndex&) = default;
  friend bool operator<(const OmittingIndex& a, const OmittingIndex& b) { return a.entries < b.entries; }
};

// Summand data of F(Γ). Index k of every vector is the k-th summand of `complex`.
struct FData {
  DividingSet gamma;
  std::vector<NestVector> tpv;
  std::vector<OmittingIndex> idx;
  std::vector<std::uint32_t> omitted;  // mask of omitted labels
  std::vector<int> h;                  // coh_degree; the summand sits at position -h
  std::map<std::uint32_t, int> by_omitted;
  Complex complex;

  int index_of(const OmittingIndex& i) const;
};
// Cached per dividing set; safe to call concurrently.
const FData& f_data(const DividingSet& g);

std::vector<OmittingIndex> omitting_indices(const DividingSet& g);
DividingSet gamma_of(const DividingSet& g, const OmittingIndex& i);
int coh_degree(const DividingSet& g, const OmittingIndex& i);

struct DiffMove {
  NestVector v;
  OmittingIndex target;
  bool shuffling = false;
};
// Sliding and shuffling vectors at i with their v-modified indices.
std::vector<DiffMove> differential_data(const DividingSet& g, const OmittingIndex& i);

Complex build_F(const DividingSet& g);

// Region ids of the negative regions of Γ.
std::vector<int> negative_regions(const DividingSet& g);
// The part of d_Γ whose moves cross the given negative region.
Entries negative_region_differential(const DividingSet& g, int region);

enum class ShuffleType { Y, Z, Neither };

struct SplitData {
  std::vector<int> II, SI;  // summand indices of F(Γ)
  ShuffleType type = ShuffleType::Neither;
  std::vector<NestVector> lsv;
  std::optional<std::pair<NestVector, int>> wk;  // (w(β), k(β)) for type Z
};
SplitData split_indices(const BypassMove& mv);
// β(i) for i ∈ II ⊔ SI. Throws IndexNotApplicable otherwise.
OmittingIndex index_image(const BypassMove& mv, const OmittingIndex& i);

ChainMap chain_map_F(const BypassMove& mv);
// h(i) - h(β(i)), checked constant over II ⊔ SI.
int deg_F(const BypassMove& mv);
// Closed three-case formula keyed by the zero region.
int deg_formula(const BypassMove& mv);

// F(γ) from F(Γ₁) to F(Γ₃) for the triangle Γ₁ → Γ₂ → Γ₃.
ChainMap gamma_chain_map(const Triangle& t);

// A shortest bypass chain Γ → ... → Γ' through sets X with Hom(Γ,X), Hom(X,Γ') nonzero.
std::optional<std::vector<BypassMove>> morphism_decomposition(const DividingSet& g, const DividingSet& g2);
// nullopt is the zero morphism.
std::optional<ChainMap> F_of_morphism(const DividingSet& g, const DividingSet& g2);

int canonical_grading_shift(const BypassMove& mv);

struct GradedObject {
  DividingSet gamma;
  int a = 0;
};
Complex lift_F(const GradedObject& obj);
// Degree-0 map from lift_F(Γ, a) to lift_F(Γ', a + c(β)).
ChainMap lift_morphism(const BypassMove& mv, int a);

// Bypasses β0, β1 on Γ with disjoint attaching hexagons, commuting to the same Γ̃.
struct DisjointPair {
  BypassMove b0, b1;
  BypassMove b1_after_b0, b0_after_b1;
  DividingSet g0, g1, target;
};
std::vector<DisjointPair> disjoint_pairs(const DividingSet& g);

}  // namespace contact
