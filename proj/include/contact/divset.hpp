#pragma once
// Dividing sets on the marked disk: crossingless matchings of 2n+2 points
// together with their positive-region components keyed by nest vectors.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace contact {

using Label = int;
// Empty vector encodes the based symbol STAR.
using NestVector = std::vector<int>;
using ComponentMap = std::map<NestVector, std::vector<Label>>;
using Matching = std::vector<int>;

inline const NestVector STAR{};

std::string to_string(const NestVector& v);

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EulerMismatch : Error { using Error::Error; };
struct BadBase : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct InvalidDividingSet : Error { using Error::Error; };
struct InvariantViolation : Error { using Error::Error; };

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

class DividingSet {
 public:
  DividingSet() = default;

  // Throws InvalidDividingSet when validate() fails.
  static DividingSet from_components(int n, int e, const ComponentMap& comps);
  static DividingSet from_matching(const Matching& m, int n, int e);
  // Any partition of {0..n} into blocks; keys are recomputed.
  static DividingSet from_blocks(int n, const std::vector<std::vector<Label>>& blocks);

  int n() const { return n_; }
  int e() const { return e_; }
  const ComponentMap& components() const { return comps_; }
  const Matching& matching() const { return m_; }

  std::vector<NestVector> V() const;
  std::vector<NestVector> TPV() const;
  std::vector<NestVector> VNB() const;
  bool has(const NestVector& v) const { return comps_.count(v) != 0; }
  const std::vector<Label>& component(const NestVector& v) const;
  Label label(const NestVector& v, int i) const;
  int l(const NestVector& v) const { return static_cast<int>(component(v).size()) - 1; }
  const NestVector& key_of_label(Label s) const { return label_key_[s]; }
  bool is_basic() const;
  // Bitmask of the based component.
  std::uint32_t based_mask() const;

  int chi_plus() const { return n_ - e_ + 1; }
  int chi_minus() const { return e_ + 1; }
  int euler_class() const { return n_ - 2 * e_; }

  // Region structure. Arcs are indexed 0..2n+1, arc p joins points p and p+1.
  int region_of_arc(int p) const { return arc_region_[p]; }
  int region_count() const { return static_cast<int>(regions_.size()); }
  const std::vector<int>& region_arcs(int r) const { return regions_[r]; }
  // The positive region of a component, and the two regions bounding a chord.
  int region_of(const NestVector& v) const;
  std::pair<int, int> chord_regions(int point) const;
  // Chord c_j of a component joins 2u_j+1 and 2u_{j+1} (indices cyclic).
  std::pair<int, int> chord(const NestVector& v, int j) const;
  // Components whose boundary meets the given negative region.
  std::vector<NestVector> components_bordering(int region) const;
  bool borders(const NestVector& v, int region) const;

  friend bool operator==(const DividingSet& a, const DividingSet& b) { return a.m_ == b.m_; }
  friend bool operator<(const DividingSet& a, const DividingSet& b) { return a.m_ < b.m_; }

 private:
  void build_from_matching(const Matching& m, int n, int e);

  int n_ = 0;
  int e_ = 0;
  ComponentMap comps_;
  Matching m_;
  std::vector<NestVector> label_key_;
  std::vector<int> arc_region_;
  std::vector<std::vector<int>> regions_;
};

ValidationReport validate(int n, int e, const ComponentMap& comps);
ValidationReport validate(const DividingSet& ds);

Matching to_matching(const DividingSet& ds);
bool is_valid_matching(const Matching& m);
// Matching of a partition, without any validation.
Matching matching_of_blocks(int n, const std::vector<std::vector<Label>>& blocks);

std::vector<DividingSet> enumerate_objects(int n, int e);

DividingSet basic_of(int n, int e, const std::vector<Label>& based);
DividingSet basic_of_mask(int n, std::uint32_t mask);
bool is_basic(const DividingSet& ds);
std::vector<DividingSet> basic_sets(int n, int e);

struct NestingSets {
  std::vector<NestVector> nv;
  std::vector<NestVector> dnv;
};
NestingSets nesting_sets(const DividingSet& ds, const NestVector& v, int i);

// w = v ⊔ t for some t.
bool directly_nests(const NestVector& w, const NestVector& v);

std::string describe(const DividingSet& ds);

}  // namespace contact
