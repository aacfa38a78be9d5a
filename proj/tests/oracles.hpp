#pragma once
// Reference implementations that share no code with the library.

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

// Every fixed-point-free involution of {0..points-1} with no crossing pair of chords,
// found by brute force over all perfect matchings.
std::vector<std::vector<int>> noncrossing_involutions(int points);

// Number of boundary regions containing an even arc, where arc p joins points p and p+1.
int positive_regions(const std::vector<int>& m);

// Matchings of 2n+2 points grouped by e = n + 1 - positive_regions.
std::map<int, std::vector<std::vector<int>>> matchings_by_e(int n);

long long binomial(int a, int b);

// Hom between basic sets given by their based-label masks: the differences must pair up
// as 0 < s1 < s1' < ... < sk < sk' with each [si, si'] meeting the source only in si.
bool interval_tight(std::uint32_t a, std::uint32_t b);

}  // namespace oracle
