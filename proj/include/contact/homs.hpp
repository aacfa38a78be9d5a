#pragma once
// Morphism spaces of the contact category: edge rounding and tightness.

#include <cstdint>

#include "contact/divset.hpp"

namespace contact {

struct ComponentMismatch : Error { using Error::Error; };
struct NotBasic : Error { using Error::Error; };

// Side-gluing shift used by edge rounding.
inline constexpr int kEdgeRoundingShift = -1;

int rounded_components(const DividingSet& a, const DividingSet& b);
bool hom_nonzero(const DividingSet& a, const DividingSet& b);

bool tight_basic(const DividingSet& a, const DividingSet& b);
// Greedy criterion on based-component bitmasks.
bool tight_masks(std::uint32_t a, std::uint32_t b);

// Nontriviality of Hom(b,c) x Hom(a,b) -> Hom(a,c), searching a bypass chain a -> ... -> b
// that stays tight against c.
bool composition_nonzero(const DividingSet& a, const DividingSet& b, const DividingSet& c);
// Same decision, searching a chain b -> ... -> c that stays tight from a.
bool composition_nonzero_right(const DividingSet& a, const DividingSet& b, const DividingSet& c);

}  // namespace contact
