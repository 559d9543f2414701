#pragma once
// Global relations among row symmetries, truncation to boundary Wilson loops,
// the phi anyon-labeling invariant, mutual statistics and mobility checks on
// the periodic models.

#include <string>
#include <utility>
#include <vector>

#include "core/models.hpp"

namespace stab {

struct GlobalRelation {
  std::string id;                    // "e","m" (toric); "g_110",... (star model)
  std::vector<std::string> factors;  // catalog labels whose product is identity
  Pauli product;                     // identity pattern, phase 0
};

// verified global relations of the periodic model
std::vector<GlobalRelation> global_relations(const SpinModel& model,
                                             const SymmetryCatalog& catalog);

struct Rect {
  int x0 = 0, x1 = 0, y0 = 0, y1 = 0;  // inclusive cell ranges
};

// product of the relation's generators truncated to the rectangle; the
// interior cancels, leaving a boundary loop
Pauli truncate_relation(const SpinModel& model, const GlobalRelation& rel, Rect rect);

struct SyndromeCell {
  std::string family;
  int x = 0, y = 0;
  auto operator<=>(const SyndromeCell&) const = default;
};

// stabilizer cells anticommuting with p
std::vector<SyndromeCell> syndrome(const SpinModel& model, const Pauli& p);

// endpoint sector labels of an open string ("1" for a closed loop)
std::pair<std::string, std::string> anyon_label_of_string(const SpinModel& model,
                                                          const Pauli& open_string);

// truncate, open along the top edge, label the endpoint excitations; asserts
// the label agrees across all given rectangles
std::string phi(const SpinModel& model, const GlobalRelation& rel,
                const std::vector<Rect>& rects);

// +1 / -1 from one crossing of a horizontal a-loop with a vertical b-loop
int mutual_statistics(const SpinModel& model, const std::string& a,
                      const std::string& b);

// true iff no single-site Pauli moves a string endpoint vertically without
// extra syndrome (exhaustive search near the endpoint)
bool restricted_mobility(const SpinModel& model);

}  // namespace stab
