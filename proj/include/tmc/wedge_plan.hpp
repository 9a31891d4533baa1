#pragma once

#include <cstdint>

#include "tmc/core.hpp"
#include "tmc/motif.hpp"

namespace tmc {

// Two pattern positions that cover all three labels of a triadic motif: the
// anchor edge plus one partner edge through the center label. The remaining
// position is the closing edge, counted by binary search instead of matched.
struct WedgePlan {
  std::uint32_t anchor = 0;
  std::uint32_t partner = 0;
  std::uint32_t third = 0;
  std::uint32_t center = 0;        // motif label shared by anchor and partner
  bool partner_out = false;        // partner edge leaves the center label
  bool partner_after_anchor = false;
  MotifEdge anchor_edge;
  MotifEdge third_edge;
};

// center_choice picks which anchor endpoint label acts as the center; for
// Star33 the star center is forced and the argument is ignored. Only
// incidence matters here, never the pattern edge directions.
inline WedgePlan wedge_plan(const Motif& m, std::uint32_t anchor,
                            std::uint32_t center_choice) {
  MotifShape shape = classify(m);
  if (shape.cls == MotifClass::General) {
    throw UnsupportedMotifError("wedge plans need a 3-vertex 3-edge motif");
  }
  const MotifEdge& ae = m.edge(anchor);
  WedgePlan plan;
  plan.anchor = anchor;
  if (shape.cls == MotifClass::Star33) {
    plan.center = shape.center;
    // Spanning partner: together with the anchor it must touch all 3 labels.
    std::uint32_t spoke = ae.src == plan.center ? ae.dst : ae.src;
    plan.partner = 3;
    for (std::uint32_t p = 0; p < 3; ++p) {
      if (p == anchor) continue;
      const MotifEdge& pe = m.edge(p);
      std::uint32_t other = pe.src == plan.center ? pe.dst : pe.src;
      if (other != spoke) {
        plan.partner = p;
        break;  // positions scanned in increasing order, smaller one wins
      }
    }
    if (plan.partner == 3) throw InternalError("star motif has no spanning partner");
  } else {
    if (center_choice != ae.src && center_choice != ae.dst) {
      throw InternalError("triangle center must be an anchor endpoint label");
    }
    plan.center = center_choice;
    // The one other edge incident to the center.
    plan.partner = 3;
    for (std::uint32_t p = 0; p < 3; ++p) {
      if (p == anchor) continue;
      const MotifEdge& pe = m.edge(p);
      if (pe.src == plan.center || pe.dst == plan.center) {
        plan.partner = p;
        break;
      }
    }
    if (plan.partner == 3) throw InternalError("triangle center has no partner edge");
  }
  plan.third = 3 - anchor - plan.partner;
  plan.anchor_edge = ae;
  plan.third_edge = m.edge(plan.third);
  plan.partner_out = m.edge(plan.partner).src == plan.center;
  plan.partner_after_anchor = plan.partner > plan.anchor;
  return plan;
}

}  // namespace tmc
