#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tropknap/base/witness.hpp"
#include "tropknap/core/seed.hpp"

namespace tk::base {

// Max-plus (profit) or min-plus (weight) product of two non-decreasing
// sequences by the bounded monotone routines. Values are shifted down to a
// zero base first, so M is the larger spread of the two inputs.
MonotoneSeq tropical_product(const MonotoneSeq& a, const MonotoneSeq& b, Sense sense, const SeedCtx& seed);

// Adds a product node. The result is clipped to `keep` and, when `cap` is
// given, finite values above it become cap + 1.
NodeId product_node(WitnessTree& tree, NodeId a, NodeId b, const SeedCtx& seed,
                    IntInterval keep = {0, ExtInt::kPosInf - 1}, std::optional<std::int64_t> cap = std::nullopt);

// Balanced product tree over `nodes` (at least one).
NodeId product_all(WitnessTree& tree, std::vector<NodeId> nodes, const SeedCtx& seed,
                   IntInterval keep = {0, ExtInt::kPosInf - 1}, std::optional<std::int64_t> cap = std::nullopt);

// Entrywise max (profit) or min (weight) over the union window.
NodeId best_of(WitnessTree& tree, std::vector<NodeId> nodes);

// Running max over indices <= j (profit) or running min over indices >= j
// (weight) of the child, evaluated on `out`.
NodeId running_node(WitnessTree& tree, NodeId child, IntInterval out);

// Node with a restricted copy of another node's sequence (same witness).
NodeId restricted_node(WitnessTree& tree, NodeId child, IntInterval index, IntInterval value);

}  // namespace tk::base
