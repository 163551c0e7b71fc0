#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "internal/mask.hpp"

namespace dicol::internal {

// Result of canonically labelling a digraph given by out/in masks.
struct CanonResult {
  std::array<std::uint8_t, 64> lab{};  // lab[i] = vertex at canonical index i
  std::array<Mask, 64> cert{};         // rows of the relabelled adjacency matrix
  std::array<std::uint8_t, 64> orbit{};  // orbit representative per vertex
  std::vector<std::array<std::uint8_t, 64>> generators;
};

// out and in must describe the same digraph (in = transpose of out). For
// undirected graphs pass the adjacency masks twice.
CanonResult canonical_label(int n, const std::array<Mask, 64>& out, const std::array<Mask, 64>& in);

}  // namespace dicol::internal
