#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "degseq/sequence.hpp"

namespace degseq {

enum class Algorithm {
  HavelHakimiSorting,   // HHSo
  HavelHakimiShifting,  // HHSh
  HavelHakimiParity,    // HHP
  ErdosGallai,          // EG
  ErdosGallaiShortened, // EGSh
  ErdosGallaiJumping,   // EGJ
  ErdosGallaiLinear,    // EGL
};

inline constexpr Algorithm kAllAlgorithms[] = {
    Algorithm::HavelHakimiSorting,   Algorithm::HavelHakimiShifting, Algorithm::HavelHakimiParity,
    Algorithm::ErdosGallai,          Algorithm::ErdosGallaiShortened,
    Algorithm::ErdosGallaiJumping,   Algorithm::ErdosGallaiLinear,
};

/// Short name: "HHSo", "EGL", ...
std::string_view to_string(Algorithm algorithm);

/// Case-insensitive lookup of the short name. Throws std::invalid_argument
/// (UnknownAlgorithm) otherwise.
Algorithm parse_algorithm(std::string_view name);

struct DecisionReport {
  bool graphical = false;
  Algorithm algorithm = Algorithm::ErdosGallaiLinear;
  // HH variants: reduction rounds. EGJ and EGSh: inequality evaluations.
  // Others: 0.
  std::uint64_t rounds = 0;
  std::optional<std::size_t> witness_index;
};

struct EdgeList {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // 1 <= u < v <= n, sorted
};

DecisionReport hh_sorting(const DegreeSequence& seq);
DecisionReport hh_shifting(const DegreeSequence& seq);
DecisionReport hh_parity(const DegreeSequence& seq);
DecisionReport eg_basic(const DegreeSequence& seq);
DecisionReport eg_shortened(const DegreeSequence& seq);
DecisionReport eg_jumping(const DegreeSequence& seq);
DecisionReport eg_linear(const DegreeSequence& seq);

/// Havel-Hakimi construction. Vertex k carries degree b_k; ties between equal
/// residual degrees go to the lower vertex index.
std::optional<EdgeList> realize(const DegreeSequence& seq);

DecisionReport is_graphical(const DegreeSequence& seq,
                            Algorithm algorithm = Algorithm::ErdosGallaiLinear);

}  // namespace degseq
