#include "degseq/precise.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>
#include <string>

#include "degseq/kernels.hpp"

namespace degseq {

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::HavelHakimiSorting: return "HHSo";
    case Algorithm::HavelHakimiShifting: return "HHSh";
    case Algorithm::HavelHakimiParity: return "HHP";
    case Algorithm::ErdosGallai: return "EG";
    case Algorithm::ErdosGallaiShortened: return "EGSh";
    case Algorithm::ErdosGallaiJumping: return "EGJ";
    case Algorithm::ErdosGallaiLinear: return "EGL";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  auto lower = [](std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
  };
  const std::string wanted = lower(name);
  for (Algorithm a : kAllAlgorithms) {
    if (lower(to_string(a)) == wanted) return a;
  }
  throw std::invalid_argument("UnknownAlgorithm: " + std::string(name));
}

namespace {

DecisionReport report(Algorithm algorithm, const kernels::Outcome& outcome) {
  DecisionReport r;
  r.algorithm = algorithm;
  r.graphical = outcome.pass;
  r.rounds = outcome.rounds;
  if (outcome.witness != 0) r.witness_index = outcome.witness;
  return r;
}

DecisionReport hh_sorting_impl(const DegreeSequence& seq, Algorithm tag) {
  std::vector<Degree> work(seq.values().begin(), seq.values().end());
  DecisionReport r;
  r.algorithm = tag;
  while (!work.empty()) {
    std::sort(work.begin(), work.end(), std::greater<>());
    const Degree lead = work.front();
    if (lead == 0) {
      r.graphical = true;
      return r;
    }
    work.erase(work.begin());
    ++r.rounds;
    if (static_cast<std::size_t>(lead) > work.size()) return r;
    for (Degree k = 0; k < lead; ++k) {
      if (--work[static_cast<std::size_t>(k)] < 0) return r;
    }
  }
  r.graphical = true;
  return r;
}

// Removes the lead element and lowers the next `lead` largest ones while the
// array stays non-increasing: inside the block holding the smallest affected
// value, the trailing positions are the ones decremented.
DecisionReport hh_shifting_impl(const DegreeSequence& seq, Algorithm tag) {
  std::vector<Degree> work(seq.values().begin(), seq.values().end());
  DecisionReport r;
  r.algorithm = tag;
  std::size_t start = 0;
  const std::size_t n = work.size();
  while (start < n && work[start] > 0) {
    const auto lead = static_cast<std::size_t>(work[start]);
    ++start;
    ++r.rounds;
    if (lead > n - start) return r;
    const std::size_t last = start + lead - 1;  // last affected position
    const Degree pivot = work[last];
    if (pivot == 0) return r;
    std::size_t block_begin = last;
    while (block_begin > start && work[block_begin - 1] == pivot) --block_begin;
    std::size_t block_end = last;
    while (block_end + 1 < n && work[block_end + 1] == pivot) ++block_end;
    for (std::size_t k = start; k < block_begin; ++k) --work[k];
    const std::size_t in_block = last - block_begin + 1;
    for (std::size_t k = block_end + 1 - in_block; k <= block_end; ++k) --work[k];
  }
  r.graphical = true;
  return r;
}

}  // namespace

DecisionReport hh_sorting(const DegreeSequence& seq) {
  return hh_sorting_impl(seq, Algorithm::HavelHakimiSorting);
}

DecisionReport hh_shifting(const DegreeSequence& seq) {
  return hh_shifting_impl(seq, Algorithm::HavelHakimiShifting);
}

DecisionReport hh_parity(const DegreeSequence& seq) {
  if (seq.sum() % 2 != 0) {
    DecisionReport r;
    r.algorithm = Algorithm::HavelHakimiParity;
    return r;
  }
  return hh_shifting_impl(seq, Algorithm::HavelHakimiParity);
}

DecisionReport eg_basic(const DegreeSequence& seq) {
  const PrefixProfile profile(seq);
  return report(Algorithm::ErdosGallai, kernels::eg_basic(seq.values(), profile.sums()));
}

DecisionReport eg_shortened(const DegreeSequence& seq) {
  const PrefixProfile profile(seq);
  return report(Algorithm::ErdosGallaiShortened,
                kernels::eg_shortened(seq.values(), profile.sums()));
}

DecisionReport eg_jumping(const DegreeSequence& seq) {
  const PrefixProfile profile(seq);
  return report(Algorithm::ErdosGallaiJumping, kernels::eg_jumping(seq.values(), profile.sums()));
}

DecisionReport eg_linear(const DegreeSequence& seq) {
  const PrefixProfile profile(seq);
  std::vector<std::size_t> weights(seq.size() + 1);
  return report(Algorithm::ErdosGallaiLinear,
                kernels::eg_linear(seq.values(), profile.sums(), weights));
}

std::optional<EdgeList> realize(const DegreeSequence& seq) {
  const std::size_t n = seq.size();
  struct Vertex {
    Degree residual;
    std::size_t id;
  };
  std::vector<Vertex> open;
  open.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) open.push_back({seq.at(k), k});

  EdgeList graph{.n = n, .edges = {}};
  auto by_degree = [](const Vertex& a, const Vertex& b) {
    return a.residual != b.residual ? a.residual > b.residual : a.id < b.id;
  };
  while (!open.empty()) {
    std::sort(open.begin(), open.end(), by_degree);
    const Vertex hub = open.front();
    if (hub.residual == 0) break;
    open.erase(open.begin());
    if (static_cast<std::size_t>(hub.residual) > open.size()) return std::nullopt;
    for (std::size_t k = 0; k < static_cast<std::size_t>(hub.residual); ++k) {
      if (open[k].residual == 0) return std::nullopt;
      --open[k].residual;
      graph.edges.emplace_back(std::min(hub.id, open[k].id), std::max(hub.id, open[k].id));
    }
  }
  std::sort(graph.edges.begin(), graph.edges.end());
  return graph;
}

DecisionReport is_graphical(const DegreeSequence& seq, Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::HavelHakimiSorting: return hh_sorting(seq);
    case Algorithm::HavelHakimiShifting: return hh_shifting(seq);
    case Algorithm::HavelHakimiParity: return hh_parity(seq);
    case Algorithm::ErdosGallai: return eg_basic(seq);
    case Algorithm::ErdosGallaiShortened: return eg_shortened(seq);
    case Algorithm::ErdosGallaiJumping: return eg_jumping(seq);
    case Algorithm::ErdosGallaiLinear: return eg_linear(seq);
  }
  throw std::invalid_argument("UnknownAlgorithm");
}

}  // namespace degseq
