#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linerig/certificate.hpp"
#include "linerig/refute.hpp"

namespace linerig {

enum class VerdictKind { ur, not_ur, undecided };

const char* to_string(VerdictKind kind);

struct AnalyzeConfig {
  std::uint64_t seed = 1;
  std::vector<int> dims{2, 3};
  /// Flex-search restarts per dimension and per sampled realization.
  int restarts = 100;
  /// Generic realizations sampled in graph mode. Those with a realization
  /// certificate are skipped; the others go to the flex search.
  int realizations = 32;
  SearchConfig search;
};

struct Budget {
  std::uint64_t seed = 0;
  std::vector<int> dims;
  int restarts_per_dim = 0;
  int restarts_used = 0;
  int realizations_tried = 0;
  double elapsed_ms = 0.0;
};

struct Verdict {
  VerdictKind kind = VerdictKind::undecided;
  CertMode mode = CertMode::generic;
  std::optional<Certificate> certificate;
  std::optional<RefutationReason> reason;
  std::string diagnostics;
  Budget budget;
  std::string input_digest;
};

/// Generic question for a graph: edge bound, peeling, generic certificate
/// search, then flex search on sampled generic realizations.
Verdict analyze(const Graph& g, const AnalyzeConfig& config = {});

/// Question for one 1-D framework: realization certificate search, then flex
/// search. The graph-level bounds are skipped because they speak only about
/// generic realizations.
Verdict analyze(const Framework& f, const AnalyzeConfig& config = {});

/// Re-checks the payload of a verdict against its input, independently of the search.
bool verify_verdict(const Verdict& v, const Graph& g, const Realization* p = nullptr);

/// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(const std::string& data);

}  // namespace linerig
