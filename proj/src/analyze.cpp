#include "linerig/analyze.hpp"

#include <chrono>
#include <cstdio>

#include "linerig/error.hpp"
#include "linerig/polyverify.hpp"
#include "linerig/serialize.hpp"

namespace linerig {

const char* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::ur: return "ur";
    case VerdictKind::not_ur: return "not_ur";
    case VerdictKind::undecided: return "undecided";
  }
  return "?";
}

std::string fnv1a_hex(const std::string& data) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(data)));
  return buf;
}

namespace {

using Clock = std::chrono::steady_clock;

Verdict start(const AnalyzeConfig& config, std::string digest, CertMode mode) {
  Verdict v;
  v.mode = mode;
  v.budget.seed = config.seed;
  v.budget.dims = config.dims;
  v.budget.restarts_per_dim = config.restarts;
  v.input_digest = std::move(digest);
  return v;
}

void stamp(Verdict& v, Clock::time_point t0) {
  v.budget.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool try_flex(Verdict& v, const Framework& f, const AnalyzeConfig& config, std::uint64_t seed) {
  FlexConfig flex;
  flex.dims = config.dims;
  flex.restarts = config.restarts;
  flex.seed = seed;
  auto found = flex_search(f, flex);
  ++v.budget.realizations_tried;
  if (!found) {
    v.budget.restarts_used += flex.restarts * static_cast<int>(flex.dims.size());
    return false;
  }
  v.budget.restarts_used += found->restarts_used;
  v.kind = VerdictKind::not_ur;
  v.reason = NumericReason{std::move(found->witness), found->restarts_used, found->dim};
  return true;
}

}  // namespace

Verdict analyze(const Graph& g, const AnalyzeConfig& config) {
  const auto t0 = Clock::now();
  Verdict v = start(config, fnv1a_hex(graph_to_json(g).dump()), CertMode::generic);

  if (auto r = edge_bound_refute(g)) {
    v.kind = VerdictKind::not_ur;
    v.reason = *r;
  } else if (auto chain = peel_refute(g)) {
    v.kind = VerdictKind::not_ur;
    v.reason = *chain;
  } else if (auto cert = search_certificate_generic(g, config.search)) {
    v.kind = VerdictKind::ur;
    v.certificate = std::move(cert);
  } else {
    // A sampled realization with its own certificate cannot flex, so only
    // the uncertified ones are handed to the flex search.
    int certified = 0;
    for (int i = 0; i < config.realizations; ++i) {
      const std::uint64_t seed = config.seed + 7919ULL * static_cast<std::uint64_t>(i);
      Framework f(g, sample_generic_1d(g.num_vertices(), seed));
      if (search_certificate_realization(f, config.search)) {
        ++certified;
        continue;
      }
      if (try_flex(v, f, config, seed)) break;
    }
    if (v.kind == VerdictKind::undecided)
      v.diagnostics = "no rule applies: no bound or peel refutation, no generic certificate; " +
                      std::to_string(certified) + " of " + std::to_string(config.realizations) +
                      " sampled realization(s) certified, no flex in the other " +
                      std::to_string(v.budget.realizations_tried);
  }
  stamp(v, t0);
  return v;
}

Verdict analyze(const Framework& f, const AnalyzeConfig& config) {
  const auto t0 = Clock::now();
  if (f.dim() != 1) throw Error("analyze: framework must be 1-dimensional");
  const std::string input = graph_to_json(f.graph).dump() + realization_to_json(f.realization).dump();
  Verdict v = start(config, fnv1a_hex(input), CertMode::realization);

  if (is_injective(f.realization)) {
    if (auto cert = search_certificate_realization(f, config.search)) {
      v.kind = VerdictKind::ur;
      v.certificate = std::move(cert);
    }
  } else {
    v.diagnostics = "realization is not injective; certificate search skipped";
  }
  if (v.kind == VerdictKind::undecided && !try_flex(v, f, config, config.seed)) {
    if (!v.diagnostics.empty()) v.diagnostics += "; ";
    v.diagnostics += "no certificate and no flex found";
  }
  stamp(v, t0);
  return v;
}

bool verify_verdict(const Verdict& v, const Graph& g, const Realization* p) {
  switch (v.kind) {
    case VerdictKind::ur: {
      if (!v.certificate) return false;
      const auto check = p && v.certificate->mode == CertMode::realization
                             ? verify_certificate(*v.certificate, Framework(g, *p))
                             : verify_certificate(*v.certificate, g);
      return check.ok && check.full;
    }
    case VerdictKind::not_ur: {
      if (!v.reason || !verify_reason(g, *v.reason)) return false;
      if (p) {
        const auto* numeric = std::get_if<NumericReason>(&*v.reason);
        return numeric && numeric->witness.base.realization == *p;
      }
      return true;
    }
    case VerdictKind::undecided: return !v.certificate && !v.reason;
  }
  return false;
}

}  // namespace linerig
