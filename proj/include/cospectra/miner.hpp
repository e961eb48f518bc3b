#pragma once

#include "cospectra/beta_solver.hpp"
#include "cospectra/graph.hpp"
#include "cospectra/real.hpp"
#include "cospectra/serialize.hpp"

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cospectra {

enum class Predicate {
    CospectralNonAutomorphic,
    WalkRegular,
    CrossingPair,
    RegularityCandidate,
};

std::string to_string(Predicate p);
/// Accepts cospectral-nonauto | walk-regular | crossing-pair | regularity-candidate.
Predicate parse_predicate(std::string_view name);

struct MineTask {
    std::vector<Predicate> predicates;
    int min_order = 1;
    int max_order = 62;
    Precision precision{50};
    /// Escalation target for borderline beta predicates.
    Precision escalated{100};
    ScanOptions scan;
    int workers = 1;
    /// Lines handed to a worker at a time.
    std::size_t chunk_lines = 64;
    /// Exact/double-precision prefilters before the expensive predicates.
    /// Turning them off must not change the findings.
    bool cheap_filters = true;
    /// Automorphism search bound for cospectral-nonauto.
    int automorphism_bound = 12;
};

/// One matched predicate on one input graph, with enough witness data to
/// re-check it from the graph6 string alone.
struct Finding {
    std::string graph6;
    /// 1-based input line.
    std::size_t line = 0;
    Predicate predicate = Predicate::WalkRegular;
    /// cospectral-nonauto: the pair; crossing-pair: the root's pair.
    std::optional<VertexPair> pair;
    /// cospectral-nonauto and walk-regular: w(1..n-1) of the (first) vertex.
    std::vector<Rational> walk_prefix;
    std::optional<BetaRoot> root;
    /// regularity-candidate: beta* and the small-height probe.
    std::optional<RegularityCandidate> candidate;
    /// Precision the beta witnesses were computed at.
    Precision precision;
};

Json to_json(const Finding& f);
/// Inverse of to_json; reals are re-read from their exact or decimal text.
Finding finding_from_json(const Json& j);

/// Re-runs the finding's predicate from the graph6 string and checks the
/// witness: exact equality for exact predicates, sign change, width and
/// residual bounds for roots.
bool verify_finding(const Finding& f);

struct MineDiagnostic {
    std::size_t line = 0;
    std::string message;
};

struct MineSummary {
    std::size_t lines = 0;
    std::size_t graphs = 0;
    std::size_t out_of_range = 0;
    std::size_t malformed = 0;
    std::map<Predicate, std::size_t> counts;
    std::vector<MineDiagnostic> diagnostics;
};

Json to_json(const MineSummary& s);

/// Reads newline-delimited graph6 from `input`, evaluates the task's
/// predicates on every graph and hands findings to `sink` in input order
/// (then predicate order), regardless of the worker count. Malformed lines
/// are skipped and reported in the summary.
MineSummary mine(std::istream& input, const MineTask& task, const std::function<void(const Finding&)>& sink);

} // namespace cospectra
