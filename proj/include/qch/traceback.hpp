#ifndef QCH_TRACEBACK_HPP
#define QCH_TRACEBACK_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qch/fm.hpp"

namespace qch {

/// Result of searching upward from an offender along one node's A-lattice.
/// considered: every node-dominant product offender * prod A[node,k], degree
/// ascending then canonical order. survivors: the considered candidates whose
/// own node expansion produces the offender, same ordering.
struct AncestorSearch {
    std::vector<YMonomial> survivors;
    std::vector<YMonomial> considered;
};

/// Enumerates candidate ancestors of a non-node-dominant offender: products of
/// A-monomials at the given node only, positions taken from {k' +- d : k' a
/// negative node entry of the offender}, up to depth_limit factors. (Such
/// products never create new negative entries at the node, so that position
/// set needs no further closure.)
/// Throws std::invalid_argument if the offender is already node-dominant or
/// depth_limit < 1.
AncestorSearch find_ancestors(const AlgebraSpec& spec, const YMonomial& offender, int node,
                              int depth_limit = 4);

/// Raised when the minimal-degree survivor of an ancestor search is not
/// unique, so no principled injection exists.
struct AmbiguityError : std::runtime_error {
    YMonomial offender;
    int node;
    std::vector<YMonomial> candidates;  // the tied minimal-degree survivors

    AmbiguityError(YMonomial off, int nd, std::vector<YMonomial> tied);
};

/// One repair step of the modified run.
struct InjectionRecord {
    YMonomial offender;
    int node = 0;
    YMonomial injected;
    Weight ancestor_weight;
    std::vector<YMonomial> candidates_considered;
};

/// Outcome of the modified run. On success: character (+ colored state) and
/// the injections that were needed (possibly none). If some offender has no
/// usable ancestor the original failure is reported instead.
struct ModifiedResult {
    std::optional<QCharacter> character;
    std::optional<ColoredPolynomial> colored;
    std::vector<InjectionRecord> injections;
    std::optional<FailureReport> failure;
    std::vector<ExpansionEvent> trace;

    bool ok() const { return character.has_value(); }
};

/// The main loop with ancestor injection: on each failure, searches upward
/// from the first offender (deficient nodes in ascending order), injects the
/// unique minimal-degree survivor with coefficient 1 and all-zero coloring,
/// and resumes from the start of the ancestor's height. Ties throw
/// AmbiguityError; more than limits.max_injections repairs throw LimitError.
ModifiedResult run_fm_modified(const AlgebraSpec& spec, const YMonomial& highest,
                               const Limits& limits = {});

/// Plain run with extra monomials placed into chi before the loop starts
/// (each coefficient 1, coloring all-zero). A successful modified run is
/// reproduced exactly by seeding its injected monomials here.
RunResult run_fm_seeded(const AlgebraSpec& spec, const YMonomial& highest,
                        const std::vector<YMonomial>& seeds, const Limits& limits = {});

}  // namespace qch

#endif
