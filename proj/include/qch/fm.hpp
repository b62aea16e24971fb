#ifndef QCH_FM_HPP
#define QCH_FM_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qch/cartan.hpp"
#include "qch/monomial.hpp"

namespace qch {

/// Per-monomial working state: total coefficient s plus one coloring s_i per
/// node, 0 <= s_i <= s. s_i records how much of the coefficient has been
/// explained by expansions in direction i; s_i == s means saturated there.
struct ColoredTerm {
    long long coeff = 0;
    std::vector<long long> coloring;
};

struct ColoredPolynomial {
    std::map<YMonomial, ColoredTerm> terms;

    bool contains(const YMonomial& m) const { return terms.count(m) != 0; }
    const ColoredTerm* find(const YMonomial& m) const;
};

/// Finished q-character: coefficients only, colorings stripped.
struct QCharacter {
    AlgebraSpec algebra;
    YMonomial highest;
    std::map<YMonomial, long long> terms;

    long long total() const;  // sum of coefficients
};

/// A monomial that blocks the main loop: some node i has coloring s_i < s
/// while the monomial is not i-dominant. deficient_nodes lists exactly those
/// violating nodes.
struct Offender {
    YMonomial monomial;
    long long coeff = 0;
    std::vector<long long> coloring;
    std::vector<int> deficient_nodes;
};

/// One nontrivial node expansion, for auditing a run. mu is the full expansion
/// list headed by the expanded monomial itself (coefficient 1).
struct ExpansionEvent {
    Weight weight;
    YMonomial monomial;
    int node = 0;
    std::vector<std::pair<YMonomial, long long>> mu;
};

struct FailureReport {
    Weight weight;                      // weight at which the check failed
    std::vector<Offender> offenders;    // all offenders at that weight
    ColoredPolynomial partial;          // state at the moment of failure
    std::vector<ExpansionEvent> trace;
};

struct Limits {
    long long max_height = 64;
    long long max_terms = 1000000;
    int max_injections = 8;
    int ancestor_depth = 4;
};

/// Raised when a run exceeds max_height, max_terms, or max_injections.
/// Deliberately distinct from an algorithmic failure (FailureReport).
struct LimitError : std::runtime_error {
    explicit LimitError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Processing-order override for the order-independence checks. canonical is
/// the default deterministic order (monomials ascending, nodes ascending).
enum class ProcessOrder { canonical, reversed, shuffled };

struct RunOptions {
    ProcessOrder order = ProcessOrder::canonical;
    unsigned long long seed = 0;  // used when order == shuffled
};

/// Outcome of a plain run: exactly one of character/failure is set. The final
/// colored state accompanies a successful character so saturation can be
/// inspected. trace holds every nontrivial expansion in processing order.
struct RunResult {
    std::optional<QCharacter> character;
    std::optional<ColoredPolynomial> colored;
    std::optional<FailureReport> failure;
    std::vector<ExpansionEvent> trace;

    bool ok() const { return character.has_value(); }
};

/// The iterative expansion algorithm. Seeds chi with `highest` (which must be
/// dominant and not the unit), then walks weights in height order, at each
/// weight first checking every monomial for admissibility (i-dominant wherever
/// unsaturated) and then expanding in every direction. Stops when no weight
/// below the frontier remains.
/// Throws std::invalid_argument on bad input and LimitError on cap breach.
RunResult run_fm(const AlgebraSpec& spec, const YMonomial& highest, const Limits& limits = {},
                 const RunOptions& options = {});

/// One expansion step, exposed for tests and the trace-back search: expands m
/// inside chi in direction `node`, updating coefficients and colorings, and
/// returns the expansion list mu (m first, then each product term with its
/// multiplicity). Precondition: m occurs in chi and is node-dominant wherever
/// unsaturated; violations throw std::invalid_argument.
std::vector<std::pair<YMonomial, long long>> expand_node(const AlgebraSpec& spec,
                                                         ColoredPolynomial& chi,
                                                         const YMonomial& m, int node);

/// Forgets the spectral parameter: weight -> summed coefficient.
std::map<Weight, long long> specialize_classical(const QCharacter& chi);

/// The dominant monomials of the character with their coefficients, in
/// canonical order.
std::vector<std::pair<YMonomial, long long>> dominant_monomials(const QCharacter& chi);

}  // namespace qch

#endif
