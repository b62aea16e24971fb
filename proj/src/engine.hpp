#ifndef QCH_SRC_ENGINE_HPP
#define QCH_SRC_ENGINE_HPP

// Internal: the weight-ordered expansion loop shared by the plain and the
// modified (ancestor-injecting) runs.

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "qch/fm.hpp"

namespace qch::detail {

/// Total processing order on weights: height of lambda_+ - lambda ascending,
/// then the root-coordinate vector lexicographically. The empty vector sorts
/// before every real coordinate vector, which inject() uses to park the
/// cursor at the start of a height.
struct WeightKey {
    long long height = 0;
    std::vector<long long> avec;

    friend bool operator==(const WeightKey&, const WeightKey&) = default;
    friend auto operator<=>(const WeightKey&, const WeightKey&) = default;
};

/// One expansion step on the colored state: applies the closed-form expansion
/// of m's node projection, updates coefficients/colorings, saturates m at the
/// node, and returns the full expansion list headed by (m, 1). Monomials that
/// enter chi for the first time are appended to *created when non-null.
/// A saturated node is a no-op returning just {(m, 1)}.
std::vector<std::pair<YMonomial, long long>> expand_core(const AlgebraSpec& spec,
                                                         ColoredPolynomial& chi,
                                                         const YMonomial& m, int node,
                                                         std::vector<YMonomial>* created);

class Engine {
  public:
    Engine(const AlgebraSpec& spec, const YMonomial& highest, const Limits& limits,
           const RunOptions& options);

    enum class Status { done, failed };

    /// Pre-run injection of an extra monomial (coefficient 1 or increment,
    /// coloring reset to zero). Must be below the highest weight.
    void seed(const YMonomial& m);

    /// Mid-run injection: seed plus cursor reset to the start of the
    /// monomial's height so everything from there is re-processed.
    void inject(const YMonomial& m);

    /// Processes weights from the cursor until the frontier is exhausted
    /// (done) or an admissibility check fails (failed; see failure_*).
    Status run();

    const ColoredPolynomial& chi() const { return chi_; }
    const std::vector<ExpansionEvent>& trace() const { return trace_; }
    const Weight& failure_weight() const { return failure_weight_; }
    const std::vector<Offender>& offenders() const { return offenders_; }
    const YMonomial& highest() const { return highest_; }
    const Weight& highest_weight() const { return highest_weight_; }
    const AlgebraSpec& spec() const { return spec_; }

    FailureReport failure_report() const;

    /// Saturation-checked, coloring-stripped result. Only valid after run()
    /// returned done; inconsistencies throw std::logic_error.
    QCharacter character() const;

  private:
    struct Bucket {
        Weight weight;
        std::vector<YMonomial> monomials;  // insertion order; sorted on processing
    };

    WeightKey key_of(const Weight& w) const;
    void index_insert(const YMonomial& m);
    void add_seed(const YMonomial& m);
    void check_caps() const;

    AlgebraSpec spec_;
    YMonomial highest_;
    Weight highest_weight_;
    Limits limits_;
    RunOptions options_;

    ColoredPolynomial chi_;
    std::map<WeightKey, Bucket> index_;
    std::optional<WeightKey> cursor_;  // last fully processed key
    bool done_ = false;

    std::vector<ExpansionEvent> trace_;
    Weight failure_weight_;
    std::vector<Offender> offenders_;
};

}  // namespace qch::detail

#endif
