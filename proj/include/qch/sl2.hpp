#ifndef QCH_SL2_HPP
#define QCH_SL2_HPP

#include <utility>
#include <vector>

#include "qch/monomial.hpp"

namespace qch {

/// A q-string of the single-node character theory: the r positions
/// center + step*(r - 2k + 1), k = 1..r. r == 0 is the empty string.
struct QString {
    long long center = 0;
    long long length = 0;  // r
    long long step = 1;    // d

    std::vector<long long> positions() const;
    friend bool operator==(const QString&, const QString&) = default;
};

/// Factors a dominant single-node monomial into q-strings, greedily longest
/// first (ties broken by smaller center) within each residue class mod 2*step.
/// Output sorted by (length desc, center asc). Every pair of produced strings
/// is verified to be in general position (union not a q-string, or one
/// contains the other); a violation throws std::logic_error.
/// Throws std::invalid_argument if m is not dominant.
std::vector<QString> factor_q_strings(const SL2Monomial& m, long long step);

/// Position multiset, sorted ascending, repeats allowed.
using PositionMultiset = std::vector<long long>;

/// The r+1 prefix multisets of a single string: for i = 0..r the multiset
/// {center + step*(r - 2j + 2) : j = 1..i}. Each has coefficient 1.
std::vector<PositionMultiset> string_expansion(const QString& s);

/// Closed-form expansion of a dominant single-node monomial: the distributed
/// product of the per-string prefix lists, merged by multiset with
/// multiplicities. Entries sorted by (size asc, then lexicographic); the
/// empty multiset (coefficient 1) is always first. The total count including
/// multiplicity is prod (r_i + 1).
std::vector<std::pair<PositionMultiset, long long>> sl2_expansion(const SL2Monomial& m,
                                                                  long long step);

}  // namespace qch

#endif
