#ifndef QCH_MONOMIAL_HPP
#define QCH_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qch/cartan.hpp"

namespace qch {

/// One factor Y[node, qexp]^exp of a Laurent monomial. exp is never zero in a
/// canonical monomial.
struct YFactor {
    int node;
    long long qexp;
    long long exp;

    friend bool operator==(const YFactor&, const YFactor&) = default;
    friend auto operator<=>(const YFactor&, const YFactor&) = default;
};

/// Laurent monomial in the variables Y[i,k], all spectral exponents k on one
/// integer lattice. Canonical form: factors sorted by (node, qexp), no zero
/// exponents. Equality and ordering are structural on the canonical form.
class YMonomial {
  public:
    YMonomial() = default;
    explicit YMonomial(std::vector<YFactor> factors);  // canonicalizes

    static YMonomial variable(int node, long long qexp, long long exp = 1);

    const std::vector<YFactor>& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }
    std::size_t size() const { return factors_.size(); }

    long long exponent(int node, long long qexp) const;  // 0 if absent

    YMonomial operator*(const YMonomial& o) const;
    YMonomial& operator*=(const YMonomial& o);
    YMonomial inverse() const;
    YMonomial pow(long long e) const;

    /// True when every stored exponent is positive.
    bool is_dominant() const;
    /// True when every stored exponent at the given node is positive.
    bool is_node_dominant(int node) const;

    friend bool operator==(const YMonomial&, const YMonomial&) = default;
    friend auto operator<=>(const YMonomial& a, const YMonomial& b) {
        return a.factors_ <=> b.factors_;
    }

  private:
    std::vector<YFactor> factors_;
};

/// Single-node shadow of a monomial: spectral exponent -> Y-exponent, no zeros.
struct SL2Monomial {
    std::map<long long, long long> exps;

    bool is_unit() const { return exps.empty(); }
    bool is_dominant() const;
    friend bool operator==(const SL2Monomial&, const SL2Monomial&) = default;
};

/// Restriction of m to one node, re-keyed by spectral exponent.
SL2Monomial project_to_node(const YMonomial& m, int node);

/// The inverse A-monomial attached to (node i, lattice position k):
///   Y[i,k-d_i]^-1 Y[i,k+d_i]^-1 * prod over neighbors j of Y[j,...]
/// with the neighbor positions determined by the Cartan entry C_{ji}
/// (-1 -> {k}; -2 -> {k-1,k+1}; -3 -> {k-2,k,k+2}).
YMonomial a_monomial_inverse(const AlgebraSpec& spec, int i, long long k);

/// Classical weight of m in fundamental-weight coordinates: net Y-exponent
/// per node. Throws std::invalid_argument if m mentions a node beyond rank.
Weight weight(const AlgebraSpec& spec, const YMonomial& m);

struct ParseError : std::runtime_error {
    std::size_t position;  // byte offset into the input
    ParseError(const std::string& msg, std::size_t pos);
};

/// Grammar: whitespace-separated factors `Y[i,k]` or `Y[i,k]^e` with i >= 1,
/// integer k, nonzero integer e. The empty string is the unit monomial.
/// Repeated variables multiply together. Throws ParseError with position.
YMonomial parse_monomial(const std::string& text);

/// Canonical rendering, factors in (node, qexp) order, exponent omitted when 1.
/// The unit renders as the empty string; parse_monomial(render(m)) == m.
std::string render_monomial(const YMonomial& m);

/// Key (node, position) for an A-monomial factor count.
using AFactorKey = std::pair<int, long long>;

/// Recovers g with m == m_plus * prod A^-1[i,k]^g[i,k], solving the exact
/// linear system over the positions spanned by the inputs (window widened on
/// demand). Returns nullopt when no nonnegative integral solution exists,
/// i.e. m is not below m_plus in the A-lattice. The reconstruction is
/// re-verified before returning.
std::optional<std::map<AFactorKey, long long>> solve_a_factorization(const AlgebraSpec& spec,
                                                                     const YMonomial& m_plus,
                                                                     const YMonomial& m);

}  // namespace qch

#endif
