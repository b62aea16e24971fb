#ifndef QCH_CARTAN_HPP
#define QCH_CARTAN_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qch {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Immutable description of a finite-type simple Lie algebra: the Cartan
/// matrix C (rows/cols indexed 0..rank-1 internally, nodes 1..rank in the
/// public API) and the symmetrizing lengths d with d[i]*C[i][j] == d[j]*C[j][i].
struct AlgebraSpec {
    Family family;
    int rank;
    std::vector<std::vector<int>> cartan;
    std::vector<int> d;

    int cartan_entry(int i, int j) const;  // C_{ij}, nodes 1-based
    int node_length(int i) const;          // d_i, nodes 1-based
    bool valid_node(int i) const { return i >= 1 && i <= rank; }
};

/// Integer weight in fundamental-weight coordinates, fixed length = rank.
struct Weight {
    std::vector<long long> coords;

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight& a, const Weight& b) { return a.coords <=> b.coords; }
    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    bool is_zero() const;
    bool is_dominant() const;  // all coordinates >= 0
};

/// Builds the algebra data for a family/rank pair.
/// Rank bounds: A>=1, B>=2, C>=2, D>=3, E in {6,7,8}, F=4, G=2.
/// Throws std::invalid_argument outside those bounds.
AlgebraSpec make_algebra(Family family, int rank);

/// Parses a label like "A2", "C3", "D4". Throws std::invalid_argument on
/// anything else.
AlgebraSpec parse_algebra(const std::string& label);

std::string algebra_label(const AlgebraSpec& spec);

/// alpha_i expressed in fundamental-weight coordinates: alpha_i = sum_j C_{ji} omega_j.
Weight simple_root(const AlgebraSpec& spec, int i);

/// Solves delta = sum_i a_i alpha_i exactly. Returns the integer coefficient
/// vector if one exists, nullopt if the solution is non-integral. (C is
/// invertible, so the rational solution is unique.)
std::optional<std::vector<long long>> root_coordinates(const AlgebraSpec& spec, const Weight& delta);

/// Natural partial order on the weight lattice: lo <= hi iff hi - lo is a
/// nonnegative integer combination of simple roots.
bool leq_natural(const AlgebraSpec& spec, const Weight& lo, const Weight& hi);

}  // namespace qch

#endif
