#ifndef QCH_TABLEAUX_HPP
#define QCH_TABLEAUX_HPP

#include <map>
#include <string>
#include <vector>

#include "qch/fm.hpp"

namespace qch {

/// Alphabet letter. Type A uses unbarred 1..n+1; type C uses 1..n then the
/// barred letters nb..1b. Barred letters render with a 'b' suffix ("2b").
struct Letter {
    int value = 1;
    bool barred = false;

    friend bool operator==(const Letter&, const Letter&) = default;
};

/// 0-based alphabet index of a letter, the order used for semistandardness:
/// A: 1 < 2 < ... < n+1; C: 1 < ... < n < nb < ... < 1b.
int letter_index(Family family, int rank, const Letter& l);

/// Number of letters in the alphabet (A: n+1, C: 2n).
int alphabet_size(Family family, int rank);

Letter letter_from_index(Family family, int rank, int index);

/// Young-diagram shape, weakly decreasing positive row lengths.
struct Shape {
    std::vector<int> rows;

    friend bool operator==(const Shape&, const Shape&) = default;
};

struct Tableau {
    std::vector<std::vector<Letter>> rows;

    Shape shape() const;
    friend bool operator==(const Tableau&, const Tableau&) = default;
};

/// The Y-monomial carried by one box: cell (row i, column j), both 1-based,
/// lattice offset k = -2i + 2j. Only families A and C are realized.
YMonomial box_monomial(Family family, int rank, const Letter& l, int row, int col);

/// Product of box_monomial over all cells.
YMonomial tableau_monomial(Family family, int rank, const Tableau& t);

/// The lowering step attached to a box: multiplying the box monomial by the
/// inverse A-monomial at (node, position) yields the next letter's box
/// monomial in the same cell. Throws std::invalid_argument on the terminal
/// letter (A: n+1; C: 1b).
struct LetterStep {
    int node = 0;
    long long position = 0;
    Letter next;
};

LetterStep letter_action(Family family, int rank, const Letter& l, int row, int col);

/// All column-strict fillings of the shape: rows weakly increase, columns
/// strictly increase in the alphabet order. Deterministic lexicographic
/// enumeration (row-major, smallest letters first). Note: for type C no
/// admissibility beyond column-strictness is imposed, so this can be a strict
/// superset of the fillings realizing an irreducible character.
std::vector<Tableau> enumerate_semistandard(Family family, int rank, const Shape& shape);

/// Comparison of a computed character against a candidate tableau list.
/// matched means the multiset of tableau monomials equals the character's
/// terms with multiplicity. missing: character terms not covered (monomial ->
/// shortfall). extra: tableau monomials exceeding the character (monomial ->
/// surplus). assignment groups the candidates by monomial.
struct MatchReport {
    bool matched = false;
    std::map<YMonomial, std::vector<Tableau>> assignment;
    std::map<YMonomial, long long> missing;
    std::map<YMonomial, long long> extra;
};

MatchReport match_character(const QCharacter& chi, Family family, int rank,
                            const std::vector<Tableau>& candidates);

/// Text form: rows separated by '/', letters by whitespace, e.g.
/// "1 1 / 2 2b". Throws ParseError on malformed input or letters outside the
/// alphabet; the shape must be weakly decreasing.
Tableau parse_tableau(Family family, int rank, const std::string& text);
std::string render_tableau(const Tableau& t);
std::string render_letter(const Letter& l);

}  // namespace qch

#endif
