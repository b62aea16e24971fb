#include "qch/tableaux.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qch {

namespace {

void require_realized(Family family) {
    if (family != Family::A && family != Family::C)
        throw std::invalid_argument("tableaux are realized for families A and C only");
}

void require_cell(int row, int col) {
    if (row < 1 || col < 1) throw std::invalid_argument("cell indices are 1-based");
}

// Lattice offset of cell (i,j). Boxes in one column step down the alphabet as
// the row grows, which is where the -2i comes from.
long long cell_offset(int row, int col) { return -2LL * row + 2LL * col; }

YMonomial y(int node, long long k, long long e = 1) {
    if (node == 0) return {};  // boundary letters contribute nothing
    return YMonomial::variable(node, k, e);
}

}  // namespace

int alphabet_size(Family family, int rank) {
    require_realized(family);
    return family == Family::A ? rank + 1 : 2 * rank;
}

int letter_index(Family family, int rank, const Letter& l) {
    require_realized(family);
    if (l.value < 1) throw std::invalid_argument("letter value must be >= 1");
    if (family == Family::A) {
        if (l.barred || l.value > rank + 1) throw std::invalid_argument("letter outside alphabet");
        return l.value - 1;
    }
    if (l.value > rank) throw std::invalid_argument("letter outside alphabet");
    return l.barred ? 2 * rank - l.value : l.value - 1;
}

Letter letter_from_index(Family family, int rank, int index) {
    require_realized(family);
    if (index < 0 || index >= alphabet_size(family, rank))
        throw std::invalid_argument("alphabet index out of range");
    if (family == Family::A) return {index + 1, false};
    if (index < rank) return {index + 1, false};
    return {2 * rank - index, true};
}

Shape Tableau::shape() const {
    Shape s;
    for (const auto& r : rows) s.rows.push_back(static_cast<int>(r.size()));
    return s;
}

YMonomial box_monomial(Family family, int rank, const Letter& l, int row, int col) {
    require_realized(family);
    require_cell(row, col);
    letter_index(family, rank, l);  // validates the letter
    const long long k = cell_offset(row, col);
    const int n = rank;
    if (!l.barred) {
        // Letter a: Y[a, k+a-1] / Y[a-1, k+a], where node 0 and (type A only)
        // node n+1 are the trivial boundary.
        const int a = l.value;
        YMonomial top = (family == Family::A && a == n + 1) ? YMonomial{} : y(a, k + a - 1);
        return top * y(a - 1, k + a, -1);
    }
    // Type C barred letter: ab -> Y[a-1, k+2n-a+2] / Y[a, k+2n-a+3].
    const int a = l.value;
    return y(a - 1, k + 2 * n - a + 2) * y(a, k + 2 * n - a + 3, -1);
}

YMonomial tableau_monomial(Family family, int rank, const Tableau& t) {
    YMonomial m;
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t j = 0; j < t.rows[i].size(); ++j)
            m *= box_monomial(family, rank, t.rows[i][j], static_cast<int>(i + 1),
                              static_cast<int>(j + 1));
    return m;
}

LetterStep letter_action(Family family, int rank, const Letter& l, int row, int col) {
    require_realized(family);
    require_cell(row, col);
    const int idx = letter_index(family, rank, l);
    if (idx + 1 >= alphabet_size(family, rank))
        throw std::invalid_argument("terminal letter has no lowering step");
    const long long k = cell_offset(row, col);
    const int n = rank;
    LetterStep step;
    step.next = letter_from_index(family, rank, idx + 1);
    if (!l.barred && (family == Family::A || l.value < n)) {
        step.node = l.value;
        step.position = k + l.value;
    } else if (!l.barred) {
        // Type C letter n -> nb crosses the long node.
        step.node = n;
        step.position = k + n + 1;
    } else {
        // Type C barred ab -> (a-1)b.
        step.node = l.value - 1;
        step.position = k + 2 * n - l.value + 3;
    }
    return step;
}

std::vector<Tableau> enumerate_semistandard(Family family, int rank, const Shape& shape) {
    require_realized(family);
    for (std::size_t i = 0; i < shape.rows.size(); ++i) {
        if (shape.rows[i] < 1) throw std::invalid_argument("shape rows must be positive");
        if (i > 0 && shape.rows[i] > shape.rows[i - 1])
            throw std::invalid_argument("shape rows must be weakly decreasing");
    }
    const int letters = alphabet_size(family, rank);
    std::vector<Tableau> out;
    Tableau t;
    t.rows.resize(shape.rows.size());
    for (std::size_t i = 0; i < shape.rows.size(); ++i) t.rows[i].resize(shape.rows[i]);

    // Row-major backtracking over alphabet indices: weakly increasing along
    // rows, strictly increasing down columns.
    auto fill = [&](auto&& self, std::size_t row, std::size_t col) -> void {
        if (row == t.rows.size()) {
            out.push_back(t);
            return;
        }
        if (col == t.rows[row].size()) {
            self(self, row + 1, 0);
            return;
        }
        int lo = 0;
        if (col > 0) lo = std::max(lo, letter_index(family, rank, t.rows[row][col - 1]));
        if (row > 0 && col < t.rows[row - 1].size())
            lo = std::max(lo, letter_index(family, rank, t.rows[row - 1][col]) + 1);
        for (int idx = lo; idx < letters; ++idx) {
            t.rows[row][col] = letter_from_index(family, rank, idx);
            self(self, row, col + 1);
        }
    };
    fill(fill, 0, 0);
    return out;
}

MatchReport match_character(const QCharacter& chi, Family family, int rank,
                            const std::vector<Tableau>& candidates) {
    MatchReport report;
    std::map<YMonomial, long long> counts;
    for (const Tableau& t : candidates) {
        YMonomial m = tableau_monomial(family, rank, t);
        counts[m] += 1;
        report.assignment[m].push_back(t);
    }
    for (const auto& [m, c] : chi.terms) {
        long long have = counts.count(m) ? counts[m] : 0;
        if (have < c) report.missing[m] = c - have;
    }
    for (const auto& [m, c] : counts) {
        auto it = chi.terms.find(m);
        long long want = it == chi.terms.end() ? 0 : it->second;
        if (c > want) report.extra[m] = c - want;
    }
    report.matched = report.missing.empty() && report.extra.empty();
    return report;
}

std::string render_letter(const Letter& l) {
    return std::to_string(l.value) + (l.barred ? "b" : "");
}

std::string render_tableau(const Tableau& t) {
    std::string out;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (i) out += " / ";
        for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
            if (j) out += ' ';
            out += render_letter(t.rows[i][j]);
        }
    }
    return out;
}

Tableau parse_tableau(Family family, int rank, const std::string& text) {
    require_realized(family);
    Tableau t;
    std::vector<Letter> row;
    std::size_t pos = 0;
    auto flush_row = [&](std::size_t at) {
        if (row.empty()) throw ParseError("empty tableau row", at);
        t.rows.push_back(row);
        row.clear();
    };
    while (pos < text.size()) {
        char c = text[pos];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
        } else if (c == '/') {
            flush_row(pos);
            ++pos;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            int v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                v = v * 10 + (text[pos] - '0');
                if (v > 1000) throw ParseError("letter value out of range", start);
                ++pos;
            }
            bool barred = false;
            if (pos < text.size() && text[pos] == 'b') {
                barred = true;
                ++pos;
            }
            Letter l{v, barred};
            try {
                letter_index(family, rank, l);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), start);
            }
            row.push_back(l);
        } else {
            throw ParseError("unexpected character in tableau", pos);
        }
    }
    flush_row(text.size());
    for (std::size_t i = 1; i < t.rows.size(); ++i)
        if (t.rows[i].size() > t.rows[i - 1].size())
            throw ParseError("tableau rows must weakly decrease in length", text.size());
    return t;
}

}  // namespace qch
