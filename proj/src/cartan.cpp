#include "qch/cartan.hpp"

#include <cctype>
#include <stdexcept>

#include "frac.hpp"

namespace qch {

namespace {

std::string bad_rank_msg(Family f, int n) {
    std::string s = "unsupported rank ";
    s += std::to_string(n);
    s += " for family ";
    s += static_cast<char>(f);
    return s;
}

// Edge list of the Dynkin diagram plus the node lengths. Conventions:
//   A_n:  path 1-2-...-n, all d = 1.
//   B_n:  path, node n short: C[n][n-1] = -2, d = (2,...,2,1).
//   C_n:  path, node n long:  C[n-1][n] = -2, d = (1,...,1,2).
//   D_n:  path 1..n-2 with both n-1 and n attached to n-2, all d = 1.
//   E_n:  chain 1-3-4-5-...-n with 2 attached to 4, all d = 1.
//   F_4:  1-2-3-4 with C[3][2] = -2, d = (2,2,1,1).
//   G_2:  C[1][2] = -3, d = (1,3).
// Everything below is 0-based internally.
void fill_matrix(Family f, int n, std::vector<std::vector<int>>& c, std::vector<int>& d) {
    c.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    d.assign(n, 1);
    auto bond = [&](int i, int j) { c[i][j] = -1; c[j][i] = -1; };
    switch (f) {
        case Family::A:
            if (n < 1) throw std::invalid_argument(bad_rank_msg(f, n));
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            break;
        case Family::B:
            if (n < 2) throw std::invalid_argument(bad_rank_msg(f, n));
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            c[n - 1][n - 2] = -2;
            for (int i = 0; i + 1 < n; ++i) d[i] = 2;
            break;
        case Family::C:
            if (n < 2) throw std::invalid_argument(bad_rank_msg(f, n));
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            c[n - 2][n - 1] = -2;
            d[n - 1] = 2;
            break;
        case Family::D:
            if (n < 3) throw std::invalid_argument(bad_rank_msg(f, n));
            for (int i = 0; i + 1 < n - 1; ++i) bond(i, i + 1);
            bond(n - 3, n - 1);
            break;
        case Family::E:
            if (n < 6 || n > 8) throw std::invalid_argument(bad_rank_msg(f, n));
            bond(0, 2);
            for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
            bond(1, 3);
            break;
        case Family::F:
            if (n != 4) throw std::invalid_argument(bad_rank_msg(f, n));
            bond(0, 1);
            bond(1, 2);
            bond(2, 3);
            c[2][1] = -2;
            d[0] = d[1] = 2;
            break;
        case Family::G:
            if (n != 2) throw std::invalid_argument(bad_rank_msg(f, n));
            c[0][1] = -3;
            c[1][0] = -1;
            d[1] = 3;
            break;
    }
}

}  // namespace

int AlgebraSpec::cartan_entry(int i, int j) const {
    if (!valid_node(i) || !valid_node(j)) throw std::out_of_range("node index out of range");
    return cartan[i - 1][j - 1];
}

int AlgebraSpec::node_length(int i) const {
    if (!valid_node(i)) throw std::out_of_range("node index out of range");
    return d[i - 1];
}

Weight Weight::operator+(const Weight& o) const {
    if (coords.size() != o.coords.size()) throw std::invalid_argument("weight rank mismatch");
    Weight w = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) w.coords[i] += o.coords[i];
    return w;
}

Weight Weight::operator-(const Weight& o) const {
    if (coords.size() != o.coords.size()) throw std::invalid_argument("weight rank mismatch");
    Weight w = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) w.coords[i] -= o.coords[i];
    return w;
}

bool Weight::is_zero() const {
    for (long long v : coords)
        if (v != 0) return false;
    return true;
}

bool Weight::is_dominant() const {
    for (long long v : coords)
        if (v < 0) return false;
    return true;
}

AlgebraSpec make_algebra(Family family, int rank) {
    AlgebraSpec spec;
    spec.family = family;
    spec.rank = rank;
    fill_matrix(family, rank, spec.cartan, spec.d);
    // d C symmetric is a structural invariant of the tables above; check it so
    // a bad edit cannot slip through silently.
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (static_cast<long long>(spec.d[i]) * spec.cartan[i][j] !=
                static_cast<long long>(spec.d[j]) * spec.cartan[j][i])
                throw std::logic_error("symmetrizability violated");
    return spec;
}

AlgebraSpec parse_algebra(const std::string& label) {
    if (label.size() < 2) throw std::invalid_argument("algebra label too short: '" + label + "'");
    char f = label[0];
    if (f < 'A' || f > 'G')
        throw std::invalid_argument("unknown family letter in '" + label + "'");
    for (std::size_t i = 1; i < label.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(label[i])))
            throw std::invalid_argument("malformed rank in '" + label + "'");
    int rank = 0;
    try {
        rank = std::stoi(label.substr(1));
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rank in '" + label + "'");
    }
    return make_algebra(static_cast<Family>(f), rank);
}

std::string algebra_label(const AlgebraSpec& spec) {
    return std::string(1, static_cast<char>(spec.family)) + std::to_string(spec.rank);
}

Weight simple_root(const AlgebraSpec& spec, int i) {
    if (!spec.valid_node(i)) throw std::out_of_range("node index out of range");
    Weight w;
    w.coords.resize(spec.rank);
    for (int j = 1; j <= spec.rank; ++j) w.coords[j - 1] = spec.cartan_entry(j, i);
    return w;
}

std::optional<std::vector<long long>> root_coordinates(const AlgebraSpec& spec,
                                                       const Weight& delta) {
    if (static_cast<int>(delta.coords.size()) != spec.rank)
        throw std::invalid_argument("weight rank mismatch");
    const int n = spec.rank;
    // The alpha_i are the columns of C in these coordinates, so
    // delta = sum_i a_i alpha_i reads as C a = delta.
    std::vector<std::vector<detail::Frac>> m(n, std::vector<detail::Frac>(n));
    std::vector<detail::Frac> rhs(n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) m[r][c] = detail::Frac(spec.cartan[r][c]);
        rhs[r] = detail::Frac(delta.coords[r]);
    }
    auto sol = detail::solve_exact(std::move(m), std::move(rhs));
    if (!sol) return std::nullopt;  // cannot happen: C is invertible
    std::vector<long long> a(n);
    for (int i = 0; i < n; ++i) {
        if (!(*sol)[i].is_integer()) return std::nullopt;
        a[i] = (*sol)[i].num;
    }
    return a;
}

bool leq_natural(const AlgebraSpec& spec, const Weight& lo, const Weight& hi) {
    auto a = root_coordinates(spec, hi - lo);
    if (!a) return false;
    for (long long v : *a)
        if (v < 0) return false;
    return true;
}

}  // namespace qch
