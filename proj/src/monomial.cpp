#include "qch/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "frac.hpp"

namespace qch {

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
    return r;
}

}  // namespace

YMonomial::YMonomial(std::vector<YFactor> factors) {
    std::sort(factors.begin(), factors.end(), [](const YFactor& a, const YFactor& b) {
        return a.node < b.node || (a.node == b.node && a.qexp < b.qexp);
    });
    for (const YFactor& f : factors) {
        if (f.node < 1) throw std::invalid_argument("node index must be >= 1");
        if (!factors_.empty() && factors_.back().node == f.node &&
            factors_.back().qexp == f.qexp) {
            factors_.back().exp = checked_add(factors_.back().exp, f.exp);
            if (factors_.back().exp == 0) factors_.pop_back();
        } else if (f.exp != 0) {
            factors_.push_back(f);
        }
    }
}

YMonomial YMonomial::variable(int node, long long qexp, long long exp) {
    return YMonomial({{node, qexp, exp}});
}

long long YMonomial::exponent(int node, long long qexp) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), std::pair{node, qexp},
                               [](const YFactor& f, const std::pair<int, long long>& key) {
                                   return f.node < key.first ||
                                          (f.node == key.first && f.qexp < key.second);
                               });
    if (it != factors_.end() && it->node == node && it->qexp == qexp) return it->exp;
    return 0;
}

YMonomial YMonomial::operator*(const YMonomial& o) const {
    YMonomial r;
    r.factors_.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin(), b = o.factors_.begin();
    auto key_lt = [](const YFactor& x, const YFactor& y) {
        return x.node < y.node || (x.node == y.node && x.qexp < y.qexp);
    };
    while (a != factors_.end() && b != o.factors_.end()) {
        if (key_lt(*a, *b)) {
            r.factors_.push_back(*a++);
        } else if (key_lt(*b, *a)) {
            r.factors_.push_back(*b++);
        } else {
            long long e = checked_add(a->exp, b->exp);
            if (e != 0) r.factors_.push_back({a->node, a->qexp, e});
            ++a;
            ++b;
        }
    }
    r.factors_.insert(r.factors_.end(), a, factors_.end());
    r.factors_.insert(r.factors_.end(), b, o.factors_.end());
    return r;
}

YMonomial& YMonomial::operator*=(const YMonomial& o) {
    *this = *this * o;
    return *this;
}

YMonomial YMonomial::inverse() const {
    YMonomial r = *this;
    for (YFactor& f : r.factors_) f.exp = -f.exp;
    return r;
}

YMonomial YMonomial::pow(long long e) const {
    if (e == 0) return YMonomial{};
    YMonomial r = *this;
    for (YFactor& f : r.factors_) f.exp = checked_mul(f.exp, e);
    return r;
}

bool YMonomial::is_dominant() const {
    for (const YFactor& f : factors_)
        if (f.exp < 0) return false;
    return true;
}

bool YMonomial::is_node_dominant(int node) const {
    for (const YFactor& f : factors_)
        if (f.node == node && f.exp < 0) return false;
    return true;
}

bool SL2Monomial::is_dominant() const {
    for (const auto& [k, e] : exps)
        if (e < 0) return false;
    return true;
}

SL2Monomial project_to_node(const YMonomial& m, int node) {
    SL2Monomial p;
    for (const YFactor& f : m.factors())
        if (f.node == node) p.exps[f.qexp] = f.exp;
    return p;
}

YMonomial a_monomial_inverse(const AlgebraSpec& spec, int i, long long k) {
    if (!spec.valid_node(i)) throw std::out_of_range("node index out of range");
    const long long di = spec.node_length(i);
    std::vector<YFactor> fs;
    fs.push_back({i, k - di, -1});
    fs.push_back({i, k + di, -1});
    for (int j = 1; j <= spec.rank; ++j) {
        switch (spec.cartan_entry(j, i)) {
            case -1:
                fs.push_back({j, k, 1});
                break;
            case -2:
                fs.push_back({j, k - 1, 1});
                fs.push_back({j, k + 1, 1});
                break;
            case -3:
                fs.push_back({j, k - 2, 1});
                fs.push_back({j, k, 1});
                fs.push_back({j, k + 2, 1});
                break;
            default:
                break;
        }
    }
    return YMonomial(std::move(fs));
}

Weight weight(const AlgebraSpec& spec, const YMonomial& m) {
    Weight w;
    w.coords.assign(spec.rank, 0);
    for (const YFactor& f : m.factors()) {
        if (!spec.valid_node(f.node))
            throw std::invalid_argument("monomial mentions node " + std::to_string(f.node) +
                                        " beyond rank " + std::to_string(spec.rank));
        w.coords[f.node - 1] = checked_add(w.coords[f.node - 1], f.exp);
    }
    return w;
}

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}

namespace {

// Scanner for the factor grammar. Kept dumb and positional so errors point at
// the exact byte.
struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    void expect(char c, const char* what) {
        if (done() || s[pos] != c) throw ParseError(std::string("expected ") + what, pos);
        ++pos;
    }
    long long integer(const char* what) {
        std::size_t start = pos;
        if (!done() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        long long v = 0;
        // from_chars never accepts a leading '+'
        std::size_t from = (start < pos && s[start] == '+') ? start + 1 : start;
        auto [p, ec] = std::from_chars(s.data() + from, s.data() + pos, v);
        if (ec != std::errc() || p != s.data() + pos || pos == from)
            throw ParseError(std::string("expected ") + what, start);
        return v;
    }
};

}  // namespace

YMonomial parse_monomial(const std::string& text) {
    Cursor c{text};
    std::vector<YFactor> fs;
    c.skip_ws();
    while (!c.done()) {
        std::size_t at = c.pos;
        c.expect('Y', "variable 'Y'");
        c.expect('[', "'['");
        long long node = c.integer("node index");
        if (node < 1) throw ParseError("node index must be >= 1", at);
        if (node > INT32_MAX) throw ParseError("node index too large", at);
        c.expect(',', "','");
        long long qexp = c.integer("spectral exponent");
        c.expect(']', "']'");
        long long exp = 1;
        if (!c.done() && c.peek() == '^') {
            ++c.pos;
            exp = c.integer("exponent");
            if (exp == 0) throw ParseError("zero exponent not allowed", at);
        }
        fs.push_back({static_cast<int>(node), qexp, exp});
        if (!c.done() && !std::isspace(static_cast<unsigned char>(c.peek())))
            throw ParseError("expected whitespace between factors", c.pos);
        c.skip_ws();
    }
    return YMonomial(std::move(fs));
}

std::string render_monomial(const YMonomial& m) {
    std::string out;
    for (const YFactor& f : m.factors()) {
        if (!out.empty()) out += ' ';
        out += "Y[";
        out += std::to_string(f.node);
        out += ',';
        out += std::to_string(f.qexp);
        out += ']';
        if (f.exp != 1) {
            out += '^';
            out += std::to_string(f.exp);
        }
    }
    return out;
}

namespace {

// Exponent map of m'/m_plus restricted to one node, used to set up the
// factorization system.
std::map<AFactorKey, long long> exponent_diff(const YMonomial& m_plus, const YMonomial& m) {
    std::map<AFactorKey, long long> e;
    for (const YFactor& f : m.factors()) e[{f.node, f.qexp}] += f.exp;
    for (const YFactor& f : m_plus.factors()) e[{f.node, f.qexp}] -= f.exp;
    std::erase_if(e, [](const auto& kv) { return kv.second == 0; });
    return e;
}

std::optional<std::map<AFactorKey, long long>> try_window(const AlgebraSpec& spec,
                                                          const YMonomial& m_plus,
                                                          const YMonomial& m, long long lo,
                                                          long long hi) {
    // Unknowns: g[i,k] >= 0 with m = m_plus * prod A^-1[i,k]^g[i,k], k in
    // [lo,hi]. Each A^-1[i,k] touches positions within distance
    // max(d_i, 2) of k, so equations over the padded window capture every
    // contribution; positions outside the supports force g = 0 there.
    const int n = spec.rank;
    const long long pad = 3;
    const long long qlo = lo - pad, qhi = hi + pad;
    const std::size_t width = static_cast<std::size_t>(hi - lo + 1);
    const std::size_t qwidth = static_cast<std::size_t>(qhi - qlo + 1);
    const std::size_t vars = static_cast<std::size_t>(n) * width;
    const std::size_t eqs = static_cast<std::size_t>(n) * qwidth;
    // Position-major indexing keeps the system banded, which the sparse
    // elimination exploits.
    auto var_of = [&](int i, long long k) -> std::size_t {
        return static_cast<std::size_t>(k - lo) * n + static_cast<std::size_t>(i - 1);
    };
    auto eq_of = [&](int j, long long k) -> std::size_t {
        return static_cast<std::size_t>(k - qlo) * n + static_cast<std::size_t>(j - 1);
    };

    detail::SparseSystem sys;
    sys.cols = vars;
    sys.rows.resize(eqs);
    sys.rhs.assign(eqs, detail::Frac(0));
    for (int i = 1; i <= n; ++i) {
        for (long long k = lo; k <= hi; ++k) {
            YMonomial am = a_monomial_inverse(spec, i, k);
            for (const YFactor& f : am.factors()) {
                if (f.qexp < qlo || f.qexp > qhi) return std::nullopt;  // widen
                sys.add(eq_of(f.node, f.qexp), var_of(i, k), detail::Frac(f.exp));
            }
        }
    }
    for (const auto& [key, v] : exponent_diff(m_plus, m)) {
        auto [node, k] = key;
        if (!spec.valid_node(node)) return std::nullopt;
        if (k < qlo || k > qhi) return std::nullopt;
        sys.rhs[eq_of(node, k)] = detail::Frac(v);
    }

    auto sol = detail::solve_sparse(std::move(sys));
    if (!sol) return std::nullopt;
    std::map<AFactorKey, long long> g;
    for (int i = 1; i <= n; ++i) {
        for (long long k = lo; k <= hi; ++k) {
            const detail::Frac& f = (*sol)[var_of(i, k)];
            if (f.is_zero()) continue;
            if (!f.is_integer() || f.num < 0) return std::nullopt;
            g[{i, k}] = f.num;
        }
    }
    return g;
}

}  // namespace

std::optional<std::map<AFactorKey, long long>> solve_a_factorization(const AlgebraSpec& spec,
                                                                     const YMonomial& m_plus,
                                                                     const YMonomial& m) {
    long long lo = 0, hi = 0;
    bool any = false;
    auto widen = [&](const YMonomial& x) {
        for (const YFactor& f : x.factors()) {
            if (!any) { lo = hi = f.qexp; any = true; }
            lo = std::min(lo, f.qexp);
            hi = std::max(hi, f.qexp);
        }
    };
    widen(m_plus);
    widen(m);
    if (!any) return m == m_plus ? std::make_optional(std::map<AFactorKey, long long>{})
                                 : std::nullopt;

    for (long long margin : {8LL, 16LL, 32LL}) {
        auto g = try_window(spec, m_plus, m, lo - margin, hi + margin);
        if (!g) continue;
        // Exact reconstruction check: the solver result must multiply back.
        YMonomial prod = m_plus;
        for (const auto& [key, e] : *g)
            prod *= a_monomial_inverse(spec, key.first, key.second).pow(e);
        if (prod == m) return g;
    }
    return std::nullopt;
}

}  // namespace qch
