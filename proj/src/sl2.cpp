#include "qch/sl2.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace qch {

std::vector<long long> QString::positions() const {
    std::vector<long long> p;
    p.reserve(static_cast<std::size_t>(length));
    for (long long k = 1; k <= length; ++k) p.push_back(center + step * (length - 2 * k + 1));
    std::sort(p.begin(), p.end());
    return p;
}

namespace {

// Two strings are in general position when their union is not itself a
// q-string, or one's position set contains the other's. Positions in distinct
// residue classes mod 2*step can never merge into one string, so cross-class
// pairs pass automatically.
bool general_position(const QString& a, const QString& b) {
    std::vector<long long> pa = a.positions(), pb = b.positions();
    std::set<long long> u(pa.begin(), pa.end());
    u.insert(pb.begin(), pb.end());
    if (std::includes(pa.begin(), pa.end(), pb.begin(), pb.end()) ||
        std::includes(pb.begin(), pb.end(), pa.begin(), pa.end()))
        return true;
    if (u.empty()) return true;
    // Union is a q-string iff it is a full arithmetic progression of step 2d.
    long long lo = *u.begin(), hi = *u.rbegin();
    long long span = hi - lo;
    if (span % (2 * a.step) != 0) return true;
    return span / (2 * a.step) + 1 != static_cast<long long>(u.size());
}

}  // namespace

std::vector<QString> factor_q_strings(const SL2Monomial& m, long long step) {
    if (step < 1) throw std::invalid_argument("step must be positive");
    if (!m.is_dominant()) throw std::invalid_argument("q-string factorization needs a dominant monomial");

    // Split by residue class mod 2*step, then peel the longest contiguous run
    // (smallest start on ties) from each class until exhausted.
    const long long mod = 2 * step;
    std::map<long long, std::map<long long, long long>> classes;
    for (const auto& [k, e] : m.exps) classes[((k % mod) + mod) % mod][k] = e;

    std::vector<QString> out;
    for (auto& [res, mult] : classes) {
        while (!mult.empty()) {
            // Longest run of consecutive positions (step 2d) with positive
            // multiplicity; among equals, the leftmost.
            long long best_start = 0, best_len = 0;
            auto it = mult.begin();
            while (it != mult.end()) {
                long long start = it->first;
                long long len = 1;
                auto jt = std::next(it);
                while (jt != mult.end() && jt->first == start + len * mod) {
                    ++len;
                    ++jt;
                }
                if (len > best_len) {
                    best_len = len;
                    best_start = start;
                }
                it = jt;
            }
            QString s;
            s.step = step;
            s.length = best_len;
            s.center = best_start + step * (best_len - 1);  // midpoint of the run
            out.push_back(s);
            for (long long k = 0; k < best_len; ++k) {
                long long pos = best_start + k * mod;
                if (--mult[pos] == 0) mult.erase(pos);
            }
        }
    }

    std::sort(out.begin(), out.end(), [](const QString& a, const QString& b) {
        return a.length > b.length || (a.length == b.length && a.center < b.center);
    });
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (!general_position(out[i], out[j]))
                throw std::logic_error("q-string factorization left strings out of general position");
    return out;
}

std::vector<PositionMultiset> string_expansion(const QString& s) {
    std::vector<PositionMultiset> out;
    out.reserve(static_cast<std::size_t>(s.length) + 1);
    PositionMultiset acc;
    out.push_back(acc);
    for (long long j = 1; j <= s.length; ++j) {
        acc.push_back(s.center + s.step * (s.length - 2 * j + 2));
        PositionMultiset sorted = acc;
        std::sort(sorted.begin(), sorted.end());
        out.push_back(std::move(sorted));
    }
    return out;
}

std::vector<std::pair<PositionMultiset, long long>> sl2_expansion(const SL2Monomial& m,
                                                                 long long step) {
    std::vector<QString> strings = factor_q_strings(m, step);
    std::map<PositionMultiset, long long> acc;
    acc[{}] = 1;
    for (const QString& s : strings) {
        std::vector<PositionMultiset> pre = string_expansion(s);
        std::map<PositionMultiset, long long> next;
        for (const auto& [ms, c] : acc) {
            for (const PositionMultiset& p : pre) {
                PositionMultiset merged = ms;
                merged.insert(merged.end(), p.begin(), p.end());
                std::sort(merged.begin(), merged.end());
                next[std::move(merged)] += c;
            }
        }
        acc = std::move(next);
    }
    std::vector<std::pair<PositionMultiset, long long>> out(acc.begin(), acc.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        if (a.first != b.first) return a.first < b.first;
        return false;
    });
    return out;
}

}  // namespace qch
