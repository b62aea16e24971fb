#include "qch/traceback.hpp"

#include <algorithm>
#include <set>

#include "engine.hpp"
#include "qch/sl2.hpp"

namespace qch {

namespace {

// All multisets of size 1..depth over the candidate positions, depth-first in
// position order, so enumeration order is deterministic.
void enumerate_multisets(const std::vector<long long>& positions, int depth,
                         std::vector<std::vector<long long>>& out) {
    std::vector<long long> cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (!cur.empty()) out.push_back(cur);
        if (static_cast<int>(cur.size()) == depth) return;
        for (std::size_t i = from; i < positions.size(); ++i) {
            cur.push_back(positions[i]);
            self(self, i);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

// Does the candidate's own node expansion reproduce the offender? The
// candidate was built as offender * prod A[node, p], so the question is
// whether that exact position multiset shows up in its expansion.
bool expansion_reaches(const AlgebraSpec& spec, const YMonomial& candidate, int node,
                       const std::vector<long long>& needed) {
    std::vector<long long> key = needed;
    std::sort(key.begin(), key.end());
    auto expansion = sl2_expansion(project_to_node(candidate, node), spec.node_length(node));
    for (const auto& [positions, coeff] : expansion)
        if (positions == key) return true;
    return false;
}

}  // namespace

AncestorSearch find_ancestors(const AlgebraSpec& spec, const YMonomial& offender, int node,
                              int depth_limit) {
    if (!spec.valid_node(node)) throw std::out_of_range("node index out of range");
    if (depth_limit < 1) throw std::invalid_argument("depth limit must be >= 1");
    if (offender.is_node_dominant(node))
        throw std::invalid_argument("offender is already dominant at the node");

    // Raising by A[node, c] only adds positive powers at the node, so the
    // positions worth trying are fixed by the offender's own negative entries.
    const long long d = spec.node_length(node);
    std::set<long long> pos_set;
    for (const YFactor& f : offender.factors())
        if (f.node == node && f.exp < 0) {
            pos_set.insert(f.qexp - d);
            pos_set.insert(f.qexp + d);
        }
    std::vector<long long> positions(pos_set.begin(), pos_set.end());

    std::vector<std::vector<long long>> multisets;
    enumerate_multisets(positions, depth_limit, multisets);
    std::stable_sort(multisets.begin(), multisets.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });

    AncestorSearch out;
    std::set<YMonomial> seen;
    for (const auto& ms : multisets) {
        YMonomial cand = offender;
        for (long long p : ms) cand *= a_monomial_inverse(spec, node, p).inverse();
        if (!seen.insert(cand).second) continue;
        if (!cand.is_node_dominant(node)) continue;
        out.considered.push_back(cand);
        if (expansion_reaches(spec, cand, node, ms)) out.survivors.push_back(cand);
    }
    return out;
}

AmbiguityError::AmbiguityError(YMonomial off, int nd, std::vector<YMonomial> tied)
    : std::runtime_error("ancestor search found " + std::to_string(tied.size()) +
                         " tied minimal candidates at node " + std::to_string(nd)),
      offender(std::move(off)),
      node(nd),
      candidates(std::move(tied)) {}

namespace {

// Degree of a candidate relative to the offender: number of A-factors used,
// read off from the weight difference.
long long a_degree(const AlgebraSpec& spec, const YMonomial& offender, const YMonomial& cand) {
    auto a = root_coordinates(spec, weight(spec, cand) - weight(spec, offender));
    if (!a) throw std::logic_error("candidate not in the offender's root lattice");
    long long total = 0;
    for (long long v : *a) total += v;
    return total;
}

}  // namespace

ModifiedResult run_fm_modified(const AlgebraSpec& spec, const YMonomial& highest,
                               const Limits& limits) {
    detail::Engine engine(spec, highest, limits, {});
    ModifiedResult out;
    while (true) {
        if (engine.run() == detail::Engine::Status::done) {
            out.character = engine.character();
            out.colored = engine.chi();
            out.trace = engine.trace();
            return out;
        }
        if (static_cast<int>(out.injections.size()) >= limits.max_injections)
            throw LimitError("injection cap exceeded (" +
                             std::to_string(limits.max_injections) + ")");

        // First offender in canonical order; its deficient nodes in ascending
        // order. The first node yielding a usable ancestor wins.
        const Offender& off = engine.offenders().front();
        bool injected = false;
        for (int node : off.deficient_nodes) {
            AncestorSearch search = find_ancestors(spec, off.monomial, node, limits.ancestor_depth);
            std::vector<YMonomial> usable;
            for (const YMonomial& cand : search.survivors) {
                if (!leq_natural(spec, weight(spec, cand), weight(spec, highest))) continue;
                // The injected monomial must live in the highest monomial's
                // A-lattice, or the run could not stay consistent.
                if (!solve_a_factorization(spec, highest, cand)) continue;
                usable.push_back(cand);
            }
            if (usable.empty()) continue;
            long long best = a_degree(spec, off.monomial, usable.front());
            std::vector<YMonomial> minimal;
            for (const YMonomial& cand : usable)
                if (a_degree(spec, off.monomial, cand) == best) minimal.push_back(cand);
            if (minimal.size() > 1) throw AmbiguityError(off.monomial, node, minimal);

            const YMonomial& chosen = minimal.front();
            InjectionRecord rec;
            rec.offender = off.monomial;
            rec.node = node;
            rec.injected = chosen;
            rec.ancestor_weight = weight(spec, chosen);
            rec.candidates_considered = search.considered;
            engine.inject(chosen);
            out.injections.push_back(std::move(rec));
            injected = true;
            break;
        }
        if (!injected) {
            out.failure = engine.failure_report();
            out.trace = engine.trace();
            return out;
        }
    }
}

RunResult run_fm_seeded(const AlgebraSpec& spec, const YMonomial& highest,
                        const std::vector<YMonomial>& seeds, const Limits& limits) {
    detail::Engine engine(spec, highest, limits, {});
    for (const YMonomial& m : seeds) engine.seed(m);
    RunResult out;
    if (engine.run() == detail::Engine::Status::done) {
        out.character = engine.character();
        out.colored = engine.chi();
    } else {
        out.failure = engine.failure_report();
    }
    out.trace = engine.trace();
    return out;
}

}  // namespace qch
