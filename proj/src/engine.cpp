#include "engine.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "qch/sl2.hpp"

namespace qch::detail {

std::vector<std::pair<YMonomial, long long>> expand_core(const AlgebraSpec& spec,
                                                         ColoredPolynomial& chi,
                                                         const YMonomial& m, int node,
                                                         std::vector<YMonomial>* created) {
    if (!spec.valid_node(node)) throw std::out_of_range("node index out of range");
    auto it = chi.terms.find(m);
    if (it == chi.terms.end())
        throw std::invalid_argument("expansion of a monomial absent from the polynomial");
    const long long s = it->second.coeff;
    const long long si = it->second.coloring[static_cast<std::size_t>(node - 1)];
    if (si > s || si < 0) throw std::logic_error("coloring outside [0, coeff]");
    if (si == s) return {{m, 1}};  // saturated: nothing to do
    if (!m.is_node_dominant(node))
        throw std::invalid_argument("expansion of a non-dominant monomial at node " +
                                    std::to_string(node));

    const long long t_scale = s - si;
    auto expansion = sl2_expansion(project_to_node(m, node), spec.node_length(node));

    std::vector<std::pair<YMonomial, long long>> mu;
    mu.reserve(expansion.size());
    mu.emplace_back(m, 1);
    for (const auto& [positions, t] : expansion) {
        if (positions.empty()) continue;  // the head term, already listed
        YMonomial n = m;
        for (long long p : positions) n *= a_monomial_inverse(spec, node, p);
        const long long add = t * t_scale;
        auto nt = chi.terms.find(n);
        if (nt == chi.terms.end()) {
            ColoredTerm fresh;
            fresh.coeff = add;
            fresh.coloring.assign(static_cast<std::size_t>(spec.rank), 0);
            fresh.coloring[static_cast<std::size_t>(node - 1)] = add;
            chi.terms.emplace(n, std::move(fresh));
            if (created) created->push_back(n);
        } else {
            long long& ri = nt->second.coloring[static_cast<std::size_t>(node - 1)];
            ri += add;
            nt->second.coeff = std::max(nt->second.coeff, ri);
        }
        mu.emplace_back(std::move(n), t);
    }
    it->second.coloring[static_cast<std::size_t>(node - 1)] = s;
    return mu;
}

Engine::Engine(const AlgebraSpec& spec, const YMonomial& highest, const Limits& limits,
               const RunOptions& options)
    : spec_(spec), highest_(highest), limits_(limits), options_(options) {
    if (highest.is_unit()) throw std::invalid_argument("highest monomial must not be the unit");
    if (!highest.is_dominant()) throw std::invalid_argument("highest monomial must be dominant");
    if (limits.max_height < 0 || limits.max_terms < 1 || limits.max_injections < 0 ||
        limits.ancestor_depth < 1)
        throw std::invalid_argument("nonsensical limits");
    highest_weight_ = weight(spec_, highest_);  // also validates node range
    ColoredTerm head;
    head.coeff = 1;
    head.coloring.assign(static_cast<std::size_t>(spec_.rank), 0);
    chi_.terms.emplace(highest_, std::move(head));
    index_insert(highest_);
}

WeightKey Engine::key_of(const Weight& w) const {
    auto a = root_coordinates(spec_, highest_weight_ - w);
    if (!a) throw std::logic_error("weight outside the root lattice of the highest weight");
    WeightKey key;
    key.avec = std::move(*a);
    key.height = std::accumulate(key.avec.begin(), key.avec.end(), 0LL);
    return key;
}

void Engine::index_insert(const YMonomial& m) {
    const Weight w = weight(spec_, m);
    WeightKey key = key_of(w);
    for (long long v : key.avec)
        if (v < 0) throw std::logic_error("monomial above the highest weight");
    auto [it, fresh] = index_.try_emplace(std::move(key));
    if (fresh) it->second.weight = w;
    it->second.monomials.push_back(m);
}

void Engine::add_seed(const YMonomial& m) {
    if (m.is_unit()) throw std::invalid_argument("cannot seed the unit monomial");
    if (!leq_natural(spec_, weight(spec_, m), highest_weight_))
        throw std::invalid_argument("seed monomial is not below the highest weight");
    auto it = chi_.terms.find(m);
    if (it == chi_.terms.end()) {
        ColoredTerm t;
        t.coeff = 1;
        t.coloring.assign(static_cast<std::size_t>(spec_.rank), 0);
        chi_.terms.emplace(m, std::move(t));
        index_insert(m);
    } else {
        // Extrapolation beyond the validated single-copy case: bump the
        // coefficient and force full re-expansion by clearing the colorings.
        it->second.coeff += 1;
        std::fill(it->second.coloring.begin(), it->second.coloring.end(), 0);
    }
}

void Engine::seed(const YMonomial& m) {
    if (cursor_ || done_) throw std::logic_error("seed() only before the run starts");
    add_seed(m);
}

void Engine::inject(const YMonomial& m) {
    add_seed(m);
    WeightKey restart;
    restart.height = key_of(weight(spec_, m)).height;
    // Empty avec sorts before every populated vector: the cursor lands just
    // before the first real weight of that height.
    if (!cursor_ || restart < *cursor_) cursor_ = std::move(restart);
    done_ = false;
}

void Engine::check_caps() const {
    if (static_cast<long long>(chi_.terms.size()) > limits_.max_terms)
        throw LimitError("term cap exceeded (" + std::to_string(limits_.max_terms) + ")");
}

Engine::Status Engine::run() {
    while (true) {
        auto it = cursor_ ? index_.upper_bound(*cursor_) : index_.begin();
        if (it == index_.end()) {
            done_ = true;
            return Status::done;
        }
        const WeightKey key = it->first;  // copy: expansions insert into index_
        if (key.height > limits_.max_height)
            throw LimitError("height cap exceeded (" + std::to_string(limits_.max_height) + ")");
        const Weight w = it->second.weight;
        std::vector<YMonomial> batch = it->second.monomials;
        std::sort(batch.begin(), batch.end());
        batch.erase(std::unique(batch.begin(), batch.end()), batch.end());

        // Admissibility of every monomial at this weight comes first; all
        // offenders are reported together.
        std::vector<Offender> offenders;
        for (const YMonomial& m : batch) {
            const ColoredTerm& term = chi_.terms.at(m);
            std::vector<int> bad;
            for (int i = 1; i <= spec_.rank; ++i)
                if (term.coloring[static_cast<std::size_t>(i - 1)] < term.coeff &&
                    !m.is_node_dominant(i))
                    bad.push_back(i);
            if (!bad.empty())
                offenders.push_back({m, term.coeff, term.coloring, std::move(bad)});
        }
        if (!offenders.empty()) {
            failure_weight_ = w;
            offenders_ = std::move(offenders);
            return Status::failed;
        }

        std::vector<int> nodes(static_cast<std::size_t>(spec_.rank));
        std::iota(nodes.begin(), nodes.end(), 1);
        if (options_.order == ProcessOrder::reversed) {
            std::reverse(batch.begin(), batch.end());
            std::reverse(nodes.begin(), nodes.end());
        } else if (options_.order == ProcessOrder::shuffled) {
            std::mt19937_64 rng(options_.seed * 1000003ULL +
                                static_cast<unsigned long long>(key.height) * 7919ULL +
                                static_cast<unsigned long long>(batch.size()));
            std::shuffle(batch.begin(), batch.end(), rng);
            std::shuffle(nodes.begin(), nodes.end(), rng);
        }

        for (const YMonomial& m : batch) {
            for (int node : nodes) {
                std::vector<YMonomial> created;
                auto mu = expand_core(spec_, chi_, m, node, &created);
                for (const YMonomial& n : created) {
                    index_insert(n);
                }
                if (mu.size() > 1) trace_.push_back({w, m, node, std::move(mu)});
            }
        }
        check_caps();
        cursor_ = key;
    }
}

FailureReport Engine::failure_report() const {
    FailureReport r;
    r.weight = failure_weight_;
    r.offenders = offenders_;
    r.partial = chi_;
    r.trace = trace_;
    return r;
}

QCharacter Engine::character() const {
    if (!done_) throw std::logic_error("character requested before the run finished");
    QCharacter out;
    out.algebra = spec_;
    out.highest = highest_;
    for (const auto& [m, term] : chi_.terms) {
        for (long long c : term.coloring)
            if (c != term.coeff) throw std::logic_error("unsaturated coloring in finished run");
        if (term.coeff <= 0) throw std::logic_error("nonpositive coefficient in finished run");
        out.terms.emplace(m, term.coeff);
    }
    auto head = out.terms.find(highest_);
    if (head == out.terms.end() || head->second != 1)
        throw std::logic_error("highest monomial lost coefficient 1");
    return out;
}

}  // namespace qch::detail
