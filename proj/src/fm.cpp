#include "qch/fm.hpp"

#include "engine.hpp"

namespace qch {

const ColoredTerm* ColoredPolynomial::find(const YMonomial& m) const {
    auto it = terms.find(m);
    return it == terms.end() ? nullptr : &it->second;
}

long long QCharacter::total() const {
    long long s = 0;
    for (const auto& [m, c] : terms) s += c;
    return s;
}

RunResult run_fm(const AlgebraSpec& spec, const YMonomial& highest, const Limits& limits,
                 const RunOptions& options) {
    detail::Engine engine(spec, highest, limits, options);
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

std::vector<std::pair<YMonomial, long long>> expand_node(const AlgebraSpec& spec,
                                                         ColoredPolynomial& chi,
                                                         const YMonomial& m, int node) {
    return detail::expand_core(spec, chi, m, node, nullptr);
}

std::map<Weight, long long> specialize_classical(const QCharacter& chi) {
    std::map<Weight, long long> out;
    for (const auto& [m, c] : chi.terms) out[weight(chi.algebra, m)] += c;
    return out;
}

std::vector<std::pair<YMonomial, long long>> dominant_monomials(const QCharacter& chi) {
    std::vector<std::pair<YMonomial, long long>> out;
    for (const auto& [m, c] : chi.terms)
        if (m.is_dominant()) out.emplace_back(m, c);
    return out;
}

}  // namespace qch
