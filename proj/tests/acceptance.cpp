// Acceptance driver: one line per criterion, exit code = number of failures.
// Each criterion is independent; a thrown exception fails that criterion only.

#include <cstdio>
#include <exception>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qch/cartan.hpp"
#include "qch/fm.hpp"
#include "qch/monomial.hpp"
#include "qch/sl2.hpp"
#include "qch/tableaux.hpp"
#include "qch/traceback.hpp"

namespace {

using namespace qch;

int failures = 0;

template <typename F>
void criterion(int n, const char* label, F&& body) {
    std::string why;
    bool ok = false;
    try {
        ok = body(why);
    } catch (const std::exception& e) {
        why = std::string("exception: ") + e.what();
        ok = false;
    }
    if (ok)
        std::printf("[PASS] %d: %s\n", n, label);
    else
        std::printf("[FAIL] %d: %s%s%s\n", n, label, why.empty() ? "" : " -- ", why.c_str());
    if (!ok) ++failures;
}

Weight wt(std::vector<long long> c) {
    Weight w;
    w.coords = std::move(c);
    return w;
}

std::map<YMonomial, long long> terms_of(std::initializer_list<std::pair<const char*, long long>> l) {
    std::map<YMonomial, long long> out;
    for (const auto& [text, c] : l) out[parse_monomial(text)] = c;
    return out;
}

bool expect(bool cond, const char* msg, std::string& why) {
    if (!cond && why.empty()) why = msg;
    return cond;
}

}  // namespace

int main() {
    auto a1 = make_algebra(Family::A, 1);
    auto a2 = make_algebra(Family::A, 2);
    auto c2 = make_algebra(Family::C, 2);
    auto c3 = make_algebra(Family::C, 3);
    auto d4 = make_algebra(Family::D, 4);

    const auto a2_top = parse_monomial("Y[1,2] Y[2,-1]");
    const auto c2_top = parse_monomial("Y[2,-1] Y[2,1]");
    const auto c3_top = parse_monomial("Y[1,4] Y[2,1] Y[3,-2]");
    const auto d4_top = parse_monomial("Y[1,2] Y[3,-2] Y[4,-2]");
    const auto m4 = parse_monomial("Y[1,2] Y[2,-1] Y[2,3]^-1 Y[3,2]");
    const auto m5 = parse_monomial("Y[2,-1] Y[2,1]");

    criterion(1, "rank-two simply laced adjoint run yields the eight fixed terms", [&](std::string& why) {
        auto r = run_fm(a2, a2_top);
        if (!expect(r.ok(), "run did not finish", why)) return false;
        auto want = terms_of({{"Y[1,2] Y[2,-1]", 1},
                              {"Y[1,4]^-1 Y[2,-1] Y[2,3]", 1},
                              {"Y[1,0] Y[1,2] Y[2,1]^-1", 1},
                              {"Y[1,0] Y[1,4]^-1 Y[2,1]^-1 Y[2,3]", 1},
                              {"Y[2,-1] Y[2,5]^-1", 1},
                              {"Y[1,0] Y[2,1]^-1 Y[2,5]^-1", 1},
                              {"Y[1,2]^-1 Y[1,4]^-1 Y[2,3]", 1},
                              {"Y[1,2]^-1 Y[2,5]^-1", 1}});
        return expect(r.character->terms == want, "terms differ from the fixed list", why);
    });

    criterion(2, "that character equals the sum over its hook tableaux", [&](std::string& why) {
        auto r = run_fm(a2, a2_top);
        if (!expect(r.ok(), "run did not finish", why)) return false;
        auto fillings = enumerate_semistandard(Family::A, 2, Shape{{2, 1}});
        if (!expect(fillings.size() == 8, "expected 8 fillings of the hook", why)) return false;
        auto report = match_character(*r.character, Family::A, 2, fillings);
        return expect(report.matched, "tableau monomials do not cover the character", why);
    });

    criterion(3, "symplectic square: 25 terms, both doubled monomials, the fixed weight table",
              [&](std::string& why) {
        auto r = run_fm(c2, c2_top);
        if (!expect(r.ok(), "run did not finish", why)) return false;
        const auto& terms = r.character->terms;
        if (!expect(r.character->total() == 25, "total is not 25", why)) return false;
        auto d1 = terms.find(parse_monomial("Y[2,1] Y[2,5]^-1"));
        auto d2 = terms.find(parse_monomial("Y[1,0] Y[1,2] Y[1,4]^-1 Y[1,6]^-1"));
        if (!expect(d1 != terms.end() && d1->second == 2, "first doubled monomial wrong", why))
            return false;
        if (!expect(d2 != terms.end() && d2->second == 2, "second doubled monomial wrong", why))
            return false;
        auto dom = dominant_monomials(*r.character);
        if (!expect(dom.size() == 1 && dom[0].first == c2_top,
                    "highest monomial is not the only dominant one", why))
            return false;
        std::map<Weight, long long> want = {
            {wt({0, 2}), 1},  {wt({2, 0}), 2},  {wt({0, 1}), 2},  {wt({-2, 2}), 2},
            {wt({0, 0}), 5},  {wt({4, -2}), 1}, {wt({2, -1}), 2}, {wt({2, -2}), 2},
            {wt({-2, 1}), 2}, {wt({0, -1}), 2}, {wt({-4, 2}), 1}, {wt({-2, 0}), 2},
            {wt({0, -2}), 1}};
        return expect(specialize_classical(*r.character) == want, "weight table differs", why);
    });

    criterion(4, "both symplectic fundamentals come out as five-term polynomials",
              [&](std::string& why) {
        auto r1 = run_fm(c2, parse_monomial("Y[2,-1]"));
        if (!expect(r1.ok(), "first run did not finish", why)) return false;
        auto want1 = terms_of({{"Y[2,-1]", 1},
                               {"Y[1,0] Y[1,2] Y[2,3]^-1", 1},
                               {"Y[1,0] Y[1,4]^-1", 1},
                               {"Y[1,2]^-1 Y[1,4]^-1 Y[2,1]", 1},
                               {"Y[2,5]^-1", 1}});
        if (!expect(r1.character->terms == want1, "first fundamental differs", why)) return false;
        auto r2 = run_fm(c2, parse_monomial("Y[2,1]"));
        if (!expect(r2.ok(), "second run did not finish", why)) return false;
        auto want2 = terms_of({{"Y[2,1]", 1},
                               {"Y[1,2] Y[1,4] Y[2,5]^-1", 1},
                               {"Y[1,2] Y[1,6]^-1", 1},
                               {"Y[1,4]^-1 Y[1,6]^-1 Y[2,3]", 1},
                               {"Y[2,7]^-1", 1}});
        return expect(r2.character->terms == want2, "second fundamental differs", why);
    });

    criterion(5, "rank-three symplectic run stalls on the known offender, never creating its ancestor",
              [&](std::string& why) {
        auto r = run_fm(c3, c3_top);
        if (!expect(!r.ok() && r.failure.has_value(), "run unexpectedly finished", why))
            return false;
        if (!expect(r.failure->weight == wt({1, 0, 1}), "failure weight differs", why))
            return false;
        if (!expect(r.failure->offenders.size() == 1, "expected exactly one offender", why))
            return false;
        const Offender& off = r.failure->offenders[0];
        if (!expect(off.monomial == m4, "offender monomial differs", why)) return false;
        if (!expect(off.deficient_nodes == std::vector<int>{2}, "deficient nodes differ", why))
            return false;
        if (!expect(!r.failure->partial.contains(m5), "missed monomial present in partial state",
                    why))
            return false;
        for (const ExpansionEvent& e : r.failure->trace) {
            if (!expect(e.monomial != m5, "missed monomial was expanded", why)) return false;
            for (const auto& [m, c] : e.mu)
                if (!expect(m != m5, "missed monomial appears in an expansion", why)) return false;
        }
        return true;
    });

    criterion(6, "one injection repairs it: 896 terms with a nonnegative weight table",
              [&](std::string& why) {
        auto r = run_fm_modified(c3, c3_top);
        if (!expect(r.ok(), "modified run did not finish", why)) return false;
        if (!expect(r.injections.size() == 1, "expected exactly one injection", why)) return false;
        if (!expect(r.injections[0].injected == m5, "injected monomial differs", why))
            return false;
        if (!expect(r.character->total() == 896, "total is not 896", why)) return false;
        long long sum = 0;
        for (const auto& [w, c] : specialize_classical(*r.character)) {
            if (!expect(c > 0, "nonpositive weight multiplicity", why)) return false;
            sum += c;
        }
        return expect(sum == 896, "weight multiplicities do not sum to 896", why);
    });

    criterion(7, "rank-four orthogonal run stalls and names the expected offender",
              [&](std::string& why) {
        auto r = run_fm(d4, d4_top);
        if (!expect(!r.ok() && r.failure.has_value(), "run unexpectedly finished", why))
            return false;
        auto bad = parse_monomial("Y[1,0] Y[2,1]^-1 Y[3,0] Y[4,0]");
        for (const Offender& off : r.failure->offenders)
            if (off.monomial == bad) return true;
        why = "expected offender not reported";
        return false;
    });

    criterion(8, "200 random rank-one runs agree with the closed string formula",
              [&](std::string& why) {
        std::mt19937_64 rng(2024);
        for (int trial = 0; trial < 200; ++trial) {
            std::map<long long, long long> exps;
            int vars = 1 + static_cast<int>(rng() % 6);
            for (int v = 0; v < vars; ++v) {
                long long pos = static_cast<long long>(rng() % 17) - 8;
                exps[pos] += 1 + static_cast<long long>(rng() % 3);
            }
            std::vector<YFactor> fs;
            for (const auto& [k, e] : exps) fs.push_back({1, k, e});
            YMonomial top{fs};

            std::map<YMonomial, long long> want;
            for (const auto& [positions, c] : sl2_expansion(project_to_node(top, 1), 1)) {
                YMonomial m = top;
                for (long long p : positions) m *= a_monomial_inverse(a1, 1, p);
                want[m] += c;
            }
            auto r = run_fm(a1, top);
            if (!expect(r.ok(), "rank-one run did not finish", why)) return false;
            if (r.character->terms != want) {
                why = "mismatch for " + render_monomial(top);
                return false;
            }
        }
        return true;
    });

    criterion(9, "structural properties hold across the worked examples", [&](std::string& why) {
        // processing order does not change results
        std::vector<RunOptions> variants;
        variants.push_back({ProcessOrder::reversed, 0});
        for (unsigned long long s : {1ULL, 2ULL, 3ULL})
            variants.push_back({ProcessOrder::shuffled, s});
        auto base_a2 = run_fm(a2, a2_top);
        auto base_c2 = run_fm(c2, c2_top);
        auto base_c3 = run_fm(c3, c3_top);
        for (const RunOptions& opt : variants) {
            auto ra = run_fm(a2, a2_top, Limits{}, opt);
            if (!expect(ra.ok() && ra.character->terms == base_a2.character->terms,
                        "order changed a finished character", why))
                return false;
            auto rc = run_fm(c2, c2_top, Limits{}, opt);
            if (!expect(rc.ok() && rc.character->terms == base_c2.character->terms,
                        "order changed a finished character", why))
                return false;
            auto rf = run_fm(c3, c3_top, Limits{}, opt);
            if (!expect(!rf.ok() && rf.failure->weight == base_c3.failure->weight &&
                            rf.failure->offenders.size() == 1 &&
                            rf.failure->offenders[0].monomial ==
                                base_c3.failure->offenders[0].monomial,
                        "order changed the failure report", why))
                return false;
        }

        // colorings saturate at the coefficient on every finished run
        for (const auto* colored : {&*base_a2.colored, &*base_c2.colored}) {
            for (const auto& [m, term] : colored->terms)
                for (long long c : term.coloring)
                    if (!expect(c == term.coeff, "unsaturated coloring", why)) return false;
        }

        // weights are multiplicative
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<int> node(1, 3);
        std::uniform_int_distribution<long long> q(-8, 8), e(-5, 5);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<YFactor> fa, fb;
            for (int t = 0; t < 4; ++t) {
                fa.push_back({node(rng), q(rng), e(rng)});
                fb.push_back({node(rng), q(rng), e(rng)});
            }
            YMonomial x{fa}, y{fb};
            if (!expect(weight(c3, x * y) == weight(c3, x) + weight(c3, y),
                        "weight not multiplicative", why))
                return false;
        }

        // every monomial a run produces factors over the simple-root lattice
        auto lattice_check = [&](const AlgebraSpec& spec, const YMonomial& top,
                                 const std::map<YMonomial, long long>& terms) {
            for (const auto& [m, c] : terms)
                if (!solve_a_factorization(spec, top, m)) return false;
            return true;
        };
        if (!expect(lattice_check(a2, a2_top, base_a2.character->terms),
                    "lattice membership failed in the finished adjoint run", why))
            return false;
        if (!expect(lattice_check(c2, c2_top, base_c2.character->terms),
                    "lattice membership failed in the symplectic square", why))
            return false;
        auto mod_c3 = run_fm_modified(c3, c3_top);
        if (!expect(mod_c3.ok() &&
                        lattice_check(c3, c3_top, mod_c3.character->terms),
                    "lattice membership failed in the repaired rank-three run", why))
            return false;
        auto mod_d4 = run_fm_modified(d4, d4_top);
        if (!expect(mod_d4.ok() &&
                        lattice_check(d4, d4_top, mod_d4.character->terms),
                    "lattice membership failed in the repaired rank-four run", why))
            return false;

        // each box letter action is the lowering step it claims to be
        struct Realized {
            Family family;
            int rank;
        };
        for (Realized rl : {Realized{Family::A, 2}, Realized{Family::C, 2}, Realized{Family::C, 3}}) {
            auto spec = make_algebra(rl.family, rl.rank);
            const int letters = alphabet_size(rl.family, rl.rank);
            for (int idx = 0; idx + 1 < letters; ++idx) {
                Letter l = letter_from_index(rl.family, rl.rank, idx);
                for (int row = 1; row <= 5; ++row)
                    for (int col = 1; col <= 5; ++col) {
                        LetterStep step = letter_action(rl.family, rl.rank, l, row, col);
                        if (!expect(box_monomial(rl.family, rl.rank, l, row, col) *
                                            a_monomial_inverse(spec, step.node, step.position) ==
                                        box_monomial(rl.family, rl.rank, step.next, row, col),
                                    "letter action identity failed", why))
                            return false;
                    }
            }
        }
        return true;
    });

    criterion(10, "small fundamental representations finish with a unique dominant monomial",
              [&](std::string& why) {
        std::vector<AlgebraSpec> specs = {a1, a2, make_algebra(Family::A, 3), c2, c3};
        for (const auto& spec : specs) {
            for (int i = 1; i <= spec.rank; ++i) {
                auto top = YMonomial::variable(i, 0);
                auto r = run_fm(spec, top);
                if (!r.ok()) {
                    why = "run stalled for " + algebra_label(spec) + " node " + std::to_string(i);
                    return false;
                }
                auto dom = dominant_monomials(*r.character);
                if (!(dom.size() == 1 && dom[0].first == top && dom[0].second == 1)) {
                    why = "extra dominant monomial for " + algebra_label(spec) + " node " +
                          std::to_string(i);
                    return false;
                }
            }
        }
        return true;
    });

    if (failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criteria failed\n", failures);
    return failures;
}
