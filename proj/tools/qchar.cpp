// Command-line front end: computes q-characters by iterated expansion, with
// optional ancestor injection, and checks tableau realizations.
//
// Exit codes: 0 success, 1 usage/input error, 2 algorithmic failure (offender
// found), 3 ambiguous ancestor choice, 4 resource limit breached, 5 tableau
// candidates do not match the character.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qch/cartan.hpp"
#include "qch/fm.hpp"
#include "qch/monomial.hpp"
#include "qch/tableaux.hpp"
#include "qch/traceback.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;
constexpr int kExitAmbiguous = 3;
constexpr int kExitLimit = 4;
constexpr int kExitMismatch = 5;

struct RunConfig {
    std::string algebra;
    std::string highest;
    std::string mode = "plain";
    std::string format = "text";
    bool trace = false;
    long long max_height = 64;
    long long max_terms = 1000000;
    int max_injections = 8;
    int ancestor_depth = 4;

    qch::Limits limits() const {
        qch::Limits l;
        l.max_height = max_height;
        l.max_terms = max_terms;
        l.max_injections = max_injections;
        l.ancestor_depth = ancestor_depth;
        return l;
    }
};

std::string display_monomial(const qch::YMonomial& m) {
    std::string s = qch::render_monomial(m);
    return s.empty() ? "1" : s;
}

ordered_json weight_json(const qch::Weight& w) { return ordered_json(w.coords); }

ordered_json terms_json(const std::map<qch::YMonomial, long long>& terms) {
    ordered_json arr = ordered_json::array();
    for (const auto& [m, c] : terms)
        arr.push_back({{"monomial", qch::render_monomial(m)}, {"coeff", c}});
    return arr;
}

ordered_json trace_json(const std::vector<qch::ExpansionEvent>& trace) {
    ordered_json arr = ordered_json::array();
    for (const auto& ev : trace) {
        ordered_json mu = ordered_json::array();
        for (const auto& [m, c] : ev.mu)
            mu.push_back({{"monomial", qch::render_monomial(m)}, {"coeff", c}});
        arr.push_back({{"weight", weight_json(ev.weight)},
                       {"monomial", qch::render_monomial(ev.monomial)},
                       {"node", ev.node},
                       {"mu", mu}});
    }
    return arr;
}

ordered_json failure_json(const qch::FailureReport& fr) {
    ordered_json offs = ordered_json::array();
    for (const auto& o : fr.offenders)
        offs.push_back({{"monomial", qch::render_monomial(o.monomial)},
                        {"coeff", o.coeff},
                        {"coloring", o.coloring},
                        {"deficient_nodes", o.deficient_nodes}});
    std::map<qch::YMonomial, long long> partial;
    for (const auto& [m, t] : fr.partial.terms) partial.emplace(m, t.coeff);
    return {{"weight", weight_json(fr.weight)},
            {"offenders", offs},
            {"partial_terms", terms_json(partial)}};
}

ordered_json injections_json(const std::vector<qch::InjectionRecord>& injections) {
    ordered_json arr = ordered_json::array();
    for (const auto& inj : injections) {
        ordered_json cands = ordered_json::array();
        for (const auto& c : inj.candidates_considered)
            cands.push_back(qch::render_monomial(c));
        arr.push_back({{"offender", qch::render_monomial(inj.offender)},
                       {"node", inj.node},
                       {"injected", qch::render_monomial(inj.injected)},
                       {"ancestor_weight", weight_json(inj.ancestor_weight)},
                       {"candidates_considered", cands}});
    }
    return arr;
}

ordered_json character_json(const qch::QCharacter& chi) {
    ordered_json out;
    out["terms"] = terms_json(chi.terms);
    out["total_coefficient"] = chi.total();
    ordered_json dom = ordered_json::array();
    for (const auto& [m, c] : qch::dominant_monomials(chi))
        dom.push_back({{"monomial", qch::render_monomial(m)}, {"coeff", c}});
    out["dominant"] = dom;
    ordered_json weights = ordered_json::array();
    for (const auto& [w, mult] : qch::specialize_classical(chi))
        weights.push_back({{"weight", weight_json(w)}, {"multiplicity", mult}});
    out["weights"] = weights;
    return out;
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

void print_character_text(const qch::QCharacter& chi) {
    std::printf("terms %lld total, %zu distinct\n", chi.total(), chi.terms.size());
    for (const auto& [m, c] : chi.terms) std::printf("term %lld %s\n", c, display_monomial(m).c_str());
    for (const auto& [m, c] : qch::dominant_monomials(chi))
        std::printf("dominant %lld %s\n", c, display_monomial(m).c_str());
    for (const auto& [w, mult] : qch::specialize_classical(chi)) {
        std::string ws;
        for (std::size_t i = 0; i < w.coords.size(); ++i) {
            if (i) ws += ',';
            ws += std::to_string(w.coords[i]);
        }
        std::printf("weight [%s] %lld\n", ws.c_str(), mult);
    }
}

void print_failure_text(const qch::FailureReport& fr) {
    std::string ws;
    for (std::size_t i = 0; i < fr.weight.coords.size(); ++i) {
        if (i) ws += ',';
        ws += std::to_string(fr.weight.coords[i]);
    }
    std::printf("failure at weight [%s]\n", ws.c_str());
    for (const auto& o : fr.offenders) {
        std::string nodes;
        for (std::size_t i = 0; i < o.deficient_nodes.size(); ++i) {
            if (i) nodes += ',';
            nodes += std::to_string(o.deficient_nodes[i]);
        }
        std::printf("offender %s coeff %lld deficient nodes [%s]\n",
                    display_monomial(o.monomial).c_str(), o.coeff, nodes.c_str());
    }
    std::printf("partial state %zu monomials\n", fr.partial.terms.size());
}

void print_trace_text(const std::vector<qch::ExpansionEvent>& trace) {
    for (const auto& ev : trace) {
        std::printf("expand node %d %s ->", ev.node, display_monomial(ev.monomial).c_str());
        bool first = true;
        for (const auto& [m, c] : ev.mu) {
            if (first) {  // skip the head copy of the monomial itself
                first = false;
                continue;
            }
            std::printf(" %s (%lld)", display_monomial(m).c_str(), c);
        }
        std::printf("\n");
    }
}

ordered_json base_doc(const RunConfig& cfg, const char* command) {
    ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = command;
    doc["algebra"] = cfg.algebra;
    doc["highest"] = cfg.highest;
    doc["mode"] = cfg.mode;
    return doc;
}

int cmd_run(const RunConfig& cfg) {
    qch::AlgebraSpec spec;
    qch::YMonomial highest;
    try {
        spec = qch::parse_algebra(cfg.algebra);
        highest = qch::parse_monomial(cfg.highest);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const bool json = cfg.format == "json";
    ordered_json doc = base_doc(cfg, "run");
    try {
        if (cfg.mode == "modified") {
            qch::ModifiedResult result = qch::run_fm_modified(spec, highest, cfg.limits());
            if (result.ok()) {
                doc["status"] = "ok";
                doc.update(character_json(*result.character));
                doc["injections"] = injections_json(result.injections);
                if (cfg.trace) doc["trace"] = trace_json(result.trace);
                if (json) {
                    emit(doc);
                } else {
                    std::printf("status ok (%zu injections)\n", result.injections.size());
                    for (const auto& inj : result.injections)
                        std::printf("injected %s for offender %s at node %d\n",
                                    display_monomial(inj.injected).c_str(),
                                    display_monomial(inj.offender).c_str(), inj.node);
                    print_character_text(*result.character);
                    if (cfg.trace) print_trace_text(result.trace);
                }
                return kExitOk;
            }
            doc["status"] = "failure";
            doc["failure"] = failure_json(*result.failure);
            doc["injections"] = injections_json(result.injections);
            if (cfg.trace) doc["trace"] = trace_json(result.trace);
            if (json) {
                emit(doc);
            } else {
                std::printf("status failure (no usable ancestor)\n");
                print_failure_text(*result.failure);
            }
            return kExitFailure;
        }

        qch::RunResult result = qch::run_fm(spec, highest, cfg.limits());
        if (result.ok()) {
            doc["status"] = "ok";
            doc.update(character_json(*result.character));
            if (cfg.trace) doc["trace"] = trace_json(result.trace);
            if (json) {
                emit(doc);
            } else {
                std::printf("status ok\n");
                print_character_text(*result.character);
                if (cfg.trace) print_trace_text(result.trace);
            }
            return kExitOk;
        }
        doc["status"] = "failure";
        doc["failure"] = failure_json(*result.failure);
        if (cfg.trace) doc["trace"] = trace_json(result.trace);
        if (json) {
            emit(doc);
        } else {
            std::printf("status failure\n");
            print_failure_text(*result.failure);
        }
        return kExitFailure;
    } catch (const qch::AmbiguityError& e) {
        doc["status"] = "ambiguous";
        ordered_json cands = ordered_json::array();
        for (const auto& c : e.candidates) cands.push_back(qch::render_monomial(c));
        doc["ambiguity"] = {{"offender", qch::render_monomial(e.offender)},
                            {"node", e.node},
                            {"candidates", cands}};
        if (json)
            emit(doc);
        else
            std::printf("status ambiguous: %s\n", e.what());
        return kExitAmbiguous;
    } catch (const qch::LimitError& e) {
        doc["status"] = "limit";
        doc["error"] = e.what();
        if (json)
            emit(doc);
        else
            std::printf("status limit: %s\n", e.what());
        return kExitLimit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_tableaux(const RunConfig& cfg, const std::string& shape_text,
                 const std::string& candidates_path) {
    qch::AlgebraSpec spec;
    qch::YMonomial highest;
    qch::Shape shape;
    try {
        spec = qch::parse_algebra(cfg.algebra);
        highest = qch::parse_monomial(cfg.highest);
        std::stringstream ss(shape_text);
        std::string piece;
        while (std::getline(ss, piece, ',')) {
            if (piece.empty()) throw std::invalid_argument("malformed shape '" + shape_text + "'");
            shape.rows.push_back(std::stoi(piece));
        }
        if (shape.rows.empty()) throw std::invalid_argument("empty shape");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const bool json = cfg.format == "json";
    ordered_json doc = base_doc(cfg, "tableaux");
    doc["shape"] = shape.rows;
    try {
        std::vector<qch::Tableau> candidates;
        if (!candidates_path.empty()) {
            std::ifstream in(candidates_path);
            if (!in) {
                std::cerr << "error: cannot open '" << candidates_path << "'\n";
                return kExitUsage;
            }
            std::string line;
            while (std::getline(in, line)) {
                std::string trimmed = line;
                trimmed.erase(0, trimmed.find_first_not_of(" \t"));
                if (trimmed.empty() || trimmed[0] == '#') continue;
                qch::Tableau t = qch::parse_tableau(spec.family, spec.rank, line);
                if (!(t.shape() == shape))
                    throw std::invalid_argument("candidate shape mismatch: '" + line + "'");
                candidates.push_back(std::move(t));
            }
        } else {
            candidates = qch::enumerate_semistandard(spec.family, spec.rank, shape);
        }
        doc["tableaux_count"] = candidates.size();

        qch::QCharacter chi;
        std::vector<qch::InjectionRecord> injections;
        if (cfg.mode == "modified") {
            qch::ModifiedResult result = qch::run_fm_modified(spec, highest, cfg.limits());
            if (!result.ok()) {
                doc["status"] = "failure";
                doc["failure"] = failure_json(*result.failure);
                if (json)
                    emit(doc);
                else
                    print_failure_text(*result.failure);
                return kExitFailure;
            }
            chi = *result.character;
            injections = std::move(result.injections);
        } else {
            qch::RunResult result = qch::run_fm(spec, highest, cfg.limits());
            if (!result.ok()) {
                doc["status"] = "failure";
                doc["failure"] = failure_json(*result.failure);
                if (json)
                    emit(doc);
                else
                    print_failure_text(*result.failure);
                return kExitFailure;
            }
            chi = *result.character;
        }

        qch::MatchReport report = qch::match_character(chi, spec.family, spec.rank, candidates);
        doc["status"] = report.matched ? "match" : "mismatch";
        if (cfg.mode == "modified") doc["injections"] = injections_json(injections);
        ordered_json assignment = ordered_json::array();
        for (const auto& [m, ts] : report.assignment) {
            ordered_json texts = ordered_json::array();
            for (const auto& t : ts) texts.push_back(qch::render_tableau(t));
            auto it = chi.terms.find(m);
            assignment.push_back({{"monomial", qch::render_monomial(m)},
                                  {"coeff", it == chi.terms.end() ? 0 : it->second},
                                  {"tableaux", texts}});
        }
        doc["assignment"] = assignment;
        ordered_json missing = ordered_json::array();
        for (const auto& [m, c] : report.missing)
            missing.push_back({{"monomial", qch::render_monomial(m)}, {"count", c}});
        doc["missing"] = missing;
        ordered_json extra = ordered_json::array();
        for (const auto& [m, c] : report.extra)
            extra.push_back({{"monomial", qch::render_monomial(m)}, {"count", c}});
        doc["extra"] = extra;

        if (json) {
            emit(doc);
        } else {
            std::printf("status %s (%zu tableaux, %zu distinct monomials)\n",
                        report.matched ? "match" : "mismatch", candidates.size(),
                        report.assignment.size());
            for (const auto& [m, c] : report.missing)
                std::printf("missing %lld %s\n", c, display_monomial(m).c_str());
            for (const auto& [m, c] : report.extra)
                std::printf("extra %lld %s\n", c, display_monomial(m).c_str());
        }
        return report.matched ? kExitOk : kExitMismatch;
    } catch (const qch::AmbiguityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAmbiguous;
    } catch (const qch::LimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitLimit;
    } catch (const qch::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-character computation by iterated monomial expansion"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string shape_text;
    std::string candidates_path;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-a,--algebra", cfg.algebra, "algebra label, e.g. A2, C3, D4")->required();
        sub->add_option("-m,--highest", cfg.highest,
                        "highest monomial, e.g. \"Y[1,4] Y[2,1] Y[3,-2]\"")
            ->required();
        sub->add_option("--mode", cfg.mode, "plain or modified (ancestor injection)")
            ->check(CLI::IsMember({"plain", "modified"}));
        sub->add_option("-f,--format", cfg.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--max-height", cfg.max_height, "height cap");
        sub->add_option("--max-terms", cfg.max_terms, "distinct-monomial cap");
        sub->add_option("--max-injections", cfg.max_injections, "repair cap in modified mode");
        sub->add_option("--ancestor-depth", cfg.ancestor_depth, "ancestor search depth");
    };

    CLI::App* run = app.add_subcommand("run", "compute a q-character");
    add_common(run);
    run->add_flag("--trace", cfg.trace, "include the expansion trace in the output");

    CLI::App* tab = app.add_subcommand("tableaux", "match a character against tableaux");
    add_common(tab);
    tab->add_option("--shape", shape_text, "comma-separated row lengths, e.g. 2,1")->required();
    tab->add_option("--candidates", candidates_path,
                    "file of tableaux (one per line, rows '/'-separated); default: all "
                    "column-strict fillings of the shape");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (run->parsed()) return cmd_run(cfg);
    return cmd_tableaux(cfg, shape_text, candidates_path);
}
