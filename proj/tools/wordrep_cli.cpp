// wordrep_cli.cpp -- command-line front end

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wordrep/cartesian.hpp"
#include "wordrep/graph.hpp"
#include "wordrep/oracle.hpp"
#include "wordrep/products.hpp"
#include "wordrep/rooted.hpp"
#include "wordrep/word.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInputError = 2;
constexpr int kBudgetExhausted = 3;

void print_report(const wordrep::BoundReport& r, bool json) {
    if (json) {
        std::cout << wordrep::to_json(r).dump(2) << "\n";
        return;
    }
    std::cout << "construction: " << r.construction << "\n"
              << "word: " << wordrep::format_word(r.word) << "\n"
              << "achieved_length: " << r.achieved_length << "\n"
              << "bound_value: " << r.bound_value << "\n"
              << "bound_holds: " << (r.bound_holds ? "true" : "false") << "\n"
              << "verified_represents: "
              << (r.verified_represents ? "true" : "false") << "\n";
    if (r.root)
        std::cout << "root: " << *r.root << "\n";
}

int report_exit(const wordrep::BoundReport& r) {
    return (r.bound_holds && r.verified_represents) ? kOk : kVerificationFailure;
}

int run_construct(const std::string& kind, const std::vector<std::string>& args,
                  std::size_t n, const std::string& root, bool json) {
    using namespace wordrep;
    auto need = [&](std::size_t count) {
        if (args.size() != count)
            throw ParseError("construct " + kind + " expects " +
                             std::to_string(count) + " positional arguments");
    };
    BoundReport r;
    if (kind == "g-k2") {
        need(2);
        r = construct_g_k2(load_graph(args[0]), parse_word(args[1]));
    } else if (kind == "kn-k2") {
        need(0);
        r = construct_kn_k2(n);
    } else if (kind == "g-kn") {
        need(2);
        r = construct_g_kn(load_graph(args[0]), parse_word(args[1]), n);
    } else if (kind == "g-h") {
        need(4);
        r = construct_g_h(load_graph(args[0]), parse_word(args[1]),
                          load_graph(args[2]), parse_word(args[3]));
    } else if (kind == "rooted-k2") {
        need(2);
        r = construct_rooted_k2(load_graph(args[0]), parse_word(args[1]));
    } else if (kind == "rooted-kn") {
        need(2);
        r = construct_rooted_kn(load_graph(args[0]), parse_word(args[1]), n);
    } else if (kind == "rooted-h") {
        need(4);
        if (root.empty())
            throw ParseError("construct rooted-h requires --root");
        r = construct_rooted_h(load_graph(args[0]), parse_word(args[1]),
                               load_graph(args[2]), parse_word(args[3]),
                               parse_letter(root));
    } else {
        throw ParseError("unknown construction '" + kind + "'");
    }
    print_report(r, json);
    return report_exit(r);
}

}  // namespace

int main(int argc, char** argv) {
    using namespace wordrep;

    CLI::App app{"word-representants of Cartesian and rooted graph products"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "emit JSON instead of text");

    std::string graph_path, word_text, kind, root;
    std::string graph_path2;
    std::vector<std::string> construct_args;
    std::size_t opt_n = 0;
    std::size_t max_len = 0, max_k = 3;
    std::size_t max_states = 100'000'000;
    bool symmetry = false;

    auto* check = app.add_subcommand("check", "does WORD represent GRAPH?");
    check->add_option("graph", graph_path)->required();
    check->add_option("word", word_text)->required();

    auto* from_word = app.add_subcommand("from-word", "graph induced by WORD");
    from_word->add_option("word", word_text)->required();

    auto* product = app.add_subcommand("product", "cartesian or rooted product");
    product->add_option("kind", kind)->required()
        ->check(CLI::IsMember({"cartesian", "rooted"}));
    product->add_option("g_file", graph_path)->required();
    product->add_option("h_file", graph_path2)->required();
    product->add_option("--root", root, "root vertex of H (rooted product)");

    auto* construct = app.add_subcommand("construct", "run a construction");
    construct->add_option("kind", kind)->required();
    construct->add_option("args", construct_args, "graph files and words");
    construct->add_option("--n", opt_n, "fiber size for kn-k2 / g-kn / rooted-kn");
    construct->add_option("--root", root, "root vertex for rooted-h");

    auto* minimize = app.add_subcommand("minimize", "brute-force l(G)");
    minimize->add_option("graph", graph_path)->required();
    minimize->add_option("--max-len", max_len, "cap on word length (default 2|V|)");
    minimize->add_option("--max-states", max_states, "enumeration cap");
    minimize->add_flag("--symmetry", symmetry,
                       "orbit-reduce first letters (witness canonical up to relabelling)");

    auto* repnum = app.add_subcommand("repnum", "representation number R(G)");
    repnum->add_option("graph", graph_path)->required();
    repnum->add_option("--max-k", max_k, "cap on uniformity");
    repnum->add_option("--max-states", max_states, "enumeration cap");

    auto* audit = app.add_subcommand("audit", "minimize + structural audit");
    audit->add_option("graph", graph_path)->required();
    audit->add_option("--max-len", max_len, "cap on word length (default 2|V|)");
    audit->add_option("--max-states", max_states, "enumeration cap");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            Graph g = load_graph(graph_path);
            bool ok = represents(parse_word(word_text), g);
            if (json)
                std::cout << "{\"represents\": " << (ok ? "true" : "false") << "}\n";
            else
                std::cout << "represents: " << (ok ? "true" : "false") << "\n";
            return ok ? kOk : kVerificationFailure;
        }
        if (from_word->parsed()) {
            std::cout << format_graph(graph_from_word(parse_word(word_text)));
            return kOk;
        }
        if (product->parsed()) {
            Graph g = load_graph(graph_path);
            Graph h = load_graph(graph_path2);
            if (kind == "cartesian") {
                std::cout << format_graph(cartesian_product(g, h));
            } else {
                if (root.empty())
                    throw ParseError("rooted product requires --root");
                std::cout << format_graph(rooted_product(g, h, parse_letter(root)));
            }
            return kOk;
        }
        if (construct->parsed())
            return run_construct(kind, construct_args, opt_n, root, json);

        SearchBudget budget;
        budget.max_length = max_len;
        budget.max_uniform_k = max_k;
        budget.max_states = max_states;
        budget.symmetry_reduction = symmetry;

        if (minimize->parsed()) {
            Graph g = load_graph(graph_path);
            SearchResult res = min_length_word(g, budget);
            if (res.status == SearchStatus::budget_exhausted) {
                std::cerr << "budget exhausted\n";
                return kBudgetExhausted;
            }
            if (res.status == SearchStatus::not_found) {
                std::cerr << "no representing word up to the length cap\n";
                return kVerificationFailure;
            }
            if (json) {
                nlohmann::ordered_json j;
                j["l"] = res.length;
                auto letters = nlohmann::ordered_json::array();
                for (Letter c : res.word)
                    letters.push_back(c.name());
                j["word"] = std::move(letters);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "l = " << res.length << "\n"
                          << "word = " << format_word(res.word) << "\n";
            }
            return kOk;
        }
        if (repnum->parsed()) {
            Graph g = load_graph(graph_path);
            RepnumResult res = representation_number(g, budget);
            if (res.status == SearchStatus::budget_exhausted) {
                std::cerr << "budget exhausted\n";
                return kBudgetExhausted;
            }
            if (res.status == SearchStatus::not_found) {
                std::cerr << "no uniform representant with k <= " << max_k << "\n";
                return kVerificationFailure;
            }
            if (json) {
                nlohmann::ordered_json j;
                j["k"] = res.k;
                auto letters = nlohmann::ordered_json::array();
                for (Letter c : res.word)
                    letters.push_back(c.name());
                j["word"] = std::move(letters);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "R = " << res.k << "\n"
                          << "word = " << format_word(res.word) << "\n";
            }
            return kOk;
        }
        if (audit->parsed()) {
            Graph g = load_graph(graph_path);
            SearchResult res = min_length_word(g, budget);
            if (res.status == SearchStatus::budget_exhausted) {
                std::cerr << "budget exhausted\n";
                return kBudgetExhausted;
            }
            if (res.status == SearchStatus::not_found) {
                std::cerr << "no representing word up to the length cap\n";
                return kVerificationFailure;
            }
            AuditRecord rec = minimal_word_audit(g, res.word);
            if (json) {
                std::cout << to_json(rec).dump(2) << "\n";
            } else {
                std::cout << "l = " << rec.l << "\n"
                          << "word = " << format_word(rec.word) << "\n"
                          << "singletons = " << rec.singletons
                          << "  clique_number = " << rec.clique_number << "\n"
                          << "o_min = " << rec.o_min << "  o_max = " << rec.o_max
                          << "  diameter = " << rec.diameter << "\n"
                          << "lemma_kap_holds = "
                          << (rec.lemma_kap_holds ? "true" : "false") << "\n"
                          << "theorem_di_holds = "
                          << (rec.theorem_di_holds ? "true" : "false") << "\n";
            }
            return (rec.lemma_kap_holds && rec.theorem_di_holds)
                       ? kOk : kVerificationFailure;
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
