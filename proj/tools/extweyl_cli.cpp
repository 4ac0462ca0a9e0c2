// Command-line front end: classification, root enumeration, Hurwitz
// round-trip experiments, factorization connection, and interval poset
// export. All output is JSON on stdout; diagnostics go to stderr.
//
// Exit codes: 0 success, 2 input error, 3 unsupported diagram type,
// 4 search budget exhausted.

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "extweyl/absorder.hpp"
#include "extweyl/diagram.hpp"
#include "extweyl/group.hpp"
#include "extweyl/hurwitz.hpp"
#include "extweyl/io.hpp"
#include "extweyl/rootsys.hpp"
#include "extweyl/space.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitExhausted = 4;

extweyl::DiagramSpec parse_arms(const std::string& arms) {
    extweyl::DiagramSpec spec;
    std::stringstream ss(arms);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw extweyl::ValidationError("arm lengths must be integers");
        }
        if (pos != item.size()) throw extweyl::ValidationError("arm lengths must be integers");
        spec.arms.push_back(value);
    }
    spec.validate();
    return spec;
}

int cmd_classify(const std::string& arms) {
    const auto spec = parse_arms(arms);
    const extweyl::Mat gram = extweyl::build_gram(spec);
    const extweyl::SignatureTriple sig = extweyl::inertia(gram);
    extweyl::json out{{"type", extweyl::to_string(extweyl::type_of(sig))},
                      {"signature", {sig.plus, sig.minus, sig.zero}},
                      {"n", spec.rank()},
                      {"gram", gram}};
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int cmd_roots(const std::string& arms, extweyl::Int height) {
    const extweyl::Space space(parse_arms(arms));
    const auto slice = extweyl::enumerate_projected(space, height);
    std::cout << extweyl::to_json(slice).dump() << "\n";
    return kExitOk;
}

int cmd_hurwitz_roundtrip(const std::string& arms, std::size_t walks, std::size_t steps,
                          std::uint64_t seed, std::size_t budget) {
    const extweyl::Space space(parse_arms(arms));
    space.require_non_tubular();
    const auto standard = extweyl::standard_factorization(space, extweyl::standard_ordering(space));
    std::size_t successes = 0, failures = 0;
    std::vector<std::size_t> node_counts;
    std::vector<std::size_t> word_lengths;
    for (std::size_t w = 0; w < walks; ++w) {
        auto [endpoint, walk_word] = extweyl::random_walk(space, standard, steps, seed + w);
        auto result = extweyl::connect(space, endpoint, standard, budget);
        node_counts.push_back(result.nodes);
        if (result.word) {
            ++successes;
            word_lengths.push_back(result.word->letters.size());
        } else {
            ++failures;
        }
    }
    std::size_t median_nodes = 0;
    if (!node_counts.empty()) {
        std::vector<std::size_t> sorted = node_counts;
        std::sort(sorted.begin(), sorted.end());
        median_nodes = sorted[sorted.size() / 2];
    }
    extweyl::json out{{"walks", walks},
                      {"successes", successes},
                      {"failures", failures},
                      {"median_nodes", median_nodes},
                      {"word_lengths", word_lengths}};
    std::cout << out.dump() << "\n";
    return failures == 0 ? kExitOk : kExitExhausted;
}

int cmd_connect(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw extweyl::ValidationError("cannot open input file: " + path);
    extweyl::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw extweyl::ValidationError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.contains("arms") || !j.contains("f") || !j.contains("g"))
        throw extweyl::ValidationError("connect input needs \"arms\", \"f\", \"g\"");
    extweyl::DiagramSpec spec;
    for (const auto& v : j["arms"]) spec.arms.push_back(v.get<int>());
    spec.validate();
    const extweyl::Space space(spec);
    space.require_non_tubular();
    const auto f = extweyl::factorization_from_json(space, j["f"]);
    const auto g = extweyl::factorization_from_json(space, j["g"]);
    const std::size_t budget = j.value("budget", std::size_t{1'000'000});
    const auto result = extweyl::connect(space, f, g, budget);
    if (!result.word) {
        std::cout << extweyl::json{{"status", "exhausted"}, {"nodes", result.nodes}}.dump() << "\n";
        return kExitExhausted;
    }
    extweyl::json out = extweyl::to_json(*result.word);
    out["nodes"] = result.nodes;
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int cmd_interval(const std::string& arms, std::size_t moves, extweyl::Int k_bound,
                 const std::string& format) {
    if (format != "json" && format != "dot")
        throw extweyl::ValidationError("format must be json or dot");
    const extweyl::Space space(parse_arms(arms));
    space.require_non_tubular();
    const auto slice =
        extweyl::interval_slice(space, extweyl::standard_ordering(space), moves, k_bound);
    if (format == "dot")
        std::cout << extweyl::export_poset_dot(space, slice);
    else
        std::cout << extweyl::to_json(space, slice).dump() << "\n";
    return slice.complete ? kExitOk : kExitExhausted;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Extended Weyl groups of star diagrams: classification, roots, "
                 "Hurwitz experiments, interval posets"};
    app.require_subcommand(1);

    std::string arms;
    std::string file;
    std::string format = "json";
    extweyl::Int height = 10;
    extweyl::Int k_bound = 4;
    std::size_t walks = 100, steps = 20, moves = 0, budget = 1'000'000;
    std::uint64_t seed = 1;

    auto* classify = app.add_subcommand("classify", "Classify a diagram and print its signature");
    classify->add_option("--arms", arms, "Comma-separated arm lengths; empty for none")
        ->required();

    auto* roots = app.add_subcommand("roots", "Enumerate the projected root system");
    roots->add_option("--arms", arms)->required();
    roots->add_option("--height", height, "Height bound for the enumeration");

    auto* roundtrip =
        app.add_subcommand("hurwitz-roundtrip", "Random walks from the standard factorization, "
                                                "connected back with verified braid words");
    roundtrip->add_option("--arms", arms)->required();
    roundtrip->add_option("--walks", walks);
    roundtrip->add_option("--steps", steps);
    roundtrip->add_option("--seed", seed);
    roundtrip->add_option("--budget", budget, "Node budget per connect");

    auto* connect = app.add_subcommand("connect", "Connect two factorizations from a JSON file");
    connect->add_option("--file", file, "JSON with arms, f, g, budget")->required();

    auto* interval = app.add_subcommand("interval", "Budgeted interval poset below c");
    interval->add_option("--arms", arms)->required();
    interval->add_option("--moves", moves, "Orbit-ball move budget");
    interval->add_option("--kbound", k_bound, "Translation bound on witness entries");
    interval->add_option("--format", format, "json or dot");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }

    try {
        if (classify->parsed()) return cmd_classify(arms);
        if (roots->parsed()) return cmd_roots(arms, height);
        if (roundtrip->parsed()) return cmd_hurwitz_roundtrip(arms, walks, steps, seed, budget);
        if (connect->parsed()) return cmd_connect(file);
        if (interval->parsed()) return cmd_interval(arms, moves, k_bound, format);
    } catch (const extweyl::UnsupportedTypeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const extweyl::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const extweyl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
