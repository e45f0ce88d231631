// lie-ideal: ideals, multiplication tables, centers, derived subalgebras and
// simplicity checks for matrix Lie algebras over F_p or Q.
//
// Exit codes: 0 ok, 2 parse error, 3 bad generator, 4 inconclusive,
// 5 invalid algebra or characteristic.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lie_ideal/lie_ideal.hpp"

namespace {

using namespace lie_ideal;
using nlohmann::json;

enum ExitCode : int { ok = 0, parse_failure = 2, bad_generator = 3, inconclusive = 4, invalid_algebra = 5 };

struct Options {
    std::string algebra;
    std::uint64_t characteristic = 0;
    std::string gens;
    bool json = false;
    std::uint64_t cap = SimplicityOptions{}.cap;
    unsigned threads = 1;
};

struct Failure {
    int code;
    std::string message;
};

LieAlgebra load_algebra(const Options& opt) {
    try {
        return catalog::by_name(opt.algebra, Characteristic(opt.characteristic));
    } catch (const Error& e) {
        throw Failure{invalid_algebra, e.what()};
    }
}

std::vector<ParsedGenerator> load_generators(const Options& opt, const LieAlgebra& L) {
    try {
        auto first = opt.gens.find_first_not_of(" \t\n");
        if (first != std::string::npos && opt.gens[first] == '[') {
            std::vector<ParsedGenerator> out;
            for (auto& e : io::elements_from_json_text(opt.gens, L)) out.push_back({format_element(e), std::move(e)});
            return out;
        }
        return parse_generators(opt.gens, L);
    } catch (const GeneratorError& e) {
        throw Failure{bad_generator, e.what()};
    } catch (const Error& e) {
        throw Failure{parse_failure, e.what()};
    }
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_table(const Options& opt) {
    const LieAlgebra L = load_algebra(opt);
    const auto table = L.multiplication_table();
    if (opt.json) {
        json text = json::array();
        for (const auto& row : table) text.push_back(io::elements_to_text(row));
        print_json(io::envelope("table", L,
                                {{"dimension", L.dimension()},
                                 {"structure_constants", io::structure_constants_to_json(L)},
                                 {"table_text", std::move(text)}}));
        return ok;
    }
    std::vector<std::vector<std::string>> cells;
    std::size_t width = 0;
    for (const auto& row : table) {
        auto& out = cells.emplace_back();
        for (const auto& e : row) {
            out.push_back(format_element(e));
            width = std::max(width, out.back().size());
        }
    }
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t j = 0; j < row.size(); ++j) {
            line += row[j];
            if (j + 1 < row.size()) line += std::string(width + 2 - row[j].size(), ' ');
        }
        std::cout << line << "\n";
    }
    return ok;
}

int run_ideal(const Options& opt) {
    const LieAlgebra L = load_algebra(opt);
    const auto parsed = load_generators(opt, L);
    std::vector<AlgebraElement> gens;
    for (const auto& g : parsed) gens.push_back(g.element);

    IdealResult result;
    try {
        result = ideal_generated(L, gens);
    } catch (const GeneratorError& e) {
        throw Failure{bad_generator, e.what()};
    }

    if (opt.json) {
        print_json(io::envelope("ideal", L, io::ideal_to_json(result), io::trace_to_json(result)));
        return ok;
    }
    for (const auto& t : result.trace) std::cout << "Depth = " << t.depth << " -> " << format_set(t.spanning_set) << "\n";
    std::string shown;
    for (std::size_t i = 0; i < parsed.size(); ++i) shown += (i ? ", " : "") + parsed[i].text;
    std::cout << "Ideal <" << shown << "> = " << format_set(result.basis) << " with dimension = " << result.dimension
              << " and char(K)=" << L.characteristic() << "\n";
    return ok;
}

int run_center(const Options& opt) {
    const LieAlgebra L = load_algebra(opt);
    const auto z = center(L);
    if (opt.json)
        print_json(io::envelope("center", L,
                                {{"basis", io::elements_to_json(z)},
                                 {"basis_text", io::elements_to_text(z)},
                                 {"dimension", z.size()}}));
    else
        std::cout << format_set(z) << "\n";
    return ok;
}

int run_derived(const Options& opt) {
    const LieAlgebra L = load_algebra(opt);
    const auto d = derived_subalgebra(L);
    if (opt.json)
        print_json(io::envelope("derived", L, io::ideal_to_json(d), io::trace_to_json(d)));
    else
        std::cout << format_set(d.basis) << "\n";
    return ok;
}

int run_simple(const Options& opt) {
    const LieAlgebra L = load_algebra(opt);
    const auto report = is_simple(L, {opt.cap, opt.threads});
    const int code = report.verdict == Simplicity::inconclusive ? inconclusive : ok;

    if (opt.json) {
        json result = {{"verdict", to_string(report.verdict)},
                       {"reason", report.reason},
                       {"candidates_tested", report.candidates_tested},
                       {"projective_points", report.projective_points},
                       {"derived", io::ideal_to_json(report.derived)},
                       {"center", io::elements_to_json(report.center)},
                       {"witness_generator", nullptr},
                       {"witness", nullptr}};
        if (report.witness_generator) result["witness_generator"] = io::coords_to_json(report.witness_generator->coords());
        if (report.witness) result["witness"] = io::ideal_to_json(*report.witness);
        print_json(io::envelope("simple", L, std::move(result)));
        return code;
    }

    std::cout << to_string(report.verdict);
    if (report.verdict == Simplicity::simple)
        std::cout << " (" << report.candidates_tested << " candidates tested)";
    std::cout << ": " << report.reason << "\n";
    if (report.witness_generator) std::cout << "witness generator: " << format_element(*report.witness_generator) << "\n";
    if (report.witness)
        std::cout << "witness ideal: " << format_set(report.witness->basis)
                  << " with dimension = " << report.witness->dimension << "\n";
    if (report.verdict == Simplicity::inconclusive) {
        std::cout << "derived subalgebra: " << format_set(report.derived.basis)
                  << " with dimension = " << report.derived.dimension << "\n";
        std::cout << "center: " << format_set(report.center) << "\n";
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ideals and structure of matrix Lie algebras over F_p or Q", "lie-ideal"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--algebra", opt.algebra, "gl2, glN, slN, ut N, sut N, diag N, or file:PATH")->required();
        cmd->add_option("--char", opt.characteristic, "characteristic: 0 or a prime")->required();
        cmd->add_flag("--json", opt.json, "machine-readable output");
    };

    auto* table = app.add_subcommand("table", "multiplication table");
    add_common(table);
    auto* ideal = app.add_subcommand("ideal", "ideal generated by a list of elements");
    add_common(ideal);
    ideal->add_option("--gens", opt.gens, "e.g. \"x3, x3 - x1\" or [[0,0,1,0]]")->required();
    auto* simple = app.add_subcommand("simple", "simplicity test");
    add_common(simple);
    simple->add_option("--cap", opt.cap, "max projective points to enumerate")->check(CLI::PositiveNumber);
    simple->add_option("--threads", opt.threads, "worker threads for enumeration")->check(CLI::PositiveNumber);
    auto* center_cmd = app.add_subcommand("center", "center of the algebra");
    add_common(center_cmd);
    auto* derived = app.add_subcommand("derived", "derived subalgebra [L, L]");
    add_common(derived);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return parse_failure;
    }

    try {
        if (*table) return run_table(opt);
        if (*ideal) return run_ideal(opt);
        if (*simple) return run_simple(opt);
        if (*center_cmd) return run_center(opt);
        if (*derived) return run_derived(opt);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return invalid_algebra;
    }
    return parse_failure;
}
