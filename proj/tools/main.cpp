#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "serre/functors.hpp"
#include "serre/homological.hpp"
#include "serre/q2.hpp"
#include "serre/quiver.hpp"
#include "serre/rep.hpp"

namespace {

using namespace serre;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Algebra load_algebra(const std::string& path) {
    Presentation p = parse_presentation(read_file(path));
    if (p.quiver.vertices.empty()) throw InputError("presentation has no vertices");
    return validate(p.quiver, p.relations);
}

uint64_t default_seed() {
    if (const char* s = std::getenv("SERRE_SEED")) return std::strtoull(s, nullptr, 10);
    return 0;
}

// Module spec "P(v)", "S(v)" or "I(v)".
Representation parse_module(const Algebra& a, const std::string& spec) {
    if (spec.size() < 4 || spec[1] != '(' || spec.back() != ')')
        throw InputError("module spec must look like P(v), S(v) or I(v)");
    std::string label = spec.substr(2, spec.size() - 3);
    int v = a.quiver().vertex_index(label);
    if (v < 0) throw InputError("unknown vertex: " + label);
    switch (spec[0]) {
        case 'P': return projective(a, v);
        case 'S': return simple(a, v);
        case 'I': return injective(a, v);
        default: throw InputError("module spec must start with P, S or I");
    }
}

void print_loewy(const Algebra& a, const Representation& m) {
    auto layers = loewy_layers(m);
    std::cout << "layers: " << layers.size() << "\n";
    for (size_t i = 0; i < layers.size(); ++i) {
        std::cout << "  ";
        bool first = true;
        for (const auto& [v, mult] : layers[i])
            for (int k = 0; k < mult; ++k) {
                if (!first) std::cout << " ";
                std::cout << a.quiver().vertices[v];
                first = false;
            }
        std::cout << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"exact-arithmetic workbench for quiver algebras and their block presentations"};
    app.require_subcommand(1);

    std::string file, module_spec, from, to, block_id, k_str = "0";
    int degree = 1, truncate_n = 6, trials = 20;
    uint64_t seed = default_seed();

    auto* validate_cmd = app.add_subcommand("validate", "check a presentation and compute its basis");
    validate_cmd->add_option("file", file)->required();

    auto* basis_cmd = app.add_subcommand("basis", "print the path basis");
    basis_cmd->add_option("file", file)->required();

    auto* cartan_cmd = app.add_subcommand("cartan", "print the Cartan matrix");
    cartan_cmd->add_option("file", file)->required();

    auto* loewy_cmd = app.add_subcommand("loewy", "print radical layers of a module");
    loewy_cmd->add_option("file", file)->required();
    loewy_cmd->add_option("--module", module_spec, "P(v), S(v) or I(v)")->required();

    auto* sym_cmd = app.add_subcommand("symmetric", "test for a nondegenerate trace form");
    sym_cmd->add_option("file", file)->required();
    sym_cmd->add_option("--seed", seed);

    auto* perm_cmd = app.add_subcommand("nakayama-perm", "match injectives with projectives");
    perm_cmd->add_option("file", file)->required();
    perm_cmd->add_option("--seed", seed);

    auto* coapprox_cmd = app.add_subcommand("coapprox", "partial coapproximation of a module");
    coapprox_cmd->add_option("file", file)->required();
    coapprox_cmd->add_option("--module", module_spec)->required();

    auto* c2_cmd = app.add_subcommand("c2-check", "compare the squared coapproximation with the exchange functor");
    c2_cmd->add_option("file", file)->required();
    c2_cmd->add_option("--seed", seed);

    auto* ext_cmd = app.add_subcommand("ext", "extension dimension between simples");
    ext_cmd->add_option("file", file)->required();
    ext_cmd->add_option("--from", from)->required();
    ext_cmd->add_option("--to", to)->required();
    ext_cmd->add_option("--degree", degree)->required();

    auto* serre_cmd = app.add_subcommand("serre-check", "duality check on random perfect complexes");
    serre_cmd->add_option("file", file)->required();
    serre_cmd->add_option("--seed", seed);
    serre_cmd->add_option("--trials", trials);

    auto* q2_cmd = app.add_subcommand("q2", "superalgebra-specific commands");
    q2_cmd->require_subcommand(1);
    auto* q2_block = q2_cmd->add_subcommand("block", "emit a block presentation");
    q2_block->add_option("id", block_id)->required();
    q2_block->add_option("--truncate", truncate_n);
    auto* q2_verify = q2_cmd->add_subcommand("verify", "verify a block presentation");
    q2_verify->add_option("id", block_id)->required();
    q2_verify->add_option("--truncate", truncate_n);
    auto* q2_ext1 = q2_cmd->add_subcommand("ext1", "first extension between the trivial module and its parity shift");
    auto* q2_chars = q2_cmd->add_subcommand("characters", "character bookkeeping for an atypical weight");
    q2_chars->add_option("--k", k_str)->required();

    auto* dot_cmd = app.add_subcommand("dot", "emit the quiver in DOT format");
    dot_cmd->add_option("file", file)->required();

    CLI11_PARSE(app, argc, argv);

    if (validate_cmd->parsed()) {
        Algebra a = load_algebra(file);
        std::cout << "status: ok\n";
        std::cout << "dimension: " << a.dimension() << "\n";
        return 0;
    }
    if (basis_cmd->parsed()) {
        Algebra a = load_algebra(file);
        std::cout << "dimension: " << a.dimension() << "\n";
        for (const auto& b : a.basis())
            std::cout << a.quiver().vertices[b.src] << " -> "
                      << a.quiver().vertices[b.tgt] << ": " << a.word_name(b.word)
                      << "\n";
        return 0;
    }
    if (cartan_cmd->parsed()) {
        Algebra a = load_algebra(file);
        auto c = cartan_matrix(a);
        for (const auto& row : c) {
            for (size_t j = 0; j < row.size(); ++j)
                std::cout << (j ? " " : "") << row[j];
            std::cout << "\n";
        }
        std::cout << "symmetric: " << (cartan_is_symmetric(a) ? "yes" : "no") << "\n";
        return 0;
    }
    if (loewy_cmd->parsed()) {
        Algebra a = load_algebra(file);
        print_loewy(a, parse_module(a, module_spec));
        return 0;
    }
    if (sym_cmd->parsed()) {
        Algebra a = load_algebra(file);
        bool s = is_symmetric(a, seed);
        std::cout << (s ? "symmetric" : "not symmetric") << "\n";
        return s ? 0 : 1;
    }
    if (perm_cmd->parsed()) {
        Algebra a = load_algebra(file);
        auto perm = nakayama_permutation(a, seed);
        bool total = true;
        for (int i = 0; i < a.num_vertices(); ++i) {
            std::cout << a.quiver().vertices[i] << " -> ";
            if (perm[i]) {
                std::cout << a.quiver().vertices[*perm[i]] << "\n";
            } else {
                std::cout << "none\n";
                total = false;
            }
        }
        if (!total) {
            std::cout << "not self-injective\n";
            return 1;
        }
        return 0;
    }
    if (coapprox_cmd->parsed()) {
        Algebra a = load_algebra(file);
        Representation c = coapprox(parse_module(a, module_spec));
        std::cout << "dimension: " << c.total_dim() << "\n";
        print_loewy(a, c);
        return 0;
    }
    if (c2_cmd->parsed()) {
        Algebra a = load_algebra(file);
        auto report = verify_c_squared_is_nakayama(a, seed);
        for (const auto& f : report.failures) std::cout << "failure: " << f << "\n";
        std::cout << (report.ok ? "verified" : "failed") << "\n";
        return report.ok ? 0 : 1;
    }
    if (ext_cmd->parsed()) {
        Algebra a = load_algebra(file);
        int vf = a.quiver().vertex_index(from);
        int vt = a.quiver().vertex_index(to);
        if (vf < 0 || vt < 0) throw InputError("unknown vertex");
        if (degree < 0) throw InputError("degree must be nonnegative");
        std::cout << "ext: " << ext(simple(a, vf), simple(a, vt), degree) << "\n";
        return 0;
    }
    if (serre_cmd->parsed()) {
        Algebra a = load_algebra(file);
        bool ok = true;
        for (int t = 0; t < trials; ++t) {
            ChainComplex x = random_perfect_complex(a, seed + 2 * t);
            ChainComplex y = random_perfect_complex(a, seed + 2 * t + 1);
            auto report = serre_duality_check(x, y);
            std::cout << "trial " << t << ": " << (report.ok ? "ok" : "MISMATCH")
                      << "\n";
            if (!report.ok) {
                for (const auto& l : report.lines) std::cout << "  " << l << "\n";
                ok = false;
            }
        }
        std::cout << (ok ? "verified" : "failed") << "\n";
        return ok ? 0 : 1;
    }
    if (q2_block->parsed()) {
        Presentation p = synthesize_block(block_from_name(block_id), truncate_n);
        std::cout << print_presentation(p.quiver, p.relations);
        return 0;
    }
    if (q2_verify->parsed()) {
        auto report = verify_block(block_from_name(block_id), truncate_n);
        for (const auto& l : report.lines) std::cout << l << "\n";
        for (const auto& f : report.failures) std::cout << "failure: " << f << "\n";
        std::cout << (report.ok ? "verified" : "failed") << "\n";
        return report.ok ? 0 : 1;
    }
    if (q2_ext1->parsed()) {
        SuperLieAlgebra g = build_q2();
        long d = ext1_super(g, trivial_module(g, 0), trivial_module(g, 1));
        long o = ext1_trivial_pair_bruteforce(g);
        std::cout << "dim Ext¹(L(0), ΠL(0)) = " << d << "\n";
        std::cout << "independent oracle = " << o << "\n";
        return d == 1 && o == d ? 0 : 1;
    }
    if (q2_chars->parsed()) {
        auto kr = parse_rational(k_str);
        if (!kr) throw InputError("bad value for --k: " + k_str);
        auto data = induced_character(*kr);
        std::cout << "dim N = " << irreducible_dim({*kr, -*kr}) << "\n";
        std::cout << "induced dimension = " << data.dim << "\n";
        std::cout << "even = " << data.character.even_dim()
                  << ", odd = " << data.character.odd_dim() << "\n";
        if (data.indecomposable)
            std::cout << "indecomposable, length " << data.indecomposable_length
                      << "\n";
        else
            std::cout << "projective length = " << data.projective_length << "\n";
        return 0;
    }
    if (dot_cmd->parsed()) {
        Presentation p = parse_presentation(read_file(file));
        std::cout << to_dot(p.quiver);
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const serre::UndeterminedError& e) {
        std::cerr << "undetermined: " << e.what() << "\n";
        return 3;
    } catch (const serre::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
