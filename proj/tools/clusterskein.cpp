// clusterskein: exact cluster-algebra and curve-algebra toolbox for punctured
// surfaces. Exit codes: 0 success, 1 verification failure, 2 input error.
#include <CLI11.hpp>

#include "cskein/explore.hpp"
#include "cskein/grading.hpp"
#include "cskein/lambda.hpp"
#include "cskein/parse.hpp"
#include "cskein/surface.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cskein;

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitInput = 2;

MutationWord parse_word(const std::string& csv, int m) {
    MutationWord w;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        int k = std::stoi(tok);
        if (k < 1 || k > m)
            throw std::invalid_argument("mutation direction " + tok + " out of range 1.." +
                                        std::to_string(m));
        w.push_back(k - 1);  // word files are 1-based
    }
    return w;
}

TaggedTriangulation load_surface(const std::string& arg) {
    for (auto& n : builtin_surface_names())
        if (n == arg) return builtin_surface(arg);
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open surface '" + arg + "'");
    return read_surface(in);
}

Seed load_seed(const std::string& seed_path, const std::string& surface_arg,
               CoeffRing ring) {
    Seed s;
    if (!seed_path.empty()) {
        std::ifstream in(seed_path);
        if (!in) throw std::invalid_argument("cannot open seed '" + seed_path + "'");
        s = read_seed(in);
    } else if (!surface_arg.empty()) {
        s = seed_of(load_surface(surface_arg));
    } else {
        throw std::invalid_argument("either --seed or --surface is required");
    }
    if (ring == CoeffRing::IntegersMod2) {
        Ctx c2 = make_ctx(s.ctx->vars, ring);
        Seed t = Seed::initial(c2, s.matrix);
        s = std::move(t);
    }
    return s;
}

CurveAtom parse_atom(const std::string& tok) {
    auto num = [](const std::string& t) { return std::stoi(t); };
    if (tok == "O") return CurveAtom::loop_contractible();
    if (tok.rfind("O(", 0) == 0)
        return CurveAtom::loop_around(num(tok.substr(2, tok.size() - 3)));
    if (tok.rfind("env(", 0) == 0) {
        std::stringstream ss(tok.substr(4, tok.size() - 5));
        std::string a, b, c;
        std::getline(ss, a, ',');
        std::getline(ss, b, ',');
        std::getline(ss, c, ',');
        return CurveAtom::envelope(num(a), num(b), num(c));
    }
    if (tok.rfind("arc:", 0) == 0) {
        std::stringstream ss(tok.substr(4));
        std::string n, p, q;
        std::getline(ss, n, ':');
        std::getline(ss, p, ':');
        std::getline(ss, q, ':');
        return CurveAtom::arc_class(n, num(p), num(q));
    }
    if (tok.rfind("loop:", 0) == 0) return CurveAtom::loop_class(tok.substr(5));
    if (tok[0] == 'e') return CurveAtom::edge_arc(num(tok.substr(1)));
    if (tok[0] == 'v') {
        auto caret = tok.find('^');
        if (caret == std::string::npos)
            return CurveAtom::vertex_class(num(tok.substr(1)), 1);
        return CurveAtom::vertex_class(num(tok.substr(1, caret - 1)),
                                       num(tok.substr(caret + 1)));
    }
    throw std::invalid_argument("unknown curve atom '" + tok + "'");
}

CurveExpr parse_curve_expr(const std::string& line) {
    std::vector<CurveTerm> terms;
    std::stringstream ss(line);
    std::string term;
    while (std::getline(ss, term, '+')) {
        std::stringstream ts(term);
        std::string tok;
        CurveTerm t;
        t.coeff = 1;
        bool coeff_seen = false;
        while (std::getline(ts, tok, '*')) {
            // trim
            size_t b = tok.find_first_not_of(" \t");
            size_t e = tok.find_last_not_of(" \t");
            if (b == std::string::npos) continue;
            tok = tok.substr(b, e - b + 1);
            if (!coeff_seen && (std::isdigit((unsigned char)tok[0]) || tok[0] == '-')) {
                t.coeff = Int(tok);
                coeff_seen = true;
                continue;
            }
            coeff_seen = true;
            t.atoms.push_back(parse_atom(tok));
        }
        terms.push_back(std::move(t));
    }
    return CurveExpr::from_terms(std::move(terms));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cluster algebras of punctured surfaces"};
    app.require_subcommand(1);

    std::string seed_path, surface_arg, word_csv, out_path, ring_name = "z";
    std::string candidate, expr_path, audit_path, mod2_path;
    int depth = 0, node_cap = kDefaultNodeCap;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--seed", seed_path, "seed file");
        c->add_option("--surface", surface_arg, "builtin surface name or triangulation file");
        c->add_option("--ring", ring_name, "coefficient ring: z or z2");
    };

    auto* cmd_matrix = app.add_subcommand("matrix", "print the exchange matrix of a triangulation");
    cmd_matrix->add_option("--surface", surface_arg)->required();

    auto* cmd_mutate = app.add_subcommand("mutate", "apply a mutation word to a seed");
    add_common(cmd_mutate);
    cmd_mutate->add_option("--word", word_csv, "comma-separated directions, 1-based")->required();

    auto* cmd_flip = app.add_subcommand("flipgraph", "breadth-first exchange graph");
    add_common(cmd_flip);
    cmd_flip->add_option("--depth", depth)->required();
    cmd_flip->add_option("--node-cap", node_cap);
    cmd_flip->add_option("--out", out_path, "write a DOT export here");

    auto* cmd_laurent = app.add_subcommand("laurent", "Laurent expansions along a word");
    add_common(cmd_laurent);
    cmd_laurent->add_option("--word", word_csv)->required();

    auto* cmd_upper = app.add_subcommand("upper", "finite-depth upper-cluster membership");
    add_common(cmd_upper);
    cmd_upper->add_option("--candidate", candidate, "rational function in the initial variables")
        ->required();
    cmd_upper->add_option("--depth", depth)->required();

    auto* cmd_rho = app.add_subcommand("verify-rho", "exchange-identity and phi-rho suite");
    cmd_rho->add_option("--surface", surface_arg)->required();
    cmd_rho->add_option("--depth", depth)->required();
    cmd_rho->add_option("--audit", audit_path, "write the fixture audit here");

    auto* cmd_grade = app.add_subcommand("grade", "multidegrees of curve expressions");
    cmd_grade->add_option("--surface", surface_arg)->required();
    cmd_grade->add_option("--expr", expr_path, "expression file, one expression per line")
        ->required();
    cmd_grade->add_option("--mod2", mod2_path, "isotopy fixture file: also print mod-2 reductions");

    CLI11_PARSE(app, argc, argv);

    try {
        CoeffRing ring = ring_name == "z2" ? CoeffRing::IntegersMod2 : CoeffRing::Integers;

        if (cmd_matrix->parsed()) {
            std::cout << exchange_matrix(load_surface(surface_arg)).to_string();
            return 0;
        }

        if (cmd_mutate->parsed()) {
            Seed s = load_seed(seed_path, surface_arg, ring);
            MutationWord w = parse_word(word_csv, s.rank());
            write_seed(std::cout, apply_word(s, w));
            return 0;
        }

        if (cmd_flip->parsed()) {
            Seed s = load_seed(seed_path, surface_arg, ring);
            ExchangeGraph g = explore(s, depth, node_cap);
            write_graph(std::cout, g);
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
                write_graph_dot(out, g);
            }
            return 0;
        }

        if (cmd_laurent->parsed()) {
            Seed s = load_seed(seed_path, surface_arg, ring);
            MutationWord w = parse_word(word_csv, s.rank());
            try {
                for (auto& p : laurent_expand(s, w)) std::cout << p.to_string() << "\n";
            } catch (const LaurentViolation& e) {
                std::cerr << "laurent violation: " << e.what() << "\n";
                return kExitVerify;
            }
            return 0;
        }

        if (cmd_upper->parsed()) {
            Seed s = load_seed(seed_path, surface_arg, ring);
            for (int i = 0; i < s.rank(); ++i)
                if (s.vars[i] != RationalFn::variable(s.ctx, i))
                    throw std::invalid_argument(
                        "upper requires an initial seed (cluster = variables)");
            RationalFn f = parse_rational(candidate, s.ctx);
            std::vector<std::pair<std::string, bool>> verdicts;
            bool all = upper_member(f, s, depth, &verdicts);
            for (auto& [key, ok] : verdicts)
                std::cout << (ok ? "laurent " : "NOT-laurent ") << "in { " << key << " }\n";
            std::cout << (all ? "true" : "false") << "\n";
            return 0;
        }

        if (cmd_rho->parsed()) {
            if (!audit_path.empty()) {
                std::ofstream audit(audit_path);
                if (!audit) throw std::invalid_argument("cannot write '" + audit_path + "'");
                write_fixture_audit(audit);
            }
            bool all = true;
            for (auto& f : identity_fixtures()) {
                std::string detail;
                bool ok = verify_identity_fixture(f, false, &detail);
                std::cout << (ok ? "pass " : "FAIL ") << f.name << " [" << f.label << "]\n";
                if (!ok) std::cerr << "  " << detail << "\n";
                all = all && ok;
            }
            for (auto& [name, ok] : run_skein_fixtures()) {
                std::cout << (ok ? "pass " : "FAIL ") << "puncture-skein " << name << "\n";
                all = all && ok;
            }
            std::string why;
            int seeds = 0;
            bool ok = phi_rho_equals_iota(surface_arg, depth, false, &why, &seeds);
            std::cout << (ok ? "pass " : "FAIL ") << "phi-rho on " << surface_arg
                      << " to depth " << depth << " (" << seeds << " seeds)\n";
            if (!ok) std::cerr << "  " << why << "\n";
            all = all && ok;
            return all ? 0 : kExitVerify;
        }

        if (cmd_grade->parsed()) {
            TaggedTriangulation T = load_surface(surface_arg);
            IsotopyFixture fixture;
            bool have_fixture = false;
            if (!mod2_path.empty()) {
                std::ifstream fin(mod2_path);
                if (!fin) throw std::invalid_argument("cannot open '" + mod2_path + "'");
                std::string line;
                while (std::getline(fin, line)) {
                    if (line.empty() || line[0] == '#') continue;
                    std::stringstream ls(line);
                    std::string kw;
                    ls >> kw;
                    if (kw == "forget") {
                        ls >> fixture.forgotten;
                    } else if (kw == "identify") {
                        std::string a, b;
                        ls >> a >> b;
                        fixture.identify.push_back({a, b});
                    } else if (kw == "resolve") {
                        std::string rest;
                        std::getline(ls, rest);
                        auto arrow = rest.find("->");
                        if (arrow == std::string::npos)
                            throw std::invalid_argument("resolve line needs '->'");
                        PsiResolution res;
                        std::stringstream ps(rest.substr(0, arrow));
                        std::string tok;
                        while (ps >> tok) res.pattern.push_back(parse_atom(tok));
                        res.replacement = parse_curve_expr(rest.substr(arrow + 2));
                        fixture.resolutions.push_back(std::move(res));
                    } else {
                        throw std::invalid_argument("unknown fixture keyword '" + kw + "'");
                    }
                }
                have_fixture = true;
            }
            std::ifstream in(expr_path);
            if (!in) throw std::invalid_argument("cannot open '" + expr_path + "'");
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty() || line[0] == '#') continue;
                CurveExpr x = parse_curve_expr(line);
                auto d = degree(x, T);
                std::cout << (d ? degree_to_string(*d) : std::string("inhomogeneous"));
                if (have_fixture)
                    std::cout << "  mod2: " << mod2_reduce(x, fixture).to_string();
                std::cout << "\n";
            }
            return 0;
        }
    } catch (const LaurentViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerify;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}
