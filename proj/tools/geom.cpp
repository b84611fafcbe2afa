// geom: command-line front end for the point-line geometry library.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "geom/geom.hpp"

using namespace geom;

namespace {

struct Globals {
    bool json = false;
    std::uint64_t seed = 42;
    std::string budget;  // textual, e.g. "1e6"
    std::string geometry_file;
    std::string builtin;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::uint64_t parse_count(const std::string& s) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size() || v < 0) throw std::invalid_argument(s);
        return static_cast<std::uint64_t>(v);
    } catch (const std::logic_error&) {
        throw UnsupportedParameter("not a count: '" + s + "'");
    }
}

Budget budget_of(const Globals& g) {
    Budget b = Budget::from_env();
    if (!g.budget.empty()) b.span_calls = parse_count(g.budget);
    b.seed = g.seed;
    return b;
}

bool is_polar_kind(const std::string& k) {
    return k == "sp" || k == "o-par" || k == "o-plus" || k == "o-minus" || k == "herm";
}

/// fano, pg:d:q, example2:n, sp|o-par|o-plus|o-minus|herm:n:q
Geometry builtin_geometry(const std::string& name) {
    const auto parts = split(name, ':');
    auto num = [&](std::size_t i) -> std::size_t {
        if (i >= parts.size()) throw UnsupportedParameter("builtin '" + name + "' is missing parameters");
        return static_cast<std::size_t>(parse_count(parts[i]));
    };
    if (parts.empty()) throw UnsupportedParameter("empty builtin name");
    if (parts[0] == "fano") return fano();
    if (parts[0] == "pg") return projective_space(num(1), static_cast<unsigned>(num(2)));
    if (parts[0] == "example2") return example2(num(1));
    if (is_polar_kind(parts[0])) return build_polar(parts[0], num(1), static_cast<unsigned>(num(2))).geometry;
    throw UnsupportedParameter("unknown builtin '" + name + "'");
}

Geometry input_geometry(const Globals& g) {
    if (!g.geometry_file.empty() && !g.builtin.empty())
        throw UnsupportedParameter("give either --geometry or --builtin, not both");
    if (!g.geometry_file.empty()) return load_geometry(g.geometry_file);
    if (!g.builtin.empty()) return builtin_geometry(g.builtin);
    throw UnsupportedParameter("no geometry given (use --geometry FILE or --builtin NAME)");
}

void emit(const Globals& g, const json& j, const std::string& text) {
    if (g.json) std::cout << j.dump() << "\n";
    else std::cout << text << "\n";
}

std::string set_text(const std::vector<Point>& v) { return set_string(v); }

std::string bound_text(const RankBound& b) {
    if (b.exact) return std::to_string(b.lower);
    return "[" + std::to_string(b.lower) + ", " + std::to_string(b.upper) + "]";
}

PolarGeometry polar_input(const std::string& kind, std::size_t rank, unsigned q, const std::string& builtin) {
    if (!builtin.empty()) {
        const auto parts = split(builtin, ':');
        if (parts.size() != 3 || !is_polar_kind(parts[0]))
            throw UnsupportedParameter("polar builtin must look like kind:n:q, got '" + builtin + "'");
        return build_polar(parts[0], parse_count(parts[1]), static_cast<unsigned>(parse_count(parts[2])));
    }
    return build_polar(kind, rank, q);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite point-line geometries: spans, ranks, chains and polar spaces"};
    app.require_subcommand(1);
    Globals G;
    auto add_common = [&](CLI::App* sub, bool with_geometry) {
        sub->add_flag("--json", G.json, "Machine-readable output");
        sub->add_option("--seed", G.seed, "Random seed");
        sub->add_option("--budget", G.budget, "Budget (span calls; magnitude cap for e1 span)");
        if (with_geometry) {
            sub->add_option("--geometry", G.geometry_file, "Geometry JSON file");
            sub->add_option("--builtin", G.builtin, "fano | pg:d:q | example2:n | sp|o-par|o-plus|o-minus|herm:n:q");
        }
    };

    // span
    std::vector<Point> span_points;
    auto* span_cmd = app.add_subcommand("span", "Span of a set of points");
    add_common(span_cmd, true);
    span_cmd->add_option("points", span_points, "Point indices");

    // rank
    auto* rank_cmd = app.add_subcommand("rank", "Rank report");
    add_common(rank_cmd, true);

    // ep-check
    bool ep_sampled = false;
    std::uint64_t ep_trials = 10'000;
    auto* ep_cmd = app.add_subcommand("ep-check", "Exchange property check");
    add_common(ep_cmd, true);
    ep_cmd->add_flag("--sampled", ep_sampled, "Sampled instead of exhaustive");
    ep_cmd->add_option("--trials", ep_trials, "Sampled trials");

    // chains
    std::string chain_file;
    auto* chains_cmd = app.add_subcommand("chains", "Chains of subspaces");
    chains_cmd->require_subcommand(1);
    auto* ch_longest = chains_cmd->add_subcommand("longest", "Longest chain");
    auto* ch_extend = chains_cmd->add_subcommand("extend", "Extend a chain to a maximal one");
    auto* ch_verify = chains_cmd->add_subcommand("verify-maximal", "Check maximality of a chain");
    auto* ch_lengths = chains_cmd->add_subcommand("lengths", "Lengths of all maximal chains");
    for (auto* c : {ch_longest, ch_extend, ch_verify, ch_lengths}) add_common(c, true);
    for (auto* c : {ch_extend, ch_verify}) c->add_option("--chain", chain_file, "Chain JSON file")->required();

    // example2
    std::size_t ex2_n = 4;
    std::string emit_file;
    auto* ex2_cmd = app.add_subcommand("example2", "Build the fan geometry");
    add_common(ex2_cmd, false);
    ex2_cmd->add_option("--n", ex2_n, "Size of B and C")->required();
    ex2_cmd->add_option("--emit", emit_file, "Write the geometry JSON here");

    // e1
    auto* e1_cmd = app.add_subcommand("e1", "Divisor geometry on the natural numbers");
    e1_cmd->require_subcommand(1);
    std::vector<Nat> e1_args;
    Nat e1_N = 100;
    std::uint64_t e1_iters = 10'000;
    auto* e1_col = e1_cmd->add_subcommand("collinear", "Are two naturals collinear");
    auto* e1_span_cmd = e1_cmd->add_subcommand("span", "Budgeted span of a finite set");
    auto* e1_primes = e1_cmd->add_subcommand("verify-primes", "Bounded check of the span of 0 and the primes");
    for (auto* c : {e1_col, e1_span_cmd, e1_primes}) add_common(c, false);
    e1_col->add_option("values", e1_args, "Two naturals")->expected(2)->required();
    e1_span_cmd->add_option("values", e1_args, "Naturals")->required();
    e1_span_cmd->add_option("--iterations", e1_iters, "Iteration cap");
    e1_primes->add_option("--N", e1_N, "Bound");

    // pg
    std::size_t pg_d = 2;
    unsigned pg_q = 2;
    auto* pg_cmd = app.add_subcommand("pg", "Projective space PG(d,q)");
    add_common(pg_cmd, false);
    pg_cmd->add_option("--d", pg_d, "Dimension");
    pg_cmd->add_option("--q", pg_q, "Field size");
    pg_cmd->add_option("--emit", emit_file, "Write the geometry JSON here");

    // polar
    std::string kind = "sp", method;
    std::size_t prank = 2;
    unsigned pq = 2;
    std::uint64_t f_trials = 200;
    bool f_sampled = false;
    auto* polar_cmd = app.add_subcommand("polar", "Classical polar spaces");
    polar_cmd->require_subcommand(1);
    auto* p_build = polar_cmd->add_subcommand("build", "Build a polar space");
    auto* p_rank = polar_cmd->add_subcommand("rank", "Polar rank");
    auto* p_corank = polar_cmd->add_subcommand("corank", "Polar corank");
    auto* p_faith = polar_cmd->add_subcommand("faithful", "Faithfulness check of the natural embedding");
    for (auto* c : {p_build, p_rank, p_corank, p_faith}) {
        add_common(c, false);
        c->add_option("--kind", kind, "sp | o-par | o-plus | o-minus | herm");
        c->add_option("--rank", prank, "Rank parameter n");
        c->add_option("--q", pq, "Field size");
        c->add_option("--builtin", G.builtin, "kind:n:q");
    }
    p_build->add_option("--emit", emit_file, "Write geometry JSON here, embedding to <file>.embedding.json");
    p_rank->add_option("--method", method, "witt | chain")->default_val("witt");
    p_corank->add_option("--method", method, "chain | perp")->default_val("chain");
    p_faith->add_flag("--sampled", f_sampled, "Sample nice subspaces");
    p_faith->add_option("--trials", f_trials, "Sampled trials");

    // verify
    std::string suite = "paper", only;
    std::uint64_t trials = 500;
    bool timing = false;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    add_common(verify_cmd, false);
    verify_cmd->add_option("--suite", suite, "paper | fuzz");
    verify_cmd->add_option("--only", only, "Run one check");
    verify_cmd->add_option("--trials", trials, "Fuzz trials");
    verify_cmd->add_flag("--timing", timing, "Include timings in JSON output");

    CLI11_PARSE(app, argc, argv);

    try {
        const Budget budget = budget_of(G);

        if (*span_cmd) {
            const Geometry g = input_geometry(G);
            PointSet x(g.n_points());
            for (Point p : span_points) x.insert(p);
            const auto s = span(g, x).to_vector();
            emit(G, {{"span", s}}, set_text(s));
        } else if (*rank_cmd) {
            const Geometry g = input_geometry(G);
            const RankReport r = rank_report(g, budget);
            std::ostringstream os;
            os << "rk_gen " << bound_text(r.rk_gen) << " witness " << set_text(r.rk_gen_witness) << "\n"
               << "rk_wo " << bound_text(r.rk_wo) << "\n"
               << "rk_ind >= " << r.rk_ind_lower << (r.rk_ind_exact ? " (exact)" : "") << " witness "
               << set_text(r.rk_ind_witness) << "\n"
               << "ep " << to_string(r.ep.status);
            if (r.ep.witness)
                os << " X=" << set_text(r.ep.witness->X.to_vector()) << " x=" << r.ep.witness->x
                   << " y=" << r.ep.witness->y;
            os << "\nbasis_sizes";
            for (auto s : r.basis_sizes) os << " " << s;
            emit(G, to_json(r), os.str());
        } else if (*ep_cmd) {
            const Geometry g = input_geometry(G);
            const EPMode mode = ep_sampled ? EPMode::sampled(G.seed, ep_trials) : EPMode::exhaustive_mode();
            const EPReport r = check_exchange_property(g, mode, budget);
            std::string text = to_string(r.status);
            if (r.witness)
                text += " X=" + set_text(r.witness->X.to_vector()) + " x=" + std::to_string(r.witness->x) +
                        " y=" + std::to_string(r.witness->y);
            emit(G, to_json(r), text);
        } else if (*chains_cmd) {
            const Geometry g = input_geometry(G);
            auto chain_text = [](const Chain& c) {
                std::string t;
                for (const auto& m : c.members()) t += set_text(m.to_vector()) + " ";
                return t;
            };
            if (*ch_longest) {
                const auto lc = longest_chain(g, budget);
                json j = to_json(lc.witness);
                j["length"] = lc.length;
                emit(G, j, std::to_string(lc.length));
            } else if (*ch_extend) {
                const Chain c = chain_from_json(g, parse_json(read_file(chain_file)));
                const Chain e = extend_to_maximal(g, c);
                json j = to_json(e);
                j["length"] = e.length();
                emit(G, j, std::to_string(e.length()) + ": " + chain_text(e));
            } else if (*ch_verify) {
                const Chain c = chain_from_json(g, parse_json(read_file(chain_file)));
                const auto r = is_maximal_chain(g, c);
                json j = {{"maximal", r.maximal}, {"violation", to_string(r.violation)}};
                if (r.violation == ChainViolation::not_cover) j["index"] = r.index;
                emit(G, j, r.maximal ? "maximal" : std::string("not maximal: ") + to_string(r.violation));
                return r.maximal ? 0 : 1;
            } else {
                const auto c = maximal_chain_lengths(g, budget);
                json counts = json::object();
                std::string text;
                for (auto [len, n] : c.counts) {
                    counts[std::to_string(len)] = n;
                    text += std::to_string(len) + " x" + std::to_string(n) + "\n";
                }
                text += c.exhaustive ? "exhaustive" : "partial (lattice cap reached)";
                emit(G, {{"counts", counts}, {"exhaustive", c.exhaustive}, {"subspaces", c.subspaces}}, text);
            }
        } else if (*ex2_cmd) {
            const Geometry g = example2(ex2_n);
            const std::string text = dump(to_json(g));
            if (!emit_file.empty()) write_file(emit_file, text);
            std::cout << text << "\n";
        } else if (*e1_cmd) {
            if (*e1_col) {
                const bool c = e1_collinear(e1_args[0], e1_args[1]);
                emit(G, {{"collinear", c}, {"lines", e1_lines_through(e1_args[0], e1_args[1])}},
                     c ? "collinear" : "not collinear");
            } else if (*e1_span_cmd) {
                E1Budget b;
                if (!G.budget.empty()) b.max_magnitude = parse_count(G.budget);
                b.max_iterations = e1_iters;
                const auto s = e1_span(e1_args, b);
                std::ostringstream os;
                if (s.converged) os << "converged:";
                else os << "budget exceeded (" << s.reason << "), partial:";
                const std::size_t show = std::min<std::size_t>(s.elements.size(), 200);
                for (std::size_t i = 0; i < show; ++i) os << " " << s.elements[i];
                if (show < s.elements.size()) os << " ... (" << s.elements.size() << " elements)";
                emit(G,
                     {{"status", s.converged ? "converged" : "budget_exceeded"},
                      {"reason", s.reason},
                      {"elements", s.elements}},
                     os.str());
            } else {
                const auto r = e1_verify_prime_span(e1_N);
                json j = {{"N", r.N},
                          {"line_closed", r.line_closed},
                          {"contains_x0", r.contains_x0},
                          {"reached", r.reached},
                          {"dependence", r.dependence},
                          {"pass", r.passes()}};
                std::ostringstream os;
                os << "a line_closed " << r.line_closed;
                if (r.closure_counterexample) {
                    os << " (L_" << r.closure_counterexample->first << " misses " << r.closure_counterexample->second
                       << ")";
                    j["closure_counterexample"] = {{"line", r.closure_counterexample->first},
                                                   {"missing", r.closure_counterexample->second}};
                }
                os << "\nb contains_x0 " << r.contains_x0 << "\nc reached " << r.reached << "\nd dependence "
                   << r.dependence;
                if (r.x0_dependent_prime) {
                    os << "\nX_0 dependent: " << *r.x0_dependent_prime;
                    j["x0_dependent_prime"] = *r.x0_dependent_prime;
                }
                emit(G, j, os.str());
                return r.passes() ? 0 : 1;
            }
        } else if (*pg_cmd) {
            const Geometry g = projective_space(pg_d, pg_q);
            const std::string text = dump(to_json(g));
            if (!emit_file.empty()) write_file(emit_file, text);
            emit(G, to_json(g), G.json ? text : std::to_string(g.n_points()) + " points, " +
                                                    std::to_string(g.n_lines()) + " lines");
        } else if (*polar_cmd) {
            const PolarGeometry pg = polar_input(kind, prank, pq, G.builtin);
            if (*p_build) {
                if (!emit_file.empty()) {
                    write_file(emit_file, dump(to_json(pg.geometry)));
                    write_file(emit_file + ".embedding.json", dump(embedding_json(pg)));
                }
                emit(G,
                     {{"kind", pg.kind},
                      {"points", pg.n_points()},
                      {"lines", pg.geometry.n_lines()},
                      {"prk", pg.prk_algebraic}},
                     pg.kind + ": " + std::to_string(pg.n_points()) + " points, " +
                         std::to_string(pg.geometry.n_lines()) + " lines, prk " + std::to_string(pg.prk_algebraic));
            } else if (*p_rank) {
                if (method != "witt" && method != "chain") throw UnsupportedParameter("method must be witt or chain");
                const auto v = polar_rank(pg, method == "witt" ? PolarRankMethod::witt : PolarRankMethod::chain);
                emit(G, {{"method", method}, {"prk", v}}, std::to_string(v));
            } else if (*p_corank) {
                if (method != "chain" && method != "perp") throw UnsupportedParameter("method must be chain or perp");
                const auto seed = app.get_subcommand("polar")->get_subcommand("corank")->count("--seed")
                                      ? std::optional<std::uint64_t>(G.seed)
                                      : std::nullopt;
                const auto r = corank(pg, method == "chain" ? CorankMethod::chain : CorankMethod::perp, seed);
                json j = {{"method", method}, {"value", r.value}, {"M", to_json(r.M)}, {"M2", to_json(r.M2)}};
                if (r.chain) j["chain"] = to_json(*r.chain)["members"];
                if (r.perp_space) j["perp"] = r.perp_space->basis();
                emit(G, j, std::to_string(r.value));
            } else {
                const auto r =
                    check_faithful(pg, f_sampled ? FaithfulMode::sampled(G.seed, f_trials) : FaithfulMode::minimal());
                json j = {{"tested", r.tested}, {"violation", r.violation()}};
                std::string text = "tested " + std::to_string(r.tested) + " nice subspaces: ";
                if (r.violation()) {
                    j["subspace"] = to_json(*r.violating_subspace);
                    j["pullback"] = to_json(*r.violating_pullback);
                    text += "violation " + set_text(r.violating_subspace->to_vector()) + " pulls back to " +
                            set_text(r.violating_pullback->to_vector());
                } else {
                    text += "no violation";
                }
                emit(G, j, text);
            }
        } else if (*verify_cmd) {
            SuiteConfig cfg;
            cfg.seed = G.seed;
            cfg.trials = trials;
            cfg.budget = budget;
            if (!only.empty()) cfg.only = only;
            const SuiteResult r = run_suite(suite, cfg);
            if (G.json) {
                std::cout << to_json(r, timing).dump() << "\n";
            } else {
                for (const auto& c : r.checks) std::cout << format_line(c) << "\n";
                std::cout << (r.all_pass() ? "all checks passed" : "some checks failed") << "\n";
            }
            return r.all_pass() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        if (G.json) std::cout << error_json(e).dump() << "\n";
        else std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
