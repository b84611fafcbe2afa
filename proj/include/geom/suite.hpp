#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "geom/budget.hpp"
#include "geom/chain.hpp"
#include "geom/gallery.hpp"
#include "geom/incidence.hpp"
#include "geom/io.hpp"
#include "geom/polar.hpp"
#include "geom/rank.hpp"

namespace geom {

enum class CheckStatus { pass, fail, skipped };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

struct CheckResult {
    std::string name;
    std::string title;
    CheckStatus status = CheckStatus::pass;
    std::vector<std::string> computed;
    std::vector<std::string> expected;
    /// Where the expected values come from.
    std::string oracle;
    std::vector<std::string> failures;
    double elapsed_ms = 0;
    std::string replay;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;  // sorted by name

    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const CheckResult& c) { return c.status != CheckStatus::fail; });
    }
};

struct SuiteConfig {
    std::uint64_t seed = 42;
    std::uint64_t trials = 500;
    Budget budget = Budget::from_env();
    /// Run only the check with this name.
    std::optional<std::string> only;
};

/// Collects expected-versus-computed pairs for one check.
class Recorder {
public:
    explicit Recorder(CheckResult& r) : r_(r) {}

    template <typename T, typename U>
    void eq(const std::string& label, const T& got, const U& want) {
        std::ostringstream g, w;
        g << label << "=" << got;
        w << label << "=" << want;
        r_.computed.push_back(g.str());
        r_.expected.push_back(w.str());
        if (!(got == want)) r_.failures.push_back(g.str() + " but expected " + w.str());
    }

    void truth(const std::string& label, bool ok, const std::string& detail = {}) {
        r_.computed.push_back(label + "=" + (ok ? "true" : "false"));
        r_.expected.push_back(label + "=true");
        if (!ok) r_.failures.push_back(label + " failed" + (detail.empty() ? "" : ": " + detail));
    }

    /// Extra computed information with no expectation attached.
    void note(const std::string& s) { r_.computed.push_back(s); }

private:
    CheckResult& r_;
};

inline std::string set_string(const std::vector<Point>& v) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "}";
    return os.str();
}

// ---------------------------------------------------------------------------
// Random geometries

/// Up to max_points points and max_lines random lines of 2..4 points.
inline Geometry random_geometry(std::mt19937_64& rng, std::size_t max_points = 9, std::size_t max_lines = 12) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_points)(rng);
    std::vector<std::vector<Point>> lines;
    if (n >= 2) {
        const std::size_t m = std::uniform_int_distribution<std::size_t>(0, max_lines)(rng);
        std::vector<Point> pts(n);
        for (std::size_t i = 0; i < n; ++i) pts[i] = static_cast<Point>(i);
        for (std::size_t l = 0; l < m; ++l) {
            const std::size_t k = std::uniform_int_distribution<std::size_t>(2, std::min<std::size_t>(4, n))(rng);
            std::shuffle(pts.begin(), pts.end(), rng);
            lines.emplace_back(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(k));
        }
    }
    return build_geometry(n, lines);
}

// ---------------------------------------------------------------------------
// Shared check bodies

namespace detail {

struct RankTally {
    std::size_t geometries = 0, ep_holds = 0, rank_violations = 0, equality_violations = 0, census_violations = 0;
    std::string first_violation;
};

/// rk_gen <= longest chain everywhere; with the exchange property, equality and equal maximal chains.
inline void rank_campaign(std::uint64_t seed, std::uint64_t trials, const Budget& budget, RankTally& t,
                             std::vector<Geometry>* keep = nullptr) {
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < trials; ++i) {
        Geometry g = random_geometry(rng);
        ++t.geometries;
        const std::size_t gen = generating_rank(g, budget).value;
        const std::size_t lc = longest_chain(g, budget).length;
        auto flag = [&](std::size_t& counter, const std::string& what) {
            ++counter;
            if (t.first_violation.empty())
                t.first_violation = "trial " + std::to_string(i) + ": " + what + " on " + dump(to_json(g));
        };
        if (gen > lc) flag(t.rank_violations, "rk_gen > longest chain");
        if (check_exchange_property(g, EPMode::exhaustive_mode(), budget).status == EPStatus::holds) {
            ++t.ep_holds;
            if (gen != lc) flag(t.equality_violations, "rk_gen != longest chain under EP");
            const auto census = maximal_chain_lengths(g, budget);
            if (!census.exhaustive || !census.all_equal()) flag(t.census_violations, "unequal maximal chains under EP");
        }
        if (keep) keep->push_back(std::move(g));
    }
}

struct RoundTripTally {
    std::size_t chains = 0, independent_sets = 0, failures = 0;
    std::string first_failure;
};

/// Independent sets give chains of their own length. With EP, also checks every
/// maximal chain, and the chains got by dropping one member: maximal iff the extracted points are a basis.
inline void round_trip(const Geometry& g, bool ep, const Budget& budget, RoundTripTally& t,
                       std::uint64_t chain_limit = 2000) {
    auto fail = [&](const std::string& what) {
        ++t.failures;
        if (t.first_failure.empty()) t.first_failure = what + " on " + dump(to_json(g));
    };
    std::vector<OrderedPointList> indep{generating_rank(g, budget).witness, maximum_independent_set(g, budget).witness};
    for (const auto& x : indep) {
        if (!is_independent(g, PointSet(g.n_points(), std::span<const Point>(x)))) continue;
        ++t.independent_sets;
        if (chain_from_independent(g, x).length() != x.size()) fail("chain_from_independent length != |X|");
    }
    if (!ep) return;
    for_each_maximal_chain(
        g, chain_limit,
        [&](const Chain& c) {
            ++t.chains;
            const auto ex = independent_from_chain(g, c);
            if (!(ex.independent && ex.generating)) fail("maximal chain gives a non-basis");
            if (chain_from_independent(g, ex.points) != c) fail("chain not reproduced from its extracted basis");
            for (std::size_t drop = 1; drop < c.size(); ++drop) {
                auto m = c.members();
                m.erase(m.begin() + static_cast<std::ptrdiff_t>(drop));
                const Chain shorter = make_chain_unchecked(std::move(m));
                const bool maximal = is_maximal_chain(g, shorter).maximal;
                const auto e2 = independent_from_chain(g, shorter);
                if ((e2.independent && e2.generating) != maximal) fail("maximal/basis equivalence broken");
            }
            return true;
        },
        budget);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The checks

struct CheckDef {
    std::string name;
    std::string title;
    std::string oracle;
    std::function<void(Recorder&, const SuiteConfig&)> body;
};

inline std::vector<CheckDef> acceptance_checks() {
    std::vector<CheckDef> v;

    v.push_back({"c01_example2", "fan geometry, n = 3..8: rk_gen, longest chain, EP failure, independent C",
                 "fan geometry: rk_gen = 3, rk_C = rk_WO = 1+n, EP fails, C independent of size n",
                 [](Recorder& r, const SuiteConfig& cfg) {
                     for (std::size_t n = 3; n <= 8; ++n) {
                         const Geometry g = example2(n);
                         const std::string t = "n" + std::to_string(n) + ".";
                         r.eq(t + "rk_gen", generating_rank(g, cfg.budget).value, 3u);
                         r.eq(t + "longest_chain", longest_chain(g, cfg.budget).length, n + 1);
                         Budget b = cfg.budget;
                         b.ep_exhaustive_max_points = std::max<std::size_t>(b.ep_exhaustive_max_points, g.n_points());
                         const auto ep = check_exchange_property(g, EPMode::exhaustive_mode(), b);
                         r.eq(t + "ep", to_string(ep.status), "fails");
                         r.truth(t + "witness_replays", ep.witness && replay_ep_witness(g, *ep.witness));
                         const auto w = independence_witness(g, n, cfg.budget);
                         r.truth(t + "independent_witness_size_n", w && w->size() >= n);
                         const auto C = Example2Labels{n}.C();
                         r.truth(t + "C_independent", is_independent(g, PointSet(g.n_points(), std::span<const Point>(C))));
                     }
                 }});

    v.push_back({"c02_projective", "Fano and PG(3,2): EP, rk_gen, equal maximal chain lengths",
                 "derived: projective spaces satisfy EP, rk_gen = d+1, PG(3,2) has 67 subspaces",
                 [](Recorder& r, const SuiteConfig& cfg) {
                     const Geometry f = fano();
                     r.eq("fano.ep", to_string(check_exchange_property(f, EPMode::exhaustive_mode(), cfg.budget).status),
                          "holds");
                     r.eq("fano.rk_gen", generating_rank(f, cfg.budget).value, 3u);
                     auto cf = maximal_chain_lengths(f, cfg.budget);
                     r.truth("fano.all_maximal_chains_length_3", cf.exhaustive && cf.counts.size() == 1 &&
                                                                      cf.counts.begin()->first == 3);
                     const Geometry p = projective_space(3, 2);
                     const auto ep = check_exchange_property(p, EPMode::sampled(cfg.seed, 10'000), cfg.budget);
                     r.eq("pg32.ep_sampled_10000", to_string(ep.status), "sampled_ok");
                     r.eq("pg32.rk_gen", generating_rank(p, cfg.budget).value, 4u);
                     auto cp = maximal_chain_lengths(p, cfg.budget);
                     r.eq("pg32.subspaces", cp.subspaces, 67u);
                     r.truth("pg32.all_maximal_chains_length_4",
                             cp.exhaustive && cp.counts.size() == 1 && cp.counts.begin()->first == 4);
                     r.note("pg32.maximal_chains=" + std::to_string(cp.total()));
                 }});

    v.push_back({"c03_rank_fuzz", "Rank inequalities and EP equalities on 500 random geometries",
                 "rk <= rk_WO always; under EP all bases and maximal chains have one size",
                 [](Recorder& r, const SuiteConfig& cfg) {
                     detail::RankTally t;
                     detail::rank_campaign(cfg.seed, cfg.trials, cfg.budget, t);
                     r.eq("geometries", t.geometries, cfg.trials);
                     r.note("ep_holds=" + std::to_string(t.ep_holds));
                     r.eq("rk_gen_gt_longest_chain", t.rank_violations, 0u);
                     r.eq("ep_but_rk_gen_ne_longest_chain", t.equality_violations, 0u);
                     r.eq("ep_but_unequal_maximal_chains", t.census_violations, 0u);
                     if (!t.first_violation.empty()) r.note("first_violation=" + t.first_violation);
                 }});

    v.push_back({"c04_round_trip", "Independent sets to chains and back, on the geometries of checks 1-3",
                 "an independent sequence gives a strict chain; a chain gives points whose spans rebuild it",
                 [](Recorder& r, const SuiteConfig& cfg) {
                     detail::RoundTripTally t;
                     for (std::size_t n = 3; n <= 8; ++n) detail::round_trip(example2(n), false, cfg.budget, t);
                     detail::round_trip(fano(), true, cfg.budget, t);
                     detail::round_trip(projective_space(3, 2), true, cfg.budget, t);
                     std::vector<Geometry> fuzz;
                     detail::RankTally ignore;
                     detail::rank_campaign(cfg.seed, cfg.trials, cfg.budget, ignore, &fuzz);
                     for (const auto& g : fuzz) {
                         const bool ep =
                             check_exchange_property(g, EPMode::exhaustive_mode(), cfg.budget).status == EPStatus::holds;
                         detail::round_trip(g, ep, cfg.budget, t);
                     }
                     r.note("independent_sets=" + std::to_string(t.independent_sets));
                     r.note("maximal_chains=" + std::to_string(t.chains));
                     r.truth("chains_checked", t.chains > 0);
                     r.eq("failures", t.failures, 0u);
                     if (!t.first_failure.empty()) r.note("first_failure=" + t.first_failure);
                 }});

    v.push_back({"c05_sp45", "Sp(4,5): rk_gen = 4 and a 6-point independent hyperbolic line",
                 "symplectic quadrangle: rk_gen = 2n, hyperbolic lines have 1+|F| points", [](Recorder& r, const SuiteConfig& cfg) {
                     const PolarGeometry pg = build_polar("sp", 2, 5);
                     const Geometry& g = pg.geometry;
                     r.eq("points", g.n_points(), 156u);
                     const auto gr = generating_rank(g, cfg.budget);
                     r.eq("rk_gen", gr.value, 4u);
                     r.truth("witness_generates",
                             is_generating(g, PointSet(g.n_points(), std::span<const Point>(gr.witness))));
                     Point q = 1;
                     while (g.collinear(0, q)) ++q;
                     const PointSet h = hyperbolic_line(g, 0, q);
                     r.eq("hyperbolic_line_size", h.size(), 6u);
                     r.truth("hyperbolic_line_independent", is_independent(g, h));
                     const std::size_t lower = chain_from_independent(g, h.to_vector()).length();
                     r.eq("longest_chain_lower_bound", lower, 6u);
                     r.truth("rk_wo_exceeds_rk_gen", lower > gr.value);
                 }});

    v.push_back({"c06_polar_rank", "Polar rank: Witt index equals greedy singular chain",
                 "derived: Witt index of the standard forms", [](Recorder& r, const SuiteConfig&) {
                     struct C {
                         const char* kind;
                         std::size_t n;
                         unsigned q;
                     };
                     for (C c : {C{"sp", 2, 2}, C{"sp", 2, 3}, C{"sp", 3, 2}, C{"sp", 3, 3}, C{"o-par", 2, 3},
                                 C{"o-minus", 2, 2}}) {
                         const PolarGeometry pg = build_polar(c.kind, c.n, c.q);
                         const std::string t = std::string(c.kind) + "(" + std::to_string(c.n) + "," +
                                               std::to_string(c.q) + ").";
                         r.eq(t + "witt", polar_rank(pg, PolarRankMethod::witt), c.n);
                         r.eq(t + "chain", polar_rank(pg, PolarRankMethod::chain), c.n);
                     }
                 }});

    v.push_back({"c07_corank", "Corank by chain and by perp, stable across (M,M') choices",
                 "derived: perp rank = ambient dimension - 4", [](Recorder& r, const SuiteConfig& cfg) {
                     struct C {
                         const char* kind;
                         unsigned q;
                         std::size_t want;
                     };
                     for (C c : {C{"sp", 3, 0}, C{"o-par", 3, 1}, C{"o-minus", 2, 2}}) {
                         const PolarGeometry pg = build_polar(c.kind, 2, c.q);
                         const std::string t = std::string(c.kind) + "(2," + std::to_string(c.q) + ").";
                         r.eq(t + "chain", corank(pg, CorankMethod::chain).value, c.want);
                         r.eq(t + "perp", corank(pg, CorankMethod::perp).value, c.want);
                         std::set<std::vector<Point>> pairs;
                         std::set<std::size_t> values;
                         std::uint64_t seeds = 0;
                         for (std::uint64_t s = cfg.seed; seeds < 20 && (pairs.size() < 3 || seeds < 3); ++s, ++seeds) {
                             const auto rep = corank(pg, CorankMethod::chain, s);
                             auto key = rep.M.to_vector();
                             const auto m2 = rep.M2.to_vector();
                             key.push_back(static_cast<Point>(pg.n_points()));
                             key.insert(key.end(), m2.begin(), m2.end());
                             pairs.insert(key);
                             values.insert(rep.value);
                         }
                         r.truth(t + "at_least_3_pairs", pairs.size() >= 3, std::to_string(pairs.size()) + " pairs");
                         r.eq(t + "distinct_chain_values", values.size(), 1u);
                     }
                 }});

    v.push_back({"c08_faithfulness", "Sp(4,2) versus Q(4,2): unfaithful and faithful models",
                 "derived: exhaustive rank search, perp rank, eq. claim2", [](Recorder& r, const SuiteConfig& cfg) {
                     const PolarGeometry sp = build_polar("sp", 2, 2);
                     r.eq("sp42.rk_gen", generating_rank(sp.geometry, cfg.budget).value, 5u);
                     r.eq("sp42.crk_chain", corank(sp, CorankMethod::chain).value, 1u);
                     r.eq("sp42.crk_perp", corank(sp, CorankMethod::perp).value, 0u);
                     const auto fs = check_faithful(sp);
                     r.truth("sp42.faithfulness_violation", fs.violation());
                     if (fs.violation())
                         r.note("sp42.violation=" + set_string(fs.violating_subspace->to_vector()) + " pulls back to " +
                                std::to_string(fs.violating_pullback->size()) + " points");

                     const PolarGeometry qp = build_polar("o-par", 2, 2);
                     r.eq("q42.crk_chain", corank(qp, CorankMethod::chain).value, 1u);
                     r.eq("q42.crk_perp", corank(qp, CorankMethod::perp).value, 1u);
                     r.truth("q42.no_violation", !check_faithful(qp).violation());
                     const auto mp = disjoint_maximal_singulars(qp);
                     const PointSet S = span(qp.geometry, mp.M | mp.M2);
                     const auto quot = quotient_geometry(qp, S);
                     const std::size_t lhs = generating_rank(qp.geometry, cfg.budget).value;
                     const std::size_t rhs = 2 * qp.prk_algebraic + generating_rank(quot.geometry, cfg.budget).value;
                     r.eq("q42.rk_gen", lhs, rhs);
                 }});

    v.push_back({"c09_quotient_ep", "Exchange property in the quotient by a minimal nice subspace",
                 "the quotient of a polar space by a nice subspace has the exchange property", [](Recorder& r, const SuiteConfig& cfg) {
                     for (auto [kind, q] : {std::pair<const char*, unsigned>{"o-par", 3}, {"o-minus", 2}}) {
                         const PolarGeometry pg = build_polar(kind, 2, q);
                         const auto mp = disjoint_maximal_singulars(pg);
                         const PointSet S = span(pg.geometry, mp.M | mp.M2);
                         const auto quot = quotient_geometry(pg, S);
                         const std::string t = std::string(kind) + "(2," + std::to_string(q) + ").";
                         r.note(t + "quotient_points=" + std::to_string(quot.geometry.n_points()));
                         r.eq(t + "ep",
                              to_string(check_exchange_property(quot.geometry, EPMode::exhaustive_mode(), cfg.budget).status),
                              "holds");
                     }
                 }});

    v.push_back({"c10a_e1_collinearity", "divisor geometry: gcd criterion equals line search, 0 <= m < n <= 200",
                 "divisor geometry: n, m collinear iff n, m <= gcd(n,m)^2", [](Recorder& r, const SuiteConfig&) {
                     std::size_t pairs = 0, disagreements = 0;
                     for (Nat n = 1; n <= 200; ++n)
                         for (Nat m = 0; m < n; ++m) {
                             ++pairs;
                             try {
                                 e1_collinear(m, n);
                             } catch (const std::logic_error&) {
                                 ++disagreements;
                             }
                         }
                     r.eq("pairs", pairs, 20100u);
                     r.eq("disagreements", disagreements, 0u);
                 }});

    v.push_back({"c10b_e1_pair_spans", "divisor geometry: span{m,n} = span{0,n} for collinear 0 < m < n <= 50",
                 "divisor geometry: <m,n> = <0,n>, closures truncated at 2500", [](Recorder& r, const SuiteConfig&) {
                     const E1Budget b{2500, 1'000'000};
                     std::size_t pairs = 0, mismatches = 0;
                     std::string first;
                     for (Nat n = 2; n <= 50; ++n) {
                         const auto base = e1_span({0, n}, b).elements;
                         for (Nat m = 1; m < n; ++m) {
                             if (!e1_collinear(m, n)) continue;
                             ++pairs;
                             if (e1_span({m, n}, b).elements != base) {
                                 ++mismatches;
                                 if (first.empty()) first = std::to_string(m) + "," + std::to_string(n);
                             }
                         }
                     }
                     r.note("collinear_pairs=" + std::to_string(pairs));
                     r.eq("mismatches", mismatches, 0u);
                     if (!first.empty()) r.note("first_mismatch=" + first);
                 }});

    v.push_back({"c10c_e1_prime_span", "divisor geometry: bounded check of span(X_0) = {pm : p prime, m <= p}, N = 100",
                 "divisor geometry: <X_0> is the set of numbers pm with m <= p", [](Recorder& r, const SuiteConfig&) {
                     const auto rep = e1_verify_prime_span(100);
                     std::string ce;
                     if (rep.closure_counterexample)
                         ce = "L_" + std::to_string(rep.closure_counterexample->first) + " meets T twice but misses " +
                              std::to_string(rep.closure_counterexample->second);
                     r.truth("a.line_closed", rep.line_closed, ce);
                     r.truth("b.contains_X0", rep.contains_x0);
                     r.truth("c.reached_from_X0", rep.reached);
                     r.truth("d.extensions_dependent", rep.dependence);
                     if (rep.x0_dependent_prime)
                         r.note("X0_dependent: " + std::to_string(*rep.x0_dependent_prime) +
                                " lies in the span of the other elements of X_0");
                 }});
    return v;
}

inline std::vector<CheckDef> fuzz_checks() {
    std::vector<CheckDef> v;
    v.push_back({"fuzz_ranks", "Randomized rank-inequality campaign", "rk <= rk_WO always; ranks agree under EP",
                 [](Recorder& r, const SuiteConfig& cfg) {
                     detail::RankTally t;
                     detail::rank_campaign(cfg.seed, cfg.trials, cfg.budget, t);
                     r.eq("geometries", t.geometries, cfg.trials);
                     r.note("ep_holds=" + std::to_string(t.ep_holds));
                     r.eq("violations", t.rank_violations + t.equality_violations + t.census_violations, 0u);
                     if (!t.first_violation.empty()) r.note("first_violation=" + t.first_violation);
                 }});
    v.push_back({"fuzz_round_trip", "Randomized chain round trip", "independent sets to chains and back",
                 [](Recorder& r, const SuiteConfig& cfg) {
                     std::mt19937_64 rng(cfg.seed ^ 0x5eedull);
                     detail::RoundTripTally t;
                     for (std::uint64_t i = 0; i < cfg.trials; ++i) {
                         const Geometry g = random_geometry(rng);
                         const bool ep =
                             check_exchange_property(g, EPMode::exhaustive_mode(), cfg.budget).status == EPStatus::holds;
                         detail::round_trip(g, ep, cfg.budget, t, 200);
                     }
                     r.note("maximal_chains=" + std::to_string(t.chains));
                     r.eq("failures", t.failures, 0u);
                     if (!t.first_failure.empty()) r.note("first_failure=" + t.first_failure);
                 }});
    return v;
}

inline CheckResult run_check(const CheckDef& def, const SuiteConfig& cfg, const std::string& suite) {
    CheckResult res;
    res.name = def.name;
    res.title = def.title;
    res.oracle = def.oracle;
    res.replay = "geom verify --suite " + suite + " --only " + def.name + " --seed " + std::to_string(cfg.seed);
    const auto t0 = std::chrono::steady_clock::now();
    Recorder rec(res);
    try {
        def.body(rec, cfg);
    } catch (const std::exception& e) {
        res.failures.push_back(std::string("exception: ") + e.what());
    }
    res.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    res.status = res.failures.empty() ? CheckStatus::pass : CheckStatus::fail;
    return res;
}

/// "paper" runs the fixed acceptance checks, "fuzz" the seeded random campaign.
inline SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg = {}) {
    std::vector<CheckDef> defs;
    if (name == "paper") defs = acceptance_checks();
    else if (name == "fuzz") defs = fuzz_checks();
    else throw UnsupportedParameter("unknown suite '" + name + "' (use paper or fuzz)");
    if (cfg.only && std::none_of(defs.begin(), defs.end(), [&](const CheckDef& d) { return d.name == *cfg.only; }))
        throw UnsupportedParameter("suite " + name + " has no check named '" + *cfg.only + "'");

    SuiteResult out;
    out.suite = name;
    for (const auto& d : defs) {
        if (cfg.only && d.name != *cfg.only) continue;
        out.checks.push_back(run_check(d, cfg, name));
    }
    std::sort(out.checks.begin(), out.checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return out;
}

inline json to_json(const CheckResult& c, bool timing = false) {
    json j = {{"name", c.name},         {"title", c.title},   {"status", to_string(c.status)},
              {"computed", c.computed}, {"expected", c.expected}, {"oracle", c.oracle},
              {"failures", c.failures}, {"replay", c.replay}};
    if (timing) j["elapsed_ms"] = c.elapsed_ms;
    return j;
}

/// Without timing the output is byte-identical across runs.
inline json to_json(const SuiteResult& s, bool timing = false) {
    json checks = json::array();
    for (const auto& c : s.checks) checks.push_back(to_json(c, timing));
    return {{"suite", s.suite}, {"pass", s.all_pass()}, {"checks", std::move(checks)}};
}

/// One line per check: status, name, computed values, then failures.
inline std::string format_line(const CheckResult& c) {
    std::ostringstream os;
    os << (c.status == CheckStatus::pass ? "[PASS] " : c.status == CheckStatus::fail ? "[FAIL] " : "[SKIP] ") << c.name
       << " | " << c.title << " |";
    for (const auto& v : c.computed) os << " " << v;
    os << " | " << static_cast<long long>(c.elapsed_ms) << " ms";
    for (const auto& f : c.failures) os << " | " << f;
    if (c.status == CheckStatus::fail) os << " | replay: " << c.replay;
    return os.str();
}

}  // namespace geom
