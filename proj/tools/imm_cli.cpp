#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "imm/cache.hpp"
#include "imm/dot.hpp"
#include "imm/errors.hpp"
#include "imm/injections.hpp"
#include "imm/partition.hpp"
#include "imm/poset.hpp"
#include "imm/symfunc.hpp"
#include "imm/tableau.hpp"
#include "imm/verify.hpp"

using nlohmann::json;
using namespace imm;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

json partition_json(const Partition& p) {
    json a = json::array();
    for (int x : p.parts()) a.push_back(x);
    return a;
}

json tableau_json(const Tableau& t) {
    json a = json::array();
    for (const auto& row : t.rows) a.push_back(row);
    return a;
}

Tableau parse_tableau(const Partition& shape, const std::string& rows_json) {
    json j = json::parse(rows_json);
    Tableau t;
    t.shape = shape;
    for (const json& row : j) t.rows.push_back(row.get<std::vector<int>>());
    if (!t.rows_match_shape())
        throw std::invalid_argument("tableau rows do not match shape " + shape.str());
    return t;
}

json expansion_json(const SchurExpansion& e) {
    json terms = json::array();
    for (const auto& [lam, c] : e.coeffs)
        terms.push_back(json{{"shape", partition_json(lam)}, {"coeff", c.get_str()}});
    return json{{"n", e.n}, {"terms", std::move(terms)}};
}

json relation_json(const PosetRelation& r) {
    json nodes = json::array();
    for (const Partition& p : r.universe.items()) nodes.push_back(partition_json(p));
    PosetRelation c = covers(r);
    json edges = json::array();
    int m = r.universe.size();
    for (int i = 0; i < m; i++)
        for (int j = 0; j < m; j++)
            if (i != j && c.leq[i][j]) edges.push_back(json::array({i, j}));
    return json{{"order", poset_kind_name(r.kind)},
                {"n", r.universe.n()},
                {"nodes", std::move(nodes)},
                {"cover_edges", std::move(edges)}};
}

void print_subposet(const SubposetReport& sub, const std::string& format) {
    if (format == "dot") {
        std::cout << "digraph poset {\n  rankdir=BT;\n";
        for (size_t i = 0; i < sub.members.size(); i++)
            std::cout << "  n" << i << " [label=\"" << sub.members[i].str() << "\"];\n";
        for (auto [lo, hi] : sub.cover_pairs)
            std::cout << "  n" << lo << " -> n" << hi << ";\n";
        std::cout << "}\n";
    } else {
        json nodes = json::array();
        for (const Partition& p : sub.members) nodes.push_back(partition_json(p));
        json edges = json::array();
        for (auto [lo, hi] : sub.cover_pairs) edges.push_back(json::array({lo, hi}));
        std::cout << json{{"nodes", nodes}, {"cover_edges", edges},
                          {"violations", sub.violations}}
                         .dump(2)
                  << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"immersion poset toolkit"};
    app.require_subcommand(1);

    std::string cache_dir;
    app.add_option("--cache-dir", cache_dir, "cache directory (default: $IMMERSION_CACHE_DIR)");

    // poset
    auto* cmd_poset = app.add_subcommand("poset", "emit a poset as DOT or JSON");
    int poset_n = 0;
    std::string poset_order = "immersion", poset_restrict, poset_format = "dot";
    cmd_poset->add_option("--n", poset_n)->required();
    cmd_poset->add_option("--order", poset_order)->check(CLI::IsMember({"immersion", "standard", "dominance"}));
    cmd_poset->add_option("--restrict", poset_restrict)->check(CLI::IsMember({"hooks", "two-column"}));
    cmd_poset->add_option("--format", poset_format)->check(CLI::IsMember({"dot", "json"}));

    // maximal
    auto* cmd_maximal = app.add_subcommand("maximal", "list maximal elements");
    int maximal_n = 0;
    std::string maximal_order = "standard";
    cmd_maximal->add_option("--n", maximal_n)->required();
    cmd_maximal->add_option("--order", maximal_order)
        ->check(CLI::IsMember({"immersion", "standard", "dominance"}));

    // interval
    auto* cmd_interval = app.add_subcommand("interval", "lower interval [(1^n), top]");
    int interval_n = 0;
    std::string interval_top;
    cmd_interval->add_option("--n", interval_n)->required();
    cmd_interval->add_option("--top", interval_top)->required();

    // rank
    auto* cmd_rank = app.add_subcommand("rank", "longest chain length (in edges)");
    int rank_n = 0;
    std::string rank_order = "immersion";
    cmd_rank->add_option("--n", rank_n)->required();
    cmd_rank->add_option("--order", rank_order)
        ->check(CLI::IsMember({"immersion", "standard", "dominance"}));

    // inject
    auto* cmd_inject = app.add_subcommand("inject", "apply an SSYT injection");
    std::string inject_map, inject_shape, inject_tableau;
    int inject_column = 0;
    cmd_inject->add_option("--map", inject_map)
        ->required()
        ->check(CLI::IsMember({"phi0", "phi1", "phi2", "psi0", "psi1"}));
    cmd_inject->add_option("--shape", inject_shape, "domain shape, e.g. [2^2,1^3]")->required();
    cmd_inject->add_option("--tableau", inject_tableau, "JSON rows, e.g. [[1,6],[2,7],[3],[4],[5]]")
        ->required();
    cmd_inject->add_option("--column", inject_column,
                           "column value c (default: the unique eligible one)");

    // char
    auto* cmd_char = app.add_subcommand("char", "character value chi^shape(type)");
    std::string char_shape, char_type;
    cmd_char->add_option("--shape", char_shape)->required();
    cmd_char->add_option("--type", char_type)->required();

    // powersum
    auto* cmd_powersum = app.add_subcommand("powersum", "Schur expansion of p_type");
    std::string powersum_type, powersum_format = "json";
    cmd_powersum->add_option("--type", powersum_type)->required();
    cmd_powersum->add_option("--format", powersum_format)->check(CLI::IsMember({"json"}));

    // interval-powersum
    auto* cmd_ips = app.add_subcommand("interval-powersum",
                                       "Schur expansion of the lower-interval power sum");
    int ips_n = 0;
    std::string ips_top;
    cmd_ips->add_option("--n", ips_n)->required();
    cmd_ips->add_option("--top", ips_top)->required();

    // stats
    auto* cmd_stats = app.add_subcommand("stats", "statistics");
    auto* cmd_frac = cmd_stats->add_subcommand("schur-positive-fraction",
                                               "fraction of Schur-positive lower intervals");
    int frac_n = 0;
    cmd_frac->add_option("--n", frac_n)->required();
    auto* cmd_prob = cmd_stats->add_subcommand("comparability",
                                               "P(lam <=_I mu | lam <_D mu), sampled");
    int prob_n = 0;
    long prob_samples = 100000;
    unsigned long prob_seed = 1;
    cmd_prob->add_option("--n", prob_n)->required();
    cmd_prob->add_option("--samples", prob_samples);
    cmd_prob->add_option("--seed", prob_seed);

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    std::string verify_suite;
    int verify_max_n = 12;
    std::string verify_range;
    cmd_verify->add_option("suite", verify_suite)
        ->required()
        ->check(CLI::IsMember({"tables", "injections", "maximality", "hooks", "two-column",
                               "intervals", "statistics", "all"}));
    cmd_verify->add_option("--max-n", verify_max_n);
    cmd_verify->add_option("--n", verify_range, "range A..B (intervals suite only)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        TableCache cache(resolve_cache_dir(cache_dir));

        if (*cmd_poset) {
            PosetKind kind = parse_poset_kind(poset_order);
            if (!poset_restrict.empty()) {
                KostkaTable kt = cache.kostka(poset_n);
                SubposetReport sub = poset_restrict == "hooks" ? hook_subposet(poset_n, kt)
                                                               : two_column_subposet(poset_n, kt);
                print_subposet(sub, poset_format);
                return sub.ok() ? kExitOk : kExitVerifyFail;
            }
            PosetRelation r = kind == PosetKind::immersion
                                  ? build_poset(cache.kostka(poset_n), kind)
                                  : build_poset(poset_n, kind);
            if (poset_format == "dot")
                std::cout << dot_string(covers(r));
            else
                std::cout << relation_json(r).dump(2) << "\n";
        } else if (*cmd_maximal) {
            PosetKind kind = parse_poset_kind(maximal_order);
            PosetRelation r = kind == PosetKind::immersion
                                  ? build_poset(cache.kostka(maximal_n), kind)
                                  : build_poset(maximal_n, kind);
            json out = json::array();
            for (const Partition& p : maximal_elements(r)) out.push_back(partition_json(p));
            std::cout << out.dump(2) << "\n";
        } else if (*cmd_interval) {
            PosetRelation r = build_poset(cache.kostka(interval_n), PosetKind::immersion);
            Interval iv = lower_interval(r, parse_partition(interval_top));
            json out = json::array();
            for (const Partition& p : iv.members) out.push_back(partition_json(p));
            std::cout << json{{"top", partition_json(iv.top)}, {"members", out}}.dump(2) << "\n";
        } else if (*cmd_rank) {
            PosetKind kind = parse_poset_kind(rank_order);
            PosetRelation r = kind == PosetKind::immersion
                                  ? build_poset(cache.kostka(rank_n), kind)
                                  : build_poset(rank_n, kind);
            std::cout << rank(r) << "\n";
        } else if (*cmd_inject) {
            Partition shape = parse_partition(inject_shape);
            // --shape is always the domain shape lambda; for the inverse maps
            // the tableau itself must have the target shape mu.
            bool inverse = inject_map[1] == 's';
            TwoColumnContext ctx;
            if (inject_column > 0) {
                ctx = make_two_column_context(shape, inject_column);
            } else {
                auto ctxs = all_two_column_contexts(shape);
                if (ctxs.size() != 1)
                    throw std::invalid_argument(
                        "shape has " + std::to_string(ctxs.size()) +
                        " eligible columns; disambiguate with --column");
                ctx = ctxs[0];
            }
            Tableau t = parse_tableau(inverse ? ctx.mu : ctx.lambda, inject_tableau);
            Tableau out = inject_map == "phi0"   ? phi0(ctx, t)
                          : inject_map == "phi1" ? phi1(ctx, t)
                          : inject_map == "phi2" ? phi2(ctx, t)
                          : inject_map == "psi0" ? psi0(ctx, t)
                                                 : psi1(ctx, t);
            std::cout << json{{"shape", partition_json(out.shape)}, {"rows", tableau_json(out)}}
                             .dump(2)
                      << "\n";
        } else if (*cmd_char) {
            std::cout << character(parse_partition(char_shape), parse_partition(char_type)).get_str()
                      << "\n";
        } else if (*cmd_powersum) {
            std::cout << expansion_json(power_sum_in_schur(parse_partition(powersum_type))).dump(2)
                      << "\n";
        } else if (*cmd_ips) {
            PosetRelation r = build_poset(cache.kostka(ips_n), PosetKind::immersion);
            Interval iv = lower_interval(r, parse_partition(ips_top));
            SchurExpansion e = interval_power_sum(iv.members, cache.characters(ips_n));
            auto [pos, witness] = is_schur_positive(e);
            json out = expansion_json(e);
            out["schur_positive"] = pos;
            if (witness) out["negative_witness"] = partition_json(*witness);
            std::cout << out.dump(2) << "\n";
        } else if (*cmd_stats) {
            if (*cmd_frac) {
                PosetRelation r = build_poset(cache.kostka(frac_n), PosetKind::immersion);
                mpq_class q = schur_positive_interval_fraction(frac_n, r, cache.characters(frac_n));
                double d = q.get_d();
                char buf[32];
                snprintf(buf, sizeof buf, "%.4f", d);
                std::cout << json{{"n", frac_n}, {"fraction", q.get_str()}, {"decimal", buf}}.dump(2)
                          << "\n";
            } else if (*cmd_prob) {
                mpq_class q =
                    estimate_comparability_probability(cache.kostka(prob_n), prob_samples, prob_seed);
                char buf[32];
                snprintf(buf, sizeof buf, "%.4f", q.get_d());
                std::cout << json{{"n", prob_n},
                                  {"samples", prob_samples},
                                  {"seed", prob_seed},
                                  {"estimate", q.get_str()},
                                  {"decimal", buf}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cerr << "stats requires a subcommand\n";
                return kExitUsage;
            }
        } else if (*cmd_verify) {
            VerificationReport rep;
            if (verify_suite == "intervals" && !verify_range.empty()) {
                size_t dots = verify_range.find("..");
                if (dots == std::string::npos)
                    throw std::invalid_argument("range must look like 9..14");
                int lo = std::stoi(verify_range.substr(0, dots));
                int hi = std::stoi(verify_range.substr(dots + 2));
                rep = verify_intervals(lo, hi);
            } else {
                rep = run_verify(verify_suite, verify_max_n, cache);
            }
            std::cout << rep.to_json() << "\n";
            return rep.passed() ? kExitOk : kExitVerifyFail;
        }
        return kExitOk;
    } catch (const resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const cache_error& e) {
        std::cerr << "cache error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
}
