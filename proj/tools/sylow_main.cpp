// Command-line front end: predictions, table reproduction, brute-force
// restriction, verification tiers, coverage ratios, and label/class
// listings.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 scope
// exceeded.

#include <cstdlib>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "sylow/blocks.hpp"
#include "sylow/cache.hpp"
#include "sylow/lr.hpp"
#include "sylow/oracle.hpp"
#include "sylow/predict.hpp"
#include "sylow/verify.hpp"

namespace {

using namespace sylow;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitScope = 3;

OracleMethod parse_method(const std::string& name) {
    if (name == "table") return OracleMethod::direct;
    if (name == "recursive") return OracleMethod::recursive;
    if (name == "auto") return OracleMethod::automatic;
    throw CLI::ValidationError("--oracle", "expected table, recursive or auto");
}

TableFormat parse_format(const std::string& name) {
    if (name == "markdown") return TableFormat::markdown;
    if (name == "csv") return TableFormat::csv;
    if (name == "json") return TableFormat::json;
    throw CLI::ValidationError("--format", "expected markdown, csv or json");
}

std::string partition_list(const std::vector<Partition>& set) {
    std::string out = "{";
    for (size_t i = 0; i < set.size(); ++i) {
        if (i) out += ", ";
        out += set[i].to_string();
    }
    return out + "}";
}

// Deterministic parallel map: stripes of the index space per worker,
// results assembled in input order regardless of completion order.
template <typename Fn>
void parallel_for(size_t count, unsigned width, Fn&& fn) {
    if (width <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < width; ++w)
        workers.emplace_back([&, w] {
            for (size_t i = w; i < count; i += width) fn(i);
        });
    for (std::thread& t : workers) t.join();
}

struct GlobalConfig {
    int p = 3;
    std::string cache_dir;
    unsigned jobs = 1;
    unsigned seed = Harness::kDefaultSeed;
    std::string format = "markdown";

    std::unique_ptr<ResultCache> cache;
    std::unique_ptr<RestrictionOracle> oracle;

    RestrictionOracle& get_oracle() {
        if (!oracle) {
            oracle = std::make_unique<RestrictionOracle>(p);
            std::string dir = cache_dir;
            if (dir.empty())
                if (const char* env = std::getenv("SYLOW_CACHE_DIR")) dir = env;
            if (!dir.empty()) {
                cache = std::make_unique<ResultCache>(dir + "/cache-p" +
                                                      std::to_string(p) + ".jsonl");
                oracle->attach_cache(cache.get());
            }
        }
        return *oracle;
    }
};

int cmd_predict(GlobalConfig& cfg, long long n, int k) {
    BoxPrediction pred = predicted_box(n, k, cfg.p);
    std::cout << pred.to_string() << "\n";
    return kExitOk;
}

int cmd_table(GlobalConfig& cfg, int published_table, std::vector<long long> columns,
              int k_max) {
    if (published_table == 1) {
        columns = {3, 9, 27, 81};
        if (k_max < 0) k_max = 14;
    } else if (published_table == 2) {
        columns = {30, 33, 36, 54, 108};
        if (k_max < 0) k_max = 18;
    }
    if (columns.empty())
        throw CLI::ValidationError("table", "give --published 1|2 or --columns");
    if (k_max < 0) {
        for (long long n : columns)
            k_max = std::max(k_max, max_degree_exponent(n, cfg.p));
    }
    std::cout << render_table(columns, k_max, cfg.p, parse_format(cfg.format));
    return kExitOk;
}

int cmd_restrict(GlobalConfig& cfg, const std::string& literal,
                 const std::string& method_name) {
    Partition lambda = parse_partition(literal);
    RestrictionOracle& oracle = cfg.get_oracle();
    OracleMethod method = parse_method(method_name);
    long long n = lambda.sum();
    std::vector<int> parts = n > 0 ? p_adic_exponents(n, cfg.p) : std::vector<int>{};
    if (parts.size() <= 1) {
        MultVector mv = oracle.decompose(lambda, method);
        const WreathLevel& lvl = oracle.tower().level(mv.level);
        if (cfg.format == "json") {
            json out;
            out["partition"] = lambda.to_string();
            out["p"] = cfg.p;
            out["level"] = mv.level;
            json entries = json::array();
            for (const auto& [idx, m] : mv.mult)
                entries.push_back({{"label", lvl.irr[size_t(idx)].to_string()},
                                   {"exponent", lvl.irr[size_t(idx)].degree_exponent},
                                   {"multiplicity", m.str()}});
            out["multiplicities"] = entries;
            json degs = json::array();
            for (int d : mv.exponents(lvl)) degs.push_back(d);
            out["degree_exponents"] = degs;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "restriction of " << lambda.to_string() << " to the Sylow "
                      << cfg.p << "-subgroup of degree " << n << "\n";
            for (const auto& [idx, m] : mv.mult)
                std::cout << "  " << lvl.irr[size_t(idx)].to_string() << "  deg "
                          << cfg.p << "^" << lvl.irr[size_t(idx)].degree_exponent
                          << "  x " << m << "\n";
            std::cout << "degree exponents:";
            for (int d : mv.exponents(lvl)) std::cout << " " << d;
            std::cout << "\n";
        }
    } else {
        std::set<int> degs = oracle.degree_set(lambda, method);
        if (cfg.format == "json") {
            json out;
            out["partition"] = lambda.to_string();
            out["p"] = cfg.p;
            json list = json::array();
            for (int d : degs) list.push_back(d);
            out["degree_exponents"] = list;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "degree exponents of " << lambda.to_string() << ":";
            for (int d : degs) std::cout << " " << d;
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int cmd_omega(GlobalConfig& cfg, long long n, int k, const std::string& method_name,
              bool diff) {
    RestrictionOracle& oracle = cfg.get_oracle();
    OracleMethod method = parse_method(method_name);
    std::vector<Partition> all = enumerate_partitions(int(n));
    std::vector<char> member(all.size(), 0);
    parallel_for(all.size(), cfg.jobs, [&](size_t i) {
        member[i] = oracle.degree_set(all[i], method).count(k) ? 1 : 0;
    });
    std::vector<Partition> got;
    for (size_t i = 0; i < all.size(); ++i)
        if (member[i]) got.push_back(all[i]);

    // box detection for the report
    int box_side = -1;
    for (int t = 0; t <= int(n); ++t)
        if (std::vector<Partition> box = BoxSpec{int(n), t}.members();
            box.size() == got.size() &&
            std::is_permutation(box.begin(), box.end(), got.begin())) {
            box_side = t;
            break;
        }

    if (cfg.format == "json") {
        json out;
        out["n"] = n;
        out["k"] = k;
        out["p"] = cfg.p;
        out["count"] = got.size();
        json members = json::array();
        for (const Partition& lambda : got) members.push_back(lambda.to_string());
        out["members"] = members;
        if (box_side >= 0)
            out["box_side"] = box_side;
        else
            out["box_side"] = nullptr;
        std::cout << out.dump(2) << "\n";
    } else {
        if (got.size() <= 60)
            std::cout << partition_list(got);
        else
            std::cout << got.size() << " partitions";
        if (box_side >= 0)
            std::cout << " = B_" << n << "(" << box_side << ")";
        else
            std::cout << " — NOT a box set";
        std::cout << "\n";
    }

    if (diff) {
        if (cfg.p == 2) {
            std::cout << "no prediction at p = 2\n";
            return kExitOk;
        }
        BoxPrediction pred = predicted_box(n, k, cfg.p);
        bool match = pred.empty() ? got.empty()
                                  : (box_side >= 0 && box_side == *pred.side);
        std::cout << "prediction " << pred.to_string() << ": "
                  << (match ? "match" : "MISMATCH") << "\n";
        return match ? kExitOk : kExitVerifyFailure;
    }
    return kExitOk;
}

int cmd_verify(GlobalConfig& cfg, const std::string& level) {
    VerifyTier tier;
    if (level == "smoke")
        tier = VerifyTier::smoke;
    else if (level == "standard")
        tier = VerifyTier::standard;
    else if (level == "full")
        tier = VerifyTier::full;
    else
        throw CLI::ValidationError("--level", "expected smoke, standard or full");
    Harness harness;
    bool all_pass = true;
    for (int idx : tier_criteria(tier)) {
        CheckResult r = run_criterion(idx, harness, cfg.seed);
        all_pass = all_pass && r.pass;
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.detail
                  << ")\n";
        std::cout.flush();
    }
    std::cout << (all_pass ? "PASS" : "FAIL") << "\n";
    return all_pass ? kExitOk : kExitVerifyFailure;
}

int cmd_ratio(GlobalConfig& cfg, int n) {
    Brat r = omega_ratio(n, cfg.p);
    std::cout << r.str() << " ≈ "
              << double(numerator(r).convert_to<double>() /
                        denominator(r).convert_to<double>())
              << "\n";
    return kExitOk;
}

int cmd_irr(GlobalConfig& cfg, int p, int m, bool as_json, bool with_values) {
    RestrictionOracle oracle(p);
    const WreathTower& tower = oracle.tower();
    const WreathLevel& lvl = tower.level(m);
    if (as_json) {
        json out;
        out["p"] = p;
        out["level"] = m;
        out["group_order"] = lvl.group_order.str();
        json labels = json::array();
        for (const IrrLabel& lab : lvl.irr)
            labels.push_back({{"label", lab.to_string()},
                              {"kind", lab.kind == IrrLabel::Kind::extension
                                           ? "extension"
                                           : "induced"},
                              {"degree_exponent", lab.degree_exponent}});
        out["irreducibles"] = labels;
        json classes = json::array();
        for (const ClassLabel& cls : lvl.classes)
            classes.push_back({{"class", cls.to_string()},
                               {"cycle_type", cls.cycle_type.to_string()},
                               {"size", cls.size.str()}});
        out["classes"] = classes;
        if (with_values) {
            json rows = json::array();
            for (size_t i = 0; i < lvl.irr.size(); ++i) {
                json row = json::array();
                for (size_t c = 0; c < lvl.classes.size(); ++c)
                    row.push_back(tower.value(m, int(i), int(c)).coeffs());
                rows.push_back(row);
            }
            out["values"] = rows;
        }
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "p = " << p << ", level " << m << ", order "
                  << lvl.group_order << ", " << lvl.irr.size()
                  << " irreducibles / classes\n";
        std::map<int, int> census;
        for (const IrrLabel& lab : lvl.irr) ++census[lab.degree_exponent];
        for (const auto& [k, count] : census)
            std::cout << "  degree " << p << "^" << k << ": " << count
                      << " labels\n";
    }
    return kExitOk;
}

int cmd_star(GlobalConfig& cfg, int n, int t, int n2, int t2) {
    (void)cfg;
    std::vector<Partition> got =
        star_product(BoxSpec{n, t}.members(), BoxSpec{n2, t2}.members());
    int side = -1;
    for (int s = 0; s <= n + n2; ++s)
        if (std::vector<Partition> box = BoxSpec{n + n2, s}.members();
            box.size() == got.size() &&
            std::is_permutation(box.begin(), box.end(), got.begin())) {
            side = s;
            break;
        }
    if (got.size() <= 60)
        std::cout << partition_list(got);
    else
        std::cout << got.size() << " partitions";
    if (side >= 0)
        std::cout << " = B_" << (n + n2) << "(" << side << ")";
    else
        std::cout << " — NOT a box set";
    std::cout << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact branching sets for symmetric-group characters "
                 "restricted to Sylow subgroups"};
    app.require_subcommand(1);

    GlobalConfig cfg;
    app.add_option("-p,--prime", cfg.p, "prime (default 3)");
    app.add_option("--cache-dir", cfg.cache_dir,
                   "directory for persistent result caches "
                   "(or SYLOW_CACHE_DIR)");
    app.add_option("-j,--jobs", cfg.jobs, "worker threads for sweeps");
    app.add_option("--seed", cfg.seed, "seed for sampled cross-checks");
    app.add_option("--format", cfg.format, "markdown, csv or json");

    long long arg_n = 0;
    int arg_k = 0;
    auto* predict = app.add_subcommand("predict", "predicted branching box for (n, k)");
    predict->add_option("n", arg_n)->required();
    predict->add_option("k", arg_k)->required();

    int published_table = 0;
    std::vector<long long> columns;
    int k_max = -1;
    auto* table = app.add_subcommand("table", "render a grid of predicted boxes");
    table->add_option("--published", published_table, "reproduce published table 1 or 2");
    table->add_option("--columns", columns, "column degrees");
    table->add_option("-k,--k-max", k_max, "largest exponent row");

    std::string literal;
    std::string method_name = "auto";
    auto* restrict_cmd =
        app.add_subcommand("restrict", "decompose one restriction exactly");
    restrict_cmd->add_option("partition", literal, "e.g. \"8,1\" or \"2^3,1\"")
        ->required();
    restrict_cmd->add_option("--oracle", method_name, "table, recursive or auto");

    bool diff = false;
    auto* omega = app.add_subcommand("omega", "brute-force branching set for (n, k)");
    omega->add_option("n", arg_n)->required();
    omega->add_option("k", arg_k)->required();
    omega->add_option("--oracle", method_name, "table, recursive or auto");
    omega->add_flag("--diff", diff, "compare against the predicted box");

    std::string tier = "smoke";
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--level", tier, "smoke, standard or full");

    auto* ratio = app.add_subcommand("ratio", "covered fraction of all partitions");
    int ratio_n = 0;
    ratio->add_option("n", ratio_n)->required();

    int irr_p = 3, irr_m = 1;
    bool irr_json = false, irr_values = false;
    auto* irr = app.add_subcommand("irr", "labels and classes of a wreath level");
    irr->add_option("p", irr_p)->required();
    irr->add_option("m", irr_m)->required();
    irr->add_flag("--json", irr_json, "machine-readable output");
    irr->add_flag("--values", irr_values, "include the value table (small levels)");

    int star_n = 0, star_t = 0, star_n2 = 0, star_t2 = 0;
    auto* star = app.add_subcommand("star", "outer product of two box sets");
    star->add_option("n", star_n)->required();
    star->add_option("t", star_t)->required();
    star->add_option("n2", star_n2)->required();
    star->add_option("t2", star_t2)->required();

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
        if (predict->parsed()) return cmd_predict(cfg, arg_n, arg_k);
        if (table->parsed()) return cmd_table(cfg, published_table, columns, k_max);
        if (restrict_cmd->parsed()) return cmd_restrict(cfg, literal, method_name);
        if (omega->parsed()) return cmd_omega(cfg, arg_n, arg_k, method_name, diff);
        if (verify->parsed()) return cmd_verify(cfg, tier);
        if (ratio->parsed()) return cmd_ratio(cfg, ratio_n);
        if (irr->parsed()) return cmd_irr(cfg, irr_p, irr_m, irr_json, irr_values);
        if (star->parsed()) return cmd_star(cfg, star_n, star_t, star_n2, star_t2);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    } catch (const sylow::ScopeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitScope;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFailure;
    }
}
