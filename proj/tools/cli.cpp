#include "cli.hpp"

#include "sigmakit/admissible.hpp"
#include "sigmakit/congruence.hpp"
#include "sigmakit/densities.hpp"
#include "sigmakit/near_perfect.hpp"
#include "sigmakit/report.hpp"
#include "sigmakit/segment_cache.hpp"
#include "sigmakit/within.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace sigmakit::cli {

namespace {

constexpr std::uint64_t kDefaultGuard = 100'000'000;

struct Config {
    std::uint64_t x_max = 0;
    unsigned threads = 1;
    std::string cache_dir;
    std::string format = "csv";
    bool allow_large = false;
    std::uint32_t k_cap = 16;
    std::uint64_t node_limit = 10'000'000;
    std::string pool = "proper";
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Output {
    CliResult result;
    const Config* cfg = nullptr;

    void table(const Table& t) { result.out += cfg->format == "json" ? to_json(t) : to_csv(t); }
    void warn(const std::string& msg) { result.err += "warning: " + msg + "\n"; }
    void undecided(std::uint64_t count) {
        if (count == 0) return;
        warn(std::to_string(count) + " numbers left undecided by the node limit");
        result.exit_code = std::max<int>(result.exit_code, kUndecided);
    }
};

ScanOptions scan_options(const Config& cfg) {
    if (cfg.x_max > kDefaultGuard && !cfg.allow_large)
        throw UsageError("--x-max above 1e8 needs --allow-large");
    ScanOptions options;
    options.threads = std::max(1u, cfg.threads);
    if (!cfg.cache_dir.empty()) options.cache_dir = cfg.cache_dir;
    if (cfg.allow_large) options.sieve.global_bound = std::max(options.sieve.global_bound, cfg.x_max);
    return options;
}

SearchBudget search_budget(const Config& cfg) {
    SearchBudget budget;
    budget.k_cap = cfg.k_cap;
    budget.node_limit = cfg.node_limit;
    budget.pool = cfg.pool == "all" ? ExceptionPool::AllDivisors : ExceptionPool::ProperDivisors;
    return budget;
}

/// 100000000 -> "1e8", 20000000 -> "2e7", 1234 -> "1234".
std::string short_label(std::uint64_t x) {
    if (x == 0) return "0";
    int e = 0;
    std::uint64_t m = x;
    while (m % 10 == 0) {
        m /= 10;
        ++e;
    }
    if (e < 2 || m >= 10) return std::to_string(x);
    return std::to_string(m) + "e" + std::to_string(e);
}

std::string ratio_string(std::uint64_t num, std::uint64_t den, int digits) {
    if (den == 0) return "";
    return ExactRational(static_cast<std::int64_t>(num), den).to_decimal(digits);
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        const auto v = std::stoull(item, &used);
        if (used != item.size()) throw UsageError("bad integer list: " + text);
        out.push_back(v);
    }
    return out;
}

void add_common(CLI::App* sub, Config& cfg, std::uint64_t default_x) {
    // subcommands share cfg, so each one installs its own default just before parsing
    sub->preparse_callback([&cfg, default_x](std::size_t) { cfg.x_max = default_x; });
    sub->add_option("--x-max", cfg.x_max, "upper end of the scan (default " + std::to_string(default_x) + ")");
    sub->add_option("--threads", cfg.threads, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--cache-dir", cfg.cache_dir, "directory for cached sieve segments");
    sub->add_option("--output-format", cfg.format, "csv or json")
        ->capture_default_str()
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_flag("--allow-large", cfg.allow_large, "permit --x-max above 1e8");
}

void add_search(CLI::App* sub, Config& cfg) {
    sub->add_option("--k-cap", cfg.k_cap, "largest exception count searched")->capture_default_str();
    sub->add_option("--node-limit", cfg.node_limit, "search nodes allowed per number")->capture_default_str();
    sub->add_option("--pool", cfg.pool, "exception pool: proper or all divisors")
        ->capture_default_str()
        ->check(CLI::IsMember({"proper", "all"}));
}

// -- subcommands ------------------------------------------------------------

void cmd_sieve(Output& o, const Config& cfg, std::uint64_t lo) {
    const auto options = scan_options(cfg);
    Table t;
    t.columns = {{"n"}, {"sigma"}, {"tau"}, {"omega"}, {"Omega"}, {"mu"}, {"phi"}, {"p_plus"}, {"spf"}};
    for_each_segment_ordered(
        lo, cfg.x_max, options, [](const SieveSegment& s) { return s.records; },
        [&](std::vector<ArithmeticRecord> records) {
            for (const auto& r : records)
                t.add_row({std::to_string(r.n), std::to_string(r.sigma), std::to_string(r.tau),
                           std::to_string(r.small_omega), std::to_string(r.big_omega), std::to_string(r.mu),
                           std::to_string(r.phi), std::to_string(r.p_plus), std::to_string(r.spf)});
        });
    o.table(t);
}

void cmd_within(Output& o, const Config& cfg, const std::string& ell_text, const std::string& threshold_text,
                std::uint64_t step) {
    const auto options = scan_options(cfg);
    const Ell ell = Ell::parse(ell_text);
    const ThresholdSpec threshold = ThresholdSpec::parse(threshold_text);
    if (cfg.x_max < 2) throw UsageError("--x-max must be at least 2");
    std::vector<std::uint64_t> checkpoints;
    if (step > 0)
        for (std::uint64_t x = std::max<std::uint64_t>(step, 2); x < cfg.x_max; x += step) checkpoints.push_back(x);
    checkpoints.push_back(cfg.x_max);
    const ThresholdSpec ks[] = {threshold};
    const auto grid = count_within_grid(checkpoints, ell, ks, options);
    std::vector<WithinCensus> rows;
    for (std::size_t c = 0; c < checkpoints.size(); ++c) {
        WithinCensus w;
        w.x = checkpoints[c];
        w.ell = ell;
        w.threshold = threshold;
        w.count = grid[0][c];
        rows.push_back(std::move(w));
    }
    o.table(within_table(rows));
}

void cmd_almost(Output& o, const Config& cfg, std::uint64_t ell, std::int64_t k) {
    const auto count = count_almost(cfg.x_max, ell, k, scan_options(cfg));
    Table t;
    t.columns = {{"n_max"}, {"ell"}, {"k"}, {"count"}};
    t.add_row({std::to_string(cfg.x_max), std::to_string(ell), std::to_string(k), std::to_string(count)});
    o.table(t);
}

void cmd_spikes(Output& o, const Config& cfg, std::uint64_t ell, std::int64_t k_min, std::int64_t k_max) {
    if (k_min > k_max) throw UsageError("--k-min exceeds --k-max");
    const auto spikes = spike_scan(cfg.x_max, ell, k_min, k_max, scan_options(cfg));
    const auto ranked = rank_spikes(spikes);
    std::map<std::int64_t, std::size_t> rank;
    for (std::size_t i = 0; i < ranked.size(); ++i) rank[ranked[i].k] = i + 1;
    Table t;
    t.columns = {{"k"}, {"count"}, {"rank"}};
    for (const auto& s : spikes) t.add_row({std::to_string(s.k), std::to_string(s.count), std::to_string(rank[s.k])});
    o.table(t);
}

void cmd_near(Output& o, const Config& cfg, std::uint64_t n, std::uint32_t k) {
    const auto budget = search_budget(cfg);
    std::vector<NearPerfectProfile> rows;
    std::uint64_t open = 0;
    if (n > 0) {
        rows.push_back(profile(n, budget));
        if (rows.back().min_exceptions.kind == MinExceptions::Kind::Undecided) open = 1;
    } else {
        const auto census = census_near(cfg.x_max, k, budget, scan_options(cfg), true);
        for (std::uint64_t m : census.members) rows.push_back(profile(m, budget));
        open = census.undecided;
    }
    o.table(near_table(rows));
    o.undecided(open);
}

void cmd_exact(Output& o, const Config& cfg, std::uint32_t k) {
    const auto census = census_exact(cfg.x_max, k, search_budget(cfg), scan_options(cfg));
    Table t;
    t.columns = {{"n_max"}, {"k"}, {"count"}, {"undecided"}};
    t.add_row({std::to_string(cfg.x_max), std::to_string(k), std::to_string(census.count),
               std::to_string(census.undecided)});
    o.table(t);
    o.undecided(census.undecided);
}

void cmd_intersect(Output& o, const Config& cfg, std::uint32_t k1, std::uint32_t k2) {
    const std::uint64_t cp[] = {cfg.x_max};
    const auto row = exact_intersection_grid(cp, k1, k2, search_budget(cfg), scan_options(cfg)).front();
    Table t;
    t.columns = {{"n_max"}, {"k1"}, {"k2"}, {"both"}, {"first"}, {"second"}, {"undecided"}};
    t.add_row({std::to_string(row.x), std::to_string(k1), std::to_string(k2), std::to_string(row.both),
               std::to_string(row.first), std::to_string(row.second), std::to_string(row.undecided)});
    o.table(t);
    o.undecided(row.undecided);
}

void cmd_e_eps(Output& o, const Config& cfg, std::uint32_t k, const std::string& eps_text) {
    const Fraction eps = Fraction::parse(eps_text);
    const auto r = ratio_E_eps(cfg.x_max, k, eps, search_budget(cfg), scan_options(cfg));
    Table t;
    t.columns = {{"n_max"}, {"k"}, {"eps", CellKind::Text}, {"num"}, {"den"}, {"ratio"}};
    t.add_row({std::to_string(cfg.x_max), std::to_string(k), eps.to_string(), std::to_string(r.num),
               std::to_string(r.den), ratio_string(r.num, r.den, 6)});
    o.table(t);
    o.undecided(r.undecided);
}

void cmd_distribution(Output& o, const Config& cfg, const std::vector<std::string>& u_texts) {
    std::vector<Fraction> us;
    for (const auto& s : u_texts) us.push_back(Fraction::parse(s));
    if (cfg.x_max == 0) throw UsageError("--x-max must be positive");
    o.table(distribution_table(empirical_distribution(cfg.x_max, us, scan_options(cfg))));
}

void cmd_constants(Output& o, const Config& cfg, std::uint64_t search_bound, const std::string& set_text) {
    const auto options = scan_options(cfg);
    const auto budget = search_budget(cfg);
    nlohmann::ordered_json doc;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    Table t;
    t.columns = {{"constant_name", CellKind::Text}, {"exact", CellKind::Text}, {"decimal"}};

    auto record = [&](const std::string& name, const ExactRational& exact, const std::string& decimal,
                      nlohmann::ordered_json inputs) {
        list.push_back({{"constant_name", name}, {"exact", exact.to_fraction_string()}, {"decimal", decimal},
                        {"inputs", std::move(inputs)}});
        t.add_row({name, exact.to_fraction_string(), decimal});
    };

    for (std::uint32_t k = 4; k <= 9; ++k) {
        const auto ck = constant_c_k(k, search_bound, budget, options);
        const std::string name = "c_" + std::to_string(k);
        doc[name] = ck.value.to_fraction_string();
        record(name, ck.value, ck.value.to_decimal(15), {{"k", k}, {"search_bound", search_bound}, {"m_set", ck.m_set}});
    }

    AdmissibleSet set{1, parse_u64_list(set_text)};
    const auto bound = m_lower_bound(set, budget);
    doc["M_lower"] = bound.value;
    record("M_lower", bound.phi_sum, bound.decimal,
           {{"k", set.k}, {"B", set.members}, {"value", "6/pi^2 * exact"}});

    for (std::uint64_t ell : {2, 3}) {
        const auto s = sum_inverse_perfect(cfg.x_max, ell, options);
        const std::string name = "sum_inv_perfect_" + std::to_string(ell) + "_" + short_label(cfg.x_max);
        doc[name] = s.value;
        record(name, s.exact, s.exact.to_decimal(15), {{"limit", cfg.x_max}, {"ell", ell}, {"members", s.members}});
    }
    doc["constants"] = list;

    if (cfg.format == "json") {
        o.result.out += doc.dump(2) + "\n";
    } else {
        o.table(t);
    }
}

void cmd_admissible(Output& o, const Config& cfg, std::uint32_t k, const std::string& set_text) {
    const auto budget = search_budget(cfg);
    AdmissibleSet set;
    if (set_text.empty()) {
        set = greedy_admissible(k, cfg.x_max, budget, scan_options(cfg));
    } else {
        set = {k, parse_u64_list(set_text)};
    }
    const auto bound = m_lower_bound(set, budget);
    Table t;
    t.columns = {{"k"}, {"members", CellKind::Text}, {"phi_sum", CellKind::Text}, {"M_lower"}};
    t.add_row({std::to_string(set.k), join_semicolon(set.members), bound.phi_sum.to_fraction_string(), bound.decimal});
    o.table(t);
}

void cmd_table1(Output& o, const Config& cfg) {
    static constexpr std::uint64_t kColumns[] = {1'000'000, 10'000'000, 20'000'000};
    std::vector<std::uint64_t> checkpoints;
    for (std::uint64_t x : kColumns)
        if (x <= cfg.x_max) checkpoints.push_back(x);
    if (checkpoints.size() < std::size(kColumns))
        o.warn("partial grid: " + std::to_string(checkpoints.size()) + " of 3 columns complete (needs --x-max >= 2e7)");

    std::vector<ThresholdSpec> thresholds;
    for (int tenth = 9; tenth >= 2; --tenth) thresholds.push_back(ThresholdSpec::power(Fraction::make(tenth, 10)));

    Table t;
    t.columns = {{"threshold", CellKind::Text}};
    for (std::uint64_t x : checkpoints) t.columns.push_back({"x_" + std::to_string(x)});
    std::vector<std::vector<std::uint64_t>> grid(thresholds.size());
    if (!checkpoints.empty()) grid = count_within_grid(checkpoints, Ell{}, thresholds, scan_options(cfg));
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
        std::vector<std::string> row{thresholds[i].to_string()};
        for (std::size_t c = 0; c < checkpoints.size(); ++c)
            row.push_back(format_fixed(normalized_count(grid[i][c], checkpoints[c]), 6));
        t.add_row(std::move(row));
    }
    o.table(t);
}

void cmd_table2(Output& o, const Config& cfg) {
    std::vector<std::uint64_t> checkpoints;
    for (std::uint64_t x = 100; x <= std::min<std::uint64_t>(cfg.x_max, 1'000'000); x *= 10) checkpoints.push_back(x);
    if (checkpoints.size() < 5) o.warn("partial table: rows stop at --x-max");
    Table t;
    t.columns = {{"x"}, {"E12"}, {"E1"}, {"E2"}, {"E12_over_E1"}, {"E12_over_E2"}};
    std::uint64_t open = 0;
    if (!checkpoints.empty()) {
        for (const auto& r : exact_intersection_grid(checkpoints, 1, 2, search_budget(cfg), scan_options(cfg))) {
            t.add_row({std::to_string(r.x), std::to_string(r.both), std::to_string(r.first), std::to_string(r.second),
                       ratio_string(r.both, r.first, 3), ratio_string(r.both, r.second, 3)});
            open = r.undecided;
        }
    }
    o.table(t);
    o.undecided(open);
}

void cmd_lemma_check(Output& o, const Config& cfg, const std::string& ks_text) {
    const auto budget = search_budget(cfg);
    const auto options = scan_options(cfg);
    Table t;
    t.columns = {{"k"}, {"n"}, {"p"}, {"m"}, {"lhs"}, {"rhs"}, {"undecided"}};
    std::uint64_t open = 0;
    for (std::uint64_t k : parse_u64_list(ks_text)) {
        for (const auto& v : verify_counting_lemma(cfg.x_max, static_cast<std::uint32_t>(k), budget, options)) {
            t.add_row({std::to_string(k), std::to_string(v.n), std::to_string(v.p), std::to_string(v.m),
                       v.lhs ? "1" : "0", v.rhs ? "1" : "0", v.undecided ? "1" : "0"});
            if (v.undecided) ++open;
        }
    }
    o.table(t);
    if (t.rows.size() > open) {
        o.result.err += "counting lemma: " + std::to_string(t.rows.size() - open) + " disagreements\n";
        o.result.exit_code = kError;
    }
    o.undecided(open);
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"sigmakit: sum-of-divisors censuses and constants"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");
    Config cfg;
    std::function<void(Output&)> action;

    std::string ell_text = "2";
    std::string threshold_text = "ylogy";
    std::string eps_text = "1/2";
    std::string set_text;
    std::string ks_text = "0,1,2,3,4,5,6,7,8,9";
    std::vector<std::string> u_texts{"2"};
    std::uint64_t lo = 1, step = 0, n = 0, ell_int = 2, search_bound = 1'000'000;
    std::int64_t k_signed = 0, k_min = -100, k_max = 100;
    std::uint32_t k = 1, k1 = 1, k2 = 2;

    auto* sieve = app.add_subcommand("sieve", "arithmetic functions for each n in [lo, x-max]");
    add_common(sieve, cfg, 100);
    sieve->add_option("--lo", lo, "first n")->capture_default_str()->check(CLI::PositiveNumber);
    sieve->callback([&] { action = [&](Output& o) { cmd_sieve(o, cfg, lo); }; });

    auto* within = app.add_subcommand("within", "count (ell; k)-within-perfect numbers");
    add_common(within, cfg, 1'000'000);
    within->add_option("--ell", ell_text, "target ratio a/b")->capture_default_str();
    within->add_option("--threshold", threshold_text, "const:c, power:eps, linear:c or ylogy")->capture_default_str();
    within->add_option("--step", step, "also report every multiple of step (ratio curves)");
    within->callback([&] { action = [&](Output& o) { cmd_within(o, cfg, ell_text, threshold_text, step); }; });

    auto* almost = app.add_subcommand("almost", "count n with sigma(n) = ell*n + k");
    add_common(almost, cfg, 1'000'000);
    almost->add_option("--ell", ell_int, "integer ratio")->capture_default_str();
    almost->add_option("--k", k_signed, "offset")->capture_default_str();
    almost->callback([&] { action = [&](Output& o) { cmd_almost(o, cfg, ell_int, k_signed); }; });

    auto* spikes = app.add_subcommand("spikes", "almost-perfect counts over a range of k");
    add_common(spikes, cfg, 1'000'000);
    spikes->add_option("--ell", ell_int, "integer ratio")->capture_default_str();
    spikes->add_option("--k-min", k_min)->capture_default_str();
    spikes->add_option("--k-max", k_max)->capture_default_str();
    spikes->callback([&] { action = [&](Output& o) { cmd_spikes(o, cfg, ell_int, k_min, k_max); }; });

    auto* near = app.add_subcommand("near", "near-perfect profile of n, or every k-near-perfect n <= x-max");
    add_common(near, cfg, 1'000);
    add_search(near, cfg);
    near->add_option("--n", n, "profile a single number");
    near->add_option("--k", k, "exception budget for the census")->capture_default_str();
    near->callback([&] { action = [&](Output& o) { cmd_near(o, cfg, n, k); }; });

    auto* exact = app.add_subcommand("exact", "count n <= x-max with exactly k exceptions");
    add_common(exact, cfg, 1'000'000);
    add_search(exact, cfg);
    exact->add_option("--k", k)->capture_default_str();
    exact->callback([&] { action = [&](Output& o) { cmd_exact(o, cfg, k); }; });

    auto* intersect = app.add_subcommand("intersect", "count n <= x-max in both E(k1) and E(k2)");
    add_common(intersect, cfg, 1'000'000);
    add_search(intersect, cfg);
    intersect->add_option("--k1", k1)->capture_default_str();
    intersect->add_option("--k2", k2)->capture_default_str();
    intersect->callback([&] { action = [&](Output& o) { cmd_intersect(o, cfg, k1, k2); }; });

    auto* e_eps = app.add_subcommand("e-eps", "share of E(k) with sigma(n) - 2n >= n^eps");
    add_common(e_eps, cfg, 1'000'000);
    add_search(e_eps, cfg);
    e_eps->add_option("--k", k)->capture_default_str();
    e_eps->add_option("--eps", eps_text, "exponent p/q in (0, 1)")->capture_default_str();
    e_eps->callback([&] { action = [&](Output& o) { cmd_e_eps(o, cfg, k, eps_text); }; });

    auto* distribution = app.add_subcommand("distribution", "empirical distribution of sigma(n)/n");
    add_common(distribution, cfg, 1'000'000);
    distribution->add_option("--u", u_texts, "sample points (repeatable)")->capture_default_str();
    distribution->callback([&] { action = [&](Output& o) { cmd_distribution(o, cfg, u_texts); }; });

    auto* constants = app.add_subcommand("constants", "exact constants c_4..c_9, M lower bound, reciprocal sums");
    add_common(constants, cfg, 100'000'000);
    add_search(constants, cfg);
    constants->add_option("--search-bound", search_bound, "bound for the c_k searches")->capture_default_str();
    set_text = "6,12,18,24,224";
    constants->add_option("--set", set_text, "admissible set for the M bound")->capture_default_str();
    constants->callback([&] { action = [&](Output& o) { cmd_constants(o, cfg, search_bound, set_text); }; });

    auto* admissible = app.add_subcommand("admissible", "greedy admissible set, or validate --set");
    add_common(admissible, cfg, 234);
    add_search(admissible, cfg);
    admissible->add_option("--k", k)->capture_default_str();
    admissible->add_option("--set", set_text, "comma-separated members to validate");
    admissible->callback([&] {
        if (admissible->count("--set") == 0) set_text.clear();
        action = [&](Output& o) { cmd_admissible(o, cfg, k, set_text); };
    });

    auto* table1 = app.add_subcommand("table1", "normalized within-perfect counts for k(y) = y^0.9 .. y^0.2");
    add_common(table1, cfg, 20'000'000);
    table1->callback([&] { action = [&](Output& o) { cmd_table1(o, cfg); }; });

    auto* table2 = app.add_subcommand("table2", "E_1, E_2 and their intersection at 10^2 .. 10^6");
    add_common(table2, cfg, 1'000'000);
    add_search(table2, cfg);
    table2->callback([&] { action = [&](Output& o) { cmd_table2(o, cfg); }; });

    auto* lemma = app.add_subcommand("lemma-check", "check the n = p*m counting lemma up to x-max");
    add_common(lemma, cfg, 10'000);
    add_search(lemma, cfg);
    lemma->add_option("--k", ks_text, "comma-separated k values")->capture_default_str();
    lemma->callback([&] { action = [&](Output& o) { cmd_lemma_check(o, cfg, ks_text); }; });

    Output o;
    o.cfg = &cfg;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        for (const auto* sub : app.get_subcommands()) target = sub;
        o.result.out = target->help();
        return o.result;
    } catch (const CLI::CallForAllHelp&) {
        o.result.out = app.help("", CLI::AppFormatMode::All);
        return o.result;
    } catch (const CLI::ParseError& e) {
        o.result.err = e.what() + std::string("\n");
        o.result.exit_code = kError;
        return o.result;
    }

    try {
        action(o);
    } catch (const BudgetExceeded& e) {
        o.result.err += std::string("budget exceeded: ") + e.what() + "\n";
        o.result.exit_code = kBudgetExceeded;
    } catch (const RangeTooLarge& e) {
        o.result.err += std::string("budget exceeded: ") + e.what() + "\n";
        o.result.exit_code = kBudgetExceeded;
    } catch (const std::exception& e) {
        o.result.err += std::string("error: ") + e.what() + "\n";
        o.result.exit_code = kError;
    }
    return o.result;
}

}  // namespace sigmakit::cli
