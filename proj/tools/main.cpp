// Command-line front end: every verb prints an aligned text table by default
// and a JSON document with --json. Exit codes: 0 success, 1 precondition
// violation (one-line reason on stderr), 2 usage error.

#include <CLI11.hpp>
#include <cohp1/cohp1.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace cohp1;

void print_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
        }
        std::cout << line << "\n";
    }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::int64_t default_prime() {
    if (const char* env = std::getenv("COHP1_ORACLE_PRIME")) {
        try {
            std::size_t pos = 0;
            const long long v = std::stoll(env, &pos);
            if (pos != std::string(env).size()) throw std::invalid_argument("trailing characters");
            return v;
        } catch (const std::exception&) {
            throw std::domain_error(std::string("COHP1_ORACLE_PRIME is not an integer: ") + env);
        }
    }
    return 101;
}

struct TypeArgs {
    long long n = 0, d = 0, k = 0;
    SystemType sys() const { return SystemType{n, d, k}; }
};

void add_type_args(CLI::App* cmd, TypeArgs& args) {
    cmd->add_option("n", args.n, "rank")->required();
    cmd->add_option("d", args.d, "degree")->required();
    cmd->add_option("k", args.k, "number of sections")->required();
}

int run_dim(const TypeArgs& t, bool json) {
    const Int b = beta(t.sys());
    if (json) {
        emit(Json{{"type", json_of(t.sys())}, {"beta", json_int(b)}});
    } else {
        std::cout << "beta" << t.sys().str() << " = " << b << "\n";
    }
    return 0;
}

int run_decompose(const TypeArgs& t, bool json) {
    const Coordinates c = decompose(t.sys());
    if (json) {
        emit(Json{{"type", json_of(t.sys())}, {"coordinates", json_of(c)}});
    } else {
        print_table({{"a", "t", "l", "m"}, {c.a.str(), c.t.str(), c.l.str(), c.m.str()}});
    }
    return 0;
}

int run_range(const TypeArgs& t, bool json) {
    const AlphaRange r = necessary_range(t.sys());
    const Rational alt = necessary_upper_alt(t.sys());
    if (json) {
        emit(Json{{"type", json_of(t.sys())},
                  {"necessary", json_of(r)},
                  {"upper_alt", alt.str()}});
    } else {
        print_table({{"lower", "upper", "upper-alt"},
                     {r.lower.str(), r.upper ? r.upper->str() : "inf", alt.str()}});
    }
    return 0;
}

int run_classify(const TypeArgs& t, bool json) {
    const ExistenceVerdict v = classify(t.sys());
    if (json) {
        Json j{{"type", json_of(t.sys())}};
        j.update(json_of(v));
        emit(j);
        return 0;
    }
    std::cout << to_string(v.status);
    if (v.range) std::cout << " " << v.range->str();
    std::cout << "\n";
    std::cout << "necessary " << v.necessary.str() << "\n";
    for (const EvidenceItem& e : v.evidence) {
        std::cout << "evidence: " << e.label;
        if (e.alpha) std::cout << " alpha=" << e.alpha->str();
        if (e.outcome) std::cout << " outcome=" << to_string(*e.outcome);
        std::cout << "\n";
    }
    return 0;
}

int run_walls(const TypeArgs& t, bool json) {
    const auto walls = enumerate_walls(t.sys());
    if (json) {
        Json j{{"type", json_of(t.sys())}, {"walls", Json::array()}};
        for (const auto& w : walls) j["walls"].push_back(json_of(w));
        emit(j);
        return 0;
    }
    if (walls.empty()) {
        std::cout << "no allowable walls\n";
        return 0;
    }
    std::vector<std::vector<std::string>> rows{
        {"n1", "d1", "k1", "n2", "d2", "k2", "alpha_c", "e", "f", "c12", "c21"}};
    for (const auto& w : walls) {
        const FlipNumbers fn = flip_numbers(w);
        rows.push_back({w.n1.str(), w.d1.str(), w.k1.str(), w.n2.str(), w.d2.str(), w.k2.str(),
                        w.alpha_c->str(), w.e.str(), w.f ? w.f->str() : "-", fn.c12.str(),
                        fn.c21.str()});
    }
    print_table(rows);
    return 0;
}

int run_flips(const TypeArgs& t, const std::string& at, bool json) {
    std::vector<std::pair<Rational, FlipOutcome>> rows;
    if (!at.empty()) {
        const Rational alpha = parse_rational(at);
        rows.emplace_back(alpha, flip_outcome(t.sys(), alpha));
    } else {
        rows = outcomes_by_alpha(t.sys());
    }
    if (json) {
        Json j{{"type", json_of(t.sys())}, {"flips", Json::array()}};
        for (const auto& [alpha, outcome] : rows)
            j["flips"].push_back(Json{{"alpha", alpha.str()}, {"outcome", to_string(outcome)}});
        emit(j);
        return 0;
    }
    if (rows.empty()) {
        std::cout << "no critical values\n";
        return 0;
    }
    std::vector<std::vector<std::string>> table{{"alpha", "outcome"}};
    for (const auto& [alpha, outcome] : rows) table.push_back({alpha.str(), to_string(outcome)});
    print_table(table);
    return 0;
}

struct SearchArgs {
    long long k = 0, n_min = 0, n_max = 0;
    long long d_max = -1, l_max = -1;  // -1: unset
    bool nonpositive = false, report = false;

    SearchWindow window() const {
        SearchWindow w{k, n_min, n_max, std::nullopt, std::nullopt};
        if (d_max >= 0) w.d_max = d_max;
        if (l_max >= 0) w.l_max = l_max;
        return w;
    }
};

Json json_of_window(const SearchWindow& w) {
    Json j{{"k", json_int(w.k)}, {"n_min", json_int(w.n_min)}, {"n_max", json_int(w.n_max)}};
    if (w.d_max) j["d_max"] = json_int(*w.d_max);
    if (w.l_max) j["l_max"] = json_int(*w.l_max);
    return j;
}

int run_search(const SearchArgs& a, bool json) {
    const SearchWindow w = a.window();
    if (a.nonpositive) {
        const auto hits = search_nonpositive(w);
        if (json) {
            Json j{{"window", json_of_window(w)}, {"hits", Json::array()}};
            for (const auto& h : hits) j["hits"].push_back(json_of(h));
            emit(j);
            return 0;
        }
        if (hits.empty()) {
            std::cout << "no nonpositive flip numbers\n";
            return 0;
        }
        std::vector<std::vector<std::string>> rows{{"n", "d", "n1", "d1", "k1", "n2", "d2", "k2",
                                                    "alpha_c", "c12", "c21", "nonpositive"}};
        for (const auto& h : hits) {
            const char* flag = (h.fn.c12 <= 0 && h.fn.c21 <= 0) ? "both"
                               : (h.fn.c12 <= 0)                ? "c12"
                                                                : "c21";
            rows.push_back({h.wall.parent.n.str(), h.wall.parent.d.str(), h.wall.n1.str(),
                            h.wall.d1.str(), h.wall.k1.str(), h.wall.n2.str(), h.wall.d2.str(),
                            h.wall.k2.str(), h.wall.alpha_c->str(), h.fn.c12.str(),
                            h.fn.c21.str(), flag});
        }
        print_table(rows);
        return 0;
    }
    const auto rows = stability_window_report(w);
    if (json) {
        Json j{{"window", json_of_window(w)}, {"rows", Json::array()}};
        for (const auto& r : rows) j["rows"].push_back(json_of(r));
        emit(j);
        return 0;
    }
    std::vector<std::vector<std::string>> table{
        {"n", "d", "necessary", "status", "range", "flagged", "walls"}};
    for (const auto& r : rows) {
        std::string walls;
        for (const auto& [alpha, outcome] : r.walls) {
            if (!walls.empty()) walls += ";";
            walls += alpha.str() + ":" + to_string(outcome);
        }
        table.push_back({r.sys.n.str(), r.sys.d.str(), r.necessary.str(),
                         to_string(r.verdict.status),
                         r.verdict.range ? r.verdict.range->str() : "-",
                         r.flagged ? "yes" : "no", walls.empty() ? "-" : walls});
    }
    print_table(table);
    return 0;
}

struct SegreArgs {
    long long n = 0, a = 0, k = 0;
    long long q = -1;  // -1: all q
    bool oracle = false;
    long long prime = -1;  // -1: env default
    long long trials = 16;
    unsigned long long seed = 0;
};

int run_segre(const SegreArgs& s, bool json) {
    if (!s.oracle) {
        if (s.q >= 0) {
            const Int bound = r_upper_bound(SegreParams{s.n, s.a, s.k, s.q});
            if (json) {
                emit(Json{{"mode", "bound"},
                          {"n", s.n},
                          {"a", s.a},
                          {"k", s.k},
                          {"q", s.q},
                          {"bound", json_int(bound)}});
            } else {
                std::cout << "bound = " << bound << "\n";
            }
            return 0;
        }
        const StabilityCheck check = stability_bound_check(s.n, s.a, s.k);
        const bool zp = zero_plus_exists(s.n, s.a, s.k);
        if (json) {
            Json j{{"mode", "check"}, {"n", s.n}, {"a", s.a}, {"k", s.k},
                   {"zero_plus_exists", zp}};
            j.update(json_of(check));
            emit(j);
            return 0;
        }
        std::vector<std::vector<std::string>> rows{{"q", "bound", "threshold", "ok"}};
        for (const QWitness& w : check.witnesses)
            rows.push_back(
                {w.q.str(), w.bound.str(), w.threshold.str(), w.ok ? "yes" : "no"});
        print_table(rows);
        std::cout << "zero-plus-exists " << (zp ? "yes" : "no") << "\n";
        std::cout << "stability-bounds " << (check.ok ? "ok" : "violated") << "\n";
        return 0;
    }

    OracleParams op;
    op.prime = s.prime >= 0 ? s.prime : default_prime();
    op.seed = s.seed;
    op.trials = static_cast<int>(s.trials);
    std::vector<Int> qs;
    if (s.q >= 0) {
        qs.emplace_back(s.q);
    } else {
        for (Int q = 1; q <= s.k; ++q) qs.push_back(q);
    }

    Json out{{"mode", "oracle"}, {"n", s.n}, {"a", s.a}, {"k", s.k},
             {"prime", op.prime},  {"trials", op.trials},
             {"seed", static_cast<std::uint64_t>(op.seed)}, {"runs", Json::array()}};
    std::vector<std::vector<std::string>> rows{
        {"q", "bound", "min-delta", "frac-ok", "mode", "reps"}};
    for (const Int& q : qs) {
        const SegreParams sp{s.n, s.a, s.k, q};
        const Int bound = r_upper_bound(sp);
        const OracleRun run = sample_delta_q(sp, op);
        int min_delta = run.delta.empty() ? 0 : run.delta[0];
        int ok_count = 0;
        const Int floor_delta = Int(s.n) - bound;
        for (int dq : run.delta) {
            min_delta = std::min(min_delta, dq);
            if (dq >= floor_delta) ++ok_count;
        }
        const Rational frac(ok_count, op.trials);
        if (json) {
            Json hist = Json::object();
            for (int dq : run.delta) {
                const std::string key = std::to_string(dq);
                hist[key] = hist.contains(key) ? hist[key].get<int>() + 1 : 1;
            }
            out["runs"].push_back(Json{{"q", json_int(q)},
                                       {"bound", json_int(bound)},
                                       {"exhaustive", run.exhaustive},
                                       {"reps_per_trial", run.reps_per_trial},
                                       {"min_delta", min_delta},
                                       {"frac_ok", frac.str()},
                                       {"histogram", hist}});
        } else {
            rows.push_back({q.str(), bound.str(), std::to_string(min_delta), frac.str(),
                            run.exhaustive ? "exhaustive" : "sampled",
                            std::to_string(run.reps_per_trial)});
        }
    }
    if (json) {
        emit(out);
    } else {
        print_table(rows);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"alpha-stability ranges, critical values, and flip numbers for coherent "
                 "systems on the projective line"};
    app.require_subcommand(1);
    bool json = false;

    TypeArgs dim_args, dec_args, range_args, cls_args, walls_args, flips_args;
    auto* dim_cmd = app.add_subcommand("dim", "expected dimension beta(n,d,k)");
    add_type_args(dim_cmd, dim_args);
    auto* dec_cmd = app.add_subcommand("decompose", "coordinates (a,t,l,m) for 0 < k < n");
    add_type_args(dec_cmd, dec_args);
    auto* range_cmd = app.add_subcommand("range", "necessary alpha window");
    add_type_args(range_cmd, range_args);
    auto* cls_cmd = app.add_subcommand("classify", "existence verdict over all alpha");
    add_type_args(cls_cmd, cls_args);
    auto* walls_cmd = app.add_subcommand("walls", "allowable critical data sets");
    add_type_args(walls_cmd, walls_args);
    auto* flips_cmd = app.add_subcommand("flips", "crossing outcomes per critical value");
    add_type_args(flips_cmd, flips_args);
    std::string at;
    flips_cmd->add_option("--at", at, "single critical value p/q");

    SearchArgs search_args;
    auto* search_cmd = app.add_subcommand("search", "sweep a window of parent types");
    search_cmd->add_option("--k", search_args.k, "number of sections")->required();
    search_cmd->add_option("--n-min", search_args.n_min, "smallest rank")->required();
    search_cmd->add_option("--n-max", search_args.n_max, "largest rank")->required();
    auto* dmax_opt = search_cmd->add_option("--d-max", search_args.d_max, "degree cutoff");
    auto* lmax_opt =
        search_cmd->add_option("--l-max", search_args.l_max, "coordinate cutoff (default 6)");
    dmax_opt->excludes(lmax_opt);
    auto* np_flag = search_cmd->add_flag("--nonpositive", search_args.nonpositive,
                                         "list walls with a nonpositive flip number");
    auto* rep_flag = search_cmd->add_flag("--report", search_args.report,
                                          "per-type verdict report (default)");
    np_flag->excludes(rep_flag);

    SegreArgs segre_args;
    auto* segre_cmd =
        app.add_subcommand("segre", "section-subspace bounds and the finite-field oracle");
    segre_cmd->add_option("--n", segre_args.n, "rank")->required();
    segre_cmd->add_option("--a", segre_args.a, "balanced slope")->required();
    segre_cmd->add_option("--k", segre_args.k, "number of sections")->required();
    segre_cmd->add_option("--q", segre_args.q, "subspace dimension");
    segre_cmd->add_flag("--oracle", segre_args.oracle, "sample delta_q over a prime field");
    segre_cmd->add_option("--prime", segre_args.prime,
                          "field characteristic (default COHP1_ORACLE_PRIME or 101)");
    segre_cmd->add_option("--trials", segre_args.trials, "oracle trials (default 16)");
    segre_cmd->add_option("--seed", segre_args.seed, "oracle seed (default 0)");

    for (CLI::App* sub : {dim_cmd, dec_cmd, range_cmd, cls_cmd, walls_cmd, flips_cmd,
                          search_cmd, segre_cmd})
        sub->add_flag("--json", json, "emit JSON instead of a text table");

    try {
        app.parse(argc, argv);
        if (dim_cmd->parsed()) return run_dim(dim_args, json);
        if (dec_cmd->parsed()) return run_decompose(dec_args, json);
        if (range_cmd->parsed()) return run_range(range_args, json);
        if (cls_cmd->parsed()) return run_classify(cls_args, json);
        if (walls_cmd->parsed()) return run_walls(walls_args, json);
        if (flips_cmd->parsed()) return run_flips(flips_args, at, json);
        if (search_cmd->parsed()) return run_search(search_args, json);
        if (segre_cmd->parsed()) return run_segre(segre_args, json);
        std::cerr << "usage error: no verb\n";
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, returns 0
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: precondition: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: precondition: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 1;
    }
}
