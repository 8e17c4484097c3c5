// cpass - center-fed pinching-antenna system simulator
// Copyright (C) 2026 the cpass authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "cpass/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "cpass/analysis.hpp"
#include "cpass/csv.hpp"
#include "cpass/rng.hpp"
#include "cpass/wmmse.hpp"

namespace cpass {

namespace {

const std::vector<std::string> kExperiments = {
    "dof_sweep",        "power_scaling",        "convergence",
    "beamforming_ablation", "architecture_compare", "attenuation_sweep"};

bool is_experiment(const std::string& name) {
    for (const auto& e : kExperiments) {
        if (e == name) return true;
    }
    return false;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_fail(const std::string& src, int line, int col, const std::string& msg) {
    std::ostringstream os;
    os << src << ":" << line << ":" << col << ": " << msg;
    throw SpecParseError(os.str());
}

double parse_double(const std::string& src, int line, int col, const std::string& field,
                    const std::string& v) {
    try {
        size_t pos = 0;
        double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing characters");
        return x;
    } catch (const std::exception&) {
        parse_fail(src, line, col, "invalid value for " + field + ": '" + v + "'");
    }
}

long long parse_int(const std::string& src, int line, int col, const std::string& field,
                    const std::string& v) {
    try {
        size_t pos = 0;
        long long x = std::stoll(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing characters");
        return x;
    } catch (const std::exception&) {
        parse_fail(src, line, col, "invalid value for " + field + ": '" + v + "'");
    }
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(v);
    while (std::getline(is, cur, ',')) parts.push_back(trim(cur));
    return parts;
}

} // namespace

std::uint64_t ExperimentSpec::trial_seed(int trial) const {
    if (!seeds.empty()) return seeds[trial % seeds.size()];
    return mix_seed({seed_base, static_cast<std::uint64_t>(trial)});
}

void ExperimentSpec::validate() const {
    if (!is_experiment(experiment)) {
        throw std::invalid_argument("experiment: unknown tag '" + experiment + "'");
    }
    if (trials < 1) throw std::invalid_argument("trials: must be >= 1");
    if (!(eps > 0.0) && !std::isinf(eps)) throw std::invalid_argument("eps: must be > 0");
    if (I_max < 1) throw std::invalid_argument("I_max: must be >= 1");
    if (n_grid < 2) throw std::invalid_argument("n_grid: must be >= 2");
    if (!(brent_tol > 0.0)) throw std::invalid_argument("brent_tol: must be > 0");
    cfg.validate();
    for (const auto& a : archs) architecture_from_string(a);
}

ExperimentSpec parse_spec(const std::string& text, const std::string& source_name) {
    ExperimentSpec spec;
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = raw;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (trim(line).empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos) {
            parse_fail(source_name, lineno, 1, "expected 'key = value'");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        int vcol = static_cast<int>(eq) + 2;
        if (key.empty()) parse_fail(source_name, lineno, 1, "missing key before '='");
        if (value.empty()) parse_fail(source_name, lineno, vcol, "missing value for " + key);

        if (key == "experiment") {
            if (!is_experiment(value)) {
                parse_fail(source_name, lineno, vcol, "invalid value for experiment: '" + value + "'");
            }
            spec.experiment = value;
        } else if (key == "M") {
            spec.cfg.M = static_cast<int>(parse_int(source_name, lineno, vcol, key, value));
        } else if (key == "K") {
            spec.cfg.K = static_cast<int>(parse_int(source_name, lineno, vcol, key, value));
        } else if (key == "L") {
            spec.cfg.L = parse_double(source_name, lineno, vcol, key, value);
        } else if (key == "f_c") {
            spec.cfg.f_c = parse_double(source_name, lineno, vcol, key, value);
        } else if (key == "n_eff") {
            spec.cfg.n_eff = parse_double(source_name, lineno, vcol, key, value);
        } else if (key == "alpha_g") {
            spec.cfg.alpha_g = parse_double(source_name, lineno, vcol, key, value);
        } else if (key == "P_T_dBm") {
            spec.cfg.P_T = dbm_to_watt(parse_double(source_name, lineno, vcol, key, value));
        } else if (key == "N0_dBm") {
            spec.cfg.N0 = dbm_to_watt(parse_double(source_name, lineno, vcol, key, value));
        } else if (key == "Delta") {
            spec.cfg.Delta = parse_double(source_name, lineno, vcol, key, value);
        } else if (key == "area") {
            spec.cfg.area = parse_double(source_name, lineno, vcol, key, value);
        } else if (key == "eps") {
            spec.eps = parse_double(source_name, lineno, vcol, key, value);
        } else if (key == "I_max") {
            spec.I_max = static_cast<int>(parse_int(source_name, lineno, vcol, key, value));
        } else if (key == "n_grid") {
            spec.n_grid = static_cast<int>(parse_int(source_name, lineno, vcol, key, value));
        } else if (key == "brent_tol") {
            spec.brent_tol = parse_double(source_name, lineno, vcol, key, value);
        } else if (key == "trials") {
            spec.trials = static_cast<int>(parse_int(source_name, lineno, vcol, key, value));
        } else if (key == "seed_base") {
            spec.seed_base = static_cast<std::uint64_t>(
                parse_int(source_name, lineno, vcol, key, value));
        } else if (key == "seeds") {
            spec.seeds.clear();
            for (const auto& p : split_list(value)) {
                spec.seeds.push_back(
                    static_cast<std::uint64_t>(parse_int(source_name, lineno, vcol, key, p)));
            }
        } else if (key == "sweep_key") {
            spec.sweep_key = value;
        } else if (key == "sweep") {
            spec.sweep.clear();
            for (const auto& p : split_list(value)) {
                spec.sweep.push_back(parse_double(source_name, lineno, vcol, key, p));
            }
        } else if (key == "archs") {
            spec.archs = split_list(value);
        } else if (key == "out") {
            spec.out = value;
        } else {
            parse_fail(source_name, lineno, 1, "unknown key '" + key + "'");
        }
    }
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw SpecParseError(source_name + ": " + e.what());
    }
    return spec;
}

ExperimentSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecParseError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str(), path);
}

std::vector<Point2> place_users_op(std::uint64_t seed, int K, double area) {
    return place_users(seed, K, area);
}

namespace {

using Task = std::function<std::vector<ResultRow>()>;

std::vector<ResultRow> run_tasks(const std::vector<Task>& tasks, int threads) {
    std::vector<std::vector<ResultRow>> slots(tasks.size());
    if (threads <= 1 || tasks.size() <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) slots[i] = tasks[i]();
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
                slots[i] = tasks[i]();
            }
        };
        int n = std::min<int>(threads, static_cast<int>(tasks.size()));
        std::vector<std::thread> pool;
        pool.reserve(n);
        for (int i = 0; i < n; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::vector<ResultRow> rows;
    for (auto& s : slots) rows.insert(rows.end(), s.begin(), s.end());
    return rows;
}

ResultRow base_row(const ExperimentSpec& spec, const SystemConfig& cfg) {
    ResultRow r;
    r.experiment = spec.experiment;
    r.M = cfg.M;
    r.K = cfg.K;
    r.alpha_g = cfg.alpha_g;
    r.P_T_dBm = watt_to_dbm(cfg.P_T);
    return r;
}

OptimizerOptions optimizer_options(const ExperimentSpec& spec) {
    OptimizerOptions o;
    o.eps = spec.eps;
    o.max_iter = spec.I_max;
    o.n_grid = spec.n_grid;
    o.brent_tol = spec.brent_tol;
    return o;
}

// mean / sample-std aggregate rows for one metric within a group
void append_aggregates(std::vector<ResultRow>& rows, const ResultRow& proto,
                       const std::string& metric, const std::vector<double>& values) {
    if (values.empty()) return;
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var = values.size() > 1 ? var / static_cast<double>(values.size() - 1) : 0.0;
    ResultRow r = proto;
    r.trial = -1;
    r.seed = 0;
    r.metric = metric + "_mean";
    r.value = mean;
    rows.push_back(r);
    r.metric = metric + "_std";
    r.value = std::sqrt(var);
    rows.push_back(r);
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::vector<ResultRow> guarded(const ResultRow& proto, const std::function<std::vector<ResultRow>()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<ResultRow> rows;
    try {
        rows = body();
    } catch (const std::exception& e) {
        ResultRow r = proto;
        r.metric = "error";
        r.value = 0.0;
        r.error = e.what();
        rows = {r};
    }
    double ms = elapsed_ms(t0);
    for (auto& r : rows) r.wall_time_ms = ms;
    return rows;
}

std::vector<Task> make_dof_tasks(const ExperimentSpec& spec) {
    std::vector<std::pair<int, int>> configs = {{8, 8}, {8, 4}, {4, 4}, {2, 4}};
    if (spec.sweep_key == "M" && !spec.sweep.empty()) {
        configs.clear();
        for (double m : spec.sweep) configs.push_back({static_cast<int>(m), spec.cfg.K});
    }
    std::vector<double> powers_dbm;
    for (int p = 0; p <= 70; p += 10) powers_dbm.push_back(p);

    std::vector<Task> tasks;
    for (auto [M, K] : configs) {
        for (int trial = 0; trial < spec.trials; ++trial) {
            SystemConfig cfg = spec.cfg;
            cfg.M = M;
            cfg.K = K;
            std::uint64_t seed = spec.trial_seed(trial);
            tasks.push_back([spec, cfg, seed, trial, powers_dbm] {
                ResultRow proto = base_row(spec, cfg);
                proto.arch = "CenterFed";
                proto.seed = seed;
                proto.trial = trial;
                return guarded(proto, [&] {
                    std::vector<ResultRow> rows;
                    Layout layout = build_layout(cfg, Architecture::CenterFed, seed);
                    PinchingState state = PinchingState::symmetric(cfg.M);
                    ChannelSet ch = build_channels(layout, state, cfg);
                    for (double p : powers_dbm) {
                        ResultRow r = proto;
                        r.P_T_dBm = p;
                        r.metric = "capacity";
                        r.value = capacity(ch.H_eff, dbm_to_watt(p), cfg.M, cfg.N0);
                        rows.push_back(r);
                    }
                    DofEstimate est = estimate_dof(cfg, Architecture::CenterFed,
                                                   dbm_to_watt(60.0), dbm_to_watt(70.0), seed);
                    ResultRow r = proto;
                    r.metric = "slope";
                    r.value = est.slope;
                    rows.push_back(r);
                    r.metric = "rank";
                    r.value = est.rank;
                    rows.push_back(r);
                    r.metric = "dof_ref";
                    r.value = std::min(cfg.M, cfg.K);
                    rows.push_back(r);
                    return rows;
                });
            });
        }
    }
    return tasks;
}

std::vector<Task> make_power_scaling_tasks(const ExperimentSpec& spec) {
    std::vector<int> Ms = {1, 2, 4, 8, 16, 32, 64};
    if (spec.sweep_key == "M" && !spec.sweep.empty()) {
        Ms.clear();
        for (double m : spec.sweep) Ms.push_back(static_cast<int>(m));
    }
    std::vector<Task> tasks;
    for (int M : Ms) {
        for (int trial = 0; trial < spec.trials; ++trial) {
            SystemConfig cfg = spec.cfg;
            cfg.M = M;
            cfg.K = 1;
            std::uint64_t seed = spec.trial_seed(trial);
            tasks.push_back([spec, cfg, seed, trial] {
                ResultRow proto = base_row(spec, cfg);
                proto.arch = "CenterFed";
                proto.seed = seed;
                proto.trial = trial;
                return guarded(proto, [&] {
                    std::vector<ResultRow> rows;
                    Layout layout = build_layout(cfg, Architecture::CenterFed, seed);
                    PhaseAlignOptions opts;
                    opts.n_grid = spec.n_grid;
                    PowerScalingPoint pt = power_scaling_point(layout, cfg, opts);
                    ResultRow r = proto;
                    r.metric = "P_R_dBm";
                    r.value = watt_to_dbm(pt.P_R);
                    rows.push_back(r);
                    r.metric = "P_bar_dBm";
                    r.value = watt_to_dbm(pt.P_bar);
                    rows.push_back(r);
                    r.metric = "A_R_closed";
                    r.value = pt.A_R_closed;
                    rows.push_back(r);
                    r.metric = "ref_10log10M";
                    r.value = 10.0 * std::log10(static_cast<double>(cfg.M));
                    rows.push_back(r);
                    return rows;
                });
            });
        }
    }
    return tasks;
}

std::vector<Task> make_convergence_tasks(const ExperimentSpec& spec) {
    std::vector<int> Ms = {1, 4};
    if (spec.sweep_key == "M" && !spec.sweep.empty()) {
        Ms.clear();
        for (double m : spec.sweep) Ms.push_back(static_cast<int>(m));
    }
    std::vector<double> powers = {0.0, 20.0};
    if (spec.sweep_key == "P_T_dBm" && !spec.sweep.empty()) {
        powers = spec.sweep;
        Ms = {spec.cfg.M};
    }
    std::vector<Task> tasks;
    for (int M : Ms) {
        for (double p : powers) {
            for (int trial = 0; trial < spec.trials; ++trial) {
                SystemConfig cfg = spec.cfg;
                cfg.M = M;
                cfg.P_T = dbm_to_watt(p);
                std::uint64_t seed = spec.trial_seed(trial);
                tasks.push_back([spec, cfg, seed, trial] {
                    ResultRow proto = base_row(spec, cfg);
                    proto.arch = "CenterFed";
                    proto.seed = seed;
                    proto.trial = trial;
                    return guarded(proto, [&] {
                        std::vector<ResultRow> rows;
                        Layout layout = build_layout(cfg, Architecture::CenterFed, seed);
                        WmmseOptimizer opt(cfg, layout, optimizer_options(spec));
                        auto [state, report] = opt.optimize();
                        (void)state;
                        for (size_t i = 0; i < report.sum_rate_trace.size(); ++i) {
                            ResultRow r = proto;
                            r.iteration = static_cast<int>(i + 1);
                            r.iterations = report.iterations;
                            r.metric = "sum_rate";
                            r.value = report.sum_rate_trace[i];
                            rows.push_back(r);
                            r.metric = "objective";
                            r.value = report.objective_trace[i];
                            rows.push_back(r);
                        }
                        ResultRow r = proto;
                        r.iterations = report.iterations;
                        r.metric = "sum_rate_final";
                        r.value = report.sum_rate_trace.back();
                        rows.push_back(r);
                        return rows;
                    });
                });
            }
        }
    }
    return tasks;
}

struct SchemeDef {
    const char* name;
    void (*apply)(OptimizerOptions&);
};

const SchemeDef kSchemes[] = {
    {"full", [](OptimizerOptions&) {}},
    {"fixed_beta", [](OptimizerOptions& o) { o.update_theta = false; }},
    {"mrt_precoder", [](OptimizerOptions& o) { o.update_precoder = false; }},
    {"fixed_positions", [](OptimizerOptions& o) { o.update_positions = false; }},
    {"fixed_delta", [](OptimizerOptions& o) { o.update_delta = false; }},
};

std::vector<Task> make_ablation_tasks(const ExperimentSpec& spec) {
    std::vector<int> Ms = {1, 2, 4, 8};
    if (spec.sweep_key == "M" && !spec.sweep.empty()) {
        Ms.clear();
        for (double m : spec.sweep) Ms.push_back(static_cast<int>(m));
    }
    std::vector<Task> tasks;
    for (int M : Ms) {
        for (const auto& scheme : kSchemes) {
            for (int trial = 0; trial < spec.trials; ++trial) {
                SystemConfig cfg = spec.cfg;
                cfg.M = M;
                std::uint64_t seed = spec.trial_seed(trial);
                const SchemeDef* sd = &scheme;
                tasks.push_back([spec, cfg, seed, trial, sd] {
                    ResultRow proto = base_row(spec, cfg);
                    proto.arch = "CenterFed";
                    proto.variant = sd->name;
                    proto.seed = seed;
                    proto.trial = trial;
                    return guarded(proto, [&] {
                        OptimizerOptions opts = optimizer_options(spec);
                        sd->apply(opts);
                        Layout layout = build_layout(cfg, Architecture::CenterFed, seed);
                        WmmseOptimizer opt(cfg, layout, opts);
                        auto [state, report] = opt.optimize();
                        (void)state;
                        ResultRow r = proto;
                        r.iterations = report.iterations;
                        r.metric = "sum_rate_final";
                        r.value = report.sum_rate_trace.back();
                        return std::vector<ResultRow>{r};
                    });
                });
            }
        }
    }
    return tasks;
}

std::vector<Task> make_compare_tasks(const ExperimentSpec& spec) {
    std::vector<int> Ks = {1, 4};
    if (spec.sweep_key == "K" && !spec.sweep.empty()) {
        Ks.clear();
        for (double k : spec.sweep) Ks.push_back(static_cast<int>(k));
    }
    std::vector<std::string> archs = spec.archs;
    if (archs.empty()) archs = {"CenterFed", "EndFed", "MultiWaveguide"};
    std::vector<Task> tasks;
    for (int K : Ks) {
        for (const auto& arch : archs) {
            for (int trial = 0; trial < spec.trials; ++trial) {
                SystemConfig cfg = spec.cfg;
                cfg.K = K;
                std::uint64_t seed = spec.trial_seed(trial);
                tasks.push_back([spec, cfg, seed, trial, arch] {
                    ResultRow proto = base_row(spec, cfg);
                    proto.arch = arch;
                    proto.seed = seed;
                    proto.trial = trial;
                    return guarded(proto, [&] {
                        Layout layout =
                            build_layout(cfg, architecture_from_string(arch), seed);
                        WmmseOptimizer opt(cfg, layout, optimizer_options(spec));
                        auto [state, report] = opt.optimize();
                        (void)state;
                        ResultRow r = proto;
                        r.iterations = report.iterations;
                        r.metric = "sum_rate_final";
                        r.value = report.sum_rate_trace.back();
                        return std::vector<ResultRow>{r};
                    });
                });
            }
        }
    }
    return tasks;
}

std::vector<Task> make_attenuation_tasks(const ExperimentSpec& spec) {
    std::vector<double> alphas = {0.0, 0.0092, 0.2095};
    if (spec.sweep_key == "alpha_g" && !spec.sweep.empty()) alphas = spec.sweep;
    std::vector<int> Ms = {5, 11, 17};
    if (spec.sweep_key == "M" && !spec.sweep.empty()) {
        Ms.clear();
        for (double m : spec.sweep) Ms.push_back(static_cast<int>(m));
    }
    std::vector<std::string> archs = spec.archs;
    if (archs.empty()) archs = {"CenterFed", "MultiWaveguide"};
    std::vector<Task> tasks;
    for (double alpha : alphas) {
        for (int M : Ms) {
            for (const auto& arch : archs) {
                for (int trial = 0; trial < spec.trials; ++trial) {
                    SystemConfig cfg = spec.cfg;
                    cfg.alpha_g = alpha;
                    cfg.M = M;
                    std::uint64_t seed = spec.trial_seed(trial);
                    tasks.push_back([spec, cfg, seed, trial, arch] {
                        ResultRow proto = base_row(spec, cfg);
                        proto.arch = arch;
                        proto.seed = seed;
                        proto.trial = trial;
                        return guarded(proto, [&] {
                            Layout layout =
                                build_layout(cfg, architecture_from_string(arch), seed);
                            WmmseOptimizer opt(cfg, layout, optimizer_options(spec));
                            auto [state, report] = opt.optimize();
                            (void)state;
                            ResultRow r = proto;
                            r.iterations = report.iterations;
                            r.metric = "sum_rate_final";
                            r.value = report.sum_rate_trace.back();
                            return std::vector<ResultRow>{r};
                        });
                    });
                }
            }
        }
    }
    return tasks;
}

// group key of a row for aggregation: everything but the trial/seed/value
std::string group_key(const ResultRow& r) {
    std::ostringstream os;
    os << r.arch << "|" << r.variant << "|" << r.M << "|" << r.K << "|" << r.alpha_g << "|"
       << r.P_T_dBm << "|" << r.metric;
    return os.str();
}

} // namespace

std::vector<ResultRow> run(const ExperimentSpec& spec, int threads) {
    spec.validate();
    std::vector<Task> tasks;
    if (spec.experiment == "dof_sweep") tasks = make_dof_tasks(spec);
    else if (spec.experiment == "power_scaling") tasks = make_power_scaling_tasks(spec);
    else if (spec.experiment == "convergence") tasks = make_convergence_tasks(spec);
    else if (spec.experiment == "beamforming_ablation") tasks = make_ablation_tasks(spec);
    else if (spec.experiment == "architecture_compare") tasks = make_compare_tasks(spec);
    else if (spec.experiment == "attenuation_sweep") tasks = make_attenuation_tasks(spec);

    std::vector<ResultRow> rows = run_tasks(tasks, threads);

    // aggregate scalar metrics (means over trials) in first-seen group order
    static const char* kAggregated[] = {"sum_rate_final", "slope", "rank",
                                        "P_R_dBm", "P_bar_dBm", "capacity"};
    std::vector<std::string> order;
    std::vector<std::pair<ResultRow, std::vector<double>>> groups;
    for (const auto& r : rows) {
        if (r.trial < 0 || !r.error.empty() || r.iteration >= 0) continue;
        bool wanted = false;
        for (const char* m : kAggregated) {
            if (r.metric == m) wanted = true;
        }
        if (!wanted) continue;
        std::string key = group_key(r);
        size_t idx = 0;
        for (; idx < order.size(); ++idx) {
            if (order[idx] == key) break;
        }
        if (idx == order.size()) {
            order.push_back(key);
            ResultRow proto = r;
            proto.error.clear();
            proto.iterations = 0;
            proto.wall_time_ms = 0.0;
            groups.push_back({proto, {}});
        }
        groups[idx].second.push_back(r.value);
    }
    for (auto& [proto, values] : groups) {
        append_aggregates(rows, proto, proto.metric, values);
    }
    return rows;
}

std::string csv_string(const std::vector<ResultRow>& rows) {
    std::ostringstream os;
    os << "# cpass results v1\n";
    os << "# rng = " << Rng::kAlgorithm << "\n";
    os << "# units: power dBm, rate bits/s/Hz, gain dB, alpha_g nepers/m, distance m\n";
    os << "experiment,arch,variant,M,K,alpha_g,P_T_dBm,seed,trial,iteration,metric,value,"
          "iterations,wall_time_ms,error\n";
    for (const auto& r : rows) {
        os << csv_escape(r.experiment) << "," << csv_escape(r.arch) << ","
           << csv_escape(r.variant) << "," << r.M << "," << r.K << ","
           << format_double(r.alpha_g) << "," << format_double(r.P_T_dBm) << "," << r.seed
           << "," << r.trial << "," << r.iteration << "," << csv_escape(r.metric) << ","
           << format_double(r.value) << "," << r.iterations << ","
           << format_double(r.wall_time_ms) << "," << csv_escape(r.error) << "\n";
    }
    return os.str();
}

void write_csv(const std::string& path, const std::vector<ResultRow>& rows) {
    std::ofstream out(path, std::ios::binary); // LF endings on every platform
    if (!out) throw std::runtime_error("write_csv: cannot open " + path);
    out << csv_string(rows);
}

bool any_error(const std::vector<ResultRow>& rows) {
    for (const auto& r : rows) {
        if (!r.error.empty()) return true;
    }
    return false;
}

} // namespace cpass
