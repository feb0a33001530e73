// SPDX-License-Identifier: Apache-2.0
//
// lis-precoding: precoding and power allocation for large intelligent surfaces
// Copyright (C) 2026 The lis-precoding authors
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

// Command-line front end: runs the experiment harness, the one-shot power allocator and the self test.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lis/config.hpp"
#include "lis/errors.hpp"
#include "lis/powerctl.hpp"
#include "lis/scenarios.hpp"
#include "lis/selftest.hpp"
#include "lis/table.hpp"
#include "lis/version.hpp"

namespace
{
    enum ExitCode : int
    {
        ok = 0,
        failure = 1,
        config_error = 2,
        degenerate = 3,
        io_error = 4
    };

    struct GlobalOptions
    {
        std::string config;
        std::string out;
        std::string format = "csv";
        std::optional<std::uint64_t> seed;
        unsigned threads = 1;
    };

    void write_table(const lis::ResultTable &table, const GlobalOptions &opts)
    {
        const auto format = lis::table_format_from_name(opts.format);
        if (opts.out.empty())
            std::cout << (format == lis::TableFormat::CSV ? lis::to_csv(table) : lis::to_json(table));
        else
            lis::emit_table(table, opts.out, format);
    }

    void run_experiment(lis::Experiment experiment, const GlobalOptions &opts)
    {
        lis::ScenarioConfig cfg = opts.config.empty() ? lis::ScenarioConfig::defaults(experiment)
                                                      : lis::load_config(opts.config, experiment);
        if (opts.seed)
            cfg.seed = *opts.seed;
        cfg.validate();
        write_table(lis::run_scenario(cfg, {opts.threads}), opts);
    }

    int run_selftest()
    {
        bool all = true;
        for (const auto &r : lis::run_selftest())
        {
            std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
            all = all && r.passed;
        }
        return all ? ok : failure;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Precoding and power allocation simulator for large intelligent surfaces"};
    app.set_version_flag("--version", std::string(lis::version));
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions opts;
    app.add_option("--config", opts.config, "JSON scenario configuration")->check(CLI::ExistingFile);
    app.add_option("--out", opts.out, "Output file (default: standard output)");
    app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--seed", opts.seed, "Random seed (overrides the configuration)");
    app.add_option("--threads", opts.threads, "Worker threads; does not change the output")->check(CLI::PositiveNumber);

    auto *beampattern = app.add_subcommand("beampattern", "Interference gain versus interferer azimuth");
    auto *se_loss_map = app.add_subcommand("se-loss-map", "Relative SE loss of MR and ZF over interferer angles");
    auto *width_sweep = app.add_subcommand("width-sweep", "MR, ZF and interference-free SE versus surface width");
    auto *user_drops = app.add_subcommand("user-drops", "Random K-user drops with ZF and utility-optimal power");

    auto *power_alloc = app.add_subcommand("power-alloc", "Solve one power allocation problem");
    std::vector<double> gains, costs;
    double budget = 1.0;
    std::string utility = "sum_se";
    power_alloc->add_option("--gains", gains, "ZF gains b_i in (0, 1]")->required()->delimiter(',');
    power_alloc->add_option("--costs", costs, "Power costs c_i > 0")->required()->delimiter(',');
    power_alloc->add_option("--budget", budget, "Total power budget Q");
    power_alloc->add_option("--utility", utility, "Utility function")
        ->check(CLI::IsMember({"proportional_fairness", "sum_se", "harmonic_mean"}));

    auto *selftest = app.add_subcommand("selftest", "Run the built-in oracle cross-checks");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? ok : config_error;
    }

    try
    {
        if (selftest->parsed())
            return run_selftest();
        if (power_alloc->parsed())
        {
            lis::AllocationProblem problem{gains, costs, budget};
            const auto u = lis::utility_from_name(utility);
            const auto alloc = lis::allocate(problem, u);
            lis::ResultTable table({"user_index", "gain", "cost", "power", "physical_power", "sinr"});
            for (std::size_t i = 0; i < gains.size(); ++i)
                table.add_row({static_cast<double>(i), gains[i], costs[i], alloc.powers[i],
                               alloc.powers[i] * costs[i], alloc.sinrs[i]});
            table.metadata()["utility"] = u.name();
            table.metadata()["budget"] = budget;
            table.metadata()["multiplier"] = alloc.multiplier;
            table.metadata()["version"] = lis::version;
            write_table(table, opts);
            return ok;
        }
        if (beampattern->parsed())
            run_experiment(lis::Experiment::BeamPattern, opts);
        else if (se_loss_map->parsed())
            run_experiment(lis::Experiment::SeLossMap, opts);
        else if (width_sweep->parsed())
            run_experiment(lis::Experiment::WidthSweep, opts);
        else if (user_drops->parsed())
            run_experiment(lis::Experiment::UserDrops, opts);
        return ok;
    }
    catch (const lis::ConfigError &e)
    {
        std::cerr << "configuration error: " << e.what() << "\n";
        return config_error;
    }
    catch (const lis::DegenerateAngles &e)
    {
        std::cerr << "degenerate scenario: " << e.what() << "\n";
        return degenerate;
    }
    catch (const lis::DegenerateDropLimit &e)
    {
        std::cerr << "degenerate scenario: " << e.what() << "\n";
        return degenerate;
    }
    catch (const lis::ZeroGainUser &e)
    {
        std::cerr << "degenerate scenario: " << e.what() << "\n";
        return degenerate;
    }
    catch (const lis::IoError &e)
    {
        std::cerr << "I/O error: " << e.what() << "\n";
        return io_error;
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "invalid input: " << e.what() << "\n";
        return config_error;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return failure;
    }
}
