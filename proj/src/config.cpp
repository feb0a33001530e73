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

#include "lis/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "lis/errors.hpp"
#include "lis/powerctl.hpp"

namespace lis
{
    namespace
    {
        const std::set<std::string, std::less<>> known_keys = {
            "experiment", "aperture", "spacings", "reference_snr_db", "users", "utility",
            "drops", "seed", "angle_grid", "width_range", "effective_area"};

        void reject_unknown(const nlohmann::json &obj, const std::set<std::string, std::less<>> &allowed,
                            std::string_view where)
        {
            for (const auto &[key, value] : obj.items())
                if (!allowed.contains(key))
                    throw ConfigError("unknown key '" + key + "' in " + std::string(where));
        }

        template <typename T>
        T read(const nlohmann::json &doc, const char *key)
        {
            try
            {
                return doc.at(key).get<T>();
            }
            catch (const nlohmann::json::exception &e)
            {
                throw ConfigError(std::string("invalid value for '") + key + "': " + e.what());
            }
        }

        std::size_t read_count(const nlohmann::json &value, const char *key)
        {
            if (!value.is_number_integer() || value.get<long long>() < 0)
                throw ConfigError(std::string("'") + key + "' must be a nonnegative integer");
            return value.get<std::size_t>();
        }
    }

    std::string_view experiment_name(Experiment e)
    {
        switch (e)
        {
        case Experiment::BeamPattern:
            return "beampattern";
        case Experiment::SeLossMap:
            return "se_loss_map";
        case Experiment::WidthSweep:
            return "width_sweep";
        case Experiment::UserDrops:
            return "user_drops";
        }
        return "unknown";
    }

    Experiment experiment_from_name(std::string_view name)
    {
        for (auto e : {Experiment::BeamPattern, Experiment::SeLossMap, Experiment::WidthSweep, Experiment::UserDrops})
            if (experiment_name(e) == name)
                return e;
        throw ConfigError("unknown experiment '" + std::string(name) + "'");
    }

    ScenarioConfig ScenarioConfig::defaults(Experiment e)
    {
        ScenarioConfig cfg;
        cfg.experiment = e;
        switch (e)
        {
        case Experiment::BeamPattern:
            cfg.spacings = {0.25, 0.5, 0.75, 0.0};
            break;
        case Experiment::SeLossMap:
            cfg.aperture_width = cfg.aperture_height = 50.0;
            cfg.spacings = {0.0};
            cfg.angle_grid = 181;
            break;
        case Experiment::WidthSweep:
            cfg.aperture_height = 1.0;
            cfg.spacings = {0.0};
            cfg.users = {{0.0, 0.0}, {15.0, 0.0}};
            cfg.angle_grid = 401;
            break;
        case Experiment::UserDrops:
            cfg.spacings = {0.25};
            cfg.reference_snr_db = 0.0;
            cfg.user_count = 5;
            cfg.drops = 2000;
            break;
        }
        return cfg;
    }

    void ScenarioConfig::validate() const
    {
        if (!(aperture_width > 0.0) || !(aperture_height > 0.0))
            throw ConfigError("aperture width and height must be positive");
        if (spacings.empty())
            throw ConfigError("at least one spacing is required");
        for (double s : spacings)
            if (!(s >= 0.0) || !std::isfinite(s))
                throw ConfigError("spacings must be finite and nonnegative (0 selects the dense limit)");
        if (!std::isfinite(reference_snr_db))
            throw ConfigError("reference_snr_db must be finite");
        if (users_served() == 0)
            throw ConfigError("at least one user is required");
        for (const auto &u : users)
            if (!(std::abs(u.azimuth_deg) <= 90.0) || !(std::abs(u.elevation_deg) <= 90.0))
                throw ConfigError("user angles must lie in [-90, 90] degrees");
        try
        {
            utility_from_name(utility);
        }
        catch (const std::invalid_argument &e)
        {
            throw ConfigError(e.what());
        }
        if (experiment != Experiment::UserDrops && angle_grid < 2)
            throw ConfigError("angle_grid must be at least 2");
        if (experiment == Experiment::UserDrops && drops < 1)
            throw ConfigError("drops must be at least 1");
        if (!(width_range[0] > 0.0) || !(width_range[1] > width_range[0]))
            throw ConfigError("width_range must satisfy 0 < min < max");
        if (experiment == Experiment::WidthSweep && users_served() != 2)
            throw ConfigError("width_sweep needs exactly two users (desired, interferer)");
    }

    ScenarioConfig config_from_json(const nlohmann::json &doc, Experiment experiment)
    {
        if (!doc.is_object())
            throw ConfigError("configuration must be a JSON object");
        reject_unknown(doc, known_keys, "configuration");

        if (doc.contains("experiment") && experiment_from_name(read<std::string>(doc, "experiment")) != experiment)
            throw ConfigError("configuration is for experiment '" + read<std::string>(doc, "experiment") +
                              "', not '" + std::string(experiment_name(experiment)) + "'");

        ScenarioConfig cfg = ScenarioConfig::defaults(experiment);
        if (doc.contains("aperture"))
        {
            const auto &ap = doc.at("aperture");
            if (!ap.is_object())
                throw ConfigError("'aperture' must be an object with width and height");
            reject_unknown(ap, {"width", "height"}, "aperture");
            if (ap.contains("width"))
                cfg.aperture_width = read<double>(ap, "width");
            if (ap.contains("height"))
                cfg.aperture_height = read<double>(ap, "height");
        }
        if (doc.contains("spacings"))
            cfg.spacings = read<std::vector<double>>(doc, "spacings");
        if (doc.contains("reference_snr_db"))
            cfg.reference_snr_db = read<double>(doc, "reference_snr_db");
        if (doc.contains("users"))
        {
            const auto &users = doc.at("users");
            if (users.is_array())
            {
                cfg.users.clear();
                for (const auto &u : users)
                {
                    if (!u.is_object())
                        throw ConfigError("each user must be an object with azimuth_deg and elevation_deg");
                    reject_unknown(u, {"azimuth_deg", "elevation_deg"}, "user");
                    UserAngles angles;
                    if (u.contains("azimuth_deg"))
                        angles.azimuth_deg = read<double>(u, "azimuth_deg");
                    if (u.contains("elevation_deg"))
                        angles.elevation_deg = read<double>(u, "elevation_deg");
                    cfg.users.push_back(angles);
                }
                cfg.user_count = cfg.users.size();
            }
            else
            {
                cfg.user_count = read_count(users, "users");
                cfg.users.clear();
            }
        }
        if (doc.contains("utility"))
            cfg.utility = read<std::string>(doc, "utility");
        if (doc.contains("drops"))
            cfg.drops = read_count(doc.at("drops"), "drops");
        if (doc.contains("seed"))
        {
            if (!doc.at("seed").is_number_unsigned())
                throw ConfigError("'seed' must be an unsigned 64-bit integer");
            cfg.seed = doc.at("seed").get<std::uint64_t>();
        }
        if (doc.contains("angle_grid"))
            cfg.angle_grid = read_count(doc.at("angle_grid"), "angle_grid");
        if (doc.contains("width_range"))
            cfg.width_range = read<std::array<double, 2>>(doc, "width_range");
        if (doc.contains("effective_area"))
            cfg.effective_area = read<bool>(doc, "effective_area");

        cfg.validate();
        return cfg;
    }

    ScenarioConfig load_config(const std::filesystem::path &path, Experiment experiment)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("cannot read configuration '" + path.string() + "'");
        nlohmann::json doc;
        try
        {
            doc = nlohmann::json::parse(in);
        }
        catch (const nlohmann::json::parse_error &e)
        {
            throw ConfigError("malformed JSON in '" + path.string() + "': " + e.what());
        }
        return config_from_json(doc, experiment);
    }

    nlohmann::ordered_json config_to_json(const ScenarioConfig &cfg)
    {
        nlohmann::ordered_json doc;
        doc["experiment"] = experiment_name(cfg.experiment);
        doc["aperture"] = {{"width", cfg.aperture_width}, {"height", cfg.aperture_height}};
        doc["spacings"] = cfg.spacings;
        doc["reference_snr_db"] = cfg.reference_snr_db;
        if (cfg.users.empty())
            doc["users"] = cfg.user_count;
        else
        {
            doc["users"] = nlohmann::ordered_json::array();
            for (const auto &u : cfg.users)
                doc["users"].push_back({{"azimuth_deg", u.azimuth_deg}, {"elevation_deg", u.elevation_deg}});
        }
        doc["utility"] = cfg.utility;
        doc["drops"] = cfg.drops;
        doc["seed"] = cfg.seed;
        doc["angle_grid"] = cfg.angle_grid;
        doc["width_range"] = cfg.width_range;
        doc["effective_area"] = cfg.effective_area;
        return doc;
    }
}
