// SPDX-License-Identifier: Apache-2.0
//
// ris-ambient: around-the-corner coverage from ambient scatter versus RIS
// Copyright (C) 2026 The ris-ambient Authors
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

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ris_ambient
{

// Flat view of a "key = value" document with [table] headers.
// Table members are stored under dotted keys ("angle_spread.azimuth_rms_rad").
// Entries keep file order; a later assignment of the same key replaces the earlier one.
class ConfigDocument
{
public:
    struct Entry
    {
        std::string key;
        std::string value; // unquoted text
        bool quoted = false;
    };

    static ConfigDocument parse(std::string_view text);

    // "dotted.key=value"; applied after parsing, recorded for metadata echo.
    void apply_override(std::string_view assignment);

    void set(std::string key, std::string value, bool quoted = false);
    const Entry *find(std::string_view key) const;
    const std::vector<Entry> &entries() const noexcept { return entries_; }
    const std::vector<std::string> &overrides() const noexcept { return overrides_; }

private:
    std::vector<Entry> entries_;
    std::vector<std::string> overrides_;
};

// Strict number parsing: whole string must be consumed, result finite.
// Throws ConfigError naming key on failure.
double parse_real(std::string_view key, std::string_view text);

} // namespace ris_ambient
