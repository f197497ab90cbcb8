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

#include "ris_ambient/config.hpp"
#include "ris_ambient/errors.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace ris_ambient
{

namespace
{

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool valid_key(std::string_view key)
{
    if (key.empty() || key.front() == '.' || key.back() == '.')
        return false;
    char prev = 0;
    for (char c : key)
    {
        if (c == '.' && prev == '.')
            return false;
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.'))
            return false;
        prev = c;
    }
    return true;
}

// Drop a trailing "# comment" that is not inside a quoted string.
std::string_view strip_comment(std::string_view line)
{
    bool in_quotes = false;
    for (size_t i = 0; i < line.size(); ++i)
    {
        if (line[i] == '"')
            in_quotes = !in_quotes;
        else if (line[i] == '#' && !in_quotes)
            return line.substr(0, i);
    }
    return line;
}

std::string location(size_t line_no)
{
    return "line " + std::to_string(line_no);
}

} // namespace

ConfigDocument ConfigDocument::parse(std::string_view text)
{
    ConfigDocument doc;
    std::string table;
    size_t line_no = 0;

    while (!text.empty())
    {
        ++line_no;
        const size_t eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);

        line = trim(strip_comment(line));
        if (line.empty())
            continue;

        if (line.front() == '[')
        {
            if (line.back() != ']')
                throw ConfigError(location(line_no), "unterminated table header");
            const std::string_view name = trim(line.substr(1, line.size() - 2));
            if (!valid_key(name))
                throw ConfigError(location(line_no), "invalid table name '" + std::string(name) + "'");
            table = std::string(name);
            continue;
        }

        const size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(location(line_no), "expected 'key = value'");

        const std::string_view key = trim(line.substr(0, eq));
        std::string_view value = trim(line.substr(eq + 1));
        if (!valid_key(key))
            throw ConfigError(location(line_no), "invalid key '" + std::string(key) + "'");

        bool quoted = false;
        if (!value.empty() && value.front() == '"')
        {
            if (value.size() < 2 || value.back() != '"')
                throw ConfigError(std::string(key), "unterminated string");
            value = value.substr(1, value.size() - 2);
            quoted = true;
        }
        else if (value.empty())
        {
            throw ConfigError(std::string(key), "missing value");
        }

        std::string full = table.empty() ? std::string(key) : table + "." + std::string(key);
        doc.set(std::move(full), std::string(value), quoted);
    }
    return doc;
}

void ConfigDocument::apply_override(std::string_view assignment)
{
    const size_t eq = assignment.find('=');
    if (eq == std::string_view::npos)
        throw ConfigError(std::string(assignment), "override must have the form key=value");

    const std::string_view key = trim(assignment.substr(0, eq));
    std::string_view value = trim(assignment.substr(eq + 1));
    if (!valid_key(key))
        throw ConfigError(std::string(key), "invalid override key");
    if (value.empty())
        throw ConfigError(std::string(key), "override has no value");

    bool quoted = false;
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
    {
        value = value.substr(1, value.size() - 2);
        quoted = true;
    }
    set(std::string(key), std::string(value), quoted);
    overrides_.push_back(std::string(key) + "=" + std::string(value));
}

void ConfigDocument::set(std::string key, std::string value, bool quoted)
{
    for (auto &e : entries_)
    {
        if (e.key == key)
        {
            e.value = std::move(value);
            e.quoted = quoted;
            return;
        }
    }
    entries_.push_back({std::move(key), std::move(value), quoted});
}

const ConfigDocument::Entry *ConfigDocument::find(std::string_view key) const
{
    for (const auto &e : entries_)
        if (e.key == key)
            return &e;
    return nullptr;
}

double parse_real(std::string_view key, std::string_view text)
{
    text = trim(text);
    if (!text.empty() && text.front() == '+')
        text.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw ConfigError(std::string(key), "'" + std::string(text) + "' is not a number");
    if (!std::isfinite(value))
        throw ConfigError(std::string(key), "value must be finite");
    return value;
}

} // namespace ris_ambient
