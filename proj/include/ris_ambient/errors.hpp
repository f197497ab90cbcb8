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

#include <stdexcept>
#include <string>

namespace ris_ambient
{

// Invalid or missing configuration value. key() names the offending dotted key.
class ConfigError : public std::invalid_argument
{
public:
    ConfigError(std::string key, const std::string &message)
        : std::invalid_argument("config key '" + key + "': " + message), key_(std::move(key)) {}

    const std::string &key() const noexcept { return key_; }

private:
    std::string key_;
};

// Position or layout that no propagation path can be resolved for.
class GeometryError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Formula applied outside its validity region (shadow boundary, low ka, forward scatter).
// code() is a short machine-readable reason used by the sweep's absent-mechanism columns.
class ValidityError : public std::domain_error
{
public:
    ValidityError(std::string code, const std::string &message)
        : std::domain_error(message), code_(std::move(code)) {}

    const std::string &code() const noexcept { return code_; }

private:
    std::string code_;
};

// Factorization or quadrature that failed to reach its tolerance.
class NumericError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace ris_ambient
