// Copyright 2026 The Mereo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "mereo/geometry.hpp"
#include "mereo/locality.hpp"
#include "mereo/types.hpp"

namespace mereo::io {

inline constexpr const char* kToolVersion = "0.1.0";

// HOP-JSON formats:
//   operator: {"dim": d, "re": [[...], ...], "im": [[...], ...]}  row-major
//   state:    {"dim": d, "re": [...], "im": [...]}

nlohmann::json operator_to_json(const Matrix& m);
Matrix operator_from_json(const nlohmann::json& j);

nlohmann::json state_to_json(const Vector& v);
Vector state_from_json(const nlohmann::json& j);

HermitianOperator load_operator(const std::filesystem::path& path);
void save_operator(const HermitianOperator& h, const std::filesystem::path& path);
void save_matrix(const Matrix& m, const std::filesystem::path& path);

StateVector load_state(const std::filesystem::path& path);
void save_state(const StateVector& psi, const std::filesystem::path& path);

nlohmann::json load_json(const std::filesystem::path& path);

/// Writes through a temp file in the same directory plus a rename, so
/// readers never see a partial file.
void atomic_write_text(const std::filesystem::path& path, const std::string& content);
void atomic_write_json(const std::filesystem::path& path, const nlohmann::json& j);

void write_real_matrix_csv(const RealMatrix& m, const std::filesystem::path& path);
void write_embedding_csv(const geometry::Embedding& e, const std::filesystem::path& path);
void write_profile_csv(const locality::LocalityProfile& p, const std::filesystem::path& path);
void write_expansion_csv(const locality::OperatorExpansion& e, const std::filesystem::path& path);

}  // namespace mereo::io
