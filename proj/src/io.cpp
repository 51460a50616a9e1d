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

#include "mereo/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace mereo::io {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

nlohmann::json operator_to_json(const Matrix& m) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    nlohmann::json re_row = nlohmann::json::array();
    nlohmann::json im_row = nlohmann::json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      re_row.push_back(m(i, j).real());
      im_row.push_back(m(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return nlohmann::json{{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

Matrix operator_from_json(const nlohmann::json& j) {
  if (!j.contains("dim") || !j.contains("re") || !j.contains("im"))
    throw std::invalid_argument("operator JSON needs dim, re, im");
  const Index d = j.at("dim").get<Index>();
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (d < 1 || static_cast<Index>(re.size()) != d || static_cast<Index>(im.size()) != d)
    throw std::invalid_argument("operator JSON has inconsistent dimensions");
  Matrix m(d, d);
  for (Index i = 0; i < d; ++i) {
    const auto& re_row = re.at(i);
    const auto& im_row = im.at(i);
    if (static_cast<Index>(re_row.size()) != d || static_cast<Index>(im_row.size()) != d)
      throw std::invalid_argument("operator JSON has inconsistent rows");
    for (Index jc = 0; jc < d; ++jc)
      m(i, jc) = Complex(re_row.at(jc).get<double>(), im_row.at(jc).get<double>());
  }
  return m;
}

nlohmann::json state_to_json(const Vector& v) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (Index i = 0; i < v.size(); ++i) {
    re.push_back(v[i].real());
    im.push_back(v[i].imag());
  }
  return nlohmann::json{{"dim", v.size()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

Vector state_from_json(const nlohmann::json& j) {
  if (!j.contains("dim") || !j.contains("re") || !j.contains("im"))
    throw std::invalid_argument("state JSON needs dim, re, im");
  const Index d = j.at("dim").get<Index>();
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (d < 1 || static_cast<Index>(re.size()) != d || static_cast<Index>(im.size()) != d)
    throw std::invalid_argument("state JSON has inconsistent dimensions");
  Vector v(d);
  for (Index i = 0; i < d; ++i) v[i] = Complex(re.at(i).get<double>(), im.at(i).get<double>());
  return v;
}

nlohmann::json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("cannot parse " + path.string() + ": " + e.what());
  }
  return j;
}

HermitianOperator load_operator(const std::filesystem::path& path) {
  return HermitianOperator(operator_from_json(load_json(path)));
}

void save_operator(const HermitianOperator& h, const std::filesystem::path& path) {
  atomic_write_json(path, operator_to_json(h.entries()));
}

void save_matrix(const Matrix& m, const std::filesystem::path& path) {
  atomic_write_json(path, operator_to_json(m));
}

StateVector load_state(const std::filesystem::path& path) {
  return StateVector(state_from_json(load_json(path)));
}

void save_state(const StateVector& psi, const std::filesystem::path& path) {
  atomic_write_json(path, state_to_json(psi.amplitudes()));
}

void atomic_write_text(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

void atomic_write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  atomic_write_text(path, j.dump(1, '\t') + "\n");
}

void write_real_matrix_csv(const RealMatrix& m, const std::filesystem::path& path) {
  std::ostringstream out;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ',';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
  atomic_write_text(path, out.str());
}

void write_embedding_csv(const geometry::Embedding& e, const std::filesystem::path& path) {
  static const char* kAxis[] = {"x", "y", "z"};
  std::ostringstream out;
  out << "region";
  for (Index k = 0; k < e.coordinates.cols(); ++k) {
    out << ',';
    if (k < 3)
      out << kAxis[k];
    else
      out << 'c' << k;
  }
  out << '\n';
  for (Index i = 0; i < e.coordinates.rows(); ++i) {
    out << i;
    for (Index k = 0; k < e.coordinates.cols(); ++k) out << ',' << format_double(e.coordinates(i, k));
    out << '\n';
  }
  atomic_write_text(path, out.str());
}

void write_profile_csv(const locality::LocalityProfile& p, const std::filesystem::path& path) {
  std::ostringstream out;
  out << "order,weight\n";
  for (Index k = 0; k < p.weight_by_order.size(); ++k)
    out << k << ',' << format_double(p.weight_by_order[k]) << '\n';
  atomic_write_text(path, out.str());
}

void write_expansion_csv(const locality::OperatorExpansion& e,
                         const std::filesystem::path& path) {
  std::ostringstream out;
  const Index n = static_cast<Index>(e.dims().size());
  for (Index f = 0; f < n; ++f) out << 'a' << f << ',';
  out << "coefficient\n";
  for (Index idx = 0; idx < e.n_terms(); ++idx) {
    const auto labels = e.labels_of(idx);
    for (Index f = 0; f < n; ++f) out << labels[f] << ',';
    out << format_double(e.coefficients()[idx]) << '\n';
  }
  atomic_write_text(path, out.str());
}

}  // namespace mereo::io
