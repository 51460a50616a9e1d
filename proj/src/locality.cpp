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

#include "mereo/locality.hpp"

#include <algorithm>
#include <cmath>

#include "mereo/linalg.hpp"
#include "mereo/unitary_opt.hpp"

namespace mereo::locality {

std::vector<Matrix> hermitian_basis(Index q) {
  if (q < 2) throw std::invalid_argument("factor dimension must be at least 2");
  std::vector<Matrix> basis;
  basis.reserve(q * q);
  basis.push_back(Matrix::Identity(q, q) / std::sqrt(static_cast<double>(q)));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (Index j = 0; j < q; ++j) {
    for (Index k = j + 1; k < q; ++k) {
      Matrix sym = Matrix::Zero(q, q);
      sym(j, k) = inv_sqrt2;
      sym(k, j) = inv_sqrt2;
      basis.push_back(std::move(sym));
      Matrix anti = Matrix::Zero(q, q);
      anti(j, k) = Complex(0.0, -inv_sqrt2);
      anti(k, j) = Complex(0.0, inv_sqrt2);
      basis.push_back(std::move(anti));
    }
  }
  for (Index l = 1; l < q; ++l) {
    Matrix diag = Matrix::Zero(q, q);
    const double norm = 1.0 / std::sqrt(static_cast<double>(l * (l + 1)));
    for (Index m = 0; m < l; ++m) diag(m, m) = norm;
    diag(l, l) = -static_cast<double>(l) * norm;
    basis.push_back(std::move(diag));
  }
  return basis;
}

OperatorExpansion::OperatorExpansion(std::vector<Index> dims, RealVector coefficients)
    : dims_(std::move(dims)), coefficients_(std::move(coefficients)) {
  Index total = 1;
  strides_.assign(dims_.size(), 1);
  for (Index f = static_cast<Index>(dims_.size()) - 1; f >= 0; --f) {
    strides_[f] = total;
    total *= dims_[f] * dims_[f];
  }
  if (coefficients_.size() != total)
    throw std::invalid_argument("coefficient count does not match the partition");
}

double OperatorExpansion::coefficient(const std::vector<Index>& labels) const {
  if (labels.size() != dims_.size()) throw std::invalid_argument("label count mismatch");
  Index flat = 0;
  for (std::size_t f = 0; f < labels.size(); ++f) {
    if (labels[f] < 0 || labels[f] >= dims_[f] * dims_[f])
      throw std::invalid_argument("label out of range");
    flat += labels[f] * strides_[f];
  }
  return coefficients_[flat];
}

std::vector<Index> OperatorExpansion::labels_of(Index flat) const {
  std::vector<Index> labels(dims_.size());
  for (std::size_t f = 0; f < dims_.size(); ++f)
    labels[f] = (flat / strides_[f]) % (dims_[f] * dims_[f]);
  return labels;
}

int OperatorExpansion::order_of(Index flat) const {
  int order = 0;
  for (std::size_t f = 0; f < dims_.size(); ++f)
    if ((flat / strides_[f]) % (dims_[f] * dims_[f]) != 0) ++order;
  return order;
}

namespace {

struct TransformTables {
  std::vector<Index> dims;
  std::vector<Matrix> factor_transform;  // q^2 x q^2: row a = vec of conj(B_a)
  Index total_dim = 1;
};

TransformTables make_tables(const std::vector<Index>& dims) {
  TransformTables t;
  t.dims = dims;
  for (Index q : dims) {
    const auto basis = hermitian_basis(q);
    Matrix m(q * q, q * q);
    for (Index a = 0; a < q * q; ++a)
      for (Index i = 0; i < q; ++i)
        for (Index j = 0; j < q; ++j) m(a, i * q + j) = std::conj(basis[a](i, j));
    t.factor_transform.push_back(std::move(m));
    t.total_dim *= q;
  }
  return t;
}

// Expansion of a factor-basis operator as a flat complex tensor over the
// mixed-radix label index; applies the per-factor basis transform one tensor
// axis at a time.
std::vector<Complex> transform_forward(const Matrix& ht, const TransformTables& t) {
  const Index d = t.total_dim;
  const Index n = static_cast<Index>(t.dims.size());

  // Pack H(i,j) into X[m_1,...,m_n] with m_f = i_f * q_f + j_f.
  std::vector<Index> row_stride(n, 1), mixed_stride(n, 1);
  for (Index f = n - 2; f >= 0; --f) row_stride[f] = row_stride[f + 1] * t.dims[f + 1];
  for (Index f = n - 2; f >= 0; --f)
    mixed_stride[f] = mixed_stride[f + 1] * t.dims[f + 1] * t.dims[f + 1];

  std::vector<Complex> x(d * d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      Index m = 0;
      for (Index f = 0; f < n; ++f) {
        const Index di = (i / row_stride[f]) % t.dims[f];
        const Index dj = (j / row_stride[f]) % t.dims[f];
        m += (di * t.dims[f] + dj) * mixed_stride[f];
      }
      x[m] = ht(i, j);
    }
  }

  std::vector<Complex> work(d * d);
  for (Index f = 0; f < n; ++f) {
    const Index qsq = t.dims[f] * t.dims[f];
    const Index stride = mixed_stride[f];
    const Index blocks = static_cast<Index>(x.size()) / (qsq * stride);
    const Matrix& tf = t.factor_transform[f];
    for (Index blk = 0; blk < blocks; ++blk) {
      for (Index s = 0; s < stride; ++s) {
        const Index base = blk * qsq * stride + s;
        for (Index a = 0; a < qsq; ++a) {
          Complex acc = 0.0;
          for (Index m = 0; m < qsq; ++m) acc += tf(a, m) * x[base + m * stride];
          work[base + a * stride] = acc;
        }
      }
    }
    std::swap(x, work);
  }
  return x;
}

std::vector<Complex> transform_backward(const RealVector& coeffs, const TransformTables& t) {
  const Index d = t.total_dim;
  const Index n = static_cast<Index>(t.dims.size());
  std::vector<Index> mixed_stride(n, 1);
  for (Index f = n - 2; f >= 0; --f)
    mixed_stride[f] = mixed_stride[f + 1] * t.dims[f + 1] * t.dims[f + 1];

  std::vector<Complex> x(coeffs.size());
  for (Index k = 0; k < coeffs.size(); ++k) x[k] = coeffs[k];

  std::vector<Complex> work(d * d);
  for (Index f = 0; f < n; ++f) {
    const Index qsq = t.dims[f] * t.dims[f];
    const Index stride = mixed_stride[f];
    const Index blocks = static_cast<Index>(x.size()) / (qsq * stride);
    const Matrix& tf = t.factor_transform[f];
    for (Index blk = 0; blk < blocks; ++blk) {
      for (Index s = 0; s < stride; ++s) {
        const Index base = blk * qsq * stride + s;
        for (Index m = 0; m < qsq; ++m) {
          Complex acc = 0.0;
          for (Index a = 0; a < qsq; ++a) acc += std::conj(tf(a, m)) * x[base + a * stride];
          work[base + m * stride] = acc;
        }
      }
    }
    std::swap(x, work);
  }
  return x;
}

double nonlocal_fraction_of(const std::vector<Complex>& coeffs, const TransformTables& t, int k) {
  const Index n = static_cast<Index>(t.dims.size());
  std::vector<Index> mixed_stride(n, 1);
  for (Index f = n - 2; f >= 0; --f)
    mixed_stride[f] = mixed_stride[f + 1] * t.dims[f + 1] * t.dims[f + 1];
  double total = 0.0, beyond = 0.0;
  for (Index idx = 0; idx < static_cast<Index>(coeffs.size()); ++idx) {
    int order = 0;
    for (Index f = 0; f < n; ++f)
      if ((idx / mixed_stride[f]) % (t.dims[f] * t.dims[f]) != 0) ++order;
    const double w = std::norm(coeffs[idx]);
    total += w;
    if (order > k) beyond += w;
  }
  return total > 0.0 ? beyond / total : 0.0;
}

void check_partition(const HermitianOperator& h, const Multipartition& p) {
  if (h.dim() != p.dim())
    throw std::invalid_argument("partition does not match the operator dimension");
}

}  // namespace

OperatorExpansion operator_expansion(const HermitianOperator& h, const Multipartition& p) {
  check_partition(h, p);
  const TransformTables tables = make_tables(p.dims());
  const Matrix ht = p.identity_frame()
                        ? h.entries()
                        : Matrix(p.frame().adjoint() * h.entries() * p.frame());
  const std::vector<Complex> raw = transform_forward(ht, tables);

  RealVector coeffs(static_cast<Index>(raw.size()));
  double max_imag = 0.0;
  for (Index k = 0; k < coeffs.size(); ++k) {
    coeffs[k] = raw[k].real();
    max_imag = std::max(max_imag, std::abs(raw[k].imag()));
  }
  if (max_imag > 1e-9 * std::max(1.0, h.frobenius_norm()))
    throw numeric_error("expansion coefficients are not real");
  return OperatorExpansion(p.dims(), std::move(coeffs));
}

Matrix expansion_reconstruct(const OperatorExpansion& e) {
  const TransformTables tables = make_tables(e.dims());
  const std::vector<Complex> x = transform_backward(e.coefficients(), tables);

  const Index d = tables.total_dim;
  const Index n = static_cast<Index>(e.dims().size());
  std::vector<Index> row_stride(n, 1), mixed_stride(n, 1);
  for (Index f = n - 2; f >= 0; --f) row_stride[f] = row_stride[f + 1] * e.dims()[f + 1];
  for (Index f = n - 2; f >= 0; --f)
    mixed_stride[f] = mixed_stride[f + 1] * e.dims()[f + 1] * e.dims()[f + 1];

  Matrix out(d, d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      Index m = 0;
      for (Index f = 0; f < n; ++f) {
        const Index di = (i / row_stride[f]) % e.dims()[f];
        const Index dj = (j / row_stride[f]) % e.dims()[f];
        m += (di * e.dims()[f] + dj) * mixed_stride[f];
      }
      out(i, j) = x[m];
    }
  }
  return out;
}

LocalityProfile locality_profile(const OperatorExpansion& e) {
  const Index n = static_cast<Index>(e.dims().size());
  LocalityProfile profile;
  profile.weight_by_order = RealVector::Zero(n + 1);
  for (Index idx = 0; idx < e.n_terms(); ++idx) {
    const double c = e.coefficients()[idx];
    profile.weight_by_order[e.order_of(idx)] += c * c;
  }
  return profile;
}

KLocalityResult k_locality_test(const HermitianOperator& h, const Multipartition& p, int k,
                                double tolerance) {
  check_partition(h, p);
  const Index n = p.n_factors();
  if (k < 1 || k > n) throw std::invalid_argument("k must be in [1, n_factors]");
  const LocalityProfile profile = locality_profile(operator_expansion(h, p));
  const double total = profile.total();
  double beyond = 0.0;
  for (Index order = k + 1; order <= n; ++order) beyond += profile.weight_by_order[order];
  const double fraction = total > 0.0 ? beyond / total : 0.0;
  return KLocalityResult{fraction <= tolerance, fraction};
}

LocalitySearchResult local_factorization_search(const HermitianOperator& h,
                                                const std::vector<Index>& dims, int k,
                                                int restarts, int steps, std::uint64_t seed,
                                                int threads) {
  Index product = 1;
  for (Index q : dims) product *= q;
  if (product != h.dim()) throw std::invalid_argument("dims do not multiply to the dimension");
  if (k < 1 || k > static_cast<int>(dims.size()))
    throw std::invalid_argument("k must be in [1, n_factors]");

  const TransformTables tables = make_tables(dims);
  const Matrix& hm = h.entries();
  const auto objective = [&](const Matrix& frame) {
    const Matrix ht = frame.adjoint() * hm * frame;
    return nonlocal_fraction_of(transform_forward(ht, tables), tables, k);
  };

  FrameSearchOptions opts;
  opts.restarts = restarts;
  opts.steps = steps;
  opts.seed = seed;
  opts.threads = threads;
  const FrameSearchResult res = minimize_over_unitaries(h.dim(), objective, opts);

  return LocalitySearchResult{Multipartition(dims, res.frame), res.objective, res.trace};
}

}  // namespace mereo::locality
