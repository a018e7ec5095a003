// Copyright 2026 The lgtwp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lgtwp/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <stdexcept>

#include "lgtwp/ansatz.hpp"

namespace lgtwp {

namespace {

constexpr double kDegenerate = 1e-9;

// Replaces each degenerate cluster by the orthonormalized projections of
// canonical basis states, which also fixes phases deterministically.
void canonicalize(const Eigen::VectorXd& values, Mat& vectors) {
  const int d = static_cast<int>(vectors.rows());
  const int cols = static_cast<int>(vectors.cols());
  for (int start = 0; start < cols;) {
    int end = start + 1;
    while (end < cols && values(end) - values(start) < kDegenerate * std::max(1.0, std::abs(values(start))))
      ++end;
    const Mat cluster = vectors.middleCols(start, end - start);
    int found = 0;
    for (int j = 0; j < d && found < end - start; ++j) {
      Vec u = cluster * cluster.row(j).adjoint();
      for (int c = 0; c < found; ++c) {
        const auto prev = vectors.col(start + c);
        u -= prev * prev.dot(u);
      }
      const double nrm = u.norm();
      if (nrm < 1e-8) continue;
      vectors.col(start + found) = u / nrm;
      ++found;
    }
    start = end;
  }
}

void require_hermitian(const Mat& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("matrix is not square");
  if (h.size() > 0 && (h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("matrix is not Hermitian");
}

Mat orthonormal_span(const std::vector<Vec>& vs) {
  if (vs.empty()) return Mat();
  Mat a(vs.front().size(), static_cast<int>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) a.col(static_cast<int>(i)) = vs[i];
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  int rank = 0;
  while (rank < s.size() && s(rank) > 1e-10 * s(0)) ++rank;
  return svd.matrixU().leftCols(rank);
}

}  // namespace

SpectrumResult diagonalize(const Mat& h) {
  require_hermitian(h);
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  SpectrumResult r{es.eigenvalues(), es.eigenvectors(), std::nullopt};
  canonicalize(r.values, r.vectors);
  return r;
}

SpectrumResult diagonalize(const LatticeModel& model, const Momentum& k) {
  const Mat p = model.projector(k);
  Eigen::SelfAdjointEigenSolver<Mat> ps(p);
  std::vector<int> keep;
  for (int i = 0; i < ps.eigenvalues().size(); ++i)
    if (ps.eigenvalues()(i) > 0.5) keep.push_back(i);
  if (keep.empty()) throw std::runtime_error("empty momentum sector");
  Mat b(p.rows(), static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) b.col(static_cast<int>(i)) = ps.eigenvectors().col(keep[i]);
  Mat hk = b.adjoint() * model.h() * b;
  hk = 0.5 * (hk + hk.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Mat> es(hk);
  SpectrumResult r{es.eigenvalues(), b * es.eigenvectors(), k};
  canonicalize(r.values, r.vectors);
  return r;
}

SectorState momentum_eigenstate(const LatticeModel& model, const Momentum& k) {
  const SpectrumResult r = diagonalize(model, k);
  for (int j = 0; j < r.values.size(); ++j) {
    Vec v = r.vectors.col(j);
    if (std::abs(model.vacuum().dot(v)) < 1e-8) return {r.values(j), v};
  }
  throw std::runtime_error("sector holds no state orthogonal to the vacuum");
}

double fidelity(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("state dimension mismatch");
  if (std::abs(a.norm() - 1.0) > 1e-8 || std::abs(b.norm() - 1.0) > 1e-8)
    throw std::invalid_argument("fidelity needs unit-norm states");
  return std::norm(a.dot(b));
}

double winding_weight(const LatticeModel& model, const Vec& v) {
  const LatticeSpec& spec = model.spec();
  Term down{1.0, {}}, up{1.0, {}};
  for (int n = 0; n < spec.n_sites; ++n) {
    down.factors.push_back(link(n, LinkOp::Lower));
    up.factors.push_back(link(n, LinkOp::Raise));
  }
  std::vector<Vec> span;
  for (const Term& t : {down, up}) {
    Vec w = to_sparse(OperatorSum(t), model.basis()) * model.vacuum();
    if (w.norm() > 1e-12) span.push_back(w);
  }
  const Mat q = orthonormal_span(span);
  return q.size() ? (q.adjoint() * v).squaredNorm() : 0.0;
}

double meson_weight(const LatticeModel& model, const Vec& v) {
  const int n_sites = model.spec().n_sites;
  std::vector<Vec> span;
  for (int m = 0; m < n_sites; ++m)
    for (int n = 0; n < n_sites; ++n)
      span.push_back(to_sparse(build_bare_meson(model.spec(), m, n).op, model.basis()) * model.vacuum());
  const Mat q = orthonormal_span(span);
  return q.size() ? (q.adjoint() * v).squaredNorm() : 0.0;
}

SectorState mesonic_eigenstate(const LatticeModel& model, const Momentum& k) {
  const SpectrumResult r = diagonalize(model, k);
  for (int j = 0; j < r.values.size(); ++j) {
    Vec v = r.vectors.col(j);
    if (std::abs(model.vacuum().dot(v)) >= 1e-8) continue;
    if (winding_weight(model, v) >= 0.5) continue;
    return {r.values(j), v};
  }
  throw std::runtime_error("sector holds no mesonic state");
}

std::string_view to_string(Excitation e) {
  switch (e) {
    case Excitation::mesonic: return "mesonic";
    case Excitation::non_mesonic: return "non_mesonic";
    case Excitation::ambiguous: return "ambiguous";
  }
  return "";
}

Classification classify_k0_excitation(const LatticeModel& model) {
  const SectorState first = momentum_eigenstate(model, Momentum(0, model.spec().n_sites));
  Classification c;
  c.energy = first.energy;
  c.winding = winding_weight(model, first.state);
  c.meson = meson_weight(model, first.state);
  if (std::abs(c.winding - 0.5) < 1e-6)
    c.kind = Excitation::ambiguous;
  else
    c.kind = c.winding > 0.5 ? Excitation::non_mesonic : Excitation::mesonic;
  return c;
}

}  // namespace lgtwp
