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

#include "lgtwp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace lgtwp {

namespace {

double chi_of(const BasisState& s, int n) {
  const double occ = s.occupied(n) ? 1.0 : 0.0;
  return n % 2 == 0 ? occ : 1.0 - occ;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

DensityProfile staggered_density(const PhysicalBasis& basis, std::span<const double> p) {
  if (p.size() != basis.size()) throw std::invalid_argument("probability vector length mismatch");
  const int n_sites = basis.spec().n_sites;
  DensityProfile out{std::vector<double>(n_sites, 0.0), {}};
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int n = 0; n < n_sites; ++n) out.chi[n] += p[i] * chi_of(basis[i], n);
  return out;
}

DensityProfile staggered_density(const PhysicalBasis& basis, const Vec& psi) {
  const auto p = probabilities(psi);
  return staggered_density(basis, p);
}

DensityProfile staggered_density(const PhysicalBasis& basis, std::span<const double> p,
                                 std::span<const double> sd) {
  if (sd.size() != p.size()) throw std::invalid_argument("stddev length mismatch");
  auto out = staggered_density(basis, p);
  const int n_sites = basis.spec().n_sites;
  out.err.assign(n_sites, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int n = 0; n < n_sites; ++n) out.err[n] += std::pow(chi_of(basis[i], n) * sd[i], 2);
  for (auto& e : out.err) e = std::sqrt(e);
  return out;
}

std::vector<double> probabilities(const Vec& psi) {
  std::vector<double> p(psi.size());
  for (int i = 0; i < psi.size(); ++i) p[i] = std::norm(psi(i));
  return p;
}

TruncMetrics trunc_metrics(const Vec& t, const Vec& e, const Mat& h) {
  if (std::abs(t.norm() - 1) > 1e-8 || std::abs(e.norm() - 1) > 1e-8)
    throw std::invalid_argument("states must be normalized");
  const double et = t.dot(h * t).real(), ee = e.dot(h * e).real();
  if (std::abs(ee) < 1e-14) throw std::domain_error("exact energy is zero");
  return {std::norm(t.dot(e)), std::abs(et - ee) / std::abs(ee)};
}

double rms_error(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.empty()) throw std::invalid_argument("rms_error length mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(acc / static_cast<double>(a.size()));
}

BootstrapReport bootstrap(std::span<const PhysicalEvent> events, const PhysicalBasis& basis,
                          std::size_t n_resamples, std::uint64_t seed, int jobs) {
  if (events.empty()) throw std::invalid_argument("no events to bootstrap");
  if (n_resamples < 2) throw std::invalid_argument("need at least two resamples");
  const std::size_t dim = basis.size(), n_ev = events.size();
  std::vector<double> samples(n_resamples * dim, 0.0);
  std::vector<char> used(n_resamples, 0);

  auto work = [&](std::size_t begin, std::size_t end) {
    std::vector<double> counts(dim);
    for (std::size_t r = begin; r < end; ++r) {
      std::mt19937_64 rng(splitmix(seed ^ splitmix(r)));
      std::uniform_int_distribution<std::size_t> pick(0, n_ev - 1);
      std::fill(counts.begin(), counts.end(), 0.0);
      double kept = 0.0;
      for (std::size_t s = 0; s < n_ev; ++s) {
        const auto& ev = events[pick(rng)];
        if (ev.ancilla != 1) continue;
        counts[ev.index] += 1.0;
        kept += 1.0;
      }
      if (kept == 0.0) continue;
      used[r] = 1;
      for (std::size_t i = 0; i < dim; ++i) samples[r * dim + i] = counts[i] / kept;
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(jobs, 1, n_resamples);
  if (workers == 1) {
    work(0, n_resamples);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (n_resamples + workers - 1) / workers;
    for (std::size_t b = 0; b < n_resamples; b += chunk) pool.emplace_back(work, b, std::min(b + chunk, n_resamples));
  }

  BootstrapReport rep;
  rep.n_resamples = n_resamples;
  rep.mean.assign(dim, 0.0);
  rep.stddev.assign(dim, 0.0);
  for (std::size_t r = 0; r < n_resamples; ++r) {
    if (!used[r]) continue;
    ++rep.n_used;
    for (std::size_t i = 0; i < dim; ++i) rep.mean[i] += samples[r * dim + i];
  }
  if (rep.n_used < 2) throw std::domain_error("too few resamples with ancilla-1 events");
  for (auto& m : rep.mean) m /= static_cast<double>(rep.n_used);
  for (std::size_t r = 0; r < n_resamples; ++r) {
    if (!used[r]) continue;
    for (std::size_t i = 0; i < dim; ++i) rep.stddev[i] += std::pow(samples[r * dim + i] - rep.mean[i], 2);
  }
  for (auto& s : rep.stddev) s = std::sqrt(s / static_cast<double>(rep.n_used - 1));
  rep.chi = staggered_density(basis, rep.mean, rep.stddev);
  return rep;
}

double positional_spread(std::span<const double> chi, double mu) {
  const double n = static_cast<double>(chi.size());
  double w = 0.0, acc = 0.0;
  for (std::size_t i = 0; i < chi.size(); ++i) {
    double d = std::fmod(std::abs(static_cast<double>(i) - mu), n);
    d = std::min(d, n - d);
    acc += chi[i] * d * d;
    w += chi[i];
  }
  if (w <= 0) throw std::domain_error("empty density profile");
  return acc / w;
}

}  // namespace lgtwp
