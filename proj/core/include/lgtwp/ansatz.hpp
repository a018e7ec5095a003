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

#ifndef LGTWP_ANSATZ_HPP
#define LGTWP_ANSATZ_HPP

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "lgtwp/model.hpp"

namespace lgtwp {

// Free staggered dispersion and spinor ratio.
double dispersion(double k, double m_f);
double spinor_ratio(double k, double m_f);

enum class SpinorRole { C, D };

// C(p, m) = A_p e^{ipm} (1 on even m, v_p on odd m) and
// D(q, n) = A_q e^{iqn} (v_q on even n, 1 on odd n), A_k = sqrt((m_f + w_k) / (2 pi w_k)).
cplx spinor_weight(const Momentum& p, int site, SpinorRole role, double m_f);

enum class Wrapping { none, forward, backward, both_halved };
std::string_view to_string(Wrapping w);

// One flux-string path between m and n. Forward paths run from m upward
// through links m, m+1, ... and lower each link; backward paths run from n
// upward and raise each link.
struct MesonBranch {
  bool forward = true;
  bool wraps = false;  // crosses the boundary link N-1
  double weight = 1.0;
  std::vector<int> links;
  std::vector<int> interior;  // fermion sites carrying the JW string
  Term term;                  // weight included
};

struct BareMeson {
  int m = 0;
  int n = 0;
  Wrapping wrapping = Wrapping::none;
  std::vector<MesonBranch> branches;
  OperatorSum op;
  int length() const { return branches.front().links.empty() ? 0 : static_cast<int>(branches.front().links.size()); }
};

// Shorter path between m and n; both halves at 1/sqrt2 when they tie; the
// number operator when m == n.
BareMeson build_bare_meson(const LatticeSpec& spec, int m, int n);

struct AnsatzParams {
  double sigma_a = 1.0;
  double mu_a = 0.0;
};

struct WavePacketSpec {
  double sigma = kPi / 6;
  double mu = 3.0;
  double k0 = 0.0;
};

class MesonAnsatz {
 public:
  explicit MesonAnsatz(const LatticeModel& model);  // model must outlive this

  const LatticeModel& model() const { return *model_; }
  const Vec& meson_on_vacuum(int m, int n) const { return on_vacuum_[m * n_sites_ + n]; }

  // (p, q) pairs with p + q = k exactly.
  std::vector<std::pair<Momentum, Momentum>> pairs(const Momentum& k) const;
  // Normalized eta over pairs(k).
  std::vector<cplx> eta(const Momentum& k, const AnsatzParams& a) const;
  // W_{m,n} with b_k^dag = sum W_{m,n} M_{m,n}.
  Mat position_weights(const Momentum& k, const AnsatzParams& a) const;

  Vec raw(const Momentum& k, const AnsatzParams& a) const;      // b_k^dag |Omega>
  Vec state(const Momentum& k, const AnsatzParams& a) const;    // vacuum removed, unit norm
  double energy(const Momentum& k, const AnsatzParams& a) const;

 private:
  const LatticeModel* model_;
  int n_sites_;
  std::vector<Vec> on_vacuum_;
};

struct OptimizerOptions {
  int grid = 16;
  double size_tol = 1e-8;
  int budget = 2000;
};

struct SectorFit {
  Momentum k{0, 2};
  AnsatzParams params;
  double energy = 0.0;
  double exact_energy = 0.0;
  double fidelity = 0.0;           // vs lowest non-vacuum state of the sector
  double mesonic_fidelity = 0.0;   // vs lowest mesonic state of the sector
  int evaluations = 0;
  bool converged = false;
};

// Grid seeding over (sigma_A log-spaced in [0.1, 2pi], mu_A in [-N/2, N/2])
// followed by simplex refinement in (log sigma_A, mu_A).
SectorFit optimize_ansatz(const MesonAnsatz& ansatz, const Momentum& k,
                          const OptimizerOptions& opt = {});
std::vector<SectorFit> optimize_all(const MesonAnsatz& ansatz, const OptimizerOptions& opt = {});

// Psi(k) over the zone, unit l2 norm.
std::vector<cplx> wave_profile(const WavePacketSpec& wp, std::span<const Momentum> zone);

struct CoefficientTable {
  int n_sites = 0;
  Mat c;  // c(m, n) = C_{m,n}
  double phase(int m, int n) const { return std::arg(c(m, n)); }
};

// C_{m,n} = sum_k Psi(k) s_k W^{(k)}_{m,n}, s_k = 1 / ||b_k^dag |Omega>||.
CoefficientTable build_cmn(const MesonAnsatz& ansatz, const WavePacketSpec& wp,
                           std::span<const SectorFit> fits);
// sum_{m,n} C_{m,n} M_{m,n} |Omega>, not normalized.
Vec apply_table(const MesonAnsatz& ansatz, const CoefficientTable& table);
// normalize(sum_k Psi(k) s_k b_k^dag |Omega>).
Vec wavepacket_exact(const MesonAnsatz& ansatz, const WavePacketSpec& wp,
                     std::span<const SectorFit> fits);

struct EncodingDiagnostics {
  double annihilation = 0.0;  // || b |Omega> ||
  double commutator = 0.0;    // || ([b, b^dag] - 1) |Omega> ||
};
EncodingDiagnostics encoding_diagnostics(const MesonAnsatz& ansatz, const CoefficientTable& table);

}  // namespace lgtwp

#endif  // LGTWP_ANSATZ_HPP
