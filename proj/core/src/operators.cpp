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

#include "lgtwp/operators.hpp"

#include <algorithm>
#include <stdexcept>

namespace lgtwp {

namespace {

FermionOp adjoint(FermionOp op) {
  switch (op) {
    case FermionOp::Raise: return FermionOp::Lower;
    case FermionOp::Lower: return FermionOp::Raise;
    default: return op;
  }
}

LinkOp adjoint(LinkOp op) {
  switch (op) {
    case LinkOp::Raise: return LinkOp::Lower;
    case LinkOp::Lower: return LinkOp::Raise;
    default: return op;
  }
}

bool apply_fermion(FermionOp op, int site, BasisState& s, cplx& amp) {
  const std::uint32_t bit = 1u << site;
  const bool occ = s.occ & bit;
  switch (op) {
    case FermionOp::I: return true;
    case FermionOp::X: s.occ ^= bit; return true;
    case FermionOp::Y:
      amp *= occ ? cplx(0, -1) : cplx(0, 1);
      s.occ ^= bit;
      return true;
    case FermionOp::Z:
      if (occ) amp = -amp;
      return true;
    case FermionOp::Raise:
      if (occ) return false;
      s.occ |= bit;
      return true;
    case FermionOp::Lower:
      if (!occ) return false;
      s.occ &= ~bit;
      return true;
    case FermionOp::Number: return occ;
  }
  return false;
}

bool apply_link(const LatticeSpec& spec, LinkOp op, int site, BasisState& s, cplx& amp) {
  int& v = s.links[site];
  switch (op) {
    case LinkOp::Raise:
    case LinkOp::Lower:
      if (spec.group == Group::Z2) {
        v = -v;
        return true;
      }
      v += op == LinkOp::Raise ? 1 : -1;
      return v >= -spec.cutoff && v <= spec.cutoff;
    case LinkOp::E: amp *= static_cast<double>(v); return v != 0;
    case LinkOp::E2: amp *= static_cast<double>(v * v); return v != 0;
  }
  return false;
}

template <class Space>
SparseMat build_sparse(const OperatorSum& op, const Space& space, bool strict) {
  const LatticeSpec& spec = space.spec();
  std::vector<Eigen::Triplet<cplx>> trips;
  for (std::size_t i = 0; i < space.size(); ++i) {
    const BasisState s = space[i];
    for (const Term& t : op.terms()) {
      auto r = apply_term(spec, t, s);
      if (!r) continue;
      auto j = space.index_of(r->first);
      if (!j) {
        if (strict) throw std::domain_error("operator leaves the physical space");
        continue;
      }
      trips.emplace_back(static_cast<int>(*j), static_cast<int>(i), r->second);
    }
  }
  SparseMat m(static_cast<int>(space.size()), static_cast<int>(space.size()));
  m.setFromTriplets(trips.begin(), trips.end());
  m.prune(cplx(0.0));
  return m;
}

}  // namespace

OperatorSum OperatorSum::adjoint() const {
  OperatorSum out;
  for (const Term& t : terms_) {
    Term a{std::conj(t.coeff), {}};
    for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it) {
      Factor f = *it;
      std::visit([&f](auto op) { f.op = lgtwp::adjoint(op); }, it->op);
      a.factors.push_back(f);
    }
    out.terms_.push_back(std::move(a));
  }
  return out;
}

OperatorSum& OperatorSum::operator+=(const OperatorSum& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

OperatorSum& OperatorSum::operator*=(cplx c) {
  for (Term& t : terms_) t.coeff *= c;
  return *this;
}

OperatorSum operator*(const OperatorSum& a, const OperatorSum& b) {
  OperatorSum out;
  for (const Term& x : a.terms())
    for (const Term& y : b.terms()) {
      Term t{x.coeff * y.coeff, x.factors};
      t.factors.insert(t.factors.end(), y.factors.begin(), y.factors.end());
      out.add(std::move(t));
    }
  return out;
}

std::optional<std::pair<BasisState, cplx>> apply_term(const LatticeSpec& spec, const Term& t,
                                                      BasisState s) {
  cplx amp = t.coeff;
  for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it) {
    const bool ok = std::visit(
        [&](auto op) {
          if constexpr (std::is_same_v<decltype(op), FermionOp>)
            return apply_fermion(op, it->site, s, amp);
          else
            return apply_link(spec, op, it->site, s, amp);
        },
        it->op);
    if (!ok) return std::nullopt;
  }
  if (amp == cplx(0.0)) return std::nullopt;
  return std::make_pair(std::move(s), amp);
}

ProductSpace::ProductSpace(LatticeSpec spec) : spec_(spec) {
  spec_.validate();
  size_ = std::size_t{1} << spec_.n_sites;
  for (int n = 0; n < spec_.n_sites; ++n) size_ *= static_cast<std::size_t>(spec_.link_dim());
}

BasisState ProductSpace::operator[](std::size_t i) const {
  BasisState s;
  s.occ = static_cast<std::uint32_t>(i & ((std::size_t{1} << spec_.n_sites) - 1));
  std::size_t rest = i >> spec_.n_sites;
  const auto d = static_cast<std::size_t>(spec_.link_dim());
  s.links.resize(spec_.n_sites);
  for (int n = 0; n < spec_.n_sites; ++n) {
    const int v = static_cast<int>(rest % d);
    rest /= d;
    s.links[n] = spec_.group == Group::Z2 ? 1 - 2 * v : v - spec_.cutoff;
  }
  return s;
}

std::optional<std::size_t> ProductSpace::index_of(const BasisState& s) const {
  std::size_t k = 0;
  const auto d = static_cast<std::size_t>(spec_.link_dim());
  for (int n = spec_.n_sites - 1; n >= 0; --n) {
    const int v = spec_.group == Group::Z2 ? (1 - s.links[n]) / 2 : s.links[n] + spec_.cutoff;
    if (v < 0 || v >= static_cast<int>(d)) return std::nullopt;
    k = k * d + static_cast<std::size_t>(v);
  }
  return (k << spec_.n_sites) | s.occ;
}

SparseMat to_sparse(const OperatorSum& op, const PhysicalBasis& basis) {
  return build_sparse(op, basis, true);
}

SparseMat to_sparse(const OperatorSum& op, const ProductSpace& space) {
  return build_sparse(op, space, false);
}

Mat to_dense(const OperatorSum& op, const PhysicalBasis& basis) {
  return Mat(to_sparse(op, basis));
}

OperatorSum gauss_operator(const LatticeSpec& spec, int site) {
  const int prev = (site + spec.n_sites - 1) % spec.n_sites;
  if (spec.group == Group::Z2) {
    const double sign = site % 2 ? -1.0 : 1.0;
    return OperatorSum(Term{sign, {link(site, LinkOp::E), link(prev, LinkOp::E),
                                   fermion(site, FermionOp::Z)}});
  }
  OperatorSum g(Term{1.0, {link(site, LinkOp::E)}});
  g.add(Term{-1.0, {link(prev, LinkOp::E)}});
  g.add(Term{1.0, {fermion(site, FermionOp::Number)}});
  if (site % 2) g.add(Term{-1.0, {}});
  return g;
}

OperatorSum charge_operator(const LatticeSpec& spec) {
  OperatorSum q;
  for (int n = 0; n < spec.n_sites; ++n) q.add(Term{1.0, {fermion(n, FermionOp::Number)}});
  return q;
}

}  // namespace lgtwp
