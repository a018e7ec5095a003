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

#ifndef LGTWP_OPERATORS_HPP
#define LGTWP_OPERATORS_HPP

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/SparseCore>

#include "lgtwp/lattice.hpp"

namespace lgtwp {

// Qubit-level operators on a fermion register. Raise = |1><0| (occupies).
enum class FermionOp { I, X, Y, Z, Raise, Lower, Number };
// Link operators. For Z2 Raise and Lower both flip the link.
enum class LinkOp { Raise, Lower, E, E2 };

struct Factor {
  int site = 0;
  std::variant<FermionOp, LinkOp> op;
  friend bool operator==(const Factor&, const Factor&) = default;
};

inline Factor fermion(int site, FermionOp op) { return {site, op}; }
inline Factor link(int site, LinkOp op) { return {site, op}; }

// Product of factors, read left to right as written; acting on a ket the
// rightmost factor applies first.
struct Term {
  cplx coeff{1.0, 0.0};
  std::vector<Factor> factors;
};

class OperatorSum {
 public:
  OperatorSum() = default;
  explicit OperatorSum(Term t) { terms_.push_back(std::move(t)); }
  static OperatorSum identity(cplx c = 1.0) { return OperatorSum(Term{c, {}}); }

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  void add(Term t) { terms_.push_back(std::move(t)); }

  OperatorSum adjoint() const;
  OperatorSum& operator+=(const OperatorSum& o);
  OperatorSum& operator*=(cplx c);
  friend OperatorSum operator+(OperatorSum a, const OperatorSum& b) { return a += b; }
  friend OperatorSum operator-(OperatorSum a, const OperatorSum& b) {
    OperatorSum nb = b;
    nb *= -1.0;
    return a += nb;
  }
  friend OperatorSum operator*(OperatorSum a, cplx c) { return a *= c; }
  friend OperatorSum operator*(cplx c, OperatorSum a) { return a *= c; }
  friend OperatorSum operator*(const OperatorSum& a, const OperatorSum& b);

 private:
  std::vector<Term> terms_;
};

// Action of one term on one configuration; nullopt when it annihilates it or
// pushes a link outside its range.
std::optional<std::pair<BasisState, cplx>> apply_term(const LatticeSpec& spec, const Term& t,
                                                      BasisState s);

// Every fermion/link configuration with no constraint (2^N * d^N states);
// used only for small-N symmetry cross-checks.
class ProductSpace {
 public:
  explicit ProductSpace(LatticeSpec spec);
  const LatticeSpec& spec() const { return spec_; }
  std::size_t size() const { return size_; }
  BasisState operator[](std::size_t i) const;
  std::optional<std::size_t> index_of(const BasisState& s) const;

 private:
  LatticeSpec spec_;
  std::size_t size_;
};

using SparseMat = Eigen::SparseMatrix<cplx>;

// Matrix of op restricted to the physical space. Throws if op moves amplitude
// out of it (i.e. op is not gauge invariant or changes Q).
SparseMat to_sparse(const OperatorSum& op, const PhysicalBasis& basis);
SparseMat to_sparse(const OperatorSum& op, const ProductSpace& space);
Mat to_dense(const OperatorSum& op, const PhysicalBasis& basis);

OperatorSum gauss_operator(const LatticeSpec& spec, int site);
OperatorSum charge_operator(const LatticeSpec& spec);

}  // namespace lgtwp

#endif  // LGTWP_OPERATORS_HPP
