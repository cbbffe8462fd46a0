// Copyright 2026 The Bianchi Quintic Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BIANCHI_CONGRUENCE_CONGRUENCE_HPP
#define BIANCHI_CONGRUENCE_CONGRUENCE_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace bianchi::congruence {

// (a b; c d) with entries reduced to [0, N).
struct ModMatrix {
  int a = 1, b = 0, c = 0, d = 1;
  bool operator==(const ModMatrix&) const = default;
};

ModMatrix mul(const ModMatrix& x, const ModMatrix& y, int n);
ModMatrix inverse(const ModMatrix& x, int n);
ModMatrix negated(const ModMatrix& x, int n);
ModMatrix reduce(long a, long b, long c, long d, int n);

constexpr int kMaxModulus = 30;

// Every determinant-1 matrix mod n, lexicographic in (a, b, c, d).
// Throws DomainError unless 1 <= n <= 30.
std::vector<ModMatrix> enumerate_group(int n);
// |SL2(Z/n)| from the prime factorization, n^3 prod_{p | n} (1 - 1/p^2).
std::int64_t sl2_order(int n);

// A subgroup of SL2(Z) given by congruence conditions modulo `level`.
// The predicate sees entries reduced mod some multiple N of the level.
struct SubgroupSpec {
  std::string name;
  int level = 1;
  std::function<bool(const ModMatrix&, int n)> contains;
};

SubgroupSpec full_group();
SubgroupSpec gamma(int n);
SubgroupSpec gamma0(int n);
SubgroupSpec gamma1(int n);
SubgroupSpec intersect(const SubgroupSpec& a, const SubgroupSpec& b);
// a = d = 1 (10), b = 0 (2), c = 0 (10)
SubgroupSpec g1();
// Index 2 in Gamma1(5), containing G1: Gamma1(5) with mod-2 image in the
// order-3 subgroup {I, (0 1; 1 1), (1 1; 1 0)} of SL2(Z/2).
SubgroupSpec g2();
// a = d = 1 (10), b = 0 (2), c = 0 (5) taken literally.
SubgroupSpec g2_literal();
// a = d = 1 (10), b = 0 (5), c = 0 (10)
SubgroupSpec g3();
// = I, (1 5; 5 6), (6 5; 5 1) mod 10
SubgroupSpec g4();

// Named specs: Gamma(n), Gamma0(n), Gamma1(n), G1, G2, G2-literal, G3, G4
// and "A&B" intersections of those. Throws UnknownName.
SubgroupSpec spec_by_name(std::string_view name);

// Image of a spec in SL2(Z/n), with a membership table.
class Subgroup {
 public:
  Subgroup(int n, std::vector<ModMatrix> elems);

  int modulus() const { return n_; }
  const std::vector<ModMatrix>& elements() const { return elems_; }
  std::size_t order() const { return elems_.size(); }
  bool contains(const ModMatrix& m) const;
  bool contains_minus_identity() const;
  // H union -H.
  Subgroup with_minus_identity() const;
  bool is_subset_of(const Subgroup& other) const;
  bool operator==(const Subgroup& o) const;

 private:
  int n_;
  std::vector<ModMatrix> elems_;
  std::vector<bool> member_;
};

// Throws DomainError if the level does not divide n, NotAGroup if the
// predicate is not closed under products and inverses. Memoized per
// (name, n).
std::shared_ptr<const Subgroup> image_of(const SubgroupSpec& spec, int n);

struct SubgroupReport {
  std::size_t index = 0;
  bool normal = false;
  // For normal subgroups of index <= 6: trivial, C2, C3, C4, C2xC2, C5,
  // C6 or S3. Otherwise empty.
  std::string quotient_shape;
};

// Throws NotContained unless inner is inside outer mod n.
SubgroupReport subgroup_report(const SubgroupSpec& inner, const SubgroupSpec& outer, int n);

struct GenusData {
  int mu = 0;
  int eps2 = 0;
  int eps3 = 0;
  int cusps = 0;
  int genus = 0;
};

// Coset action of S and T on (+-H) \ SL2(Z/n). Throws DomainError if the
// genus formula does not give a non-negative integer.
GenusData genus_data(const SubgroupSpec& spec, int n);

nlohmann::json to_json(const GenusData& g);
nlohmann::json to_json(const SubgroupReport& r);

// Groups between Gamma(10) and SL2(Z) named in the level-10 picture,
// largest first.
std::vector<SubgroupSpec> lattice_groups();

struct LatticeEdge {
  std::string outer, inner;
  std::size_t degree;  // index of +-inner in +-outer
};

// Covering relations among lattice_groups() mod 10.
std::vector<LatticeEdge> lattice_edges();
std::string lattice_dot();

}  // namespace bianchi::congruence

#endif  // BIANCHI_CONGRUENCE_CONGRUENCE_HPP
