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

#include <sstream>

#include "bianchi/congruence/congruence.hpp"

namespace bianchi::congruence {

namespace {

constexpr int kLatticeModulus = 10;

}  // namespace

std::vector<SubgroupSpec> lattice_groups() {
  return {full_group(), gamma0(5), gamma1(5), gamma0(10), gamma1(10), gamma(5),
          g2(),         g1(),      g3(),      g4(),       gamma(10)};
}

std::vector<LatticeEdge> lattice_edges() {
  auto groups = lattice_groups();
  std::vector<std::shared_ptr<const Subgroup>> img;
  for (const auto& g : groups) img.push_back(image_of(g, kLatticeModulus));
  auto proper = [&](std::size_t i, std::size_t j) { return img[i]->order() < img[j]->order() && img[i]->is_subset_of(*img[j]); };
  std::vector<LatticeEdge> edges;
  for (std::size_t o = 0; o < groups.size(); ++o) {
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (!proper(i, o)) continue;
      bool covered = true;
      for (std::size_t k = 0; k < groups.size() && covered; ++k) covered = !(proper(i, k) && proper(k, o));
      if (!covered) continue;
      std::size_t deg = img[o]->with_minus_identity().order() / img[i]->with_minus_identity().order();
      edges.push_back({groups[o].name, groups[i].name, deg});
    }
  }
  return edges;
}

std::string lattice_dot() {
  std::ostringstream out;
  out << "graph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (const auto& g : lattice_groups()) {
    auto gd = genus_data(g, kLatticeModulus);
    out << "  \"" << g.name << "\" [label=\"" << g.name << "\\ngenus " << gd.genus << "\"];\n";
  }
  for (const auto& e : lattice_edges()) {
    out << "  \"" << e.inner << "\" -- \"" << e.outer << "\" [label=\"" << e.degree << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bianchi::congruence
