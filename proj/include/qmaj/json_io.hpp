#pragma once

#include <vector>

#include "json.hpp"
#include "qmaj/bijections.hpp"
#include "qmaj/partition.hpp"
#include "qmaj/permutation.hpp"
#include "qmaj/qpoly.hpp"

namespace qmaj {

/* Wire formats:
 *   polynomial          ascending-degree coefficient array; zero is []
 *   permutation         array of integers in one-line notation
 *   partition           array of integers
 *   labeled partition   {"mu": [...], "pi": [...]}
 *   decomposition       {"beta": [...], "gamma": [...], "sigma": [...]}
 */

inline nlohmann::json to_json(const QPoly& p) { return nlohmann::json(p.coeffs()); }

inline QPoly qpoly_from_json(const nlohmann::json& j) {
  return QPoly(j.get<std::vector<QPoly::Coeff>>());
}

inline nlohmann::json to_json(const Permutation& p) { return nlohmann::json(p.values()); }

inline Permutation permutation_from_json(const nlohmann::json& j) {
  return Permutation::from_one_line(j.get<std::vector<int>>());
}

inline nlohmann::json to_json(const Partition& p) { return nlohmann::json(p.parts()); }

inline Partition partition_from_json(const nlohmann::json& j) {
  return Partition(j.get<std::vector<int>>());
}

inline nlohmann::json to_json(const LabeledPartition& lp) {
  return nlohmann::json{{"mu", lp.mu.parts()}, {"pi", lp.pi.values()}};
}

inline LabeledPartition labeled_partition_from_json(const nlohmann::json& j) {
  return LabeledPartition(partition_from_json(j.at("mu")), permutation_from_json(j.at("pi")));
}

inline nlohmann::json to_json(const Decomposition& d) {
  return nlohmann::json{
      {"beta", d.beta.parts()}, {"gamma", d.gamma.parts()}, {"sigma", d.sigma.values()}};
}

inline Decomposition decomposition_from_json(const nlohmann::json& j) {
  return Decomposition(partition_from_json(j.at("beta")), partition_from_json(j.at("gamma")),
                       permutation_from_json(j.at("sigma")));
}

}  // namespace qmaj
