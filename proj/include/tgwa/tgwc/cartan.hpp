#pragma once

#include <map>
#include <optional>
#include <string>

#include "tgwa/exact/errors.hpp"
#include "tgwa/tgwc/datum.hpp"
#include "tgwa/tgwc/linalg.hpp"

namespace tgwa {

struct FinitisticData {
  std::vector<Ratfun> basis;  // iterates of sigma_i^{+-k}(t_j) in insertion order
  Matrix restriction;         // sigma_i on the span, columns in basis coordinates
  UniPoly min_poly;
};

struct FinitisticResult {
  bool finitistic = false;
  std::size_t explored = 0;  // independent vectors found before stopping
  std::optional<FinitisticData> data;
};

constexpr std::size_t default_finitistic_bound = 32;

// 0-based i != j.
FinitisticResult finitistic_data(const Tgwd& d, std::size_t i, std::size_t j,
                                 std::size_t bound = default_finitistic_bound);

struct NotFinitistic : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct CartanData {
  std::vector<std::vector<int>> matrix;
  std::map<std::pair<std::size_t, std::size_t>, FinitisticData> pairs;
  std::string label;  // "(A1)^n", "A1", "A2" or "unclassified"
};

CartanData cartan_matrix(const Tgwd& d, std::size_t bound = default_finitistic_bound);
std::string classify_cartan(const std::vector<std::vector<int>>& c);
std::string cartan_to_string(const std::vector<std::vector<int>>& c);

}  // namespace tgwa
