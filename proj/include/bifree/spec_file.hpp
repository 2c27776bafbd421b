#pragma once

// JSON distribution specs:
//
//   {"pairs": [{"id": "p0", "left_generators": ["x"], "right_generators": ["w"],
//               "max_degree": 4, "moments": {"x": "1/2", "x w": 1, ...},
//               "theta_moments": {...}}],
//    "perturbations": {"x y": 1}}
//
// Each pair carries exactly one of "moments" / "cumulants". "theta_moments"
// adds the conditional layer; "perturbations" adds deltas to the mixed
// moments of the bi-free product.

#include <filesystem>
#include <string_view>
#include <vector>

#include "bifree/distribution.hpp"
#include "bifree/words.hpp"

namespace bifree {

struct DistributionSpec {
  Alphabet alphabet;
  std::vector<PureDistribution> pures;
  WordTable perturbations;

  bool has_theta() const;
  // Bi-free product of the pures, with perturbations applied if present.
  JointDistribution distribution() const;
  // Conditionally bi-free product; every pair needs theta_moments.
  JointDistribution conditional_distribution() const;
};

DistributionSpec parse_spec(std::string_view json_text);
DistributionSpec load_spec(const std::filesystem::path& path);

}  // namespace bifree
