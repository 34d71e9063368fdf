#pragma once

#include <string>
#include <vector>

#include "arborium/arbor.hpp"

namespace arborium {

/// Outcome of comparing one recursion (or identity) against its brute-force counterpart.
struct CrossCheckItem {
  std::string name;
  bool pass = false;
  std::string recursion;  // value from the recursion / closed form
  std::string oracle;     // value from enumeration
};

struct CrossCheckResult {
  std::string arbor;
  std::vector<CrossCheckItem> items;
  bool pass = false;
};

struct CrossCheckOptions {
  /// Perturbs the recursion-side Zeta polynomial; exists to prove the harness can fail.
  bool inject_fault = false;
  /// Arbors up to this size are enumerated at every dilation u = 0..n+2.
  int full_enumeration_size = 6;
  /// Larger arbors are enumerated only up to this dilation; beyond it the convolution count is used.
  int max_dilation = 4;
};

/// Runs every recursion-vs-oracle comparison for one arbor: Zeta, K, M-triangle,
/// Ehrhart counts, volume, the |P_t| identities, M_t(1,Y) = 1, Laplace regularity and
/// independence from child order.
CrossCheckResult cross_check(const Arbor& t, const CrossCheckOptions& options = {});

}  // namespace arborium
