#pragma once

// Recomputes each printed constant of the Xi-product bounds from the closed
// form it abbreviates. Deviations are reported, never corrected.

#include <cmath>
#include <string>
#include <vector>

#include "lllcount/constants.hpp"

namespace lllcount {

inline constexpr double kAuditFlagThreshold = 1e-2;

struct AuditEntry {
  std::string name;
  std::string definition;
  double printed_value;
  double recomputed_value;
  double deviation;
  bool flagged;  // deviation > kAuditFlagThreshold
};

struct AuditReport {
  std::vector<AuditEntry> entries;

  const AuditEntry* find(const std::string& name) const {
    for (const auto& e : entries)
      if (e.name == name) return &e;
    return nullptr;
  }
  bool any_flagged() const {
    for (const auto& e : entries)
      if (e.flagged) return true;
    return false;
  }
};

inline AuditReport constant_audit() {
  AuditReport report;
  auto add = [&report](std::string name, std::string definition, double printed_value, double recomputed_value) {
    const double dev = std::fabs(printed_value - recomputed_value);
    report.entries.push_back(
        {std::move(name), std::move(definition), printed_value, recomputed_value, dev, dev > kAuditFlagThreshold});
  };
  add("xi_lower_integral_13_0284", "25/4 ln5 - 25/8 + 10 ln5 - 10", printed::kXiLowerIntegral,
      recomputed::xi_lower_integral());
  add("xi_upper_integral_2_08647", "9/4 ln3 - 9/8 + 15/2 ln3 - 15/2", printed::kXiUpperIntegral,
      recomputed::xi_upper_integral());
  add("xi_lower_const_0_9924", "13.0284-term - 11/2 ln2 - 5 ln pi - 5/2", printed::kXiLowerConst,
      recomputed::xi_lower_const());
  add("xi_upper_const_11_4495",
      "-(2.08647-term + sup_{n>=22} excess of ln(n-2)->ln n step - 11/2 ln2 - 5 ln pi - 5/2)",
      printed::kXiUpperConst, recomputed::xi_upper_const());
  add("xi_upper_const_11_4495_printed_chain", "same with the printed step constant -3/2",
      printed::kXiUpperConst, recomputed::xi_upper_const_printed_chain());
  add("xi_prod_2_5", "sum_{s=2}^{5} -ln xi(s)", printed::kXiInvProd2to5, recomputed::xi_inv_prod_2to5());
  add("xi_lower_lemma_const_2_8515", "0.9924-term + xi_prod_2_5", printed::kXiLowerLemmaConst,
      recomputed::xi_lower_lemma_const());
  add("xi_upper_lemma_const_9_5903", "11.4495-term - xi_prod_2_5", printed::kXiUpperLemmaConst,
      recomputed::xi_upper_lemma_const());
  return report;
}

}  // namespace lllcount
