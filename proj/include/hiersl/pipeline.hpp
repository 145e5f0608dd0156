#pragma once

#include <string>

#include "hiersl/cgsi.hpp"
#include "hiersl/cks.hpp"
#include "hiersl/qctl.hpp"
#include "hiersl/qctl_mc.hpp"
#include "hiersl/sli.hpp"

namespace hiersl {

enum class Verdict { True, False, Refused, Resource };

std::string verdict_name(Verdict v);
/// 0 TRUE, 1 FALSE, 2 REFUSED, 3 RESOURCE.
int exit_code(Verdict v);

struct RunOptions {
  std::size_t cap = 1000000;
  bool keep_dumps = false;
  bool prune_dead_states = true;
};

struct RunReport {
  Verdict verdict = Verdict::Refused;
  McStats stats;
  std::string witness;  // hierarchy witness when refused
  std::string resource_stage;
  std::string resource_subformula;
  std::size_t resource_states = 0;
  std::size_t compiled_size = 0;  // QCTL*i formula size
  double millis = 0;
};

/// Checks hierarchy, compiles, then model checks an SLi sentence.
RunReport check_sli(const Cgsi& g, const Sli& phi, const RunOptions& opts = {});
/// Model checking of a QCTL*i state formula on a CKS.
RunReport check_qctl(const Cks& k, const Qctl& phi, const RunOptions& opts = {});

/// Verdict line, then the witness or resource details, then stage
/// statistics when asked for.
std::string format_report(const RunReport& r, bool with_stats);

}  // namespace hiersl
