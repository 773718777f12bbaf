#pragma once

#include <ostream>
#include <vector>

#include "scopegate/experiment.hpp"

namespace scopegate {

// `axis,seed,precision,recall,f1,model,hyperparams` — one row per seed plus
// a `mean` row per axis, metrics at full precision.
void write_report_csv(std::ostream& out, const std::vector<EvalReport>& reports);

// Fixed-width comparison table (Pr/Re/F1 per feature axis), metrics rounded
// to two decimals.
void write_summary_table(std::ostream& out, const std::vector<EvalReport>& reports);

}  // namespace scopegate
