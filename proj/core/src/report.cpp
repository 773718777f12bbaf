#include "scopegate/report.hpp"

#include <cstdio>
#include <iomanip>

#include "scopegate/csv.hpp"

namespace scopegate {

void write_report_csv(std::ostream& out, const std::vector<EvalReport>& reports) {
  out << "axis,seed,precision,recall,f1,model,hyperparams\n";
  for (const EvalReport& r : reports) {
    const std::string model(model_kind_name(r.model));
    for (const SeedOutcome& s : r.per_seed) {
      out << join_csv_row({r.axis_label, std::to_string(s.seed),
                           format_double(s.metrics.precision),
                           format_double(s.metrics.recall),
                           format_double(s.metrics.f1), model,
                           s.chosen.describe(r.model)})
          << '\n';
    }
    out << join_csv_row({r.axis_label, "mean", format_double(r.mean.precision),
                         format_double(r.mean.recall), format_double(r.mean.f1),
                         model, ""})
        << '\n';
  }
}

void write_summary_table(std::ostream& out,
                         const std::vector<EvalReport>& reports) {
  size_t width = 12;
  for (const EvalReport& r : reports) width = std::max(width, r.axis_label.size());

  const auto round2 = [](double v) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return std::string(buf);
  };

  out << std::left << std::setw(static_cast<int>(width) + 2) << "features"
      << std::right << std::setw(7) << "Pr" << std::setw(7) << "Re"
      << std::setw(7) << "F1" << "  model\n";
  for (const EvalReport& r : reports) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << r.axis_label
        << std::right << std::setw(7) << round2(r.mean.precision)
        << std::setw(7) << round2(r.mean.recall) << std::setw(7)
        << round2(r.mean.f1) << "  " << model_kind_name(r.model) << '\n';
  }
}

}  // namespace scopegate
