#include "oudesign/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>

#include <json.hpp>

namespace oudesign::io {
namespace {

using nlohmann::ordered_json;

ordered_json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round_sig12(v);
}

ordered_json num_array(std::span<const double> values) {
  ordered_json out = ordered_json::array();
  for (double v : values) out.push_back(num(v));
  return out;
}

ordered_json params_json(const OuParams& params) {
  ordered_json p;
  p["lambda"] = num(params.lambda());
  p["omega"] = num(params.omega());
  p["sigma"] = num(params.sigma());
  p["normalized"] = params.is_normalized();
  p["m1"] = num(params.m1());
  p["m2"] = num(params.m2());
  return p;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

class CsvBuilder {
 public:
  explicit CsvBuilder(std::initializer_list<const char*> header) {
    bool first = true;
    for (const char* h : header) {
      if (!first) out_ << ',';
      out_ << h;
      first = false;
    }
    out_ << '\n';
  }
  CsvBuilder& cell(double v) { return cell(format_number(v)); }
  CsvBuilder& cell(const std::string& v) {
    if (!row_start_) out_ << ',';
    out_ << v;
    row_start_ = false;
    return *this;
  }
  void end_row() {
    out_ << '\n';
    row_start_ = true;
  }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
  bool row_start_ = true;
};

std::string joined(std::span<const double> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ';';
    out += format_number(values[i]);
  }
  return out;
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

double round_sig12(double value) {
  if (!std::isfinite(value) || value == 0.0) return value;
  return std::strtod(format_number(value).c_str(), nullptr);
}

std::string profile_csv(const std::vector<ProfileRow>& rows) {
  CsvBuilder csv{"x", "mspe"};
  for (const auto& r : rows) {
    csv.cell(r.x).cell(r.mspe);
    csv.end_row();
  }
  return csv.str();
}

std::string surface_csv(const std::vector<SurfaceRow>& rows) {
  CsvBuilder csv{"lambda", "omega", "imspe"};
  for (const auto& r : rows) {
    csv.cell(r.lambda).cell(r.omega).cell(r.imspe);
    csv.end_row();
  }
  return csv.str();
}

std::string xd_surface_csv(const std::vector<XdRow>& rows) {
  CsvBuilder csv{"d", "x", "mspe"};
  for (const auto& r : rows) {
    csv.cell(r.d).cell(r.x).cell(r.mspe);
    csv.end_row();
  }
  return csv.str();
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  CsvBuilder csv{"d", "imspe"};
  for (const auto& r : rows) {
    csv.cell(r.d).cell(r.imspe);
    csv.end_row();
  }
  return csv.str();
}

std::string paths_csv(const std::vector<SamplePath>& paths) {
  CsvBuilder csv{"path", "t", "z1", "z2"};
  for (std::size_t p = 0; p < paths.size(); ++p) {
    for (std::size_t k = 0; k < paths[p].times.size(); ++k) {
      csv.cell(std::to_string(p)).cell(paths[p].times[k]);
      csv.cell(paths[p].values[k](0)).cell(paths[p].values[k](1));
      csv.end_row();
    }
  }
  return csv.str();
}

std::string series_csv(const PolarMotionSeries& series) {
  CsvBuilder csv{"epoch", "x", "y"};
  for (std::size_t k = 0; k < series.size(); ++k) {
    csv.cell(series.epochs[k]).cell(series.x[k]).cell(series.y[k]);
    csv.end_row();
  }
  return csv.str();
}

std::string imspe_json(const Design& design, const OuParams& params,
                       const ImspeBreakdown& breakdown,
                       const std::optional<QuadratureResult>& oracle) {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["params"] = params_json(params);
  j["design"] = num_array(design.points());
  j["g_values"] = num_array(breakdown.g_values);
  j["G"] = num(breakdown.G);
  j["A_n"] = num(breakdown.A_n);
  j["B_n"] = num(breakdown.B_n);
  j["B_terms"] = num_array(breakdown.b_terms);
  j["imspe"] = num(breakdown.value);
  if (oracle) {
    j["quadrature"] = num(oracle->value);
    j["quadrature_error_estimate"] = num(oracle->error_estimate);
    j["relative_gap"] = num(std::abs(breakdown.value - oracle->value) / breakdown.value);
  }
  return dump(j);
}

std::string entropy_json(const Design& design, const OuParams& params, const EntropyValue& value,
                         const DeterminantArbitration& arbitration) {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["params"] = params_json(params);
  j["design"] = num_array(design.points());
  j["logdet"] = num(value.logdet);
  j["entropy"] = num(value.value);
  ordered_json a;
  a["oracle_logdet"] = num(arbitration.oracle);
  a["squared_form_logdet"] = num(arbitration.squared_form);
  a["printed_form_logdet"] = num(arbitration.printed_form);
  a["squared_form_matches"] = arbitration.squared_matches;
  a["printed_form_matches"] = arbitration.printed_matches;
  a["printed_form_defined"] = std::isfinite(arbitration.printed_form);
  j["determinant_arbitration"] = a;
  return dump(j);
}

std::string optimization_json(const OuParams& params, Criterion criterion,
                              const OptimizationResult& result) {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["criterion"] = std::string(to_string(criterion));
  j["params"] = params_json(params);
  j["design"] = num_array(result.design.points());
  j["gaps"] = num_array(result.design.gaps());
  j["value"] = num(result.value);
  ordered_json trace = ordered_json::array();
  for (const auto& t : result.trace) {
    ordered_json e;
    e["start"] = t.index;
    e["initial_gaps"] = num_array(t.initial_gaps);
    e["final_gaps"] = num_array(t.final_gaps);
    e["value"] = num(t.value);
    e["iterations"] = t.iterations;
    e["converged"] = t.converged;
    trace.push_back(e);
  }
  j["trace"] = trace;
  return dump(j);
}

std::string estimation_json(const EstimationResult& r, double cycles_per_year, double dt) {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["cycles_per_year"] = num(cycles_per_year);
  j["dt"] = num(dt);
  j["lambda_hat"] = num(r.lambda_hat);
  j["omega_hat"] = num(r.omega_hat);
  j["sigma_hat"] = num(r.sigma_hat);
  j["lambda_se"] = num(r.lambda_se);
  j["omega_se"] = num(r.omega_se);
  j["m_hat"] = {num(r.m_hat.real()), num(r.m_hat.imag())};
  j["mean_hat"] = {num(r.mean_hat.real()), num(r.mean_hat.imag())};
  j["transition_hat"] = {{num(r.transition_hat(0, 0)), num(r.transition_hat(0, 1))},
                         {num(r.transition_hat(1, 0)), num(r.transition_hat(1, 1))}};
  j["decay_hat"] = num(r.decay_hat);
  j["innovation_variance"] = num(r.innovation_variance);
  j["sample_count"] = r.sample_count;
  j["low_confidence"] = r.low_confidence;
  j["aliasing_flag"] = r.aliasing_flag;
  return dump(j);
}

std::string efficiency_csv(const std::vector<EfficiencyRow>& rows) {
  CsvBuilder csv{"year", "lambda", "omega", "n", "imspe_optimal", "imspe_equispaced",
                 "rel_eff_pct", "optimal_design", "ref_imspe_optimal",
                 "ref_imspe_equispaced", "ref_rel_eff_pct", "deviation_pp"};
  for (const auto& row : rows) {
    const auto& r = row.report;
    csv.cell(row.reference ? std::to_string(row.reference->year) : std::string());
    csv.cell(r.params.lambda()).cell(r.params.omega()).cell(std::to_string(r.n));
    csv.cell(r.imspe_optimal).cell(r.imspe_equispaced).cell(r.relative_efficiency_pct);
    csv.cell(joined(r.optimal_design));
    if (row.reference) {
      csv.cell(row.reference->imspe_optimal).cell(row.reference->imspe_equispaced);
      csv.cell(row.reference->relative_efficiency_pct);
      csv.cell(r.relative_efficiency_pct - row.reference->relative_efficiency_pct);
    } else {
      csv.cell(std::string()).cell(std::string()).cell(std::string()).cell(std::string());
    }
    csv.end_row();
  }
  return csv.str();
}

std::string efficiency_report_json(const std::vector<EfficiencyRow>& rows, double tolerance_pp) {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["tolerance_pp"] = num(tolerance_pp);
  ordered_json cells = ordered_json::array();
  ordered_json discrepancies = ordered_json::array();
  std::size_t within = 0;
  for (const auto& row : rows) {
    const auto& r = row.report;
    ordered_json c;
    c["lambda"] = num(r.params.lambda());
    c["omega"] = num(r.params.omega());
    c["n"] = r.n;
    c["imspe_optimal"] = num(r.imspe_optimal);
    c["imspe_equispaced"] = num(r.imspe_equispaced);
    c["rel_eff_pct"] = num(r.relative_efficiency_pct);
    c["optimal_design"] = num_array(r.optimal_design);
    if (row.reference) {
      const double dev = r.relative_efficiency_pct - row.reference->relative_efficiency_pct;
      const bool ok = std::abs(dev) <= tolerance_pp;
      c["year"] = row.reference->year;
      c["ref_imspe_optimal"] = num(row.reference->imspe_optimal);
      c["ref_imspe_equispaced"] = num(row.reference->imspe_equispaced);
      c["ref_rel_eff_pct"] = num(row.reference->relative_efficiency_pct);
      c["deviation_pp"] = num(dev);
      c["within_tolerance"] = ok;
      // Absolute values are on an unstated scale; report their ratio only.
      c["abs_scale_ratio_equispaced"] = num(row.reference->imspe_equispaced / r.imspe_equispaced);
      if (ok) {
        ++within;
      } else {
        discrepancies.push_back(c);
      }
    }
    cells.push_back(c);
  }
  j["cells"] = cells;
  j["cells_within_tolerance"] = within;
  j["discrepancies"] = discrepancies;

  // Printed optimal IMSPE should not increase with n for a fixed parameter set.
  std::map<int, std::vector<ReferenceCell>> by_year;
  for (const auto& row : rows) {
    if (row.reference) by_year[row.reference->year].push_back(*row.reference);
  }
  ordered_json notes = ordered_json::array();
  for (auto& [year, refs] : by_year) {
    std::sort(refs.begin(), refs.end(),
              [](const ReferenceCell& a, const ReferenceCell& b) { return a.n < b.n; });
    for (std::size_t k = 1; k < refs.size(); ++k) {
      if (refs[k].imspe_optimal > refs[k - 1].imspe_optimal) {
        ordered_json note;
        note["year"] = year;
        note["issue"] = "printed optimal IMSPE increases with n (violates monotone refinement)";
        note["n_from"] = refs[k - 1].n;
        note["n_to"] = refs[k].n;
        note["printed_from"] = num(refs[k - 1].imspe_optimal);
        note["printed_to"] = num(refs[k].imspe_optimal);
        notes.push_back(note);
      }
    }
  }
  j["reference_consistency_notes"] = notes;
  return dump(j);
}

}  // namespace oudesign::io
