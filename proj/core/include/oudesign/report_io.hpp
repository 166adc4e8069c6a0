#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oudesign/entropy.hpp"
#include "oudesign/imspe.hpp"
#include "oudesign/optimize.hpp"
#include "oudesign/polar_data.hpp"
#include "oudesign/profiles.hpp"
#include "oudesign/quadrature.hpp"
#include "oudesign/simulate.hpp"

// Machine-readable output. CSV: comma-separated, one header row, '.' decimal
// separator, LF line endings. All numbers carry 12 significant digits.
namespace oudesign::io {

inline constexpr const char* kSchemaVersion = "oudesign-io/1";

std::string format_number(double value);
// Value rounded to 12 significant digits (for JSON emission).
double round_sig12(double value);

std::string profile_csv(const std::vector<ProfileRow>& rows);
std::string surface_csv(const std::vector<SurfaceRow>& rows);
std::string xd_surface_csv(const std::vector<XdRow>& rows);
std::string sweep_csv(const std::vector<SweepRow>& rows);
// Columns path,t,z1,z2.
std::string paths_csv(const std::vector<SamplePath>& paths);
// Columns epoch,x,y.
std::string series_csv(const PolarMotionSeries& series);

std::string imspe_json(const Design& design, const OuParams& params,
                       const ImspeBreakdown& breakdown,
                       const std::optional<QuadratureResult>& oracle);
std::string entropy_json(const Design& design, const OuParams& params, const EntropyValue& value,
                         const DeterminantArbitration& arbitration);
std::string optimization_json(const OuParams& params, Criterion criterion,
                              const OptimizationResult& result);
std::string estimation_json(const EstimationResult& result, double cycles_per_year, double dt);

// Efficiency table joined with the printed reference cells (matched on
// year/lambda/omega/n); cells without a reference leave those columns empty.
struct EfficiencyRow {
  EfficiencyReport report;
  std::optional<ReferenceCell> reference;
};
std::string efficiency_csv(const std::vector<EfficiencyRow>& rows);
// Discrepancy report: every cell with its computed and printed values and a
// within-tolerance flag, plus monotone-refinement notes on the printed values.
std::string efficiency_report_json(const std::vector<EfficiencyRow>& rows,
                                   double tolerance_pp);

}  // namespace oudesign::io
