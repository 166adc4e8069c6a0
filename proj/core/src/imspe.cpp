#include "oudesign/imspe.hpp"

#include <cmath>

#include "oudesign/errors.hpp"

namespace oudesign {
namespace {

// cum[k] = d_0 + ... + d_{k-1}; distances between points are differences of
// these gap sums.
std::vector<double> gap_prefix(const Design& design) {
  const auto d = design.gaps();
  std::vector<double> cum(design.size(), 0.0);
  for (std::size_t k = 0; k < d.size(); ++k) cum[k + 1] = cum[k] + d[k];
  return cum;
}

double rho_entry(std::size_t i, std::size_t j, const std::vector<double>& cum,
                 double lambda) {
  if (j > i) std::swap(i, j);
  const double total = cum.back();
  const double span = cum[i] - cum[j];
  const double head = cum[j];
  const double tail = total - cum[i];
  const double e_span = std::exp(-lambda * span);
  return (2.0 * e_span - std::exp(-lambda * (2.0 * head + span)) -
          std::exp(-lambda * (span + 2.0 * tail))) /
             (2.0 * lambda) +
         span * e_span;
}

double vee_entry(std::size_t i, std::size_t j, const std::vector<double>& cum, double lambda,
                 double omega) {
  const double total = cum.back();
  const double denom = lambda * lambda + omega * omega;
  const double between = std::abs(cum[i] - cum[j]);
  const double head_i = cum[i];
  const double head_j = cum[j];
  const double tail_i = total - cum[i];
  const double tail_j = total - cum[j];
  return 2.0 * lambda / denom * std::cos(omega * between) +
         std::exp(-lambda * head_i) / denom *
             (omega * std::sin(omega * head_j) - lambda * std::cos(omega * head_j)) +
         std::exp(-lambda * tail_i) / denom *
             (omega * std::sin(omega * tail_j) - lambda * std::cos(omega * tail_j));
}

void check_index(std::size_t i, std::size_t j, const Design& design) {
  if (i >= design.size() || j >= design.size()) {
    throw ArgumentError("point index out of range");
  }
}

}  // namespace

double g_scalar(double d, const OuParams& params) {
  if (!(d >= 0.0)) throw ArgumentError("g_scalar requires d >= 0");
  if (d == 0.0) return 0.0;
  const double e1 = std::exp(-params.lambda() * d);
  const double num = 1.0 - 2.0 * e1 * std::cos(params.omega() * d) + e1 * e1;
  return num / -std::expm1(-2.0 * params.lambda() * d);
}

double fim_G(const Design& design, const OuParams& params) {
  double g = 1.0;
  for (double d : design.gaps()) g += g_scalar(d, params);
  return g;
}

RhoVeeTable RhoVeeTable::build(const Design& design, const OuParams& params) {
  const auto n = static_cast<Eigen::Index>(design.size());
  const auto cum = gap_prefix(design);
  RhoVeeTable table{Eigen::MatrixXd(n, n), Eigen::MatrixXd(n, n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double r = rho_entry(static_cast<std::size_t>(i), static_cast<std::size_t>(j), cum,
                                 params.lambda());
      table.rho(i, j) = r;
      table.rho(j, i) = r;
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      table.vee(i, j) = vee_entry(static_cast<std::size_t>(i), static_cast<std::size_t>(j), cum,
                                  params.lambda(), params.omega());
    }
  }
  return table;
}

double rho(std::size_t i, std::size_t j, const Design& design, const OuParams& params) {
  check_index(i, j, design);
  return rho_entry(i, j, gap_prefix(design), params.lambda());
}

double vee(std::size_t i, std::size_t j, const Design& design, const OuParams& params) {
  check_index(i, j, design);
  return vee_entry(i, j, gap_prefix(design), params.lambda(), params.omega());
}

ImspeBreakdown imspe_closed(const Design& design, const OuParams& params) {
  const std::size_t n = design.size();
  const std::size_t last = n - 1;
  const double lambda = params.lambda();
  const double omega = params.omega();
  const auto d = design.gaps();
  const auto cum = gap_prefix(design);
  const double total = cum.back();
  const auto table = RhoVeeTable::build(design, params);
  const auto& r = table.rho;
  const auto& v = table.vee;
  auto R = [&](std::size_t i, std::size_t j) {
    return r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  };
  auto V = [&](std::size_t i, std::size_t j) {
    return v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  };

  std::vector<double> pi(n - 1), denom(n - 1);
  for (std::size_t i = 0; i < n - 1; ++i) {
    pi[i] = std::exp(-lambda * d[i]);
    denom[i] = -std::expm1(-2.0 * lambda * d[i]);
  }

  ImspeBreakdown out;
  out.g_values.resize(n - 1);
  out.G = 1.0;
  for (std::size_t i = 0; i < n - 1; ++i) {
    out.g_values[i] = g_scalar(d[i], params);
    out.G += out.g_values[i];
  }

  // rho_{i,i} - 2 pi_i rho_{i+1,i} + pi_i^2 rho_{i+1,i+1}, shared by A_n and B_n.
  std::vector<double> rho_combo(n - 1);
  for (std::size_t i = 0; i < n - 1; ++i) {
    rho_combo[i] = R(i, i) - 2.0 * pi[i] * R(i + 1, i) + pi[i] * pi[i] * R(i + 1, i + 1);
  }

  out.A_n = R(last, last);
  for (std::size_t i = 0; i < n - 1; ++i) out.A_n += rho_combo[i] / denom[i];

  auto& b = out.b_terms;
  b[0] = 1.0 - 2.0 * V(last, last) + R(last, last);
  for (std::size_t i = 0; i < n - 1; ++i) {
    const double p = pi[i];
    b[1] -= 2.0 * ((V(i, i) - p * V(i, i + 1)) - p * (V(i + 1, i) - p * V(i + 1, i + 1))) /
            denom[i];
    b[2] += 2.0 * (R(last, i) - p * R(last, i + 1)) *
            (std::cos(omega * (total - cum[i])) - p * std::cos(omega * (total - cum[i + 1]))) /
            denom[i];
    b[3] += rho_combo[i] * (1.0 - 2.0 * p * std::cos(omega * d[i]) + p * p) /
            (denom[i] * denom[i]);
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const double pi_i = pi[i];
      const double pi_j = pi[j];
      const double rho_part = R(i, j) - pi_i * R(i + 1, j) - pi_j * R(i, j + 1) +
                              pi_i * pi_j * R(i + 1, j + 1);
      const double cos_part = std::cos(omega * (cum[i] - cum[j])) -
                              pi_i * std::cos(omega * (cum[i + 1] - cum[j])) -
                              pi_j * std::cos(omega * (cum[i] - cum[j + 1])) +
                              pi_i * pi_j * std::cos(omega * (cum[i + 1] - cum[j + 1]));
      b[4] += 2.0 * rho_part * cos_part / (denom[i] * denom[j]);
    }
  }
  out.B_n = b[0] + b[1] + b[2] + b[3] + b[4];
  out.value = 2.0 * (1.0 - out.A_n + out.B_n / out.G);
  return out;
}

}  // namespace oudesign
