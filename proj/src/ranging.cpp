#include "golomb/ranging.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace golomb::ranging {

RangingMode RangingMode::pdoa(double delta_f, double kappa) {
  if (!(delta_f > 0.0)) throw std::invalid_argument("pdoa: delta_f must be > 0");
  if (!(kappa > 0.0)) throw std::invalid_argument("pdoa: kappa must be > 0");
  RangingMode m;
  m.mode = Mode::kPdoa;
  m.delta_f = delta_f;
  m.kappa = kappa;
  return m;
}

RangingMode RangingMode::toa(double sigma_tau) {
  if (!(sigma_tau > 0.0)) throw std::invalid_argument("toa: sigma_tau must be > 0");
  RangingMode m;
  m.mode = Mode::kToa;
  m.sigma_tau = sigma_tau;
  return m;
}

double omega_from_distance(double distance, const RangingMode& mode) {
  if (distance < 0.0) throw std::invalid_argument("distance must be >= 0");
  if (mode.mode == Mode::kPdoa)
    return 4.0 * std::numbers::pi * mode.delta_f * distance / kSpeedOfLight;
  return 2.0 * distance / kSpeedOfLight;
}

double distance_from_omega(double omega, const RangingMode& mode) {
  if (omega < 0.0) throw std::invalid_argument("omega must be >= 0");
  if (mode.mode == Mode::kPdoa)
    return omega * kSpeedOfLight / (4.0 * std::numbers::pi * mode.delta_f);
  return omega * kSpeedOfLight / 2.0;
}

MeasurementSet sample_marks(double distance, const Ruler& ruler,
                            const RangingMode& mode, RandomStream& rng) {
  const double omega = omega_from_distance(distance, mode);
  const std::vector<int> marks = ruler.absolute_marks();

  MeasurementSet out;
  out.indices = marks;
  out.values.resize(static_cast<Eigen::Index>(marks.size()));
  out.expanded = false;
  out.mode = mode.mode;

  for (std::size_t k = 0; k < marks.size(); ++k) {
    const double mean = omega * marks[k];
    out.values[static_cast<Eigen::Index>(k)] =
        mode.mode == Mode::kPdoa ? rng.von_mises(wrap_angle(mean), mode.kappa)
                                 : rng.normal(mean, mode.sigma_tau);
  }
  return out;
}

MeasurementSet expand_to_measures(const MeasurementSet& samples, const Ruler& ruler) {
  if (samples.expanded)
    throw std::invalid_argument("expand: samples already expanded");
  if (samples.indices != ruler.absolute_marks())
    throw std::invalid_argument("expand: samples do not match the ruler");
  if (!is_golomb(ruler))
    throw std::invalid_argument("expand: ruler must be Golomb (unambiguous pairs)");

  const int order = ruler.order();
  std::vector<std::pair<int, double>> entries;
  entries.reserve(static_cast<std::size_t>(order) * (order - 1) / 2);
  for (int k = 1; k < order; ++k) {
    for (int l = 0; l < k; ++l) {
      const int nu = samples.indices[k] - samples.indices[l];
      double value = samples.values[k] - samples.values[l];
      if (samples.mode == Mode::kPdoa) value = wrap_angle(value);
      entries.emplace_back(nu, value);
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  MeasurementSet out;
  out.expanded = true;
  out.mode = samples.mode;
  out.indices.reserve(entries.size());
  out.values.resize(static_cast<Eigen::Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out.indices.push_back(entries[i].first);
    out.values[static_cast<Eigen::Index>(i)] = entries[i].second;
  }
  return out;
}

}  // namespace golomb::ranging
