// SPDX-License-Identifier: Apache-2.0
#include "photrans/device_models.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "photrans/units.hpp"

namespace photrans {

void MrPhysical::validate() const {
  if (!(radius_um > 0.0)) throw std::invalid_argument("MrPhysical: radius must be > 0");
  if (resonance_order < 1) throw std::invalid_argument("MrPhysical: resonance order must be >= 1");
  if (!(effective_index > 0.0)) throw std::invalid_argument("MrPhysical: effective index must be > 0");
}

void BankGeometry::validate() const {
  if (!(q_factor > 0.0)) throw std::invalid_argument("BankGeometry: Q must be > 0");
  if (!(channel_spacing_nm > 0.0)) throw std::invalid_argument("BankGeometry: channel spacing must be > 0");
  if (num_channels < 1) throw std::invalid_argument("BankGeometry: need at least one channel");
  if ((num_channels - 1) * channel_spacing_nm > fsr_nm)
    throw std::invalid_argument("BankGeometry: channel comb exceeds one FSR");
}

void LossBudget::validate() const {
  auto nonneg = [](double v) { return v >= 0.0; };
  if (!nonneg(waveguide_propagation_db_per_cm) || !nonneg(splitter_db) || !nonneg(combiner_db) ||
      !nonneg(mr_through_db) || !nonneg(mr_modulation_db) || !nonneg(eo_tuning_db_per_cm) ||
      !nonneg(path_length_cm))
    throw std::invalid_argument("LossBudget: loss entries must be >= 0");
}

void DeviceTable::validate() const {
  for (const DeviceEntry* e : {&eo_tuning, &to_tuning, &vcsel, &photodetector, &soa, &dac, &adc,
                               &memristor_cell}) {
    if (e->latency_ns < 0.0 || e->power < 0.0)
      throw std::invalid_argument("DeviceTable: latencies and powers must be >= 0");
  }
}

double resonant_wavelength_nm(const MrPhysical& mr) {
  mr.validate();
  const double um = 2.0 * std::numbers::pi * mr.radius_um / mr.resonance_order * mr.effective_index;
  return um * 1000.0;
}

double crosstalk_coefficient(double lambda_i_nm, double lambda_j_nm, double q) {
  if (!(lambda_j_nm > 0.0)) throw std::invalid_argument("crosstalk_coefficient: lambda_j must be > 0");
  if (!(q > 0.0)) throw std::invalid_argument("crosstalk_coefficient: Q must be > 0");
  const double detune = 2.0 * q * (lambda_i_nm - lambda_j_nm) / lambda_j_nm;
  return 1.0 / (1.0 + detune * detune);
}

double mr_through_gamma(double lambda_i_nm, double lambda_k_nm, double q) {
  return crosstalk_coefficient(lambda_i_nm, lambda_k_nm, q);
}

double through_suppression(double lambda_i_nm, int channel_index_j, const BankGeometry& bank) {
  bank.validate();
  if (channel_index_j < 0 || channel_index_j >= bank.num_channels)
    throw std::out_of_range("through_suppression: channel index outside bank");
  double psi = 1.0;
  for (int k = 0; k < channel_index_j; ++k)
    psi *= mr_through_gamma(lambda_i_nm, bank.wavelength_nm(k), bank.q_factor);
  return psi;
}

double bank_snr_db(int victim_index, const BankGeometry& bank) {
  bank.validate();
  if (victim_index < 0 || victim_index >= bank.num_channels)
    throw std::out_of_range("bank_snr_db: victim index outside bank");
  if (bank.num_channels < 2) return std::numeric_limits<double>::infinity();

  const double lambda_v = bank.wavelength_nm(victim_index);
  const double signal_mw = dbm_to_mw(bank.input_power_dbm);
  double noise_mw = 0.0;
  for (int i = 0; i < bank.num_channels; ++i) {
    if (i == victim_index) continue;
    const double phi = crosstalk_coefficient(bank.wavelength_nm(i), lambda_v, bank.q_factor);
    // Coupling acts at the imprint array and again at the weight array of
    // the multiply stage, hence the squared factor.
    noise_mw += phi * phi * dbm_to_mw(bank.input_power_dbm);
  }
  return linear_to_db(signal_mw / noise_mw);
}

BankSnr bank_snr(const BankGeometry& bank) {
  bank.validate();
  BankSnr out;
  if (bank.num_channels < 2) {
    out.worst_db = std::numeric_limits<double>::infinity();
    out.average_db = out.worst_db;
    out.single_channel = true;
    return out;
  }
  double sum = 0.0;
  out.worst_db = std::numeric_limits<double>::infinity();
  for (int j = 0; j < bank.num_channels; ++j) {
    const double s = bank_snr_db(j, bank);
    sum += s;
    if (s < out.worst_db) {
      out.worst_db = s;
      out.worst_victim = j;
    }
  }
  out.average_db = sum / bank.num_channels;
  return out;
}

double fwhm_nm(double lambda_res_nm, double q) {
  if (!(q > 0.0)) throw std::invalid_argument("fwhm: Q must be > 0");
  return lambda_res_nm / q;
}

double tunable_range_nm(double lambda_res_nm, double q) {
  return 2.0 * fwhm_nm(lambda_res_nm, q);
}

double min_tunable_range_nm(int n_levels, double snr_db) {
  if (n_levels < 1) throw std::invalid_argument("min_tunable_range: need at least one level");
  return n_levels * std::pow(10.0, -snr_db / 10.0);
}

double photonic_loss_db(const LossBudget& budget, int mrs_traversed, int modulating_mrs) {
  budget.validate();
  if (mrs_traversed < 0 || modulating_mrs < 0)
    throw std::invalid_argument("photonic_loss_db: counts must be >= 0");
  return budget.waveguide_propagation_db_per_cm * budget.path_length_cm + budget.splitter_db +
         budget.combiner_db + mrs_traversed * budget.mr_through_db +
         modulating_mrs * budget.mr_modulation_db +
         budget.eo_tuning_db_per_cm * budget.path_length_cm;
}

double required_laser_power_dbm(double photo_loss_db, int n_wavelengths,
                                double detector_sensitivity_dbm) {
  if (n_wavelengths < 1)
    throw std::invalid_argument("required_laser_power: need at least one wavelength");
  return detector_sensitivity_dbm + photo_loss_db + 10.0 * std::log10(double(n_wavelengths));
}

}  // namespace photrans
