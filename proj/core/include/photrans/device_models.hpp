// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace photrans {

// Physical description of a single microring resonator.
struct MrPhysical {
  double radius_um = 5.0;
  int resonance_order = 100;
  double effective_index = 2.4;

  void validate() const;  // throws std::invalid_argument
};

// Geometry and drive conditions of one WDM microring bank.
//
// Channel k sits at base_wavelength_nm + k * channel_spacing_nm; the chain
// of (num_channels - 1) spacings must fit inside one free spectral range.
struct BankGeometry {
  double q_factor = 6500.0;
  double channel_spacing_nm = 1.0;
  int num_channels = 17;
  double base_wavelength_nm = 1550.0;  // C-band convention
  double fsr_nm = 20.0;
  double input_power_dbm = 0.0;          // per channel, identical
  double detector_sensitivity_dbm = -20.0;

  void validate() const;
  double wavelength_nm(int k) const { return base_wavelength_nm + k * channel_spacing_nm; }
};

// Additive per-factor dB losses along one optical path.
struct LossBudget {
  double waveguide_propagation_db_per_cm = 1.0;
  double splitter_db = 0.13;
  double combiner_db = 0.9;
  double mr_through_db = 0.02;
  double mr_modulation_db = 0.72;
  double eo_tuning_db_per_cm = 6.0;
  double path_length_cm = 1.0;

  void validate() const;
};

// One (latency, power) pair per optoelectronic device class.
// Latency in ns. Power in mW except where the unit string says otherwise:
// eo_tuning is uW/nm of resonance shift, to_tuning is mW per FSR of shift,
// memristor_cell is uW.
struct DeviceEntry {
  double latency_ns = 0.0;
  double power = 0.0;
};

struct DeviceTable {
  DeviceEntry eo_tuning{20.0, 4.0};
  DeviceEntry to_tuning{4000.0, 27.5};
  DeviceEntry vcsel{0.07, 1.3};
  DeviceEntry photodetector{0.0058, 2.8};
  DeviceEntry soa{0.3, 2.2};
  DeviceEntry dac{0.29, 3.0};
  DeviceEntry adc{0.82, 3.1};
  DeviceEntry memristor_cell{0.1, 0.07};

  void validate() const;
};

// Resonant wavelength in nm of an MR described in um (radius) and a
// dimensionless effective index.
double resonant_wavelength_nm(const MrPhysical& mr);

// Lorentzian inter-channel coupling between wavelengths lambda_i and
// lambda_j for sharpness q. In (0, 1], equal to 1 iff lambda_i == lambda_j.
double crosstalk_coefficient(double lambda_i_nm, double lambda_j_nm, double q);

// Per-MR through factor; same kernel as crosstalk_coefficient so a future
// correction to the through model touches exactly one site.
double mr_through_gamma(double lambda_i_nm, double lambda_k_nm, double q);

// Product of through factors over all MRs preceding channel j in the bank.
// Empty product (j == 0) is exactly 1.
double through_suppression(double lambda_i_nm, int channel_index_j, const BankGeometry& bank);

struct BankSnr {
  double worst_db = 0.0;       // min over victim channels; +inf for 1 channel
  int worst_victim = 0;
  double average_db = 0.0;     // mean over victims, reported alongside
  bool single_channel = false; // no-crosstalk sentinel case
};

// Per-victim SNR of the bank in dB. The victim's own channel arrives at full
// power (its resonant MRs impose unit through factor); every other channel
// leaks into the victim's MAC result through the Lorentzian coupling of both
// bank arrays of the multiply stage, so each noise term carries the coupling
// squared. Inputs in dBm are converted to linear mW before summation.
double bank_snr_db(int victim_index, const BankGeometry& bank);

// Worst-case (and average) victim SNR; single-channel banks return the
// no-crosstalk sentinel (+inf) with single_channel set.
BankSnr bank_snr(const BankGeometry& bank);

// Resonance full width at half maximum, lambda_res / Q.
double fwhm_nm(double lambda_res_nm, double q);

// Usable resonance-shift span, 2 * FWHM.
double tunable_range_nm(double lambda_res_nm, double q);

// Lower bound on the tunable range for n_levels amplitude levels at the
// given SNR; a design is feasible iff tunable_range exceeds this bound.
double min_tunable_range_nm(int n_levels, double snr_db);

// Additive dB accounting over one optical path.
double photonic_loss_db(const LossBudget& budget, int mrs_traversed, int modulating_mrs);

// Minimal feasible laser power in dBm for one source driving n_wavelengths
// channels against the given path loss and detector sensitivity.
double required_laser_power_dbm(double photo_loss_db, int n_wavelengths,
                                double detector_sensitivity_dbm);

}  // namespace photrans
