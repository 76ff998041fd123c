// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace photrans {

// Power conversions. All internal summation happens in linear milliwatts;
// dB/dBm only at module boundaries.
inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }
inline double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double ratio) { return 10.0 * std::log10(ratio); }

constexpr double kNsToS = 1e-9;
constexpr double kMwToW = 1e-3;
constexpr double kUwToMw = 1e-3;

}  // namespace photrans
