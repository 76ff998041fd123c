// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "photrans/arch_dse.hpp"
#include "photrans/device_models.hpp"
#include "photrans/mr_bank_dse.hpp"
#include "photrans/model_ir.hpp"
#include "photrans/perf_engine.hpp"

namespace photrans {

// Ingestion. Missing keys are hard errors; no silent defaults for device
// constants. Throws std::runtime_error with file and key context.
DeviceTable load_device_table(const std::string& path);
LossBudget load_loss_budget(const std::string& path);
ElectronicConstants load_electronic_constants(const std::string& path);
ModelSpec load_model_spec(const std::string& path);
std::vector<Baseline> load_baselines(const std::string& path);

// Minimal deterministic JSON value for report emission: keys are written in
// sorted order and floats in fixed scientific notation, so identical inputs
// produce byte-identical files.
struct JsonValue;
using JsonObject = std::map<std::string, JsonValue>;
using JsonArray = std::vector<JsonValue>;
struct JsonValue {
  std::variant<std::nullptr_t, bool, std::int64_t, double, std::string, JsonArray, JsonObject> v =
      nullptr;
  JsonValue() = default;
  JsonValue(bool b) : v(b) {}
  JsonValue(int i) : v(std::int64_t(i)) {}
  JsonValue(std::int64_t i) : v(i) {}
  JsonValue(double d) : v(d) {}
  JsonValue(const char* s) : v(std::string(s)) {}
  JsonValue(std::string s) : v(std::move(s)) {}
  JsonValue(JsonArray a) : v(std::move(a)) {}
  JsonValue(JsonObject o) : v(std::move(o)) {}
};
std::string dump_json(const JsonValue& value);

// Report serialization.
JsonObject to_json(const PerfReport& report);
std::string breakdown_csv(const PerfReport& report);
JsonObject to_json(const std::vector<MrBankDesign>& ranked, const DseGrid& grid);
std::string mrbank_csv(const std::vector<MrBankDesign>& ranked);
std::string frontier_csv(const std::vector<FrontierPoint>& frontier);
JsonObject to_json(const ArchDseResult& result, const ArchSearchSpace& space, int top_k = 20);
std::string arch_scatter_csv(const ArchDseResult& result);
std::string ratio_csv(const std::vector<RatioRow>& rows);

// Write via temp file + rename so readers never observe partial output.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace photrans
