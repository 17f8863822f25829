#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lambdalat/checkers.hpp"
#include "lambdalat/instance_io.hpp"
#include "lambdalat/lambda_lattice.hpp"
#include "lambdalat/search.hpp"

namespace lambdalat {

struct ChainSummary {
  Element from = 0;
  std::size_t chains = 0;
  std::size_t min_length = 0;
  std::size_t max_length = 0;
  friend bool operator==(const ChainSummary&, const ChainSummary&) = default;
};

struct AlgebraFlags {
  bool lattice = false;
  bool monotone = false;
  bool modular = false;
  bool distributive = false;
  bool idempotent = false;
  friend bool operator==(const AlgebraFlags&, const AlgebraFlags&) = default;
};

/// Everything `check` reports about one instance.
struct ReportDocument {
  std::string name;
  std::vector<std::string> labels;
  bool directed = false;
  bool bounded = false;
  Verdict lu_covering;
  std::optional<std::vector<int>> heights;
  std::vector<ChainSummary> chains;  // empty without a top
  std::optional<AcuteCharacterization> acute;
  // Present only for λ-lattices.
  std::optional<AxiomReport> axioms;
  std::optional<PropertyReport> properties;
  std::optional<AlgebraFlags> algebra;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

ReportDocument build_report(const ParsedInstance& instance, std::string_view name);
std::string render_text(const ReportDocument& doc);

using nlohmann::json;

void to_json(json& j, const Verdict& v);
void from_json(const json& j, Verdict& v);
void to_json(json& j, const AxiomReport& r);
void from_json(const json& j, AxiomReport& r);
void to_json(json& j, const PropertyReport& r);
void from_json(const json& j, PropertyReport& r);
void to_json(json& j, const AcuteCharacterization& a);
void from_json(const json& j, AcuteCharacterization& a);
void to_json(json& j, const ReportDocument& doc);
void from_json(const json& j, ReportDocument& doc);

json verification_json(const VerificationResult& result);

}  // namespace lambdalat
