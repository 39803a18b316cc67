#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cotq/serialize.hpp"

namespace cotq {

enum class CheckStatus { Pass, Fail, ExpectedFail };

std::string_view to_string(CheckStatus status) noexcept;

struct CheckRecord {
  std::string id;          // "<family>.<check>", e.g. "divpow.closed-form"
  std::string coalgebra;   // canonical spec string
  std::string form;        // canonical form spec, or "-" when no form is involved
  std::string parameters;  // human readable ranges, e.g. "k,n<=25"
  CheckStatus status = CheckStatus::Pass;
  std::optional<std::string> witness;
  double elapsed_ms = 0.0;
};

struct VerifyOptions {
  /// "all", "manin", "divpow", "negdeg" or "matrix".
  std::string scope = "all";
  std::uint64_t seed = 0;
  /// Echoed defaults; q is used for every Manin check.
  std::string q = "2/3";
};

struct VerificationReport {
  VerifyOptions options;
  /// Sorted by (id, coalgebra, form, parameters).
  std::vector<CheckRecord> records;

  std::size_t count(CheckStatus status) const;
  bool ok() const { return count(CheckStatus::Fail) == 0; }
};

/// Runs every closed-form, classification, antilinearity, coassociativity,
/// morphism, star-duality, Gram and projection check in `options.scope`.
/// Throws InvalidParameter for an unknown scope.
VerificationReport run_verification(const VerifyOptions& options);

/// Elapsed times are emitted only when `timing` is set, keeping default
/// output byte-identical across runs.
Json to_json(const VerificationReport& report, bool timing);
std::string to_text(const VerificationReport& report, bool timing, bool color);
std::string to_csv(const VerificationReport& report, bool timing);

}  // namespace cotq
