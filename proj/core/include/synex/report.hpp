#pragma once

#include <string>

#include "synex/agreement.hpp"
#include "synex/fuzzy.hpp"
#include "synex/masking.hpp"
#include "synex/tuning.hpp"

namespace synex {

enum class OutputFormat { text, json, tsv };

std::string render(const ExpansionResult& r, OutputFormat format);
std::string render(const AgreementReport& r, OutputFormat format);
std::string render(const TuningReport& r, OutputFormat format);
std::string render(const MaskingReport& r, OutputFormat format);

// Per-sample masking outcomes, one row per sample.
std::string masking_samples_tsv(const MaskingReport& r);

// Inverse of render(..., OutputFormat::json).
ExpansionResult expansion_from_json(const std::string& text);
AgreementReport agreement_from_json(const std::string& text);
TuningReport tuning_from_json(const std::string& text);
MaskingReport masking_from_json(const std::string& text);

} // namespace synex
