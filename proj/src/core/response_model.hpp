#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/rng.hpp"
#include "core/stimulus.hpp"

namespace physarum {

// How frequency-change outcomes are drawn around (median, sd). The published
// statistics are a median and a standard deviation per stimulus combination;
// the underlying per-trial distribution is not published, so the family is a
// switch rather than a baked-in assumption. Normal treats the median as the
// mean. TruncatedNormal additionally floors draws at -100% (the oscillation
// frequency cannot go negative). Empirical resamples user-supplied values.
enum class DistributionFamily { Normal, TruncatedNormal, Empirical };

const char* distribution_family_name(DistributionFamily family);
DistributionFamily parse_distribution_family(const std::string& name);

struct ResponseEntry {
  StimulusSet stimuli;
  double median_change_pct = 0.0;
  double sd_change_pct = 0.0;
  std::uint32_t n_trials = 1;
  // True for catalog entries whose sd was not measured and defaults to the
  // oat-row sd; surfaced in serialized models.
  bool sd_extrapolated = false;
  // Per-trial changes for the Empirical family.
  std::vector<double> samples;
};

// Frequency-change statistics per stimulus combination. Immutable after
// construction; safe to share across threads. Lookup of a combination that
// was never measured is an error: combinations are not synthesized from the
// single-stimulus rows.
class ResponseModel {
 public:
  // The seven measured rows: control, oat, light, heat, heat+light,
  // light+oat, heat+oat. Normal family.
  static ResponseModel built_in();

  // built_in() plus the volatile-organic-chemical entries (farnesene +22.5%,
  // tridecane +17%). Those rows carry no measured sd and reuse the oat-row
  // sd, flagged sd_extrapolated.
  static ResponseModel built_in_extended();

  static ResponseModel from_json(const std::string& json_text);
  static ResponseModel load_file(const std::string& path);

  // Byte-stable (fixed key and entry order) round-trippable serialization.
  std::string to_json() const;

  DistributionFamily family() const noexcept { return family_; }
  void set_family(DistributionFamily family) { family_ = family; }

  bool has(const StimulusSet& stimuli) const;
  const ResponseEntry& entry(const StimulusSet& stimuli) const;
  const std::map<StimulusSet, ResponseEntry>& entries() const noexcept {
    return entries_;
  }

  // All stimulus kinds that appear in any entry, sorted.
  std::vector<std::string> catalog() const;

  // StimulusSet::parse plus catalog validation: unknown kinds are rejected
  // here, at parse time, rather than surfacing later as a failed lookup.
  StimulusSet parse_stimuli(std::string_view text) const;

  // One frequency-change draw (percent) for the combination, from the
  // configured family located at (median, sd). Deterministic given the rng
  // state. sd == 0 always yields the median.
  double sample_change(const StimulusSet& stimuli, Rng& rng) const;

  void add_entry(ResponseEntry entry);

 private:
  ResponseModel() = default;

  std::map<StimulusSet, ResponseEntry> entries_;
  DistributionFamily family_ = DistributionFamily::Normal;
};

}  // namespace physarum
