#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace physarum {

// A stimulus kind ("oat", "light", "heat", ...). Names are stored lowercase;
// parsing is case-insensitive. Validity against a catalog is checked where a
// catalog is available (see ResponseModel::parse_stimuli).
class Stimulus {
 public:
  explicit Stimulus(std::string_view name);

  const std::string& name() const noexcept { return name_; }

  auto operator<=>(const Stimulus&) const = default;

 private:
  std::string name_;
};

// An unordered combination of stimuli; empty set = control. Members are kept
// deduplicated and sorted alphabetically, which fixes display order, hashing
// and serialization order.
class StimulusSet {
 public:
  StimulusSet() = default;
  explicit StimulusSet(std::vector<Stimulus> members);

  // Parses "oat,heat" (separator ',' or '+'). "", "none" and "control" give
  // the empty set. Names are validated for shape only, not against a catalog.
  static StimulusSet parse(std::string_view text);

  bool empty() const noexcept { return members_.empty(); }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(const Stimulus& s) const;
  const std::vector<Stimulus>& members() const noexcept { return members_; }

  StimulusSet with(const Stimulus& s) const;

  // "control" for the empty set, otherwise "heat+oat" style.
  std::string to_string() const;

  auto operator<=>(const StimulusSet&) const = default;

 private:
  std::vector<Stimulus> members_;
};

}  // namespace physarum
