#include "core/stimulus.hpp"

#include <algorithm>
#include <cctype>

#include "core/errors.hpp"

namespace physarum {

namespace {

std::string normalize_name(std::string_view raw) {
  std::string name;
  name.reserve(raw.size());
  for (char c : raw) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (name.empty()) {
    fail(ErrorCode::UnknownStimulus, "empty stimulus name");
  }
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) {
      fail(ErrorCode::UnknownStimulus,
           "malformed stimulus name '" + std::string(raw) + "'");
    }
  }
  return name;
}

}  // namespace

Stimulus::Stimulus(std::string_view name) : name_(normalize_name(name)) {}

StimulusSet::StimulusSet(std::vector<Stimulus> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

StimulusSet StimulusSet::parse(std::string_view text) {
  std::vector<Stimulus> members;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find_first_of(",+", pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view token = text.substr(pos, next - pos);
    // trim
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
      token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
      token.remove_suffix(1);
    if (!token.empty()) {
      std::string lowered(token);
      std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                     [](unsigned char c) { return std::tolower(c); });
      if (lowered != "none" && lowered != "control") {
        members.emplace_back(token);
      }
    }
    if (next == text.size()) break;
    pos = next + 1;
  }
  return StimulusSet(std::move(members));
}

bool StimulusSet::contains(const Stimulus& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

StimulusSet StimulusSet::with(const Stimulus& s) const {
  std::vector<Stimulus> next = members_;
  next.push_back(s);
  return StimulusSet(std::move(next));
}

std::string StimulusSet::to_string() const {
  if (members_.empty()) return "control";
  std::string out;
  for (const auto& m : members_) {
    if (!out.empty()) out.push_back('+');
    out += m.name();
  }
  return out;
}

}  // namespace physarum
