#include "splitcomp/chooser.hpp"

#include "splitcomp/errors.hpp"

namespace splitcomp {

Chooser Chooser::replaying(const std::vector<Choice>& log) {
  std::vector<int> script;
  script.reserve(log.size());
  for (const auto& c : log) script.push_back(c.index);
  return Chooser(std::move(script));
}

int Chooser::pick(std::string_view point, int options) {
  if (options <= 0) throw DomainError("no admissible option at choice point '" + std::string(point) + "'");
  const std::size_t pos = log_.size();
  int index = pos < script_.size() ? script_[pos] : 0;
  if (index >= options) throw DomainError("replayed choice out of range at '" + std::string(point) + "'");
  log_.push_back({std::string(point), index, options});
  return index;
}

bool Chooser::advance() {
  for (std::size_t i = log_.size(); i-- > 0;) {
    if (log_[i].index + 1 < log_[i].options) {
      std::vector<int> next;
      next.reserve(i + 1);
      for (std::size_t k = 0; k < i; ++k) next.push_back(log_[k].index);
      next.push_back(log_[i].index + 1);
      script_ = std::move(next);
      log_.clear();
      return true;
    }
  }
  log_.clear();
  return false;
}

}  // namespace splitcomp
