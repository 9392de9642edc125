#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace splitcomp {

struct Choice {
  std::string point;
  int index = 0;
  int options = 0;

  friend bool operator==(const Choice&, const Choice&) = default;
};

/// Resolves the "choose one" steps of a construction. By default every choice
/// point takes option 0. A chooser built from a script replays recorded
/// indices, and `advance` walks every admissible combination in odometer order:
///
///   Chooser ch;
///   do { run(ch); } while (ch.advance());
class Chooser {
 public:
  Chooser() = default;
  explicit Chooser(std::vector<int> script) : script_(std::move(script)) {}
  static Chooser replaying(const std::vector<Choice>& log);

  /// Index in [0, options). Throws DomainError when there is nothing to choose.
  int pick(std::string_view point, int options);

  const std::vector<Choice>& log() const { return log_; }

  /// Moves to the next combination of choices after a completed run; false
  /// once every combination has been visited.
  bool advance();

 private:
  std::vector<int> script_;
  std::vector<Choice> log_;
};

}  // namespace splitcomp
