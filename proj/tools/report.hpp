#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace relgit::cli {

enum class Format { Text, Structured };

inline constexpr const char* kReportSchema = "relgit-report/1";

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view data);

/// Output of one CLI invocation. Everything except the optional timing is a
/// function of the arguments and input bytes, so reports are reproducible.
class Report {
public:
  Report(std::string command, std::vector<std::string> args);

  /// Folds an input (file contents, point text, ...) into the digest.
  void add_input(std::string_view label, std::string_view bytes);
  nlohmann::ordered_json& result() { return result_; }
  void line(std::string text) { lines_.push_back(std::move(text)); }
  void warn(std::string text) { warnings_.push_back(std::move(text)); }
  void set_timing(double milliseconds) { timing_ms_ = milliseconds; }

  std::string render(Format format) const;

private:
  std::string command_;
  std::vector<std::string> args_;
  std::string digest_input_;
  nlohmann::ordered_json result_ = nlohmann::ordered_json::object();
  std::vector<std::string> lines_;
  std::vector<std::string> warnings_;
  std::optional<double> timing_ms_;
};

}  // namespace relgit::cli
