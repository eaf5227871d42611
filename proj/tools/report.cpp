#include "report.hpp"

#include <cstdint>
#include <cstdio>

namespace relgit::cli {

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Report::Report(std::string command, std::vector<std::string> args)
    : command_(std::move(command)), args_(std::move(args)) {}

void Report::add_input(std::string_view label, std::string_view bytes) {
  // length-prefixed so that ("ab","c") and ("a","bc") differ
  digest_input_ += std::string(label) + ':' + std::to_string(bytes.size()) + ':';
  digest_input_ += bytes;
}

std::string Report::render(Format format) const {
  const std::string digest = "fnv1a64:" + fnv1a_hex(digest_input_);
  if (format == Format::Structured) {
    nlohmann::ordered_json doc;
    doc["schema"] = kReportSchema;
    doc["command"] = command_;
    doc["args"] = args_;
    doc["input_digest"] = digest;
    doc["result"] = result_;
    doc["warnings"] = warnings_;
    if (timing_ms_) doc["timing_ms"] = *timing_ms_;
    return doc.dump(2) + "\n";
  }
  std::string out;
  for (const auto& l : lines_) out += l + "\n";
  for (const auto& w : warnings_) out += "warning: " + w + "\n";
  out += "input digest: " + digest + "\n";
  if (timing_ms_) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "time: %.3f ms\n", *timing_ms_);
    out += buf;
  }
  return out;
}

}  // namespace relgit::cli
