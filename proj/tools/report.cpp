#include "report.hpp"

#include <sstream>

namespace favourlab::cli {

namespace {

bool is_exact(const Json& j) { return j.is_object() && j.size() == 2 && j.contains("exact") && j.contains("decimal"); }

std::string scalar(const Json& j) {
  if (is_exact(j)) {
    std::string e = j["exact"].get<std::string>();
    std::string d = j["decimal"].get<std::string>();
    return e == d ? e : e + " (" + d + ")";
  }
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_scalar(const Json& j) { return !j.is_structured() || is_exact(j); }

// Short arrays of numbers or booleans print on one line.
bool is_flat(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& item : j)
    if (!item.is_number() && !item.is_boolean()) return false;
  return true;
}

std::string flat(const Json& j) {
  std::string out;
  for (const auto& item : j) out += (out.empty() ? "" : " ") + item.dump();
  return out;
}

void render(const Json& j, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_string() && value.get<std::string>().find('\n') != std::string::npos) {
        out += pad + key + ": |\n";
        std::istringstream lines(value.get<std::string>());
        for (std::string line; std::getline(lines, line);) out += pad + "  " + line + "\n";
      } else if (is_scalar(value)) {
        out += pad + key + ": " + scalar(value) + "\n";
      } else if (is_flat(value)) {
        out += pad + key + ": " + flat(value) + "\n";
      } else if (value.empty()) {
        out += pad + key + ": " + (value.is_array() ? "[]" : "{}") + "\n";
      } else {
        out += pad + key + ":\n";
        render(value, depth + 1, out);
      }
    }
    return;
  }
  if (j.is_array()) {
    for (const auto& item : j) {
      if (is_scalar(item)) {
        out += pad + "- " + scalar(item) + "\n";
      } else {
        std::string nested;
        render(item, depth + 1, nested);
        nested.replace(static_cast<std::size_t>(depth) * 2, 2, "- ");
        out += nested;
      }
    }
    return;
  }
  out += pad + scalar(j) + "\n";
}

}  // namespace

std::string render_text(const Json& report) {
  std::string out;
  render(report, 0, out);
  return out;
}

}  // namespace favourlab::cli
