#include "bimorph/report.hpp"

namespace bimorph {

bool LawReport::all_passed() const { return !any_failed(); }

bool LawReport::any_failed() const {
  for (const auto& c : checks) {
    if (c.status == CheckResult::Status::fail) {
      return true;
    }
  }
  return false;
}

bool LawReport::any_skipped() const {
  for (const auto& c : checks) {
    if (c.status == CheckResult::Status::skipped) {
      return true;
    }
  }
  return false;
}

std::size_t LawReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) {
    if (c.status == CheckResult::Status::fail) {
      ++n;
    }
  }
  return n;
}

std::string LawReport::summary() const {
  std::string out;
  for (const auto& c : checks) {
    switch (c.status) {
      case CheckResult::Status::pass:
        out += "pass    ";
        break;
      case CheckResult::Status::fail:
        out += "FAIL    ";
        break;
      case CheckResult::Status::skipped:
        out += "skipped ";
        break;
    }
    out += c.name;
    if (!c.detail.empty()) {
      out += "  [" + c.detail + "]";
    }
    out += "\n";
  }
  return out;
}

}  // namespace bimorph
