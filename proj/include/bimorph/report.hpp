#ifndef BIMORPH_REPORT_HPP_
#define BIMORPH_REPORT_HPP_

#include <string>
#include <vector>

namespace bimorph {

// Result of a single yes/no check; `witness` is a counterexample
// description when ok is false.
struct Verdict {
  bool ok = true;
  std::string witness;

  explicit operator bool() const { return ok; }

  static Verdict pass() { return {true, {}}; }
  static Verdict fail(std::string w) { return {false, std::move(w)}; }
};

// One entry of a law report: pass, fail with a witness, or skipped with
// the budget overrun that caused the skip. Skips are never silent.
struct CheckResult {
  enum class Status { pass, fail, skipped };

  std::string name;
  Status status = Status::pass;
  std::string detail;  // witness on fail, reason on skip, scope on pass

  static CheckResult pass(std::string name, std::string scope = {}) {
    return {std::move(name), Status::pass, std::move(scope)};
  }
  static CheckResult fail(std::string name, std::string witness) {
    return {std::move(name), Status::fail, std::move(witness)};
  }
  static CheckResult skipped(std::string name, std::string reason) {
    return {std::move(name), Status::skipped, std::move(reason)};
  }
};

struct LawReport {
  std::vector<CheckResult> checks;

  void add(CheckResult r) { checks.push_back(std::move(r)); }
  void merge(const LawReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  bool all_passed() const;      // no failures (skips allowed)
  bool any_failed() const;
  bool any_skipped() const;
  std::size_t failures() const;
  std::string summary() const;  // one line per check
};

}  // namespace bimorph

#endif  // BIMORPH_REPORT_HPP_
