#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pealab {

// Malformed user input: bad tables, parse errors, unknown names.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A caller violated an operation's precondition.
struct contract_error : std::logic_error {
  using std::logic_error::logic_error;
};

// A request exceeded a configured enumeration bound.
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal consistency check backed by a proved statement failed.
// Seeing one of these means either the implementation is wrong or the
// mathematics is; both must be surfaced loudly, never swallowed.
struct theorem_violation : std::logic_error {
  using std::logic_error::logic_error;
};

// Square operation table over carrier indices 0..n-1, row-major:
// (*this)(a, b) = value of the operation at (a, b).
class Table {
 public:
  Table() = default;
  explicit Table(int n, int fill = 0) : n_(n), cells_(static_cast<size_t>(n) * n, fill) {}

  int size() const { return n_; }
  int operator()(int a, int b) const { return cells_[static_cast<size_t>(a) * n_ + b]; }
  int& operator()(int a, int b) { return cells_[static_cast<size_t>(a) * n_ + b]; }

  const std::vector<int>& cells() const { return cells_; }

  friend bool operator==(const Table&, const Table&) = default;

 private:
  int n_ = 0;
  std::vector<int> cells_;
};

// One violated law: which axiom, and the element tuple that violates it.
struct AxiomFailure {
  std::string axiom_id;
  std::vector<int> witnesses;

  friend bool operator==(const AxiomFailure&, const AxiomFailure&) = default;
};

// Result of an axiom or property scan. verdict is true iff failures is
// empty; failure order follows the row-major scan of each law in turn.
struct AxiomReport {
  bool verdict = true;
  std::vector<AxiomFailure> failures;

  void add(std::string axiom_id, std::vector<int> witnesses) {
    verdict = false;
    failures.push_back({std::move(axiom_id), std::move(witnesses)});
  }
};

inline std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}

}  // namespace pealab
