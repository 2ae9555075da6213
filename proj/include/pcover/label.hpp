#pragma once

#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace pcover {

// Labels of K_{1,2,2,2}: 0 is the apex, +-i the octahedral antipodal pairs.
using Label = int;

inline constexpr std::array<Label, 7> all_labels = {0, 1, -1, 2, -2, 3, -3};

inline bool valid_label(Label l) { return l >= -3 && l <= 3; }

inline bool labels_adjacent(Label a, Label b)
{
  if (a == b) return false;
  if (a == 0 || b == 0) return true;
  return std::abs(a) != std::abs(b);
}

inline bool is_k4_label(Label l) { return l <= 0 && l >= -3; }

inline std::string label_name(Label l)
{
  if (l > 0) return "+" + std::to_string(l);
  return std::to_string(l);
}

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input does not satisfy the operation's precondition.
struct PreconditionError : Error {
  using Error::Error;
};

struct BudgetError : Error {
  double estimate;
  BudgetError(const std::string& what, double est) : Error(what), estimate(est) {}
};

} // namespace pcover
