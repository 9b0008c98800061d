#pragma once

#include <stdexcept>
#include <string>

namespace codim2 {

// Input failed one of the structural constraints on a multiplicity vector.
struct ConstraintViolation : std::invalid_argument
{
  using std::invalid_argument::invalid_argument;
};

struct MalformedNet : std::invalid_argument
{
  using std::invalid_argument::invalid_argument;
};

struct MalformedTableau : std::invalid_argument
{
  using std::invalid_argument::invalid_argument;
};

struct DegenerateSubspace : std::invalid_argument
{
  using std::invalid_argument::invalid_argument;
};

struct BlockTooLarge : std::invalid_argument
{
  using std::invalid_argument::invalid_argument;
};

struct WrongCodimension : std::invalid_argument
{
  using std::invalid_argument::invalid_argument;
};

struct NotAFlagProblem : std::invalid_argument
{
  using std::invalid_argument::invalid_argument;
};

struct InvalidConfig : std::invalid_argument
{
  using std::invalid_argument::invalid_argument;
};

} // namespace codim2
