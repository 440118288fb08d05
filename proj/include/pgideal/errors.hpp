#ifndef PGIDEAL_ERRORS_HPP
#define PGIDEAL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pgideal {

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `position` is a 1-based line number for line-oriented
/// files and a 0-based character offset for polynomial expressions.
class ParseError : public Error
{
public:
  ParseError(const std::string& what, std::size_t position)
    : Error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

// cycle refers to a vertex that is not in the graph
class SupportError : public Error
{
public:
  using Error::Error;
};

// argument outside the operation's domain (negative coefficient, bad arity, ...)
class DomainError : public Error
{
public:
  using Error::Error;
};

/// Numerical data that cannot come from a single singularity: parity, bounds,
/// monotonicity, convexity or epsilon-range violations.
class InconsistentDataError : public Error
{
public:
  using Error::Error;
};

// two routes that must agree did not
class InternalInconsistencyError : public Error
{
public:
  using Error::Error;
};

// increment loop ran past its coefficient bound (graph not negative definite)
class NonTerminationError : public Error
{
public:
  using Error::Error;
};

/// Gröbner computation exceeded its basis-size, pair-count or coefficient-size cap.
class BudgetError : public Error
{
public:
  using Error::Error;
};

} // namespace pgideal

#endif
