#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace latt {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPositiveDefinite : Error { using Error::Error; };
struct NotIntegral : Error { using Error::Error; };
struct NotEven : Error { using Error::Error; };
struct NotContained : Error { using Error::Error; };
struct RankMismatch : Error { using Error::Error; };
struct RankZero : Error { using Error::Error; };
struct NoAntiIsometry : Error { using Error::Error; };
struct InvalidGlue : Error { using Error::Error; };
struct NotLeechLike : Error { using Error::Error; };
struct NotFaithfulDomain : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct NotSLattice : Error { using Error::Error; };

// A computation hit an explicit resource budget; never a silent truncation.
struct BudgetExceeded : Error { using Error::Error; };
// A randomized search ran out of budget; absence is not proven.
struct BudgetExhausted : Error { using Error::Error; };

struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line),
        column(column) {}
  std::size_t line = 0;
  std::size_t column = 0;
};

}  // namespace latt
