#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dicol {

enum class Errc {
  invalid_argument,
  parse,
  limit,
  budget,
  io,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(Errc::invalid_argument, what) {}
};

// Raised when an input exceeds a documented size cap of an exact algorithm.
class LimitExceeded : public Error {
 public:
  explicit LimitExceeded(const std::string& what) : Error(Errc::limit, what) {}
};

struct SearchStats {
  std::uint64_t nodes = 0;
  int max_depth = 0;
  double seconds = 0.0;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, SearchStats stats)
      : Error(Errc::budget, what), stats_(stats) {}
  const SearchStats& stats() const noexcept { return stats_; }

 private:
  SearchStats stats_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(Errc::io, what) {}
};

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000ULL;

}  // namespace dicol
