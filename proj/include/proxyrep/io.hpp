#pragma once

#include "proxyrep/elections.hpp"
#include "proxyrep/verify.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace proxyrep {

// Raised for any malformed document; the message names the offending field.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Strict rational literal: integers or "num/den". Decimal literals are
// rejected with a dedicated diagnostic.
Rat parse_rational_strict(const std::string& text);

struct NamedInstance {
  Instance instance;
  std::optional<std::string> name;
};

// {"candidates": ["0","11/30",...], "theta": "1/3", "name": optional}
NamedInstance parse_instance(const std::string& text);
std::string emit_instance(const Instance& inst, const std::optional<std::string>& name,
                          const std::optional<std::string>& status = std::nullopt);

// {"proxies": ["-2/15","1/2","17/15"]}
Arrangement parse_arrangement(const std::string& text);
std::string emit_arrangement(const Arrangement& arr);

// {"voters": ["1/10","2/5","9/10"]}
Profile parse_profile(const std::string& text);

struct ResultDocument {
  std::string mode;
  Rat theta;
  std::size_t count = 0;
  std::vector<Rat> proxies;
  std::string status;  // "ok" or "violation"
  std::optional<Violation> violation;
  std::optional<std::size_t> bound_worst_case;   // bounds.worst_case
  std::optional<std::size_t> bound_certificate;  // bounds.certificate
  std::optional<Rat> distance;                   // elect only
  std::optional<std::size_t> direct_winner;      // elect only, 1-based
  std::optional<std::size_t> proxy_winner;       // elect only, 1-based
};

std::string emit_result(const ResultDocument& doc);
ResultDocument parse_result(const std::string& text);

}  // namespace proxyrep
