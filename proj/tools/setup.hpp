#pragma once

// Setup files: brace sections of `key = value` lines with quoted strings
// and `#` comments.
//
//   valuation { x = "(1,0)"  y = "(0,1)" }
//   subring = polynomial            # or field
//   choice = generators             # table | generators | auto | extend | none
//   domain = group                  # or semigroup
//   generators { "(1,0)" = "x"  "(0,1)" = "y" }
//   scale { "(1,1)" = "2" }         # constants multiplied into a generator rule
//   table { "1" = "2*x" }
//   span = 6                        # height of the table built by choice = auto
//   extend { "1/2" = "y" }          # chain steps on top of the generators
//   lift = constants                # or none
//   campaign { seed = 1  samples = 200  bound = 6 }
//   counterexample { primes = "2 3"  degree_bound = 8  enumerate = true  constants = "1 -1" }

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vgr/constructions.hpp"
#include "vgr/graded.hpp"

namespace vgr::cli {

using Entries = std::vector<std::pair<std::string, std::string>>;

struct Campaign {
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  unsigned bound = 6;
  friend bool operator==(const Campaign&, const Campaign&) = default;
};

struct CounterexampleSection {
  std::vector<unsigned> primes;
  unsigned degree_bound = 8;
  bool enumerate = false;
  std::vector<std::string> constants{"1"};
  friend bool operator==(const CounterexampleSection&, const CounterexampleSection&) = default;
};

struct SetupFile {
  Entries valuation;
  std::string subring = "polynomial";
  std::string choice = "none";
  std::string domain = "semigroup";
  Entries generators;
  Entries scale;
  Entries table;
  unsigned span = 6;
  Entries extend;
  std::string lift = "none";
  Campaign campaign;
  std::optional<CounterexampleSection> counterexample;
  friend bool operator==(const SetupFile&, const SetupFile&) = default;
};

/// Throws ParseError with a line number on malformed input.
SetupFile parse_setup(std::string_view text);
SetupFile read_setup(const std::string& path);
/// Canonical text; parse_setup(print_setup(s)) == s.
std::string print_setup(const SetupFile& s);

/// A setup with its objects built.
struct Setup {
  SetupFile file;
  ValuationPtr valuation;
  Subring subring = Subring::polynomial;
  std::optional<ChoiceFunction> choice;
  std::optional<SubgroupWithChoice> chain;  // choice = generators (group) or extend
  std::optional<LiftingOracle> lift;
};

/// Builds the valuation and choice function. Throws ParseError or Error on
/// bad input, InvalidChoice on values of the wrong value, and RootNotFound
/// when an extension step fails.
Setup load_setup(const SetupFile& file);

}  // namespace vgr::cli
