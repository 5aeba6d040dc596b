#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace menger {

// Malformed or out-of-range input.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configurable size guard was hit before a fixpoint was reached.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A consistency check that must hold by construction failed.
struct IntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Tuple = std::vector<int>;

// Advances t to the lexicographically next tuple over {0,...,size-1};
// returns false once t wraps back to all zeros.
bool next_tuple(Tuple& t, int size);

// base^exp, saturating at UINT64_MAX.
std::uint64_t pow_sat(std::uint64_t base, std::uint64_t exp);

// Membership vector for a set of element indices.
std::vector<char> indicator(const std::vector<int>& set, int size);

std::vector<int> complement_of(const std::vector<int>& set, int size);

// "0,2,5" -> {0,2,5}; throws InputError on junk.
std::vector<int> parse_index_set(const std::string& csv);

// As above but keeps order and duplicates (tuple keys).
std::vector<int> parse_index_set_raw(const std::string& csv);

std::string format_set(const std::vector<int>& set);

}  // namespace menger
