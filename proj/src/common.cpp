#include "menger/common.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace menger {

bool next_tuple(Tuple& t, int size) {
  for (int k = static_cast<int>(t.size()) - 1; k >= 0; --k) {
    if (++t[k] < size) return true;
    t[k] = 0;
  }
  return false;
}

std::uint64_t pow_sat(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t k = 0; k < exp; ++k) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

std::vector<char> indicator(const std::vector<int>& set, int size) {
  std::vector<char> in(size, 0);
  for (int x : set) {
    if (x < 0 || x >= size)
      throw InputError("set element " + std::to_string(x) + " out of range");
    in[x] = 1;
  }
  return in;
}

std::vector<int> complement_of(const std::vector<int>& set, int size) {
  std::vector<char> in = indicator(set, size);
  std::vector<int> out;
  for (int x = 0; x < size; ++x)
    if (!in[x]) out.push_back(x);
  return out;
}

std::vector<int> parse_index_set_raw(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw InputError("empty entry in set '" + csv + "'");
    std::size_t pos = 0;
    int v;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw InputError("bad set entry '" + item + "'");
    }
    if (pos != item.size()) throw InputError("bad set entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<int> parse_index_set(const std::string& csv) {
  std::vector<int> out = parse_index_set_raw(csv);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string format_set(const std::vector<int>& set) {
  std::string s = "{";
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(set[k]);
  }
  return s + "}";
}

}  // namespace menger
