#include "tdopt/limits.hpp"

#include <cstdlib>
#include <string>

#include "tdopt/errors.hpp"

namespace tdopt {

Limits Limits::parse(const std::string& s) {
  Limits lim;
  if (s.empty()) return lim;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw ParseError("bad limits entry: '" + item + "'");
    std::string key = item.substr(0, eq);
    std::string val = item.substr(eq + 1);
    long long v = 0;
    try {
      std::size_t used = 0;
      v = std::stoll(val, &used);
      if (used != val.size()) throw std::invalid_argument(val);
    } catch (const std::exception&) {
      throw ParseError("bad limits value: '" + val + "'");
    }
    if (v < 0) throw ParseError("negative limit: '" + item + "'");
    if (key == "bd_max_rank") lim.bd_max_rank = static_cast<int>(v);
    else if (key == "bd_max_ground") lim.bd_max_ground = static_cast<int>(v);
    else if (key == "td_max_vertices") lim.td_max_vertices = static_cast<int>(v);
    else if (key == "validate_max_leaves") lim.validate_max_leaves = static_cast<int>(v);
    else if (key == "bruteforce_box_cap") lim.bruteforce_box_cap = v;
    else if (key == "augment_step_budget") lim.augment_step_budget = v;
    else if (key == "rank_cache_capacity") lim.rank_cache_capacity = v;
    else throw ParseError("unknown limit key: '" + key + "'");
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return lim;
}

}  // namespace tdopt
