#pragma once

#include "plustrace/kloosterman.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <tuple>

namespace plustrace {

// Append-only CSV cache of computed plus-space Kloosterman sums.
// Columns: k_num, m, n, c, value_decimal, err_decimal (20 significant
// digits).  Records are verified against the Weil bound on load.
class KloostermanCache {
  public:
    explicit KloostermanCache(std::string path);

    std::optional<PlusKloostermanValue> lookup(int k2, i64 m, i64 n, i64 c) const;
    void store(const PlusKloostermanValue& v);
    PlusKloostermanValue get_or_compute(int k2, i64 m, i64 n, i64 c);
    std::size_t size() const { return map_.size(); }
    const std::string& path() const { return path_; }

  private:
    using Key = std::tuple<int, i64, i64, i64>;
    std::string path_;
    std::map<Key, PlusKloostermanValue> map_;
};

}  // namespace plustrace
