#include "plustrace/cache.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace plustrace {

KloostermanCache::KloostermanCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        PlusKloostermanValue v;
        char comma;
        if (!(ss >> v.k2 >> comma >> v.m >> comma >> v.n >> comma >> v.c >> comma >> v.value >> comma >> v.err))
            throw std::runtime_error("cache: malformed row: " + line);
        if (std::fabs(v.value) > weil_rhs(v.m, v.n, v.c) + v.err)
            throw std::runtime_error("cache: Weil bound violated by stored record: " + line);
        map_.emplace(Key{v.k2, v.m, v.n, v.c}, v);
    }
}

std::optional<PlusKloostermanValue> KloostermanCache::lookup(int k2, i64 m, i64 n, i64 c) const {
    auto it = map_.find(Key{k2, m, n, c});
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

void KloostermanCache::store(const PlusKloostermanValue& v) {
    Key key{v.k2, v.m, v.n, v.c};
    if (map_.count(key)) return;
    map_.emplace(key, v);
    std::ofstream out(path_, std::ios::app);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d,%lld,%lld,%lld,%.20g,%.20g\n", v.k2, (long long)v.m, (long long)v.n,
                  (long long)v.c, v.value, v.err);
    out << buf;
}

PlusKloostermanValue KloostermanCache::get_or_compute(int k2, i64 m, i64 n, i64 c) {
    if (auto v = lookup(k2, m, n, c)) return *v;
    PlusKloostermanValue v = s_plus(k2, m, n, c);
    store(v);
    return v;
}

}  // namespace plustrace
