#pragma once

#include <map>
#include <string>

namespace plustrace {

// One verified inequality instance.
struct BoundReport {
    std::string name;
    std::map<std::string, double> params;
    double lhs = 0;
    double rhs = 0;
    double margin = 0;  // rhs - lhs
    bool pass = false;
    bool certified = true;  // false when a numeric certification failed upstream
};

inline BoundReport make_report(std::string name, std::map<std::string, double> params, double lhs, double rhs,
                               bool certified = true) {
    BoundReport r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = rhs - lhs;
    r.pass = lhs <= rhs && certified;
    r.certified = certified;
    return r;
}

}  // namespace plustrace
