// Command-line front end: single computations, verification suites, scans.
// Exit codes: 0 success, 1 at least one failed bound report, 2 usage error.

#include "plustrace/bounds.hpp"
#include "plustrace/cache.hpp"
#include "plustrace/kloosterman.hpp"
#include "plustrace/modeval.hpp"
#include "plustrace/weyl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace plustrace;

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Fraction {
    i64 num = 1, den = 4;
    double value() const { return double(num) / double(den); }
};

Fraction parse_fraction(const std::string& s) {
    Fraction f;
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            // decimal: recover small-denominator fraction when exact
            double v = std::stod(s);
            for (i64 den = 1; den <= 64; ++den) {
                double n = v * (double)den;
                if (std::fabs(n - std::round(n)) < 1e-12) {
                    f.num = (i64)std::llround(n);
                    f.den = den;
                    return f;
                }
            }
            throw Usage("not a small fraction: " + s);
        }
        f.num = std::stoll(s.substr(0, slash));
        f.den = std::stoll(s.substr(slash + 1));
    } catch (const std::invalid_argument&) {
        throw Usage("bad fraction: " + s);
    }
    if (f.den <= 0) throw Usage("bad fraction: " + s);
    return f;
}

double parse_height(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return std::stod(s);
    Fraction f = parse_fraction(s);
    return f.value();
}

// Range spec: "v", "a,b,c" or "lo:hi[:step]" (inclusive, step may be negative).
std::vector<i64> parse_range(const std::string& s) {
    std::vector<i64> out;
    auto colon = s.find(':');
    if (colon != std::string::npos) {
        i64 lo = std::stoll(s.substr(0, colon));
        std::string rest = s.substr(colon + 1);
        auto colon2 = rest.find(':');
        i64 hi = std::stoll(colon2 == std::string::npos ? rest : rest.substr(0, colon2));
        i64 step = colon2 == std::string::npos ? (hi >= lo ? 1 : -1) : std::stoll(rest.substr(colon2 + 1));
        if (step == 0) throw Usage("zero step in range: " + s);
        if ((step > 0) != (hi >= lo)) throw Usage("step direction does not reach hi: " + s);
        for (i64 v = lo; step > 0 ? v <= hi : v >= hi; v += step) out.push_back(v);
        return out;
    }
    std::size_t pos = 0;
    while (pos < s.size()) {
        auto comma = s.find(',', pos);
        out.push_back(std::stoll(s.substr(pos, comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw Usage("empty range: " + s);
    return out;
}

struct Output {
    std::string mode = "text";  // json | csv | text
    bool header_done = false;

    void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, json>>& out) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object())
                flatten(v, prefix + k + ".", out);
            else
                out.emplace_back(prefix + k, v);
        }
    }

    void emit(const json& row) {
        if (mode == "json") {
            std::cout << row.dump() << "\n";
            return;
        }
        std::vector<std::pair<std::string, json>> flat;
        flatten(row, "", flat);
        if (mode == "csv") {
            if (!header_done) {
                for (std::size_t i = 0; i < flat.size(); ++i)
                    std::cout << flat[i].first << (i + 1 < flat.size() ? "," : "\n");
                header_done = true;
            }
            for (std::size_t i = 0; i < flat.size(); ++i) {
                const json& v = flat[i].second;
                std::cout << (v.is_string() ? v.get<std::string>() : v.dump())
                          << (i + 1 < flat.size() ? "," : "\n");
            }
        } else {
            for (const auto& [k, v] : flat)
                std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    }
};

FactoredDiscriminant make_fd(i64 D, i64 d) {
    FactoredDiscriminant fd{D, d, d == 0 ? 0 : D / d};
    if (d == 0 || D % d != 0 || !fd.valid())
        throw Usage("invalid factorization: D=" + std::to_string(D) + " d=" + std::to_string(d));
    return fd;
}

DeltaTable make_delta(const std::string& s) {
    Fraction f = parse_fraction(s);
    try {
        return delta_table(f.num, f.den);
    } catch (const domain_error& e) {
        throw Usage(e.what());
    }
}

json report_json(const BoundReport& r) {
    json p = json::object();
    for (const auto& [k, v] : r.params) p[k] = v;
    return json{{"name", r.name}, {"params", p},          {"lhs", r.lhs},
                {"rhs", r.rhs},   {"margin", r.margin},   {"pass", r.pass},
                {"certified", r.certified}};
}

struct Ctx {
    Output out;
    std::unique_ptr<KloostermanCache> cache;
    mpfr_prec_t precision = 128;
    int failed_reports = 0;
};

json run_splus(Ctx& ctx, int k2, i64 m, i64 n, i64 c) {
    PlusKloostermanValue v;
    if (ctx.cache && k2 == 1)
        v = ctx.cache->get_or_compute(k2, m, n, c);
    else
        v = s_plus(k2, m, n, c);
    return json{{"command", "splus"}, {"k2", v.k2},   {"m", v.m},
                {"n", v.n},           {"c", v.c},     {"value", v.value},
                {"err", v.err},       {"imag_residue", v.imag_residue}};
}

json run_weyl(Ctx&, i64 m, i64 D, i64 d, i64 c, const std::string& method) {
    FactoredDiscriminant fd = make_fd(D, d);
    WeylSumValue v = method == "kohnen" ? weyl_kohnen(m, fd, c) : weyl_direct(m, fd, c);
    return json{{"command", "weyl"}, {"method", method}, {"m", m}, {"D", D}, {"d", d},
                {"c", c},            {"value", v.value}, {"err", v.err},
                {"imag_residue", v.imag_residue}};
}

json run_trace(Ctx& ctx, i64 m, i64 D, i64 d) {
    FactoredDiscriminant fd = make_fd(D, d);
    TraceReport t = trace(m, fd, {ctx.precision, 4096});
    return json{{"command", "trace"},
                {"m", m},
                {"D", D},
                {"d", d},
                {"value", t.value.str(30)},
                {"err", t.err},
                {"rounded", t.rounded.get_str()},
                {"round_gap", t.round_gap},
                {"certified", t.certified},
                {"err_certified", t.err_certified}};
}

json run_rect(Ctx&, i64 m, i64 D, i64 d, double Y, bool conjugate) {
    FactoredDiscriminant fd = make_fd(D, d);
    RectangleSum r = rectangle_sum(m, fd, Y, conjugate);
    return json{{"command", "rect"}, {"m", m},      {"D", D},
                {"d", d},            {"Y", Y},      {"conjugate", conjugate},
                {"value", r.value.str(30)}, {"err", r.err}};
}

json run_zeta(Ctx&, i64 m, i64 n, double sigma, double t, i64 c_max) {
    auto [val, tail] = zeta_partial(m, n, {sigma, t}, c_max);
    return json{{"command", "zeta"}, {"m", m},     {"n", n},
                {"sigma", sigma},    {"t", t},     {"c_max", c_max},
                {"re", val.real()},  {"im", val.imag()},
                {"tail_bound", std::isfinite(tail) ? json(tail) : json("inf")}};
}

json run_check1(Ctx& ctx, i64 m, i64 D, i64 d, const std::string& delta) {
    auto rep = check_theorem1(m, make_fd(D, d), make_delta(delta), {ctx.precision, 4096});
    if (!rep.pass) ++ctx.failed_reports;
    return report_json(rep);
}

json run_check2(Ctx& ctx, i64 m, i64 D, i64 d, const std::string& delta, double Y) {
    TheoremParams p{m, make_fd(D, d), Y, make_delta(delta)};
    auto rep = check_theorem2(p, {ctx.precision, 4096});
    if (!rep.pass) ++ctx.failed_reports;
    return report_json(rep);
}

json run_check51(Ctx& ctx, i64 m, i64 n, i64 x_max, const std::string& delta) {
    DeltaTable dt = make_delta(delta);
    auto points = partial_sum_points({{m, n}}, x_max);
    i64 cells = 0, failures = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    for (const auto& pt : points[0]) {
        double rhs = theorem51_rhs(m, n, (double)pt.x, dt);
        double lhs = std::fabs(pt.value) + pt.err;
        ++cells;
        min_margin = std::min(min_margin, rhs - lhs);
        if (lhs > rhs) ++failures;
    }
    if (failures) ++ctx.failed_reports;
    return json{{"command", "check-theorem51"},
                {"m", m},
                {"n", n},
                {"x_max", x_max},
                {"delta", delta},
                {"cells", cells},
                {"failures", failures},
                {"min_margin", min_margin},
                {"pass", failures == 0}};
}

json run_checkweil(Ctx& ctx, i64 m, i64 n, i64 c_max) {
    i64 cells = 0, failures = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    for (i64 c = 4; c <= c_max; c += 4) {
        PlusKloostermanValue v = ctx.cache ? ctx.cache->get_or_compute(1, m, n, c) : s_plus(1, m, n, c);
        double rhs = weil_rhs(m, n, c);
        ++cells;
        min_margin = std::min(min_margin, rhs - std::fabs(v.value) - v.err);
        if (std::fabs(v.value) > rhs + v.err) ++failures;
    }
    if (failures) ++ctx.failed_reports;
    return json{{"command", "check-weil"}, {"m", m},       {"n", n},
                {"c_max", c_max},          {"cells", cells}, {"failures", failures},
                {"min_margin", min_margin}, {"pass", failures == 0}};
}

json run_recover(Ctx& ctx, i64 m, i64 D, i64 d, double Y) {
    auto r = nearest_integer_recovery(m, make_fd(D, d), Y, {ctx.precision, 4096});
    return json{{"command", "recover"},
                {"m", m},
                {"D", D},
                {"d", d},
                {"Y", Y},
                {"candidate", r.candidate.get_str()},
                {"trace", r.trace_value.get_str()},
                {"matches", r.matches},
                {"certified", r.certified},
                {"y_used", r.y_used}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"plus-space Kloosterman / trace toolkit"};
    app.require_subcommand(1);

    Ctx ctx;
    long precision = 128;
    if (const char* env = std::getenv("PLUSTRACE_PRECISION_BITS")) precision = std::atol(env);
    std::string cache_path;
    app.add_option("--output", ctx.out.mode, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--precision-bits", precision, "working precision in bits [64, 4096]");
    app.add_option("--cache", cache_path, "Kloosterman CSV cache (read-through/write-back)");

    // shared parameter storage
    i64 m = 1, n = -3, c = 4, D = -3, d = 1, x_max = 100000, c_max = 1000;
    int k2 = 1;
    std::string delta = "1/4", Y = "0.1", method = "direct";
    double sigma = 1.25, t = 0.0;
    bool no_conjugate = false;

    auto* sp = app.add_subcommand("splus", "plus-space Kloosterman sum S_k^+(m,n,c)");
    sp->add_option("--k2", k2)->check(CLI::IsMember({1, -1}));
    sp->add_option("--m", m)->required();
    sp->add_option("--n", n)->required();
    sp->add_option("--c", c)->required();

    auto* wy = app.add_subcommand("weyl", "quadratic Weyl sum T_m(d,d';c)");
    wy->add_option("--m", m)->required();
    wy->add_option("--D", D)->required();
    wy->add_option("--d", d)->required();
    wy->add_option("--c", c)->required();
    wy->add_option("--method", method)->check(CLI::IsMember({"direct", "kohnen"}));

    auto* tr = app.add_subcommand("trace", "twisted trace of j_m at discriminant D");
    tr->add_option("--m", m)->required();
    tr->add_option("--D", D)->required();
    tr->add_option("--d", d);

    auto* rc = app.add_subcommand("rect", "rectangle exponential sum");
    rc->add_option("--m", m)->required();
    rc->add_option("--D", D)->required();
    rc->add_option("--d", d);
    rc->add_option("--Y", Y)->required();
    rc->add_flag("--no-conjugate", no_conjugate, "drop the e(-m conj z) term");

    auto* zt = app.add_subcommand("zeta", "truncated Kloosterman-Selberg zeta");
    zt->add_option("--m", m)->required();
    zt->add_option("--n", n)->required();
    zt->add_option("--sigma", sigma)->required();
    zt->add_option("--t", t);
    zt->add_option("--c-max", c_max);

    auto* c1 = app.add_subcommand("check-theorem1", "one-sided rectangle inequality at Y=1/m");
    c1->add_option("--m", m)->required();
    c1->add_option("--D", D)->required();
    c1->add_option("--d", d);
    c1->add_option("--delta", delta);

    auto* c2 = app.add_subcommand("check-theorem2", "two-sided rectangle inequality");
    c2->add_option("--m", m)->required();
    c2->add_option("--D", D)->required();
    c2->add_option("--d", d);
    c2->add_option("--delta", delta);
    c2->add_option("--Y", Y)->required();

    auto* c5 = app.add_subcommand("check-theorem51", "partial-sum bound at all jump points");
    c5->add_option("--m", m)->required();
    c5->add_option("--n", n)->required();
    c5->add_option("--x-max", x_max);
    c5->add_option("--delta", delta);

    auto* cw = app.add_subcommand("check-weil", "Weil bound over 4|c <= c-max");
    cw->add_option("--m", m)->required();
    cw->add_option("--n", n)->required();
    cw->add_option("--c-max", c_max);

    auto* rv = app.add_subcommand("recover", "nearest-integer trace recovery");
    rv->add_option("--m", m)->required();
    rv->add_option("--D", D)->required();
    rv->add_option("--d", d);
    rv->add_option("--Y", Y);

    // scan: cartesian product over ranges, one row per cell, deterministic order
    std::string target;
    std::string rm = "1", rn = "-3", rc2 = "4", rD = "-3", rd, rY, rdelta = "1/4";
    auto* sc = app.add_subcommand("scan", "grid scan of another command");
    sc->add_option("target", target, "command to scan")
        ->required()
        ->check(CLI::IsMember({"splus", "weyl", "trace", "rect", "check-theorem1", "check-theorem2", "recover"}));
    sc->add_option("--k2", k2);
    sc->add_option("--m", rm, "range lo:hi[:step] or list");
    sc->add_option("--n", rn, "range");
    sc->add_option("--c", rc2, "range");
    sc->add_option("--D", rD, "range (non-discriminants skipped)");
    sc->add_option("--d", rd, "range; omitted = all factorizations of D");
    sc->add_option("--Y", rY, "comma list of heights");
    sc->add_option("--delta", rdelta, "comma list of fractions");
    sc->add_flag("--no-conjugate", no_conjugate);

    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (precision < 64 || precision > 4096) throw Usage("precision-bits out of [64, 4096]");
        ctx.precision = (mpfr_prec_t)precision;
        if (!cache_path.empty()) ctx.cache = std::make_unique<KloostermanCache>(cache_path);

        if (sp->parsed()) {
            if (!plus_admissible(k2, m) || !plus_admissible(k2, n)) throw Usage("m, n not plus-admissible");
            ctx.out.emit(run_splus(ctx, k2, m, n, c));
        } else if (wy->parsed()) {
            ctx.out.emit(run_weyl(ctx, m, D, d, c, method));
        } else if (tr->parsed()) {
            ctx.out.emit(run_trace(ctx, m, D, d));
        } else if (rc->parsed()) {
            ctx.out.emit(run_rect(ctx, m, D, d, parse_height(Y), !no_conjugate));
        } else if (zt->parsed()) {
            ctx.out.emit(run_zeta(ctx, m, n, sigma, t, c_max));
        } else if (c1->parsed()) {
            ctx.out.emit(run_check1(ctx, m, D, d, delta));
        } else if (c2->parsed()) {
            ctx.out.emit(run_check2(ctx, m, D, d, delta, parse_height(Y)));
        } else if (c5->parsed()) {
            ctx.out.emit(run_check51(ctx, m, n, x_max, delta));
        } else if (cw->parsed()) {
            ctx.out.emit(run_checkweil(ctx, m, n, c_max));
        } else if (rv->parsed()) {
            ctx.out.emit(run_recover(ctx, m, D, d, parse_height(Y)));
        } else if (sc->parsed()) {
            std::vector<double> ys;
            if (!rY.empty())
                for (const auto& part : [&] {
                         std::vector<std::string> v;
                         std::size_t pos = 0;
                         while (pos < rY.size()) {
                             auto comma = rY.find(',', pos);
                             v.push_back(rY.substr(pos, comma - pos));
                             if (comma == std::string::npos) break;
                             pos = comma + 1;
                         }
                         return v;
                     }())
                    ys.push_back(parse_height(part));
            std::vector<std::string> deltas;
            {
                std::size_t pos = 0;
                while (pos < rdelta.size()) {
                    auto comma = rdelta.find(',', pos);
                    deltas.push_back(rdelta.substr(pos, comma - pos));
                    if (comma == std::string::npos) break;
                    pos = comma + 1;
                }
            }
            auto for_fds = [&](i64 Dv, auto&& fn) {
                if (!is_discriminant(Dv) || Dv >= 0) return;
                if (rd.empty()) {
                    for (const auto& fd : factorizations(Dv)) fn(fd);
                } else {
                    for (i64 dv : parse_range(rd))
                        if (dv != 0 && Dv % dv == 0 && FactoredDiscriminant{Dv, dv, Dv / dv}.valid())
                            fn(FactoredDiscriminant{Dv, dv, Dv / dv});
                }
            };
            if (target == "splus") {
                for (i64 mv : parse_range(rm))
                    for (i64 nv : parse_range(rn))
                        for (i64 cv : parse_range(rc2)) {
                            if (cv % 4 || !plus_admissible(k2, mv) || !plus_admissible(k2, nv)) continue;
                            ctx.out.emit(run_splus(ctx, k2, mv, nv, cv));
                        }
            } else if (target == "weyl") {
                for (i64 mv : parse_range(rm))
                    for (i64 Dv : parse_range(rD))
                        for_fds(Dv, [&](const FactoredDiscriminant& fd) {
                            for (i64 cv : parse_range(rc2)) {
                                if (cv % 4) continue;
                                ctx.out.emit(run_weyl(ctx, mv, fd.D, fd.d, cv, method));
                            }
                        });
            } else if (target == "trace") {
                for (i64 mv : parse_range(rm))
                    for (i64 Dv : parse_range(rD))
                        for_fds(Dv, [&](const FactoredDiscriminant& fd) {
                            ctx.out.emit(run_trace(ctx, mv, fd.D, fd.d));
                        });
            } else if (target == "rect") {
                if (ys.empty()) throw Usage("scan rect requires --Y");
                for (i64 mv : parse_range(rm))
                    for (i64 Dv : parse_range(rD))
                        for_fds(Dv, [&](const FactoredDiscriminant& fd) {
                            for (double y : ys) ctx.out.emit(run_rect(ctx, mv, fd.D, fd.d, y, !no_conjugate));
                        });
            } else if (target == "check-theorem1") {
                for (i64 mv : parse_range(rm))
                    for (i64 Dv : parse_range(rD))
                        for_fds(Dv, [&](const FactoredDiscriminant& fd) {
                            for (const auto& dv : deltas) ctx.out.emit(run_check1(ctx, mv, fd.D, fd.d, dv));
                        });
            } else if (target == "check-theorem2") {
                if (ys.empty()) throw Usage("scan check-theorem2 requires --Y");
                for (i64 mv : parse_range(rm))
                    for (i64 Dv : parse_range(rD))
                        for_fds(Dv, [&](const FactoredDiscriminant& fd) {
                            for (const auto& dv : deltas)
                                for (double y : ys) ctx.out.emit(run_check2(ctx, mv, fd.D, fd.d, dv, y));
                        });
            } else if (target == "recover") {
                if (ys.empty()) throw Usage("scan recover requires --Y");
                for (i64 mv : parse_range(rm))
                    for (i64 Dv : parse_range(rD))
                        for_fds(Dv, [&](const FactoredDiscriminant& fd) {
                            for (double y : ys) ctx.out.emit(run_recover(ctx, mv, fd.D, fd.d, y));
                        });
            }
        }
    } catch (const Usage& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return ctx.failed_reports == 0 ? 0 : 1;
}
