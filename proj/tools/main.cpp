#include <CLI11.hpp>
#include <fstream>
#include <future>
#include <iostream>
#include <json.hpp>

#include "hilbnef/fib.hpp"
#include "hilbnef/verify.hpp"
#include "svg_slice.hpp"
#include "wall_rows.hpp"

using json = nlohmann::ordered_json;
using namespace hilbnef;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

DivClass parse_point(const std::string& s, const Params& par) {
    std::vector<Rat> coords;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
        coords.push_back(Rat::parse(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (coords.size() != 3)
        throw CLI::ValidationError("--point", "expected three comma-separated rationals");
    return {coords[0], coords[1], coords[2], par};
}

json point_json(const DivClass& p) {
    return json{{"x", p.x.str()}, {"y", p.y.str()}, {"z", p.z.str()}};
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    f << content;
}

json rows_to_json(const std::vector<cli::WallRow>& rows, long a, long n, int K) {
    json walls = json::array();
    for (const auto& r : rows) {
        walls.push_back(json{{"provenance", r.prov},
                             {"normal", {{"x", r.normal[0]}, {"y", r.normal[1]},
                                         {"z", r.normal[2]}}},
                             {"q", r.q}});
    }
    DivClass g0 = reference_class(Params(a, n));
    return json{{"params", {{"a", a}, {"n", n}}},
                {"walls", walls},
                {"meta", {{"depth", K},
                          {"bound", nullptr},
                          {"reference_class", g0.x.str() + "," + g0.y.str() + "," + g0.z.str()}}}};
}

json suite_to_json(const verify::SuiteResult& s) {
    json checks = json::array();
    for (const auto& c : s.checks)
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return json{{"suite", s.suite}, {"pass", s.pass()}, {"checks", checks}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact nef cones, fundamental domains and walls for Hilbert schemes "
                 "of points on the K3 family S_a"};
    app.require_subcommand(1);

    // Common option storage.
    long a = 1, n = 2, B = 50, m_index = 0, gk = 0, gt = 0, b_cr = 5, d_val = 2;
    long max_iter = 1'000'000, samples = 1000;
    int K = 6;
    std::uint64_t seed = 0x5eed0000;
    bool allow_small_n = false, with_trace = false, parallel = false;
    std::string point_str, format = "json", out_path, suite = "all", window_str;

    auto* c_fib = app.add_subcommand("fib", "Generalized Fibonacci value a_m");
    c_fib->add_option("--a", a, "sequence parameter (a >= 1)")->required();
    c_fib->add_option("--m", m_index, "index, may be negative")->required();

    auto* c_reduce = app.add_subcommand("reduce", "Reduce a nef class into the fundamental "
                                                  "domain (a = 1, n = 2)");
    c_reduce->add_option("--a", a);
    c_reduce->add_option("--n", n);
    c_reduce->add_option("--point", point_str, "class x,y,z with rational entries p/q")
        ->required();
    c_reduce->add_option("--K", K, "orbit depth for the nef precondition check");
    c_reduce->add_option("--max-iter", max_iter, "iteration cap");
    c_reduce->add_flag("--trace", with_trace, "include the full trace");

    auto* c_nef = app.add_subcommand("nef-test", "Depth-K nef membership test (n = 2)");
    c_nef->add_option("--a", a);
    c_nef->add_option("--point", point_str)->required();
    c_nef->add_option("--K", K, "orbit depth");

    auto* c_walls2 = app.add_subcommand("walls2", "Orbit walls of Nef(S_a^[2])");
    c_walls2->add_option("--a", a);
    c_walls2->add_option("--K", K, "orbit depth");
    c_walls2->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    c_walls2->add_option("--out", out_path, "output path (default stdout)");

    auto* c_enum = app.add_subcommand("enum-classes", "Integral classes with q = -d in a box");
    c_enum->add_option("--a", a);
    c_enum->add_option("--d", d_val, "2 or 10")->check(CLI::IsMember({2, 10}));
    c_enum->add_option("--B", B, "box bound on |x| and |z|");
    c_enum->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    c_enum->add_option("--out", out_path);

    auto* c_wallsn = app.add_subcommand("walls-n", "Walls of Nef(S_a^[n]) for large n");
    c_wallsn->add_option("--a", a);
    c_wallsn->add_option("--n", n)->required();
    c_wallsn->add_option("--K", K, "index window |k| <= K");
    c_wallsn->add_flag("--allow-small-n", allow_small_n);
    c_wallsn->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    c_wallsn->add_option("--out", out_path);

    auto* c_gies = app.add_subcommand("gieseker", "Gieseker wall data: CrDiv and s_W");
    c_gies->add_option("--a", a);
    c_gies->add_option("--n", n)->required();
    c_gies->add_option("--k", gk, "index k");
    c_gies->add_option("--t", gt, "index t in [0, a-1]");
    c_gies->add_option("--B-cr", b_cr, "enumeration bound on x + y");
    c_gies->add_flag("--allow-small-n", allow_small_n);

    auto* c_mori = app.add_subcommand("mori", "Mori cone generators for large n");
    c_mori->add_option("--a", a);
    c_mori->add_option("--n", n)->required();
    c_mori->add_option("--K", K, "index window");
    c_mori->add_flag("--allow-small-n", allow_small_n);

    auto* c_slice = app.add_subcommand("slice", "Figure of the x = 1 slice of the nef cone");
    c_slice->add_option("--a", a);
    c_slice->add_option("--n", n);
    c_slice->add_option("--K", K, "depth / index window");
    c_slice->add_option("--format", format)->check(CLI::IsMember({"svg", "csv"}));
    c_slice->add_option("--out", out_path);
    c_slice->add_option("--window", window_str, "z_lo,z_hi,y_lo,y_hi (rationals)");

    std::string a_list = "1,2,3,5";
    long fib_range = 30;
    auto* c_verify = app.add_subcommand("verify", "Run the invariant suites");
    c_verify
        ->add_option("--suite", suite,
                     "one of exactmath, lattice, fib, isometry, conegeom, fundomain, nef2, "
                     "large-n, all")
        ->check(CLI::IsMember({"exactmath", "lattice", "fib", "isometry", "conegeom",
                               "fundomain", "nef2", "large-n", "all"}));
    c_verify->add_option("--a", a_list, "parameter list, e.g. 1,2,3,5 (large-n uses the first)");
    c_verify->add_option("--n", n, "parameter for the large-n suite");
    c_verify->add_option("--range", fib_range, "index range for the fib suite");
    c_verify->add_option("--K", K, "orbit depth (nef2) / index window (large-n)");
    c_verify->add_option("--B", B, "enumeration bound for the nef2 suite");
    c_verify->add_option("--samples", samples, "sample count for randomized suites");
    c_verify->add_option("--seed", seed, "seed for randomized suites");
    c_verify->add_flag("--parallel", parallel, "run suites concurrently");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (c_fib->parsed()) {
            json out{{"params", {{"a", a}}}, {"m", m_index}, {"value", fib(a, m_index).get_str()}};
            std::cout << out.dump() << "\n";
            return kExitOk;
        }

        if (c_reduce->parsed()) {
            Params par(a, n);
            DivClass p = parse_point(point_str, par);
            ReduceOptions opts;
            opts.nef_depth = K;
            opts.max_iter = max_iter;
            ReductionResult res = reduce(p, opts);
            json out{{"word", res.word.letters()},
                     {"reduced", res.reduced.x.str() + "," + res.reduced.y.str() + "," +
                                     res.reduced.z.str()}};
            std::cout << out.dump() << "\n";
            if (with_trace) {
                // One JSON line per visited point.
                for (const auto& step : res.trace)
                    std::cout << json{{"point", point_json(step.point)},
                                      {"region", static_cast<int>(step.region)},
                                      {"f", step.f.str()}}
                                     .dump()
                              << "\n";
            }
            return kExitOk;
        }

        if (c_nef->parsed()) {
            Params par(a, 2);
            DivClass p = parse_point(point_str, par);
            DivClass g0 = reference_class(par);
            json out{{"params", {{"a", a}, {"n", 2}}},
                     {"point", point_json(p)},
                     {"K", K},
                     {"nef", is_nef(p, K)},
                     {"meta", {{"reference_class",
                                g0.x.str() + "," + g0.y.str() + "," + g0.z.str()}}}};
            std::cout << out.dump() << "\n";
            return kExitOk;
        }

        if (c_walls2->parsed() || c_wallsn->parsed()) {
            long use_n = c_walls2->parsed() ? 2 : n;
            auto rows = cli::build_wall_rows(a, use_n, K);
            if (format == "csv") {
                write_output(out_path, cli::rows_to_csv(rows, /*with_functional=*/false));
            } else {
                write_output(out_path, rows_to_json(rows, a, use_n, K).dump(2) + "\n");
            }
            return kExitOk;
        }

        if (c_enum->parsed()) {
            auto classes = minus_d_classes(a, d_val, B);
            if (format == "csv") {
                std::string csv = "provenance,x,y,z,q\n";
                for (const auto& v : classes)
                    csv += "enum," + v.x.str() + "," + v.y.str() + "," + v.z.str() + "," +
                           bbf_q(v).str() + "\n";
                write_output(out_path, csv);
            } else {
                json arr = json::array();
                for (const auto& v : classes) arr.push_back(point_json(v));
                json out{{"params", {{"a", a}, {"n", 2}}},
                         {"classes", arr},
                         {"meta", {{"d", d_val}, {"bound", B}}}};
                write_output(out_path, out.dump(2) + "\n");
            }
            return kExitOk;
        }

        if (c_gies->parsed()) {
            LargeNConfig cfg(a, n, 4, b_cr, allow_small_n);
            auto sel = crdiv(cfg, gk, gt);
            HDData hd = hd_construction(cfg, gk, gt);
            json cr = json::array();
            for (const auto& l : sel) cr.push_back(json{{"u", l.u.str()}, {"v", l.v.str()}});
            Rat sw = wall_center({hd.H, hd.D, sel.front(), 0, n});
            json out{{"params", {{"a", a}, {"n", n}}},
                     {"k", gk},
                     {"t", gt},
                     {"crdiv", cr},
                     {"s_W", sw.str()}};
            std::cout << out.dump() << "\n";
            return kExitOk;
        }

        if (c_mori->parsed()) {
            LargeNConfig cfg(a, n, K, 5, allow_small_n);
            MoriGenerators mori = mori_generators(cfg);
            json curves = json::array();
            for (const auto& [curve, prov] : mori.curves) {
                if (const auto* mc = std::get_if<MovingCurve>(&curve))
                    curves.push_back(json{{"provenance", provenance_str(prov)},
                                          {"class", {{"u", mc->cls.u.str()},
                                                     {"v", mc->cls.v.str()}}},
                                          {"genus", mc->genus.get_str()}});
                else
                    curves.push_back(json{{"provenance", "C0"}});
            }
            auto enc = [](const QuadNum& v) {
                if (v.is_rational()) return v.rat_part().str();
                RatInterval iv = v.enclosure(Rat(1, 1000000));
                return "enc[" + iv.lo.str() + ";" + iv.hi.str() + "]";
            };
            json out{{"params", {{"a", a}, {"n", n}}},
                     {"curves", curves},
                     {"limit_classes",
                      {{"c_plus", {{"x", enc(mori.c_plus.x)}, {"y", enc(mori.c_plus.y)},
                                   {"z", enc(mori.c_plus.z)}}},
                       {"c_minus", {{"x", enc(mori.c_minus.x)}, {"y", enc(mori.c_minus.y)},
                                    {"z", enc(mori.c_minus.z)}}}}},
                     {"meta", {{"depth", K}}}};
            std::cout << out.dump(2) << "\n";
            return kExitOk;
        }

        if (c_slice->parsed()) {
            cli::SliceWindow win{Rat(-1), Rat(2), Rat(-2), Rat(1)};
            if (!window_str.empty()) {
                std::vector<Rat> vals;
                size_t pos = 0;
                while (pos <= window_str.size()) {
                    size_t comma = window_str.find(',', pos);
                    vals.push_back(Rat::parse(window_str.substr(
                        pos, comma == std::string::npos ? std::string::npos : comma - pos)));
                    if (comma == std::string::npos) break;
                    pos = comma + 1;
                }
                if (vals.size() != 4 || !(vals[0] < vals[1]) || !(vals[2] < vals[3]))
                    throw CLI::ValidationError("--window", "expected z_lo,z_hi,y_lo,y_hi");
                win = {vals[0], vals[1], vals[2], vals[3]};
            }
            auto rows = cli::build_wall_rows(a, n, K);
            if (format == "csv")
                write_output(out_path, cli::rows_to_csv(rows, /*with_functional=*/true));
            else
                write_output(out_path, cli::render_slice_svg(a, n, K, rows, win));
            return kExitOk;
        }

        if (c_verify->parsed()) {
            std::vector<long> as;
            {
                std::stringstream ls(a_list);
                std::string tok;
                while (std::getline(ls, tok, ',')) as.push_back(std::stol(tok));
                if (as.empty()) throw CLI::ValidationError("--a", "expected a parameter list");
            }
            std::vector<std::function<verify::SuiteResult()>> tasks;
            auto add = [&](const std::string& name) {
                if (suite != "all" && suite != name) return;
                if (name == "exactmath") tasks.push_back([] { return verify::run_exactmath_suite(); });
                if (name == "lattice") tasks.push_back([] { return verify::run_lattice_suite(); });
                if (name == "fib")
                    tasks.push_back([as, fib_range] {
                        verify::FibOptions o;
                        o.as = as;
                        o.range = fib_range;
                        return verify::run_fib_suite(o);
                    });
                if (name == "isometry") tasks.push_back([] { return verify::run_isometry_suite(); });
                if (name == "conegeom") tasks.push_back([] { return verify::run_cone_suite(); });
                if (name == "fundomain")
                    tasks.push_back([samples, seed] {
                        verify::FundomainOptions o;
                        o.samples = samples;
                        o.seed = seed;
                        return verify::run_fundomain_suite(o);
                    });
                if (name == "nef2")
                    tasks.push_back([samples, seed, B, K] {
                        verify::Nef2Options o;
                        o.samples = samples;
                        o.seed = seed;
                        o.B = B;
                        o.K = K;
                        return verify::run_nef2_suite(o);
                    });
                if (name == "large-n")
                    tasks.push_back([as, n, K] {
                        verify::LargeNOptions o;
                        o.a = as.front();
                        // n defaults to the smallest value the theorem allows.
                        o.n = n != 2 ? n : minimal_large_n(o.a);
                        o.K = K;
                        return verify::run_large_n_suite(o);
                    });
            };
            for (const char* name : {"exactmath", "lattice", "fib", "isometry", "conegeom",
                                     "fundomain", "nef2", "large-n"})
                add(name);

            std::vector<verify::SuiteResult> results;
            if (parallel) {
                std::vector<std::future<verify::SuiteResult>> futs;
                futs.reserve(tasks.size());
                for (auto& t : tasks) futs.push_back(std::async(std::launch::async, t));
                for (auto& f : futs) results.push_back(f.get());
            } else {
                for (auto& t : tasks) results.push_back(t());
            }
            bool all_pass = true;
            json suites = json::array();
            for (const auto& r : results) {
                suites.push_back(suite_to_json(r));
                all_pass = all_pass && r.pass();
            }
            json out{{"pass", all_pass}, {"suites", suites}};
            std::cout << out.dump(2) << "\n";
            return all_pass ? kExitOk : kExitVerifyFail;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
