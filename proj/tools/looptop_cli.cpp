/*
   Copyright 2026 looptop contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Batch front end: every computation the library offers, with table or
// machine-readable output. Exit codes: 0 success / identity holds,
// 1 identity violation, 2 input error.

#include "looptop/json_io.hpp"
#include "looptop/looptop.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

namespace lt = looptop;
using lt::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

std::string default_field(const char* fallback) {
    const char* env = std::getenv("LOOPTOP_FIELD");
    if (env && *env) return env;
    return fallback;
}

template <class Fn>
int dispatch_field(const std::string& field, Fn&& fn) {
    if (field == "Z") return fn(std::type_identity<lt::Integer>{});
    if (field == "Q") return fn(std::type_identity<lt::Rational>{});
    if (field == "F2") return fn(std::type_identity<lt::F2>{});
    throw CLI::ValidationError("--field", "expected one of Z, Q, F2");
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

lt::Circle parse_circle_arg(const std::string& arg) {
    std::istringstream is(arg);
    double x, y, r;
    char c1, c2;
    if (!(is >> x >> c1 >> y >> c2 >> r) || c1 != ',' || c2 != ',')
        throw std::runtime_error("expected circle as cx,cy,r: " + arg);
    return lt::Circle{{x, y}, r};
}

Json moebius_to_json(const lt::MoebiusMap& m) {
    auto cx = [](lt::Cx z) { return Json::array({z.real(), z.imag()}); };
    return Json{{"a", cx(m.a())}, {"b", cx(m.b())}, {"c", cx(m.c())}, {"d", cx(m.d())}};
}

// ---------------------------------------------------------------- sphere

struct SphereOptions {
    int k = 2;
    int n = 3;
    int trunc = 64;
    bool experimental = false;
    std::string field = default_field("F2");
    std::string mode = "closed";
    std::string convention = "sweedler";
    std::string epsilon = "off";
    std::string twist = "graded";
    std::string format = "table";
    std::string out;
};

template <class K>
Json coproduct_table_json(const lt::SphereLoopHomology<K>& model, int kmax, bool recursive,
                          lt::SignRule rule) {
    Json table = Json::array();
    for (const auto& s : model.basis(kmax)) {
        lt::GradedVector<K> v =
            recursive ? model.coproduct_recursive(s, rule) : model.coproduct_closed(s);
        Json terms = Json::array();
        for (const auto& [w, c] : v.terms())
            terms.push_back({{"left", w[0].name},
                             {"right", w[1].name},
                             {"coeff", lt::ring_traits<K>::to_string(c)}});
        table.push_back({{"input", s.name}, {"terms", terms}});
    }
    return table;
}

int run_sphere_coproduct(const SphereOptions& opt) {
    return dispatch_field(opt.field, [&](auto tag) {
        using K = typename decltype(tag)::type;
        lt::SphereLoopHomology<K> model(opt.n, std::max(opt.trunc, opt.k), opt.experimental);
        lt::SignRule rule = lt::sign_rule_from_string(opt.convention);
        bool recursive = opt.mode == "recursive";
        std::ostringstream os;
        int exit_code = kExitOk;

        if (opt.mode == "compare") {
            auto bad = model.recursion_mismatches(opt.k, rule, opt.epsilon == "on");
            if (bad.empty()) {
                os << "MATCH recursion == closed form for k <= " << opt.k << " over "
                   << lt::ring_traits<K>::name() << " (convention " << opt.convention << ")\n";
            } else {
                os << "MISMATCH at:";
                for (const auto& s : bad) os << " " << s.name;
                os << "\n";
                exit_code = kExitViolation;
            }
        }
        if (opt.format == "json") {
            Json j;
            j["field"] = lt::ring_traits<K>::name();
            j["mode"] = opt.mode;
            j["table"] = coproduct_table_json(model, opt.k, recursive, rule);
            os << j.dump(2) << "\n";
        } else {
            std::size_t width = 0;
            for (const auto& s : model.basis(opt.k)) width = std::max(width, s.name.size());
            for (const auto& s : model.basis(opt.k)) {
                lt::GradedVector<K> v = recursive ? model.coproduct_recursive(s, rule)
                                                  : model.coproduct_closed(s);
                os << "lambda(" << s.name << ")" << std::string(width - s.name.size(), ' ')
                   << " = " << v.to_string() << "\n";
            }
        }
        write_output(os.str(), opt.out);
        return exit_code;
    });
}

int run_sphere_check(const std::string& which, const SphereOptions& opt) {
    return dispatch_field(opt.field, [&](auto tag) {
        using K = typename decltype(tag)::type;
        lt::SphereLoopHomology<K> model(opt.n, std::max(opt.trunc, opt.k), opt.experimental);
        lt::SignRule rule = lt::sign_rule_from_string(opt.convention);
        lt::IdentityReport report;
        if (which == "sullivan") {
            auto mu = model.mu_operator(opt.k);
            auto lam = model.lambda_closed_operator(opt.k);
            std::vector<std::pair<lt::BasisSymbol, lt::BasisSymbol>> pairs;
            for (const auto& a : model.basis(opt.k))
                for (const auto& b : model.basis(opt.k))
                    if (model.decompose(a).second + model.decompose(b).second <= opt.k)
                        pairs.push_back({a, b});
            report = lt::check_sullivan(mu, lam, pairs, rule);
        } else if (which == "coassoc") {
            report = lt::check_coassociativity(model.lambda_closed_operator(opt.k),
                                               model.dimension(), model.basis(opt.k), rule,
                                               opt.epsilon == "on");
        } else {
            report = lt::check_cocommutativity(model.lambda_closed_operator(opt.k),
                                               model.basis(opt.k), opt.twist == "graded");
        }
        std::ostringstream os;
        if (opt.format == "json")
            os << lt::report_to_json(report).dump(2) << "\n";
        else
            os << report.to_text();
        write_output(os.str(), opt.out);
        return report.holds() ? kExitOk : kExitViolation;
    });
}

// ----------------------------------------------------------------- chain

std::string homology_text(const lt::HomologySummary& h, const std::string& field) {
    std::ostringstream os;
    for (const auto& [k, g] : h) {
        if (field == "Z")
            os << "H_" << k << " = " << g.to_string() << "\n";
        else
            os << "dim H_" << k << " = " << g.free_rank << "\n";
    }
    return os.str();
}

int run_chain_homology(const std::string& file, const std::string& field,
                       const std::string& format, const std::string& out) {
    return dispatch_field(field, [&](auto tag) {
        using K = typename decltype(tag)::type;
        auto parsed = lt::complex_from_json<K>(load_json(file));
        lt::HomologySummary h = lt::homology(parsed.complex);
        std::ostringstream os;
        if (format == "json")
            os << lt::homology_to_json(h).dump(2) << "\n";
        else
            os << "coefficients: " << lt::ring_traits<K>::name() << "\n"
               << homology_text(h, lt::ring_traits<K>::name());
        write_output(os.str(), out);
        return kExitOk;
    });
}

int run_chain_echo(const std::string& file, const std::string& out) {
    auto parsed = lt::complex_from_json<lt::Integer>(load_json(file));
    Json j = lt::complex_to_json(parsed.complex,
                                 parsed.has_filtration ? &parsed.filtration : nullptr);
    write_output(j.dump(2) + "\n", out);
    return kExitOk;
}

int run_chain_reduced(const std::string& file, long long chi, const std::string& point,
                      int point_degree, const std::string& field, const std::string& format,
                      const std::string& out) {
    return dispatch_field(field, [&](auto tag) {
        using K = typename decltype(tag)::type;
        auto parsed = lt::complex_from_json<K>(load_json(file));
        lt::DistinguishedPoint dp{point, point_degree, lt::Integer(chi)};
        lt::ChainComplex<K> red = lt::reduced_complex(parsed.complex, dp);
        lt::ReducedComparison cmp = lt::compare_reduced(parsed.complex, dp);
        std::ostringstream os;
        if (format == "json") {
            Json j;
            j["reduced_homology"] = lt::homology_to_json(lt::homology(red));
            j["quotient_description"] = lt::homology_to_json(cmp.quotient);
            j["hypothesis_holds"] = cmp.hypothesis_holds;
            j["equal"] = cmp.equal;
            j["note"] = cmp.note;
            os << j.dump(2) << "\n";
        } else {
            os << "reduced homology:\n"
               << homology_text(lt::homology(red), lt::ring_traits<K>::name()) << cmp.to_text();
        }
        write_output(os.str(), out);
        return kExitOk;
    });
}

int run_chain_verify_homotopy(const std::string& file, const std::string& field,
                              const std::string& format, const std::string& out) {
    return dispatch_field(field, [&](auto tag) {
        using K = typename decltype(tag)::type;
        Json j = load_json(file);
        auto src = lt::complex_from_json<K>(j.at("source"));
        auto tgt = j.contains("target") ? lt::complex_from_json<K>(j.at("target")) : src;
        auto f = lt::chain_map_from_json<K>(j.at("f"));
        auto g = lt::chain_map_from_json<K>(j.at("g"));
        auto h = lt::chain_map_from_json<K>(j.at("h"));
        lt::IdentityReport report =
            lt::verify_homotopy(f, g, h, src.complex, tgt.complex);
        std::ostringstream os;
        if (format == "json")
            os << lt::report_to_json(report).dump(2) << "\n";
        else
            os << report.to_text();
        write_output(os.str(), out);
        return report.holds() ? kExitOk : kExitViolation;
    });
}

// -------------------------------------------------------------- filtered

int run_filtered_invert(const std::string& file, const std::string& field,
                        const std::string& format, const std::string& out) {
    return dispatch_field(field, [&](auto tag) {
        using K = typename decltype(tag)::type;
        Json j = load_json(file);
        auto src = lt::complex_from_json<K>(j.at("source"));
        auto tgt = j.contains("target") ? lt::complex_from_json<K>(j.at("target")) : src;
        if (!src.has_filtration || !tgt.has_filtration)
            throw std::runtime_error("filtered invert: generators need filtration values");
        bool strict = j.value("strict", true);
        lt::FilteredChainComplex<K> fsrc(src.complex, src.filtration, strict);
        lt::FilteredChainComplex<K> ftgt(tgt.complex, tgt.filtration, strict);
        auto f = lt::chain_map_from_json<K>(j.at("map"));
        lt::ChainMap<K> inv = lt::invert_upper_triangular(f, fsrc, ftgt);
        std::ostringstream os;
        if (format == "json") {
            Json blocks = Json::array();
            for (const auto& [k, m] : inv.blocks) {
                Json rows = Json::array();
                for (std::size_t i = 0; i < m.rows(); ++i) {
                    Json row = Json::array();
                    for (std::size_t c = 0; c < m.cols(); ++c) {
                        std::string s = lt::ring_traits<K>::to_string(m.at(i, c));
                        if (s.find('/') != std::string::npos)
                            row.push_back(s);
                        else
                            row.push_back(lt::detail::integer_to_json(lt::Integer(s)));
                    }
                    rows.push_back(row);
                }
                blocks.push_back({{"degree", k}, {"matrix", rows}});
            }
            os << Json{{"degree", 0}, {"blocks", blocks}}.dump(2) << "\n";
        } else {
            os << "inverse verified in both orders\n";
            for (const auto& [k, m] : inv.blocks) {
                os << "degree " << k << ":\n";
                for (std::size_t i = 0; i < m.rows(); ++i) {
                    os << "  ";
                    for (std::size_t c = 0; c < m.cols(); ++c)
                        os << lt::ring_traits<K>::to_string(m.at(i, c)) << " ";
                    os << "\n";
                }
            }
        }
        write_output(os.str(), out);
        return kExitOk;
    });
}

int run_filtered_window(const std::string& file, double a, double b, const std::string& field,
                        const std::string& format, const std::string& out) {
    return dispatch_field(field, [&](auto tag) {
        using K = typename decltype(tag)::type;
        auto parsed = lt::complex_from_json<K>(load_json(file));
        if (!parsed.has_filtration)
            throw std::runtime_error("filtered window: generators need filtration values");
        bool strict = true;
        lt::FilteredChainComplex<K> fc(parsed.complex, parsed.filtration, strict);
        lt::HomologySummary h = lt::filtration_window_homology(fc, a, b);
        std::ostringstream os;
        if (format == "json")
            os << lt::homology_to_json(h).dump(2) << "\n";
        else
            os << "window (" << a << ", " << b << "]\n" << homology_text(h, lt::ring_traits<K>::name());
        write_output(os.str(), out);
        return kExitOk;
    });
}

// -------------------------------------------------------------- localsys

int run_localsys_build(const std::string& file, const std::string& which,
                       const std::string& format, const std::string& out) {
    Json j = load_json(file);
    lt::ManifoldDescriptor d = lt::descriptor_from_json(j.at("descriptor"));
    lt::ComponentModel cm = j.contains("components")
                                ? lt::component_model_from_json(j.at("components"))
                                : lt::ComponentModel::z2();
    std::vector<std::pair<std::string, lt::LocalSystemSpec>> systems;
    auto want = [&](const std::string& name) { return which == "all" || which == name; };
    if (want("sigma")) systems.push_back({"sigma", lt::make_sigma(d, cm)});
    if (want("mu")) systems.push_back({"mu", lt::make_mu(d, cm)});
    if (want("o")) systems.push_back({"o", lt::make_o(d, cm)});
    if (want("otilde")) systems.push_back({"otilde", lt::make_otilde(d, cm)});
    if (want("eta")) systems.push_back({"eta", lt::make_eta(d, cm)});
    if (systems.empty()) throw std::runtime_error("unknown system: " + which);

    std::ostringstream os;
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& [name, s] : systems) {
            auto verdict = lt::is_compatible(s);
            Json entry = lt::local_system_to_json(s);
            entry["name"] = name;
            entry["classification"] = s.classify();
            entry["compatible_with_products"] = verdict.compatible;
            if (!verdict.compatible) entry["reason"] = verdict.reason;
            arr.push_back(entry);
        }
        os << arr.dump(2) << "\n";
    } else {
        for (const auto& [name, s] : systems) {
            auto verdict = lt::is_compatible(s);
            os << name << ": " << s.classify() << "\n   compatible with products: "
               << (verdict.compatible ? "yes" : ("no (" + verdict.reason + ")")) << "\n";
        }
    }
    write_output(os.str(), out);
    return kExitOk;
}

int run_localsys_tensor(const std::string& file, const std::string& format,
                        const std::string& out) {
    Json j = load_json(file);
    lt::LocalSystemSpec lhs = lt::local_system_from_json(j.at("lhs"));
    lt::LocalSystemSpec rhs = lt::local_system_from_json(j.at("rhs"));
    lt::LocalSystemSpec t = lt::tensor(lhs, rhs);
    std::ostringstream os;
    if (format == "json") {
        Json entry = lt::local_system_to_json(t);
        entry["classification"] = t.classify();
        os << entry.dump(2) << "\n";
    } else {
        os << t.classify() << "\n";
    }
    write_output(os.str(), out);
    return kExitOk;
}

int run_localsys_compat(const std::string& file, const std::string& format,
                        const std::string& out) {
    lt::LocalSystemSpec s = lt::local_system_from_json(load_json(file));
    auto verdict = lt::is_compatible(s);
    std::ostringstream os;
    if (format == "json") {
        Json j{{"classification", s.classify()},
               {"compatible_with_products", verdict.compatible}};
        if (!verdict.compatible) j["reason"] = verdict.reason;
        os << j.dump(2) << "\n";
    } else {
        os << (verdict.compatible ? "compatible with products"
                                  : "not compatible: " + verdict.reason)
           << "\n";
    }
    write_output(os.str(), out);
    return kExitOk;
}

// --------------------------------------------------------------- annulus

struct AnnulusOptions {
    std::string outer, inner;
    std::string format = "table";
    std::string out;
    std::string svg;
    int radial = 12;
    int circles = 7;
    int samples = 96;
};

int run_annulus(const std::string& which, const AnnulusOptions& opt) {
    lt::Annulus an{parse_circle_arg(opt.outer), parse_circle_arg(opt.inner)};
    if (which == "foliate") {
        lt::Foliations f = lt::canonical_foliations(an, opt.radial, opt.circles, opt.samples);
        std::string svg = lt::foliation_svg(f);
        write_output(svg, opt.svg.empty() ? opt.out : opt.svg);
        return kExitOk;
    }
    lt::Normalization n = lt::normalize(an);
    double r = lt::modulus(an);
    std::ostringstream os;
    if (opt.format == "json") {
        Json j{{"R", r}, {"map", moebius_to_json(n.map)}};
        if (which == "normalize") {
            lt::Circle img_in = lt::apply_moebius(n.map, an.inner);
            lt::Circle img_out = lt::apply_moebius(n.map, an.outer);
            j["image_inner"] = {{"center", Json::array({img_in.center.real(), img_in.center.imag()})},
                                {"radius", img_in.radius}};
            j["image_outer"] = {{"center", Json::array({img_out.center.real(), img_out.center.imag()})},
                                {"radius", img_out.radius}};
        }
        os << j.dump(2) << "\n";
    } else {
        os.precision(12);
        os << "R = " << r << "\n";
        if (which == "normalize") {
            os << "map: a=(" << n.map.a().real() << "," << n.map.a().imag() << ") b=("
               << n.map.b().real() << "," << n.map.b().imag() << ") c=(" << n.map.c().real()
               << "," << n.map.c().imag() << ") d=(" << n.map.d().real() << ","
               << n.map.d().imag() << ")\n";
        }
    }
    write_output(os.str(), opt.out);
    return kExitOk;
}

// --------------------------------------------------------------- profile

int run_profile_verify(double mu, double eps, double delta, double rmax, std::size_t samples,
                       int degree, const std::string& csv, const std::string& format,
                       const std::string& out) {
    lt::ProfileParams params{mu, eps, delta, degree};
    lt::Profile pr = lt::build_profile(params);
    if (rmax <= 0) rmax = 1.0 + delta + 1.0;
    lt::ProfileBoundsReport rep = lt::verify_bounds(pr, rmax, samples);

    if (!csv.empty()) {
        std::ofstream f(csv);
        if (!f) throw std::runtime_error("cannot write " + csv);
        f << "r,h,h_prime,action,gap\n";
        f.precision(15);
        for (std::size_t i = 0; i < samples; ++i) {
            double r = rmax * static_cast<double>(i) / static_cast<double>(samples - 1);
            auto [action, alpha] = lt::orbit_actions(pr, r);
            f << r << "," << pr.h(r) << "," << alpha << "," << action << ","
              << (action - alpha) << "\n";
        }
    }

    std::ostringstream os;
    if (format == "json") {
        Json j{{"ok", rep.ok},       {"samples", rep.samples},
               {"max_gap", rep.max_gap}, {"min_gap", rep.min_gap},
               {"bound", rep.bound},     {"ramp_height", static_cast<double>(pr.ramp_height())}};
        os << j.dump(2) << "\n";
    } else {
        os.precision(12);
        os << (rep.ok ? "PASS" : "FAIL") << " max_gap = " << rep.max_gap
           << " <= bound mu*delta = " << rep.bound << " (samples " << rep.samples << ")\n";
        for (const auto& v : rep.violations) os << "  " << v << "\n";
    }
    write_output(os.str(), out);
    return rep.ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact string-topology computations: sphere loop coproducts, chain-level "
                 "verifiers, local systems, conformal annuli, Hamiltonian profiles"};
    app.require_subcommand(1);

    std::string format = "table", out_path;

    // sphere
    auto* sphere = app.add_subcommand("sphere", "loop homology model of odd spheres");
    sphere->require_subcommand(1);
    SphereOptions sopt;
    auto add_sphere_common = [&](CLI::App* cmd) {
        cmd->add_option("--k", sopt.k, "maximal U-exponent of the window");
        cmd->add_option("--n", sopt.n, "sphere dimension (odd; != 3 is experimental)");
        cmd->add_option("--trunc", sopt.trunc, "model truncation");
        cmd->add_flag("--experimental", sopt.experimental, "allow n != 3");
        cmd->add_option("--field", sopt.field, "coefficients: F2 | Q | Z");
        cmd->add_option("--convention", sopt.convention,
                        "sign rule: sweedler | left | right");
        cmd->add_option("--epsilon", sopt.epsilon, "bidegree sign correction: on | off");
        cmd->add_option("--format", sopt.format, "table | json");
        cmd->add_option("--out", sopt.out, "write output to file");
    };
    auto* sphere_cop = sphere->add_subcommand("coproduct", "coproduct tables");
    add_sphere_common(sphere_cop);
    sphere_cop->add_option("--mode", sopt.mode, "closed | recursive | compare");
    auto* sphere_check = sphere->add_subcommand("check", "verify an identity");
    std::string which_check = "sullivan";
    sphere_check->add_option("identity", which_check, "sullivan | coassoc | cocomm")
        ->required();
    add_sphere_common(sphere_check);
    sphere_check->add_option("--twist", sopt.twist, "cocommutativity flip: graded | plain");

    // chain
    auto* chain = app.add_subcommand("chain", "finite chain complexes");
    chain->require_subcommand(1);
    std::string chain_file, chain_field = default_field("Z");
    auto* chain_hom = chain->add_subcommand("homology", "Smith/field homology of a complex");
    chain_hom->add_option("file", chain_file, "complex JSON")->required();
    chain_hom->add_option("--field", chain_field, "Z | Q | F2");
    chain_hom->add_option("--format", format, "table | json");
    chain_hom->add_option("--out", out_path, "write output to file");
    auto* chain_echo = chain->add_subcommand("echo", "validate and echo canonical form");
    chain_echo->add_option("file", chain_file, "complex JSON")->required();
    chain_echo->add_option("--out", out_path, "write output to file");
    long long chi = 0;
    std::string point = "q0";
    int point_degree = 0;
    auto* chain_red = chain->add_subcommand("reduced", "reduced complex and comparison");
    chain_red->add_option("file", chain_file, "complex JSON")->required();
    chain_red->add_option("--chi", chi, "Euler characteristic")->required();
    chain_red->add_option("--point", point, "distinguished generator name")->required();
    chain_red->add_option("--point-degree", point_degree, "its degree (default 0)");
    chain_red->add_option("--field", chain_field, "Z | Q | F2");
    chain_red->add_option("--format", format, "table | json");
    chain_red->add_option("--out", out_path, "write output to file");
    auto* chain_vh = chain->add_subcommand("verify-homotopy", "check dH + Hd = F - G");
    chain_vh->add_option("file", chain_file, "JSON with source/target/f/g/h")->required();
    chain_vh->add_option("--field", chain_field, "Z | Q | F2");
    chain_vh->add_option("--format", format, "table | json");
    chain_vh->add_option("--out", out_path, "write output to file");

    // filtered
    auto* filtered = app.add_subcommand("filtered", "filtered complexes");
    filtered->require_subcommand(1);
    std::string filt_file, filt_field = default_field("Z");
    double win_a = 0, win_b = 1;
    auto* filt_inv = filtered->add_subcommand("invert", "invert an upper-triangular map");
    filt_inv->add_option("file", filt_file, "JSON with source/target/map")->required();
    filt_inv->add_option("--field", filt_field, "Z | Q | F2");
    filt_inv->add_option("--format", format, "table | json");
    filt_inv->add_option("--out", out_path, "write output to file");
    auto* filt_win = filtered->add_subcommand("window", "homology of a filtration window");
    filt_win->add_option("file", filt_file, "filtered complex JSON")->required();
    filt_win->add_option("--a", win_a, "window lower endpoint")->required();
    filt_win->add_option("--b", win_b, "window upper endpoint")->required();
    filt_win->add_option("--field", filt_field, "Z | Q | F2");
    filt_win->add_option("--format", format, "table | json");
    filt_win->add_option("--out", out_path, "write output to file");

    // localsys
    auto* localsys = app.add_subcommand("localsys", "Z/2 local systems on loop spaces");
    localsys->require_subcommand(1);
    std::string ls_file, ls_system = "all";
    auto* ls_build = localsys->add_subcommand("build", "construct the named systems");
    ls_build->add_option("file", ls_file, "JSON with descriptor (+components)")->required();
    ls_build->add_option("--system", ls_system, "sigma | mu | o | otilde | eta | all");
    ls_build->add_option("--format", format, "table | json");
    ls_build->add_option("--out", out_path, "write output to file");
    auto* ls_tensor = localsys->add_subcommand("tensor", "tensor two systems");
    ls_tensor->add_option("file", ls_file, "JSON with lhs/rhs specs")->required();
    ls_tensor->add_option("--format", format, "table | json");
    ls_tensor->add_option("--out", out_path, "write output to file");
    auto* ls_compat = localsys->add_subcommand("compat", "compatibility with products");
    ls_compat->add_option("file", ls_file, "local system JSON")->required();
    ls_compat->add_option("--format", format, "table | json");
    ls_compat->add_option("--out", out_path, "write output to file");

    // annulus
    auto* annulus = app.add_subcommand("annulus", "conformal annuli in the plane");
    annulus->require_subcommand(1);
    AnnulusOptions aopt;
    for (const char* name : {"modulus", "normalize", "foliate"}) {
        auto* cmd = annulus->add_subcommand(name);
        cmd->add_option("--outer", aopt.outer, "outer circle cx,cy,r")->required();
        cmd->add_option("--inner", aopt.inner, "inner circle cx,cy,r")->required();
        cmd->add_option("--format", aopt.format, "table | json");
        cmd->add_option("--out", aopt.out, "write output to file");
        if (std::string(name) == "foliate") {
            cmd->add_option("--svg", aopt.svg, "SVG output path (default stdout)");
            cmd->add_option("--radial", aopt.radial, "leaves connecting the boundaries");
            cmd->add_option("--circles", aopt.circles, "closed leaves incl. both boundaries");
            cmd->add_option("--samples", aopt.samples, "points per leaf");
        }
    }

    // profile
    auto* profile = app.add_subcommand("profile", "Hamiltonian profile h(r)");
    double p_mu = 2.0, p_eps = 0.1, p_delta = 0.05, p_rmax = 0;
    std::size_t p_samples = 10000;
    int p_degree = 5;
    std::string p_csv;
    auto* prof_verify = profile->add_subcommand(
        "verify", "check 0 <= r h' - h - h' <= mu*delta and convexity of the ramp");
    prof_verify->add_option("--mu", p_mu, "slope")->required();
    prof_verify->add_option("--eps", p_eps, "action error bound")->required();
    prof_verify->add_option("--delta", p_delta, "ramp width (<= eps/mu)")->required();
    prof_verify->add_option("--rmax", p_rmax, "sampling range (default 2 + delta)");
    prof_verify->add_option("--samples", p_samples, "grid size");
    prof_verify->add_option("--degree", p_degree, "smoothstep degree: 5 | 7");
    prof_verify->add_option("--csv", p_csv, "CSV dump of (r, h, h', action, gap)");
    prof_verify->add_option("--format", format, "table | json");
    prof_verify->add_option("--out", out_path, "write output to file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sphere_cop->parsed()) return run_sphere_coproduct(sopt);
        if (sphere_check->parsed()) return run_sphere_check(which_check, sopt);
        if (chain_hom->parsed())
            return run_chain_homology(chain_file, chain_field, format, out_path);
        if (chain_echo->parsed()) return run_chain_echo(chain_file, out_path);
        if (chain_red->parsed())
            return run_chain_reduced(chain_file, chi, point, point_degree, chain_field, format,
                                     out_path);
        if (chain_vh->parsed())
            return run_chain_verify_homotopy(chain_file, chain_field, format, out_path);
        if (filt_inv->parsed())
            return run_filtered_invert(filt_file, filt_field, format, out_path);
        if (filt_win->parsed())
            return run_filtered_window(filt_file, win_a, win_b, filt_field, format, out_path);
        if (ls_build->parsed())
            return run_localsys_build(ls_file, ls_system, format, out_path);
        if (ls_tensor->parsed()) return run_localsys_tensor(ls_file, format, out_path);
        if (ls_compat->parsed()) return run_localsys_compat(ls_file, format, out_path);
        for (const char* name : {"modulus", "normalize", "foliate"})
            if (annulus->got_subcommand(name)) return run_annulus(name, aopt);
        if (prof_verify->parsed())
            return run_profile_verify(p_mu, p_eps, p_delta, p_rmax, p_samples, p_degree, p_csv,
                                      format, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    std::cerr << "error: no subcommand\n";
    return kExitInputError;
}
